"""Models of imaginary quadratic extensions of F_q(x).

Odd characteristic:  K = F_q(x)(y),  y^2 = c*f(x)  with f monic squarefree
of odd degree 2g+1 and c either 1 or a fixed non-square.  The infinite
place ramifies precisely because deg(c*f) is odd.

Characteristic two:  K = F_q(x)(y),  y^2 + y = u(x)  with u = num/den in
reduced form: den monic, gcd(num, den) = 1, every finite pole of u has odd
order, and deg u = deg num - deg den is odd and positive (so the infinite
place ramifies).  ``normalize_u`` brings an arbitrary u into this form by
subtracting Artin-Schreier terms w^2 + w; equations y^2 + B(x)y = C(x) are
admitted through ``from_char2_equation`` via u = C / B^2.

Models that collapse (u equivalent to a constant of absolute trace zero,
or a right-hand side with a rational square root) raise ModelError with
code 'artin-schreier-degenerate'; models defining a field in which the
infinite place does not ramify raise code 'out-of-scope-form'.
"""
from __future__ import annotations

from dataclasses import dataclass

from .fqpoly import Poly, factor, parse_poly
from .gf import FiniteField, field_of_order

DEGENERATE = "artin-schreier-degenerate"
OUT_OF_SCOPE = "out-of-scope-form"

INF = "inf"  # marker for the infinite place in ramification data


class ModelError(ValueError):
    """Raised when an equation does not define an in-scope field."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def least_nonsquare(F: FiniteField) -> int:
    """Non-square of least code (odd order only)."""
    if F.p == 2:
        raise ValueError("every element is a square in characteristic 2")
    for a in range(1, F.q):
        if not bool(F.is_square[a]):
            return a
    raise AssertionError("no non-square found")


@dataclass(frozen=True)
class OddModel:
    """y^2 = c * f(x) over F_q, q odd; f monic squarefree, deg f = 2g+1."""

    F: FiniteField
    c: int
    f: Poly

    @property
    def genus(self) -> int:
        return (self.f.degree - 1) // 2

    def rhs(self) -> Poly:
        return self.f.scale(self.c)

    def ramified_finite(self) -> list[tuple[Poly, int]]:
        """[(prime, gamma)] for the finite ramified places (gamma = 1)."""
        return [(p_, 1) for p_, _ in factor(self.f)]

    @property
    def t(self) -> int:
        """Total number of ramified places, including infinity."""
        return len(factor(self.f)) + 1

    def describe(self) -> str:
        c = "" if self.c == 1 else (f"{self.F.elt_str(self.c)}*"
                                    if self.F.n > 1 else f"{self.c}*")
        return f"y^2 = {c}({self.f})" if c else f"y^2 = {self.f}"


@dataclass(frozen=True)
class EvenModel:
    """y^2 + y = num/den over F_q, q even, in reduced (odd-pole) form."""

    F: FiniteField
    num: Poly
    den: Poly

    @property
    def genus(self) -> int:
        wt = sum((m + 1) * p_.degree for p_, m in factor(self.den))
        du = self.num.degree - self.den.degree
        return (wt + du + 1) // 2 - 1

    def ramified_finite(self) -> list[tuple[Poly, int]]:
        """[(prime, gamma)]: finite poles with their (odd) orders."""
        return factor(self.den)

    @property
    def t(self) -> int:
        return len(factor(self.den)) + 1

    def describe(self) -> str:
        if self.den.degree == 0:
            return f"y^2 + y = {self.num}"
        return f"y^2 + y = ({self.num})/({self.den})"


Model = OddModel | EvenModel


# ---------------------------------------------------------------------------
# constructors with validation
# ---------------------------------------------------------------------------


def from_odd_equation(F: FiniteField, rhs: Poly) -> OddModel:
    """Build an OddModel from y^2 = rhs, stripping square factors."""
    if F.p == 2:
        raise ValueError("use from_char2_equation in characteristic 2")
    if rhs.is_zero():
        raise ModelError(DEGENERATE, "zero right-hand side")
    c = rhs.lc()
    sf = Poly.one(F)
    for p_, m in factor(rhs):
        if m % 2 == 1:
            sf = sf * p_
    if sf.degree == 0:
        if bool(F.is_square[c]):
            raise ModelError(DEGENERATE,
                             "right-hand side is a square: extension splits")
        raise ModelError(OUT_OF_SCOPE,
                         "constant-field extension: infinity does not ramify")
    if sf.degree % 2 == 0:
        raise ModelError(OUT_OF_SCOPE,
                         "even squarefree degree: infinity does not ramify")
    eps = 0 if bool(F.is_square[c]) else 1
    cc = 1 if eps == 0 else least_nonsquare(F)
    return OddModel(F, cc, sf)


def normalize_u(F: FiniteField, num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Reduce u = num/den by Artin-Schreier substitutions until every
    finite pole has odd order and deg u is odd; validates scope."""
    if F.p != 2:
        raise ValueError("normalize_u applies only in characteristic 2")
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    num, den = _reduce_fraction(num, den)
    while True:
        fac = factor(den)
        even = [(p_, m) for p_, m in fac if m % 2 == 0]
        if not even:
            break
        p_, m = even[0]
        k = m // 2
        rest = den
        for _ in range(m):
            rest = rest // p_
        # local unit:  num/rest = A^2 mod p_;  subtract (A/p_^k)^2 + A/p_^k
        lu = ((num % p_) * _inv_mod(rest % p_, p_)) % p_
        A = _sqrt_mod(lu, p_)
        pk = p_**k
        # w = A / p_^k:  w^2 + w = (A^2 + A p_^k) / p_^{2k}
        w_num = A * A + A * pk
        num, den = _reduce_fraction(num + w_num * (den // (pk * pk)), den)
    # now handle the polynomial part at infinity
    while True:
        s, r = divmod(num, den)
        d = s.degree
        if d <= 0 or d % 2 == 1:
            break
        lc = F.sqrt(s.lc())
        w = Poly(F, [0] * (d // 2) + [lc])
        num = num + (w * w + w) * den
        num, den = _reduce_fraction(num, den)
    s, r = divmod(num, den)
    if den.degree == 0 and s.degree <= 0:
        c = s[0]
        if bool(F.as_image[c]):
            raise ModelError(DEGENERATE,
                             "u is w^2+w + const in the image: extension splits")
        raise ModelError(OUT_OF_SCOPE,
                         "constant-field extension: infinity does not ramify")
    if num.degree <= den.degree:
        raise ModelError(OUT_OF_SCOPE,
                         "deg u <= 0 after reduction: infinity does not ramify")
    return num, den


def from_char2_equation(F: FiniteField, B: Poly, C: Poly) -> EvenModel:
    """y^2 + B(x) y = C(x)  ->  y^2 + y = C/B^2  (y scaled by B)."""
    if B.is_zero():
        raise ModelError(DEGENERATE, "B = 0 gives an inseparable equation")
    num, den = normalize_u(F, C, B * B)
    return EvenModel(F, num, den)


def make_even_model(F: FiniteField, num: Poly, den: Poly) -> EvenModel:
    num, den = normalize_u(F, num, den)
    return EvenModel(F, num, den)


# ---------------------------------------------------------------------------
# internals
# ---------------------------------------------------------------------------


def _reduce_fraction(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    g = num.gcd(den)
    if g.degree > 0:
        num, den = num // g, den // g
    if not den.is_monic():
        c = den.F.inv(den.lc())
        num, den = num.scale(c), den.scale(c)
    return num, den


def _inv_mod(a: Poly, m: Poly) -> Poly:
    """Inverse of a mod m (m irreducible, a not divisible by m)."""
    F = a.F
    r0, r1 = a, m
    s0, s1 = Poly.one(F), Poly.zero(F)
    while not r1.is_zero():
        qq, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - qq * s1
    if r0.degree != 0:
        raise ZeroDivisionError("element not invertible mod m")
    return (s0.scale(F.inv(r0.lc()))) % m


def _sqrt_mod(b: Poly, m: Poly) -> Poly:
    """Unique square root in F_q[x]/(m), char 2, m irreducible."""
    F = b.F
    k = F.n * m.degree - 1
    out = b % m
    for _ in range(k):
        out = (out * out) % m
    return out


# ---------------------------------------------------------------------------
# plain-data serialization (cache files, JSONL output)
# ---------------------------------------------------------------------------


def parse_curve(F: FiniteField, text: str) -> Model:
    """Parse curve text into a model.

    Accepted forms (whitespace ignored)::

        y^2 = <poly>                       odd characteristic
        y^2 + (<poly>)*y = <poly>          characteristic two
        y^2 + y = <poly>                   characteristic two, B = 1
        u = (<poly>)/(<poly>)              characteristic two, u directly
        u = <poly>                         characteristic two, denominator 1

    Syntax problems raise ValueError; structurally invalid curves raise
    ModelError as the underlying constructor would.
    """
    s = "".join(text.split())
    if s.startswith("u="):
        if F.p != 2:
            raise ModelError(OUT_OF_SCOPE,
                             "u-form input is for characteristic two")
        body = s[2:]
        num_s, den_s = _split_fraction(body)
        num = parse_poly(F, num_s)
        den = parse_poly(F, den_s) if den_s is not None else Poly.one(F)
        return make_even_model(F, num, den)
    if not s.startswith("y^2"):
        raise ValueError(f"unrecognized curve text {text!r}")
    rest = s[3:]
    if rest.startswith("="):
        if F.p == 2:
            raise ModelError(OUT_OF_SCOPE,
                             "y^2 = f is inseparable in characteristic two; "
                             "use y^2 + (B)*y = C or u = ...")
        return from_odd_equation(F, parse_poly(F, rest[1:]))
    if not rest.startswith("+"):
        raise ValueError(f"unrecognized curve text {text!r}")
    if F.p != 2:
        raise ModelError(OUT_OF_SCOPE,
                         "y^2 + By = C input is for characteristic two")
    lhs, _, rhs = rest[1:].partition("=")
    if not rhs:
        raise ValueError(f"missing right-hand side in {text!r}")
    if lhs == "y":
        # y^2 + y = u; u may be a fraction (this is describe()'s format)
        num_s, den_s = _split_fraction(rhs)
        num = parse_poly(F, num_s)
        den = parse_poly(F, den_s) if den_s is not None else Poly.one(F)
        return make_even_model(F, num, den)
    if lhs.endswith("*y"):
        B = parse_poly(F, lhs[:-2])
    elif lhs.endswith("y"):
        B = parse_poly(F, lhs[:-1])
    else:
        raise ValueError(f"cannot find the linear y term in {text!r}")
    return from_char2_equation(F, B, parse_poly(F, rhs))


def _split_fraction(body: str) -> tuple[str, str | None]:
    """Split 'num/den' at the top parenthesis level; den may be absent."""
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return body[:i], body[i + 1:]
    return body, None


def model_to_dict(m: Model) -> dict:
    if isinstance(m, OddModel):
        return {"kind": "odd", "q": m.F.q, "c": m.c, "f": list(m.f.coeffs)}
    return {"kind": "even", "q": m.F.q,
            "num": list(m.num.coeffs), "den": list(m.den.coeffs)}


def model_from_dict(d: dict) -> Model:
    F = field_of_order(d["q"])
    if d["kind"] == "odd":
        return OddModel(F, d["c"], Poly(F, d["f"]))
    return EvenModel(F, Poly(F, d["num"]), Poly(F, d["den"]))
