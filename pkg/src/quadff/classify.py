"""Exponent-two criterion and isomorphism classing of the models.

Criterion.  For an imaginary quadratic extension with t ramified places
(including infinity), the 2-rank of the divisor class group is t-2 for odd
q and t-1 for even q; the group has exponent dividing two exactly when
h equals 2^{t-2} (q odd) or 2^{t-1} (q even).

Isomorphism.  Two models present isomorphic fields when one can be carried
to the other by a fractional-linear substitution in x together with (odd q)
multiplying the right-hand side by a square, or (even q) adding w^2 + w.
Because every model here has a ramified infinite place, it suffices to
combine affine substitutions x -> a x + b with "flips" that exchange
infinity with a ramified place of degree one.  ``canonical_key`` returns
the minimum normalized representation over that orbit; ``group='affine'``
restricts to affine substitutions only (no flips), which is strictly
coarser and known to split some orbits -- kept for comparison runs.

For order-one poles (the standard enumeration) the orbit search is exact:
an Artin-Schreier shift w^2+w between two reduced models with simple poles
forces w to be a polynomial, and polynomial shifts are canonicalized away
by ``even_normal_form``.  For higher pole orders use ``is_same_field``,
which decides equivalence directly by reducing differences.
"""
from __future__ import annotations

from dataclasses import dataclass

from .curve import (DEGENERATE, EvenModel, Model, ModelError, OddModel,
                    least_nonsquare, normalize_u)
from .fqpoly import Poly
from .gf import FiniteField


# ---------------------------------------------------------------------------
# the criterion
# ---------------------------------------------------------------------------


def two_rank(q: int, t: int) -> int:
    """2-rank of the divisor class group given t ramified places."""
    return t - 2 if q % 2 == 1 else t - 1


def exponent_two_class_number(q: int, t: int) -> int:
    """The unique h compatible with exponent <= 2: 2^{2-rank}."""
    return 2 ** two_rank(q, t)


def is_exponent_two(q: int, t: int, h: int) -> bool:
    """Exponent-two test from (t, h) alone."""
    return h == exponent_two_class_number(q, t)


@dataclass(frozen=True)
class ClassificationRecord:
    """Verdict of the exponent-two test for one model, with its invariants."""

    q: int
    g: int
    t: int
    h: int
    expected_h: int
    exponent_two: bool
    place_counts: tuple[int, ...]       # N_1..N_g
    ramified_degrees: tuple[int, ...]   # degrees of the ramified finite places
    equation: str                       # canonical representative

    def as_dict(self) -> dict:
        return {
            "q": self.q, "g": self.g, "t": self.t, "h": self.h,
            "expected_h": self.expected_h, "exponent_two": self.exponent_two,
            "place_counts": list(self.place_counts),
            "ramified_degrees": list(self.ramified_degrees),
            "equation": self.equation,
        }

    def text_lines(self) -> list[str]:
        yes = "yes" if self.exponent_two else "no"
        return [
            f"field          F_{self.q}(x), quadratic extension",
            f"equation       {self.equation}",
            f"genus          {self.g}",
            f"ramified       t = {self.t} places "
            f"(finite degrees {list(self.ramified_degrees)} + infinity)",
            f"class number   h = {self.h}",
            f"exponent two   {yes} (requires h = {self.expected_h})",
            f"place counts   N_1..N_g = {list(self.place_counts)}",
        ]


def classification_record(model: Model,
                          group: str = "extended") -> ClassificationRecord:
    """Run the exponent-two test on a model and collect the evidence."""
    from .zeta import l_polynomial, place_counts, point_counts

    q, g, t = model.F.q, model.genus, model.t
    h = sum(l_polynomial(model))
    ns = tuple(place_counts(q, point_counts(model)))
    expected = exponent_two_class_number(q, t)
    ok = h == expected
    if ok and g >= 1:
        # consequences of exponent two: ramified rational places inject
        # into the class group, and the group order caps at 2^5
        assert ns[0] <= h and h <= 32
    degs = tuple(sorted(p.degree for p, _ in model.ramified_finite()))
    eq = canonical_model(model, group).describe()
    return ClassificationRecord(q, g, t, h, expected, ok, ns, degs, eq)


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------


def odd_normal_form(F: FiniteField, eps: int, f: Poly) -> tuple[int, Poly]:
    """(eps, f) with f monic; eps in {0,1} selects the non-square twist."""
    if not f.is_monic():
        lc = f.lc()
        eps ^= 0 if bool(F.is_square[lc]) else 1
        f = f.monic()
    return eps, f


def even_normal_form(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Canonicalize the polynomial part of u = num/den under additions of
    w^2 + w with polynomial w: clear every even-degree monomial above the
    constant, then minimize the constant modulo the Artin-Schreier image
    of the constant field."""
    F = num.F
    s, r = divmod(num, den)
    sc = list(s.coeffs) + [0]
    for j in range(len(sc) // 2, 0, -1):
        d = 2 * j
        if d < len(sc) and sc[d] != 0:
            wj = F.sqrt(sc[d])
            sc[d] = 0
            if j < len(sc):
                sc[j] = F.add(sc[j], wj)
    if sc:
        c0 = sc[0]
        best = min(F.add(c0, v) for v in range(F.q) if bool(F.as_image[v]))
        sc[0] = best
    s2 = Poly(F, sc)
    return s2 * den + r, den


def _affine_even(m: EvenModel, a: int, b: int) -> EvenModel:
    F = m.F
    num = m.num.compose_affine(a, b)
    den = m.den.compose_affine(a, b)
    c = F.inv(den.lc())
    num, den = even_normal_form(num.scale(c), den.scale(c))
    return EvenModel(F, num, den)


def _affine_odd(m: OddModel, a: int, b: int) -> OddModel:
    F = m.F
    g = m.f.compose_affine(a, b)
    # lc(f(ax+b)) = a^{2g+1}; odd power keeps the square class of a
    eps0 = 0 if m.c == 1 else 1
    eps, f = odd_normal_form(F, eps0, g)
    return OddModel(F, 1 if eps == 0 else least_nonsquare(F), f)


def _flips_odd(m: OddModel) -> list[OddModel]:
    """Exchange infinity with each rational zero of f."""
    F = m.F
    out = []
    d = m.f.degree
    for r in range(F.q):
        if m.f.evaluate(r) != 0:
            continue
        sh = m.f.shift(r)                       # c_0=0, c_1 = f'(r) != 0
        rev = Poly(F, (0,) + tuple(sh.coeffs[d:0:-1]))
        eps0 = 0 if m.c == 1 else 1
        eps, f = odd_normal_form(F, eps0, rev)
        out.append(OddModel(F, 1 if eps == 0 else least_nonsquare(F), f))
    return out


def _flips_even(m: EvenModel) -> list[EvenModel]:
    """Exchange infinity with each rational (degree-one) pole of u."""
    F = m.F
    out = []
    dP, dQ = m.num.degree, m.den.degree
    for r in range(F.q):
        if m.den.evaluate(r) != 0:
            continue
        num2 = m.num.shift(r).reverse(dP)
        den2 = m.den.shift(r).reverse(dQ) * Poly(F, (0, 1)) ** (dP - dQ)
        c = F.inv(den2.lc())
        num2, den2 = even_normal_form(num2.scale(c), den2.scale(c))
        out.append(EvenModel(F, num2, den2))
    return out


def _model_key(m: Model) -> tuple:
    if isinstance(m, OddModel):
        return (0 if m.c == 1 else 1, m.f.coeffs)
    return (m.den.coeffs, m.num.coeffs)


def canonical_key(model: Model, group: str = "extended") -> tuple:
    """Minimal key over the substitution orbit of the model.

    group='extended' (default): affine substitutions and flips through
    every ramified rational place -- one key per isomorphism class.
    group='affine': affine substitutions only.
    """
    if group not in ("affine", "extended"):
        raise ValueError(f"unknown group {group!r}")
    F = model.F
    if isinstance(model, OddModel):
        start = _affine_odd(model, 1, 0)
        neighbors_aff = lambda m: (_affine_odd(m, a, b)
                                   for a in range(1, F.q) for b in range(F.q))
        neighbors_flip = _flips_odd
    else:
        start = _affine_even(model, 1, 0)
        neighbors_aff = lambda m: (_affine_even(m, a, b)
                                   for a in range(1, F.q) for b in range(F.q))
        neighbors_flip = _flips_even
    seen = {_model_key(start): start}
    if group == "affine":
        for nb in neighbors_aff(start):
            seen.setdefault(_model_key(nb), nb)
        return min(seen)
    frontier = [start]
    while frontier:
        new = []
        for m in frontier:
            for nb in list(neighbors_aff(m)) + neighbors_flip(m):
                k = _model_key(nb)
                if k not in seen:
                    seen[k] = nb
                    new.append(nb)
        frontier = new
    return min(seen)


def canonical_model(model: Model, group: str = "extended") -> Model:
    """A deterministic representative of the isomorphism class."""
    key = canonical_key(model, group)
    F = model.F
    if isinstance(model, OddModel):
        eps, coeffs = key
        return OddModel(F, 1 if eps == 0 else least_nonsquare(F),
                        Poly(F, coeffs))
    den_c, num_c = key
    return EvenModel(F, Poly(F, num_c), Poly(F, den_c))


# ---------------------------------------------------------------------------
# direct field-equality test (handles higher-order poles)
# ---------------------------------------------------------------------------


def _mobius_maps(F: FiniteField, extended: bool):
    """Affine maps (a,b,0,1); extended adds all (a,b,c,d), det != 0."""
    out = [(a, b, 0, 1) for a in range(1, F.q) for b in range(F.q)]
    if extended:
        for a in range(F.q):
            for b in range(F.q):
                for c in range(1, F.q):
                    for d in range(F.q):
                        if F.sub(F.mul(a, d), F.mul(b, c)) != 0:
                            out.append((a, b, c, d))
    return out


def _compose_mobius_frac(num: Poly, den: Poly,
                         mat: tuple[int, int, int, int]) -> tuple[Poly, Poly]:
    F = num.F
    a, b, c, d = mat
    t1 = Poly(F, (b, a))
    t2 = Poly(F, (d, c))
    D = max(num.degree, den.degree)

    def lift(p: Poly) -> Poly:
        out = Poly.zero(F)
        for i, cf in enumerate(p.coeffs):
            if cf:
                out = out + (Poly.const(F, cf) * t1**i * t2**(D - i))
        return out

    return lift(num), lift(den)


def is_same_field(m1: Model, m2: Model, group: str = "extended") -> bool:
    """Decide isomorphism directly.  Odd q: compare canonical keys (the
    orbit search is exact there).  Even q: search for a substitution sigma
    with u1 o sigma - u2 of the form w^2 + w, deciding membership by
    Artin-Schreier reduction (works for arbitrary pole orders)."""
    if type(m1) is not type(m2) or m1.F != m2.F:
        return False
    F = m1.F
    if isinstance(m1, OddModel):
        return canonical_key(m1, group) == canonical_key(m2, group)
    for mat in _mobius_maps(F, extended=(group == "extended")):
        n1, d1 = _compose_mobius_frac(m1.num, m1.den, mat)
        num = n1 * m2.den + m2.num * d1
        den = d1 * m2.den
        try:
            normalize_u(F, num, den)
        except ModelError as e:
            if e.code == DEGENERATE:
                return True
        except ZeroDivisionError:
            continue
    return False
