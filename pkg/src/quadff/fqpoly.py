"""Dense univariate polynomials over a FiniteField, plus an irreducibility
sieve and factorization by trial division.

Coefficients are stored ascending (coeffs[i] is the x^i coefficient) as a
tuple of element codes; the zero polynomial is the empty tuple and has
degree -1.  Polynomials are immutable and hashable so they can serve as
dictionary keys in canonicalization and caching.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .gf import FiniteField, field


def _norm(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Immutable dense polynomial over F_q (codes ascending)."""

    __slots__ = ("F", "coeffs")

    def __init__(self, F: FiniteField, coeffs: Iterable[int] = ()):
        self.F = F
        self.coeffs = _norm(coeffs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, F: FiniteField) -> "Poly":
        return cls(F, ())

    @classmethod
    def one(cls, F: FiniteField) -> "Poly":
        return cls(F, (1,))

    @classmethod
    def x(cls, F: FiniteField) -> "Poly":
        return cls(F, (0, 1))

    @classmethod
    def const(cls, F: FiniteField, c: int) -> "Poly":
        return cls(F, (c,))

    @classmethod
    def from_tail_code(cls, F: FiniteField, deg: int, code: int) -> "Poly":
        """Monic polynomial of given degree whose lower coefficients are
        the base-q digits of ``code``."""
        q = F.q
        tail = [(code // q**i) % q for i in range(deg)]
        return cls(F, tail + [1])

    def tail_code(self) -> int:
        """Integer code of the sub-leading coefficients (monic encoding)."""
        q = self.F.q
        return sum(c * q**i for i, c in enumerate(self.coeffs[:-1]))

    # -- basics ----------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poly) and self.F == other.F
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.F.p, self.F.n, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- ring ops ----------------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        F = self.F
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly(F, [F.add(a[i] if i < len(a) else 0,
                              b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self) -> "Poly":
        F = self.F
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        F = self.F
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    def scale(self, c: int) -> "Poly":
        F = self.F
        return Poly(F, [F.mul(c, x) for x in self.coeffs])

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        F = self.F
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        inv_lb = F.inv(b[-1])
        q = [0] * max(0, len(a) - db)
        while len(a) - 1 >= db and a:
            if a[-1] == 0:
                a.pop()
                continue
            k = len(a) - 1 - db
            c = F.mul(a[-1], inv_lb)
            q[k] = c
            for i, y in enumerate(b):
                if y:
                    a[k + i] = F.sub(a[k + i], F.mul(c, y))
            while a and a[-1] == 0:
                a.pop()
        return Poly(F, q), Poly(F, a)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Poly":
        out = Poly.one(self.F)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.F.inv(self.lc()))

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def derivative(self) -> "Poly":
        F = self.F
        out = []
        for i in range(1, len(self.coeffs)):
            s = 0
            for _ in range(i % F.p):
                s = F.add(s, self.coeffs[i])
            out.append(s)
        return Poly(F, out)

    def is_squarefree(self) -> bool:
        d = self.derivative()
        if d.is_zero():
            return self.degree <= 0
        return self.gcd(d).degree == 0

    # -- evaluation / composition ---------------------------------------------

    def evaluate(self, x: int) -> int:
        F = self.F
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def eval_all(self, E: FiniteField | None = None) -> np.ndarray:
        """Values at every element of E (an extension of self.F; default
        self.F), as an array of codes indexed by element code."""
        F = self.F
        E = E or F
        emb = F.embedding_into(E)
        xs = np.arange(E.q, dtype=np.int64)
        acc = np.zeros(E.q, dtype=np.int64)
        for c in reversed(self.coeffs):
            acc = E.add_arr(E.mul_arr(acc, xs), np.full(E.q, int(emb[c]),
                                                        dtype=np.int64))
        return acc

    def shift(self, r: int) -> "Poly":
        """self(x + r), by Horner in the polynomial ring."""
        F = self.F
        out = Poly.zero(F)
        xr = Poly(F, (r, 1))
        for c in reversed(self.coeffs):
            out = out * xr + Poly.const(F, c)
        return out

    def compose_affine(self, a: int, b: int) -> "Poly":
        """self(a*x + b)."""
        F = self.F
        out = Poly.zero(F)
        ax_b = Poly(F, (b, a))
        for c in reversed(self.coeffs):
            out = out * ax_b + Poly.const(F, c)
        return out

    def reverse(self, deg: int | None = None) -> "Poly":
        """x^deg * self(1/x) (coefficients reversed, padded to deg)."""
        d = self.degree if deg is None else deg
        out = [0] * (d + 1)
        for i, c in enumerate(self.coeffs):
            out[d - i] = c
        return Poly(self.F, out)

    # -- formatting -------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poly({self.F.q}; {self})"

    def __str__(self) -> str:
        F = self.F
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(F.elt_str(c) if F.n > 1 else str(c))
                continue
            xs = "x" if i == 1 else f"x^{i}"
            if c == 1:
                parts.append(xs)
            elif F.n == 1:
                parts.append(f"{c}*{xs}")
            else:
                cs = F.elt_str(c)
                parts.append(f"({cs})*{xs}" if "+" in cs else f"{cs}*{xs}")
        return "+".join(parts)


def _lex_poly(s: str) -> list:
    toks = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            toks.append(int(s[i:j]))
            i = j
        elif ch in "xz+-*^()":
            toks.append(ch)
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} in polynomial")
    return toks


def parse_poly(F: FiniteField, s: str) -> Poly:
    """Parse polynomial text over F.  Sums, differences, products, powers,
    parentheses; 'x' is the variable, 'z' the generator of a non-prime
    field; integer literals are element codes (= residues when q is
    prime).  Examples: 'x^3+2*x+1', '2*(x+2)*(x^2+1)', '(z+1)*x^2+z'.
    Juxtaposition like '2x' multiplies."""
    toks = _lex_poly(s)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take():
        nonlocal pos
        t = peek()
        pos += 1
        return t

    def atom() -> Poly:
        t = take()
        if t == "(":
            p_ = expr()
            if take() != ")":
                raise ValueError("missing ')' in polynomial")
            return p_
        if t == "x":
            return Poly(F, [0, 1])
        if t == "z":
            if F.n == 1:
                raise ValueError(f"'z' undefined over the prime field F_{F.q}")
            return Poly.const(F, F.p)
        if isinstance(t, int):
            if t >= F.q:
                raise ValueError(f"coefficient {t} out of range for F_{F.q}")
            return Poly.const(F, t)
        raise ValueError(f"unexpected {t!r} in polynomial")

    def factor() -> Poly:
        base = atom()
        if peek() == "^":
            take()
            e = take()
            if not isinstance(e, int):
                raise ValueError("exponent must be an integer")
            return base ** e
        return base

    def term() -> Poly:
        out = factor()
        while True:
            nxt = peek()
            if nxt == "*":
                take()
                out = out * factor()
            elif nxt in ("x", "z", "("):    # juxtaposition
                out = out * factor()
            else:
                return out

    def expr() -> Poly:
        neg = False
        while peek() in ("+", "-"):
            neg ^= take() == "-"
        out = -term() if neg else term()
        while peek() in ("+", "-"):
            sub = take() == "-"
            while peek() in ("+", "-"):
                sub ^= take() == "-"
            nxt = term()
            out = out - nxt if sub else out + nxt
        return out

    result = expr()
    if pos != len(toks):
        raise ValueError(f"trailing input in polynomial: {toks[pos:]}")
    return result


# ---------------------------------------------------------------------------
# irreducibles: sieve, counting, factorization
# ---------------------------------------------------------------------------


def mobius(n: int) -> int:
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def count_irreducible(q: int, d: int) -> int:
    """Number of monic irreducible degree-d polynomials over F_q
    (Gauss/Dedekind necklace formula)."""
    total = 0
    e = 1
    while e <= d:
        if d % e == 0:
            total += mobius(d // e) * q**e
        e += 1
    return total // d


@lru_cache(maxsize=None)
def _irreducible_codes(p: int, n: int, d: int) -> tuple[int, ...]:
    """Tail codes of monic irreducibles of degree d over F_{p^n}, via a
    product-marking sieve: every monic composite of degree d is g*h for
    some monic irreducible g with deg g <= d/2."""
    F = field(p, n)
    q = F.q
    if d == 1:
        return tuple(range(q))
    composite = np.zeros(q**d, dtype=bool)
    powers = q ** np.arange(d, dtype=np.int64)
    for dg in range(1, d // 2 + 1):
        dh = d - dg
        h_codes = np.arange(q**dh, dtype=np.int64)
        # coefficient matrix of all monic h (columns: x^0..x^dh)
        hc = np.empty((q**dh, dh + 1), dtype=np.int64)
        for i in range(dh):
            hc[:, i] = (h_codes // q**i) % q
        hc[:, dh] = 1
        for gcode in _irreducible_codes(p, n, dg):
            g = [(gcode // q**i) % q for i in range(dg)] + [1]
            # conv: product coefficients c_k = sum_i g_i * h_{k-i}
            prod = np.zeros((q**dh, d + 1), dtype=np.int64)
            for i, gc in enumerate(g):
                if gc == 0:
                    continue
                gcol = np.full(q**dh, gc, dtype=np.int64)
                for j in range(dh + 1):
                    prod[:, i + j] = F.add_arr(
                        prod[:, i + j], F.mul_arr(gcol, hc[:, j]))
            codes = (prod[:, :d] * powers).sum(axis=1)
            composite[codes] = True
    return tuple(int(c) for c in np.nonzero(~composite)[0])


def irreducible_polys(F: FiniteField, d: int) -> list[Poly]:
    """All monic irreducible polynomials of degree d, sorted by tail code."""
    return [Poly.from_tail_code(F, d, c) for c in _irreducible_codes(F.p, F.n, d)]


def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    g = f.monic()
    return g.tail_code() in set(_irreducible_codes(f.F.p, f.F.n, f.degree))


def factor(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities (lc dropped);
    trial division against the sieve, ordered by (degree, tail code)."""
    if f.degree < 1:
        return []
    rem = f.monic()
    out: list[tuple[Poly, int]] = []
    d = 1
    while rem.degree >= 1:
        if d > rem.degree:
            raise AssertionError("factorization ran past remaining degree")
        if 2 * d > rem.degree:
            out.append((rem, 1))
            break
        for p_ in irreducible_polys(f.F, d):
            if rem.degree < d:
                break
            m = 0
            while True:
                qq, r = divmod(rem, p_)
                if r.is_zero():
                    rem = qq
                    m += 1
                else:
                    break
            if m:
                out.append((p_, m))
        d += 1
    return out
