"""Finite field arithmetic for small fields F_{p^n}.

Elements of F_{p^n} are coded as integers 0..p^n-1: the element with
digit expansion e = sum_i d_i p^i represents the residue class of
sum_i d_i z^i modulo a fixed monic irreducible modulus m(z) of degree n
over F_p.  The modulus is chosen deterministically: the monic irreducible
polynomial of degree n whose integer code (constant term in the lowest
digit) is smallest.  This makes element codes reproducible across runs
and platforms.

Scalar operations go through small lookup tables; bulk operations on
numpy arrays of codes are provided for vectorized point counting.  For
orders above _TABLE_MAX the multiplication table is replaced by
discrete-log tables and addition falls back to digit arithmetic (XOR in
characteristic 2).
"""
from __future__ import annotations

from typing import Iterator

import numpy as np

_TABLE_MAX = 2048  # largest order for which dense q x q tables are built


# ---------------------------------------------------------------------------
# polynomial arithmetic over F_p (coefficient lists, ascending) -- internal,
# only used to construct field tables
# ---------------------------------------------------------------------------


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = (a[-1] * inv) % p
        k = len(a) - 1 - dm
        for i, y in enumerate(m):
            a[k + i] = (a[k + i] - c * y) % p
        while len(a) > 1 and a[-1] == 0:
            a.pop()
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    while any(b):
        a, b = b, _pmod(a, b, p)
    return a


def _pmodexp(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    out = [1]
    while e:
        if e & 1:
            out = _pmod(_pmul(out, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return out


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(max(len(a), len(b)))]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin test: x^(p^n) = x mod f, and x^(p^(n/l)) - x coprime for l|n."""
    n = len(f) - 1
    if n <= 0:
        return False
    x = [0, 1]
    xq = _pmodexp(x, p**n, f, p)
    if any(_psub(xq, x, p)):
        return False
    for ell in _prime_divisors(n):
        xe = _pmodexp(x, p ** (n // ell), f, p)
        g = _pgcd(f, _psub(xe, x, p), p)
        if len(g) > 1:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _find_modulus(p: int, n: int) -> list[int]:
    """Monic irreducible of degree n over F_p with least integer code."""
    if n == 1:
        return [0, 1]
    for code in range(p**n):
        f = [(code // p**i) % p for i in range(n)] + [1]
        if _is_irreducible(f, p):
            return f
    raise ValueError(f"no irreducible polynomial of degree {n} over F_{p}")


# ---------------------------------------------------------------------------
# the field class
# ---------------------------------------------------------------------------


class FiniteField:
    """F_{p^n} with int-coded elements and table-driven arithmetic.

    Do not instantiate directly in hot paths; use the memoizing factory
    ``field(p, n)`` so tables are shared.
    """

    def __init__(self, p: int, n: int = 1):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = _find_modulus(p, n)
        q = self.q

        # digit matrix: _digits[e] = (d_0, ..., d_{n-1})
        codes = np.arange(q, dtype=np.int64)
        self._digits = np.empty((q, n), dtype=np.int16)
        for i in range(n):
            self._digits[:, i] = (codes // p**i) % p
        self._powers = np.array([p**i for i in range(n)], dtype=np.int64)

        # discrete log/exp tables (always; cheap relative to q)
        gen = self._find_generator()
        self.generator = gen
        self._exp = np.zeros(max(q - 1, 1), dtype=np.int64)
        self._log = np.zeros(q, dtype=np.int64)
        acc = 1
        for k in range(q - 1):
            self._exp[k] = acc
            self._log[acc] = k
            acc = self._mul_digits(acc, gen)
        if q > 2 and acc != 1:
            raise AssertionError("generator order mismatch")

        self._add_t: np.ndarray | None = None
        self._mul_t: np.ndarray | None = None
        if q <= _TABLE_MAX:
            d = self._digits
            s = (d[:, None, :] + d[None, :, :]) % p
            self._add_t = (s * self._powers).sum(axis=2).astype(np.int32)
            la = self._log[:, None] + self._log[None, :]
            mt = self._exp[la % (q - 1)].astype(np.int32)
            mt[0, :] = 0
            mt[:, 0] = 0
            self._mul_t = mt

        # inverses, negation
        self.inv_t = np.zeros(q, dtype=np.int32)
        if q > 2:
            nz = np.arange(1, q)
            self.inv_t[1:] = self._exp[(q - 1 - self._log[nz]) % (q - 1)]
        else:
            self.inv_t[1] = 1
        negd = (-self._digits) % p
        self.neg_t = (negd * self._powers).sum(axis=1).astype(np.int32)

        # quadratic character chi (odd), Artin-Schreier image (char 2)
        if p != 2:
            squares = sorted({self.mul(a, a) for a in range(q)})
            self.chi = np.full(q, -1, dtype=np.int8)
            self.chi[squares] = 1
            self.chi[0] = 0
            self.is_square = np.zeros(q, dtype=bool)
            self.is_square[squares] = True
        else:
            img = {self.add(self.mul(a, a), a) for a in range(q)}
            self.as_image = np.zeros(q, dtype=bool)
            self.as_image[sorted(img)] = True
            tr = np.zeros(q, dtype=np.int8)
            for a in range(q):
                t, acc2 = 0, a
                for _ in range(n):
                    t = self.add(t, acc2)
                    acc2 = self.mul(acc2, acc2)
                tr[a] = t
            self.trace2 = tr

        self._embeddings: dict[tuple[int, int], np.ndarray] = {}

    # -- construction helpers ------------------------------------------------

    def _mul_digits(self, a: int, b: int) -> int:
        da = [int(x) for x in self._digits[a]]
        db = [int(x) for x in self._digits[b]]
        r = _pmod(_pmul(da, db, self.p), self.modulus, self.p)
        return sum(c * self.p**i for i, c in enumerate(r))

    def _find_generator(self) -> int:
        q = self.q
        if q == 2:
            return 1
        order_facs = _prime_divisors(q - 1)
        for g in range(2, q):
            if all(self._pow_digits(g, (q - 1) // ell) != 1
                   for ell in order_facs):
                return g
        raise AssertionError("no generator found")

    def _pow_digits(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._mul_digits(out, a)
            a = self._mul_digits(a, a)
            e >>= 1
        return out

    # -- scalar ops ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_t is not None:
            return int(self._add_t[a, b])
        d = (self._digits[a] + self._digits[b]) % self.p
        return int((d * self._powers).sum())

    def sub(self, a: int, b: int) -> int:
        return self.add(a, int(self.neg_t[b]))

    def mul(self, a: int, b: int) -> int:
        if self._mul_t is not None:
            return int(self._mul_t[a, b])
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self.inv_t[a])

    def neg(self, a: int) -> int:
        return int(self.neg_t[a])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        e %= self.q - 1
        return int(self._exp[(self._log[a] * e) % (self.q - 1)])

    def sqrt(self, a: int) -> int:
        """A square root of a; raises if a is a non-square (odd p)."""
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow(a, 2 ** (self.n - 1))
        la = int(self._log[a])
        if la % 2 != 0:
            raise ValueError(f"{a} is not a square in F_{self.q}")
        return int(self._exp[la // 2])

    # -- array ops -----------------------------------------------------------

    def add_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a ^ b
        if self._add_t is not None:
            return self._add_t[a, b]
        d = (self._digits[a] + self._digits[b]) % self.p
        return (d * self._powers).sum(axis=-1)

    def mul_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self._mul_t is not None:
            return self._mul_t[a, b]
        out = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    # -- structure -----------------------------------------------------------

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def embedding_into(self, ext: "FiniteField") -> np.ndarray:
        """Code map F_{p^n} -> F_{p^m} (n | m) sending z to a fixed root
        of this field's modulus; cached per extension."""
        key = (ext.p, ext.n)
        if key in self._embeddings:
            return self._embeddings[key]
        if ext.p != self.p or ext.n % self.n != 0:
            raise ValueError("not an extension")
        if self.n == 1:
            tab = np.arange(self.q, dtype=np.int64)
        else:
            root = None
            for x in range(ext.q):
                acc = 0
                for c in reversed(self.modulus):
                    acc = ext.add(ext.mul(acc, x), c)
                if acc == 0:
                    root = x
                    break
            if root is None:
                raise AssertionError("modulus has no root in extension")
            tab = np.zeros(self.q, dtype=np.int64)
            for e in range(self.q):
                acc, pw = 0, 1
                for d in self._digits[e]:
                    for _ in range(int(d)):
                        acc = ext.add(acc, pw)
                    pw = ext.mul(pw, root)
                tab[e] = acc
        self._embeddings[key] = tab
        return tab

    def __repr__(self) -> str:
        return f"FiniteField({self.p}, {self.n})"

    def __reduce__(self):
        # pickle as a factory call: keeps worker results light and shares
        # the memoized table instance inside each process
        return (field, (self.p, self.n))

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteField)
                and (self.p, self.n) == (other.p, other.n))

    def __hash__(self) -> int:
        return hash((self.p, self.n))

    # -- element formatting ----------------------------------------------------

    def elt_str(self, a: int) -> str:
        """Human-readable form of an element code ('z+1' style for n>1)."""
        if self.n == 1:
            return str(a)
        terms = []
        for i in range(self.n - 1, -1, -1):
            d = int(self._digits[a][i])
            if d == 0:
                continue
            if i == 0:
                terms.append(str(d))
            else:
                c = "" if d == 1 else str(d) + "*"
                terms.append(f"{c}z" if i == 1 else f"{c}z^{i}")
        return "+".join(terms) if terms else "0"


_FIELDS: dict[tuple[int, int], FiniteField] = {}


def field(p: int, n: int = 1) -> FiniteField:
    """Memoized field constructor."""
    if (p, n) not in _FIELDS:
        _FIELDS[(p, n)] = FiniteField(p, n)
    return _FIELDS[(p, n)]


def field_of_order(q: int) -> FiniteField:
    """Field with q = p^n elements (q a prime power)."""
    for p in _prime_divisors(q):
        n = 0
        m = q
        while m % p == 0 and m > 1:
            m //= p
            n += 1
        if p**n == q:
            return field(p, n)
    raise ValueError(f"{q} is not a prime power")


def extension(F: FiniteField, s: int) -> FiniteField:
    """Degree-s extension field of F (as an abstract field; use
    F.embedding_into(...) to map codes)."""
    return field(F.p, F.n * s)
