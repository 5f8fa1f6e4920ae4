"""Exhaustive search for quadratic extensions of F_q(x), ramified at
infinity, whose ideal class group has exponent two.

The class number pins down the ramification: h = 2^{t-2} (q odd) or
2^{t-1} (q even) with t the number of ramified places.  For each feasible
(q, g, h) cell we therefore know exactly how many finite places ramify,
enumerate every model with that ramification shape and genus, compute its
L-polynomial, keep the models with the right class number, and collapse
them into isomorphism classes.

Odd q: y^2 = c f(x), f a product of r = log2(h)+1 distinct monic
irreducibles with total degree 2g+1, c either 1 or a fixed non-square.

Even q: y^2 + y = num/den, den a product of r = log2(h) distinct monic
irreducibles (simple poles) of total degree D <= g, num coprime to den of
degree 2g+1-D.  Numerators are enumerated with their polynomial part
already reduced (even-degree coefficients cleared, constant a minimal
Artin-Schreier coset representative), which removes exactly the w^2+w
redundancy with polynomial w.  ``strict_gamma=True`` additionally
enumerates models whose finite poles have odd order > 1; those can only
present new fields when no substitution moves the high-order pole to
infinity, and they are folded in with a direct field-equality test.

The per-cell budget is tiny (at most a few thousand candidates), so every
cell is scanned completely; the wall-clock cost of the whole
classification is seconds, far inside any reasonable budget.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from pathlib import Path

import mpmath
import numpy as np

from .classify import (canonical_key, canonical_model,
                       exponent_two_class_number, is_same_field)
from .curve import (EvenModel, Model, OddModel, least_nonsquare,
                    model_from_dict, model_to_dict)
from .fqpoly import Poly, irreducible_polys
from .gf import field_of_order
from .zeta import (batch_point_counts_even, batch_point_counts_odd,
                   l_from_point_counts, place_counts, point_counts,
                   twist_character, zeta_property_violations)

CACHE_VERSION = 1

# (q, g) cells not excluded by the genus / class-number bounds, per class
# number.  Every listed cell is searched exhaustively; cells whose
# ramification budget cannot be met simply produce zero candidates.
FEASIBLE: dict[int, tuple[tuple[int, int], ...]] = {
    2: ((2, 1), (2, 2), (2, 3), (2, 4), (2, 5),
        (3, 1), (3, 2), (4, 1), (5, 1)),
    4: ((2, 2), (2, 3), (2, 4), (2, 5), (2, 6),
        (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1), (7, 1), (9, 1)),
    8: ((2, 4), (2, 5), (2, 6), (2, 7), (2, 8),
        (3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2)),
    16: ((2, 7), (2, 8), (3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2)),
    32: ((3, 1), (3, 2), (3, 3), (3, 4)),
}

# (q, g_min) pairs such that S(q, g, h) > 0 -- hence class number > h --
# for every g >= g_min.  Cells absent from both this list and FEASIBLE[h]
# are ruled out by the ramification degree budget instead.
EXCLUDED_BY_BOUND: dict[int, tuple[tuple[int, int], ...]] = {
    2: ((4, 2), (5, 2), (3, 3), (2, 6)),
    4: ((5, 2), (7, 2), (8, 2), (9, 2), (4, 3), (3, 4), (2, 7)),
    8: ((7, 2), (8, 2), (9, 2), (11, 2), (13, 2),
        (5, 3), (4, 4), (3, 5), (2, 9)),
    16: ((9, 2), (11, 2), (13, 2), (16, 2), (17, 2), (19, 2), (23, 2),
         (25, 2), (5, 3), (7, 3), (8, 3), (4, 4), (3, 5), (2, 10)),
    32: ((11, 2), (13, 2), (16, 2), (17, 2), (19, 2), (23, 2), (25, 2),
         (27, 2), (29, 2), (31, 2), (32, 2), (37, 2), (41, 2), (43, 2),
         (7, 3), (8, 3), (9, 3), (5, 4), (4, 5), (3, 6), (2, 11)),
}


def feasible_cases(h: int) -> tuple[tuple[int, int], ...]:
    """The (q, g) cells that can carry an exponent-two field with class
    number h.  The table errs loose: a few listed cells (e.g. q=3, g=1 for
    h >= 8) cannot host enough ramified places and enumerate to nothing.

    On first use per h, cross-checks the companion exclusion list: the
    bound must certify h > target at each (q, g_min) and must not do so
    one genus earlier.
    """
    if h not in FEASIBLE:
        raise ValueError(f"unsupported class number {h}")
    if h not in _validated_exclusions:
        for q, gmin in EXCLUDED_BY_BOUND[h]:
            assert s_bound_sign(q, gmin, h) > 0, (q, gmin, h)
            if gmin > 1:
                assert s_bound_sign(q, gmin - 1, h) <= 0, (q, gmin, h)
        _validated_exclusions.add(h)
    return FEASIBLE[h]


_validated_exclusions: set[int] = set()


# ---------------------------------------------------------------------------
# the exclusion bound
# ---------------------------------------------------------------------------


def s_bound(q: int, g: int, h: int, dps: int = 60):
    """S(q,g,h) = (q-1)(q^{2g-1}+1-2g q^{(2g-1)/2}) - h (q^g-1)(2g-1).

    Counting positive divisors of degree 2g-1 two ways shows the class
    number exceeds h wherever S is positive.  Evaluated with mpmath at
    ``dps`` digits (default 60)."""
    with mpmath.workdps(dps):
        qm = mpmath.mpf(q)
        return ((q - 1) * (qm ** (2 * g - 1) + 1
                           - 2 * g * qm ** (mpmath.mpf(2 * g - 1) / 2))
                - h * (qm ** g - 1) * (2 * g - 1))


def s_bound_sign(q: int, g: int, h: int) -> int:
    """Exact sign of S(q,g,h): S = A - B sqrt(q^{2g-1}) with integers
    A, B >= 0, so the sign follows from comparing A|A| and B^2 q^{2g-1}."""
    A = (q - 1) * (q ** (2 * g - 1) + 1) - h * (q ** g - 1) * (2 * g - 1)
    B = (q - 1) * 2 * g
    lhs = A * abs(A)
    rhs = B * B * q ** (2 * g - 1)
    return 1 if lhs > rhs else (-1 if lhs < rhs else 0)


# ---------------------------------------------------------------------------
# enumeration of ramification shapes
# ---------------------------------------------------------------------------


def _degree_vectors(counts: dict[int, int], r: int, lo: int,
                    hi: int) -> list[tuple[int, ...]]:
    """Nondecreasing degree tuples of length r with lo <= sum <= hi, each
    degree d used at most counts[d] times."""
    degs = sorted(d for d in counts if counts[d] > 0)
    res: list[tuple[int, ...]] = []

    def rec(idx: int, left: int, s: int, acc: tuple[int, ...]) -> None:
        if left == 0:
            if s >= lo:
                res.append(acc)
            return
        if idx == len(degs):
            return
        d = degs[idx]
        for m in range(min(left, counts[d]) + 1):
            s2 = s + m * d
            if s2 > hi:
                break
            rec(idx + 1, left - m, s2, acc + (d,) * m)

    rec(0, r, 0, ())
    return res


def _place_sets(F, r: int, lo: int, hi: int):
    """Sets of r distinct monic irreducibles with total degree in
    [lo, hi], in a fixed deterministic order."""
    if r == 0 or hi < r:
        return
    max_d = hi - (r - 1)
    by_deg = {d: irreducible_polys(F, d) for d in range(1, max_d + 1)}
    counts = {d: len(v) for d, v in by_deg.items()}
    for dv in _degree_vectors(counts, r, lo, hi):
        groups = [(d, dv.count(d)) for d in sorted(set(dv))]
        pools = [combinations(by_deg[d], m) for d, m in groups]
        for pick in product(*pools):
            out = []
            for tup in pick:
                out.extend(tup)
            yield tuple(out)


def _as_coset_reps(F) -> tuple[int, ...]:
    """Minimal representatives of F_q modulo the image of v -> v^2 + v."""
    image = [v for v in range(F.q) if bool(F.as_image[v])]
    reps, seen = [], set()
    for v in range(F.q):
        if v not in seen:
            reps.append(v)
            seen.update(F.add(v, w) for w in image)
    return tuple(reps)


def _reduced_parts(F, du: int, reps: tuple[int, ...]) -> list[Poly]:
    """Polynomial parts of degree du, already reduced: even-degree
    coefficients above the constant are zero and the constant is a minimal
    Artin-Schreier coset representative."""
    free = [j for j in range(1, du) if j % 2 == 1]
    out = []
    for lc in range(1, F.q):
        for c0 in reps:
            for mids in product(range(F.q), repeat=len(free)):
                coeffs = [0] * (du + 1)
                coeffs[0] = c0
                coeffs[du] = lc
                for j, cj in zip(free, mids):
                    coeffs[j] = cj
                out.append(Poly(F, coeffs))
    return out


def _coprime_residues(F, den: Poly, radical: Poly) -> list[Poly]:
    """Nonzero residues mod den coprime to den (radical = product of the
    distinct prime factors), ordered by integer code."""
    D = den.degree
    out = []
    for code in range(1, F.q ** D):
        rem = Poly(F, [(code // F.q ** i) % F.q for i in range(D)])
        if rem.gcd(radical).degree == 0:
            out.append(rem)
    return out


def _strict_shapes(F, g: int, r: int):
    """(primes, gammas): r distinct primes with odd pole orders gamma_i,
    at least one > 1, total weight sum (gamma_i+1) deg_i <= 2g."""
    for pset in _place_sets(F, r, 0, g):
        degs = [p_.degree for p_ in pset]
        found: list[tuple[int, ...]] = []

        def rec(i: int, used: int, acc: tuple[int, ...]) -> None:
            if i == len(degs):
                found.append(acc)
                return
            rest_min = 2 * sum(degs[i + 1:])
            gm = 1
            while used + (gm + 1) * degs[i] + rest_min <= 2 * g:
                rec(i + 1, used + (gm + 1) * degs[i], acc + (gm,))
                gm += 2

        rec(0, 0, ())
        for gammas in found:
            if any(x > 1 for x in gammas):
                yield pset, gammas


# ---------------------------------------------------------------------------
# results
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassRecord:
    """One isomorphism class of fields found by the search."""

    q: int
    g: int
    h: int
    t: int
    model: Model                     # canonical representative
    key: tuple                       # canonical key (sort order)
    l_coeffs: tuple[int, ...]
    point_counts: tuple[int, ...]
    place_counts: tuple[int, ...]
    n_models: int                    # enumerated models in this class

    def describe(self) -> str:
        return self.model.describe()

    def as_dict(self) -> dict:
        return {
            "q": self.q, "g": self.g, "h": self.h, "t": self.t,
            "model": model_to_dict(self.model),
            "key": self.key,
            "l_coeffs": list(self.l_coeffs),
            "point_counts": list(self.point_counts),
            "place_counts": list(self.place_counts),
            "n_models": self.n_models,
        }


def _tuplify(obj):
    return tuple(_tuplify(x) for x in obj) if isinstance(obj, (list, tuple)) \
        else obj


def _class_from_dict(d: dict) -> ClassRecord:
    return ClassRecord(
        q=d["q"], g=d["g"], h=d["h"], t=d["t"],
        model=model_from_dict(d["model"]),
        key=_tuplify(d["key"]),
        l_coeffs=tuple(d["l_coeffs"]),
        point_counts=tuple(d["point_counts"]),
        place_counts=tuple(d["place_counts"]),
        n_models=d["n_models"],
    )


@dataclass
class CellResult:
    """Outcome of the exhaustive scan of one (q, g, h) cell."""

    q: int
    g: int
    h: int
    group: str
    strict_gamma: bool
    n_candidates: int
    n_accepted: int
    classes: tuple[ClassRecord, ...]
    property_failures: tuple[str, ...]
    elapsed: float

    def as_dict(self) -> dict:
        return {
            "version": CACHE_VERSION,
            "q": self.q, "g": self.g, "h": self.h,
            "group": self.group, "strict_gamma": self.strict_gamma,
            "n_candidates": self.n_candidates,
            "n_accepted": self.n_accepted,
            "classes": [c.as_dict() for c in self.classes],
            "property_failures": list(self.property_failures),
            "elapsed": self.elapsed,
        }


def _cell_from_dict(d: dict) -> CellResult:
    if d.get("version") != CACHE_VERSION:
        raise ValueError("cache version mismatch")
    return CellResult(
        q=d["q"], g=d["g"], h=d["h"],
        group=d["group"], strict_gamma=d["strict_gamma"],
        n_candidates=d["n_candidates"], n_accepted=d["n_accepted"],
        classes=tuple(_class_from_dict(c) for c in d["classes"]),
        property_failures=tuple(d["property_failures"]),
        elapsed=d["elapsed"],
    )


# ---------------------------------------------------------------------------
# the per-cell scan
# ---------------------------------------------------------------------------


def _coeff_matrix(polys: list[Poly], width: int) -> np.ndarray:
    mat = np.zeros((len(polys), width), dtype=np.int64)
    for i, p_ in enumerate(polys):
        mat[i, : len(p_.coeffs)] = p_.coeffs
    return mat


def _compute_cell(q: int, g: int, h: int, *, group: str = "extended",
                  strict_gamma: bool = False,
                  check_properties: bool = True) -> CellResult:
    t0 = time.perf_counter()
    F = field_of_order(q)
    failures: list[str] = []
    by_key: dict[tuple, list] = {}      # canonical key -> [model, count]
    n_cand = 0
    n_acc = 0

    def consider(model: Model, nps: tuple[int, ...]) -> None:
        nonlocal n_cand, n_acc
        n_cand += 1
        label = f"q={q} g={g} h={h}: {model.describe()}"
        try:
            L = l_from_point_counts(q, g, list(nps))
            N = place_counts(q, list(nps))
        except ArithmeticError as e:
            failures.append(f"{label}: {e}")
            return
        if check_properties:
            failures.extend(f"{label}: {v}"
                            for v in zeta_property_violations(q, g, nps, L))
        if sum(L) != h:
            return
        n_acc += 1
        if N[0] > h:
            failures.append(f"{label}: N1={N[0]} exceeds h={h}")
        key = canonical_key(model, group)
        if key in by_key:
            by_key[key][1] += 1
        else:
            by_key[key] = [model, 1]

    if F.p != 2:
        r = h.bit_length()              # log2(h) + 1 finite ramified places
        ns = least_nonsquare(F)
        fs = []
        for pset in _place_sets(F, r, 2 * g + 1, 2 * g + 1):
            f = Poly.one(F)
            for p_ in pset:
                f = f * p_
            fs.append(f)
        if fs:
            f_mat = _coeff_matrix(fs, 2 * g + 2)
            chi = {s: batch_point_counts_odd(F, s, f_mat)
                   for s in range(1, g + 1)}
            for i, f in enumerate(fs):
                for c in (1, ns):
                    nps = tuple(
                        q ** s + 1
                        + (1 if c == 1 else twist_character(q, s))
                        * int(chi[s][i])
                        for s in range(1, g + 1))
                    consider(OddModel(F, c, f), nps)
    else:
        r = h.bit_length() - 1          # log2(h) finite ramified places
        reps = _as_coset_reps(F)

        def scan_group(den: Poly, radical: Poly, du: int) -> None:
            nums = [s_ * den + rem
                    for s_ in _reduced_parts(F, du, reps)
                    for rem in _coprime_residues(F, den, radical)]
            if not nums:
                return
            num_mat = _coeff_matrix(nums, den.degree + du + 1)
            npm = {s: batch_point_counts_even(F, s, num_mat, den)
                   for s in range(1, g + 1)}
            for i, num in enumerate(nums):
                nps = tuple(int(npm[s][i]) for s in range(1, g + 1))
                consider(EvenModel(F, num, den), nps)

        for pset in _place_sets(F, r, 0, g):
            den = Poly.one(F)
            for p_ in pset:
                den = den * p_
            scan_group(den, den, 2 * g + 1 - 2 * den.degree)
        if strict_gamma:
            for pset, gammas in _strict_shapes(F, g, r):
                den = Poly.one(F)
                radical = Poly.one(F)
                w = 0
                for p_, gm in zip(pset, gammas):
                    den = den * p_ ** gm
                    radical = radical * p_
                    w += (gm + 1) * p_.degree
                scan_group(den, radical, 2 * g + 1 - w)

    recs: list[ClassRecord] = []
    for key in sorted(by_key):
        model0, cnt = by_key[key]
        rep = canonical_model(model0, group)
        nps = point_counts(rep)
        L = l_from_point_counts(q, g, nps)
        N = place_counts(q, nps)
        recs.append(ClassRecord(q, g, h, rep.t, rep, key, tuple(L),
                                tuple(nps), tuple(N), cnt))

    if strict_gamma and F.p == 2:
        # higher-order poles escape the orbit search; merge by the direct
        # field-equality test (cheap: only a handful of classes per cell)
        merged: list[ClassRecord] = []
        for rec in recs:
            hit = None
            for i, m in enumerate(merged):
                if (m.l_coeffs == rec.l_coeffs and m.t == rec.t
                        and is_same_field(m.model, rec.model, group)):
                    hit = i
                    break
            if hit is None:
                merged.append(rec)
            else:
                m = merged[hit]
                merged[hit] = ClassRecord(
                    m.q, m.g, m.h, m.t, m.model, m.key, m.l_coeffs,
                    m.point_counts, m.place_counts,
                    m.n_models + rec.n_models)
        recs = merged

    return CellResult(q, g, h, group, strict_gamma, n_cand, n_acc,
                      tuple(recs), tuple(failures),
                      time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# cache and drivers
# ---------------------------------------------------------------------------


def cache_dir() -> Path:
    env = os.environ.get("QUADFF_CACHE_DIR")
    return Path(env) if env else Path.home() / ".cache" / "quadff"


def _cache_path(q, g, h, group, strict_gamma) -> Path:
    tag = f"{q}-{g}-{h}-{group}" + ("-strict" if strict_gamma else "")
    return cache_dir() / f"cell-{tag}-v{CACHE_VERSION}.json"


def search_cell(q: int, g: int, h: int, *, group: str = "extended",
                strict_gamma: bool = False, use_cache: bool = True,
                check_properties: bool = True) -> CellResult:
    """Exhaustively scan one (q, g, h) cell (cached on disk by default)."""
    path = _cache_path(q, g, h, group, strict_gamma)
    if use_cache and path.exists():
        try:
            return _cell_from_dict(json.loads(path.read_text()))
        except (ValueError, KeyError, json.JSONDecodeError):
            pass                        # stale or corrupt cache: recompute
    res = _compute_cell(q, g, h, group=group, strict_gamma=strict_gamma,
                        check_properties=check_properties)
    if use_cache:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(f".tmp{os.getpid()}")
        tmp.write_text(json.dumps(res.as_dict()))
        tmp.replace(path)
    return res


def _cell_worker(args) -> CellResult:
    q, g, h, group, strict_gamma, use_cache, check_properties = args
    return search_cell(q, g, h, group=group, strict_gamma=strict_gamma,
                       use_cache=use_cache,
                       check_properties=check_properties)


def full_classification(hs=(2, 4, 8, 16, 32), *, group: str = "extended",
                        jobs: int = 1, strict_gamma: bool = False,
                        use_cache: bool = True, check_properties: bool = True,
                        progress: bool = False) -> list[CellResult]:
    """Scan every feasible cell for the given class numbers.  Results come
    back in a fixed order (by h, then q, then g) regardless of ``jobs``."""
    cells = [(q, g, h) for h in hs for (q, g) in sorted(feasible_cases(h))]
    args = [(q, g, h, group, strict_gamma, use_cache, check_properties)
            for (q, g, h) in cells]
    if jobs <= 1:
        results = []
        for a in args:
            res = _cell_worker(a)
            if progress:
                print(f"  q={res.q} g={res.g} h={res.h}: "
                      f"{res.n_candidates} models, {len(res.classes)} classes"
                      f" ({res.elapsed:.2f}s)", flush=True)
            results.append(res)
        return results
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        results = list(ex.map(_cell_worker, args))
    if progress:
        for res in results:
            print(f"  q={res.q} g={res.g} h={res.h}: "
                  f"{res.n_candidates} models, {len(res.classes)} classes"
                  f" ({res.elapsed:.2f}s)", flush=True)
    return results


# ---------------------------------------------------------------------------
# presentation
# ---------------------------------------------------------------------------


def classification_table(cells: list[CellResult], fmt: str = "text") -> str:
    """Deterministic rendering of search results (no timings included, so
    two runs over the same cells produce identical bytes)."""
    if fmt == "jsonl":
        lines = []
        for c in cells:
            lines.append(json.dumps(
                {"type": "cell", "q": c.q, "g": c.g, "h": c.h,
                 "group": c.group, "strict_gamma": c.strict_gamma,
                 "candidates": c.n_candidates, "accepted": c.n_accepted,
                 "classes": len(c.classes),
                 "property_failures": len(c.property_failures)},
                sort_keys=True, separators=(",", ":")))
            for rec in c.classes:
                lines.append(json.dumps(
                    {"type": "class", **rec.as_dict()},
                    sort_keys=True, separators=(",", ":")))
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    out = []
    by_h: dict[int, list[CellResult]] = {}
    for c in cells:
        by_h.setdefault(c.h, []).append(c)
    for h in sorted(by_h):
        group = by_h[h]
        total = sum(len(c.classes) for c in group)
        out.append(f"== h = {h}: {total} class"
                   f"{'es' if total != 1 else ''} ==")
        for c in group:
            out.append(f"  q={c.q} g={c.g}: {c.n_candidates} models"
                       f" scanned, {c.n_accepted} with h={h},"
                       f" {len(c.classes)} class"
                       f"{'es' if len(c.classes) != 1 else ''}")
            for rec in c.classes:
                out.append(f"    {rec.describe()}   [t={rec.t},"
                           f" L={list(rec.l_coeffs)},"
                           f" N={list(rec.place_counts)},"
                           f" models={rec.n_models}]")
        if total == 0:
            out.append("  no such example")
    return "\n".join(out) + "\n"


def expected_cell_target(q: int, g: int, h: int) -> int:
    """Ramified-place count t forced by (q, h) for an exponent-two field."""
    t = h.bit_length() + (1 if q % 2 == 1 else 0)
    assert exponent_two_class_number(q, t) == h
    return t
