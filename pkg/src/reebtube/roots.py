"""Reduced root systems of types A, B, C, D, E6, E7 with exact coordinates.

Coordinate conventions:

  A_r   sum-zero hyperplane of R^{r+1}; roots e_i - e_j (i != j),
        simple roots a_i = e_i - e_{i+1}, highest root e_1 - e_{r+1}.
  B_r   R^r; roots {+-e_i +- e_j : i < j} and {+-e_i}; a_r = e_r;
        highest root e_1 + e_2.
  C_r   R^r; roots {+-e_i +- e_j : i < j} and {+-2e_i}; a_r = 2e_r;
        highest root 2e_1.
  D_r   R^r; roots {+-e_i +- e_j : i < j}; a_r = e_{r-1} + e_r;
        highest root e_1 + e_2.
  E6    subset of R^8 orthogonal to e_6 - e_7 and e_7 + e_8.
  E7    subset of R^8 orthogonal to e_7 + e_8.

The inner product is norm_scale times the standard dot product, with
norm_scale fixed per system so the highest root has squared length 2
(scale 1 everywhere except C, where it is 1/2).

Positive roots carry a deterministic total order: ascending height, ties
broken lexicographically on the simple-root coefficient vector.  Everything
downstream (structure-constant signs in particular) depends on this order,
so it must never change.

All data is immutable after construction; every function here is pure.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

RootVector = tuple  # tuple of Fraction, length = ambient dimension

FAMILIES = ("A", "B", "C", "D", "E6", "E7")

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 7),
}


def _vec(n: int, entries: dict) -> RootVector:
    return tuple(Fraction(entries.get(i, 0)) for i in range(n))


def _neg(v: RootVector) -> RootVector:
    return tuple(-x for x in v)


def _add(a: RootVector, b: RootVector) -> RootVector:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: RootVector, b: RootVector) -> RootVector:
    return tuple(x - y for x, y in zip(a, b))


def _dot(a: RootVector, b: RootVector) -> Fraction:
    return sum(x * y for x, y in zip(a, b))


@dataclass(eq=False)
class RootSystem:
    """A reduced root system together with its fixed positive-root order."""

    family: str
    rank: int
    ambient_dim: int
    roots: list            # positive roots in order, then their negatives
    simple_roots: list
    positive_roots: list
    highest_root: RootVector
    norm_scale: Fraction
    # derived lookups
    _root_index: dict = field(repr=False, default_factory=dict)
    _pos_index: dict = field(repr=False, default_factory=dict)
    _coeffs: dict = field(repr=False, default_factory=dict)

    def is_root(self, v: RootVector) -> bool:
        return v in self._root_index

    def root_index(self, v: RootVector) -> int:
        try:
            return self._root_index[v]
        except KeyError:
            raise ValueError(f"{v} is not a root of {self.family}_{self.rank}") from None

    def pos_index(self, v: RootVector) -> int:
        try:
            return self._pos_index[v]
        except KeyError:
            raise ValueError(f"{v} is not a positive root of {self.family}_{self.rank}") from None

    def is_positive(self, v: RootVector) -> bool:
        return v in self._pos_index


def _raw_roots(family: str, rank: int):
    """Enumerate (all_roots, simple_roots, positive_roots, scale)."""
    r = rank
    if family == "A":
        n = r + 1
        pos = [_sub(_vec(n, {i: 1}), _vec(n, {j: 1}))
               for i in range(n) for j in range(n) if i < j]
        simples = [_vec(n, {i: 1, i + 1: -1}) for i in range(r)]
        return pos, simples, Fraction(1)
    if family in ("B", "C", "D"):
        n = r
        pos = []
        for i in range(n):
            for j in range(i + 1, n):
                pos.append(_vec(n, {i: 1, j: 1}))
                pos.append(_vec(n, {i: 1, j: -1}))
        if family == "B":
            pos += [_vec(n, {i: 1}) for i in range(n)]
            simples = [_vec(n, {i: 1, i + 1: -1}) for i in range(r - 1)] + [_vec(n, {r - 1: 1})]
            return pos, simples, Fraction(1)
        if family == "C":
            pos += [_vec(n, {i: 2}) for i in range(n)]
            simples = [_vec(n, {i: 1, i + 1: -1}) for i in range(r - 1)] + [_vec(n, {r - 1: 2})]
            return pos, simples, Fraction(1, 2)
        simples = [_vec(n, {i: 1, i + 1: -1}) for i in range(r - 1)] + [_vec(n, {r - 2: 1, r - 1: 1})]
        return pos, simples, Fraction(1)
    # E6 / E7 inside R^8
    half = Fraction(1, 2)
    if rank == 6:
        pos = []
        for i in range(5):
            for j in range(i):
                pos.append(_vec(8, {i: 1, j: 1}))
                pos.append(_vec(8, {i: 1, j: -1}))
        # 1/2(sum_{v=1..5} +-e_v - e_6 - e_7 + e_8), even number of minus signs among the first five
        for eps in itertools.product((1, -1), repeat=5):
            if sum(1 for s in eps if s < 0) % 2 == 0:
                pos.append(tuple([half * s for s in eps] + [-half, -half, half]))
        a1 = tuple(half * s for s in (1, -1, -1, -1, -1, -1, -1, 1))
        simples = [a1, _vec(8, {0: 1, 1: 1}), _vec(8, {1: 1, 0: -1}), _vec(8, {2: 1, 1: -1}),
                   _vec(8, {3: 1, 2: -1}), _vec(8, {4: 1, 3: -1})]
        return pos, simples, Fraction(1)
    pos = []
    for i in range(6):
        for j in range(i):
            pos.append(_vec(8, {i: 1, j: 1}))
            pos.append(_vec(8, {i: 1, j: -1}))
    pos.append(_vec(8, {7: 1, 6: -1}))
    # 1/2(sum_{v=1..6} +-e_v - e_7 + e_8), odd number of minus signs among the first six
    for eps in itertools.product((1, -1), repeat=6):
        if sum(1 for s in eps if s < 0) % 2 == 1:
            pos.append(tuple([half * s for s in eps] + [-half, half]))
    a1 = tuple(half * s for s in (1, -1, -1, -1, -1, -1, -1, 1))
    simples = [a1, _vec(8, {0: 1, 1: 1}), _vec(8, {1: 1, 0: -1}), _vec(8, {2: 1, 1: -1}),
               _vec(8, {3: 1, 2: -1}), _vec(8, {4: 1, 3: -1}), _vec(8, {5: 1, 4: -1})]
    return pos, simples, Fraction(1)


def _normalize_family(family: str, rank: int):
    fam = family.upper()
    if fam in ("E6", "E7"):
        return "E", int(fam[1])
    return fam, rank


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the root system of the given family and rank.

    Valid ranks: A r>=1, B r>=2, C r>=3, D r>=4, E r in {6, 7}.  The result
    is cached and shared; treat it as immutable.
    """
    fam, rank = _normalize_family(family, rank)
    if fam not in _RANK_BOUNDS:
        raise ValueError(f"unknown family {family!r}; expected one of A, B, C, D, E6, E7")
    lo, hi = _RANK_BOUNDS[fam]
    if rank < lo or (hi is not None and rank > hi):
        span = f"{lo} <= r <= {hi}" if hi is not None else f"r >= {lo}"
        raise ValueError(f"rank {rank} out of range for family {fam}: valid range is {span}")

    pos_raw, simples, scale = _raw_roots(fam, rank)
    ambient = len(simples[0])

    # simple-root coefficients: solve the Gram system once per root
    gram = [[_dot(a, b) for b in simples] for a in simples]

    def solve(target):
        n = len(simples)
        m = [row[:] + [_dot(simples[i], target)] for i, row in enumerate(gram)]
        for col in range(n):
            piv = next(i for i in range(col, n) if m[i][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            pv = m[col][col]
            m[col] = [x / pv for x in m[col]]
            for i in range(n):
                if i != col and m[i][col] != 0:
                    f = m[i][col]
                    m[i] = [x - f * y for x, y in zip(m[i], m[col])]
        return tuple(m[i][n] for i in range(n))

    coeffs = {}
    for b in pos_raw:
        c = solve(b)
        if any(x.denominator != 1 or x < 0 for x in c):
            raise AssertionError(f"positive root {b} is not a nonnegative integer "
                                 f"combination of the simple roots")
        ci = tuple(int(x) for x in c)
        coeffs[b] = ci
        coeffs[_neg(b)] = tuple(-x for x in ci)

    pos = sorted(pos_raw, key=lambda b: (sum(coeffs[b]), coeffs[b]))
    roots = pos + [_neg(b) for b in pos]
    delta = pos[-1]

    rs = RootSystem(
        family=fam if fam != "E" else f"E{rank}",
        rank=rank,
        ambient_dim=ambient,
        roots=roots,
        simple_roots=simples,
        positive_roots=pos,
        highest_root=delta,
        norm_scale=scale,
        _root_index={v: i for i, v in enumerate(roots)},
        _pos_index={v: i for i, v in enumerate(pos)},
        _coeffs=coeffs,
    )
    if inner(rs, delta, delta) != 2:
        raise AssertionError("normalization failed: highest root squared length != 2")
    return rs


def inner(rs: RootSystem, a: RootVector, b: RootVector) -> Fraction:
    """Normalized inner product: norm_scale times the standard dot product."""
    if len(a) != rs.ambient_dim or len(b) != rs.ambient_dim:
        raise ValueError(f"dimension mismatch: expected vectors of length {rs.ambient_dim}")
    return rs.norm_scale * _dot(a, b)


def cartan_integer(rs: RootSystem, b: RootVector, a: RootVector) -> int:
    """Cartan integer 2(b,a)/(a,a); always one of 0, +-1, +-2, +-3."""
    if not rs.is_root(a):
        raise ValueError(f"{a} is not a root")
    if not rs.is_root(b):
        raise ValueError(f"{b} is not a root")
    v = 2 * inner(rs, b, a) / inner(rs, a, a)
    assert v.denominator == 1
    return int(v)


def root_string(rs: RootSystem, a: RootVector, b: RootVector) -> tuple:
    """Return (p, q) for the a-string through b:
    p = max{n : b - n*a is a root}, q = max{n : b + n*a is a root}."""
    if not rs.is_root(a) or not rs.is_root(b):
        raise ValueError("root_string arguments must be roots")
    if b == a or b == _neg(a):
        raise ValueError("root_string requires b != +-a")
    p = 0
    v = _sub(b, a)
    while rs.is_root(v):
        p += 1
        v = _sub(v, a)
    q = 0
    v = _add(b, a)
    while rs.is_root(v):
        q += 1
        v = _add(v, a)
    return p, q


def simple_coefficients(rs: RootSystem, a: RootVector) -> tuple:
    """Integer coefficients of a over the simple roots (all of one sign)."""
    try:
        return rs._coeffs[a]
    except KeyError:
        raise ValueError(f"{a} is not a root") from None


def weyl_orbit(rs: RootSystem, a: RootVector) -> set:
    """Orbit of a under the group generated by the simple reflections."""
    if not rs.is_root(a):
        raise ValueError(f"{a} is not a root")
    seen = {a}
    frontier = [a]
    while frontier:
        nxt = []
        for b in frontier:
            for s in rs.simple_roots:
                c = 2 * inner(rs, b, s) / inner(rs, s, s)
                img = _sub(b, tuple(c * x for x in s))
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


def root_to_strings(v: RootVector) -> list:
    """Serialize a root as a list of exact rational strings like '-1/2'."""
    return [str(x) for x in v]


def format_root(v: RootVector) -> str:
    """Readable form: 'e1-e2', '2e3', or '1/2(e1-e2+...+e8)' for half-integers."""
    if all(x.denominator == 1 for x in v):
        parts = []
        for i, x in enumerate(v):
            if x == 0:
                continue
            sign = "+" if x > 0 else "-"
            mag = abs(x)
            coef = "" if mag == 1 else str(mag)
            parts.append(f"{sign}{coef}e{i + 1}")
        if not parts:
            return "0"
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out
    doubled = tuple(2 * x for x in v)
    return "1/2(" + format_root(doubled) + ")"
