"""Sparse exact linear algebra over Fraction and Gaussian-rational scalars.

Vectors are dicts mapping column index to a nonzero scalar.  The scalar type
only needs field arithmetic (+, -, *, /) and truthiness, so the same
elimination code serves plain rationals and Gaussian rationals.
"""
from __future__ import annotations

from fractions import Fraction


class GQ:
    """Gaussian rational re + im*i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def __add__(self, other):
        other = _coerce(other)
        return GQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GQ(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return GQ(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        return GQ(self.re * other.re - self.im * other.im,
                  self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GQ((self.re * other.re + self.im * other.im) / d,
                  (self.im * other.re - self.re * other.im) / d)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GQ):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self) -> "GQ":
        return GQ(self.re, -self.im)

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i)"


def _coerce(x):
    if isinstance(x, GQ):
        return x
    return GQ(x)


GQ_ZERO = GQ(0)
GQ_ONE = GQ(1)
GQ_I = GQ(0, 1)


def vec_add(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, v in y.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out

def vec_scale(c, x: dict) -> dict:
    if not c:
        return {}
    return {k: c * v for k, v in x.items()}


def reduce_vector(vec: dict, basis: dict) -> dict:
    """Reduce vec against a pivot->row basis from sparse_rref; result has no
    support on pivot columns."""
    vec = dict(vec)
    while vec:
        p = min(vec)
        if p not in basis:
            break
        f = vec[p]
        for c, v in basis[p].items():
            s = vec.get(c, 0) - f * v
            if s:
                vec[c] = s
            else:
                vec.pop(c, None)
    return vec


def sparse_rref(rows) -> dict:
    """Gauss-Jordan elimination on sparse rows; returns {pivot_col: row},
    each row normalized to a unit pivot and reduced against all others."""
    basis: dict = {}
    for row in rows:
        row = reduce_vector(row, basis)
        if not row:
            continue
        p = min(row)
        inv = 1 / row[p] if not isinstance(row[p], GQ) else GQ_ONE / row[p]
        row = {c: inv * v for c, v in row.items()}
        # back-substitute into existing rows so the basis stays fully reduced
        for q, other in basis.items():
            f = other.get(p)
            if f:
                for c, v in row.items():
                    s = other.get(c, 0) - f * v
                    if s:
                        other[c] = s
                    else:
                        other.pop(c, None)
        basis[p] = row
    return basis


def rank(rows) -> int:
    return len(sparse_rref(rows))


def in_span(vec: dict, basis: dict) -> bool:
    return not reduce_vector(vec, basis)


def nullspace(rows, ncols: int) -> list:
    """Kernel basis of the matrix with the given sparse rows acting on
    coordinates 0..ncols-1.  Returns sparse vectors, one per free column."""
    basis = sparse_rref(rows)
    free = [c for c in range(ncols) if c not in basis]
    out = []
    for f in free:
        v = {f: _one_like(basis)}
        for p, row in basis.items():
            c = row.get(f)
            if c:
                v[p] = -c
        out.append(v)
    return out


def _one_like(basis):
    for row in basis.values():
        for v in row.values():
            if isinstance(v, GQ):
                return GQ_ONE
            return Fraction(1)
    return Fraction(1)
