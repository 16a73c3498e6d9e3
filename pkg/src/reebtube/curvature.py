"""Exact curvature tensor and Jacobi operators on the tangent model p.

Tangent vectors are sparse dicts over the model's compact-basis indices with
Fraction coefficients; membership in p is validated where required.  The
curvature tensor is R(x, y)z = -[[x, y], z], so the operator R_v = R(., v)v
is symmetric with respect to g and nonnegative (compact type).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exactlinalg import GQ, nullspace, sparse_rref, reduce_vector
from .hermitian import HermitianSpaceModel, maximal_abelian
from .roots import _sub


@dataclass(eq=False)
class JacobiOperator:
    """Symmetric operator x -> R(x, v)v, as exact columns over the p basis."""

    base_vector: dict
    matrix: list            # matrix[j] = column dict {p position -> Fraction}


@dataclass(eq=False)
class NoncompactSplit:
    """Tangent roots split by whether the highest root minus them is a root."""

    zero_set: list
    one_set: list


@dataclass(eq=False)
class K0Decomposition:
    k0_dim: int
    p0_dim: int
    g0_dim: int
    p1_complex_dim: int
    commutant_dim: int                # complex dimension
    commutant_commutative: bool
    commutant_center_dim: int         # number of isotypic blocks


def _require_p(model: HermitianSpaceModel, x: dict, what: str = "operand"):
    if not model.in_p(x):
        raise ValueError(f"{what} is not in p")


def curvature_tensor(model: HermitianSpaceModel, x: dict, y: dict, z: dict) -> dict:
    """R(x, y)z = -[[x, y], z]."""
    for name, v in (("x", x), ("y", y), ("z", z)):
        _require_p(model, v, name)
    out = model.brk(model.brk(x, y), z)
    return {k: -v for k, v in out.items()}


def jacobi_operator(model: HermitianSpaceModel, v: dict) -> JacobiOperator:
    """Matrix of x -> R(x, v)v over the ordered p basis."""
    _require_p(model, v, "v")
    cols = []
    for idx in model.p_positions:
        img = curvature_tensor(model, {idx: Fraction(1)}, v, v)
        cols.append({model.p_pos_of[k]: c for k, c in img.items()})
    return JacobiOperator(base_vector=dict(v), matrix=cols)


def split_noncompact(model: HermitianSpaceModel) -> NoncompactSplit:
    rs = model.rs
    d = rs.highest_root
    zero, one = [], []
    for a in model.delta_M_pos:
        if a == d:
            continue
        if rs.is_root(_sub(d, a)) and rs.is_positive(_sub(d, a)):
            one.append(a)
        else:
            zero.append(a)
    return NoncompactSplit(zero_set=zero, one_set=one)


def jacobi_spectrum_u_delta(model: HermitianSpaceModel) -> dict:
    """Exact eigendecomposition of R_{u_delta/sqrt2} = (1/2) R_{u_delta}.

    Returns {eigenvalue: basis of the eigenspace}, eigenvalues 0, 1/2, 2.
    Raises if the three kernels do not exhaust p.
    """
    op = jacobi_operator(model, model.u_vec(model.rs.highest_root))
    n = len(model.p_positions)
    out = {}
    total = 0
    for lam in (Fraction(0), Fraction(1, 2), Fraction(2)):
        rows: dict = {}
        for j, col in enumerate(op.matrix):
            for i, c in col.items():
                rows.setdefault(i, {})[j] = c / 2
        for j in range(n):
            if lam:
                rows.setdefault(j, {})
                s = rows[j].get(j, Fraction(0)) - lam
                if s:
                    rows[j][j] = s
                else:
                    rows[j].pop(j, None)
        kernel = nullspace(list(rows.values()), n)
        out[lam] = kernel
        total += len(kernel)
    if total != n:
        raise AssertionError(
            f"eigenvalues 0, 1/2, 2 span {total} of {n} tangent dimensions")
    return out


def is_lie_triple(model: HermitianSpaceModel, subspace: list) -> bool:
    """True iff [[x, y], z] stays in the span for all triples from the list.

    The list must be linearly independent; a dependent list raises.
    """
    for v in subspace:
        _require_p(model, v)
    rref = sparse_rref([dict(v) for v in subspace])
    if len(rref) != len(subspace):
        raise ValueError("spanning list is linearly dependent")
    # fast path: subspace aligned with the compact basis
    if all(len(v) == 1 for v in subspace):
        support = {next(iter(v)) for v in subspace}
        for x in support:
            for y in support:
                mid = model.table.get((x, y))
                if not mid:
                    continue
                for z in support:
                    out = model.brk(mid, {z: Fraction(1)})
                    if not set(out) <= support:
                        return False
        return True
    for x in subspace:
        for y in subspace:
            mid = model.brk(x, y)
            if not mid:
                continue
            for z in subspace:
                out = model.brk(mid, z)
                if out and reduce_vector(out, rref):
                    return False
    return True


def _k0_basis(model: HermitianSpaceModel):
    """Span basis of [p(0), p(0)] in compact coordinates."""
    split = split_noncompact(model)
    p0 = []
    for a in split.zero_set:
        p0.append(model.u_index(a))
        p0.append(model.v_index(a))
    brackets = []
    for i in range(len(p0)):
        for j in range(i + 1, len(p0)):
            b = model.table.get((p0[i], p0[j]))
            if b:
                brackets.append(dict(b))
    basis = list(sparse_rref(brackets).values())
    return split, p0, basis


def k0_decomposition(model: HermitianSpaceModel) -> K0Decomposition:
    """Dimensions of k(0) = [p(0), p(0)], g(0), and the commutant of the
    k(0)-action on p(1).

    The commutant is the space of J-commuting endomorphisms of p(1) that
    commute with ad(x) on p(1) for every x in a k(0) basis, solved exactly
    over the Gaussian rationals.  Its complex dimension equals the number of
    irreducible components when the action is multiplicity-free, which is
    certified by the commutant being commutative.
    """
    split, p0, k0 = _k0_basis(model)
    n1 = len(split.one_set)
    ucol = {a: i for i, a in enumerate(split.one_set)}

    # complex matrices of ad(x) on p(1) in the basis {u_a}, J acting as i
    mats = []
    for x in k0:
        m = {}
        for a in split.one_set:
            img = model.brk(x, model.u_vec(a))
            for k, c in img.items():
                kind, pi = model.g_labels[k]
                b = model.rs.positive_roots[pi]
                if b not in ucol:
                    raise AssertionError("k(0) action does not preserve p(1)")
                key = (ucol[b], ucol[a])
                prev = m.get(key, GQ(0))
                m[key] = prev + (GQ(c) if kind == "u" else GQ(0, c))
        mats.append({k: v for k, v in m.items() if v})

    # solve T M = M T for all M; unknowns t_{ij}, i*n1 + j
    rows = []
    for m in mats:
        by_row: dict = {}
        by_col: dict = {}
        for (i, j), c in m.items():
            by_row.setdefault(i, []).append((j, c))
            by_col.setdefault(j, []).append((i, c))
        for i in range(n1):
            for j in range(n1):
                row = {}
                for k, c in by_col.get(j, ()):      # T_{ik} M_{kj}
                    row[i * n1 + k] = row.get(i * n1 + k, GQ(0)) + c
                for k, c in by_row.get(i, ()):      # -M_{ik} T_{kj}
                    row[k * n1 + j] = row.get(k * n1 + j, GQ(0)) - c
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    commutant = nullspace(rows, n1 * n1)

    cmats = [{divmod(k, n1): c for k, c in vec.items()} for vec in commutant]
    commutative = True
    for i in range(len(cmats)):
        for j in range(i + 1, len(cmats)):
            if _mat_mul(cmats[i], cmats[j]) != _mat_mul(cmats[j], cmats[i]):
                commutative = False
                break
        if not commutative:
            break

    center_dim = _center_dim(cmats, n1)

    return K0Decomposition(
        k0_dim=len(k0),
        p0_dim=len(p0),
        g0_dim=len(k0) + len(p0),
        p1_complex_dim=n1,
        commutant_dim=len(commutant),
        commutant_commutative=commutative,
        commutant_center_dim=center_dim,
    )


def _center_dim(cmats, n1):
    """Dimension of {T in commutant : [T, S] = 0 for all commutant S}."""
    if not cmats:
        return 0
    rows = []
    for s in cmats:
        # unknown coefficients x_j of T = sum x_j cmats[j]; equation T S - S T = 0
        entry_rows: dict = {}
        for j, m in enumerate(cmats):
            diff = {}
            for key, c in _mat_mul(m, s).items():
                diff[key] = diff.get(key, GQ(0)) + c
            for key, c in _mat_mul(s, m).items():
                diff[key] = diff.get(key, GQ(0)) - c
            for key, c in diff.items():
                if c:
                    entry_rows.setdefault(key, {})[j] = c
        rows.extend(entry_rows.values())
    return len(nullspace(rows, len(cmats)))


def _mat_mul(a, b):
    out = {}
    bb: dict = {}
    for (k, j), c in b.items():
        bb.setdefault(k, []).append((j, c))
    for (i, k), ca in a.items():
        for j, cb in bb.get(k, ()):
            key = (i, j)
            s = out.get(key, GQ(0)) + ca * cb
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def verify_accoeff(model: HermitianSpaceModel, a_coeffs: dict, c_coeffs: dict) -> dict:
    """R_xi x for xi = -sum a_b v_b and x = sum c_b u_b over the flat's roots.

    The result equals kappa * sum_b c_b a_b^2 u_b with kappa = 4 under this
    normalization; callers should measure kappa once by the single-root case
    rather than assume it.
    """
    om = maximal_abelian(model)
    allowed = set(om.roots)
    for coeffs, name in ((a_coeffs, "a_coeffs"), (c_coeffs, "c_coeffs")):
        extra = set(coeffs) - allowed
        if extra:
            raise ValueError(f"{name} supported outside the flat's roots: {sorted(extra)}")
    xi = {}
    for b, c in a_coeffs.items():
        if c:
            xi[model.v_index(b)] = Fraction(-c)
    x = {}
    for b, c in c_coeffs.items():
        if c:
            x[model.u_index(b)] = Fraction(c)
    return curvature_tensor(model, x, xi, xi)


# ---------------------------------------------------------------------------
# sampled-property helpers shared by the verification suites

def random_p_vector(model: HermitianSpaceModel, rng: random.Random, terms: int = 4) -> dict:
    out = {}
    for _ in range(terms):
        idx = model.p_positions[rng.randrange(len(model.p_positions))]
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        if c:
            out[idx] = out.get(idx, Fraction(0)) + c
    return {k: v for k, v in out.items() if v}
