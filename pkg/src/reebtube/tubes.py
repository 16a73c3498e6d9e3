"""Tubes around totally geodesic focal submanifolds: shape operator, principal
curvatures, structure tensor, and focal-set reconstruction.

A focal model partitions the tangent roots into

    t0  = Delta_M^+(0)                    tangent, Jacobi eigenvalue 0
    t1  = Delta_f minus t0                tangent, Jacobi eigenvalue 1/2
    nu1 = Delta_M^+(1) minus t1           normal, Jacobi eigenvalue 1/2

with the highest-root pair supplying the travel direction u_delta and the
Reeb direction v_delta (Jacobi eigenvalue 2).  Along the normal geodesic the
shape operator of the tube of radius t is block diagonal with values

    0                    on t0 blocks,
    -tan(t/sqrt2)/sqrt2  on t1 blocks,
    cot(t/sqrt2)/sqrt2   on nu1 blocks,
    sqrt2 cot(sqrt2 t)   on the Reeb direction,

for 0 < t < pi/sqrt2.  Block structure, multiplicities and subspace
identifications stay exact; only the trigonometric values are floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .curvature import is_lie_triple, jacobi_operator, split_noncompact
from .hermitian import HermitianSpaceModel
from .roots import _add, _sub

T_MAX = math.pi / math.sqrt(2)

CASE_IDS = ("CPk_in_CPr", "Gk_in_Gk", "CPr1_in_G2R2r", "SO_in_SO")
CASE_ALIASES = {"i": "CPk_in_CPr", "ii": "Gk_in_Gk", "iii": "CPr1_in_G2R2r", "iv": "SO_in_SO"}


@dataclass(eq=False)
class FocalModel:
    model: HermitianSpaceModel
    case_id: str
    params: dict                   # case parameters, e.g. {"r": 5, "k": 2}
    delta_f: tuple                 # tangent roots of the focal submanifold
    t0: tuple                      # delta_f roots with Jacobi eigenvalue 0
    t1: tuple                      # delta_f roots with Jacobi eigenvalue 1/2
    nu1: tuple                     # normal roots with Jacobi eigenvalue 1/2


@dataclass(eq=False)
class TubeModel:
    focal: FocalModel
    radius: float
    curvatures: dict               # {"a": .., "b": 0.0, "c": .., "d": ..}
    multiplicities: tuple          # (mult b, mult d, mult c, mult a)
    basis_labels: list             # ("u"/"v", root) blocks then ("xi",)
    shape_op: np.ndarray
    phi: np.ndarray


def canonical_case(case: str) -> str:
    c = CASE_ALIASES.get(case.lower().strip("()"), case)
    if c not in CASE_IDS:
        raise ValueError(f"unknown tube case {case!r}; expected one of "
                         f"{CASE_IDS} or i..iv")
    return c


def focal_data(model: HermitianSpaceModel, case_id: str, sigma_dim: int = None) -> FocalModel:
    """Focal submanifold data for one of the four tube cases.

    sigma_dim is only used (and required) by the projective case, where it is
    the complex dimension of the focal projective subspace.
    """
    case = canonical_case(case_id)
    rs = model.rs
    fam, r, node = rs.family, rs.rank, model.node

    def vec(entries):
        return tuple(Fraction(entries.get(i, 0)) for i in range(rs.ambient_dim))

    params = {"r": r}
    if case == "CPk_in_CPr":
        if fam != "A" or node != 1:
            raise ValueError("projective tube case needs an A-family model at node 1")
        if sigma_dim is None:
            raise ValueError("projective tube case needs the focal dimension k")
        k = sigma_dim
        if not 0 <= k <= r - 1:
            raise ValueError(f"focal dimension {k} out of range 0 <= k <= {r - 1}")
        params["k"] = k
        delta_f = [vec({0: 1, m: -1}) for m in range(1, k + 1)]
    elif case == "Gk_in_Gk":
        if fam != "A" or not (2 <= node and 2 * node <= r + 1):
            raise ValueError("Grassmannian tube case needs an A-family model at a "
                             "node k with 2 <= k and 2k <= r+1")
        if sigma_dim is not None:
            raise ValueError("sigma_dim applies only to the projective case")
        k = node
        params["k"] = k
        delta_f = [vec({i: 1, j: -1}) for i in range(k) for j in range(k, r)]
    elif case == "CPr1_in_G2R2r":
        if fam != "D" or node != 1:
            raise ValueError("real-Grassmannian tube case needs a D-family model at node 1")
        if sigma_dim is not None:
            raise ValueError("sigma_dim applies only to the projective case")
        delta_f = [vec({0: 1, j: -1}) for j in range(1, r)]
    else:
        if fam != "D" or node != r or r < 5:
            raise ValueError("SO_{2r}/U_r tube case needs a D-family model at node r, r >= 5")
        if sigma_dim is not None:
            raise ValueError("sigma_dim applies only to the projective case")
        delta_f = [vec({i: 1, j: 1}) for i in range(1, r) for j in range(i + 1, r)]

    dM = set(model.delta_M_pos)
    delta = rs.highest_root
    if delta in delta_f:
        raise AssertionError("highest root must be normal to the focal submanifold")
    if not set(delta_f) <= dM:
        raise AssertionError("focal roots must be tangent roots")
    split = split_noncompact(model)
    zero = set(split.zero_set)
    if not zero <= set(delta_f):
        raise AssertionError("the 0-eigenvalue block must be tangent to the focal set")
    t0 = tuple(a for a in model.delta_M_pos if a in zero)
    t1 = tuple(a for a in model.delta_M_pos if a in set(delta_f) - zero)
    nu1 = tuple(a for a in model.delta_M_pos
                if a in set(split.one_set) - set(delta_f))

    fm = FocalModel(model=model, case_id=case, params=params,
                    delta_f=tuple(a for a in model.delta_M_pos if a in set(delta_f)),
                    t0=t0, t1=t1, nu1=nu1)
    span = [model.u_vec(a) for a in fm.delta_f] + [model.v_vec(a) for a in fm.delta_f]
    if span and not is_lie_triple(model, span):
        raise AssertionError("focal root span is not a Lie triple system")
    return fm


def _curvature_values(t: float) -> dict:
    s2 = math.sqrt(2)
    return {
        "a": s2 * math.cos(s2 * t) / math.sin(s2 * t),
        "b": 0.0,
        "c": math.cos(t / s2) / (s2 * math.sin(t / s2)),
        "d": -math.sin(t / s2) / (s2 * math.cos(t / s2)),
    }


def _check_radius(t: float):
    if not 0.0 < t < T_MAX:
        raise ValueError(f"radius {t} out of range (0, pi/sqrt2 = {T_MAX:.6f})")
    if abs(math.cos(t / math.sqrt(2))) < 1e-12 or abs(math.sin(math.sqrt(2) * t)) < 1e-12:
        raise ValueError(f"radius {t} sits on a block singularity")


def tube_shape_operator(focal: FocalModel, t: float) -> TubeModel:
    """Closed-form shape operator of the radius-t tube, block diagonal over
    [t0 pairs, t1 pairs, nu1 pairs, Reeb direction]."""
    _check_radius(t)
    vals = _curvature_values(t)
    model = focal.model
    labels = []
    diag = []
    for block, key in ((focal.t0, "b"), (focal.t1, "d"), (focal.nu1, "c")):
        for a in block:
            labels.append(("u", a))
            labels.append(("v", a))
            diag.extend([vals[key], vals[key]])
    labels.append(("xi",))
    diag.append(vals["a"])
    n = len(diag)
    shape = np.diag(diag)
    phi = np.zeros((n, n))
    for i in range(0, n - 1, 2):
        phi[i + 1, i] = 1.0     # phi u = v
        phi[i, i + 1] = -1.0    # phi v = -u
    mults = (2 * len(focal.t0), 2 * len(focal.t1), 2 * len(focal.nu1), 1)
    return TubeModel(focal=focal, radius=t, curvatures=vals, multiplicities=mults,
                     basis_labels=labels, shape_op=shape, phi=phi)


def reeb_isometry_check(tube: TubeModel) -> dict:
    """Structural J-invariance of the principal curvature spaces inside the
    maximal complex subbundle, plus the commutator residual max |S phi - phi S|."""
    n = tube.shape_op.shape[0]
    diag = np.diag(tube.shape_op)
    groups: dict = {}
    for i in range(n - 1):          # exclude the Reeb direction
        groups.setdefault(float(diag[i]), set()).add(i)
    structural = True
    for members in groups.values():
        # each u_a slot must travel with its v_a partner
        for i in members:
            partner = i + 1 if tube.basis_labels[i][0] == "u" else i - 1
            if partner not in members:
                structural = False
    comm = tube.shape_op @ tube.phi - tube.phi @ tube.shape_op
    return {"structural": structural, "residual": float(np.abs(comm).max())}


def principal_curvature_identities(tube: TubeModel) -> list:
    """Residuals of the closed-form principal-curvature relations."""
    a, b, c, d = (tube.curvatures[k] for k in "abcd")
    half = 0.5
    entries = [
        ("quadratic-c", abs(2 * c * c - 2 * a * c - 1)),
        ("quadratic-d", abs(2 * d * d - 2 * a * d - 1)),
        ("zero-block", abs(b * (b - a))),
        ("eigen-b", abs(b * b - a * b - 0.0)),
        ("eigen-c", abs(c * c - a * c - half)),
        ("eigen-d", abs(d * d - a * d - half)),
        ("sum-cd", abs(c + d - a)),
        ("product-cd", abs(c * d + half)),
    ]
    return [{"id": name, "residual": float(v)} for name, v in entries]


def focal_shape_operator(focal: FocalModel, t: float) -> dict:
    """Eigenvalues of the focal displacement's shape operator, by block.

    Jacobi-field quotients: x/(1 - x t) on eigenvalue-0 blocks and
    (sin(t/s2)/s2 + x cos(t/s2)) / (cos(t/s2) - x s2 sin(t/s2)) on the
    eigenvalue-1/2 tangent block.  The eigenvalue-a block is empty in every
    realized case; its formula value is reported anyway.
    """
    _check_radius(t)
    vals = _curvature_values(t)
    s2 = math.sqrt(2)
    a, b, d = vals["a"], vals["b"], vals["d"]
    d_num = math.sin(t / s2) / s2 + d * math.cos(t / s2)
    d_den = math.cos(t / s2) - d * s2 * math.sin(t / s2)
    blocks = [
        {"block": "b", "size": 2 * len(focal.t0), "eigenvalue": b / (1.0 - b * t)},
        {"block": "d", "size": 2 * len(focal.t1), "eigenvalue": d_num / d_den},
        {"block": "a", "size": 0, "eigenvalue": a / (1.0 - a * t)},
    ]
    realized = [e["eigenvalue"] for e in blocks if e["size"]]
    return {"blocks": blocks,
            "max_abs_realized": max((abs(v) for v in realized), default=0.0)}


def focal_set_reconstruction(tube: TubeModel) -> dict:
    """Recover both focal tangent/normal splits from the tube's blocks.

    T_pP = p(0) + d-block, nu_pP = Cu_delta + c-block; the roles of c and d
    swap for the opposite focal set Q.
    """
    focal = tube.focal
    model = focal.model
    delta = model.rs.highest_root
    tp = tuple(focal.t0 + focal.t1)
    tq = tuple(focal.t0 + focal.nu1)

    def triple(rootlist):
        span = [model.u_vec(a) for a in rootlist] + [model.v_vec(a) for a in rootlist]
        return True if not span else is_lie_triple(model, span)

    all_roots = set(model.delta_M_pos)
    return {
        "TP_roots": tp,
        "TQ_roots": tq,
        "nuP_roots": tuple(focal.nu1) + (delta,),
        "nuQ_roots": tuple(focal.t1) + (delta,),
        "dims": {"TP_complex": len(tp), "TQ_complex": len(tq),
                 "nuP_complex": len(focal.nu1) + 1, "nuQ_complex": len(focal.t1) + 1},
        "lie_triple": {"TP": triple(tp), "TQ": triple(tq)},
        "complement_ok": set(tp) | set(focal.nu1) | {delta} == all_roots,
    }


def jacobi_ode_shape_operator(focal: FocalModel, times) -> dict:
    """Numeric oracle: integrate the matrix Jacobi equation Y'' + K Y = 0 with
    Y(0) = diag(I, 0), Y'(0) = diag(0, I) and return Y'(t) Y(t)^{-1}.

    K is the exact normalized Jacobi operator of the travel direction,
    restricted to the travel direction's orthogonal complement, converted to
    floats; no closed-form trigonometry enters.
    """
    from scipy.integrate import solve_ivp

    model = focal.model
    rs = model.rs
    delta = rs.highest_root
    op = jacobi_operator(model, model.u_vec(delta))
    order = []
    for block in (focal.t0, focal.t1, focal.nu1):
        for a in block:
            order.append(model.p_pos_of[model.u_index(a)])
            order.append(model.p_pos_of[model.v_index(a)])
    order.append(model.p_pos_of[model.v_index(delta)])
    n = len(order)
    k_mat = np.zeros((n, n))
    for jnew, jold in enumerate(order):
        for iold, c in op.matrix[jold].items():
            if iold == model.p_pos_of[model.u_index(delta)]:
                continue
            k_mat[order.index(iold), jnew] = float(c) / 2.0

    ntan = 2 * (len(focal.t0) + len(focal.t1))
    y0 = np.zeros((n, n))
    yp0 = np.zeros((n, n))
    y0[:ntan, :ntan] = np.eye(ntan)
    yp0[ntan:, ntan:] = np.eye(n - ntan)

    def rhs(_, state):
        y = state[: n * n].reshape(n, n)
        yp = state[n * n:].reshape(n, n)
        return np.concatenate([yp.ravel(), (-k_mat @ y).ravel()])

    times = sorted(times)
    sol = solve_ivp(rhs, (0.0, times[-1]), np.concatenate([y0.ravel(), yp0.ravel()]),
                    t_eval=times, rtol=1e-12, atol=1e-12, method="DOP853")
    out = {}
    for idx, t in enumerate(times):
        y = sol.y[: n * n, idx].reshape(n, n)
        yp = sol.y[n * n:, idx].reshape(n, n)
        out[t] = yp @ np.linalg.inv(y)
    return out


def shape_operator_matrix_error(focal: FocalModel, times) -> dict:
    """Max-norm gap between the closed-form S(t) and the ODE oracle."""
    numeric = jacobi_ode_shape_operator(focal, times)
    out = {}
    for t, mat in numeric.items():
        closed = tube_shape_operator(focal, t).shape_op
        out[t] = float(np.abs(mat - closed).max())
    return out
