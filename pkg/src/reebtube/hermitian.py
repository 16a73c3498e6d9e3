"""Compact Hermitian symmetric space models from a coefficient-one node.

Marking a simple root a_k whose coefficient in the highest root is 1 splits
the positive roots into the isotropy part (coefficient 0 at k) and the
tangent part (coefficient 1 at k).  The model carries the compact real form
on the basis {i h_1..i h_r} + {u_a, v_a : a > 0}, with the tangent space

    p = span{u_a, v_a : a in Delta_M^+},   pairs (u_a, v_a) adjacent,

complex structure J u_a = v_a, J v_a = -u_a, and metric g = -B restricted
to p, so g(u_a, u_a) = 4/(a,a) and g(u_delta, u_delta) = 2.

The full bracket table of the compact basis is materialized once through
the complex Chevalley engine; all heavier modules expand against it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import chevalley as ch
from .exactlinalg import GQ, nullspace
from .roots import RootSystem, RootVector, inner, simple_coefficients, _add, _sub, _neg


@dataclass(eq=False)
class Omega:
    """A maximal set of pairwise strongly orthogonal tangent roots, delta first."""

    roots: tuple

    def __len__(self):
        return len(self.roots)


@dataclass(eq=False)
class HermitianSpaceModel:
    rs: RootSystem
    sc: ch.StructureConstants
    node: int                      # 1-based marked simple root
    delta_K_pos: list
    delta_M_pos: list
    p_basis: list                  # labels ("u", a) / ("v", a), pairs adjacent
    metric_diag: dict              # compact index -> Fraction, on p indices
    complex_rank: int
    # compact-basis machinery
    g_labels: list = field(repr=False, default_factory=list)
    g_index: dict = field(repr=False, default_factory=dict)
    table: dict = field(repr=False, default_factory=dict)
    p_positions: list = field(repr=False, default_factory=list)
    p_pos_of: dict = field(repr=False, default_factory=dict)
    _omega: Omega = field(repr=False, default=None)
    _omega_verified: bool = field(repr=False, default=False)

    # -- coordinate helpers ------------------------------------------------

    def u_index(self, a: RootVector) -> int:
        return self.g_index[("u", self.rs.pos_index(a))]

    def v_index(self, a: RootVector) -> int:
        return self.g_index[("v", self.rs.pos_index(a))]

    def u_vec(self, a: RootVector) -> dict:
        return {self.u_index(a): Fraction(1)}

    def v_vec(self, a: RootVector) -> dict:
        return {self.v_index(a): Fraction(1)}

    def in_p(self, x: dict) -> bool:
        return all(i in self.p_pos_of for i in x)

    def brk(self, x: dict, y: dict) -> dict:
        """Bracket of sparse compact-coordinate vectors."""
        out = {}
        for i, ci in x.items():
            for j, cj in y.items():
                t = self.table.get((i, j))
                if t:
                    c = ci * cj
                    for k, ck in t.items():
                        s = out.get(k, 0) + c * ck
                        if s:
                            out[k] = s
                        else:
                            out.pop(k, None)
        return out

    def metric(self, x: dict, y: dict) -> Fraction:
        """g = -B restricted to p (diagonal on the compact basis)."""
        acc = Fraction(0)
        for i, ci in x.items():
            cj = y.get(i)
            if cj:
                acc += ci * cj * self.metric_diag[i]
        return acc

    def jay(self, x: dict) -> dict:
        """Complex structure J on p coordinates."""
        out = {}
        for i, c in x.items():
            kind, pi = self.g_labels[i]
            if kind == "u":
                out[self.g_index[("v", pi)]] = c
            elif kind == "v":
                out[self.g_index[("u", pi)]] = -c
            else:
                raise ValueError("J is defined on p only")
        return out

    # -- conversions to the complex engine ----------------------------------

    def to_algebra_element(self, x: dict) -> ch.AlgebraElement:
        rs = self.rs
        out = ch.zero_element(rs)
        for i, c in x.items():
            kind, pi = self.g_labels[i]
            if kind == "h":
                out = out + ch.elem_h(rs, tuple(GQ(0, c) if j == pi else GQ(0)
                                                for j in range(rs.rank)))
            elif kind == "u":
                out = out + ch.elem_u(rs, rs.positive_roots[pi]).scale(GQ(c))
            else:
                out = out + ch.elem_v(rs, rs.positive_roots[pi]).scale(GQ(c))
        return out

    def from_algebra_element(self, z: ch.AlgebraElement) -> dict:
        if not ch.is_compact_form(self.sc, z):
            raise ValueError("element is not in the compact real form")
        rs = self.rs
        out = {}
        for i, c in enumerate(z.h_part):
            if c.im:
                out[self.g_index[("h", i)]] = c.im
        half = len(rs.roots) // 2
        for ia, c in z.e_part.items():
            if ia >= half:
                continue
            if c.re:
                out[self.g_index[("u", ia)]] = c.re
            if c.im:
                out[self.g_index[("v", ia)]] = c.im
        return out


def marked_nodes(rs: RootSystem) -> list:
    """1-based indices of simple roots with coefficient 1 in the highest root."""
    m = simple_coefficients(rs, rs.highest_root)
    return [i + 1 for i, c in enumerate(m) if c == 1]


@lru_cache(maxsize=None)
def build_space(rs: RootSystem, sc: ch.StructureConstants, k: int) -> HermitianSpaceModel:
    """Assemble the model for the marked node k (cached; treat as immutable)."""
    if k not in marked_nodes(rs):
        raise ValueError(f"node {k} is not marked for {rs.family}_{rs.rank}: "
                         f"valid nodes are {marked_nodes(rs)}")
    kk = k - 1
    dK, dM = [], []
    for a in rs.positive_roots:
        c = simple_coefficients(rs, a)[kk]
        if c == 0:
            dK.append(a)
        elif c == 1:
            dM.append(a)
        else:
            raise AssertionError(f"root {a} has coefficient {c} at a marked node")

    labels = [("h", i) for i in range(rs.rank)]
    for pi in range(len(rs.positive_roots)):
        labels.append(("u", pi))
        labels.append(("v", pi))
    index = {lbl: i for i, lbl in enumerate(labels)}

    model = HermitianSpaceModel(
        rs=rs, sc=sc, node=k,
        delta_K_pos=dK, delta_M_pos=dM,
        p_basis=[], metric_diag={}, complex_rank=0,
        g_labels=labels, g_index=index,
    )
    model.table = _compact_table(model)

    for a in dM:
        model.p_basis.append(("u", a))
        model.p_basis.append(("v", a))
        gval = 4 / inner(rs, a, a)
        iu, iv = model.u_index(a), model.v_index(a)
        model.metric_diag[iu] = gval
        model.metric_diag[iv] = gval
        model.p_positions.append(iu)
        model.p_positions.append(iv)
    model.p_pos_of = {idx: n for n, idx in enumerate(model.p_positions)}

    model._omega = Omega(roots=tuple(_omega_roots(rs, k)))
    model.complex_rank = len(model._omega)
    return model


def _compact_table(model: HermitianSpaceModel) -> dict:
    """Bracket table of the compact basis, built through the complex engine."""
    rs, sc = model.rs, model.sc
    basis_elems = []
    for lbl in model.g_labels:
        kind, pi = lbl
        if kind == "h":
            basis_elems.append(ch.elem_h(rs, tuple(GQ(0, 1) if j == pi else GQ(0)
                                                   for j in range(rs.rank))))
        elif kind == "u":
            basis_elems.append(ch.elem_u(rs, rs.positive_roots[pi]))
        else:
            basis_elems.append(ch.elem_v(rs, rs.positive_roots[pi]))

    half = len(rs.roots) // 2
    table = {}
    n = len(model.g_labels)
    for i in range(n):
        for j in range(i + 1, n):
            z = ch.bracket(sc, basis_elems[i], basis_elems[j])
            out = {}
            for ii, c in enumerate(z.h_part):
                if c:
                    if c.re:
                        raise AssertionError("compact bracket left the real form")
                    out[model.g_index[("h", ii)]] = c.im
            for ia, c in z.e_part.items():
                if ia >= half:
                    continue
                if c.re:
                    out[model.g_index[("u", ia)]] = c.re
                if c.im:
                    out[model.g_index[("v", ia)]] = c.im
            # verify the negative-root coefficients pair up (real form closure)
            for ia, c in z.e_part.items():
                if ia < half:
                    cb = z.e_part.get(ia + half, GQ(0))
                    if cb != -c.conjugate():
                        raise AssertionError("compact bracket left the real form")
            if out:
                table[(i, j)] = out
                table[(j, i)] = {k: -v for k, v in out.items()}
    return table


def real_bracket(model: HermitianSpaceModel, x: ch.AlgebraElement,
                 y: ch.AlgebraElement) -> ch.AlgebraElement:
    """Bracket of two compact-real-form elements, via the complex engine."""
    if not ch.is_compact_form(model.sc, x):
        raise ValueError("left operand is not in the compact real form")
    if not ch.is_compact_form(model.sc, y):
        raise ValueError("right operand is not in the compact real form")
    z = ch.bracket(model.sc, x, y)
    assert ch.is_compact_form(model.sc, z)
    return z


def _omega_roots(rs: RootSystem, k: int) -> list:
    """Explicit maximal strongly orthogonal sets, highest root first."""
    fam, r = rs.family, rs.rank
    n = rs.ambient_dim

    def vec(entries):
        return tuple(Fraction(entries.get(i, 0)) for i in range(n))

    if fam == "A":
        m = min(k, r + 1 - k)
        return [vec({i: 1, r - i: -1}) for i in range(m)]
    if fam == "B":
        return [vec({0: 1, 1: 1}), vec({0: 1, 1: -1})]
    if fam == "C":
        return [vec({i: 2}) for i in range(r)]
    if fam == "D" and k == 1:
        return [vec({0: 1, 1: 1}), vec({0: 1, 1: -1})]
    if fam == "D" and k == r:
        return [vec({2 * i: 1, 2 * i + 1: 1}) for i in range(r // 2)]
    if fam == "D" and k == r - 1:
        # image of the node-r set under the diagram symmetry e_r -> -e_r
        out = []
        for i in range(r // 2):
            ent = {2 * i: 1, 2 * i + 1: 1}
            if 2 * i + 1 == r - 1:
                ent[2 * i + 1] = -1
            out.append(vec(ent))
        return out
    if fam == "E6" and k == 6:
        return [rs.highest_root, vec({4: 1, 3: -1})]
    if fam == "E7" and k == 7:
        return [rs.highest_root, vec({5: 1, 4: -1}), vec({5: 1, 4: 1})]
    raise ValueError(f"no maximal abelian root list for ({fam}, node {k}); "
                     f"use the canonical node of this family")


def maximal_abelian(model: HermitianSpaceModel) -> Omega:
    """The flat's root set; verifies abelianness and maximality once."""
    om = model._omega
    if model._omega_verified:
        return om
    rs = model.rs
    dM = set(model.delta_M_pos)
    if rs.highest_root not in om.roots:
        raise AssertionError("highest root missing from the abelian set")
    lengths = {inner(rs, a, a) for a in om.roots}
    if len(lengths) != 1:
        raise AssertionError("abelian set mixes root lengths")
    for i, a in enumerate(om.roots):
        if a not in dM:
            raise AssertionError(f"{a} is not a tangent root")
        for b in om.roots[i + 1:]:
            if rs.is_root(_add(a, b)) or rs.is_root(_sub(a, b)):
                raise AssertionError(f"{a}, {b} are not strongly orthogonal")
            if model.brk(model.u_vec(a), model.u_vec(b)):
                raise AssertionError(f"[u_{a}, u_{b}] != 0")
    # maximality: the centralizer of the flat inside p is the flat itself
    cols = []
    for idx in model.p_positions:
        col = {}
        for a in om.roots:
            img = model.brk({idx: Fraction(1)}, model.u_vec(a))
            for kk, v in img.items():
                col[(a, kk)] = v
        cols.append(col)
    rows: dict = {}
    for j, col in enumerate(cols):
        for key, v in col.items():
            rows.setdefault(key, {})[j] = v
    kernel = nullspace(list(rows.values()), len(model.p_positions))
    if len(kernel) != len(om.roots):
        raise AssertionError(
            f"centralizer of the flat has dimension {len(kernel)}, expected {len(om.roots)}")
    model._omega_verified = True
    return om
