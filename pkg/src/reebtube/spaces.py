"""Space specifications: the FAMILY:r=<int>[:k=<int>] grammar and the catalog
of supported Hermitian symmetric spaces."""
from __future__ import annotations

import re
from dataclasses import dataclass

from . import chevalley, hermitian, roots


@dataclass(frozen=True)
class SpaceSpec:
    family: str    # A, B, C, D, E
    rank: int
    node: int      # marked simple root; 0 only as the projective case parameter

    def serialize(self) -> str:
        return f"{self.family}:r={self.rank}:k={self.node}"

    @property
    def family_name(self) -> str:
        return f"E{self.rank}" if self.family == "E" else self.family


_NODE_DEFAULTS = {"B": lambda r: 1, "C": lambda r: r, "E": lambda r: r}

_RANK_BOUNDS = {"A": (1, None), "B": (2, None), "C": (3, None), "D": (4, None), "E": (6, 7)}


def parse_space_spec(text: str) -> SpaceSpec:
    """Parse FAMILY:r=<int>[:k=<int>]; syntax errors name the offending position."""
    s = text.strip()

    def fail(pos, msg):
        raise ValueError(f"invalid space spec {text!r} at position {pos}: {msg}")

    if not s:
        fail(0, "empty spec; expected FAMILY:r=<int>[:k=<int>]")
    fam = s[0].upper()
    if fam not in _RANK_BOUNDS:
        fail(0, f"unknown family {s[0]!r}; expected one of A, B, C, D, E")
    i = 1
    if s[i:i + 3] != ":r=":
        fail(i, "expected ':r='")
    i += 3
    m = re.match(r"\d+", s[i:])
    if not m:
        fail(i, "expected an integer rank")
    rank = int(m.group())
    i += m.end()
    node = None
    if i < len(s):
        if s[i:i + 3] != ":k=":
            fail(i, "expected ':k=' or end of spec")
        i += 3
        m = re.match(r"\d+", s[i:])
        if not m:
            fail(i, "expected an integer node")
        node = int(m.group())
        i += m.end()
        if i != len(s):
            fail(i, "trailing characters")

    lo, hi = _RANK_BOUNDS[fam]
    if rank < lo or (hi is not None and rank > hi):
        span = f"{lo} <= r <= {hi}" if hi is not None else f"r >= {lo}"
        raise ValueError(f"rank {rank} out of range for family {fam} ({span})")
    if node is None:
        if fam not in _NODE_DEFAULTS:
            raise ValueError(f"family {fam} requires an explicit node k")
        node = _NODE_DEFAULTS[fam](rank)
    _check_node(fam, rank, node)
    return SpaceSpec(family=fam, rank=rank, node=node)


def _check_node(fam: str, rank: int, node: int):
    valid = {
        "A": set(range(0, rank + 1)),
        "B": {1},
        "C": {rank},
        "D": {1, rank - 1, rank},
        "E": {rank},
    }[fam]
    if node not in valid:
        raise ValueError(f"node {node} is not available for {fam}:r={rank}; "
                         f"valid nodes: {sorted(valid)}")


def requires_model_node(spec: SpaceSpec):
    """Reject node 0, which only parametrizes the projective tube case."""
    if spec.node == 0:
        raise ValueError("k=0 is valid only as the focal parameter of the "
                         "projective tube case; pick a marked node 1..r")


def space_name(spec: SpaceSpec) -> str:
    f, r, k = spec.family, spec.rank, spec.node
    if f == "A":
        if k in (1, r):
            return f"CP^{r}"
        return f"G_{k}(C^{r + 1})"
    if f == "B":
        return f"G_2+(R^{2 * r + 1})"
    if f == "C":
        return f"Sp_{r}/U_{r}"
    if f == "D":
        return f"G_2+(R^{2 * r})" if k == 1 else f"SO_{2 * r}/U_{r}"
    return "E_6/Spin_10 U_1" if r == 6 else "E_7/E_6 U_1"


def canonicalize(spec: SpaceSpec):
    """Canonical node for reporting, plus an isometry note when it differs."""
    f, r, k = spec.family, spec.rank, spec.node
    if f == "A" and 2 * k > r + 1:
        k2 = r + 1 - k
        return SpaceSpec(f, r, k2), (f"node {k} builds an isometric copy of the "
                                     f"node-{k2} space G_{k2}(C^{r + 1})")
    if f == "D" and k == r - 1:
        return SpaceSpec(f, r, r), (f"node {r - 1} builds an isometric copy of the "
                                    f"node-{r} space SO_{2 * r}/U_{r} "
                                    f"(diagram symmetry)")
    return spec, None


def tube_case_for(spec: SpaceSpec):
    """Canonical tube case id for this space, or None."""
    c, _ = canonicalize(spec)
    f, r, k = c.family, c.rank, c.node
    if f == "A" and k == 1:
        return "CPk_in_CPr"
    if f == "A" and 2 <= k and 2 * k <= r + 1:
        return "Gk_in_Gk"
    if f == "D" and k == 1:
        return "CPr1_in_G2R2r"
    if f == "D" and k == r and r >= 5:
        return "SO_in_SO"
    return None


def build_model(spec: SpaceSpec) -> hermitian.HermitianSpaceModel:
    requires_model_node(spec)
    rs = roots.build_root_system(spec.family_name, spec.rank)
    sc = chevalley.structure_constants(rs)
    return hermitian.build_space(rs, sc, spec.node)


def catalog_entries(filter_text: str = "") -> list:
    """One row per (family, node class), for the list command."""
    rows = [
        {"family": "A", "nodes": "k = 1..r", "name": "G_k(C^{r+1}) = SU_{r+1}/S(U_k U_{r+1-k})",
         "complex_dim": "k(r+1-k)", "space_rank": "min(k, r+1-k)",
         "tube": "CPk_in_CPr (k = 1) or Gk_in_Gk (2 <= k, 2k <= r+1)"},
        {"family": "B", "nodes": "k = 1", "name": "G_2+(R^{2r+1}) = SO_{2r+1}/SO_{2r-1}SO_2",
         "complex_dim": "2r-1", "space_rank": "2", "tube": "no-tube"},
        {"family": "C", "nodes": "k = r", "name": "Sp_r/U_r",
         "complex_dim": "r(r+1)/2", "space_rank": "r", "tube": "no-tube"},
        {"family": "D", "nodes": "k = 1", "name": "G_2+(R^{2r}) = SO_{2r}/SO_{2r-2}SO_2",
         "complex_dim": "2r-2", "space_rank": "2", "tube": "CPr1_in_G2R2r"},
        {"family": "D", "nodes": "k = r (or r-1)", "name": "SO_{2r}/U_r",
         "complex_dim": "r(r-1)/2", "space_rank": "floor(r/2)",
         "tube": "SO_in_SO (r >= 5)"},
        {"family": "E6", "nodes": "k = 6", "name": "E_6/Spin_10 U_1",
         "complex_dim": "16", "space_rank": "2", "tube": "no-tube"},
        {"family": "E7", "nodes": "k = 7", "name": "E_7/E_6 U_1",
         "complex_dim": "27", "space_rank": "3", "tube": "no-tube"},
    ]
    if filter_text:
        needle = filter_text.lower()
        rows = [r for r in rows if needle in " ".join(str(v) for v in r.values()).lower()]
    return rows
