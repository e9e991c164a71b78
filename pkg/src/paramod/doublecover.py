"""Canonical-resolution combinatorics for double covers of abelian surfaces.

A branch-curve singularity configuration is a forest of infinitely-near
points with even multiplicities d_i = 2*m_i.  Resolving the double cover
branched over a curve of class with self-intersection L2 gives

    chi = (L2 - sum m_i(m_i - 1)) / 2,
    K^2 = 2*L2 - 2 * sum (m_i - 1)^2,

and the forest shape decides which points are negligible and whether a
consecutive-triple-point pair forces a non-minimal resolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from paramod.errors import ConsistencyError


@dataclass(frozen=True)
class ForestNode:
    id: str
    d: int
    parent: Optional[str] = None


@dataclass(frozen=True)
class SingularityForest:
    """Infinitely-near branch points; parent means 'in the first neighborhood of'."""

    nodes: tuple[ForestNode, ...]

    def __post_init__(self) -> None:
        ids = [n.id for n in self.nodes]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate node ids")
        known = set(ids)
        for n in self.nodes:
            if n.d < 2 or n.d % 2 != 0:
                raise ValueError(f"node {n.id}: multiplicity must be even and >= 2, got {n.d}")
            if n.parent is not None and n.parent not in known:
                raise ValueError(f"node {n.id}: unknown parent {n.parent}")
        for n in self.nodes:
            seen = {n.id}
            cur = n.parent
            while cur is not None:
                if cur in seen:
                    raise ValueError(f"parent cycle through {cur}")
                seen.add(cur)
                cur = self.node(cur).parent

    def node(self, node_id: str) -> ForestNode:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(f"unknown node id {node_id!r}")

    def children(self, node_id: str) -> list[ForestNode]:
        return [n for n in self.nodes if n.parent == node_id]

    def descendants(self, node_id: str) -> list[ForestNode]:
        out = []
        stack = [node_id]
        while stack:
            cur = stack.pop()
            for child in self.children(cur):
                out.append(child)
                stack.append(child.id)
        return out

    def depth(self, node_id: str) -> int:
        d = 0
        cur = self.node(node_id).parent
        while cur is not None:
            d += 1
            cur = self.node(cur).parent
        return d

    def max_depth(self) -> int:
        return max((self.depth(n.id) for n in self.nodes), default=0)


def forest(node_tuples: list[tuple]) -> SingularityForest:
    """Build a forest from (id, d) or (id, d, parent) tuples."""
    return SingularityForest(tuple(ForestNode(*t) for t in node_tuples))


@dataclass(frozen=True)
class CoverInvariants:
    chi: int
    K2_resolved: int
    negligible_ids: tuple[str, ...]
    has_33_pair: bool
    minimality_note: str

    def to_json(self) -> dict:
        return {
            "chi": self.chi,
            "K2_resolved": self.K2_resolved,
            "negligible_ids": list(self.negligible_ids),
            "has_33_pair": self.has_33_pair,
            "minimality_note": self.minimality_note,
        }


def is_negligible(f: SingularityForest, node_id: str) -> bool:
    """d = 2 at the point and d <= 2 at every point infinitely near to it."""
    n = f.node(node_id)
    if n.d != 2:
        return False
    return all(c.d <= 2 for c in f.descendants(node_id))


def detect_33_pairs(f: SingularityForest) -> list[tuple[str, str]]:
    """All (parent, child) pairs with multiplicities (2d, 2d+2), d >= 1.

    The d = 1 instance is the triple-point-with-infinitely-near-triple-point
    configuration whose resolution carries a (-1)-curve.
    """
    out = []
    for n in f.nodes:
        if n.parent is None:
            continue
        p = f.node(n.parent)
        if p.d >= 2 and n.d == p.d + 2:
            out.append((p.id, n.id))
    out.sort()
    return out


def invariants(L2: int, f: SingularityForest) -> CoverInvariants:
    """Resolution invariants of the double cover branched over the configuration.

    Raw formula values are reported as-is.  The note field records the two
    situations where the raw numbers do not tell the whole story: a
    consecutive-triple-point pair (the resolution is non-minimal and the
    minimal model gains K^2 + 1), and an all-negligible forest (the
    correction terms vanish identically, so chi = L2/2 and K^2 = 2*L2; in
    the chi = 1 classification context that case is excluded because it
    would force L2 = 2 and K^2 = 4).
    """
    if L2 <= 0 or L2 % 2 != 0:
        raise ValueError(f"L2 must be even and positive, got {L2}")
    ms = [n.d // 2 for n in f.nodes]
    drop_chi = sum(m * (m - 1) for m in ms)
    if (L2 - drop_chi) % 2 != 0:
        raise ConsistencyError(f"parity failure: L2={L2}, sum m(m-1)={drop_chi}")
    chi = (L2 - drop_chi) // 2
    k2 = 2 * L2 - 2 * sum((m - 1) ** 2 for m in ms)

    negligible = tuple(sorted(n.id for n in f.nodes if is_negligible(f, n.id)))
    pairs = detect_33_pairs(f)

    notes = []
    if pairs:
        notes.append(
            "resolution contains a (-1)-curve from the consecutive-triple-point "
            f"pair(s) {pairs}; the minimal model has K^2 = {k2 + 1}"
        )
    if f.nodes and len(negligible) == len(f.nodes):
        notes.append(
            "all singularities negligible: chi = L2/2 and K^2 = 2*L2 with no "
            "correction; excluded in the chi = 1 classification context "
            "(it would force L2 = 2, K^2 = 4)"
        )
    if f.max_depth() > 1:
        notes.append("chains of infinitely-near points deeper than one level are "
                     "beyond the classifier's case analysis")
    return CoverInvariants(chi, k2, negligible, bool(pairs), "; ".join(notes))


def branch_scenarios() -> list[dict]:
    """The three reduced branch configurations with a quadruple point.

    Each is mapped to its singularity forest and to invariants(4, .), which
    must come out chi = 1, K^2 = 6 for all three.
    """
    cases = [
        {
            "case": "(i)",
            "description": "irreducible curve, one ordinary quadruple point",
            "forest": forest([("p", 4)]),
            "surface_type_hint": "I",
        },
        {
            "case": "(ii)",
            "description": "irreducible curve, one ordinary quadruple point "
                           "plus one ordinary double point",
            "forest": forest([("p", 4), ("n", 2)]),
            "surface_type_hint": "I",
        },
        {
            "case": "(iii)",
            "description": "two irreducible halves, each with an ordinary double "
                           "point at p, meeting with intersection number 4 "
                           "(branch curve disconnected after resolution)",
            "forest": forest([("p", 4)]),
            "surface_type_hint": "II",
        },
    ]
    out = []
    for c in cases:
        inv = invariants(4, c["forest"])
        if (inv.chi, inv.K2_resolved) != (1, 6):
            raise ConsistencyError(
                f"branch case {c['case']} gives ({inv.chi}, {inv.K2_resolved}), want (1, 6)"
            )
        out.append({
            "case": c["case"],
            "description": c["description"],
            "nodes": [{"id": n.id, "d": n.d, "parent": n.parent} for n in c["forest"].nodes],
            "chi": inv.chi,
            "K2": inv.K2_resolved,
            "negligible_ids": list(inv.negligible_ids),
            "surface_type_hint": c["surface_type_hint"],
        })
    return out


def forest_from_json(payload: dict) -> tuple[int, SingularityForest]:
    """Parse {"L2": n, "nodes": [{"id", "d", "parent"}]} input."""
    if "L2" not in payload or "nodes" not in payload:
        raise ValueError("forest input needs 'L2' and 'nodes' keys")
    nodes = tuple(
        ForestNode(str(n["id"]), int(n["d"]), n.get("parent"))
        for n in payload["nodes"]
    )
    return int(payload["L2"]), SingularityForest(nodes)
