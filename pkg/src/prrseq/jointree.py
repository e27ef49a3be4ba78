"""Spanning-tree validation of a rule's critical set.

A successor rule produces one full-period cycle exactly when its critical
states come in conjugate pairs, each pair bridges two register cycles,
every non-root cycle is designated by exactly one pair, and following the
bridges from any cycle reaches the root.  This module rebuilds that tree
from the implemented predicate by exhaustive scan, so it checks the rule
against first principles rather than against the generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .core import State
from .registers import (
    Cycle,
    CycleKind,
    OrderOutOfRangeError,
    decompose,
    prr_step_value,
)
from .rules import CriticalPredicate, RuleKind, RuleSpec, critical_predicate

MAX_TREE_ORDER = 20


class NotPairedError(ValueError):
    """A critical state's conjugate is not critical."""


class NotSpanningError(ValueError):
    """The critical pairs do not link the cycles into one rooted tree."""


@dataclass(frozen=True)
class TreeEdge:
    """One conjugate pair, oriented from the cycle it designates."""

    child: int
    parent: int
    child_state: State
    parent_state: State


@dataclass(frozen=True)
class CycleTree:
    """Cycles as nodes (sorted by representative) plus the pair edges."""

    nodes: Tuple[Cycle, ...]
    edges: Tuple[TreeEdge, ...]
    root: int

    def to_dot(self) -> str:
        """Graphviz rendering; rotation-type cycles are ellipses,
        complementing-type cycles are boxes."""
        lines = ["digraph jointree {"]
        for i, cyc in enumerate(self.nodes):
            shape = "ellipse" if cyc.kind is CycleKind.PCR else "box"
            lines.append(
                f'  n{i} [label="{cyc.representative}", shape={shape}];'
            )
        for e in self.edges:
            lines.append(f'  n{e.child} -> n{e.parent} [label="{e.child_state}"];')
        lines.append("}")
        return "\n".join(lines)


@lru_cache(maxsize=4)
def _cycle_index(n: int):
    """Cycles sorted by representative plus a value -> node index table."""
    structure = decompose(n)
    nodes = tuple(sorted(structure.cycles, key=lambda c: c.representative.value))
    index_of = [0] * (1 << n)
    for i, cyc in enumerate(nodes):
        for v in cyc.state_values():
            index_of[v] = i
    return nodes, index_of


def _designated_member(
    kind: RuleKind,
    n: int,
    lo: int,
    hi: int,
    nodes: Tuple[Cycle, ...],
    index_of: List[int],
) -> int:
    """Which member of the conjugate pair (lo, hi) lies in the child cycle.

    The psi-class rules mark the child as the cycle containing the shared
    tail extended by 1; the upsilon-class rules mark the cycle containing
    the zero-ended relabeling of the tail; sala marks the cycle whose pair
    member steps directly onto that cycle's representative.
    """
    if kind is RuleKind.SALA:
        mask = (1 << n) - 1
        cands = [
            m
            for m in (lo, hi)
            if prr_step_value(m, n, mask) == nodes[index_of[m]].representative.value
        ]
        if len(cands) == 1:
            return cands[0]
        if len(cands) == 2:
            # Tail is a necklace and a co-necklace at once (the all-zero
            # tail); the later cycle in representative order is the child.
            return max(cands, key=lambda m: nodes[index_of[m]].representative.value)
        raise NotSpanningError(
            f"cannot orient conjugate pair ({State(lo, n)}, {State(hi, n)})"
        )
    if kind in (RuleKind.PSI1, RuleKind.PSI2):
        landmark = (lo << 1) | 1  # c1..c_{n-1},1
    else:
        if lo & 1 == 0:
            landmark = lo  # 0,c1..c_{n-1} already ends in 0
        else:
            mid_mask = (1 << (n - 2)) - 1
            mid = lo >> 1  # c1..c_{n-2}
            c1 = (lo >> (n - 2)) & 1
            landmark = ((mid ^ mid_mask) << 2) | c1
    child_idx = index_of[landmark]
    if index_of[lo] == child_idx:
        return lo
    if index_of[hi] == child_idx:
        return hi
    raise NotSpanningError(
        f"pair ({State(lo, n)}, {State(hi, n)}) does not touch its designated "
        f"cycle ({nodes[child_idx].representative})"
    )


def extract_tree(
    spec: RuleSpec, critical: Optional[CriticalPredicate] = None
) -> CycleTree:
    """Scan all states, pair the critical ones, and build the cycle tree.

    critical overrides the predicate the spec argument implies; the
    override is what makes negative controls possible.  Raises
    NotPairedError if some
    critical state's conjugate is not critical, NotSpanningError if the
    pairs do not form one tree spanning every cycle.
    """
    n = spec.n
    if n > MAX_TREE_ORDER:
        raise OrderOutOfRangeError(
            f"tree extraction supports n <= {MAX_TREE_ORDER}, got {n}"
        )
    if critical is None:
        critical = critical_predicate(spec)
    nodes, index_of = _cycle_index(n)
    size = 1 << n
    top = 1 << (n - 1)
    deviations = list(filter(critical, range(size)))
    flags = bytearray(size)
    for v in deviations:
        flags[v] = 1
    pairs = []
    for v in deviations:
        if not flags[v ^ top]:
            raise NotPairedError(
                f"state {State(v, n)} is critical but its conjugate "
                f"{State(v ^ top, n)} is not"
            )
        if not v & top:
            pairs.append(v)
    if len(pairs) != len(nodes) - 1:
        raise NotSpanningError(
            f"{len(deviations)} critical states cannot span {len(nodes)} cycles "
            f"(need exactly {2 * (len(nodes) - 1)})"
        )
    parent_edge: Dict[int, TreeEdge] = {}
    for lo in pairs:
        hi = lo | top
        if index_of[lo] == index_of[hi]:
            raise NotSpanningError(
                f"conjugate pair ({State(lo, n)}, {State(hi, n)}) lies inside "
                f"one cycle ({nodes[index_of[lo]].representative})"
            )
        member = _designated_member(spec.kind, n, lo, hi, nodes, index_of)
        other = member ^ top
        edge = TreeEdge(
            child=index_of[member],
            parent=index_of[other],
            child_state=State(member, n),
            parent_state=State(other, n),
        )
        if edge.child in parent_edge:
            raise NotSpanningError(
                f"cycle ({nodes[edge.child].representative}) is designated by "
                f"two conjugate pairs"
            )
        parent_edge[edge.child] = edge
    roots = [i for i in range(len(nodes)) if i not in parent_edge]
    if len(roots) != 1:
        raise NotSpanningError(f"expected one root cycle, found {len(roots)}")
    root = roots[0]
    reached = {root}
    for i in range(len(nodes)):
        path = []
        j = i
        while j not in reached:
            path.append(j)
            if len(path) > len(nodes):
                raise NotSpanningError(
                    f"cycle ({nodes[i].representative}) cannot reach the root"
                )
            j = parent_edge[j].parent
        reached.update(path)
    edges = tuple(parent_edge[i] for i in sorted(parent_edge))
    return CycleTree(nodes=nodes, edges=edges, root=root)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking a critical set against the tree conditions."""

    spec: RuleSpec
    cycle_count: int
    deviation_count: int
    root_representative: State
    ok: bool
    failures: Tuple[str, ...]
    tree: CycleTree

    def summary(self) -> str:
        status = "ok" if self.ok else "FAILED"
        return (
            f"{self.spec.spec_string()}: {status}, {self.cycle_count} cycles, "
            f"{self.deviation_count} critical states, root ({self.root_representative})"
        )


def verify_critical_set(
    spec: RuleSpec, critical: Optional[CriticalPredicate] = None
) -> ValidationReport:
    """Validate a rule from first principles.

    Structural defects (unpaired states, broken tree) raise as in
    extract_tree.  Ordering defects, which are what distinguish the rule
    families, come back in the report: psi-class and sala trees must root
    at the all-zero cycle with every parent preceding its child by
    representative, upsilon-class trees must root at the all-one cycle
    and alternate cycle kinds along every edge, with each complementing
    child placed after its grandparent anchor.
    """
    tree = extract_tree(spec, critical)
    nodes = tree.nodes
    failures: List[str] = []
    root_rep = nodes[tree.root].representative
    if spec.kind in (RuleKind.SALA, RuleKind.PSI1, RuleKind.PSI2):
        if root_rep.value != 0:
            failures.append(f"root is ({root_rep}), expected the all-zero cycle")
        for e in tree.edges:
            p = nodes[e.parent].representative
            c = nodes[e.child].representative
            if p.value >= c.value:
                failures.append(f"parent ({p}) does not precede child ({c})")
    else:
        if root_rep.value != (1 << spec.n) - 1:
            failures.append(f"root is ({root_rep}), expected the all-one cycle")
        parent_of = {e.child: e.parent for e in tree.edges}
        ccr_reps = [
            node.representative.value
            for node in nodes
            if node.kind is CycleKind.CCR
        ]
        least_ccr = min(ccr_reps) if ccr_reps else None
        for e in tree.edges:
            child = nodes[e.child]
            parent = nodes[e.parent]
            if child.kind is parent.kind:
                failures.append(
                    f"edge ({child.representative}) -> ({parent.representative}) "
                    f"does not alternate cycle kinds"
                )
                continue
            if child.kind is CycleKind.CCR:
                if e.parent == tree.root:
                    if child.representative.value != least_ccr:
                        failures.append(
                            f"cycle ({child.representative}) hangs off the root "
                            f"but is not the least complementing cycle"
                        )
                else:
                    anchor = parent_of.get(e.parent)
                    if anchor is None:
                        failures.append(
                            f"parent of ({child.representative}) has no anchor"
                        )
                    elif (
                        nodes[anchor].representative.value
                        >= child.representative.value
                    ):
                        failures.append(
                            f"cycle ({child.representative}) does not follow its "
                            f"parent's anchor ({nodes[anchor].representative})"
                        )
    return ValidationReport(
        spec=spec,
        cycle_count=len(nodes),
        deviation_count=2 * len(tree.edges),
        root_representative=root_rep,
        ok=not failures,
        failures=tuple(failures),
        tree=tree,
    )
