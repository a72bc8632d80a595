"""Crystal-graph exploration and DOT/JSON export."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .crystal import e_star, f_star, relevant_residues
from .weights import ParityContext, Weight


@dataclass
class CrystalGraph:
    """Directed labeled graph over weights; nodes keyed by coefficient tuple."""

    nodes: List[Weight] = field(default_factory=list)
    edges: List[Tuple[Weight, Weight, int, str]] = field(default_factory=list)

    def to_json(self) -> dict:
        index = {w: i for i, w in enumerate(self.nodes)}
        return {
            "nodes": [list(w) for w in self.nodes],
            "edges": [
                {"from": index[a], "to": index[b], "r": r, "dir": d}
                for a, b, r, d in self.edges
            ],
        }

    def to_dot(self) -> str:
        index = {w: i for i, w in enumerate(self.nodes)}
        lines = ["digraph crystal {"]
        for i, w in enumerate(self.nodes):
            label = ",".join(str(c) for c in w)
            lines.append(f'  n{i} [label="{label}"];')
        for a, b, r, d in sorted(
            self.edges, key=lambda e: (index[e[0]], index[e[1]], e[2], e[3])
        ):
            lines.append(f'  n{index[a]} -> n{index[b]} [label="r={r},{d}"];')
        lines.append("}")
        return "\n".join(lines)


def crystal_component(
    ctx: ParityContext, lam: Weight, max_steps: int
) -> CrystalGraph:
    """Breadth-first exploration by e*/f* up to max_steps applications.

    Edges always point in the f-direction (source --f--> target); an e-move
    discovered from lam is recorded as target --f--> lam with the same r.
    Node order is discovery order, which is deterministic.
    """
    if max_steps < 0:
        raise ValueError("max_steps must be nonnegative")
    graph = CrystalGraph(nodes=[lam])
    seen: Dict[Weight, int] = {lam: 0}
    edge_set = set()
    queue = deque([(lam, 0)])
    while queue:
        w, dist = queue.popleft()
        if dist >= max_steps:
            continue
        for r in relevant_residues(ctx, w):
            for which, op in (("e", e_star), ("f", f_star)):
                out = op(ctx, w, r)
                if out is None:
                    continue
                if out not in seen:
                    seen[out] = dist + 1
                    graph.nodes.append(out)
                    queue.append((out, dist + 1))
                # one edge per unordered pair and residue; keep the
                # first-discovered orientation and direction label
                key = (min(w, out), max(w, out), ctx.reduce(r))
                if key not in edge_set:
                    edge_set.add(key)
                    graph.edges.append((w, out, ctx.reduce(r), which))
    return graph
