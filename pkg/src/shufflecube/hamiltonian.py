"""Hamiltonian cycles for SSQ and BSQ: factor cycles, snake products, fixtures.

Both topologies are block products, so a Hamiltonian cycle of the whole graph
is built by folding a boustrophedon sweep over the factor cycles, innermost
tail first.  Two explicit 6-bit cycles (one per topology) are embedded as
fixtures: validating them against the adjacency oracles pins down the tail's
mod-4 semantics and the block rules end to end.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ConstructionError, ResourceLimitError
from .words import Dimension, VertexWord, h4
from .topology import (
    TopologyKind,
    block_graph,
    B_SSQ_LABEL,
    C4_LABEL,
    D_BSQ_LABEL,
    adjacent,
    materialize,
    MATERIALIZE_CAP,
)


@dataclass(frozen=True)
class FactorCycle:
    """A Hamiltonian cycle of one factor block graph."""

    label: str
    nodes: tuple[int, ...]


@dataclass(frozen=True)
class HamiltonianCycle:
    """A cyclic vertex sequence (first vertex not repeated at the end)."""

    kind: TopologyKind
    n: int
    vertices: tuple[VertexWord, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def factor_cycle(label: str) -> FactorCycle:
    """Deterministic Hamiltonian cycle of a factor graph (lexicographic DFS from 0)."""
    bg = block_graph(label)
    start = bg.nodes[0]
    path = [start]
    used = {start}

    def extend() -> bool:
        if len(path) == len(bg.nodes):
            return path[0] in bg.adj[path[-1]]
        for y in bg.adj[path[-1]]:
            if y not in used:
                path.append(y)
                used.add(y)
                if extend():
                    return True
                used.discard(y)
                path.pop()
        return False

    found = extend()
    assert found, f"factor graph {label} must be Hamiltonian"
    return FactorCycle(label, tuple(path))


def snake_product(outer: Sequence[int], inner: Sequence, combine=lambda g, h: (g, h)) -> list:
    """Boustrophedon Hamiltonian cycle of the product of two cycles.

    Sweeps the inner cycle as a path at each outer node, alternating
    direction, stepping one outer edge between sweeps and closing through the
    outer cycle's wrap-around edge.  Needs both cycle lengths even to close.
    """
    if len(inner) % 2:
        raise ConstructionError(f"inner cycle length {len(inner)} is odd; the sweep cannot close")
    if len(outer) % 2:
        raise ConstructionError(f"outer cycle length {len(outer)} is odd; the sweep cannot close")
    out = []
    for c, g in enumerate(outer):
        sweep = inner if c % 2 == 0 else reversed(inner)
        out.extend(combine(g, h) for h in sweep)
    return out


_FACTOR_LABEL = {
    TopologyKind.SSQ: B_SSQ_LABEL,
    TopologyKind.BSQ: D_BSQ_LABEL,
}


def hamiltonian_cycle(kind: TopologyKind, dim: Dimension) -> HamiltonianCycle:
    """Deterministic Hamiltonian cycle of SSQ_n or BSQ_n via folded snake products."""
    if kind not in _FACTOR_LABEL:
        raise ValueError(f"Hamiltonian construction covers SSQ and BSQ, not {kind.value}")
    block_nodes = factor_cycle(_FACTOR_LABEL[kind]).nodes
    count = 4 * len(block_nodes) ** dim.k
    if count > MATERIALIZE_CAP:
        raise ResourceLimitError(f"{kind.value}_{dim.n} cycle has {count} vertices, above the cap")
    cycle = list(factor_cycle(C4_LABEL).nodes)
    width = 2
    for _ in range(dim.k):
        cycle = snake_product(block_nodes, cycle, combine=lambda g, h: (g << width) | h)
        width += 4
    return HamiltonianCycle(kind, dim.n, tuple(cycle))


@dataclass(frozen=True)
class CycleCheck:
    ok: bool
    reason: str = ""
    witness: tuple | None = None


def validate_cycle(kind: TopologyKind, dim: Dimension, vertices: Sequence[VertexWord]) -> CycleCheck:
    """Check a cyclic sequence is a Hamiltonian cycle of the given topology."""
    g = materialize(kind, dim.n)
    seen = set()
    for w in vertices:
        if w not in g.index:
            return CycleCheck(False, "not a vertex of the topology", (w,))
        if w in seen:
            return CycleCheck(False, "duplicate vertex", (w,))
        seen.add(w)
    if len(seen) != g.num_vertices:
        missing = next(w for w in g.words if w not in seen)
        return CycleCheck(
            False,
            f"covers {len(seen)} of {g.num_vertices} vertices",
            (missing,),
        )
    for i, w in enumerate(vertices):
        nxt = vertices[(i + 1) % len(vertices)]
        if not adjacent(kind, dim, w, nxt):
            return CycleCheck(False, "consecutive vertices not adjacent", (w, nxt))
    return CycleCheck(True)


def step_block_changes(cycle: HamiltonianCycle) -> set[int]:
    """h4 of every consecutive step; a valid product cycle yields {1}."""
    dim = Dimension(cycle.n)
    vs = cycle.vertices
    return {h4(vs[i], vs[(i + 1) % len(vs)], dim) for i in range(len(vs))}


_H1_TEXT = """
000000 000100 001000 001100 110000 110100 111000 111100
111101 111001 110101 110001 001101 001001 000101 000001
000010 000110 001010 001110 110010 110110 111010 111110
111111 111011 110111 110011 001111 001011 000111 000011
"""

_H2_TEXT = """
000000 010000 100000 110000 001100 011100 101100 111100
001000 011000 101000 111000 000100 010100 100100 110100
110101 000101 010101 100101 111001 001001 011001 101001
111101 001101 011101 101101 110001 000001 010001 100001
100010 110010 000010 010010 101110 111110 001110 011110
101010 111010 001010 011010 100110 110110 000110 010110
010111 100111 110111 000111 011011 101011 111011 001011
011111 101111 111111 001111 010011 100011 110011 000011
"""


def fixture_h1() -> HamiltonianCycle:
    """Reference 32-vertex cycle of SSQ_6 (pins the adjacency semantics)."""
    return HamiltonianCycle(TopologyKind.SSQ, 6, tuple(int(s, 2) for s in _H1_TEXT.split()))


def fixture_h2() -> HamiltonianCycle:
    """Reference 64-vertex cycle of BSQ_6 (pins the adjacency semantics)."""
    return HamiltonianCycle(TopologyKind.BSQ, 6, tuple(int(s, 2) for s in _H2_TEXT.split()))
