"""Adjacency oracles and graph materialization for the shuffle-cube family.

Supported kinds:

* Q    - the hypercube (Hamming-1 edges), included as a reference topology.
* SQ   - shuffle cube: a cross edge flips one 4-bit block by a value from the
         V-set selected by the vertex's two lowest bits; the 2-bit tail is a
         Hamming-1 Q_2.
* SSQ  - simplified shuffle cube: blocks restricted to pair1 in {00, 11}, all
         block flips drawn from V_00; the tail steps +-1 mod 4.
* BSQ  - balanced shuffle cube: a block edge moves pair1 by +-1 mod 4 and
         leaves pair2 alone or shifts it by (-1)^(pair1 low bit); the tail
         steps +-1 mod 4.
* BH   - balanced hypercube on radix-4 coordinate tuples (own vertex type).

The tail semantics for SSQ and BSQ follow the cyclic order 00,01,10,11; for Q
and SQ the tail is the Hamming-1 four-cycle.  Both are C4s, so no structural
result about SQ depends on the choice.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from collections import deque
from functools import lru_cache
from enum import Enum

from .errors import InvalidVertexError, ResourceLimitError
from .words import (
    Dimension,
    VertexWord,
    get_block,
    set_block,
    pair1,
    pair2,
    make_block,
    hamming,
)

MATERIALIZE_CAP = 1 << 20


class TopologyKind(str, Enum):
    Q = "Q"
    SQ = "SQ"
    SSQ = "SSQ"
    BSQ = "BSQ"
    BH = "BH"


# Flip-value sets indexed by the 2-bit tag; 1111 appears in both V_00 and V_11.
V_SETS = (
    frozenset({0b1111, 0b0001, 0b0010, 0b0011}),
    frozenset({0b0100, 0b0101, 0b0110, 0b0111}),
    frozenset({0b1000, 0b1001, 0b1010, 0b1011}),
    frozenset({0b1100, 0b1101, 0b1110, 0b1111}),
)


def v_set(tag: int) -> frozenset[int]:
    """The V-set row for a 2-bit tag."""
    if not 0 <= tag < 4:
        raise IndexError(f"V-set tag must be 0..3, got {tag}")
    return V_SETS[tag]


def is_valid_vertex(kind: TopologyKind, dim: Dimension, u: VertexWord) -> bool:
    """Whether u belongs to the vertex set of the given topology.

    Q, SQ and BSQ use all 2^n words; SSQ keeps only words whose blocks
    j >= 1 have pair1 in {00, 11}.
    """
    if kind is TopologyKind.BH:
        raise ValueError("BH vertices are coordinate tuples; use bh_neighbors")
    if not 0 <= u <= dim.mask:
        return False
    if kind is not TopologyKind.SSQ:
        return True
    return all(pair1(get_block(u, j, dim)) in (0, 3) for j in range(1, dim.k + 1))


def _require_valid(kind: TopologyKind, dim: Dimension, u: VertexWord) -> None:
    if not is_valid_vertex(kind, dim, u):
        raise InvalidVertexError(f"word {u:#0{dim.n + 2}b} is not a vertex of {kind.value}_{dim.n}")


def _tail_adjacent_mod4(a: int, b: int) -> bool:
    return (a - b) % 4 in (1, 3)


def _bsq_block_adjacent(bu: int, bv: int) -> bool:
    p1u, p2u = pair1(bu), pair2(bu)
    p1v, p2v = pair1(bv), pair2(bv)
    if (p1v - p1u) % 4 not in (1, 3):
        return False
    shift = -1 if p1u & 1 else 1
    return p2v == p2u or p2v == (p2u + shift) % 4


def adjacent(kind: TopologyKind, dim: Dimension, u: VertexWord, v: VertexWord) -> bool:
    """Adjacency oracle; u == v returns False."""
    _require_valid(kind, dim, u)
    _require_valid(kind, dim, v)
    if u == v:
        return False
    if kind is TopologyKind.Q:
        return hamming(u, v) == 1
    diff = [j for j in range(dim.k + 1) if get_block(u, j, dim) != get_block(v, j, dim)]
    if len(diff) != 1:
        return False
    j = diff[0]
    bu, bv = get_block(u, j, dim), get_block(v, j, dim)
    if j == 0:
        if kind is TopologyKind.SQ:
            return hamming(bu, bv) == 1
        return _tail_adjacent_mod4(bu, bv)
    if kind is TopologyKind.SQ:
        return (bu ^ bv) in V_SETS[get_block(u, 0, dim)]
    if kind is TopologyKind.SSQ:
        return (bu ^ bv) in V_SETS[0]
    return _bsq_block_adjacent(bu, bv)


def neighbors(kind: TopologyKind, dim: Dimension, u: VertexWord) -> list[VertexWord]:
    """All neighbors of u, sorted ascending."""
    _require_valid(kind, dim, u)
    if kind is TopologyKind.Q:
        return sorted(u ^ (1 << i) for i in range(dim.n))
    out = []
    tail = get_block(u, 0, dim)
    if kind is TopologyKind.SQ:
        out.extend(u ^ 1 << i for i in (0, 1))
        deltas = V_SETS[tail]
        for j in range(1, dim.k + 1):
            bu = get_block(u, j, dim)
            out.extend(set_block(u, j, bu ^ d, dim) for d in deltas)
    else:
        out.extend(set_block(u, 0, (tail + d) % 4, dim) for d in (1, 3))
        for j in range(1, dim.k + 1):
            bu = get_block(u, j, dim)
            if kind is TopologyKind.SSQ:
                out.extend(set_block(u, j, bu ^ d, dim) for d in V_SETS[0])
            else:
                out.extend(set_block(u, j, b, dim) for b in _bsq_block_neighbors(bu))
    return sorted(out)


def _bsq_block_neighbors(b: int) -> list[int]:
    p1, p2 = pair1(b), pair2(b)
    shift = -1 if p1 & 1 else 1
    return [
        make_block(p1 + d, p2 + s)
        for d in (1, -1)
        for s in (0, shift)
    ]


# ---------------------------------------------------------------------------
# Factor block graphs

C4_LABEL = "C4"
B_SSQ_LABEL = "B-ssq"
D_BSQ_LABEL = "D-bsq"


@dataclass(frozen=True, eq=False)
class BlockGraph:
    """A per-block factor graph with BFS distance and next-hop tables."""

    label: str
    nodes: tuple[int, ...]
    adj: dict[int, tuple[int, ...]]
    dist: dict[tuple[int, int], int]
    next_hop: dict[tuple[int, int], int] = field(repr=False)

    def distance(self, a: int, b: int) -> int:
        return self.dist[(a, b)]

    def hop(self, a: int, b: int) -> int:
        """First move of a shortest a->b walk (lowest-valued shortest-hop neighbor)."""
        return self.next_hop[(a, b)]

    def eccentricity(self, a: int) -> int:
        return max(self.dist[(a, b)] for b in self.nodes)


def _build_block_graph(label: str, nodes, nbr_fn) -> BlockGraph:
    nodes = tuple(sorted(nodes))
    adj = {a: tuple(sorted(nbr_fn(a))) for a in nodes}
    dist: dict[tuple[int, int], int] = {}
    next_hop: dict[tuple[int, int], int] = {}
    for src in nodes:
        d = {src: 0}
        q = deque([src])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in d:
                    d[y] = d[x] + 1
                    q.append(y)
        for dst in nodes:
            dist[(src, dst)] = d[dst]
    for src in nodes:
        for dst in nodes:
            if src == dst:
                continue
            next_hop[(src, dst)] = min(w for w in adj[src] if dist[(w, dst)] == dist[(src, dst)] - 1)
    return BlockGraph(label, nodes, adj, dist, next_hop)


@lru_cache(maxsize=None)
def block_graph(label: str) -> BlockGraph:
    """The factor graph for one coordinate: C4 tail, SSQ block B, or BSQ block D."""
    if label == C4_LABEL:
        return _build_block_graph(label, range(4), lambda a: [(a + 1) % 4, (a - 1) % 4])
    if label == B_SSQ_LABEL:
        nodes = [b for b in range(16) if pair1(b) in (0, 3)]
        return _build_block_graph(label, nodes, lambda a: [a ^ d for d in V_SETS[0]])
    if label == D_BSQ_LABEL:
        return _build_block_graph(label, range(16), _bsq_block_neighbors)
    raise ValueError(f"unknown block graph label {label!r}")


def block_graph_for(kind: TopologyKind) -> BlockGraph:
    if kind is TopologyKind.SSQ:
        return block_graph(B_SSQ_LABEL)
    if kind is TopologyKind.BSQ:
        return block_graph(D_BSQ_LABEL)
    raise ValueError(f"{kind.value} has no product block graph")


# ---------------------------------------------------------------------------
# Materialized graphs

@dataclass(frozen=True, eq=False)
class CubeGraph:
    """Immutable materialized graph: dense indices over ascending vertex words."""

    kind: TopologyKind
    n: int
    words: tuple[VertexWord, ...]
    index: dict[VertexWord, int] = field(repr=False)
    nbrs: tuple[tuple[int, ...], ...] = field(repr=False)
    edge_count: int

    @property
    def num_vertices(self) -> int:
        return len(self.words)

    @property
    def dim(self) -> Dimension:
        return Dimension(self.n)

    def index_of(self, word: VertexWord) -> int:
        return self.index[word]

    def word_of(self, i: int) -> VertexWord:
        return self.words[i]

    def edges(self):
        """All edges as (i, j) dense index pairs with i < j, ascending."""
        for i, row in enumerate(self.nbrs):
            for j in row:
                if j > i:
                    yield (i, j)

    def degree(self, i: int) -> int:
        return len(self.nbrs[i])


@lru_cache(maxsize=None)
def neighbor_sets(g: CubeGraph) -> tuple[frozenset, ...]:
    """Per-vertex neighbor index sets, cached per graph."""
    return tuple(frozenset(row) for row in g.nbrs)


@lru_cache(maxsize=None)
def materialize(kind: TopologyKind, n: int) -> CubeGraph:
    """Build the full graph for a kind at dimension n (vertex cap 2^20)."""
    dim = Dimension(n)
    if kind is TopologyKind.BH:
        raise ValueError("BH is not materialized as a CubeGraph; use bh_neighbors")
    if kind is TopologyKind.SSQ:
        count = 1 << (3 * n + 2) // 4
    else:
        count = 1 << n
    if count > MATERIALIZE_CAP:
        raise ResourceLimitError(
            f"{kind.value}_{n} has {count} vertices, above the {MATERIALIZE_CAP} cap"
        )
    if kind is TopologyKind.SSQ:
        words = tuple(u for u in range(1 << n) if is_valid_vertex(kind, dim, u))
    else:
        words = tuple(range(1 << n))
    index = {u: i for i, u in enumerate(words)}
    nbrs = tuple(tuple(index[v] for v in neighbors(kind, dim, u)) for u in words)
    edge_count = sum(len(row) for row in nbrs) // 2
    return CubeGraph(kind, n, words, index, nbrs, edge_count)


# ---------------------------------------------------------------------------
# Balanced hypercube (radix-4 coordinate tuples)

BHVertex = tuple[int, ...]


def bh_neighbors(m: int, a: BHVertex) -> list[BHVertex]:
    """The 2m neighbors of a vertex of BH_m (2 distinct ones when m = 1).

    Every edge moves coordinate 0 by +-1 mod 4; for each i >= 1 there are two
    extra neighbors that also shift coordinate i by (-1)^(a_0).
    """
    if m < 1 or len(a) != m:
        raise ValueError(f"expected {m} coordinates, got {len(a)}")
    if any(not 0 <= x < 4 for x in a):
        raise InvalidVertexError(f"BH coordinates must be in 0..3, got {a}")
    out = set()
    for d in (1, -1):
        out.add(((a[0] + d) % 4,) + a[1:])
        shift = 1 if a[0] % 2 == 0 else -1
        for i in range(1, m):
            coords = list(a)
            coords[0] = (a[0] + d) % 4
            coords[i] = (a[i] + shift) % 4
            out.add(tuple(coords))
    return sorted(out)
