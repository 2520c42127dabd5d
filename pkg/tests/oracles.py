"""Independent oracles for the test suite.

Adjacency is re-derived here by peeling 4-bit prefixes recursively, which is
a different code path from the package's flat per-block rules; agreement
between the two is one of the strongest checks in the suite.
"""
from collections import deque

V00 = {0b1111, 0b0001, 0b0010, 0b0011}
VSET = (
    V00,
    {0b0100, 0b0101, 0b0110, 0b0111},
    {0b1000, 0b1001, 0b1010, 0b1011},
    {0b1100, 0b1101, 0b1110, 0b1111},
)


def _mask(n):
    return (1 << n) - 1


def sq_adjacent_rec(n, u, v):
    if u == v:
        return False
    if n == 2:
        return ((u ^ v).bit_count()) == 1
    pu, pv = u >> (n - 4), v >> (n - 4)
    su, sv = u & _mask(n - 4), v & _mask(n - 4)
    if pu != pv:
        return su == sv and (pu ^ pv) in VSET[u & 3]
    return sq_adjacent_rec(n - 4, su, sv)


def ssq_adjacent_rec(n, u, v):
    if u == v:
        return False
    if n == 2:
        return (u - v) % 4 in (1, 3)
    pu, pv = u >> (n - 4), v >> (n - 4)
    su, sv = u & _mask(n - 4), v & _mask(n - 4)
    if pu != pv:
        return su == sv and (pu ^ pv) in V00
    return ssq_adjacent_rec(n - 4, su, sv)


def bsq_adjacent_rec(n, u, v):
    if u == v:
        return False
    if n == 2:
        return (u - v) % 4 in (1, 3)
    pu, pv = u >> (n - 4), v >> (n - 4)
    su, sv = u & _mask(n - 4), v & _mask(n - 4)
    if pu != pv:
        if su != sv:
            return False
        p1u, p2u, p1v, p2v = pu >> 2, pu & 3, pv >> 2, pv & 3
        if (p1v - p1u) % 4 not in (1, 3):
            return False
        shift = -1 if p1u & 1 else 1
        return p2v == p2u or p2v == (p2u + shift) % 4
    return bsq_adjacent_rec(n - 4, su, sv)


def ssq_valid_rec(n, u):
    while n > 2:
        if (u >> (n - 2)) not in (0b00, 0b11):
            return False
        u &= _mask(n - 4)
        n -= 4
    return True


def bfs_all(nbrs, src):
    dist = [-1] * len(nbrs)
    dist[src] = 0
    q = deque([src])
    while q:
        x = q.popleft()
        for y in nbrs[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist
