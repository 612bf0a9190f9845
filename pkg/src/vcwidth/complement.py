"""Exact pathwidth parameterized by the vertex cover of the complement.

When C covers every non-edge of g, the outside S = V minus C is a clique, so
some bag of any path decomposition contains all of S. The solver computes,
for every L inside C, the best width of a path decomposition of G[N[L]]
whose inner end bag is N(L) — a vertex-layout DP over subsets of C — and
then glues a left part (ending in N(L)), the big middle bag S plus N(L), and
a mirrored right part built from R = C minus N[L].

Table value for L: rooted[L] = max(|N(L) \\ L|, min over u in L of
rooted[L minus u]), rooted[empty] = 0. The neighborhood unions are built
incrementally in blocks of the low 16 subset bits so the only full-size
allocation is the table itself (one byte per subset).
"""

from __future__ import annotations

from .cover import is_vertex_cover, minimum_vertex_cover
from .decomposition import Decomposition, validate
from .errors import InternalError, ResourceLimitError
from .graph import Graph
from .states import iter_bits

MAX_COMPLEMENT_COVER = 26
_BLOCK_BITS = 16


def _vertex_masks(g, order):
    """Adjacency as whole-graph bitmasks plus the mask of `order` itself."""
    adj = []
    for v in order:
        m = 0
        for u in g.adj[v]:
            m |= 1 << u
        adj.append(m)
    placed = 0
    for v in order:
        placed |= 1 << v
    return adj, placed


def _block_tables(adj, k):
    """Per-block unions: low-part neighborhood union and low-part vertex mask."""
    b = min(k, _BLOCK_BITS)
    um_low = [0] * (1 << b)
    lf_low = [0] * (1 << b)
    # adj entries here are whole-graph masks indexed by position in C
    return b, um_low, lf_low


def rooted_pw_table(g, order):
    """rooted[L] for every L subset of the cover, as a bytearray over masks.

    order fixes the bit positions; rooted[L] is the least width of a path
    decomposition of G[N[L]] with N(L) as its inner end bag.
    """
    k = len(order)
    adj, _ = _vertex_masks(g, order)
    vbit = [1 << v for v in order]
    rooted = bytearray(1 << k)
    b, um_low, lf_low = _block_tables(adj, k)
    for low in range(1, 1 << b):
        i = (low & -low).bit_length() - 1
        um_low[low] = um_low[low ^ (1 << i)] | adj[i]
        lf_low[low] = lf_low[low ^ (1 << i)] | vbit[i]
    for high in range(1 << (k - b)):
        um_high = 0
        lf_high = 0
        for i in iter_bits(high):
            um_high |= adj[b + i]
            lf_high |= vbit[b + i]
        base = high << b
        for low in range(1 << b):
            mask = base | low
            if mask == 0:
                continue
            lf = lf_high | lf_low[low]
            boundary = (um_high | um_low[low]) & ~lf
            best = None
            m = mask
            while m:
                u = m & -m
                prev = rooted[mask ^ u]
                if best is None or prev < best:
                    best = prev
                m ^= u
            rooted[mask] = max(boundary.bit_count(), best)
    return rooted


def _peel_order(rooted, mask):
    """Optimal layout of `mask`, outermost vertex position last."""
    order = []
    while mask:
        pick = None
        for u in iter_bits(mask):
            prev = rooted[mask ^ (1 << u)]
            if pick is None or prev < pick[1]:
                pick = (u, prev)
        order.append(pick[0])
        mask ^= 1 << pick[0]
    return order


def _side_bags(g, order, positions):
    """Bags of one side, middle-adjacent first, for a peel order of positions."""
    bags = []
    remaining = list(positions)
    for u in positions:
        neigh = set()
        for p in remaining:
            neigh.update(g.adj[order[p]])
        members = {order[p] for p in remaining}
        bags.append((neigh - members) | {order[u]})
        remaining.remove(u)
    return bags


def pathwidth_cvc(g, cover=None, stats=None, max_cover=MAX_COMPLEMENT_COVER):
    """Exact pathwidth of g and a path decomposition, parameterized by a
    vertex cover of the complement graph.

    `cover` may inject one (it is verified against the complement); the size
    cap keeps the 2^k' table within reach and raises ResourceLimitError
    beyond it.
    """
    if g.n == 0:
        return -1, Decomposition([], [], kind="path")
    comp = g.complement()
    if cover is None:
        cover = minimum_vertex_cover(comp)
    else:
        cover = set(cover)
        if not is_vertex_cover(comp, cover):
            raise ValueError(
                "provided vertex set is not a vertex cover of the complement")
    k = len(cover)
    if k > max_cover:
        raise ResourceLimitError(
            f"complement cover of size {k} exceeds the supported maximum "
            f"of {max_cover}")
    order = sorted(cover)
    pos = {v: i for i, v in enumerate(order)}
    adj, cover_mask = _vertex_masks(g, order)
    outside = [v for v in range(g.n) if v not in cover]
    rooted = rooted_pw_table(g, order)
    if stats is not None:
        stats["cover_size"] = k
        stats["table_entries"] = 1 << k
        stats["states"] = 1 << k  # one rooted-table state per subset of C
        stats["peak_table"] = 1 << k

    best = None
    for l_mask in range(1 << k):
        um = 0
        lf = 0
        for i in iter_bits(l_mask):
            um |= adj[i]
            lf |= 1 << order[i]
        r_vertices = cover_mask & ~(lf | um)
        r_mask = 0
        for v in iter_bits(r_vertices):
            r_mask |= 1 << pos[v]
        middle = len(outside) + (um & cover_mask & ~lf).bit_count()
        cand = max(rooted[l_mask], rooted[r_mask], middle - 1)
        if best is None or cand < best[0]:
            best = (cand, l_mask, r_mask)
    width, l_mask, r_mask = best

    left = _side_bags(g, order, _peel_order(rooted, l_mask))
    right = _side_bags(g, order, _peel_order(rooted, r_mask))
    um = 0
    lf = 0
    for i in iter_bits(l_mask):
        um |= adj[i]
        lf |= 1 << order[i]
    middle_bag = set(outside) | {v for v in iter_bits(um & cover_mask & ~lf)}
    sequence = list(reversed(left)) + [middle_bag] + right
    bags = []
    for bag in sequence:
        if bag and (not bags or bag != bags[-1]):
            bags.append(bag)
    edges = [(i, i + 1) for i in range(len(bags) - 1)]
    dec = Decomposition(bags, edges, kind="path")
    measured = validate(g, dec)
    if measured != width:
        raise InternalError(
            f"complement-cover witness has width {measured}, "
            f"solver reported {width}")
    return width, dec
