"""Exact treewidth parameterized by vertex cover size (explicit join parts).

Same state space as the pathwidth solver — apex vertex, (lower op, below,
bag, ahead, upper op) states swept in precedence order — extended with join
operations: a lower join glues two partial solutions over a bipartition of
`below` with no edges between the parts (so parts are unions of connected
components of the cover graph minus the bag), an upper join is valid whenever
`ahead` is nonempty. Base cases are the degenerate states: `below` empty and
a forget upper op whose vertex has no cover neighbors ahead.

States with the apex outside the bag are skipped: with the apex ahead no
forget is ever valid (everything neighbors the apex), so no value is finite,
and with the apex below a state cannot reach the final one. The packed table
layout follows pathwidth.py, with one extra byte slot (index k+1) for the
join upper op.
"""

from __future__ import annotations

from .cover import is_vertex_cover, minimum_vertex_cover
from .decomposition import Decomposition, validate
from .errors import InternalError
from .graph import Graph
from .pathwidth import _scan_types
from .states import CoverContext, components_outside, iter_bits


def _join_splits(ctx, table, below, bag, below_only):
    """Join-lower candidates: (part1, part2, max child value, extra count).

    part1 canonically holds the component of the lowest bit of `below`;
    bipartitions whose children are unreachable are dropped.
    """
    comps = components_outside(ctx.cov_adj, below)
    if len(comps) < 2:
        return []
    k = ctx.k
    join_slot = 8 * (k + 1)
    out = []
    first, rest = comps[0], comps[1:]
    for pick in range((1 << len(rest)) - 1):
        part1 = first
        for i in iter_bits(pick):
            part1 |= rest[i]
        part2 = below ^ part1
        pv1 = (table.get((part1 << k) | bag, 0) >> join_slot) & 255
        if not pv1:
            continue
        pv2 = (table.get((part2 << k) | bag, 0) >> join_slot) & 255
        if not pv2:
            continue
        xl = sum(cnt for m, cnt in below_only if m & part1 and m & part2)
        out.append((part1, part2, max(pv1, pv2) - 1, xl))
    out.sort()
    return out


def _tw_lowers(ctx, table, below, bag, below_only):
    """Non-join lower candidates as (code, xl, pred), ascending code order."""
    k = ctx.k
    cov_adj = ctx.cov_adj
    out = []
    for u in iter_bits(bag):
        if cov_adj[u] & below:
            continue
        packed = table.get((below << k) | (bag ^ (1 << u)), 0)
        pv = packed & 255
        if pv:
            xl = sum(cnt for m, cnt in below_only if m >> u & 1)
            out.append((u, xl, pv - 1))
    for u in iter_bits(below):
        packed = table.get(((below ^ (1 << u)) << k) | (bag | (1 << u)), 0)
        pv = (packed >> (8 * (u + 1))) & 255
        if pv:
            out.append((32 + u, 0, pv - 1))
    return out


def treewidth_table(ctx, apex_pos, stats=None, join_values=None):
    """Run the treewidth DP sweep over bags containing the apex.

    Returns the packed table. If `join_values` is a dict, the minimum over
    join-lower candidates is recorded per (below, bag, upper slot) — the
    layered solver computes exactly these numbers and tests compare them.
    """
    k = ctx.k
    full = ctx.full
    types = ctx.types
    type_masks = ctx.type_masks
    cov_adj = ctx.cov_adj
    table = {}
    triples = ctx.valid_triples(require_bit=apex_pos)
    states = 0
    slots = 0
    for below, bag in triples:
        ahead = full & ~(below | bag)
        crossing, below_only, ahead_only, bag_only = _scan_types(types, below, ahead)
        base = bag.bit_count() - 1
        tight = 1 if bag in type_masks else 0
        packed = 0
        if below == 0:
            # degenerate base states: no lower op, forget uppers only
            for v in iter_bits(bag):
                if cov_adj[v] & ahead:
                    continue
                xr = sum(cnt for m, cnt in ahead_only if m >> v & 1)
                val = base + max(xr, tight)
                packed |= (val + 1) << (8 * (v + 1))
                states += 1
                slots += 1
            if packed:
                table[bag] = packed  # below << k is 0
            continue
        lowers = _tw_lowers(ctx, table, below, bag, below_only)
        joins = _join_splits(ctx, table, below, bag, below_only)
        if not lowers and not joins:
            continue
        # m1: best over lowers of everything that doesn't depend on the upper
        m1 = None
        for _, xl, pred in lowers:
            cand = max(pred, base + max(crossing + xl, tight))
            if m1 is None or cand < m1:
                m1 = cand
        mj = None
        for _, _, pred, xl in joins:
            cand = max(pred, base + max(crossing + xl, tight))
            if mj is None or cand < mj:
                mj = cand
        best1 = m1 if mj is None else (mj if m1 is None else min(m1, mj))
        uppers = []
        if ahead:
            uppers.append((0, 0))
            uppers.append((k + 1, 0))
        for v in iter_bits(bag):
            if cov_adj[v] & ahead:
                continue
            xr = sum(cnt for m, cnt in ahead_only if m >> v & 1)
            uppers.append((v + 1, xr))
        if not uppers:
            continue
        states += (len(lowers) + len(joins)) * len(uppers)
        for slot, xr in uppers:
            val = max(best1, base + crossing + xr)
            packed |= (val + 1) << (8 * slot)
            slots += 1
            if join_values is not None and mj is not None:
                jv = max(mj, base + crossing + xr)
                join_values[(below, bag, slot)] = jv
        table[(below << k) | bag] = packed
    if stats is not None:
        stats["valid_triples"] = len(triples)
        stats["states"] = states
        stats["peak_table"] = slots
    return table


def _read(table, k, below, bag, slot):
    pv = (table.get((below << k) | bag, 0) >> (8 * slot)) & 255
    return pv - 1 if pv else None


def _expand_tree(ctx, table, apex_pos, below, bag, slot, val, nodes, parent):
    """Recreate one optimal state and recurse into its predecessors.

    Appends (lower tag, below, bag, slot, child state indices) entries to
    `nodes`; candidate lowers are probed in encoded-key order (introduce,
    forget, then joins by ascending first part), taking the first that
    reproduces `val`.
    """
    k = ctx.k
    full = ctx.full
    ahead = full & ~(below | bag)
    crossing, below_only, ahead_only, bag_only = _scan_types(
        ctx.types, below, ahead)
    base = bag.bit_count() - 1
    tight = 1 if bag in ctx.type_masks else 0
    forgotten = slot - 1 if 1 <= slot <= k else -1
    xr = 0
    if forgotten >= 0:
        xr = sum(cnt for m, cnt in ahead_only if m >> forgotten & 1)
    me = len(nodes)
    nodes.append(None)
    if below == 0:
        if forgotten < 0 or base + max(xr, tight) != val \
                or ctx.cov_adj[forgotten] & ahead:
            raise InternalError("degenerate treewidth state mismatch")
        nodes[me] = (None, below, bag, slot, [])
        return me
    for code, xl, pred in _tw_lowers(ctx, table, below, bag, below_only):
        if max(pred, base + max(crossing + xl, crossing + xr, tight)) == val:
            if code < 32:
                child = _expand_tree(ctx, table, apex_pos, below,
                                     bag ^ (1 << code), 0, pred, nodes, me)
                tag = ("introduce", code)
            else:
                u = code - 32
                child = _expand_tree(ctx, table, apex_pos, below ^ (1 << u),
                                     bag | (1 << u), u + 1, pred, nodes, me)
                tag = ("forget", u)
            nodes[me] = (tag, below, bag, slot, [child])
            return me
    for part1, part2, pred, xl in _join_splits(ctx, table, below, bag, below_only):
        if max(pred, base + max(crossing + xl, crossing + xr, tight)) == val:
            join_slot = k + 1
            v1 = _read(table, k, part1, bag, join_slot)
            v2 = _read(table, k, part2, bag, join_slot)
            c1 = _expand_tree(ctx, table, apex_pos, part1, bag, join_slot,
                              v1, nodes, me)
            c2 = _expand_tree(ctx, table, apex_pos, part2, bag, join_slot,
                              v2, nodes, me)
            nodes[me] = (("join", (part1, part2)), below, bag, slot, [c1, c2])
            return me
    raise InternalError("treewidth back-walk lost the optimum")


def reconstruct_tree(g, ctx, table, apex, width):
    """Expand the optimal state tree into a tree decomposition of g.

    Each state becomes a three-bag chain (first/middle/last); children hang
    below the first bag, confined vertices get pendant bags off the middle
    one, the apex is stripped, empty bags are spliced out, and any bag
    contained in a neighbor is merged away. Validated before returning.
    """
    k = ctx.k
    apex_pos = ctx.position[apex]
    below0 = ctx.full ^ (1 << apex_pos)
    bag0 = 1 << apex_pos
    val0 = _read(table, k, below0, bag0, apex_pos + 1)
    if val0 is None:
        raise InternalError("final treewidth state is unreachable")
    states = []
    root_state = _expand_tree(ctx, table, apex_pos, below0, bag0,
                              apex_pos + 1, val0, states, -1)

    bags = []
    tree_edges = []
    placed = set()

    def emit(idx):
        tag, below, bag, slot, children = states[idx]
        ahead = ctx.full & ~(below | bag)
        bag_set = ctx.expand(bag)
        core = bag_set | set(ctx.vertices_of_types(
            lambda m: m & below and m & ahead))
        first = set(core)
        if tag is not None and tag[0] == "introduce":
            u = tag[1]
            first |= set(ctx.vertices_of_types(
                lambda m: m & below and not m & ahead and m >> u & 1))
        elif tag is not None and tag[0] == "join":
            part1, part2 = tag[1]
            first |= set(ctx.vertices_of_types(
                lambda m: m & part1 and m & part2 and not m & ahead))
        forgotten = slot - 1 if 1 <= slot <= k else -1
        last = set(core)
        if forgotten >= 0:
            last |= set(ctx.vertices_of_types(
                lambda m: m & ahead and not m & below and m >> forgotten & 1))
        i_first = len(bags)
        bags.append(first)
        i_mid = len(bags)
        bags.append(set(core))
        i_last = len(bags)
        bags.append(last)
        tree_edges.append((i_first, i_mid))
        tree_edges.append((i_mid, i_last))
        for x in ctx.vertices_of_types(lambda m: not m & (below | ahead)):
            if x not in placed:
                placed.add(x)
                pendant = set(ctx.graph.adj[x]) | {x}
                bags.append(pendant)
                tree_edges.append((len(bags) - 1, i_mid))
        for c in children:
            c_last = emit(c)
            tree_edges.append((c_last, i_first))
        return i_last

    root_bag = emit(root_state)

    for b in bags:
        b.discard(apex)
    # splice out empty bags, then merge bags contained in a neighbor
    parent = {}
    children = {i: [] for i in range(len(bags))}
    for a, b in tree_edges:  # edges are (child side, parent side) ordered
        parent[a] = b
        children[b].append(a)
    order = [root_bag]
    for i in order:
        order.extend(children[i])
    alive = set(range(len(bags)))
    for i in reversed(order):
        if bags[i]:
            continue
        alive.discard(i)
        p = parent.get(i)
        if p is None:  # empty root: promote the first surviving child
            kids = [c for c in children[i] if c in alive]
            if kids:
                parent[kids[0]] = None
                for c in kids[1:]:
                    parent[c] = kids[0]
                children[kids[0]].extend(kids[1:])
        else:
            for c in children[i]:
                parent[c] = p
                children[p].append(c)
        children[i] = []
    merged = True
    while merged:
        merged = False
        for i in sorted(alive):
            p = parent.get(i)
            if p is not None and p in alive and bags[i] <= bags[p]:
                for c in list(children[i]):
                    if c in alive:
                        parent[c] = p
                        children[p].append(c)
                alive.discard(i)
                merged = True
        # also merge a parent into its only child when contained
    index = {i: j for j, i in enumerate(sorted(alive))}
    final_bags = [bags[i] for i in sorted(alive)]
    final_edges = [(index[i], index[parent[i]]) for i in sorted(alive)
                   if parent.get(i) is not None and parent[i] in alive]
    dec = Decomposition(final_bags, final_edges, kind="tree")
    measured = validate(g, dec)
    if measured != width:
        raise InternalError(
            f"treewidth witness has width {measured}, solver reported {width}")
    return dec


def treewidth_vc_4k(g, cover=None, stats=None, join_values=None):
    """Exact treewidth of g and a tree decomposition witnessing it.

    Joins enumerate explicit part bipartitions (quartic-in-3^k state count).
    `cover` may inject a verified vertex cover; `join_values`, if a dict, is
    filled with the per-state join-only minima for cross-checking against
    the layered solver.
    """
    if g.n == 0:
        return -1, Decomposition([], [], kind="tree")
    if cover is None:
        cover = minimum_vertex_cover(g)
    else:
        cover = set(cover)
        if not is_vertex_cover(g, cover):
            raise ValueError("provided vertex set is not a vertex cover")
    gp, apex = g.add_universal_vertex()
    ctx = CoverContext(gp, cover | {apex})
    if stats is not None:
        stats["cover_size"] = len(cover)
    apex_pos = ctx.position[apex]
    table = treewidth_table(ctx, apex_pos, stats, join_values)
    final = _read(table, ctx.k, ctx.full ^ (1 << apex_pos), 1 << apex_pos,
                  apex_pos + 1)
    if final is None:
        raise InternalError("treewidth DP finished without a final state")
    width = final - 1
    witness = reconstruct_tree(g, ctx, table, apex, width)
    return width, witness
