"""Layered treewidth solver: joins via subset convolution instead of part
enumeration.

Same states and values as treewidth.py, but the per-state minimum over join
bipartitions is not found by enumerating bipartitions of `below`. Layer d
stores, per state, the best width achievable with at most d nested joins on
any root-to-leaf path. The layer-d join minima are assembled from layer d-1:
for a fixed bag X, group the feasible join children W (unions of components
of the cover graph minus X) by how many non-cover vertices would be confined
to W (the zeta-transformed type counts z[W]), and probe candidate thresholds
t. A boolean subset convolution of two groups tells, for every L at once,
whether L splits into children with those two z values and both child values
at most t; taking the pair with maximum z1 + z2 minimizes the number of
non-cover vertices straddling the split, which is the only part of the local
width that depends on the bipartition. Probing only the distinct finite
child values is exhaustive: the optimum bipartition's larger child value is
always one of them.

Values stabilize by layer k at the latest (a trimmed decomposition never
nests more than k joins), and the stable table satisfies the same recurrence
the direct solver computes, so the answers — and the recorded per-state join
minima — agree exactly. Witness reconstruction is shared with treewidth.py:
the back-walk only needs a table that is a fixpoint of the recurrence.
"""

from __future__ import annotations

from .convolution import SetFunction, convolve, zeta
from .cover import is_vertex_cover, minimum_vertex_cover
from .decomposition import Decomposition
from .errors import InternalError
from .graph import Graph
from .pathwidth import _scan_types
from .states import CoverContext, components_outside, iter_bits, _spread
from .treewidth import _read, _tw_lowers, reconstruct_tree


def _join_minima(ctx, apex_pos, prev, stats):
    """Best join-bipartition value per (below, bag), from the previous layer.

    Returns {(below << k) | bag: value} covering every below that splits
    into two feasible children; entries already include the split penalty
    (crossing + straddlers) but not the bag-only tightness or upper terms.
    """
    k = ctx.k
    full = ctx.full
    cov_adj = ctx.cov_adj
    join_shift = 8 * (k + 1)
    others = [i for i in range(k) if i != apex_pos]
    out = {}
    for xs in range(1 << (k - 1)):
        bag = _spread(xs, others) | (1 << apex_pos)
        rest = full ^ bag
        if rest == 0:
            continue
        comps = components_outside(cov_adj, rest)
        c = len(comps)
        if c < 2:
            continue
        positions = list(iter_bits(rest))
        s = len(positions)
        if stats is not None:
            stats["join_cells"] += 1 << s
        pos_at = {p: i for i, p in enumerate(positions)}

        def squeeze(m):
            cm = 0
            for p in iter_bits(m & rest):
                cm |= 1 << pos_at[p]
            return cm

        cnt = [0] * (1 << s)
        total = 0
        for m, mult in ctx.types:
            cm = squeeze(m)
            if cm:
                cnt[cm] += mult
                total += mult
        z = zeta(SetFunction(s, cnt)).values
        comp_sq = [squeeze(m) for m in comps]
        parts = []
        for pick in range(1, 1 << c):
            w = 0
            for i in iter_bits(pick):
                w |= comps[i]
            pv = (prev.get((w << k) | bag, 0) >> join_shift) & 255
            if pv:
                cw = 0
                for i in iter_bits(pick):
                    cw |= comp_sq[i]
                parts.append((cw, z[cw], pv - 1))
        if not parts:
            continue
        targets = []
        for pick in range(1, 1 << c):
            if pick & (pick - 1):  # at least two components: splittable
                l_mask = 0
                cl = 0
                for i in iter_bits(pick):
                    l_mask |= comps[i]
                    cl |= comp_sq[i]
                targets.append((cl, l_mask))
        if not targets:
            continue
        base = bag.bit_count() - 1
        cfull = (1 << s) - 1
        best = {}
        for t in sorted({a for _, _, a in parts}):
            if len(best) == len(targets) and t >= max(best.values()):
                break  # larger probes cannot beat what we already have
            groups = {}
            for cw, zv, a in parts:
                if a <= t:
                    groups.setdefault(zv, []).append(cw)
            vals = sorted(groups)
            indicators = {}
            for v in vals:
                arr = [0] * (1 << s)
                for cw in groups[v]:
                    arr[cw] = 1
                indicators[v] = SetFunction(s, arr)
            pairs = [(v1 + v2, v1, v2)
                     for i, v1 in enumerate(vals) for v2 in vals[i:]]
            pairs.sort(reverse=True)
            straddle_max = {}
            unresolved = {cl for cl, _ in targets}
            for ssum, v1, v2 in pairs:
                if not unresolved:
                    break
                conv = convolve(indicators[v1], indicators[v2]).values
                for cl in list(unresolved):
                    if conv[cl]:
                        straddle_max[cl] = ssum
                        unresolved.discard(cl)
            for cl, _ in targets:
                m = straddle_max.get(cl)
                if m is None:
                    continue
                val = max(t, base + total - z[cfull ^ cl] - m)
                cur = best.get(cl)
                if cur is None or val < cur:
                    best[cl] = val
        for cl, l_mask in targets:
            if cl in best:
                out[(l_mask << k) | bag] = best[cl]
    return out


def _layer_sweep(ctx, apex_pos, jmin, stats=None, join_values=None):
    """One full table sweep, taking join candidates from `jmin`."""
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
            for v in iter_bits(bag):
                if cov_adj[v] & ahead:
                    continue
                xr = sum(cnt for m, cnt in ahead_only if m >> v & 1)
                packed |= (base + max(xr, tight) + 1) << (8 * (v + 1))
                states += 1
                slots += 1
            if packed:
                table[bag] = packed
            continue
        lowers = _tw_lowers(ctx, table, below, bag, below_only)
        split = jmin.get((below << k) | bag)
        mj = None if split is None else max(split, base + tight)
        if not lowers and mj is None:
            continue
        m1 = None
        for _, xl, pred in lowers:
            cand = max(pred, base + max(crossing + xl, tight))
            if m1 is None or cand < m1:
                m1 = cand
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
        states += (len(lowers) + (0 if mj is None else 1)) * len(uppers)
        for slot, xr in uppers:
            packed |= (max(best1, base + crossing + xr) + 1) << (8 * slot)
            slots += 1
            if join_values is not None and mj is not None:
                join_values[(below, bag, slot)] = max(mj, base + crossing + xr)
        table[(below << k) | bag] = packed
    if stats is not None:
        stats["valid_triples"] = len(triples)
        stats["states"] = states
        stats["peak_table"] = slots
    return table


def treewidth_vc_3k(g, cover=None, stats=None, join_values=None):
    """Exact treewidth of g via the layered join computation, plus witness.

    Interface matches treewidth_vc_4k, and so do the computed values —
    including the per-(below, bag, upper) join minima optionally collected
    into `join_values` — only the join machinery differs.
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
        stats.setdefault("join_cells", 0)
        stats.setdefault("layers", 0)
    apex_pos = ctx.position[apex]
    prev = _layer_sweep(ctx, apex_pos, {}, stats)
    if stats is not None:
        stats["layers"] = 1
    table = prev
    layer_values = None
    stable = False
    for _ in range(ctx.k + 1):
        jmin = _join_minima(ctx, apex_pos, prev, stats)
        layer_values = {} if join_values is not None else None
        table = _layer_sweep(ctx, apex_pos, jmin, stats, layer_values)
        if stats is not None:
            stats["layers"] += 1
        if table == prev:
            stable = True
            break
        prev = table
    if not stable:
        raise InternalError("join layering did not stabilize within its bound")
    if join_values is not None:
        join_values.update(layer_values)
    final = _read(table, ctx.k, ctx.full ^ (1 << apex_pos), 1 << apex_pos,
                  apex_pos + 1)
    if final is None:
        raise InternalError("treewidth DP finished without a final state")
    width = final - 1
    witness = reconstruct_tree(g, ctx, table, apex, width)
    return width, witness
