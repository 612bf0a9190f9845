"""Decomposition model, the validator, nice form, and node traces."""

import random
from collections import deque

import pytest

from vcwidth.decomposition import (Decomposition, find_violations, make_nice,
                                   trace_of_node, validate)
from vcwidth.errors import InvalidDecompositionError
from vcwidth.graph import Graph, complete_graph, path_graph
from vcwidth.states import CoverContext, is_valid_triple
from vcwidth.cover import minimum_vertex_cover

from genutil import elimination_decomposition, random_graph


# --- an independent re-derivation of the three axioms, used as a cross-check


def _connected(nodes, edges):
    nodes = list(nodes)
    if not nodes:
        return True
    nbr = {i: [] for i in nodes}
    for i, j in edges:
        nbr[i].append(j)
        nbr[j].append(i)
    seen = {nodes[0]}
    queue = deque([nodes[0]])
    while queue:
        for j in nbr[queue.popleft()]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return len(seen) == len(nodes)


def naive_is_valid(g, dec):
    nbags = len(dec.bags)
    if nbags == 0:
        return g.n == 0
    es = set()
    for i, j in dec.edges:
        e = (min(i, j), max(i, j))
        if i == j or e in es:
            return False
        es.add(e)
    if len(es) != nbags - 1 or not _connected(range(nbags), es):
        return False
    if dec.kind == "path":
        deg = {i: 0 for i in range(nbags)}
        for i, j in es:
            deg[i] += 1
            deg[j] += 1
        if any(d > 2 for d in deg.values()):
            return False
    if any(not (0 <= v < g.n) for b in dec.bags for v in b):
        return False
    for v in range(g.n):
        holders = [i for i, b in enumerate(dec.bags) if v in b]
        if not holders:
            return False
        inner = {e for e in es if e[0] in holders and e[1] in holders}
        if not _connected(holders, inner):
            return False
    return all(any(u in b and v in b for b in dec.bags) for u, v in g.edges)


def test_width():
    assert Decomposition([], []).width == -1
    assert Decomposition([{0, 1, 2}], []).width == 2


def test_validate_examples():
    k4 = complete_graph(4)
    assert validate(k4, Decomposition([set(range(4))], [])) == 3
    p3 = path_graph(3)
    assert validate(p3, Decomposition([{0, 1}, {1, 2}], [(0, 1)])) == 1


def test_uncovered_edge_is_named():
    p3 = path_graph(3)
    bad = Decomposition([{0, 1}, {2}], [(0, 1)])
    violations = find_violations(p3, bad)
    assert any("edge (1,2)" in v for v in violations)
    with pytest.raises(InvalidDecompositionError):
        validate(p3, bad)


def test_validator_matches_naive_checker():
    rng = random.Random(606)
    agree_valid = agree_invalid = 0
    for _ in range(150):
        g = random_graph(rng, rng.randrange(1, 7), rng.random())
        dec = elimination_decomposition(rng, g)
        bags = [set(b) for b in dec.bags]
        edges = list(dec.edges)
        roll = rng.random()
        if roll < 0.25 and any(len(b) > 1 for b in bags):
            big = rng.choice([i for i, b in enumerate(bags) if len(b) > 1])
            bags[big].discard(rng.choice(sorted(bags[big])))
        elif roll < 0.5 and edges:
            edges.pop(rng.randrange(len(edges)))
        elif roll < 0.75 and len(bags) > 2:
            i, j = rng.sample(range(len(bags)), 2)
            edges.append((i, j))  # usually a cycle or a duplicate
        mutated = Decomposition(bags, edges, kind=dec.kind)
        verdict = not find_violations(g, mutated)
        assert verdict == naive_is_valid(g, mutated)
        if verdict:
            agree_valid += 1
        else:
            agree_invalid += 1
    assert agree_valid and agree_invalid  # both outcomes exercised


# --- nice form


def check_nice_shape(nd):
    for node in nd.nodes:
        if node.kind == "leaf":
            assert not node.children and len(node.bag) == 1
        elif node.kind == "introduce":
            (c,) = node.children
            child = nd.nodes[c].bag
            assert node.vertex not in child
            assert node.bag == child | {node.vertex}
        elif node.kind == "forget":
            (c,) = node.children
            child = nd.nodes[c].bag
            assert node.vertex in child
            assert node.bag == child - {node.vertex}
        else:
            assert node.kind == "join"
            c1, c2 = node.children
            assert nd.nodes[c1].bag == node.bag == nd.nodes[c2].bag
    if nd.root is not None:
        assert len(nd.nodes[nd.root].bag) == 1


def test_make_nice_single_bag():
    g = complete_graph(2)
    nd = make_nice(g, Decomposition([{0, 1}], []))
    check_nice_shape(nd)
    kinds = [n.kind for n in nd.nodes]
    assert kinds[0] == "leaf" and "introduce" in kinds and "forget" in kinds
    assert nd.width == 1
    assert validate(g, nd.as_decomposition()) == 1


def test_make_nice_empty():
    nd = make_nice(Graph(0), Decomposition([], []))
    assert nd.nodes == [] and nd.root is None


def test_make_nice_path_input_stays_join_free():
    g = path_graph(5)
    dec = Decomposition([{i, i + 1} for i in range(4)],
                        [(i, i + 1) for i in range(3)], kind="path")
    nd = make_nice(g, dec)
    check_nice_shape(nd)
    assert all(n.kind != "join" for n in nd.nodes)
    assert nd.as_decomposition().kind == "path"


def test_make_nice_random_decompositions():
    rng = random.Random(77)
    for _ in range(200):
        g = random_graph(rng, rng.randrange(1, 9), rng.random())
        dec = elimination_decomposition(rng, g)
        assert not find_violations(g, dec)
        nd = make_nice(g, dec)
        check_nice_shape(nd)
        assert nd.width <= dec.width
        assert validate(g, nd.as_decomposition()) == nd.width


# --- traces


def test_trace_of_leaf():
    g = complete_graph(2)
    nd = make_nice(g, Decomposition([{0, 1}], []))
    leaf = next(i for i, n in enumerate(nd.nodes) if n.kind == "leaf")
    v = next(iter(nd.nodes[leaf].bag))
    assert trace_of_node(nd, leaf, {0, 1}) == \
        (frozenset(), frozenset({v}), frozenset({0, 1}) - {v})


def test_trace_of_root_with_universal_vertex():
    # vertex 0 is universal; make_nice roots chains at the lowest id, so the
    # root bag is {0} and its trace splits the cover as (C - {0}, {0}, {})
    g = Graph(3, [(0, 1), (0, 2), (1, 2)])
    nd = make_nice(g, Decomposition([{0, 1, 2}], []))
    cover = {0, 1, 2}
    assert nd.nodes[nd.root].bag == frozenset({0})
    below, here, ahead = trace_of_node(nd, nd.root, cover)
    assert (below, here, ahead) == (frozenset({1, 2}), frozenset({0}), frozenset())


def test_traces_are_valid_triples():
    rng = random.Random(909)
    for _ in range(40):
        g = random_graph(rng, rng.randrange(2, 8), rng.random())
        cover = minimum_vertex_cover(g)
        if not cover:
            continue
        ctx = CoverContext(g, cover)
        nd = make_nice(g, elimination_decomposition(rng, g))
        for i in nd.postorder():
            below, here, ahead = trace_of_node(nd, i, cover)
            assert below | here | ahead == frozenset(cover)
            assert not (below & here or below & ahead or here & ahead)
            masks = []
            for part in (below, here, ahead):
                m = 0
                for v in part:
                    m |= 1 << ctx.position[v]
                masks.append(m)
            assert is_valid_triple(ctx.cov_adj, *masks)
