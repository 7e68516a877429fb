import itertools
import random

import pytest

from skein import multigraph as mg
from skein.multigraph import Multigraph, Pattern


def triangle():
    return Multigraph(3, [(0, 1), (1, 2), (0, 2)])


def test_components():
    assert mg.components(triangle()) == [frozenset({0, 1, 2})]
    two = Multigraph(4, [(0, 1), (2, 3)])
    assert mg.components(two) == [frozenset({0, 1}), frozenset({2, 3})]
    loop_iso = Multigraph(2, [(0, 0)])
    assert mg.components(loop_iso) == [frozenset({0}), frozenset({1})]


def test_blocks():
    shared = Multigraph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    blks, cuts = mg.blocks(shared)
    assert sorted(sorted(b) for b in blks) == [[0, 1, 2], [3, 4, 5]]
    assert cuts == {2}
    loop_edge = Multigraph(2, [(0, 0), (0, 1)])
    blks, cuts = mg.blocks(loop_edge)
    assert sorted(sorted(b) for b in blks) == [[0], [1]]
    assert cuts == {0}
    blks, cuts = mg.blocks(mg.k4())
    assert len(blks) == 1 and not cuts


def test_classify_block():
    assert mg.classify_block(mg.skein(2), frozenset([0, 1])) == ("skein", 2)
    assert mg.classify_block(mg.skein(5), frozenset(range(5))) == ("skein", 5)
    assert mg.classify_block(triangle(), frozenset([0, 1, 2])) == ("other", None)
    loop = Multigraph(1, [(0, 0)])
    assert mg.classify_block(loop, frozenset([0])) == ("loop", None)
    bridge = Multigraph(2, [(0, 1)])
    assert mg.classify_block(bridge, frozenset([0])) == ("skein", 1)


def test_block_is_cycle():
    assert mg.block_is_cycle(triangle(), frozenset([0, 1, 2]))
    assert mg.block_is_cycle(mg.skein(2), frozenset([0, 1]))
    assert not mg.block_is_cycle(mg.skein(3), frozenset([0, 1, 2]))
    assert not mg.block_is_cycle(Multigraph(1, [(0, 0)]), frozenset([0]))


def test_reduce_fixpoints():
    # a bare path is eaten entirely by pendant deletion
    red, _ = mg.reduce(Multigraph(3, [(0, 1), (1, 2)]))
    assert (red.n, red.m) == (1, 0)
    # digon: one series contraction makes a loop, which then sticks
    red, _ = mg.reduce(mg.skein(2))
    assert (red.n, red.m) == (1, 1) and red.is_loop(0)
    # star: pendant deletion thrice
    red, _ = mg.reduce(Multigraph(4, [(0, 1), (0, 2), (0, 3)]))
    assert (red.n, red.m) == (1, 0)
    # a looped degree-2 vertex is not suppressible
    lollipop = Multigraph(2, [(0, 0), (0, 1), (1, 1)])
    red, _ = mg.reduce(lollipop)
    assert red.m == 3
    for g in [triangle(), mg.k4(), mg.skein(4)]:
        red, _ = mg.reduce(g)
        assert mg.is_reduced(red)


def random_graph(rng, n_max=6, m_max=9):
    n = rng.randint(1, n_max)
    m = rng.randint(0, m_max)
    edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]
    return Multigraph(n, edges)


def test_reduce_replay_reconstructs_input():
    rng = random.Random(7)
    for _ in range(120):
        g = random_graph(rng)
        red, log = mg.reduce(g)
        back = mg.replay(red, log)
        assert back == g          # same vertex count, same edge ids, same ends


def test_reduce_confluence_random_orders():
    rng = random.Random(11)
    for _ in range(60):
        g = random_graph(rng)
        base, _ = mg.reduce(g)
        code = mg.canonical_form(base)
        for _ in range(5):
            other, _ = mg.reduce(g, rng=rng)
            assert mg.canonical_form(other) == code


def test_series_parallel():
    assert not mg.is_series_parallel(mg.k4())
    theta = Multigraph(4, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)])
    assert mg.is_series_parallel(theta)
    w4 = Multigraph(5, [(0, 1), (1, 2), (2, 3), (3, 0),
                        (4, 0), (4, 1), (4, 2), (4, 3)])
    assert not mg.is_series_parallel(w4)


def test_contains_subdivision_basics():
    c5 = Multigraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    single_loop = Multigraph(1, [(0, 0)])
    assert mg.contains_subdivision(c5, Pattern(single_loop)) is not None
    emb = mg.contains_subdivision(mg.skein(5), Pattern(mg.skein(5)))
    assert emb is not None and all(len(p) == 1 for _, p in emb.paths)
    assert mg.contains_subdivision(mg.skein(4), Pattern(mg.skein(5))) is None


def test_contains_subdivision_dotted_and_validation():
    # dotted pattern: K4 with a dotted edge also stands for K4/e
    dotted = Pattern(mg.k4(), dotted=0)
    k4_contracted, _ = mg.contract_edge(mg.k4(), 0)
    emb = mg.contains_subdivision(k4_contracted, dotted)
    assert emb is not None and emb.variant == "contracted"
    assert mg.validate_embedding(k4_contracted, k4_contracted, emb)

    # a subdivided host: K4 with every edge subdivided once
    host = mg.k4()
    for e in range(6):
        host = mg.subdivide_edge(host, e)
    emb = mg.contains_subdivision(host, Pattern(mg.k4()))
    assert emb is not None and emb.variant == "full"
    assert mg.validate_embedding(host, mg.k4(), emb)
    assert all(len(p) == 2 for _, p in emb.paths)

    # loops embed as cycles disjoint outside the base vertex
    two_loops = Multigraph(1, [(0, 0), (0, 0)])
    host = Multigraph(4, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 0)])
    emb = mg.contains_subdivision(host, Pattern(two_loops))
    assert emb is not None
    assert mg.validate_embedding(host, two_loops, emb)


def test_internally_disjoint_cycles_required():
    # the C4 and the doubled chord are edge-disjoint cycles, but every two
    # cycles here share two vertices; a pair of pattern loops needs cycles
    # meeting at the base vertex only
    host = Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (0, 2)])
    tight = Pattern(Multigraph(1, [(0, 0), (0, 0)]))
    assert mg.contains_subdivision(host, tight) is None
    bowtie = Multigraph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert mg.contains_subdivision(bowtie, tight) is not None
    # a theta graph has no two edge-disjoint cycles at all
    theta = Multigraph(4, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)])
    assert mg.contains_subdivision(theta, tight) is None


def test_canonical_form_and_isomorphism():
    t1 = Multigraph(3, [(0, 1), (1, 2), (0, 2)])
    t2 = Multigraph(3, [(2, 0), (0, 1), (2, 1)])
    assert mg.canonical_form(t1) == mg.canonical_form(t2)
    assert mg.is_isomorphic(t1, t2)
    digon = mg.skein(2)
    two_loops = Multigraph(2, [(0, 0), (0, 0)])
    assert mg.canonical_form(digon) != mg.canonical_form(two_loops)
    theta6 = Multigraph(5, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1)])
    assert mg.canonical_form(mg.k4()) != mg.canonical_form(theta6)


def test_automorphisms_are_self_maps():
    for g in [triangle(), mg.k4(), mg.skein(3),
              Multigraph(3, [(0, 1), (1, 2)])]:
        auts = mg.automorphisms(g)
        assert tuple(range(g.n)) in {tuple(a) for a in auts}
        base = sorted(tuple(sorted(e)) for e in g.edges)
        for a in auts:
            relabeled = sorted(tuple(sorted((a[u], a[v]))) for u, v in g.edges)
            assert relabeled == base
    assert len(mg.automorphisms(mg.k4())) == 24


def brute_enum(n_max, m_max, pcap, lcap):
    seen = set()
    for n in range(1, n_max + 1):
        slots = list(itertools.combinations(range(n), 2)) + \
            [(v, v) for v in range(n)]

        def rec(i, budget, cur):
            if i == len(slots):
                g = Multigraph(n, cur)
                if len(mg.components(g)) == 1:
                    seen.add(mg.canonical_form(g))
                return
            cap = pcap if slots[i][0] != slots[i][1] else lcap
            for c in range(min(cap, budget) + 1):
                rec(i + 1, budget - c, cur + [slots[i]] * c)

        rec(0, m_max, [])
    return seen


@pytest.mark.parametrize("bounds", [(1, 2, 2, 2), (2, 3, 3, 2), (3, 4, 3, 2),
                                    (3, 5, 5, 2)])
def test_enumeration_matches_brute_force(bounds):
    stream = list(mg.enumerate_connected(*bounds))
    codes = [mg.canonical_form(g) for g in stream]
    assert len(codes) == len(set(codes)), "duplicate up to isomorphism"
    assert set(codes) == brute_enum(*bounds)


def test_enumeration_examples():
    # hand count at n<=2, m<=2, parallel<=2, loop<=1:
    # K1, K1+loop, K2, K2+loop, digon
    got = list(mg.enumerate_connected(2, 2, 2, 1))
    assert len(got) == 5
    stream = list(mg.enumerate_connected(4, 6, 2, 1))
    assert any(mg.is_isomorphic(g, mg.k4()) for g in stream)
    assert list(mg.enumerate_connected(1, 1, 1, 1))  # K1 and K1+loop
    k1s = list(mg.enumerate_connected(1, 1, 1, 1))
    assert sorted((g.n, g.m) for g in k1s) == [(1, 0), (1, 1)]


def test_enumeration_shards_partition():
    full = sorted(mg.canonical_form(g)
                  for g in mg.enumerate_connected(3, 5, 3, 2))
    parts = []
    for i in range(4):
        parts.extend(mg.canonical_form(g)
                     for g in mg.enumerate_connected(3, 5, 3, 2, shard=(i, 4)))
    assert sorted(parts) == full


def test_min_degree_three_simple_graphs_contain_k4():
    # every simple connected graph with minimum degree >= 3 holds a K4
    # subdivision; exhaustive on up to 5 vertices
    found = 0
    for g in mg.enumerate_connected(5, 10, 1, 0):
        if g.n and min(g.degree(v) for v in range(g.n)) >= 3:
            found += 1
            assert mg.contains_subdivision(g, Pattern(mg.k4())) is not None
    assert found >= 2   # K4 itself, K5, and friends


def test_graph_file_round_trip():
    for g in [triangle(), mg.k4(), Multigraph(2, [(0, 0), (0, 1), (1, 1)]),
              Multigraph(1, []), Multigraph(3, [])]:
        assert mg.parse_graph(mg.write_graph(g)) == g


def test_graph_file_comments_and_errors():
    g = mg.parse_graph("# a comment\n2 1\n# another\n0 1\n")
    assert g == Multigraph(2, [(0, 1)])
    with pytest.raises(mg.ParseError, match="1"):
        mg.parse_graph("zork\n")
    with pytest.raises(mg.ParseError, match="3"):
        mg.parse_graph("2 1\n# fine\n0 7\n")
    with pytest.raises(mg.ParseError):
        mg.parse_graph("2 2\n0 1\n")


def test_edits():
    g = triangle()
    h = mg.subdivide_edge(g, 0)
    assert h.n == 4 and h.m == 4 and h.degree(3) == 2
    h = mg.add_pendant(g, 1)
    assert h.n == 4 and h.degree(3) == 1
    h = mg.double_edge(g, 2)
    assert h.m == 4 and h.edges[3] == g.edges[2]
    h, emap = mg.contract_edge(mg.skein(2), 0)
    assert h.n == 1 and h.m == 1 and h.is_loop(0) and emap == (None, 0)
    with pytest.raises(ValueError):
        mg.contract_edge(Multigraph(1, [(0, 0)]), 0)
