import functools

import pytest

from skein import multigraph as mg
from skein.decider import check_condition4
from skein.miner import ObstructionSet, group_dotted, mine, parse_patterns, sanity, write_patterns
from skein.multigraph import ParseError


@functools.lru_cache(maxsize=None)
def mined():
    return mine(5, 8, 5, 2)


def test_mined_set_contents():
    s = mined()
    assert any(mg.is_isomorphic(g, mg.k4()) for g in s.patterns)
    assert any(mg.is_isomorphic(g, mg.skein(5)) for g in s.patterns)
    # the 4-skein is signed-graphic, so it never shows up
    assert not any(mg.is_isomorphic(g, mg.skein(4)) for g in s.patterns)
    # members are reduced, rejected, and pairwise non-isomorphic
    codes = set()
    for g in s.patterns:
        assert mg.is_reduced(g)
        assert not check_condition4(g).accepted
        codes.add(mg.canonical_form(g))
    assert len(codes) == len(s.patterns)


def test_minimality_by_deletion_and_by_subdivision():
    s = mined()
    pats = [mg.Pattern(g) for g in s.patterns]
    for g in s.patterns:
        for e in range(g.m):
            h, _ = mg.delete_edge(g, e)
            h, _ = mg.drop_isolated(h)
            assert check_condition4(h).accepted
            assert all(mg.contains_subdivision(h, p) is None for p in pats)


def test_small_bounds_give_a_subset():
    small = mine(2, 5, 5, 2)
    big = {mg.canonical_form(g) for g in mined().patterns}
    got = {mg.canonical_form(g) for g in small.patterns}
    assert got and got < big
    # exactly the 2-vertex members: two 3-skein dressings and the 5-skein
    assert len(small.patterns) == 3


def test_group_dotted_covers_every_member():
    s = mined()
    covered = set()
    for p in s.classes:
        covered.add(mg.canonical_form(p.graph))
        if p.dotted is not None:
            q, _ = mg.contract_edge(p.graph, p.dotted)
            covered.add(mg.canonical_form(q))
    assert covered == {mg.canonical_form(g) for g in s.patterns}
    # contracted variants are genuine members, so every dotted pattern pairs
    # two of them
    for p in s.classes:
        if p.dotted is not None:
            assert not p.graph.is_loop(p.dotted)


def test_group_dotted_on_synthetic_sets():
    k4c, _ = mg.contract_edge(mg.k4(), 0)
    s = ObstructionSet(patterns=(k4c, mg.k4()), classes=(), bounds=())
    classes = group_dotted(s)
    assert len(classes) == 1 and classes[0].dotted is not None
    # singletons stay undotted
    s = ObstructionSet(patterns=(mg.k4(), mg.skein(5)), classes=(), bounds=())
    classes = group_dotted(s)
    assert len(classes) == 2 and all(p.dotted is None for p in classes)


def test_sanity_report():
    s = mined()
    rep = sanity(s)
    assert rep.all_have_minor
    by_exact = {}
    for e in rep.entries:
        assert e.minors, f"member {e.index} lacks minors"
        by_exact.setdefault(e.exact, []).append(e.index)
    # the named facts: K4-like members realize U(4,6), the 5-skein U(2,5)
    assert any(e.exact == "U(4,6)" and e.name == "K4" for e in rep.entries)
    assert any(e.exact == "U(2,5)" and e.name == "5-skein" for e in rep.entries)
    assert "uniform-minor" in rep.render()


def test_pattern_file_round_trip():
    s = mined()
    text = write_patterns(s.classes, bounds=s.bounds)
    back = parse_patterns(text)
    assert len(back) == len(s.classes)
    for p, q in zip(s.classes, back):
        assert p.graph == q.graph and p.dotted == q.dotted


def test_pattern_file_errors():
    with pytest.raises(ParseError):
        parse_patterns("1 0\n")               # no pattern header
    with pytest.raises(ParseError):
        parse_patterns("pattern 0\n2 2\n0 1\n")   # edge count mismatch
    with pytest.raises(ParseError):
        parse_patterns("pattern 0\n2 1\n0 1\ndotted 0\ndotted\n")
    # a dotted loop violates the pattern invariant
    with pytest.raises(ParseError):
        parse_patterns("pattern 0\n1 1\n0 0\ndotted 0\n")


def test_completeness_within_small_corpus():
    """Within a small corpus, the structural test rejects exactly the graphs
    containing a mined-pattern subdivision."""
    pats = mined().classes
    for g in mg.enumerate_connected(3, 6, 5, 2):
        rejected = not check_condition4(g).accepted
        embeds = any(mg.contains_subdivision(g, p) is not None for p in pats)
        assert rejected == embeds, list(g.edges)
