import itertools

import pytest

from skein import multigraph as mg
from skein.bicircular import bicircular
from skein.matroid import (GroundTooLarge, MinorWitness, OracleMatroid,
                           check_matroid_axioms, circuits, contract, delete,
                           direct_sum, has_uniform_minor,
                           is_isomorphic_matroid, minor, rank, restrict,
                           uniform, verify_minor_witness)
from skein.signed import all_positive, frame


def test_uniform_basics():
    u = uniform(2, 4)
    assert all(u.indep(frozenset(c)) for c in itertools.combinations(range(4), 2))
    assert all(not u.indep(frozenset(c))
               for c in itertools.combinations(range(4), 3))
    assert not uniform(0, 2).indep(frozenset([0]))
    assert uniform(3, 3).indep(frozenset(range(3)))


def test_rank():
    tri = mg.Multigraph(3, [(0, 1), (1, 2), (0, 2)])
    assert rank(bicircular(tri)) == 3
    assert rank(uniform(2, 4), frozenset()) == 0
    for c in itertools.combinations(range(4), 3):
        assert rank(uniform(2, 4), frozenset(c)) == 2


def test_circuits():
    assert sorted(map(sorted, circuits(uniform(2, 4)))) == \
        [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
    assert circuits(bicircular(mg.skein(3))) == [frozenset({0, 1, 2})]
    handcuff = mg.Multigraph(1, [(0, 0), (0, 0)])
    assert circuits(bicircular(handcuff)) == [frozenset({0, 1})]
    big = OracleMatroid(range(21), lambda a: True)
    with pytest.raises(GroundTooLarge):
        circuits(big)


def test_circuit_properties():
    for g in [mg.k4(), mg.skein(4), mg.Multigraph(2, [(0, 0), (0, 1), (1, 1)])]:
        m = bicircular(g)
        cs = circuits(m)
        for a, b in itertools.combinations(cs, 2):
            assert not a <= b and not b <= a
        for sub in m.subsets():
            if not m.indep(sub):
                assert any(c <= sub for c in cs)


def test_minor_operations():
    u = uniform(2, 4)
    assert is_isomorphic_matroid(contract(u, 0), uniform(1, 3)) is not None
    assert is_isomorphic_matroid(delete(uniform(2, 5), 0), u) is not None
    s = direct_sum(uniform(1, 2), uniform(2, 3))
    assert rank(s) == 3
    check_matroid_axioms(s)
    # contracting a dependent singleton acts as deletion
    loopy = OracleMatroid(range(3), lambda a: 0 not in a and len(a) <= 2)
    assert rank(contract(loopy, 0)) == rank(delete(loopy, 0)) == 2


def test_rank_identities():
    g = mg.Multigraph(3, [(0, 1), (1, 2), (0, 2), (0, 0)])
    m = bicircular(g)
    e = 0
    md, mc = delete(m, e), contract(m, e)
    re = rank(m, frozenset([e]))
    for sub in md.subsets():
        assert rank(md, sub) == rank(m, sub)
        assert rank(mc, sub) == rank(m, sub | {e}) - re


def test_axioms_on_graph_oracles():
    for g in mg.enumerate_connected(3, 5, 3, 2):
        check_matroid_axioms(bicircular(g))
        check_matroid_axioms(frame(all_positive(g)))
    broken = OracleMatroid(range(2), lambda a: a != frozenset([0]))
    with pytest.raises(AssertionError):
        check_matroid_axioms(broken)


def test_isomorphism():
    assert is_isomorphic_matroid(uniform(2, 4), uniform(2, 4)) is not None
    assert is_isomorphic_matroid(uniform(2, 4), uniform(3, 4)) is None
    a = bicircular(mg.skein(4))
    bij = is_isomorphic_matroid(a, uniform(2, 4))
    assert bij is not None and sorted(bij) == [0, 1, 2, 3]
    # symmetric
    assert is_isomorphic_matroid(uniform(2, 4), a) is not None
    with pytest.raises(GroundTooLarge):
        is_isomorphic_matroid(uniform(2, 11), uniform(2, 11))


def test_uniform_minor_search_and_replay():
    b5 = bicircular(mg.skein(5))
    w = has_uniform_minor(b5, 2, 5)
    assert w is not None and not w.contract and not w.delete
    assert verify_minor_witness(b5, w)

    bk4 = bicircular(mg.k4())
    for target in ((4, 6), (3, 5)):
        w = has_uniform_minor(bk4, *target)
        assert w is not None and verify_minor_witness(bk4, w)
    assert has_uniform_minor(bk4, 2, 5) is None

    tri = bicircular(mg.Multigraph(3, [(0, 1), (1, 2), (0, 2)]))
    assert has_uniform_minor(tri, 2, 4) is None

    # tampered witnesses must not verify
    w = has_uniform_minor(b5, 2, 5)
    bad = MinorWitness(contract=w.contract, delete=w.delete,
                       bijection=w.bijection, target=(3, 5))
    assert not verify_minor_witness(b5, bad)


def test_restrict_and_minor():
    m = bicircular(mg.k4())
    r = restrict(m, frozenset([0, 1, 2]))
    assert sorted(r.ground) == [0, 1, 2]
    assert rank(r) == 3
    q = minor(m, frozenset([0]), frozenset([1]))
    assert sorted(q.ground) == [2, 3, 4, 5]
    for sub in q.subsets():
        assert q.indep(sub) == m.indep(sub | {0})
    with pytest.raises(ValueError):
        minor(m, frozenset([0]), frozenset([0]))
