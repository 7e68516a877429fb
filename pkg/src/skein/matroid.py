"""Oracle-based matroids: a ground set plus an independence predicate, with
rank, circuits, minors, isomorphism and uniform-minor search built on top.

Nothing here assumes the oracle really is a matroid; `check_matroid_axioms`
verifies downward closure and exchange exhaustively on small ground sets and
is run over every oracle the test suite constructs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class GroundTooLarge(ValueError):
    """An exhaustive operation was asked for past its configured bound."""


class OracleMatroid:
    """Ground set of hashable element ids plus an independence predicate."""

    __slots__ = ("ground", "_indep", "label")

    def __init__(self, ground, indep, label=None):
        self.ground = tuple(sorted(ground))
        self._indep = indep
        self.label = label

    def indep(self, subset):
        return self._indep(frozenset(subset))

    @property
    def size(self):
        return len(self.ground)

    def subsets(self, max_size=None):
        top = len(self.ground) if max_size is None else max_size
        for k in range(top + 1):
            yield from (frozenset(c) for c in itertools.combinations(self.ground, k))

    def __repr__(self):
        tag = self.label or "oracle"
        return f"OracleMatroid({tag}, {len(self.ground)} elements)"


def rank(m, subset=None):
    """Greedy rank of a subset (whole ground set by default)."""
    pool = sorted(m.ground if subset is None else subset)
    basis = set()
    for e in pool:
        if m.indep(frozenset(basis | {e})):
            basis.add(e)
    return len(basis)


def max_independent(m, subset=None):
    """A maximal independent subset of `subset`, grown greedily in id order."""
    pool = sorted(m.ground if subset is None else subset)
    basis = set()
    for e in pool:
        if m.indep(frozenset(basis | {e})):
            basis.add(e)
    return frozenset(basis)


def circuits(m):
    """All minimal dependent subsets.  Exhaustive; bounded at 20 elements."""
    if len(m.ground) > 20:
        raise GroundTooLarge(f"circuits on {len(m.ground)} elements")
    out = []
    for sub in m.subsets():
        if m.indep(sub):
            continue
        if all(m.indep(sub - {e}) for e in sub):
            out.append(sub)
    return out


def uniform(k, n):
    """U_{k,n}: n elements 0..n-1, independent = size at most k."""
    if not 0 <= k <= n:
        raise ValueError(f"uniform({k},{n})")
    return OracleMatroid(range(n), lambda a: len(a) <= k, label=f"U({k},{n})")


def delete(m, e):
    ground = [x for x in m.ground if x != e]
    return OracleMatroid(ground, m._indep, label=m.label)


def contract(m, e):
    if m.indep(frozenset([e])):
        base = m._indep
        return OracleMatroid([x for x in m.ground if x != e],
                             lambda a, _b=base, _e=e: _b(a | {_e}),
                             label=m.label)
    return delete(m, e)


def minor(m, contract_set, delete_set):
    """M / contract_set \\ delete_set via a basis of the contraction set."""
    contract_set = frozenset(contract_set)
    delete_set = frozenset(delete_set)
    if contract_set & delete_set:
        raise ValueError("contract and delete sets overlap")
    basis = max_independent(m, contract_set)
    ground = [x for x in m.ground if x not in contract_set and x not in delete_set]
    base = m._indep
    return OracleMatroid(ground,
                         lambda a, _b=base, _c=basis: _b(a | _c),
                         label=m.label)


def restrict(m, keep):
    keep = frozenset(keep)
    return OracleMatroid([x for x in m.ground if x in keep], m._indep,
                         label=m.label)


def direct_sum(m1, m2):
    """Direct sum on a fresh ground set 0..n1+n2-1 (m1's elements first)."""
    n1 = len(m1.ground)
    back1 = dict(enumerate(m1.ground))
    back2 = {i + n1: x for i, x in enumerate(m2.ground)}
    i1, i2 = m1._indep, m2._indep

    def indep(a):
        left = frozenset(back1[i] for i in a if i < n1)
        right = frozenset(back2[i] for i in a if i >= n1)
        return i1(left) and i2(right)

    return OracleMatroid(range(n1 + len(m2.ground)), indep, label="sum")


def check_matroid_axioms(m, max_elements=12):
    """Exhaustively verify downward closure and independent-set exchange.
    Raises AssertionError naming the violation; bounded to keep it sane."""
    if len(m.ground) > max_elements:
        raise GroundTooLarge(f"axiom check on {len(m.ground)} elements")
    assert m.indep(frozenset()), "empty set dependent"
    indep_sets = [s for s in m.subsets() if m.indep(s)]
    members = set(indep_sets)
    for s in indep_sets:
        for e in s:
            assert s - {e} in members, f"downward closure fails at {set(s)} - {e}"
    by_size = {}
    for s in indep_sets:
        by_size.setdefault(len(s), []).append(s)
    for a in indep_sets:
        for b in by_size.get(len(a) + 1, []):
            if any(a | {e} in members for e in b - a):
                continue
            raise AssertionError(f"exchange fails for {set(a)} into {set(b)}")
    return True


# ---------------------------------------------------------------------------
# isomorphism

def is_isomorphic_matroid(m, n):
    """A ground-set bijection preserving independence both ways, or None.

    Brute force over bijections, pruned by per-element circuit-membership
    fingerprints; bounded at 10 elements each side.
    """
    if len(m.ground) > 10 or len(n.ground) > 10:
        raise GroundTooLarge("isomorphism search beyond 10 elements")
    if len(m.ground) != len(n.ground):
        return None
    cm, cn = circuits(m), circuits(n)
    if sorted(len(c) for c in cm) != sorted(len(c) for c in cn):
        return None

    def fingerprint(elem, circs):
        return tuple(sorted(len(c) for c in circs if elem in c))

    fm = {e: fingerprint(e, cm) for e in m.ground}
    fn = {e: fingerprint(e, cn) for e in n.ground}
    if sorted(fm.values()) != sorted(fn.values()):
        return None
    cn_set = set(cn)
    order = sorted(m.ground, key=lambda e: fm[e])

    def extend(idx, mapping, taken):
        if idx == len(order):
            return dict(mapping)
        e = order[idx]
        for f in n.ground:
            if f in taken or fn[f] != fm[e]:
                continue
            mapping[e] = f
            ok = True
            for c in cm:
                if e in c and all(x in mapping for x in c):
                    if frozenset(mapping[x] for x in c) not in cn_set:
                        ok = False
                        break
            if ok:
                res = extend(idx + 1, mapping, taken | {f})
                if res is not None:
                    return res
            del mapping[e]
        return None

    bij = extend(0, {}, frozenset())
    if bij is None:
        return None
    # circuits determine the matroid, but confirm independence agreement
    # outright on small grounds to keep this self-certifying
    for sub in m.subsets():
        if m.indep(sub) != n.indep(frozenset(bij[x] for x in sub)):
            return None
    return bij


# ---------------------------------------------------------------------------
# uniform minors

@dataclass(frozen=True)
class MinorWitness:
    """Evidence that M / contract \\ delete is the uniform matroid U_{k,n}:
    the contract set is independent in the host and the bijection carries the
    remaining elements to 0..n-1."""
    contract: frozenset
    delete: frozenset
    bijection: tuple          # pairs (host element, target element)
    target: tuple             # (k, n)

    def bijection_map(self):
        return dict(self.bijection)


def verify_minor_witness(m, w):
    """Replay a MinorWitness and confirm uniform independence on every
    subset of the remaining elements."""
    k, n = w.target
    remaining = [x for x in m.ground
                 if x not in w.contract and x not in w.delete]
    bij = w.bijection_map()
    if sorted(bij) != sorted(remaining):
        return False
    if sorted(bij.values()) != list(range(n)):
        return False
    if not m.indep(w.contract):
        return False
    sub = minor(m, w.contract, w.delete)
    for s in sub.subsets():
        if sub.indep(s) != (len(s) <= k):
            return False
    return True


def has_uniform_minor(m, k, n):
    """Search for a U_{k,n} minor.  Contracts only independent sets of size
    rank(M) - k (every minor has such a normal form), then picks n of the
    remaining elements avoiding loops and, for k >= 2, parallel pairs.
    Bounded at 14 elements."""
    if len(m.ground) > 14:
        raise GroundTooLarge(f"uniform-minor search on {len(m.ground)} elements")
    r = rank(m)
    csize = r - k
    if csize < 0 or len(m.ground) - csize < n:
        return None
    base = m._indep
    for cset in itertools.combinations(m.ground, csize):
        cfro = frozenset(cset)
        if not base(cfro):
            continue
        rest = [x for x in m.ground if x not in cfro]
        nonloops = [x for x in rest if base(cfro | {x})]
        if len(nonloops) < n:
            continue
        if k >= 2:
            classes = []
            seen = set()
            for x in nonloops:
                if x in seen:
                    continue
                cls = [x]
                for y in nonloops:
                    if y != x and y not in seen and not base(cfro | {x, y}):
                        cls.append(y)
                        seen.add(y)
                seen.add(x)
                classes.append(cls)
            pool = [cls[0] for cls in classes]
        else:
            pool = nonloops
        if len(pool) < n:
            continue
        for rset in itertools.combinations(pool, n):
            ok = True
            for s in itertools.combinations(rset, k + 1):
                if base(cfro | frozenset(s)):
                    ok = False
                    break
            if not ok:
                continue
            for s in itertools.combinations(rset, k):
                if not base(cfro | frozenset(s)):
                    ok = False
                    break
            if not ok:
                continue
            dset = frozenset(x for x in rest if x not in rset)
            w = MinorWitness(
                contract=cfro, delete=dset,
                bijection=tuple((x, i) for i, x in enumerate(sorted(rset))),
                target=(k, n))
            return w
    return None
