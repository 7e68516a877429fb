"""The bicircular matroid of a multigraph: an edge set is independent when
every component of the subgraph it spans has at most one cycle, equivalently
when each component has no more edges than vertices.  Supplies the oracle,
a closed-form rank, and the three-way circuit taxonomy.
"""

from __future__ import annotations

from . import multigraph as mg
from .matroid import OracleMatroid


class NotACircuit(ValueError):
    """classify_circuit was handed a set that is not a circuit."""


def _component_census(g, edge_ids):
    """For the subgraph spanned by edge_ids: list of (n_vertices, n_edges)
    per connected component."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ecount = {}
    for e in edge_ids:
        u, v = g.edges[e]
        for x in (u, v):
            if x not in parent:
                parent[x] = x
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            ecount[rv] = ecount.get(rv, 0) + ecount.pop(ru, 0) + 1
        else:
            ecount[ru] = ecount.get(ru, 0) + 1
    roots = {}
    for x in parent:
        roots.setdefault(find(x), []).append(x)
    return [(len(vs), ecount.get(r, 0)) for r, vs in roots.items()]


def bicircular(g):
    """The bicircular matroid of g as an independence oracle on edge ids."""

    def indep(subset):
        return all(ne <= nv for nv, ne in _component_census(g, subset))

    return OracleMatroid(range(g.m), indep, label="bicircular")


def bicircular_rank(g, edge_ids):
    """Closed form: |V(A)| minus the number of acyclic components of the
    spanned subgraph (equivalently sum of min(edges, vertices) over
    components)."""
    return sum(min(nv, ne) for nv, ne in _component_census(g, edge_ids))


def classify_circuit(g, edge_ids):
    """Name the shape of a bicircular circuit: "theta" (subdivision of the
    3-skein), "tight" (two loops at one vertex) or "loose" (two loops joined
    by an edge).  Raises NotACircuit on anything else."""
    c = frozenset(edge_ids)
    m = bicircular(g)
    if m.indep(c):
        raise NotACircuit("independent set")
    for e in c:
        if not m.indep(c - {e}):
            raise NotACircuit(f"not minimal: still dependent without {e}")
    sub, _, _ = mg.spanned_subgraph(g, c)
    red, _ = mg.reduce(sub)
    if red.n == 1 and red.m == 2:
        return "tight"
    if red.n == 2 and red.m == 3:
        loops = [e for e in range(3) if red.is_loop(e)]
        if not loops:
            return "theta"
        if len(loops) == 2:
            return "loose"
    raise NotACircuit("circuit reduces to an unrecognized shape")
