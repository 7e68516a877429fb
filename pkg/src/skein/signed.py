"""Signed graphs (each edge carries +1 or -1), circle signs, the frame
matroid, and its incidence representation over the three-element field.

Frame independence: every component of the spanned subgraph has at most as
many edges as vertices, and a component attaining equality must close a
negative circle.  The incidence matrix assigns a link column 1 at the lower
endpoint and -sigma at the higher, a negative loop a single 1, a positive
loop the zero column; column independence mod 3 then matches frame
independence (certified subset-by-subset in the test suite).

Text format: like the graph format with a sign column, "u v +" / "u v -".
"""

from __future__ import annotations

from dataclasses import dataclass

from . import multigraph as mg
from .matroid import OracleMatroid
from .multigraph import Multigraph, ParseError


class NotACircle(ValueError):
    """circle_sign was handed an edge set that is not a single circle."""


@dataclass(frozen=True)
class SignedGraph:
    graph: Multigraph
    sigma: tuple

    def __post_init__(self):
        if len(self.sigma) != self.graph.m:
            raise ValueError("sigma must cover every edge")
        if any(s not in (1, -1) for s in self.sigma):
            raise ValueError("signs are +1 or -1")

    @property
    def m(self):
        return self.graph.m


def all_positive(g):
    """View a plain graph as a signed graph; its frame matroid coincides
    with the cycle matroid."""
    return SignedGraph(g, (1,) * g.m)


def all_negative(g):
    return SignedGraph(g, (-1,) * g.m)


def parse_signed(text, source="<string>"):
    n = m = None
    edges = []
    signs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise ParseError(f"{source}:{lineno}: expected 'n m' header")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"{source}:{lineno}: non-integer header") from None
            continue
        if len(parts) != 3 or parts[2] not in ("+", "-"):
            raise ParseError(f"{source}:{lineno}: expected 'u v +' or 'u v -'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"{source}:{lineno}: non-integer endpoints") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"{source}:{lineno}: endpoint out of range")
        edges.append((u, v))
        signs.append(1 if parts[2] == "+" else -1)
    if n is None:
        raise ParseError(f"{source}: missing 'n m' header")
    if len(edges) != m:
        raise ParseError(f"{source}: header promises {m} edges, found {len(edges)}")
    return SignedGraph(Multigraph(n, edges), tuple(signs))


def write_signed(s):
    lines = [f"{s.graph.n} {s.graph.m}"]
    for (u, v), sg in zip(s.graph.edges, s.sigma):
        lines.append(f"{u} {v} {'+' if sg == 1 else '-'}")
    return "\n".join(lines) + "\n"


def circle_sign(s, edge_ids):
    """Sign of a circle: the product of its edge signs.  The edge set must
    span a connected 2-regular subgraph (a single loop and a digon count)."""
    ids = sorted(edge_ids)
    if not ids:
        raise NotACircle("empty edge set")
    g = s.graph
    deg = {}
    for e in ids:
        u, v = g.edges[e]
        deg[u] = deg.get(u, 0) + 2 if u == v else deg.get(u, 0) + 1
        if u != v:
            deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()):
        raise NotACircle("not 2-regular")
    sub, _, _ = mg.spanned_subgraph(g, ids)
    if len(mg.components(sub)) != 1:
        raise NotACircle("not connected")
    sign = 1
    for e in ids:
        sign *= s.sigma[e]
    return sign


def _components_with_balance(s, edge_ids):
    """Per component of the spanned subgraph: (n_vertices, n_edges,
    balanced) where balanced means no negative circle, decided by a
    switching-potential sweep."""
    g = s.graph
    adj = {}
    for e in edge_ids:
        u, v = g.edges[e]
        adj.setdefault(u, []).append((v, e))
        if u != v:
            adj.setdefault(v, []).append((u, e))
    seen = {}
    out = []
    for start in sorted(adj):
        if start in seen:
            continue
        seen[start] = 1
        stack = [start]
        verts = {start}
        nedges = set()
        balanced = True
        while stack:
            x = stack.pop()
            for y, e in adj[x]:
                nedges.add(e)
                if x == y:
                    if s.sigma[e] == -1:
                        balanced = False
                    continue
                want = seen[x] * s.sigma[e]
                if y not in seen:
                    seen[y] = want
                    verts.add(y)
                    stack.append(y)
                elif seen[y] != want:
                    balanced = False
        out.append((len(verts), len(nedges), balanced))
    return out


def frame(s):
    """The frame matroid of a signed graph as an independence oracle: at
    most one cycle per component and that cycle, if present, negative."""

    def indep(subset):
        for nv, ne, balanced in _components_with_balance(s, subset):
            if ne > nv:
                return False
            if ne == nv and balanced:
                return False
        return True

    return OracleMatroid(range(s.m), indep, label="frame")


def frame_rank(s, edge_ids):
    """Closed form: |V(A)| minus the number of components containing no
    negative circle."""
    return sum(nv - (1 if balanced else 0)
               for nv, ne, balanced in _components_with_balance(s, edge_ids))


# ---------------------------------------------------------------------------
# incidence representation over GF(3)

@dataclass(frozen=True)
class GF3Matrix:
    """Dense columns over GF(3); rows indexed by vertices, columns by edge
    ids."""
    rows: int
    cols: tuple     # tuple of column tuples, entries in {0,1,2}

    def pretty(self):
        grid = []
        for r in range(self.rows):
            grid.append(" ".join(str(col[r]) for col in self.cols))
        return "\n".join(grid) + ("\n" if grid else "")


def gf3_incidence(s):
    """Incidence matrix representing the frame matroid: a link gets 1 at its
    lower endpoint and -sigma at the higher; a negative loop a lone 1; a
    positive loop the zero column."""
    g = s.graph
    cols = []
    for e, (u, v) in enumerate(g.edges):
        col = [0] * g.n
        if u == v:
            if s.sigma[e] == -1:
                col[u] = 1
        else:
            col[u] = 1
            col[v] = (-s.sigma[e]) % 3
        cols.append(tuple(col))
    return GF3Matrix(rows=g.n, cols=tuple(cols))


def gf3_independent(matrix, col_ids):
    """Gaussian elimination mod 3 over the selected columns."""
    vecs = [list(matrix.cols[c]) for c in sorted(col_ids)]
    pivot_rows = []
    for vec in vecs:
        for prow, pvec in pivot_rows:
            factor = vec[prow]
            if factor:
                inv = pvec[prow]           # 1 or 2; 2 is its own inverse mod 3
                scale = (factor * (1 if inv == 1 else 2)) % 3
                for i in range(len(vec)):
                    vec[i] = (vec[i] - scale * pvec[i]) % 3
        row = next((i for i, x in enumerate(vec) if x), None)
        if row is None:
            return False
        pivot_rows.append((row, vec))
    return True
