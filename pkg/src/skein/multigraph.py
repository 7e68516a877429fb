"""Multigraphs with loops and parallel edges, and the graph machinery built
on them: connectivity, blocks, pendant/series reduction with a replayable
log, topological-subdivision search, canonical forms, and isomorphism-free
enumeration of small connected multigraphs.

Vertices are integers 0..n-1.  Edges carry dense integer ids 0..m-1 and are
unordered endpoint pairs; u == v encodes a loop.  Loops count 2 toward
degree.  Graphs are immutable values; every operation is a pure function.

Text format: optional '#' comment lines, one "n m" header line, then m lines
"u v" (u == v encodes a loop).  Edge id = position among the edge lines.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


class ParseError(ValueError):
    """Malformed graph text; the message names the offending line."""


class Multigraph:
    """An immutable multigraph on vertices 0..n-1 with dense edge ids."""

    __slots__ = ("n", "edges", "_incident", "_degrees")

    def __init__(self, n, edges=()):
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"endpoint out of range: ({u},{v}) with n={n}")
            norm.append((u, v) if u <= v else (v, u))
        self.n = n
        self.edges = tuple(norm)
        self._incident = None
        self._degrees = None

    @property
    def m(self):
        return len(self.edges)

    def endpoints(self, e):
        return self.edges[e]

    def is_loop(self, e):
        u, v = self.edges[e]
        return u == v

    def incident(self, v):
        """Edge ids incident to v; a loop appears once."""
        if self._incident is None:
            inc = [[] for _ in range(self.n)]
            for e, (a, b) in enumerate(self.edges):
                inc[a].append(e)
                if b != a:
                    inc[b].append(e)
            self._incident = [tuple(x) for x in inc]
        return self._incident[v]

    def degree(self, v):
        """Vertex degree; a loop contributes 2."""
        if self._degrees is None:
            deg = [0] * self.n
            for a, b in self.edges:
                deg[a] += 1
                deg[b] += 1
            self._degrees = deg
        return self._degrees[v]

    def loops_at(self, v):
        return [e for e in self.incident(v) if self.is_loop(e)]

    def other_end(self, e, v):
        a, b = self.edges[e]
        return b if v == a else a

    def __eq__(self, other):
        return (isinstance(other, Multigraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Multigraph({self.n}, {list(self.edges)})"


# ---------------------------------------------------------------------------
# text format

def parse_graph(text, source="<string>"):
    """Parse the graph text format.  Errors name the 1-based line number."""
    n = m = None
    edges = []
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
            if n < 0 or m < 0:
                raise ParseError(f"{source}:{lineno}: negative header values")
            continue
        if len(parts) != 2:
            raise ParseError(f"{source}:{lineno}: expected 'u v' edge line")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"{source}:{lineno}: non-integer endpoints") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"{source}:{lineno}: endpoint out of range")
        edges.append((u, v))
    if n is None:
        raise ParseError(f"{source}: missing 'n m' header")
    if len(edges) != m:
        raise ParseError(f"{source}: header promises {m} edges, found {len(edges)}")
    return Multigraph(n, edges)


def write_graph(g):
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# connectivity and blocks

def components(g):
    """Partition of 0..n-1 into connected classes; isolated vertices are
    singleton classes.  Classes are sorted by smallest member."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for e in g.incident(v):
                w = g.other_end(e, v)
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def blocks(g):
    """Partition the edges into maximal 2-connected pieces.

    Returns (blocks, cut_vertices): each loop and each bridge is a block of
    its own; cut vertices are the vertices meeting at least two blocks.
    """
    disc = [0] * g.n
    low = [0] * g.n
    used = [False] * g.m
    stack = []
    out = []
    timer = itertools.count(1)

    def dfs(u):
        disc[u] = low[u] = next(timer)
        for e in g.incident(u):
            if used[e] or g.is_loop(e):
                continue
            used[e] = True
            w = g.other_end(e, u)
            if disc[w] == 0:
                stack.append(e)
                dfs(w)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    comp = []
                    while True:
                        f = stack.pop()
                        comp.append(f)
                        if f == e:
                            break
                    out.append(frozenset(comp))
            else:
                stack.append(e)
                low[u] = min(low[u], disc[w])

    for s in range(g.n):
        if disc[s] == 0:
            dfs(s)
    for e in range(g.m):
        if g.is_loop(e):
            out.append(frozenset([e]))
    out.sort(key=lambda b: sorted(b))

    membership = [0] * g.n
    for b in out:
        touched = set()
        for e in b:
            touched.update(g.edges[e])
        for v in touched:
            membership[v] += 1
    cuts = frozenset(v for v in range(g.n) if membership[v] >= 2)
    return out, cuts


def classify_block(g, b):
    """Classify a block: ("loop", None), ("skein", k), or ("other", None).

    A k-skein spans exactly two vertices with k parallel links; a bridge is
    the 1-skein.
    """
    ids = sorted(b)
    if len(ids) == 1 and g.is_loop(ids[0]):
        return ("loop", None)
    span = set()
    for e in ids:
        if g.is_loop(e):
            return ("other", None)
        span.update(g.edges[e])
    if len(span) == 2:
        return ("skein", len(ids))
    return ("other", None)


def block_is_cycle(g, b):
    """True iff the block's edges form a cycle (2-regular within the block);
    a digon counts, a lone loop or bridge does not."""
    ids = sorted(b)
    if len(ids) < 2:
        return False
    deg = {}
    for e in ids:
        u, v = g.edges[e]
        if u == v:
            return False
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return all(d == 2 for d in deg.values()) and len(deg) == len(ids)


# ---------------------------------------------------------------------------
# pendant/series reduction

@dataclass(frozen=True)
class PendantStep:
    """Inverse record: vertex and its edge removed by a pendant deletion."""
    vertex: int
    edge: int
    attach: int


@dataclass(frozen=True)
class SeriesStep:
    """Inverse record for a series contraction at vertex `vertex`: `removed`
    (vertex-`removed_far` link) was contracted, leaving `kept` spanning
    {kept_far, removed_far}."""
    vertex: int
    kept: int
    removed: int
    kept_far: int
    removed_far: int


@dataclass(frozen=True)
class ReductionLog:
    """Everything needed to rebuild the input from the reduced graph.

    steps are in application order and use original ids; vertex_map and
    edge_map take reduced ids back to original ids.
    """
    original_n: int
    steps: tuple
    vertex_map: tuple
    edge_map: tuple

    def original_edge(self, reduced_edge):
        return self.edge_map[reduced_edge]

    def original_vertex(self, reduced_vertex):
        return self.vertex_map[reduced_vertex]


def reduce(g, rng=None):
    """Fixpoint of pendant deletion and series contraction.

    Deletes any degree-1 vertex with its edge; contracts one of the two link
    edges at any loopless degree-2 vertex (creating a loop if the two links
    are parallel).  A vertex whose degree-2 comes from a single loop is kept.
    Returns (reduced graph, ReductionLog).  With `rng`, applicable steps are
    chosen at random instead of first-found (the result is unique up to
    isomorphism either way).
    """
    ends = {e: pair for e, pair in enumerate(g.edges)}
    alive = set(range(g.n))
    inc = {v: set() for v in alive}
    for e, (u, v) in ends.items():
        inc[u].add(e)
        inc[v].add(e)

    def degree(v):
        return sum(2 if ends[e][0] == ends[e][1] else 1 for e in inc[v])

    steps = []
    while True:
        candidates = []
        for v in sorted(alive):
            d = degree(v)
            if d == 1:
                candidates.append(("pendant", v))
            elif d == 2 and len(inc[v]) == 2:
                candidates.append(("series", v))
        if not candidates:
            break
        if rng is None:
            op, v = candidates[0]
        else:
            op, v = candidates[rng.randrange(len(candidates))]
        if op == "pendant":
            (e,) = inc[v]
            a, b = ends[e]
            u = b if v == a else a
            inc[u].discard(e)
            del ends[e]
            alive.remove(v)
            del inc[v]
            steps.append(PendantStep(vertex=v, edge=e, attach=u))
        else:
            e1, e2 = sorted(inc[v])
            if rng is not None and rng.random() < 0.5:
                e1, e2 = e2, e1
            a = ends[e1][1] if ends[e1][0] == v else ends[e1][0]
            b = ends[e2][1] if ends[e2][0] == v else ends[e2][0]
            # contract e2: v merges into b, e1 becomes {a,b}
            inc[b].discard(e2)
            del ends[e2]
            ends[e1] = (a, b) if a <= b else (b, a)
            inc[b].add(e1)
            alive.remove(v)
            del inc[v]
            steps.append(SeriesStep(vertex=v, kept=e1, removed=e2,
                                    kept_far=a, removed_far=b))

    vmap = sorted(alive)
    vinv = {orig: i for i, orig in enumerate(vmap)}
    emap = sorted(ends)
    reduced = Multigraph(len(vmap),
                         [(vinv[ends[e][0]], vinv[ends[e][1]]) for e in emap])
    log = ReductionLog(original_n=g.n, steps=tuple(steps),
                       vertex_map=tuple(vmap), edge_map=tuple(emap))
    return reduced, log


def replay(reduced, log):
    """Rebuild the original graph from a reduced graph and its log."""
    ends = {log.edge_map[e]: (log.vertex_map[u], log.vertex_map[v])
            for e, (u, v) in enumerate(reduced.edges)}
    for step in reversed(log.steps):
        if isinstance(step, PendantStep):
            ends[step.edge] = (step.vertex, step.attach)
        else:
            ends[step.kept] = (step.kept_far, step.vertex)
            ends[step.removed] = (step.vertex, step.removed_far)
    return Multigraph(log.original_n, [ends[e] for e in sorted(ends)])


def is_reduced(g):
    """No degree-1 vertices and no loopless degree-2 vertices."""
    for v in range(g.n):
        d = g.degree(v)
        if d == 1:
            return False
        if d == 2 and not g.loops_at(v):
            return False
    return True


# ---------------------------------------------------------------------------
# edits (used by reductions' inverses, tests and the miner)

def delete_edge(g, e):
    """Drop one edge; remaining edges are renumbered densely in order.
    Returns (graph, edge_map new id -> old id)."""
    keep = [i for i in range(g.m) if i != e]
    return Multigraph(g.n, [g.edges[i] for i in keep]), tuple(keep)


def drop_isolated(g):
    """Remove vertices of degree 0.  Returns (graph, vertex_map new -> old)."""
    keep = [v for v in range(g.n) if g.degree(v) > 0]
    if not keep:
        keep = [0] if g.n else []
    vinv = {orig: i for i, orig in enumerate(keep)}
    return Multigraph(len(keep), [(vinv[u], vinv[v]) for u, v in g.edges]), tuple(keep)


def contract_edge(g, e):
    """Contract a link: its endpoints merge, parallel copies become loops.
    Returns (graph, edge_map old id -> new id or None for e)."""
    u, v = g.edges[e]
    if u == v:
        raise ValueError("cannot contract a loop")
    emap = []
    edges = []
    relabel = lambda x: u if x == v else (x if x < v else x - 1)
    for i, (a, b) in enumerate(g.edges):
        if i == e:
            emap.append(None)
            continue
        emap.append(len(edges))
        edges.append((relabel(a), relabel(b)))
    return Multigraph(g.n - 1, edges), tuple(emap)


def subdivide_edge(g, e):
    """Insert a degree-2 vertex in edge e.  The new vertex is n; edge e keeps
    its id for one half, the other half gets id m."""
    w = g.n
    u, v = g.edges[e]
    edges = list(g.edges)
    edges[e] = (u, w)
    edges.append((w, v))
    return Multigraph(g.n + 1, edges)


def add_pendant(g, v):
    """Attach a new degree-1 vertex to v; the new edge gets id m."""
    return Multigraph(g.n + 1, list(g.edges) + [(v, g.n)])


def double_edge(g, e):
    """Add a parallel copy of edge e with id m."""
    return Multigraph(g.n, list(g.edges) + [g.edges[e]])


def disjoint_union(g, h):
    """Place h next to g: h's vertices shift by g.n, edge ids by g.m."""
    edges = list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges]
    return Multigraph(g.n + h.n, edges)


def spanned_subgraph(g, edge_ids):
    """Subgraph spanned by an edge set, relabeled densely.
    Returns (graph, vertex_map new -> old, edge_map new -> old)."""
    ids = sorted(edge_ids)
    verts = sorted({x for e in ids for x in g.edges[e]})
    vinv = {orig: i for i, orig in enumerate(verts)}
    sub = Multigraph(len(verts), [(vinv[g.edges[e][0]], vinv[g.edges[e][1]])
                                  for e in ids])
    return sub, tuple(verts), tuple(ids)


# ---------------------------------------------------------------------------
# canonical forms and isomorphism

def _refine_colors(g):
    """Iterated neighborhood refinement; returns a color id per vertex.
    Isomorphism-invariant, so equal graphs get matching color classes."""
    loops = [0] * g.n
    linkmult = [dict() for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        if u == v:
            loops[u] += 1
        else:
            linkmult[u][v] = linkmult[u].get(v, 0) + 1
            linkmult[v][u] = linkmult[v].get(u, 0) + 1
    colors = [(loops[v], tuple(sorted(linkmult[v].values()))) for v in range(g.n)]
    for _ in range(g.n):
        palette = {c: i for i, c in enumerate(sorted(set(colors)))}
        coded = [palette[c] for c in colors]
        new = []
        for v in range(g.n):
            nbr = tuple(sorted((coded[w], k) for w, k in linkmult[v].items()))
            new.append((coded[v], nbr))
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    palette = {c: i for i, c in enumerate(sorted(set(colors)))}
    return [palette[c] for c in colors]


def _consistent_perms(g):
    """All vertex permutations respecting the refined color classes, as
    tuples p with p[old] = new."""
    colors = _refine_colors(g)
    classes = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    ordered = [classes[c] for c in sorted(classes)]
    starts = []
    pos = 0
    for cls in ordered:
        starts.append(pos)
        pos += len(cls)
    for assignment in itertools.product(*[itertools.permutations(cls) for cls in ordered]):
        p = [0] * g.n
        for cls_perm, start in zip(assignment, starts):
            for offset, v in enumerate(cls_perm):
                p[v] = start + offset
        yield tuple(p)


def _code_under(g, p):
    out = []
    for u, v in g.edges:
        a, b = p[u], p[v]
        out.append((a, b) if a <= b else (b, a))
    out.sort()
    return tuple(out)


def canonical_form(g):
    """Lexicographically minimal sorted edge multiset over vertex
    relabelings (restricted to refinement-consistent ones, which is
    exhaustive within isomorphism classes)."""
    best = None
    for p in _consistent_perms(g):
        code = _code_under(g, p)
        if best is None or code < best:
            best = code
    return (g.n, best if best is not None else ())


def is_isomorphic(g, h):
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_form(g) == canonical_form(h)


def automorphisms(g):
    """All vertex permutations mapping the edge multiset to itself.

    Every automorphism composes a canonical placement with the inverse of
    another, so collecting the placements that achieve the canonical code
    yields the whole group."""
    best = None
    placements = []
    for p in _consistent_perms(g):
        code = _code_under(g, p)
        if best is None or code < best:
            best = code
            placements = [p]
        elif code == best:
            placements.append(p)
    p0inv = [0] * g.n
    for v, w in enumerate(placements[0]):
        p0inv[w] = v
    return [tuple(p0inv[p[v]] for v in range(g.n)) for p in placements]


# ---------------------------------------------------------------------------
# subdivision patterns and embeddings

@dataclass(frozen=True)
class Pattern:
    """A reduced multigraph, optionally with one dotted link; the pattern
    stands for the pair {graph, graph with the dotted edge contracted}."""
    graph: Multigraph
    dotted: int | None = None
    name: str = ""

    def __post_init__(self):
        if self.dotted is not None and self.graph.is_loop(self.dotted):
            raise ValueError("dotted edge must be a link")
        if not is_reduced(self.graph):
            raise ValueError("pattern graphs must be reduced "
                             "(no pendant or loopless degree-2 vertices)")

    def variants(self):
        """(tag, graph) pairs this pattern stands for."""
        out = [("full", self.graph)]
        if self.dotted is not None:
            contracted, _ = contract_edge(self.graph, self.dotted)
            out.append(("contracted", contracted))
        return out


@dataclass(frozen=True)
class Embedding:
    """A topological embedding of a pattern variant: injective branch-vertex
    map plus one internally disjoint host path (edge-id sequence) per
    pattern edge.  A pattern loop maps to a host cycle at its base vertex."""
    variant: str
    branch: tuple          # pairs (pattern vertex, host vertex)
    paths: tuple           # pairs (pattern edge, tuple of host edge ids)

    def edge_set(self):
        return frozenset(e for _, path in self.paths for e in path)

    def branch_map(self):
        return dict(self.branch)

    def path_map(self):
        return {pe: tuple(path) for pe, path in self.paths}


def _paths_between(g, a, b, blocked_vertices, used_edges):
    """All simple a-b paths (edge-id sequences) whose internal vertices
    avoid blocked_vertices and whose edges avoid used_edges."""
    out = []

    def walk(v, path_edges, path_verts):
        for e in g.incident(v):
            if e in used_edges or e in path_edges or g.is_loop(e):
                continue
            w = g.other_end(e, v)
            if w == b:
                out.append(path_edges + [e])
                continue
            if w in blocked_vertices or w in path_verts:
                continue
            walk(w, path_edges + [e], path_verts | {w})

    walk(a, [], {a})
    return out


def _cycles_at(g, a, blocked_vertices, used_edges):
    """All cycles through a (as edge-id sequences) internally avoiding
    blocked_vertices and used_edges.  A host loop at a is a 1-edge cycle."""
    out = []
    for e in g.incident(a):
        if e in used_edges:
            continue
        if g.is_loop(e):
            out.append([e])
    seen = set()
    for e in g.incident(a):
        if e in used_edges or g.is_loop(e):
            continue
        t = g.other_end(e, a)
        if t in blocked_vertices:
            continue
        for tail in _paths_between(g, t, a, blocked_vertices, used_edges | {e}):
            cyc = [e] + tail
            key = frozenset(cyc)
            if key not in seen:
                seen.add(key)
                out.append(cyc)
    return out


def _embed_variant(host, pat):
    """Search for an embedding of the (plain multigraph) pattern in host."""
    if pat.m > host.m or pat.n > host.n:
        return None
    pverts = sorted(range(pat.n), key=lambda v: -pat.degree(v))
    pedges = sorted(range(pat.m), key=lambda e: (pat.is_loop(e), e))

    def place_edges(idx, branch, used, interior, paths):
        if idx == len(pedges):
            return list(paths)
        pe = pedges[idx]
        x, y = pat.edges[pe]
        blocked = set(branch.values()) | interior
        if x == y:
            a = branch[x]
            candidates = _cycles_at(host, a, blocked - {a}, used)
        else:
            a, b = branch[x], branch[y]
            candidates = _paths_between(host, a, b, blocked - {b}, used)
        for cand in candidates:
            verts = _path_vertex_seq(host, cand, branch[x])
            res = place_edges(idx + 1, branch, used | set(cand),
                              interior | set(verts[1:-1]),
                              paths + [(pe, tuple(cand))])
            if res is not None:
                return res
        return None

    def place_vertices(idx, branch, taken):
        if idx == len(pverts):
            res = place_edges(0, branch, frozenset(), frozenset(), [])
            if res is not None:
                return branch, res
            return None
        x = pverts[idx]
        for hv in range(host.n):
            if hv in taken or host.degree(hv) < pat.degree(x):
                continue
            res = place_vertices(idx + 1, {**branch, x: hv}, taken | {hv})
            if res is not None:
                return res
        return None

    found = place_vertices(0, {}, set())
    if found is None:
        return None
    branch, paths = found
    return branch, paths


def contains_subdivision(g, p):
    """Search g for a subgraph that is a subdivision of p (or of p with its
    dotted edge contracted).  Returns an Embedding or None; the search is an
    exact backtracking over branch-vertex images and internally disjoint
    paths."""
    for tag, variant in p.variants():
        found = _embed_variant(g, variant)
        if found is not None:
            branch, paths = found
            return Embedding(variant=tag,
                             branch=tuple(sorted(branch.items())),
                             paths=tuple(sorted(paths)))
    return None


def k4():
    return Multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def skein(k, n=2):
    """The k-skein: two vertices joined by k parallel links."""
    return Multigraph(n, [(0, 1)] * k)


def is_series_parallel(g):
    """True iff no subgraph of g is a subdivision of K4."""
    return contains_subdivision(g, Pattern(k4())) is None


def validate_embedding(g, variant_graph, emb):
    """Check an Embedding is structurally sound: paths are internally
    disjoint, realize the right endpoints, and contracting them recovers the
    pattern variant up to isomorphism."""
    branch = emb.branch_map()
    if len(set(branch.values())) != len(branch):
        return False
    paths = emb.path_map()
    if set(paths) != set(range(variant_graph.m)):
        return False
    used_edges = set()
    interior_used = set()
    images = set(branch.values())
    for pe, path in paths.items():
        x, y = variant_graph.edges[pe]
        verts = _path_vertex_seq(g, path, branch[x])
        if verts is None or verts[-1] != branch[y]:
            return False
        interior = verts[1:-1]
        if x == y:
            if len(set(interior)) != len(interior):
                return False
        for w in interior:
            if w in images or w in interior_used:
                return False
        interior_used.update(interior)
        for e in path:
            if e in used_edges:
                return False
        used_edges.update(path)
    quotient = Multigraph(
        variant_graph.n,
        [(variant_graph.edges[pe][0], variant_graph.edges[pe][1])
         for pe in sorted(paths)])
    return is_isomorphic(quotient, variant_graph)


def _path_vertex_seq(g, path, start):
    """Vertex sequence of an edge-id walk starting at `start`, or None if the
    ids do not chain."""
    v = start
    seq = [v]
    for e in path:
        a, b = g.edges[e]
        if a == b:
            if v != a:
                return None
            seq.append(a)
        elif v == a:
            v = b
            seq.append(v)
        elif v == b:
            v = a
            seq.append(v)
        else:
            return None
    return seq


# ---------------------------------------------------------------------------
# enumeration

def _bounded_vectors(length, low, cap, budget):
    """All integer vectors of the given length with entries in [low, cap]
    and sum <= budget."""
    if length == 0:
        yield ()
        return
    lo_rest = low * (length - 1)
    for head in range(low, cap + 1):
        if head + lo_rest > budget:
            break
        for tail in _bounded_vectors(length - 1, low, cap, budget - head):
            yield (head,) + tail


@lru_cache(maxsize=None)
def _connected_supports(n):
    """All connected simple graphs on exactly n vertices, one labeled
    representative per isomorphism class, with their automorphisms.
    Returns tuples (edges, perms)."""
    if n == 1:
        return ((tuple(), (
            (0,),)),)
    pairs = list(itertools.combinations(range(n), 2))
    reps = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(edges) < n - 1:
            continue
        g = Multigraph(n, edges)
        if len(components(g)) != 1:
            continue
        code = canonical_form(g)
        if code not in reps:
            reps[code] = g
    out = []
    for code in sorted(reps):
        g = reps[code]
        perms = tuple(automorphisms(g))
        out.append((g.edges, perms))
    return tuple(out)


def enumerate_connected(n_max, m_max, parallel_cap=5, loop_cap=2, shard=None):
    """Every connected multigraph with <= n_max vertices, <= m_max edges,
    <= parallel_cap copies per vertex pair and <= loop_cap loops per vertex,
    exactly once up to isomorphism.

    Enumerates simple connected supports up to isomorphism, then decorates
    edges with multiplicities and vertices with loop counts, keeping one
    decoration per orbit of the support's automorphism group.  With
    shard=(i, k) only every k-th support (offset i) is expanded, which
    partitions the stream.
    """
    if parallel_cap < 1 or loop_cap < 0:
        raise ValueError("caps must allow at least single edges")
    job = -1
    for n in range(1, n_max + 1):
        for support, perms in _connected_supports(n):
            job += 1
            if shard is not None and job % shard[1] != shard[0]:
                continue
            k = len(support)
            if k > m_max or (n > 1 and k == 0):
                continue
            edge_index = {e: i for i, e in enumerate(support)}
            perm_actions = []
            for p in perms:
                eperm = []
                for (u, v) in support:
                    a, b = p[u], p[v]
                    eperm.append(edge_index[(a, b) if a <= b else (b, a)])
                perm_actions.append((eperm, p))
            for mult in _bounded_vectors(k, 1, parallel_cap, m_max):
                rest = m_max - sum(mult)
                for loops in _bounded_vectors(n, 0, loop_cap, rest):
                    canon = min(
                        (tuple(mult[ei] for ei in eperm),
                         tuple(loops[p[v]] for v in range(n)))
                        for eperm, p in perm_actions)
                    if (tuple(mult), tuple(loops)) != canon:
                        continue
                    edges = []
                    for (u, v), c in zip(support, mult):
                        edges.extend([(u, v)] * c)
                    for v in range(n):
                        edges.extend([(v, v)] * loops[v])
                    yield Multigraph(n, edges)
