"""The decision procedure: two independent tests for whether the bicircular
matroid of a multigraph is the frame matroid of some signed graph, plus the
constructive witness and the machine-checked certificates for both verdicts.

The structural test reduces each component (pendant deletion, series
contraction) and accepts exactly when the reduced component is a single
vertex with loops, a lone 4-skein, or a graph whose blocks are loops,
bridges, cycles, or 3-skeins having an endpoint incident to nothing but the
skein.  The subdivision test rejects exactly when some forbidden pattern
(mined, see the miner module) embeds topologically.  decide() runs both,
insists they agree, and attaches a verified certificate: an explicit signed
graph with B(G) = M(Sigma) on accept, or an embedding plus a uniform-minor
witness (U_{2,5}, U_{3,5} or U_{4,6}, none of which is representable over
the three-element field) on reject.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import multigraph as mg
from .multigraph import Multigraph, ParseError
from .matroid import (MinorWitness, has_uniform_minor, minor, restrict,
                      verify_minor_witness)
from .bicircular import bicircular
from .signed import SignedGraph, frame, parse_signed, write_signed


class ConditionFailed(ValueError):
    """synthesize_sigma was called on a graph the structural test rejects."""


class InternalInconsistency(RuntimeError):
    """The two independent tests disagreed, or a certificate failed to
    verify; always a bug, never a property of the input."""

    def __init__(self, message, cond4=None, cond5=None):
        super().__init__(message)
        self.cond4 = cond4
        self.cond5 = cond5


# ---------------------------------------------------------------------------
# condition (4): structural test on the reduced graph

@dataclass(frozen=True)
class BlockRecord:
    kind: str                  # "loop" | "bridge" | "cycle" | "triple"
    edges: tuple               # reduced-graph edge ids, sorted
    vertices: tuple            # spanned reduced-graph vertices, sorted
    clean_endpoint: int | None = None   # for triples


@dataclass(frozen=True)
class ComponentReport:
    vertices: tuple            # reduced-graph vertices, sorted
    base: str                  # "single-vertex" | "tree-skeleton" | "four-skein"
    blocks: tuple              # BlockRecord entries


@dataclass(frozen=True)
class Condition4Report:
    accepted: bool
    components: tuple          # ComponentReport per accepted component
    rejection: str | None      # first violated rule, in original edge ids
    reduced: Multigraph
    log: mg.ReductionLog


def check_condition4(g):
    """Accept iff every reduced component is a single vertex with loops, a
    lone 4-skein, or has only loop/bridge/cycle blocks and 3-skein blocks
    with a clean endpoint (degree exactly 3, no loops, nothing else)."""
    reduced, log = mg.reduce(g)
    blks, _ = mg.blocks(reduced)
    comps = mg.components(reduced)
    comp_of = {}
    for idx, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = idx
    by_comp = [[] for _ in comps]
    for b in blks:
        any_edge = next(iter(b))
        by_comp[comp_of[reduced.edges[any_edge][0]]].append(b)

    def orig_edges(b):
        return sorted(log.edge_map[e] for e in b)

    reports = []
    for idx, comp in enumerate(comps):
        comp_blocks = sorted(by_comp[idx], key=lambda b: sorted(b))
        verts = tuple(sorted(comp))
        if len(comp) == 1:
            reports.append(ComponentReport(
                vertices=verts, base="single-vertex",
                blocks=tuple(BlockRecord("loop", tuple(sorted(b)), verts)
                             for b in comp_blocks)))
            continue
        if len(comp_blocks) == 1:
            kind, k = mg.classify_block(reduced, comp_blocks[0])
            if kind == "skein" and k == 4:
                b = comp_blocks[0]
                span = tuple(sorted({x for e in b for x in reduced.edges[e]}))
                reports.append(ComponentReport(
                    vertices=verts, base="four-skein",
                    blocks=(BlockRecord("four-skein", tuple(sorted(b)), span),)))
                continue
        records = []
        reject = None
        for b in comp_blocks:
            ids = tuple(sorted(b))
            span = tuple(sorted({x for e in b for x in reduced.edges[e]}))
            kind, k = mg.classify_block(reduced, b)
            if kind == "loop":
                records.append(BlockRecord("loop", ids, span))
            elif kind == "skein" and k == 1:
                records.append(BlockRecord("bridge", ids, span))
            elif kind == "skein" and k == 2:
                records.append(BlockRecord("cycle", ids, span))
            elif kind == "skein" and k == 3:
                clean = [v for v in span if reduced.degree(v) == 3]
                if not clean:
                    reject = (f"3-skein block {orig_edges(b)} has no endpoint "
                              "free of loops and other blocks")
                    break
                records.append(BlockRecord("triple", ids, span,
                                           clean_endpoint=min(clean)))
            elif kind == "skein" and k == 4:
                reject = (f"4-skein block {orig_edges(b)} is allowed only as "
                          "a whole component")
                break
            elif kind == "skein":
                reject = f"block {orig_edges(b)} is a {k}-skein"
                break
            elif mg.block_is_cycle(reduced, b):
                records.append(BlockRecord("cycle", ids, span))
            else:
                reject = (f"block {orig_edges(b)} is neither a loop, a "
                          "bridge, a cycle, nor a permitted skein")
                break
        if reject is not None:
            return Condition4Report(accepted=False, components=(),
                                    rejection=reject, reduced=reduced, log=log)
        reports.append(ComponentReport(vertices=verts, base="tree-skeleton",
                                       blocks=tuple(records)))
    return Condition4Report(accepted=True, components=tuple(reports),
                            rejection=None, reduced=reduced, log=log)


def matthews_condition4(g):
    """The graphic-side structural test: every reduced component is a single
    vertex with loops, exactly a 3-skein, or has only loop and bridge
    blocks."""
    reduced, _ = mg.reduce(g)
    blks, _ = mg.blocks(reduced)
    comps = mg.components(reduced)
    comp_of = {}
    for idx, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = idx
    by_comp = [[] for _ in comps]
    for b in blks:
        any_edge = next(iter(b))
        by_comp[comp_of[reduced.edges[any_edge][0]]].append(b)
    for idx, comp in enumerate(comps):
        comp_blocks = by_comp[idx]
        if len(comp) == 1:
            continue
        if len(comp_blocks) == 1:
            kind, k = mg.classify_block(reduced, comp_blocks[0])
            if kind == "skein" and k == 3:
                continue
        ok = True
        for b in comp_blocks:
            kind, k = mg.classify_block(reduced, b)
            if kind == "loop" or (kind == "skein" and k == 1):
                continue
            ok = False
            break
        if not ok:
            return False
    return True


# ---------------------------------------------------------------------------
# condition (5): forbidden-subdivision test

@dataclass(frozen=True)
class Cond5Witness:
    pattern_index: int
    embedding: mg.Embedding


def check_condition5(g, patterns):
    """First embedding of any pattern (either dotted expansion), else None."""
    for idx, p in enumerate(patterns):
        emb = mg.contains_subdivision(g, p)
        if emb is not None:
            return Cond5Witness(pattern_index=idx, embedding=emb)
    return None


# ---------------------------------------------------------------------------
# certificates

@dataclass(frozen=True)
class SignedWitness:
    """A signed graph plus an edge bijection under which the bicircular
    matroid of the input equals the frame matroid of the witness."""
    witness: SignedGraph
    bijection: tuple           # pairs (input edge id, witness edge id)

    def bijection_map(self):
        return dict(self.bijection)


@dataclass(frozen=True)
class Obstruction:
    """A forbidden-subdivision embedding plus a uniform-minor witness inside
    the restriction of the bicircular matroid to the embedded edges."""
    pattern_index: int
    embedding: mg.Embedding
    minor_witness: MinorWitness


def synthesize_sigma(g, report=None):
    """Construct the witness signed graph for an accepted input.

    On the reduced graph: a lone 4-skein becomes a digon with one negative
    edge plus a negative loop at each endpoint; each 3-skein drops one edge
    to a negative loop at its clean endpoint and keeps a digon with one
    negative edge; every other loop is negative, every cycle block gets
    exactly one negative edge, bridges stay positive.  Undoing the reduction
    re-subdivides witness edges (one half keeps the sign, the other is
    positive) and re-attaches pendant edges positively.  The edge bijection
    is the identity on ids; replaced skein edges map to the created loops.
    """
    rep = report if report is not None else check_condition4(g)
    if not rep.accepted:
        raise ConditionFailed(rep.rejection or "structural test rejected")

    log = rep.log
    graph_ends = {}
    witness_ends = {}
    sign = {}
    for re_, (u, v) in enumerate(rep.reduced.edges):
        oe = log.edge_map[re_]
        pair = (log.vertex_map[u], log.vertex_map[v])
        graph_ends[oe] = pair
        witness_ends[oe] = pair
        sign[oe] = 1

    def oid(reduced_edge):
        return log.edge_map[reduced_edge]

    for comp in rep.components:
        if comp.base == "single-vertex":
            for blk in comp.blocks:
                for e in blk.edges:
                    sign[oid(e)] = -1
        elif comp.base == "four-skein":
            blk = comp.blocks[0]
            e1, e2, e3, e4 = blk.edges
            u, v = blk.vertices
            ou, ov = log.vertex_map[u], log.vertex_map[v]
            sign[oid(e1)] = -1
            sign[oid(e2)] = 1
            witness_ends[oid(e3)] = (ou, ou)
            sign[oid(e3)] = -1
            witness_ends[oid(e4)] = (ov, ov)
            sign[oid(e4)] = -1
        else:
            for blk in comp.blocks:
                if blk.kind == "loop":
                    sign[oid(blk.edges[0])] = -1
                elif blk.kind == "bridge":
                    pass
                elif blk.kind == "cycle":
                    sign[oid(blk.edges[0])] = -1
                elif blk.kind == "triple":
                    e1, e2, e3 = blk.edges
                    ow = log.vertex_map[blk.clean_endpoint]
                    sign[oid(e1)] = -1
                    witness_ends[oid(e3)] = (ow, ow)
                    sign[oid(e3)] = -1
                else:
                    raise InternalInconsistency(f"unknown block kind {blk.kind}")

    for step in reversed(log.steps):
        if isinstance(step, mg.PendantStep):
            graph_ends[step.edge] = (step.attach, step.vertex)
            witness_ends[step.edge] = (step.attach, step.vertex)
            sign[step.edge] = 1
        else:
            a, b, w = step.kept_far, step.removed_far, step.vertex
            g1, g2 = graph_ends[step.kept]
            w1, w2 = witness_ends[step.kept]
            if (g1, g2) == (b, a):
                w1, w2 = w2, w1
            elif (g1, g2) != (a, b):
                raise InternalInconsistency(
                    f"reduction log misaligned at edge {step.kept}")
            graph_ends[step.kept] = (a, w)
            graph_ends[step.removed] = (w, b)
            witness_ends[step.kept] = (w1, w)
            witness_ends[step.removed] = (w, w2)
            sign[step.removed] = 1

    order = sorted(witness_ends)
    witness = SignedGraph(Multigraph(g.n, [witness_ends[e] for e in order]),
                          tuple(sign[e] for e in order))
    return SignedWitness(witness=witness,
                         bijection=tuple((e, e) for e in order))


def _subset_samples(m, limit, sample_count, seed):
    """Subsets to compare when the 2^m sweep is out of reach: everything of
    size <= 4 plus uniformly sampled bitmasks."""
    for k in range(min(4, m) + 1):
        for c in itertools.combinations(range(m), k):
            yield frozenset(c)
    rng = random.Random(seed)
    for _ in range(sample_count):
        mask = rng.getrandbits(m)
        yield frozenset(i for i in range(m) if mask >> i & 1)


def verify_certificate(g, cert, exhaustive_limit=18, sample_count=100000,
                       seed=0):
    """Check a certificate against the input graph.

    SignedWitness: compare bicircular and frame independence under the
    bijection on every subset (all 2^m up to the exhaustive limit, sampled
    beyond).  Obstruction: replay the minor witness inside the restriction
    of the bicircular matroid to the embedded edges and confirm uniform
    independence on all subsets.
    """
    B = bicircular(g)
    if isinstance(cert, SignedWitness):
        bij = cert.bijection_map()
        if sorted(bij) != list(range(g.m)):
            return False
        if sorted(bij.values()) != sorted(range(cert.witness.m)):
            return False
        F = frame(cert.witness)
        if g.m <= exhaustive_limit:
            subsets = (frozenset(i for i in range(g.m) if mask >> i & 1)
                       for mask in range(1 << g.m))
        else:
            subsets = _subset_samples(g.m, exhaustive_limit, sample_count, seed)
        for sub in subsets:
            if B.indep(sub) != F.indep(frozenset(bij[e] for e in sub)):
                return False
        return True
    if isinstance(cert, Obstruction):
        edges = cert.embedding.edge_set()
        w = cert.minor_witness
        if not (w.contract <= edges and w.delete <= edges):
            return False
        return verify_minor_witness(restrict(B, edges), w)
    raise TypeError(f"not a certificate: {cert!r}")


# ---------------------------------------------------------------------------
# the decision procedure

_MINOR_TARGETS = ((4, 6), (3, 5), (2, 5))


@dataclass(frozen=True)
class DecideResult:
    signed_graphic: bool
    cond4: Condition4Report
    cond5: Cond5Witness | None
    certificate: object        # SignedWitness | Obstruction
    verification: str          # "exhaustive" | "sampled"


def decide(g, patterns, exhaustive_limit=18):
    """Run both tests, require agreement, and attach a verified certificate."""
    r4 = check_condition4(g)
    w5 = check_condition5(g, patterns)
    if r4.accepted != (w5 is None):
        raise InternalInconsistency(
            "structural and subdivision tests disagree: "
            f"structural={'accept' if r4.accepted else 'reject'} "
            f"({r4.rejection}), subdivision="
            f"{'clean' if w5 is None else f'pattern {w5.pattern_index}'}",
            cond4=r4, cond5=w5)
    mode = "exhaustive" if g.m <= exhaustive_limit else "sampled"
    if r4.accepted:
        cert = synthesize_sigma(g, r4)
        if not verify_certificate(g, cert, exhaustive_limit=exhaustive_limit):
            raise InternalInconsistency(
                "synthesized witness failed verification", cond4=r4, cond5=w5)
        return DecideResult(True, r4, w5, cert, mode)
    edges = w5.embedding.edge_set()
    sub = restrict(bicircular(g), edges)
    # a long subdivision is first contracted back onto one edge per pattern
    # edge: the dropped path edges span a forest, hence an independent set,
    # and the composed contract set keeps the minor normal form
    pre = frozenset()
    if len(edges) > 14:
        pre = frozenset(e for _, path in w5.embedding.paths for e in path[1:])
        sub = minor(sub, pre, frozenset())
    witness = None
    for k, n in _MINOR_TARGETS:
        witness = has_uniform_minor(sub, k, n)
        if witness is not None:
            break
    if witness is None:
        raise InternalInconsistency(
            "no uniform minor found inside the embedded obstruction",
            cond4=r4, cond5=w5)
    if pre:
        witness = MinorWitness(contract=witness.contract | pre,
                               delete=witness.delete,
                               bijection=witness.bijection,
                               target=witness.target)
    cert = Obstruction(pattern_index=w5.pattern_index,
                       embedding=w5.embedding, minor_witness=witness)
    if not verify_certificate(g, cert):
        raise InternalInconsistency("obstruction certificate failed to verify",
                                    cond4=r4, cond5=w5)
    return DecideResult(False, r4, w5, cert, mode)


# ---------------------------------------------------------------------------
# certificate text format

def write_certificate(cert):
    if isinstance(cert, SignedWitness):
        lines = ["witness"]
        lines.append(write_signed(cert.witness).rstrip("\n"))
        lines.append("map")
        for a, b in sorted(cert.bijection):
            lines.append(f"{a} -> {b}")
        return "\n".join(lines) + "\n"
    if isinstance(cert, Obstruction):
        lines = ["obstruction"]
        lines.append(f"pattern {cert.pattern_index} {cert.embedding.variant}")
        for pv, hv in cert.embedding.branch:
            lines.append(f"branch {pv} -> {hv}")
        for pe, path in cert.embedding.paths:
            lines.append(f"path {pe} : " + " ".join(str(e) for e in path))
        k, n = cert.minor_witness.target
        lines.append(f"minor {k} {n}")
        lines.append("contract: " + " ".join(str(e) for e in sorted(cert.minor_witness.contract)))
        lines.append("delete: " + " ".join(str(e) for e in sorted(cert.minor_witness.delete)))
        for a, b in sorted(cert.minor_witness.bijection):
            lines.append(f"bij {a} -> {b}")
        return "\n".join(lines) + "\n"
    raise TypeError(f"not a certificate: {cert!r}")


def parse_certificate(text, source="<certificate>"):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError(f"{source}: empty certificate")
    kind = lines[0]
    if kind == "witness":
        try:
            sep = lines.index("map")
        except ValueError:
            raise ParseError(f"{source}: witness certificate lacks a map section") from None
        sg = parse_signed("\n".join(lines[1:sep]), source=source)
        bij = []
        for ln in lines[sep + 1:]:
            parts = ln.split()
            if len(parts) != 3 or parts[1] != "->":
                raise ParseError(f"{source}: bad map line {ln!r}")
            bij.append((int(parts[0]), int(parts[2])))
        return SignedWitness(witness=sg, bijection=tuple(bij))
    if kind == "obstruction":
        idx = None
        variant = None
        branch = []
        paths = []
        target = None
        contract = delete = None
        bij = []
        for ln in lines[1:]:
            parts = ln.split()
            if parts[0] == "pattern":
                idx, variant = int(parts[1]), parts[2]
            elif parts[0] == "branch":
                branch.append((int(parts[1]), int(parts[3])))
            elif parts[0] == "path":
                pe = int(parts[1])
                paths.append((pe, tuple(int(x) for x in parts[3:])))
            elif parts[0] == "minor":
                target = (int(parts[1]), int(parts[2]))
            elif parts[0] == "contract:":
                contract = frozenset(int(x) for x in parts[1:])
            elif parts[0] == "delete:":
                delete = frozenset(int(x) for x in parts[1:])
            elif parts[0] == "bij":
                bij.append((int(parts[1]), int(parts[3])))
            else:
                raise ParseError(f"{source}: unrecognized line {ln!r}")
        if idx is None or target is None or contract is None or delete is None:
            raise ParseError(f"{source}: incomplete obstruction certificate")
        emb = mg.Embedding(variant=variant, branch=tuple(sorted(branch)),
                           paths=tuple(sorted(paths)))
        mw = MinorWitness(contract=contract, delete=delete,
                          bijection=tuple(sorted(bij)), target=target)
        return Obstruction(pattern_index=idx, embedding=emb, minor_witness=mw)
    raise ParseError(f"{source}: unknown certificate kind {kind!r}")
