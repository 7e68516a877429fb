"""The acceptance suite: every check the artifact must pass, runnable from
pytest and from the command line.  Each check returns a CheckResult; the
suite is deliberately redundant, certifying the fast structural code against
brute-force matroid oracles at desk scale.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from . import miner
from . import multigraph as mg
from .bicircular import bicircular, bicircular_rank
from .decider import check_condition4, decide, matthews_condition4
from .matroid import is_isomorphic_matroid, rank, uniform
from .multigraph import Multigraph
from .parallel import pmap
from .signed import (SignedGraph, all_negative, all_positive, frame,
                     frame_rank, gf3_incidence, gf3_independent)

SWEEP_BOUNDS = (4, 7, 5, 2)
MINE_BOUNDS = (5, 8, 5, 2)
MINE_BOUNDS_WIDE = (6, 9, 5, 2)
EXPECTED_CLASS_COUNT = 6


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    warnings: tuple = ()


def corpus(bounds=SWEEP_BOUNDS):
    return list(mg.enumerate_connected(*bounds))


def all_multigraphs(n_max, m_max, parallel_cap=None, loop_cap=None):
    """Connected and disconnected multigraphs up to isomorphism: multisets
    of connected pieces within the vertex and edge budgets."""
    pcap = m_max if parallel_cap is None else parallel_cap
    lcap = m_max if loop_cap is None else loop_cap
    pieces = list(mg.enumerate_connected(n_max, m_max, pcap, lcap))
    out = []

    def build(start, n_left, m_left, acc):
        if acc:
            u = acc[0]
            for nxt in acc[1:]:
                u = mg.disjoint_union(u, nxt)
            out.append(u)
        for i in range(start, len(pieces)):
            p = pieces[i]
            if p.n <= n_left and p.m <= m_left:
                build(i, n_left - p.n, m_left - p.m, acc + [p])

    build(0, n_max, m_max, [])
    return out


# ---------------------------------------------------------------------------
# criterion 1: pinned isomorphisms

def check_pinned_isomorphisms():
    t0 = time.time()
    sk3_loop = Multigraph(2, [(0, 1)] * 3 + [(0, 0)])
    neg_digon_two_loops = SignedGraph(
        Multigraph(2, [(0, 1), (0, 1), (0, 0), (1, 1)]), (-1, 1, -1, -1))
    pins = [
        ("B(K4) = U(4,6)", bicircular(mg.k4()), uniform(4, 6)),
        ("B(4-skein) = U(2,4)", bicircular(mg.skein(4)), uniform(2, 4)),
        ("B(3-skein + loop) = U(2,4)", bicircular(sk3_loop), uniform(2, 4)),
        ("B(5-skein) = U(2,5)", bicircular(mg.skein(5)), uniform(2, 5)),
        ("frame(negative digon + two negative loops) = U(2,4)",
         frame(neg_digon_two_loops), uniform(2, 4)),
    ]
    failed = [name for name, a, b in pins if is_isomorphic_matroid(a, b) is None]
    dt = time.time() - t0
    ok = not failed and dt < 1.0
    detail = f"{len(pins)} pinned isomorphisms in {dt:.3f}s"
    if failed:
        detail += "; FAILED: " + ", ".join(failed)
    elif dt >= 1.0:
        detail += " (over the 1s budget)"
    return CheckResult("pinned-isomorphisms", ok, detail)


# ---------------------------------------------------------------------------
# criterion 2: full equivalence sweep with verified certificates

def _sweep_chunk(args):
    graphs, patterns = args
    results = []
    for n, edges in graphs:
        g = Multigraph(n, edges)
        try:
            res = decide(g, patterns)
            results.append((res.signed_graphic, None))
        except Exception as exc:                          # noqa: BLE001
            results.append((None, f"n={n} edges={list(edges)}: {exc}"))
    return results


def check_equivalence_sweep(bounds=SWEEP_BOUNDS, patterns=None, chunk=64):
    """decide() on every connected multigraph within bounds: the structural
    and subdivision tests must agree and both certificates must verify
    (decide raises otherwise)."""
    if patterns is None:
        patterns = miner.mine(*MINE_BOUNDS).classes
    graphs = [(g.n, g.edges) for g in corpus(bounds)]
    tasks = [(graphs[i:i + chunk], patterns) for i in range(0, len(graphs), chunk)]
    t0 = time.time()
    accepts = rejects = 0
    failures = []
    for chunk_results in pmap(_sweep_chunk, tasks):
        for verdict, err in chunk_results:
            if err is not None:
                failures.append(err)
            elif verdict:
                accepts += 1
            else:
                rejects += 1
    dt = time.time() - t0
    detail = (f"{len(graphs)} graphs at bounds {bounds}: {accepts} accepts, "
              f"{rejects} rejects, {accepts + rejects} certificates "
              f"verified, {len(failures)} failures in {dt:.1f}s")
    if failures:
        detail += " | first: " + failures[0]
    return CheckResult("equivalence-sweep", not failures, detail)


# ---------------------------------------------------------------------------
# criterion 3: GF(3) incidence representation

def check_gf3_representation(n_max=3, m_max=6):
    graphs = all_multigraphs(n_max, m_max)
    checked = 0
    for g in graphs:
        for bits in range(1 << g.m):
            sigma = tuple(-1 if bits >> i & 1 else 1 for i in range(g.m))
            s = SignedGraph(g, sigma)
            matrix = gf3_incidence(s)
            fr = frame(s)
            for mask in range(1 << g.m):
                sub = frozenset(i for i in range(g.m) if mask >> i & 1)
                if gf3_independent(matrix, sub) != fr.indep(sub):
                    return CheckResult(
                        "gf3-representation", False,
                        f"mismatch on {list(g.edges)} sigma={sigma} "
                        f"subset={sorted(sub)}")
            checked += 1
    return CheckResult("gf3-representation", True,
                       f"{checked} signed graphs on <= {n_max} vertices, "
                       f"<= {m_max} edges, all subsets")


# ---------------------------------------------------------------------------
# criterion 4: mining

def check_mining():
    s = miner.mine(*MINE_BOUNDS)
    problems = []
    warnings = []
    names = [miner.describe(g) for g in s.patterns]
    if not any(mg.is_isomorphic(g, mg.k4()) for g in s.patterns):
        problems.append("K4 missing from the mined set")
    if not any(mg.is_isomorphic(g, mg.skein(5)) for g in s.patterns):
        problems.append("5-skein missing from the mined set")
    report = miner.sanity(s)
    if not report.all_have_minor:
        problems.append("a member lacks all three uniform minors")
    wide = miner.mine(*MINE_BOUNDS_WIDE)
    if ({mg.canonical_form(g) for g in s.patterns}
            != {mg.canonical_form(g) for g in wide.patterns}):
        problems.append(
            f"unstable: {len(s.patterns)} members at {MINE_BOUNDS} vs "
            f"{len(wide.patterns)} at {MINE_BOUNDS_WIDE}")
    if len(s.classes) != EXPECTED_CLASS_COUNT:
        warnings.append(
            f"class count {len(s.classes)} differs from the expected "
            f"{EXPECTED_CLASS_COUNT}; full mined set:")
        for i, g in enumerate(s.patterns):
            warnings.append(f"  member {i} ({names[i]}): n={g.n} "
                            f"edges={list(g.edges)}")
    detail = (f"{len(s.patterns)} members, {len(s.classes)} classes at "
              f"{MINE_BOUNDS}; stable at {MINE_BOUNDS_WIDE}: "
              f"{'yes' if not problems else 'see failures'}")
    if problems:
        detail += " | " + "; ".join(problems)
    return CheckResult("mining", not problems, detail, warnings=tuple(warnings))


# ---------------------------------------------------------------------------
# criterion 5: the graphic-side test implies the signed-graphic one

def check_matthews_corollary(bounds=SWEEP_BOUNDS):
    count = 0
    for g in corpus(bounds):
        if matthews_condition4(g):
            count += 1
            if not check_condition4(g).accepted:
                return CheckResult(
                    "matthews-corollary", False,
                    f"graphic-accepted but signed-rejected: {list(g.edges)}")
    return CheckResult("matthews-corollary", True,
                       f"{count} graphic-side accepts all signed-side accepts")


# ---------------------------------------------------------------------------
# criterion 6: verdicts survive subdivision and pendant addition

def check_closure(bounds=SWEEP_BOUNDS, patterns=None, samples=200, seed=0xC6):
    if patterns is None:
        patterns = miner.mine(*MINE_BOUNDS).classes
    pool = corpus(bounds)
    rng = random.Random(seed)
    tested = 0
    for _ in range(samples):
        g = pool[rng.randrange(len(pool))]
        base = decide(g, patterns).signed_graphic
        if g.m:
            h = mg.subdivide_edge(g, rng.randrange(g.m))
            if decide(h, patterns).signed_graphic != base:
                return CheckResult(
                    "closure", False,
                    f"subdividing changed the verdict on {list(g.edges)}")
        h = mg.add_pendant(g, rng.randrange(g.n))
        if decide(h, patterns).signed_graphic != base:
            return CheckResult(
                "closure", False,
                f"a pendant edge changed the verdict on {list(g.edges)}")
        tested += 1
    return CheckResult("closure", True,
                       f"{tested} random graphs: subdivision and pendant "
                       "addition preserve the verdict")


# ---------------------------------------------------------------------------
# criterion 7: closed-form ranks against the greedy oracle

def check_rank_closed_forms(bounds=SWEEP_BOUNDS, seed=0xC7):
    rng = random.Random(seed)
    checked = 0
    for g in corpus(bounds):
        if g.m > 8:
            continue
        b = bicircular(g)
        signings = [all_positive(g), all_negative(g),
                    SignedGraph(g, tuple(rng.choice((1, -1))
                                         for _ in range(g.m)))]
        frames = [(s, frame(s)) for s in signings]
        for mask in range(1 << g.m):
            sub = frozenset(i for i in range(g.m) if mask >> i & 1)
            if bicircular_rank(g, sub) != rank(b, sub):
                return CheckResult(
                    "rank-closed-forms", False,
                    f"bicircular rank mismatch on {list(g.edges)} {sorted(sub)}")
            for s, fr in frames:
                if frame_rank(s, sub) != rank(fr, sub):
                    return CheckResult(
                        "rank-closed-forms", False,
                        f"frame rank mismatch on {list(g.edges)} "
                        f"sigma={s.sigma} {sorted(sub)}")
        checked += 1
    return CheckResult("rank-closed-forms", True,
                       f"{checked} graphs x 3 signings, all subsets")


# ---------------------------------------------------------------------------
# criterion 8: reduction confluence

def check_reduction_confluence(bounds=SWEEP_BOUNDS, graphs=100, orders=10,
                               seed=0xC8):
    rng = random.Random(seed)
    pool = corpus(bounds)
    for _ in range(graphs):
        g = pool[rng.randrange(len(pool))]
        baseline, _ = mg.reduce(g)
        code = mg.canonical_form(baseline)
        for _ in range(orders):
            shuffled, _ = mg.reduce(g, rng=rng)
            if mg.canonical_form(shuffled) != code:
                return CheckResult(
                    "reduction-confluence", False,
                    f"order-dependent reduction on {list(g.edges)}")
    return CheckResult("reduction-confluence", True,
                       f"{graphs} graphs x {orders} random orders agree")


# ---------------------------------------------------------------------------
# the whole suite

def run_all(bounds=SWEEP_BOUNDS, patterns=None, emit=print):
    """Run every acceptance check; returns (all_ok, results)."""
    checks = [
        check_pinned_isomorphisms,
        lambda: check_equivalence_sweep(bounds=bounds, patterns=patterns),
        check_gf3_representation,
        check_mining,
        lambda: check_matthews_corollary(bounds=bounds),
        lambda: check_closure(bounds=bounds, patterns=patterns),
        lambda: check_rank_closed_forms(bounds=bounds),
        lambda: check_reduction_confluence(bounds=bounds),
    ]
    results = []
    all_ok = True
    for fn in checks:
        try:
            res = fn()
        except Exception as exc:                          # noqa: BLE001
            res = CheckResult(getattr(fn, "__name__", "check"), False,
                              f"crashed: {exc!r}")
        results.append(res)
        all_ok = all_ok and res.ok
        emit(f"{'PASS' if res.ok else 'FAIL'} {res.name}: {res.detail}")
        for w in res.warnings:
            emit(f"WARN {res.name}: {w}")
    return all_ok, results
