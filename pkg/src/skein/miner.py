"""Re-derive the forbidden-subdivision set by exhaustive search: enumerate
reduced connected multigraphs within bounds, keep those the structural test
rejects while every single-edge deletion is accepted, group
contraction-related pairs under the dotted-edge convention, and tie every
member to a uniform-minor fact about its bicircular matroid.

Obstruction file format: one block per pattern,

    pattern <index>
    <n> <m>
    <u> <v>          (m edge lines)
    dotted <e>       (optional)

with '#' comments and blank lines ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import multigraph as mg
from .multigraph import Multigraph, Pattern, ParseError
from .bicircular import bicircular
from .matroid import (GroundTooLarge, has_uniform_minor, is_isomorphic_matroid,
                      rank, uniform)
from .decider import check_condition4

MINOR_TARGETS = ((4, 6), (3, 5), (2, 5))
DEFAULT_BOUNDS = (5, 8, 5, 2)


@dataclass(frozen=True)
class ObstructionSet:
    patterns: tuple            # member multigraphs, sorted canonically
    classes: tuple             # Pattern values after dotted grouping
    bounds: tuple              # (n_max, m_max, parallel_cap, loop_cap)


def mine(n_max=5, m_max=8, parallel_cap=5, loop_cap=2):
    """All reduced connected graphs within bounds that the structural test
    rejects although every single-edge deletion (isolated vertices dropped)
    is accepted; deduplicated by canonical form and sorted by vertex count,
    edge count, canonical code."""
    members = []
    for g in mg.enumerate_connected(n_max, m_max, parallel_cap, loop_cap):
        if not mg.is_reduced(g):
            continue
        if check_condition4(g).accepted:
            continue
        minimal = True
        for e in range(g.m):
            h, _ = mg.delete_edge(g, e)
            h, _ = mg.drop_isolated(h)
            if not check_condition4(h).accepted:
                minimal = False
                break
        if minimal:
            members.append(g)
    members.sort(key=lambda g: (g.n, g.m, mg.canonical_form(g)))
    s = ObstructionSet(patterns=tuple(members), classes=(),
                       bounds=(n_max, m_max, parallel_cap, loop_cap))
    return ObstructionSet(patterns=s.patterns, classes=tuple(group_dotted(s)),
                          bounds=s.bounds)


def group_dotted(s):
    """Collapse contraction-related member pairs {P, P/e} into dotted
    patterns.

    Pairs are chosen as a deterministic maximum disjoint matching: targets in
    canonical order grab their canonically-first free source.  Members left
    over (including chains longer than a pair) stay undotted, so every member
    remains represented.
    """
    members = s.patterns
    codes = {mg.canonical_form(g): i for i, g in enumerate(members)}
    rel = {}
    for i, p in enumerate(members):
        for e in range(p.m):
            if p.is_loop(e):
                continue
            q, _ = mg.contract_edge(p, e)
            j = codes.get(mg.canonical_form(q))
            if j is not None and j != i:
                rel.setdefault(i, {}).setdefault(j, e)
    paired = set()
    pairs = []
    for j in range(len(members)):
        if j in paired:
            continue
        sources = sorted(i for i in rel if j in rel[i] and i not in paired)
        if not sources:
            continue
        i = sources[0]
        pairs.append((i, j, rel[i][j]))
        paired.add(i)
        paired.add(j)
    dotted_for = {i: e for i, _, e in pairs}
    contracted = {j for _, j, _ in pairs}
    out = []
    for i, g in enumerate(members):
        if i in dotted_for:
            out.append(Pattern(g, dotted=dotted_for[i], name=describe(g)))
        elif i in contracted:
            continue
        else:
            out.append(Pattern(g, name=describe(g)))
    return out


def describe(g):
    """A structural name for a small graph, for reports only."""
    if mg.is_isomorphic(g, mg.k4()):
        return "K4"
    if g.n == 2 and all(not g.is_loop(e) for e in range(g.m)):
        return f"{g.m}-skein"
    loops = sum(1 for e in range(g.m) if g.is_loop(e))
    if loops:
        return f"{g.n} vertices, {g.m - loops} links + {loops} loops"
    return f"{g.n} vertices, {g.m} edges"


@dataclass(frozen=True)
class SanityEntry:
    index: int
    n: int
    m: int
    name: str
    exact: str | None          # "U(k,n)" when B is exactly uniform
    minors: tuple              # the targets found as minors


@dataclass(frozen=True)
class SanityReport:
    entries: tuple
    all_have_minor: bool

    def render(self):
        lines = ["# uniform-minor facts for the mined set"]
        for e in self.entries:
            exact = f" B = {e.exact};" if e.exact else ""
            minors = ", ".join(e.minors) if e.minors else "NONE"
            lines.append(f"member {e.index} ({e.name}):{exact} minors: {minors}")
        lines.append("every member has a non-ternary uniform minor: "
                     + ("yes" if self.all_have_minor else "NO"))
        return "\n".join(lines) + "\n"


def sanity(s):
    """For every member: which of U(2,5), U(3,5), U(4,6) occur as minors of
    its bicircular matroid, and whether the matroid is exactly uniform."""
    entries = []
    ok = True
    for i, g in enumerate(s.patterns):
        b = bicircular(g)
        exact = None
        r = rank(b)
        for k, n in MINOR_TARGETS:
            if n == g.m and k == r:
                try:
                    if is_isomorphic_matroid(b, uniform(k, n)):
                        exact = f"U({k},{n})"
                except GroundTooLarge:
                    pass
        minors = []
        for k, n in MINOR_TARGETS:
            try:
                if has_uniform_minor(b, k, n) is not None:
                    minors.append(f"U({k},{n})")
            except GroundTooLarge:
                minors.append(f"U({k},{n})?")
        if not minors:
            ok = False
        entries.append(SanityEntry(index=i, n=g.n, m=g.m, name=describe(g),
                                   exact=exact, minors=tuple(minors)))
    return SanityReport(entries=tuple(entries), all_have_minor=ok)


# ---------------------------------------------------------------------------
# obstruction file

def write_patterns(patterns, bounds=None):
    lines = ["# forbidden-subdivision patterns",
             "# a dotted line marks the edge whose contraction gives the"
             " paired forbidden graph"]
    if bounds is not None:
        lines.append(f"# mined at bounds n<={bounds[0]} m<={bounds[1]} "
                     f"parallel<={bounds[2]} loops<={bounds[3]}")
    for idx, p in enumerate(patterns):
        lines.append("")
        if p.name:
            lines.append(f"# {p.name}")
        lines.append(f"pattern {idx}")
        lines.append(f"{p.graph.n} {p.graph.m}")
        lines.extend(f"{u} {v}" for u, v in p.graph.edges)
        if p.dotted is not None:
            lines.append(f"dotted {p.dotted}")
    return "\n".join(lines) + "\n"


def parse_patterns(text, source="<patterns>"):
    patterns = []
    block = None
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "pattern":
            block = []
            blocks.append((lineno, block))
        elif block is None:
            raise ParseError(f"{source}:{lineno}: expected 'pattern <i>' first")
        else:
            block.append((lineno, parts))
    for start, block in blocks:
        if not block:
            raise ParseError(f"{source}:{start}: empty pattern block")
        lineno, header = block[0]
        if len(header) != 2:
            raise ParseError(f"{source}:{lineno}: expected 'n m' header")
        try:
            n, m = int(header[0]), int(header[1])
        except ValueError:
            raise ParseError(f"{source}:{lineno}: non-integer header") from None
        edges = []
        dotted = None
        for lineno, parts in block[1:]:
            if parts[0] == "dotted":
                if len(parts) != 2:
                    raise ParseError(f"{source}:{lineno}: expected 'dotted <e>'")
                dotted = int(parts[1])
            else:
                if len(parts) != 2:
                    raise ParseError(f"{source}:{lineno}: expected 'u v' edge line")
                try:
                    u, v = int(parts[0]), int(parts[1])
                except ValueError:
                    raise ParseError(f"{source}:{lineno}: non-integer endpoints") from None
                if not (0 <= u < n and 0 <= v < n):
                    raise ParseError(f"{source}:{lineno}: endpoint out of range")
                edges.append((u, v))
        if len(edges) != m:
            raise ParseError(f"{source}:{start}: header promises {m} edges, "
                             f"found {len(edges)}")
        try:
            patterns.append(Pattern(Multigraph(n, edges), dotted=dotted))
        except ValueError as exc:
            raise ParseError(f"{source}:{start}: {exc}") from None
    return patterns
