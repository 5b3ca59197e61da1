"""Instance generators: executable reductions with self-validating outputs.

Each generator builds a colored graph together with the pattern, budget,
vertex role map, and gadget membership map, then re-checks the structural
claims the construction is supposed to guarantee (degree bounds, girth,
cluster structure, pattern census, cascade status). A validator failure is
a construction bug and raises ConstructionError.

Also here: the brute-force oracles for the source problems (B2-SAT, vertex
cover, hitting set) and parsers for their text formats.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field

from .classify import NON_CASCADING, STRICTLY_NON_CASCADING, cascade_status, recognize_t
from .errors import (
    ConstructionError,
    InvalidParamsError,
    MalformedFormulaError,
    MalformedInstanceError,
    NotBicoloredError,
    NotTripartiteError,
    ResourceLimitError,
    TriangleFoundError,
)
from .graph import ColoredGraph, Edge, canon, structural_stats
from .patterns import CYCLE, PATH, PatternSpec, enumerate_occurrences

BLUE, RED, YELLOW, GREEN = 1, 2, 3, 4


# -- source problem instances ----------------------------------------------


@dataclass(frozen=True)
class CnfB2Formula:
    """3-CNF where every literal (positive and negative) occurs exactly twice."""

    eta: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.eta < 1:
            raise MalformedFormulaError("need at least one variable")
        counts: dict[int, int] = defaultdict(int)
        for ci, clause in enumerate(self.clauses, start=1):
            if len(clause) != 3:
                raise MalformedFormulaError(f"clause {ci} does not have 3 literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.eta:
                    raise MalformedFormulaError(f"literal {lit} out of range in clause {ci}")
                counts[lit] += 1
        for v in range(1, self.eta + 1):
            for lit in (v, -v):
                if counts[lit] != 2:
                    raise MalformedFormulaError(
                        f"literal {lit} occurs {counts[lit]} times, expected exactly 2"
                    )

    @property
    def mu(self) -> int:
        return len(self.clauses)


@dataclass(frozen=True)
class VertexCoverInstance:
    graph: ColoredGraph  # uncolored (c = 1)
    k: int
    parts: tuple[int, ...] | None = None  # vertex -> {1,2,3}, optional

    def __post_init__(self):
        if self.parts is not None:
            if len(self.parts) != self.graph.n:
                raise NotTripartiteError("tripartition length differs from vertex count")
            if any(p not in (1, 2, 3) for p in self.parts):
                raise NotTripartiteError("tripartition values must be 1, 2, or 3")
            for u, v in self.graph.edge_pairs():
                if self.parts[u] == self.parts[v]:
                    raise NotTripartiteError(f"edge ({u + 1}, {v + 1}) lies inside part {self.parts[u]}")


@dataclass(frozen=True)
class HittingSetInstance:
    eta: int
    sets: tuple[frozenset[int], ...]
    k: int

    def __post_init__(self):
        if self.eta < 1:
            raise MalformedInstanceError("universe must be non-empty")
        if not self.sets:
            raise MalformedInstanceError("family must contain at least one set")
        covered: set[int] = set()
        for si, s in enumerate(self.sets, start=1):
            if not s:
                raise MalformedInstanceError(f"set {si} is empty")
            if not all(1 <= x <= self.eta for x in s):
                raise MalformedInstanceError(f"set {si} leaves the universe [1, {self.eta}]")
            covered |= s
        if covered != set(range(1, self.eta + 1)):
            missing = sorted(set(range(1, self.eta + 1)) - covered)
            raise MalformedInstanceError(f"elements {missing} occur in no set")
        if self.k < 0:
            raise MalformedInstanceError("budget must be non-negative")


# -- brute-force oracles -----------------------------------------------------


def sat_b2_brute(phi: CnfB2Formula, max_eta: int = 20) -> bool:
    """Exhaustive satisfiability sweep."""
    if phi.eta > max_eta:
        raise ResourceLimitError(f"refusing 2^{phi.eta} assignments")
    for bits in range(1 << phi.eta):
        assign = [(bits >> (v - 1)) & 1 == 1 for v in range(1, phi.eta + 1)]
        if all(
            any((lit > 0) == assign[abs(lit) - 1] for lit in clause)
            for clause in phi.clauses
        ):
            return True
    return False


def vc_brute(g: ColoredGraph, max_n: int = 16) -> int:
    """Minimum vertex cover size by subset enumeration."""
    if g.n > max_n:
        raise ResourceLimitError(f"refusing 2^{g.n} vertex subsets")
    edges = g.edge_pairs()
    for size in range(g.n + 1):
        for cover in itertools.combinations(range(g.n), size):
            cs = set(cover)
            if all(u in cs or v in cs for u, v in edges):
                return size
    raise AssertionError("V(G) always covers")


def hs_brute(inst: HittingSetInstance, max_eta: int = 16) -> int:
    """Minimum hitting set size by subset enumeration."""
    if inst.eta > max_eta:
        raise ResourceLimitError(f"refusing 2^{inst.eta} element subsets")
    for size in range(inst.eta + 1):
        for picked in itertools.combinations(range(1, inst.eta + 1), size):
            ps = set(picked)
            if all(ps & s for s in inst.sets):
                return size
    raise AssertionError("U always hits")


# -- generated-instance plumbing ---------------------------------------------


@dataclass
class GeneratedInstance:
    graph: ColoredGraph
    spec: PatternSpec
    k: int
    provenance: dict = field(default_factory=dict)
    roles: dict[str, int] = field(default_factory=dict)  # role name -> vertex
    gadgets: dict[str, frozenset[int]] = field(default_factory=dict)

    def gadget_edges(self, name: str) -> frozenset[Edge]:
        inside = self.gadgets[name]
        return frozenset(
            (u, v) for u, v in self.graph.edge_pairs() if u in inside and v in inside
        )

    def labels_by_vertex(self) -> dict[int, list[str]]:
        out: dict[int, list[str]] = defaultdict(list)
        for role, vid in sorted(self.roles.items()):
            out[vid].append(role)
        return dict(out)


class _Builder:
    def __init__(self):
        self._n = 0
        self._edges: dict[Edge, int] = {}
        self.roles: dict[str, int] = {}
        self.gadgets: dict[str, set[int]] = defaultdict(set)

    def vertex(self, role: str | None = None, gadgets: tuple[str, ...] = ()) -> int:
        vid = self._n
        self._n += 1
        if role is not None:
            self.roles[role] = vid
        for g in gadgets:
            self.gadgets[g].add(vid)
        return vid

    def alias(self, role: str, vid: int, gadgets: tuple[str, ...] = ()) -> None:
        self.roles[role] = vid
        for g in gadgets:
            self.gadgets[g].add(vid)

    def edge(self, u: int, v: int, color: int) -> None:
        e = canon(u, v)
        old = self._edges.get(e)
        if old is not None and old != color:
            raise ConstructionError(f"edge {e} built with colors {old} and {color}")
        self._edges[e] = color

    def build(self, c: int) -> ColoredGraph:
        return ColoredGraph(self._n, c, [(u, v, col) for (u, v), col in self._edges.items()])

    def finish(self, c: int, spec: PatternSpec, k: int, provenance: dict) -> GeneratedInstance:
        return GeneratedInstance(
            graph=self.build(c),
            spec=spec,
            k=k,
            provenance=provenance,
            roles=dict(self.roles),
            gadgets={name: frozenset(vs) for name, vs in self.gadgets.items()},
        )


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ConstructionError(f"generator validator failed: {message}")


# -- periodically colored path chains -----------------------------------------


def _chain_color(s: int, ell: int, c: int) -> int:
    r = s % (ell - 1)
    return r if 0 < r < c else c


def gen_path_chain(c: int, ell: int, d: int) -> ColoredGraph:
    """A path on d*(ell-1) vertices, periodically colored so that every
    window of ell consecutive vertices carries exactly c edge colors."""
    if ell < 3 or not (1 <= c <= ell - 1) or d < 1:
        raise InvalidParamsError(f"need ell >= 3, 1 <= c <= ell-1, d >= 1; got c={c}, ell={ell}, d={d}")
    n = d * (ell - 1)
    g = ColoredGraph(n, c, [(s - 1, s, _chain_color(s, ell, c)) for s in range(1, n)])
    # validator: the windows are exactly the pattern occurrences
    spec = PatternSpec(PATH, ell, c)
    found = {occ.vertices for occ in enumerate_occurrences(g, spec)}
    expected = {tuple(range(i, i + ell)) for i in range(max(0, n - ell + 1))}
    _require(found == expected, f"window structure broken: {sorted(found)} != {sorted(expected)}")
    return g


# -- B2-SAT -> path deletion ---------------------------------------------------


def _literal_occurrences(phi: CnfB2Formula) -> dict[int, list[tuple[int, int]]]:
    """literal -> [(clause index 1-based, position 1..3)] in clause order."""
    where: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for j, clause in enumerate(phi.clauses, start=1):
        for p, lit in enumerate(clause, start=1):
            where[lit].append((j, p))
    return where


def gen_cpld_b2sat(phi: CnfB2Formula, ell: int, c: int, d: int = 1) -> GeneratedInstance:
    """Clause gadgets (three colored arms sharing a hub) + variable gadgets
    (four periodically colored chains around a connector path), glued by
    identifying arm entry points with chain ends, one per literal occurrence.

    Budget: 4*d*eta + 2*mu. The output has maximum degree 3 and girth at
    least 2*d*ell.
    """
    if ell < 4 or not (2 <= c <= ell - 2) or d < 1:
        raise InvalidParamsError(
            f"need ell >= 4, 2 <= c <= ell-2, d >= 1; got ell={ell}, c={c}, d={d}"
        )
    eta, mu = phi.eta, phi.mu
    z = d * (ell - 1) + 1
    b = _Builder()

    # variable gadgets are numbered after clause gadgets, but clause arms
    # reference chain-end vertices, so allocate clause hubs/arm tails first
    hub: dict[int, int] = {}
    arm_tail: dict[tuple[int, int], list[int]] = {}  # (j, p) -> vertices at positions 3..ell-1
    for j in range(1, mu + 1):
        hub[j] = b.vertex(f"u{j}", (f"Z{j}",))
        for p in (1, 2, 3):
            arm_tail[(j, p)] = [
                b.vertex(f"u{j}.{p}.{s}", (f"Z{j}",)) for s in range(3, ell)
            ]

    chain_end: dict[tuple[int, str, int], int] = {}  # (i, "t"/"f", q) -> vertex at position z
    for i in range(1, eta + 1):
        gx = (f"X{i}",)
        for side in ("t", "f"):
            shared = b.vertex(f"{side}{i}", gx)
            for q in (1, 2):
                b.alias(f"{side}{i}.{q}.1", shared, gx)
                prev = shared
                for s in range(2, z + 1):
                    cur = b.vertex(f"{side}{i}.{q}.{s}", gx)
                    b.edge(prev, cur, _chain_color(s - 1, ell, c))
                    prev = cur
                chain_end[(i, side, q)] = prev
        t_i, f_i = b.roles[f"t{i}"], b.roles[f"f{i}"]
        # connector: ell-3 edges colored 2, 3, ..., c, c, ... (never blue)
        prev = t_i
        for s in range(1, ell - 3):
            w = b.vertex(f"w{i}.{s}", gx)
            b.edge(prev, w, min(s + 1, c))
            prev = w
        b.edge(prev, f_i, min(ell - 2, c))

    # identify arm entry points with chain ends, then add arm edges
    occ_of = _literal_occurrences(phi)
    entry: dict[tuple[int, int], int] = {}
    for i in range(1, eta + 1):
        for sign, side in ((i, "t"), (-i, "f")):
            for q, (j, p) in enumerate(occ_of[sign], start=1):
                v = chain_end[(i, side, q)]
                b.alias(f"u{j}.{p}.2", v, (f"Z{j}",))
                entry[(j, p)] = v
    for j in range(1, mu + 1):
        for p in (1, 2, 3):
            arm = [hub[j], entry[(j, p)]] + arm_tail[(j, p)]
            for s in range(1, ell - 1):  # edge between positions s and s+1
                b.edge(arm[s - 1], arm[s], s if s < c else c)

    k = 4 * d * eta + 2 * mu
    spec = PatternSpec(PATH, ell, c)
    inst = b.finish(c, spec, k, {
        "reduction": "cpld-b2sat",
        "eta": eta,
        "mu": mu,
        "ell": ell,
        "colors": c,
        "d": d,
    })
    stats = structural_stats(inst.graph)
    inst.provenance["girth"] = stats.girth
    _require(stats.max_degree == 3, f"max degree {stats.max_degree} != 3")
    _require(stats.girth >= 2 * d * ell, f"girth {stats.girth} < {2 * d * ell}")
    return inst


# -- lifting bicolored P3 deletion to (ell-1)-colored P_ell deletion -----------


def gen_lift_2p3d(g2: ColoredGraph, k: int, ell: int) -> GeneratedInstance:
    """Attach deg(v) pendant arms of ell-3 fresh vertices to every vertex,
    colored yellow then 4, 5, ...; turns bicolored-P3 deletion into
    (ell-1)-colored P_ell deletion with the same budget."""
    if ell < 4:
        raise InvalidParamsError("need ell >= 4")
    if g2.c != 2:
        raise NotBicoloredError(f"source graph declares {g2.c} colors, need 2")
    b = _Builder()
    ids = [b.vertex(f"v{v + 1}") for v in range(g2.n)]
    for u, v, col in g2.edges():
        b.edge(ids[u], ids[v], col)
    for v in range(g2.n):
        for i in range(1, g2.degree(v) + 1):
            prev = ids[v]
            for j in range(1, ell - 2):
                cur = b.vertex(f"v{v + 1}.{i}.{j}")
                b.edge(prev, cur, YELLOW if j == 1 else j + 2)
                prev = cur
    spec = PatternSpec(PATH, ell, ell - 1)
    inst = b.finish(ell - 1, spec, k, {
        "reduction": "lift-2p3d",
        "ell": ell,
        "source_n": g2.n,
        "source_m": g2.m,
    })
    for v in range(g2.n):
        got = inst.graph.degree(ids[v])
        _require(got == 2 * g2.degree(v), f"degree of vertex {v} is {got}, not doubled")
    return inst


# -- vertex cover -> colored cycle deletion ------------------------------------


def two_subdivision(g: ColoredGraph) -> tuple[ColoredGraph, tuple[int, ...]]:
    """Replace each edge {u, v} by a path u-x-y-v on two fresh vertices.

    Returns the uncolored subdivision together with its canonical
    tripartition: originals in part 1, x-vertices (adjacent to the smaller
    endpoint) in part 2, y-vertices in part 3.
    """
    n_out = g.n + 2 * g.m
    parts = [1] * g.n
    edges = []
    nxt = g.n
    for u, v in g.edge_pairs():
        x, y = nxt, nxt + 1
        nxt += 2
        parts += [2, 3]
        edges += [(u, x, 1), (x, y, 1), (y, v, 1)]
    return ColoredGraph(n_out, 1, edges), tuple(parts)


def recolor_to_c(g: ColoredGraph, c: int) -> ColoredGraph:
    """Merge every color >= c into color c; colors below c are kept."""
    if not (1 <= c <= g.c):
        raise InvalidParamsError(f"target color count {c} outside [1, {g.c}]")
    return ColoredGraph(g.n, c, [(u, v, col if col < c else c) for u, v, col in g.edges()])


def _has_triangle(g: ColoredGraph) -> tuple[int, int, int] | None:
    for u, v in g.edge_pairs():
        for w in g.neighbors(u):
            if w != v and g.has_edge(w, v):
                return tuple(sorted((u, v, w)))
    return None


def gen_ccld_vc(inst: VertexCoverInstance, ell: int, c: int) -> GeneratedInstance:
    """Subdivide each edge into a colored path carrying every color its two
    endpoint parts miss, attach an apex joined to each original vertex by an
    edge of its part color, then merge colors down to c. Each original edge
    becomes the only candidate ell-cycle through the apex; covering it means
    cutting an apex edge. The budget is unchanged."""
    if ell < 3 or not (1 <= c <= ell):
        raise InvalidParamsError(f"need ell >= 3 and 1 <= c <= ell; got ell={ell}, c={c}")
    h = inst.graph
    if inst.parts is None:
        raise NotTripartiteError("a tripartition is required (see two_subdivision)")
    if h.m == 0:
        raise InvalidParamsError("source graph needs at least one edge")
    tri = _has_triangle(h)
    if tri is not None:
        raise TriangleFoundError(f"source graph has triangle {tuple(t + 1 for t in tri)}")
    parts = inst.parts

    b = _Builder()
    ids = [b.vertex(f"v{v + 1}") for v in range(h.n)]
    alpha = b.vertex("alpha")
    for u, v in h.edge_pairs():
        psi = ({1, 2, 3} - {parts[u], parts[v]}).pop()
        if ell == 3:
            b.edge(ids[u], ids[v], psi)
        else:
            w = [b.vertex(f"w{u + 1}.{v + 1}.{i}") for i in range(1, ell - 2)]
            b.edge(ids[u], w[0], psi)
            for i in range(len(w) - 1):
                b.edge(w[i], w[i + 1], i + 4)
            b.edge(w[-1], ids[v], ell)
    for v in range(h.n):
        b.edge(ids[v], alpha, parts[v])

    full = b.build(max(ell, 3))
    graph = recolor_to_c(full, c)
    spec = PatternSpec(CYCLE, ell, c)
    stats = structural_stats(graph)
    _require(stats.girth == ell, f"girth {stats.girth} != {ell}")
    for cc in range(1, c + 1):
        cycles = enumerate_occurrences(graph, PatternSpec(CYCLE, ell, cc, induced=False))
        if cc == c:
            _require(len(cycles) == h.m, f"{len(cycles)} candidate cycles, expected {h.m}")
        else:
            _require(not cycles, f"found an {cc}-colored cycle; all should use {c} colors")
    inst_out = GeneratedInstance(
        graph=graph,
        spec=spec,
        k=inst.k,
        provenance={
            "reduction": "ccld-vc",
            "ell": ell,
            "colors": c,
            "source_n": h.n,
            "source_m": h.m,
            "girth": stats.girth,
        },
        roles=dict(b.roles),
        gadgets={name: frozenset(vs) for name, vs in b.gadgets.items()},
    )
    return inst_out


# -- hitting set -> colored path / cycle deletion ------------------------------


def _build_hs_core(b: _Builder, inst: HittingSetInstance):
    """Element gadgets (one blue edge each) threaded through one red chain per
    subset; subsets sharing an element are tied together with extra red edges
    that no induced pattern can use."""
    eta = inst.eta
    w = {}
    wt = {}
    for i in range(1, eta + 1):
        w[i] = b.vertex(f"w{i}", ("W", f"W{i}"))
        wt[i] = b.vertex(f"wt{i}", ("W", f"W{i}"))
        b.edge(w[i], wt[i], BLUE)
    v = {}
    u = {}
    wt_local = {}
    for j, fj in enumerate(inst.sets, start=1):
        gz = (f"Z{j}",)
        v[j] = b.vertex(f"v{j}", gz)
        for i in range(1, eta + 1):
            u[(i, j)] = b.vertex(f"u{i}.{j}", gz)
        b.edge(v[j], u[(1, j)], YELLOW)
        for i in range(1, eta + 1):
            if i in fj:
                b.edge(u[(i, j)], w[i], RED)
                if i < eta:
                    b.edge(wt[i], u[(i + 1, j)], RED)
            else:
                wj = b.vertex(f"wp{i}.{j}", gz)
                wtj = b.vertex(f"wtp{i}.{j}", gz)
                wt_local[(i, j)] = wtj
                b.edge(u[(i, j)], wj, RED)
                b.edge(wj, wtj, RED)
                if i < eta:
                    b.edge(wtj, u[(i + 1, j)], RED)
    # tie edges between subset gadgets sharing an element
    for p in range(1, len(inst.sets) + 1):
        for q in range(p + 1, len(inst.sets) + 1):
            for i in sorted(inst.sets[p - 1] & inst.sets[q - 1]):
                rows = [i] if i == eta else [i, i + 1]
                for r in rows:
                    b.edge(u[(r, p)], u[(r, q)], RED)
                    b.edge(v[p], u[(r, q)], RED)
                    b.edge(v[q], u[(r, p)], RED)
                    b.edge(u[(1, p)], u[(r, q)], RED)
                    b.edge(u[(1, q)], u[(r, p)], RED)
    ends_a = [v[j] for j in range(1, len(inst.sets) + 1)]
    ends_b = [wt[eta]] + [
        wt_local[(eta, j)]
        for j in range(1, len(inst.sets) + 1)
        if (eta, j) in wt_local
    ]
    return ends_a, ends_b


def gen_cpd_hs(inst: HittingSetInstance) -> GeneratedInstance:
    """Hitting set as 3-colored path deletion with pattern length 1 + 3*eta:
    exactly one induced pattern per subset, each crossing the blue edges of
    the subset's elements."""
    mu = len(inst.sets)
    ell = 1 + 3 * inst.eta
    b = _Builder()
    _build_hs_core(b, inst)
    spec = PatternSpec(PATH, ell, 3)
    out = b.finish(3, spec, inst.k, {
        "reduction": "cpd-hs",
        "eta": inst.eta,
        "mu": mu,
        "ell": ell,
    })
    census = enumerate_occurrences(out.graph, spec)
    _require(len(census) == mu, f"pattern census {len(census)} != {mu}")
    st = cascade_status(out.graph, spec)
    _require(
        st.status in (NON_CASCADING, STRICTLY_NON_CASCADING),
        f"expected a non-cascading instance, got {st.status}",
    )
    return out


def gen_ccd_hs(inst: HittingSetInstance) -> GeneratedInstance:
    """The cycle variant: k+1 extra green hub vertices close every induced
    path into a 4-colored cycle, multiplying the census by k+1."""
    mu = len(inst.sets)
    ell = 1 + 3 * inst.eta
    b = _Builder()
    ends_a, ends_b = _build_hs_core(b, inst)
    hubs = [b.vertex(f"q{t}", ("Q",)) for t in range(1, inst.k + 2)]
    for h in hubs:
        for x in ends_a + ends_b:
            b.edge(h, x, GREEN)
    spec = PatternSpec(CYCLE, ell + 1, 4)
    out = b.finish(4, spec, inst.k, {
        "reduction": "ccd-hs",
        "eta": inst.eta,
        "mu": mu,
        "ell": ell + 1,
        "hub_count": inst.k + 1,
    })
    census = enumerate_occurrences(out.graph, spec)
    _require(
        len(census) == mu * (inst.k + 1),
        f"pattern census {len(census)} != {mu * (inst.k + 1)}",
    )
    st = cascade_status(out.graph, spec)
    _require(
        st.status in (NON_CASCADING, STRICTLY_NON_CASCADING),
        f"expected a non-cascading instance, got {st.status}",
    )
    return out


# -- B2-SAT -> bicolored P4 deletion on double cluster graphs ------------------


def gen_2p4d_b2sat(phi: CnfB2Formula) -> GeneratedInstance:
    """Clause gadgets: a blue triangle with red pendants; variable gadgets: a
    red 4-clique fanned out through blue triangles into four pendant blue
    edges, whose outer endpoints are the clause pendants. Both color classes
    stay cluster graphs; budget 9*eta + 2*mu."""
    eta, mu = phi.eta, phi.mu
    b = _Builder()
    dv: dict[tuple[int, int], int] = {}
    for i in range(1, mu + 1):
        for z in (1, 2, 3):
            dv[(i, z)] = b.vertex(f"d{i}.{z}", (f"Z{i}",))
    r: dict[tuple[int, int], int] = {}
    pv: dict[tuple[int, int], int] = {}
    qv: dict[tuple[int, int], int] = {}
    tv: dict[tuple[int, int], int] = {}
    fv: dict[tuple[int, int], int] = {}
    for j in range(1, eta + 1):
        gx = (f"X{j}",)
        for s in (1, 2, 3, 4):
            r[(j, s)] = b.vertex(f"r{j}.{s}", gx)
        for s in range(1, 11):
            pv[(j, s)] = b.vertex(f"p{j}.{s}", gx)
        for s in range(1, 11):
            qv[(j, s)] = b.vertex(f"q{j}.{s}", gx)
        for y in (1, 2):
            tv[(j, y)] = b.vertex(f"t{j}.{y}", gx)
            fv[(j, y)] = b.vertex(f"f{j}.{y}", gx)

    # identifications: clause pendant z is the y-th occurrence of its literal
    occ_of = _literal_occurrences(phi)
    cv: dict[tuple[int, int], int] = {}
    for j in range(1, eta + 1):
        for lit, table in ((j, tv), (-j, fv)):
            for y, (i, z) in enumerate(occ_of[lit], start=1):
                cv[(i, z)] = table[(j, y)]
                b.alias(f"c{i}.{z}", table[(j, y)], (f"Z{i}",))

    for i in range(1, mu + 1):
        t1, t2, t3 = dv[(i, 1)], dv[(i, 2)], dv[(i, 3)]
        b.edge(t1, t2, BLUE)
        b.edge(t2, t3, BLUE)
        b.edge(t1, t3, BLUE)
        for z in (1, 2, 3):
            b.edge(cv[(i, z)], dv[(i, z)], RED)
    for j in range(1, eta + 1):
        for a, bb in itertools.combinations((1, 2, 3, 4), 2):
            b.edge(r[(j, a)], r[(j, bb)], RED)
        for tri in (
            (r[(j, 1)], pv[(j, 1)], pv[(j, 2)]),
            (r[(j, 2)], qv[(j, 1)], qv[(j, 2)]),
            (pv[(j, 3)], pv[(j, 5)], pv[(j, 7)]),
            (qv[(j, 3)], qv[(j, 5)], qv[(j, 7)]),
            (pv[(j, 4)], pv[(j, 6)], pv[(j, 8)]),
            (qv[(j, 4)], qv[(j, 6)], qv[(j, 8)]),
        ):
            b.edge(tri[0], tri[1], BLUE)
            b.edge(tri[1], tri[2], BLUE)
            b.edge(tri[0], tri[2], BLUE)
        b.edge(pv[(j, 9)], tv[(j, 1)], BLUE)
        b.edge(pv[(j, 10)], tv[(j, 2)], BLUE)
        b.edge(qv[(j, 9)], fv[(j, 1)], BLUE)
        b.edge(qv[(j, 10)], fv[(j, 2)], BLUE)
        for a, bb in ((1, 3), (2, 4), (5, 9), (6, 10)):
            b.edge(pv[(j, a)], pv[(j, bb)], RED)
            b.edge(qv[(j, a)], qv[(j, bb)], RED)

    k = 9 * eta + 2 * mu
    spec = PatternSpec(PATH, 4, 2)
    out = b.finish(2, spec, k, {
        "reduction": "2p4d-b2sat",
        "eta": eta,
        "mu": mu,
    })
    stats = structural_stats(out.graph)
    _require(stats.max_degree == 5, f"max degree {stats.max_degree} != 5")
    _require(
        all(stats.per_color_is_cluster.values()),
        f"some color class is not a cluster graph: {stats.per_color_is_cluster}",
    )
    _require(
        not recognize_t(out.graph).accepts,
        "output unexpectedly avoids red-blue-red paths entirely",
    )
    return out


# -- tiny B2-SAT suite ---------------------------------------------------------

SAT_ETA3_FORMULA = CnfB2Formula(
    3, ((1, 2, 3), (1, 2, 3), (-1, -2, -3), (-1, -2, -3))
)
# x1 forces a contradiction on x2, then on x3
UNSAT_ETA3_FORMULA = CnfB2Formula(
    3, ((1, 2, 2), (1, -2, -2), (-1, 3, 3), (-1, -3, -3))
)


def b2_catalog(eta: int = 3) -> list[CnfB2Formula]:
    """Every canonical formula at the given size: clauses sorted internally
    and as a multiset, each literal appearing exactly twice."""
    if eta % 3 != 0 or eta < 3:
        raise InvalidParamsError("literal counts force eta to be a positive multiple of 3")
    literals = [v for v in range(1, eta + 1)] + [-v for v in range(1, eta + 1)]
    mu = 4 * eta // 3
    all_triples = list(itertools.combinations_with_replacement(range(len(literals)), 3))
    out: list[CnfB2Formula] = []

    def rec(built: list[tuple[int, int, int]], counts: list[int]):
        if len(built) == mu:
            if all(c == 0 for c in counts):
                out.append(
                    CnfB2Formula(
                        eta, tuple(tuple(literals[i] for i in cl) for cl in built)
                    )
                )
            return
        minimum = built[-1] if built else (0, 0, 0)
        for clause in all_triples:
            if clause < minimum:
                continue
            if any(clause.count(i) > counts[i] for i in set(clause)):
                continue
            for i in clause:
                counts[i] -= 1
            built.append(clause)
            rec(built, counts)
            built.pop()
            for i in clause:
                counts[i] += 1

    rec([], [2] * len(literals))
    return out


# -- source-format parsers -----------------------------------------------------


def parse_dimacs_cnf(text: str) -> CnfB2Formula:
    """DIMACS CNF, validated as a B2 formula (3 literals, each twice)."""
    eta = None
    declared = None
    lits: list[int] = []
    clauses: list[tuple[int, ...]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise MalformedFormulaError(f"bad problem line {line!r}")
            eta, declared = int(fields[2]), int(fields[3])
            continue
        for tok in line.split():
            val = int(tok)
            if val == 0:
                clauses.append(tuple(lits))
                lits = []
            else:
                lits.append(val)
    if lits:
        raise MalformedFormulaError("last clause not terminated by 0")
    if eta is None:
        raise MalformedFormulaError("missing 'p cnf' line")
    if declared is not None and declared != len(clauses):
        raise MalformedFormulaError(
            f"problem line declares {declared} clauses, file has {len(clauses)}"
        )
    bad = [cl for cl in clauses if len(cl) != 3]
    if bad:
        raise MalformedFormulaError(f"clause {bad[0]} does not have exactly 3 literals")
    return CnfB2Formula(eta, tuple(tuple(cl) for cl in clauses))


def parse_hitting_set(sets_text: str, k: int | None = None) -> HittingSetInstance:
    """Semicolon-separated sets of whitespace-separated elements: "1;1 2;3"."""
    sets = []
    for chunk in sets_text.split(";"):
        members = frozenset(int(x) for x in chunk.split())
        sets.append(members)
    if not sets or any(not s for s in sets):
        raise MalformedInstanceError("each ';'-separated set needs at least one element")
    eta = max(max(s) for s in sets)
    return HittingSetInstance(eta, tuple(sets), eta if k is None else k)


def parse_vc_edge_list(text: str, k: int, parts: tuple[int, ...] | None = None) -> VertexCoverInstance:
    """First line 'n m', then m lines 'u v' (1-indexed)."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("c")]
    if not lines:
        raise MalformedInstanceError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise MalformedInstanceError(f"bad 'n m' line {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise MalformedInstanceError(f"declared {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        u, v = (int(x) for x in ln.split())
        edges.append((u - 1, v - 1, 1))
    return VertexCoverInstance(ColoredGraph(n, 1, edges), k, parts)
