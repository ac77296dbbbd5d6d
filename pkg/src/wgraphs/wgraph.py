"""Weighted directed graphs encoding the canonical-basis action.

A graph has one vertex per basis label, an ascent label set per
vertex, and integer-weighted edges

    omega(u, v) = mu(u, v) + mu(v, u)   if asc(u) is not contained in asc(v)
                  0                      otherwise

where mu(y, z) is the coefficient of x^-1 in the canonical transition
polynomial with row y and column z.  The "m" and "n" families differ
in which weak class joins the ascent labels.

Analytics: a cell is a strongly connected component of the directed
graph, a molecule a connected component after keeping only edges with
a reverse companion, and weak components ignore orientation.  Family D
additionally carries "tilde" variants with the same edges but ascent
sets read from the diamond-twisted vertex whenever
n + #{i <= n : |z(i)| > n} is not divisible by 4; those variants are
the duality partners of the plain graphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from . import parabolic
from .gelfand import (
    GelfandVertex,
    classify_window,
    enumerate_gelfand,
    iota_bc,
    iota_d,
    tilde_twist_needed,
)
from .hecke import (
    CanonicalBasisTable,
    CheckReport,
    ClassifiedBasis,
    HeckeModule,
    Vector,
    _add_scaled,
    basis_over_gelfand,
)
from .laurent import ONE
from .weyl import GroupType, gen_name

FAMILIES = ("m", "n", "m-tilde", "n-tilde")


@dataclass(frozen=True)
class GraphStats:
    vertices: int
    edges: int
    weights: tuple[int, ...]
    wcc: int
    cells: int
    molecules: int

    def weight_text(self) -> str:
        return "{" + ",".join(str(w) for w in self.weights) + "}"

    def csv_row(self, family: str, group: GroupType) -> str:
        return ",".join(
            [
                family,
                group.family,
                str(group.rank),
                str(self.vertices),
                str(self.edges),
                self.weight_text(),
                str(self.wcc),
                str(self.cells),
                str(self.molecules),
            ]
        )


CSV_HEADER = "family,type,rank,vertices,edges,weights,wcc,cells,molecules"


class WGraph:
    """An ascent-labelled weighted directed graph on basis vertices."""

    __slots__ = ("family", "group", "display", "asc", "edges")

    def __init__(
        self,
        family: str,
        group: GroupType,
        display: Sequence[str],
        asc: Sequence[frozenset[int]],
        edges: dict[tuple[int, int], int],
    ):
        if family not in FAMILIES:
            raise ValueError(f"unknown graph family {family!r}")
        if len(set(display)) != len(display):
            raise ValueError("vertex labels must be unique")
        if any(w == 0 for w in edges.values()):
            raise ValueError("zero-weight edges must not be stored")
        self.family = family
        self.group = group
        self.display = tuple(display)
        self.asc = tuple(asc)
        self.edges = dict(edges)

    def __len__(self) -> int:
        return len(self.display)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WGraph)
            and self.family == other.family
            and self.group == other.group
            and self.display == other.display
            and self.asc == other.asc
            and self.edges == other.edges
        )

    def edge_list(self) -> list[tuple[int, int, int]]:
        return [(i, j, self.edges[(i, j)]) for i, j in sorted(self.edges)]

    def weight(self, i: int, j: int) -> int:
        return self.edges.get((i, j), 0)

    # -- analytics -----------------------------------------------------------

    def successors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(len(self))]
        for i, j in sorted(self.edges):
            out[i].append(j)
        return out

    def cells(self) -> list[list[int]]:
        """Strongly connected components, deterministic order."""
        return _tarjan(len(self), self.successors())

    def molecules(self) -> list[list[int]]:
        """Components of the subgraph of edges with a reverse companion."""
        adj: list[set[int]] = [set() for _ in range(len(self))]
        for (i, j) in self.edges:
            if (j, i) in self.edges:
                adj[i].add(j)
                adj[j].add(i)
        return _components(len(self), adj)

    def weak_components(self) -> list[list[int]]:
        adj: list[set[int]] = [set() for _ in range(len(self))]
        for (i, j) in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return _components(len(self), adj)

    def stats(self) -> GraphStats:
        return GraphStats(
            vertices=len(self),
            edges=len(self.edges),
            weights=tuple(sorted(set(self.edges.values()))),
            wcc=len(self.weak_components()),
            cells=len(self.cells()),
            molecules=len(self.molecules()),
        )

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> str:
        payload = {
            "family": self.family,
            "type": self.group.family,
            "rank": self.group.rank,
            "vertices": [
                {"id": i, "oneline": self.display[i], "asc": [gen_name(s) for s in sorted(self.asc[i])]}
                for i in range(len(self))
            ],
            "edges": [{"src": i, "dst": j, "w": w} for i, j, w in self.edge_list()],
        }
        return json.dumps(payload, indent=1)

    def to_dot(self, merge_bidirected: bool = False) -> str:
        lines = [f'digraph "{self.family}_{self.group}" {{']
        for i in range(len(self)):
            asc = ",".join(gen_name(s) for s in sorted(self.asc[i]))
            lines.append(f'  v{i} [label="{self.display[i]}\\n{{{asc}}}"];')
        emitted = set()
        for i, j, w in self.edge_list():
            if (i, j) in emitted:
                continue
            attrs = [] if w == 1 else [f'label="{w}"']
            if merge_bidirected and self.weight(j, i) == w:
                attrs.append("dir=none")
                emitted.add((j, i))
            attr_text = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f"  v{i} -> v{j}{attr_text};")
        lines.append("}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        return f"{CSV_HEADER}\n{self.stats().csv_row(self.family, self.group)}\n"


def export(graph: WGraph, fmt: str) -> bytes:
    """Deterministic serialization in one of dot, json or csv."""
    if fmt == "dot":
        return graph.to_dot().encode()
    if fmt == "json":
        return graph.to_json().encode()
    if fmt == "csv":
        return graph.to_csv().encode()
    raise ValueError(f"unknown export format {fmt!r}; expected dot, json or csv")


def from_json(text: str) -> WGraph:
    data = json.loads(text)
    group = GroupType(data["type"], data["rank"])
    vertices = sorted(data["vertices"], key=lambda v: v["id"])
    display = [v["oneline"] for v in vertices]
    asc = [frozenset(int(name[1:]) for name in v["asc"]) for v in vertices]
    edges = {(e["src"], e["dst"]): e["w"] for e in data["edges"]}
    return WGraph(data["family"], group, display, asc, edges)


# -- construction ---------------------------------------------------------


def _edges_from_table(table: CanonicalBasisTable, asc: Sequence[frozenset[int]]) -> dict[tuple[int, int], int]:
    mu = table.mu_pairs()
    pairs = {(min(y, z), max(y, z)) for y, z in mu}
    edges: dict[tuple[int, int], int] = {}
    for a, b in sorted(pairs):
        w = mu.get((a, b), 0) + mu.get((b, a), 0)
        if not w:
            continue
        if not asc[a] <= asc[b]:
            edges[(a, b)] = w
        if not asc[b] <= asc[a]:
            edges[(b, a)] = w
    return edges


def build_with_module(
    G: GroupType,
    family: str,
    choose: str = "min",
    threads: int = 1,
    rank_cap: Optional[int] = None,
) -> tuple[WGraph, HeckeModule, CanonicalBasisTable, list[GelfandVertex]]:
    if family not in ("m", "n"):
        raise ValueError("build_with_module takes family 'm' or 'n'")
    vertices = enumerate_gelfand(G, rank_cap=rank_cap)
    basis = basis_over_gelfand(vertices)
    module = HeckeModule(basis, family)
    table = module.canonical_basis(choose=choose, threads=threads)
    asc = basis.ascent_sets(family)
    graph = WGraph(family, G, basis.display, asc, _edges_from_table(table, asc))
    return graph, module, table, vertices


def build(G: GroupType, family: str, **kwargs) -> WGraph:
    """The graph of the chosen family on the model vertex set."""
    if family in ("m-tilde", "n-tilde"):
        return build_tilde(G, family[0], **kwargs)
    return build_with_module(G, family, **kwargs)[0]


def build_tilde(G: GroupType, family: str, **kwargs) -> WGraph:
    """Family-D variant: same edges, diamond-twisted ascent sets."""
    if G.family != "D":
        raise ValueError("tilde graphs exist only for family D")
    if family not in ("m", "n"):
        raise ValueError("build_tilde takes family 'm' or 'n'")
    graph, _, _, vertices = build_with_module(G, family, **kwargs)
    n = G.rank
    weak = "m" if family == "m" else "n"
    asc = []
    for v, plain in zip(vertices, graph.asc):
        if tilde_twist_needed(v):
            twisted = classify_window(v.element.diamond().window, n, "D")
            keep = {"m": ("asc<", "asc="), "n": ("asc<", "desc=")}[weak]
            asc.append(frozenset(s for s, c in twisted.items() if c.value in keep))
        else:
            asc.append(plain)
    return WGraph(f"{family}-tilde", G, graph.display, asc, graph.edges)


def build_upsilon_with_module(
    G: GroupType, triple: parabolic.ModelTriple, family: str, choose: str = "min"
) -> tuple[WGraph, HeckeModule, CanonicalBasisTable]:
    basis = parabolic.basis_over_kelements(G, triple)
    module = HeckeModule(basis, family)
    table = module.canonical_basis(choose=choose)
    asc = basis.ascent_sets(family)
    graph = WGraph(family, G, basis.display, asc, _edges_from_table(table, asc))
    return graph, module, table


def build_upsilon(G: GroupType, triple: parabolic.ModelTriple, family: str, **kwargs) -> WGraph:
    """The graph of one parabolic component on its label set."""
    return build_upsilon_with_module(G, triple, family, **kwargs)[0]


# -- verification -----------------------------------------------------------


def verify_wgraph_axioms(module: HeckeModule, table: CanonicalBasisTable, graph: WGraph) -> CheckReport:
    """The single-generator action on canonical columns matches the graph.

    For s in the descent side of z, (H_s + x^-1) col(z) must equal
    (x + x^-1) col(z); for s in the ascent side it must expand as
    sum over descent-side vertices u of omega(z, u) col(u).
    """
    basis = module.basis
    report = CheckReport(f"wgraph axioms ({graph.family}, {graph.group})")
    asc = graph.asc
    by_descent: dict[int, list[int]] = {}
    for u in range(len(basis)):
        for s in basis.generators:
            if s not in asc[u]:
                by_descent.setdefault(s, []).append(u)
    for z in range(len(basis)):
        col = table.column(z)
        for s in basis.generators:
            got = module.act_kl(s, col)
            if s not in asc[z]:
                expect: Vector = {}
                _add_scaled(expect, {i: p.shift(1) + p.shift(-1) for i, p in col.items()}, 1)
                expect = {i: p for i, p in expect.items() if p}
                report.count(got == expect, f"descent expansion fails at s_{s}, column {basis.display[z]}")
            else:
                expect = {}
                for u in by_descent.get(s, []):
                    w = graph.weight(z, u)
                    if w:
                        _add_scaled(expect, table.column(u), w)
                expect = {i: p for i, p in expect.items() if p}
                report.count(got == expect, f"ascent expansion fails at s_{s}, column {basis.display[z]}")
    return report


def is_quasi_admissible(graph: WGraph) -> CheckReport:
    """Bipartite, integral, vanishing under containment, symmetric otherwise."""
    report = CheckReport(f"quasi-admissibility ({graph.family}, {graph.group})")

    color = [-1] * len(graph)
    adj: list[set[int]] = [set() for _ in range(len(graph))]
    for (i, j) in graph.edges:
        adj[i].add(j)
        adj[j].add(i)
    bipartite = True
    for root in range(len(graph)):
        if color[root] != -1:
            continue
        color[root] = 0
        frontier = [root]
        while frontier:
            u = frontier.pop()
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    frontier.append(v)
                elif color[v] == color[u]:
                    bipartite = False
    report.count(bipartite, "directed graph is not bipartite")

    for (i, j), w in sorted(graph.edges.items()):
        report.count(isinstance(w, int) and w != 0, f"non-integer or zero weight on {i}->{j}")
        report.count(
            not (graph.asc[i] <= graph.asc[j]),
            f"nonzero weight {i}->{j} despite asc({graph.display[i]}) contained in asc({graph.display[j]})",
        )
        if not graph.asc[i] <= graph.asc[j] and not graph.asc[j] <= graph.asc[i]:
            report.count(
                graph.weight(i, j) == graph.weight(j, i),
                f"asymmetric weight on incomparable pair {i}, {j}",
            )
    return report


def verify_duality(G: GroupType, rank_cap: Optional[int] = None) -> CheckReport:
    """Weight transposition plus ascent-set complementation, all pairs.

    Family BC pairs the two plain graphs through iota_bc; family D
    pairs each plain graph with the opposite tilde graph through
    iota_d.
    """
    if G.family not in ("BC", "D"):
        raise ValueError("duality is a type BC/D statement")
    report = CheckReport(f"duality ({G})")
    vertices = enumerate_gelfand(G, rank_cap=rank_cap)
    index = {v.element.window: i for i, v in enumerate(vertices)}
    gens = frozenset(G.generators)
    gm, _, _, _ = build_with_module(G, "m", rank_cap=rank_cap)
    gn, _, _, _ = build_with_module(G, "n", rank_cap=rank_cap)
    if G.family == "BC":
        perm = [index[iota_bc(v).element.window] for v in vertices]
        pairs = [(gm, gn, "m vs n"), (gn, gm, "n vs m")]
    else:
        perm = [index[iota_d(v).element.window] for v in vertices]
        tm = build_tilde(G, "m", rank_cap=rank_cap)
        tn = build_tilde(G, "n", rank_cap=rank_cap)
        pairs = [(gm, tn, "m vs n-tilde"), (gn, tm, "n vs m-tilde")]
    inv_ok = all(perm[perm[i]] == i for i in range(len(perm)))
    report.count(inv_ok, "duality map is not an involution")
    n_v = len(vertices)
    for src, dst, tag in pairs:
        for i in range(n_v):
            report.count(
                dst.asc[perm[i]] == gens - src.asc[i],
                f"[{tag}] ascent complement fails at {src.display[i]}",
            )
        for i in range(n_v):
            for j in range(n_v):
                if dst.weight(perm[i], perm[j]) != src.weight(j, i):
                    report.count(False, f"[{tag}] weight transposition fails at ({i}, {j})")
                else:
                    report.checks += 1
    return report


# -- deterministic component algorithms ---------------------------------------


def _tarjan(n: int, succ: list[list[int]]) -> list[list[int]]:
    """Iterative strongly-connected components, ordered by smallest vertex."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    out: list[list[int]] = []
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[list[int]] = [[root, 0]]
        while work:
            frame = work[-1]
            v, ptr = frame
            if ptr == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while frame[1] < len(succ[v]):
                w = succ[v][frame[1]]
                frame[1] += 1
                if index[w] == -1:
                    work.append([w, 0])
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp.append(u)
                    if u == v:
                        break
                out.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    out.sort(key=lambda c: c[0])
    return out


def _components(n: int, adj: list[set[int]]) -> list[list[int]]:
    seen = [False] * n
    out = []
    for root in range(n):
        if seen[root]:
            continue
        comp = []
        frontier = [root]
        seen[root] = True
        while frontier:
            u = frontier.pop()
            comp.append(u)
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    frontier.append(v)
        out.append(sorted(comp))
    out.sort(key=lambda c: c[0])
    return out


# -- reference data ------------------------------------------------------------

#: Published statistics rows: (family, type, rank) -> GraphStats.
#: Types BC and D list only the "m" rows; the "n" rows carry identical
#: data by duality (reference_stats resolves the alias).
REFERENCE_STATS: dict[tuple[str, str, int], GraphStats] = {
    ("m", "A", 2): GraphStats(2, 0, (), 2, 2, 2),
    ("m", "A", 3): GraphStats(4, 3, (1,), 2, 3, 3),
    ("m", "A", 4): GraphStats(10, 13, (1,), 3, 5, 5),
    ("m", "A", 5): GraphStats(26, 59, (1,), 3, 7, 7),
    ("m", "A", 6): GraphStats(76, 238, (1,), 4, 11, 11),
    ("m", "A", 7): GraphStats(232, 998, (1,), 4, 15, 15),
    ("m", "A", 8): GraphStats(764, 4230, (1,), 5, 22, 22),
    ("m", "A", 9): GraphStats(2620, 18467, (-1, 1), 5, 30, 30),
    ("m", "A", 10): GraphStats(9496, 83869, (-1, 1, 2, 3), 6, 42, 42),
    ("n", "A", 2): GraphStats(2, 0, (), 2, 2, 2),
    ("n", "A", 3): GraphStats(4, 3, (1,), 2, 3, 3),
    ("n", "A", 4): GraphStats(10, 13, (1,), 3, 5, 5),
    ("n", "A", 5): GraphStats(26, 57, (1,), 3, 7, 7),
    ("n", "A", 6): GraphStats(76, 227, (1,), 4, 11, 11),
    ("n", "A", 7): GraphStats(232, 931, (1,), 4, 15, 15),
    ("n", "A", 8): GraphStats(764, 3863, (1,), 5, 22, 22),
    ("n", "A", 9): GraphStats(2620, 16437, (1,), 5, 30, 30),
    ("n", "A", 10): GraphStats(9496, 72182, (1,), 6, 42, 42),
    ("m", "BC", 2): GraphStats(6, 6, (1,), 2, 4, 4),
    ("m", "BC", 3): GraphStats(20, 36, (1,), 2, 8, 8),
    ("m", "BC", 4): GraphStats(76, 206, (-1, 1), 3, 15, 15),
    ("m", "BC", 5): GraphStats(312, 1217, (-1, 1), 3, 26, 26),
    ("m", "BC", 6): GraphStats(1384, 7335, (-1, 1, 2), 4, 44, 46),
    ("m", "BC", 7): GraphStats(6512, 46066, (-1, 1, 2, 3), 4, 72, 76),
    ("m", "D", 2): GraphStats(3, 1, (1,), 2, 3, 3),
    ("m", "D", 3): GraphStats(10, 14, (1,), 2, 5, 5),
    ("m", "D", 4): GraphStats(38, 87, (1,), 3, 10, 11),
    ("m", "D", 5): GraphStats(156, 534, (1,), 3, 16, 18),
    ("m", "D", 6): GraphStats(692, 3262, (1,), 4, 29, 36),
    ("m", "D", 7): GraphStats(3256, 20640, (-1, 1, 2, 3), 4, 45, 59),
    ("n", "D", 8): GraphStats(16200, 137576, (-1, 1, 2, 3, 4), 5, 75, 109),
}


def reference_stats(family: str, group: GroupType) -> Optional[GraphStats]:
    """Published row for the graph, resolving the BC/D duality alias."""
    plain = family[0]
    row = REFERENCE_STATS.get((plain, group.family, group.rank))
    if row is None and group.family in ("BC", "D"):
        other = "n" if plain == "m" else "m"
        row = REFERENCE_STATS.get((other, group.family, group.rank))
    return row
