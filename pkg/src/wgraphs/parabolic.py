"""Model triples and the parabolic realization of the module bases.

A model triple (J, z_min, sigma) is a parabolic generator subset J, a
W_J-minimal involution z_min in W_J, and a linear character sigma of
W_J recorded by its generator values.  For a classical group of rank n
there are 1 + floor(n/2) triples: one for each k with the rank-2k
factor carrying z_min = s_1 s_3 ... s_{2k-1} and the complementary
symmetric-group factor carrying the sign character, plus (family D
only) an extra triple on the type-A parabolic with the sign character.

The label set attached to a triple is K = W^J x (orbit of z_min),
where W^J is the set of minimal coset representatives.  The group acts
by s.(w, z) = (sw, z) when sw stays in W^J and (w, tzt) with
t = w^-1 s w otherwise; the doubled height 2 l(w) + l(z) - l(z_min)
changes by exactly +-2 on strict moves and is fixed otherwise.  Weak
moves split by the sign sigma(w^-1 s w): +1 is a weak descent, -1 a
weak ascent.

phi sends a model vertex v to such a pair (w, z): the positions of v
carrying values of absolute value <= n list the letters of w first (in
increasing order), then come the positions i (of either sign) with
v(i) > n; z is the small-window involution read off through the
order-preserving relabelling of those small positions.  In family D a
final sign adjustment (negating the first letter of w and twisting z
by the first-coordinate sign change) keeps z inside the orbit of z_min
when the big-value positions carry an odd number of signs.

This realization is an independent route to the same graphs and is
used as a cross-validation oracle for the direct construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .gelfand import DescentClass, GelfandVertex
from .weyl import GroupType, WeylElement, identity, simple_generator

from .hecke import CheckReport, ClassifiedBasis


@dataclass(frozen=True)
class ModelTriple:
    group: GroupType
    J: frozenset[int]
    z_min: WeylElement
    sigma: tuple[tuple[int, int], ...]  # sorted (generator, value) pairs
    name: str

    def sigma_map(self) -> dict[int, int]:
        return dict(self.sigma)

    def __str__(self) -> str:
        return f"{self.group}:{self.name}"


@dataclass(frozen=True)
class KElement:
    w: WeylElement
    z: WeylElement

    @property
    def key(self) -> tuple:
        return (self.w.window, self.z.window)

    def display(self) -> str:
        return f"{self.w.oneline()}|{self.z.oneline()}"


def _make_triple(G: GroupType, J: set[int], zmin_letters: list[int], sigma: dict[int, int], name: str) -> ModelTriple:
    z = identity(G)
    for s in zmin_letters:
        z = z.mul_gen_right(s)
    return ModelTriple(G, frozenset(J), z, tuple(sorted(sigma.items())), name)


def model_triples(G: GroupType) -> list[ModelTriple]:
    """The 1 + floor(n/2) triples of the group, in k order (D: sgn last)."""
    n = G.rank
    gens = set(G.generators)
    triples = []
    if G.family in ("A", "BC"):
        for k in range(n // 2 + 1):
            J = gens - {2 * k}
            sigma = {s: (1 if 0 <= s < 2 * k else -1) for s in J}
            triples.append(_make_triple(G, J, list(range(1, 2 * k, 2)), sigma, f"k={k}"))
    else:
        for k in range(1, n // 2 + 1):
            J = gens - {2 * k}
            sigma = {s: (1 if s < 2 * k else -1) for s in J}  # s_-1 sits in the rank-2k factor
            triples.append(_make_triple(G, J, list(range(1, 2 * k, 2)), sigma, f"k={k}"))
        J = gens - {-1}
        triples.append(_make_triple(G, J, [], {s: -1 for s in J}, "sgn"))
    return triples


def in_coset_reps(w: WeylElement, J: frozenset[int]) -> bool:
    return all(not w.is_right_descent(s) for s in J)


def minimal_coset_reps(G: GroupType, J: frozenset[int]) -> list[WeylElement]:
    """All minimal length coset representatives, BFS by left multiplication."""
    e = identity(G)
    seen = {e.window}
    frontier = [e]
    out = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for s in G.generators:
                u = w.mul_gen_left(s)
                if u.length() == w.length() + 1 and u.window not in seen and in_coset_reps(u, J):
                    seen.add(u.window)
                    out.append(u)
                    nxt.append(u)
        frontier = nxt
    out.sort(key=lambda w: (w.length(), w.window))
    return out


def orbit(G: GroupType, triple: ModelTriple) -> list[WeylElement]:
    """Closure of z_min under conjugation by the generators in J."""
    seen = {triple.z_min.window}
    frontier = [triple.z_min]
    out = [triple.z_min]
    gens = {s: simple_generator(G, s) for s in triple.J}
    while frontier:
        nxt = []
        for z in frontier:
            for s, g in gens.items():
                u = g.compose(z).compose(g)
                if u.window not in seen:
                    seen.add(u.window)
                    out.append(u)
                    nxt.append(u)
        frontier = nxt
    out.sort(key=lambda z: (z.length(), z.window))
    return out


def height2(triple: ModelTriple, tau: KElement) -> int:
    """Doubled height: 2 l(w) + l(z) - l(z_min); integral and even-stepped."""
    return 2 * tau.w.length() + tau.z.length() - triple.z_min.length()


def s_action(G: GroupType, triple: ModelTriple, s: int, tau: KElement) -> KElement:
    sw = tau.w.mul_gen_left(s)
    if in_coset_reps(sw, triple.J):
        return KElement(sw, tau.z)
    t = tau.w.inverse().compose(simple_generator(G, s)).compose(tau.w)
    return KElement(tau.w, t.compose(tau.z).compose(t))


def sigma_value(G: GroupType, triple: ModelTriple, t: WeylElement) -> int:
    """sigma on an element of W_J, via descent stripping inside J."""
    sig = triple.sigma_map()
    val = 1
    while not t.is_identity():
        s = min(x for x in triple.J if t.is_right_descent(x))
        val *= sig[s]
        t = t.mul_gen_right(s)
    return val


def classify_tau(G: GroupType, triple: ModelTriple, s: int, tau: KElement) -> DescentClass:
    """Strict by height change; weak split by the sign of w^-1 s w."""
    stau = s_action(G, triple, s, tau)
    dh = height2(triple, stau) - height2(triple, tau)
    if dh > 0:
        return DescentClass.STRICT_ASC
    if dh < 0:
        return DescentClass.STRICT_DESC
    t = tau.w.inverse().compose(simple_generator(G, s)).compose(tau.w)
    return DescentClass.WEAK_DESC if sigma_value(G, triple, t) == 1 else DescentClass.WEAK_ASC


def k_elements(G: GroupType, triple: ModelTriple) -> list[KElement]:
    """The full label set W^J x orbit, sorted by (doubled height, key)."""
    reps = minimal_coset_reps(G, triple.J)
    orb = orbit(G, triple)
    out = [KElement(w, z) for w in reps for z in orb]
    out.sort(key=lambda t: (height2(triple, t), t.key))
    return out


def basis_over_kelements(G: GroupType, triple: ModelTriple) -> ClassifiedBasis:
    """ClassifiedBasis over one orbit's labels, graded by doubled height."""
    taus = k_elements(G, triple)
    index = {t.key: i for i, t in enumerate(taus)}
    classes = []
    moves = []
    for tau in taus:
        cls = {s: classify_tau(G, triple, s, tau) for s in G.generators}
        mv = {s: index[s_action(G, triple, s, tau).key] for s, c in cls.items() if c.is_strict}
        classes.append(cls)
        moves.append(mv)
    return ClassifiedBasis(
        generators=G.generators,
        labels=tuple(taus),
        display=tuple(t.display() for t in taus),
        degrees=tuple(height2(triple, t) for t in taus),
        classes=classes,
        moves=moves,
        gen_order=G.gen_order,
    )


def phi(base: GroupType, vertex: GelfandVertex, triples: Optional[list[ModelTriple]] = None) -> tuple[ModelTriple, KElement]:
    """Transport a model vertex to its parabolic label (triple, (w, z)).

    The small-valued positions of the vertex, in increasing order, are
    the first letters of w; positions of either sign carrying values
    above n follow.  The small-window involution z is read off through
    the order-preserving relabelling psi of the small positions.  In
    family D an odd number of signs among the trailing letters forces
    the compensating adjustment: negate the first letter of w and
    conjugate z by the first-coordinate sign change.
    """
    if triples is None:
        triples = model_triples(base)
    n = base.rank
    zwin = vertex.element.window

    def img(i: int) -> int:
        return zwin[i - 1] if i > 0 else -zwin[-i - 1]

    small = [i for i in range(1, n + 1) if abs(zwin[i - 1]) <= n]
    m = len(small)
    bs = sorted(i for i in range(-n, n + 1) if i != 0 and img(i) > n)

    psi = {j: a for j, a in enumerate(small, start=1)}
    psi_inv = {a: j for j, a in psi.items()}
    psi_inv.update({-a: -j for a, j in list(psi_inv.items())})

    def z_plain(j: int) -> int:
        return psi_inv[img(psi[j])] if j <= m else j

    w_window = small + bs
    z_window = [z_plain(j) for j in range(1, n + 1)]

    if base.family == "D":
        triple = triples[-1] if m == 0 else triples[m // 2 - 1]
        if sum(1 for b in bs if b < 0) % 2:
            w_window = [-small[0]] + small[1:] + bs

            def s0(v: int) -> int:
                return -v if abs(v) == 1 else v

            z_window = [s0(-z_plain(1))] + [s0(z_plain(j)) for j in range(2, n + 1)]
    else:
        triple = triples[m // 2]

    return triple, KElement(WeylElement(base, tuple(w_window)), WeylElement(base, tuple(z_window)))


def verify_phi(base: GroupType) -> CheckReport:
    """phi is a classification-preserving bijection onto each label set."""
    from .gelfand import enumerate_gelfand

    report = CheckReport(f"phi transport ({base})")
    triples = model_triples(base)
    vertices = enumerate_gelfand(base)
    buckets: dict[str, dict[tuple, GelfandVertex]] = {t.name: {} for t in triples}
    for v in vertices:
        triple, tau = phi(base, v, triples)
        report.count(
            in_coset_reps(tau.w, triple.J),
            f"phi({v.oneline()}) has w = {tau.w.oneline()} outside the coset representatives",
        )
        buckets[triple.name][tau.key] = v
        for s in base.generators:
            expect = v.classify(s)
            got = classify_tau(base, triple, s, tau)
            report.count(
                expect is got,
                f"classification of s_{s} differs at {v.oneline()}: {expect.value} vs {got.value}",
            )
            if expect.is_strict:
                moved_vertex = v.conjugate_by(s)
                _, moved_tau = phi(base, moved_vertex, triples)
                report.count(
                    moved_tau == s_action(base, triple, s, tau),
                    f"phi fails to intertwine s_{s} at {v.oneline()}",
                )
    for triple in triples:
        expected = {t.key for t in k_elements(base, triple)}
        got = set(buckets[triple.name])
        report.count(
            expected == got,
            f"phi is not onto the label set of {triple.name}: "
            f"{len(got)} of {len(expected)} labels hit",
        )
        if expected == got:
            # height compatibility within the component
            member_vertices = buckets[triple.name]
            min_degree = min(v.degree for v in member_vertices.values())
            for key, v in member_vertices.items():
                tau = KElement(
                    WeylElement(base, key[0], _validate=False),
                    WeylElement(base, key[1], _validate=False),
                )
                report.count(
                    v.degree - min_degree == height2(triple, tau),
                    f"height mismatch at {v.oneline()} in {triple.name}",
                )
    report.notes.append(
        "triple sizes: "
        + ", ".join(f"{t.name}:{len(buckets[t.name])}" for t in triples)
    )
    return report
