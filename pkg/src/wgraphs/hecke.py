"""Hecke algebra modules over descent-classified bases.

The algebra acts through a single generator formula with four cases.
Writing B_z for a standard basis vector and s for a simple generator:

    strict ascent   H_s B_z = B_{szs}
    strict descent  H_s B_z = B_{szs} + (x - x^-1) B_z
    weak cases      H_s B_z = c B_z

where the weak scalar c depends on the family tag: family "m" takes
-x^-1 on weak ascents and x on weak descents, family "n" swaps them.
Both families satisfy the quadratic relation (H_s - x)(H_s + x^-1) = 0
and the braid relations, which verify_module_axioms checks brutally.

Each family has an antilinear bar involution fixing the basis vectors
without strict descents, computed by the descending recursion
bar(B_z) = (H_s - x + x^-1) bar(B_{szs}) over a strict descent s, and a
unique canonical basis: bar-invariant columns that are unitriangular
with strictly-negative-exponent corrections.  Columns are produced in
degree order by the one-step rule

    col(z) = (H_s + x^-1) col(y) - sum_u mu(u, y) col(u)

with y = move(z, s) for the chosen strict descent s, u running over
labels carrying s on their descent side, and mu(u, y) the coefficient
of x^-1 in col(y)[u].  A quadratic-time solver that corrects each
column by bar-invariant lower terms is kept as an independent oracle.

Module vectors are sparse dicts from label index to LaurentPolynomial.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .gelfand import DescentClass, GelfandVertex
from .laurent import ONE, ZERO, LaurentPolynomial, X_MINUS_X_INV

Vector = dict[int, LaurentPolynomial]

_WEAK_SCALARS = {
    ("m", DescentClass.WEAK_ASC): LaurentPolynomial.monomial(-1, -1),
    ("m", DescentClass.WEAK_DESC): LaurentPolynomial.monomial(1),
    ("n", DescentClass.WEAK_ASC): LaurentPolynomial.monomial(1),
    ("n", DescentClass.WEAK_DESC): LaurentPolynomial.monomial(-1, -1),
}

#: Weak class absorbed into the descent side of each family.
_WEAK_DESC_SIDE = {"m": DescentClass.WEAK_DESC, "n": DescentClass.WEAK_ASC}


@dataclass
class CheckReport:
    """Outcome of a verification pass: counts plus the first failures."""

    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    max_failures: int = 8

    @property
    def ok(self) -> bool:
        return not self.failures

    def count(self, condition: bool, message: str):
        self.checks += 1
        if not condition and len(self.failures) < self.max_failures:
            self.failures.append(message)
        elif not condition:
            self.failures.append("...")

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        lines = [f"{status} {self.name}: {self.checks} checks, {len(self.failures)} failures"]
        lines += [f"  {m}" for m in self.failures[: self.max_failures]]
        lines += [f"  note: {m}" for m in self.notes]
        return "\n".join(lines)


class ClassifiedBasis:
    """A finite labelled basis with per-generator classification data.

    labels[i] is an arbitrary hashable label, degrees[i] an integer
    grading (length for model vertices, doubled height for parabolic
    labels), classes[i] maps each generator to a DescentClass, and
    moves[i] maps each strict generator to the target label index.
    Strict moves are degree +-2 involutions with opposite classes at
    both ends; the constructor enforces this.
    """

    __slots__ = ("generators", "labels", "display", "degrees", "classes", "moves", "gen_order", "_asc")

    def __init__(
        self,
        generators: Sequence[int],
        labels: Sequence,
        display: Sequence[str],
        degrees: Sequence[int],
        classes: Sequence[dict[int, DescentClass]],
        moves: Sequence[dict[int, int]],
        gen_order: Callable[[int, int], int],
    ):
        self.generators = tuple(generators)
        self.labels = tuple(labels)
        self.display = tuple(display)
        self.degrees = tuple(degrees)
        self.classes = tuple(classes)
        self.moves = tuple(moves)
        self.gen_order = gen_order
        self._asc: dict[str, tuple[frozenset[int], ...]] = {}
        self._validate()

    def _validate(self):
        n = len(self.labels)
        if any(self.degrees[i] > self.degrees[i + 1] for i in range(n - 1)):
            raise ValueError("labels must be sorted by degree")
        for i in range(n):
            for s in self.generators:
                cls = self.classes[i][s]
                if not cls.is_strict:
                    continue
                j = self.moves[i][s]
                step = 2 if cls is DescentClass.STRICT_ASC else -2
                if self.degrees[j] - self.degrees[i] != step:
                    raise ValueError(f"strict move {i}--s_{s}-->{j} changes degree by != +-2")
                if self.moves[j][s] != i:
                    raise ValueError(f"move is not an involution at ({i}, s_{s})")
                back = self.classes[j][s]
                if not back.is_strict or back.is_ascent == cls.is_ascent:
                    raise ValueError(f"opposite strict class violated at ({i}, s_{s})")

    def __len__(self) -> int:
        return len(self.labels)

    def ascent_sets(self, family: str) -> tuple[frozenset[int], ...]:
        """Per-label ascent label sets for the given family tag."""
        if family not in self._asc:
            weak = DescentClass.WEAK_ASC if family == "m" else DescentClass.WEAK_DESC
            self._asc[family] = tuple(
                frozenset(s for s, c in cls.items() if c is DescentClass.STRICT_ASC or c is weak)
                for cls in self.classes
            )
        return self._asc[family]


def basis_over_gelfand(vertices: Sequence[GelfandVertex]) -> ClassifiedBasis:
    """Wrap a canonical list of model vertices as a ClassifiedBasis."""
    base = vertices[0].base
    index = {v.element.window: i for i, v in enumerate(vertices)}
    classes = [v.classification for v in vertices]
    moves = []
    for v in vertices:
        mv = {}
        for s, c in v.classification.items():
            if c.is_strict:
                mv[s] = index[v.element.mul_gen_left(s).mul_gen_right(s).window]
        moves.append(mv)
    return ClassifiedBasis(
        generators=base.generators,
        labels=tuple(vertices),
        display=tuple(v.oneline() for v in vertices),
        degrees=tuple(v.degree for v in vertices),
        classes=classes,
        moves=moves,
        gen_order=base.gen_order,
    )


def _add_scaled(dst: Vector, src: Vector, scale) -> None:
    if isinstance(scale, int):
        if scale == 0:
            return
        scale = LaurentPolynomial(scale)
    for i, p in src.items():
        q = dst.get(i, ZERO) + scale * p
        if q:
            dst[i] = q
        elif i in dst:
            del dst[i]


def _vec_eq(a: Vector, b: Vector) -> bool:
    return a == b


class HeckeModule:
    """One family ("m" or "n") of module structure over a basis."""

    def __init__(self, basis: ClassifiedBasis, family: str):
        if family not in ("m", "n"):
            raise ValueError(f"family must be 'm' or 'n', got {family!r}")
        self.basis = basis
        self.family = family
        self._bar_cache: dict[int, Vector] = {}

    # -- generator actions --------------------------------------------------

    def act(self, s: int, vec: Vector) -> Vector:
        """H_s applied to a sparse vector."""
        out: Vector = {}
        classes, moves = self.basis.classes, self.basis.moves
        for i, p in vec.items():
            c = classes[i][s]
            if c is DescentClass.STRICT_ASC:
                _add_scaled(out, {moves[i][s]: p}, 1)
            elif c is DescentClass.STRICT_DESC:
                _add_scaled(out, {moves[i][s]: p}, 1)
                _add_scaled(out, {i: p.shift(1) - p.shift(-1)}, 1)
            else:
                _add_scaled(out, {i: _WEAK_SCALARS[(self.family, c)] * p}, 1)
        return {i: p for i, p in out.items() if p}

    def act_kl(self, s: int, vec: Vector) -> Vector:
        """(H_s + x^-1) applied to a sparse vector.

        Per entry: strict ascents contribute the moved vector plus
        x^-1 times themselves, strict descents the moved vector plus x
        times themselves, descent-side weak entries absorb the factor
        (x + x^-1), ascent-side weak entries vanish.
        """
        out: Vector = {}
        classes, moves = self.basis.classes, self.basis.moves
        weak_desc = _WEAK_DESC_SIDE[self.family]
        for i, p in vec.items():
            c = classes[i][s]
            if c is DescentClass.STRICT_ASC:
                _add_scaled(out, {moves[i][s]: p, i: p.shift(-1)}, 1)
            elif c is DescentClass.STRICT_DESC:
                _add_scaled(out, {moves[i][s]: p, i: p.shift(1)}, 1)
            elif c is weak_desc:
                _add_scaled(out, {i: p.shift(1) + p.shift(-1)}, 1)
        return {i: p for i, p in out.items() if p}

    def act_bar_gen(self, s: int, vec: Vector) -> Vector:
        """bar(H_s) = H_s - x + x^-1 applied to a sparse vector."""
        out = self.act(s, vec)
        _add_scaled(out, {i: X_MINUS_X_INV * p for i, p in vec.items()}, -1)
        return {i: p for i, p in out.items() if p}

    # -- bar involution ------------------------------------------------------

    def descent_side(self, i: int, s: int) -> bool:
        c = self.basis.classes[i][s]
        return c is DescentClass.STRICT_DESC or c is _WEAK_DESC_SIDE[self.family]

    def strict_descents(self, i: int) -> list[int]:
        return [s for s in self.basis.generators if self.basis.classes[i][s] is DescentClass.STRICT_DESC]

    def bar_basis_vector(self, i: int) -> Vector:
        """bar(B_i), by recursion over a smallest strict descent."""
        cached = self._bar_cache.get(i)
        if cached is not None:
            return cached
        sd = self.strict_descents(i)
        if not sd:
            out = {i: ONE}
        else:
            s = min(sd)
            out = self.act_bar_gen(s, self.bar_basis_vector(self.basis.moves[i][s]))
        self._bar_cache[i] = out
        return out

    def bar(self, vec: Vector) -> Vector:
        """The antilinear involution: bar coefficients, bar basis vectors."""
        out: Vector = {}
        for i, p in vec.items():
            _add_scaled(out, self.bar_basis_vector(i), p.bar())
        return {i: p for i, p in out.items() if p}

    # -- canonical basis -----------------------------------------------------

    def canonical_basis(self, choose: str = "min", threads: int = 1) -> "CanonicalBasisTable":
        """The canonical basis as a column table in degree order.

        choose picks the strict descent used for the one-step recursion
        ("min" or "max" index); the result is provably independent of
        the choice and the test suite asserts it.
        """
        if choose not in ("min", "max"):
            raise ValueError("choose must be 'min' or 'max'")
        n = len(self.basis)
        cols: list[Optional[Vector]] = [None] * n

        def build(i: int) -> Vector:
            sd = self.strict_descents(i)
            if not sd:
                return {i: ONE}
            s = min(sd) if choose == "min" else max(sd)
            y = self.basis.moves[i][s]
            col = self.act_kl(s, cols[y])
            for u, p in list(cols[y].items()):
                mu_c = p.coeff(-1)
                if mu_c and self.descent_side(u, s):
                    _add_scaled(col, cols[u], -mu_c)
            if col.get(i) != ONE:
                raise AssertionError(f"canonical column {i} lost its unitriangular head")
            return col

        if threads <= 1:
            for i in range(n):
                cols[i] = build(i)
        else:
            # columns of equal degree only depend on strictly lower ones
            start = 0
            with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
                while start < n:
                    stop = start
                    while stop < n and self.basis.degrees[stop] == self.basis.degrees[start]:
                        stop += 1
                    for i, col in zip(range(start, stop), pool.map(build, range(start, stop))):
                        cols[i] = col
                    start = stop
        return CanonicalBasisTable(self, tuple(cols), choose)

    def canonical_basis_by_bar_solve(self) -> "CanonicalBasisTable":
        """Oracle: solve each column directly for bar invariance.

        Starting from the unit vector, repeatedly cancel the highest
        label where bar(col) differs from col by adding a correction in
        strictly negative powers.  Quadratic and slow; used to check
        the one-step recursion at small rank.
        """
        n = len(self.basis)
        cols: list[Vector] = []
        for i in range(n):
            col: Vector = {i: ONE}
            while True:
                defect: Vector = dict(self.bar(col))
                _add_scaled(defect, col, -1)
                defect = {j: p for j, p in defect.items() if p}
                if not defect:
                    break
                j = max(defect)
                if j >= i:
                    raise AssertionError(f"bar defect at or above the diagonal in column {i}")
                p = defect[j]
                # p is antisymmetric under bar; q - bar(q) = p with q in x^-1 Z[x^-1]
                q = LaurentPolynomial({-k: p.coeff(-k) for k in range(1, -p.min_exponent() + 1)})
                if q - q.bar() != p:
                    raise AssertionError(f"non-antisymmetric bar defect in column {i}")
                _add_scaled(col, {j: q}, 1)
            cols.append(col)
        return CanonicalBasisTable(self, tuple(cols), "solve")

    # -- specialization ------------------------------------------------------

    def trace_at_one(self, w) -> int:
        """Trace of w on the x = 1 specialization of the module.

        At x = 1 each generator acts as a signed permutation of the
        basis: strict cases move with sign +1, weak cases fix with the
        family's scalar evaluated at 1.
        """
        n = len(self.basis)
        word = w.reduced_word()
        perm: dict[int, list[int]] = {}
        sign: dict[int, list[int]] = {}
        for s in set(word):
            ps, ss = [], []
            for i in range(n):
                c = self.basis.classes[i][s]
                if c.is_strict:
                    ps.append(self.basis.moves[i][s])
                    ss.append(1)
                else:
                    ps.append(i)
                    ss.append(_WEAK_SCALARS[(self.family, c)].eval_at_one())
            perm[s], sign[s] = ps, ss
        total = 0
        for i in range(n):
            j, sg = i, 1
            for s in reversed(word):
                sg *= sign[s][j]
                j = perm[s][j]
            if j == i:
                total += sg
        return total


class CanonicalBasisTable:
    """Columns of the canonical basis over the standard basis."""

    def __init__(self, module: HeckeModule, columns: tuple[Vector, ...], choose: str):
        self.module = module
        self.basis = module.basis
        self.family = module.family
        self.columns = columns
        self.choose = choose

    def column(self, z: int) -> Vector:
        return self.columns[z]

    def mu(self, y: int, z: int) -> int:
        """Coefficient of x^-1 in the (y, z) transition polynomial."""
        p = self.columns[z].get(y)
        return p.coeff(-1) if p is not None else 0

    def mu_pairs(self) -> dict[tuple[int, int], int]:
        """All nonzero mu coefficients keyed by (row, column)."""
        out = {}
        for z, col in enumerate(self.columns):
            for y, p in col.items():
                if y != z:
                    c = p.coeff(-1)
                    if c:
                        out[(y, z)] = c
        return out

    def dump(self) -> str:
        """One line per nonzero entry: row, column, polynomial."""
        lines = []
        for z, col in enumerate(self.columns):
            for y in sorted(col):
                lines.append(f"{self.basis.display[y]}\t{self.basis.display[z]}\t{col[y]}")
        return "\n".join(lines)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CanonicalBasisTable) and self.columns == other.columns


def verify_module_axioms(module: HeckeModule) -> CheckReport:
    """Quadratic and braid relations on every standard basis vector."""
    basis = module.basis
    report = CheckReport(f"module axioms ({module.family})")
    gens = basis.generators
    for i in range(len(basis)):
        unit: Vector = {i: ONE}
        for s in gens:
            hv = module.act(s, unit)
            hhv = module.act(s, hv)
            expect: Vector = dict(unit)
            _add_scaled(expect, {j: X_MINUS_X_INV * p for j, p in hv.items()}, 1)
            expect = {j: p for j, p in expect.items() if p}
            report.count(
                _vec_eq(hhv, expect),
                f"quadratic relation fails at s_{s}, basis {basis.display[i]}",
            )
        for a in range(len(gens)):
            for b in range(a + 1, len(gens)):
                s, t = gens[a], gens[b]
                m = basis.gen_order(s, t)
                lhs, rhs = unit, unit
                word_st = [s if k % 2 == 0 else t for k in range(m)]
                word_ts = [t if k % 2 == 0 else s for k in range(m)]
                for g in reversed(word_st):
                    lhs = module.act(g, lhs)
                for g in reversed(word_ts):
                    rhs = module.act(g, rhs)
                report.count(
                    _vec_eq(lhs, rhs),
                    f"braid relation (s_{s}, s_{t}; m={m}) fails at basis {basis.display[i]}",
                )
    return report
