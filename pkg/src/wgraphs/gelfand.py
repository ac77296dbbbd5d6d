"""Model basis sets for classical Weyl groups.

For a group W of rank n the module basis is a set of involutions in the
corresponding rank-2n group: fixed-point-free-type involutions z
(|z(i)| != i for all i) whose "visible descents" all lie at positions
<= n.  Visible descents are positions i > 0 with

    z(i+1) < min(i, z(i))    or    z(i) < -i.

Membership is equivalent to a normal form above position n: the values
z(n+1) < ... < z(n+k) <= n increase through the window [-n, n] and the
remaining top positions are paired adjacently, z(n+k+2j) = n+k+2j-1.

The set is in bijection with involutions of W itself via `underline`,
which sends sign-flipped fixed points -a (taken in descending order)
to n+1, n+2, ..., plain fixed points b (ascending) to the next block,
and pads what is left with adjacent transpositions.  For family D the
domain of the bijection mixes parities: D-involutions w whose count
e(w) = #{i <= n : w(i) < -i} is even, together with the involutions of
the ambient BC group outside D whose count is odd.

Every basis element caches a classification of each simple generator s
of the rank-n group as a strict or weak ascent or descent; weak means
the conjugation s z s fixes z (descent) or pushes it into the far
parabolic (ascent).  The window tests implemented here are
cross-validated against the length-based definition in the test suite.

The duality involutions: iota_bc conjugates the underlying involution
of W by the central sign change (underline(w) -> underline(-w)); in
family D this is composed with the diamond twist exactly when
n + #{i <= n : |z(i)| > n} is not divisible by 4, which is also the
condition keeping the image inside the family-D basis set.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from .weyl import GroupType, WeylElement, involutions

#: Default per-family caps on the base rank for enumeration.
RANK_CAPS = {"A": 9, "BC": 5, "D": 6}


class DescentClass(Enum):
    STRICT_ASC = "asc<"
    STRICT_DESC = "desc<"
    WEAK_ASC = "asc="
    WEAK_DESC = "desc="

    @property
    def is_strict(self) -> bool:
        return self in (DescentClass.STRICT_ASC, DescentClass.STRICT_DESC)

    @property
    def is_ascent(self) -> bool:
        return self in (DescentClass.STRICT_ASC, DescentClass.WEAK_ASC)


def big_group(base: GroupType) -> GroupType:
    """The rank-2n group housing the basis elements of a rank-n base."""
    return GroupType(base.family, 2 * base.rank)


def visible_descents(z: WeylElement) -> set[int]:
    """Positions i > 0 with z(i+1) < min(i, z(i)) or z(i) < -i."""
    w = z.window
    n = len(w)
    out = set()
    for i in range(1, n + 1):
        if i < n and w[i] < min(i, w[i - 1]):
            out.add(i)
        elif w[i - 1] < -i:
            out.add(i)
    return out


def _cross_count(window: tuple[int, ...], n: int) -> int:
    """#{i in [n] : z(i) < -i}, the family-D membership statistic."""
    return sum(1 for i in range(1, n + 1) if window[i - 1] < -i)


def classify_window(window: tuple[int, ...], n: int, family: str) -> dict[int, DescentClass]:
    """Classify every simple generator of the rank-n group against z.

    Window tests, case by case:
      s_i, i >= 1:   weak descent   iff z(i) = i+1 or z(i) = -(i+1)
                     weak ascent    iff n < z(i) < z(i+1) or z(i) < z(i+1) < -n
                     strict descent iff otherwise z(i) > z(i+1)
      s_0 (BC):      strict descent iff z(1) < 0, strict ascent otherwise
                     (the weak cases cannot occur)
      s_-1 (D):      weak descent   iff z(1) = 2 or z(1) = -2
                     weak ascent    iff z(1) < -n < n < z(2) or z(2) < -n < n < z(1)
                     strict descent iff otherwise -z(2) > z(1)
    """
    out: dict[int, DescentClass] = {}
    for i in range(1, n):
        vi, vj = window[i - 1], window[i]
        if vi == i + 1 or vi == -(i + 1):
            out[i] = DescentClass.WEAK_DESC
        elif (n < vi < vj) or (vi < vj < -n):
            out[i] = DescentClass.WEAK_ASC
        elif vi > vj:
            out[i] = DescentClass.STRICT_DESC
        else:
            out[i] = DescentClass.STRICT_ASC
    if family == "BC":
        out[0] = DescentClass.STRICT_DESC if window[0] < 0 else DescentClass.STRICT_ASC
    elif family == "D":
        v1, v2 = window[0], window[1]
        if v1 == 2 or v1 == -2:
            out[-1] = DescentClass.WEAK_DESC
        elif (v1 < -n and v2 > n) or (v2 < -n and v1 > n):
            out[-1] = DescentClass.WEAK_ASC
        elif -v2 > v1:
            out[-1] = DescentClass.STRICT_DESC
        else:
            out[-1] = DescentClass.STRICT_ASC
    return out


class GelfandVertex:
    """A basis element: a classified involution in the rank-2n group."""

    __slots__ = ("element", "base", "classification")

    def __init__(self, element: WeylElement, base: GroupType, _validate: bool = True):
        if element.group != big_group(base):
            raise ValueError(f"element lives in {element.group}, expected {big_group(base)}")
        self.element = element
        self.base = base
        if _validate:
            self._validate()
        self.classification = classify_window(element.window, base.rank, base.family)

    def _validate(self):
        z, n = self.element, self.base.rank
        if not z.is_involution():
            raise ValueError(f"{z.oneline()} is not an involution")
        if any(abs(z.window[i - 1]) == i for i in range(1, 2 * n + 1)):
            raise ValueError(f"{z.oneline()} has a position with |z(i)| = i")
        bad = {i for i in visible_descents(z) if i > n}
        if bad:
            raise ValueError(f"{z.oneline()} has visible descents {sorted(bad)} above {n}")
        if self.base.family == "D" and _cross_count(z.window, n) % 2:
            raise ValueError(f"{z.oneline()} fails the family-D parity condition")

    @property
    def degree(self) -> int:
        """Length of the involution in the rank-2n group."""
        return self.element.length()

    @property
    def key(self) -> tuple:
        return (self.element.length(), self.element.window)

    def classify(self, s: int) -> DescentClass:
        if s not in self.classification:
            raise ValueError(f"invalid generator s_{s} for base group {self.base}")
        return self.classification[s]

    def ascent_set(self, family: str) -> frozenset[int]:
        """Label set of the vertex in an "m"- or "n"-flavoured graph."""
        weak = DescentClass.WEAK_ASC if family == "m" else DescentClass.WEAK_DESC
        return frozenset(
            s for s, c in self.classification.items() if c is DescentClass.STRICT_ASC or c is weak
        )

    def conjugate_by(self, s: int) -> "GelfandVertex":
        """The vertex s z s for a strict generator s (embedded by index)."""
        cls = self.classify(s)
        if not cls.is_strict:
            raise ValueError(f"s_{s} is a weak {cls.value} of {self.oneline()}; szs leaves the orbit")
        moved = self.element.mul_gen_left(s).mul_gen_right(s)
        return GelfandVertex(moved, self.base)

    def oneline(self) -> str:
        return self.element.oneline()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GelfandVertex)
            and self.base == other.base
            and self.element.window == other.element.window
        )

    def __hash__(self) -> int:
        return hash((self.base, self.element.window))

    def __repr__(self) -> str:
        return f"GelfandVertex({self.base}, {self.oneline()})"


def underline_window(w_window: tuple[int, ...]) -> tuple[int, ...]:
    """The rank-2n window of the basis element attached to an involution.

    Sign-flipped fixed points a (descending) pair with n+1, n+2, ...
    crosswise; plain fixed points b (ascending) pair with the following
    block; 2-cycles are carried over; leftover top positions are paired
    adjacently.
    """
    n = len(w_window)
    flipped = sorted((a for a in range(1, n + 1) if w_window[a - 1] == -a), reverse=True)
    fixed = [b for b in range(1, n + 1) if w_window[b - 1] == b]
    p, q = len(flipped), len(fixed)
    big = [0] * (2 * n)
    for i, a in enumerate(flipped, start=1):
        big[a - 1] = -(n + i)
        big[n + i - 1] = -a
    for i, b in enumerate(fixed, start=1):
        big[b - 1] = n + p + i
        big[n + p + i - 1] = b
    for c in range(1, n + 1):
        if big[c - 1] == 0:
            big[c - 1] = w_window[c - 1]
    t = n + p + q + 1
    while t < 2 * n:
        big[t - 1] = t + 1
        big[t] = t
        t += 2
    return tuple(big)


def underline(w: WeylElement, base: GroupType) -> GelfandVertex:
    """Embed an involution of the rank-n group as a basis vertex."""
    if not w.is_involution():
        raise ValueError(f"underline needs an involution, got {w.oneline()}")
    if w.group.rank != base.rank:
        raise ValueError(f"rank mismatch: {w.group} vs base {base}")
    if base.family == "A" and w.group.family != "A":
        raise ValueError("type A base needs a type A involution")
    big = WeylElement(big_group(base), underline_window(w.window))
    return GelfandVertex(big, base)


def involution_of(v: GelfandVertex) -> WeylElement:
    """The involution w of the rank-n group with underline(w) = v.

    Positions carrying values of absolute value <= n keep them; a value
    above n marks a plain fixed point and a value below -n marks a
    sign-flipped one.
    """
    n = v.base.rank
    z = v.element.window
    win = []
    for i in range(1, n + 1):
        c = z[i - 1]
        if abs(c) <= n:
            win.append(c)
        elif c > n:
            win.append(i)
        else:
            win.append(-i)
    family = "A" if v.base.family == "A" else "BC"
    return WeylElement(GroupType(family, n), tuple(win))


def _check_rank_cap(base: GroupType, rank_cap: Optional[int]):
    cap = RANK_CAPS[base.family] if rank_cap is None else rank_cap
    if base.rank > cap:
        raise ValueError(
            f"rank {base.rank} exceeds cap {cap} for family {base.family}; pass a larger rank_cap"
        )


def enumerate_gelfand(base: GroupType, rank_cap: Optional[int] = None) -> list[GelfandVertex]:
    """All basis vertices, ordered by (rank-2n length, window).

    Generated through the underline bijection; for family D the domain
    mixes D-involutions with even cross count and ambient-BC
    involutions with odd cross count.
    """
    _check_rank_cap(base, rank_cap)
    n = base.rank
    if base.family == "A":
        domain = involutions(GroupType("A", n))
    elif base.family == "BC":
        domain = involutions(GroupType("BC", n))
    else:
        domain = [
            w
            for w in involutions(GroupType("BC", n))
            if sum(1 for c in w.window if c < 0) % 2 == _cross_count(w.window, n) % 2
        ]
    vertices = [underline(w, base) for w in domain]
    vertices.sort(key=lambda v: v.key)
    return vertices


def enumerate_gelfand_by_filter(base: GroupType) -> list[GelfandVertex]:
    """Independent enumeration: scan the rank-2n group directly.

    Builds every fixed-point-free-type involution of the doubled group
    as a signed perfect matching and keeps those with no visible
    descent above n (and, for D, even cross count).  Exponential in the
    rank; meant as a small-rank oracle for enumerate_gelfand.
    """
    n = base.rank
    N = 2 * n
    signed = base.family != "A"
    big = big_group(base)
    window = [0] * N
    out: list[GelfandVertex] = []

    def rec(free: tuple[int, ...]):
        if not free:
            win = tuple(window)
            if any(i > n for i in visible_descents(WeylElement(big, win, _validate=False))):
                return
            if base.family == "D" and _cross_count(win, n) % 2:
                return
            out.append(GelfandVertex(WeylElement(big, win, _validate=False), base))
            return
        i, rest = free[0], free[1:]
        for pos, j in enumerate(rest):
            sub = rest[:pos] + rest[pos + 1 :]
            window[i - 1], window[j - 1] = j, i
            rec(sub)
            if signed:
                window[i - 1], window[j - 1] = -j, -i
                rec(sub)
            window[j - 1] = 0
        window[i - 1] = 0

    rec(tuple(range(1, N + 1)))
    out.sort(key=lambda v: v.key)
    return out


def iota_bc(v: GelfandVertex) -> GelfandVertex:
    """The type-BC duality involution underline(w) -> underline(-w)."""
    if v.base.family != "BC":
        raise ValueError(f"iota_bc needs a BC vertex, got family {v.base.family}")
    w = involution_of(v)
    neg = WeylElement(w.group, tuple(-c for c in w.window))
    return underline(neg, v.base)


def tilde_twist_needed(v: GelfandVertex) -> bool:
    """True when the diamond twist applies: n + #big values not in 4Z."""
    n = v.base.rank
    big_values = sum(1 for i in range(n) if abs(v.element.window[i]) > n)
    return (n + big_values) % 4 != 0


def iota_d(v: GelfandVertex) -> GelfandVertex:
    """The type-D duality involution: iota_bc, diamond-twisted as needed."""
    if v.base.family != "D":
        raise ValueError(f"iota_d needs a D vertex, got family {v.base.family}")
    w = involution_of(v)
    zwin = underline_window(tuple(-c for c in w.window))
    elt = WeylElement(big_group(v.base), zwin)
    if tilde_twist_needed(v):
        elt = elt.diamond()
    return GelfandVertex(elt, v.base)
