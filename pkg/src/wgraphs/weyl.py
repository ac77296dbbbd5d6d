"""Classical Weyl groups of types A, BC and D as signed permutations.

Elements are stored in one-line window notation: the tuple
(w(1), ..., w(N)) of nonzero integers with distinct absolute values,
extended to a permutation of {-N, ..., -1, 1, ..., N} by w(-i) = -w(i).

Simple generators are referred to by integer index:

    s_i (i >= 1)  swaps i <-> i+1 and -i <-> -(i+1)      (all families)
    s_0           swaps 1 <-> -1                          (family BC only)
    s_-1          swaps 1 <-> -2 and -1 <-> 2             (family D only)

Type A means the symmetric group S_n with generators s_1..s_{n-1}; its
windows have no negative entries.  Type D windows carry an even number
of negative entries.

Lengths are computed by closed-form window statistics (inversions plus
a negative-entry correction in types BC/D); the test suite validates
these against a breadth-first word-length oracle at small rank.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

_MIN_RANK = {"A": 1, "BC": 2, "D": 2}

#: Default cap on |W| for whole-group scans such as square_root_count.
DEFAULT_GROUP_CAP = 10_000


@dataclass(frozen=True)
class GroupType:
    """A classical Weyl group family tag plus rank.

    Family "A" with rank n is the symmetric group S_n (n - 1 simple
    generators), not the Coxeter system A_n.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _MIN_RANK:
            raise ValueError(f"unknown family {self.family!r}; expected A, BC or D")
        if self.rank < _MIN_RANK[self.family]:
            raise ValueError(
                f"family {self.family} requires rank >= {_MIN_RANK[self.family]}, got {self.rank}"
            )

    @property
    def generators(self) -> tuple[int, ...]:
        if self.family == "A":
            return tuple(range(1, self.rank))
        if self.family == "BC":
            return tuple(range(0, self.rank))
        return (-1,) + tuple(range(1, self.rank))

    def has_generator(self, s: int) -> bool:
        return s in self.generators

    def gen_order(self, s: int, t: int) -> int:
        """Order of the product s*t (the Coxeter matrix entry m(s,t))."""
        if not (self.has_generator(s) and self.has_generator(t)):
            raise ValueError(f"invalid generator pair ({s}, {t}) for {self}")
        if s == t:
            return 1
        a, b = min(s, t), max(s, t)
        if a == -1:
            return 3 if b == 2 else 2
        if a == 0:
            return 4 if b == 1 else 2
        return 3 if b == a + 1 else 2

    def order(self) -> int:
        import math

        n = self.rank
        if self.family == "A":
            return math.factorial(n)
        if self.family == "BC":
            return math.factorial(n) << n
        return math.factorial(n) << (n - 1)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


class WeylElement:
    """A signed permutation tagged by its group."""

    __slots__ = ("group", "window", "_len")

    def __init__(self, group: GroupType, window: tuple[int, ...], _validate: bool = True):
        self.group = group
        self.window = tuple(window)
        self._len: Optional[int] = None
        if _validate:
            self._validate()

    def _validate(self):
        n = self.group.rank
        w = self.window
        if len(w) != n:
            raise ValueError(f"window length {len(w)} != rank {n}")
        if sorted(abs(v) for v in w) != list(range(1, n + 1)):
            raise ValueError(f"window {w} is not a signed permutation of 1..{n}")
        if self.group.family == "A" and any(v < 0 for v in w):
            raise ValueError(f"type A window {w} must be positive")
        if self.group.family == "D" and sum(1 for v in w if v < 0) % 2:
            raise ValueError(f"type D window {w} needs an even number of sign changes")

    def __call__(self, i: int) -> int:
        """Image of i, for i in {-N..-1, 1..N}."""
        if i > 0:
            return self.window[i - 1]
        return -self.window[-i - 1]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeylElement)
            and self.group == other.group
            and self.window == other.window
        )

    def __hash__(self) -> int:
        return hash((self.group, self.window))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.compose(other)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """(self o other)(i) = self(other(i))."""
        if self.group != other.group:
            raise ValueError(f"group mismatch: {self.group} vs {other.group}")
        win = tuple(self(v) for v in other.window)
        return WeylElement(self.group, win, _validate=False)

    def inverse(self) -> "WeylElement":
        win = [0] * self.group.rank
        for i, v in enumerate(self.window, start=1):
            if v > 0:
                win[v - 1] = i
            else:
                win[-v - 1] = -i
        return WeylElement(self.group, tuple(win), _validate=False)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.window, start=1))

    def is_involution(self) -> bool:
        return self.compose(self).is_identity()

    def length(self) -> int:
        """Coxeter length in the element's own family."""
        if self._len is None:
            w = self.window
            n = len(w)
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
            fam = self.group.family
            if fam == "A":
                self._len = inv
            elif fam == "BC":
                self._len = inv + sum(-v for v in w if v < 0)
            else:
                self._len = inv + sum(-v - 1 for v in w if v < 0)
        return self._len

    # -- descents and words ------------------------------------------------

    def is_right_descent(self, s: int) -> bool:
        """True iff l(w s) < l(w), decided by window inspection."""
        if not self.group.has_generator(s):
            raise ValueError(f"invalid generator s_{s} for {self.group}")
        w = self.window
        if s >= 1:
            return w[s - 1] > w[s]
        if s == 0:
            return w[0] < 0
        return -w[1] > w[0]

    def right_descents(self) -> set[int]:
        return {s for s in self.group.generators if self.is_right_descent(s)}

    def left_descents(self) -> set[int]:
        return self.inverse().right_descents()

    def mul_gen_right(self, s: int) -> "WeylElement":
        """w * s_s, a window position operation."""
        w = list(self.window)
        if s >= 1:
            w[s - 1], w[s] = w[s], w[s - 1]
        elif s == 0:
            w[0] = -w[0]
        else:
            w[0], w[1] = -w[1], -w[0]
        return WeylElement(self.group, tuple(w), _validate=False)

    def mul_gen_left(self, s: int) -> "WeylElement":
        """s_s * w, a window value operation."""
        w = list(self.window)
        if s >= 1:
            for i, v in enumerate(w):
                if abs(v) == s:
                    w[i] = v + 1 if v > 0 else v - 1
                elif abs(v) == s + 1:
                    w[i] = v - 1 if v > 0 else v + 1
        elif s == 0:
            for i, v in enumerate(w):
                if abs(v) == 1:
                    w[i] = -v
        else:
            swap = {1: -2, -2: 1, -1: 2, 2: -1}
            for i, v in enumerate(w):
                if v in swap:
                    w[i] = swap[v]
        return WeylElement(self.group, tuple(w), _validate=False)

    def reduced_word(self) -> list[int]:
        """A reduced word for w, smallest-index left descent first.

        The product of the returned generators, multiplied left to
        right, reproduces w; the word length equals l(w).
        """
        word = []
        w = self
        while not w.is_identity():
            s = min(w.left_descents())
            word.append(s)
            w = w.mul_gen_left(s)
        return word

    def diamond(self) -> "WeylElement":
        """Conjugation by the sign change in the first coordinate.

        Defined for family D; it exchanges the roles of s_-1 and s_1
        while fixing the other generators.
        """
        if self.group.family != "D":
            raise ValueError("diamond is only defined for family D")

        def flip(v: int) -> int:
            return -v if abs(v) == 1 else v

        win = list(self.window)
        win[0] = -win[0]
        win = [flip(v) for v in win]
        return WeylElement(self.group, tuple(win), _validate=False)

    def oneline(self) -> str:
        return ",".join(str(v) for v in self.window)

    def __repr__(self) -> str:
        return f"WeylElement({self.group}, {self.oneline()})"


def identity(group: GroupType) -> WeylElement:
    return WeylElement(group, tuple(range(1, group.rank + 1)), _validate=False)


def simple_generator(group: GroupType, s: int) -> WeylElement:
    if not group.has_generator(s):
        raise ValueError(f"invalid generator s_{s} for {group}")
    return identity(group).mul_gen_right(s)


def gen_name(s: int) -> str:
    return f"s{s}"


def longest_element(group: GroupType) -> WeylElement:
    """The unique element of maximal length."""
    n = group.rank
    if group.family == "A":
        win = tuple(range(n, 0, -1))
    elif group.family == "BC":
        win = tuple(-i for i in range(1, n + 1))
    elif n % 2 == 0:
        win = tuple(-i for i in range(1, n + 1))
    else:
        win = (1,) + tuple(-i for i in range(2, n + 1))
    return WeylElement(group, win)


def all_elements(group: GroupType) -> Iterator[WeylElement]:
    """Every element of the group, lexicographic by window."""
    n = group.rank
    if group.family == "A":
        for perm in itertools.permutations(range(1, n + 1)):
            yield WeylElement(group, perm, _validate=False)
        return
    need_even = group.family == "D"
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            if need_even and signs.count(-1) % 2:
                continue
            yield WeylElement(group, tuple(p * s for p, s in zip(perm, signs)), _validate=False)


def _check_cap(group: GroupType, cap: Optional[int]):
    cap = DEFAULT_GROUP_CAP if cap is None else cap
    if group.order() > cap:
        raise ValueError(f"group {group} has order {group.order()} exceeding cap {cap}")


def square_root_count(group: GroupType, w: WeylElement, cap: Optional[int] = None) -> int:
    """#{u in W : u^2 = w}, by scanning the whole group."""
    _check_cap(group, cap)
    return sum(1 for u in all_elements(group) if u.compose(u) == w)


def square_root_counts(group: GroupType, cap: Optional[int] = None) -> dict[tuple[int, ...], int]:
    """Window -> #{u : u^2 has that window}, in one pass over the group."""
    _check_cap(group, cap)
    counts: dict[tuple[int, ...], int] = {}
    for u in all_elements(group):
        key = u.compose(u).window
        counts[key] = counts.get(key, 0) + 1
    return counts


def involutions(group: GroupType) -> list[WeylElement]:
    """All w with w^2 = 1, by a pair-matching recursion on positions.

    Each position is a fixed point (w(i) = i), a sign-flipped fixed
    point (w(i) = -i, types BC/D), or half of a 2-cycle (i, j) or
    (i, -j).  Type D keeps only windows with an even number of signs.
    """
    n = group.rank
    signed = group.family != "A"
    need_even = group.family == "D"
    window = [0] * n
    out: list[WeylElement] = []

    def rec(free: tuple[int, ...]):
        if not free:
            if need_even and sum(1 for v in window if v < 0) % 2:
                return
            out.append(WeylElement(group, tuple(window), _validate=False))
            return
        i, rest = free[0], free[1:]
        window[i - 1] = i
        rec(rest)
        if signed:
            window[i - 1] = -i
            rec(rest)
        for pos, j in enumerate(rest):
            sub = rest[:pos] + rest[pos + 1 :]
            window[i - 1], window[j - 1] = j, i
            rec(sub)
            if signed:
                window[i - 1], window[j - 1] = -j, -i
                rec(sub)
            window[j - 1] = 0
        window[i - 1] = 0

    rec(tuple(range(1, n + 1)))
    out.sort(key=lambda w: (w.length(), w.window))
    return out


def conjugacy_classes(group: GroupType, cap: Optional[int] = None) -> list[list[WeylElement]]:
    """Conjugacy classes, each sorted, ordered by their minimal member."""
    _check_cap(group, cap)
    elements = sorted(all_elements(group), key=lambda w: (w.length(), w.window))
    gens = [simple_generator(group, s) for s in group.generators]
    seen: set[tuple[int, ...]] = set()
    classes = []
    for w in elements:
        if w.window in seen:
            continue
        cls = []
        frontier = [w]
        seen.add(w.window)
        while frontier:
            u = frontier.pop()
            cls.append(u)
            for g in gens:
                v = g.compose(u).compose(g)
                if v.window not in seen:
                    seen.add(v.window)
                    frontier.append(v)
        cls.sort(key=lambda x: (x.length(), x.window))
        classes.append(cls)
    return classes
