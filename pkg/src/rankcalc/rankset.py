"""Rank sets, their bounded affine permutations, stretching, and the
extraction of an ordinary permutation representing the rank variety class.

A rank set is a finite collection of integer intervals [a, b] inside [1, n]
with all left endpoints distinct and all right endpoints distinct.  Sorted
by right endpoint, it corresponds to the bounded affine permutation sending
each b_i to a_i + n and the leftover positions increasingly onto the
leftover small values; that correspondence and its inverse, the dimension
count, and the stretching loop that makes the window of an ordinary
permutation visible are all here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .errors import (
    EmptyRankSet,
    InvalidRankSet,
    NotBounded,
    NotRankSetShaped,
    ParseError,
)
from .perms import (
    AffinePermutation,
    Permutation,
    check_permutation,
    evaluate,
    is_bounded,
)

Interval = tuple[int, int]


@dataclass(frozen=True)
class RankSet:
    """Intervals stored sorted by right endpoint, plus the ambient n."""

    intervals: tuple[Interval, ...]
    ambient_n: int

    def __post_init__(self):
        ivs = tuple(
            sorted(((int(a), int(b)) for a, b in self.intervals), key=lambda iv: iv[1])
        )
        object.__setattr__(self, "intervals", ivs)
        n = self.ambient_n
        if n < 0:
            raise InvalidRankSet(f"ambient n must be nonnegative: {n}")
        for a, b in ivs:
            if not (1 <= a <= b <= n):
                raise InvalidRankSet(f"interval [{a},{b}] out of range for n={n}")
        if len({a for a, _ in ivs}) != len(ivs):
            raise InvalidRankSet(f"duplicate left endpoints in {ivs}")
        if len({b for _, b in ivs}) != len(ivs):
            raise InvalidRankSet(f"duplicate right endpoints in {ivs}")

    @property
    def k(self) -> int:
        return len(self.intervals)

    def __repr__(self) -> str:
        return f"RankSet({self.intervals!r}, n={self.ambient_n})"


def rank_set(intervals, ambient_n: int) -> RankSet:
    return RankSet(tuple((a, b) for a, b in intervals), ambient_n)


def containment_count(m: RankSet, interval: Interval) -> int:
    """Number of intervals of m contained in the given interval.

    >>> containment_count(rank_set([(1, 1), (3, 4), (2, 5)], 5), (2, 5))
    2
    """
    r, s = interval
    return sum(1 for a, b in m.intervals if r <= a and b <= s)


def dimension(m: RankSet) -> int:
    """Dimension of the rank variety: sum over intervals of size minus the
    number of intervals contained in it."""
    return sum(
        (b - a + 1) - containment_count(m, (a, b)) for a, b in m.intervals
    )


def codimension(m: RankSet) -> int:
    k, n = m.k, m.ambient_n
    return k * (n - k) - dimension(m)


def affine_of_rank_set(m: RankSet) -> AffinePermutation:
    """The bounded affine permutation of a rank set.

    Right endpoints go to their left endpoints plus n; the remaining
    positions carry the remaining small values in increasing order.

    >>> affine_of_rank_set(rank_set([(1, 1), (3, 4), (2, 5)], 5)).window
    (6, 4, 5, 8, 7)
    """
    n = m.ambient_n
    if n == 0:
        raise InvalidRankSet("ambient n must be positive for the correspondence")
    window = [0] * n
    rights = {b for _, b in m.intervals}
    lefts = {a for a, _ in m.intervals}
    for a, b in m.intervals:
        window[b - 1] = a + n
    spare_positions = [p for p in range(1, n + 1) if p not in rights]
    spare_values = [v for v in range(1, n + 1) if v not in lefts]
    for p, v in zip(spare_positions, spare_values):
        window[p - 1] = v
    return AffinePermutation(tuple(window))


def rank_set_of_affine(f: AffinePermutation) -> RankSet:
    """Inverse of affine_of_rank_set.

    >>> rank_set_of_affine(AffinePermutation((6, 4, 5, 8, 7))).intervals
    ((1, 1), (3, 4), (2, 5))
    """
    n = f.n
    if not is_bounded(f):
        raise NotBounded(f"window {f.window} is not bounded")
    small = [x for x in f.window if x <= n]
    if small != sorted(small):
        raise NotRankSetShaped(
            f"entries of {f.window} lying in [n] are not increasing"
        )
    intervals = tuple(
        (x - n, p) for p, x in enumerate(f.window, start=1) if x > n
    )
    return RankSet(intervals, n)


def stretch(m: RankSet) -> RankSet:
    """Extend every interval one step right, growing the ambient by one."""
    return RankSet(
        tuple((a, b + 1) for a, b in m.intervals), m.ambient_n + 1
    )


def is_stretched(m: RankSet) -> bool:
    """True iff min(S) < max(T) for every ordered pair of intervals,
    equivalently max of lefts < min of rights."""
    if not m.intervals:
        return True
    return max(a for a, _ in m.intervals) < min(b for _, b in m.intervals)


def minimal_stretch(m: RankSet) -> int:
    """Smallest nonnegative number of stretches after which the rank set is
    stretched: max(0, 1 + max over pairs of (left end minus right end)).

    >>> minimal_stretch(rank_set([(1, 3), (3, 6), (4, 5)], 6))
    2
    """
    if not m.intervals:
        raise EmptyRankSet("minimal_stretch requires a nonempty rank set")
    max_a = max(a for a, _ in m.intervals)
    min_b = min(b for _, b in m.intervals)
    return max(0, 1 + max_a - min_b)


def w_of_rank_set(m: RankSet) -> Permutation:
    """Ordinary permutation whose Stanley function represents the class.

    Stretch minimally, take the least right endpoint b of the stretched
    set, put y = f(b-1), and read the window of the shifted permutation:
    w(i) = f(b-2+i) - y + 1.

    >>> w_of_rank_set(rank_set([(1, 3), (3, 6), (4, 5)], 6))
    (1, 3, 2, 6, 5, 4, 7, 8)
    """
    if not m.intervals:
        raise EmptyRankSet("w_of_rank_set requires a nonempty rank set")
    steps = minimal_stretch(m)
    stretched = m
    for _ in range(steps):
        stretched = stretch(stretched)
    assert is_stretched(stretched)
    f = affine_of_rank_set(stretched)
    b = stretched.intervals[0][1]
    y = evaluate(f, b - 1)
    n2 = stretched.ambient_n
    return check_permutation(
        evaluate(f, b - 2 + i) - y + 1 for i in range(1, n2 + 1)
    )


def rank_set_of_permutation(w: Permutation) -> RankSet:
    """The rank set {[w(i), i+n]} in ambient 2n.

    >>> rank_set_of_permutation((2, 4, 1, 5, 3)).intervals
    ((2, 6), (4, 7), (1, 8), (5, 9), (3, 10))
    """
    w = check_permutation(w)
    n = len(w)
    return RankSet(tuple((w[i], i + 1 + n) for i in range(n)), 2 * n)


def all_rank_sets(k: int, n: int) -> Iterator[RankSet]:
    """All rank sets with exactly k intervals in [1, n], deterministically.

    Right-endpoint sets run over sorted k-subsets; for each, the left
    endpoints run over all ordered selections compatible with a <= b.
    """
    for rights in combinations(range(1, n + 1), k):
        for lefts_set in combinations(range(1, n + 1), k):
            for lefts in permutations(lefts_set):
                if all(a <= b for a, b in zip(lefts, rights)):
                    yield RankSet(tuple(zip(lefts, rights)), n)


def rank_set_text(m: RankSet) -> str:
    body = ",".join(f"[{a},{b}]" for a, b in m.intervals)
    return f"{body};n={m.ambient_n}"


def parse_rank_set(text: str) -> RankSet:
    text = text.strip()
    if ";n=" not in text:
        raise ParseError(f"rank set text must end with ';n=N': {text!r}")
    body, _, ntext = text.partition(";n=")
    try:
        n = int(ntext)
    except ValueError:
        raise ParseError(f"bad ambient n in {text!r}") from None
    body = body.strip()
    intervals = []
    if body:
        import re

        if not re.fullmatch(r"\[\d+,\d+\](,\[\d+,\d+\])*", body):
            raise ParseError(f"bad rank set body {body!r}")
        for pair in re.findall(r"\[(\d+),(\d+)\]", body):
            intervals.append((int(pair[0]), int(pair[1])))
    try:
        return RankSet(tuple(intervals), n)
    except InvalidRankSet as exc:
        raise ParseError(f"bad rank set {text!r}: {exc}") from None
