"""Integer partitions and the exact arithmetic built on them.

A partition is a plain tuple of weakly decreasing positive integers, e.g.
``(4, 4, 2, 2)``; ``()`` is the empty partition.  All counting here is exact
integer arithmetic: hook length products are evaluated as rationals and
asserted integral, Littlewood-Richardson coefficients are obtained by
enumerating the tableaux they count, and characters come from the
border-strip recursion.

The text form writes parts separated by commas ("4,4,2,2"); the empty
partition renders as "-".
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, NamedTuple

from .errors import ParseError, ShapeTooLarge, SizeMismatch

Partition = tuple[int, ...]


class RectangleContext(NamedTuple):
    """A bounding rectangle with ``rows`` rows and ``cols`` columns."""

    rows: int
    cols: int


def partition(parts: Iterable[int]) -> Partition:
    """Canonicalize ``parts`` into a partition, dropping trailing zeros.

    >>> partition([4, 4, 2, 2, 0])
    (4, 4, 2, 2)
    >>> partition(())
    ()
    """
    out = tuple(int(p) for p in parts)
    cut = len(out)
    while cut and out[cut - 1] == 0:
        cut -= 1
    out = out[:cut]
    if out and out[-1] < 0:
        raise ValueError(f"negative part in {out}")
    for a, b in zip(out, out[1:]):
        if a < b:
            raise ValueError(f"parts not weakly decreasing: {out}")
    return out


def is_partition(obj) -> bool:
    try:
        return isinstance(obj, tuple) and partition(obj) == obj
    except (TypeError, ValueError):
        return False


def sort_key(lam: Partition) -> tuple[int, Partition]:
    """Total order used everywhere for printing: degree, then the part
    tuples compared lexicographically."""
    return (sum(lam), lam)


@lru_cache(maxsize=None)
def all_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in the fixed total order.

    >>> all_partitions(4)
    ((1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,))
    """

    def gen(remaining: int, max_part: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(sorted(gen(n, n), key=sort_key))


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram.

    >>> conjugate((4, 2))
    (2, 2, 1, 1)
    >>> conjugate(())
    ()
    """
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    """True if inner fits inside outer row by row."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order on partitions of equal size (prefix sums compare)."""
    if sum(lam) != sum(mu):
        return False
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam[i] if i < len(lam) else 0
        total_m += mu[i] if i < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def complement(lam: Partition, ctx: RectangleContext) -> Partition:
    """The 180-degree rotated complement of ``lam`` inside ``ctx``.

    >>> complement((2, 2), RectangleContext(4, 4))
    (4, 4, 2, 2)
    >>> complement((3, 1), RectangleContext(2, 3))
    (2,)
    """
    rows, cols = ctx
    if len(lam) > rows or (lam and lam[0] > cols):
        raise ShapeTooLarge(f"{lam} does not fit in {rows}x{cols}")
    padded = lam + (0,) * (rows - len(lam))
    return partition(cols - padded[rows - 1 - i] for i in range(rows))


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [
        lam[i] + conj[j] - i - j - 1
        for i in range(len(lam))
        for j in range(lam[i])
    ]


@lru_cache(maxsize=None)
def syt_count(lam: Partition) -> int:
    """Number of standard fillings of ``lam``, via the hook length product.

    The quotient is formed in exact rational arithmetic and asserted to be
    an integer, which guards against a corrupted hook computation.

    >>> syt_count((4, 4, 2, 2))
    2640
    """
    n = sum(lam)
    if n == 0:
        return 1
    value = Fraction(factorial(n), prod(hook_lengths(lam)))
    if value.denominator != 1:
        raise AssertionError(f"hook product does not divide {n}! for {lam}")
    return int(value)


def _count_tableaux(
    outer: Partition, inner: Partition, content: Partition, lattice: bool
) -> int:
    """Count semistandard fillings of outer/inner with the given content.

    Cells are visited in reverse reading order (rows top to bottom, right to
    left within a row) so the ballot condition on the reverse reading word
    can be checked incrementally when ``lattice`` is set.
    """
    rows = len(outer)
    inner_p = inner + (0,) * (rows - len(inner))
    cells = [
        (r, c) for r in range(rows) for c in range(outer[r] - 1, inner_p[r] - 1, -1)
    ]
    if not cells:
        return 1 if not content else 0
    if len(cells) != sum(content):
        return 0
    nvals = len(content)
    counts = [0] * (nvals + 1)
    grid = [[0] * outer[r] for r in range(rows)]

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        right = grid[r][c + 1] if c + 1 < outer[r] else None
        above = None
        if r > 0 and inner_p[r - 1] <= c < outer[r - 1]:
            above = grid[r - 1][c]
        lo = above + 1 if above else 1
        hi = right if right is not None else nvals
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if lattice and v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            grid[r][c] = v
            total += place(idx + 1)
            counts[v] -= 1
            grid[r][c] = 0
        return total

    return place(0)


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c^lam_{mu nu}.

    Counts fillings of the skew shape lam/mu with content nu whose reverse
    reading word is a ballot word.  Zero unless |lam| = |mu| + |nu| and both
    mu and nu fit inside lam.

    >>> lr_coefficient((2, 1), (1,), (1, 1))
    1
    >>> lr_coefficient((4, 3, 2, 1), (3, 2, 1), (2, 1, 1))
    3
    """
    for p in (lam, mu, nu):
        if not is_partition(p):
            raise ValueError(f"not a partition: {p}")
    if sum(mu) + sum(nu) != sum(lam):
        return 0
    if not contains(lam, mu) or not contains(lam, nu):
        return 0
    return _count_tableaux(lam, mu, nu, lattice=True)


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible character value on the class of cycle type ``mu``.

    Border-strip recursion on beta numbers: removing a strip of size t from
    lam is moving some beta number down by t into an unoccupied slot, with
    sign given by the number of beta numbers jumped over.

    >>> mn_character((2, 2), (1, 1, 1, 1))
    2
    >>> mn_character((1, 1, 1, 1), (2, 1, 1))
    -1
    """
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    if not lam:
        return 1
    t, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beta)
    total = 0
    for b in beta:
        nb = b - t
        if nb < 0 or nb in occupied:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        new_lam = partition(new_beta[i] - (ell - 1 - i) for i in range(ell))
        total += (-1) ** height * mn_character(new_lam, rest)
    return total


def centralizer_order(mu: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    out = 1
    mult = 1
    prev = None
    for p in sorted(mu):
        if p == prev:
            mult += 1
        else:
            mult = 1
        out *= p * mult
        prev = p
    return out


def partition_text(lam: Partition) -> str:
    """Render in the documented text form ("-" for the empty partition)."""
    return ",".join(str(p) for p in lam) if lam else "-"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text == "-":
        return ()
    try:
        return partition(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad partition text {text!r}: {exc}") from None
