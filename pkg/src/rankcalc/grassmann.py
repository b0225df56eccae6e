"""The cohomology ring of the Grassmannian Gr(k, n) in the Schubert basis.

A SchubertClass carries its (k, n) context inline and refuses arithmetic
against another context: every change of Grassmannian must go through an
explicit lift to symmetric functions followed by a fresh truncation, which
is exactly how restriction along an inclusion of Grassmannians acts on the
Schubert basis.

Text form mirrors the Schur expansion with letter 'o' and a context suffix:
"1*o[2,2]@Gr(2,4)"; the zero class renders as "0@Gr(2,4)".
"""

from __future__ import annotations

import re
from typing import Iterator, Mapping

from .errors import ContextMismatch, ParseError, ShapeTooLarge
from .partitions import (
    Partition,
    RectangleContext,
    complement,
    contains,
    lr_coefficient,
    all_partitions,
    partition,
    partition_text,
    sort_key,
    syt_count,
)
from .symfunc import SchurExpansion, parse_expansion, schur_product


class SchubertClass:
    """An integer combination of Schubert classes in a fixed Gr(k, n)."""

    __slots__ = ("k", "n", "_terms")

    def __init__(self, k: int, n: int, terms: Mapping[Partition, int] = ()):
        if not (0 <= k <= n):
            raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
        self.k = k
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[Partition, int] = {}
        for lam, c in items:
            lam = partition(lam)
            if len(lam) > k or (lam and lam[0] > n - k):
                raise ValueError(f"{lam} does not fit in {k}x{n - k}")
            c = int(c)
            if c:
                data[lam] = data.get(lam, 0) + c
        self._terms = {
            lam: c
            for lam, c in sorted(data.items(), key=lambda kv: sort_key(kv[0]))
            if c
        }

    def context(self) -> tuple[int, int]:
        return (self.k, self.n)

    def terms(self) -> dict[Partition, int]:
        return dict(self._terms)

    def coeff(self, lam: Partition) -> int:
        return self._terms.get(partition(lam), 0)

    def items(self) -> Iterator[tuple[Partition, int]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchubertClass)
            and self.context() == other.context()
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.k, self.n, tuple(self._terms.items())))

    def text(self) -> str:
        suffix = f"@Gr({self.k},{self.n})"
        if not self._terms:
            return "0" + suffix
        pieces = []
        for i, (lam, c) in enumerate(self.items()):
            body = f"{abs(c)}*o[{partition_text(lam)}]"
            if i == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{' + ' if c > 0 else ' - '}{body}")
        return "".join(pieces) + suffix

    def __repr__(self) -> str:
        return f"SchubertClass({self.text()!r})"


def phi(s: SchurExpansion, k: int, n: int) -> SchubertClass:
    """Truncate a Schur expansion to the classes fitting in k x (n-k).

    >>> phi(SchurExpansion.basis((5,)), 4, 8).is_zero()
    True
    """
    rect_rows, rect_cols = k, n - k
    kept = {
        lam: c
        for lam, c in s.items()
        if len(lam) <= rect_rows and (not lam or lam[0] <= rect_cols)
    }
    return SchubertClass(k, n, kept)


def lift(x: SchubertClass) -> SchurExpansion:
    """Tautological lift to the Schur basis (sections of phi)."""
    return SchurExpansion(x.terms())


def _same_context(a: SchubertClass, b: SchubertClass) -> None:
    if a.context() != b.context():
        raise ContextMismatch(f"{a.context()} vs {b.context()}")


def class_product(a: SchubertClass, b: SchubertClass) -> SchubertClass:
    """Product: lift, multiply by the Littlewood-Richardson rule, truncate."""
    _same_context(a, b)
    return phi(schur_product(lift(a), lift(b)), a.k, a.n)


def class_add(a: SchubertClass, b: SchubertClass) -> SchubertClass:
    _same_context(a, b)
    data = a.terms()
    for lam, c in b.items():
        data[lam] = data.get(lam, 0) + c
    return SchubertClass(a.k, a.n, data)


def class_sub(a: SchubertClass, b: SchubertClass) -> SchubertClass:
    """Coefficientwise difference."""
    _same_context(a, b)
    data = a.terms()
    for lam, c in b.items():
        data[lam] = data.get(lam, 0) - c
    return SchubertClass(a.k, a.n, data)


def is_schubert_nonnegative(x: SchubertClass) -> bool:
    return all(c >= 0 for _, c in x.items())


def class_degree(x: SchubertClass) -> int:
    """Degree of the class: sum of coefficients times the standard tableau
    count of the complementary shape.

    >>> class_degree(schubert_class((2, 2), 4, 8))
    2640
    """
    ctx = RectangleContext(x.k, x.n - x.k)
    return sum(c * syt_count(complement(lam, ctx)) for lam, c in x.items())


def schubert_class(lam: Partition, k: int, n: int) -> SchubertClass:
    return SchubertClass(k, n, {partition(lam): 1})


def point_class(k: int, n: int) -> SchubertClass:
    full = tuple([n - k] * k) if k and n - k else ()
    return SchubertClass(k, n, {full: 1})


def skew_complement_class(
    lam: Partition, mu: Partition, k: int, n: int
) -> SchubertClass:
    """Class of the rotated-complement skew locus: sum over nu of
    c^lam_{mu nu} times the class of the complement of nu.

    >>> skew_complement_class((4, 3, 2, 1), (3, 2, 1), 4, 8).coeff((4, 4, 2, 2))
    2
    """
    lam, mu = partition(lam), partition(mu)
    ctx = RectangleContext(k, n - k)
    if len(lam) > k or (lam and lam[0] > n - k):
        raise ShapeTooLarge(f"{lam} does not fit in {k}x{n - k}")
    if not contains(lam, mu):
        raise ShapeTooLarge(f"{mu} does not fit inside {lam}")
    data: dict[Partition, int] = {}
    for nu in all_partitions(sum(lam) - sum(mu)):
        c = lr_coefficient(lam, mu, nu)
        if c:
            nv = complement(nu, ctx)
            data[nv] = data.get(nv, 0) + c
    return SchubertClass(k, n, data)


_CLASS_RE = re.compile(r"^(.*)@Gr\((\d+),(\d+)\)$")


def class_text(x: SchubertClass) -> str:
    return x.text()


def parse_class(text: str) -> SchubertClass:
    match = _CLASS_RE.match(text.strip())
    if not match:
        raise ParseError(f"class text must end with '@Gr(k,n)': {text!r}")
    body, ktext, ntext = match.groups()
    k, n = int(ktext), int(ntext)
    body = body.strip()
    if body == "0":
        return SchubertClass(k, n)

    class _OBasis(SchurExpansion):
        basis_letter = "o"

    expansion = parse_expansion(body, _OBasis)
    try:
        return SchubertClass(k, n, expansion.terms())
    except ValueError as exc:
        raise ParseError(f"bad class {text!r}: {exc}") from None
