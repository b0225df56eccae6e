"""Sparse symmetric-function expansions in the Schur and monomial bases.

An expansion is a finite integer combination of basis elements indexed by
partitions; zero coefficients are never stored and iteration follows the
fixed partition order, so printing is deterministic.  Basis conversion goes
through the Kostka numbers: schur_to_monomial enumerates semistandard
tableaux, monomial_to_schur inverts the resulting unitriangular system by
eliminating dominance-maximal terms.

Text form: "1*s[2,2] + 1*s[3,1] - 1*s[4]" (letter 'm' for the monomial
basis); the zero expansion renders as "0".
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import NotHomogeneous, ParseError
from .partitions import (
    Partition,
    _count_tableaux,
    all_partitions,
    contains,
    lr_coefficient,
    partition,
    partition_text,
    parse_partition,
    sort_key,
)


class _Expansion:
    """Shared mechanics for expansions in a fixed basis."""

    basis_letter = "?"
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Partition, int] | Iterable[tuple[Partition, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[Partition, int] = {}
        for lam, c in items:
            lam = partition(lam)
            c = int(c)
            if c:
                data[lam] = data.get(lam, 0) + c
        self._terms = {
            lam: c for lam, c in sorted(data.items(), key=lambda kv: sort_key(kv[0])) if c
        }

    @classmethod
    def basis(cls, lam: Partition, coefficient: int = 1):
        return cls({partition(lam): coefficient})

    @classmethod
    def one(cls):
        """The constant 1: coefficient 1 on the empty partition."""
        return cls({(): 1})

    def terms(self) -> dict[Partition, int]:
        return dict(self._terms)

    def coeff(self, lam: Partition) -> int:
        return self._terms.get(partition(lam), 0)

    def support(self) -> tuple[Partition, ...]:
        return tuple(self._terms)

    def items(self) -> Iterator[tuple[Partition, int]]:
        return iter(self._terms.items())

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self._terms}

    def degree(self) -> int:
        """Top degree of the support (0 for the zero expansion)."""
        return max((sum(lam) for lam in self._terms), default=0)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, tuple(self._terms.items())))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        data = dict(self._terms)
        for lam, c in other.items():
            data[lam] = data.get(lam, 0) + c
        return type(self)(data)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        data = dict(self._terms)
        for lam, c in other.items():
            data[lam] = data.get(lam, 0) - c
        return type(self)(data)

    def __neg__(self):
        return type(self)({lam: -c for lam, c in self.items()})

    def __rmul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return type(self)({lam: scalar * c for lam, c in self.items()})

    def text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (lam, c) in enumerate(self.items()):
            body = f"{abs(c)}*{self.basis_letter}[{partition_text(lam)}]"
            if i == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{' + ' if c > 0 else ' - '}{body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.text()!r})"


class SchurExpansion(_Expansion):
    basis_letter = "s"


class MonomialExpansion(_Expansion):
    basis_letter = "m"


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape lam and content mu.

    >>> kostka((2, 1), (1, 1, 1))
    2
    """
    if sum(lam) != sum(mu):
        return 0
    return _count_tableaux(lam, (), mu, lattice=False)


@lru_cache(maxsize=None)
def _schur_monomial_row(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    return tuple(
        (mu, k)
        for mu in all_partitions(sum(lam))
        if (k := kostka(lam, mu))
    )


def schur_to_monomial(s: SchurExpansion) -> MonomialExpansion:
    """Expand into monomial symmetric functions via Kostka numbers.

    >>> schur_to_monomial(SchurExpansion.basis((2,))).text()
    '1*m[1,1] + 1*m[2]'
    """
    data: dict[Partition, int] = {}
    for lam, c in s.items():
        for mu, k in _schur_monomial_row(lam):
            data[mu] = data.get(mu, 0) + c * k
    return MonomialExpansion(data)


def monomial_to_schur(m: MonomialExpansion) -> SchurExpansion:
    """Invert the Kostka system; requires a homogeneous input.

    The Kostka matrix is unitriangular with respect to dominance, and the
    lexicographic comparison on part tuples linearly extends dominance, so
    the lex-greatest support element is dominance-maximal and stripping it
    repeatedly terminates.

    >>> monomial_to_schur(MonomialExpansion.basis((2,))).text()
    '-1*s[1,1] + 1*s[2]'
    """
    if not m:
        return SchurExpansion()
    if not m.is_homogeneous():
        raise NotHomogeneous(f"mixed degrees {sorted(m.degrees())}")
    work = m.terms()
    out: dict[Partition, int] = {}
    while work:
        lam = max(work)
        c = work.pop(lam)
        out[lam] = c
        for mu, k in _schur_monomial_row(lam):
            if mu == lam:
                continue
            v = work.get(mu, 0) - c * k
            if v:
                work[mu] = v
            else:
                work.pop(mu, None)
    return SchurExpansion(out)


def schur_product(a: SchurExpansion, b: SchurExpansion) -> SchurExpansion:
    """Product via the Littlewood-Richardson rule, extended bilinearly.

    >>> schur_product(SchurExpansion.basis((1,)), SchurExpansion.basis((1,))).text()
    '1*s[1,1] + 1*s[2]'
    """
    data: dict[Partition, int] = {}
    for mu, cm in a.items():
        for nu, cn in b.items():
            for lam in all_partitions(sum(mu) + sum(nu)):
                if not contains(lam, mu):
                    continue
                c = lr_coefficient(lam, mu, nu)
                if c:
                    data[lam] = data.get(lam, 0) + cm * cn * c
    return SchurExpansion(data)


def is_schur_nonnegative(s: SchurExpansion) -> bool:
    """True iff every stored coefficient is nonnegative."""
    return all(c >= 0 for _, c in s.items())


_TERM_RE = re.compile(r"^(\d+)\*([a-z])\[([^\[\]]*)\]$")


def parse_expansion(text: str, cls=SchurExpansion):
    """Parse the documented text form back into an expansion.

    >>> parse_expansion("1*s[2,2] + 1*s[3,1] - 1*s[4]").coeff((4,))
    -1
    """
    body = text.strip()
    if body == "0":
        return cls()
    if body.startswith("-"):
        body = body[1:].lstrip()
        signs = [-1]
    else:
        signs = [1]
    chunks = re.split(r"\s+([+-])\s+", body)
    terms = [chunks[0]]
    for i in range(1, len(chunks), 2):
        signs.append(1 if chunks[i] == "+" else -1)
        terms.append(chunks[i + 1])
    data: dict[Partition, int] = {}
    for sign, term in zip(signs, terms):
        match = _TERM_RE.match(term.strip())
        if not match:
            raise ParseError(f"bad expansion term {term!r}")
        coeff, letter, inner = match.groups()
        if letter != cls.basis_letter:
            raise ParseError(f"expected basis {cls.basis_letter!r}, got {letter!r}")
        lam = parse_partition(inner)
        data[lam] = data.get(lam, 0) + sign * int(coeff)
    return cls(data)
