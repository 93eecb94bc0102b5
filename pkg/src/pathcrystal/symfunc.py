"""Partitions, semistandard tableaux, charge and Kostka-Foulkes polynomials.

Everything here is deliberately independent of the crystal machinery: the
Kostka-Foulkes polynomials computed from the charge statistic are the oracle
against which Demazure characters are checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Iterator, Mapping, Sequence

from .qpoly import QPoly


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls()
        return cls(int(p) for p in text.split(","))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def dominates(self, other: Sequence[int]) -> bool:
        """Dominance order ``self >= other`` (sizes must agree)."""
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self[i] if i < len(self) else 0
            b += other[i] if i < len(other) else 0
            if a < b:
                return False
        return a == b

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def conjugate(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def partitions(n: int, max_length: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    if max_length == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_len = None if max_length is None else max_length - 1
        for rest in partitions(n - first, rest_len, first):
            yield Partition((first,) + tuple(rest))


@dataclass(frozen=True)
class Tableau:
    """A semistandard Young tableau, stored row by row (English notation)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        Partition(len(r) for r in rows)
        for r in rows:
            if any(x <= 0 for x in r):
                raise ValueError("tableau entries must be positive")
            if any(a > b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not weakly increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                raise ValueError("columns must be strictly increasing")

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def content(self) -> tuple[int, ...]:
        entries = [x for r in self.rows for x in r]
        top = max(entries, default=0)
        return tuple(entries.count(v) for v in range(1, top + 1))

    def reading_word(self) -> tuple[int, ...]:
        """Rows read left to right, from the bottom row up."""
        return tuple(x for r in reversed(self.rows) for x in r)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        return cls(tuple(tuple(r) for r in rows))


def _strips(current: list[int], target: Partition, size: int, row: int = 0) -> Iterator[list[int]]:
    # horizontal strips of the given size added to ``current`` inside ``target``
    if row == len(target):
        if size == 0:
            yield []
        return
    cap = target[row] if row == 0 else min(target[row], current[row - 1])
    for add in range(min(cap - current[row], size), -1, -1):
        for rest in _strips(current, target, size - add, row + 1):
            yield [add] + rest


def enumerate_ssyt(shape: Sequence[int], content: Sequence[int]) -> list[Tableau]:
    """All semistandard tableaux of ``shape`` in which letter ``v`` occurs
    ``content[v-1]`` times, sorted lexicographically by the row-concatenated
    word."""
    shape = Partition(shape)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise ValueError("content must be nonnegative")
    if shape.size != sum(content):
        raise ValueError(f"size mismatch: |{shape}| != sum{content}")

    results: list[list[list[int]]] = []

    def grow(rows: list[list[int]], letter: int):
        if letter > len(content):
            results.append([r[:] for r in rows])
            return
        current = [len(r) for r in rows]
        for strip in _strips(current, shape, content[letter - 1]):
            new_rows = [r + [letter] * a for r, a in zip(rows, strip)]
            grow(new_rows, letter + 1)

    grow([[] for _ in shape], 1)
    tableaux = [Tableau(tuple(tuple(r) for r in rows if r)) for rows in results]
    tableaux.sort(key=lambda t: tuple(x for r in t.rows for x in r))
    return tableaux


def kostka_number(lam: Sequence[int], mu: Sequence[int]) -> int:
    return len(enumerate_ssyt(lam, mu))


def word_charge(word: Sequence[int]) -> int:
    """Lascoux-Schutzenberger charge of a word whose content is a partition.

    Standard subwords are peeled off repeatedly: starting from the rightmost
    unused 1, scan leftwards (cyclically) for 2, then 3, and so on.  A letter
    r+1 found only after wrapping around lies to the right of r and gets
    index one larger; charge is the sum of indices.
    """
    word = list(word)
    top = max(word, default=0)
    counts = [word.count(v) for v in range(1, top + 1)]
    if any(a < b for a, b in zip(counts, counts[1:])) or (counts and counts[-1] == 0):
        raise ValueError(f"charge needs partition content, got {counts}")
    used = [False] * len(word)
    total = 0
    remaining = len(word)
    while remaining:
        pos = max(p for p, x in enumerate(word) if x == 1 and not used[p])
        used[pos] = True
        remaining -= 1
        index = 0
        letter = 2
        while True:
            found = None
            wrapped = False
            p = pos
            for _ in range(len(word)):
                p -= 1
                if p < 0:
                    p = len(word) - 1
                    wrapped = True
                if not used[p] and word[p] == letter:
                    found = p
                    break
            if found is None:
                break
            if wrapped:
                index += 1
            total += index
            used[found] = True
            remaining -= 1
            pos = found
            letter += 1
    return total


def charge(t: Tableau) -> int:
    return word_charge(t.reading_word())


def kostka_foulkes(lam: Sequence[int], mu: Sequence[int]) -> QPoly:
    """``K_{lam,mu}(q) = sum over SSYT of shape lam, content mu, of q^charge``."""
    mu = Partition(mu)
    return QPoly((charge(t), 1) for t in enumerate_ssyt(lam, mu))


def build_T_mu(mu: Sequence[int], n: int) -> Tableau:
    """Tableau of shape ``(n^p, r)`` (``|mu| = p n + r``) filled row by row with
    ``mu_1`` ones, ``mu_2`` twos, and so on."""
    mu = Partition(mu)
    if mu.size < 1:
        raise ValueError("mu must be nonempty")
    letters = [v + 1 for v, m in enumerate(mu) for _ in range(m)]
    rows = tuple(tuple(letters[s:s + n]) for s in range(0, len(letters), n))
    return Tableau(rows)


def milne(mu: Sequence[int], n: int) -> "SchurExpansion":
    """``M_mu = sum_lam K_{lam,mu}(q) s_lam`` restricted to ``l(lam) <= n``."""
    mu = Partition(mu)
    terms = {}
    for lam in partitions(mu.size, max_length=n):
        k = kostka_foulkes(lam, mu)
        if not k.is_zero():
            terms[lam] = k
    return SchurExpansion(terms)


def schur_dim(lam: Sequence[int], n: int) -> int:
    """Dimension of the ``gl_n`` irreducible ``s_lam``, by the hook-content formula."""
    lam = Partition(lam)
    if lam.length > n:
        raise ValueError(f"l({lam}) > n={n}")
    conj = lam.conjugate()
    num = prod(n + j - i for i, row in enumerate(lam) for j in range(row))
    hooks = prod(row - j + conj[j] - i - 1 for i, row in enumerate(lam) for j in range(row))
    value = Fraction(num, hooks)
    assert value.denominator == 1
    return int(value)


class SchurExpansion:
    """A finite sum ``sum_lam K_lam(q) s_lam`` keyed by partitions."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[int], QPoly] = ()):
        acc: dict[Partition, QPoly] = {}
        for lam, poly in dict(terms).items():
            lam = Partition(lam)
            acc[lam] = acc.get(lam, QPoly()) + poly
        self._terms = {lam: acc[lam] for lam in sorted(acc) if not acc[lam].is_zero()}

    @property
    def terms(self) -> dict[Partition, QPoly]:
        return dict(self._terms)

    def __getitem__(self, lam: Sequence[int]) -> QPoly:
        return self._terms.get(Partition(lam), QPoly())

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def map(self, fn) -> "SchurExpansion":
        return SchurExpansion({lam: fn(p) for lam, p in self._terms.items()})

    def shift(self, k: int) -> "SchurExpansion":
        return self.map(lambda p: p.shift(k))

    def at_one(self) -> dict[Partition, int]:
        return {lam: p.evaluate(1) for lam, p in self._terms.items()}

    def diff(self, other: "SchurExpansion") -> dict[str, list[str]]:
        keys = sorted(set(self._terms) | set(other._terms))
        return {
            str(lam): [str(self[lam]), str(other[lam])]
            for lam in keys
            if self[lam] != other[lam]
        }

    def to_json(self) -> dict[str, str]:
        return {str(lam): str(p) for lam, p in self._terms.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "SchurExpansion":
        return cls({Partition.parse(k): QPoly.parse(v) for k, v in data.items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for lam in sorted(self._terms, reverse=True):
            p = self._terms[lam]
            coeff = str(p)
            if len(list(p.items())) > 1:
                coeff = f"({coeff})"
            parts.append(("" if coeff == "1" else coeff + "*") + f"s[{lam}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SchurExpansion({self})"
