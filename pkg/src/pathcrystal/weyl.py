"""Affine symmetric group of type A_{n-1}^{(1)} in window notation.

Words are tuples of indices in Z/nZ.  A word ``(i_1, ..., i_k)`` denotes the
product ``r_{i_1} ... r_{i_k}``; when it acts on a highest weight vector the
rightmost letter is applied first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]


@dataclass(frozen=True)
class AffinePerm:
    """Bijection ``f`` of Z with ``f(i + n) = f(i) + n``, stored as the window
    ``(f(1), ..., f(n))``."""

    window: tuple[int, ...]

    def __post_init__(self):
        n = len(self.window)
        if sorted(x % n for x in self.window) != list(range(n)):
            raise ValueError(f"window {self.window} is not a bijection mod {n}")
        if sum(self.window) != n * (n + 1) // 2:
            raise ValueError(f"window {self.window} violates the sum condition")

    @property
    def n(self) -> int:
        return len(self.window)

    @classmethod
    def identity(cls, n: int) -> "AffinePerm":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def __mul__(self, other: "AffinePerm") -> "AffinePerm":
        return AffinePerm(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def right_multiply(self, i: int) -> "AffinePerm":
        """``self * r_i``: swap the values at positions i and i+1."""
        n = self.n
        i %= n
        w = list(self.window)
        if i == 0:
            w[0], w[n - 1] = w[n - 1] - n, w[0] + n
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return AffinePerm(tuple(w))

    def length(self) -> int:
        return length(self)


def simple_reflection(i: int, n: int) -> AffinePerm:
    return AffinePerm.identity(n).right_multiply(i)


def from_word(word: Iterable[int], n: int) -> AffinePerm:
    p = AffinePerm.identity(n)
    for i in word:
        p = p.right_multiply(i)
    return p


def length(p: AffinePerm) -> int:
    """Number of affine inversions (Shi's formula)."""
    w, n = p.window, p.n
    return sum(abs((w[j] - w[i]) // n) for i in range(n) for j in range(i + 1, n))


def is_reduced(word: Sequence[int], n: int) -> bool:
    return length(from_word(word, n)) == len(word)


def is_increasing_chain(words: Sequence[Sequence[int]], n: int) -> bool:
    """Check ``w_0 < w_1 < ...`` where each word extends the previous one by a
    single letter on the left.  For such chains the Bruhat ascent is the same
    as the length going up by one."""
    words = [tuple(w) for w in words]
    for prev, nxt in zip(words, words[1:]):
        if len(nxt) != len(prev) + 1 or nxt[1:] != prev:
            raise ValueError(f"malformed chain step {prev} -> {nxt}")
    lengths = [length(from_word(w, n)) for w in words]
    return all(b == a + 1 for a, b in zip(lengths, lengths[1:]))


def word_R(k: int, i: int, n: int) -> Word:
    """``R^{(k)}_i``: k blocks of (n-k) reflections each."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} outside 1..{n - 1}")
    out: list[int] = []
    for b in range(k - 1, -1, -1):
        out.extend((i - b + m) % n for m in range(n - k - 1, -1, -1))
    return tuple(out)


def word_R_alt(k: int, i: int, n: int) -> Word:
    """The other expression of ``R^{(k)}_i``: (n-k) blocks of k reflections."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} outside 1..{n - 1}")
    out: list[int] = []
    for c in range(n - k - 1, -1, -1):
        out.extend((i + c - (k - 1) + t) % n for t in range(k))
    return tuple(out)


def rectangular_letter(n: int, k: int, j: int, a: int) -> int:
    """Index applied at step ``(j, a)`` of the rectangular family: the a-th
    letter from the right of ``R^{(k)}_{-k(j-1)}``.  For k = 1 this is a - j."""
    block = word_R(k, -k * (j - 1), n)
    return block[len(block) - a]


def word_wk(n: int, k_steps: int, scheme, d: int) -> Word:
    """``w^{(K)}`` built by ``w^{(K)} = r_{i(j,a)} w^{(K-1)}``, ``K=(j-1)d+a``."""
    word: list[int] = []
    for step in range(1, k_steps + 1):
        j, a = divmod(step - 1, d)
        word.insert(0, scheme(j + 1, a + 1) % n)
    return tuple(word)


def word_rectangular(n: int, k: int, L: int) -> Word:
    """``w^{(Ld)}`` from ``w^{((L+1)d)} = R^{(k)}_{-kL} w^{(Ld)}``."""
    word: Word = ()
    for step in range(L):
        word = word_R(k, -k * step, n) + word
    return word


def word_wmu(mu: Sequence[int], n: int) -> Word:
    """``w_mu = R^{(mu_1)}_{mu_1} R^{(mu_2)}_{mu_1+mu_2} ... R^{(mu_m)}_{|mu|}``."""
    out: list[int] = []
    partial = 0
    for part in mu:
        if not 1 <= part <= n - 1:
            raise ValueError(f"part {part} of {tuple(mu)} must lie in 1..{n - 1}")
        partial += part
        out.extend(word_R(part, partial, n))
    return tuple(out)


def rotate_word(word: Sequence[int], s: int, n: int) -> Word:
    return tuple((i + s) % n for i in word)


def parse_word(text: str) -> Word:
    return tuple(int(t) for t in text.split())


def format_word(word: Sequence[int]) -> str:
    return " ".join(map(str, word))
