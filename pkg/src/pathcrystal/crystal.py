"""Kirillov-Reshetikhin crystals B^{1,l} and B^{k,1} of affine sl_n, their
tensor products and truncated paths.

Index conventions: operator indices live in Z/nZ.  Letters are 1..n, and the
row coordinate ``x_c`` counts the letter ``c + 1``.  ``f_i`` turns a letter
``i`` into ``i + 1`` (letters read mod n, so ``f_0`` turns n into 1).

Tensor products follow Kashiwara's convention: on ``b1 (x) b2`` the operator
``e_i`` acts on ``b1`` iff ``phi_i(b1) >= eps_i(b2)`` and ``f_i`` acts on
``b1`` iff ``phi_i(b1) > eps_i(b2)``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence


class TruncationError(RuntimeError):
    """A lowering operator reached the formal head of a truncated path."""


class CapExceeded(RuntimeError):
    """A closure grew beyond the configured node cap."""


DEFAULT_CAP = 10**6

RAISE = "raise"
LOWER = "lower"


@dataclass(frozen=True, order=True)
class RowElem:
    """Element ``(x_0, ..., x_{n-1})`` of B^{1,l}."""

    x: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(int(v) for v in self.x))
        if any(v < 0 for v in self.x):
            raise ValueError(f"negative coordinate in {self.x}")

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def level(self) -> int:
        return sum(self.x)

    def epsilon(self, i: int) -> int:
        return self.x[i % self.n]

    def phi(self, i: int) -> int:
        return self.x[(i - 1) % self.n]

    def _move(self, src: int, dst: int):
        if self.x[src] == 0:
            return None
        y = list(self.x)
        y[src] -= 1
        y[dst] += 1
        return RowElem(tuple(y))

    def f(self, i: int) -> "RowElem | None":
        return self._move((i - 1) % self.n, i % self.n)

    def e(self, i: int) -> "RowElem | None":
        return self._move(i % self.n, (i - 1) % self.n)

    def content(self) -> tuple[int, ...]:
        return self.x

    def rotate(self, s: int) -> "RowElem":
        n = self.n
        y = [0] * n
        for c, v in enumerate(self.x):
            y[(c + s) % n] = v
        return RowElem(tuple(y))

    def __str__(self) -> str:
        return ",".join(map(str, self.x))


@dataclass(frozen=True, order=True)
class ColElem:
    """Element of B^{k,1}: a k-subset of {1..n}, kept sorted."""

    s: tuple[int, ...]
    n: int

    def __post_init__(self):
        s = tuple(sorted(int(a) for a in self.s))
        object.__setattr__(self, "s", s)
        if len(set(s)) != len(s) or any(not 1 <= a <= self.n for a in s):
            raise ValueError(f"{s} is not a subset of 1..{self.n}")

    def _letter(self, i: int) -> int:
        return (i - 1) % self.n + 1

    def epsilon(self, i: int) -> int:
        return int(self._letter(i + 1) in self.s and self._letter(i) not in self.s)

    def phi(self, i: int) -> int:
        return int(self._letter(i) in self.s and self._letter(i + 1) not in self.s)

    def f(self, i: int) -> "ColElem | None":
        if not self.phi(i):
            return None
        a, b = self._letter(i), self._letter(i + 1)
        return ColElem(tuple(b if x == a else x for x in self.s), self.n)

    def e(self, i: int) -> "ColElem | None":
        if not self.epsilon(i):
            return None
        a, b = self._letter(i), self._letter(i + 1)
        return ColElem(tuple(a if x == b else x for x in self.s), self.n)

    def content(self) -> tuple[int, ...]:
        return tuple(int(a in self.s) for a in range(1, self.n + 1))

    def rotate(self, s: int) -> "ColElem":
        return ColElem(tuple(self._letter(a + s) for a in self.s), self.n)

    def __str__(self) -> str:
        return "{" + "<".join(map(str, self.s)) + "}"


Element = RowElem | ColElem


@dataclass(frozen=True)
class RowCrystal:
    """B^{1,l} for affine sl_n."""

    n: int
    l: int

    def elements(self) -> list[RowElem]:
        out = []
        for bars in itertools.combinations(range(self.l + self.n - 1), self.n - 1):
            edges = (-1,) + bars + (self.l + self.n - 1,)
            out.append(RowElem(tuple(b - a - 1 for a, b in zip(edges, edges[1:]))))
        return sorted(out)

    def highest(self) -> RowElem:
        return RowElem((self.l,) + (0,) * (self.n - 1))

    def __contains__(self, b) -> bool:
        return isinstance(b, RowElem) and b.n == self.n and b.level == self.l

    def parse(self, text: str) -> RowElem:
        b = RowElem(tuple(int(t) for t in text.split(",")))
        if b not in self:
            raise ValueError(f"{text!r} is not in {self}")
        return b

    @property
    def level(self) -> int:
        return self.l

    def __str__(self) -> str:
        return f"B^(1,{self.l})"


@dataclass(frozen=True)
class ColumnCrystal:
    """B^{k,1} for affine sl_n."""

    n: int
    k: int

    def elements(self) -> list[ColElem]:
        return sorted(ColElem(c, self.n) for c in itertools.combinations(range(1, self.n + 1), self.k))

    def highest(self) -> ColElem:
        return ColElem(tuple(range(1, self.k + 1)), self.n)

    def __contains__(self, b) -> bool:
        return isinstance(b, ColElem) and b.n == self.n and len(b.s) == self.k

    def parse(self, text: str) -> ColElem:
        body = text.strip().strip("{}")
        b = ColElem(tuple(int(t) for t in body.split("<")), self.n)
        if b not in self:
            raise ValueError(f"{text!r} is not in {self}")
        return b

    @property
    def level(self) -> int:
        return 1

    def __str__(self) -> str:
        return f"B^({self.k},1)"


Crystal = RowCrystal | ColumnCrystal


def kr_crystal(n: int, k: int, l: int) -> Crystal:
    """B^{k,l}; only rows (k=1) and columns (l=1) are supported."""
    if k == 1:
        return RowCrystal(n, l)
    if l == 1:
        return ColumnCrystal(n, k)
    raise NotImplementedError(f"B^({k},{l}) with k, l >= 2 is not supported")


def epsilon_vector(b, n: int) -> tuple[int, ...]:
    return tuple(b.epsilon(i) for i in range(n))


def phi_vector(b, n: int) -> tuple[int, ...]:
    return tuple(b.phi(i) for i in range(n))


@dataclass(frozen=True)
class ClWeight:
    """Classical weight: a content vector (letter a at index a-1) plus level.

    ``<wt, h_i> = content_i - content_{i+1}`` for i != 0 and
    ``<wt, h_0> = level + content_n - content_1``.
    """

    content: tuple[int, ...]
    level: int = 0

    @property
    def n(self) -> int:
        return len(self.content)

    def pairing(self, i: int) -> int:
        n, c = self.n, self.content
        i %= n
        if i == 0:
            return self.level + c[n - 1] - c[0]
        return c[i - 1] - c[i]

    def pairings(self) -> tuple[int, ...]:
        return tuple(self.pairing(i) for i in range(self.n))

    def __add__(self, other: "ClWeight") -> "ClWeight":
        return ClWeight(tuple(a + b for a, b in zip(self.content, other.content)), self.level + other.level)

    def rotate(self, s: int) -> "ClWeight":
        n = self.n
        y = [0] * n
        for c, v in enumerate(self.content):
            y[(c + s) % n] = v
        return ClWeight(tuple(y), self.level)


def dominant_content(lam: Sequence[int]) -> tuple[int, ...]:
    """Content vector of ``sum_i lam_i Lambda_i`` (Lambda_r has r leading ones)."""
    n = len(lam)
    return tuple(sum(lam[i] for i in range(c + 1, n)) for c in range(n))


def fundamental(n: int, r: int, l: int = 1) -> tuple[int, ...]:
    """Pairings of ``l Lambda_r`` (r read mod n)."""
    v = [0] * n
    v[r % n] = l
    return tuple(v)


def level_weights(n: int, l: int) -> list[tuple[int, ...]]:
    """All of (P_cl^+)_l as pairing vectors ``(a_0, ..., a_{n-1})``."""
    return [b.x for b in RowCrystal(n, l).elements()]


# signature rule


def signature(i: int, factors: Sequence) -> tuple[int, int, int | None, int | None]:
    """Bracket-cancel the ``-^eps +^phi`` strings of the factors, read left to
    right.  Returns ``(eps, phi, e_target, f_target)`` for the whole tensor,
    where the targets are the factor indices ``e_i`` / ``f_i`` act on."""
    pluses: list[list[int]] = []
    n_minus = 0
    last_minus = None
    for idx, b in enumerate(factors):
        eps = b.epsilon(i)
        while eps and pluses:
            top = pluses[-1]
            c = min(top[1], eps)
            top[1] -= c
            eps -= c
            if not top[1]:
                pluses.pop()
        if eps:
            n_minus += eps
            last_minus = idx
        phi = b.phi(i)
        if phi:
            pluses.append([idx, phi])
    n_plus = sum(c for _, c in pluses)
    return n_minus, n_plus, last_minus, (pluses[0][0] if pluses else None)


def tensor_side(i: int, direction: str, factors: Sequence) -> int | None:
    """Index of the factor the operator acts on (None if it kills the tensor)."""
    _, _, e_t, f_t = signature(i, factors)
    return e_t if direction == RAISE else f_t


def tensor_apply_factors(i: int, direction: str, factors: Sequence) -> tuple | None:
    target = tensor_side(i, direction, factors)
    if target is None:
        return None
    b = factors[target]
    new = b.e(i) if direction == RAISE else b.f(i)
    if new is None:
        return None
    return tuple(factors[:target]) + (new,) + tuple(factors[target + 1:])


@dataclass(frozen=True, order=True)
class Tensor:
    """A finite tensor product ``b_1 (x) ... (x) b_N`` (no formal head)."""

    factors: tuple

    def epsilon(self, i: int) -> int:
        return signature(i, self.factors)[0]

    def phi(self, i: int) -> int:
        return signature(i, self.factors)[1]

    def e(self, i: int) -> "Tensor | None":
        out = tensor_apply_factors(i, RAISE, self.factors)
        return None if out is None else Tensor(out)

    def f(self, i: int) -> "Tensor | None":
        out = tensor_apply_factors(i, LOWER, self.factors)
        return None if out is None else Tensor(out)

    def content(self) -> tuple[int, ...]:
        return tuple(map(sum, zip(*(b.content() for b in self.factors))))

    def __str__(self) -> str:
        return " | ".join(map(str, self.factors))


@dataclass(frozen=True)
class _Head:
    lam: tuple[int, ...]

    def epsilon(self, i: int) -> int:
        return 0

    def phi(self, i: int) -> int:
        return self.lam[i % len(self.lam)]


@dataclass(frozen=True)
class TruncatedPath:
    """``u_head (x) b_J (x) ... (x) b_1``.

    ``head`` holds the pairings ``<lambda_J, h_i>`` of a dominant weight; the
    formal factor ``u_head`` stands for the frozen semi-infinite tail and is a
    highest weight element, so ``e_i`` on it is zero.  ``body[0]`` is ``b_J``
    and ``body[-1]`` is ``b_1``.
    """

    head: tuple[int, ...]
    body: tuple

    @property
    def n(self) -> int:
        return len(self.head)

    def _factors(self) -> tuple:
        return (_Head(self.head),) + tuple(self.body)

    def position(self, j: int):
        """``p(j)``, counting from the right starting at 1."""
        return self.body[len(self.body) - j]

    def epsilon(self, i: int) -> int:
        return signature(i, self._factors())[0]

    def phi(self, i: int) -> int:
        return signature(i, self._factors())[1]

    def side(self, i: int, direction: str) -> int | None:
        """Body index the operator acts on; -1 means the head."""
        t = tensor_side(i, direction, self._factors())
        return None if t is None else t - 1

    def apply(self, i: int, direction: str) -> "TruncatedPath | None":
        factors = self._factors()
        target = tensor_side(i, direction, factors)
        if target is None:
            return None
        if target == 0:
            if direction == RAISE:
                return None
            raise TruncationError(f"f_{i % self.n} reaches the head of {self}")
        b = factors[target]
        new = b.e(i) if direction == RAISE else b.f(i)
        if new is None:
            return None
        body = list(self.body)
        body[target - 1] = new
        return TruncatedPath(self.head, tuple(body))

    def e(self, i: int) -> "TruncatedPath | None":
        return self.apply(i, RAISE)

    def f(self, i: int) -> "TruncatedPath | None":
        return self.apply(i, LOWER)

    def weight(self) -> ClWeight:
        w = ClWeight(dominant_content(self.head), sum(self.head))
        for b in self.body:
            w = w + ClWeight(b.content(), 0)
        return w

    def content(self) -> tuple[int, ...]:
        return self.weight().content

    def rotate(self, s: int) -> "TruncatedPath":
        n = self.n
        head = [0] * n
        for i, a in enumerate(self.head):
            head[(i + s) % n] = a
        return TruncatedPath(tuple(head), tuple(b.rotate(s) for b in self.body))

    def sort_key(self):
        return (self.head, tuple(_elem_key(b) for b in self.body))

    def __str__(self) -> str:
        head = "u[" + ",".join(map(str, self.head)) + "]"
        return " | ".join([head] + [str(b) for b in self.body])


def _elem_key(b):
    if isinstance(b, RowElem):
        return (0, b.x)
    return (1, b.s)


def tensor_apply(i: int, direction: str, p):
    """Apply ``e_i`` (raise) or ``f_i`` (lower) to a path, tensor or element."""
    return p.e(i) if direction == RAISE else p.f(i)


def eps_phi(i: int, b) -> tuple[int, int]:
    return b.epsilon(i), b.phi(i)


def weight(p) -> ClWeight:
    if isinstance(p, TruncatedPath):
        return p.weight()
    return ClWeight(tuple(p.content()), 0)


def rotate_labels(s: int, x, n: int | None = None):
    """Dynkin rotation ``i -> i + s``; intertwines ``f_i`` with ``f_{i+s}``."""
    if isinstance(x, (RowElem, ColElem, TruncatedPath, ClWeight)):
        return x.rotate(s)
    if isinstance(x, Tensor):
        return Tensor(tuple(b.rotate(s) for b in x.factors))
    if n is None:
        raise ValueError("rotating a word needs n")
    return tuple((i + s) % n for i in x)


def classical_highest(nodes: Iterable, n: int) -> list:
    """Elements killed by every ``e_i`` with ``i != 0``."""
    return [p for p in nodes if all(p.e(i) is None for i in range(1, n))]


def node_key(x):
    if isinstance(x, TruncatedPath):
        return x.sort_key()
    if isinstance(x, Tensor):
        return tuple(_elem_key(b) for b in x.factors)
    return _elem_key(x)


@dataclass
class EdgeColoredGraph:
    nodes: list
    edges: list[tuple[Hashable, int, Hashable]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, x) -> bool:
        return x in set(self.nodes)

    def node_set(self) -> frozenset:
        return frozenset(self.nodes)

    def to_dot(self, name: str = "crystal") -> str:
        index = {x: k for k, x in enumerate(self.nodes)}
        lines = [f"digraph {name} {{"]
        for x in self.nodes:
            lines.append(f'  n{index[x]} [label="{x}"];')
        for src, i, dst in self.edges:
            lines.append(f'  n{index[src]} -> n{index[dst]} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        index = {x: k for k, x in enumerate(self.nodes)}
        return {
            "nodes": [str(x) for x in self.nodes],
            "edges": [[index[s], i, index[t]] for s, i, t in self.edges],
        }


def crystal_closure(seeds: Iterable, ops: Iterable[tuple[int, str]], cap: int = DEFAULT_CAP) -> EdgeColoredGraph:
    """Breadth-first closure of ``seeds`` under the given ``(i, direction)``
    operators.  Edges are recorded as ``(b, i, f_i b)`` (lowering orientation)."""
    ops = sorted(set(ops))
    seen = set()
    order = []
    queue = deque()
    for s in sorted(set(seeds), key=node_key):
        seen.add(s)
        order.append(s)
        queue.append(s)
    edges = set()
    while queue:
        x = queue.popleft()
        for i, direction in ops:
            y = tensor_apply(i, direction, x)
            if y is None:
                continue
            edges.add((x, i, y) if direction == LOWER else (y, i, x))
            if y not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"closure exceeded {cap} nodes")
                seen.add(y)
                queue.append(y)
    nodes = sorted(seen, key=node_key)
    return EdgeColoredGraph(nodes, sorted(edges, key=lambda e: (node_key(e[0]), e[1], node_key(e[2]))))


def induced_graph(nodes: Iterable, n: int) -> EdgeColoredGraph:
    """All ``f_i`` edges (i in Z/nZ) between members of ``nodes``."""
    node_set = set(nodes)
    edges = []
    for x in node_set:
        for i in range(n):
            try:
                y = x.f(i)
            except TruncationError:
                continue
            if y is not None and y in node_set:
                edges.append((x, i, y))
    ordered = sorted(node_set, key=node_key)
    return EdgeColoredGraph(ordered, sorted(edges, key=lambda e: (node_key(e[0]), e[1], node_key(e[2]))))


# perfectness


def b_of(B: Crystal, lam: Sequence[int], via: Callable = phi_vector):
    """The unique ``b`` with ``phi(b) = lam`` (or ``eps(b)`` with ``via=epsilon_vector``)."""
    lam = tuple(lam)
    hits = [b for b in B.elements() if via(b, B.n) == lam]
    if len(hits) != 1:
        raise ValueError(f"{len(hits)} elements of {B} have weight {lam}: not perfect")
    return hits[0]


def perfectness_witnesses(B: Crystal, l: int | None = None) -> dict[str, bool]:
    """Computable necessary conditions for ``B`` to be perfect of level ``l``:
    every ``<c, eps(b)>`` is at least ``l``, and on the minimal elements both
    ``eps`` and ``phi`` are bijections onto the level-l dominant weights."""
    l = B.level if l is None else l
    n = B.n
    elems = B.elements()
    targets = set(level_weights(n, l))
    minimal = [b for b in elems if sum(epsilon_vector(b, n)) == l]
    eps_img = [epsilon_vector(b, n) for b in minimal]
    phi_img = [phi_vector(b, n) for b in minimal]
    return {
        "level_bound": all(sum(epsilon_vector(b, n)) >= l for b in elems),
        "eps_bijective": len(set(eps_img)) == len(eps_img) and set(eps_img) == targets,
        "phi_bijective": len(set(phi_img)) == len(phi_img) and set(phi_img) == targets,
    }


def is_perfect(B: Crystal, l: int | None = None) -> bool:
    return all(perfectness_witnesses(B, l).values())


def parse_element(text: str, B: Crystal) -> Element:
    return B.parse(text)
