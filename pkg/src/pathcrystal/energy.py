"""Combinatorial R-matrix, local energy function and path energies."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cache
from typing import Sequence

from .crystal import LOWER, RAISE, Crystal, Tensor, tensor_side, TruncatedPath


class PropagationError(RuntimeError):
    """Graph propagation met a conflict or could not reach every element."""


def _all_pairs(B1: Crystal, B2: Crystal) -> list[Tensor]:
    return [Tensor((b1, b2)) for b1 in B1.elements() for b2 in B2.elements()]


@dataclass(frozen=True)
class RMap:
    """The crystal isomorphism ``B1 (x) B2 -> B2 (x) B1``."""

    B1: Crystal
    B2: Crystal
    table: dict

    def __call__(self, b1, b2) -> tuple:
        return self.table[(b1, b2)]

    def to_json(self) -> dict[str, list[str]]:
        return {f"{a} | {b}": [str(c), str(d)] for (a, b), (c, d) in sorted(self.table.items())}


@dataclass(frozen=True)
class EnergyTable:
    """Local energy ``H`` on ``B1 (x) B2``, normalised by ``H(anchor) = 0``."""

    B1: Crystal
    B2: Crystal
    anchor: tuple
    table: dict

    def __call__(self, b1, b2) -> int:
        return self.table[(b1, b2)]

    def to_json(self) -> dict:
        return {
            "anchor": f"{self.anchor[0]} | {self.anchor[1]}",
            "H": {f"{a} | {b}": h for (a, b), h in sorted(self.table.items())},
        }


def _neighbours(t: Tensor, n: int):
    for i in range(n):
        for direction in (LOWER, RAISE):
            yield i, direction


@cache
def combinatorial_R(B1: Crystal, B2: Crystal) -> RMap:
    """Anchor ``u1 (x) u2 -> u2 (x) u1`` and transport along every affine edge.

    A conflict would mean the isomorphism is not unique; a pair never reached
    means ``B1 (x) B2`` is disconnected.  Both raise ``PropagationError``.
    """
    n = B1.n
    src0 = Tensor((B1.highest(), B2.highest()))
    dst0 = Tensor((B2.highest(), B1.highest()))
    image = {src0: dst0}
    queue = deque([src0])
    while queue:
        x = queue.popleft()
        y = image[x]
        for i, direction in _neighbours(x, n):
            x2 = x.f(i) if direction == LOWER else x.e(i)
            y2 = y.f(i) if direction == LOWER else y.e(i)
            if (x2 is None) != (y2 is None):
                raise PropagationError(f"operator ({i},{direction}) not intertwined at {x}")
            if x2 is None:
                continue
            if x2 in image:
                if image[x2] != y2:
                    raise PropagationError(f"conflicting images for {x2}")
                continue
            image[x2] = y2
            queue.append(x2)
    pairs = _all_pairs(B1, B2)
    if len(image) != len(pairs):
        raise PropagationError(f"{B1} (x) {B2} is not connected")
    if len(set(image.values())) != len(image):
        raise PropagationError("R is not injective")
    return RMap(B1, B2, {x.factors: image[x].factors for x in pairs})


def local_rule(x: Tensor, R: RMap) -> int:
    """``H(e_0 x) - H(x)``: +1 if e_0 acts on the left factor both of ``x``
    and of ``R(x)``, -1 if on the right factor of both, 0 otherwise."""
    y = R(*x.factors)
    sx = tensor_side(0, RAISE, x.factors)
    sy = tensor_side(0, RAISE, y)
    if sx is None:
        raise ValueError(f"e_0 kills {x}")
    if sx == 0 and sy == 0:
        return 1
    if sx == 1 and sy == 1:
        return -1
    return 0


@cache
def energy_table(B1: Crystal, B2: Crystal) -> EnergyTable:
    """Propagate ``H`` from ``H(u1 (x) u2) = 0`` along raise edges: classical
    edges keep ``H``, 0-edges change it by the local rule."""
    n = B1.n
    R = combinatorial_R(B1, B2)
    anchor = Tensor((B1.highest(), B2.highest()))
    H = {anchor: 0}
    queue = deque([anchor])
    while queue:
        x = queue.popleft()
        for i in range(n):
            up = x.e(i)
            if up is not None:
                h = H[x] + (local_rule(x, R) if i == 0 else 0)
                if up in H and H[up] != h:
                    raise PropagationError(f"energy conflict at {up}")
                if up not in H:
                    H[up] = h
                    queue.append(up)
            down = x.f(i)
            if down is not None:
                h = H[x] - (local_rule(down, R) if i == 0 else 0)
                if down in H and H[down] != h:
                    raise PropagationError(f"energy conflict at {down}")
                if down not in H:
                    H[down] = h
                    queue.append(down)
    pairs = _all_pairs(B1, B2)
    if len(H) != len(pairs):
        raise PropagationError(f"{B1} (x) {B2} is not connected")
    return EnergyTable(B1, B2, anchor.factors, {x.factors: H[x] for x in pairs})


def homogeneous_energy(p: TruncatedPath, ground: TruncatedPath, next_ground, B: Crystal) -> int:
    """``D(p) = sum_j j (H(p(j+1) (x) p(j)) - H(gb_{j+1} (x) gb_j))``.

    ``ground`` is the ground-state path with the same head and ``next_ground``
    the frozen element ``gb_{J+1}`` hidden inside the head.
    """
    if p.head != ground.head or len(p.body) != len(ground.body):
        raise ValueError("path and ground state have different shapes")
    H = energy_table(B, B)
    J = len(p.body)
    total = 0
    for j in range(1, J + 1):
        left = next_ground if j == J else p.position(j + 1)
        gleft = next_ground if j == J else ground.position(j + 1)
        total += j * (H(left, p.position(j)) - H(gleft, ground.position(j)))
    return total


def promoted_factors(body: Sequence, crystals: Sequence[Crystal]) -> dict[tuple[int, int], object]:
    """Triangular table ``b_j^{(i)}`` (1 <= i <= j <= m) for ``b_1 (x) ... (x) b_m``:
    ``b_j^{(j)} = b_j`` and ``R(b_i (x) b_j^{(i+1)}) = b_j^{(i)} (x) b_i'``."""
    m = len(body)
    table = {}
    for j in range(1, m + 1):
        table[(j, j)] = body[j - 1]
        for i in range(j - 1, 0, -1):
            R = combinatorial_R(crystals[i - 1], crystals[j - 1])
            table[(j, i)] = R(body[i - 1], table[(j, i + 1)])[0]
    return table


def partial_energy(body: Sequence, crystals: Sequence[Crystal], j: int, table=None) -> int:
    """``E^{(j)} = sum_{i<j} H(b_i (x) b_j^{(i+1)})``."""
    if table is None:
        table = promoted_factors(body, crystals)
    return sum(
        energy_table(crystals[i - 1], crystals[j - 1])(body[i - 1], table[(j, i + 1)])
        for i in range(1, j)
    )


def inhomogeneous_energy(body: Sequence, crystals: Sequence[Crystal]) -> int:
    """``E = sum_j E^{(j)}`` for ``u (x) b_1 (x) ... (x) b_m`` (b_1 next to the head)."""
    table = promoted_factors(body, crystals)
    return sum(partial_energy(body, crystals, j, table) for j in range(1, len(body) + 1))
