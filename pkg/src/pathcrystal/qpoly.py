"""Laurent polynomials in a single variable ``q`` with integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

_TERM = re.compile(r"([+-]?)(\d*)\*?(q(?:\^(-?\d+))?)?")


class QPoly:
    """An immutable Laurent polynomial ``sum c_e q^e``.

    Zero coefficients are never stored, so equality and hashing work on the
    coefficient map directly.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._coeffs = {e: c for e, c in sorted(acc.items()) if c}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPoly":
        return cls({exponent: coeff})

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls({0: 1})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._coeffs.items())

    def min_degree(self) -> int:
        return min(self._coeffs)

    def max_degree(self) -> int:
        return max(self._coeffs)

    def __getitem__(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __add__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            other = QPoly({0: other})
        return QPoly(list(self._coeffs.items()) + list(other._coeffs.items()))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            other = QPoly({0: other})
        return self + (-other)

    def __mul__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            return QPoly({e: c * other for e, c in self._coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q^k``."""
        return QPoly({e + k: c for e, c in self._coeffs.items()})

    def invert(self) -> "QPoly":
        """Substitute ``q -> q^{-1}``."""
        return QPoly({-e: c for e, c in self._coeffs.items()})

    def evaluate(self, q=1):
        return sum(c * q**e for e, c in self._coeffs.items())

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self._coeffs.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "QPoly":
        return cls({int(e): int(c) for e, c in data.items()})

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        out = []
        for e, c in self._coeffs.items():
            if e == 0:
                body = str(abs(c))
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("-" if c < 0 else "+") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"QPoly({self})"

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Inverse of ``str``: accepts ``1+q-2*q^3+q^-1``."""
        text = text.replace(" ", "")
        if text == "0":
            return cls()
        coeffs: dict[int, int] = {}
        pos = 0
        while pos < len(text):
            m = _TERM.match(text, pos)
            if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse q-polynomial {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                exp = int(m.group(4)) if m.group(4) is not None else 1
            else:
                exp = 0
            coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
            pos = m.end()
        return cls(coeffs)


q = QPoly.monomial(1)
