"""Sparse integer polynomials in one variable ``t``."""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class SparsePoly:
    """Immutable ``{degree: coefficient}`` polynomial with no zero terms."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for deg, coef in items:
            acc[deg] = acc.get(deg, 0) + coef
        self._terms = {d: c for d, c in sorted(acc.items()) if c}
        self._hash: int | None = None

    @classmethod
    def monomial(cls, coef: int, deg: int) -> "SparsePoly":
        return cls({deg: coef})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coefficient(self, deg: int) -> int:
        return self._terms.get(deg, 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SparsePoly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        return SparsePoly([*self._terms.items(), *other._terms.items()])

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({d: -c for d, c in self._terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def l1_norm(self) -> int:
        return sum(abs(c) for c in self._terms.values())

    def __str__(self) -> str:
        # ascending degree, explicit coefficients: "2t^1 + 1t^2 - 1t^4"
        if not self._terms:
            return "0"
        parts = []
        for i, (d, c) in enumerate(self._terms.items()):
            if i == 0:
                parts.append(f"{c}t^{d}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {abs(c)}t^{d}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"SparsePoly({self._terms!r})"
