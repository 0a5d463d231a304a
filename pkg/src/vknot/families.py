"""Explicit knot families with one bridge.

``k_family(i)``: 2i positive chords, all heads in one block followed by all
tails in the same order.  Homotopic to the unknot with flip distance i.

``kpq_family(p, q, n)``: p vertical and q horizontal positive chords near
the axes, plus n near-vertical and n near-horizontal diameters.  The circle
is read counterclockwise from the positive x-axis.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import EMPTY, GaussDiagram, Role, validate


def unknot() -> GaussDiagram:
    return EMPTY


def k_family(i: int) -> GaussDiagram:
    if i < 0:
        raise ValueError(f"k_family needs i >= 0, got {i}")
    chords = range(1, 2 * i + 1)
    eps = [(c, Role.HEAD) for c in chords] + [(c, Role.TAIL) for c in chords]
    return validate(eps, {c: 1 for c in chords})


def _kpq_layout(p: int, q: int, n: int) -> tuple[list[tuple[int, Role]], dict[str, int]]:
    labels: dict[str, int] = {}
    for k in range(1, q + 1):
        labels[f"h{k}"] = k
    for k in range(1, p + 1):
        labels[f"v{k}"] = q + k
    for k in range(1, n + 1):
        labels[f"dV{k}"] = p + q + k
        labels[f"dH{k}"] = p + q + n + k
    h = [labels[f"h{k}"] for k in range(1, q + 1)]
    v = [labels[f"v{k}"] for k in range(1, p + 1)]
    dv = [labels[f"dV{k}"] for k in range(1, n + 1)]
    dh = [labels[f"dH{k}"] for k in range(1, n + 1)]
    H, T = Role.HEAD, Role.TAIL
    eps = (
        [(c, H) for c in h]                      # right ends, Q1/Q4 boundary
        + [(c, H) for c in v]                    # top ends
        + [(c, H) for c in dv]                   # Q2 arc
        + [(c, T) for c in reversed(dh)]
        + [(c, T) for c in reversed(h)]          # left ends
        + [(c, T) for c in reversed(v)]          # bottom ends; nested verticals
        + [(c, T) for c in dv]                   # Q4 arc
        + [(c, H) for c in reversed(dh)]
    )
    return eps, labels


def kpq_family(p: int, q: int, n: int) -> GaussDiagram:
    if p < 1 or q < 1 or n < 0:
        raise ValueError(f"kpq_family needs p, q >= 1 and n >= 0, got {(p, q, n)}")
    eps, labels = _kpq_layout(p, q, n)
    return validate(eps, {c: 1 for c in labels.values()})


def kpq_chord_ids(p: int, q: int, n: int) -> dict[str, int]:
    """Chord ids in ``kpq_family(p, q, n)`` for the names h1.., v1.., dV1.., dH1..."""
    eps, labels = _kpq_layout(p, q, n)
    order: dict[int, int] = {}
    for c, _ in eps:
        order.setdefault(c, len(order) + 1)
    return {name: order[raw] for name, raw in labels.items()}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    i: int = 0
    p: int = 1
    q: int = 1
    n: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("Ki", "Kpqn"):
            raise ValueError(f"unknown family {self.kind!r}")
        if self.kind == "Ki" and self.i < 0:
            raise ValueError("i must be >= 0")
        if self.kind == "Kpqn" and (self.p < 1 or self.q < 1 or self.n < 0):
            raise ValueError("need p, q >= 1 and n >= 0")

    def build(self) -> GaussDiagram:
        if self.kind == "Ki":
            return k_family(self.i)
        return kpq_family(self.p, self.q, self.n)
