"""Certificate-producing search over the move graph.

States are canonical diagrams.  Flip edges cost 1 and Reidemeister edges
cost 0, so the search computes the minimum number of flips between two
diagrams among paths whose intermediate diagrams stay within
``budget.max_chords`` chords.  By default the search is A* guided by the P
polynomial lower bound, which is consistent (an R-move keeps P, a flip moves
the bound by at most one), so the first time the goal is popped its flip
count is minimal within the budget.
"""
from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from typing import Any

from .diagram import (
    GaussDiagram,
    canonical_form,
    canonical_key,
    key_to_code,
    parse_gauss_code,
    to_gauss_code,
)
from .invariants import henrich_P, rvu_lower_bound, turaev_u, vu_lower_bound
from .moves import Move, MoveError, apply_move, enumerate_moves


@dataclass(frozen=True)
class SearchBudget:
    max_chords: int
    max_flips: int = 16
    max_states: int = 200_000
    deterministic: bool = True

    def __post_init__(self) -> None:
        for name in ("max_chords", "max_flips", "max_states"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")


class NotFoundWithinBudget(Exception):
    """No path was found.  ``reason`` is one of ``"budget"`` (state cap hit),
    ``"exhausted"`` (every state within the caps explored) or
    ``"invariant"`` (an invariant proves no path exists at all)."""

    def __init__(self, reason: str, stats: dict[str, Any]):
        self.reason = reason
        self.stats = stats
        super().__init__(f"not found ({reason}): {stats}")


@dataclass(frozen=True)
class Step:
    move: Move
    key: str  # canonical Gauss code of the diagram after the move


@dataclass(frozen=True)
class Certificate:
    start: GaussDiagram
    steps: tuple[Step, ...]
    end: GaussDiagram
    flip_count: int

    def to_json(self) -> dict[str, Any]:
        return {
            "start": to_gauss_code(self.start),
            "steps": [{**s.move.to_json(), "key": s.key} for s in self.steps],
            "end": to_gauss_code(self.end),
            "flip_count": self.flip_count,
        }

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> "Certificate":
        steps = tuple(
            Step(Move.from_json(s), s["key"]) for s in obj["steps"]
        )
        return cls(
            parse_gauss_code(obj["start"]),
            steps,
            parse_gauss_code(obj["end"]),
            int(obj["flip_count"]),
        )

    def then(self, other: "Certificate") -> "Certificate":
        """Concatenate ``self`` (D1 -> D2) with ``other`` (D2 -> D3)."""
        if canonical_key(self.end) != canonical_key(other.start):
            raise ValueError("certificates do not compose: end and start differ")
        return Certificate(
            self.start, self.steps + other.steps, other.end, self.flip_count + other.flip_count
        )


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    failed_at: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(cert: Certificate) -> VerifyResult:
    """Replay ``cert`` from its (canonicalized) start and check every key."""
    current = canonical_form(cert.start)
    flips = 0
    for idx, step in enumerate(cert.steps):
        try:
            current = canonical_form(apply_move(current, step.move))
        except (MoveError, KeyError, TypeError, ValueError) as exc:
            return VerifyResult(False, idx, f"move {step.move} not applicable: {exc}")
        flips += step.move.is_flip
        got = key_to_code(canonical_key(current))
        if got != step.key:
            return VerifyResult(False, idx, f"key mismatch: recorded {step.key!r}, replayed {got!r}")
    n = len(cert.steps)
    if canonical_key(current) != canonical_key(cert.end):
        return VerifyResult(False, n, "replay does not end at the recorded end diagram")
    if flips != cert.flip_count:
        return VerifyResult(False, n, f"flip_count {cert.flip_count} but {flips} flips replayed")
    return VerifyResult(True)


def _search(
    d1: GaussDiagram,
    d2: GaussDiagram,
    budget: SearchBudget,
    allow_flips: bool,
    heuristic: bool,
) -> Certificate:
    if budget.max_chords < max(d1.n_chords, d2.n_chords):
        raise ValueError("budget.max_chords is below the chord count of an endpoint diagram")
    if turaev_u(d1) != turaev_u(d2):
        raise NotFoundWithinBudget("invariant", {"why": "u polynomials differ"})
    target_P = henrich_P(d2)
    if not allow_flips and henrich_P(d1) != target_P:
        raise NotFoundWithinBudget("invariant", {"why": "P polynomials differ"})

    def lower(d: GaussDiagram) -> int:
        if not (heuristic and allow_flips):
            return 0
        return math.ceil(rvu_lower_bound(henrich_P(d), target_P))

    start = canonical_form(d1)
    start_key = canonical_key(start)
    goal = canonical_key(d2)
    counter = itertools.count()
    best: dict = {start_key: 0}
    parent: dict = {start_key: None}
    states: dict = {start_key: start}
    closed: set = set()
    h0 = lower(start)
    heap = [(h0, h0, start.n_chords, 0, next(counter), start_key)]
    expanded = 0
    while heap:
        f, h, _, depth, _, key = heapq.heappop(heap)
        g = f - h
        if g > best[key] or key in closed:
            continue
        if key == goal:
            return _certificate(d1, d2, key, parent, g)
        closed.add(key)
        expanded += 1
        for mv, nxt in enumerate_moves(states[key], budget.max_chords, flips=allow_flips):
            ng = g + mv.is_flip
            if ng > budget.max_flips:
                continue
            k = canonical_key(nxt)
            if ng >= best.get(k, ng + 1):
                continue
            nh = lower(nxt)
            if ng + nh > budget.max_flips:
                continue
            best[k] = ng
            parent[k] = (key, mv)
            states[k] = canonical_form(nxt)
            closed.discard(k)
            heapq.heappush(heap, (ng + nh, nh, nxt.n_chords, depth + 1, next(counter), k))
            if len(best) > budget.max_states:
                raise NotFoundWithinBudget(
                    "budget",
                    {"visited": len(best), "expanded": expanded, "frontier": len(heap),
                     "lower_bound": h0},
                )
    raise NotFoundWithinBudget(
        "exhausted", {"visited": len(best), "expanded": expanded, "frontier": 0, "lower_bound": h0}
    )


def _certificate(d1, d2, goal_key, parent, flips: int) -> Certificate:
    steps = []
    key = goal_key
    while parent[key] is not None:
        prev, mv = parent[key]
        steps.append(Step(mv, key_to_code(key)))
        key = prev
    steps.reverse()
    return Certificate(canonical_form(d1), tuple(steps), canonical_form(d2), flips)


def find_homotopy(
    d1: GaussDiagram, d2: GaussDiagram, budget: SearchBudget, *, heuristic: bool = True
) -> Certificate:
    """Minimum-flip path from ``d1`` to ``d2`` within ``budget``.

    Raises :class:`NotFoundWithinBudget` if there is none.
    """
    return _search(d1, d2, budget, allow_flips=True, heuristic=heuristic)


def find_isotopy(d1: GaussDiagram, d2: GaussDiagram, budget: SearchBudget) -> Certificate:
    return _search(d1, d2, budget, allow_flips=False, heuristic=False)


@dataclass(frozen=True)
class VuCertification:
    lower: int
    upper: int | None
    certificate: Certificate | None
    status: str  # EXACT, UPPER_BOUND, NOT_FOUND or NOT_HOMOTOPIC_TO_UNKNOT
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.status == "EXACT"


def certify_vu(d: GaussDiagram, budget: SearchBudget) -> VuCertification:
    lower = math.ceil(vu_lower_bound(henrich_P(d)))
    u = turaev_u(d)
    if u:
        return VuCertification(lower, None, None, "NOT_HOMOTOPIC_TO_UNKNOT", {"u": str(u)})
    try:
        cert = find_homotopy(d, GaussDiagram(), budget)
    except NotFoundWithinBudget as exc:
        return VuCertification(lower, None, None, "NOT_FOUND", {"reason": exc.reason, **exc.stats})
    status = "EXACT" if cert.flip_count == lower else "UPPER_BOUND"
    return VuCertification(lower, cert.flip_count, cert, status)
