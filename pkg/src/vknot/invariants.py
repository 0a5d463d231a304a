"""Bridge count, chord indices, the P and u polynomials, and flip lower bounds."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import DiagramError, GaussDiagram, Role, in_open_arc
from .poly import SparsePoly


def bridge_count(d: GaussDiagram) -> int:
    """Number of arcs between cyclically consecutive heads that hold a tail."""
    eps = d.endpoints
    heads = [p for p, e in enumerate(eps) if e.role is Role.HEAD]
    if not heads:
        return 0
    m = len(eps)
    count = 0
    for k, start in enumerate(heads):
        gap = (heads[(k + 1) % len(heads)] - start) % m or m
        # heads are consecutive, so anything strictly between them is a tail
        if gap > 1:
            count += 1
    return count


def _links(d: GaussDiagram, c: int, e: int) -> bool:
    a1, a2 = sorted(d.positions[c])
    b1, b2 = sorted(d.positions[e])
    return (a1 < b1 < a2) != (a1 < b2 < a2)


def chord_index(d: GaussDiagram, c: int, *, arc: str = "head_to_tail") -> int:
    """Index ``i(c)``: signed count of linking chords pointing into an arc of ``c``.

    The default arc runs positively from the head of ``c`` to its tail;
    ``arc="tail_to_head"`` picks the complementary arc and negates the value.
    """
    if not 1 <= c <= d.n_chords:
        raise DiagramError(f"chord {c} not present")
    h, t = d.positions[c]
    if arc == "head_to_tail":
        start, end = h, t
    elif arc == "tail_to_head":
        start, end = t, h
    else:
        raise ValueError(f"unknown arc convention {arc!r}")
    m = len(d.endpoints)
    total = 0
    for e in d.chords:
        if e == c or not _links(d, c, e):
            continue
        s = d.signs[e - 1]
        total += s if in_open_arc(start, end, d.positions[e][0], m) else -s
    return total


def henrich_P(d: GaussDiagram) -> SparsePoly:
    terms = []
    for c in d.chords:
        i = chord_index(d, c)
        if i:
            terms.append((abs(i), d.signs[c - 1]))
    return SparsePoly(terms)


def positive_normalization(d: GaussDiagram) -> GaussDiagram:
    """Flip every negative chord so all signs become +1 (ids unchanged)."""
    if all(s > 0 for s in d.signs):
        return d
    eps = tuple(
        type(e)(e.chord, e.role.other()) if d.signs[e.chord - 1] < 0 else e
        for e in d.endpoints
    )
    return GaussDiagram(eps, (1,) * d.n_chords)


def turaev_n(d: GaussDiagram, c: int) -> int:
    """``n(c) = n_+(c) - n_-(c)`` computed on the all-positive diagram."""
    bar = positive_normalization(d)
    return _turaev_n(bar, c)


def _turaev_n(bar: GaussDiagram, c: int) -> int:
    m = len(bar.endpoints)
    h, t = bar.positions[c]
    n = 0
    for e in bar.chords:
        if e == c:
            continue
        eh, et = bar.positions[e]
        head_in = in_open_arc(h, t, eh, m)
        tail_in = in_open_arc(h, t, et, m)
        if head_in and not tail_in:
            n += 1
        elif tail_in and not head_in:
            n -= 1
    return n


def turaev_u(d: GaussDiagram) -> SparsePoly:
    bar = positive_normalization(d)
    terms = []
    for c in bar.chords:
        n = _turaev_n(bar, c)
        if n:
            terms.append((abs(n), 1 if n > 0 else -1))
    return SparsePoly(terms)


@dataclass(frozen=True)
class ChordReport:
    chord: int
    i_value: int
    n_value: int
    sign: int


def chord_report(d: GaussDiagram) -> list[ChordReport]:
    bar = positive_normalization(d)
    return [
        ChordReport(c, chord_index(d, c), _turaev_n(bar, c), d.signs[c - 1])
        for c in d.chords
    ]


def vu_lower_bound(p: SparsePoly) -> Fraction:
    """Half the sum of absolute coefficients; ``math.ceil`` gives the integer bound."""
    return Fraction(p.l1_norm(), 2)


def rvu_lower_bound(p1: SparsePoly, p2: SparsePoly) -> Fraction:
    return vu_lower_bound(p1 - p2)
