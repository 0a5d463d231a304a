"""Gauss diagrams: data model, validation, canonical form and the text codec.

A diagram is the cyclic sequence of chord endpoints read counterclockwise
around the core circle.  Each chord has a sign and is oriented from its tail
(over-passing preimage, token ``O``) to its head (under-passing preimage,
token ``U``).
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence


class Role(enum.IntEnum):
    # Head < Tail in canonical token order
    HEAD = 0
    TAIL = 1

    @property
    def letter(self) -> str:
        return "U" if self is Role.HEAD else "O"

    def other(self) -> "Role":
        return Role.TAIL if self is Role.HEAD else Role.HEAD


class Endpoint(NamedTuple):
    chord: int
    role: Role


Token = tuple[int, int, int]
CanonicalKey = tuple[Token, ...]


class DiagramError(ValueError):
    """Invalid diagram data or an illegal operation on a diagram."""


class GaussCodeError(DiagramError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


@dataclass(frozen=True)
class GaussDiagram:
    """Immutable Gauss diagram with chords numbered ``1..n``.

    ``signs[c - 1]`` is the sign of chord ``c``.  Build instances through
    :func:`validate` or :func:`parse_gauss_code`; the constructor trusts its
    input.
    """

    endpoints: tuple[Endpoint, ...] = ()
    signs: tuple[int, ...] = field(default=())

    @property
    def n_chords(self) -> int:
        return len(self.signs)

    def __len__(self) -> int:
        return len(self.endpoints)

    @property
    def chords(self) -> range:
        return range(1, len(self.signs) + 1)

    def sign(self, c: int) -> int:
        self._check_chord(c)
        return self.signs[c - 1]

    @cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        """chord -> (head position, tail position)."""
        heads: dict[int, int] = {}
        tails: dict[int, int] = {}
        for pos, (c, role) in enumerate(self.endpoints):
            (heads if role is Role.HEAD else tails)[c] = pos
        return {c: (heads[c], tails[c]) for c in heads}

    def head(self, c: int) -> int:
        self._check_chord(c)
        return self.positions[c][0]

    def tail(self, c: int) -> int:
        self._check_chord(c)
        return self.positions[c][1]

    def _check_chord(self, c: int) -> None:
        if not 1 <= c <= len(self.signs):
            raise DiagramError(f"chord {c} not present")

    @cached_property
    def _canonical(self) -> tuple["GaussDiagram", CanonicalKey]:
        return _canonicalize(self)

    def __str__(self) -> str:
        return format_tokens(self.endpoints, self.signs)


def format_tokens(endpoints: Sequence[Endpoint], signs: Sequence[int]) -> str:
    return ",".join(
        f"{role.letter}{c}{_sign_char(signs[c - 1])}" for c, role in endpoints
    )


def _renumber(
    endpoints: Sequence[Endpoint], signs: Mapping[int, int]
) -> GaussDiagram:
    """Relabel chords 1..n by first occurrence.  No checks."""
    relabel: dict[int, int] = {}
    new_signs: list[int] = []
    out = []
    for c, role in endpoints:
        nc = relabel.get(c)
        if nc is None:
            nc = relabel[c] = len(relabel) + 1
            new_signs.append(signs[c])
        out.append(Endpoint(nc, role))
    return GaussDiagram(tuple(out), tuple(new_signs))


def validate(
    endpoints: Iterable[tuple[int, Role | int]], signs: Mapping[int, int]
) -> GaussDiagram:
    """Check raw endpoint data and return the normalized diagram.

    Chord labels may be any hashable ints; they are renumbered ``1..n`` in
    order of first occurrence.  The position sequence is kept as given.
    """
    eps = [Endpoint(c, Role(r)) for c, r in endpoints]
    seen: dict[int, set[Role]] = {}
    for c, role in eps:
        roles = seen.setdefault(c, set())
        if role in roles:
            kind = "heads" if role is Role.HEAD else "tails"
            raise DiagramError(f"chord {c} has two {kind}")
        roles.add(role)
    for c, roles in seen.items():
        if len(roles) != 2:
            raise DiagramError(f"chord {c} appears only once")
        if c not in signs:
            raise DiagramError(f"chord {c} has no sign")
    for c, s in signs.items():
        if c not in seen:
            raise DiagramError(f"sign given for absent chord {c}")
        if s not in (1, -1):
            raise DiagramError(f"chord {c} has invalid sign {s!r}")
    return _renumber(eps, signs)


EMPTY = GaussDiagram()

_TOKEN_RE = re.compile(r"([OU])(\d+)([+-])")


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse ``"U1+,U2+,O1+,O2+"`` style codes (``O`` = tail, ``U`` = head)."""
    if not text.strip():
        return EMPTY
    eps: list[Endpoint] = []
    signs: dict[int, int] = {}
    first_seen: dict[int, int] = {}
    offset = 0
    for raw in text.split(","):
        stripped = raw.strip()
        pos = offset + (len(raw) - len(raw.lstrip()))
        offset += len(raw) + 1
        m = _TOKEN_RE.fullmatch(stripped)
        if m is None:
            raise GaussCodeError(f"malformed token {stripped!r}", pos)
        letter, label_text, sign_text = m.groups()
        label = int(label_text)
        if label < 1:
            raise GaussCodeError(f"label must be >= 1, got {label}", pos)
        role = Role.HEAD if letter == "U" else Role.TAIL
        sign = 1 if sign_text == "+" else -1
        if label in signs:
            if signs[label] != sign:
                raise GaussCodeError(f"chord {label} sign mismatch", pos)
            if Endpoint(label, role) in eps:
                kind = "heads" if role is Role.HEAD else "tails"
                raise GaussCodeError(f"chord {label} has two {kind}", pos)
        else:
            signs[label] = sign
            first_seen[label] = pos
        eps.append(Endpoint(label, role))
    counts: dict[int, int] = {}
    for c, _ in eps:
        counts[c] = counts.get(c, 0) + 1
    for c, k in counts.items():
        if k != 2:
            raise GaussCodeError(f"chord {c} appears {k} time(s), expected 2", first_seen[c])
    return validate(eps, signs)


def to_gauss_code(d: GaussDiagram) -> str:
    """Serialize starting at the canonical rotation."""
    return str(canonical_form(d))


def rotate(d: GaussDiagram, k: int) -> GaussDiagram:
    """Move the basepoint forward by ``k`` endpoints (renumbers chords)."""
    if not d.endpoints:
        return d
    k %= len(d.endpoints)
    eps = d.endpoints[k:] + d.endpoints[:k]
    return _renumber(eps, dict(zip(d.chords, d.signs)))


def _rotation_tokens(d: GaussDiagram, start: int) -> list[Token]:
    eps = d.endpoints
    m = len(eps)
    relabel: dict[int, int] = {}
    out: list[Token] = []
    signs = d.signs
    for j in range(m):
        c, role = eps[(start + j) % m]
        nc = relabel.get(c)
        if nc is None:
            nc = relabel[c] = len(relabel) + 1
        out.append((nc, int(role), 0 if signs[c - 1] > 0 else 1))
    return out


def _canonicalize(d: GaussDiagram) -> tuple[GaussDiagram, CanonicalKey]:
    eps = d.endpoints
    if not eps:
        return d, ()
    # the minimal rotation starts with token (1, HEAD, best sign among heads)
    head_positions = [p for p, e in enumerate(eps) if e.role is Role.HEAD]
    if any(d.signs[eps[p].chord - 1] > 0 for p in head_positions):
        starts = [p for p in head_positions if d.signs[eps[p].chord - 1] > 0]
    else:
        starts = head_positions
    best_start = starts[0]
    best = _rotation_tokens(d, best_start)
    for s in starts[1:]:
        cand = _rotation_tokens(d, s)
        if cand < best:
            best, best_start = cand, s
    key = tuple(best)
    form = GaussDiagram(
        tuple(Endpoint(c, Role(r)) for c, r, _ in key),
        tuple(_signs_from_tokens(key)),
    )
    return form, key


def _signs_from_tokens(key: CanonicalKey) -> list[int]:
    signs: dict[int, int] = {}
    for c, _, sb in key:
        signs.setdefault(c, -1 if sb else 1)
    return [signs[c] for c in range(1, len(signs) + 1)]


def canonical_form(d: GaussDiagram) -> GaussDiagram:
    return d._canonical[0]


def canonical_key(d: GaussDiagram) -> CanonicalKey:
    return d._canonical[1]


def key_to_code(key: CanonicalKey) -> str:
    return ",".join(
        f"{'U' if r == 0 else 'O'}{c}{'-' if sb else '+'}" for c, r, sb in key
    )


def chords_link(d: GaussDiagram, c: int, e: int) -> bool:
    """True iff the endpoints of ``c`` and ``e`` alternate around the circle."""
    if c == e:
        raise DiagramError("chords_link needs two distinct chords")
    d._check_chord(c)
    d._check_chord(e)
    a1, a2 = sorted(d.positions[c])
    b1, b2 = sorted(d.positions[e])
    return (a1 < b1 < a2) != (a1 < b2 < a2)


def in_open_arc(start: int, end: int, pos: int, length: int) -> bool:
    """Whether ``pos`` lies strictly inside the arc from ``start`` to ``end``
    traversed in the positive direction."""
    return 0 < (pos - start) % length < (end - start) % length
