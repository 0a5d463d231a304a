"""Flip and Reidemeister moves on Gauss diagrams, and neighbor enumeration.

All moves are pure: they take a diagram and return a new normalized one
(chords renumbered by first occurrence, positions otherwise as produced).

Encodings used here:

* R1: a chord whose two endpoints are adjacent, any sign and direction.
* R2: two chords of opposite sign, both tails in one block of adjacent
  positions and both heads in another.  The chords link when the two blocks
  list them in the same order and are nested otherwise.
* R3: three blocks of two adjacent endpoints (the three strand segments).
  One block holds two tails, one two heads and one is mixed.  Writing ``a``
  for the chord with its head in the mixed block, ``c`` for the chord with
  its tail there and ``b`` for the third, the move is legal iff
  ``sign(a)*sign(b) = +1`` exactly when the mixed and the head blocks list
  their endpoints in the same (a before c / b before c) sense, and
  ``sign(b)*sign(c) = +1`` exactly when the tail and mixed blocks agree
  (a before b / a before c).  The move reverses every block.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any

from .diagram import DiagramError, Endpoint, GaussDiagram, Role, _renumber

KINDS = ("Flip", "R1Insert", "R1Delete", "R2Insert", "R2Delete", "R3")


class MoveError(DiagramError):
    """A move's precondition does not hold on the given diagram."""


@dataclass(frozen=True)
class Move:
    kind: str
    params: tuple[tuple[str, Any], ...]

    @classmethod
    def make(cls, kind: str, **params: Any) -> "Move":
        if kind not in KINDS:
            raise ValueError(f"unknown move kind {kind!r}")
        return cls(kind, tuple(params.items()))

    @property
    def args(self) -> dict[str, Any]:
        return dict(self.params)

    @property
    def is_flip(self) -> bool:
        return self.kind == "Flip"

    def sort_key(self) -> tuple:
        return (KINDS.index(self.kind), tuple(_freeze(v) for _, v in self.params))

    def to_json(self) -> dict[str, Any]:
        return {
            "move": self.kind,
            "params": {k: list(v) if isinstance(v, tuple) else v for k, v in self.params},
        }

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> "Move":
        kind = obj["move"]
        params = {k: tuple(v) if isinstance(v, list) else v for k, v in obj["params"].items()}
        return cls.make(kind, **params)

    def __str__(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind}({inner})"


def _freeze(v: Any) -> Any:
    if isinstance(v, bool):
        return int(v)
    return v


def _sign_map(d: GaussDiagram) -> dict[int, int]:
    return dict(zip(d.chords, d.signs))


def _adjacent(p: int, q: int, m: int) -> bool:
    return (q - p) % m in (1, m - 1)


# -- flip ---------------------------------------------------------------------

def flip(d: GaussDiagram, c: int) -> GaussDiagram:
    """Reverse chord ``c`` and negate its sign."""
    d._check_chord(c)
    eps = [Endpoint(e.chord, e.role.other()) if e.chord == c else e for e in d.endpoints]
    signs = _sign_map(d)
    signs[c] = -signs[c]
    return _renumber(eps, signs)


# -- R1 -----------------------------------------------------------------------

def r1_delete(d: GaussDiagram, c: int) -> GaussDiagram:
    d._check_chord(c)
    h, t = d.positions[c]
    if not _adjacent(h, t, len(d.endpoints)):
        raise MoveError(f"R1: endpoints of chord {c} are not adjacent")
    eps = [e for e in d.endpoints if e.chord != c]
    return _renumber(eps, _sign_map(d))


def _check_gap(d: GaussDiagram, gap: int) -> None:
    if not 0 <= gap < max(1, len(d.endpoints)):
        raise MoveError(f"gap {gap} out of range")


def r1_insert(d: GaussDiagram, gap: int, head_first: bool, sign: int) -> GaussDiagram:
    """Insert an isolated chord before endpoint ``gap``."""
    _check_gap(d, gap)
    if sign not in (1, -1):
        raise MoveError(f"invalid sign {sign!r}")
    new = d.n_chords + 1
    block = [Endpoint(new, Role.HEAD), Endpoint(new, Role.TAIL)]
    if not head_first:
        block.reverse()
    eps = list(d.endpoints)
    eps[gap:gap] = block
    signs = _sign_map(d)
    signs[new] = sign
    return _renumber(eps, signs)


# -- R2 -----------------------------------------------------------------------

def r2_delete(d: GaussDiagram, c: int, e: int) -> GaussDiagram:
    d._check_chord(c)
    d._check_chord(e)
    if c == e:
        raise MoveError("R2 needs two distinct chords")
    if d.signs[c - 1] != -d.signs[e - 1]:
        raise MoveError(f"R2: chords {c} and {e} must have opposite signs")
    m = len(d.endpoints)
    (hc, tc), (he, te) = d.positions[c], d.positions[e]
    if not (_adjacent(tc, te, m) and _adjacent(hc, he, m)):
        raise MoveError(f"R2: chords {c} and {e} do not form a tails block and a heads block")
    eps = [x for x in d.endpoints if x.chord not in (c, e)]
    return _renumber(eps, _sign_map(d))


def r2_insert(
    d: GaussDiagram,
    tails_gap: int,
    heads_gap: int,
    linked: bool,
    sign: int,
    tails_first: bool = True,
) -> GaussDiagram:
    """Insert an R2 pair: tails block at ``tails_gap``, heads block at ``heads_gap``.

    The first chord of the tails block gets ``sign``, the second ``-sign``.
    ``tails_first`` orders the two blocks when they share a gap.
    """
    _check_gap(d, tails_gap)
    _check_gap(d, heads_gap)
    if sign not in (1, -1):
        raise MoveError(f"invalid sign {sign!r}")
    a, b = d.n_chords + 1, d.n_chords + 2
    tails = [Endpoint(a, Role.TAIL), Endpoint(b, Role.TAIL)]
    heads = [Endpoint(a, Role.HEAD), Endpoint(b, Role.HEAD)]
    if not linked:
        heads.reverse()
    eps = list(d.endpoints)
    # insert at the larger gap first so the smaller index stays valid
    if tails_gap == heads_gap:
        eps[tails_gap:tails_gap] = tails + heads if tails_first else heads + tails
    elif tails_gap > heads_gap:
        eps[tails_gap:tails_gap] = tails
        eps[heads_gap:heads_gap] = heads
    else:
        eps[heads_gap:heads_gap] = heads
        eps[tails_gap:tails_gap] = tails
    signs = _sign_map(d)
    signs[a], signs[b] = sign, -sign
    return _renumber(eps, signs)


# -- R3 -----------------------------------------------------------------------

def _r3_legal(d: GaussDiagram, blocks: list[tuple[int, int]]) -> bool:
    eps = d.endpoints
    tail_block = head_block = mixed = None
    for p, q in blocks:
        x, y = eps[p], eps[q]
        if x.chord == y.chord:
            return False
        if x.role is y.role:
            if x.role is Role.TAIL:
                tail_block = (x.chord, y.chord)
            else:
                head_block = (x.chord, y.chord)
        else:
            mixed = (x, y)
    if tail_block is None or head_block is None or mixed is None:
        return False
    x, y = mixed
    a, c = (x.chord, y.chord) if x.role is Role.HEAD else (y.chord, x.chord)
    if a not in tail_block:
        return False
    b = tail_block[1] if tail_block[0] == a else tail_block[0]
    if set(head_block) != {b, c}:
        return False
    o_top = tail_block[0] == a
    o_mid = x.chord == a
    o_bot = head_block[0] == b
    sa, sb, sc = d.signs[a - 1], d.signs[b - 1], d.signs[c - 1]
    return sa * sb == (1 if o_mid == o_bot else -1) and sb * sc == (
        1 if o_top == o_mid else -1
    )


def _candidate_blocks(d: GaussDiagram, chords: tuple[int, int, int]) -> list[tuple[int, int, int]]:
    m = len(d.endpoints)
    pos = sorted(p for c in chords for p in d.positions[c])
    found = []
    for off in (0, 1):
        pairs = [(pos[(2 * k + off) % 6], pos[(2 * k + 1 + off) % 6]) for k in range(3)]
        if all((q - p) % m == 1 for p, q in pairs):
            if _r3_legal(d, pairs):
                found.append(tuple(sorted(p for p, _ in pairs)))
    return found


def r3(
    d: GaussDiagram, c1: int, c2: int, c3: int, blocks: tuple[int, int, int] | None = None
) -> GaussDiagram:
    """Apply R3 on three chords; ``blocks`` gives the block start positions.

    ``blocks`` may be omitted unless the triple admits two block partitions
    (only possible when the three chords are the whole diagram).
    """
    chords = tuple(sorted({c1, c2, c3}))
    if len(chords) != 3:
        raise MoveError("R3 needs three distinct chords")
    for c in chords:
        d._check_chord(c)
    legal = _candidate_blocks(d, chords)
    if blocks is None:
        if len(legal) != 1:
            raise MoveError(
                "R3: chords do not form a legal configuration"
                if not legal
                else "R3: ambiguous blocks, pass blocks="
            )
        starts = legal[0]
    else:
        starts = tuple(sorted(blocks))
        if starts not in legal:
            raise MoveError(f"R3: blocks {starts} are not a legal configuration")
    m = len(d.endpoints)
    eps = list(d.endpoints)
    for p in starts:
        q = (p + 1) % m
        eps[p], eps[q] = eps[q], eps[p]
    return _renumber(eps, _sign_map(d))


# -- dispatch and enumeration ---------------------------------------------------

def apply_move(d: GaussDiagram, move: Move) -> GaussDiagram:
    a = move.args
    if move.kind == "Flip":
        return flip(d, a["chord"])
    if move.kind == "R1Insert":
        return r1_insert(d, a["gap"], a["head_first"], a["sign"])
    if move.kind == "R1Delete":
        return r1_delete(d, a["chord"])
    if move.kind == "R2Insert":
        return r2_insert(
            d, a["tails_gap"], a["heads_gap"], a["linked"], a["sign"], a.get("tails_first", True)
        )
    if move.kind == "R2Delete":
        c, e = a["chords"]
        return r2_delete(d, c, e)
    if move.kind == "R3":
        return r3(d, *a["chords"], blocks=tuple(a["blocks"]))
    raise MoveError(f"unknown move kind {move.kind!r}")


def _r3_moves(d: GaussDiagram) -> list[Move]:
    m = len(d.endpoints)
    if d.n_chords < 3:
        return []
    eps = d.endpoints
    # blocks are adjacent pairs of endpoints of distinct chords
    starts = [p for p in range(m) if eps[p].chord != eps[(p + 1) % m].chord]
    moves = []
    for trio in itertools.combinations(starts, 3):
        cover = {p for s in trio for p in (s, (s + 1) % m)}
        if len(cover) != 6:
            continue
        chords = [eps[p].chord for p in cover]
        if len(set(chords)) != 3 or any(chords.count(c) != 2 for c in set(chords)):
            continue
        pairs = [(s, (s + 1) % m) for s in trio]
        if not _r3_legal(d, pairs):
            continue
        moves.append(Move.make("R3", chords=tuple(sorted(set(chords))), blocks=trio))
    return moves


def enumerate_moves(d: GaussDiagram, max_chords: int, *, flips: bool = True) -> list[tuple[Move, GaussDiagram]]:
    """Every single-move neighbor of ``d`` keeping at most ``max_chords`` chords.

    Ordered by move kind, then by parameters.
    """
    n = d.n_chords
    if max_chords < n:
        raise ValueError(f"max_chords={max_chords} below chord count {n}")
    m = len(d.endpoints)
    moves: list[Move] = []
    if flips:
        moves += [Move.make("Flip", chord=c) for c in d.chords]
    gaps = range(max(1, m))
    if n + 1 <= max_chords:
        moves += [
            Move.make("R1Insert", gap=g, head_first=hf, sign=s)
            for g in gaps
            for hf in (True, False)
            for s in (1, -1)
        ]
    for c in d.chords:
        h, t = d.positions[c]
        if _adjacent(h, t, m):
            moves.append(Move.make("R1Delete", chord=c))
    if n + 2 <= max_chords:
        for tg in gaps:
            for hg in gaps:
                orders = (True, False) if tg == hg and m else (True,)
                for linked in (True, False):
                    for s in (1, -1):
                        for tf in orders:
                            moves.append(
                                Move.make(
                                    "R2Insert", tails_gap=tg, heads_gap=hg,
                                    linked=linked, sign=s, tails_first=tf,
                                )
                            )
    signs = d.signs
    for c, e in itertools.combinations(d.chords, 2):
        if signs[c - 1] != -signs[e - 1]:
            continue
        (hc, tc), (he, te) = d.positions[c], d.positions[e]
        if _adjacent(tc, te, m) and _adjacent(hc, he, m):
            moves.append(Move.make("R2Delete", chords=(c, e)))
    moves += _r3_moves(d)
    moves.sort(key=Move.sort_key)
    return [(mv, apply_move(d, mv)) for mv in moves]
