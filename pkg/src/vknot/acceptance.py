"""Executable acceptance checks, shared by ``vknot selftest`` and the test suite.

Each check returns ``(passed, detail)``.
"""
from __future__ import annotations

import itertools
import random
import time
from typing import Callable

from .diagram import (
    GaussCodeError,
    GaussDiagram,
    Role,
    canonical_key,
    parse_gauss_code,
    to_gauss_code,
    validate,
)
from .families import k_family, kpq_family
from .invariants import bridge_count, chord_index, henrich_P, rvu_lower_bound, turaev_u
from .moves import enumerate_moves, flip
from .poly import SparsePoly
from .search import (
    Certificate,
    NotFoundWithinBudget,
    SearchBudget,
    Step,
    certify_vu,
    find_homotopy,
    verify_certificate,
)

Result = tuple[bool, str]


def expected_P_k(i: int) -> SparsePoly:
    return SparsePoly({m: 2 for m in range(1, 2 * i, 2)})


def expected_P_kpq(p: int, q: int, n: int) -> SparsePoly:
    return SparsePoly({p: q}) + SparsePoly({q: p}) + SparsePoly(
        {p + q + 2 * i - 1: 2 for i in range(1, n + 1)}
    )


def expected_u_kpq(p: int, q: int) -> SparsePoly:
    return SparsePoly({q: -p}) + SparsePoly({p: q})


def check_p_ki() -> Result:
    t0 = time.perf_counter()
    bad = [i for i in range(1, 21) if henrich_P(k_family(i)) != expected_P_k(i)]
    dt = time.perf_counter() - t0
    return not bad and dt < 1.0, f"mismatches={bad} time={dt:.3f}s (limit 1s)"


GRID = [(p, q, n) for p in range(1, 7) for q in range(1, 7) for n in range(7)]


def check_p_kpq() -> Result:
    t0 = time.perf_counter()
    bad = [g for g in GRID if henrich_P(kpq_family(*g)) != expected_P_kpq(*g)]
    dt = time.perf_counter() - t0
    return not bad and dt < 5.0, f"mismatches={bad[:5]} time={dt:.3f}s (limit 5s)"


def check_u_kpq() -> Result:
    bad = [g for g in GRID if turaev_u(kpq_family(*g)) != expected_u_kpq(g[0], g[1])]
    values = {(p, q): turaev_u(kpq_family(p, q, 0)) for p in range(1, 7) for q in range(1, 7) if p != q}
    distinct = len(set(values.values())) == len(values)
    return not bad and distinct, f"mismatches={bad[:5]} pairwise_distinct={distinct}"


def check_vu_ki(max_i: int = 4) -> Result:
    notes = []
    ok = True
    for i in range(1, max_i + 1):
        r = certify_vu(k_family(i), SearchBudget(max_chords=2 * i, max_flips=i))
        verified = r.certificate is not None and verify_certificate(r.certificate).ok
        good = r.exact and r.lower == i and r.upper == i and verified
        ok &= good
        notes.append(f"i={i}:{r.status}({r.lower},{r.upper})")
    bridges = all(bridge_count(k_family(i)) == 1 for i in range(1, 21))
    return ok and bridges, " ".join(notes) + f" bridge_count==1:{bridges}"


def check_rvu_kpq() -> Result:
    notes = []
    ok = True
    for p, q in [(1, 2), (2, 3)]:
        for n1, n2 in itertools.combinations(range(4), 2):
            d2, d1 = kpq_family(p, q, n2), kpq_family(p, q, n1)
            cert = find_homotopy(d2, d1, SearchBudget(max_chords=d2.n_chords, max_flips=n2 - n1))
            lb = rvu_lower_bound(henrich_P(d2), henrich_P(d1))
            good = cert.flip_count == n2 - n1 == lb and verify_certificate(cert).ok
            ok &= good
            if not good:
                notes.append(f"({p},{q},{n1},{n2}) flips={cert.flip_count} lb={lb}")
    return ok, "all 12 pairs exact" if ok else "; ".join(notes)


def random_diagram(rng: random.Random, n: int) -> GaussDiagram:
    eps = [(c, Role.HEAD) for c in range(1, n + 1)] + [(c, Role.TAIL) for c in range(1, n + 1)]
    rng.shuffle(eps)
    return validate(eps, {c: rng.choice((1, -1)) for c in range(1, n + 1)})


def check_invariance(trials: int = 1500, seed: int = 7) -> Result:
    rng = random.Random(seed)
    kinds: dict[str, int] = {}
    violations = 0
    for _ in range(trials):
        d = random_diagram(rng, rng.randint(0, 7))
        by_kind: dict[str, list] = {}
        for mv, res in enumerate_moves(d, 8, flips=False):
            by_kind.setdefault(mv.kind, []).append(res)
        kind = rng.choice(sorted(by_kind))
        res = rng.choice(by_kind[kind])
        kinds[kind] = kinds.get(kind, 0) + 1
        if henrich_P(res) != henrich_P(d) or turaev_u(res) != turaev_u(d):
            violations += 1
    flips = 0
    flip_violations = 0
    for _ in range(trials):
        d = random_diagram(rng, rng.randint(1, 8))
        c = rng.randint(1, d.n_chords)
        i = chord_index(d, c)
        before, after = henrich_P(d), henrich_P(flip(d, c))
        diff = (after - before).terms
        flips += 1
        if turaev_u(flip(d, c)) != turaev_u(d):
            flip_violations += 1
        elif i == 0 and diff:
            flip_violations += 1
        elif i != 0 and (list(diff) != [abs(i)] or abs(diff[abs(i)]) != 2):
            flip_violations += 1
    ok = violations == 0 and flip_violations == 0 and sum(kinds.values()) >= 1000 and flips >= 1000
    return ok, f"R-moves={kinds} violations={violations} flips={flips} flip_violations={flip_violations}"


def arc_oracle_index(d: GaussDiagram, c: int, head_to_tail: bool = True) -> int:
    """Literal chord index: flip every chord crossing the chosen arc so it points
    into it, then add the signs of the chords pointing into the arc."""
    m = len(d.endpoints)
    pos = {(e.chord, e.role): p for p, e in enumerate(d.endpoints)}
    h, t = pos[(c, Role.HEAD)], pos[(c, Role.TAIL)]
    a, b = (h, t) if head_to_tail else (t, h)
    arc = set()
    p = (a + 1) % m
    while p != b:
        arc.add(p)
        p = (p + 1) % m
    total = 0
    for e in d.chords:
        if e == c:
            continue
        eh, et = pos[(e, Role.HEAD)], pos[(e, Role.TAIL)]
        if (eh in arc) == (et in arc):
            continue
        sign = d.signs[e - 1]
        if eh not in arc:
            sign = -sign  # flip so the head lies in the arc
        total += sign
    return total


def all_small_diagrams(max_chords: int = 3):
    for n in range(max_chords + 1):
        labels = [(c, r) for c in range(1, n + 1) for r in (Role.HEAD, Role.TAIL)]
        for perm in set(itertools.permutations(labels)):
            for signs in itertools.product((1, -1), repeat=n):
                yield validate(perm, dict(zip(range(1, n + 1), signs)))


def check_oracle() -> Result:
    count = 0
    bad = 0
    for d in all_small_diagrams(3):
        for c in d.chords:
            count += 1
            if chord_index(d, c) != arc_oracle_index(d, c):
                bad += 1
            if chord_index(d, c, arc="tail_to_head") != arc_oracle_index(d, c, False):
                bad += 1
    return bad == 0 and count > 0, f"chord checks={count} disagreements={bad}"


MALFORMED = [
    "X1+,U1+",
    "U1+,O1",
    "U1+,O1+,",
    "U0+,O0+",
    "O1+,U1-",
    "U1+,U1+",
    "U1+,O1+,U1+",
    "U1+",
    "U1+;O1+",
    "U1+,O2+",
]


def random_code(rng: random.Random, d: GaussDiagram) -> str:
    """Serialize with random labels, rotation and spacing."""
    labels = rng.sample(range(1, 100), d.n_chords)
    k = rng.randrange(max(1, len(d.endpoints)))
    eps = d.endpoints[k:] + d.endpoints[:k]
    toks = [
        f"{e.role.letter}{labels[e.chord - 1]}{'+' if d.signs[e.chord - 1] > 0 else '-'}"
        for e in eps
    ]
    return ",".join(rng.choice(["", " "]) + t + rng.choice(["", " "]) for t in toks)


def check_codec(trials: int = 10_000, seed: int = 11) -> Result:
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        d = random_diagram(rng, rng.randint(0, 8))
        if canonical_key(parse_gauss_code(to_gauss_code(d))) != canonical_key(d):
            bad += 1
        if canonical_key(parse_gauss_code(random_code(rng, d))) != canonical_key(d):
            bad += 1
    accepted = []
    for text in MALFORMED:
        try:
            parse_gauss_code(text)
            accepted.append(text)
        except GaussCodeError as exc:
            if exc.position is None:
                accepted.append(text)
    return bad == 0 and not accepted, f"round-trip failures={bad} malformed accepted/unpositioned={accepted}"


def _corrupt_key(key: str) -> str:
    return "U1+,O1+" if key != "U1+,O1+" else ""


def check_certificates(seed: int = 3) -> Result:
    rng = random.Random(seed)
    certs: list[Certificate] = []
    for i in range(1, 4):
        certs.append(certify_vu(k_family(i), SearchBudget(max_chords=2 * i, max_flips=i)).certificate)
    for n2 in range(1, 3):
        d2 = kpq_family(1, 2, n2)
        certs.append(find_homotopy(d2, kpq_family(1, 2, 0), SearchBudget(d2.n_chords, n2)))
    for _ in range(20):
        d = random_diagram(rng, rng.randint(1, 3))
        try:
            certs.append(find_homotopy(d, GaussDiagram(), SearchBudget(d.n_chords + 1, 3, 20_000)))
        except NotFoundWithinBudget:
            continue
    invalid = sum(not verify_certificate(c).ok for c in certs)
    roundtrip = sum(not verify_certificate(Certificate.from_json(c.to_json())).ok for c in certs)
    missed = 0
    mutations = 0
    for c in certs:
        for idx, step in enumerate(c.steps):
            steps = list(c.steps)
            steps[idx] = Step(step.move, _corrupt_key(step.key))
            bad = Certificate(c.start, tuple(steps), c.end, c.flip_count)
            res = verify_certificate(bad)
            mutations += 1
            if res.ok or res.failed_at != idx:
                missed += 1
        wrong_count = Certificate(c.start, c.steps, c.end, c.flip_count + 1)
        mutations += 1
        missed += verify_certificate(wrong_count).ok
    ok = invalid == 0 and roundtrip == 0 and missed == 0 and mutations > 0
    return ok, (
        f"certificates={len(certs)} invalid={invalid} json_roundtrip_failures={roundtrip} "
        f"mutations={mutations} undetected={missed}"
    )


CRITERIA: list[tuple[str, Callable[[], Result]]] = [
    ("1 P closed form for K_i", check_p_ki),
    ("2 P closed form for K_n^{p,q}", check_p_kpq),
    ("3 u closed form and class separation", check_u_kpq),
    ("4 vu(K_i) = i certified exact", check_vu_ki),
    ("5 rvu(K_n2, K_n1) = n2 - n1 certified exact", check_rvu_kpq),
    ("6 invariance under moves and flip law", check_invariance),
    ("7 chord index vs arc oracle", check_oracle),
    ("8 codec round trip and rejection", check_codec),
    ("9 certificate integrity", check_certificates),
]


def run_all(echo: Callable[[str], None] = print) -> bool:
    all_ok = True
    for name, fn in CRITERIA:
        t0 = time.perf_counter()
        ok, detail = fn()
        all_ok &= ok
        echo(f"{'PASS' if ok else 'FAIL'}  {name}  [{time.perf_counter() - t0:.2f}s]  {detail}")
    return all_ok
