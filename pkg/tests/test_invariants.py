from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import diagrams
from vknot.diagram import EMPTY, DiagramError, parse_gauss_code
from vknot.families import k_family, kpq_family
from vknot.invariants import (
    bridge_count,
    chord_index,
    chord_report,
    henrich_P,
    rvu_lower_bound,
    turaev_n,
    turaev_u,
    vu_lower_bound,
)
from vknot.moves import enumerate_moves, flip
from vknot.poly import SparsePoly

K1 = "U1+,U2+,O1+,O2+"
K012 = "U1+,U2+,U3+,O2+,O1+,O3+"


def test_bridge_count_examples():
    assert bridge_count(EMPTY) == 0
    assert bridge_count(parse_gauss_code(K1)) == 1
    assert bridge_count(parse_gauss_code("O1+,U2+,O3+,U1+,O2+,U3+")) == 3


@given(diagrams())
def test_bridge_count_zero_iff_empty(d):
    b = bridge_count(d)
    assert (b == 0) == (d.n_chords == 0)
    assert b <= d.n_chords


def test_chord_index_single_chord():
    assert chord_index(parse_gauss_code("U1+,O1+"), 1) == 0


def test_chord_index_missing():
    with pytest.raises(DiagramError):
        chord_index(parse_gauss_code("U1+,O1+"), 2)


@pytest.mark.parametrize("i", range(1, 8))
def test_chord_index_k_family_closed_form(i):
    d = k_family(i)
    assert [chord_index(d, k) for k in d.chords] == [2 * i - 2 * k + 1 for k in range(1, 2 * i + 1)]


def test_chord_index_k012():
    d = parse_gauss_code(K012)
    assert chord_index(d, 3) == -2
    assert chord_index(d, 3, arc="tail_to_head") == 2
    assert chord_index(d, 1) == chord_index(d, 2) == 1


def test_henrich_P_examples():
    assert henrich_P(EMPTY) == SparsePoly()
    assert henrich_P(parse_gauss_code(K1)) == SparsePoly({1: 2})
    assert henrich_P(k_family(2)) == SparsePoly({3: 2, 1: 2})


def test_turaev_u_examples():
    assert turaev_u(EMPTY) == SparsePoly()
    d = parse_gauss_code(K012)
    assert turaev_u(d) == SparsePoly({1: 2, 2: -1})
    assert [turaev_n(d, c) for c in d.chords] == [1, 1, -2]


def test_turaev_u_uses_positive_normalization():
    # a negative chord counts as the reversed positive chord
    d = parse_gauss_code("U1+,U2+,U3+,O2+,O1+,O3+")
    assert turaev_u(flip(d, 3)) == turaev_u(d)


def test_chord_report():
    rows = chord_report(parse_gauss_code(K1))
    assert [(r.chord, r.i_value, r.n_value, r.sign) for r in rows] == [(1, 1, 1, 1), (2, -1, -1, 1)]


def test_vu_lower_bound_examples():
    assert vu_lower_bound(SparsePoly()) == 0
    assert vu_lower_bound(henrich_P(k_family(5))) == 5
    assert vu_lower_bound(SparsePoly({4: 2})) == 1
    assert vu_lower_bound(SparsePoly({2: 1})) == Fraction(1, 2)


def test_rvu_lower_bound_examples():
    p = henrich_P(k_family(3))
    assert rvu_lower_bound(p, p) == 0
    assert rvu_lower_bound(SparsePoly({1: 2}), SparsePoly()) == 1
    for n1 in range(4):
        for n2 in range(4):
            lb = rvu_lower_bound(henrich_P(kpq_family(1, 2, n1)), henrich_P(kpq_family(1, 2, n2)))
            assert lb == abs(n1 - n2)


@given(diagrams(min_chords=1), st.data())
def test_arc_choice_negates_index(d, data):
    c = data.draw(st.integers(1, d.n_chords))
    assert chord_index(d, c, arc="tail_to_head") == -chord_index(d, c)


@given(diagrams(min_chords=2), st.data())
def test_flip_locality(d, data):
    c = data.draw(st.integers(1, d.n_chords))
    e = data.draw(st.integers(1, d.n_chords))
    f = flip(d, e)
    # flip keeps positions and, for chords in first-occurrence order, ids
    assert [x.chord for x in f.endpoints] == [x.chord for x in d.endpoints]
    expected = -chord_index(d, c) if c == e else chord_index(d, c)
    assert chord_index(f, c) == expected


@given(diagrams(min_chords=1, max_chords=8), st.data())
def test_flip_changes_one_P_coefficient_by_two(d, data):
    c = data.draw(st.integers(1, d.n_chords))
    i = chord_index(d, c)
    diff = (henrich_P(flip(d, c)) - henrich_P(d)).terms
    if i == 0:
        assert diff == {}
    else:
        assert diff == {abs(i): -2 * d.signs[c - 1]}


@given(diagrams(min_chords=1, max_chords=8), st.data())
def test_flip_preserves_u(d, data):
    c = data.draw(st.integers(1, d.n_chords))
    assert turaev_u(flip(d, c)) == turaev_u(d)


@settings(max_examples=60, deadline=None)
@given(diagrams(max_chords=5))
def test_reidemeister_moves_preserve_P_and_u(d):
    p, u = henrich_P(d), turaev_u(d)
    for mv, res in enumerate_moves(d, d.n_chords + 2, flips=False):
        assert henrich_P(res) == p, mv
        assert turaev_u(res) == u, mv


def test_poly_format():
    assert str(SparsePoly()) == "0"
    assert str(SparsePoly({1: 2, 2: 1, 4: -1})) == "2t^1 + 1t^2 - 1t^4"
    assert str(SparsePoly({2: -1, 1: 2})) == "2t^1 - 1t^2"
    assert str(SparsePoly({3: -2})) == "-2t^3"


def test_poly_arithmetic_drops_zeros():
    a = SparsePoly({1: 2, 3: 1})
    assert (a - a).terms == {}
    assert (a + SparsePoly({1: -2})).terms == {3: 1}
    assert a == a and hash(a) == hash(SparsePoly({3: 1, 1: 2}))
