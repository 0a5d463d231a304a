import pytest

from vknot.diagram import EMPTY, canonical_key, chords_link
from vknot.families import FamilySpec, k_family, kpq_chord_ids, kpq_family, unknot
from vknot.invariants import bridge_count, henrich_P, turaev_u
from vknot.moves import flip, r2_delete
from vknot.poly import SparsePoly


def P_ki(i):
    return SparsePoly({m: 2 for m in range(1, 2 * i, 2)})


def P_kpq(p, q, n):
    terms = {}
    for deg, coef in [(p, q), (q, p)] + [(p + q + 2 * i - 1, 2) for i in range(1, n + 1)]:
        terms[deg] = terms.get(deg, 0) + coef
    return SparsePoly(terms)


def test_unknot():
    d = unknot()
    assert d == EMPTY
    assert bridge_count(d) == 0 and not henrich_P(d) and not turaev_u(d)


def test_k1_code():
    assert str(k_family(1)) == "U1+,U2+,O1+,O2+"
    assert k_family(0) == EMPTY
    with pytest.raises(ValueError):
        k_family(-1)


@pytest.mark.parametrize("i", range(1, 21))
def test_k_family_P_and_bridge(i):
    d = k_family(i)
    assert henrich_P(d) == P_ki(i)
    assert bridge_count(d) == 1
    assert not turaev_u(d)


def test_kpq_base_code():
    assert str(kpq_family(1, 2, 0)) == "U1+,U2+,U3+,O2+,O1+,O3+"
    assert turaev_u(kpq_family(1, 2, 0)) == SparsePoly({1: 2, 2: -1})


@pytest.mark.parametrize("p", range(1, 7))
@pytest.mark.parametrize("q", range(1, 7))
def test_kpq_invariants(p, q):
    for n in range(7):
        d = kpq_family(p, q, n)
        assert henrich_P(d) == P_kpq(p, q, n)
        assert turaev_u(d) == SparsePoly({q: -p}) + SparsePoly({p: q})
        assert bridge_count(d) == 1


def test_kpq_linking_pattern():
    p, q, n = 3, 2, 2
    d = kpq_family(p, q, n)
    ids = kpq_chord_ids(p, q, n)
    axis = [f"v{k}" for k in range(1, p + 1)] + [f"h{k}" for k in range(1, q + 1)]
    diag = [f"dV{k}" for k in range(1, n + 1)] + [f"dH{k}" for k in range(1, n + 1)]
    for a in diag:
        for b in axis + diag:
            if a != b:
                assert chords_link(d, ids[a], ids[b])
    for group in ("v", "h"):
        names = [x for x in axis if x.startswith(group)]
        for a in names:
            for b in names:
                if a != b:
                    assert not chords_link(d, ids[a], ids[b])
    for k in range(1, p + 1):
        for j in range(1, q + 1):
            assert chords_link(d, ids[f"v{k}"], ids[f"h{j}"])


def test_u_distinct_across_classes():
    values = [turaev_u(kpq_family(p, q, 0)) for p in range(1, 7) for q in range(1, 7) if p != q]
    assert len(set(values)) == len(values)


@pytest.mark.parametrize("p,q", [(1, 2), (2, 3), (3, 1), (4, 2)])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_kpq_homotopy_replay(p, q, n):
    ids = kpq_chord_ids(p, q, n)
    d = flip(kpq_family(p, q, n), ids[f"dH{n}"])
    d = r2_delete(d, ids[f"dH{n}"], ids[f"dV{n}"])
    assert canonical_key(d) == canonical_key(kpq_family(p, q, n - 1))


@pytest.mark.parametrize("i", range(1, 8))
def test_k_family_homotopy_replay(i):
    d = r2_delete(flip(k_family(i), 2 * i), 2 * i, 1)
    assert canonical_key(d) == canonical_key(k_family(i - 1))


def test_family_spec():
    assert FamilySpec("Ki", i=2).build() == k_family(2)
    assert FamilySpec("Kpqn", p=1, q=2, n=1).build() == kpq_family(1, 2, 1)
    with pytest.raises(ValueError):
        FamilySpec("Kpqn", p=0, q=2)
    with pytest.raises(ValueError):
        kpq_family(1, 0, 0)
