from random import Random

import pytest

from naive_skein import naive_homfly_framed

from knitweave.braid import BraidWord
from knitweave.diagram import Crossing, PlanarDiagram, braid_closure
from knitweave.laurent import LaurentVZ, LaurentZ, delta_pow
from knitweave.skein import (
    extreme_coeffs,
    homfly,
    homfly_framed,
    homfly_unframed,
    mfw_check,
    mp_vanishing,
)

TREFOIL_H = LaurentVZ({(-1, 0): 2, (1, 0): -1, (-1, 2): 1})


def _random_word(rng: Random, n: int, max_len: int = 7) -> BraidWord:
    if n == 1:
        return BraidWord(1, ())
    return BraidWord(
        n,
        tuple(
            rng.choice((1, -1)) * rng.randint(1, n - 1)
            for _ in range(rng.randint(0, max_len))
        ),
    )


def test_unknot_normalization():
    assert homfly_framed(braid_closure(BraidWord(1, ()))) == LaurentVZ.one()


def test_positive_kink_value():
    assert homfly_framed(braid_closure(BraidWord(2, (1,)))) == LaurentVZ.monomial(-1, 0)


def test_negative_kink_value():
    assert homfly_framed(braid_closure(BraidWord(2, (-1,)))) == LaurentVZ.monomial(1, 0)


def test_hopf_link_by_hand():
    expected = delta_pow(1) + LaurentVZ.monomial(-1, 1)
    assert homfly_framed(braid_closure(BraidWord(2, (1, 1)))) == expected


def test_trefoil_by_hand():
    assert homfly_framed(braid_closure(BraidWord(2, (1, 1, 1)))) == TREFOIL_H


def test_unframed_values():
    assert homfly_unframed(braid_closure(BraidWord(2, (1,)))) == LaurentVZ.one()
    assert homfly_unframed(braid_closure(BraidWord(2, (1, 1, 1)))) == LaurentVZ(
        {(2, 0): 2, (4, 0): -1, (2, 2): 1}
    )
    assert homfly_unframed(braid_closure(BraidWord(2, (-1, -1, -1)))) == LaurentVZ(
        {(-2, 0): 2, (-4, 0): -1, (-2, 2): 1}
    )


def test_unlinks():
    for k in range(1, 5):
        d = braid_closure(BraidWord(k, ()))
        assert homfly_framed(d) == delta_pow(k - 1)


def test_homfly_result_invariants():
    r = homfly(braid_closure(BraidWord(2, (1, 1, 1))))
    assert r.unframed == LaurentVZ.monomial(r.writhe, 0) * r.framed
    assert mfw_check(r.framed, r.seifert_count)


def test_extreme_coeffs_examples():
    assert extreme_coeffs(delta_pow(1), 2) == (LaurentZ.term(-1), LaurentZ.term(-1, -1))
    assert extreme_coeffs(TREFOIL_H, 2) == (
        LaurentZ({0: 2, 2: 1}),
        LaurentZ({0: -1}),
    )
    assert extreme_coeffs(LaurentVZ.monomial(-1, 0), 2) == (
        LaurentZ.one(),
        LaurentZ.zero(),
    )


def test_mfw_check_examples():
    assert mfw_check(LaurentVZ.one(), 1)
    assert mfw_check(LaurentVZ.monomial(-1, 0), 2)
    assert not mfw_check(LaurentVZ.monomial(2, 0), 2)
    assert mfw_check(LaurentVZ.zero(), 1)


def test_mp_vanishing_examples():
    d = braid_closure(BraidWord(2, (1,)))
    assert mp_vanishing(d) == (True, False)
    assert not homfly_framed(d).coeff_of_v(1)
    assert mp_vanishing(braid_closure(BraidWord(2, (-1,)))) == (False, True)
    assert mp_vanishing(braid_closure(BraidWord(2, (1, 1)))) == (False, False)


def test_rejects_non_planar():
    d = PlanarDiagram(
        [
            Crossing(1, under_in=1, over_in=2, under_out=3, over_out=4),
            Crossing(1, under_in=3, over_in=4, under_out=1, over_out=2),
        ]
    )
    with pytest.raises(ValueError):
        homfly_framed(d)


def test_markov_conjugation_invariance():
    rng = Random(1001)
    for _ in range(40):
        n = rng.randint(2, 4)
        u = _random_word(rng, n, 4)
        v = _random_word(rng, n, 4)
        assert homfly_framed(braid_closure(u + v)) == homfly_framed(
            braid_closure(v + u)
        )


def test_stabilization_scales_by_v():
    rng = Random(1002)
    for _ in range(30):
        n = rng.randint(1, 3)
        w = _random_word(rng, n, 5)
        stabilized = BraidWord(n + 1, w.letters + (n,))
        assert homfly_framed(braid_closure(stabilized)) == LaurentVZ.monomial(
            -1, 0
        ) * homfly_framed(braid_closure(w))


def test_mirror_symmetry_consistency():
    # mirroring the diagram substitutes (v, z) -> (v^-1, -z) in H
    rng = Random(1003)
    for _ in range(25):
        n = rng.randint(2, 4)
        w = _random_word(rng, n, 5)
        mirror = BraidWord(n, tuple(-g for g in w.letters))
        h = homfly_framed(braid_closure(w))
        hm = homfly_framed(braid_closure(mirror))
        flipped = LaurentVZ(
            {(-v, z): c * ((-1) ** z) for (v, z), c in h.terms.items()}
        )
        assert hm == flipped


def test_split_diagram_factorization():
    a = braid_closure(BraidWord(2, (1, 1, 1)))
    shift = max(a.arcs) + 5
    moved = [
        Crossing(
            c.sign,
            c.under_in + shift,
            c.over_in + shift,
            c.under_out + shift,
            c.over_out + shift,
        )
        for c in a.crossings
    ]
    d = PlanarDiagram(list(a.crossings) + moved, 0)
    assert homfly_framed(d) == TREFOIL_H * TREFOIL_H * delta_pow(1)


def test_oracle_equivalence_on_random_closures():
    rng = Random(424242)
    for trial in range(40):
        n = rng.randint(1, 4)
        w = _random_word(rng, n, 6)
        d = braid_closure(w)
        if len(d.crossings) > 8:
            continue
        assert naive_homfly_framed(d, seed=trial) == homfly_framed(d), (
            f"oracle mismatch on closure of {w.letters} ({n} strands)"
        )


def test_oracle_equivalence_with_kinks_and_splits():
    d = braid_closure(BraidWord(3, (1, 1, -2)))
    assert naive_homfly_framed(d, seed=9) == homfly_framed(d)
    d = braid_closure(BraidWord(4, (1, 3)))  # split-ish wiring across strands
    assert naive_homfly_framed(d, seed=10) == homfly_framed(d)


def test_evaluation_is_deterministic():
    w = BraidWord(3, (1, -2, 1, -2))
    a = homfly_framed(braid_closure(w))
    b = homfly_framed(braid_closure(w))
    assert a == b and a.to_json_dict() == b.to_json_dict()
