"""Root systems, Freudenthal weights, restriction, and the three branching
identifications."""

import random
from fractions import Fraction

import pytest

from cliffdegen.plethysm import (
    EmbeddingData,
    EmbeddingError,
    NonDominantWeight,
    NotACharacter,
    build_embedding,
    dot,
    halfspin_weights,
    identify_irreducible,
    irrep_weights,
    restrict_weights,
    root_system,
    verify_plethysm,
    vscale,
    weyl_dim,
    _adjoint_highest_weight,
    _fundamental_of_dim,
)

HALF = Fraction(1, 2)


@pytest.mark.parametrize(
    "args,count",
    [(("G2",), 6), (("F4",), 24), (("C", 3), 9), (("B", 4), 16), (("D", 5), 20)],
)
def test_positive_root_counts(args, count):
    assert len(root_system(*args).positive_roots) == count


def test_weyl_dim_examples():
    G2 = root_system("G2")
    assert weyl_dim(G2, G2.rho) == 64
    assert weyl_dim(G2, vscale(0, G2.rho)) == 1
    C3 = root_system("C", 3)
    assert weyl_dim(C3, C3.rho) == 512
    with pytest.raises(NonDominantWeight):
        weyl_dim(C3, (-1, 0, 0))


def test_rho_consistency_all_types():
    for args in (("G2",), ("F4",), ("C", 3), ("B", 2), ("B", 3), ("D", 4), ("D", 7)):
        R = root_system(*args)
        assert weyl_dim(R, R.rho) == 2 ** len(R.positive_roots)


def test_g2_adjoint_weights():
    R = root_system("G2")
    adj = _adjoint_highest_weight(R)
    w = irrep_weights(R, adj)
    assert sum(w.values()) == 14
    zero = tuple(Fraction(0) for _ in range(3))
    assert w[zero] == 2
    roots = set(R.positive_roots) | {vscale(-1, a) for a in R.positive_roots}
    assert set(w) - {zero} == roots


def test_trivial_and_f4_fundamental():
    R = root_system("F4")
    assert irrep_weights(R, tuple(Fraction(0) for _ in range(4))) == {
        tuple(Fraction(0) for _ in range(4)): 1
    }
    hw = _fundamental_of_dim(R, 26)
    w = irrep_weights(R, hw)
    assert sum(w.values()) == 26


def test_weyl_invariance_spot_checks():
    for args, lam_of in ((("G2",), lambda R: R.rho), (("C", 3), lambda R: R.rho)):
        R = root_system(*args)
        w = irrep_weights(R, lam_of(R))
        for a in R.simple_roots:
            reflected = {}
            for wt, m in w.items():
                reflected[R.reflect(wt, a)] = reflected.get(R.reflect(wt, a), 0) + m
            assert reflected == w


def test_halfspin_counts_and_examples():
    assert sum(halfspin_weights(7, "+").values()) == 64
    assert sum(halfspin_weights(13, "+").values()) == 4096
    assert halfspin_weights(1, "+") == {(HALF,): 1}
    assert halfspin_weights(1, "-") == {(-HALF,): 1}


def test_halfspin_negation_symmetry():
    for ell in (2, 3, 4, 5):
        plus = halfspin_weights(ell, "+")
        minus = halfspin_weights(ell, "-")
        union = dict(plus)
        for k, v in minus.items():
            union[k] = union.get(k, 0) + v
        assert {vscale(-1, w): m for w, m in union.items()} == union
        if ell % 2 == 0:
            assert {vscale(-1, w): m for w, m in plus.items()} == plus
            assert {vscale(-1, w): m for w, m in minus.items()} == minus


def test_restrict_zero_embedding_preserves_multiplicity():
    E = EmbeddingData(subalgebra="trivial", mu=tuple([(Fraction(0),)] * 3))
    W = halfspin_weights(3, "+")
    out = restrict_weights(W, E)
    assert out == {(Fraction(0),): sum(W.values())}


def test_restrict_validates_shapes():
    E = EmbeddingData(subalgebra="x", mu=((Fraction(1),),))
    with pytest.raises(EmbeddingError):
        restrict_weights({(HALF, HALF): 1}, E)
    with pytest.raises(EmbeddingError):
        restrict_weights({(Fraction(1),): 1}, E)


def test_build_embedding_structure():
    R = root_system("G2")
    w = irrep_weights(R, _adjoint_highest_weight(R))
    E = build_embedding("G2", w)
    assert E.ell == 7
    zero = tuple(Fraction(0) for _ in range(3))
    assert sum(1 for mu in E.mu if mu == zero) == 1
    with pytest.raises(EmbeddingError):
        build_embedding("bad", {(Fraction(1), Fraction(0), Fraction(0)): 1})


def test_g2_restriction_top_weight_is_rho():
    R = root_system("G2")
    E = build_embedding("G2", irrep_weights(R, _adjoint_highest_weight(R)))
    res = restrict_weights(halfspin_weights(7, "+"), E)
    assert sum(res.values()) == 64
    top = max(res, key=lambda w: (dot(w, R.rho), w))
    assert top == R.rho


def test_identify_round_trip_and_reducible():
    R = root_system("G2")
    w = irrep_weights(R, R.rho)
    out = identify_irreducible(w, R)
    assert len(out) == 1 and out[0]["highest_weight"] == R.rho and out[0]["multiplicity"] == 1
    zero = tuple(Fraction(0) for _ in range(3))
    out2 = identify_irreducible({zero: 2}, R)
    assert out2 == [{"highest_weight": zero, "dim": 1, "multiplicity": 2}]


def test_identify_rejects_non_characters():
    R = root_system("C", 3)
    with pytest.raises(NotACharacter):
        identify_irreducible({(Fraction(-1), Fraction(0), Fraction(0)): 1}, R)
    # a dominant weight alone is not a full character unless it is a 1-dim rep
    with pytest.raises(NotACharacter):
        identify_irreducible({(Fraction(2), Fraction(1), Fraction(0)): 1}, R)


def test_peel_off_soundness_random_dominant():
    rng = random.Random(77)
    for args in (("G2",), ("C", 3), ("B", 3), ("D", 4), ("F4",)):
        R = root_system(*args)
        fw = R.fundamental_weights()
        done = 0
        attempts = 0
        while done < 20 and attempts < 200:
            attempts += 1
            lam = tuple(Fraction(0) for _ in range(R.ambient))
            for w in fw:
                if rng.random() < 0.5:
                    lam = tuple(a + b for a, b in zip(lam, w))
            if weyl_dim(R, lam) > 1600:
                continue
            out = identify_irreducible(irrep_weights(R, lam), R)
            assert len(out) == 1 and out[0]["highest_weight"] == lam
            done += 1
        assert done >= 6  # F4 has few small-dimension draws; the rest reach 20


def test_representative_choice_invariance():
    # flipping pair representatives changes the restriction by a Weyl
    # element of so(2l); identified constituents must not change
    R = root_system("G2")
    E = build_embedding("G2", irrep_weights(R, _adjoint_highest_weight(R)))
    flipped = list(E.mu)
    flipped[0] = vscale(-1, flipped[0])
    flipped[3] = vscale(-1, flipped[3])
    E2 = EmbeddingData(subalgebra="G2", mu=tuple(flipped))
    out1 = identify_irreducible(restrict_weights(halfspin_weights(7, "+"), E), R)
    out2 = identify_irreducible(restrict_weights(halfspin_weights(7, "+"), E2), R)
    assert out1 == out2


def test_c3_fundamental_pinning_uses_orthogonality():
    R = root_system("C", 3)
    # both the second and third fundamental have dimension 14; the
    # orthogonality filter must pick the one with even coordinate sum
    dims = sorted(weyl_dim(R, w) for w in R.fundamental_weights())
    assert dims == [6, 14, 14]
    hw = _fundamental_of_dim(R, 14, orthogonal_only=True)
    assert sum(hw) % 2 == 0


def test_verify_plethysm_g2():
    rep = verify_plethysm("g2")
    assert rep["is_single_irreducible"]
    assert rep["matches_rho_module"]
    assert rep["halfspin_agree"]
    assert rep["constituents"]["+"][0]["dim"] == 64


def test_verify_plethysm_c3():
    rep = verify_plethysm("c3")
    assert rep["is_single_irreducible"]
    assert rep["halfspin_agree"]
    assert rep["constituents"]["+"][0]["dim"] == 64
    # computed highest weight 2 eps1 + eps2; the 64-element multiset forces
    # the dimension
    assert rep["constituents"]["+"][0]["highest_weight"] == ["2", "1", "0"]


def test_verify_plethysm_f4():
    rep = verify_plethysm("f4")
    assert rep["is_single_irreducible"]
    assert rep["halfspin_agree"]
    assert rep["constituents"]["+"][0]["dim"] == 4096
    assert rep["constituents"]["+"][0]["highest_weight"] == ["5/2", "1/2", "1/2", "1/2"]


def test_unknown_case_rejected():
    with pytest.raises(ValueError):
        verify_plethysm("e8")
