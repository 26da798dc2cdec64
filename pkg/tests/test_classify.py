import math
import random
from fractions import Fraction

import pytest

from braiddyn.braidword import (
    BraidWord,
    TwistLetter,
    burau,
    burau_equal,
    parse_word,
    to_normal_form,
)
from braiddyn.classify import (
    classify,
    estimate_growth,
    growth_periodic,
    growth_reducible,
    reducible_witness,
)

GOLDEN = (1 + math.sqrt(5)) / 2
PA5 = math.log(2 * math.sqrt(math.sqrt(5) + 2) + math.sqrt(5) + 2)
PA4 = math.log(5 + 2 * math.sqrt(6))


def random_word(rng, n, max_len):
    k = rng.randint(0, max_len)
    return BraidWord(n, tuple((rng.choice((1, 2)), rng.choice((1, -1))) for _ in range(k)))


# --- growth formulas -----------------------------------------------------------


def test_growth_periodic_values():
    assert growth_periodic(5, 1, -1).slope == 2
    assert growth_periodic(5, 1, 3).slope == -6
    assert growth_periodic(4, 4, 1).slope == Fraction(-1, 2)
    assert growth_periodic(3, 6, 3).slope == -1
    with pytest.raises(ValueError):
        growth_periodic(5, 0, 1)


def test_growth_reducible_values():
    g = growth_reducible(5, 1, 1, 0)
    assert (g.slope_neg, g.slope_pos) == (-1, 0)  # h_t(sigma_i) = max(0, -t)
    g = growth_reducible(5, 1, -1, 0)
    assert (g.slope_neg, g.slope_pos) == (0, 1)  # h_t(sigma_i^-1) = max(0, t)
    g = growth_reducible(5, 2, -2, 1)
    assert (g.slope_neg, g.slope_pos) == (-2, 0)
    g = growth_reducible(6, 1, 3, -1)
    assert (g.slope_neg, g.slope_pos) == (-2, 1)
    with pytest.raises(ValueError):
        growth_reducible(5, 1, 0, 1)


def test_growth_descriptions_evaluate():
    g = growth_reducible(5, 1, 1, 0)
    assert g.evaluate(-2.0) == 2.0
    assert g.evaluate(1.5) == 0.0
    assert growth_periodic(5, 5, 5).evaluate(0.25) == -0.5


# --- reducible witness ----------------------------------------------------------


def test_reducible_witness_single_twist():
    nf = to_normal_form(BraidWord.generator(5, 1))
    i, k, l, conj = reducible_witness(5, nf, "upper")
    assert (i, k, l) == (1, 1, 0)
    assert conj.letters == ()


def test_reducible_witness_n5_worked_example():
    res = classify(5, parse_word("s2 s1 s2 s1^-1 s2 s1 s2^-1 s1 s2^3 s1", 5))
    assert res.braid_type == "reducible"
    assert res.params == (2, -2, 1)
    assert res.h0() == 0.0
    # final conjugate normal form sigma_{gamma P_1} sigma_{P_1} gamma^3
    assert res.normal_form.blocks == (
        (TwistLetter(1, 0), 1),
        (TwistLetter(1, 1), 1),
    )
    assert res.normal_form.gamma_exp == 3
    from braiddyn.fusion import eval_mass

    at0 = [[eval_mass(res.matrix[r][c], 0.0) for c in range(2)] for r in range(2)]
    assert at0[0][0] == pytest.approx(1.0)
    assert at0[0][1] == 0
    assert at0[1][0] == pytest.approx(2 * GOLDEN, abs=1e-9)
    assert at0[1][1] == pytest.approx(1.0)


# --- classification fixtures ------------------------------------------------------


def test_classify_n5_pseudo_anosov():
    res = classify(5, parse_word("s1 s1 s2 s2", 5))
    assert res.braid_type == "pseudo_anosov"
    assert res.h0() == pytest.approx(PA5, abs=1e-9)
    # one shortening round: s1 s1 s2 s2 ~ sigma_{P_1} sigma_{gamma^3 P_1} gamma
    assert res.rounds == 1
    assert res.normal_form.blocks == (
        (TwistLetter(1, 3), 1),
        (TwistLetter(1, 0), 1),
    )
    assert res.normal_form.gamma_exp == 1


def test_classify_n4_pseudo_anosov():
    res = classify(4, parse_word("s2^2 s1^3", 4))
    assert res.braid_type == "pseudo_anosov"
    assert res.h0() == pytest.approx(PA4, abs=1e-9)


def test_classify_n4_periodic():
    w = parse_word("s2 s1 s2 s1^-1 s2^-1 s1", 4)
    res = classify(4, w)
    assert res.braid_type == "periodic"
    assert res.h0() == 0.0
    assert res.params == (4, 1)
    # out(beta) is gamma itself here
    assert res.out_beta == BraidWord.gamma_power(4, 1)
    assert burau_equal(
        burau(res.conjugator * w * res.conjugator.inverse()), burau(res.out_beta)
    )


def test_classify_n4_parity_obstructed_word():
    # s2^-2 s1 s2 has exponent sums (1, -1); any sigma_i^k chi^l conjugate
    # would need an even entry in one slot, so no reducible witness exists
    # and the closed-path matrix is genuinely full.
    w = parse_word("s2^-2 s1 s2", 4)
    e1, e2 = w.exponent_sums()
    # sigma_1^k chi^l has even s2-sum, sigma_2^k chi^l even s1-sum; both fail
    assert e1 % 2 == 1 and e2 % 2 == 1
    res = classify(4, w)
    assert res.braid_type == "pseudo_anosov"
    assert res.h0() == pytest.approx(math.log(2 + math.sqrt(3)), abs=1e-9)


def test_classify_identity_and_gamma_powers():
    res = classify(5, parse_word("", 5))
    assert res.braid_type == "periodic"
    assert res.growth.slope == 0
    for n in (3, 4, 5, 6, 8):
        for l in (-2, -1, 1, 2):
            res = classify(n, BraidWord.gamma_power(n, l * n))
            assert res.braid_type == "periodic"
            assert res.growth.slope == -2 * l


def test_classify_generators_reducible():
    for n in range(3, 9):
        for i in (1, 2):
            for sign, slopes in ((1, (-1, 0)), (-1, (0, 1))):
                res = classify(n, BraidWord.generator(n, i, sign))
                assert res.braid_type == "reducible"
                g = res.growth
                assert (g.slope_neg, g.slope_pos) == slopes


def test_classify_n3_classical_dilatation():
    # for n=3 the group is the three-strand braid group, where s1 s2^-1
    # has the classical dilatation (3+sqrt5)/2
    res = classify(3, parse_word("s1 s2^-1", 3))
    assert res.braid_type == "pseudo_anosov"
    assert res.h0() == pytest.approx(math.log((3 + math.sqrt(5)) / 2), abs=1e-12)


def test_classify_odd_half_twist_periodic():
    # sigma_1 sigma_2 sigma_1 squares to the n=3 full twist gamma^3
    res = classify(3, parse_word("s1 s2 s1", 3))
    assert res.braid_type == "periodic"
    assert res.params == (6, 3)
    assert res.growth.slope == -1
    assert burau_equal(
        burau(res.out_beta ** 6), burau(BraidWord.gamma_power(3, 9))
    )


def test_trichotomy_matches_zero_pattern():
    from braiddyn.automaton import zero_pattern

    rng = random.Random(31)
    seen = set()
    for n in (3, 4, 5):
        for _ in range(40):
            res = classify(n, random_word(rng, n, 10))
            if res.matrix is None:
                assert res.braid_type == "periodic"
                continue
            pattern = zero_pattern(res.matrix)
            seen.add(pattern)
            if pattern == "full":
                assert res.braid_type == "pseudo_anosov"
            else:
                assert res.braid_type == "reducible"
    assert {"full", "upper", "lower"} <= seen


def test_witness_soundness_random():
    rng = random.Random(91)
    for n in (3, 4, 5, 6):
        for _ in range(20):
            w = random_word(rng, n, 10)
            res = classify(n, w)
            assert burau_equal(
                burau(res.conjugator * w * res.conjugator.inverse()),
                burau(res.out_beta),
            ), (n, w.text())


def test_periodic_soundness_random():
    rng = random.Random(17)
    checked = 0
    for n in (3, 4, 5):
        for _ in range(30):
            w = random_word(rng, n, 8)
            res = classify(n, w)
            if res.braid_type != "periodic":
                continue
            k, l = res.params
            if k > 12:  # keep the exact power computation small
                continue
            checked += 1
            assert burau_equal(
                burau(res.out_beta ** k), burau(BraidWord.gamma_power(n, l * n))
            )
    assert checked > 5


def test_pa_growth_function_is_path_independent():
    # conjugates land on different closed paths with different matrices;
    # their h_t functions must still agree at every t, which pins all the
    # s-exponents in the support tables and the wraparound shifts
    rng = random.Random(12345)
    for n in (4, 5, 6):
        for _ in range(25):
            w = random_word(rng, n, 10)
            res = classify(n, w)
            if res.braid_type != "pseudo_anosov":
                continue
            c = random_word(rng, n, 6)
            res2 = classify(n, c * w * c.inverse())
            for t in (-0.7, -0.2, 0.4, 1.1):
                assert res2.growth.evaluate(t) == pytest.approx(
                    res.growth.evaluate(t), abs=1e-9
                ), (n, w.text(), c.text(), t)


def test_conjugation_invariance():
    rng = random.Random(47)
    for n in (3, 4, 5, 6):
        for _ in range(15):
            w = random_word(rng, n, 9)
            c = random_word(rng, n, 6)
            res = classify(n, w)
            res_c = classify(n, c * w * c.inverse())
            assert res_c.braid_type == res.braid_type
            assert res_c.h0() == pytest.approx(res.h0(), abs=1e-9)


def test_loop_terminates_within_bound():
    rng = random.Random(3)
    for n in (3, 4, 5, 6, 7):
        for _ in range(20):
            w = random_word(rng, n, 12)
            res = classify(n, w)
            assert res.rounds <= to_normal_form(w).length() + 1


# --- independent entropy oracle ------------------------------------------------


def _artin_gen_at_minus_one(nstrands, i):
    """Reduced Burau matrix of the i-th Artin generator of B_nstrands at t=-1."""
    import numpy as np

    size = nstrands - 1
    m = np.eye(size)
    j = i - 1
    if j - 1 >= 0:
        m[j - 1, j] = -1.0
    m[j, j] = 1.0
    if j + 1 < size:
        m[j + 1, j] = 1.0
    return m


def _strand_image_spectral_log(n, word):
    """log spectral radius of the word's image in the n-strand braid group.

    s1 maps to the product of the odd-index Artin generators, s2 to the
    even-index ones (disjoint supports, so each block is well defined);
    the homology action of the image bounds its entropy from below.
    """
    import numpy as np

    blocks = {}
    for g, idx in ((1, range(1, n, 2)), (2, range(2, n, 2))):
        m = np.eye(n - 1)
        for i in idx:
            m = m @ _artin_gen_at_minus_one(n, i)
        blocks[(g, 1)] = m
        blocks[(g, -1)] = np.linalg.inv(m)
    out = np.eye(n - 1)
    for letter in word.letters:
        out = out @ blocks[letter]
    return math.log(max(abs(np.linalg.eigvals(out))))


def test_h0_matches_strand_image_entropy():
    # end-to-end oracle sharing nothing with the mass machinery: on every
    # sampled word the computed h0 coincides with the log spectral radius
    # of the braid's image under the odd/even generator-block embedding
    rng = random.Random(314)
    for n, text in ((5, "s1 s1 s2 s2"), (4, "s2^2 s1^3"), (4, "s2^-2 s1 s2")):
        w = parse_word(text, n)
        assert classify(n, w).h0() == pytest.approx(
            _strand_image_spectral_log(n, w), abs=1e-9
        )
    for n in (4, 5, 6):
        for _ in range(40):
            w = random_word(rng, n, 9)
            res = classify(n, w)
            assert res.h0() == pytest.approx(
                _strand_image_spectral_log(n, w), abs=1e-6
            ), (n, w.text(), res.braid_type)


# --- estimator ---------------------------------------------------------------------


def test_estimator_on_fixtures():
    for n, text, growth in (
        (5, "s1 s1 s2 s2", PA5),
        (4, "s2^2 s1^3", PA4),
    ):
        w = parse_word(text, n)
        res = classify(n, w)
        for t in (-0.5, 0.0, 0.5):
            est = estimate_growth(n, w, N=24, t=t)
            assert est == pytest.approx(res.growth.evaluate(t), abs=0.08)
        assert estimate_growth(n, w, N=24, t=0.0) == pytest.approx(growth, abs=0.05)


def test_estimator_on_gamma():
    for n in (3, 4, 5, 6):
        est = estimate_growth(n, BraidWord.gamma_power(n, 1), N=10, t=0.0)
        assert abs(est) < 1e-9


def test_estimator_rejects_tiny_n_steps():
    with pytest.raises(ValueError):
        estimate_growth(5, parse_word("s1", 5), N=1)
