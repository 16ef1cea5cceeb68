"""Quantum affine spaces: rewriting, products, dimension counts, centrality,
and the homomorphism verifier."""

import random
from math import comb

import pytest

from gkbench.cyclo import CycField
from gkbench.qaffine import (
    FreeWord,
    QAlgebra,
    QPoly,
    central_power_check,
    dim_Vr,
    embed_root,
    gk_profile,
    hom_check,
    normal_form,
    normal_form_random,
    power_is_central,
    power_map_images,
)
from gkbench.growth import GrowthSeries, degree_estimate
from gkbench.sampling import random_qpoly, random_word

ALG = QAlgebra(2, CycField(2, 1))  # q = zeta_4


def test_normal_form_single_swap():
    # x2*x1 -> q^-1 * x1*x2, and q^-1 = -zeta_4
    nf = normal_form(ALG.word([2, 1]))
    assert nf == QPoly(ALG, {(1, 1): ALG.q_inv})
    assert str(nf) == "-z*x1*x2"


def test_normal_form_sorted_word_unchanged():
    nf = normal_form(ALG.word([1, 2]))
    assert nf == QPoly(ALG, {(1, 1): ALG.field.one()})


def test_normal_form_three_letters():
    nf = normal_form(ALG.word([2, 1, 2]))
    assert nf == QPoly(ALG, {(1, 2): ALG.q_inv})


def test_normal_form_confluence_random_orders():
    rng = random.Random(2024)
    algebras = [
        QAlgebra(n, CycField(p, t))
        for n in range(1, 5)
        for p, t in ((2, 1), (3, 1), (2, 2))
    ]
    for _ in range(60):
        alg = rng.choice(algebras)
        word = random_word(rng, alg, max_len=8)
        reference = normal_form(word)
        for _ in range(20):
            assert normal_form_random(word, rng) == reference


def test_mul_examples():
    x1, x2 = ALG.generator(1), ALG.generator(2)
    assert x1 * x2 == QPoly(ALG, {(1, 1): ALG.field.one()})
    assert x2 * x1 == QPoly(ALG, {(1, 1): ALG.q_inv})
    product = (x1 + x2) * (x1 - x2)
    expected = QPoly(
        ALG,
        {
            (2, 0): ALG.field.one(),
            (1, 1): ALG.q_inv - ALG.field.one(),
            (0, 2): -ALG.field.one(),
        },
    )
    assert product == expected


def test_mul_associative_on_randoms():
    rng = random.Random(5150)
    for _ in range(60):
        a = random_qpoly(rng, ALG)
        b = random_qpoly(rng, ALG)
        c = random_qpoly(rng, ALG)
        assert (a * b) * c == a * (b * c)


def test_scalars_are_central():
    rng = random.Random(88)
    s = ALG.scalar(ALG.field.zeta + ALG.field.rational(2))
    for _ in range(30):
        f = random_qpoly(rng, ALG)
        assert s * f == f * s


def test_algebra_mismatch():
    other = QAlgebra(2, CycField(3, 1))
    with pytest.raises(ValueError):
        ALG.one() * other.one()


def test_dim_examples():
    assert dim_Vr(QAlgebra(1, CycField(2, 1)), 5) == 6
    assert dim_Vr(ALG, 2) == 6
    assert dim_Vr(QAlgebra(3, CycField(2, 1)), 4) == 35


def test_dim_matches_binomial():
    for n in range(1, 5):
        alg = QAlgebra(n, CycField(2, 1))
        for r in range(13):
            assert dim_Vr(alg, r) == comb(n + r, r)


def test_gk_profile_degrees():
    for n in (1, 2, 4):
        alg = QAlgebra(n, CycField(2, 1))
        est = degree_estimate(GrowthSeries(gk_profile(alg, 12)))
        assert est.snapped == n and not est.unbounded


def test_central_power_examples():
    assert central_power_check(ALG, 1)
    assert not power_is_central(ALG, 1, 2)
    assert power_is_central(QAlgebra(1, CycField(2, 1)), 1, 1)


def test_central_powers_across_configurations():
    for p, t in ((2, 1), (2, 2), (2, 3), (3, 1)):
        order = p ** (2 * t)
        assert order <= 64
        alg = QAlgebra(2, CycField(p, t))
        for i in (1, 2):
            assert central_power_check(alg, i)
        for k in (1, p, order - 1):
            if 0 < k < order:
                assert not power_is_central(alg, 1, k)


def test_hom_check_power_maps():
    for p in (2, 3):
        for t in (1, 2):
            for n in (2, 3):
                src = QAlgebra(n, CycField(p, t - 1))
                dst = QAlgebra(n, CycField(p, t))
                report = hom_check(src, dst, power_map_images(src, dst, p))
                assert report.ok, (p, t, n)


def test_hom_check_identity_map():
    report = hom_check(ALG, ALG, [ALG.generator(1), ALG.generator(2)])
    assert report.ok


def test_hom_check_rejects_generator_swap():
    report = hom_check(ALG, ALG, [ALG.generator(2), ALG.generator(1)])
    assert not report.ok
    assert report.failing_pair == (1, 2)
    assert report.defect is not None and not report.defect.is_zero()


def test_hom_check_rejects_literal_stage_shift():
    # the candidate "identity on x1..x_{n-1}, x_n -> x_{n+1}^p" does not
    # preserve the mixed relations, so the verifier must reject it
    src = QAlgebra(2, CycField(2, 1))
    dst = QAlgebra(3, CycField(2, 1))
    images = [dst.generator(1), dst.generator(3, 2)]
    report = hom_check(src, dst, images)
    assert not report.ok


def test_embed_root():
    lower, upper = CycField(2, 1), CycField(2, 2)
    image = embed_root(lower, upper)
    assert image == upper.zeta**4
    assert image.order() == 4
    assert embed_root(lower, lower) == lower.zeta
    with pytest.raises(ValueError):
        embed_root(upper, lower)
    with pytest.raises(ValueError):
        embed_root(CycField(3, 1), upper)


def test_hom_check_validation():
    with pytest.raises(ValueError):
        hom_check(ALG, ALG, [ALG.generator(1)])
    other = QAlgebra(2, CycField(2, 2))
    with pytest.raises(ValueError):
        hom_check(ALG, other, [ALG.generator(1), ALG.generator(2)])


def test_word_validation():
    with pytest.raises(IndexError):
        ALG.word([3])
    with pytest.raises(ValueError):
        ALG.generator(1, -1)
    with pytest.raises(IndexError):
        ALG.generator(0)


def test_str_rendering():
    poly = ALG.generator(1, 2) - ALG.generator(2).scale(ALG.field.zeta)
    assert str(poly) == "x1^2 - z*x2"
    assert str(ALG.zero()) == "0"
