"""Seeded random element generators, shared by the verification campaigns
and the bulk randomized tests.  Everything takes an explicit random.Random
so that runs are reproducible from a seed."""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycField
from .mqfield import MQElem, PrimeBasis
from .ordgroup import GroupElem
from .qaffine import FreeWord, QAlgebra, QPoly
from .twistring import TwistedElem


def random_fraction(rng, span: int = 9, max_den: int = 4, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-span, span), rng.randint(1, max_den))
        if value or not nonzero:
            return value


def random_subset(rng, max_index: int, max_size: int = 3) -> frozenset:
    size = rng.randint(0, min(max_size, max_index))
    return frozenset(rng.sample(range(1, max_index + 1), size))


def random_mq(rng, basis: PrimeBasis, max_terms: int = 3, nonzero: bool = False) -> MQElem:
    while True:
        coeffs = {}
        for _ in range(rng.randint(0, max_terms)):
            coeffs[random_subset(rng, len(basis))] = random_fraction(rng)
        elem = MQElem(basis, coeffs)
        if elem or not nonzero:
            return elem


def random_rational_mq(rng, basis: PrimeBasis) -> MQElem:
    return basis.rational(random_fraction(rng))


def random_group(rng, max_index: int = 4, max_exp: int = 3, max_support: int = 3) -> GroupElem:
    support = rng.sample(range(1, max_index + 1), rng.randint(0, min(max_support, max_index)))
    return GroupElem({i: rng.choice([e for e in range(-max_exp, max_exp + 1) if e]) for i in support})


def random_square_group(rng, max_index: int = 4, max_exp: int = 2) -> GroupElem:
    return random_group(rng, max_index, max_exp) ** 2


def random_twisted(
    rng,
    basis: PrimeBasis,
    max_terms: int = 3,
    max_index: int = 4,
    coeff_terms: int = 2,
) -> TwistedElem:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        g = random_group(rng, max_index)
        terms[g] = random_mq(rng, basis, coeff_terms)
    return TwistedElem(basis, terms)


def random_central_twisted(rng, basis: PrimeBasis, max_terms: int = 3, max_index: int = 4) -> TwistedElem:
    """Support inside the squares subgroup, rational coefficients."""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[random_square_group(rng, max_index)] = random_rational_mq(rng, basis)
    return TwistedElem(basis, terms)


def random_cyc(rng, field: CycField, span: int = 4, nonzero: bool = False):
    while True:
        elem = field.element(
            [Fraction(rng.randint(-span, span)) for _ in range(field.degree)]
        )
        if elem or not nonzero:
            return elem


def random_word(rng, algebra: QAlgebra, max_len: int = 8) -> FreeWord:
    length = rng.randint(0, max_len)
    indices = [rng.randint(1, algebra.n) for _ in range(length)]
    return FreeWord(algebra, indices, algebra.field.one())


def random_qpoly(rng, algebra: QAlgebra, max_terms: int = 3, max_exp: int = 2) -> QPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(algebra.n))
        terms[exps] = random_cyc(rng, algebra.field, span=3)
    return QPoly(algebra, terms)
