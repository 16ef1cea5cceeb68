"""Quantum affine space on n generators over a cyclotomic scalar field:
x_i x_j = q x_j x_i for i < j, with q the field's distinguished root of
unity.  Words in the free generators reduce to a scalar multiple of the
unique sorted monomial (every adjacent swap that moves a higher index left
past a lower one costs a factor q**-1), and polynomials are canonical maps
{exponent vector: nonzero scalar}.

The module also hosts the two structural checks the construction is used
for: centrality of prime-power powers of the generators, and whether a
candidate assignment of generator images extends to a ring map between two
such algebras (verified on the presenting relations, with the source root
embedded into the destination field).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .cyclo import CycElem, CycField
from . import budget


class QAlgebra:
    """Descriptor: generator count n plus the scalar field carrying q."""

    __slots__ = ("n", "field", "q", "q_inv")

    def __init__(self, n: int, field: CycField):
        n = int(n)
        if n < 1:
            raise ValueError("need at least one generator")
        self.n = n
        self.field = field
        self.q = field.zeta
        if self.q.order() != field.m:
            raise ArithmeticError("twist scalar is not primitive of the expected order")
        self.q_inv = self.q.inv()

    @property
    def root_order(self) -> int:
        return self.field.m

    def __eq__(self, other):
        return (
            isinstance(other, QAlgebra)
            and self.n == other.n
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.n, self.field))

    def __repr__(self):
        return f"QAlgebra(n={self.n}, p={self.field.p}, t={self.field.t})"

    # --- element constructors ------------------------------------------------

    def zero(self) -> "QPoly":
        return QPoly(self, {})

    def one(self) -> "QPoly":
        return self.scalar(self.field.one())

    def scalar(self, value: CycElem) -> "QPoly":
        return QPoly(self, {(0,) * self.n: value})

    def generator(self, i: int, power: int = 1) -> "QPoly":
        if not 1 <= i <= self.n:
            raise IndexError(f"generator index {i} outside 1..{self.n}")
        if power < 0:
            raise ValueError("generator exponents must be nonnegative")
        exps = [0] * self.n
        exps[i - 1] = power
        return QPoly(self, {tuple(exps): self.field.one()})

    def word(self, indices, scalar: Optional[CycElem] = None) -> "FreeWord":
        return FreeWord(self, tuple(indices), scalar or self.field.one())


class FreeWord:
    """Unreduced word: a generator-index sequence with a scalar prefactor."""

    __slots__ = ("algebra", "indices", "scalar")

    def __init__(self, algebra: QAlgebra, indices, scalar: CycElem):
        indices = tuple(int(i) for i in indices)
        for i in indices:
            if not 1 <= i <= algebra.n:
                raise IndexError(f"generator index {i} outside 1..{algebra.n}")
        if scalar.field != algebra.field:
            raise ValueError("scalar outside the algebra's field")
        self.algebra = algebra
        self.indices = indices
        self.scalar = scalar

    def __eq__(self, other):
        return (
            isinstance(other, FreeWord)
            and self.algebra == other.algebra
            and self.indices == other.indices
            and self.scalar == other.scalar
        )

    def __repr__(self):
        word = "*".join(f"x{i}" for i in self.indices) or "1"
        return f"FreeWord(({self.scalar})*{word})"


def normal_form(word: FreeWord) -> "QPoly":
    """Reduce a word to its canonical single-term polynomial by bubble sort:
    each adjacent swap x_j x_i -> x_i x_j with j > i multiplies the scalar
    by q**-1."""
    alg = word.algebra
    idx = list(word.indices)
    scalar = word.scalar
    budget.charge(max(1, len(idx) ** 2))
    changed = True
    while changed:
        changed = False
        for k in range(len(idx) - 1):
            if idx[k] > idx[k + 1]:
                idx[k], idx[k + 1] = idx[k + 1], idx[k]
                scalar = scalar * alg.q_inv
                changed = True
    exps = [0] * alg.n
    for i in idx:
        exps[i - 1] += 1
    return QPoly(alg, {tuple(exps): scalar})


def normal_form_random(word: FreeWord, rng) -> "QPoly":
    """Same reduction, but resolving the inversions in an rng-chosen order;
    the result must not depend on the order (confluence)."""
    alg = word.algebra
    idx = list(word.indices)
    scalar = word.scalar
    while True:
        spots = [k for k in range(len(idx) - 1) if idx[k] > idx[k + 1]]
        if not spots:
            break
        k = rng.choice(spots)
        idx[k], idx[k + 1] = idx[k + 1], idx[k]
        scalar = scalar * alg.q_inv
    exps = [0] * alg.n
    for i in idx:
        exps[i - 1] += 1
    return QPoly(alg, {tuple(exps): scalar})


class QPoly:
    """Canonical polynomial: {sorted-monomial exponent vector: nonzero scalar}."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: QAlgebra, terms):
        clean = {}
        for exps, coeff in dict(terms).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != algebra.n:
                raise ValueError(
                    f"exponent vector has length {len(exps)}, expected {algebra.n}"
                )
            if any(e < 0 for e in exps):
                raise ValueError("exponents must be nonnegative")
            if coeff.field != algebra.field:
                raise ValueError("coefficient outside the algebra's field")
            if coeff:
                clean[exps] = coeff
        self.algebra = algebra
        self.terms = clean

    def _check_algebra(self, other: "QPoly"):
        if self.algebra != other.algebra:
            raise ValueError("algebra mismatch")

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # --- ring operations -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        self._check_algebra(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = out.get(exps)
            out[exps] = coeff if acc is None else acc + coeff
        return QPoly(self.algebra, out)

    def __neg__(self):
        return QPoly(self.algebra, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, value: CycElem) -> "QPoly":
        if value.field != self.algebra.field:
            raise ValueError("scalar outside the algebra's field")
        return QPoly(self.algebra, {e: c * value for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        self._check_algebra(other)
        alg = self.algebra
        budget.charge(max(1, len(self.terms) * len(other.terms)))
        out = {}
        for e, a in self.terms.items():
            word_e = _expand(e)
            for f, b in other.terms.items():
                single = normal_form(FreeWord(alg, word_e + _expand(f), a * b))
                for exps, coeff in single.terms.items():
                    acc = out.get(exps)
                    out[exps] = coeff if acc is None else acc + coeff
        return QPoly(alg, out)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not defined here")
        result = self.algebra.one()
        for _ in range(exponent):
            result = result * self
        return result

    # --- comparison / rendering ---------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, QPoly)
            and self.algebra == other.algebra
            and self.terms == other.terms
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):  # x1-leading terms first
            coeff = self.terms[exps]
            text = str(coeff)
            multi = (" + " in text) or (" - " in text)
            word = "*".join(
                (f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}")
                for i, e in enumerate(exps)
                if e
            )
            if not word:
                body = f"({text})" if multi else text
                sign = "+"
                if not multi and body.startswith("-"):
                    sign, body = "-", body[1:]
            elif multi:
                sign, body = "+", f"({text})*{word}"
            elif text == "1":
                sign, body = "+", word
            elif text == "-1":
                sign, body = "-", word
            elif text.startswith("-"):
                sign, body = "-", f"{text[1:]}*{word}"
            else:
                sign, body = "+", f"{text}*{word}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"QPoly({self})"


def _expand(exps: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for i, e in enumerate(exps, start=1):
        out.extend([i] * e)
    return tuple(out)


# --- dimension counting -------------------------------------------------------


def dim_Vr(algebra: QAlgebra, r: int) -> int:
    """Number of sorted monomials of length at most r, by listing them."""
    if r < 0:
        raise ValueError("degree bound must be nonnegative")
    count = 0
    for s in range(r + 1):
        chunk = 0
        for _ in itertools.combinations_with_replacement(range(algebra.n), s):
            chunk += 1
        budget.charge(max(1, chunk))
        count += chunk
    return count


def gk_profile(algebra: QAlgebra, r_max: int) -> list[tuple[int, int]]:
    """Dimension sequence (r, dim V^r) for r = 1..r_max, V spanned by 1 and
    the generators; feed it to the growth estimators."""
    if r_max < 2:
        raise ValueError("r_max must be at least 2")
    return [(r, dim_Vr(algebra, r)) for r in range(1, r_max + 1)]


# --- centrality ------------------------------------------------------------------


def power_is_central(algebra: QAlgebra, i: int, k: int) -> bool:
    """Whether x_i**k commutes with every generator."""
    if not 1 <= i <= algebra.n:
        raise IndexError(f"generator index {i} outside 1..{algebra.n}")
    if k < 0:
        raise ValueError("power must be nonnegative")
    xk = algebra.generator(i, k)
    for j in range(1, algebra.n + 1):
        xj = algebra.generator(j)
        if xj * xk != xk * xj:
            return False
    return True


def central_power_check(algebra: QAlgebra, i: int) -> bool:
    """x_i raised to the root order p**(2t) is central: the crossing factors
    q**(p**(2t)) collapse to 1."""
    return power_is_central(algebra, i, algebra.root_order)


# --- homomorphism checking -----------------------------------------------------------


@dataclass(frozen=True)
class HomCheckReport:
    ok: bool
    failing_pair: Optional[tuple[int, int]]
    defect: Optional[QPoly]

    def __str__(self):
        if self.ok:
            return "ok: all presenting relations preserved"
        i, j = self.failing_pair
        return (
            f"fails on the ({i},{j}) relation: "
            f"image of x{i}*x{j} - q*x{j}*x{i} is {self.defect}"
        )


def embed_root(src: CycField, dst: CycField) -> CycElem:
    """Image of the source field's root inside the destination field.

    Needs the same base prime and a destination level at least the source's;
    the image is the root raised to p**(2*(level gap)), validated by checking
    its multiplicative order.
    """
    if src.p != dst.p:
        raise ValueError(
            f"incompatible scalar fields: base primes {src.p} and {dst.p} differ"
        )
    if src.t > dst.t:
        raise ValueError(
            f"source root of order {src.m} does not live in the level-{dst.t} field"
        )
    image = dst.zeta ** (dst.p ** (2 * (dst.t - src.t)))
    if image.order() != src.m:
        raise ArithmeticError("embedded root has the wrong multiplicative order")
    return image


def hom_check(src: QAlgebra, dst: QAlgebra, images: Sequence[QPoly]) -> HomCheckReport:
    """Does x_i -> images[i-1] extend to a ring map src -> dst?

    Checked on the presenting relations x_i x_j = q_src x_j x_i for i < j
    (the orientation that presents the source), with q_src read inside the
    destination's scalar field.
    """
    if len(images) != src.n:
        raise ValueError(f"expected {src.n} generator images, got {len(images)}")
    for f in images:
        if f.algebra != dst:
            raise ValueError("generator image lies outside the destination algebra")
    q_src = embed_root(src.field, dst.field)
    for i in range(1, src.n + 1):
        for j in range(i + 1, src.n + 1):
            lhs = images[i - 1] * images[j - 1]
            rhs = images[j - 1] * images[i - 1]
            defect = lhs - rhs.scale(q_src)
            if defect:
                return HomCheckReport(False, (i, j), defect)
    return HomCheckReport(True, None, None)


def power_map_images(src: QAlgebra, dst: QAlgebra, exponent: int) -> list[QPoly]:
    """The candidate map x_i -> x_i**exponent, one image per source generator."""
    if dst.n < src.n:
        raise ValueError("destination has fewer generators than the source")
    return [dst.generator(i, exponent) for i in range(1, src.n + 1)]
