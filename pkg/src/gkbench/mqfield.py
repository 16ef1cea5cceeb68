"""Exact arithmetic in the multiquadratic tower Q(sqrt(p1), ..., sqrt(pn)).

An element is a finite rational combination of square-free radical products
sqrt(prod_{i in S} p_i), stored sparsely as a map {index subset S: rational}.
The empty subset carries the rational part.  Multiplication uses
sqrt(p_i) * sqrt(p_i) = p_i, so overlapping subsets contribute an integer
prefactor and the symmetric difference of the subsets.

The field carries n commuting automorphisms: f_i negates sqrt(p_i) and fixes
every other generator.  An element is fixed by all of them exactly when it is
rational, which is the test `fixed_by_all` implements (structurally, with the
automorphisms replayed as a cross-check).

Values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (basis primes are small)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def first_primes(count: int) -> tuple[int, ...]:
    out = []
    candidate = 2
    while len(out) < count:
        if is_prime(candidate):
            out.append(candidate)
        candidate += 1
    return tuple(out)


class PrimeBasis:
    """A strictly increasing tuple of distinct primes p_1 < p_2 < ... < p_n."""

    __slots__ = ("primes",)

    def __init__(self, primes):
        primes = tuple(int(p) for p in primes)
        for p in primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError("primes must be strictly increasing with no duplicates")
        self.primes = primes

    @classmethod
    def first(cls, n: int) -> "PrimeBasis":
        """The basis made of the first n primes."""
        return cls(first_primes(n))

    def __len__(self):
        return len(self.primes)

    def __eq__(self, other):
        return isinstance(other, PrimeBasis) and self.primes == other.primes

    def __hash__(self):
        return hash(self.primes)

    def __repr__(self):
        return f"PrimeBasis{self.primes}"

    def prime(self, i: int) -> int:
        """The i-th basis prime, 1-indexed; raises IndexError out of range."""
        if not 1 <= i <= len(self.primes):
            raise IndexError(
                f"radical index {i} outside basis range 1..{len(self.primes)}"
            )
        return self.primes[i - 1]

    # --- element constructors -------------------------------------------

    def zero(self) -> "MQElem":
        return MQElem(self, {})

    def one(self) -> "MQElem":
        return self.rational(1)

    def rational(self, value) -> "MQElem":
        return MQElem(self, {frozenset(): Fraction(value)})

    def radical(self, i: int) -> "MQElem":
        """sqrt(p_i) as an element."""
        self.prime(i)
        return MQElem(self, {frozenset({i}): Fraction(1)})

    def element(self, coeffs) -> "MQElem":
        return MQElem(self, coeffs)


class MQElem:
    """Element of the multiquadratic field over a fixed PrimeBasis.

    `coeffs` maps frozensets of radical indices to nonzero Fractions; the
    canonical sparse form (zero coefficients dropped) makes equality
    structural.
    """

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: PrimeBasis, coeffs):
        n = len(basis)
        clean = {}
        for subset, value in dict(coeffs).items():
            subset = frozenset(int(i) for i in subset)
            for i in subset:
                if not 1 <= i <= n:
                    raise IndexError(
                        f"radical index {i} outside basis range 1..{n}"
                    )
            value = Fraction(value)
            if value:
                clean[subset] = value
        self.basis = basis
        self.coeffs = clean

    # --- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_rational(self) -> bool:
        """True iff only the empty-subset (rational) component is present."""
        return all(not s for s in self.coeffs)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element has radical components")
        return self.coeffs.get(frozenset(), Fraction(0))

    def fixed_by_all(self) -> bool:
        """True iff every automorphism f_i fixes the element, i.e. iff it is
        rational.  The structural answer is cross-checked by actually applying
        every f_i."""
        structural = self.is_rational()
        replay = all(
            self.apply_f(i) == self for i in range(1, len(self.basis) + 1)
        )
        if replay != structural:
            raise ArithmeticError(
                "fixed-field cross-check disagrees with the sparse form"
            )
        return structural

    # --- ring operations --------------------------------------------------

    def _check_basis(self, other: "MQElem"):
        if self.basis != other.basis:
            raise ValueError("prime basis mismatch")

    def __add__(self, other):
        if not isinstance(other, MQElem):
            return NotImplemented
        self._check_basis(other)
        out = dict(self.coeffs)
        for subset, value in other.coeffs.items():
            out[subset] = out.get(subset, Fraction(0)) + value
        return MQElem(self.basis, out)

    def __neg__(self):
        return MQElem(self.basis, {s: -v for s, v in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, MQElem):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MQElem):
            return NotImplemented
        self._check_basis(other)
        out = {}
        for s, a in self.coeffs.items():
            for t, b in other.coeffs.items():
                factor = a * b
                for i in s & t:
                    factor *= self.basis.prime(i)
                key = s ^ t
                acc = out.get(key)
                out[key] = factor if acc is None else acc + factor
        return MQElem(self.basis, out)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = self.basis.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> "MQElem":
        """Multiplicative inverse by recursive conjugation.

        Split off the highest radical: a = u + v*sqrt(p_k) with u, v over the
        lower indices, then a^-1 = (u - v*sqrt(p_k)) * (u^2 - v^2*p_k)^-1,
        recursing into the subfield; the base case inverts a rational.
        """
        if not self.coeffs:
            raise ZeroDivisionError("cannot invert zero")
        top = max((max(s) for s in self.coeffs if s), default=0)
        if top == 0:
            return MQElem(self.basis, {frozenset(): 1 / self.coeffs[frozenset()]})
        lower = {}
        upper = {}
        for subset, value in self.coeffs.items():
            if top in subset:
                upper[subset - {top}] = value
            else:
                lower[subset] = value
        u = MQElem(self.basis, lower)
        v = MQElem(self.basis, upper)
        norm = u * u - v * v * self.basis.rational(self.basis.prime(top))
        if not norm:
            # impossible for a nonzero element of a field; guarded anyway
            raise ArithmeticError("conjugate norm vanished for a nonzero element")
        conj = dict(lower)
        for subset, value in upper.items():
            conj[subset | {top}] = -value
        return MQElem(self.basis, conj) * norm.inv()

    # --- automorphisms ----------------------------------------------------

    def apply_f(self, i: int) -> "MQElem":
        """The automorphism f_i: negate sqrt(p_i), fix every other generator."""
        self.basis.prime(i)  # validates the index
        return MQElem(
            self.basis,
            {s: (-v if i in s else v) for s, v in self.coeffs.items()},
        )

    # --- comparison / hashing / rendering ---------------------------------

    def _key(self):
        return tuple(
            (tuple(sorted(s)), v)
            for s, v in sorted(self.coeffs.items(), key=lambda kv: tuple(sorted(kv[0])))
        )

    def __eq__(self, other):
        return (
            isinstance(other, MQElem)
            and self.basis == other.basis
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.basis, self._key()))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for subset in sorted(self.coeffs, key=lambda s: tuple(sorted(s))):
            value = self.coeffs[subset]
            sign = "-" if value < 0 else "+"
            mag = abs(value)
            factors = [f"s{i}" for i in sorted(subset)]
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MQElem({self})"
