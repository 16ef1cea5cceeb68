"""Exact arithmetic in the prime-power cyclotomic fields Q(zeta), zeta a
primitive p**(2t)-th root of unity.

Elements are rational coefficient vectors of fixed length phi(p**(2t)),
read as polynomials in zeta reduced modulo the prime-power cyclotomic
polynomial  sum_{j<p} X**(j * p**(2t-1)).  Equality is componentwise;
inverses come from the extended Euclidean algorithm in Q[X].

The degenerate level t = 0 (the rationals, zeta = 1, modulus X - 1) is
admitted so that maps out of the commutative base algebra can be checked
with the same machinery.
"""

from __future__ import annotations

from fractions import Fraction

from .mqfield import is_prime


# --- dense polynomial helpers over Fraction (little-endian coefficient lists)


def _trim(coeffs):
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return _trim(out)


def _poly_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quot = [Fraction(0)] * max(0, len(rem) - len(b) + 1)
    lead = b[-1]
    while len(rem) >= len(b):
        factor = rem[-1] / lead
        shift = len(rem) - len(b)
        quot[shift] = factor
        for i, cb in enumerate(b):
            rem[shift + i] -= factor * cb
        _trim(rem)
        if not rem:
            break
    return _trim(quot), rem


def _poly_xgcd(a, b):
    """(g, s, t) with s*a + t*b = g, g monic unless zero."""
    old_r, r = list(a), list(b)
    old_s, s = [Fraction(1)], []
    old_t, t = [], [Fraction(1)]
    while r:
        q, rem = _poly_divmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, _trim([x - y for x, y in _zip_pad(old_s, _poly_mul(q, s))])
        old_t, t = t, _trim([x - y for x, y in _zip_pad(old_t, _poly_mul(q, t))])
    if old_r:
        lead = old_r[-1]
        old_r = [c / lead for c in old_r]
        old_s = [c / lead for c in old_s]
        old_t = [c / lead for c in old_t]
    return old_r, old_s, old_t


def _zip_pad(a, b):
    n = max(len(a), len(b))
    pad = lambda xs: list(xs) + [Fraction(0)] * (n - len(xs))
    return zip(pad(a), pad(b))


class CycField:
    """Q(zeta) with zeta a primitive p**(2t)-th root of unity."""

    __slots__ = ("p", "t", "m", "degree", "modulus")

    def __init__(self, p: int, t: int):
        p = int(p)
        t = int(t)
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if t < 0:
            raise ValueError("tower level must be nonnegative")
        self.p = p
        self.t = t
        self.m = p ** (2 * t)
        if t == 0:
            # degenerate level: Q itself, zeta = 1
            self.degree = 1
            self.modulus = (Fraction(-1), Fraction(1))  # X - 1
        else:
            self.degree = p ** (2 * t - 1) * (p - 1)
            mod = [Fraction(0)] * (self.degree + 1)
            step = p ** (2 * t - 1)
            for j in range(p):
                mod[j * step] = Fraction(1)
            self.modulus = tuple(mod)

    def __eq__(self, other):
        return isinstance(other, CycField) and (self.p, self.t) == (other.p, other.t)

    def __hash__(self):
        return hash((self.p, self.t))

    def __repr__(self):
        return f"CycField(p={self.p}, t={self.t})"

    # --- element constructors ----------------------------------------------

    def element(self, coeffs) -> "CycElem":
        """Element from an arbitrary-length coefficient list, reduced."""
        poly = _trim([Fraction(c) for c in coeffs])
        _, rem = _poly_divmod(poly, list(self.modulus))
        padded = rem + [Fraction(0)] * (self.degree - len(rem))
        return CycElem(self, tuple(padded))

    def zero(self) -> "CycElem":
        return CycElem(self, tuple([Fraction(0)] * self.degree))

    def one(self) -> "CycElem":
        return self.rational(1)

    def rational(self, value) -> "CycElem":
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(value)
        return CycElem(self, tuple(coeffs))

    @property
    def zeta(self) -> "CycElem":
        """The class of X: the distinguished primitive m-th root of unity."""
        if self.degree == 1:
            return self.one()
        coeffs = [Fraction(0)] * self.degree
        coeffs[1] = Fraction(1)
        return CycElem(self, tuple(coeffs))


class CycElem:
    """Reduced coefficient vector (length = field degree) over a CycField."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycField, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != field.degree:
            raise ValueError(
                f"coefficient vector has length {len(coeffs)}, expected {field.degree}"
            )
        self.field = field
        self.coeffs = coeffs

    def _check_field(self, other: "CycElem"):
        if self.field != other.field:
            raise ValueError("cyclotomic field mismatch")

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    # --- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, CycElem):
            return NotImplemented
        self._check_field(other)
        return CycElem(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycElem(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, CycElem):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CycElem):
            return NotImplemented
        self._check_field(other)
        product = _poly_mul(list(self.coeffs), list(other.coeffs))
        return self.field.element(product)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = self.field.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> "CycElem":
        """Inverse via the extended Euclidean algorithm against the modulus."""
        if self.is_zero():
            raise ZeroDivisionError("cannot invert zero")
        g, s, _ = _poly_xgcd(_trim(list(self.coeffs)), list(self.field.modulus))
        if len(g) != 1:
            # the modulus is irreducible over Q, so the gcd must be 1
            raise ArithmeticError("nontrivial gcd with the cyclotomic modulus")
        return self.field.element(s)

    def order(self):
        """Least k <= m with self**k == 1, or None if the search exceeds m."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no multiplicative order")
        one = self.field.one()
        acc = self
        for k in range(1, self.field.m + 1):
            if acc == one:
                return k
            acc = acc * self
        return None

    # --- comparison / rendering -------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, CycElem)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                z = "z" if k == 1 else f"z^{k}"
                body = z if mag == 1 else f"{mag}*{z}"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"CycElem({self})"


def tower_check(p: int, t: int) -> bool:
    """Whether the level-(t+1) field really contains the level-t root: the
    p**2-th power of its root must have multiplicative order p**(2t) and be a
    zero of the level-t modulus."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if t < 1:
        raise ValueError("tower level must be positive")
    upper = CycField(p, t + 1)
    image = upper.zeta ** (p * p)
    if image.order() != p ** (2 * t):
        return False
    lower = CycField(p, t)
    total = upper.zero()
    power = upper.one()
    for c in lower.modulus:
        if c:
            total = total + power * upper.rational(c)
        power = power * image
    return total.is_zero()
