"""The free abelian group on generators x1, x2, ... written multiplicatively,
with the total order that compares exponent sequences lexicographically.

An element keeps a finite {index: nonzero exponent} map; indices without an
entry read as exponent zero.  The squares subgroup (every exponent even) and
the sign twist an element induces on the radical generators of an MQElem
live here too: x acts on sqrt(p_i) by the sign (-1)**exponent_i, which makes
the action of the squares subgroup trivial.
"""

from __future__ import annotations

from .mqfield import MQElem

LT, EQ, GT = -1, 0, 1


class GroupElem:
    """Finitely supported integer exponent vector, as a multiplicative element."""

    __slots__ = ("exps", "_hash")

    def __init__(self, exps=()):
        items = exps.items() if hasattr(exps, "items") else exps
        clean = {}
        for i, e in items:
            i = int(i)
            e = int(e)
            if i < 1:
                raise ValueError("generator indices start at 1")
            if e:
                clean[i] = e
        self.exps = clean
        self._hash = hash(tuple(sorted(clean.items())))

    @classmethod
    def identity(cls) -> "GroupElem":
        return cls()

    @classmethod
    def generator(cls, i: int, power: int = 1) -> "GroupElem":
        return cls({i: power})

    def exponent(self, i: int) -> int:
        return self.exps.get(i, 0)

    def max_index(self) -> int:
        """Largest index in the support (0 for the identity)."""
        return max(self.exps, default=0)

    def is_identity(self) -> bool:
        return not self.exps

    # --- group structure ---------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, GroupElem):
            return NotImplemented
        out = dict(self.exps)
        for i, e in other.exps.items():
            out[i] = out.get(i, 0) + e
        return GroupElem(out)

    def inv(self) -> "GroupElem":
        return GroupElem({i: -e for i, e in self.exps.items()})

    def __pow__(self, power: int):
        return GroupElem({i: e * power for i, e in self.exps.items()})

    # --- the total order -----------------------------------------------------

    def compare(self, other: "GroupElem") -> int:
        """LT/EQ/GT by the first differing coordinate, scanning indices
        upward; missing coordinates read as zero."""
        for i in sorted(set(self.exps) | set(other.exps)):
            a = self.exps.get(i, 0)
            b = other.exps.get(i, 0)
            if a != b:
                return LT if a < b else GT
        return EQ

    def __lt__(self, other):
        return self.compare(other) == LT

    def __le__(self, other):
        return self.compare(other) != GT

    def __gt__(self, other):
        return self.compare(other) == GT

    def __ge__(self, other):
        return self.compare(other) != LT

    def __eq__(self, other):
        return isinstance(other, GroupElem) and self.exps == other.exps

    def __hash__(self):
        return self._hash

    # --- squares subgroup and the twist ------------------------------------

    def in_squares(self) -> bool:
        """True iff the element is a square, i.e. every exponent is even."""
        return all(e % 2 == 0 for e in self.exps.values())

    def twist_sign(self, i: int) -> int:
        """(-1)**n_i: the sign this element's action puts on sqrt(p_i)."""
        return -1 if self.exps.get(i, 0) % 2 else 1

    def twist(self, a: MQElem) -> MQElem:
        """Apply the induced field automorphism (the product of f_i**n_i over
        the support) to a.  The coefficient basis must cover the support."""
        n = len(a.basis)
        for i in self.exps:
            if i > n:
                raise IndexError(
                    f"group index {i} outside the coefficient basis range 1..{n}"
                )
        out = {}
        for subset, value in a.coeffs.items():
            sign = 1
            for i in subset:
                if self.exps.get(i, 0) % 2:
                    sign = -sign
            out[subset] = sign * value
        return MQElem(a.basis, out)

    # --- rendering ----------------------------------------------------------

    def __str__(self):
        if not self.exps:
            return "e"
        parts = []
        for i in sorted(self.exps):
            e = self.exps[i]
            parts.append(f"x{i}" if e == 1 else f"x{i}^{e}")
        return "*".join(parts)

    def __repr__(self):
        return f"GroupElem({self})"
