"""Exact integer primitives shared by every other module.

Counts are plain Python ``int`` (arbitrary precision); nothing here ever
touches floating point.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional, Sequence, Tuple


class DivisionByZeroPolynomial(ZeroDivisionError):
    pass


def binomial(a: int, b: int) -> int:
    """C(a, b), extended by zero outside 0 <= b <= a (including a < 0)."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def floor_div(a: int, b: int) -> int:
    if b < 1:
        raise ValueError(f"divisor must be positive, got {b}")
    return a // b


def ceil_div(a: int, b: int) -> int:
    return -floor_div(-a, b)


# ---------------------------------------------------------------------------
# Integer polynomials
# ---------------------------------------------------------------------------

def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial in ascending powers; ``coeffs[i]`` multiplies x**i.

    The zero polynomial has an empty coefficient tuple.
    """

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def from_terms(cls, terms: dict) -> "IntPolynomial":
        """Build from a ``{degree: coefficient}`` mapping; repeated degrees add."""
        if not terms:
            return cls()
        c = [0] * (max(terms) + 1)
        for d, v in terms.items():
            if d < 0:
                raise ValueError("negative degree")
            c[d] += v
        return cls(tuple(c))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls.from_terms({degree: coeff})

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def shift(self, ell: int) -> "IntPolynomial":
        """Multiply by x**ell."""
        if ell < 0:
            raise ValueError("shift must be nonnegative")
        if self.is_zero():
            return self
        return IntPolynomial((0,) * ell + self.coeffs)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, other)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, -other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_mul(self, other)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                xs = "x" if d == 1 else f"x^{d}"
                body = xs if mag == 1 else f"{mag}{xs}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    return IntPolynomial(tuple(p.coeff(i) + q.coeff(i) for i in range(n)))


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if p.is_zero() or q.is_zero():
        return IntPolynomial()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return IntPolynomial(tuple(out))


def poly_divmod(q: IntPolynomial, p: IntPolynomial) -> Optional[Tuple[IntPolynomial, IntPolynomial]]:
    """Long division of ``q`` by ``p`` in Z[x].

    Returns ``(quotient, remainder)`` or ``None`` when some step would need a
    non-integer quotient coefficient (``p``'s leading coefficient fails to
    divide the running remainder).
    """
    if p.is_zero():
        raise DivisionByZeroPolynomial("division by the zero polynomial")
    rem = list(q.coeffs)
    dp = p.degree
    lead = p.coeffs[-1]
    if len(rem) - 1 < dp:
        return IntPolynomial(), q
    quot = [0] * (len(rem) - dp)
    for top in range(len(rem) - 1, dp - 1, -1):
        c = rem[top]
        if c == 0:
            continue
        if c % lead:
            return None
        t = c // lead
        quot[top - dp] = t
        for i, pc in enumerate(p.coeffs):
            rem[top - dp + i] -= t * pc
    return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem))


def poly_divides(p: IntPolynomial, q: IntPolynomial) -> Tuple[bool, Optional[IntPolynomial]]:
    """Whether ``p`` divides ``q`` in Z[x]; the quotient is returned when it does."""
    res = poly_divmod(q, p)
    if res is None:
        return False, None
    quot, rem = res
    if not rem.is_zero():
        return False, None
    return True, quot


# ---------------------------------------------------------------------------
# Identifiers and witnesses
# ---------------------------------------------------------------------------

class Family(enum.Enum):
    SCHREIER = "s"
    MAX_SCHREIER = "sm"
    PADOVAN_LIKE = "a"
    MAX_PADOVAN_LIKE = "am"
    FIBONACCI = "fib"

    @property
    def first_index(self) -> int:
        """Smallest index at which the family is defined."""
        return {"s": 1, "sm": 1, "a": 0, "am": 0, "fib": -1}[self.value]


@dataclass(frozen=True)
class SequenceId:
    family: Family
    k: Optional[int] = None

    def __post_init__(self):
        if self.family is Family.FIBONACCI:
            if self.k is not None:
                raise ValueError("the Fibonacci family takes no parameter k")
        elif self.k is None or self.k < 1:
            raise ValueError(f"{self.family.value} needs an integer k >= 1, got {self.k!r}")

    @classmethod
    def parse(cls, kind: str, k: Optional[int] = None) -> "SequenceId":
        return cls(Family(kind), k)

    def __str__(self) -> str:
        if self.family is Family.FIBONACCI:
            return "fib"
        return f"{self.family.value}{self.k}"


@dataclass(frozen=True)
class SubsetWitness:
    """A nonempty subset of {k, 2k, ...}, stored as sorted elements."""

    k: int
    elements: Tuple[int, ...]

    def __post_init__(self):
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if self.k < 1:
            raise ValueError("k must be positive")
        if not els:
            raise ValueError("witness sets are nonempty")
        if any(e <= 0 or e % self.k for e in els):
            raise ValueError(f"elements must be positive multiples of {self.k}: {els}")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ValueError(f"elements must be strictly increasing: {els}")

    @classmethod
    def from_indices(cls, k: int, indices: Sequence[int]) -> "SubsetWitness":
        return cls(k, tuple(i * k for i in sorted(indices)))

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    def __len__(self) -> int:
        return len(self.elements)

    def shifted(self, by: int) -> "SubsetWitness":
        return SubsetWitness(self.k, tuple(e + by for e in self.elements))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"
