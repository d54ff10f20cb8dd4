"""Characteristic polynomials of the Padovan-like recurrences.

p_k(x) = 1 - x^k - x^{k+1} annihilates a_{k,.} and a^(m)_{k,.}. It divides
q_k(x), whose support sits on multiples of k, so every k-th term of those
sequences is annihilated by q_k with x^k renamed to x.
"""
from __future__ import annotations

from .core import IntPolynomial, binomial, poly_divides, poly_mul


def build_p(k: int) -> IntPolynomial:
    if k < 1:
        raise ValueError("k must be positive")
    return IntPolynomial.from_terms({0: 1, k: -1, k + 1: -1})


def build_q(k: int) -> IntPolynomial:
    """sum_{i=0}^{k} (-1)^i C(k,i) x^{ki} - x^{k(k+1)}."""
    if k < 1:
        raise ValueError("k must be positive")
    terms = {}
    for i in range(k + 1):
        terms[k * i] = terms.get(k * i, 0) + (-1) ** i * binomial(k, i)
    terms[k * (k + 1)] = terms.get(k * (k + 1), 0) - 1
    return IntPolynomial.from_terms(terms)


def build_cofactor(k: int) -> IntPolynomial:
    """sum_{i<k} sum_{j<=i} (-1)^{i-j} C(k-1-j, i-j) x^{ki+j}."""
    if k < 1:
        raise ValueError("k must be positive")
    terms = {}
    for i in range(k):
        for j in range(i + 1):
            d = k * i + j
            terms[d] = terms.get(d, 0) + (-1) ** (i - j) * binomial(k - 1 - j, i - j)
    return IntPolynomial.from_terms(terms)


def verify_factorization(k: int) -> bool:
    """p_k * cofactor == q_k, and long division of q_k by p_k recovers the cofactor."""
    p, q, c = build_p(k), build_q(k), build_cofactor(k)
    if poly_mul(p, c) != q:
        return False
    ok, quot = poly_divides(p, q)
    return ok and quot == c


def compress(poly: IntPolynomial, k: int) -> IntPolynomial:
    """Substitute x^k -> x; ``poly`` must be supported on multiples of k."""
    if any(c and d % k for d, c in enumerate(poly.coeffs)):
        raise ValueError(f"polynomial has terms off the multiples of {k}")
    return IntPolynomial(poly.coeffs[::k])


def corollary_polynomial(k: int) -> IntPolynomial:
    """sum_{i=0}^{k} (-1)^i C(k,i) x^i - x^{k+1}."""
    if k < 1:
        raise ValueError("k must be positive")
    terms = {i: (-1) ** i * binomial(k, i) for i in range(k + 1)}
    terms[k + 1] = terms.get(k + 1, 0) - 1
    return IntPolynomial.from_terms(terms)
