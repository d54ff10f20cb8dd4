"""Sequence generation by linear recurrence.

Two routes to s_{k,n} and s^(m)_{k,n}: read every k-th term of a
Padovan-like sequence, or run the order-(k+1) signed recurrence forward
from its k+1 initial values.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .core import Family, IntPolynomial, SequenceId, binomial


class NegativeTermDetected(ArithmeticError):
    pass


@dataclass(frozen=True)
class LinearRecurrence:
    """a_n = sum_{i=1}^{r} coeffs[i-1] * a_{n-i}, for n >= len(initial).

    ``initial`` may be longer than the order r; the rule only takes over once
    the initial block is exhausted.
    """

    initial: Tuple[int, ...]
    coeffs: Tuple[int, ...]
    nonnegative: bool = True

    def __post_init__(self):
        object.__setattr__(self, "initial", tuple(self.initial))
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.initial) < self.order:
            raise ValueError(f"need at least {self.order} initial terms, got {len(self.initial)}")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def padovan_like(cls, k: int, initial: Sequence[int]) -> "LinearRecurrence":
        coeffs = [0] * (k + 1)
        coeffs[k - 1] += 1
        coeffs[k] += 1
        return cls(tuple(initial), tuple(coeffs))

    def terms(self, count: int) -> List[int]:
        if count < 0:
            raise ValueError("count must be nonnegative")
        out = list(self.initial[:count])
        if count <= len(self.initial):
            return out
        window = deque(self.initial[-self.order:], maxlen=self.order) if self.order else deque()
        for n in range(len(self.initial), count):
            # window[-i] holds a_{n-i}
            val = sum(c * window[-i] for i, c in enumerate(self.coeffs, 1) if c)
            if self.nonnegative and val < 0:
                raise NegativeTermDetected(f"term {n} came out negative ({val})")
            out.append(val)
            window.append(val)
        return out


# ---------------------------------------------------------------------------
# Padovan-like sequences
# ---------------------------------------------------------------------------

def padovan_like_rule(k: int) -> LinearRecurrence:
    if k < 1:
        raise ValueError("k must be positive")
    return LinearRecurrence.padovan_like(k, [1, 1] + [2] * (k - 1))


def max_padovan_like_rule(k: int) -> LinearRecurrence:
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        # the generic initial block is empty past index 2 when k = 1
        return LinearRecurrence.padovan_like(1, [1, 0])
    return LinearRecurrence.padovan_like(k, [0, 0, 1] + [0] * (k - 1))


def gen_padovan_like(k: int, count: int) -> List[int]:
    """a_{k,0}, ..., a_{k,count-1}."""
    return padovan_like_rule(k).terms(count)


def gen_max_padovan_like(k: int, count: int) -> List[int]:
    """a^(m)_{k,0}, ..., a^(m)_{k,count-1}."""
    return max_padovan_like_rule(k).terms(count)


def s_by_extraction(k: int, n: int) -> int:
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    return gen_padovan_like(k, (n - 1) * k + 1)[-1]


def sm_by_extraction(k: int, n: int) -> int:
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    return gen_max_padovan_like(k, (n - 1) * k + 1)[-1]


def gen_s_by_extraction(k: int, count: int) -> List[int]:
    """s_{k,1..count} as every k-th term of a_{k,.}."""
    if count < 1:
        return []
    return gen_padovan_like(k, (count - 1) * k + 1)[::k]


def gen_sm_by_extraction(k: int, count: int) -> List[int]:
    if count < 1:
        return []
    return gen_max_padovan_like(k, (count - 1) * k + 1)[::k]


# ---------------------------------------------------------------------------
# Order-(k+1) recurrences for the counts themselves
# ---------------------------------------------------------------------------

def corollary_coefficients(k: int) -> Tuple[int, ...]:
    """Coefficients c_1..c_{k+1} of s_n = sum c_i s_{n-i}."""
    c = [(-1) ** (i + 1) * binomial(k, i) for i in range(1, k + 1)] + [0]
    c[k] += 1
    return tuple(c)


def s_initial_terms(k: int) -> List[int]:
    return [2 ** i for i in range(k)] + [2 ** k - 1]


def sm_initial_terms(k: int) -> List[int]:
    return [0] * (k - 1) + [1, k - 1]


def gen_s_by_corollary(k: int, count: int) -> List[int]:
    """s_{k,1..count} from the signed order-(k+1) recurrence."""
    if k < 1:
        raise ValueError("k must be positive")
    return LinearRecurrence(tuple(s_initial_terms(k)), corollary_coefficients(k)).terms(count)


def gen_sm_by_corollary(k: int, count: int) -> List[int]:
    if k < 1:
        raise ValueError("k must be positive")
    return LinearRecurrence(tuple(sm_initial_terms(k)), corollary_coefficients(k)).terms(count)


def sm_from_s(k: int, n: int, s: Optional[Callable[[int, int], int]] = None) -> int:
    """2 s_{k,n} - s_{k,n+1}, with s taken from any backend (default: extraction)."""
    s = s or s_by_extraction
    val = 2 * s(k, n) - s(k, n + 1)
    if val < 0:
        raise NegativeTermDetected(f"2 s_{k},{n} - s_{k},{n + 1} = {val}")
    return val


def gen_sm_from_s(k: int, count: int) -> List[int]:
    s = gen_s_by_corollary(k, count + 1)
    out = []
    for n in range(count):
        v = 2 * s[n] - s[n + 1]
        if v < 0:
            raise NegativeTermDetected(f"2 s_{k},{n + 1} - s_{k},{n + 2} = {v}")
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# Annihilating polynomials
# ---------------------------------------------------------------------------

def satisfies(seq: Sequence[int], p: IntPolynomial, up_to: Optional[int] = None) -> bool:
    """Whether c_0 a_n + c_1 a_{n-1} + ... + c_r a_{n-r} = 0 for r <= n <= up_to."""
    if p.is_zero():
        return True
    r = p.degree
    if up_to is None:
        up_to = len(seq) - 1
    if len(seq) <= r or up_to > len(seq) - 1:
        raise ValueError(f"sequence of length {len(seq)} too short for degree {r} up to index {up_to}")
    terms = [(i, c) for i, c in enumerate(p.coeffs) if c]
    return all(sum(c * seq[n - i] for i, c in terms) == 0 for n in range(r, up_to + 1))


def sequence_terms(seq: SequenceId, start: int, count: int) -> List[int]:
    """Values at indices start, start+1, ..., start+count-1 of the given family."""
    first = seq.family.first_index
    if start < first:
        raise ValueError(f"{seq} is defined from index {first}, asked for {start}")
    if count < 0:
        raise ValueError("count must be nonnegative")
    upto = start - first + count
    fam = seq.family
    if fam is Family.FIBONACCI:
        vals = LinearRecurrence((1, 0), (1, 1)).terms(upto)
    elif fam is Family.SCHREIER:
        vals = gen_s_by_corollary(seq.k, upto)
    elif fam is Family.MAX_SCHREIER:
        vals = gen_sm_by_corollary(seq.k, upto)
    elif fam is Family.PADOVAN_LIKE:
        vals = gen_padovan_like(seq.k, upto)
    else:
        vals = gen_max_padovan_like(seq.k, upto)
    return vals[start - first:]
