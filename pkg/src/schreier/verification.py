"""Named verification suites, one per identity, each producing a report."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from . import closed_form as cf
from . import oracle, polyengine
from . import recurrence as rec
from .core import IntPolynomial, poly_add

SCHEMA_VERSION = 1


@dataclass
class VerificationReport:
    suite: str
    k_range: Tuple[int, int]
    n_range: Tuple[int, int]
    checks: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, check_id: str, inputs: Dict[str, int], expected, actual) -> bool:
        self.checks += 1
        if expected != actual:
            self.failures.append(
                {"check": check_id, "inputs": inputs, "expected": expected, "actual": actual})
            return False
        return True

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        d = {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "k_range": list(self.k_range),
            "n_range": list(self.n_range),
            "checks": self.checks,
            "passed": self.passed,
            "failures": self.failures,
        }
        if timing:
            d["wall_time_s"] = round(self.wall_time, 3)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, default=str)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.suite}: {self.checks} checks, {len(self.failures)} failures "
                f"(k={self.k_range[0]}..{self.k_range[1]}, n={self.n_range[0]}..{self.n_range[1]})")


@dataclass(frozen=True)
class Suite:
    run: Callable[[VerificationReport], None]
    k_range: Tuple[int, int]
    n_range: Tuple[int, int]
    description: str


def _thm1(r: VerificationReport) -> None:
    (k0, k1), (n0, n1) = r.k_range, r.n_range
    for k in range(k0, k1 + 1):
        extracted = rec.gen_s_by_extraction(k, n1)
        corollary = rec.gen_s_by_corollary(k, n1)
        for n in range(n0, n1 + 1):
            e = extracted[n - 1]
            r.check("extraction=corollary", {"k": k, "n": n}, e, corollary[n - 1])
            r.check("extraction=closed", {"k": k, "n": n}, e, cf.schreier_count_closed(k, n))


def _thm2(r: VerificationReport) -> None:
    (k0, k1), (n0, n1) = r.k_range, r.n_range
    for k in range(k0, k1 + 1):
        extracted = rec.gen_sm_by_extraction(k, n1)
        corollary = rec.gen_sm_by_corollary(k, n1)
        for n in range(n0, n1 + 1):
            e = extracted[n - 1]
            r.check("extraction=corollary", {"k": k, "n": n}, e, corollary[n - 1])
            r.check("extraction=closed", {"k": k, "n": n}, e, cf.max_schreier_count_closed(k, n))


def _oracle(r: VerificationReport) -> None:
    (k0, k1), (n0, n1) = r.k_range, r.n_range
    for k in range(k0, k1 + 1):
        s_ext = rec.gen_s_by_extraction(k, n1)
        s_cor = rec.gen_s_by_corollary(k, n1)
        sm_ext = rec.gen_sm_by_extraction(k, n1)
        sm_cor = rec.gen_sm_by_corollary(k, n1)
        for n in range(n0, n1 + 1):
            got = oracle.count_schreier(k, n)
            inp = {"k": k, "n": n}
            r.check("oracle=s_extraction", inp, got, s_ext[n - 1])
            r.check("oracle=s_corollary", inp, got, s_cor[n - 1])
            r.check("oracle=s_closed", inp, got, cf.schreier_count_closed(k, n))
            got = oracle.count_maximal(k, n)
            r.check("oracle=sm_extraction", inp, got, sm_ext[n - 1])
            r.check("oracle=sm_corollary", inp, got, sm_cor[n - 1])
            r.check("oracle=sm_closed", inp, got, cf.max_schreier_count_closed(k, n))


def _thm3(r: VerificationReport) -> None:
    (k0, k1), (n0, n1) = r.k_range, r.n_range
    for k in range(k0, k1 + 1):
        s = rec.gen_s_by_corollary(k, n1 + 1)
        s_ext = rec.gen_s_by_extraction(k, n1 + 1)
        sm = rec.gen_sm_by_corollary(k, n1)
        sm_ext = rec.gen_sm_by_extraction(k, n1)
        for n in range(n0, n1 + 1):
            inp = {"k": k, "n": n}
            r.check("sm_corollary=2s-s'", inp, sm[n - 1], 2 * s[n - 1] - s[n])
            r.check("sm_extraction=2s-s'", inp, sm_ext[n - 1], 2 * s_ext[n - 1] - s_ext[n])
            if k >= 2:
                two_s = 2 * cf.padovan_like_at_multiple(k, n) - cf.padovan_like_at_multiple(k, n + 1)
                r.check("sm_closed=2s-s'_closed", inp, cf.max_schreier_count_closed(k, n), two_s)


def _corollary_initial(r: VerificationReport, which: str) -> None:
    (k0, k1), (n0, n1) = r.k_range, r.n_range
    for k in range(k0, k1 + 1):
        if which == "s":
            expected_head = [2 ** i for i in range(k)] + [2 ** k - 1]
            by_cor = rec.gen_s_by_corollary(k, max(n1, k + 1))
            by_ext = rec.gen_s_by_extraction(k, max(n1, k + 1))
        else:
            expected_head = [0] * (k - 1) + [1, k - 1]
            by_cor = rec.gen_sm_by_corollary(k, max(n1, k + 1))
            by_ext = rec.gen_sm_by_extraction(k, max(n1, k + 1))
        if k >= 2:
            # for k = 1 the head reads 1, 1 (resp. 1, 0): already in the generic pattern
            r.check("initial_terms", {"k": k}, expected_head, by_cor[:k + 1])
        r.check("initial_terms_vs_extraction", {"k": k}, by_ext[:k + 1], by_cor[:k + 1])
        for n in range(max(n0, k + 2), n1 + 1):
            r.check("recurrence_vs_extraction", {"k": k, "n": n}, by_ext[n - 1], by_cor[n - 1])


def _lemma21(r: VerificationReport) -> None:
    (k0, k1), (n0, n1) = r.k_range, r.n_range
    for k in range(max(k0, 2), k1 + 1):
        a = rec.gen_padovan_like(k, n1 + 1)
        closed = [cf.padovan_like_closed(k, n) for n in range(n1 + 1)]
        for n in range(n0, n1 + 1):
            r.check("closed=recurrence", {"k": k, "n": n}, a[n], closed[n])
            if n >= k + 1:
                r.check("closed_obeys_rule", {"k": k, "n": n}, closed[n], closed[n - k] + closed[n - k - 1])
        # upper limit written two ways, plus the double-sum count it must equal
        for n in range(1, n1 // k + 2):
            if (n - 1) * k > n1:
                break
            inp = {"k": k, "n": n}
            at = cf.padovan_like_at_multiple(k, n)
            r.check("lemma_bound=index_bound", inp, closed[(n - 1) * k], at)
            r.check("floor_form=ceil_form", inp, at, cf.padovan_like_at_multiple_ceil(k, n))
            if 2 <= n <= 40:
                r.check("double_sum=single_sum", inp, cf.schreier_count_closed(k, n), at)
                r.check("double_sum_swapped", inp, cf.schreier_count_closed(k, n),
                        cf.schreier_count_swapped(k, n))


def _lemma23(r: VerificationReport) -> None:
    k0, k1 = r.k_range
    for k in range(k0, k1 + 1):
        r.check("factorization", {"k": k}, True, polyengine.verify_factorization(k))
        q = polyengine.build_q(k)
        r.check("q_support_on_multiples", {"k": k}, [],
                [d for d, c in enumerate(q.coeffs) if c and d % k])
        r.check("compressed_q=corollary_poly", {"k": k},
                polyengine.corollary_polynomial(k).coeffs, polyengine.compress(q, k).coeffs)


def _eq24(r: VerificationReport) -> None:
    (k0, k1), (n0, n1) = r.k_range, r.n_range
    for k in range(k0, k1 + 1):
        am = rec.gen_max_padovan_like(k, n1 + 1)
        for idx in range(max(n0, 2), n1 + 1):
            r.check("closed=recurrence", {"k": k, "index": idx}, am[idx], cf.max_padovan_like_closed(k, idx))


def _hockey(r: VerificationReport) -> None:
    _, bound = r.n_range
    for rr in range(bound + 1):
        for d in range(bound + 1):
            r.check("hockey_stick", {"r": rr, "d": d}, cf.hockey_stick_rhs(rr, d), cf.hockey_stick_lhs(rr, d))


def _partition(r: VerificationReport) -> None:
    (k0, k1), (n0, n1) = r.k_range, r.n_range
    for k in range(max(k0, 2), k1 + 1):
        for n in range(n0, n1 + 1):
            inp = {"k": k, "n": n}
            r.check("oracle_partition", inp, True, oracle.verify_partition_identity(k, n))
            strict_total = 0
            for i in range(1, n + 2):
                li = oracle.count_by_cardinality(k, n, True, i)
                ri = oracle.count_by_cardinality(k, n, False, i)
                strict_total += li
                r.check("L_closed=oracle", {**inp, "i": i}, li, cf.strict_level_count_closed(k, n, i))
                r.check("R_closed=oracle", {**inp, "i": i}, ri, cf.relaxed_level_count_closed(k, n, i))
                if i >= 2:
                    r.check("level_identity_closed", {**inp, "i": i},
                            cf.strict_level_count_closed(k, n, i), cf.relaxed_level_shifted(k, n, i))
            r.check("level_sum", inp, cf.schreier_count_closed(k, n) - cf.max_schreier_count_closed(k, n),
                    strict_total)


def _phi(r: VerificationReport) -> None:
    (k0, k1), (n0, n1) = r.k_range, r.n_range
    for k in range(k0, k1 + 1):
        for n in range(n0, n1 + 1):
            r.check("phi_injective", {"k": k, "n": n}, True, oracle.verify_phi_injection(k, n))


def _satisfies(r: VerificationReport) -> None:
    k0, k1 = r.k_range
    for k in range(k0, k1 + 1):
        inp = {"k": k}
        p, q = polyengine.build_p(k), polyengine.build_q(k)
        cor = polyengine.corollary_polynomial(k)
        a = rec.gen_padovan_like(k, 600)
        am = rec.gen_max_padovan_like(k, 600)
        r.check("a_satisfies_p", inp, True, rec.satisfies(a, p))
        r.check("am_satisfies_p", inp, True, rec.satisfies(am, p))
        r.check("a_satisfies_q", inp, True, rec.satisfies(a, q))
        r.check("am_satisfies_q", inp, True, rec.satisfies(am, q))
        r.check("s_satisfies_corollary", inp, True, rec.satisfies(rec.gen_s_by_corollary(k, 200), cor))
        r.check("sm_satisfies_corollary", inp, True, rec.satisfies(rec.gen_sm_by_extraction(k, 200), cor))
        head = a[:300]
        for ell in range(6):
            shifted = p.shift(ell)
            r.check("closure_shift", {**inp, "ell": ell}, True, rec.satisfies(head, shifted))
            r.check("closure_sum", {**inp, "ell": ell}, True, rec.satisfies(head, poly_add(p, shifted)))


SUITES: Dict[str, Suite] = {
    "thm1": Suite(_thm1, (1, 6), (1, 60), "s_{k,n} = a_{k,(n-1)k}: extraction, corollary recurrence, closed form"),
    "thm2": Suite(_thm2, (1, 6), (1, 60), "s^(m)_{k,n} = a^(m)_{k,(n-1)k}: same three routes"),
    "oracle": Suite(_oracle, (1, 5), (1, 20), "brute-force counts against every analytic backend"),
    "thm3": Suite(_thm3, (1, 6), (1, 300), "s^(m)_{k,n} = 2 s_{k,n} - s_{k,n+1}"),
    "cor1": Suite(lambda r: _corollary_initial(r, "s"), (1, 10), (1, 60), "initial terms and recurrence of s"),
    "cor2": Suite(lambda r: _corollary_initial(r, "sm"), (1, 10), (1, 60), "initial terms and recurrence of s^(m)"),
    "lemma21": Suite(_lemma21, (2, 6), (0, 400), "binomial-sum formula for a_{k,n}"),
    "lemma23": Suite(_lemma23, (1, 64), (0, 0), "1 - x^k - x^{k+1} divides q_k(x)"),
    "eq24": Suite(_eq24, (1, 6), (2, 400), "binomial-sum formula for a^(m)_{k,n}"),
    "hockey": Suite(_hockey, (0, 0), (0, 60), "hockey-stick identity for 0 <= r, d <= n_max"),
    "partition": Suite(_partition, (2, 4), (1, 14), "level sets matching 2 S_{k,n} with S_{k,n+1} and the maximal sets"),
    "phi": Suite(_phi, (1, 4), (1, 14), "F -> F + k is an injection S_{k,n} -> S_{k,n+1}"),
    "satisfies": Suite(_satisfies, (1, 8), (0, 0), "annihilating polynomials and their closure"),
}


def run_suite(name: str, k_max: Optional[int] = None, n_max: Optional[int] = None,
              k_min: Optional[int] = None, n_min: Optional[int] = None) -> VerificationReport:
    suite = SUITES[name]
    k_range = (suite.k_range[0] if k_min is None else k_min, suite.k_range[1] if k_max is None else k_max)
    n_range = (suite.n_range[0] if n_min is None else n_min, suite.n_range[1] if n_max is None else n_max)
    report = VerificationReport(name, k_range, n_range)
    start = time.perf_counter()
    suite.run(report)
    report.wall_time = time.perf_counter() - start
    return report
