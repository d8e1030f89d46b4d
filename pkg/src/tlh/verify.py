"""Named verification suites over every engine identity.

Each suite bundles the invariants of one part of the engine into checks that
report PASS or FAIL; suites are tagged THEOREM (a failure is a bug, full
stop) or CONJECTURE (an identity that is expected, and confirmed here, on a
default verified range; failures beyond that range are findings rather than
errors).  One check, ``magic/r0-sum-equals-one``, records a stated identity
that is actually false (the r = 0 tableau sum is (1+a)^n, not 1); it is
finding-grade by construction and documents the corrected identity, which
``magic/r0-envelope`` then checks.

Results are deterministic: no timings, no thread-dependent ordering, so the
rendered table is byte-identical across runs and worker counts.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable

from . import closed_form, links, shuffle, tableaux
from .poly import (
    A,
    ONE,
    Q,
    T,
    UNIT,
    BinomialFactor,
    FracPoly,
    Polynomial,
)
from .serialize import dumps, parse_frac, parse_poly

__all__ = [
    "Check",
    "CheckResult",
    "SUITES",
    "suite_names",
    "run_suites",
    "render_results",
    "exit_status",
]

THEOREM = "THEOREM"
CONJECTURE = "CONJECTURE"

PASS = "PASS"
FAIL = "FAIL"
FINDING = "FINDING"

# (label, ok, n) triples; n is the size the sub-check ran at, for grading
# conjecture failures against the verified range.
SubResults = list[tuple[str, bool, int]]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    kind: str
    fn: Callable[[int], SubResults]
    default_bound: int
    verified_bound: int | None = None  # None: failures are never hard errors

    def bound(self, max_n: int | None) -> int:
        return self.default_bound if max_n is None else max_n


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    kind: str
    status: str
    detail: str


def _grade(check: Check, subs: SubResults) -> CheckResult:
    failed = [(label, n) for label, ok, n in subs if not ok]
    if not failed:
        detail = f"{len(subs)} case(s)"
        return CheckResult(check.suite, check.name, check.kind, PASS, detail)
    labels = ", ".join(label for label, _ in failed[:6])
    if len(failed) > 6:
        labels += ", ..."
    if check.kind == THEOREM:
        return CheckResult(
            check.suite, check.name, check.kind, FAIL, f"failed: {labels}"
        )
    verified = check.verified_bound or 0
    hard = [label for label, n in failed if n <= verified]
    if hard:
        return CheckResult(
            check.suite, check.name, check.kind, FAIL,
            f"failed inside the verified range: {labels}",
        )
    scope = (
        "not a verified claim" if check.verified_bound is None
        else "beyond the verified range"
    )
    return CheckResult(
        check.suite, check.name, check.kind, FINDING, f"{scope}: {labels}"
    )


_CHECKS: list[Check] = []


def _check(suite: str, name: str, kind: str, default_bound: int,
           verified_bound: int | None = None):
    def wrap(fn):
        _CHECKS.append(Check(suite, name, kind, fn, default_bound, verified_bound))
        return fn
    return wrap


# ---------------------------------------------------------------------------
# polycore: ring laws, division, fractions, series, serialization


def _random_poly(rng: random.Random, terms: int = 4, span: int = 8) -> Polynomial:
    out = {}
    for _ in range(rng.randrange(terms + 1)):
        exp = tuple(rng.randint(-span, span) for _ in range(3))
        out[exp] = rng.randint(-5, 5)
    return Polynomial(out)


_FACTOR_POOL = [
    BinomialFactor.normalize((0, 0, 0), (UNIT, 0, 0)),        # 1 - q
    BinomialFactor.normalize((0, 0, 0), (2 * UNIT, 0, 0)),    # 1 - q^2
    BinomialFactor.normalize((0, 0, 0), (0, 0, UNIT)),        # 1 - t
    BinomialFactor.normalize((0, 0, UNIT), (UNIT, 0, 0)),     # t - q
    BinomialFactor.normalize((0, 0, UNIT), (UNIT, 0, UNIT)),  # t - tq
]


def _random_frac(rng: random.Random) -> FracPoly:
    num = _random_poly(rng, terms=3, span=4)
    den = []
    for _ in range(rng.randrange(3)):
        f, _sign = _FACTOR_POOL[rng.randrange(len(_FACTOR_POOL))]
        den.append(f)
    return FracPoly(num, den)


@_check("polycore", "ring-axioms", THEOREM, 1000)
def _ring_axioms(bound: int) -> SubResults:
    rng = random.Random(0x5EED)
    ok = True
    for _ in range(bound):
        p, q, r = (_random_poly(rng) for _ in range(3))
        if (p + q) + r != p + (q + r) or p + q != q + p:
            ok = False
        if p * q != q * p or p * (q + r) != p * q + p * r:
            ok = False
        if (p * q) * r != p * (q * r):
            ok = False
    return [("random triples", ok, bound)]


@_check("polycore", "exact-division-inverse", THEOREM, 1000)
def _division_inverse(bound: int) -> SubResults:
    rng = random.Random(0xD1CE)
    ok = True
    for _ in range(bound):
        p = _random_poly(rng)
        d = _random_poly(rng)
        if d.is_zero:
            d = ONE - Q
        if (p * d).exact_div(d) != p:
            ok = False
    return [("quotient recovery", ok, bound)]


@_check("polycore", "fraction-cross-multiplication", THEOREM, 300)
def _fraction_cross(bound: int) -> SubResults:
    rng = random.Random(0xF4AC)
    ok = True
    for _ in range(bound):
        x, y = _random_frac(rng), _random_frac(rng)
        s = x + y
        lhs = s.num * x.den_poly() * y.den_poly()
        rhs = (x.num * y.den_poly() + y.num * x.den_poly()) * s.den_poly()
        if lhs != rhs:
            ok = False
    return [("lcm addition", ok, bound)]


@_check("polycore", "series-truncation-consistency", THEOREM, 200)
def _series_consistency(bound: int) -> SubResults:
    rng = random.Random(0x5E1E)
    ok = True
    for _ in range(bound):
        num = _random_poly(rng, terms=3, span=3)
        den = []
        for _ in range(rng.randrange(3)):
            j = rng.randint(1, 3)
            den.append(BinomialFactor((0, 0, 0), (j * UNIT, 0, 0)))
        f = FracPoly(num, den)
        m, n = sorted((rng.randint(3, 6), rng.randint(6, 10)))
        small = f.series(m)
        big = f.series(n)
        cut = Polynomial(
            {e: c for e, c in big.units().items() if e[0] <= m * UNIT}
        )
        if small != cut:
            ok = False
    return [("truncations agree", ok, bound)]


@_check("polycore", "serialization-round-trip", THEOREM, 500)
def _serialization_round_trip(bound: int) -> SubResults:
    rng = random.Random(0x0DEC)
    ok = True
    for _ in range(bound):
        p = _random_poly(rng)
        if parse_poly(dumps(p, "text")) != p:
            ok = False
        if parse_poly(dumps(p, "json"), "json") != p:
            ok = False
        f = _random_frac(rng)
        if parse_frac(dumps(f, "json")) != f:
            ok = False
    return [("text and json", ok, bound)]


# ---------------------------------------------------------------------------
# recursions


@_check("recursions", "dual-recursion-equivalence", THEOREM, 8)
def _dual_recursion(bound: int) -> SubResults:
    memo_a = shuffle.MemoTable()
    memo_b = shuffle.MemoTable()
    out: SubResults = []
    for n in range(bound + 1):
        ok = all(
            shuffle.insertion_series(v, memo_b)
            == shuffle.poincare_series(v, memo_a)
            for v in shuffle.all_sequences(n)
        )
        out.append((f"|v|={n}", ok, n))
    return out


@_check("recursions", "normalization-consistency", THEOREM, 8)
def _normalization(bound: int) -> SubResults:
    memo = shuffle.MemoTable()
    out: SubResults = []
    for n in range(bound + 1):
        ok = True
        for v in shuffle.all_sequences(n):
            f = shuffle.poincare_series(v, memo)
            scaled = ((ONE - Q) ** v.count("0")) * f
            if scaled != FracPoly(shuffle.poincare_poly(v, memo)):
                ok = False
        out.append((f"|v|={n}", ok, n))
    return out


@_check("zeroseq", "zero-equals-one-prefix", THEOREM, 8)
def _zero_one_prefix(bound: int) -> SubResults:
    memo = shuffle.MemoTable()
    out: SubResults = []
    for n in range(1, bound + 1):
        ok = shuffle.poincare_poly("0" * n, memo) == shuffle.poincare_poly(
            "1" + "0" * (n - 1), memo
        )
        out.append((f"n={n}", ok, n))
    return out


@_check("zeroseq", "zero-expansion-identity", THEOREM, 8)
def _zero_expansion(bound: int) -> SubResults:
    memo = shuffle.MemoTable()
    return [
        (f"n={n}", shuffle.zero_expansion_identity(n, memo), n)
        for n in range(1, bound + 1)
    ]


@_check("top-a", "top-a-coefficient-is-one", THEOREM, 8)
def _top_a(bound: int) -> SubResults:
    memo = shuffle.MemoTable()
    out: SubResults = []
    for n in range(bound + 1):
        ok = all(
            shuffle.poincare_poly(v, memo).coefficient_of_a(n) == ONE
            for v in shuffle.all_sequences(n)
        )
        out.append((f"|v|={n}", ok, n))
    return out


# ---------------------------------------------------------------------------
# closed form


@_check("hhh0", "closed-form-oracle", THEOREM, 6)
def _closed_form_oracle(bound: int) -> SubResults:
    memo = shuffle.MemoTable()
    qmax = 12
    out: SubResults = []
    for n in range(1, bound + 1):
        f = shuffle.poincare_series("0" * n, memo)
        sliced = FracPoly(f.num.coefficient_of_a(0), f.den).series(qmax)
        ok = closed_form.hochschild_zero_series(n, qmax) == sliced
        out.append((f"n={n}", ok, n))
    return out


@_check("hhh0", "truncation-monotone", THEOREM, 4)
def _truncation_monotone(bound: int) -> SubResults:
    out: SubResults = []
    for n in range(1, bound + 1):
        big = closed_form.hochschild_zero_series(n, 9)
        cut = Polynomial(
            {e: c for e, c in big.units().items() if e[0] <= 5 * UNIT}
        )
        ok = closed_form.hochschild_zero_series(n, 5) == cut
        out.append((f"n={n}", ok, n))
    return out


@_check("hhh0", "enumeration-count", THEOREM, 6)
def _enumeration_count(bound: int) -> SubResults:
    out: SubResults = []
    for n in range(1, bound + 1):
        budget = 9
        count = sum(1 for _ in closed_form.level_functions(n, budget))
        out.append((f"n={n}", count == comb(budget + n, n), n))
    return out


# ---------------------------------------------------------------------------
# corners and tableaux


def _all_partitions_up_to(bound: int) -> Iterable[tableaux.Partition]:
    for n in range(bound + 1):
        yield from tableaux.partitions_of(n)


@_check("corners", "corner-weights-sum-to-one", THEOREM, 8)
def _corner_sums(bound: int) -> SubResults:
    out: SubResults = []
    for n in range(bound + 1):
        ok = all(
            tableaux.corner_weights_sum_to_one(p)
            for p in tableaux.partitions_of(n)
        )
        out.append((f"|shape|={n}", ok, n))
    return out


@_check("corners", "inner-outer-count", THEOREM, 8)
def _corner_counts(bound: int) -> SubResults:
    out: SubResults = []
    for n in range(bound + 1):
        ok = True
        for p in tableaux.partitions_of(n):
            inner, outer = tableaux.corners(p)
            if len(inner) != len(outer) + 1:
                ok = False
        out.append((f"|shape|={n}", ok, n))
    return out


@_check("corners", "tableau-weights-sum-to-one", THEOREM, 5)
def _tableau_weight_sum(bound: int) -> SubResults:
    return [
        (f"n={n}", tableaux.tableau_weights_sum_to_one(n), n)
        for n in range(1, bound + 1)
    ]


@_check("corners", "tableau-count-hook-lengths", THEOREM, 6)
def _tableau_counts(bound: int) -> SubResults:
    out: SubResults = []
    for n in range(1, bound + 1):
        by_shape: dict[tableaux.Partition, int] = {}
        for t in tableaux.standard_tableaux(n):
            by_shape[t.shape] = by_shape.get(t.shape, 0) + 1
        ok = set(by_shape) == set(tableaux.partitions_of(n)) and all(
            tableaux.hook_length_count(s) == c for s, c in by_shape.items()
        )
        out.append((f"n={n}", ok, n))
    return out


@_check("transpose", "partition-monomial", THEOREM, 8)
def _monomial_transpose(bound: int) -> SubResults:
    out: SubResults = []
    for n in range(bound + 1):
        ok = all(
            tableaux.partition_monomial(p).swap_qt()
            == tableaux.partition_monomial(p.transpose())
            for p in tableaux.partitions_of(n)
        )
        out.append((f"|shape|={n}", ok, n))
    return out


@_check("transpose", "corner-weight", THEOREM, 6)
def _corner_weight_transpose(bound: int) -> SubResults:
    out: SubResults = []
    for n in range(bound + 1):
        ok = True
        for p in tableaux.partitions_of(n):
            inner, _ = tableaux.corners(p)
            pt = p.transpose()
            for c in inner:
                lhs = tableaux.corner_weight(p, c).swap_qt()
                if lhs != tableaux.corner_weight(pt, c.transpose()):
                    ok = False
        out.append((f"|shape|={n}", ok, n))
    return out


@_check("transpose", "tableau-weight", THEOREM, 5)
def _tableau_weight_transpose(bound: int) -> SubResults:
    out: SubResults = []
    for n in range(1, bound + 1):
        ok = all(
            tableaux.tableau_weight(t).swap_qt()
            == tableaux.tableau_weight(t.transpose())
            for t in tableaux.standard_tableaux(n)
        )
        out.append((f"n={n}", ok, n))
    return out


@_check("transpose", "tableau-sum-qt-symmetry", THEOREM, 4)
def _tableau_sum_symmetry(bound: int) -> SubResults:
    out: SubResults = []
    for n in range(1, bound + 1):
        for r in range(3):
            s = tableaux.tableau_sum(n, r)
            out.append((f"n={n},r={r}", s.swap_qt() == s, n))
    return out


# ---------------------------------------------------------------------------
# the tableau-sum conjecture


@_check("magic", "r1-matches-recursion", CONJECTURE, 4, verified_bound=4)
def _magic_r1(bound: int) -> SubResults:
    memo = shuffle.MemoTable()
    out: SubResults = []
    for n in range(1, bound + 1):
        s = tableaux.tableau_sum(n, 1)
        ok = s.is_polynomial and s.num == shuffle.poincare_poly("0" * n, memo)
        out.append((f"n={n}", ok, n))
    return out


@_check("magic", "r0-envelope", CONJECTURE, 4, verified_bound=None)
def _magic_r0_envelope(bound: int) -> SubResults:
    out: SubResults = []
    for n in range(1, bound + 1):
        ok = tableaux.tableau_sum(n, 0) == (ONE + A) ** n
        out.append((f"n={n}", ok, n))
    return out


@_check("magic", "r0-sum-equals-one", CONJECTURE, 4, verified_bound=None)
def _magic_r0_literal(bound: int) -> SubResults:
    # Stated identity: the r = 0 tableau sum is 1.  False as written: the sum
    # is (1+a)^n (see r0-envelope); only its a-degree-zero part is 1, which
    # follows from the corner-sum identity.  Reported, not asserted.
    out: SubResults = []
    for n in range(1, bound + 1):
        out.append((f"n={n}", tableaux.tableau_sum(n, 0) == ONE, n))
    return out


@_check("magic", "r0-a-degree-zero-part", CONJECTURE, 4, verified_bound=4)
def _magic_r0_a0(bound: int) -> SubResults:
    out: SubResults = []
    for n in range(1, bound + 1):
        s = tableaux.tableau_sum(n, 0)
        ok = s.is_polynomial and s.num.coefficient_of_a(0) == ONE
        out.append((f"n={n}", ok, n))
    return out


# ---------------------------------------------------------------------------
# conjecture suites on the full twist


@_check("symmetry", "full-twist-qt-symmetry", CONJECTURE, 6, verified_bound=6)
def _qt_symmetry(bound: int) -> SubResults:
    memo = shuffle.MemoTable()
    out: SubResults = []
    for n in range(1, bound + 1):
        p = shuffle.poincare_poly("0" * n, memo)
        out.append((f"n={n}", p.swap_qt() == p, n))
    return out


@_check("submaximal", "submaximal-geometric-slice", CONJECTURE, 7, verified_bound=7)
def _submaximal(bound: int) -> SubResults:
    memo = shuffle.MemoTable()
    base = Q + T - Q * T
    out: SubResults = []
    for n in range(1, bound + 1):
        slice_ = shuffle.poincare_poly("0" * n, memo).coefficient_of_a(n - 1)
        geometric = sum((base ** i for i in range(n)), Polynomial())
        out.append((f"n={n}", slice_ == geometric, n))
    return out


# ---------------------------------------------------------------------------
# link dataset and specializations


_DATASET_CHECKSUMS = {
    # key: (term count, coefficient sum, a-unit span)
    "unknot": (1, 1, (0, 0)),
    "T(2,3)": (3, 3, (4, 8)),
    "T(3,4)": (11, 11, (12, 20)),
    "T(3,5)": (16, 17, (16, 24)),
    "T(4,5)": (40, 45, (24, 36)),
}


@_check("dataset", "entry-qt-symmetry", THEOREM, 4)
def _dataset_symmetry(bound: int) -> SubResults:
    keys = ["T(3,4)", "T(3,5)", "T(4,5)"] + [
        f"T(2,{2 * k + 1})" for k in range(1, bound + 1)
    ]
    out: SubResults = []
    for key in keys:
        p = links.dataset_get(key).poly
        out.append((key, p.swap_qt() == p, 0))
    return out


@_check("dataset", "entry-round-trip", THEOREM, 4)
def _dataset_round_trip(bound: int) -> SubResults:
    out: SubResults = []
    for key in links.dataset_keys():
        p = links.dataset_get(key).poly
        ok = (
            parse_poly(dumps(p, "text")) == p
            and parse_poly(dumps(p, "json"), "json") == p
            and dumps(parse_poly(dumps(p, "text")), "text") == dumps(p, "text")
        )
        out.append((key, ok, 0))
    return out


@_check("dataset", "entry-checksums", THEOREM, 4)
def _dataset_checksums(bound: int) -> SubResults:
    out: SubResults = []
    for key, (count, csum, aspan) in _DATASET_CHECKSUMS.items():
        p = links.dataset_get(key).poly
        arange = p.unit_range("a")
        ok = len(p) == count and p.coefficient_sum() == csum and arange == aspan
        out.append((key, ok, 0))
    return out


@_check("catalan", "qt-catalan-symmetry", THEOREM, 6)
def _catalan_symmetry(bound: int) -> SubResults:
    out: SubResults = []
    for n in range(1, bound + 1):
        c = links.qt_catalan(n)
        out.append((f"n={n}", c.swap_qt() == c, n))
    return out


_CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]


@_check("catalan", "qt-catalan-count", THEOREM, 6)
def _catalan_count(bound: int) -> SubResults:
    out: SubResults = []
    for n in range(1, bound + 1):
        ok = links.qt_catalan(n).coefficient_sum() == _CATALAN[n]
        out.append((f"n={n}", ok, n))
    return out


@_check("catalan", "lowest-a-slice-matches", THEOREM, 4)
def _catalan_lowest_a(bound: int) -> SubResults:
    out: SubResults = []
    for n, key in [(2, "T(2,3)"), (3, "T(3,4)"), (4, "T(4,5)")]:
        if n > bound:
            continue
        slice_, _ = links.lowest_a_slice(links.dataset_get(key).poly)
        ratio = links.monomial_ratio(slice_, links.qt_catalan(n))
        out.append((key, ratio is not None, n))
    return out


@_check("specialize", "trefoil-decategorified", THEOREM, 1)
def _trefoil_decat(bound: int) -> SubResults:
    got = dumps(links.decategorify(links.two_strand_superpoly(1)))
    want = dumps(-(A * Q) - (A * A) - A.shifted((-UNIT, 0, 0)))
    return [("string match", got == want, 1)]


@_check("specialize", "two-strand-sl-family", THEOREM, 6)
def _sl_family(bound: int) -> SubResults:
    d = links.decategorify(links.two_strand_superpoly(1))
    out: SubResults = []
    for n in range(1, bound + 1):
        got = dumps(links.sl_specialization(d, n))
        want = dumps(
            Polynomial.term(1, q=n - 1)
            + Polynomial.term(1, q=n + 1)
            - Polynomial.term(1, q=2 * n)
        )
        out.append((f"N={n}", got == want, n))
    return out


@_check("specialize", "t34-sl2", THEOREM, 1)
def _t34_sl2(bound: int) -> SubResults:
    p = links.dataset_get("T(3,4)").poly
    got = dumps(links.sl_specialization(links.decategorify(p), 2))
    return [("string match", got == "q^3 + q^5 - q^8", 1)]


@_check("specialize", "two-strand-jones-shape", THEOREM, 4)
def _jones_shape(bound: int) -> SubResults:
    out: SubResults = []
    for k in range(1, bound + 1):
        v = links.sl_specialization(
            links.decategorify(links.two_strand_superpoly(k)), 2
        )
        rng = v.unit_range("q")
        top = max(v.units())
        ok = (
            rng is not None
            and (rng[1] - rng[0]) == (2 * k + 1) * UNIT
            and v.units()[top] == -1
        )
        out.append((f"k={k}", ok, k))
    return out


# ---------------------------------------------------------------------------
# determinism


@_check("determinism", "memo-order-independence", THEOREM, 6)
def _memo_order(bound: int) -> SubResults:
    forward = shuffle.MemoTable()
    backward = shuffle.MemoTable()
    seqs = [v for n in range(bound + 1) for v in shuffle.all_sequences(n)]
    for v in seqs:
        shuffle.poincare_poly(v, forward)
    for v in reversed(seqs):
        shuffle.poincare_poly(v, backward)
    ok = sorted(forward) == sorted(backward) and all(
        dumps(forward[k], "json") == dumps(backward[k], "json") for k in forward
    )
    return [("forward vs backward", ok, bound)]


@_check("determinism", "thread-schedule-independence", THEOREM, 6)
def _thread_schedule(bound: int) -> SubResults:
    shared = shuffle.MemoTable()
    seqs = [v for n in range(bound + 1) for v in shuffle.all_sequences(n)]

    def worker(chunk):
        for v in chunk:
            shuffle.poincare_poly(v, shared)

    # overlapping chunks force concurrent recomputation of shared keys
    chunks = [seqs, list(reversed(seqs)), seqs[::2] + seqs[1::2], seqs]
    with ThreadPoolExecutor(max_workers=4) as pool:
        list(pool.map(worker, chunks))
    single = shuffle.MemoTable()
    for v in seqs:
        shuffle.poincare_poly(v, single)
    ok = set(single) <= set(shared) and all(
        shared[k] == single[k] for k in single
    )
    return [("pool vs serial", ok, bound)]


# ---------------------------------------------------------------------------
# runner


SUITES: dict[str, list[Check]] = {}
for c in _CHECKS:
    SUITES.setdefault(c.suite, []).append(c)


def suite_names() -> list[str]:
    return list(SUITES)


def run_suites(
    names: Iterable[str],
    max_n: int | None = None,
    threads: int = 1,
) -> list[CheckResult]:
    checks: list[Check] = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        checks.extend(SUITES[name])

    def run(check: Check) -> CheckResult:
        return _grade(check, check.fn(check.bound(max_n)))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(run, checks))
    return [run(c) for c in checks]


def render_results(results: list[CheckResult]) -> str:
    width = max(len(f"{r.suite}/{r.name}") for r in results) if results else 0
    lines = []
    for r in results:
        name = f"{r.suite}/{r.name}".ljust(width)
        lines.append(f"{r.status:<8}{r.kind:<12}{name}  {r.detail}")
    counts = {PASS: 0, FAIL: 0, FINDING: 0}
    for r in results:
        counts[r.status] += 1
    lines.append(
        f"{counts[PASS]} passed, {counts[FAIL]} failed, "
        f"{counts[FINDING]} findings"
    )
    return "\n".join(lines)


def exit_status(results: list[CheckResult], conjecture_soft: bool = False) -> int:
    for r in results:
        if r.status != FAIL:
            continue
        if r.kind == THEOREM or not conjecture_soft:
            return 1
    return 0
