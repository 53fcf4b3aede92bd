"""Corpus generation and batch verification of the decomposition theorems.

Corpora are labeled (no isomorphism reduction): all posets or graphs on a
fixed label set, or seeded pseudo-random instances.  ``verify_all`` runs a
set of named checks over a corpus and streams one report per input; a
failed check never aborts the sweep and always carries the witnesses
needed to reproduce it.

Check names:

=============  =======  ====================================================
name           applies  meaning
=============  =======  ====================================================
hstar3way      poset    counts, descent and ideal-chain routes to h* agree
reciprocity    poset    interior counts match the reversed series; strict
                        and weak order polynomials satisfy reciprocity
thm1.1         poset,   open numerator splits as a difference of two
               polytope nonnegative symmetric polynomials
thm1.2         poset    open order-polytope split has -a, b nonnegative
thm1.3         graph    z h_G split (orientation sum = direct) has -a, b
                        nonnegative
thm1.4         graph    h_G degree/signs/leading coefficient and the
                        partial-sum inequalities
conj6.1        graph    h_G itself splits with -a, b nonnegative
conj6.2        poset    h_Pi / z splits with -a, b nonnegative
conj6.4        graph    strengthened partial-sum inequalities
chromatic3     graph    deletion-contraction = orientation sum = brute force
=============  =======  ====================================================

Inputs are independent, so sweeps could fan out over workers; this driver
stays sequential and emits reports in input order, which keeps them
reproducible byte for byte (timings aside).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from . import decomp
from .ehrhart import HRepPolytope, OrderPolytope, Simplex, h_star, open_numerator
from .errors import BudgetExceeded, HstarError, InvalidInput
from .graph import (
    Graph,
    chromatic_polynomial,
    chromatic_via_orientations,
    count_acyclic_orientations,
    count_proper_colorings,
)
from .polynomial import IntPolynomial, expand_series, f_to_h
from .poset import Poset, descent_h_star, ideal_chain_f_vector, order_polynomial

MAX_EXHAUSTIVE_SIZE = 5


# ---------------------------------------------------------------------------
# corpora


def enumerate_labeled_posets(d: int, *, max_size: int = MAX_EXHAUSTIVE_SIZE) -> Iterator[Poset]:
    """Every partial order on the labeled elements 1..d, exactly once.

    Iterates the 3^C(d,2) orientation states of the label pairs (skipping
    antisymmetry violations by construction) and keeps the transitive ones.
    Counts follow the labeled-poset sequence 1, 1, 3, 19, 219, 4231, ...
    """
    if d < 0:
        raise InvalidInput("d must be nonnegative")
    if d > max_size:
        raise BudgetExceeded(f"exhaustive poset enumeration capped at d = {max_size}")
    pairs = list(combinations(range(d), 2))
    for states in product((0, 1, 2), repeat=len(pairs)):
        above = [0] * d
        for (i, j), state in zip(pairs, states):
            if state == 1:
                above[i] |= 1 << j
            elif state == 2:
                above[j] |= 1 << i
        transitive = True
        for i in range(d):
            m = above[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                if above[j] & ~above[i]:
                    transitive = False
                    break
            if not transitive:
                break
        if transitive:
            relations = [
                (i + 1, j + 1) for i in range(d) for j in range(d) if (above[i] >> j) & 1
            ]
            yield Poset(d, relations)


def enumerate_labeled_graphs(d: int, *, max_size: int = MAX_EXHAUSTIVE_SIZE) -> Iterator[Graph]:
    """All 2^C(d,2) labeled simple graphs on vertices 1..d."""
    if d < 0:
        raise InvalidInput("d must be nonnegative")
    if d > max_size:
        raise BudgetExceeded(f"exhaustive graph enumeration capped at d = {max_size}")
    pairs = [(i + 1, j + 1) for i, j in combinations(range(d), 2)]
    for picks in product((False, True), repeat=len(pairs)):
        yield Graph(d, [e for e, take in zip(pairs, picks) if take])


def random_instances(
    kind: str,
    d: int,
    count: int,
    seed: int,
    *,
    relation_probability: float = 1 / 3,
) -> Iterator[Poset | Graph]:
    """Deterministic pseudo-random corpus: same seed, same sequence.

    Graphs take each edge with probability 1/2.  Posets come from a random
    DAG on the label order (each pair i < j related with
    ``relation_probability``), then transitively closed, so validity is
    guaranteed by construction.
    """
    if kind not in ("poset", "graph"):
        raise InvalidInput(f"unknown instance kind {kind!r}")
    if d < 0 or count < 0:
        raise InvalidInput("d and count must be nonnegative")
    rng = random.Random(seed)
    pairs = [(i + 1, j + 1) for i, j in combinations(range(d), 2)]
    for _ in range(count):
        if kind == "graph":
            yield Graph(d, [e for e in pairs if rng.random() < 0.5])
        else:
            yield Poset(d, [e for e in pairs if rng.random() < relation_probability])


def dilated_simplex(d: int, k: int) -> Simplex:
    """k times the unit simplex conv{0, e_1, ..., e_d}."""
    vertices = [[0] * d]
    for i in range(d):
        v = [0] * d
        v[i] = k
        vertices.append(v)
    return Simplex(vertices)


def dilated_cube(d: int, k: int) -> HRepPolytope:
    """The cube [0, k]^d as an H-representation polytope."""
    rows = []
    for i in range(d):
        lo = [0] * d
        lo[i] = -1
        hi = [0] * d
        hi[i] = 1
        rows.append((lo, 0))
        rows.append((hi, k))
    return HRepPolytope(rows, d)


# ---------------------------------------------------------------------------
# reports


@dataclass
class CheckResult:
    """Outcome of one named check on one input; passed is None when skipped."""

    name: str
    passed: bool | None
    detail: str = ""
    witnesses: dict[str, list[str]] = field(default_factory=dict)

    def to_record(self) -> dict:
        status = "skip" if self.passed is None else ("pass" if self.passed else "fail")
        record: dict = {"name": self.name, "status": status}
        if self.detail:
            record["detail"] = self.detail
        if self.witnesses:
            record["witnesses"] = self.witnesses
        return record


@dataclass
class VerificationReport:
    """Per-input record: serialized input, check outcomes, wall-clock time."""

    index: int
    kind: str
    input_text: str
    checks: list[CheckResult]
    seconds: float

    @property
    def failed(self) -> bool:
        return any(c.passed is False for c in self.checks)

    @property
    def skipped(self) -> bool:
        return any(c.passed is None for c in self.checks)

    def to_record(self) -> dict:
        return {
            "type": "report",
            "index": self.index,
            "kind": self.kind,
            "input": self.input_text,
            "checks": [c.to_record() for c in self.checks],
            "seconds": round(self.seconds, 6),
        }


@dataclass
class Summary:
    inputs: int = 0
    failures: int = 0
    skipped: int = 0
    checks_run: int = 0

    def add(self, report: VerificationReport) -> None:
        self.inputs += 1
        if report.failed:
            self.failures += 1
        for check in report.checks:
            if check.passed is None:
                self.skipped += 1
            else:
                self.checks_run += 1

    def line(self) -> str:
        text = f"{self.inputs} inputs, {self.failures} failures"
        if self.skipped:
            text += f", {self.skipped} skipped checks"
        return text

    def to_record(self) -> dict:
        return {
            "type": "summary",
            "inputs": self.inputs,
            "failures": self.failures,
            "skipped_checks": self.skipped,
            "checks_run": self.checks_run,
            # thm1.1 is universal over lattice polytopes; this artifact can
            # exercise it only on the classes it can count
            "thm1.1_scope": "order polytopes, simplices, H-representation polytopes",
        }


def _coeff_strings(p) -> list[str]:
    return [str(c) for c in p.coeffs]


# ---------------------------------------------------------------------------
# per-input contexts (cache the expensive intermediates, apply mutation)


def _flip_leading(p: IntPolynomial) -> IntPolynomial:
    coeffs = list(p.coeffs)
    if coeffs:
        coeffs[-1] = -coeffs[-1]
    return IntPolynomial(coeffs)


class _PosetContext:
    kind = "poset"

    def __init__(self, poset: Poset, budget: int | None, mutate: bool):
        self.poset = poset
        self.d = poset.d
        self.budget = budget
        self.mutate = mutate
        self._hstar: IntPolynomial | None = None

    def input_text(self) -> str:
        return self.poset.to_text()

    def hstar(self) -> IntPolynomial:
        """h* of the order polytope via interpolated counts (the mutation
        target for the self-test)."""
        if self._hstar is None:
            hs = h_star(OrderPolytope(self.poset), budget=self.budget)
            self._hstar = _flip_leading(hs) if self.mutate else hs
        return self._hstar


class _GraphContext:
    kind = "graph"

    def __init__(self, graph: Graph, budget: int | None, mutate: bool):
        self.graph = graph
        self.d = graph.d
        self.budget = budget
        self.mutate = mutate
        self._h_g: IntPolynomial | None = None

    def input_text(self) -> str:
        return self.graph.to_text()

    def h_g(self) -> IntPolynomial:
        if self._h_g is None:
            hg = decomp.graph_numerator(self.graph, budget=self.budget)
            self._h_g = _flip_leading(hg) if self.mutate else hg
        return self._h_g


class _PolytopeContext:
    kind = "polytope"

    def __init__(self, polytope, budget: int | None, mutate: bool):
        self.polytope = polytope
        self.d = polytope.dim
        self.budget = budget
        self.mutate = mutate
        self._hstar: IntPolynomial | None = None

    def input_text(self) -> str:
        return self.polytope.to_text()

    def hstar(self) -> IntPolynomial:
        if self._hstar is None:
            hs = h_star(self.polytope, budget=self.budget)
            self._hstar = _flip_leading(hs) if self.mutate else hs
        return self._hstar


# ---------------------------------------------------------------------------
# the checks


def _check_hstar3way(ctx: _PosetContext) -> CheckResult:
    counts_route = ctx.hstar()
    descent_route = descent_h_star(ctx.poset)
    chain_route = f_to_h(ideal_chain_f_vector(ctx.poset, budget=ctx.budget), ctx.d)
    ok = counts_route == descent_route == chain_route
    return CheckResult(
        "hstar3way",
        ok,
        "" if ok else "h* routes disagree",
        {}
        if ok
        else {
            "hstar_counts": _coeff_strings(counts_route),
            "hstar_descents": _coeff_strings(descent_route),
            "hstar_ideal_chains": _coeff_strings(chain_route),
        },
    )


def _check_reciprocity(ctx: _PosetContext) -> CheckResult:
    d = ctx.d
    polytope = OrderPolytope(ctx.poset)
    interior = polytope.count_series(d + 2, interior=True, budget=ctx.budget)
    expansion = expand_series(open_numerator(ctx.hstar(), d), d, d + 2)
    counts_ok = interior[1:] == expansion[1:]
    weak = order_polynomial(ctx.poset, budget=ctx.budget)
    strict = order_polynomial(ctx.poset, strict=True, budget=ctx.budget)
    poly_ok = all(strict(n) == (-1) ** d * weak(-n) for n in range(1, d + 3))
    ok = counts_ok and poly_ok
    detail = "" if ok else ("interior counts mismatch" if not counts_ok else "order reciprocity fails")
    return CheckResult(
        "reciprocity",
        ok,
        detail,
        {}
        if ok
        else {
            "interior_counts": [str(c) for c in interior],
            "series_expansion": [str(c) for c in expansion],
            "hstar": _coeff_strings(ctx.hstar()),
        },
    )


def _check_thm11(ctx: _PosetContext | _PolytopeContext) -> CheckResult:
    a_p, b_p = decomp.open_decomposition(ctx.hstar(), ctx.d)
    ok = a_p.is_nonnegative() and b_p.is_nonnegative()
    return CheckResult(
        "thm1.1",
        ok,
        "" if ok else "negative coefficient in the open decomposition",
        {}
        if ok
        else {
            "hstar": _coeff_strings(ctx.hstar()),
            "a_P": _coeff_strings(a_p),
            "b_P": _coeff_strings(b_p),
        },
    )


def _check_thm12(ctx: _PosetContext) -> CheckResult:
    a_pi, b_pi = decomp.order_decomposition(ctx.hstar(), ctx.d)
    ok = (-a_pi).is_nonnegative() and b_pi.is_nonnegative()
    return CheckResult(
        "thm1.2",
        ok,
        "" if ok else "sign failure in the order decomposition",
        {}
        if ok
        else {
            "hstar": _coeff_strings(ctx.hstar()),
            "a_Pi": _coeff_strings(a_pi),
            "b_Pi": _coeff_strings(b_pi),
        },
    )


def _check_conj62(ctx: _PosetContext) -> CheckResult:
    if ctx.d == 0:
        return CheckResult("conj6.2", None, "skipped: degenerate at d = 0")
    numerator = open_numerator(ctx.hstar(), ctx.d)
    if numerator[0] != 0:
        raise InvalidInput("open numerator must be divisible by z")
    p = IntPolynomial(numerator.coeffs[1:])
    dec = decomp.ab_decompose(p, ctx.d)
    ok = (-dec.a).is_nonnegative() and dec.b_nonneg
    return CheckResult(
        "conj6.2",
        ok,
        "" if ok else "sign failure in the strict-series decomposition",
        {}
        if ok
        else {
            "p_Pi": _coeff_strings(p),
            "a": _coeff_strings(dec.a),
            "b": _coeff_strings(dec.b),
        },
    )


def _check_thm13(ctx: _GraphContext) -> CheckResult:
    a, b = decomp.graph_decomposition(ctx.graph, budget=ctx.budget)
    ok = (-a).is_nonnegative() and b.is_nonnegative()
    return CheckResult(
        "thm1.3",
        ok,
        "" if ok else "sign failure in the chromatic-series decomposition",
        {}
        if ok
        else {"a": _coeff_strings(a), "b": _coeff_strings(b)},
    )


def _check_thm14(ctx: _GraphContext) -> CheckResult:
    h = ctx.h_g()
    d = ctx.d
    problems = []
    if h.degree != d:
        problems.append(f"degree {h.degree} != {d}")
    if not h.is_nonnegative():
        problems.append("negative coefficient")
    orientations = count_acyclic_orientations(ctx.graph)
    chi_at_minus_one = (-1) ** d * chromatic_polynomial(ctx.graph)(-1)
    if h[d] != orientations or orientations != chi_at_minus_one:
        problems.append(
            f"leading {h[d]} vs {orientations} orientations vs (-1)^d chi(-1) = {chi_at_minus_one}"
        )
    bad = [line for line in decomp.inequality_report(h, d, "theorem4") if not line.holds]
    if bad:
        problems.append(f"inequality fails at i = {[line.i for line in bad]}")
    ok = not problems
    return CheckResult(
        "thm1.4",
        ok,
        "; ".join(problems),
        {} if ok else {"h_G": _coeff_strings(h)},
    )


def _check_conj61(ctx: _GraphContext) -> CheckResult:
    if ctx.d == 0:
        return CheckResult("conj6.1", None, "skipped: degenerate at d = 0")
    dec = decomp.ab_decompose(ctx.h_g(), ctx.d)
    ok = (-dec.a).is_nonnegative() and dec.b_nonneg
    return CheckResult(
        "conj6.1",
        ok,
        "" if ok else "sign failure in the h_G decomposition",
        {}
        if ok
        else {
            "h_G": _coeff_strings(ctx.h_g()),
            "a": _coeff_strings(dec.a),
            "b": _coeff_strings(dec.b),
        },
    )


def _check_conj64(ctx: _GraphContext) -> CheckResult:
    lines = decomp.inequality_report(ctx.h_g(), ctx.d, "conjecture64")
    bad = [line for line in lines if not line.holds]
    ok = not bad
    return CheckResult(
        "conj6.4",
        ok,
        "" if ok else f"inequality fails at i = {[line.i for line in bad]}",
        {} if ok else {"h_G": _coeff_strings(ctx.h_g())},
    )


def _check_chromatic3(ctx: _GraphContext) -> CheckResult:
    dc = chromatic_polynomial(ctx.graph)
    via = chromatic_via_orientations(ctx.graph)
    if dc != via:
        return CheckResult(
            "chromatic3",
            False,
            "deletion-contraction and orientation sum disagree",
            {"chi_dc": [str(c) for c in dc.coeffs], "chi_ao": [str(c) for c in via.coeffs]},
        )
    for n in range(5):
        brute = count_proper_colorings(ctx.graph, n, budget=ctx.budget)
        if dc(n) != brute:
            return CheckResult(
                "chromatic3",
                False,
                f"chi({n}) = {dc(n)} but brute force counts {brute}",
                {"chi_dc": [str(c) for c in dc.coeffs]},
            )
    return CheckResult("chromatic3", True)


_POSET_CHECKS = {
    "hstar3way": _check_hstar3way,
    "reciprocity": _check_reciprocity,
    "thm1.1": _check_thm11,
    "thm1.2": _check_thm12,
    "conj6.2": _check_conj62,
}

_GRAPH_CHECKS = {
    "thm1.3": _check_thm13,
    "thm1.4": _check_thm14,
    "conj6.1": _check_conj61,
    "conj6.4": _check_conj64,
    "chromatic3": _check_chromatic3,
}

_POLYTOPE_CHECKS = {
    "thm1.1": _check_thm11,
}

ALL_CHECKS = tuple(sorted({*_POSET_CHECKS, *_GRAPH_CHECKS, *_POLYTOPE_CHECKS}))


def _context_for(item, budget, mutate):
    if isinstance(item, OrderPolytope):
        item = item.poset  # order polytopes get the full poset check set
    if isinstance(item, Poset):
        return _PosetContext(item, budget, mutate)
    if isinstance(item, Graph):
        return _GraphContext(item, budget, mutate)
    if isinstance(item, (Simplex, HRepPolytope)):
        return _PolytopeContext(item, budget, mutate)
    raise InvalidInput(f"unsupported corpus item {item!r}")


def verify_all(
    corpus: Iterable,
    checks: Sequence[str] | None = None,
    *,
    budget: int | None = None,
    time_limit: float | None = None,
    mutate: bool = False,
) -> Iterator[VerificationReport]:
    """Run the named checks over every corpus item, yielding one report each.

    ``checks`` defaults to every known check; names not applicable to an
    item's kind are silently inapplicable for that item.  A failing check is
    recorded, never raised; exceeded element budgets record a skip, and with
    ``time_limit`` (seconds per input) checks remaining after the limit
    elapses are skipped as well.  With ``mutate`` the sign of one
    coefficient of each input's numerator polynomial is flipped before
    checking, which must make the failure path fire (the reporting
    self-test).
    """
    if checks is None:
        selected = list(ALL_CHECKS)
    else:
        selected = list(checks)
        unknown = [name for name in selected if name not in ALL_CHECKS]
        if unknown:
            raise InvalidInput(f"unknown checks {unknown}; known: {list(ALL_CHECKS)}")
    tables = {"poset": _POSET_CHECKS, "graph": _GRAPH_CHECKS, "polytope": _POLYTOPE_CHECKS}
    for index, item in enumerate(corpus):
        ctx = _context_for(item, budget, mutate)
        table = tables[ctx.kind]
        start = time.perf_counter()
        results = []
        for name in selected:
            fn = table.get(name)
            if fn is None:
                continue
            # consulted between checks (a running check cannot be preempted);
            # the first check always starts
            if (
                time_limit is not None
                and results
                and time.perf_counter() - start > time_limit
            ):
                results.append(
                    CheckResult(name, None, f"skipped: per-input time limit {time_limit}s")
                )
                continue
            try:
                results.append(fn(ctx))
            except BudgetExceeded as exc:
                results.append(CheckResult(name, None, f"skipped: {exc}"))
            except HstarError as exc:
                results.append(
                    CheckResult(name, False, f"{type(exc).__name__}: {exc}")
                )
        yield VerificationReport(
            index=index,
            kind=ctx.kind,
            input_text=ctx.input_text(),
            checks=results,
            seconds=time.perf_counter() - start,
        )
