"""Corpus generation and the verification harness."""

import json

import pytest

from hstarlib.errors import BudgetExceeded, InvalidInput
from hstarlib.graph import Graph
from hstarlib.harness import (
    Summary,
    dilated_cube,
    dilated_simplex,
    enumerate_labeled_graphs,
    enumerate_labeled_posets,
    random_instances,
    verify_all,
)
from hstarlib.poset import Poset


class TestEnumeration:
    @pytest.mark.parametrize("d,count", [(0, 1), (1, 1), (2, 3), (3, 19), (4, 219)])
    def test_poset_counts(self, d, count):
        posets = list(enumerate_labeled_posets(d))
        assert len(posets) == count
        assert len(set(posets)) == count  # exactly once each

    @pytest.mark.parametrize("d,count", [(2, 2), (3, 8), (4, 64)])
    def test_graph_counts(self, d, count):
        graphs = list(enumerate_labeled_graphs(d))
        assert len(graphs) == count
        assert len(set(graphs)) == count

    def test_size_cap(self):
        with pytest.raises(BudgetExceeded):
            next(enumerate_labeled_posets(6))
        with pytest.raises(BudgetExceeded):
            next(enumerate_labeled_graphs(9))
        assert sum(1 for _ in enumerate_labeled_graphs(6, max_size=6)) == 2**15


class TestRandomInstances:
    def test_graph_determinism(self):
        first = [g.to_text() for g in random_instances("graph", 6, 4, seed=0)]
        second = [g.to_text() for g in random_instances("graph", 6, 4, seed=0)]
        assert first == second
        other = [g.to_text() for g in random_instances("graph", 6, 4, seed=1)]
        assert first != other

    def test_posets_valid_by_construction(self):
        posets = list(random_instances("poset", 7, 10, seed=1))
        assert len(posets) == 10
        assert all(isinstance(p, Poset) and p.d == 7 for p in posets)

    def test_edge_frequency_smoke(self):
        pair_hits = {}
        total = 1000
        for g in random_instances("graph", 3, total, seed=2):
            for e in g.edges:
                pair_hits[e] = pair_hits.get(e, 0) + 1
        for pair in [(1, 2), (1, 3), (2, 3)]:
            assert abs(pair_hits[pair] / total - 0.5) < 0.05

    def test_rejects_unknown_kind(self):
        with pytest.raises(InvalidInput):
            next(random_instances("matroid", 3, 1, seed=0))


class TestVerifyAll:
    def test_posets_clean(self):
        corpus = list(enumerate_labeled_posets(3))
        summary = Summary()
        for report in verify_all(corpus):
            summary.add(report)
            assert not report.failed
        assert summary.inputs == 19
        assert summary.failures == 0
        assert summary.skipped == 0

    def test_graphs_clean(self):
        reports = list(verify_all(enumerate_labeled_graphs(3)))
        assert len(reports) == 8
        assert not any(r.failed for r in reports)

    def test_polytope_corpus(self):
        corpus = [dilated_simplex(2, 2), dilated_cube(2, 2)]
        reports = list(verify_all(corpus, ["thm1.1"]))
        assert all(r.kind == "polytope" and not r.failed for r in reports)
        assert all(len(r.checks) == 1 for r in reports)

    def test_named_check_selection(self):
        reports = list(verify_all(enumerate_labeled_posets(2), ["thm1.2"]))
        assert all([c.name for c in r.checks] == ["thm1.2"] for r in reports)

    def test_unknown_check_rejected(self):
        with pytest.raises(InvalidInput):
            list(verify_all([Poset(1)], ["thm9.9"]))

    def test_mutation_selftest_fires(self):
        corpus = list(enumerate_labeled_graphs(3))
        failures = 0
        for report in verify_all(corpus, ["conj6.1", "thm1.4"], mutate=True):
            for check in report.checks:
                if check.passed is False:
                    failures += 1
                    assert check.witnesses or check.detail
        assert failures > 0

    def test_mutation_reported_with_witnesses(self):
        graph = Graph(2, [(1, 2)])
        (report,) = list(verify_all([graph], ["conj6.1"], mutate=True))
        (check,) = report.checks
        assert check.passed is False
        assert "h_G" in check.witnesses
        assert report.input_text == graph.to_text()

    def test_budget_exhaustion_reported_as_skip(self):
        (report,) = list(verify_all([Poset(5)], ["hstar3way"], budget=3))
        (check,) = report.checks
        assert check.passed is None
        assert "skip" in check.detail

    def test_time_limit_skips_remaining_checks(self):
        (report,) = list(verify_all([Poset(4)], ["thm1.2", "conj6.2"], time_limit=0.0))
        # the first check starts before the clock is consulted; the rest skip
        assert report.checks[0].name == "thm1.2"
        assert report.checks[1].passed is None
        assert "time limit" in report.checks[1].detail

    def test_records_are_json_with_decimal_strings(self):
        (report,) = list(verify_all([Graph(2, [(1, 2)])], ["conj6.1"], mutate=True))
        record = json.loads(json.dumps(report.to_record()))
        assert record["type"] == "report"
        witnesses = record["checks"][0]["witnesses"]
        assert witnesses["h_G"] == ["0", "0", "-2"]

    def test_summary_line(self):
        summary = Summary()
        for report in verify_all(enumerate_labeled_posets(2), ["thm1.2"]):
            summary.add(report)
        assert summary.line() == "3 inputs, 0 failures"
        assert summary.to_record()["checks_run"] == 3

    def test_reports_deterministic_given_seed(self):
        def run():
            corpus = random_instances("graph", 5, 5, seed=11)
            records = []
            for report in verify_all(corpus, ["thm1.4", "conj6.4"]):
                record = report.to_record()
                del record["seconds"]  # wall clock is the one nondeterministic field
                records.append(record)
            return records

        assert run() == run()
