import json

import jsonschema
import pytest

from dikernels.core import from_arcs
from dikernels.errors import OrderTooLarge, UnknownLemma, UnknownSuite
from dikernels.families import antihole, directed_cycle, named_digraph, transitive_tournament
from dikernels.verification import (
    HYPOTHESIS_NOT_MET,
    PASS,
    PASS_VACUOUS,
    REPORT_SCHEMA,
    SUITES,
    check_lemma_properties,
    is_minimal_cki,
    name_of,
    run_lemma_suite,
    suite_ids,
    verify_theorem,
)


def test_registry_covers_required_suites():
    required = {
        "asym-cki-lt8", "semicomplete-cki", "local-semicomplete-cki", "arc-local-cki", "3qt-cki",
        "perfect-ug-cki", "4qt-asym-cki", "4qt-diam2-2sym", "asym-diam2-cki", "4t-cki",
        "2at-diam2-cki", "4at-asym-diam3-cki", "odd-even-cycles", "4qt-diam3-none",
    }
    assert required <= set(suite_ids())
    for suite in SUITES.values():
        for expr in suite.expected + suite.direct_checks:
            named_digraph(expr)


def test_errors():
    with pytest.raises(UnknownSuite):
        verify_theorem("nope")
    with pytest.raises(OrderTooLarge):
        verify_theorem("asym-cki-lt8", 8)
    with pytest.raises(OrderTooLarge):
        verify_theorem("semicomplete-cki", 8)
    with pytest.raises(UnknownLemma):
        check_lemma_properties(directed_cycle(3), "nope")


def test_semicomplete_suite_report():
    rep = verify_theorem("semicomplete-cki", 5)
    assert rep.passed and rep.status == PASS
    assert [c.examined for c in rep.per_order_counts] == [1, 2, 7, 42, 582]
    assert sorted(name for _, name in rep.witnesses) == ["antihole(4)", "antihole(5)", "directed_cycle(3)"]
    data = json.loads(rep.to_json())
    jsonschema.validate(data, REPORT_SCHEMA)
    assert list(data) == ["suite", "max_n", "class", "orders", "witnesses", "expected", "pass", "notes"]


def test_reports_are_deterministic():
    assert verify_theorem("4t-cki", 5).to_json() == verify_theorem("4t-cki", 5).to_json()


def test_lower_bound_trims_expected_set():
    rep = verify_theorem("3qt-cki", 4)
    assert rep.expected == ["antihole(3)", "antihole(4)"]
    assert rep.passed


def test_wrong_expectation_fails():
    # the suite is correct; a truncated bound that still sees all witnesses passes, a tampered one fails
    from dataclasses import replace

    from dikernels import verification

    SUITES_BACKUP = dict(verification.SUITES)
    try:
        verification.SUITES["4t-cki"] = replace(SUITES_BACKUP["4t-cki"], expected=("antihole(3)",))
        rep = verify_theorem("4t-cki", 4)
        assert not rep.passed
        assert any("UNEXPECTED" in note for note in rep.notes)
    finally:
        verification.SUITES.clear()
        verification.SUITES.update(SUITES_BACKUP)


def test_cycle_suite():
    rep = verify_theorem("odd-even-cycles", 15)
    assert rep.passed
    assert len(rep.witnesses) == 7


def test_minimality_helper():
    assert is_minimal_cki(directed_cycle(5))
    # C3 plus a vertex dominating nothing: the 3-cycle is a proper induced CKI subdigraph
    d = from_arcs(4, [(0, 1), (1, 2), (2, 0), (3, 0)])
    assert not is_minimal_cki(d)


def test_name_of():
    assert name_of(antihole(5)) == "antihole(5)"
    assert name_of(transitive_tournament(3)) is None


def test_lemma_gates():
    assert check_lemma_properties(directed_cycle(5), "asym-4at-neigh") is HYPOTHESIS_NOT_MET
    assert check_lemma_properties(transitive_tournament(3), "2at-structure") is HYPOTHESIS_NOT_MET
    assert check_lemma_properties(directed_cycle(4), "2at-structure") == []


def test_lemma_checker_reports_violations():
    from dikernels.digraph6 import decode_digraph6

    # diameter 4; base vertex 0 has S_3 = {1, 4} with 4 -> 1 and an empty S_4
    d = decode_digraph6("&DAI@D?")
    assert check_lemma_properties(d, "4qt-dia4o5-2") == []
    strict = check_lemma_properties(d, "4qt-dia4o5-2", strict=True)
    assert strict and all("clause 7" in v for v in strict)
    assert check_lemma_properties(d, "4qt-dia4o5") == []


def test_lemma_suite_vacuity_labels():
    rep = run_lemma_suite("2at-structure", 4)
    assert rep.status == PASS
    rep = run_lemma_suite("kqtlargediam", 5)
    assert rep.status == PASS_VACUOUS  # no 3-quasi-transitive class of order <= 5 has distance >= 5
    assert rep.passed
