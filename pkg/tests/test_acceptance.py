"""One test per acceptance criterion; each records a pass/fail line shown in the summary.

The criteria run through the same code as ``icequiver check``; where a value
comes from an independent computation, the oracle from ``oracles.py`` is
added as an extra check on the same criterion.
"""

from oracles import positive_roots, preprojective_dimension_a, quotient_dimension_by_span

from icequiver import suite
from icequiver.jacobian import jacobian_relations
from icequiver.repfin import dynkin_quiver, indecomposables_dynkin, preprojective_classical


def record(result, log):
    log.append(result.line())
    print(result.line())
    assert result.passed, result.line()


def test_criterion_01_ginzburg_example(acceptance_log):
    record(suite.criterion_1(), acceptance_log)


def test_criterion_02_concentration_verdicts(acceptance_log):
    record(suite.criterion_2(), acceptance_log)


def test_criterion_03_jacobian_dimensions(acceptance_log):
    r = suite.criterion_3()
    for name, expected in (("example2", 7), ("example1", 6)):
        iq, W = suite.load_example(name)
        total, per = quotient_dimension_by_span(iq.quiver, jacobian_relations(iq, W), 6)
        r.add(f"span oracle for {name}", total == expected and per[-1] == 0, f"{total} by length {per}")
    record(r, acceptance_log)


def test_criterion_04_boundary_algebra(acceptance_log):
    record(suite.criterion_4(), acceptance_log)


def test_criterion_05_global_dimension(acceptance_log):
    record(suite.criterion_5(), acceptance_log)


def test_criterion_06_preprojective(acceptance_log):
    r = suite.criterion_6()
    for n in (1, 2, 3):
        dim = preprojective_classical(dynkin_quiver(f"A{n}")).dim
        r.add(f"formula oracle A{n}", dim == preprojective_dimension_a(n), str(dim))
    record(r, acceptance_log)


def test_criterion_07_self_injectivity(acceptance_log):
    record(suite.criterion_7(), acceptance_log)


def test_criterion_08_auslander_and_h0(acceptance_log):
    record(suite.criterion_8(), acceptance_log)


def test_criterion_09_cluster_tilting(acceptance_log):
    record(suite.criterion_9(), acceptance_log)


def test_criterion_10_property_suites(acceptance_log):
    r = suite.criterion_10()
    counts = [len(indecomposables_dynkin(dynkin_quiver(f"A{n}"))) for n in (1, 2, 3, 4)]
    r.add("root-count oracle", counts == [positive_roots("A", n) for n in (1, 2, 3, 4)] == [1, 3, 6, 10], str(counts))
    record(r, acceptance_log)
