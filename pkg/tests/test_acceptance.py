"""The acceptance gate, one test per criterion.

Each criterion prints its own summary line; the assertion carries it so
a failure shows the detail.  Criterion 12 honors WEBKUP_SEARCH_BUDGET
(seconds; default 1800) for the counterexample search.
"""

from webkup import acceptance


def _check(number):
    res = acceptance.CRITERIA[number]()
    print(res.line())
    assert res.passed, res.line()


def test_criterion_01_evaluator_agreement():
    _check(1)


def test_criterion_02_ground_truth_relations():
    _check(2)


def test_criterion_03_unitriangularity():
    _check(3)


def test_criterion_04_canonical_flow():
    _check(4)


def test_criterion_05_basis_counts():
    _check(5)


def test_criterion_06_generator_relations():
    _check(6)


def test_criterion_07_inverse_growth():
    _check(7)


def test_criterion_08_forms_and_adjunction():
    _check(8)


def test_criterion_09_center_dimensions():
    _check(9)


def test_criterion_10_root_of_unity():
    _check(10)


def test_criterion_11_dual_canonical():
    _check(11)


def test_criterion_12_counterexample_search():
    _check(12)


def test_criterion_13_tableau_dictionary():
    _check(13)
