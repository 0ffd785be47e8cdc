from math import comb

import pytest

from src.errors import CodewordError
from src.graphs.graph_states import ghz_reference
from src.simulation.distance import PauliErrorIter, kl_distance, kl_report, m_copy_ghz_code
from src.simulation.simulator import pauli_matrix_element
from src.simulation.statevector import StateVec


@pytest.mark.parametrize('n, d', [(1, 1), (3, 2), (5, 3), (9, 2), (16, 2)])
def test_enumeration_size(n, d):
    iterator = PauliErrorIter(n, d)
    expected = sum(comb(n, w) * 3 ** w for w in range(1, d + 1))
    assert len(iterator) == expected
    if n <= 9:
        assert sum(1 for _ in iterator) == expected


def test_enumeration_is_sorted_by_weight():
    weights = [op.weight for op in PauliErrorIter(4, 3)]
    assert weights == sorted(weights)
    assert min(weights) == 1


def test_identity_only_when_requested():
    first = next(iter(PauliErrorIter(2, 1, include_identity=True)))
    assert first.weight == 0
    assert len(PauliErrorIter(2, 1, include_identity=True)) == 1 + 6


@pytest.mark.parametrize('m', [2, 3, 4])
def test_single_ghz_pair_has_distance_one(m):
    report = kl_report(m_copy_ghz_code(m, copies=1), d_max=m)
    assert report.distance == 1
    assert report.found
    assert report.condition == 'off_diagonal'
    assert 'Z' in report.operator


def test_two_copy_code_has_distance_two():
    assert kl_distance(m_copy_ghz_code(2), d_max=3) == 2


def test_nine_qubit_code_has_distance_three():
    report = kl_report(m_copy_ghz_code(3), d_max=3)
    assert report.distance == 3
    assert report.operator.count('I') == 6


@pytest.mark.slow
def test_sixteen_qubit_code_has_distance_four():
    assert kl_distance(m_copy_ghz_code(4), d_max=4) == 4


def test_no_violation_reports_marker():
    report = kl_report(m_copy_ghz_code(3), d_max=2)
    assert not report.found
    assert report.distance == 3
    assert report.checked == 9 * 3 + 36 * 9


def test_condition_one_holds_below_distance():
    codewords = m_copy_ghz_code(3)
    for op in PauliErrorIter(9, 2):
        a = pauli_matrix_element(codewords[0], op, codewords[0])
        b = pauli_matrix_element(codewords[1], op, codewords[1])
        assert abs(a - b) <= 1e-10


def test_non_orthonormal_codewords_rejected():
    with pytest.raises(CodewordError):
        kl_distance([ghz_reference(2), ghz_reference(2)], d_max=1)
    with pytest.raises(CodewordError):
        kl_distance([StateVec.zero(2)], d_max=1)


def test_report_serializes():
    data = kl_report(m_copy_ghz_code(2, copies=1), d_max=1).to_dict()
    assert data['distance'] == 1
    assert isinstance(data['value'], list)
