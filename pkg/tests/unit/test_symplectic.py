import numpy as np
import pytest

from src.algebra.gf2 import BitMat
from src.algebra.symplectic import PauliOp, Tableau, pauli_encode, pauli_label, symplectic_product
from src.errors import LatticeIndexError, NotInvertibleError, PauliParseError, ShapeError
from src.lattice.toric import LatticeParams, build_toric_tableau


@pytest.mark.parametrize('label', ['XZIY', 'IIII', 'YYY', 'ZXZXZ'])
def test_label_survives_encoding(label):
    assert pauli_label(pauli_encode(label)) == label


def test_encode_rejects_unknown_letters():
    with pytest.raises(PauliParseError):
        pauli_encode('XQZ')


def test_x_and_z_on_the_same_qubit_anticommute():
    assert symplectic_product(pauli_encode('XI'), pauli_encode('ZI')) == 1
    assert pauli_encode('XX').commutes_with(pauli_encode('ZZ'))
    assert not pauli_encode('XI').commutes_with(pauli_encode('YI'))


def test_product_drops_phase():
    assert (pauli_encode('XZ') * pauli_encode('ZZ')).label() == 'YI'


def test_weight_and_support():
    op = pauli_encode('IXYZI')
    assert op.weight == 3
    assert op.support() == (2, 3, 4)


def test_vector_layout_puts_z_rows_first():
    op = pauli_encode('XZ')
    assert op.to_vector().to_list() == [0, 1, 1, 0]
    assert PauliOp.from_vector(op.to_vector()) == op


def test_tableau_matrix_view():
    t = Tableau(2, (pauli_encode('XX'), pauli_encode('ZZ')))
    assert t.to_matrix().shape == (4, 2)
    assert Tableau.from_matrix(t.to_matrix()) == t
    assert t.is_self_orthogonal()
    assert t.rank() == 2


def test_commutation_matrix_flags_anticommuting_pairs():
    t = Tableau(1, (pauli_encode('X'), pauli_encode('Z')))
    assert t.commutation_matrix() == BitMat.from_array([[0, 1], [1, 0]])
    assert not t.is_self_orthogonal()


def test_hadamard_swaps_letters_on_subset():
    t = Tableau(3, (pauli_encode('XZY'),))
    assert t.hadamard_conjugate([1, 2]).labels() == ['ZXY']


def test_hadamard_rejects_bad_qubit():
    with pytest.raises(LatticeIndexError):
        Tableau(2, (pauli_encode('XX'),)).hadamard_conjugate([3])


def test_right_multiply_combines_generators():
    t = Tableau(2, (pauli_encode('XI'), pauli_encode('IX')))
    r = BitMat.from_array([[1, 0], [1, 1]])
    assert t.right_multiply(r).labels() == ['XX', 'IX']


def test_right_multiply_requires_invertible():
    t = Tableau(2, (pauli_encode('XI'), pauli_encode('IX')))
    with pytest.raises(NotInvertibleError):
        t.right_multiply(BitMat.from_array([[1, 1], [1, 1]]))
    with pytest.raises(ShapeError):
        t.right_multiply(BitMat.identity(3))


def test_right_multiply_keeps_the_group_rank():
    t = Tableau(3, (pauli_encode('XXI'), pauli_encode('IXX'), pauli_encode('ZZZ')))
    r = BitMat.from_array([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert t.right_multiply(r).rank() == t.rank()


def test_graph_form_of_bell_pair():
    t = Tableau(2, (pauli_encode('XZ'), pauli_encode('ZX')))
    assert t.is_graph_form()
    assert not Tableau(2, (pauli_encode('YZ'), pauli_encode('ZX'))).is_graph_form()


def test_permute_and_replace():
    t = Tableau(1, (pauli_encode('X'), pauli_encode('Z')))
    assert t.permute([2, 1]).labels() == ['Z', 'X']
    assert t.replace_generator(2, pauli_encode('Y')).labels() == ['X', 'Y']
    with pytest.raises(ShapeError):
        t.permute([1, 1])


def test_dict_round_trip():
    t = Tableau(3, (pauli_encode('XZI'), pauli_encode('IYZ')))
    assert Tableau.from_dict(t.to_dict()) == t


def _random_invertible(rng, k):
    upper = np.triu(rng.integers(0, 2, size=(k, k)), 1) + np.eye(k, dtype=int)
    lower = np.tril(rng.integers(0, 2, size=(k, k)), -1) + np.eye(k, dtype=int)
    return BitMat.from_array((upper @ lower) % 2)


@pytest.mark.parametrize('L', [2, 3, 4])
def test_hadamard_twice_is_identity(L):
    t = build_toric_tableau(LatticeParams(L))
    rng = np.random.default_rng(L)
    for _ in range(10):
        subset = [int(q) for q in np.flatnonzero(rng.integers(0, 2, size=t.n_qubits)) + 1]
        assert t.hadamard_conjugate(subset).hadamard_conjugate(subset) == t


@pytest.mark.parametrize('L', [2, 3, 4])
def test_right_multiply_keeps_generators_commuting(L):
    t = build_toric_tableau(LatticeParams(L))
    rng = np.random.default_rng(100 + L)
    for _ in range(5):
        r = _random_invertible(rng, t.n_generators)
        moved = t.right_multiply(r)
        assert moved.commutation_matrix().is_zero()
        assert moved.rank() == t.rank()
