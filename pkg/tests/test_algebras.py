import numpy as np
import pytest

from fspt import (
    OperatorAlgebra,
    algebra_closure,
    commutant,
    find_odd_selfadjoint_unitary,
    full_matrix_algebra,
    graded_center_split,
    graded_split,
    graded_tensor,
    operator_degree,
)
from fspt.errors import (
    CentralityViolation,
    DegreeUntagged,
    DimensionTooLarge,
    NotGraded,
)
from fspt.linalg import in_span, onb_rows, vec
from conftest import I2, SX, SZ, random_unitary

E11 = np.diag([1.0, 0.0]).astype(complex)


def span_equal(a, b, tol=1e-8):
    if a.shape[0] != b.shape[0]:
        return False
    ra, rb = onb_rows(vec(a)), onb_rows(vec(b))
    return all(in_span(ra, m, tol) for m in b) and all(in_span(rb, m, tol) for m in a)


def test_closure_paulis_full():
    alg = algebra_closure([SX, SZ])
    assert alg.dim == 4


def test_closure_single_sx_two_dim():
    alg = algebra_closure([SX])
    assert alg.dim == 2
    assert alg.contains(np.eye(2))
    assert alg.contains(SX)
    assert not alg.contains(SZ)


def test_closure_e11():
    alg = algebra_closure([E11])
    assert alg.dim == 2
    assert alg.contains(np.eye(2)) and alg.contains(E11)


def test_closure_dimension_cap():
    with pytest.raises(DimensionTooLarge):
        algebra_closure([np.eye(65, dtype=complex)])


def test_commutant_full_and_scalars():
    full = full_matrix_algebra(3)
    assert commutant(full).dim == 1
    scalars = OperatorAlgebra(
        np.eye(3, dtype=complex)[None] / np.sqrt(3.0),
        np.eye(3, dtype=complex)[None],
        3,
    )
    assert commutant(scalars).dim == 9


def test_bicommutant_matches_algebra(rng):
    for n, n_gens in [(3, 1), (4, 2), (6, 2)]:
        gens = [
            rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            for _ in range(n_gens)
        ]
        alg = algebra_closure(gens)
        double = commutant(commutant(alg))
        assert double.dim == alg.dim
        assert span_equal(double.basis, alg.basis)


def _pi(a, gamma1, b, deg_b):
    return graded_tensor(a, gamma1, b, deg_b)


def _graded_product_algebra(left_full, right_full):
    """Closure of the Koszul products of (M2 or C*) with (M2 or C*)."""
    left = [(I2, 0), (SX, 1)] if not left_full else [(I2, 0), (SX, 1), (SZ, 0), (SX @ SZ, 1)]
    right = [(I2, 0), (SX, 1)] if not right_full else [(I2, 0), (SX, 1), (SZ, 0), (SX @ SZ, 1)]
    gens = [_pi(a, SZ, b, db) for a, _ in left for b, db in right]
    return algebra_closure(gens)


def test_graded_tensor_even_is_plain_kron():
    a = np.array([[1, 2], [3, 4]], dtype=complex)
    assert np.allclose(graded_tensor(a, SZ, SZ, 0), np.kron(a, SZ))


def test_graded_tensor_gamma_squares_away():
    assert np.allclose(graded_tensor(SZ, SZ, SX, 1), np.kron(np.eye(2), SX))


def test_graded_tensor_requires_degree():
    with pytest.raises(DegreeUntagged):
        graded_tensor(I2, SZ, SX, None)
    with pytest.raises(DegreeUntagged):
        graded_tensor(I2, SZ, SX + SZ, None, gamma2=SZ)
    assert operator_degree(SX, SZ) == 1


def _random_homogeneous(rng, gamma):
    d = rng.integers(0, 2)
    x = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    h = (x + gamma @ x @ gamma) / 2 if d == 0 else (x - gamma @ x @ gamma) / 2
    return h, d


def test_koszul_product_and_star_rules(rng):
    for _ in range(25):
        a1, da1 = _random_homogeneous(rng, SZ)
        a2, da2 = _random_homogeneous(rng, SZ)
        b1, db1 = _random_homogeneous(rng, SZ)
        b2, db2 = _random_homogeneous(rng, SZ)
        lhs = _pi(a1, SZ, b1, db1) @ _pi(a2, SZ, b2, db2)
        rhs = (-1.0) ** (db1 * da2) * _pi(a1 @ a2, SZ, b1 @ b2, (db1 + db2) % 2)
        assert np.allclose(lhs, rhs, atol=1e-12)
        star_lhs = _pi(a1, SZ, b1, db1).conj().T
        star_rhs = (-1.0) ** (da1 * db1) * _pi(
            a1.conj().T, SZ, b1.conj().T, db1
        )
        assert np.allclose(star_lhs, star_rhs, atol=1e-12)


def test_commutant_of_graded_tensor_four_cases():
    """Nullspace commutants match the predicted generators.

    The prediction uses only the elementary commutants M2' = C1 and
    C*' = span{1, sx}, combined as even' (x) right' and odd' (x) right' G2.
    """
    m2_parts = {"even": [I2], "odd": []}
    cl_parts = {"even": [I2], "odd": [SX]}
    m2_comm = [I2 / np.sqrt(2)]
    cl_comm = [I2 / np.sqrt(2), SX / np.sqrt(2)]
    cases = [
        (True, True, m2_parts, m2_comm),
        (True, False, m2_parts, cl_comm),
        (False, True, cl_parts, m2_comm),
        (False, False, cl_parts, cl_comm),
    ]
    for left_full, right_full, left_comm_parts, right_comm in cases:
        alg = _graded_product_algebra(left_full, right_full)
        comm = commutant(alg)
        predicted = []
        parts = m2_parts if left_full else cl_parts
        for a in parts["even"]:
            predicted.extend(np.kron(a, b) for b in right_comm)
        for a in parts["odd"]:
            predicted.extend(np.kron(a, b @ SZ) for b in right_comm)
        predicted = np.stack(predicted)
        assert comm.dim == predicted.shape[0]
        rows = onb_rows(vec(predicted))
        assert all(in_span(comm.basis_rows, m, 1e-8) for m in predicted)
        assert all(in_span(rows, m, 1e-8) for m in comm.basis)


def test_graded_center_split_factor():
    even, odd, b = graded_center_split(full_matrix_algebra(2), SZ)
    assert even.shape[0] == 1 and odd.shape[0] == 0 and b is None


def test_graded_center_split_clifford_line():
    alg = algebra_closure([SX])
    even, odd, b = graded_center_split(alg, SZ)
    assert odd.shape[0] == 1
    assert np.allclose(b, SX) or np.allclose(b, -SX)


def test_graded_center_split_centrality_violation():
    diag = algebra_closure([np.diag([1.0, 0.0]).astype(complex)])
    with pytest.raises(CentralityViolation):
        graded_center_split(diag, np.eye(2, dtype=complex))


def test_graded_split_not_graded():
    # span{1, E11} inside M3 is not invariant under the 0 <-> 1 swap
    e11 = np.diag([1.0, 0.0, 0.0]).astype(complex)
    swap = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]], dtype=complex)
    alg = algebra_closure([e11])
    with pytest.raises(NotGraded):
        graded_split(alg, swap)


def test_find_odd_selfadjoint_unitary():
    assert find_odd_selfadjoint_unitary(full_matrix_algebra(2), SZ) is not None
    trivially_graded = full_matrix_algebra(2)
    assert find_odd_selfadjoint_unitary(trivially_graded, np.eye(2, dtype=complex)) is None


def test_closure_invariant_under_conjugation(rng):
    t = random_unitary(4, rng)
    alg = algebra_closure([np.kron(SX, I2), np.kron(SZ, SX)])
    moved = alg.conjugated(t)
    for m in moved.basis:
        assert abs(np.linalg.norm(m) - 1.0) < 1e-10
    assert moved.contains(t @ np.kron(SX, I2) @ t.conj().T)
