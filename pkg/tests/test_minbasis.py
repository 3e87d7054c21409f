import random

import pytest

from eigmap.fields import GF, QQ
from eigmap.generators import random_singular_matrix
from eigmap.minbasis import (
    MinimalBasis,
    forney_check,
    left_kernel_minimal_basis,
    matvec,
    minimal_indices_oracle,
    right_kernel_minimal_basis,
    transform_minimal_basis,
)
from eigmap.polymat import PolyMatrix
from eigmap.ratmap import new_map, phi_matrix

from conftest import matrix, px, py


def test_right_kernel_trivial(intro_matrix):
    basis = right_kernel_minimal_basis(intro_matrix)
    assert basis.size == 0
    assert basis.indices == ()
    basis_i = right_kernel_minimal_basis(PolyMatrix.identity(QQ, 3))
    assert basis_i.size == 0


def test_right_kernel_chain_example(chain_matrix):
    basis = right_kernel_minimal_basis(chain_matrix)
    assert basis.indices == (2,)
    assert basis.vectors[0] == (px("1"), px("-x"), px("x^2"), px("0"))


def test_left_kernel_goldens(intro_matrix, intro_map):
    left = left_kernel_minimal_basis(intro_matrix)
    assert left.indices == (0, 1)
    Q = phi_matrix(intro_matrix, intro_map)
    leftq = left_kernel_minimal_basis(Q)
    assert leftq.indices == (0, 2)
    regular = matrix([["x", "1"], ["0", "x-1"]])
    assert left_kernel_minimal_basis(regular).size == 0


def test_zero_matrix_kernel():
    Z = PolyMatrix.zero(QQ, 2, 3, grade=1)
    basis = right_kernel_minimal_basis(Z)
    assert basis.indices == (0, 0, 0)


def test_forney_goldens(chain_matrix):
    good = right_kernel_minimal_basis(chain_matrix)
    diag = forney_check(chain_matrix, good)
    assert diag.ok
    assert diag.max_minor_degree == 2 and diag.order == 2

    scaled = MinimalBasis(
        field=QQ,
        ambient_dim=4,
        vectors=((px("x"), px("-x^2"), px("x^3"), px("0")),),
        indices=(3,),
    )
    diag2 = forney_check(chain_matrix, scaled)
    assert not diag2.ok
    assert diag2.minor_gcd == px("x")

    empty = MinimalBasis.empty(QQ, 3)
    assert forney_check(PolyMatrix.identity(QQ, 3), empty).ok


def test_forney_rejects_non_kernel_vectors(chain_matrix):
    bogus = MinimalBasis(
        field=QQ,
        ambient_dim=4,
        vectors=((px("1"), px("0"), px("0"), px("0")),),
        indices=(0,),
    )
    with pytest.raises(ValueError):
        forney_check(chain_matrix, bogus)


def test_oracle_goldens(intro_matrix, chain_matrix):
    assert minimal_indices_oracle(chain_matrix, degree_cap=8) == (2,)
    assert minimal_indices_oracle(intro_matrix, degree_cap=8) == ()
    D = matrix([["x", "0"], ["0", "0"]])
    assert minimal_indices_oracle(D) == (0,)
    basis = right_kernel_minimal_basis(D)
    assert basis.vectors[0] == (px("0"), px("1"))


def test_oracle_matches_sweep_random():
    rng = random.Random(21)
    for trial in range(12):
        field = QQ if trial % 2 == 0 else GF(7)
        P = random_singular_matrix(field, rng, max_rows=3, max_cols=4, max_deg=2)
        basis = right_kernel_minimal_basis(P)
        assert tuple(sorted(basis.indices)) == minimal_indices_oracle(P)
        assert forney_check(P, basis).ok
        for vec in basis.vectors:
            assert all(e.is_zero() for e in matvec(P, vec))


def test_transform_basis_dickson(chain_matrix):
    m = new_map(py("y^2+1"), py("y"))
    basis = right_kernel_minimal_basis(chain_matrix)
    moved = transform_minimal_basis(chain_matrix, basis, m)
    assert moved.indices == (4,)
    assert moved.vectors[0] == (
        py("y^2"),
        py("-y*(y^2+1)"),
        py("(y^2+1)^2"),
        py("0"),
    )


def test_transform_empty_basis(intro_matrix, intro_map):
    empty = right_kernel_minimal_basis(intro_matrix)
    moved = transform_minimal_basis(intro_matrix, empty, intro_map)
    assert moved.size == 0


def test_transform_left_basis(intro_matrix, intro_map):
    left = left_kernel_minimal_basis(intro_matrix)
    moved = transform_minimal_basis(intro_matrix.transpose(), left, intro_map)
    assert moved.indices == (0, 2)


def test_indices_scale_by_G_random():
    rng = random.Random(33)
    for trial in range(6):
        field = QQ if trial % 2 == 0 else GF(7)
        P = random_singular_matrix(field, rng, max_rows=3, max_cols=4, max_deg=2)
        m = new_map(py("y^2+1", field), py("y", field))
        Q = phi_matrix(P, m)
        right_p = right_kernel_minimal_basis(P).indices
        right_q = right_kernel_minimal_basis(Q).indices
        assert right_q == tuple(2 * b for b in right_p)


def test_minor_relation_under_transform():
    # the maximal minors of the transformed basis are the images of the
    # original minors at the basis order
    from eigmap.polymat import minor
    from eigmap.ratmap import phi_scalar
    from itertools import combinations

    rng = random.Random(14)
    for trial in range(4):
        field = QQ if trial % 2 == 0 else GF(7)
        P = random_singular_matrix(field, rng, max_rows=3, max_cols=4, max_deg=2)
        m = new_map(py("y^2+1", field), py("y", field))
        basis = right_kernel_minimal_basis(P)
        if basis.size == 0:
            continue
        moved = transform_minimal_basis(P, basis, m)
        V = basis.as_matrix()
        W = moved.as_matrix()
        B = basis.order
        for rows_idx in combinations(range(basis.ambient_dim), basis.size):
            cols = tuple(range(basis.size))
            zeta = minor(V, rows_idx, cols)
            xi = minor(W, rows_idx, cols)
            if zeta.is_zero():
                assert xi.is_zero()
            else:
                assert xi == phi_scalar(zeta, B, m)
