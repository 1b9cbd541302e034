"""Exact matrix algebra and subspace lattice operations.

Numeric oracle: numpy ranks and solves on random small matrices must
agree with the exact routines.
"""

import random
from fractions import Fraction

import numpy

from eigenforge.scalars import GaussRational, I, ONE, ZERO, scalar
from eigenforge.linalg import (
    ComplexSubspace,
    Matrix,
    RealSubspace,
    dot_bilinear,
    dot_hermitian,
    gram_schmidt_hermitian,
    matrix_from_cols,
    vec,
    vec_is_zero,
)


def rand_scalar(rng):
    return scalar(Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                  Fraction(rng.randint(-4, 4), rng.randint(1, 3)))


def rand_matrix(rng, nrows, ncols):
    return Matrix([[rand_scalar(rng) for _ in range(ncols)] for _ in range(nrows)], ncols=ncols)


def test_matrix_arithmetic():
    A = Matrix([[1, 2], [3, 4]])
    B = Matrix([[0, 1], [1, 0]])
    assert A * B == Matrix([[2, 1], [4, 3]])
    assert (A + B) - B == A
    assert A.transpose() == Matrix([[1, 3], [2, 4]])
    assert A.det() == scalar(-2)
    assert A * A.inverse() == Matrix.identity(2)


def test_conj_transpose():
    A = Matrix([[I, 1], [0, 2 * I]])
    assert A.conj_transpose() == Matrix([[-I, 0], [1, -2 * I]])


def test_rref_and_rank_against_numpy():
    rng = random.Random(7)
    for _ in range(25):
        nrows = rng.randint(1, 5)
        ncols = rng.randint(1, 5)
        A = rand_matrix(rng, nrows, ncols)
        exact = A.rank()
        numeric = numpy.linalg.matrix_rank(A.to_float(), tol=1e-9)
        assert exact == numeric


def test_nullspace_is_kernel():
    rng = random.Random(11)
    for _ in range(25):
        A = rand_matrix(rng, rng.randint(1, 4), rng.randint(1, 5))
        basis = A.nullspace()
        assert len(basis) == A.ncols - A.rank()
        for u in basis:
            assert vec_is_zero(A.apply(u))


def test_det_multiplicative():
    rng = random.Random(13)
    for _ in range(15):
        A = rand_matrix(rng, 3, 3)
        B = rand_matrix(rng, 3, 3)
        assert (A * B).det() == A.det() * B.det()


def test_solve():
    A = Matrix([[1, 1], [1, -1]])
    x = A.solve(vec([2, 0]))
    assert x == vec([1, 1])
    # inconsistent system
    B = Matrix([[1, 1], [1, 1]])
    assert B.solve(vec([0, 1])) is None


def test_matrix_from_cols():
    M = matrix_from_cols([vec([1, 2]), vec([3, 4])])
    assert M == Matrix([[1, 3], [2, 4]])


def test_subspace_membership_and_equality():
    V = ComplexSubspace(3, [vec([1, 0, 1]), vec([0, 1, 0])])
    W = ComplexSubspace(3, [vec([1, 1, 1]), vec([2, -1, 2])])
    assert V == W
    assert V.contains(vec([3, 5, 3]))
    assert not V.contains(vec([1, 0, 0]))
    assert V.dim == 2


def test_subspace_sum_intersect():
    e1 = vec([1, 0, 0])
    e2 = vec([0, 1, 0])
    e3 = vec([0, 0, 1])
    V = ComplexSubspace(3, [e1, e2])
    W = ComplexSubspace(3, [e2, e3])
    assert V.sum(W).dim == 3
    X = V.intersect(W)
    assert X.dim == 1 and X.contains(e2)


def test_bilinear_annihilator():
    w = vec([1, I, 0])  # isotropic: w.w = 0
    V = ComplexSubspace(3, [w])
    A = V.bilinear_annihilator()
    assert A.dim == 2
    assert A.contains(w)  # self-annihilating
    for b in A.basis:
        assert dot_bilinear(w, b) == ZERO


def test_real_points_of_conj_stable_space():
    # span{ (1,i), (1,-i) } is conjugation stable and equals all of C^2
    V = ComplexSubspace(2, [vec([1, I]), vec([1, -I])])
    assert V.real_points().dim == 2
    # span{ (1,i) } alone meets its conjugate trivially
    W = ComplexSubspace(2, [vec([1, I])])
    assert W.real_points().dim == 0


def test_hermitian_complement_within():
    e1 = vec([1, 0, 0])
    inside = ComplexSubspace(3, [vec([1, 1, 0]), vec([0, 0, 1])])
    K = ComplexSubspace(3, [e1])
    C = K.hermitian_complement_within(inside)
    assert C.dim == 1
    for b in C.basis:
        assert dot_hermitian(e1, b) == ZERO


def test_gram_schmidt_hermitian():
    vs = [vec([1, 1, 0]), vec([1, 0, 1]), vec([2, 1, 1])]
    basis = gram_schmidt_hermitian(vs)
    assert len(basis) == 2  # third is dependent
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            assert dot_hermitian(basis[a], basis[b]) == ZERO
    span = ComplexSubspace(3, basis)
    assert span == ComplexSubspace(3, vs)


def test_real_subspace_projector():
    V = RealSubspace(3, [(1, 1, 0), (0, 0, 1)])
    P = V.projector()
    assert P * P == P
    assert P.is_symmetric()
    # projects onto V: members fixed, orthogonal complement killed
    assert P.apply(vec([1, 1, 0])) == vec([1, 1, 0])
    assert P.apply(vec([1, -1, 0])) == vec([0, 0, 0])


def test_real_subspace_complement():
    V = RealSubspace(3, [(1, 1, 0)])
    C = V.orthogonal_complement()
    assert C.dim == 2
    assert C.contains((1, -1, 0))
    assert C.contains((0, 0, 1))
