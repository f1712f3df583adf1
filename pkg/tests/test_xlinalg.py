from fractions import Fraction

import numpy as np
import pytest
import sympy
from sympy import isprime

from killform.base_module import EXC, ErrorCode
from killform.config import CapsConfig, KillformConfig
from killform.models.xlinalg import (
    DetMethod,
    ExactMatrix,
    bareiss_det_rank,
    det_mod,
    dihedral_det_closed_form,
    dihedral_det_printed,
    exact_det,
    hadamard_bound,
    miller_invertible,
    modular_det,
    word_primes,
)


def _random_matrices(count: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, 8))
        a = rng.integers(-6, 7, size=(n, n))
        if rng.random() < 0.25 and n > 1:
            # вырожденная: строка как сумма двух других
            a[-1] = a[0] + (a[1] if n > 2 else 0)
        yield a


def test_bareiss_agrees_with_modular_and_sympy():
    for a in _random_matrices(200, seed=11):
        M = ExactMatrix.from_numpy(a)
        exact = bareiss_det_rank(M)
        reference = sympy.Matrix(a.tolist())
        assert exact.det == int(reference.det())
        assert exact.rank == reference.rank()
        assert exact.nonzero == (exact.det != 0)
        assert modular_det(M).det == exact.det


def test_bareiss_large_entries():
    a = [[10 ** 30 + i * j for j in range(4)] for i in range(4)]
    a[0][0] += 7
    assert bareiss_det_rank(ExactMatrix(a)).det == int(sympy.Matrix(a).det())


def test_bareiss_edge_cases():
    empty = bareiss_det_rank(ExactMatrix([]))
    assert empty.det == 1 and empty.rank == 0
    zero = bareiss_det_rank(ExactMatrix([[0, 0], [0, 0]]))
    assert zero.det == 0 and zero.rank == 0 and zero.degenerate
    with pytest.raises(EXC) as e:
        bareiss_det_rank(ExactMatrix.identity(5), max_dim=4)
    assert e.value.code is ErrorCode.CapExceeded


def test_word_primes():
    primes = word_primes(5)
    assert all(isprime(p) and p < 2 ** 31 for p in primes)
    assert list(primes) == sorted(primes, reverse=True)
    assert word_primes(2) == primes[:2]


def test_hadamard_bound_dominates():
    for a in _random_matrices(50, seed=3):
        M = ExactMatrix.from_numpy(a)
        assert abs(bareiss_det_rank(M).det) <= hadamard_bound(M)


def test_det_mod_matches_exact():
    M = ExactMatrix([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
    p = word_primes(1)[0]
    assert det_mod(M, p) == 4
    assert det_mod(ExactMatrix([[1, 2], [2, 4]]), p) == 0


def test_modular_certificate():
    M = ExactMatrix.identity(6, scale=3) + ExactMatrix.ones(6)
    cert = modular_det(M, only_nonzero=True)
    assert cert.method is DetMethod.CERTIFICATE
    assert cert.nonzero and cert.det is None
    assert cert.certificate_prime == word_primes(1)[0]
    full = modular_det(M)
    assert full.method is DetMethod.MODULAR_CRT
    assert full.det == 3 ** 5 * 9


def test_exact_det_switches_to_modular():
    config = KillformConfig(caps=CapsConfig(max_bareiss_dim=3))
    M = ExactMatrix.identity(5, scale=2) + ExactMatrix.ones(5, scale=-1)
    result = exact_det(M, config)
    assert result.method is DetMethod.MODULAR_CRT
    assert result.det == int(sympy.Matrix(M.rows).det())
    small = exact_det(ExactMatrix.identity(2), config)
    assert small.method is DetMethod.BAREISS


def test_exact_matrix_helpers():
    with pytest.raises(EXC) as e:
        ExactMatrix([[1, 2], [3]])
    assert e.value.code is ErrorCode.DimensionMismatch
    with pytest.raises(EXC):
        ExactMatrix.identity(2) + ExactMatrix.identity(3)

    J = ExactMatrix.anti_identity(3, scale=2)
    assert J.rows == [[0, 0, 2], [0, 2, 0], [2, 0, 0]]
    assert J.permuted([2, 1, 0]) == J
    blocks = ExactMatrix.from_blocks([
        [[[1, 0], [0, 1]], [[5], [6]]],
        [[[7, 8]], [[9]]],
    ])
    assert blocks.rows == [[1, 0, 5], [0, 1, 6], [7, 8, 9]]
    assert blocks.submatrix(0, 2) == ExactMatrix.identity(2)
    assert ExactMatrix.identity(3, scale=4).is_diagonal()
    assert ExactMatrix.identity(3, scale=4).diagonal() == [4, 4, 4]


def test_miller_examples():
    result = miller_invertible(ExactMatrix.identity(2), ExactMatrix.ones(2))
    assert result.invertible and result.det == 3 and result.trace == 2

    singular = miller_invertible(ExactMatrix.identity(1), ExactMatrix([[-1]]))
    assert not singular.invertible and singular.det == 0


def test_miller_random_rank_one():
    rng = np.random.default_rng(5)
    for _ in range(100):
        n = int(rng.integers(1, 6))
        diag = rng.choice([-3, -2, -1, 1, 2, 3, 5], size=n)
        u = rng.integers(-3, 4, size=n)
        v = rng.integers(-3, 4, size=n)
        E = ExactMatrix.from_numpy(np.diag(diag))
        H = ExactMatrix.from_numpy(np.outer(u, v))
        result = miller_invertible(E, H)
        det = bareiss_det_rank(E + H).det
        assert result.det == det
        assert result.invertible == (det != 0)
        expected = sum(Fraction(int(u[i] * v[i]), int(diag[i])) for i in range(n))
        assert result.trace == expected


@pytest.mark.parametrize('E, H, code', [
    ([[1, 1], [0, 1]], [[1, 0], [0, 0]], ErrorCode.ValidationError),
    ([[1, 0], [0, 0]], [[1, 0], [0, 0]], ErrorCode.NotInvertible),
    ([[1, 0], [0, 1]], [[1, 0], [0, 1]], ErrorCode.RankTooLarge),
    ([[1]], [[1, 0], [0, 0]], ErrorCode.DimensionMismatch),
])
def test_miller_errors(E, H, code):
    with pytest.raises(EXC) as e:
        miller_invertible(ExactMatrix(E), ExactMatrix(H))
    assert e.value.code is code


@pytest.mark.parametrize('n, m, det', [
    (3, 0, 27),
    (3, 1, -1539),
    (5, 0, 3125),
    (5, 2, 5 ** 8 * 101),
    (7, 1, -(7 ** 8) * 31),
])
def test_dihedral_closed_form(n, m, det):
    assert dihedral_det_closed_form(n, m) == det
    # (-1)^m n^(n+2m-1) ((4m^2+n)(2m+1) - 2m)
    assert det == (-1) ** m * n ** (n + 2 * m - 1) * ((4 * m * m + n) * (2 * m + 1) - 2 * m)


def test_dihedral_printed_form_disagrees():
    assert dihedral_det_printed(3, 1) == -840
    assert dihedral_det_printed(3, 0) == dihedral_det_closed_form(3, 0)


@pytest.mark.parametrize('n, m', [(4, 0), (3, 2), (1, 0), (5, -1)])
def test_dihedral_parameter_errors(n, m):
    with pytest.raises(EXC) as e:
        dihedral_det_closed_form(n, m)
    assert e.value.code is ErrorCode.ValidationError
