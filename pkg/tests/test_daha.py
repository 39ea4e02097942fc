import numpy as np
import pytest

from slkcheck.daha import (
    TensorContext,
    casimir_compatibility,
    charpoly,
    flip,
    gl_generator,
    integer_roots,
    omega_pair,
    spectrum_is_integral,
    t_op,
    verify_daha,
    x_op,
)


def test_flip_is_transposition():
    ctx = TensorContext(2, 0, 2)
    f = flip(ctx, 0, 1)
    assert np.array_equal(f @ f, np.eye(4, dtype=np.int64))
    # v0 x v1 -> v1 x v0: basis order 00,01,10,11
    v = np.zeros(4, dtype=np.int64)
    v[1] = 1
    assert list(f @ v) == [0, 0, 1, 0]


def test_omega_pair_cases():
    ctx = TensorContext(2, 0, 2)
    assert np.array_equal(omega_pair(ctx, 0, 1), np.zeros((4, 4), dtype=np.int64))
    assert np.array_equal(omega_pair(ctx, 1, 2), flip(ctx, 0, 1))
    ctx2 = TensorContext(2, 1, 1)
    # m=1: omega with M is the honest 4x4 flip
    assert np.array_equal(omega_pair(ctx2, 0, 1), flip(ctx2, 0, 1))
    with pytest.raises(IndexError):
        omega_pair(ctx, 1, 1)


def test_omega_flip_symmetry():
    ctx = TensorContext(2, 1, 2)
    om = omega_pair(ctx, 1, 2)
    t = t_op(ctx, 1)
    assert np.array_equal(t @ om @ t, om)


def test_x_op_structure():
    ctx = TensorContext(2, 0, 2)
    assert np.array_equal(x_op(ctx, 1), np.zeros((4, 4), dtype=np.int64))
    assert np.array_equal(x_op(ctx, 2), t_op(ctx, 1))
    ctx2 = TensorContext(2, 1, 2)
    assert np.array_equal(x_op(ctx2, 2), omega_pair(ctx2, 0, 2) + omega_pair(ctx2, 1, 2))


def test_verify_daha_reports_epsilon():
    rep = verify_daha(TensorContext(2, 0, 2))
    assert rep["status"] == "pass"
    assert rep["epsilon"] == 1
    rep = verify_daha(TensorContext(2, 1, 2))
    assert rep["status"] == "pass"
    assert rep["epsilon"] == 1


def test_verify_daha_sweep():
    for n in (2, 3):
        for m in (0, 1, 2):
            for d in (2, 3):
                rep = verify_daha(TensorContext(n, m, d))
                assert rep["status"] == "pass", rep
                assert rep["epsilon"] == 1


def test_verify_daha_perturbed_fails():
    rep = verify_daha(TensorContext(2, 1, 2), perturb=True)
    assert rep["status"] == "fail"


def test_casimir_compatibility():
    for n, m, d in [(2, 1, 1), (2, 1, 2), (3, 2, 2), (2, 0, 1)]:
        rep = casimir_compatibility(TensorContext(n, m, d))
        assert rep["status"] == "pass", rep


def test_gl_generator_diagonal_action():
    ctx = TensorContext(2, 1, 1)
    e11 = gl_generator(ctx, 1, 1)
    e22 = gl_generator(ctx, 2, 2)
    # e11 + e22 acts as (number of factors) * Id
    assert np.array_equal(e11 + e22, 2 * np.eye(4, dtype=np.int64))


def test_charpoly_flip():
    ctx = TensorContext(2, 1, 1)
    cp = charpoly(x_op(ctx, 1))
    # flip on C^2 x C^2: (x-1)^3 (x+1)
    assert cp == [1, -2, 0, 2, -1]
    assert sorted(integer_roots(cp)) == [-1, 1, 1, 1]
    cp2, roots = spectrum_is_integral(ctx)
    assert cp2 == cp and roots == [-1, 1, 1, 1]


def test_integer_roots_rejects_irrational():
    with pytest.raises(ValueError):
        integer_roots([1, 0, -2])  # x^2 - 2
