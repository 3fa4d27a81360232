import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cupring.linalg import QMatrix, matrix_rank
from cupring.linforms import (LinFormMatrix, NotSkewSymmetricError, determinant, evaluate,
                              iter_minors, minor, minors, pfaffian)
from cupring.polynomial import Polynomial
from oracles import leibniz_det, matching_pfaffian

x1, x2, x3 = Polynomial.variables(3)
ZERO3 = Polynomial.zero(3)
DELTA_T3 = LinFormMatrix([[ZERO3, -x3, x2], [x3, ZERO3, -x1], [-x2, x1, ZERO3]], 3)


def generic_skew(n):
    """Skew matrix whose upper entries are independent variables a_ij."""
    nv = n * (n - 1) // 2
    names = {}
    rows = [[Polynomial.zero(nv)] * n for _ in range(n)]
    for t, (i, j) in enumerate(combinations(range(n), 2)):
        v = Polynomial.variable(nv, t)
        names[(i, j)] = v
        rows[i][j], rows[j][i] = v, -v
    return LinFormMatrix(rows, nv), names


def random_linform_matrix(rng, m, n, nvars, bound=3):
    return LinFormMatrix.from_coefficients(
        [[[rng.randint(-bound, bound) for _ in range(nvars)] for _ in range(n)] for _ in range(m)])


def random_skew(rng, n, nvars, bound=3):
    rows = [[Polynomial.zero(nvars)] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        p = Polynomial.linear_form([rng.randint(-bound, bound) for _ in range(nvars)])
        rows[i][j], rows[j][i] = p, -p
    return LinFormMatrix(rows, nvars)


def test_rejects_nonlinear_entries():
    with pytest.raises(ValueError):
        LinFormMatrix([[x1 * x2]], 3)
    with pytest.raises(ValueError):
        LinFormMatrix([[x1 + 1]], 3)


def test_t3_two_by_two_minors():
    # cofactor expansion by hand, lexicographic in (row set, column set)
    expected = [
        x3 ** 2, -x2 * x3, x1 * x3,
        -x2 * x3, x2 ** 2, -x1 * x2,
        x1 * x3, -x1 * x2, x1 ** 2,
    ]
    ideal = minors(DELTA_T3, 2)
    assert not ideal.unit
    assert list(ideal.generators) == expected
    assert ideal.labels[0] == ((0, 1), (0, 1))
    for (rows, cols), g in zip(ideal.labels, ideal.generators):
        sub = [[DELTA_T3[i, j] for j in cols] for i in rows]
        assert g == leibniz_det(sub, 3)


def test_minor_size_conventions():
    row = LinFormMatrix([[x1, x2, x3, ZERO3]], 3)
    too_big = minors(row, 3)
    assert too_big.generators == () and not too_big.unit
    assert too_big.vanishes_at([1, 2, 3])
    for s in (0, -1):
        unit = minors(DELTA_T3, s)
        assert unit.unit and not unit.vanishes_at([0, 0, 0])


def test_determinant_examples():
    # expanding the 3x3 skew determinant by hand gives 0
    assert determinant(DELTA_T3).is_zero()
    y = Polynomial.variable(1, 0)
    assert determinant(LinFormMatrix([[y]], 1)) == y
    with pytest.raises(ValueError):
        determinant(LinFormMatrix([[x1, x2]], 3))


def test_pfaffian_two_by_two():
    y = Polynomial.variable(1, 0)
    z = Polynomial.zero(1)
    assert pfaffian(LinFormMatrix([[z, y], [-y, z]], 1)) == y


def test_pfaffian_generic_four():
    m, a = generic_skew(4)
    expected = a[(0, 1)] * a[(2, 3)] - a[(0, 2)] * a[(1, 3)] + a[(0, 3)] * a[(1, 2)]
    assert pfaffian(m) == expected
    assert matching_pfaffian(m.entries, m.nvars) == expected
    assert determinant(m) == expected ** 2
    assert leibniz_det(m.entries, m.nvars) == expected ** 2


def test_pfaffian_bordered_t3_is_zero():
    # the x4 row and column are zero, so every matching uses a zero entry
    x = Polynomial.variables(4)
    z = Polynomial.zero(4)
    m = LinFormMatrix([[z, -x[2], x[1], z], [x[2], z, -x[0], z], [-x[1], x[0], z, z], [z, z, z, z]], 4)
    assert pfaffian(m).is_zero()


def test_pfaffian_rejects_bad_input():
    with pytest.raises(NotSkewSymmetricError, match="even size"):
        pfaffian(DELTA_T3)
    bad = LinFormMatrix([[ZERO3, x1], [x1, ZERO3]], 3)
    with pytest.raises(NotSkewSymmetricError, match=r"entry \(1,2\)"):
        pfaffian(bad)
    diag = LinFormMatrix([[x1, x2], [-x2, ZERO3]], 3)
    with pytest.raises(NotSkewSymmetricError, match=r"entry \(1,1\)"):
        pfaffian(diag)


def test_evaluate_examples():
    assert evaluate(DELTA_T3, [0, 0, 0]) == QMatrix.zeros(3, 3)
    # substituted by hand
    assert evaluate(DELTA_T3, [1, 0, 0]) == QMatrix([[0, 0, 0], [0, 0, -1], [0, 1, 0]])
    with pytest.raises(ValueError):
        evaluate(DELTA_T3, [1, 0])


@pytest.mark.parametrize("seed", range(5))
def test_any_matrix_vanishes_at_origin(seed):
    rng = random.Random(seed)
    m = random_linform_matrix(rng, 3, 4, 5)
    assert evaluate(m, [0] * 5) == QMatrix.zeros(3, 4)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_generic_pfaffian_matches_matchings(n):
    m, _ = generic_skew(n)
    pf = pfaffian(m)
    assert pf == matching_pfaffian(m.entries, m.nvars)
    assert determinant(m) == pf ** 2


@pytest.mark.parametrize("seed", range(20))
def test_det_is_pf_squared_random_skew(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 4, 6])
    m = random_skew(rng, n, rng.randint(1, 5))
    assert determinant(m) == pfaffian(m) ** 2


@pytest.mark.parametrize("seed", range(10))
def test_odd_skew_determinant_vanishes(seed):
    rng = random.Random(100 + seed)
    n = rng.choice([1, 3, 5, 7])
    assert determinant(random_skew(rng, n, 4)).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_cofactor_matches_leibniz(n):
    m = random_linform_matrix(random.Random(n), n, n, 3)
    assert determinant(m) == leibniz_det(m.entries, 3)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_bareiss_matches_cofactor(n):
    m = random_linform_matrix(random.Random(7 * n), n, n, 4, bound=2)
    assert determinant(m, "bareiss") == determinant(m, "cofactor")


def test_single_minor_matches_table():
    m = random_linform_matrix(random.Random(3), 4, 5, 3)
    for rows, cols, p in iter_minors(m, 3):
        assert minor(m, rows, cols) == p


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(1, 5), st.integers(1, 5))
def test_rank_characterised_by_minors(seed, m, n):
    # rank(M(p)) <= s - 1  iff  every s x s minor vanishes at p
    rng = random.Random(seed)
    mat = random_linform_matrix(rng, m, n, 3, bound=1)
    for _ in range(3):
        p = [rng.randint(-2, 2) for _ in range(3)]
        r = matrix_rank(evaluate(mat, p))
        assert r <= min(m, n)
        for s in range(0, min(m, n) + 2):
            assert (r <= s - 1) == minors(mat, s).vanishes_at(p)
