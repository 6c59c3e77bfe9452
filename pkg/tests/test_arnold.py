import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catstego.arnold import (
    ArnoldMatrix,
    Family,
    TransformSpec,
    apply_once,
    grid_side,
    matrix_for,
    matrix_period,
    period,
    period_sweep,
    scramble,
    unscramble,
)
from oracles import AI, BI, CI, I3, orbit_period

CLASSIC = TransformSpec(Family.CLASSIC)
ROW3 = TransformSpec(Family.ROWFIRST, 3)

families = st.sampled_from(list(Family))
specs = st.builds(TransformSpec, families, st.integers(1, 10))


@st.composite
def grids(draw, max_side=64):
    n = draw(st.integers(1, max_side))
    seed = draw(st.integers(0, 2**32 - 1))
    return np.random.default_rng(seed).integers(0, 256, (n, n), dtype=np.uint8)


# -- matrices ------------------------------------------------------------------


def test_matrix_for_classic():
    assert matrix_for(CLASSIC) == ArnoldMatrix(2, 1, 1, 1)


def test_matrix_for_rowfirst():
    assert matrix_for(ROW3) == ArnoldMatrix(3, 4, 1, 1)


def test_colfirst1_matrix_equals_classic():
    assert matrix_for(TransformSpec(Family.COLFIRST, 1)) == matrix_for(CLASSIC)


@given(st.integers(1, 50))
def test_matrix_determinants(i):
    assert _det(matrix_for(TransformSpec(Family.CLASSIC, i))) == 1
    assert _det(matrix_for(TransformSpec(Family.ROWFIRST, i))) == -1
    assert _det(matrix_for(TransformSpec(Family.COLFIRST, i))) == 1


def _det(m):
    return m.a * m.d - m.b * m.c


@pytest.mark.parametrize("i", [0, -1, -7])
@pytest.mark.parametrize("family", [Family.ROWFIRST, Family.COLFIRST])
def test_nonpositive_i_rejected(family, i):
    with pytest.raises(ValueError):
        TransformSpec(family, i)


def test_classic_ignores_i():
    assert TransformSpec(Family.CLASSIC, 7) == TransformSpec(Family.CLASSIC)


def test_non_unimodular_matrix_rejected():
    with pytest.raises(ValueError):
        ArnoldMatrix(2, 0, 0, 2)


# -- golden orbits -------------------------------------------------------------


def test_classic_orbit_step_by_step():
    g = I3
    for expected in AI:
        g = apply_once(g, CLASSIC)
        assert g.tolist() == expected


def test_rowfirst3_orbit_step_by_step():
    g = I3
    for expected in BI:
        g = apply_once(g, ROW3)
        assert g.tolist() == expected


def test_classic_orbit_of_bi2():
    g = scramble(I3, ROW3, 2)
    for expected in CI:
        g = apply_once(g, CLASSIC)
        assert g.tolist() == expected


def test_scramble_equals_iterated_apply_once_on_goldens():
    for t, expected in enumerate(AI, start=1):
        assert scramble(I3, CLASSIC, t).tolist() == expected
    for t, expected in enumerate(BI, start=1):
        assert scramble(I3, ROW3, t).tolist() == expected


@given(grids(max_side=16), specs, st.integers(0, 12))
@settings(deadline=None)
def test_scramble_is_iterated_apply_once(g, spec, t):
    stepped = g
    for _ in range(t):
        stepped = apply_once(stepped, spec)
    assert np.array_equal(scramble(g, spec, t), stepped)


# -- identity and validation edges ---------------------------------------------


def test_single_cell_grid_unchanged():
    g = np.array([[42]])
    assert apply_once(g, ROW3).tolist() == [[42]]
    assert scramble(g, CLASSIC, 9).tolist() == [[42]]


@given(grids(), specs)
def test_t_zero_is_identity(g, spec):
    assert np.array_equal(scramble(g, spec, 0), g)
    assert np.array_equal(unscramble(g, spec, 0), g)


def test_negative_t_rejected():
    with pytest.raises(ValueError):
        scramble(I3, CLASSIC, -1)
    with pytest.raises(ValueError):
        unscramble(I3, CLASSIC, -1)


@pytest.mark.parametrize("shape", [(3, 4), (0, 0), (3,), (2, 2, 2)])
def test_non_square_grids_rejected(shape):
    with pytest.raises(ValueError):
        grid_side(np.zeros(shape, dtype=np.uint8))


# -- inverses ------------------------------------------------------------------


def test_unscramble_golden_examples():
    assert unscramble(np.array(AI[1]), CLASSIC, 2).tolist() == I3.tolist()
    assert unscramble(np.array(BI[4]), ROW3, 5).tolist() == I3.tolist()


@given(grids(max_side=32), specs, st.integers(0, 400))
@settings(deadline=None)
def test_unscramble_inverts_scramble(g, spec, t):
    assert np.array_equal(unscramble(scramble(g, spec, t), spec, t), g)


@given(grids(max_side=24), specs, st.data())
@settings(deadline=None)
def test_unscramble_equals_forward_period_minus_t(g, spec, data):
    p = period(spec, g.shape[0])
    t = data.draw(st.integers(0, p))
    assert np.array_equal(unscramble(g, spec, t), scramble(g, spec, p - t))


def test_huge_t_round_trip():
    g = np.random.default_rng(5).integers(0, 256, (17, 17), dtype=np.uint8)
    t = 10**12 + 7
    assert np.array_equal(unscramble(scramble(g, ROW3, t), ROW3, t), g)


# -- permutation properties ------------------------------------------------------


@given(grids(), specs, st.integers(0, 50))
@settings(deadline=None)
def test_scramble_preserves_value_multiset(g, spec, t):
    out = scramble(g, spec, t)
    assert np.array_equal(np.bincount(out.ravel(), minlength=256),
                          np.bincount(g.ravel(), minlength=256))


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 13, 32, 64])
def test_position_map_is_bijective(family, n):
    for i in (1, 2, 3, 7, 10):
        m = matrix_for(TransformSpec(family, i))
        x, y = np.divmod(np.arange(n * n), n)
        dest = ((m.a * x + m.b * y) % n) * n + ((m.c * x + m.d * y) % n)
        assert len(np.unique(dest)) == n * n


@given(grids(max_side=32), st.integers(0, 60))
def test_colfirst1_scrambles_identically_to_classic(g, t):
    col1 = TransformSpec(Family.COLFIRST, 1)
    assert np.array_equal(scramble(g, col1, t), scramble(g, CLASSIC, t))


def test_classic_cannot_unscramble_rowfirst_output():
    # the Classic orbit of BI2 has length 4 and never reaches the original
    bi2 = np.array(BI[1])
    g = bi2
    seen_original = False
    for _ in range(3 * period(CLASSIC, 3)):
        g = apply_once(g, CLASSIC)
        seen_original = seen_original or np.array_equal(g, I3)
    assert not seen_original
    assert scramble(bi2, CLASSIC, 4).tolist() == bi2.tolist()


# -- periods -------------------------------------------------------------------


def test_period_classic_n3():
    assert period(CLASSIC, 3) == 4


def test_period_rowfirst3_n3():
    assert period(ROW3, 3) == 8


def test_period_classic_n128():
    # frozen from the brute-force orbit oracle, computed before the build
    assert period(CLASSIC, 128) == 96


def test_period_n1_is_1():
    assert period(CLASSIC, 1) == 1
    assert period(ROW3, 1) == 1


def test_period_rejects_bad_side():
    with pytest.raises(ValueError):
        period(CLASSIC, 0)


@given(families, st.integers(1, 10), st.integers(2, 32))
@settings(deadline=None, max_examples=60)
def test_period_matches_orbit_oracle(family, i, n):
    spec = TransformSpec(family, i)
    m = matrix_for(spec)
    assert period(spec, n) == orbit_period(m.a, m.b, m.c, m.d, n)


def test_matrix_period_on_raw_matrix():
    assert matrix_period(ArnoldMatrix(3, 4, 1, 1), 3) == 8


def test_period_sweep_known_points():
    assert period_sweep(Family.ROWFIRST, 3, 3, 3) == [(3, 8)]
    assert period_sweep(Family.COLFIRST, 1, 1, 3) == [(1, 4)]


def test_period_sweep_range_validation():
    with pytest.raises(ValueError):
        period_sweep(Family.ROWFIRST, 5, 2, 16)
    with pytest.raises(ValueError):
        period_sweep(Family.ROWFIRST, 0, 2, 16)


def test_period_sweep_covers_range():
    rows = period_sweep(Family.COLFIRST, 1, 20, 128)
    assert [i for i, _ in rows] == list(range(1, 21))
    assert all(p >= 1 for _, p in rows)
