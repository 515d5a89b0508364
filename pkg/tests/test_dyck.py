"""Lattice paths: validity, counting, dominance, covers, rendering."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cofinaltypes.dyck import (
    CoveringPair,
    DyckVector,
    catalan,
    covers,
    diagonal,
    enumerate_paths,
    is_valid,
    rank,
    render_steps,
    tukey_precedes,
)

# c_0 .. c_10, a frozen reference for the recurrence
CATALAN_PREFIX = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


@st.composite
def paths(draw, max_grid=8):
    grid = draw(st.integers(1, max_grid))
    heights = []
    for k in range(grid - 1):
        lo = heights[-1] if heights else 0
        heights.append(draw(st.integers(lo, k + 1)))
    return DyckVector(tuple(heights))


def dominance_sets(grid):
    ps = enumerate_paths(grid)
    return ps, {a: {b for b in ps if tukey_precedes(a, b)} for a in ps}


class TestValidity:
    @pytest.mark.parametrize(
        "heights,grid,ok",
        [
            ((1, 1, 3), 4, True),
            ((0, 0, 0), 4, True),
            ((2, 1, 3), 4, False),
            ((0, 3, 3), 4, False),  # exceeds the diagonal at coordinate 1
            ((0, 1), 4, False),  # wrong length
            ((), 1, True),
            ((-1,), 2, False),
        ],
    )
    def test_is_valid(self, heights, grid, ok):
        assert is_valid(heights, grid) is ok

    def test_constructor_rejects_bad_vectors(self):
        with pytest.raises(ValueError):
            DyckVector((2, 1, 3))

    def test_grid_property(self):
        assert DyckVector((1, 1, 3)).grid == 4
        assert DyckVector(()).grid == 1


class TestCatalan:
    def test_reference_values(self):
        assert [catalan(n) for n in range(11)] == CATALAN_PREFIX

    @pytest.mark.parametrize("n,value", [(4, 14), (0, 1), (6, 132)])
    def test_examples(self, n, value):
        assert catalan(n) == value

    def test_bound_guard(self):
        with pytest.raises(ValueError):
            catalan(31)
        with pytest.raises(ValueError):
            catalan(-1)


class TestEnumerate:
    @pytest.mark.parametrize("grid,count", [(4, 14), (5, 42)])
    def test_counts(self, grid, count):
        assert len(enumerate_paths(grid)) == count

    def test_grid_two(self):
        assert [p.heights for p in enumerate_paths(2)] == [(0,), (1,)]

    def test_count_matches_recurrence_up_to_eight(self):
        # two independent computations of the same quantity
        for grid in range(1, 9):
            assert len(enumerate_paths(grid)) == catalan(grid)

    def test_ascending_lexicographic(self):
        for grid in range(1, 7):
            hs = [p.heights for p in enumerate_paths(grid)]
            assert hs == sorted(hs)
            assert len(set(hs)) == len(hs)


class TestDominance:
    def test_examples(self):
        a = DyckVector((1, 1, 3))
        assert tukey_precedes(a, DyckVector((1, 1, 1)))
        assert not tukey_precedes(a, a)
        assert not tukey_precedes(DyckVector((0, 2, 3)), DyckVector((1, 1, 3)))

    def test_grid_mismatch(self):
        with pytest.raises(ValueError):
            tukey_precedes(DyckVector((0,)), DyckVector((0, 1)))

    def test_strict_partial_order_exhaustive(self):
        for grid in range(1, 7):
            ps, below = dominance_sets(grid)
            for a in ps:
                assert a not in below[a]
                for b in below[a]:
                    assert a not in below[b]
                    assert below[b] <= below[a]


class TestCovers:
    def test_examples(self):
        assert set(covers(DyckVector((1, 1, 3)))) == {
            DyckVector((0, 1, 3)),
            DyckVector((1, 1, 2)),
        }
        assert covers(DyckVector((0, 0, 0))) == []
        assert covers(DyckVector((1,))) == [DyckVector((0,))]

    def test_transitive_reduction_matches(self):
        # independent oracle: drop every dominance edge with a path through a
        # third vertex, then compare with the unit decrements
        for grid in range(1, 6):
            ps, below = dominance_sets(grid)
            for a in ps:
                indirect = set()
                for c in below[a]:
                    indirect |= below[c]
                assert set(covers(a)) == below[a] - indirect

    def test_gradedness(self):
        for grid in range(1, 7):
            ps, below = dominance_sets(grid)
            for a in ps:
                for b in covers(a):
                    assert rank(b) == rank(a) + 1
            by_rank = {}
            for p in ps:
                by_rank.setdefault(rank(p), []).append(p)
            for group in by_rank.values():
                for a, b in itertools.combinations(group, 2):
                    assert not tukey_precedes(a, b) and not tukey_precedes(b, a)


class TestDiagonal:
    @pytest.mark.parametrize(
        "lower,upper,expected",
        [
            ((0, 1, 3), (0, 0, 3), (1, 1)),
            ((0, 0, 3), (0, 0, 2), (2, 0)),
            ((1, 2, 3), (0, 2, 3), (0, 0)),
        ],
    )
    def test_examples(self, lower, upper, expected):
        assert diagonal(DyckVector(lower), DyckVector(upper)) == expected

    def test_rejects_non_covers(self):
        with pytest.raises(ValueError):
            diagonal(DyckVector((1, 2, 3)), DyckVector((0, 1, 3)))
        with pytest.raises(ValueError):
            diagonal(DyckVector((0, 0, 3)), DyckVector((0, 0, 3)))
        with pytest.raises(ValueError):
            diagonal(DyckVector((0, 0, 2)), DyckVector((0, 0, 3)))

    def test_covering_pair_validation(self):
        pair = CoveringPair.from_paths(DyckVector((0, 1, 3)), DyckVector((0, 0, 3)))
        assert (pair.coord, pair.diag) == (1, 1)
        with pytest.raises(ValueError):
            CoveringPair(DyckVector((0, 1, 3)), DyckVector((0, 0, 3)), 0, 0)


class TestRank:
    @pytest.mark.parametrize(
        "heights,value", [((1, 2, 3), 0), ((0, 0, 0), 6), ((1, 1, 3), 1)]
    )
    def test_examples(self, heights, value):
        assert rank(DyckVector(heights)) == value


class TestRenderSteps:
    @pytest.mark.parametrize(
        "heights,word",
        [
            ((1, 1, 3), "0,1,0,0,1,1,0,1"),
            ((1, 2, 3), "0,1,0,1,0,1,0,1"),
            ((0, 0, 0), "0,0,0,0,1,1,1,1"),
        ],
    )
    def test_examples(self, heights, word):
        assert render_steps(DyckVector(heights)) == word

    @given(paths())
    @settings(max_examples=200, deadline=None)
    def test_step_word_shape(self, v):
        steps = render_steps(v).split(",")
        n = v.grid
        assert len(steps) == 2 * n
        assert steps.count("0") == n and steps.count("1") == n
        ones = zeros = 0
        for s in steps:
            if s == "0":
                zeros += 1
            else:
                ones += 1
            assert ones <= zeros

    def test_distinct_paths_distinct_words(self):
        for grid in range(1, 7):
            words = {render_steps(p) for p in enumerate_paths(grid)}
            assert len(words) == catalan(grid)
