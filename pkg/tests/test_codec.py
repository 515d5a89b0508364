"""Round trips between canonical products and good paths."""

import pytest

from cofinaltypes.codec import decode, encode
from cofinaltypes.dyck import DyckVector, enumerate_paths, render_steps
from cofinaltypes.fixtures import figure2_codes
from cofinaltypes.typeexpr import (
    ONE,
    ProductType,
    enumerate_types,
    format_type,
    is_canonical,
    parse,
)


def heights_from_steps(word):
    # independent inverse of the step renderer: the height of column j is
    # the number of up-steps seen before the (j+1)-th right-step; column 0
    # and the final corner are dropped
    heights, ups, zeros = [], 0, 0
    for s in word.split(","):
        if s == "0":
            zeros += 1
            if zeros >= 2:
                heights.append(ups)
        else:
            ups += 1
    return tuple(heights)


class TestEncode:
    @pytest.mark.parametrize(
        "expr,heights",
        [
            ("w1", (1, 1, 3)),
            ("w2", (1, 2, 2)),
            ("w0 x [w2]^{<w1}", (0, 1, 1)),
            ("1", (1, 2, 3)),
        ],
    )
    def test_level_two_examples(self, expr, heights):
        assert encode(parse(expr, 2)) == DyckVector(heights)

    def test_rejects_non_canonical(self):
        with pytest.raises(ValueError):
            encode(parse("w1 x [w2]^{<w1}", 2))

    def test_level_zero(self):
        assert encode(parse("1", 0)).heights == (1,)
        assert encode(parse("w0", 0)).heights == (0,)


class TestDecode:
    @pytest.mark.parametrize(
        "heights,expr",
        [
            ((1, 1, 1), "[w2]^{<w1}"),
            ((0, 0, 2), "[w1]^{<w0} x w2"),
            ((0, 2, 3), "w0"),
        ],
    )
    def test_level_two_examples(self, heights, expr):
        assert decode(DyckVector(heights)) == parse(expr, 2)

    def test_output_is_canonical(self):
        for grid in range(2, 7):
            for p in enumerate_paths(grid):
                assert is_canonical(decode(p))

    def test_tiny_grid_rejected(self):
        with pytest.raises(ValueError):
            decode(DyckVector(()))


class TestBijection:
    def test_decode_after_encode(self):
        for n in range(5):
            for t in enumerate_types(n):
                assert decode(encode(t)) == t

    def test_encode_after_decode(self):
        for n in range(5):
            for p in enumerate_paths(n + 2):
                assert encode(decode(p)) == p

    def test_injective_on_canonical_types(self):
        for n in range(5):
            images = {encode(t) for t in enumerate_types(n)}
            assert len(images) == len(enumerate_types(n))


class TestFigureRoster:
    def test_every_type_matches_the_transcription(self):
        codes = figure2_codes()
        computed = {
            format_type(t): render_steps(encode(t)) for t in enumerate_types(2)
        }
        assert computed == codes

    def test_transcribed_codes_decode_back(self):
        for expr, word in figure2_codes().items():
            v = DyckVector(heights_from_steps(word))
            assert decode(v) == parse(expr, 2)


class TestMonotoneCorroboration:
    def test_product_path_is_pointwise_min_of_parts(self):
        # documentation-level observation: the path of a canonical product is
        # the coordinatewise minimum of the paths of its single-factor parts
        for n in range(4):
            for t in enumerate_types(n):
                parts = []
                for k, f in enumerate(t.slots):
                    if f == ONE:
                        continue
                    slots = [ONE] * (n + 1)
                    slots[k] = f
                    single = ProductType(tuple(slots))
                    assert is_canonical(single)
                    parts.append(encode(single).heights)
                if not parts:
                    continue
                expected = tuple(min(hs) for hs in zip(*parts))
                assert encode(t).heights == expected
