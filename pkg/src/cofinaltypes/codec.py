"""Bijection between canonical level-n products and good (n+2)-paths.

Each level k carries the reference chain

    [w_k]^{<w0}, [w_k]^{<w1}, ..., [w_k]^{<w_{k-1}}, w_k, 1

indexed 0..k+1 (level 0 has just ``w0, 1``).  A non-trivial slot encodes as
the index of its factor; a trivial slot copies the height on its right,
capped at k+1 (the top slot takes n+1).  Height vectors built this way are
nondecreasing, so every canonical product yields a good path, and the two
reverse recursions below invert each other.
"""

from __future__ import annotations

from .dyck import DyckVector
from .typeexpr import (
    ONE,
    BasicFactor,
    Bracket,
    Omega,
    One,
    ProductType,
    format_type,
    is_canonical,
)


def factor_for_height(k: int, h: int) -> BasicFactor:
    """The factor at index h of the level-k reference chain."""
    if h < k:
        return Bracket(k, h)
    if h == k:
        return Omega(k)
    if h == k + 1:
        return ONE
    raise ValueError(f"height {h} out of range for level {k}")


def _height_for_factor(f: BasicFactor, k: int) -> int:
    match f:
        case Bracket(bound=m):
            return m
        case Omega():
            return k
        case One():
            return k + 1
    raise TypeError(f"not a basic factor: {f!r}")


def encode(d: ProductType) -> DyckVector:
    """Encode a canonical level-n product as a good (n+2)-path.

    Rejects non-canonical input: the coding is injective only on canonical
    forms, and silently canonicalizing here would hide caller bugs.
    """
    if not is_canonical(d):
        raise ValueError(
            f"not canonical: {format_type(d)} (canonicalize before encoding)"
        )
    n = d.level
    heights = [0] * (n + 1)
    for k in range(n, -1, -1):
        f = d.slots[k]
        if f == ONE:
            heights[k] = n + 1 if k == n else min(heights[k + 1], k + 1)
        else:
            heights[k] = _height_for_factor(f, k)
    return DyckVector(tuple(heights))


def decode(v: DyckVector) -> ProductType:
    """Decode a good (n+2)-path back to the canonical level-n product.

    The top slot always reads its factor off the reference chain; below the
    top, a height equal to its right neighbour means the slot is trivial
    (that height was copied in, not chosen), otherwise the height indexes the
    chain directly.
    """
    if v.grid < 2:
        raise ValueError(f"grid must be >= 2 to decode, got {v.grid}")
    n = v.grid - 2
    hs = v.heights
    slots: list[BasicFactor] = [ONE] * (n + 1)
    slots[n] = factor_for_height(n, hs[n])
    for k in range(n - 1, -1, -1):
        slots[k] = ONE if hs[k] == hs[k + 1] else factor_for_height(k, hs[k])
    product = ProductType(tuple(slots))
    assert is_canonical(product)
    return product
