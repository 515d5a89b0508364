"""Deciding the Tukey relation on products, two independent ways.

`compare` goes through the path codec: canonicalize both sides, encode, and
read the verdict off pointwise dominance of the height vectors.  This is
complete because the canonical products and the good paths are isomorphic
posets.

`oracle_compare` never looks at paths: a product reduces to another iff each
of its non-trivial factors reduces to some factor of the other (a finite
product is the least upper bound of its factors, and a factor-wise witness
can be assembled coordinatewise).  The two procedures must agree on every
pair; the test suite checks that exhaustively at small levels.

The module also reports cardinal characteristics of the bounded-subsets
ideal for basic factors, conservative characteristics for products, and an
order-embedding check of the finite powerset lattice via products of
distinct regular cardinals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .codec import encode
from .dyck import tukey_precedes
from .typeexpr import (
    ONE,
    BasicFactor,
    Bracket,
    Omega,
    One,
    ProductType,
    basic_leq,
    canonicalize,
    format_factor,
)


class Comparison(enum.Enum):
    EQUIVALENT = "equivalent"
    STRICTLY_BELOW = "strictly_below"
    STRICTLY_ABOVE = "strictly_above"
    INCOMPARABLE = "incomparable"


def compare(p: ProductType, q: ProductType) -> Comparison:
    """Tukey-compare two same-level products via their canonical paths."""
    if p.level != q.level:
        raise ValueError(f"level mismatch: {p.level} vs {q.level}")
    vp = encode(canonicalize(p))
    vq = encode(canonicalize(q))
    if vp == vq:
        return Comparison.EQUIVALENT
    if tukey_precedes(vp, vq):
        return Comparison.STRICTLY_BELOW
    if tukey_precedes(vq, vp):
        return Comparison.STRICTLY_ABOVE
    return Comparison.INCOMPARABLE


def _slotwise_leq(p: ProductType, q: ProductType) -> bool:
    return all(
        any(basic_leq(f, g) for g in q.slots)
        for f in p.slots
        if f != ONE
    )


def oracle_compare(p: ProductType, q: ProductType) -> Comparison:
    """Tukey-compare without paths: factor-wise reducibility both ways."""
    if p.level != q.level:
        raise ValueError(f"level mismatch: {p.level} vs {q.level}")
    cp = canonicalize(p)
    cq = canonicalize(q)
    below = _slotwise_leq(cp, cq)
    above = _slotwise_leq(cq, cp)
    if below and above:
        return Comparison.EQUIVALENT
    if below:
        return Comparison.STRICTLY_BELOW
    if above:
        return Comparison.STRICTLY_ABOVE
    return Comparison.INCOMPARABLE


# Markers for characteristics that are not an aleph index: TRIVIAL means the
# directed set has a greatest element (no infinite characteristic exists);
# UNKNOWN means the calculus does not determine the value at product level.
TRIVIAL = "trivial"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Characteristics:
    """Characteristics of the bounded-subsets ideal of a directed set.

    Integer fields are aleph indices.  ``cofinality`` is the least size of a
    cofinal set, ``non_bd`` the least size of an unbounded set, ``out_bd``
    the least size admitting no bounded set of that size, and ``hu`` the set
    of aleph indices kappa for which some kappa-sized subset has all its
    kappa-sized subsets unbounded.
    """

    cofinality: int | str
    non_bd: int | str
    out_bd: int | str
    hu: frozenset[int]
    note: str


def characteristics(f: BasicFactor) -> Characteristics:
    """Characteristics of one basic factor.

    For a bracket factor, out_bd and hu are computed for its thinned cofinal
    representative (every subset strictly larger than the size bound is
    unbounded there); out_bd is not invariant under Tukey equivalence, so the
    representative matters and is named in the note.
    """
    match f:
        case One():
            return Characteristics(
                TRIVIAL, TRIVIAL, TRIVIAL, frozenset(), "greatest element exists"
            )
        case Omega(index=k):
            return Characteristics(
                k, k, k, frozenset({k}), f"regular cardinal {format_factor(f)}"
            )
        case Bracket(base=k, bound=m):
            return Characteristics(
                k,
                m,
                m,
                frozenset(range(m, k + 1)),
                "out_bd/hu hold for the thinned cofinal representative of "
                f"{format_factor(f)} in which every subset of size >= w{m} is unbounded",
            )
    raise TypeError(f"not a basic factor: {f!r}")


def product_characteristics(p: ProductType) -> Characteristics:
    """Conservative characteristics of a product.

    A bound in the product projects to a bound in every coordinate, so the
    least unbounded size is the minimum over the non-trivial factors and the
    cofinality is the maximum.  out_bd is left UNKNOWN (no sound product
    formula), and hu is only a certified subset: the union of the factors'
    hu sets transfers, anything more is not claimed.
    """
    parts = [characteristics(f) for f in p.slots if f != ONE]
    if not parts:
        return Characteristics(
            TRIVIAL, TRIVIAL, TRIVIAL, frozenset(), "greatest element exists"
        )
    hu = frozenset().union(*(c.hu for c in parts))
    return Characteristics(
        max(c.cofinality for c in parts),
        min(c.non_bd for c in parts),
        UNKNOWN,
        hu,
        "hu is a certified subset (union over factors); out_bd undetermined "
        "for products",
    )


def powerset_embed_check(n: int) -> bool:
    """Check that A -> prod of w_{k+1} for k in A embeds (P(n), subset).

    Exhaustive over all pairs of subsets of {0,...,n-1}: containment must
    come out as EQUIVALENT exactly on equal sets and STRICTLY_BELOW exactly
    on strict containment, and non-containment must never land in either.
    """
    if not 0 <= n <= 6:
        raise ValueError(f"need 0 <= n <= 6, got {n}")
    subsets = [frozenset(k for k in range(n) if mask >> k & 1) for mask in range(2**n)]

    def image(a: frozenset[int]) -> ProductType:
        slots: list[BasicFactor] = [ONE] * (n + 1)
        for k in a:
            slots[k + 1] = Omega(k + 1)
        return ProductType(tuple(slots))

    for a in subsets:
        fa = image(a)
        for b in subsets:
            verdict = compare(fa, image(b))
            reduces = verdict == Comparison.STRICTLY_BELOW or (
                verdict == Comparison.EQUIVALENT and a == b
            )
            if (a <= b) != reduces:
                return False
    return True
