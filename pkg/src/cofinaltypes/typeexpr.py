"""Symbolic product types built from basic directed-set factors.

A level-n product assigns to every slot k <= n a factor from the level-k
family: the trivial order 1, the regular cardinal aleph_k under its usual
ordering, or the family of subsets of aleph_k of size < aleph_m (0 <= m < k)
ordered by inclusion.  Products are compared by Tukey reducibility.  This
module provides the slot representation, the ASCII grammar, the comparability
table for basic factors, reduction to canonical form, and enumeration of all
canonical level-n products.

Grammar::

    factor  := "1" | "w"NAT | "[w"NAT"]^{<w"NAT"}"
    product := factor (" x " factor)*

``w2`` denotes aleph_2 and ``[w2]^{<w1}`` the subsets of aleph_2 of size
less than aleph_1.  Factors of the same level collapse at parse time to the
largest of them (each level is a chain).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union


class ParseError(ValueError):
    """Raised for text that does not denote a valid product."""


@dataclass(frozen=True)
class One:
    """The one-element directed set; Tukey-least and absorbed by anything."""


@dataclass(frozen=True)
class Omega:
    """The regular cardinal aleph_index with its ordinal ordering."""

    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"cardinal index must be >= 0, got {self.index}")


@dataclass(frozen=True)
class Bracket:
    """Subsets of aleph_base of size < aleph_bound, ordered by inclusion."""

    base: int
    bound: int

    def __post_init__(self):
        if not 0 <= self.bound < self.base:
            raise ValueError(
                f"bracket requires 0 <= bound < base, got [w{self.base}]^{{<w{self.bound}}}"
            )


BasicFactor = Union[One, Omega, Bracket]

ONE = One()


def factor_level(f: BasicFactor) -> int:
    """Level of a factor: the index of the cardinal it lives on (0 for 1)."""
    match f:
        case One():
            return 0
        case Omega(index=k):
            return k
        case Bracket(base=k):
            return k
    raise TypeError(f"not a basic factor: {f!r}")


def basic_leq(a: BasicFactor, b: BasicFactor) -> bool:
    """Tukey reducibility between basic factors.

    The table is the reflexive-transitive closure of the two chain facts
    (within one level:  1 < w_k < [w_k]^{<w_{k-1}} < ... < [w_k]^{<w0}) and
    the cross-level facts ([w_m]^{<w_t} < [w_k]^{<w_l} whenever m <= k and
    l <= t, and w_m < [w_k]^{<w_l} whenever m <= k and l <= m).  The boundary
    case l = m of the latter holds because aleph_m embeds unboundedly into a
    cofinal subset of [w_k]^{<w_m} in which every subset of size >= aleph_m
    is unbounded.  Distinct regular cardinals are incomparable.
    """
    match (a, b):
        case (One(), _):
            return True
        case (_, One()):
            return False
        case (Omega(index=m), Omega(index=k)):
            return m == k
        case (Omega(index=m), Bracket(base=k, bound=l)):
            return m <= k and l <= m
        case (Bracket(base=m, bound=t), Bracket(base=k, bound=l)):
            return m <= k and l <= t
        case (Bracket(), Omega()):
            return False
    raise TypeError(f"not basic factors: {a!r}, {b!r}")


def level_factors(k: int) -> tuple[BasicFactor, ...]:
    """The level-k factors as a chain, ascending: 1, w_k, ..., [w_k]^{<w0}."""
    if k < 0:
        raise ValueError(f"level must be >= 0, got {k}")
    return (ONE, Omega(k)) + tuple(Bracket(k, m) for m in range(k - 1, -1, -1))


@dataclass(frozen=True)
class ProductType:
    """A slot-indexed product D_0 x ... x D_n with D_k of level k (or 1).

    The level is implicit: ``len(slots) - 1``.  Values are immutable; all
    operations on them are pure functions.
    """

    slots: tuple[BasicFactor, ...]

    def __post_init__(self):
        if not self.slots:
            raise ValueError("a product needs at least slot 0")
        for k, f in enumerate(self.slots):
            if f != ONE and factor_level(f) != k:
                raise ValueError(
                    f"slot {k} holds the level-{factor_level(f)} factor {format_factor(f)}"
                )

    @property
    def level(self) -> int:
        return len(self.slots) - 1

    def __str__(self) -> str:
        return format_type(self)


def is_trivial(p: ProductType) -> bool:
    """True when every slot is 1 (the product has a greatest element)."""
    return all(f == ONE for f in p.slots)


_OMEGA_RE = re.compile(r"w(\d+)\Z")
_BRACKET_RE = re.compile(r"\[w(\d+)\]\^\{<w(\d+)\}\Z")


def _parse_factor(token: str) -> BasicFactor:
    if token == "1":
        return ONE
    if m := _OMEGA_RE.match(token):
        return Omega(int(m.group(1)))
    if m := _BRACKET_RE.match(token):
        base, bound = int(m.group(1)), int(m.group(2))
        if bound >= base:
            raise ParseError(
                f"[w{base}]^{{<w{bound}}} needs bound < base"
            )
        return Bracket(base, bound)
    raise ParseError(f"cannot read factor {token!r}")


def parse(text: str, level: int) -> ProductType:
    """Parse a product expression into slot form at the given level.

    Several factors of one level collapse to the largest of them: if C <= D
    then C x D and D have the same cofinal type, and each level is a chain.
    """
    if level < 0:
        raise ParseError(f"level must be >= 0, got {level}")
    tokens = re.split(r"\s+x\s+", text.strip())
    if tokens == [""]:
        raise ParseError("empty product expression")
    slots: list[BasicFactor] = [ONE] * (level + 1)
    for token in tokens:
        f = _parse_factor(token)
        k = factor_level(f)
        if k > level:
            raise ParseError(
                f"factor {format_factor(f)} has level {k}, above level {level}"
            )
        if basic_leq(slots[k], f):
            slots[k] = f
    return ProductType(tuple(slots))


def format_factor(f: BasicFactor, unicode: bool = False) -> str:
    """Render one factor in the grammar (or with omegas for display)."""
    match f:
        case One():
            return "1"
        case Omega(index=k):
            if unicode:
                return "ω" if k == 0 else f"ω_{k}"
            return f"w{k}"
        case Bracket(base=k, bound=m):
            if unicode:
                sub = "ω" if m == 0 else f"ω_{m}"
                base_s = "ω" if k == 0 else f"ω_{k}"
                return f"[{base_s}]^{{<{sub}}}"
            return f"[w{k}]^{{<w{m}}}"
    raise TypeError(f"not a basic factor: {f!r}")


def format_type(p: ProductType, unicode: bool = False) -> str:
    """Render a product; inverse of `parse` at the same level."""
    parts = [format_factor(f, unicode) for f in p.slots if f != ONE]
    if not parts:
        return "1"
    sep = " × " if unicode else " x "
    return sep.join(parts)


def canonicalize(p: ProductType) -> ProductType:
    """Replace every slot that reduces to some later slot by 1.

    Domination is checked against the original slots; any chain of
    dominations ends in a factor that nothing later dominates, so that factor
    survives and the result is a fixed point (canonical form).  The output is
    Tukey-equivalent to the input.
    """
    slots = p.slots
    n = p.level
    new = list(slots)
    for k in range(n - 1, -1, -1):
        if any(basic_leq(slots[k], slots[m]) for m in range(k + 1, n + 1)):
            new[k] = ONE
    return ProductType(tuple(new))


def is_canonical(p: ProductType) -> bool:
    """True iff no non-trivial slot reduces to a later slot."""
    slots = p.slots
    return not any(
        f != ONE and any(basic_leq(f, g) for g in slots[k + 1 :])
        for k, f in enumerate(slots)
    )


def _canonical_slot_choices(n: int) -> Iterator[tuple[BasicFactor, ...]]:
    # Walks slots from level n down, keeping only factors that no already
    # chosen later factor dominates; generates each canonical product once.
    def extend(k: int, later: tuple[BasicFactor, ...], acc: list[BasicFactor]):
        if k < 0:
            yield tuple(reversed(acc))
            return
        for f in level_factors(k):
            if f == ONE:
                acc.append(f)
                yield from extend(k - 1, later, acc)
                acc.pop()
            elif not any(basic_leq(f, g) for g in later):
                acc.append(f)
                yield from extend(k - 1, later + (f,), acc)
                acc.pop()

    yield from extend(n, (), [])


def enumerate_types(n: int) -> list[ProductType]:
    """All canonical level-n products, largest-path-first.

    The order is descending lexicographic on the encoded height vectors, so
    the trivial type comes first and [w_n]^{<w0} last.  The count is the
    (n+2)nd Catalan number.
    """
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    from .codec import encode  # deferred: codec builds on this module

    types = [ProductType(slots) for slots in _canonical_slot_choices(n)]
    types.sort(key=lambda p: encode(p).heights, reverse=True)
    return types
