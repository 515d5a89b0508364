"""Hasse edges of the canonical-type poset and their interval status.

Every cover G -> H changes exactly one path coordinate, at some level k and
diagonal distance l.  Writing G and H back factor-by-factor off the level
reference chains shows both sides share a prefix C (levels below k) and a
suffix E (levels above k) and differ in the level-k factor only:

    l = 0:  M = 1              N = w_k
    l = 1:  M = w_k            N = [w_k]^{<w_{k-1}}
    l > 1:  M = [w_k]^{<w_{k-l+1}}   N = [w_k]^{<w_{k-l}}

with G equivalent to C x M x E and H to C x N x E, the prefix smaller than
aleph_k, and the suffix trivial or of non_bd above aleph_{k-l}.

Whether a directed set can sit strictly between G and H is decided by the
diagonal alone: l = 0 intervals are empty outright, while every l > 0
interval can consistently be inhabited under an extra hypothesis determined
by (k, l).  Hypotheses are opaque labels with a fixed schema; no
set-theoretic truth is modelled here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import decode, encode, factor_for_height
from .dyck import covers, diagonal
from .order import product_characteristics, TRIVIAL
from .typeexpr import (
    ONE,
    BasicFactor,
    Bracket,
    Omega,
    ProductType,
    canonicalize,
    enumerate_types,
    format_type,
    is_canonical,
    is_trivial,
)

EMPTY_ZFC = "empty_zfc"
CONSISTENTLY_NONEMPTY = "consistently_nonempty"


@dataclass(frozen=True)
class IntervalClassification:
    """Either provably empty, or consistently non-empty under a hypothesis."""

    kind: str
    hypothesis: str | None

    def __post_init__(self):
        if self.kind not in (EMPTY_ZFC, CONSISTENTLY_NONEMPTY):
            raise ValueError(f"unknown kind {self.kind!r}")
        if (self.kind == EMPTY_ZFC) != (self.hypothesis is None):
            raise ValueError("hypothesis must be given exactly for non-empty kind")

    @classmethod
    def empty_zfc(cls) -> "IntervalClassification":
        return cls(EMPTY_ZFC, None)

    @classmethod
    def consistently_nonempty(cls, hypothesis: str) -> "IntervalClassification":
        return cls(CONSISTENTLY_NONEMPTY, hypothesis)


@dataclass(frozen=True)
class Decomposition:
    """The shared-prefix/suffix factorization of one covering pair.

    ``prefix`` and ``suffix`` are given as full-level products that are
    trivial outside their segment (below resp. above the changed level), so
    they format naturally and recombine slotwise.
    """

    prefix: ProductType
    lower_factor: BasicFactor
    upper_factor: BasicFactor
    suffix: ProductType
    level: int
    diag: int
    suffix_note: str


def _segment(g: ProductType, lo: int, hi: int) -> ProductType:
    # Slots of g on [lo, hi), trivial elsewhere, at full level.
    slots = [ONE] * (g.level + 1)
    for i in range(lo, hi):
        slots[i] = g.slots[i]
    return ProductType(tuple(slots))


def decompose(g: ProductType, h: ProductType) -> Decomposition:
    """Factor a covering pair as C x M x E -> C x N x E.

    Raises ValueError unless h covers g.  The returned object is checked:
    the (M, N) case table agrees with the reference-chain heights, both
    sides reassemble to exactly g and h after canonicalization, and the
    suffix condition (trivial, or non_bd above aleph_{k-l}) holds.
    """
    if g.level != h.level:
        raise ValueError(f"level mismatch: {g.level} vs {h.level}")
    for p in (g, h):
        if not is_canonical(p):
            raise ValueError(f"not canonical: {format_type(p)}")
    vg = encode(g)
    k, l = diagonal(vg, encode(h))
    n = g.level
    v = vg.heights

    if l == 0:
        lower_factor: BasicFactor = ONE
        upper_factor: BasicFactor = Omega(k)
    elif l == 1:
        lower_factor = Omega(k)
        upper_factor = Bracket(k, k - 1)
    else:
        lower_factor = Bracket(k, k - l + 1)
        upper_factor = Bracket(k, k - l)
    # Same factors, read off the reference chain instead of the case table.
    assert lower_factor == factor_for_height(k, v[k])
    assert upper_factor == factor_for_height(k, v[k] - 1)

    prefix = _segment(g, 0, k)
    suffix = _segment(g, k + 1, n + 1)
    reassembled_g = canonicalize(_merge(prefix, k, lower_factor, suffix))
    reassembled_h = canonicalize(_merge(prefix, k, upper_factor, suffix))
    assert reassembled_g == g, f"prefix/suffix reassembly lost {format_type(g)}"
    assert reassembled_h == h, f"prefix/suffix reassembly lost {format_type(h)}"

    if is_trivial(suffix):
        note = "suffix = 1"
    else:
        non = product_characteristics(suffix).non_bd
        assert non != TRIVIAL and non > k - l
        note = f"non_bd(suffix) = w{non} > w{k - l}"

    return Decomposition(prefix, lower_factor, upper_factor, suffix, k, l, note)


def _merge(prefix: ProductType, k: int, f: BasicFactor, suffix: ProductType) -> ProductType:
    slots = list(prefix.slots)
    slots[k] = f
    for i in range(k + 1, len(slots)):
        slots[i] = suffix.slots[i]
    return ProductType(tuple(slots))


def _hypothesis(k: int, l: int) -> str:
    if l == 1 and k == 1:
        return "b = aleph_1"
    if l == 1:
        return (
            f"2^{{aleph_{k - 2}}} = aleph_{k - 1} and "
            f"2^{{aleph_{k - 1}}} = aleph_{k}"
        )
    return (
        "lambda^theta < lambda^+ and club^lambda_J(S,1), "
        f"theta = aleph_{k - l}, lambda = aleph_{k - 1}, "
        f"S subset E^{{aleph_{k}}}_{{theta}} stationary"
    )


def classify(g: ProductType, h: ProductType) -> IntervalClassification:
    """Decide the interval of a covering pair from its diagonal.

    Diagonal 0 covers insert a bare regular cardinal next to a small prefix;
    no directed set fits strictly between.  Positive diagonals are assigned
    the hypothesis under which an intermediate directed set is consistent:
    a dominating-family assumption for (k, l) = (1, 1), two instances of the
    continuum function below aleph_k for l = 1 at higher levels, and a
    cardinal-arithmetic plus club-guessing assumption for l > 1.
    """
    decomposition = decompose(g, h)
    k, l = decomposition.level, decomposition.diag
    if l == 0:
        return IntervalClassification.empty_zfc()
    return IntervalClassification.consistently_nonempty(_hypothesis(k, l))


def covering_pairs(n: int) -> list[tuple[ProductType, ProductType, int, int]]:
    """All Hasse edges of the level-n canonical poset with diagonal data.

    Deterministic order: lower endpoints in enumeration order, covers by
    ascending changed coordinate.
    """
    if not 0 <= n <= 8:
        raise ValueError(f"need 0 <= n <= 8, got {n}")
    out = []
    for g in enumerate_types(n):
        vg = encode(g)
        for vh in covers(vg):
            coord, diag_index = diagonal(vg, vh)
            out.append((g, decode(vh), coord, diag_index))
    return out


@dataclass(frozen=True)
class IntervalRow:
    """One classified Hasse edge, ready for table emission."""

    lower: ProductType
    upper: ProductType
    level: int
    diag: int
    classification: IntervalClassification
    decomposition: Decomposition

    def as_dict(self) -> dict:
        return {
            "lower": format_type(self.lower),
            "upper": format_type(self.upper),
            "k": self.level,
            "l": self.diag,
            "class": self.classification.kind,
            "hypothesis": self.classification.hypothesis,
        }


def interval_table(n: int) -> list[IntervalRow]:
    """Classify every covering pair at level n, in covering_pairs order."""
    rows = []
    for g, h, k, l in covering_pairs(n):
        decomposition = decompose(g, h)
        if l == 0:
            cls = IntervalClassification.empty_zfc()
        else:
            cls = IntervalClassification.consistently_nonempty(_hypothesis(k, l))
        rows.append(IntervalRow(g, h, k, l, cls, decomposition))
    return rows
