"""Good lattice paths on an N x N grid and their dominance order.

A good N-path runs from the lower-left to the upper-right corner by unit
right/up steps without crossing above the diagonal.  It is stored as the
vector of its column heights with the trivial first column dropped: a
nondecreasing integer vector ``h_0 ... h_{N-2}`` with ``0 <= h_k <= k+1``.
There are Catalan(N) such paths.

Two distinct paths compare as ``a`` before ``b`` when ``b`` lies pointwise
below ``a`` (overlaps allowed); the Hasse covers of this order are exactly
the single-coordinate unit decrements.
"""

from __future__ import annotations

from dataclasses import dataclass

_CATALAN_MAX = 30


def is_valid(heights, grid: int) -> bool:
    """True iff the sequence is the height vector of a good grid-path."""
    hs = tuple(heights)
    if grid < 1 or len(hs) != grid - 1:
        return False
    prev = 0
    for k, h in enumerate(hs):
        if not isinstance(h, int) or h < 0 or h > k + 1 or h < prev:
            return False
        prev = h
    return True


@dataclass(frozen=True)
class DyckVector:
    """A good path as its height vector; the grid size is len+1."""

    heights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "heights", tuple(self.heights))
        if not is_valid(self.heights, len(self.heights) + 1):
            raise ValueError(f"not a good path height vector: {self.heights}")

    @property
    def grid(self) -> int:
        return len(self.heights) + 1

    def __str__(self) -> str:
        return "[" + ",".join(str(h) for h in self.heights) + "]"


def catalan(n: int) -> int:
    """The n-th Catalan number by the convolution recurrence.

    c_0 = 1 and c_n = sum_{i<n} c_i * c_{n-1-i}; independent of the path
    enumeration, so the two can cross-check each other.
    """
    if not 0 <= n <= _CATALAN_MAX:
        raise ValueError(f"need 0 <= n <= {_CATALAN_MAX}, got {n}")
    cs = [1]
    for m in range(1, n + 1):
        cs.append(sum(cs[i] * cs[m - 1 - i] for i in range(m)))
    return cs[n]


def enumerate_paths(grid: int) -> list[DyckVector]:
    """All good grid-paths in ascending lexicographic height order."""
    if grid < 1:
        raise ValueError(f"grid must be >= 1, got {grid}")
    out: list[DyckVector] = []

    def extend(k: int, acc: list[int]):
        if k == grid - 1:
            out.append(DyckVector(tuple(acc)))
            return
        lo = acc[-1] if acc else 0
        for h in range(lo, k + 2):
            acc.append(h)
            extend(k + 1, acc)
            acc.pop()

    extend(0, [])
    return out


def tukey_precedes(a: DyckVector, b: DyckVector) -> bool:
    """Strict order: a before b iff the paths differ and b is pointwise <= a."""
    if a.grid != b.grid:
        raise ValueError(f"grid mismatch: {a.grid} vs {b.grid}")
    return a != b and all(hb <= ha for ha, hb in zip(a.heights, b.heights))


def covers(v: DyckVector) -> list[DyckVector]:
    """Immediate successors: every valid single-coordinate decrement of v.

    Decrementing coordinate i keeps validity iff h_i > 0 and the previous
    height still fits under it; the right neighbour only gains slack.  These
    decrements are exactly the Hasse edges of `tukey_precedes`.
    """
    out = []
    hs = v.heights
    for i, h in enumerate(hs):
        if h > 0 and (i == 0 or hs[i - 1] <= h - 1):
            out.append(DyckVector(hs[:i] + (h - 1,) + hs[i + 1 :]))
    return out


def diagonal(lower: DyckVector, upper: DyckVector) -> tuple[int, int]:
    """Locate a covering pair: the changed coordinate i and its diagonal.

    The diagonal index is ``i + 1 - lower.heights[i]``, i.e. the distance of
    the decremented cell from the main diagonal.  Raises ValueError unless
    upper is an immediate successor of lower.
    """
    if lower.grid != upper.grid:
        raise ValueError(f"grid mismatch: {lower.grid} vs {upper.grid}")
    diffs = [i for i, (a, b) in enumerate(zip(lower.heights, upper.heights)) if a != b]
    if len(diffs) != 1 or lower.heights[diffs[0]] != upper.heights[diffs[0]] + 1:
        raise ValueError(f"not a covering pair: {lower} -> {upper}")
    i = diffs[0]
    return i, i + 1 - lower.heights[i]


@dataclass(frozen=True)
class CoveringPair:
    """A Hasse edge of the dominance order with its diagonal data."""

    lower: DyckVector
    upper: DyckVector
    coord: int
    diag: int

    def __post_init__(self):
        i, l = diagonal(self.lower, self.upper)
        if (i, l) != (self.coord, self.diag):
            raise ValueError(
                f"inconsistent covering data: expected coord={i}, diag={l}"
            )

    @classmethod
    def from_paths(cls, lower: DyckVector, upper: DyckVector) -> "CoveringPair":
        i, l = diagonal(lower, upper)
        return cls(lower, upper, i, l)


def rank(v: DyckVector) -> int:
    """Grading: total area between the path and the full staircase.

    The staircase ``<1,2,...,N-1>`` has rank 0; each cover step raises the
    rank by one, so paths of equal rank are pairwise incomparable.
    """
    return sum(k + 1 - h for k, h in enumerate(v.heights))


def render_steps(v: DyckVector) -> str:
    """The path as its comma-separated step word, 0 = right and 1 = up.

    Column j contributes one right step and then the height gain of the next
    column, with height 0 before the first column and N at the far corner;
    the word has length 2N and every prefix has at least as many 0s as 1s.
    """
    n = v.grid
    full = (0,) + v.heights + (n,)
    steps: list[str] = []
    for j in range(n):
        steps.append("0")
        steps.extend("1" * (full[j + 1] - full[j]))
    return ",".join(steps)
