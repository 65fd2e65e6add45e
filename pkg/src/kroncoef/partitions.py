"""Integer partitions and the shape taxonomy that drives formula dispatch."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator


class NegativePart(ValueError):
    """Partition input contained a negative entry."""


# Classification tags, listed in dispatch priority order.
ONE_ROW = "OneRow"
SINGLE_COLUMN = "SingleColumn"
TWO_ROW = "TwoRow"
HOOK = "Hook"
DOUBLE_HOOK = "DoubleHook"
AT_MOST_FOUR_ROWS = "AtMostFourRows"
GENERAL = "General"


class Partition:
    """Weakly decreasing positive integer parts; the empty partition is the
    unique partition of 0.

    The constructor sorts its input and strips zeros, so ``Partition([1, 3, 0, 4])``
    equals ``Partition([4, 3, 1])``.  Instances are immutable by convention and
    hashable; every operation in this package treats them as values.
    """

    __slots__ = ("parts", "n")

    def __init__(self, raw: Iterable[int] = ()):
        parts = sorted((int(p) for p in raw), reverse=True)
        if parts and parts[-1] < 0:
            raise NegativePart(f"negative entries in partition input: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        self.parts: tuple[int, ...] = tuple(parts)
        self.n: int = sum(parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def pad(self, length: int) -> tuple[int, ...]:
        """Parts extended with zeros to exactly ``length`` entries."""
        if length < len(self.parts):
            raise ValueError(f"cannot pad {self} to {length} parts")
        return self.parts + (0,) * (length - len(self.parts))

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse the CLI text form: comma-separated integers, "" for empty."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(tok) for tok in text.split(","))


def make_partition(raw: Iterable[int]) -> Partition:
    """Normalize a list of nonnegative integers into a Partition."""
    return Partition(raw)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: lam'_i = #{j : lam_j >= i}."""
    if not lam.parts:
        return Partition()
    return Partition(sum(1 for p in lam.parts if p >= i) for i in range(1, lam.parts[0] + 1))


@dataclass(frozen=True)
class ShapeClass:
    """Most specific shape tag for a partition, with the tag's parameters.

    Parameters by tag: Hook carries (e, m) = (leg length, arm row);
    TwoRow carries (p1, p2); DoubleHook carries (d1, d2, n3, n4) reading the
    shape as d1 ones, d2 twos, then the top two rows n3 <= n4.  Unused
    parameters stay None.
    """

    tag: str
    e: int | None = None
    m: int | None = None
    p1: int | None = None
    p2: int | None = None
    d1: int | None = None
    d2: int | None = None
    n3: int | None = None
    n4: int | None = None


def two_row_parts(lam: Partition) -> tuple[int, int] | None:
    """(p1, p2) when lam has at most two parts (a one-row shape reads as (n, 0))."""
    if len(lam) > 2 or lam.n == 0:
        return None
    p1 = lam.parts[0]
    p2 = lam.parts[1] if len(lam) > 1 else 0
    return p1, p2


def hook_parts(lam: Partition) -> tuple[int, int] | None:
    """(e, m) when lam = (m, 1^e) with e >= 1 and m >= 2, else None.

    One-row shapes and single columns are deliberately excluded; the hook
    formulas assume a genuine arm and a genuine leg.
    """
    if len(lam) < 2 or lam.parts[0] < 2:
        return None
    if any(p != 1 for p in lam.parts[1:]):
        return None
    return len(lam) - 1, lam.parts[0]


def double_hook_parts(lam: Partition) -> tuple[int, int, int, int] | None:
    """(d1, d2, n3, n4) when lam is a double hook: the cell (2,2) lies in the
    diagram and at most two parts exceed 2.

    The decomposition always takes n3 = lam_2 and n4 = lam_1, counting only the
    remaining twos in d2.  This builds in the n4 = 0 rewrite (d2 -= 1, n3 := 2,
    n4 := old n3) once and for all, so callers never see n4 = 0.
    """
    p = lam.parts
    if len(p) < 2 or p[1] < 2:
        return None
    if len(p) > 2 and p[2] > 2:
        return None
    d1 = sum(1 for x in p if x == 1)
    d2 = sum(1 for x in p[2:] if x == 2)
    return d1, d2, p[1], p[0]


def classify(lam: Partition) -> ShapeClass:
    """Most specific tag in the priority order
    OneRow > SingleColumn > TwoRow > Hook > DoubleHook > AtMostFourRows > General.

    The classes overlap as plain shape predicates (every two-row shape is also
    a double hook, (n) is a degenerate hook, ...); the fixed order makes
    dispatch deterministic.  The empty partition classifies as OneRow.
    """
    p = lam.parts
    if len(p) <= 1:
        return ShapeClass(ONE_ROW)
    if p[0] == 1:
        return ShapeClass(SINGLE_COLUMN)
    if len(p) == 2:
        return ShapeClass(TWO_ROW, p1=p[0], p2=p[1])
    hk = hook_parts(lam)
    if hk is not None:
        return ShapeClass(HOOK, e=hk[0], m=hk[1])
    dh = double_hook_parts(lam)
    if dh is not None:
        return ShapeClass(DOUBLE_HOOK, d1=dh[0], d2=dh[1], n3=dh[2], n4=dh[3])
    if len(p) <= 4:
        return ShapeClass(AT_MOST_FOUR_ROWS)
    return ShapeClass(GENERAL)


def z_of(lam: Partition) -> int:
    """Centralizer order z_lam = prod_i i^{d_i} d_i! over part multiplicities d_i."""
    z = 1
    mult: dict[int, int] = {}
    for p in lam.parts:
        mult[p] = mult.get(p, 0) + 1
    for i, d in mult.items():
        z *= i**d * math.factorial(d)
    return z


def _partition_tuples(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, each exactly once, in reverse lexicographic order:
    (4), (3,1), (2,2), (2,1,1), (1,1,1,1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for parts in _partition_tuples(n, n):
        yield Partition(parts)
