"""Equitable 2-partitions, quotient matrices, and completely regular sets.

A 2-partition (C, complement) is equitable when every vertex of each cell has
a constant number of neighbors in each cell; the four counts form the
quotient matrix, whose rows sum to the degree.  The extremal family studied
here has the shape [[a, 3d-a], [a+d, 2d-a]] with d = 2m+n; its eigenvalues
are 3d (the degree) and -d (the minimum eigenvalue of the graph) for every a.
The cases a = 0, a = d, a = 2d are exactly the MDS codes, the 2xMDS codes,
and the complements of MDS codes; in D(m,0) the halfway cases a = d/2 and
a = 3d/2 are also realizable, starting from 6-vertex base cells of the
Shrikhande graph.

A set is completely regular when the partition by distance from it is
equitable; the quotient matrix is then tridiagonal and the covering radius is
the number of non-base cells.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from doobcodes.codes import is_mds, is_two_mds
from doobcodes.graphs import (
    DoobError,
    DoobParams,
    VertexSet,
    iter_bits,
    neighbor_masks,
)


class PartitionError(DoobError):
    """Cells do not partition the vertex set, or an invalid base was supplied."""


@dataclass(frozen=True)
class QuotientMatrix2:
    """2x2 quotient matrix of an equitable 2-partition of a regular graph."""

    s11: int
    s12: int
    s21: int
    s22: int

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.s11, self.s12), (self.s21, self.s22))

    def eigenvalues(self) -> tuple[Fraction, Fraction]:
        return matrix_eigenvalues(self)

    def __str__(self) -> str:
        return f"[[{self.s11},{self.s12}],[{self.s21},{self.s22}]]"


def matrix_eigenvalues(q: QuotientMatrix2) -> tuple[Fraction, Fraction]:
    """Exact eigenvalues of the 2x2 matrix, largest first.

    The discriminant (s11-s22)^2 + 4*s12*s21 is a perfect square for every
    matrix with equal row sums (eigenvalues are then the row sum and
    s11 - s21); irrational spectra are rejected.
    """
    tr = q.s11 + q.s22
    disc = (q.s11 - q.s22) ** 2 + 4 * q.s12 * q.s21
    if disc < 0:
        raise ValueError("complex eigenvalues")
    root = isqrt(disc)
    if root * root != disc:
        raise ValueError(f"irrational eigenvalues, discriminant {disc}")
    lo = Fraction(tr - root, 2)
    hi = Fraction(tr + root, 2)
    return hi, lo


def quotient_matrix(cell_a: VertexSet, cell_b: VertexSet) -> QuotientMatrix2 | None:
    """Quotient matrix of (cell_a, cell_b) if the partition is equitable."""
    if cell_a.params != cell_b.params:
        raise PartitionError("cells live in different graphs")
    params = cell_a.params
    if cell_a.mask & cell_b.mask:
        raise PartitionError("cells overlap")
    if cell_a.mask | cell_b.mask != (1 << params.num_vertices) - 1:
        raise PartitionError("cells do not cover the vertex set")
    if not cell_a.mask or not cell_b.mask:
        raise PartitionError("cells must be nonempty")
    nbrs = neighbor_masks(params)
    s11 = s12 = s21 = s22 = -1
    for u in range(params.num_vertices):
        inside = (nbrs[u] & cell_a.mask).bit_count()
        outside = (nbrs[u] & cell_b.mask).bit_count()
        if (cell_a.mask >> u) & 1:
            if s11 < 0:
                s11, s12 = inside, outside
            elif (s11, s12) != (inside, outside):
                return None
        else:
            if s21 < 0:
                s21, s22 = inside, outside
            elif (s21, s22) != (inside, outside):
                return None
    return QuotientMatrix2(s11, s12, s21, s22)


@dataclass(frozen=True)
class ExtremalTag:
    """Outcome of matching a 2-partition against the extremal matrix family."""

    tag: str  # "mds" | "2mds" | "co-mds" | "intermediate" | "none"
    a: int | None
    matrix: QuotientMatrix2 | None


def check_extremal_partition(cell: VertexSet) -> ExtremalTag:
    """Classify (cell, complement) within the family [[a,3d-a],[a+d,2d-a]].

    Returns tag "none" (with the raw matrix attached when equitable) for
    partitions outside the family.  For family members the MDS / 2xMDS
    equivalences are enforced as sanity checks.
    """
    params = cell.params
    q = quotient_matrix(cell, cell.complement())
    if q is None:
        return ExtremalTag("none", None, None)
    d = params.weight
    a = q.s11
    if q.s12 != 3 * d - a or q.s21 != a + d or q.s22 != 2 * d - a:
        return ExtremalTag("none", None, q)
    if a == 0:
        tag = "mds"
    elif a == d:
        tag = "2mds"
    elif a == 2 * d:
        tag = "co-mds"
    else:
        tag = "intermediate"
    if (a == 0) != is_mds(cell):
        raise DoobError("extremal matrix a=0 disagrees with the MDS test")
    if (a == d) != is_two_mds(cell):
        raise DoobError("extremal matrix a=d disagrees with the 2xMDS test")
    return ExtremalTag(tag, a, q)


# --- the intermediate partition family ------------------------------------------

SH_PARAMS = DoobParams(1, 0)
INTERMEDIATE_MATRIX = QuotientMatrix2(1, 5, 3, 3)


def find_intermediate_base() -> list[VertexSet]:
    """All 6-vertex subsets of Sh whose 2-partition has quotient [[1,5],[3,3]].

    The cell size is forced: |S| = c/(b+c) * 16 = 3/8 * 16 = 6, so scanning
    the 8008 six-subsets is exhaustive.
    """
    nbrs = neighbor_masks(SH_PARAMS)
    out = []
    for combo in itertools.combinations(range(16), 6):
        mask = 0
        for v in combo:
            mask |= 1 << v
        ok = True
        for u in range(16):
            k = (nbrs[u] & mask).bit_count()
            if (mask >> u) & 1:
                if k != 1:
                    ok = False
                    break
            elif k != 3:
                ok = False
                break
        if ok:
            out.append(VertexSet(SH_PARAMS, mask))
    return out


def intermediate_partition(base: VertexSet, power: int) -> tuple[VertexSet, VertexSet]:
    """Lift a [[1,5],[3,3]] base cell of Sh to D(power,0) by coordinate sums.

    The cell is { (x_1..x_power) : sum x_i in base } with sums in Z4 x Z4; the
    resulting 2-partition is verified to have quotient [[p,5p],[3p,3p]]."""
    if base.params != SH_PARAMS:
        raise PartitionError("base must be a subset of the Shrikhande graph")
    if quotient_matrix(base, base.complement()) != INTERMEDIATE_MATRIX:
        raise PartitionError("base does not have quotient [[1,5],[3,3]]")
    if power < 1:
        raise ValueError("power must be at least 1")
    params = DoobParams(power, 0)
    mask = 0
    for idx in range(params.num_vertices):
        rest = idx
        sa = sb = 0
        for _ in range(power):
            digit = rest % 16
            rest //= 16
            sa += digit // 4
            sb += digit % 4
        if (base.mask >> (4 * (sa % 4) + (sb % 4))) & 1:
            mask |= 1 << idx
    cell = VertexSet(params, mask)
    cocell = cell.complement()
    q = quotient_matrix(cell, cocell)
    expected = QuotientMatrix2(power, 5 * power, 3 * power, 3 * power)
    if q != expected:
        raise PartitionError(f"lifted partition has quotient {q}, expected {expected}")
    return cell, cocell


# --- distance partitions and complete regularity ----------------------------------

@dataclass(frozen=True)
class DistancePartition:
    """Cells D_0 = S, D_1, ..., D_rho by distance from the base set."""

    base: VertexSet
    cells: tuple[VertexSet, ...]

    @property
    def covering_radius(self) -> int:
        return len(self.cells) - 1


def distance_partition(s: VertexSet) -> DistancePartition:
    if not s.mask:
        raise ValueError("base set must be nonempty")
    params = s.params
    nbrs = neighbor_masks(params)
    full = (1 << params.num_vertices) - 1
    cells = [s.mask]
    seen = s.mask
    current = s.mask
    while seen != full:
        nxt = 0
        for u in iter_bits(current):
            nxt |= nbrs[u]
        nxt &= ~seen
        if not nxt:
            raise DoobError("graph is disconnected")  # cannot happen for D(m,n)
        cells.append(nxt)
        seen |= nxt
        current = nxt
    return DistancePartition(s, tuple(VertexSet(params, c) for c in cells))


def is_completely_regular(s: VertexSet) -> tuple[tuple[int, ...], ...] | None:
    """Tridiagonal quotient matrix of the distance partition, or None.

    A set is completely regular iff its distance partition is equitable; the
    radius-1 case coincides with membership in an equitable 2-partition."""
    dp = distance_partition(s)
    cell_masks = [c.mask for c in dp.cells]
    nbrs = neighbor_masks(s.params)
    rows = []
    for cell in cell_masks:
        row = None
        for u in iter_bits(cell):
            counts = tuple((nbrs[u] & other).bit_count() for other in cell_masks)
            if row is None:
                row = counts
            elif row != counts:
                return None
        rows.append(row)
    return tuple(rows)
