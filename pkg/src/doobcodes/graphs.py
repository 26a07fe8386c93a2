"""Doob graphs D(m,n) and their two factor graphs.

The Shrikhande graph Sh is the Cayley graph of Z4 x Z4 with connecting set
{01, 10, 11, 03, 30, 33}; it is strongly regular with parameters (16,6,2,2).
K4 is the Cayley graph of Z2 x Z2 with connecting set {01, 10, 11}, i.e. the
complete graph on four vertices.  D(m,n) is the Cartesian product of m copies
of Sh and n copies of K4: two vertices are adjacent iff they differ in exactly
one coordinate and are adjacent in that factor.  D(m,n) is (6m+3n)-regular on
16^m * 4^n vertices and shares the parameters of the Hamming graph H(2m+n,4).

Vertex indexing is big-endian mixed radix with the Sh coordinates first:
an Sh coordinate (a,b) contributes the digit 4a+b in radix 16, a K4
coordinate (c,d) the digit 2c+d in radix 4.  Index 0 is the all-zero vertex.
The text form writes each coordinate as its two digits, coordinates joined
by '.', e.g. "03.21.10" in D(2,1).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np


class DoobError(Exception):
    """Base class for all errors raised by this package."""


class ParamsMismatchError(DoobError):
    """Operands live in Doob graphs with different parameters."""


class CapExceededError(DoobError):
    """An exhaustive operation was requested beyond its vertex-count cap."""


class FormatError(DoobError):
    """Malformed text input (vertex, set file, coloring file)."""


def _cap(default: int) -> int:
    """Vertex-count cap, overridable through the DOOB_CAP environment variable."""
    raw = os.environ.get("DOOB_CAP", "").strip()
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise FormatError(f"DOOB_CAP must be an integer, got {raw!r}") from None
    return default


MATRIX_CAP = 256        # exact adjacency-matrix computations
BACKTRACKING_CAP = 256  # product-level code enumeration
EXHAUSTIVE_CAP = 4096   # per-vertex exhaustive checks (regularity, generators)
SCAN_CAP = 65536        # full subset scans, single-factor graphs only


# --- factor graphs ----------------------------------------------------------

SH_CONNECTING_SET = ((0, 1), (1, 0), (1, 1), (0, 3), (3, 0), (3, 3))
K4_CONNECTING_SET = ((0, 1), (1, 0), (1, 1))


def sh_adjacent(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Adjacency in the Shrikhande graph: difference lies in the connecting set."""
    return ((b[0] - a[0]) % 4, (b[1] - a[1]) % 4) in SH_CONNECTING_SET


def k4_adjacent(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Adjacency in K4: any two distinct elements of Z2 x Z2 are adjacent."""
    return (a[0] & 1, a[1] & 1) != (b[0] & 1, b[1] & 1)


SH_NEIGHBOR_MASKS = tuple(
    sum(
        1 << (4 * ((u // 4 + da) % 4) + ((u % 4 + db) % 4))
        for da, db in SH_CONNECTING_SET
    )
    for u in range(16)
)
K4_NEIGHBOR_MASKS = tuple(0b1111 ^ (1 << u) for u in range(4))


# --- parameters and vertex codec --------------------------------------------

@dataclass(frozen=True, order=True)
class DoobParams:
    """Parameters of D(m,n): m Shrikhande coordinates, n K4 coordinates."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0 or 2 * self.m + self.n < 1:
            raise ValueError(f"need m,n >= 0 and 2m+n >= 1, got m={self.m} n={self.n}")

    @property
    def num_vertices(self) -> int:
        return 16 ** self.m * 4 ** self.n

    @property
    def degree(self) -> int:
        return 6 * self.m + 3 * self.n

    @property
    def num_edges(self) -> int:
        return self.degree * self.num_vertices // 2

    @property
    def weight(self) -> int:
        """2m+n, the Hamming-graph word length sharing D(m,n)'s parameters."""
        return 2 * self.m + self.n

    @property
    def num_coords(self) -> int:
        return self.m + self.n

    @property
    def radices(self) -> tuple[int, ...]:
        return (16,) * self.m + (4,) * self.n

    def coord_radix(self, i: int) -> int:
        return 16 if i < self.m else 4

    def is_sh_coord(self, i: int) -> bool:
        return i < self.m

    def strides(self) -> tuple[int, ...]:
        """Index stride of each coordinate (big-endian: coordinate 0 largest)."""
        out = []
        s = self.num_vertices
        for r in self.radices:
            s //= r
            out.append(s)
        return tuple(out)


def decode_index(params: DoobParams, index: int) -> tuple[int, ...]:
    """Mixed-radix digits of a vertex index (Sh values 0..15, K4 values 0..3)."""
    if not 0 <= index < params.num_vertices:
        raise ValueError(f"index {index} out of range for {params}")
    digits = []
    for r in reversed(params.radices):
        digits.append(index % r)
        index //= r
    return tuple(reversed(digits))


def encode_coords(params: DoobParams, coords: Sequence[int]) -> int:
    if len(coords) != params.num_coords:
        raise ValueError(f"expected {params.num_coords} coordinates, got {len(coords)}")
    index = 0
    for c, r in zip(coords, params.radices):
        if not 0 <= c < r:
            raise ValueError(f"coordinate value {c} out of range 0..{r - 1}")
        index = index * r + c
    return index


@dataclass(frozen=True)
class Vertex:
    """A vertex of D(m,n): m pairs over Z4 and n pairs over Z2."""

    params: DoobParams
    sh_coords: tuple[tuple[int, int], ...]
    k_coords: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.sh_coords) != self.params.m or len(self.k_coords) != self.params.n:
            raise ValueError("coordinate count does not match parameters")
        if any(not (0 <= a < 4 and 0 <= b < 4) for a, b in self.sh_coords):
            raise ValueError("Sh coordinates must lie in Z4 x Z4")
        if any(not (0 <= c < 2 and 0 <= d < 2) for c, d in self.k_coords):
            raise ValueError("K4 coordinates must lie in Z2 x Z2")

    @property
    def index(self) -> int:
        digits = [4 * a + b for a, b in self.sh_coords] + [2 * c + d for c, d in self.k_coords]
        return encode_coords(self.params, digits)

    @classmethod
    def from_index(cls, params: DoobParams, index: int) -> "Vertex":
        digits = decode_index(params, index)
        sh = tuple(divmod(d, 4) for d in digits[: params.m])
        k = tuple(divmod(d, 2) for d in digits[params.m:])
        return cls(params, sh, k)

    def text(self) -> str:
        parts = [f"{a}{b}" for a, b in self.sh_coords] + [f"{c}{d}" for c, d in self.k_coords]
        return ".".join(parts)

    @classmethod
    def from_text(cls, params: DoobParams, text: str) -> "Vertex":
        parts = text.strip().split(".")
        if len(parts) != params.num_coords:
            raise FormatError(f"expected {params.num_coords} coordinates in {text!r}")
        sh = []
        k = []
        for i, p in enumerate(parts):
            if len(p) != 2 or not p.isdigit():
                raise FormatError(f"bad coordinate {p!r} in {text!r}")
            x, y = int(p[0]), int(p[1])
            if params.is_sh_coord(i):
                if x > 3 or y > 3:
                    raise FormatError(f"Sh coordinate {p!r} out of range in {text!r}")
                sh.append((x, y))
            else:
                if x > 1 or y > 1:
                    raise FormatError(f"K4 coordinate {p!r} out of range in {text!r}")
                k.append((x, y))
        return cls(params, tuple(sh), tuple(k))


def adjacent(u: Vertex, v: Vertex) -> bool:
    """Cartesian-product adjacency: differ in exactly one coordinate, adjacent there."""
    if u.params != v.params:
        raise ParamsMismatchError(f"{u.params} vs {v.params}")
    return adjacent_indices(u.params, u.index, v.index)


def adjacent_indices(params: DoobParams, i: int, j: int) -> bool:
    ci = decode_index(params, i)
    cj = decode_index(params, j)
    diff = [(k, a, b) for k, (a, b) in enumerate(zip(ci, cj)) if a != b]
    if len(diff) != 1:
        return False
    k, a, b = diff[0]
    masks = SH_NEIGHBOR_MASKS if params.is_sh_coord(k) else K4_NEIGHBOR_MASKS
    return bool((masks[a] >> b) & 1)


@lru_cache(maxsize=64)
def neighbor_masks(params: DoobParams) -> tuple[int, ...]:
    """Per-vertex neighbor bitmasks of D(m,n); the package's adjacency workhorse."""
    N = params.num_vertices
    if N > _cap(EXHAUSTIVE_CAP):
        raise CapExceededError(f"{N} vertices exceed the exhaustive cap")
    strides = params.strides()
    masks = [0] * N
    for idx in range(N):
        digits = decode_index(params, idx)
        acc = 0
        for i, (d, s) in enumerate(zip(digits, strides)):
            fm = SH_NEIGHBOR_MASKS[d] if params.is_sh_coord(i) else K4_NEIGHBOR_MASKS[d]
            base = idx - d * s
            t = fm
            while t:
                low = t & -t
                acc |= 1 << (base + (low.bit_length() - 1) * s)
                t ^= low
        masks[idx] = acc
    return tuple(masks)


# --- vertex sets -------------------------------------------------------------

class VertexSet:
    """Dense bit-indexed subset of V(D(m,n)); the carrier for codes and cells."""

    __slots__ = ("params", "mask")

    def __init__(self, params: DoobParams, mask: int = 0):
        if mask < 0 or mask >> params.num_vertices:
            raise ValueError("mask has bits outside the vertex range")
        self.params = params
        self.mask = mask

    @classmethod
    def from_indices(cls, params: DoobParams, indices) -> "VertexSet":
        mask = 0
        for i in indices:
            if not 0 <= i < params.num_vertices:
                raise ValueError(f"vertex index {i} out of range for {params}")
            mask |= 1 << i
        return cls(params, mask)

    @classmethod
    def full(cls, params: DoobParams) -> "VertexSet":
        return cls(params, (1 << params.num_vertices) - 1)

    def indices(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, index: int) -> bool:
        return bool((self.mask >> index) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.params == other.params
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.params, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet(D({self.params.m},{self.params.n}), {len(self)} vertices)"

    def _check(self, other: "VertexSet") -> None:
        if self.params != other.params:
            raise ParamsMismatchError(f"{self.params} vs {other.params}")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.params, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.params, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.params, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.params, self.mask ^ ((1 << self.params.num_vertices) - 1))

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def sort_key(self) -> tuple[int, ...]:
        """Lexicographic key on the ascending member list."""
        return tuple(iter_bits(self.mask))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# --- fibers -------------------------------------------------------------------

@dataclass(frozen=True)
class Fiber:
    """A factor fiber: the vertices obtained by varying one coordinate."""

    params: DoobParams
    coord: int
    base: int    # index with the varying coordinate set to 0
    stride: int  # index step per unit of the varying coordinate

    @property
    def radix(self) -> int:
        return self.params.coord_radix(self.coord)

    def vertex_indices(self) -> list[int]:
        return [self.base + v * self.stride for v in range(self.radix)]

    def vertex_set(self) -> VertexSet:
        return VertexSet.from_indices(self.params, self.vertex_indices())

    def trace(self, mask: int) -> int:
        """Restriction of a vertex bitmask to this fiber, as a radix-wide bitmask."""
        out = 0
        for v in range(self.radix):
            out |= ((mask >> (self.base + v * self.stride)) & 1) << v
        return out


@lru_cache(maxsize=64)
def fibers_along(params: DoobParams, coord: int) -> tuple[Fiber, ...]:
    """All fibers obtained by varying coordinate `coord`, sorted by base index."""
    if not 0 <= coord < params.num_coords:
        raise ValueError(f"no coordinate {coord} in {params}")
    strides = params.strides()
    radix = params.coord_radix(coord)
    stride = strides[coord]
    N = params.num_vertices
    out = []
    for base in range(N):
        if (base // stride) % radix == 0:
            out.append(Fiber(params, coord, base, stride))
    return tuple(out)


def sh_fibers(params: DoobParams) -> list[Fiber]:
    """Fibers inducing Shrikhande subgraphs; m * 16^(m-1) * 4^n of them."""
    if params.m < 1:
        raise ValueError(f"{params} has no Sh coordinate")
    out = []
    for coord in range(params.m):
        out.extend(fibers_along(params, coord))
    return out


def k4_fibers(params: DoobParams) -> list[Fiber]:
    """Fibers inducing 4-cliques; n * 16^m * 4^(n-1) of them."""
    if params.n < 1:
        raise ValueError(f"{params} has no K4 coordinate")
    out = []
    for coord in range(params.m, params.num_coords):
        out.extend(fibers_along(params, coord))
    return out


# --- spectrum ------------------------------------------------------------------

def eigenvalue_list(params: DoobParams) -> list[int]:
    """The 2m+n+1 distinct eigenvalues -(2m+n), -(2m+n)+4, ..., 6m+3n."""
    w = params.weight
    return [-w + 4 * i for i in range(w + 1)]


def neighbor_array(params: DoobParams, cap: int | None = None) -> np.ndarray:
    """N x (6m+3n) array of neighbor indices, built by vectorized stride
    arithmetic (a second adjacency route, independent of the bitmasks)."""
    N = params.num_vertices
    limit = cap if cap is not None else _cap(EXHAUSTIVE_CAP)
    if N > limit:
        raise CapExceededError(f"{N} vertices exceed the exhaustive cap {limit}")
    idx = np.arange(N, dtype=np.int64)
    columns = []
    for r, s in zip(params.radices, params.strides()):
        digit = (idx // s) % r
        fm = SH_NEIGHBOR_MASKS if r == 16 else K4_NEIGHBOR_MASKS
        value_nbrs = np.array([list(iter_bits(mask)) for mask in fm], dtype=np.int64)
        for k in range(value_nbrs.shape[1]):
            columns.append(idx + (value_nbrs[digit, k] - digit) * s)
    return np.stack(columns, axis=1)


def verify_spectrum(params: DoobParams, cap: int | None = None) -> bool:
    """Check the eigenvalue list by annihilating polynomial in exact integers.

    Tests that the product of (A - t*I) over all claimed eigenvalues t is the
    zero matrix.  The factors commute, so the product is accumulated as
    P := A@P - t*P with A@P computed by neighbor-row gathering (A is sparse).
    Entry growth is bounded by (deg+|t|)^(2m+n+1) <= 24^5 for every instance
    under the cap, so int64 arithmetic is exact.
    """
    N = params.num_vertices
    limit = cap if cap is not None else _cap(MATRIX_CAP)
    if N > limit:
        raise CapExceededError(f"{N} vertices exceed the matrix cap {limit}")
    nbr_idx = neighbor_array(params, cap=limit)
    P = np.eye(N, dtype=np.int64)
    for t in eigenvalue_list(params):
        P = P[nbr_idx].sum(axis=1) - t * P
    return not P.any()
