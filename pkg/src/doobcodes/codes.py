"""MDS codes, 2xMDS codes, latin colorings, components, edge boundaries.

A distance-2 MDS code is a maximum independent set of D(m,n); its cardinality
is 4^(2m+n-1) = |V|/4.  A 2xMDS code is a set meeting every Shrikhande fiber
in 8 vertices that split into two disjoint MDS codes of Sh and every 4-clique
(K4 fiber) in exactly 2 vertices; equivalently (proved by the full subset
scans in the verification suite) a set of maximum edge boundary.  A latin
coloring assigns a K4 element to every vertex so that all four color classes
are MDS codes; its graph { (v, x0) : x0 = f(v) } is an MDS code one K4
coordinate up.

Fiber traces of size 8 in Sh split into two disjoint MDS codes exactly when
the induced subgraph is bipartite: both classes of any proper 2-coloring are
independent, hence of size at most 4, hence exactly 4 = maximum.
"""

from __future__ import annotations

from dataclasses import dataclass

from doobcodes.graphs import (
    SH_NEIGHBOR_MASKS,
    DoobError,
    DoobParams,
    VertexSet,
    iter_bits,
    k4_fibers,
    neighbor_masks,
    sh_fibers,
)


class InvalidCodeError(DoobError):
    """A set failed the defining condition of the requested code class."""


class NotBipartiteError(DoobError):
    """The induced subgraph of a 2xMDS code admits no proper 2-coloring."""


def mds_size(params: DoobParams) -> int:
    return 4 ** (params.weight - 1)


def is_independent(s: VertexSet) -> bool:
    nbrs = neighbor_masks(s.params)
    return all(not nbrs[u] & s.mask for u in iter_bits(s.mask))


def is_mds(s: VertexSet) -> bool:
    """Independent and of maximum cardinality |V|/4."""
    return len(s) == mds_size(s.params) and is_independent(s)


def _bipartite_parts(mask: int, nbrs) -> tuple[int, int] | None:
    """2-color the subgraph induced by `mask`; returns the two class masks,
    the first class holding each component's minimum vertex, or None."""
    part0 = part1 = 0
    remaining = mask
    while remaining:
        start = remaining & -remaining
        comp0 = start
        comp1 = 0
        frontier = start
        side = 0
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= nbrs[u] & mask
            nxt &= ~(comp0 | comp1)
            side ^= 1
            if side:
                comp1 |= nxt
            else:
                comp0 |= nxt
            frontier = nxt
        # odd cycle <=> some edge inside a class
        for cls in (comp0, comp1):
            for u in iter_bits(cls):
                if nbrs[u] & cls:
                    return None
        part0 |= comp0
        part1 |= comp1
        remaining &= ~(comp0 | comp1)
    return part0, part1


def is_two_mds(s: VertexSet) -> bool:
    """Every Sh fiber trace is two disjoint Sh-MDS codes; every K4 fiber has 2."""
    params = s.params
    if len(s) * 2 != params.num_vertices:
        return False
    if params.m:
        for fib in sh_fibers(params):
            trace = fib.trace(s.mask)
            if trace.bit_count() != 8:
                return False
            if _bipartite_parts(trace, SH_NEIGHBOR_MASKS) is None:
                return False
    if params.n:
        for fib in k4_fibers(params):
            if fib.trace(s.mask).bit_count() != 2:
                return False
    return True


class MdsCode:
    """A verified distance-2 MDS code; the constructor enforces the definition."""

    __slots__ = ("set",)

    def __init__(self, s: VertexSet):
        if not is_mds(s):
            raise InvalidCodeError(f"not an MDS code of D({s.params.m},{s.params.n})")
        self.set = s

    @property
    def params(self) -> DoobParams:
        return self.set.params

    @property
    def mask(self) -> int:
        return self.set.mask

    def __eq__(self, other) -> bool:
        return isinstance(other, MdsCode) and self.set == other.set

    def __hash__(self) -> int:
        return hash(("mds", self.set))

    def __repr__(self) -> str:
        return f"MdsCode(D({self.params.m},{self.params.n}), {len(self.set)} vertices)"


class TwoMdsCode:
    """A verified 2xMDS code; the constructor enforces the fiber conditions."""

    __slots__ = ("set",)

    def __init__(self, s: VertexSet):
        if not is_two_mds(s):
            raise InvalidCodeError(f"not a 2xMDS code of D({s.params.m},{s.params.n})")
        self.set = s

    @property
    def params(self) -> DoobParams:
        return self.set.params

    @property
    def mask(self) -> int:
        return self.set.mask

    def __eq__(self, other) -> bool:
        return isinstance(other, TwoMdsCode) and self.set == other.set

    def __hash__(self) -> int:
        return hash(("2mds", self.set))

    def __repr__(self) -> str:
        return f"TwoMdsCode(D({self.params.m},{self.params.n}), {len(self.set)} vertices)"


def complement_code(code: TwoMdsCode) -> TwoMdsCode:
    """The complement of a 2xMDS code is again one; verified on construction."""
    return TwoMdsCode(code.set.complement())


# --- components ---------------------------------------------------------------

@dataclass(frozen=True)
class ComponentList:
    """Connected components of the subgraph induced by `parent`, ordered by
    minimum member index."""

    parent: VertexSet
    components: tuple[VertexSet, ...]

    def __len__(self) -> int:
        return len(self.components)


def component_masks(params: DoobParams, mask: int) -> list[int]:
    nbrs = neighbor_masks(params)
    out = []
    remaining = mask
    while remaining:
        frontier = remaining & -remaining
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= nbrs[u] & mask
            frontier = nxt & ~comp
        out.append(comp)
        remaining &= ~comp
    return out


def components(s: VertexSet) -> ComponentList:
    masks = component_masks(s.params, s.mask)
    return ComponentList(s, tuple(VertexSet(s.params, m) for m in masks))


# --- bipartite structure --------------------------------------------------------

def is_bipartite_two_mds(code: TwoMdsCode) -> tuple[MdsCode, MdsCode] | None:
    """Split a 2xMDS code into two disjoint MDS codes if possible.

    Any proper 2-coloring works: each class is independent, so of size at most
    |V|/4, and the two classes sum to |M| = |V|/2, forcing both to be maximum.
    The returned first part is the class containing each component's minimum
    vertex (canonical witness).
    """
    parts = _bipartite_parts(code.mask, neighbor_masks(code.params))
    if parts is None:
        return None
    a, b = parts
    return MdsCode(VertexSet(code.params, a)), MdsCode(VertexSet(code.params, b))


def mds_codes_within(code: TwoMdsCode) -> list[MdsCode]:
    """All 2^N MDS codes inside a bipartite 2xMDS code with N components.

    Choice i of 2^N picks, for every component, one of its two color classes
    (bit set = the class away from the component minimum); emitted in binary
    counting order.
    """
    params = code.params
    nbrs = neighbor_masks(params)
    comp_parts = []
    for comp in component_masks(params, code.mask):
        parts = _bipartite_parts(comp, nbrs)
        if parts is None:
            raise NotBipartiteError("2xMDS code is not bipartite")
        comp_parts.append(parts)
    n = len(comp_parts)
    out = []
    for choice in range(1 << n):
        mask = 0
        for i, (p0, p1) in enumerate(comp_parts):
            mask |= p1 if (choice >> i) & 1 else p0
        out.append(MdsCode(VertexSet(params, mask)))
    return out


# --- latin colorings -------------------------------------------------------------

class LatinColoring:
    """A map V(D(m,n)) -> K4 whose four color classes are all MDS codes."""

    __slots__ = ("params", "colors")

    def __init__(self, params: DoobParams, colors):
        colors = tuple(colors)
        if len(colors) != params.num_vertices:
            raise InvalidCodeError("coloring must assign a color to every vertex")
        if any(not 0 <= c < 4 for c in colors):
            raise InvalidCodeError("colors must be K4 elements 0..3")
        for value in range(4):
            cls = VertexSet.from_indices(
                params, (i for i, c in enumerate(colors) if c == value)
            )
            if not is_mds(cls):
                raise InvalidCodeError(f"color class {value} is not an MDS code")
        self.params = params
        self.colors = colors

    def preimage(self, value: int) -> MdsCode:
        return MdsCode(
            VertexSet.from_indices(
                self.params, (i for i, c in enumerate(self.colors) if c == value)
            )
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LatinColoring)
            and self.params == other.params
            and self.colors == other.colors
        )

    def __hash__(self) -> int:
        return hash((self.params, self.colors))

    def __repr__(self) -> str:
        return f"LatinColoring(D({self.params.m},{self.params.n}))"


def graph_of_coloring(f: LatinColoring) -> MdsCode:
    """The set { (v, x0) : x0 = f(v) } with x0 appended as the last K4 coordinate."""
    up = DoobParams(f.params.m, f.params.n + 1)
    mask = 0
    for idx, color in enumerate(f.colors):
        mask |= 1 << (idx * 4 + color)
    return MdsCode(VertexSet(up, mask))


def coloring_from_mds(code: MdsCode, k_coord: int) -> LatinColoring:
    """Invert graph_of_coloring along the K4 coordinate `k_coord` (0-based
    among the K coordinates).  Every MDS code with n >= 1 arises this way;
    MDS codes in D(m,0) do not."""
    params = code.params
    if params.n == 0:
        raise InvalidCodeError("MDS codes in D(m,0) are not graphs of colorings")
    if not 0 <= k_coord < params.n:
        raise ValueError(f"no K4 coordinate {k_coord} in D({params.m},{params.n})")
    down = DoobParams(params.m, params.n - 1)
    stride = params.strides()[params.m + k_coord]
    colors = []
    for w in range(down.num_vertices):
        hi, lo = divmod(w, stride)
        base = hi * 4 * stride + lo
        found = -1
        for v in range(4):
            if (code.mask >> (base + v * stride)) & 1:
                if found >= 0:
                    raise InvalidCodeError("two members on one K4 fiber")
                found = v
        if found < 0:
            raise InvalidCodeError("empty K4 fiber trace")
        colors.append(found)
    return LatinColoring(down, colors)


# --- boundaries and halving sets ----------------------------------------------------

def edge_boundary_size(s: VertexSet) -> int:
    """Number of edges with exactly one endpoint in the set."""
    nbrs = neighbor_masks(s.params)
    return sum((nbrs[u] & ~s.mask).bit_count() for u in iter_bits(s.mask))


def max_edge_boundary(params: DoobParams) -> int:
    """The extremal value (2m+n) * 4^(2m+n), attained exactly by 2xMDS codes."""
    return params.weight * 4 ** params.weight


def is_halving_set(s: VertexSet) -> bool:
    """Exactly half of every maximal clique of K16^m x K4^n: 8 of each Sh fiber
    (viewed as a 16-clique) and 2 of each K4 fiber."""
    params = s.params
    if params.m:
        for fib in sh_fibers(params):
            if fib.trace(s.mask).bit_count() != 8:
                return False
    if params.n:
        for fib in k4_fibers(params):
            if fib.trace(s.mask).bit_count() != 2:
                return False
    return True
