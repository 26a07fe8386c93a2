"""XOR structure of 2xMDS codes and the semilinear/reducible classification.

A 2xMDS code M is decomposable when its characteristic function splits as a
mod-2 sum of functions on disjoint nonempty coordinate groups.  The canonical
form writes chi_M as sum of chi_{M_i} over blocks plus a constant sigma,
where each block code M_i is an indecomposable 2xMDS code of its sub-product
not containing the all-zero tuple; this representation is unique.

Decomposability is detected through the pairwise interaction graph: two
coordinates interact when some 2x2 rectangle of single-coordinate
modifications has odd characteristic-function parity.  A bipartition of
coordinates with no crossing interaction admits an XOR split; the mandatory
reconstruction check enforces correctness operationally, and the verification
suite compares against a brute-force bipartition-separability oracle on all
two-coordinate instances.

A 2xMDS code is linear when every coordinate is its own block and every
Shrikhande block code is disconnected.  An MDS code is semilinear when
contained in some linear 2xMDS code, and reducible when it is the equalizer
{ f = f' } of latin colorings on two coordinate groups both of weight
2m+n > 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from doobcodes.codes import (
    InvalidCodeError,
    LatinColoring,
    MdsCode,
    TwoMdsCode,
    component_masks,
    is_two_mds,
)
from doobcodes.graphs import DoobError, DoobParams, VertexSet, decode_index, iter_bits


class DecompositionError(DoobError):
    """Separability logic produced blocks that fail to reconstruct the code."""


class TheoremFalsificationError(DoobError):
    """An MDS code tested neither semilinear nor reducible."""


# --- interaction graph ----------------------------------------------------------

@dataclass(frozen=True)
class CoordinateGraph:
    """Graph on the coordinate positions 0..m+n-1."""

    num_coords: int
    edges: frozenset[tuple[int, int]]

    def blocks(self) -> list[tuple[int, ...]]:
        """Connected components, each sorted, ordered by minimum coordinate."""
        adj = {i: set() for i in range(self.num_coords)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        seen: set[int] = set()
        out = []
        for i in range(self.num_coords):
            if i in seen:
                continue
            comp = {i}
            frontier = [i]
            while frontier:
                nxt = []
                for u in frontier:
                    for v in adj[u]:
                        if v not in comp:
                            comp.add(v)
                            nxt.append(v)
                frontier = nxt
            seen |= comp
            out.append(tuple(sorted(comp)))
        return out


def _pair_tables(params: DoobParams, mask: int, i: int, j: int) -> list[list[int]]:
    """T[vi][vj] = context bitmask of the characteristic function with
    coordinates i, j pinned to (vi, vj)."""
    ri, rj = params.coord_radix(i), params.coord_radix(j)
    T = [[0] * rj for _ in range(ri)]
    others = [c for c in range(params.num_coords) if c not in (i, j)]
    for idx in range(params.num_vertices):
        if not (mask >> idx) & 1:
            continue
        digits = decode_index(params, idx)
        ctx = 0
        for c in others:
            ctx = ctx * params.coord_radix(c) + digits[c]
        T[digits[i]][digits[j]] |= 1 << ctx
    return T


def interaction_graph(s: VertexSet) -> CoordinateGraph:
    """Coordinates i != j are joined iff some vertex admits single-coordinate
    modifications in i and in j with odd XOR over the resulting rectangle."""
    params = s.params
    k = params.num_coords
    edges = set()
    for i in range(k):
        for j in range(i + 1, k):
            T = _pair_tables(params, s.mask, i, j)
            ri, rj = params.coord_radix(i), params.coord_radix(j)
            hit = False
            for a, a2 in itertools.combinations(range(ri), 2):
                for b, b2 in itertools.combinations(range(rj), 2):
                    if T[a][b] ^ T[a2][b] ^ T[a][b2] ^ T[a2][b2]:
                        hit = True
                        break
                if hit:
                    break
            if hit:
                edges.add((i, j))
    return CoordinateGraph(k, frozenset(edges))


# --- canonical decomposition -------------------------------------------------------

def subproduct_params(params: DoobParams, coords: tuple[int, ...]) -> DoobParams:
    m = sum(1 for c in coords if params.is_sh_coord(c))
    return DoobParams(m, len(coords) - m)


@dataclass(frozen=True)
class DecompositionBlock:
    coords: tuple[int, ...]
    code: VertexSet  # over the block sub-product, normalized to exclude tuple 0


@dataclass(frozen=True)
class Decomposition:
    """Canonical XOR form: chi_M = sum of block characteristic functions + sigma."""

    params: DoobParams
    blocks: tuple[DecompositionBlock, ...]
    sigma: int

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def decomposable(self) -> bool:
        return self.k > 1

    def reconstruct_mask(self) -> int:
        radices = self.params.radices
        mask = 0
        for idx in range(self.params.num_vertices):
            digits = decode_index(self.params, idx)
            chi = self.sigma
            for block in self.blocks:
                sub = 0
                for c in block.coords:
                    sub = sub * radices[c] + digits[c]
                chi ^= (block.code.mask >> sub) & 1
            if chi:
                mask |= 1 << idx
        return mask


def canonical_decomposition(code: TwoMdsCode) -> Decomposition:
    """Compute the unique canonical form of a 2xMDS code.

    Blocks are the connected components of the interaction graph.  Each block
    code is read off by pinning the other coordinates to zero; blocks are then
    XOR-complemented when the all-zero vertex lies in the code, which makes
    every block avoid its zero tuple and sets sigma = chi(0).  The result is
    verified pointwise against the input; failure aborts.
    """
    params = code.params
    mask = code.mask
    strides = params.strides()
    blocks = []
    chi0 = mask & 1
    for coords in interaction_graph(code.set).blocks():
        sub_params = subproduct_params(params, coords)
        sub_mask = 0
        for sub in range(sub_params.num_vertices):
            digits = decode_index(sub_params, sub)
            full = sum(d * strides[c] for d, c in zip(digits, coords))
            sub_mask |= ((mask >> full) & 1) << sub
        if chi0:
            sub_mask ^= (1 << sub_params.num_vertices) - 1
        block_set = VertexSet(sub_params, sub_mask)
        if not is_two_mds(block_set):
            raise DecompositionError(
                f"block {coords} is not a 2xMDS code of its sub-product"
            )
        blocks.append(DecompositionBlock(tuple(coords), block_set))
    dec = Decomposition(params, tuple(blocks), chi0)
    if dec.reconstruct_mask() != mask:
        raise DecompositionError("block XOR does not reconstruct the code")
    return dec


def separable_bipartitions(s: VertexSet) -> list[int]:
    """Brute-force oracle: coordinate bitmasks A (0 in A, A proper nonempty)
    such that chi(v) = chi(v restricted to A) xor chi(v restricted to B) xor
    chi(0) holds pointwise."""
    params = s.params
    k = params.num_coords
    mask = s.mask
    chi0 = mask & 1
    strides = params.strides()
    out = []
    for abits in range(1, (1 << k) - 1, 2):
        ok = True
        for idx in range(params.num_vertices):
            digits = decode_index(params, idx)
            ia = sum(d * strides[c] for c, d in enumerate(digits) if (abits >> c) & 1)
            ib = idx - ia
            if ((mask >> idx) ^ (mask >> ia) ^ (mask >> ib) ^ chi0) & 1:
                ok = False
                break
        if ok:
            out.append(abits)
    return out


# --- linear codes ------------------------------------------------------------------

# Disconnected 2xMDS codes of Sh avoiding the zero vertex: the preimages of the
# three parities a, b, a+b (mod 2) on Z4 x Z4, in that order.
SH_PARITY_CODES = tuple(
    sum(1 << (4 * a + b) for a in range(4) for b in range(4) if (p * a + q * b) % 2)
    for p, q in ((1, 0), (0, 1), (1, 1))
)
# 2-subsets of K4 avoiding 0, by ascending member pair.
K4_PAIR_CODES = (0b0110, 0b1010, 0b1100)


def is_linear(code: TwoMdsCode) -> bool:
    """One block per coordinate, every Sh block disconnected."""
    dec = canonical_decomposition(code)
    if dec.k != code.params.num_coords:
        return False
    for block in dec.blocks:
        if len(block.coords) != 1:
            return False
        if code.params.is_sh_coord(block.coords[0]):
            if len(component_masks(block.code.params, block.code.mask)) < 2:
                return False
    return True


@lru_cache(maxsize=16)
def _linear_codes_cached(params: DoobParams) -> tuple[TwoMdsCode, ...]:
    digits_by_coord = [
        [decode_index(params, idx)[i] for idx in range(params.num_vertices)]
        for i in range(params.num_coords)
    ]
    per_coord = [
        SH_PARITY_CODES if params.is_sh_coord(i) else K4_PAIR_CODES
        for i in range(params.num_coords)
    ]
    out = []
    for sigma in (0, 1):
        for combo in itertools.product(*per_coord):
            mask = 0
            for idx in range(params.num_vertices):
                chi = sigma
                for i, choice in enumerate(combo):
                    chi ^= (choice >> digits_by_coord[i][idx]) & 1
                if chi:
                    mask |= 1 << idx
            out.append(TwoMdsCode(VertexSet(params, mask)))
    return tuple(out)


def enumerate_linear(params: DoobParams) -> list[TwoMdsCode]:
    """All 2 * 3^(m+n) linear 2xMDS codes: per coordinate one of three factor
    codes avoiding zero (parity codes in Sh, 2-subsets in K4), plus sigma."""
    return list(_linear_codes_cached(params))


def is_semilinear(code: MdsCode) -> TwoMdsCode | None:
    """First linear 2xMDS code containing the given MDS code, if any."""
    for lin in _linear_codes_cached(code.params):
        if code.mask & ~lin.mask == 0:
            return lin
    return None


# --- reducibility ------------------------------------------------------------------

@dataclass(frozen=True)
class ReducibleWitness:
    """Coordinate bipartition and latin colorings with C = { f = f' }."""

    params: DoobParams
    coords_a: tuple[int, ...]
    coords_b: tuple[int, ...]
    f: LatinColoring
    f_prime: LatinColoring

    def reconstruct(self) -> MdsCode:
        params = self.params
        radices = params.radices
        mask = 0
        for idx in range(params.num_vertices):
            digits = decode_index(params, idx)
            ia = 0
            for c in self.coords_a:
                ia = ia * radices[c] + digits[c]
            ib = 0
            for c in self.coords_b:
                ib = ib * radices[c] + digits[c]
            if self.f.colors[ia] == self.f_prime.colors[ib]:
                mask |= 1 << idx
        return MdsCode(VertexSet(params, mask))


def _coord_weight(params: DoobParams, coords) -> int:
    return sum(2 if params.is_sh_coord(c) else 1 for c in coords)


def is_reducible(code: MdsCode) -> ReducibleWitness | None:
    """Search coordinate bipartitions (A,B), both of weight > 1, for latin
    colorings f, f' with C = { (a,b) : f(a) = f'(b) }.

    Bipartitions are scanned in ascending bitmask order with coordinate 0
    pinned to A; the first witness is returned.
    """
    params = code.params
    k = params.num_coords
    radices = params.radices
    for abits in range(1, (1 << k) - 1, 2):
        coords_a = tuple(c for c in range(k) if (abits >> c) & 1)
        coords_b = tuple(c for c in range(k) if not (abits >> c) & 1)
        if _coord_weight(params, coords_a) < 2 or _coord_weight(params, coords_b) < 2:
            continue
        a_params = subproduct_params(params, coords_a)
        b_size = params.num_vertices // a_params.num_vertices
        sections = [0] * b_size
        for idx in iter_bits(code.mask):
            digits = decode_index(params, idx)
            ia = 0
            for c in coords_a:
                ia = ia * radices[c] + digits[c]
            ib = 0
            for c in coords_b:
                ib = ib * radices[c] + digits[c]
            sections[ib] |= 1 << ia
        labels: dict[int, int] = {}
        for sec in sections:
            if sec not in labels:
                labels[sec] = len(labels)
        if len(labels) != 4:
            continue
        union = 0
        disjoint = True
        for sec in labels:
            if union & sec:
                disjoint = False
                break
            union |= sec
        if not disjoint or union != (1 << a_params.num_vertices) - 1:
            continue
        f_colors = [0] * a_params.num_vertices
        for sec, lab in labels.items():
            for a in iter_bits(sec):
                f_colors[a] = lab
        fp_colors = [labels[sec] for sec in sections]
        b_params = subproduct_params(params, coords_b)
        try:
            f = LatinColoring(a_params, f_colors)
            f_prime = LatinColoring(b_params, fp_colors)
        except InvalidCodeError:
            continue
        return ReducibleWitness(params, coords_a, coords_b, f, f_prime)
    return None


# --- classification -----------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    """Outcome of the semilinear/reducible disjunction for one MDS code."""

    semilinear_witness: TwoMdsCode | None
    reducible_witness: ReducibleWitness | None

    @property
    def semilinear(self) -> bool:
        return self.semilinear_witness is not None

    @property
    def reducible(self) -> bool:
        return self.reducible_witness is not None


def classify(code: MdsCode) -> Classification:
    """Run both tests; every valid MDS code must pass at least one, and a
    double failure is reported as falsification (i.e. an implementation bug)."""
    sw = is_semilinear(code)
    rw = is_reducible(code)
    if sw is None and rw is None:
        raise TheoremFalsificationError(
            f"MDS code in D({code.params.m},{code.params.n}) is neither semilinear "
            "nor reducible"
        )
    return Classification(sw, rw)
