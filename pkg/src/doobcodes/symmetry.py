"""Automorphisms of D(m,n) and orbit computations on vertex sets.

For a connected Cartesian product of non-isomorphic prime factors, the
automorphism group is generated by factor automorphisms acting on single
coordinates together with transpositions of like-typed coordinates
(Sabidussi/Vizing).  Sh and K4 are prime and non-isomorphic, so D(m,n) gets
per-coordinate lifts of Aut(Sh) (order 192, found by backtracking search on
the 16-vertex graph) and Aut(K4) = S4, plus adjacent coordinate swaps within
the Sh block and within the K4 block.  Every emitted generator is verified
edge-preserving; completeness of the generating scheme is cross-checked for
D(1,0) against the full backtracking search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from doobcodes.graphs import (
    K4_NEIGHBOR_MASKS,
    SH_NEIGHBOR_MASKS,
    DoobError,
    DoobParams,
    VertexSet,
    decode_index,
    encode_coords,
    iter_bits,
    neighbor_masks,
)

Perm = tuple[int, ...]


def graph_automorphisms(nbrs: Sequence[int]) -> list[Perm]:
    """All automorphisms of a small graph, by backtracking on vertex images."""
    n = len(nbrs)
    adj = [[bool((nbrs[u] >> v) & 1) for v in range(n)] for u in range(n)]
    out: list[Perm] = []
    perm = [-1] * n
    used = [False] * n

    def extend(i: int) -> None:
        if i == n:
            out.append(tuple(perm))
            return
        for img in range(n):
            if used[img]:
                continue
            if all(adj[i][j] == adj[img][perm[j]] for j in range(i)):
                perm[i] = img
                used[img] = True
                extend(i + 1)
                used[img] = False
        perm[i] = -1

    extend(0)
    return out


def compose(p: Perm, q: Perm) -> Perm:
    """(p . q)(x) = p(q(x))."""
    return tuple(p[q[x]] for x in range(len(q)))


def group_closure(generators: Iterable[Perm], limit: int = 10 ** 7) -> set[Perm]:
    """All products of the generators (BFS closure)."""
    gens = list(generators)
    if not gens:
        return set()
    identity = tuple(range(len(gens[0])))
    group = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = compose(h, g)
                if gh not in group:
                    group.add(gh)
                    nxt.append(gh)
                    if len(group) > limit:
                        raise DoobError("group closure exceeded the safety limit")
        frontier = nxt
    return group


def minimal_generating_subset(perms: Sequence[Perm]) -> list[Perm]:
    """Greedy subset of `perms` generating the same group."""
    target = len(group_closure(perms))
    chosen: list[Perm] = []
    generated: set[Perm] = set()
    for p in perms:
        if p in generated:
            continue
        chosen.append(p)
        generated = group_closure(chosen)
        if len(generated) == target:
            break
    # drop members made redundant by later picks
    i = 0
    while i < len(chosen):
        trial = chosen[:i] + chosen[i + 1:]
        if trial and len(group_closure(trial)) == target:
            chosen = trial
        else:
            i += 1
    return chosen


@lru_cache(maxsize=1)
def sh_automorphisms() -> tuple[Perm, ...]:
    """Aut(Sh), order 192, computed by backtracking search."""
    return tuple(graph_automorphisms(SH_NEIGHBOR_MASKS))


@lru_cache(maxsize=1)
def sh_generators() -> tuple[Perm, ...]:
    return tuple(minimal_generating_subset(sh_automorphisms()))


# S4 on the K4 vertices: a transposition and a 4-cycle generate everything.
K4_GENERATORS: tuple[Perm, ...] = ((1, 0, 2, 3), (1, 2, 3, 0))


@dataclass(frozen=True)
class AutGenerators:
    """Generators of Aut(D(m,n)) acting on vertex indices."""

    params: DoobParams
    factor_gens: tuple[Perm, ...]
    swap_gens: tuple[Perm, ...]

    @property
    def generators(self) -> tuple[Perm, ...]:
        return self.factor_gens + self.swap_gens


def _lift_factor(params: DoobParams, coord: int, fperm: Perm) -> Perm:
    strides = params.strides()
    radix = params.coord_radix(coord)
    s = strides[coord]
    out = []
    for idx in range(params.num_vertices):
        d = (idx // s) % radix
        out.append(idx + (fperm[d] - d) * s)
    return tuple(out)


def _lift_swap(params: DoobParams, i: int, j: int) -> Perm:
    out = []
    for idx in range(params.num_vertices):
        digits = list(decode_index(params, idx))
        digits[i], digits[j] = digits[j], digits[i]
        out.append(encode_coords(params, digits))
    return tuple(out)


def _preserves_edges(params: DoobParams, perm: Perm) -> bool:
    nbrs = neighbor_masks(params)
    for u in range(params.num_vertices):
        image = 0
        for v in iter_bits(nbrs[u]):
            image |= 1 << perm[v]
        if image != nbrs[perm[u]]:
            return False
    return True


def aut_generators(params: DoobParams) -> AutGenerators:
    """Build and verify the generator set for Aut(D(m,n))."""
    factor = []
    for coord in range(params.m):
        for g in sh_generators():
            factor.append(_lift_factor(params, coord, g))
    for coord in range(params.m, params.num_coords):
        for g in K4_GENERATORS:
            factor.append(_lift_factor(params, coord, g))
    swaps = []
    for i in range(params.m - 1):
        swaps.append(_lift_swap(params, i, i + 1))
    for i in range(params.m, params.num_coords - 1):
        swaps.append(_lift_swap(params, i, i + 1))
    gens = AutGenerators(params, tuple(factor), tuple(swaps))
    for perm in gens.generators:
        if not _preserves_edges(params, perm):
            raise DoobError("generator does not preserve adjacency")
    return gens


# --- orbits of vertex sets ------------------------------------------------------

def apply_perm_to_mask(perm: Perm, mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= 1 << perm[v]
    return out


def set_orbit(mask: int, generators: Sequence[Perm]) -> set[int]:
    orbit = {mask}
    frontier = [mask]
    while frontier:
        nxt = []
        for s in frontier:
            for p in generators:
                img = apply_perm_to_mask(p, s)
                if img not in orbit:
                    orbit.add(img)
                    nxt.append(img)
        frontier = nxt
    return orbit


@dataclass(frozen=True)
class EquivalenceClasses:
    """Orbit representatives (lexicographically least member lists) and sizes."""

    params: DoobParams
    representatives: tuple[VertexSet, ...]
    class_sizes: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.class_sizes)

    def __len__(self) -> int:
        return len(self.representatives)


def reduce_to_classes(
    sets: Iterable[VertexSet], generators: AutGenerators
) -> EquivalenceClasses:
    """Partition sets into orbits under the generated group.

    Representatives are the lexicographically least sets of their orbits
    (by ascending member list); classes are sorted by representative.
    """
    params = generators.params
    pool: set[int] = set()
    for s in sets:
        if s.params != params:
            raise DoobError("all sets must share the generators' parameters")
        pool.add(s.mask)
    remaining = set(pool)
    classes = []
    while remaining:
        seed = min(remaining)
        orbit = set_orbit(seed, generators.generators)
        if not orbit.issubset(pool):
            raise DoobError("input is not closed under the group action")
        rep = min(orbit, key=lambda m: VertexSet(params, m).sort_key())
        classes.append((VertexSet(params, rep), len(orbit)))
        remaining -= orbit
    classes.sort(key=lambda pair: pair[0].sort_key())
    reps = tuple(c[0] for c in classes)
    sizes = tuple(c[1] for c in classes)
    return EquivalenceClasses(params, reps, sizes)
