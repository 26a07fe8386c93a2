"""Automorphism machinery: group orders, generator validity, orbit reduction.

The Shrikhande automorphism count 192 is an oracle value computed by the full
backtracking search (recomputed here, then pinned).
"""

import pytest

from doobcodes import DoobParams, VertexSet, aut_generators, reduce_to_classes
from doobcodes.enumeration import sh_mds_catalog, sh_two_mds_catalog
from doobcodes.graphs import K4_NEIGHBOR_MASKS, SH_NEIGHBOR_MASKS, neighbor_masks
from doobcodes.symmetry import (
    _preserves_edges,
    apply_perm_to_mask,
    graph_automorphisms,
    group_closure,
    sh_automorphisms,
    sh_generators,
)

SH = DoobParams(1, 0)


def test_shrikhande_automorphism_group_order():
    autos = graph_automorphisms(SH_NEIGHBOR_MASKS)
    assert len(autos) == 192
    assert len(set(autos)) == 192


def test_k4_automorphism_group_order():
    assert len(graph_automorphisms(K4_NEIGHBOR_MASKS)) == 24


def test_sh_generators_generate_the_full_group():
    gens = sh_generators()
    assert len(group_closure(gens)) == 192
    assert len(gens) <= 4


def test_generators_preserve_adjacency():
    for params in (SH, DoobParams(0, 2), DoobParams(1, 1), DoobParams(2, 0)):
        gens = aut_generators(params)
        for perm in gens.generators:
            assert _preserves_edges(params, perm)


def test_d10_generator_completeness():
    # the generated group equals the full backtracking automorphism group
    gens = aut_generators(SH)
    assert len(group_closure(gens.generators)) == len(sh_automorphisms())


def test_swap_generators_exist_for_repeated_factors():
    assert len(aut_generators(DoobParams(2, 0)).swap_gens) == 1
    assert len(aut_generators(DoobParams(0, 2)).swap_gens) == 1
    assert len(aut_generators(DoobParams(1, 1)).swap_gens) == 0
    assert len(aut_generators(DoobParams(2, 2)).swap_gens) == 2


def test_orbit_reduction_of_sh_codes():
    gens = aut_generators(SH)
    mds = reduce_to_classes([VertexSet(SH, m) for m in sh_mds_catalog()], gens)
    assert sorted(mds.class_sizes) == [4, 12]
    assert mds.total == 16
    two = reduce_to_classes([VertexSet(SH, m) for m in sh_two_mds_catalog()], gens)
    assert sorted(two.class_sizes) == [6, 12, 24]
    assert two.total == 42


def test_class_sizes_divide_group_order():
    gens = aut_generators(SH)
    order = len(group_closure(gens.generators))
    for family in (sh_mds_catalog(), sh_two_mds_catalog()):
        classes = reduce_to_classes([VertexSet(SH, m) for m in family], gens)
        for size in classes.class_sizes:
            assert order % size == 0


def test_representatives_are_orbit_minima():
    gens = aut_generators(SH)
    classes = reduce_to_classes([VertexSet(SH, m) for m in sh_mds_catalog()], gens)
    family = set(sh_mds_catalog())
    for rep in classes.representatives:
        assert rep.mask in family
        for perm in gens.generators:
            image = apply_perm_to_mask(perm, rep.mask)
            assert rep.sort_key() <= VertexSet(SH, image).sort_key()


def test_neighbor_mask_permutation_consistency():
    params = DoobParams(1, 1)
    masks = neighbor_masks(params)
    perm = aut_generators(params).generators[0]
    for u, row in enumerate(masks):
        assert apply_perm_to_mask(perm, row) == masks[perm[u]]
