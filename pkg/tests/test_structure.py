"""XOR decomposition, linearity, and the semilinear/reducible classification.

Classification tallies (all codes semilinear on one-coordinate and
K4-only/three-weight instances; the 5856 codes of D(2,0) splitting 3456/1296/1104)
are derived oracle values frozen from exhaustive runs.
"""

import random

import pytest

from doobcodes import (
    Classification,
    DoobParams,
    MdsCode,
    TwoMdsCode,
    VertexSet,
    canonical_decomposition,
    classify,
    components,
    enumerate_linear,
    interaction_graph,
    is_linear,
    is_reducible,
    is_semilinear,
)
from doobcodes.codes import component_masks
from doobcodes.enumeration import (
    enumerate_mds,
    enumerate_two_mds,
    sh_two_mds_catalog,
)
from doobcodes.structure import (
    K4_PAIR_CODES,
    SH_PARITY_CODES,
    separable_bipartitions,
)

from helpers import build_product_code

SH = DoobParams(1, 0)
D11 = DoobParams(1, 1)
D02 = DoobParams(0, 2)


def test_parity_codes_are_the_disconnected_catalog_entries():
    expected = {m for m in sh_two_mds_catalog()
                if len(component_masks(SH, m)) > 1 and not m & 1}
    assert set(SH_PARITY_CODES) == expected
    assert len(expected) == 3
    disconnected = {m for m in sh_two_mds_catalog() if len(component_masks(SH, m)) > 1}
    assert len(disconnected) == 6


def test_interaction_graph_separable_construction():
    s = build_product_code(D11, [SH_PARITY_CODES[0], K4_PAIR_CODES[0]])
    g = interaction_graph(s)
    assert g.num_coords == 2 and not g.edges
    assert g.blocks() == [(0,), (1,)]


def test_interaction_graph_single_coordinate():
    for m in list(sh_two_mds_catalog())[:6]:
        g = interaction_graph(VertexSet(SH, m))
        assert g.num_coords == 1 and not g.edges


def test_interaction_graph_connected_d02_code():
    connected = next(s for s in enumerate_two_mds(D02)
                     if len(components(s)) == 1)
    g = interaction_graph(connected)
    assert g.edges == frozenset({(0, 1)})
    assert g.blocks() == [(0, 1)]


def test_canonical_decomposition_normal_form():
    s = build_product_code(D11, [SH_PARITY_CODES[0], K4_PAIR_CODES[1]])
    dec = canonical_decomposition(TwoMdsCode(s))
    assert dec.k == 2 and dec.sigma == 0
    assert dec.blocks[0].coords == (0,) and dec.blocks[1].coords == (1,)
    assert dec.blocks[0].code.mask == SH_PARITY_CODES[0]
    assert dec.blocks[1].code.mask == K4_PAIR_CODES[1]
    # complement: same blocks, sigma flipped
    comp = canonical_decomposition(TwoMdsCode(s.complement()))
    assert comp.sigma == 1
    assert [b.code.mask for b in comp.blocks] == [b.code.mask for b in dec.blocks]


def test_canonical_decomposition_connected_code():
    connected = next(m for m in sh_two_mds_catalog()
                     if len(component_masks(SH, m)) == 1)
    dec = canonical_decomposition(TwoMdsCode(VertexSet(SH, connected)))
    assert dec.k == 1
    assert not dec.decomposable


def test_blocks_exclude_zero_tuple():
    for s in enumerate_two_mds(D11)[:300]:
        dec = canonical_decomposition(TwoMdsCode(s))
        for block in dec.blocks:
            assert 0 not in block.code
        assert dec.sigma == (s.mask & 1)


def test_reconstruction_identity_holds_everywhere():
    for params in (D02, D11):
        for s in enumerate_two_mds(params):
            dec = canonical_decomposition(TwoMdsCode(s))
            assert dec.reconstruct_mask() == s.mask


def test_decomposition_ignores_input_presentation():
    s = build_product_code(D11, [SH_PARITY_CODES[2], K4_PAIR_CODES[0]], sigma=1)
    indices = s.indices()
    rng = random.Random(7)
    rng.shuffle(indices)
    shuffled = VertexSet.from_indices(D11, indices)
    a = canonical_decomposition(TwoMdsCode(s))
    b = canonical_decomposition(TwoMdsCode(shuffled))
    assert a == b


def test_component_product_rule():
    """A two-block code has 2 * N1 * N2 components, and so does its complement."""
    catalog = sh_two_mds_catalog()
    d20 = DoobParams(2, 0)
    samples = [catalog[0], catalog[7], catalog[-1]]
    for m1 in samples:
        for m2 in samples:
            n1 = len(component_masks(SH, m1))
            n2 = len(component_masks(SH, m2))
            s = build_product_code(d20, [m1, m2])
            assert len(component_masks(d20, s.mask)) == 2 * n1 * n2
            comp = s.complement()
            assert len(component_masks(d20, comp.mask)) == 2 * n1 * n2


def test_is_linear_examples():
    rows = VertexSet.from_indices(SH, [0, 1, 2, 3, 8, 9, 10, 11])
    assert is_linear(TwoMdsCode(rows))
    connected = next(m for m in sh_two_mds_catalog()
                     if len(component_masks(SH, m)) == 1)
    assert not is_linear(TwoMdsCode(VertexSet(SH, connected)))
    lin11 = build_product_code(D11, [SH_PARITY_CODES[0], K4_PAIR_CODES[0]])
    assert is_linear(TwoMdsCode(lin11))


def test_enumerate_linear_counts():
    for params, expected in ((SH, 6), (D02, 18), (D11, 18), (DoobParams(2, 0), 18)):
        lins = enumerate_linear(params)
        assert len(lins) == expected
        assert len({l.mask for l in lins}) == expected
        for lin in lins:
            assert is_linear(lin)


def test_linear_component_count():
    for params in (SH, D02, D11, DoobParams(2, 0)):
        expected = 2 ** (params.weight - 1)
        for lin in enumerate_linear(params):
            assert len(component_masks(params, lin.mask)) == expected


def test_is_semilinear_witness():
    coset = MdsCode(VertexSet.from_indices(SH, [0, 2, 8, 10]))  # {00,02,20,22}
    witness = is_semilinear(coset)
    assert witness is not None
    # the first containing linear code is { a even }
    a_even = {4 * a + b for a in (0, 2) for b in range(4)}
    assert set(witness.set.indices()) == a_even
    assert coset.set.issubset(witness.set)
    other = MdsCode(VertexSet.from_indices(SH, [0, 2, 9, 11]))  # {00,02,21,23}
    assert is_semilinear(other) is not None


def test_is_reducible_weight_condition():
    for s in enumerate_mds(SH):
        assert is_reducible(MdsCode(s)) is None
    diag = MdsCode(VertexSet.from_indices(D02, [0, 5, 10, 15]))
    assert is_reducible(diag) is None


def test_reducible_witness_reconstructs():
    d20 = DoobParams(2, 0)
    hits = 0
    for s in enumerate_mds(d20)[:400]:
        witness = is_reducible(MdsCode(s))
        if witness is None:
            continue
        hits += 1
        assert witness.coords_a == (0,) and witness.coords_b == (1,)
        assert witness.reconstruct().set == s
    assert hits > 0


def test_classify_examples():
    coset = MdsCode(VertexSet.from_indices(SH, [0, 2, 8, 10]))
    outcome = classify(coset)
    assert outcome.semilinear and not outcome.reducible
    assert isinstance(outcome, Classification)


def test_classification_tallies():
    """Frozen tallies: semilinear-only everywhere below weight 4; D(2,0)
    splits 3456 semilinear-only / 1296 reducible-only / 1104 both."""
    from doobcodes.enumeration import verify_theorem_on

    for params, expected in ((SH, 16), (D02, 24), (D11, 240), (DoobParams(0, 3), 576)):
        rep = verify_theorem_on(params)
        assert rep.total == expected
        assert rep.semilinear_only == expected
        assert rep.reducible_only == rep.both == 0


def test_semilinear_witness_reverifies():
    for s in enumerate_mds(D11)[:50]:
        witness = is_semilinear(MdsCode(s))
        assert witness is not None
        assert s.issubset(witness.set)
        assert is_linear(witness)


def test_separability_oracle_matches_interaction_route():
    for params in (D02, D11):
        for s in enumerate_two_mds(params):
            k = canonical_decomposition(TwoMdsCode(s)).k
            assert (k > 1) == bool(separable_bipartitions(s))


def test_d10_disconnected_codes_are_indecomposable():
    """The excluded case: one-coordinate codes cannot split even when their
    induced subgraph is disconnected."""
    count = 0
    for m in sh_two_mds_catalog():
        dec = canonical_decomposition(TwoMdsCode(VertexSet(SH, m)))
        assert dec.k == 1
        if len(component_masks(SH, m)) > 1:
            count += 1
            assert not separable_bipartitions(VertexSet(SH, m))
    assert count == 6
