"""Code-level operations: MDS / 2xMDS predicates, components, bipartite
structure, colorings, boundaries, halving sets.

Instances named by their Z4xZ4 labels "ab" (vertex index 4a+b).
"""

import itertools

import pytest

from doobcodes import (
    DoobParams,
    InvalidCodeError,
    LatinColoring,
    MdsCode,
    NotBipartiteError,
    TwoMdsCode,
    VertexSet,
    coloring_from_mds,
    complement_code,
    components,
    edge_boundary_size,
    graph_of_coloring,
    is_bipartite_two_mds,
    is_halving_set,
    is_mds,
    is_two_mds,
    mds_codes_within,
)
from doobcodes.codes import max_edge_boundary
from doobcodes.enumeration import (
    enumerate_latin,
    enumerate_mds,
    enumerate_two_mds,
    sh_mds_catalog,
    sh_two_mds_catalog,
)
from doobcodes.graphs import neighbor_masks
from doobcodes.structure import enumerate_linear

SH = DoobParams(1, 0)


def sh_set(*labels) -> VertexSet:
    return VertexSet.from_indices(SH, [4 * int(t[0]) + int(t[1]) for t in labels])


COSET_A = sh_set("00", "02", "20", "22")
CODE_B = sh_set("00", "02", "21", "23")
ROWS = sh_set("00", "01", "02", "03", "20", "21", "22", "23")


def test_is_mds_examples():
    assert is_mds(COSET_A)
    assert is_mds(CODE_B)
    assert not is_mds(VertexSet.full(SH))
    assert not is_mds(sh_set("00", "01", "02", "03"))  # dependent set


def test_is_two_mds_examples():
    assert is_two_mds(ROWS)
    assert not is_two_mds(VertexSet(SH, 0))
    odd = VertexSet.from_indices(SH, [4 * a + b for a in range(4) for b in range(4)
                                      if (a + b) % 2 == 1])
    assert is_two_mds(odd)
    # it splits into two disjoint MDS codes (a even / a odd within the set)
    even_a = sh_set("01", "03", "21", "23")
    odd_a = sh_set("10", "12", "30", "32")
    assert is_mds(even_a) and is_mds(odd_a)
    assert (even_a | odd_a) == odd and even_a.isdisjoint(odd_a)


def test_code_constructors_enforce_conditions():
    MdsCode(COSET_A)
    TwoMdsCode(ROWS)
    with pytest.raises(InvalidCodeError):
        MdsCode(ROWS)
    with pytest.raises(InvalidCodeError):
        TwoMdsCode(COSET_A)


def test_complement_code():
    code = TwoMdsCode(ROWS)
    comp = complement_code(code)
    assert comp.set == ROWS.complement()
    assert complement_code(comp) == code
    # every catalog complement is again in the catalog
    catalog = set(sh_two_mds_catalog())
    for m in catalog:
        assert m ^ 0xFFFF in catalog


def test_complement_of_linear_flips_sigma():
    # complementing a linear code toggles only the constant in its XOR form
    lins = {l.mask for l in enumerate_linear(DoobParams(1, 1))}
    for mask in lins:
        assert mask ^ ((1 << 64) - 1) in lins


def test_components_examples():
    comp = components(ROWS)
    assert len(comp) == 2
    assert comp.components[0] == sh_set("00", "01", "02", "03")
    assert len(components(VertexSet(SH, 0))) == 0
    mds_comp = components(COSET_A)
    assert len(mds_comp) == 4
    assert all(len(c) == 1 for c in mds_comp.components)


def test_components_cover_and_disconnect():
    nbrs = neighbor_masks(SH)
    for mask in sh_two_mds_catalog():
        comp = components(VertexSet(SH, mask))
        union = 0
        for c in comp.components:
            assert union & c.mask == 0
            union |= c.mask
            # no edges leaving the component within the parent
            for u in c:
                assert nbrs[u] & mask & ~c.mask == 0
        assert union == mask


def test_bipartite_split_canonical_witness():
    parts = is_bipartite_two_mds(TwoMdsCode(ROWS))
    assert parts is not None
    a, b = parts
    assert a.set == COSET_A
    assert b.set == sh_set("01", "03", "21", "23")


def test_bipartite_split_none_for_odd_cycles():
    # D(1,1) has non-bipartite 2xMDS codes; the split must refuse them
    p = DoobParams(1, 1)
    flags = [is_bipartite_two_mds(TwoMdsCode(s)) is None
             for s in enumerate_two_mds(p)[:600]]
    assert any(flags) and not all(flags)


def test_bipartite_split_exists_in_d02():
    p = DoobParams(0, 2)
    for s in enumerate_two_mds(p):
        parts = is_bipartite_two_mds(TwoMdsCode(s))
        assert parts is not None
        a, b = parts
        assert a.set | b.set == s and a.set.isdisjoint(b.set)


def test_mds_codes_within_counts():
    # one component chosen two ways each: 2^N codes
    lin_sh = enumerate_linear(SH)[0]
    inner = mds_codes_within(lin_sh)
    assert len(inner) == 4 and len({c.mask for c in inner}) == 4
    lin_11 = enumerate_linear(DoobParams(1, 1))[0]
    assert len(mds_codes_within(lin_11)) == 16
    connected = next(m for m in sh_two_mds_catalog()
                     if len(components(VertexSet(SH, m))) == 1)
    assert len(mds_codes_within(TwoMdsCode(VertexSet(SH, connected)))) == 2
    for code in mds_codes_within(lin_sh):
        assert code.set.issubset(lin_sh.set)


def test_mds_codes_within_refuses_non_bipartite():
    p = DoobParams(1, 1)
    bad = next(s for s in enumerate_two_mds(p)[:600]
               if is_bipartite_two_mds(TwoMdsCode(s)) is None)
    with pytest.raises(NotBipartiteError):
        mds_codes_within(TwoMdsCode(bad))


def test_graph_of_coloring_identity():
    p = DoobParams(0, 1)
    identity = LatinColoring(p, [0, 1, 2, 3])
    code = graph_of_coloring(identity)
    assert code.params == DoobParams(0, 2)
    assert code.set.indices() == [0, 5, 10, 15]  # the diagonal


def test_graph_of_coloring_of_sh():
    f = enumerate_latin(SH)[0]
    code = graph_of_coloring(f)
    assert code.params == DoobParams(1, 1)
    assert len(code.set) == 16


def test_coloring_round_trip():
    for f in enumerate_latin(SH)[:10]:
        code = graph_of_coloring(f)
        assert coloring_from_mds(code, f.params.n) == f


def test_coloring_from_mds_examples():
    diag = MdsCode(VertexSet.from_indices(DoobParams(0, 2), [0, 5, 10, 15]))
    f = coloring_from_mds(diag, 1)
    assert f.colors == (0, 1, 2, 3)
    for s in enumerate_mds(DoobParams(1, 1))[:25]:
        g = coloring_from_mds(MdsCode(s), 0)
        assert g.params == SH
        for value in range(4):
            assert is_mds(g.preimage(value).set)
    with pytest.raises(InvalidCodeError):
        coloring_from_mds(MdsCode(COSET_A), 0)


def test_latin_coloring_validation():
    with pytest.raises(InvalidCodeError):
        LatinColoring(DoobParams(0, 1), [0, 0, 1, 2])
    with pytest.raises(InvalidCodeError):
        LatinColoring(DoobParams(0, 1), [0, 1, 2])
    with pytest.raises(InvalidCodeError):
        LatinColoring(DoobParams(0, 1), [0, 1, 2, 4])


def test_edge_boundary_examples():
    for mask in sh_two_mds_catalog():
        assert edge_boundary_size(VertexSet(SH, mask)) == 32
    assert edge_boundary_size(VertexSet.full(SH)) == 0
    assert edge_boundary_size(VertexSet.from_indices(SH, [0])) == 6
    assert max_edge_boundary(SH) == 32
    assert max_edge_boundary(DoobParams(2, 0)) == 4 * 256


def test_edge_boundary_bounded_by_extremal_value():
    # sampled subsets stay at or below the bound, with equality only for codes
    bound = max_edge_boundary(SH)
    for mask in range(0, 1 << 16, 257):
        s = VertexSet(SH, mask)
        b = edge_boundary_size(s)
        assert b <= bound
        if b == bound:
            assert is_two_mds(s)


def test_halving_sets():
    for mask in itertools.islice(sh_two_mds_catalog(), 8):
        assert is_halving_set(VertexSet(SH, mask))
    assert not is_halving_set(sh_set("00", "01", "02", "03", "20", "21", "22"))
    # D(0,2): two per row-clique and per column-clique
    p02 = DoobParams(0, 2)
    grid = VertexSet.from_indices(p02, [0, 1, 6, 7, 10, 11, 12, 13])
    assert is_halving_set(grid)
    assert not is_halving_set(VertexSet.from_indices(p02, [0, 1, 2, 3, 4, 5, 6, 7]))
    # halving does not imply the 2xMDS bipartite fiber structure for m >= 1
    p11 = DoobParams(1, 1)
    for s in enumerate_two_mds(p11)[:50]:
        assert is_halving_set(s)


def test_fiber_traces_of_codes():
    """Traces of MDS codes on sub-product fibers are MDS codes there."""
    from doobcodes.graphs import fibers_along

    for params in (DoobParams(1, 1), DoobParams(0, 3)):
        codes = enumerate_mds(params)
        for s in codes[:60]:
            for coord in range(params.num_coords):
                radix = params.coord_radix(coord)
                sub = DoobParams(1, 0) if radix == 16 else DoobParams(0, 1)
                for fib in fibers_along(params, coord):
                    assert is_mds(VertexSet(sub, fib.trace(s.mask)))


def test_two_mds_pairs_trichotomy():
    """Two 2xMDS codes of Sh coincide, are complementary, or have every
    component of one meeting every component of the other; for distinct codes
    the conditions are mutually exclusive."""
    catalog = sh_two_mds_catalog()
    comps = {m: [c.mask for c in components(VertexSet(SH, m)).components]
             for m in catalog}
    for m1 in catalog:
        for m2 in catalog:
            equal = m1 == m2
            disjoint = m1 & m2 == 0
            every = all(a & b for a in comps[m1] for b in comps[m2])
            assert equal or disjoint or every
            if not equal:
                assert disjoint + every == 1
