"""Backend equivalence: the compiled kernels and the pure-Python fallback must
produce identical results on every function, including tie-breaking order."""

import random

import pytest

from doobcodes.graphs import (
    K4_NEIGHBOR_MASKS,
    SH_NEIGHBOR_MASKS,
    DoobParams,
    neighbor_masks,
)
from doobcodes.enumeration import (
    K4_TWO_MDS_CATALOG,
    _line_structure,
    sh_mds_catalog,
    sh_two_mds_catalog,
)
from doobcodes.kernels import available_backends

BACKENDS = available_backends()
needs_both = pytest.mark.skipif(
    len(BACKENDS) < 2, reason="compiled kernels not built"
)


def test_compiled_backend_is_available():
    # the build ships the extension; the fallback is for degraded installs
    assert "python" in BACKENDS
    assert "cython" in BACKENDS


def random_graph_masks(n: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    masks = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.4:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
    return masks


@needs_both
def test_independent_sets_agree():
    for seed in range(5):
        g = random_graph_masks(12, seed)
        for size in (3, 4):
            results = [mod.independent_sets(g, size) for mod in BACKENDS.values()]
            assert results[0] == results[1]
    a = [mod.independent_sets(list(SH_NEIGHBOR_MASKS), 4) for mod in BACKENDS.values()]
    assert a[0] == a[1] and len(a[0]) == 16


@needs_both
def test_boundary_scans_agree():
    for g in (list(SH_NEIGHBOR_MASKS), list(K4_NEIGHBOR_MASKS),
              random_graph_masks(10, 3)):
        results = [mod.max_boundary_sets(g) for mod in BACKENDS.values()]
        assert results[0] == results[1]


@needs_both
def test_equitable_scans_agree():
    for g in (list(SH_NEIGHBOR_MASKS), list(K4_NEIGHBOR_MASKS),
              random_graph_masks(9, 5)):
        results = [mod.equitable_splits(g) for mod in BACKENDS.values()]
        assert results[0] == results[1]


@needs_both
def test_assign_rows_disjoint_agree():
    w_nbrs = list(K4_NEIGHBOR_MASKS)
    catalog = list(sh_mds_catalog())
    results = [mod.assign_rows_disjoint(w_nbrs, catalog) for mod in BACKENDS.values()]
    assert results[0] == results[1]
    assert len(results[0]) == 240
    counts = [mod.assign_rows_disjoint(w_nbrs, catalog, count_only=True)
              for mod in BACKENDS.values()]
    assert counts == [240, 240]
    first = [mod.assign_rows_disjoint(w_nbrs, catalog, first_choices=[0, 1])
             for mod in BACKENDS.values()]
    assert first[0] == first[1]
    assert all(a[0] in (0, 1) for a in first[0])


@needs_both
def test_assign_rows_lines_agree():
    lines = _line_structure(DoobParams(0, 1))
    catalog = list(sh_two_mds_catalog())
    results = [mod.assign_rows_lines(4, 16, catalog, lines)
               for mod in BACKENDS.values()]
    assert results[0] == results[1]
    assert len(results[0]) == 6894
    counts = [mod.assign_rows_lines(4, 16, catalog, lines, count_only=True)
              for mod in BACKENDS.values()]
    assert counts == [6894, 6894]


@needs_both
def test_first_choice_chunks_partition_the_search():
    lines = _line_structure(DoobParams(0, 1))
    catalog = list(K4_TWO_MDS_CATALOG)
    for mod in BACKENDS.values():
        whole = mod.assign_rows_lines(4, 4, catalog, lines)
        chunks = []
        for i in range(len(catalog)):
            chunks.extend(mod.assign_rows_lines(4, 4, catalog, lines,
                                                first_choices=[i]))
        assert sorted(chunks) == whole


@needs_both
def test_structure_scans_agree():
    lines = _line_structure(DoobParams(0, 1))
    sh = list(SH_NEIGHBOR_MASKS)
    k4 = list(K4_NEIGHBOR_MASKS)
    args_list = [
        (4, 4, list(K4_TWO_MDS_CATALOG), lines, k4, k4),
        (4, 16, list(sh_two_mds_catalog()), lines, k4, sh),
    ]
    for args in args_list:
        results = [mod.scan_two_mds_structure(*args) for mod in BACKENDS.values()]
        assert results[0] == results[1]


@needs_both
def test_kernel_guards():
    cy = BACKENDS["cython"]
    with pytest.raises(ValueError):
        cy.max_boundary_sets([0] * 21)
    with pytest.raises(ValueError):
        cy.independent_sets([0] * 65, 2)
    with pytest.raises(ValueError):
        cy.assign_rows_disjoint([0] * 65, [1])
