"""The built-in claim-verification battery.

Each check reruns one published claim about extremal sets in Doob graphs at
desk scale and reports pass/fail with the measured quantities.  The CLI
`doob report --paper-suite` runs the full battery; the pytest acceptance
module asserts the same checks with their expected values frozen in.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from doobcodes import kernels
from doobcodes.codes import (
    TwoMdsCode,
    component_masks,
    is_two_mds,
    mds_codes_within,
)
from doobcodes.enumeration import (
    enumerate_two_mds,
    scan_two_mds_structure,
    sh_mds_catalog,
    sh_two_mds_catalog,
    verify_key_proposition_on,
    verify_theorem_on,
)
from doobcodes.graphs import (
    K4_NEIGHBOR_MASKS,
    SH_NEIGHBOR_MASKS,
    DoobParams,
    VertexSet,
    eigenvalue_list,
    iter_bits,
    neighbor_array,
    neighbor_masks,
    verify_spectrum,
)
from doobcodes.partitions import (
    QuotientMatrix2,
    find_intermediate_base,
    intermediate_partition,
    quotient_matrix,
)
from doobcodes.structure import (
    canonical_decomposition,
    enumerate_linear,
    separable_bipartitions,
)
from doobcodes.symmetry import aut_generators, reduce_to_classes
from doobcodes.enumeration import enumerate_codes, SearchSpec

SH = DoobParams(1, 0)
K4P = DoobParams(0, 1)


@dataclass
class CheckResult:
    key: str
    label: str
    passed: bool
    seconds: float
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.key}: {self.label} ({self.seconds:.1f}s)"


def _params_up_to(vertex_limit: int) -> list[DoobParams]:
    out = []
    m = 0
    while 16 ** m <= vertex_limit:
        n = 0 if m else 1
        while 16 ** m * 4 ** n <= vertex_limit:
            out.append(DoobParams(m, n))
            n += 1
        m += 1
    return out


# --- the twelve checks -------------------------------------------------------------

def check_graph_kernel(threads: int = 1):
    """Sh is (16,6,2,2)-strongly regular with 48 edges; D(m,n) is
    (6m+3n)-regular on every instance with at most 4096 vertices."""
    import numpy as np

    details: dict = {}
    ok = True
    degs = {m.bit_count() for m in SH_NEIGHBOR_MASKS}
    edges = sum(m.bit_count() for m in SH_NEIGHBOR_MASKS) // 2
    lam, mu = set(), set()
    for u in range(16):
        for v in range(u + 1, 16):
            common = (SH_NEIGHBOR_MASKS[u] & SH_NEIGHBOR_MASKS[v]).bit_count()
            (lam if (SH_NEIGHBOR_MASKS[u] >> v) & 1 else mu).add(common)
    details["sh"] = {"vertices": 16, "edges": edges, "degrees": sorted(degs),
                     "lambda": sorted(lam), "mu": sorted(mu)}
    ok &= edges == 48 and degs == {6} and lam == {2} and mu == {2}
    regular = []
    for p in _params_up_to(4096):
        arr = np.sort(neighbor_array(p), axis=1)
        distinct = bool((np.diff(arr, axis=1) > 0).all())
        in_range = bool((arr >= 0).all() and (arr < p.num_vertices).all())
        no_loops = bool((arr != np.arange(p.num_vertices)[:, None]).all())
        good = arr.shape[1] == p.degree and distinct and in_range and no_loops
        regular.append({"params": [p.m, p.n], "degree": p.degree, "regular": good})
        ok &= good
    details["regularity"] = regular
    return ok, details


def check_spectrum(threads: int = 1):
    """Annihilating-polynomial spectrum check on D(1,0), D(0,1), D(0,2), D(1,1)."""
    details = {}
    ok = True
    for p in (SH, K4P, DoobParams(0, 2), DoobParams(1, 1)):
        good = verify_spectrum(p)
        details[f"D({p.m},{p.n})"] = {
            "eigenvalues": eigenvalue_list(p), "annihilates": good,
        }
        ok &= good
    return ok, details


def check_max_cut(threads: int = 1):
    """Full subset scans: max edge boundary 32 in Sh and 4 in K4, attained
    exactly by the 2xMDS codes / the 2-subsets."""
    best, winners = kernels.max_boundary_sets(list(SH_NEIGHBOR_MASKS))
    two_mds = set(sh_two_mds_catalog())
    sh_ok = best == 32 and set(winners) == two_mds
    kbest, kwinners = kernels.max_boundary_sets(list(K4_NEIGHBOR_MASKS))
    pairs = {m for m in range(16) if bin(m).count("1") == 2}
    k_ok = kbest == 4 and set(kwinners) == pairs
    verified = all(is_two_mds(VertexSet(SH, m)) for m in winners)
    details = {
        "sh": {"max_cut": best, "maximizers": len(winners),
               "equal_to_2mds_family": sh_ok, "all_pass_is_two_mds": verified},
        "k4": {"max_cut": kbest, "maximizers": len(kwinners), "are_pairs": k_ok},
    }
    return sh_ok and k_ok and verified, details


def check_figure_counts(threads: int = 1):
    """Equivalence classes in Sh: 2 for MDS codes, 3 for latin colorings,
    3 for 2xMDS codes."""
    gens = aut_generators(SH)
    mds_classes = reduce_to_classes(
        [VertexSet(SH, m) for m in sh_mds_catalog()], gens
    )
    tm_classes = reduce_to_classes(
        [VertexSet(SH, m) for m in sh_two_mds_catalog()], gens
    )
    latin_classes = enumerate_codes(SearchSpec(SH, "latin", "classes"), threads=threads)
    details = {
        "mds_classes": len(mds_classes), "mds_class_sizes": list(mds_classes.class_sizes),
        "two_mds_classes": len(tm_classes), "two_mds_class_sizes": list(tm_classes.class_sizes),
        "latin_classes": len(latin_classes), "latin_class_sizes": list(latin_classes.class_sizes),
    }
    ok = len(mds_classes) == 2 and len(tm_classes) == 3 and len(latin_classes) == 3
    return ok, details


LINEAR_PARAMS = (SH, DoobParams(0, 2), DoobParams(1, 1), DoobParams(2, 0))


def check_linear_count(threads: int = 1):
    """enumerate_linear yields exactly 2*3^(m+n) distinct valid codes."""
    details = {}
    ok = True
    for p in LINEAR_PARAMS:
        lins = enumerate_linear(p)
        distinct = len({l.mask for l in lins})
        expected = 2 * 3 ** p.num_coords
        details[f"D({p.m},{p.n})"] = {"count": len(lins), "distinct": distinct,
                                      "expected": expected}
        ok &= len(lins) == distinct == expected
    return ok, details


def check_linear_structure(threads: int = 1):
    """Every linear code has 2^(2m+n-1) components and contains exactly
    2^(2^(2m+n-1)) MDS codes."""
    details = {}
    ok = True
    for p in LINEAR_PARAMS:
        ncomp_expected = 2 ** (p.weight - 1)
        inner_expected = 2 ** ncomp_expected
        comp_ok = True
        inner_ok = True
        for lin in enumerate_linear(p):
            ncomp = len(component_masks(p, lin.mask))
            comp_ok &= ncomp == ncomp_expected
            inner = mds_codes_within(lin)
            inner_ok &= len(inner) == len({c.mask for c in inner}) == inner_expected
        details[f"D({p.m},{p.n})"] = {
            "components": ncomp_expected, "components_ok": comp_ok,
            "mds_within": inner_expected, "mds_within_ok": inner_ok,
        }
        ok &= comp_ok and inner_ok
    return ok, details


def check_key_proposition(threads: int = 1):
    """Decomposable <=> disconnected over every 2xMDS code of D(0,2), D(1,1),
    D(2,0); in D(1,0) the disconnected codes are nevertheless indecomposable."""
    details = {}
    ok = True
    for p in (DoobParams(0, 2), DoobParams(1, 1), DoobParams(2, 0)):
        rep = verify_key_proposition_on(p, threads=threads)
        details[f"D({p.m},{p.n})"] = {"total": rep.total, "violations": rep.n_violations}
        ok &= rep.n_violations == 0
    # the excluded case: disconnected yet one indecomposable block
    excluded = 0
    for m in sh_two_mds_catalog():
        code = TwoMdsCode(VertexSet(SH, m))
        if len(component_masks(SH, m)) > 1:
            if canonical_decomposition(code).k == 1:
                excluded += 1
            else:
                ok = False
    details["D(1,0) disconnected yet indecomposable"] = excluded
    ok &= excluded == 6
    return ok, details


THEOREM_PARAMS = (SH, DoobParams(0, 2), DoobParams(0, 3), DoobParams(1, 1), DoobParams(2, 0))


def check_theorem(threads: int = 1):
    """Every enumerated MDS code is semilinear or reducible; D(1,0) codes are
    all semilinear."""
    details = {}
    ok = True
    for p in THEOREM_PARAMS:
        rep = verify_theorem_on(p, threads=threads)
        details[f"D({p.m},{p.n})"] = {
            "total": rep.total, "semilinear_only": rep.semilinear_only,
            "reducible_only": rep.reducible_only, "both": rep.both,
        }
        ok &= rep.classified == rep.total
    d10 = details["D(1,0)"]
    ok &= d10["semilinear_only"] == d10["total"]
    return ok, details


def check_equitable_scan(threads: int = 1):
    """Full 2^16 scan of Sh: quotient [[0,6],[2,4]] holds exactly for the MDS
    codes and [[2,4],[4,2]] exactly for the 2xMDS codes."""
    splits = kernels.equitable_splits(list(SH_NEIGHBOR_MASKS))
    mds_cells = {m for m, s11, s12, s21, s22 in splits if (s11, s12, s21, s22) == (0, 6, 2, 4)}
    tm_cells = {m for m, s11, s12, s21, s22 in splits if (s11, s12, s21, s22) == (2, 4, 4, 2)}
    mds_ok = mds_cells == set(sh_mds_catalog())
    tm_ok = tm_cells == set(sh_two_mds_catalog())
    details = {
        "equitable_splits": len(splits),
        "mds_matrix_cells": len(mds_cells), "mds_equivalence": mds_ok,
        "two_mds_matrix_cells": len(tm_cells), "two_mds_equivalence": tm_ok,
    }
    return mds_ok and tm_ok, details


def check_intermediate_partition(threads: int = 1):
    """The [[1,5],[3,3]] bases of Sh exist (all of size 6) and lift to an
    equitable partition of D(2,0) with quotient [[2,10],[6,6]]."""
    bases = find_intermediate_base()
    sizes = {len(b) for b in bases}
    ok = len(bases) > 0 and sizes == {6}
    cell, cocell = intermediate_partition(bases[0], 2)
    q = quotient_matrix(cell, cocell)
    ok &= q == QuotientMatrix2(2, 10, 6, 6) and len(cell) == 96
    details = {
        "bases": len(bases), "base_sizes": sorted(sizes),
        "lifted_cell_size": len(cell), "lifted_quotient": str(q),
    }
    return ok, details


def check_neighborhood_multicomponents(threads: int = 1):
    """For every 2xMDS code of D(0,2) and D(1,1) and every multicomponent, the
    distance-1 neighborhood is a multicomponent of the complement."""
    import itertools as it

    details = {}
    ok = True
    for p in (DoobParams(0, 2), DoobParams(1, 1)):
        nbrs = neighbor_masks(p)
        full = (1 << p.num_vertices) - 1
        checked = violations = 0
        for s in enumerate_two_mds(p):
            comps = component_masks(p, s.mask)
            cocomps = component_masks(p, full & ~s.mask)
            for r in range(1, len(comps) + 1):
                for sel in it.combinations(comps, r):
                    L = 0
                    for c in sel:
                        L |= c
                    L1 = 0
                    for u in iter_bits(L):
                        L1 |= nbrs[u]
                    L1 &= ~L & full
                    good = (L1 & s.mask) == 0 and all(
                        not (L1 & c) or (L1 & c) == c for c in cocomps
                    )
                    checked += 1
                    violations += not good
        details[f"D({p.m},{p.n})"] = {"multicomponents": checked, "violations": violations}
        ok &= violations == 0
    return ok, details


def check_decomposition_oracle(threads: int = 1):
    """Interaction-graph decomposability agrees with brute-force bipartition
    separability on the 2xMDS codes of every two-coordinate product; for
    D(2,0) the streaming scan cross-checks the two routes on all 18.2 million
    codes and the operation-level routes are compared on a sample."""
    details = {}
    ok = True
    for p in (DoobParams(0, 2), DoobParams(1, 1)):
        disagreements = 0
        for s in enumerate_two_mds(p):
            k = canonical_decomposition(TwoMdsCode(s)).k
            separable = bool(separable_bipartitions(s))
            disagreements += (k > 1) != separable
        details[f"D({p.m},{p.n})"] = {"codes": len(enumerate_two_mds(p)),
                                      "disagreements": disagreements}
        ok &= disagreements == 0
    p20 = DoobParams(2, 0)
    scan = scan_two_mds_structure(p20, threads=threads)
    details["D(2,0) streaming"] = {
        "total": scan.total, "route_disagreements": scan.route_disagreements,
    }
    ok &= scan.route_disagreements == 0
    sample = _d20_sample()
    sample_bad = 0
    for s in sample:
        k = canonical_decomposition(TwoMdsCode(s)).k
        separable = bool(separable_bipartitions(s))
        sample_bad += (k > 1) != separable
    details["D(2,0) operation-level sample"] = {"codes": len(sample),
                                                "disagreements": sample_bad}
    ok &= sample_bad == 0
    return ok, details


def _d20_sample() -> list[VertexSet]:
    """Deterministic sample of D(2,0) 2xMDS codes: 25 two-block normal forms
    over spread catalog pairs plus 10 spaced codes from the first search chunk
    (mostly connected)."""
    from doobcodes.enumeration import _compose, _factor_catalogs, _line_structure

    p = DoobParams(2, 0)
    _, catalog, wparams = _factor_catalogs(p)
    out = []
    picks = (0, 10, 20, 30, 41)
    for i in picks:
        for j in picks:
            mask = 0
            for idx in range(256):
                x0, x1 = divmod(idx, 16)
                if ((catalog[i] >> x0) & 1) ^ ((catalog[j] >> x1) & 1):
                    mask |= 1 << idx
            out.append(VertexSet(p, mask))
    lines = _line_structure(wparams)
    chunk = kernels.assign_rows_lines(
        wparams.num_vertices, 16, list(catalog), lines, first_choices=[0]
    )
    step = max(1, len(chunk) // 10)
    for a in chunk[::step][:10]:
        out.append(VertexSet(p, _compose(p, catalog, a)))
    return out


CRITERIA: list[tuple[str, str, Callable]] = [
    ("graph-kernel", "Shrikhande strong regularity and Doob regularity", check_graph_kernel),
    ("spectrum", "integer annihilating-polynomial spectrum check", check_spectrum),
    ("max-cut", "full subset scans for the maximum edge boundary", check_max_cut),
    ("figure-counts", "equivalence class counts in the Shrikhande graph", check_figure_counts),
    ("linear-count", "2*3^(m+n) linear codes", check_linear_count),
    ("linear-structure", "components and MDS codes inside linear codes", check_linear_structure),
    ("key-proposition", "decomposable iff disconnected", check_key_proposition),
    ("main-theorem", "every MDS code is semilinear or reducible", check_theorem),
    ("equitable-scan", "quotient-matrix characterization of MDS/2xMDS", check_equitable_scan),
    ("intermediate-partition", "the [[1,5],[3,3]] family and its lift", check_intermediate_partition),
    ("neighborhood", "neighborhoods of multicomponents", check_neighborhood_multicomponents),
    ("decomposition-oracle", "interaction graph vs separability oracle", check_decomposition_oracle),
]


def run_battery(keys=None, threads: int = 1) -> list[CheckResult]:
    wanted = set(keys) if keys else None
    results = []
    for key, label, fn in CRITERIA:
        if wanted is not None and key not in wanted:
            continue
        start = time.perf_counter()
        passed, details = fn(threads=threads)
        results.append(CheckResult(key, label, passed, time.perf_counter() - start, details))
    return results
