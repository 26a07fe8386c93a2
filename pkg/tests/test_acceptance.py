"""Acceptance battery: every verification criterion at its stated tolerance.

Each test runs one check of the claim-verification battery, prints its
pass/fail line (visible with pytest -s; the CLI `doob report --paper-suite`
prints the same lines), asserts the frozen expected quantities, and enforces
the stated time budget where one is given.  All checks are exact; there are
no numerical tolerances anywhere.

Frozen derived totals: Sh 16 MDS / 42 2xMDS / 240 latin colorings;
D(0,2) 24/90; D(1,1) 240/6894; D(0,3) 576/51678; D(2,0) 5856/18207378.
"""

from doobcodes.report import CRITERIA, CheckResult, run_battery

_BY_KEY = {key: (label, fn) for key, label, fn in CRITERIA}
_RESULTS: dict[str, CheckResult] = {}


def run(key: str) -> CheckResult:
    if key not in _RESULTS:
        (result,) = run_battery([key])
        _RESULTS[key] = result
        print()
        print(result.line())
    return _RESULTS[key]


def test_criterion_01_graph_kernel():
    r = run("graph-kernel")
    assert r.passed
    assert r.details["sh"] == {"vertices": 16, "edges": 48, "degrees": [6],
                               "lambda": [2], "mu": [2]}
    assert len(r.details["regularity"]) == 15  # every instance up to 4096 vertices
    assert all(row["regular"] for row in r.details["regularity"])
    assert r.seconds < 1.0


def test_criterion_02_spectrum():
    r = run("spectrum")
    assert r.passed
    for key in ("D(1,0)", "D(0,1)", "D(0,2)", "D(1,1)"):
        assert r.details[key]["annihilates"]
    assert r.details["D(1,0)"]["eigenvalues"] == [-2, 2, 6]
    assert r.seconds < 10.0


def test_criterion_03_max_cut():
    r = run("max-cut")
    assert r.passed
    assert r.details["sh"]["max_cut"] == 32
    assert r.details["sh"]["maximizers"] == 42
    assert r.details["sh"]["equal_to_2mds_family"]
    assert r.details["sh"]["all_pass_is_two_mds"]
    assert r.details["k4"]["max_cut"] == 4
    assert r.details["k4"]["maximizers"] == 6
    assert r.seconds < 30.0


def test_criterion_04_figure_counts():
    r = run("figure-counts")
    assert r.passed
    assert r.details["mds_classes"] == 2
    assert sorted(r.details["mds_class_sizes"]) == [4, 12]
    assert r.details["latin_classes"] == 3
    assert sorted(r.details["latin_class_sizes"]) == [24, 72, 144]
    assert r.details["two_mds_classes"] == 3
    assert sorted(r.details["two_mds_class_sizes"]) == [6, 12, 24]
    assert r.seconds < 60.0


def test_criterion_05_linear_count():
    r = run("linear-count")
    assert r.passed
    assert r.details["D(1,0)"] == {"count": 6, "distinct": 6, "expected": 6}
    assert r.details["D(0,2)"]["count"] == 18
    assert r.details["D(1,1)"]["count"] == 18
    assert r.details["D(2,0)"]["count"] == 18


def test_criterion_06_linear_structure():
    r = run("linear-structure")
    assert r.passed
    assert r.details["D(1,0)"] == {"components": 2, "components_ok": True,
                                   "mds_within": 4, "mds_within_ok": True}
    assert r.details["D(0,2)"]["components"] == 2
    assert r.details["D(1,1)"]["components"] == 4
    assert r.details["D(1,1)"]["mds_within"] == 16
    assert r.details["D(2,0)"]["components"] == 8
    assert r.details["D(2,0)"]["mds_within"] == 256


def test_criterion_07_key_proposition():
    r = run("key-proposition")
    assert r.passed
    assert r.details["D(0,2)"] == {"total": 90, "violations": 0}
    assert r.details["D(1,1)"] == {"total": 6894, "violations": 0}
    assert r.details["D(2,0)"] == {"total": 18207378, "violations": 0}
    assert r.details["D(1,0) disconnected yet indecomposable"] == 6
    assert r.seconds < 600.0


def test_criterion_08_main_theorem():
    r = run("main-theorem")
    assert r.passed
    assert r.details["D(1,0)"] == {"total": 16, "semilinear_only": 16,
                                   "reducible_only": 0, "both": 0}
    assert r.details["D(0,2)"]["total"] == 24
    assert r.details["D(0,3)"]["total"] == 576
    assert r.details["D(1,1)"] == {"total": 240, "semilinear_only": 240,
                                   "reducible_only": 0, "both": 0}
    assert r.details["D(2,0)"] == {"total": 5856, "semilinear_only": 3456,
                                   "reducible_only": 1296, "both": 1104}
    assert r.seconds < 1800.0


def test_criterion_09_equitable_scan():
    r = run("equitable-scan")
    assert r.passed
    assert r.details["mds_matrix_cells"] == 16
    assert r.details["two_mds_matrix_cells"] == 42
    assert r.details["mds_equivalence"] and r.details["two_mds_equivalence"]
    assert r.details["equitable_splits"] == 150


def test_criterion_10_intermediate_partition():
    r = run("intermediate-partition")
    assert r.passed
    assert r.details["bases"] == 32
    assert r.details["base_sizes"] == [6]
    assert r.details["lifted_cell_size"] == 96
    assert r.details["lifted_quotient"] == "[[2,10],[6,6]]"
    assert r.seconds < 60.0


def test_criterion_11_neighborhood_multicomponents():
    r = run("neighborhood")
    assert r.passed
    assert r.details["D(0,2)"] == {"multicomponents": 126, "violations": 0}
    assert r.details["D(1,1)"] == {"multicomponents": 7362, "violations": 0}


def test_criterion_12_decomposition_oracle():
    r = run("decomposition-oracle")
    assert r.passed
    assert r.details["D(0,2)"]["disagreements"] == 0
    assert r.details["D(1,1)"]["disagreements"] == 0
    assert r.details["D(2,0) streaming"]["total"] == 18207378
    assert r.details["D(2,0) streaming"]["route_disagreements"] == 0
    assert r.details["D(2,0) operation-level sample"]["codes"] == 84
    assert r.details["D(2,0) operation-level sample"]["disagreements"] == 0


def test_battery_summary():
    """All criteria ran and passed; one line was printed for each."""
    assert len(_RESULTS) == len(CRITERIA)
    assert all(r.passed for r in _RESULTS.values())
