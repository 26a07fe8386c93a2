"""Command-line interface.

Exit status: 0 = success / property verified, 1 = property violated,
2 = usage or input error, 3 = classification falsified the main disjunction
(which signals an implementation bug, not mathematics).

Output is deterministic for fixed inputs and flags; timestamps appear only
behind --stamp.  All file formats are the text formats of doobcodes.fileio;
the DOOB_CAP environment variable overrides the vertex-count caps.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from doobcodes import fileio
from doobcodes.codes import (
    InvalidCodeError,
    LatinColoring,
    MdsCode,
    TwoMdsCode,
    is_mds,
    is_two_mds,
)
from doobcodes.enumeration import SearchSpec, enumerate_codes
from doobcodes.graphs import (
    CapExceededError,
    DoobError,
    DoobParams,
    FormatError,
    eigenvalue_list,
    verify_spectrum,
)
from doobcodes.partitions import (
    check_extremal_partition,
    find_intermediate_base,
    intermediate_partition,
    matrix_eigenvalues,
    quotient_matrix,
)
from doobcodes.report import CRITERIA, run_battery
from doobcodes.structure import TheoremFalsificationError, canonical_decomposition, classify

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_FALSIFIED = 3


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _params_of(args) -> DoobParams:
    try:
        return DoobParams(args.m, args.n)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def cmd_verify(args) -> int:
    kind = args.type
    if kind == "mds" or kind == "2mds":
        s = fileio.load_doobset(args.file)
        ok = is_mds(s) if kind == "mds" else is_two_mds(s)
        _emit(
            {"file": args.file, "type": kind, "params": f"{s.params.m} {s.params.n}",
             "size": len(s), "valid": ok},
            args.json,
        )
        return EXIT_OK if ok else EXIT_VIOLATED
    if kind == "latin":
        params, colors = fileio.load_doobcol(args.file)
        try:
            LatinColoring(params, colors)
            ok = True
        except InvalidCodeError:
            ok = False
        _emit({"file": args.file, "type": "latin", "valid": ok}, args.json)
        return EXIT_OK if ok else EXIT_VIOLATED
    # equitable 2-partition
    cell_a, cell_b = fileio.load_partition(args.file)
    q = quotient_matrix(cell_a, cell_b)
    payload = {"file": args.file, "type": "equitable", "equitable": q is not None}
    if q is not None:
        hi, lo = matrix_eigenvalues(q)
        tag = check_extremal_partition(cell_a)
        payload.update(
            {"quotient": str(q), "eigenvalues": f"{hi} {lo}", "tag": tag.tag,
             "a": tag.a if tag.a is not None else ""}
        )
    _emit(payload, args.json)
    return EXIT_OK if q is not None else EXIT_VIOLATED


def cmd_classify(args) -> int:
    s = fileio.load_doobset(args.file)
    try:
        code = MdsCode(s)
    except InvalidCodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    outcome = classify(code)
    payload: dict = {
        "code file": args.file,
        "semilinear": outcome.semilinear,
        "reducible": outcome.reducible,
    }
    out_dir = Path(args.out) if args.out else None
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
    if outcome.semilinear_witness is not None and out_dir is not None:
        path = out_dir / "witness_linear.doobset"
        fileio.save_doobset(path, outcome.semilinear_witness.set)
        payload["witness-linear-code file"] = str(path)
    if outcome.reducible_witness is not None:
        w = outcome.reducible_witness
        payload["bipartition"] = {
            "coords_a": list(w.coords_a), "coords_b": list(w.coords_b),
        }
        if out_dir is not None:
            fa = out_dir / "witness_coloring_a.doobcol"
            fb = out_dir / "witness_coloring_b.doobcol"
            fileio.save_doobcol(fa, w.f.params, w.f.colors)
            fileio.save_doobcol(fb, w.f_prime.params, w.f_prime.colors)
            payload["coloring files"] = [str(fa), str(fb)]
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    s = fileio.load_doobset(args.file)
    try:
        code = TwoMdsCode(s)
    except InvalidCodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    dec = canonical_decomposition(code)
    blocks = [
        {"coords": list(b.coords), "vertices": b.code.indices()}
        for b in dec.blocks
    ]
    payload = {
        "file": args.file, "k": dec.k, "sigma": dec.sigma,
        "decomposable": dec.decomposable, "blocks": blocks,
    }
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"file: {args.file}")
        print(f"k: {dec.k}")
        print(f"sigma: {dec.sigma}")
        print(f"decomposable: {dec.decomposable}")
        for b in blocks:
            print(f"block {b['coords']}: {b['vertices']}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    params = _params_of(args)
    mode = "count" if args.count_only else ("classes" if args.classes else "all")
    spec = SearchSpec(params, args.target, mode)
    result = enumerate_codes(spec, threads=args.threads)
    manifest: dict = {"params": [params.m, params.n], "target": args.target}
    rep_files = []
    if mode == "count":
        manifest["total"] = result
    elif mode == "all":
        manifest["total"] = len(result)
    else:
        manifest["total"] = result.total
        manifest["class count"] = len(result)
        manifest["class sizes"] = list(result.class_sizes)
        if args.out:
            out_dir = Path(args.out)
            out_dir.mkdir(parents=True, exist_ok=True)
            for i, rep in enumerate(result.representatives):
                path = out_dir / f"{args.target}_{params.m}_{params.n}_class{i:03d}.doobset"
                fileio.save_doobset(path, rep)
                rep_files.append(str(path))
            manifest["representative files"] = rep_files
    if args.out and mode != "classes":
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
    if args.out:
        manifest_path = Path(args.out) / f"{args.target}_{params.m}_{params.n}_manifest.json"
        manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
        print(str(manifest_path))
    else:
        print(json.dumps(manifest, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_partition(args) -> int:
    if not args.find_intermediate:
        print("error: specify --find-intermediate", file=sys.stderr)
        return EXIT_USAGE
    bases = find_intermediate_base()
    payload: dict = {
        "bases": len(bases),
        "base_sets": [b.indices() for b in bases],
    }
    if args.power:
        cell, cocell = intermediate_partition(bases[0], args.power)
        q = quotient_matrix(cell, cocell)
        payload["power"] = args.power
        payload["lifted quotient"] = str(q)
        payload["lifted cell size"] = len(cell)
        if args.out:
            fileio.save_partition(args.out, cell, cocell)
            payload["partition file"] = args.out
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"bases: {payload['bases']}")
        for b in payload["base_sets"]:
            print(" ", b)
        for key in ("power", "lifted quotient", "lifted cell size", "partition file"):
            if key in payload:
                print(f"{key}: {payload[key]}")
    return EXIT_OK if bases else EXIT_VIOLATED


def cmd_spectrum(args) -> int:
    params = _params_of(args)
    ok = verify_spectrum(params)
    _emit(
        {"params": f"{params.m} {params.n}", "eigenvalues": eigenvalue_list(params),
         "annihilates": ok},
        args.json,
    )
    return EXIT_OK if ok else EXIT_VIOLATED


def cmd_report(args) -> int:
    if not args.paper_suite:
        print("error: specify --paper-suite", file=sys.stderr)
        return EXIT_USAGE
    keys = args.criteria.split(",") if args.criteria else None
    if keys:
        known = {key for key, _, _ in CRITERIA}
        bad = set(keys) - known
        if bad:
            print(f"error: unknown criteria {sorted(bad)}", file=sys.stderr)
            return EXIT_USAGE
    if args.stamp:
        print(f"# started {time.strftime('%Y-%m-%dT%H:%M:%S')}")
    results = run_battery(keys, threads=args.threads)
    if args.json:
        print(json.dumps(
            [
                {"key": r.key, "label": r.label, "passed": r.passed,
                 "seconds": round(r.seconds, 1), "details": r.details}
                for r in results
            ],
            indent=2, sort_keys=True, default=str,
        ))
    else:
        for r in results:
            print(r.line())
        failed = sum(not r.passed for r in results)
        print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doob",
        description="verification, classification, and enumeration of extremal "
        "vertex sets in Doob graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a set, coloring, or partition file")
    p.add_argument("--type", required=True, choices=("mds", "2mds", "latin", "equitable"))
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("classify", help="semilinear/reducible classification of an MDS code")
    p.add_argument("file")
    p.add_argument("--out", help="directory for witness files")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("decompose", help="canonical XOR normal form of a 2xMDS code")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("enumerate", help="enumerate codes on small parameters")
    p.add_argument("--target", required=True, choices=("mds", "2mds", "latin"))
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--classes", action="store_true", help="reduce to equivalence classes")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out", help="directory for manifest and representatives")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("partition", help="equitable-partition searches")
    p.add_argument("--find-intermediate", action="store_true")
    p.add_argument("--power", type=int, help="lift the first base to D(power,0)")
    p.add_argument("--out", help="partition file for the lifted partition")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_partition)

    p = sub.add_parser("spectrum", help="integer annihilating-polynomial check")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("report", help="run the claim-verification battery")
    p.add_argument("--paper-suite", action="store_true")
    p.add_argument("--criteria", help="comma-separated subset of checks")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--stamp", action="store_true")
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except TheoremFalsificationError as exc:
        print(f"theorem falsification: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED
    except (FormatError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DoobError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATED


if __name__ == "__main__":
    sys.exit(main())
