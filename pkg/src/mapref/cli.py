"""Command-line front end.

Commands:

    build FAMILY [params] -o FILE     construct a family member
    analyze FILE [--json]             invariants and symmetry of a map file
    classify FILE                     edge-transitive type line
    verify SUITE [--report-dir DIR]   run a named verification suite
    dual FILE -o FILE                 vertex/face dual
    petrie FILE -o FILE               petrie dual

Exit codes: 0 success, 1 verification failure, 2 input error.  Builders
print their verification record as JSON on stdout.  The MAPREF_CAP
environment variable overrides the group-closure element cap.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import analyze, classify_line
from .builders import (NecklaceSpec, branched_double_cover, cube_jet_map,
                       cube_map, dihedral_tube, disc_map, mod2_abelian_cover,
                       necklace, path_family, symmetric_group_tube,
                       tetrahedron_map, torus_map)
from .errors import MaprefError, NotEdgeTransitive
from .flagmap import dual, load_map, petrie_dual, save_map, to_text
from .perm import perm_to_json
from .plotting import write_report
from .record import VerificationRecord
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2

FAMILIES = ("disc-n3", "tetrahedron", "cube", "torus", "double-cover",
            "mod2-cover", "necklace", "jet-cube", "path-family",
            "cayley-tube")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mapref",
        description="maps on surfaces as flag permutations: build, "
                    "analyze, classify, verify")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a family member")
    b.add_argument("family", choices=FAMILIES)
    b.add_argument("-o", "--output", required=True, help="output JSON file")
    b.add_argument("--b", type=int, default=None)
    b.add_argument("--c", type=int, default=0)
    b.add_argument("--c0", type=int, default=None)
    b.add_argument("--c1", type=int, default=None)
    b.add_argument("--c2", type=int, default=None)
    b.add_argument("--s2minus", type=int, default=0,
                   help="extra inert two-point pieces in a necklace")
    b.add_argument("--s4star", type=int, default=0,
                   help="extra inert four-point pieces in a necklace")
    b.add_argument("--k", type=int, default=None)
    b.add_argument("--m", type=int, default=None)
    b.add_argument("--of", default=None,
                   help="base map file for mod2-cover (default: the disc)")
    b.add_argument("--dihedral", type=_int_list, default=None,
                   metavar="C1,C2,...",
                   help="cayley-tube over a dihedral product")
    b.add_argument("--symmetric", type=int, default=None, metavar="N",
                   help="cayley-tube over a symmetric group")
    b.add_argument("--rigidify", action="store_true")

    a = sub.add_parser("analyze", help="report invariants of a map file")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")

    c = sub.add_parser("classify", help="edge-transitive type of a map file")
    c.add_argument("file")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--report-dir", default=None,
                   help="write <suite>.csv and <suite>.png here")

    for name, help_text in (("dual", "vertex/face dual"),
                            ("petrie", "petrie dual")):
        d = sub.add_parser(name, help=help_text)
        d.add_argument("file")
        d.add_argument("-o", "--output", required=True)

    return parser


def _require(args: argparse.Namespace, names: list[str], family: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise MaprefError(
            f"{family} needs {', '.join('--' + n for n in missing)}")


def _cmd_build(args: argparse.Namespace) -> int:
    record: VerificationRecord | None = None
    flag_map = None
    extra: dict | None = None
    family = args.family
    if family == "disc-n3":
        flag_map = disc_map()
    elif family == "tetrahedron":
        flag_map = tetrahedron_map()
    elif family == "cube":
        flag_map = cube_map()
    elif family == "torus":
        _require(args, ["b"], family)
        flag_map = torus_map(args.b, args.c)
    elif family == "double-cover":
        _require(args, ["b"], family)
        res = branched_double_cover(args.b)
        flag_map, record = res.map, res.record
    elif family == "mod2-cover":
        base = load_map(args.of) if args.of else disc_map()
        res = mod2_abelian_cover(base)
        flag_map, record = res.cover.map, res.record
    elif family == "necklace":
        _require(args, ["c0", "c1", "c2"], family)
        res = necklace(NecklaceSpec(args.c0, args.c1, args.c2,
                                    extra_s2minus=args.s2minus,
                                    extra_s4star=args.s4star))
        flag_map, record = res.map, res.record
    elif family == "jet-cube":
        res = cube_jet_map()
        flag_map, record = res.map, res.record
    elif family == "path-family":
        _require(args, ["k", "m"], family)
        res = path_family(args.k, args.m)
        record = res.record
        extra = {
            "family": "path_family",
            "k": res.spec.k, "m": res.spec.m, "n": res.spec.n,
            "partition": list(res.spec.partition),
            "assignment": list(res.spec.assignment),
            "generators": [perm_to_json(s) for s in res.quadruple.s],
            "mode": res.quadruple.mode,
            "product_orders": {f"{i + 1}{j + 1}": o
                               for (i, j), o in res.quadruple.p.items()},
            "record": record.to_json_dict(),
        }
    elif family == "cayley-tube":
        if (args.dihedral is None) == (args.symmetric is None):
            raise MaprefError(
                "cayley-tube needs exactly one of --dihedral or --symmetric")
        if args.dihedral is not None:
            res = dihedral_tube(args.dihedral, rigidify=args.rigidify)
        else:
            res = symmetric_group_tube(args.symmetric,
                                       rigidify=args.rigidify)
        flag_map, record = res.map, res.record
    else:  # pragma: no cover
        raise MaprefError(f"unhandled family {family}")

    out = Path(args.output)
    if extra is not None:
        out.write_text(json.dumps(extra, indent=1) + "\n", encoding="utf-8")
    else:
        assert flag_map is not None
        save_map(flag_map, out)
    if record is not None:
        print(record.to_json())
        if not record.ok:
            return EXIT_VERIFY_FAILED
    print(f"wrote {out}", file=sys.stderr)
    return EXIT_OK


def _cmd_analyze(args: argparse.Namespace) -> int:
    report = analyze(load_map(args.file))
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=1))
    else:
        print(report.to_text())
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    m = load_map(args.file)
    print(classify_line(m))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    record = run_suite(args.suite)
    for line in record.lines():
        print(line)
    npass = sum(c.ok for c in record.checks)
    print(f"{args.suite}: {npass}/{len(record.checks)} checks pass")
    if args.report_dir:
        csv_path, png_path = write_report(record, args.report_dir,
                                          args.suite)
        print(f"report: {csv_path} {png_path}", file=sys.stderr)
    return EXIT_OK if record.ok else EXIT_VERIFY_FAILED


def _cmd_dual(args: argparse.Namespace, petrie: bool) -> int:
    m = load_map(args.file)
    out = petrie_dual(m) if petrie else dual(m)
    save_map(out, args.output)
    print(to_text(out))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "build":
            return _cmd_build(args)
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "dual":
            return _cmd_dual(args, petrie=False)
        if args.command == "petrie":
            return _cmd_dual(args, petrie=True)
    except NotEdgeTransitive as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except MaprefError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    parser.error(f"unknown command {args.command}")
    return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
