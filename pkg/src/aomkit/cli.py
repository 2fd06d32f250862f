"""Command-line interface.

Exit codes: 0 all checks passed, 1 a violation or theorem failure was
certified, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .axioms import (
    AFFINE_AXIOMS,
    COVECTOR_AXIOMS,
    COM_AXIOMS,
    OM_AXIOMS,
    AxiomId,
    InconsistencyError,
    check_affine,
    check_covector,
    is_aom,
)
from .core_sign import SignVector
from .geometry import enumerate_covectors
from .io import ParseError, parse_arr, parse_svs, render_svs
from .suite import CorpusSpec, flaw_demo, verify
from .systems import (
    asym,
    dagger,
    parallel_vectors,
    q_vectors,
    restrict_positive,
    stabilizer,
    sym,
    topes,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2

DERIVED = {
    "sym": sym,
    "asym": asym,
    "topes": topes,
    "P": parallel_vectors,
    "N": stabilizer,
    "Q": q_vectors,
}


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_svs(path: str):
    try:
        return parse_svs(_read(path))
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit_system(system, args) -> None:
    if args.json:
        print(json.dumps({"elements": list(system.ground.labels), "vectors": system.strings()}, indent=2))
    else:
        sys.stdout.write(render_svs(system))


def _axiom_list(text: str | None, default):
    if not text:
        return default
    try:
        return [AxiomId.parse(t) for t in text.split(",") if t.strip()]
    except (ValueError, KeyError):
        raise InputError(f"unknown axiom in {text!r}") from None


def cmd_check(args) -> int:
    w = _load_svs(args.input)
    if args.mode == "om":
        report = check_covector(w, _axiom_list(args.axioms, OM_AXIOMS))
        payload = {"mode": "om", "result": report.passed, "report": report.to_dict()}
        text = report.render_text()
        ok = report.passed
    elif args.mode == "com":
        report = check_affine(w, _axiom_list(args.axioms, COM_AXIOMS))
        payload = {"mode": "com", "result": report.passed, "report": report.to_dict()}
        text = report.render_text()
        ok = report.passed
    else:
        if args.axioms:
            report = check_affine(w, _axiom_list(args.axioms, AFFINE_AXIOMS))
            ok = report.passed
            payload = {"mode": "aom", "result": ok, "report": report.to_dict()}
            text = report.render_text()
        else:
            try:
                ok, ev = is_aom(w, args.strategy)
            except InconsistencyError as exc:
                msg = f"routes disagree: {exc}"
                print(json.dumps({"mode": "aom", "error": msg}) if args.json else msg)
                return EXIT_VIOLATION
            payload = {"mode": "aom", "result": ok, **ev.to_dict()}
            parts = []
            if ev.axioms is not None:
                parts.append("axioms A1-A3:\n" + ev.axioms.render_text())
            if ev.dagger is not None:
                parts.append(f"lifted system ({len(ev.dagger_system)} vectors) O1-O4:\n" + ev.dagger.render_text())
            text = "\n".join(parts)
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)
        print(f"{args.mode}: {'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_derive(args) -> int:
    w = _load_svs(args.input)
    if args.which == "dagger":
        if args.label in w.ground:
            raise InputError(f"label {args.label!r} already in the ground set")
        out = dagger(w, args.label)
    else:
        out = DERIVED[args.which](w)
    _emit_system(out, args)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        arr = parse_arr(_read(args.input))
    except ParseError as exc:
        raise InputError(f"{args.input}: {exc}") from None
    _emit_system(enumerate_covectors(arr), args)
    return EXIT_OK


def cmd_lift(args) -> int:
    w = _load_svs(args.input)
    if args.label in w.ground:
        raise InputError(f"label {args.label!r} already in the ground set")
    _emit_system(dagger(w, args.label), args)
    return EXIT_OK


def cmd_restrict(args) -> int:
    o = _load_svs(args.input)
    if args.label not in o.ground:
        raise InputError(f"label {args.label!r} is not in the ground set")
    _emit_system(restrict_positive(o, args.label), args)
    return EXIT_OK


def cmd_verify(args) -> int:
    extra = [(path, _load_svs(path)) for path in args.extra or []]
    spec = CorpusSpec(
        seeds=range(args.seed, args.seed + args.count),
        max_n=args.max_n,
        max_dim=args.max_dim,
        fixtures=not args.no_fixtures,
        extra=extra,
        inject_broken=args.inject_broken,
    )
    result = verify(spec)
    print(json.dumps(result.to_dict(), indent=2) if args.json else result.render_text())
    return EXIT_OK if result.ok else EXIT_VIOLATION


def cmd_flaw_demo(args) -> int:
    w = _load_svs(args.input)
    vecs = []
    for text in (args.n1, args.n2):
        if text is None:
            vecs.append(None)
            continue
        try:
            vecs.append(SignVector.from_string(w.ground, text))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if (vecs[0] is None) != (vecs[1] is None):
        raise InputError("give both --n1 and --n2, or neither")
    demo = flaw_demo(w, vecs[0], vecs[1])
    print(json.dumps(demo.to_dict(), indent=2) if args.json else demo.render_text())
    return EXIT_OK


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="structured output")
    p.add_argument("--seed", type=int, default=d(1), help="first corpus seed (verify)")
    p.add_argument("--max-n", type=int, default=d(5), help="largest arrangement size (verify)")
    p.add_argument("--max-dim", type=int, default=d(3), help="largest dimension (verify)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aomkit", description="Sign-vector systems and affine oriented matroids.")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="check axioms of a .svs system")
    p.add_argument("input", help=".svs file or -")
    p.add_argument("--mode", choices=["om", "aom", "com"], default="aom")
    p.add_argument("--strategy", choices=["axioms", "dagger", "both"], default="both")
    p.add_argument("--axioms", help="comma separated axiom ids, e.g. O1,O3,SE")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("derive", parents=[common], help="print a derived system")
    p.add_argument("input")
    p.add_argument("which", choices=[*DERIVED, "dagger"])
    p.add_argument("--label", default="g", help="new element for dagger")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("enumerate", parents=[common], help="covectors of a .arr arrangement")
    p.add_argument("input")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("lift", parents=[common], help="lift an affine system to its oriented matroid")
    p.add_argument("input")
    p.add_argument("--label", default="g")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("restrict", parents=[common], help="positive side of one element")
    p.add_argument("input")
    p.add_argument("--label", default="g")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("verify", parents=[common], help="run the theorem checks on a corpus")
    p.add_argument("--count", type=int, default=20, help="number of seeds")
    p.add_argument("--no-fixtures", action="store_true")
    p.add_argument("--inject-broken", action="store_true")
    p.add_argument("--extra", nargs="*", help="additional .svs systems")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("flaw-demo", parents=[common], help="show that (U, V) cannot witness U + (-V)")
    p.add_argument("input")
    p.add_argument("--n1")
    p.add_argument("--n2")
    p.set_defaults(func=cmd_flaw_demo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
