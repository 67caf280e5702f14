"""Command-line interface.

Records go to stdout as JSON lines (or aligned text with --pretty);
diagnostics and warnings go to stderr.  Exit codes: 0 success, 1 failed
verification, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .families import (
    is_baxter,
    is_dumont_first,
    is_dumont_second,
    is_freely_braided,
    is_simsun,
)
from .grassmann import is_balanced
from .matching import avoids, occurrences
from .patterns import PatternSyntaxError, format_pattern, format_perm, parse_pattern
from .perms import all_perms, cycle_type, descents, perm
from .schubert import (
    is_123_hexagon_avoiding,
    is_boolean,
    is_dbi,
    is_factorial,
    is_gorenstein,
    is_smooth,
)
from .translate import to_mesh
from .verify import DEFAULT_N, SOUND_MIN, SUITES, count_rank, run_suite

MAX_COUNT_RANK = 9

# property name -> (predicate taking (pi, method), default method, choices)
PROPERTIES = {
    "smooth": (lambda pi, m: is_smooth(pi), None, ()),
    "factorial": (is_factorial, "patterns", ("patterns", "forest")),
    "gorenstein": (
        is_gorenstein,
        "bivincular",
        ("bivincular", "marked_mesh", "bruhat", "interval"),
    ),
    "dbi": (is_dbi, "classical", ("classical", "marked_mesh")),
    "hexagon_123_avoiding": (
        is_123_hexagon_avoiding,
        "classical",
        ("classical", "marked_mesh"),
    ),
    "boolean": (lambda pi, m: is_boolean(pi), None, ()),
    "balanced": (lambda pi, m: is_balanced(pi), None, ()),
    "forest_like": (is_factorial, "forest", ("forest", "patterns")),
    "baxter": (is_baxter, "vincular", ("vincular", "bivincular", "barred")),
    "simsun": (is_simsun, "direct", ("direct", "mesh")),
    "dumont1": (is_dumont_first, "direct", ("direct", "marked_mesh")),
    "dumont2": (is_dumont_second, "direct", ("direct", "marked_mesh")),
    "freely_braided": (is_freely_braided, "classical", ("classical", "marked_mesh")),
}


class UsageError(Exception):
    pass


def _parse_perm_arg(text: str):
    try:
        if "," in text:
            return perm(tuple(int(v) for v in text.split(",")))
        return perm(tuple(int(c) for c in text))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad permutation {text!r}: {exc}") from exc


def _parse_pattern_arg(text: str):
    try:
        return parse_pattern(text)
    except PatternSyntaxError as exc:
        raise UsageError(f"bad pattern {text!r}: {exc}") from exc


def _emit(record: dict, pretty: bool) -> None:
    if pretty:
        parts = []
        for key, value in record.items():
            if isinstance(value, list):
                value = ",".join(str(v) for v in value) or "-"
            parts.append(f"{key}={value}")
        print("  ".join(parts))
    else:
        print(json.dumps(record))


def classify_record(pi) -> dict:
    return {
        "perm": format_perm(pi),
        "smooth": is_smooth(pi),
        "factorial": is_factorial(pi, "patterns"),
        "gorenstein": is_gorenstein(pi, "bivincular"),
        "dbi": is_dbi(pi, "classical"),
        "hexagon_123_avoiding": is_123_hexagon_avoiding(pi, "classical"),
        "boolean": is_boolean(pi),
        "balanced": is_balanced(pi),
        "forest_like": is_factorial(pi, "forest"),
        "baxter": is_baxter(pi, "vincular"),
        "simsun": is_simsun(pi, "direct"),
        "dumont1": is_dumont_first(pi, "direct"),
        "dumont2": is_dumont_second(pi, "direct"),
        "freely_braided": is_freely_braided(pi, "classical"),
        "descents": list(descents(pi)),
        "cycle_type": list(cycle_type(pi)),
    }


def cmd_classify(args) -> int:
    for text in args.perm:
        pi = _parse_perm_arg(text)
        record = classify_record(pi)
        if args.figures:
            from .report import save_partition_diagrams, save_permutation_diagram

            written = [save_permutation_diagram(pi, args.figures)]
            written.extend(save_partition_diagrams(pi, args.figures))
            record["figures"] = written
        _emit(record, args.pretty)
    return 0


def cmd_count(args) -> int:
    if bool(args.property) == bool(args.pattern):
        raise UsageError("provide exactly one of --property or --pattern")
    max_n = args.max_n if args.max_n is not None else 6
    if not 1 <= max_n <= MAX_COUNT_RANK:
        raise UsageError(f"--max-n must be between 1 and {MAX_COUNT_RANK}")
    if args.property:
        predicate_raw, default_method, choices = PROPERTIES[args.property]
        method = args.method or default_method
        if args.method and args.method not in choices:
            raise UsageError(
                f"--method for {args.property} must be one of {choices or '()'}"
            )
        label = args.property if method is None else f"{args.property}-{method}"
        predicate = lambda pi: predicate_raw(pi, method)
    else:
        pattern = _parse_pattern_arg(args.pattern)
        label = format_pattern(pattern)
        predicate = lambda pi: avoids(pattern, pi)

    counts = []
    for rank in range(1, max_n + 1):
        count = count_rank(rank, predicate, jobs=args.jobs)
        counts.append(count)
        _emit({"rank": rank, "count": count}, args.pretty)
    if args.figures:
        from .report import save_count_plot

        path = save_count_plot(range(1, max_n + 1), counts, label, args.figures)
        if args.pretty:
            print(f"figures={path}")
        else:
            print(json.dumps({"figures": [path]}))
    return 0


def cmd_avoiders(args) -> int:
    pattern = _parse_pattern_arg(args.pattern)
    if not 1 <= args.n <= MAX_COUNT_RANK:
        raise UsageError(f"--n must be between 1 and {MAX_COUNT_RANK}")
    for pi in all_perms(args.n):
        if avoids(pattern, pi):
            if args.pretty:
                print(format_perm(pi))
            else:
                print(json.dumps({"perm": format_perm(pi)}))
    return 0


def cmd_occurrences(args) -> int:
    pattern = _parse_pattern_arg(args.pattern)
    pi = _parse_perm_arg(args.perm)
    for occ in occurrences(pattern, pi):
        print("(" + ",".join(str(p) for p in occ.positions) + ")")
    return 0


def cmd_translate(args) -> int:
    pattern = _parse_pattern_arg(args.pattern)
    try:
        translated = to_mesh(pattern)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    meshes = sorted(translated, key=format_pattern) if isinstance(
        translated, frozenset
    ) else [translated]
    for mesh in meshes:
        print(format_pattern(mesh))
    return 0


def cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    all_passed = True
    for name in names:
        max_n = args.max_n if args.max_n is not None else DEFAULT_N[name]
        if max_n < SOUND_MIN[name]:
            print(
                f"warning: suite {name} cannot find anything below rank "
                f"{SOUND_MIN[name]}; running to rank {max_n}",
                file=sys.stderr,
            )
        result = run_suite(name, max_n=args.max_n, seed=args.seed, jobs=args.jobs)
        all_passed &= result.passed
        if args.pretty:
            print(f"{name}: {'pass' if result.passed else 'FAIL'} "
                  f"({result.checked} checks)")
            for failure in result.failures:
                print(f"  counterexample: {failure}")
            for note in result.notes:
                print(f"  note: {note}")
        else:
            print(
                json.dumps(
                    {
                        "suite": name,
                        "passed": result.passed,
                        "checked": result.checked,
                        "failures": result.failures,
                        "notes": result.notes,
                    }
                )
            )
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permpat",
        description="Pattern engine for permutations: matching, translation, "
        "Schubert-variety classification, and exhaustive verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify permutations")
    p.add_argument("perm", nargs="+", help="permutation, e.g. 31524 or 10,2,1,...")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--figures", metavar="DIR", help="render diagrams into DIR")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("count", help="counting sequence for a property or pattern")
    p.add_argument("--property", choices=sorted(PROPERTIES))
    p.add_argument("--pattern", help="pattern notation, e.g. 'cl:132'")
    p.add_argument("--n", "--max-n", dest="max_n", type=int, default=None,
                   help=f"largest rank (default 6, cap {MAX_COUNT_RANK})")
    p.add_argument("--method", help="override the property's default method")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--figures", metavar="DIR")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("avoiders", help="list the avoiders of a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_avoiders)

    p = sub.add_parser("occurrences", help="occurrences of a pattern in a permutation")
    p.add_argument("--pattern", required=True)
    p.add_argument("perm")
    p.set_defaults(func=cmd_occurrences)

    p = sub.add_parser("translate", help="translate a pattern to mesh form")
    p.add_argument("--pattern", required=True)
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    p.add_argument("--max-n", dest="max_n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
