"""Command line interface.

Exit codes: 0 success, 1 invalid structure or failing suite, 2 unreadable
input, 3 instance over a size guard.
"""

from __future__ import annotations

import argparse
import sys

from .core import ColoringProblem, GuardExceeded, InvalidStructure, validate
from .generators import GenConfig
from .geometry import ehrhart_qsym, hilbert_function
from .invariants import chromatic_polynomial, chromatic_qsym, count_walks, enumerate_stable_flags, flag_labels
from .serialize import ParseError, dumps, load
from .species import phi
from .suites import MAX_SUITE_SIZE, run_axiom_suite, run_theorem_suite

MAX_CLI_SIZE = 8

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_GUARD = 0, 1, 2, 3


def _load_problem(path, paranoid=False) -> ColoringProblem:
    x = load(path)
    if len(x.labels) > MAX_CLI_SIZE:
        raise GuardExceeded(f"{len(x.labels)} elements exceed the limit of {MAX_CLI_SIZE}")
    if isinstance(x, ColoringProblem):
        if paranoid:
            problems = validate(x.labels, x.family, x.ideal, paranoid=True)
            if problems:
                raise InvalidStructure(problems)
        return x
    return phi(x)


def cmd_convert(args):
    out = dumps(_load_problem(args.input))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def cmd_chromatic(args):
    c = _load_problem(args.input, args.paranoid)
    if args.eval is not None:
        print(count_walks(c, args.eval))
    elif args.qsym:
        print(chromatic_qsym(c))
    else:
        print(chromatic_polynomial(c))


def cmd_hilbert(args):
    print(hilbert_function(_load_problem(args.input, args.paranoid), args.n))


def cmd_ehrhart(args):
    print(ehrhart_qsym(_load_problem(args.input, args.paranoid)))


def cmd_check(args):
    x = load(args.input)
    if isinstance(x, ColoringProblem) and args.paranoid:
        problems = validate(x.labels, x.family, x.ideal, paranoid=True)
        if problems:
            raise InvalidStructure(problems)
    print(f"valid {type(x).__name__} on {len(x.labels)} elements")


def cmd_flags(args):
    c = _load_problem(args.input, args.paranoid)
    for flag in enumerate_stable_flags(c):
        chain = " < ".join("{" + ",".join(s) + "}" for s in flag_labels(c, flag))
        print(f"{chain}  type [{','.join(map(str, flag.type))}]")


def _suite_cfg(args) -> GenConfig:
    if not 1 <= args.ground_size <= MAX_SUITE_SIZE:
        raise GuardExceeded(f"suite ground size must be in 1..{MAX_SUITE_SIZE}")
    return GenConfig(seed=args.seed, ground_size=args.ground_size)


def cmd_axioms(args):
    report = run_axiom_suite(args.species, args.trials, _suite_cfg(args))
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_INVALID


def cmd_theorems(args):
    report = run_theorem_suite(args.trials, _suite_cfg(args))
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="colorprob", description="Coloring problems and their invariants.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", help="JSON structure file")
        sp.add_argument("--paranoid", action="store_true", help="full order-ideal closure check")
        return sp

    sp = with_input("convert", "apply the terminal morphism and print the coloring problem")
    sp.add_argument("--to", choices=["coloring-problem"], default="coloring-problem")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_convert)

    sp = with_input("chromatic", "chromatic polynomial, quasisymmetric function, or a value")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--poly", action="store_true")
    mode.add_argument("--qsym", action="store_true")
    mode.add_argument("--eval", type=int, metavar="K")
    sp.set_defaults(func=cmd_chromatic)

    sp = with_input("hilbert", "Hilbert function of the relative order complex")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_hilbert)

    with_input("ehrhart", "Ehrhart quasisymmetric function").set_defaults(func=cmd_ehrhart)
    with_input("check", "validate a structure file").set_defaults(func=cmd_check)
    with_input("flags", "list stable flags").set_defaults(func=cmd_flags)

    for name, func, help_ in (("axioms", cmd_axioms, "run the Hopf monoid axiom suite"),
                              ("theorems", cmd_theorems, "run the cross-module identity suite")):
        sp = sub.add_parser(name, help=help_)
        if name == "axioms":
            sp.add_argument("--species", required=True, help="C, G, HG, P, M, A or a JSON type name")
        sp.add_argument("--trials", type=int, default=100)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--ground-size", type=int, default=4)
        sp.set_defaults(func=func)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"cannot read input: {e}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidStructure as e:
        print("invalid structure:", file=sys.stderr)
        for v in e.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_INVALID
    except GuardExceeded as e:
        print(f"guard exceeded: {e}", file=sys.stderr)
        return EXIT_GUARD
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
