"""
CLI module for actorkit.

Command-line front door: load algebras and varieties, compute actors and
verify the representability theorems on concrete algebras.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from .core import ActorKit, ActorKitConfig
from .errors import ActorKitError
from .linalg import Field

THEOREMS = ["thm-assoc1", "thm-alt", "thm-pois", "bijection", "eq2"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _field_type(text: str) -> Field:
    try:
        return Field.from_name(text)
    except ActorKitError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def render_text(report: Any, indent: int = 0) -> List[str]:
    """Plain ``key: value`` lines, nested records indented."""
    pad = "  " * indent
    lines = []
    if isinstance(report, dict):
        for key in sorted(report):
            value = report[key]
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {value}")
    elif isinstance(report, list):
        if all(not isinstance(item, (dict, list)) for item in report):
            lines.append(f"{pad}{' '.join(str(item) for item in report)}")
        else:
            for i, item in enumerate(report):
                lines.append(f"{pad}[{i}]")
                lines.extend(render_text(item, indent + 1))
    else:
        lines.append(f"{pad}{report}")
    return lines


def emit(report: Dict[str, Any], fmt: str, headline: Optional[str] = None) -> None:
    """Print a report; JSON output is byte-identical for identical inputs."""
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    if headline:
        print(headline)
        print("=" * len(headline))
    print("\n".join(render_text(report)))


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with all sub-commands."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_type, help="Ground field override: Q or GFp")
    common.add_argument("--format", choices=["json", "text"], default="text", help="Report format")
    common.add_argument("--budget", type=int, help="Enumeration candidate budget")
    common.add_argument("--trace", help="Write the verification trace (JSON) to this file")
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging")

    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("--algebra", "-a", help="Algebra file or bundled example name")

    variety = argparse.ArgumentParser(add_help=False)
    group = variety.add_mutually_exclusive_group()
    group.add_argument("--variety", help="Variety file (or preset name)")
    group.add_argument("--preset", help="Variety preset name")

    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("--B", dest="B", help="Acting algebra B (file or example name)")
    pair.add_argument("--X", dest="X", help="Algebra X acted on (file or example name)")

    parser = argparse.ArgumentParser(
        prog="actorkit",
        description="actorkit - actors of unitary non-associative algebras",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  actorkit actor compute --algebra octonions --preset alt
  actorkit verify thm-assoc1 --algebra M2
  actorkit verify bijection --B idempotent-line --X F --variety cassoc --field GF2
  actorkit usga compute --algebra M2-poisson --format json
  actorkit varieties
        """,
    )
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("validate", parents=[common, algebra, variety], help="Validate algebra/variety files")
    commands.add_parser("varieties", parents=[common], help="List variety presets")
    commands.add_parser("status", parents=[common], help="Show configuration and theorem routing")

    actor = commands.add_parser("actor", parents=[common, algebra, variety], help="External weak actor E(X)")
    actor.add_argument("action", choices=["compute", "inn", "product"])
    actor.add_argument("--left", type=int, default=0, help="First factor (canonical basis index)")
    actor.add_argument("--right", type=int, default=0, help="Second factor (canonical basis index)")
    actor.add_argument("--product", choices=["mul", "bracket"], default="mul", help="Structure operation")

    usga_parser = commands.add_parser("usga", parents=[common, algebra], help="Poisson actor [X]")
    usga_parser.add_argument("action", choices=["compute"])

    commands.add_parser("center", parents=[common, algebra], help="Center Z(X) of the bracket")

    semidirect = commands.add_parser("semidirect", parents=[common, variety, pair], help="Semidirect product B ⋉ X")
    semidirect.add_argument("--morphism", help="Acting morphism file")

    commands.add_parser("enumerate", parents=[common, variety, pair], help="Enumerate split extensions over GF(p)")

    verify = commands.add_parser("verify", parents=[common, algebra, variety, pair], help="Verify a theorem")
    verify.add_argument("theorem", choices=THEOREMS)

    return parser


def _setup_logging(verbose: bool, level: str) -> None:
    root = logging.getLogger()
    if not root.handlers:
        logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    root.setLevel(logging.DEBUG if verbose else getattr(logging, level, logging.WARNING))


def _require(parser: argparse.ArgumentParser, args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name, None) is None]
    if missing:
        parser.error(f"{args.command} requires {', '.join(missing)}")


def _default_variety(kit: ActorKit, args: argparse.Namespace, num_products: int, default: Optional[str] = None):
    fallback = default or ("pois" if num_products == 2 else "assoc")
    return kit.resolve_variety(args.variety, args.preset, fallback)


def execute(kit: ActorKit, parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    """
    Run one parsed command.

    Returns:
        Exit status: 0 success or theorem pass, 1 theorem fail or invalid input
    """
    fmt = args.format
    command = args.command

    if command == "validate":
        a = kit.load_algebra(args.algebra, args.field) if args.algebra else None
        v = kit.resolve_variety(args.variety, args.preset)
        if a is None and v is None:
            parser.error("validate requires --algebra and/or --variety/--preset")
        report = kit.validate_report(a, v)
        emit(report, fmt, "VALID" if report["valid"] else "INVALID")
        return EXIT_OK if report["valid"] else EXIT_FAIL

    if command == "varieties":
        report = kit.list_varieties()
        emit(report, fmt, f"{len(report['presets'])} variety presets")
        return EXIT_OK

    if command == "status":
        emit(kit.get_system_status(), fmt, "actorkit status")
        return EXIT_OK

    if command == "actor":
        _require(parser, args, "algebra")
        a = kit.load_algebra(args.algebra, args.field)
        v = _default_variety(kit, args, a.num_products)
        if args.action == "compute":
            report = kit.actor_report(a, v)
            emit(report, fmt, f"dim E({a.name}) = {report['dimension']}")
        elif args.action == "inn":
            report = kit.inn_report(a, v)
            emit(report, fmt, f"Inn: {a.name} -> E({a.name}), bijective = {report['bijective']}")
        else:
            report = kit.product_report(a, v, args.left, args.right, args.product)
            emit(report, fmt, "defined" if report["defined"] else "undefined")
        return EXIT_OK

    if command == "usga":
        _require(parser, args, "algebra")
        a = kit.load_algebra(args.algebra, args.field)
        report = kit.usga_report(a)
        emit(report, fmt, f"dim [{a.name}] = {report['dimension']}")
        return EXIT_OK

    if command == "center":
        _require(parser, args, "algebra")
        a = kit.load_algebra(args.algebra, args.field)
        report = kit.center_report(a)
        emit(report, fmt, f"dim Z({a.name}) = {report['center_dim']}")
        return EXIT_OK

    if command == "semidirect":
        _require(parser, args, "B", "X", "morphism")
        B = kit.load_algebra(args.B, args.field)
        X = kit.load_algebra(args.X, args.field)
        v = _default_variety(kit, args, X.num_products)
        report = kit.semidirect_report(B, X, v, args.morphism)
        emit(report, fmt, f"round trip: {'PASS' if report['round_trip'] else 'FAIL'}")
        return EXIT_OK if report["round_trip"] else EXIT_FAIL

    if command == "enumerate":
        _require(parser, args, "B", "X")
        B = kit.load_algebra(args.B, args.field)
        X = kit.load_algebra(args.X, args.field)
        v = _default_variety(kit, args, X.num_products)
        report = kit.enumerate_report(B, X, v)
        emit(report, fmt, f"{report['split_extensions']} split extensions, {report['acting_morphisms']} acting morphisms")
        return EXIT_OK

    # verify
    theorem = args.theorem
    variety = kit.resolve_variety(args.variety, args.preset)
    if theorem == "bijection":
        _require(parser, args, "B", "X")
        result = kit.verify(
            theorem, variety=variety, B=kit.load_algebra(args.B, args.field), X=kit.load_algebra(args.X, args.field)
        )
        headline = f"{result.details['split_extensions']} = {result.details['acting_morphisms']}"
    else:
        _require(parser, args, "algebra")
        result = kit.verify(theorem, algebra=kit.load_algebra(args.algebra, args.field), variety=variety)
        headline = theorem
    verdict = "PASS" if result.passed else "FAIL"
    emit(result.to_dict(), fmt, f"{headline}: {verdict}")
    return EXIT_OK if result.passed else EXIT_FAIL


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse ``argv`` and execute the command.

    Returns:
        Exit status: 0 success/pass, 1 fail or validation error, 2 usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    config = ActorKitConfig(budget=args.budget)
    _setup_logging(args.verbose, config.log_level)
    kit = ActorKit(config)
    try:
        return execute(kit, parser, args)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    except FileNotFoundError as e:
        print(f"Error: file not found: {e.filename}", file=sys.stderr)
        return EXIT_FAIL
    except ActorKitError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAIL
    finally:
        if args.trace:
            Path(args.trace).write_text(kit.export_trace(), encoding="utf-8")


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point."""
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
