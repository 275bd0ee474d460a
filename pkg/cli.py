# cli.py
"""Sweep involutions, write the atlas, run the verification suites, export diagrams."""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

import config
from affine import GradingDatum, build_affine
from atlas import atlas_dot, build_atlas, classify_rows, dumps, grading_dot, hermitian_record, orbit_listing
from atlas_schemas import SweepConfig
from errors import LieTheoryError, UnknownType
from hermitian import hermitian_pairs
from rootsys import cartan_matrix, classify_gcm, to_dot
from suites import SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _emit(text: str, path: Optional[Path]) -> None:
    if path is not None:
        _write_text(path, text + "\n")
    else:
        print(text)


def _sweep_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-rank", type=int, default=config.MAX_RANK)
    parser.add_argument("--types", nargs="+", default=None,
                        help="Filter by letter (D), finite type (D4) or affine name (D4^(1))")
    parser.add_argument("--level-bound", type=int, default=config.LEVEL_BOUND)
    parser.add_argument("--jobs", type=int, default=config.SWEEP_JOBS)
    parser.add_argument("--json", dest="json_path", type=Path)


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="liesweep", description=__doc__)
    parser.add_argument("--log-level", default=config.LOG_LEVEL)
    sub = parser.add_subparsers(dest="command", required=True)

    atlas = sub.add_parser("atlas", help="Every involution with its I_ab poset and sphericity verdicts")
    _sweep_flags(atlas)
    atlas.add_argument("--dot", dest="dot_path", type=Path)

    verify = sub.add_parser("verify", help="Run one verification suite")
    verify.add_argument("suite", choices=sorted(SUITES))
    _sweep_flags(verify)

    classify = sub.add_parser("classify", help="One record per (grading, subalgebra)")
    _sweep_flags(classify)

    hermitian = sub.add_parser("hermitian", help="Hermitian pairs with ranks and tube type")
    hermitian.add_argument("--max-rank", type=int, default=config.MAX_RANK)
    hermitian.add_argument("--type", dest="pair_type", default=None)
    hermitian.add_argument("--node", type=int, default=None)
    hermitian.add_argument("--all-ort", action="store_true", help="List every orthogonal subset with its type")
    hermitian.add_argument("--antichain", action="store_true", help="Reduce every orthogonal subset to an antichain below it")
    hermitian.add_argument("--json", dest="json_path", type=Path)

    orbits = sub.add_parser("orbits", help="B_0-orbits of every abelian subalgebra of one grading")
    orbits.add_argument("type")
    orbits.add_argument("marks", help="Comma separated Kac marks s_0,...,s_l")
    orbits.add_argument("--twist", type=int, default=1)
    orbits.add_argument("--level-bound", type=int, default=config.LEVEL_BOUND)
    orbits.add_argument("--subalgebra", type=int, default=None, help="Index in the I_ab listing")
    orbits.add_argument("--json", dest="json_path", type=Path)

    dot = sub.add_parser("dot", help="Dynkin diagram in DOT")
    dot.add_argument("type")
    dot.add_argument("--twist", type=int, default=None, help="Affine diagram of the given twist")
    dot.add_argument("--marks", default=None)
    return parser.parse_args(argv)


def _config(args: argparse.Namespace) -> SweepConfig:
    return SweepConfig(
        max_rank=args.max_rank,
        types=args.types,
        level_bound=args.level_bound,
        jobs=args.jobs,
        output=str(args.json_path) if args.json_path else None,
    )


def _marks(text: str) -> List[int]:
    return [int(x) for x in text.split(",") if x.strip()]


# ============== COMMANDS ==============

def cmd_atlas(args: argparse.Namespace) -> int:
    cfg = _config(args)
    records = build_atlas(cfg.max_rank, cfg.types, cfg.level_bound, cfg.jobs)
    _emit(dumps(records), args.json_path)
    if args.dot_path is not None:
        _write_text(args.dot_path, atlas_dot(cfg.max_rank, cfg.types, cfg.level_bound))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    report = run_suite(args.suite, max_rank=cfg.max_rank, types=cfg.types,
                       level_bound=cfg.level_bound, jobs=cfg.jobs)
    if args.json_path is not None:
        _write_text(args.json_path, dumps(report.to_dict()) + "\n")
    print(f"{report.suite}: {report.checked} checks, {len(report.failures)} failures")
    for failure in report.failures:
        print(f"  {failure['where']} [{failure['subject']}] {failure['detail']} {failure['witness'] or ''}".rstrip())
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_classify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    _emit(dumps(classify_rows(cfg.max_rank, cfg.types, cfg.level_bound, cfg.jobs)), args.json_path)
    return EXIT_OK


def cmd_hermitian(args: argparse.Namespace) -> int:
    if args.pair_type is not None:
        if args.node is None:
            raise ValueError("--type needs --node")
        pairs = [(args.pair_type, args.node)]
    else:
        pairs = hermitian_pairs(args.max_rank)
    rows = [hermitian_record(label, node, args.all_ort, args.antichain) for label, node in pairs]
    _emit(dumps(rows), args.json_path)
    return EXIT_OK


def cmd_orbits(args: argparse.Namespace) -> int:
    g = GradingDatum(build_affine(args.type, args.twist), _marks(args.marks), level_bound=args.level_bound)
    _emit(dumps(orbit_listing(g, args.subalgebra)), args.json_path)
    return EXIT_OK


def cmd_dot(args: argparse.Namespace) -> int:
    if args.twist is None:
        cartan = cartan_matrix(args.type)
        print(to_dot(cartan, offset=1, name=classify_gcm(cartan).label or args.type))
        return EXIT_OK
    system = build_affine(args.type, args.twist)
    if args.marks is None:
        print(system.to_dot())
    else:
        print(grading_dot(GradingDatum(system, _marks(args.marks))))
    return EXIT_OK


COMMANDS = {
    "atlas": cmd_atlas,
    "verify": cmd_verify,
    "classify": cmd_classify,
    "hermitian": cmd_hermitian,
    "orbits": cmd_orbits,
    "dot": cmd_dot,
}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = _parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    config.configure_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except (ValidationError, UnknownType, ValueError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except LieTheoryError as e:
        if e.status_code < 500:
            print(f"usage error: {type(e).__name__}: {e.detail}", file=sys.stderr)
            return EXIT_USAGE
        logger.error(f"{args.command} failed: {type(e).__name__}: {e.detail}")
        return EXIT_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
