#!/usr/bin/env python3
"""um2witt command line entry point."""

import argparse
import importlib.metadata
import os
import sys
from dataclasses import replace

from .errors import ConfigurationError, NotUnimodularError, Um2WittError, exit_status
from .io.readers import (
    read_matrix,
    read_numeric_map,
    read_point,
    read_ring,
    read_row,
    read_word,
)
from .io.writers import format_matrix, to_json
from .logs import logger, set_debug_level
from .PolynomialParser import poly_parse
from .quadrics.sphere_maps import MAP_NAMES, apply_named_map
from .realization.hopf_invariant import hopf_invariant, parse_value
from .RingConfig import RingConfig
from .Settings import Settings
from .SkewMatrix import pfaffian, vaserstein_symbol
from .UnimodularRow import UnimodularRow, apply_word
from .utils import unify_file_list
from .verification.acceptance_suite import (
    CRITERIA,
    run_acceptance_suite,
    write_acceptance_report,
)
from .verification.identity_battery import IDENTITIES, results_frame, run_identity_battery

# some defaults
basedir = os.path.dirname(__file__)


def _emit(settings: Settings, command: str, payload: dict, text: str):
    print(to_json(command, payload) if settings.output.json else text)


def run_gb(args, settings: Settings) -> int:
    """Reduced Groebner basis of the relations of a ring presentation."""
    presentation = RingConfig.from_file(args.ring)
    if args.order is not None:
        presentation = replace(presentation, order=args.order)
    ring = presentation.build(budget=settings.groebner.budget)
    basis = [poly.to_string(ring.order) for poly in ring.gb]
    payload = {"order": str(ring.order), "basis": basis, "steps": ring.gb.steps}
    _emit(settings, "gb", payload, "\n".join(basis) if basis else "0")
    return 0


def run_nf(args, settings: Settings) -> int:
    """Normal form of a polynomial in a ring."""
    ring = read_ring(args.ring, budget=settings.groebner.budget)
    normal = ring.reduce(poly_parse(args.polynomial, ring.variables))
    text = normal.to_string(ring.order)
    _emit(settings, "nf", {"ring": ring.describe(), "normal_form": text}, text)
    return 0


def run_certify(args, settings: Settings) -> int:
    """Certificate of each row file, or NOT-UNIMODULAR."""
    documents, lines = [], []
    for path in unify_file_list(args.rows):
        try:
            row = read_row(str(path), budget=settings.groebner.budget)
        except NotUnimodularError as e:
            logger.info(str(e))
            documents.append({"file": str(path), "unimodular": False})
            lines.append(f"{path}: NOT-UNIMODULAR")
            continue
        documents.append({"file": str(path), "unimodular": True, **row.to_dict()})
        lines.append(f"{path}: ({', '.join(row.to_dict()['certificate'])})")
    _emit(settings, "certify", {"results": documents}, "\n".join(lines))
    return 0


def run_vsymbol(args, settings: Settings) -> int:
    """Vaserstein matrix of a row of length 3 and its Pfaffian."""
    row = read_row(args.row, budget=settings.groebner.budget)
    if args.word is not None:
        row = apply_word(row, read_word(args.word, row.ring))
    symbol = vaserstein_symbol(row)
    if args.negate:
        symbol = symbol.negate()
    rows = symbol.matrix.to_rows()
    payload = {"matrix": rows, "pfaffian": str(symbol.pfaffian)}
    _emit(settings, "vsymbol", payload, f"{format_matrix(rows)}\nPf = {symbol.pfaffian}")
    return 0


def run_pfaffian(args, settings: Settings) -> int:
    """Pfaffian of an alternating matrix."""
    matrix = read_matrix(args.matrix, budget=settings.groebner.budget)
    value = pfaffian(matrix)
    _emit(settings, "pfaffian", {"size": matrix.size, "pfaffian": str(value)}, str(value))
    return 0


def run_map(args, settings: Settings) -> int:
    """Apply one of the named maps to a row, a quadric point or a ring."""
    budget = settings.groebner.budget
    row = ring = point = None
    alpha = args.alpha
    if args.row is not None:
        row = read_row(args.row, budget=budget)
        ring = row.ring
    elif args.point is not None:
        ring, point, file_alpha = read_point(args.point, budget=budget)
        alpha = alpha if alpha is not None else file_alpha
    elif args.ring is not None:
        ring = read_ring(args.ring, budget=budget)
    else:
        raise ConfigurationError("map needs one of --row, --point or --ring")

    if args.name == "g" and row is None and point is None:
        raise ConfigurationError("g needs --row or --point")
    if row is None and args.name not in ["g", "h"]:
        # h(x) = x certified by itself is the tautological row of a sphere ring
        row = apply_named_map("h", ring=ring)
    alpha = ring.elem(alpha if alpha is not None else -1)

    image = apply_named_map(args.name, row, ring, point, alpha)
    if isinstance(image, UnimodularRow):
        payload = {"map": args.name, "image": image.to_dict()["row"]}
        payload["certificate"] = image.to_dict()["certificate"]
        text = str(image)
    else:
        payload = {"map": args.name, "image": [str(entry) for entry in image]}
        text = f"({', '.join(payload['image'])})"
    _emit(settings, "map", payload, text)
    return 0


def run_verify(args, settings: Settings) -> int:
    """Symbolic identity battery; PASS/FAIL per identity."""
    results = results_frame(run_identity_battery(args.identities or None))
    lines = [
        f"{'PASS' if row.passed else 'FAIL'} {row.name}: {row.detail}"
        for row in results.itertuples(index=False)
    ]
    payload = {"results": results.to_dict(orient="records")}
    _emit(settings, "verify", payload, "\n".join(lines))
    return 0 if results["passed"].all() else 1


def run_hopf(args, settings: Settings) -> int:
    """Hopf invariant of a map S^3 -> S^2 as a linking number."""
    realize = settings.realize
    result = hopf_invariant(
        read_numeric_map(args.map),
        parse_value(args.v1),
        parse_value(args.v2),
        grid=realize.grid,
        max_doublings=realize.max_doublings,
        residual_tolerance=realize.residual_tolerance,
        chart_bound=realize.chart_bound,
        newton_tolerance=realize.newton_tolerance,
        seed=realize.seed,
    )
    text = (
        f"linking {result.linking} (residual {result.residual:.4f}, grid {result.grid})"
    )
    _emit(settings, "hopf", result.to_dict(), text)
    return 0


def run_suite(args, settings: Settings) -> int:
    """All acceptance criteria; writes the report files."""
    results = run_acceptance_suite(settings, args.only)
    written = write_acceptance_report(results, settings)
    passed = int(results["passed"].sum())
    payload = {
        "passed": passed,
        "total": len(results),
        "results": results.to_dict(orient="records"),
        "files": [str(path) for path in written],
    }
    _emit(settings, "suite", payload, f"{passed}/{len(results)} criteria passed")
    return 0 if passed == len(results) else 1


def main(argv=None):
    """Program's main routine."""
    prog = "um2witt"

    parser = argparse.ArgumentParser(prog=prog)

    parser.add_argument(
        "--config-file",
        "-c",
        metavar="filepath",
        type=str,
        help="Path to the config file; Default: config.yaml",
        default="config.yaml",
    )

    parser.add_argument(
        "--output-dir",
        "-odir",
        metavar="dir",
        type=str,
        help="Directory for all output files; "
        "Default: None (i.e. as specified in config::output.directory)",
        default=None,
    )

    parser.add_argument(
        "--budget",
        metavar="steps",
        type=int,
        help="Reduction step budget; "
        "Default: None (i.e. as specified in config::groebner.budget)",
        default=None,
    )

    parser.add_argument(
        "--seed",
        metavar="seed",
        type=int,
        help="Seed of the numerical realization; "
        "Default: None (i.e. as specified in config::realize.seed)",
        default=None,
    )

    parser.add_argument(
        "--json",
        action="store_true",
        help="Print versioned JSON instead of text; "
        "Default: as specified in config::output.json",
    )

    parser.add_argument(
        "--version",
        "-v",
        action="version",
        version="%(prog)s v" + importlib.metadata.version(prog),
    )

    parser.add_argument(
        "--debug-level",
        "-dbg",
        metavar="level",
        type=int,
        help="verbosity level (0...3); Default: 1",
        default=1,
    )

    subparsers = parser.add_subparsers(dest="command", metavar="command", required=True)

    gb = subparsers.add_parser("gb", help="Reduced Groebner basis of a ring's relations")
    gb.add_argument("ring", metavar="ring-file", help="Ring presentation (JSON or TOML)")
    gb.add_argument(
        "--order",
        choices=["degrevlex", "grevlex", "lex"],
        help="Monomial order; Default: None (i.e. as specified in the ring file)",
        default=None,
    )
    gb.set_defaults(handler=run_gb)

    nf = subparsers.add_parser("nf", help="Normal form of a polynomial")
    nf.add_argument("ring", metavar="ring-file", help="Ring presentation or 'sphere'")
    nf.add_argument("polynomial", metavar="polynomial", help="Polynomial text")
    nf.set_defaults(handler=run_nf)

    certify = subparsers.add_parser("certify", help="Certify rows as unimodular")
    certify.add_argument("rows", metavar="row-file", nargs="+", help="Row files")
    certify.set_defaults(handler=run_certify)

    vsymbol = subparsers.add_parser("vsymbol", help="Vaserstein symbol of a row")
    vsymbol.add_argument("row", metavar="row-file", help="Certified row of length 3")
    vsymbol.add_argument(
        "--negate", action="store_true", help="Print the opposite representative"
    )
    vsymbol.add_argument(
        "--word",
        metavar="word-file",
        default=None,
        help="Elementary moves applied to the row first; Default: None",
    )
    vsymbol.set_defaults(handler=run_vsymbol)

    pfaff = subparsers.add_parser("pfaffian", help="Pfaffian of an alternating matrix")
    pfaff.add_argument("matrix", metavar="matrix-file", help="Alternating matrix file")
    pfaff.set_defaults(handler=run_pfaffian)

    maps = subparsers.add_parser("map", help="Apply f, g, H, h or alpha")
    maps.add_argument("--name", choices=MAP_NAMES, required=True, help="Map to apply")
    maps.add_argument("--row", metavar="row-file", default=None, help="Input row")
    maps.add_argument("--point", metavar="point-file", default=None, help="Q_4 point")
    maps.add_argument("--ring", metavar="ring-file", default=None, help="Ring for h")
    maps.add_argument(
        "--alpha",
        metavar="unit",
        type=str,
        help="Unit for g; Default: None (i.e. from the point file, else -1)",
        default=None,
    )
    maps.set_defaults(handler=run_map)

    verify = subparsers.add_parser("verify", help="Run the symbolic identity battery")
    verify.add_argument(
        "identities",
        metavar="identity",
        nargs="*",
        help=f"Identities to check (default all): {', '.join(IDENTITIES)}",
    )
    verify.set_defaults(handler=run_verify)

    hopf = subparsers.add_parser("hopf", help="Hopf invariant of a map S^3 -> S^2")
    hopf.add_argument(
        "--map",
        metavar="map",
        required=True,
        help="Map file or one of hopf, H-h, alpha-symmetric",
    )
    hopf.add_argument("--v1", metavar="value", default="0,0,1", help="Default: 0,0,1")
    hopf.add_argument("--v2", metavar="value", default="0,0,-1", help="Default: 0,0,-1")
    hopf.add_argument(
        "--grid",
        metavar="n",
        type=int,
        help="Initial resolution; "
        "Default: None (i.e. as specified in config::realize.grid)",
        default=None,
    )
    hopf.set_defaults(handler=run_hopf)

    suite = subparsers.add_parser("suite", help="Run the acceptance suite")
    suite.add_argument(
        "--only",
        metavar="criterion",
        nargs="+",
        choices=list(CRITERIA),
        help="Criteria to run; Default: all",
        default=None,
    )
    suite.set_defaults(handler=run_suite)

    args = parser.parse_args(argv)

    set_debug_level(args.debug_level)

    logger.debug(f"This is logging from logger {logger.name}")
    logger.debug(f"Binary path: {basedir} ")
    logger.debug(f"Parsed arguments: {args}")

    try:
        settings = Settings.from_yaml(args.config_file).with_overrides(
            groebner_budget=args.budget,
            realize_seed=args.seed,
            realize_grid=getattr(args, "grid", None),
            output_directory=args.output_dir,
            output_json=True if args.json else None,
        )
        return args.handler(args, settings)
    except (Um2WittError, FileNotFoundError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return exit_status(e)


if __name__ == "__main__":
    sys.exit(main())
