# -*- coding: utf-8 -*-
"""
Command line interface.

.. code-block:: shell

    owalink cluster --input points.csv --method average --newick tree.nwk
    owalink inversions --input d.csv --format matrix --method 'owa:lo:1,1;zero'
    owalink check --sequence '1,0.5,0.375,0.375,0.28125,0.28125,0.28125,0.28125;zero'
    owalink witness --sequence 'lo:1,1;zero'
    owalink compare --input points.csv --method 'owa:hi:1,1,1;zero'

Exit status is 0 on success, 2 for unreadable input, 3 for method or configuration errors and 4 when an internal
consistency check fails.
"""
import argparse
import logging
import sys
from typing import List, Optional, Tuple

from owalinkbase.exceptions import InputError, InvalidSequence
from owalinkbase.geometry import CondensedDistanceMatrix, PointSet, euclidean_distances
from owalinkbase.owa import OwaLinkageSpec
from owalinkio.consts import FORMATS
from owalinkio.exceptions import ParseError
from owalinkio.readers import read_matrix, read_points
from owalinkio.writers import dumps_json, format_linkage_csv, write_newick

from . import exceptions
from .agglomerator import cluster, detect_inversions
from .compare import compare_strategies
from .conditions import audit
from .config import DEFAULTS, RunConfig
from .witness import WitnessBudget, representability_witness

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CONFIG = 3
EXIT_BREACH = 4


def _load(cfg: RunConfig) -> Tuple[CondensedDistanceMatrix, Optional[PointSet]]:
    if cfg.input is None:
        raise ParseError("<none>", 0, "--input is required")
    if cfg.format == "matrix":
        return read_matrix(cfg.input), None
    points = read_points(cfg.input)
    return euclidean_distances(points), points


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.out:
        with open(cfg.out, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _run(cfg: RunConfig):
    dm, points = _load(cfg)
    return cluster(dm, cfg.linkage_method(), points)


def cmd_cluster(cfg: RunConfig) -> int:
    """Write the linkage matrix, and the Newick tree when ``--newick`` is given."""
    dendrogram = _run(cfg)
    _emit(format_linkage_csv(dendrogram), cfg)
    if cfg.newick:
        write_newick(dendrogram, cfg.newick)
    return EXIT_OK


def cmd_inversions(cfg: RunConfig) -> int:
    report = detect_inversions(_run(cfg), cfg.epsilon)
    _emit(dumps_json(report.to_dict()) + "\n", cfg)
    return EXIT_OK


def _sequence(cfg: RunConfig) -> OwaLinkageSpec:
    if not cfg.sequence:
        raise InvalidSequence("--sequence is required")
    return OwaLinkageSpec.parse(cfg.sequence)


def cmd_check(cfg: RunConfig) -> int:
    report = audit(_sequence(cfg), cfg.bound_m, cfg.bound_n)
    _emit(dumps_json(report.to_dict()) + "\n", cfg)
    if not report.consistent:
        raise exceptions.InvariantBreach("audit cross checks failed: {}".format(report.cross_checks))
    return EXIT_OK


def cmd_witness(cfg: RunConfig) -> int:
    spec = _sequence(cfg)
    budget = WitnessBudget(cfg.max_arity, cfg.max_cluster_size)
    witness = representability_witness(spec, budget)
    out = {
        "spec": str(spec),
        "budget": {"max_arity": budget.max_arity, "max_cluster_size": budget.max_cluster_size},
        "witness": None if witness is None else witness.to_dict(),
    }
    if witness is None:
        out["message"] = "none within budget"
    _emit(dumps_json(out) + "\n", cfg)
    return EXIT_OK


def cmd_compare(cfg: RunConfig) -> int:
    dm, points = _load(cfg)
    comparison = compare_strategies(dm, cfg.linkage_method(), points)
    _emit(dumps_json(comparison.to_dict()) + "\n", cfg)
    return EXIT_OK


COMMANDS = {
    "cluster": cmd_cluster,
    "inversions": cmd_inversions,
    "check": cmd_check,
    "witness": cmd_witness,
    "compare": cmd_compare,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="owalink", description="OWA-based hierarchical clustering")
    parser.add_argument("--debug", action="store_true", help="verbose logging")
    commands = parser.add_subparsers(dest="command", required=True)

    def data_command(name, help):
        sub = commands.add_parser(name, help=help)
        sub.add_argument("--input", required=True, help="CSV file")
        sub.add_argument("--format", choices=FORMATS, default=DEFAULTS["format"], help="points or square matrix")
        sub.add_argument(
            "--method", required=True, help="single|complete|average|weighted|centroid|median|ward|owa:<hi|lo>:<seq>"
        )
        sub.add_argument("--strategy", choices=("recompute", "incremental"), default=DEFAULTS["strategy"])
        sub.add_argument("--out", help="output file, stdout by default")
        return sub

    data_command("cluster", "write the linkage matrix").add_argument("--newick", help="also write a Newick tree")
    data_command("inversions", "report dendrogram inversions").add_argument(
        "--epsilon", type=float, default=DEFAULTS["epsilon"]
    )
    data_command("compare", "compare recompute and incremental strategies")

    check = commands.add_parser("check", help="audit a coefficient sequence")
    check.add_argument("--sequence", required=True, help="e.g. '1,0.5;zero' or '1;repeat'")
    check.add_argument("--bound-m", dest="bound_m", type=int, help="largest index checked by the conditions")
    check.add_argument("--bound-n", dest="bound_n", type=int, default=DEFAULTS["bound_n"], help="counterexample arity")
    check.add_argument("--out")

    witness = commands.add_parser("witness", help="search for a Lance-Williams representability witness")
    witness.add_argument("--sequence", required=True, help="e.g. 'lo:1,1;zero'")
    witness.add_argument("--max-arity", dest="max_arity", type=int, default=DEFAULTS["max_arity"])
    witness.add_argument("--max-cluster-size", dest="max_cluster_size", type=int, default=DEFAULTS["max_cluster_size"])
    witness.add_argument("--out")
    return parser


def _fail(code: int, exc: Exception) -> int:
    sys.stderr.write("owalink: error: {}\n".format(exc))
    log.debug("failure", exc_info=True)
    return code


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.debug else logging.WARNING, format="%(levelname)s %(name)s: %(message)s"
    )
    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[cfg.command](cfg)
    except (ParseError, InputError, exceptions.TooFewObjects) as exc:
        return _fail(EXIT_INPUT, exc)
    except (exceptions.MethodError, exceptions.InvalidBound, InvalidSequence) as exc:
        return _fail(EXIT_CONFIG, exc)
    except exceptions.InvariantBreach as exc:
        return _fail(EXIT_BREACH, exc)


def run():
    sys.exit(main())
