import argparse
import json
import logging
import sys
import time
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from dotenv import load_dotenv

from ..audit.axioms import audit_all
from ..config.loader import load_run_config, load_space
from ..config.schema import RunConfig, ScenarioParams
from ..errors import (
    IncompatibleProximity,
    InputError,
    NearspaceError,
    NotT1,
    ParseError,
    SetupInvalid,
    SizeLimitExceeded,
)
from ..hyperspace.factory import get_halves
from ..hyperspace.generated import compare
from ..hyperspace.subbase import GeneratorFamily, HalfSpec, build_subbase
from ..hyperspace.theorems import admissibility_check, lemma_check
from ..log import configure_logging, console
from ..proximity.factory import get_proximity
from ..proximity.kinds import CLOSURE_LODATO, ProximityKind
from ..regions.scenarios import ScenarioResult, get_scenario
from ..topology.enumeration import count_topologies
from ..topology.space import FiniteSpace

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CLAIM_FAILED = 2
EXIT_INPUT_ERROR = 3
EXIT_RESOURCE_GUARD = 4

Report = Dict[str, Any]


class CommandParser(argparse.ArgumentParser):
    """Argument parser whose usage errors surface as input errors"""

    def error(self, message: str):
        raise InputError(f"{self.prog}: {message}")


def _space_summary(space: FiniteSpace) -> Report:
    return {"fingerprint": space.fingerprint, "points": list(space.labels), "t1": space.is_t1()}


def run_audit(space_file: str, kind_name: Optional[str], allow_large: bool = False) -> Report:
    """Kuratowski audit, then the Lodato, EF and compatibility audits plus N0-N6 for strong kinds"""
    kind = get_proximity(kind_name) if kind_name else None
    space = load_space(space_file)
    with console.status(f"[bold green] Auditing {space_file}...[/bold green]"):
        report = audit_all(space, kind, allow_large=allow_large)
    console.log(f"{len(report.verdicts)} axioms audited, {len(report.failures())} failing")
    return {
        "space": _space_summary(space),
        "kind": kind.name if kind else None,
        "verdicts": report.render(space),
        "failures": [verdict.axiom for verdict in report.failures()],
    }


def _theorem_kinds(halves: Sequence[HalfSpec]) -> List[ProximityKind]:
    kinds = [half.proximity for half in halves if half.family == GeneratorFamily.STRONG_HIT and half.proximity]
    return list(dict.fromkeys(kinds))


def _far_kind(halves: Sequence[HalfSpec]) -> ProximityKind:
    for half in halves:
        if half.family == GeneratorFamily.FAR_MISS and half.proximity is not None:
            return half.proximity
    return CLOSURE_LODATO


def run_hyper(space_file: str, left: str, right: str, parameters: Optional[List[str]] = None) -> Report:
    """Compare two generated hyperspace topologies and, on a T1 space, check admissibility and the lemma"""
    left_halves, right_halves = get_halves(left), get_halves(right)
    space = load_space(space_file)
    chosen = None if parameters is None else [space.subset_of(_labels(item)) for item in parameters]

    with console.status("[bold green] Building subbases...[/bold green]"):
        left_subbase = build_subbase(space, left_halves, chosen)
        right_subbase = build_subbase(space, right_halves, chosen)
    comparison = compare(left_subbase, right_subbase)
    console.log(f"{left_subbase.name} vs {right_subbase.name}: {comparison.verdict.value}")

    witnesses = [
        witness.render(left_subbase if witness.side == "left" else right_subbase) for witness in comparison.witnesses
    ]
    report: Report = {
        "space": _space_summary(space),
        "left": left_subbase.name,
        "right": right_subbase.name,
        "comparison": {"verdict": comparison.verdict.value, "witnesses": witnesses},
        "theorems": _run_theorems(space, [*left_halves, *right_halves]),
    }
    return report


def _run_theorems(space: FiniteSpace, halves: Sequence[HalfSpec]) -> Report:
    kinds = _theorem_kinds(halves)
    if not kinds:
        return {"status": "skipped", "reason": "no strong-hit half"}
    far_kind = _far_kind(halves)
    results = []
    try:
        for kind in kinds:
            with console.status(f"[bold green] Checking admissibility under {kind.name}...[/bold green]"):
                admissibility = admissibility_check(space, kind, far_kind)
                lemma = lemma_check(space, kind)
            results.append(
                {
                    "kind": kind.name,
                    "far_kind": far_kind.name,
                    "admissibility": admissibility.render(space),
                    "lemma": {
                        "passed": not lemma,
                        "witnesses": [{"A": space.render(A), "H": space.render(H)} for A, H in lemma],
                    },
                }
            )
    except NotT1 as e:
        logger.warning("Skipping admissibility and lemma checks: %s", e)
        return {"status": "skipped", "reason": str(e)}
    passed = all(item["admissibility"]["passed"] and item["lemma"]["passed"] for item in results)
    return {"status": "passed" if passed else "failed", "checks": results}


def _labels(item: str) -> List[str]:
    return [label.strip() for label in item.split(",") if label.strip()]


SCENARIO_ARGUMENTS: Dict[str, Callable[[ScenarioParams, RunConfig], Dict[str, Any]]] = {
    "fig31": lambda params, config: {"variant": params.variant},
    "thm2-dir1": lambda params, config: {"e_shape": params.e_shape, "grid": config.grid.to_grid()},
    "thm2-dir2": lambda params, config: params.dir2_kwargs(),
    "oracle": lambda params, config: {"seed": config.oracle.seed, "count": config.oracle.count},
}


def run_scenario(name: str, params: ScenarioParams, config: Optional[RunConfig] = None) -> ScenarioResult:
    """Run one planar scenario; SetupInvalid passes through"""
    config = config or RunConfig()
    scenario = get_scenario(name)
    with console.status(f"[bold green] Running scenario {name}...[/bold green]"):
        result = scenario(**SCENARIO_ARGUMENTS[name](params, config))
    console.log(f"Scenario {name}: verdict {str(result.verdict).lower()}")
    return result


def run_enumerate(n: int, brute_force: bool = False) -> Report:
    with console.status(f"[bold green] Enumerating topologies on {n} points...[/bold green]"):
        count = count_topologies(n, brute_force=brute_force)
    return {"n": n, "count": count, "brute_force": brute_force}


def _error_report(error: Exception) -> Report:
    name = type(error).__name__ if isinstance(error, NearspaceError) else InputError.__name__
    rendered: Report = {"type": name, "message": str(error)}
    if isinstance(error, ParseError):
        rendered.update({"line": error.line, "column": error.column})
    if isinstance(error, IncompatibleProximity):
        rendered["failed_axioms"] = list(error.failed_axioms)
    if isinstance(error, SetupInvalid):
        rendered["predicate"] = error.predicate
    return rendered


def build_parser() -> CommandParser:
    common = CommandParser(add_help=False)
    common.add_argument("--config", help="YAML run config (seeds, grid, scenario defaults)")
    common.add_argument("--allow-large", action="store_true", help="Lift the audit guard to five points")
    common.add_argument("--timing", action="store_true", help="Add wall time to the report")

    parser = CommandParser(prog="nearspace", description="Audit proximities and hyperspace topologies")
    verbs = parser.add_subparsers(dest="verb", required=True)

    audit = verbs.add_parser("audit", parents=[common], help="Audit a space under a proximity")
    audit.add_argument("space_file", help="Path to a JSON space file")
    audit.add_argument("--kind", help="ex1 | ex2 | ex3 | lodato | metric[:EPS]")

    hyper = verbs.add_parser("hyper", parents=[common], help="Compare two hyperspace subbases")
    hyper.add_argument("space_file", help="Path to a JSON space file")
    hyper.add_argument("left", help="Half or join, e.g. hit+far-miss:lodato")
    hyper.add_argument("right", help="Half or join, e.g. strong-hit:ex2+far-miss:lodato")
    hyper.add_argument("--param", action="append", help="Restrict generator parameters to this open set (labels a,b)")

    scenario = verbs.add_parser("scenario", parents=[common], help="Run a planar scenario")
    scenario.add_argument("name", help="fig31 | thm2-dir1 | thm2-dir2 | oracle")
    scenario.add_argument("--h-center", help="x,y")
    scenario.add_argument("--h-radius")
    scenario.add_argument("--a-center", help="x,y")
    scenario.add_argument("--a-radius")
    scenario.add_argument("--variant", help="default | tangent | point")
    scenario.add_argument("--e-shape", help="circle | closed-disk")
    scenario.add_argument("--seed", type=int)
    scenario.add_argument("--count", type=int)

    enumerate_ = verbs.add_parser("enumerate", parents=[common], help="Count topologies on n points")
    enumerate_.add_argument("n", type=int)
    enumerate_.add_argument("--brute-force", action="store_true", help="Check every family of subsets")
    return parser


def _command_echo(args: argparse.Namespace) -> Report:
    echo = {key: value for key, value in vars(args).items() if key not in ("config", "timing")}
    return {key: value for key, value in echo.items() if value is not None and value is not False}


def _execute(args: argparse.Namespace, config: RunConfig) -> Tuple[Report, int]:
    allow_large = args.allow_large or config.allow_large
    if args.verb == "audit":
        return run_audit(args.space_file, args.kind, allow_large=allow_large), EXIT_OK
    if args.verb == "hyper":
        report = run_hyper(args.space_file, args.left, args.right, args.param)
        failed = report["theorems"]["status"] == "failed"
        return report, EXIT_CLAIM_FAILED if failed else EXIT_OK
    if args.verb == "scenario":
        params = config.scenario.merged(
            {
                "h_center": args.h_center,
                "h_radius": args.h_radius,
                "a_center": args.a_center,
                "a_radius": args.a_radius,
                "variant": args.variant,
                "e_shape": args.e_shape,
            }
        )
        oracle = config.oracle.model_copy(
            update={key: value for key, value in (("seed", args.seed), ("count", args.count)) if value is not None}
        )
        result = run_scenario(args.name, params, config.model_copy(update={"oracle": oracle}))
        if not result.setup_valid:
            return {"scenario": result.render()}, EXIT_INPUT_ERROR
        return {"scenario": result.render()}, EXIT_OK if result.verdict else EXIT_CLAIM_FAILED
    return run_enumerate(args.n, args.brute_force), EXIT_OK


def _emit(report: Report) -> None:
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point for the CLI tool"""
    load_dotenv()
    configure_logging()

    report: Report = {}
    timing = False
    started = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        timing = args.timing
        report["command"] = _command_echo(args)
        config = load_run_config(args.config) if args.config else RunConfig()
        if config.log_level:
            configure_logging(config.log_level)
        result, code = _execute(args, config)
        report.update(result)
    except SizeLimitExceeded as e:
        console.log(f"[bold red]Resource guard:[/bold red] {e}")
        report["error"] = _error_report(e)
        code = EXIT_RESOURCE_GUARD
    except (NearspaceError, ValueError) as e:
        console.log(f"[bold red]Error:[/bold red] {e}")
        report["error"] = _error_report(e)
        code = EXIT_INPUT_ERROR

    if timing:
        report["wall_time_seconds"] = round(time.perf_counter() - started, 6)
    _emit(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
