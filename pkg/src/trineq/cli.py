"""Command-line front end: verification campaigns, figure data, state evaluation.

Artifacts are byte-stable for a fixed (command, seed): floats are formatted
with 17 significant digits, JSON keys are emitted in a fixed order, and all
files use LF line endings.  Timing information goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from . import campaigns, coherence, concurrence, states
from .errors import TrineqError
from .report import InequalityReport

DEFAULT_SEED = 1
SEED_ENV_VAR = "TRINEQ_SEED"

FIGURE_HEADER = [
    "P",
    "C_rho",
    "sample_id",
    "theta",
    "gamma",
    "phi",
    "sum_C",
    "diff_C",
    "violates_upper",
    "violates_lower",
]
SUMMARY_HEADER = ["P", "C_rho", "min_sum", "max_sum", "min_diff", "max_diff", "coa_estimate"]

VERIFY_COMMANDS = (
    "verify-lemma1",
    "verify-triangle-concurrence",
    "verify-triangle-l1",
    "verify-roof-sandwich",
)


@dataclass
class RunConfig:
    """Parsed command-line invocation."""

    command: str
    d1: int = 2
    d2: int = 2
    dim: int = 2
    samples: int = 1000
    remixes: int = 100
    grid_points: int = 101
    seed: int = DEFAULT_SEED
    output: str | None = None
    fmt: str = "json"
    state_path: str | None = None
    basis_path: str | None = None

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.command in ("figure-1", "figure-2") and self.grid_points < 3:
            raise ValueError("grid must be >= 3 for figure commands")


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _write_text(path: str | None, text: str):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv_text(header: list[str], rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _summary_path(path: str) -> str:
    stem, ext = os.path.splitext(path)
    if ext:
        return f"{stem}.summary{ext}"
    return f"{path}.summary"


def _run_verify(config: RunConfig) -> int:
    t0 = time.perf_counter()
    extra = None
    if config.command == "verify-lemma1":
        result = campaigns.lemma1_campaign(config.samples, config.seed)
    elif config.command == "verify-triangle-concurrence":
        result = campaigns.triangle_concurrence_campaign(
            config.d1, config.d2, config.samples, config.seed, config.remixes
        )
        if (config.d1, config.d2) == (2, 2):
            # the 2x2 run also certifies the tau route against the Wootters route
            extra = campaigns.wootters_equivalence_campaign(
                min(config.samples, 10000), config.seed
            )
    elif config.command == "verify-triangle-l1":
        result = campaigns.triangle_l1_campaign(config.dim, config.samples, config.seed)
    elif config.command == "verify-roof-sandwich":
        result = campaigns.roof_l1_campaign(
            config.dim, config.samples, config.seed, config.remixes
        )
    else:  # pragma: no cover - guarded by the parser
        raise ValueError(config.command)
    elapsed = time.perf_counter() - t0

    payload = result.as_dict()
    payload["seed"] = config.seed
    total_violations = result.violations
    if extra is not None:
        payload["equivalence"] = extra.as_dict()
        total_violations += extra.violations
    if config.fmt == "json":
        text = _json_text(payload)
    else:
        worst_keys = sorted(result.worst)
        header = ["campaign", "samples", "violations", "seed"] + worst_keys
        rows = [
            [result.name, result.samples, result.violations, config.seed]
            + [result.worst[k] for k in worst_keys]
        ]
        if extra is not None:
            header += sorted(extra.worst)
            rows[0] += [""] * len(extra.worst)
            rows.append(
                [extra.name, extra.samples, extra.violations, config.seed]
                + [""] * len(worst_keys)
                + [extra.worst[k] for k in sorted(extra.worst)]
            )
        text = _csv_text(header, rows)
    _write_text(config.output, text)
    print(f"violations: {total_violations}/{result.samples}")
    print(f"elapsed: {elapsed:.2f}s", file=sys.stderr)
    if total_violations:
        if config.output is not None:
            # the artifact already holds the details; echo them for visibility
            sys.stdout.write(_json_text(payload))
        return 1
    return 0


def _run_figure(config: RunConfig) -> int:
    data = campaigns.figure_sweep(config.grid_points, config.samples, config.seed)
    rows = [
        (
            r.p,
            r.c_rho,
            r.sample_id,
            r.theta,
            r.gamma,
            r.phi,
            r.sum_c,
            r.diff_c,
            r.violates_upper,
            r.violates_lower,
        )
        for r in data.rows
    ]
    summary_rows = [
        (s.p, s.c_rho, s.min_sum, s.max_sum, s.min_diff, s.max_diff, s.coa_estimate)
        for s in data.summaries
    ]
    if config.fmt == "csv":
        _write_text(config.output, _csv_text(FIGURE_HEADER, rows))
        _write_text(_summary_path(config.output), _csv_text(SUMMARY_HEADER, summary_rows))
    else:
        payload = {
            "rows": [dict(zip(FIGURE_HEADER, row)) for row in rows],
            "summaries": [dict(zip(SUMMARY_HEADER, row)) for row in summary_rows],
            "violations": data.violations,
            "seed": config.seed,
        }
        _write_text(config.output, _json_text(payload))
    print(f"figure rows: {len(rows)}, inequality violations: {data.violations}")
    if data.violations:
        print("warning: decomposition points crossed the concurrence curve", file=sys.stderr)
    return 0


def _report_payload(report: InequalityReport) -> dict:
    return report.as_dict()


def _run_eval(config: RunConfig) -> int:
    state = states.load_state_file(config.state_path)
    basis = None
    if config.basis_path is not None:
        basis = coherence.load_basis_change(config.basis_path)

    def measured_l1(obj) -> float:
        if basis is None:
            return coherence.l1_coherence(obj)
        return coherence.l1_coherence(coherence.apply_basis_change(obj, basis))

    if isinstance(state, states.PureState):
        payload = {
            "type": "pure",
            "shape": [state.shape.d1, state.shape.d2],
            "weight": state.weight,
            "concurrence": concurrence.pure_concurrence(state),
            "l1_coherence": measured_l1(state),
        }
    else:
        rho = states.density_from_ensemble(state)
        payload = {
            "type": "ensemble",
            "shape": [state.shape.d1, state.shape.d2],
            "p1": state.p1,
            "l1_coherence": measured_l1(rho),
            "triangle": _report_payload(concurrence.triangle_check_concurrence(state)),
        }
        if state.shape.is_two_qubit:
            payload["concurrence"] = concurrence.rank2_concurrence_2qubit(state)
        else:
            payload["concurrence_lower_bound"] = concurrence.highdim_lower_bound(state)
    _write_text(config.output, _json_text(payload))
    return 0


def run(config: RunConfig) -> int:
    """Execute a parsed command; returns the process exit code."""
    if config.command in VERIFY_COMMANDS:
        return _run_verify(config)
    if config.command in ("figure-1", "figure-2"):
        return _run_figure(config)
    if config.command == "eval":
        return _run_eval(config)
    raise ValueError(f"unknown command {config.command!r}")


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError as exc:
        raise SystemExit(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trineq",
        description=(
            "Verify triangle inequalities obeyed by l1 coherence and entanglement "
            "concurrence on rank-2 mixtures, reproduce the example figure data, "
            "and evaluate measures on state files."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, default_samples):
        p.add_argument("--samples", type=int, default=default_samples, help="Monte Carlo sample count")
        p.add_argument("--seed", type=int, default=None, help=f"RNG seed (default {DEFAULT_SEED}, or ${SEED_ENV_VAR})")
        p.add_argument("--output", default=None, help="artifact path (stdout when omitted)")
        p.add_argument("--format", choices=("json", "csv"), default="json", dest="fmt")

    p = sub.add_parser("verify-lemma1", help="2x2 complex-symmetric diagonal-gap bound campaign")
    add_common(p, 100000)

    p = sub.add_parser(
        "verify-triangle-concurrence",
        help="concurrence triangle inequality on random rank-2 ensembles",
    )
    add_common(p, 100000)
    p.add_argument("--d1", type=int, default=2, help="first subsystem dimension")
    p.add_argument("--d2", type=int, default=2, help="second subsystem dimension")
    p.add_argument(
        "--remixes",
        type=int,
        default=100,
        help="decomposition samples per ensemble for the upper link (d1*d2 > 4)",
    )

    p = sub.add_parser("verify-triangle-l1", help="l1 coherence triangle inequality on random pairs")
    add_common(p, 100000)
    p.add_argument("--dim", type=int, default=2, help="single-system dimension")

    p = sub.add_parser("verify-roof-sandwich", help="convex-roof l1 sandwich on random rank-2 mixtures")
    add_common(p, 100000)
    p.add_argument("--dim", type=int, default=2, help="single-system dimension")
    p.add_argument("--remixes", type=int, default=16, help="decomposition samples per mixture")

    for name in ("figure-1", "figure-2"):
        p = sub.add_parser(
            name,
            help="emit the example P-sweep scatter data (both figures share one schema)",
        )
        p.add_argument("--grid", type=int, default=101, dest="grid_points", help="P grid points on [0.01, 0.99]")
        p.add_argument("--samples", type=int, default=200, help="decompositions per grid point")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--output", required=True, help="CSV/JSON path; a .summary sibling is written for CSV")
        p.add_argument("--format", choices=("csv", "json"), default="csv", dest="fmt")

    p = sub.add_parser("eval", help="evaluate measures on a JSON state file")
    p.add_argument("--state", required=True, dest="state_path", help="state file (pure or ensemble)")
    p.add_argument("--basis", default=None, dest="basis_path", help="optional unitary basis-change JSON file")
    p.add_argument("--output", default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    seed = getattr(ns, "seed", None)
    if seed is None:
        seed = _default_seed()
    config = RunConfig(
        command=ns.command,
        d1=getattr(ns, "d1", 2),
        d2=getattr(ns, "d2", 2),
        dim=getattr(ns, "dim", 2),
        samples=getattr(ns, "samples", 1000),
        remixes=getattr(ns, "remixes", 100),
        grid_points=getattr(ns, "grid_points", 101),
        seed=seed,
        output=getattr(ns, "output", None),
        fmt=getattr(ns, "fmt", "json"),
        state_path=getattr(ns, "state_path", None),
        basis_path=getattr(ns, "basis_path", None),
    )
    try:
        return run(config)
    except TrineqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
