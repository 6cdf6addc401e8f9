"""Command-line front end: seeded experiment runs with text/JSON/CSV reports.

Every report embeds the tool version, the command line, the seed and the
backend, and a fixed seed gives byte-identical JSON/CSV output.  Exit
codes: 0 success, 1 invalid or infeasible input, 2 internal failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__, analysis, classical, partial_search, statevector, zalka
from .analysis import InfeasibleEpsilonError
from .statevector import BlockConfig, InvalidInstanceError

_TOOL = "partialsearch"


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else 1
    saved_cap = statevector.DENSE_CAP
    if args.dense_cap is not None:
        statevector.DENSE_CAP = args.dense_cap
    try:
        payload = _dispatch(args)
    except (InvalidInstanceError, InfeasibleEpsilonError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - anything else is an internal failure
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    finally:
        statevector.DENSE_CAP = saved_cap
    meta = {
        "tool": _TOOL,
        "version": __version__,
        "command": " ".join(argv),
        "seed": args.seed,
        "backend": getattr(args, "backend", None),
    }
    text = render_report(payload, args.format, meta)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partial-search",
        description="Run partial quantum search experiments and bound calculators.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", default=None, help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--dense-cap", type=int, default=None, help="override the dense backend size cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", parents=[common], help="run the three-step pipeline")
    p.add_argument("--n", type=int, default=2**16)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--epsilon", type=float, default=None, help="default: optimizer's choice")
    p.add_argument("--backend", choices=("dense", "reduced"), default="reduced")
    p.add_argument("--target", type=int, default=None, help="default: drawn from the seed")
    p.add_argument("--exact-theta", action="store_true", help="use the exact post-step-1 angle")

    p = sub.add_parser("grover", parents=[common], help="run plain amplitude amplification")
    p.add_argument("--n", type=int, default=1024)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--steps", type=int, default=None, help="default: round((pi/4) sqrt(N))")
    p.add_argument("--backend", choices=("dense", "reduced"), default="reduced")
    p.add_argument("--target", type=int, default=None)

    p = sub.add_parser("optimize", parents=[common], help="optimize epsilon for one K")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("table", parents=[common], help="upper/lower coefficient table over K")
    p.add_argument("--k", default="2,3,4,5,8,32", help="comma-separated block counts")

    p = sub.add_parser("classical", parents=[common], help="classical baselines and Monte Carlo")
    p.add_argument("--n", type=int, default=1200)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--trials", type=int, default=100000)

    p = sub.add_parser("bounds", parents=[common], help="closed-form bound coefficients")
    p.add_argument("--k", default="2,3,4,5,8,32", help="comma-separated block counts")
    p.add_argument("--n", type=int, default=2**16, help="database size for the erring-search floor")
    p.add_argument("--err", type=float, default=0.01)
    p.add_argument("--hidden-const", type=float, default=1.0)

    p = sub.add_parser("demo", parents=[common], help="narrative walkthrough data")
    p.add_argument("--which", choices=("twelve-items", "step2-histogram"), default="twelve-items")
    p.add_argument("--n", type=int, default=256)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--target", type=int, default=None)
    return parser


def _dispatch(args: argparse.Namespace) -> dict:
    return {
        "simulate": _cmd_simulate,
        "grover": _cmd_grover,
        "optimize": _cmd_optimize,
        "table": _cmd_table,
        "classical": _cmd_classical,
        "bounds": _cmd_bounds,
        "demo": _cmd_demo,
    }[args.command](args)


def _pick_target(args: argparse.Namespace, n: int) -> int:
    if args.target is not None:
        return args.target
    return int(np.random.default_rng(args.seed).integers(0, n))


def _run_report_payload(report: partial_search.RunReport) -> dict:
    return {
        "n": report.n_addresses,
        "k": report.n_blocks,
        "target": report.target,
        "epsilon": report.epsilon,
        "l1": report.l1,
        "l2": report.l2,
        "queries": report.queries,
        "success_prob": report.success_prob,
        "target_prob": report.target_prob,
        "predicted_block": report.predicted_block,
        "block_probs": list(report.block_probs),
    }


def _cmd_simulate(args: argparse.Namespace) -> dict:
    cfg = BlockConfig(args.n, args.k, _pick_target(args, args.n))
    report = partial_search.run_partial_search(
        cfg, epsilon=args.epsilon, backend=args.backend, exact_theta=args.exact_theta
    )
    payload = _run_report_payload(report)
    payload["rows"] = _block_rows(payload)
    return payload


def _cmd_grover(args: argparse.Namespace) -> dict:
    steps = args.steps if args.steps is not None else round((math.pi / 4.0) * math.sqrt(args.n))
    cfg = BlockConfig(args.n, args.k, _pick_target(args, args.n))
    report = partial_search.run_full_grover(cfg, steps, backend=args.backend)
    payload = _run_report_payload(report)
    payload["rows"] = _block_rows(payload)
    return payload


def _block_rows(payload: dict) -> list[dict]:
    keys = ("n", "k", "target", "queries", "success_prob", "target_prob")
    return [
        {**{key: payload[key] for key in keys}, "block": i, "block_prob": p}
        for i, p in enumerate(payload["block_probs"])
    ]


def _cmd_optimize(args: argparse.Namespace) -> dict:
    eps, coeff = analysis.optimize_epsilon(args.k, tol=args.tol)
    row = {
        "K": args.k,
        "epsilon_star": eps,
        "upper_coeff": coeff,
        "lower_coeff": analysis.lower_bound_coefficient(args.k),
        "naive_coeff": analysis.naive_quantum_coefficient(args.k),
    }
    return {**row, "rows": [row]}


def _cmd_table(args: argparse.Namespace) -> dict:
    ks = _parse_k_list(args.k)
    rows = []
    for row in analysis.build_table(ks):
        rows.append(
            {
                "K": row.k,
                "epsilon_star": row.epsilon_star,
                "upper_coeff": row.upper_coeff,
                "lower_coeff": row.lower_coeff,
                "naive_coeff": analysis.naive_quantum_coefficient(row.k),
            }
        )
    return {"rows": rows}


def _cmd_classical(args: argparse.Namespace) -> dict:
    report = classical.simulate_randomized(args.n, args.k, args.trials, args.seed)
    row = {
        "n": report.n,
        "k": report.k,
        "trials": report.trials,
        "expected_randomized": report.expected_randomized,
        "exact_expected": classical.exact_expected_probes(args.n, args.k),
        "deterministic": report.deterministic,
        "sample_mean": report.sample_mean,
        "sample_std_err": report.sample_std_err,
    }
    return {**row, "rows": [row]}


def _cmd_bounds(args: argparse.Namespace) -> dict:
    rows = [
        {
            "K": k,
            "lower_coeff": analysis.lower_bound_coefficient(k),
            "naive_coeff": analysis.naive_quantum_coefficient(k),
            "large_k_coeff": analysis.large_k_guarantee(k),
        }
        for k in _parse_k_list(args.k)
    ]
    floor = zalka.zalka_error_bound(args.n, args.err, args.hidden_const)
    return {
        "rows": rows,
        "erring_search": {
            "n": args.n,
            "err": args.err,
            "hidden_const": args.hidden_const,
            "query_floor": floor,
        },
    }


def _cmd_demo(args: argparse.Namespace) -> dict:
    if args.which == "twelve-items":
        return _demo_twelve_items()
    return _demo_step2_histogram(args)


def _demo_twelve_items() -> dict:
    """Walk the two-query, twelve-item search and assert its exact endpoint."""
    cfg = BlockConfig(12, 3, 5)
    stages = partial_search.script_stages(cfg, partial_search.TWELVE_ITEM_SCRIPT, backend="dense")
    labels = ["start"] + [op.value for op in partial_search.TWELVE_ITEM_SCRIPT]
    rows = []
    for stage, (label, state) in enumerate(zip(labels, stages)):
        for slot, amp in enumerate(state.amplitudes.real):
            rows.append(
                {
                    "stage": f"{stage}:{label}",
                    "block": cfg.block_of(slot),
                    "slot": slot % cfg.block_size,
                    "amplitude": float(amp),
                }
            )
    final = stages[-1]
    root12 = math.sqrt(12.0)
    expected = np.zeros(12)
    expected[4:8] = 1.0 / root12
    expected[5] = 3.0 / root12
    assert np.max(np.abs(final.amplitudes - expected)) < 1e-12, "twelve-item endpoint mismatch"
    assert final.queries == 2, "twelve-item demo must use exactly 2 queries"
    block_probs = statevector.block_probabilities(final, cfg)
    return {
        "queries": final.queries,
        "success_prob": float(block_probs[cfg.target_block]),
        "target_prob": float(final.address_probabilities()[cfg.target]),
        "rows": rows,
    }


def _demo_step2_histogram(args: argparse.Namespace) -> dict:
    """Amplitudes just before and just after the blockwise phase."""
    cfg = BlockConfig(args.n, args.k, _pick_target(args, args.n))
    epsilon = args.epsilon
    if epsilon is None:
        epsilon, _ = analysis.optimize_epsilon(args.k)
    l1, l2, _ = partial_search.iteration_counts(args.n, args.k, epsilon)
    state = partial_search.apply_script(
        statevector.uniform_state(args.n), partial_search.grover_script(l1), cfg
    )
    rows = _amplitude_rows("after_step1", state, cfg)
    for _ in range(l2):
        state = statevector.block_diffusion(statevector.invert_target(state, cfg), cfg)
    rows += _amplitude_rows("after_step2", state, cfg)
    return {"n": args.n, "k": args.k, "epsilon": epsilon, "l1": l1, "l2": l2, "rows": rows}


def _amplitude_rows(stage: str, state: statevector.DenseState, cfg: BlockConfig) -> list[dict]:
    return [
        {
            "stage": stage,
            "block": cfg.block_of(slot),
            "slot": slot % cfg.block_size,
            "amplitude": float(amp),
        }
        for slot, amp in enumerate(state.amplitudes.real)
    ]


def _parse_k_list(raw: str) -> list[int]:
    try:
        ks = [int(part) for part in str(raw).split(",") if part.strip()]
    except ValueError as exc:
        raise InvalidInstanceError(f"bad K list {raw!r}: {exc}") from None
    if not ks:
        raise InvalidInstanceError("empty K list")
    return ks


# --- rendering ---------------------------------------------------------------


def render_report(payload: dict, fmt: str, meta: dict) -> str:
    if fmt == "json":
        return _render_json(payload, meta)
    if fmt == "csv":
        return _render_csv(payload, meta)
    return _render_text(payload, meta)


def _round_floats(value):
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, dict):
        return {key: _round_floats(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round_floats(item) for item in value]
    return value


def _render_json(payload: dict, meta: dict) -> str:
    doc = _round_floats({**meta, **payload})
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _render_csv(payload: dict, meta: dict) -> str:
    buf = io.StringIO()
    for key in ("tool", "version", "command", "seed", "backend"):
        buf.write(f"# {key}={_format_cell(meta[key])}\n")
    for key, value in payload.items():
        if key == "rows" or isinstance(value, (list, dict)):
            continue
        buf.write(f"# {key}={_format_cell(_round_floats(value))}\n")
    rows = payload.get("rows", [])
    writer = csv.writer(buf, lineterminator="\n")
    if rows:
        header = list(rows[0].keys())
        writer.writerow(header)
        for row in rows:
            writer.writerow([_format_cell(row.get(key)) for key in header])
    return buf.getvalue()


def _render_text(payload: dict, meta: dict) -> str:
    lines = [f"{_TOOL} {meta['version']}  (command: {meta['command']}; seed: {meta['seed']})"]
    for key, value in payload.items():
        if key == "rows":
            continue
        if isinstance(value, dict):
            inner = ", ".join(f"{k}={_format_cell(_round_floats(v))}" for k, v in value.items())
            lines.append(f"{key:>18}: {inner}")
        elif isinstance(value, list):
            lines.append(f"{key:>18}: {', '.join(_format_cell(_round_floats(v)) for v in value)}")
        else:
            lines.append(f"{key:>18}: {_format_cell(_round_floats(value))}")
    rows = payload.get("rows", [])
    if rows:
        header = list(rows[0].keys())
        table = [header] + [[_format_cell(_round_floats(row.get(k))) for k in header] for row in rows]
        widths = [max(len(line[i]) for line in table) for i in range(len(header))]
        lines.append("")
        for line in table:
            lines.append("  ".join(cell.rjust(width) for cell, width in zip(line, widths)))
    return "\n".join(lines) + "\n"
