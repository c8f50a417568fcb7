"""Command-line front end.

    hfcircle nodes     --alpha A --beta B --n N            [--out F]
    hfcircle verify    --alpha A --beta B --n N[,N...]     [--function F] [--seed S] [--out F]
    hfcircle lebesgue  --alpha A --beta B --n N,N,...      [--samples M] [--out F] [--plot]
    hfcircle converge  --alpha A --beta B --n N,N,...      --function F [--samples M] [--out F] [--plot]
    hfcircle coeffs    --alpha A --beta B --n N            [--out F]

Exit status: 0 success, 1 numerical failure, 2 usage error, 3 a residual in
``verify`` above tolerance.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import experiments as ex
from .basis import build_basis_data
from .errors import DegenerateSystemError, NumericalFailure, ParameterDomainError
from .hermite import coeffs_closed_form, coeffs_oracle, coeffs_rederived, interpolate, verify_hermite_conditions
from .jacobi import JacobiParams
from .nodal import build_nodes

EXIT_OK, EXIT_NUMERIC, EXIT_USAGE, EXIT_TOLERANCE = 0, 1, 2, 3
SUBCOMMANDS = ("nodes", "verify", "lebesgue", "converge", "coeffs")


@dataclass
class RunConfig:
    subcommand: str
    alpha: float
    beta: float
    n_list: list[int]
    function_name: str | None
    samples: int
    output_path: str | None
    emit_plot: bool
    seed: int = 0
    value_tol: float = 1e-9
    deriv_tol: float = 1e-6
    timings: bool = False


def _fmt(x) -> str:
    return format(float(x), ".17g")


def _n_list(text: str) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--n expects integers, got {text!r}")
    if not vals or any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError("--n values must be integers >= 1")
    return vals


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hfcircle", description="Fifth-order Hermite-Fejer interpolation on the unit circle")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--beta", type=float, required=True)
        p.add_argument("--n", type=_n_list, required=True, help="degree, or comma-separated list")
        p.add_argument("--function", choices=sorted(ex.TEST_FUNCTIONS), default=None)
        p.add_argument("--samples", type=int, default=512)
        p.add_argument("--out", default=None, help="CSV path (stdout if omitted)")
        p.add_argument("--plot", action="store_true", help="also write an SVG chart")
        if name == "verify":
            p.add_argument("--seed", type=int, default=0, help="seed for random nodal values")
            p.add_argument("--value-tol", type=float, default=1e-9)
            p.add_argument("--deriv-tol", type=float, default=1e-6)
        if name in ("lebesgue", "converge"):
            p.add_argument("--timings", action="store_true", help="fill the runtime_ms column")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        subcommand=args.subcommand,
        alpha=args.alpha,
        beta=args.beta,
        n_list=args.n,
        function_name=args.function,
        samples=args.samples,
        output_path=args.out,
        emit_plot=args.plot,
        seed=getattr(args, "seed", 0),
        value_tol=getattr(args, "value_tol", 1e-9),
        deriv_tol=getattr(args, "deriv_tol", 1e-6),
        timings=getattr(args, "timings", False),
    )


def _validate(cfg: RunConfig) -> str | None:
    if not (cfg.alpha > -1 and cfg.beta > -1):
        return "--alpha and --beta must be > -1"
    if cfg.samples < ex.MIN_SAMPLES:
        return f"--samples must be >= {ex.MIN_SAMPLES}"
    if cfg.subcommand in ("nodes", "coeffs") and len(cfg.n_list) != 1:
        return f"{cfg.subcommand} takes a single --n"
    if cfg.subcommand == "converge" and cfg.function_name is None:
        return "converge needs --function"
    if cfg.emit_plot and cfg.subcommand not in ("lebesgue", "converge"):
        return "--plot applies to lebesgue and converge only"
    return None


def _emit(cfg: RunConfig, text: str, out) -> None:
    if cfg.output_path:
        Path(cfg.output_path).write_text(text, encoding="ascii")
    else:
        out.write(text)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _plot_path(cfg: RunConfig) -> Path:
    if cfg.output_path:
        return Path(cfg.output_path).with_suffix(".svg")
    return Path(f"{cfg.subcommand}.svg")


def _run_nodes(cfg, out, log):
    sys_ = build_nodes(JacobiParams(cfg.alpha, cfg.beta, cfg.n_list[0]))
    rows = [[k, _fmt(z.real), _fmt(z.imag), _fmt(z.real)] for k, z in enumerate(sys_.nodes)]
    _emit(cfg, _csv_text(["k", "re", "im", "x"], rows), out)
    return EXIT_OK


def _run_verify(cfg, out, log):
    rows = []
    worst_v = worst_d = 0.0
    for n in cfg.n_list:
        sys_ = build_nodes(JacobiParams(cfg.alpha, cfg.beta, n))
        if cfg.function_name:
            vals = ex.TEST_FUNCTIONS[cfg.function_name](np.asarray(sys_.nodes))
        else:
            rng = np.random.default_rng(cfg.seed)
            vals = rng.uniform(-1, 1, sys_.size) + 1j * rng.uniform(-1, 1, sys_.size)
        rep = verify_hermite_conditions(interpolate(sys_, vals))
        worst_v = max(worst_v, rep.max_value_residual)
        worst_d = max(worst_d, rep.max_scaled_deriv_residual)
        log.write(
            f"n={n} max value residual {rep.max_value_residual:.3e}, "
            f"max scaled derivative residual {rep.max_scaled_deriv_residual:.3e}\n"
        )
        for k, z in enumerate(sys_.nodes):
            rows.append([n, k, _fmt(z.real), _fmt(z.imag), _fmt(rep.value_residuals[k])]
                        + [_fmt(v) for v in rep.deriv_residuals[k]])
    header = ["n", "k", "re", "im", "value_residual", "d1_scaled", "d2_scaled", "d3_scaled", "d4_scaled"]
    _emit(cfg, _csv_text(header, rows), out)
    ok = worst_v <= cfg.value_tol and worst_d <= cfg.deriv_tol
    log.write(f"{'PASS' if ok else 'FAIL'}: value {worst_v:.3e} (tol {cfg.value_tol:g}), "
              f"scaled derivative {worst_d:.3e} (tol {cfg.deriv_tol:g})\n")
    return EXIT_OK if ok else EXIT_TOLERANCE


def _write_plot(cfg, series, ylabel):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    matplotlib.rcParams["svg.hashsalt"] = "hfcircle"
    fig, ax = plt.subplots(figsize=(6, 4))
    positive = True
    for label, (xs, ys) in series.items():
        ax.plot(xs, ys, marker="o", label=label)
        positive = positive and all(y > 0 for y in ys)
    ax.set_xscale("log", base=2)
    if positive:
        ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel(ylabel)
    ax.set_title(f"alpha={cfg.alpha:g}, beta={cfg.beta:g}")
    ax.legend()
    fig.tight_layout()
    path = _plot_path(cfg)
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return path


def _run_lebesgue(cfg, out, log):
    recs = ex.lebesgue_study(cfg.alpha, cfg.beta, cfg.n_list, cfg.samples)
    _emit(cfg, ex.records_to_csv(recs, cfg.timings), out)
    if cfg.emit_plot:
        xs = [r.n for r in recs]
        path = _write_plot(cfg, {"Lebesgue constant": (xs, [r.value for r in recs])}, "value")
        log.write(f"wrote {path}\n")
    return EXIT_OK


def _run_converge(cfg, out, log):
    recs = ex.convergence_study(cfg.function_name, cfg.alpha, cfg.beta, cfg.n_list, cfg.samples)
    _emit(cfg, ex.records_to_csv(recs, cfg.timings), out)
    if cfg.emit_plot:
        err = [r for r in recs if r.quantity_kind == "sup_error"]
        om = [r for r in recs if r.quantity_kind == "omega"]
        series = {
            "sup error": ([r.n for r in err], [r.value for r in err]),
            "omega(f,1/n) log n": ([r.n for r in om], [r.value * np.log(max(r.n, 2)) for r in om]),
        }
        path = _write_plot(cfg, series, "value")
        log.write(f"wrote {path}\n")
    return EXIT_OK


def _run_coeffs(cfg, out, log):
    sys_ = build_nodes(JacobiParams(cfg.alpha, cfg.beta, cfg.n_list[0]))
    basis = build_basis_data(sys_)
    rows = []
    for k in range(sys_.size):
        printed = coeffs_closed_form(basis[k]).c
        rederived = coeffs_rederived(basis[k]).c
        oracle = coeffs_oracle(sys_, basis, k).c
        for p in range(4):
            ref = abs(oracle[p]) or 1.0
            rows.append([
                k, p + 1,
                _fmt(oracle[p].real), _fmt(oracle[p].imag),
                _fmt(printed[p].real), _fmt(printed[p].imag),
                _fmt(rederived[p].real), _fmt(rederived[p].imag),
                _fmt(abs(printed[p] - oracle[p]) / ref),
                _fmt(abs(rederived[p] - oracle[p]) / ref),
            ])
    header = ["k", "p", "oracle_re", "oracle_im", "printed_re", "printed_im",
              "rederived_re", "rederived_im", "printed_rel_err", "rederived_rel_err"]
    _emit(cfg, _csv_text(header, rows), out)
    return EXIT_OK


_RUNNERS = {
    "nodes": _run_nodes,
    "verify": _run_verify,
    "lebesgue": _run_lebesgue,
    "converge": _run_converge,
    "coeffs": _run_coeffs,
}


def run(cfg: RunConfig, out=None, log=None) -> int:
    out = sys.stdout if out is None else out
    log = sys.stderr if log is None else log
    try:
        return _RUNNERS[cfg.subcommand](cfg, out, log)
    except (NumericalFailure, DegenerateSystemError, FloatingPointError) as exc:
        log.write(f"numerical failure: {exc}\n")
        return EXIT_NUMERIC


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    cfg = config_from_args(args)
    problem = _validate(cfg)
    if problem:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"hfcircle: error: {problem}\n")
        return EXIT_USAGE
    try:
        return run(cfg)
    except ParameterDomainError as exc:
        sys.stderr.write(f"hfcircle: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
