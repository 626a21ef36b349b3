"""Command line entry point: ``zolo solve``, ``zolo sweep`` and ``zolo oracle``.

Exit codes: 0 success, 2 bad configuration, 3 numerical failure (the name of
the underlying error is printed on stderr).
"""
import argparse
import json
import sys

import numpy as np

from .errors import ConfigError, MethodFailure, NumericError, ZoloError
from .harness import (ExperimentConfig, oracle_report, run_experiment, sweep_orders,
                      write_sweep_csv)

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC = 0, 2, 3


def parse_orders(text):
    """'2:2:26' (start:step:stop, inclusive) or '2,4,8'."""
    try:
        if ":" in text:
            parts = [int(t) for t in text.split(":")]
            if len(parts) == 2:
                parts = [parts[0], 1, parts[1]]
            start, step, stop = parts
            if step < 1:
                raise ValueError
            return list(range(start, stop + 1, step))
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad order list {text!r}") from None


def _add_method_options(p):
    p.add_argument("--example", required=True)
    p.add_argument("--n", type=int, default=512, help="samples per set")
    p.add_argument("--lawson", type=int, default=200, help="Lawson iterations")
    p.add_argument("--damping", type=float, default=0.95)
    p.add_argument("--sign", action=argparse.BooleanOptionalAction, default=True,
                   help="sign-aware AAA weights (default on)")


def build_parser():
    ap = argparse.ArgumentParser(prog="zolo", description="Zolotarev sign/ratio problems")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve one instance and write a JSON report")
    _add_method_options(s)
    s.add_argument("--method", choices=["loewner", "aaa", "aaa-lawson"], default="loewner")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--order", type=int)
    g.add_argument("--tol", type=float)
    s.add_argument("--out", required=True)
    s.add_argument("--grid", type=int, default=256)

    w = sub.add_parser("sweep", help="sweep orders and methods, write CSV rows")
    _add_method_options(w)
    w.add_argument("--orders", type=parse_orders, default=parse_orders("2:2:26"))
    w.add_argument("--methods", default="loewner,aaa,aaa-lawson")
    w.add_argument("--out", required=True)

    o = sub.add_parser("oracle", help="closed-form optimum for two circles")
    o.add_argument("--rho", type=float, default=0.5)
    o.add_argument("--alpha", type=float, default=1.0)
    o.add_argument("--order", type=int, required=True)
    o.add_argument("--out", required=True)
    return ap


def _run(args):
    if args.command == "solve":
        cfg = ExperimentConfig(args.example, n_per_set=args.n, method=args.method,
                               order=args.order, tol=args.tol,
                               lawson_iterations=args.lawson, damping=args.damping,
                               sign_mode=args.sign, output_path=args.out,
                               grid_resolution=args.grid)
        rep = run_experiment(cfg)
        print(f"{args.example} {cfg.method}: order {rep.order}, sigma {rep.sigma:.4e}, "
              f"tau {rep.tau:.4e} -> {args.out}")
    elif args.command == "sweep":
        methods = tuple(m for m in args.methods.split(",") if m.strip())
        if not methods:
            raise ConfigError("--methods is empty")
        cfg = ExperimentConfig(args.example, n_per_set=args.n, method=methods[0],
                               lawson_iterations=args.lawson, damping=args.damping,
                               sign_mode=args.sign, output_path=args.out, methods=methods)
        rep = sweep_orders(cfg, args.orders)
        write_sweep_csv(rep, args.out)
        failed = sum(1 for r in rep.sweep_rows if r["error"])
        print(f"{len(rep.sweep_rows)} rows ({failed} failed) -> {args.out}")
    else:
        out = oracle_report(args.rho, args.alpha, args.order)
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(json.dumps(out, indent=2, allow_nan=False) + "\n")
        print(f"sigma_{args.order} = {out['sigma']:.6e} -> {args.out}")


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        _run(args)
    except ConfigError as exc:
        print(f"zolo: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"zolo: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NumericError, ZoloError, np.linalg.LinAlgError) as exc:
        inner = exc.inner if isinstance(exc, MethodFailure) else exc
        print(f"zolo: {type(inner).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
