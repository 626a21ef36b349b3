"""Experiment runner: single solves, order sweeps, coefficient tables, contour
grids, and their JSON/CSV serializations."""
from dataclasses import asdict, dataclass, field
import io
import json
import math
import os

import numpy as np

from .domains import CATALOG, make_example
from .errors import ConfigError, IllConditioned, MethodFailure, NumericError, ZoloError
from .rational import poles, to_polynomial_ratio, to_zero_pole_gain, zeros
from .zolotarev import (METHODS, SolvePolicy, measure_log10_sigma, optimal_two_circles,
                        solve_z4)

GRID_CLAMP = (-30.0, 5.0)
GRID_HEADER = "re,im,log10_abs_h3"
TIMING_KEYS = ("elapsed_seconds",)


@dataclass(frozen=True)
class ExperimentConfig:
    example_name: str
    n_per_set: int = 512
    method: str = "loewner"
    order: int = None
    tol: float = None
    lawson_iterations: int = 200
    damping: float = 0.95
    sign_mode: bool = True
    output_path: str = None
    grid_resolution: int = 256
    methods: tuple = ()       # sweeps only; empty means (method,)

    def __post_init__(self):
        if self.example_name not in CATALOG:
            raise ConfigError(f"unknown example {self.example_name!r}")
        object.__setattr__(self, "method", self.method.replace("-", "_"))
        object.__setattr__(self, "methods", tuple(m.replace("-", "_") for m in self.methods))
        for m in (self.method,) + self.methods:
            if m not in METHODS:
                raise ConfigError(f"unknown method {m!r}; choose from {METHODS}")
        if self.grid_resolution < 16:
            raise ConfigError("grid_resolution must be >= 16")
        if self.n_per_set < 8:
            raise ConfigError("n_per_set must be >= 8")
        if self.output_path is not None:
            parent = os.path.dirname(os.path.abspath(self.output_path))
            if not os.path.isdir(parent) or not os.access(parent, os.W_OK):
                raise ConfigError(f"cannot write to {self.output_path}")
        self.policy()   # validates order/tol/damping

    def policy(self, order=None):
        if order is not None:
            return SolvePolicy(order=order, lawson_iterations=self.lawson_iterations,
                               damping=self.damping, sign_mode=self.sign_mode)
        return SolvePolicy(order=self.order, tol=self.tol,
                           lawson_iterations=self.lawson_iterations,
                           damping=self.damping, sign_mode=self.sign_mode)


@dataclass
class ExperimentReport:
    config: dict
    sigma: float = None
    tau: float = None
    p: float = None
    order: int = None
    degree: list = None
    elapsed_seconds: float = None
    log10_sigma: float = None
    sigma_measured: float = None
    numerator: list = None
    denominator: list = None
    coefficient_error: str = None
    poles_h3: list = None
    zeros_h3: list = None
    poles_h4: list = None
    zeros_h4: list = None
    grid_csv_path: str = None
    sweep_rows: list = field(default_factory=list)
    # not serialized
    grid_csv: str = field(default=None, repr=False)

    def to_dict(self, timing=True):
        d = asdict(self)
        d.pop("grid_csv")
        if not self.sweep_rows:
            d.pop("sweep_rows")
        if not timing:
            d = _strip_timing(d)
        return _jsonable(d)

    def to_json(self, timing=True):
        return json.dumps(self.to_dict(timing), indent=2, allow_nan=False) + "\n"


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items() if k not in TIMING_KEYS}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def _jsonable(obj):
    """Plain floats/lists; NaN and infinities become null."""
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj) if math.isfinite(obj) else None
    return obj


def _pairs(values):
    return [[float(v.real), float(v.imag)] for v in np.asarray(values, dtype=complex).ravel()]


def coefficient_table(h4):
    """(numerator, denominator) as [[re, im], ...], descending degree, monic denominator.

    The numerator is padded to the denominator length so rows line up by monomial.
    """
    P = to_polynomial_ratio(h4)
    return _pairs(P.padded_numerator()), _pairs(P.denominator)


def _log_abs_on(h, z):
    try:
        zpk = to_zero_pole_gain(h)
        out = zpk.log_abs(z)
        if np.all(np.isfinite(out) | np.isneginf(out)):
            return out
    except (ZoloError, np.linalg.LinAlgError, ValueError):
        pass
    with np.errstate(all="ignore"):
        return np.log10(np.abs(np.asarray(h(z))))


def export_contour_grid(h3, bounding_box, resolution):
    """CSV of log10|h3| on a uniform resolution x resolution grid (re varies fastest)."""
    if resolution < 16:
        raise ConfigError("resolution must be >= 16")
    x0, x1, y0, y1 = bounding_box
    x = np.linspace(x0, x1, resolution)
    y = np.linspace(y0, y1, resolution)
    Z = (x[None, :] + 1j * y[:, None]).ravel()
    vals = _log_abs_on(h3, Z)
    vals = np.where(np.isnan(vals), GRID_CLAMP[1], vals)
    vals = np.clip(vals, *GRID_CLAMP)
    buf = io.StringIO(newline="")
    buf.write(GRID_HEADER + "\n")
    for z, v in zip(Z, vals):
        buf.write(f"{float(z.real)!r},{float(z.imag)!r},{float(v)!r}\n")
    return buf.getvalue()


def _grid_path(output_path):
    root, _ = os.path.splitext(output_path)
    return root + ".grid.csv"


def _safe(fn, *args):
    try:
        return _pairs(fn(*args))
    except (ZoloError, np.linalg.LinAlgError, ValueError):
        return None


def run_experiment(cfg):
    """make_example -> solve_z4 -> z4_to_z3 -> measurements, coefficients,
    poles/zeros and contour grid; writes JSON (and the grid CSV) if
    cfg.output_path is set."""
    inst = make_example(cfg.example_name, cfg.n_per_set)
    sol = solve_z4(inst, cfg.method, cfg.policy())

    rep = ExperimentReport(config=asdict(cfg))
    rep.sigma, rep.tau, rep.p = sol.sigma, sol.tau, sol.p
    rep.order, rep.degree = sol.order, list(sol.degree)
    rep.elapsed_seconds = sol.elapsed_seconds
    rep.log10_sigma = float(np.log10(sol.sigma))
    try:
        rep.sigma_measured = 10.0 ** measure_log10_sigma(sol.h3, inst)
    except (ZoloError, np.linalg.LinAlgError):
        rep.sigma_measured = None
    try:
        rep.numerator, rep.denominator = coefficient_table(sol.h4)
    except (IllConditioned, np.linalg.LinAlgError) as exc:
        rep.coefficient_error = f"{type(exc).__name__}: {exc}"
    rep.poles_h4 = _safe(poles, sol.h4)
    rep.zeros_h4 = _safe(zeros, sol.h4)
    rep.poles_h3 = _safe(poles, sol.h3)
    rep.zeros_h3 = _safe(zeros, sol.h3)
    rep.grid_csv = export_contour_grid(sol.h3, inst.bounding_box, cfg.grid_resolution)
    if cfg.output_path:
        path = _grid_path(cfg.output_path)
        rep.grid_csv_path = os.path.basename(path)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(rep.grid_csv)
        write_report_json(rep, cfg.output_path)
    return rep


def sweep_orders(cfg, orders, methods=None):
    """One row per (method, order); row errors are recorded and the sweep goes on."""
    orders = [int(r) for r in orders]
    if not orders:
        raise ConfigError("orders must be nonempty")
    if any(b <= a for a, b in zip(orders, orders[1:])) or orders[0] < 1:
        raise ConfigError("orders must be positive and strictly ascending")
    methods = tuple(m.replace("-", "_") for m in (methods if methods is not None
                                                 else (cfg.methods or (cfg.method,))))
    if not methods:
        raise ConfigError("methods must be nonempty")
    for m in methods:
        if m not in METHODS:
            raise ConfigError(f"unknown method {m!r}; choose from {METHODS}")
    inst = make_example(cfg.example_name, cfg.n_per_set)
    rep = ExperimentReport(config=asdict(cfg) | {"orders": orders, "methods": list(methods)})
    for m in methods:
        for r in orders:
            row = {"method": m, "order": r, "sigma": None, "tau": None, "log10_sigma": None,
                   "elapsed_seconds": None, "oracle_sigma": None, "error": None}
            if cfg.example_name == "1a":
                row["oracle_sigma"] = optimal_two_circles(0.5, 1.0, r)[1]
            try:
                sol = solve_z4(inst, m, cfg.policy(order=r))
                row.update(sigma=sol.sigma, tau=sol.tau, log10_sigma=float(np.log10(sol.sigma)),
                           elapsed_seconds=sol.elapsed_seconds)
            except (NumericError, np.linalg.LinAlgError) as exc:
                inner = exc.inner if isinstance(exc, MethodFailure) else exc
                row["error"] = type(inner).__name__
            rep.sweep_rows.append(row)
    return rep


SWEEP_COLUMNS = ("method", "order", "sigma", "tau", "log10_sigma", "elapsed_seconds",
                 "oracle_sigma", "error")


def sweep_csv(rep):
    buf = io.StringIO(newline="")
    buf.write(",".join(SWEEP_COLUMNS) + "\n")
    for row in rep.sweep_rows:
        cells = []
        for key in SWEEP_COLUMNS:
            v = row.get(key)
            if v is None:
                cells.append("")
            elif isinstance(v, float):
                cells.append(repr(v))
            else:
                cells.append(str(v))
        buf.write(",".join(cells) + "\n")
    return buf.getvalue()


def write_report_json(rep, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(rep.to_json())


def write_sweep_csv(rep, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(sweep_csv(rep))


def oracle_report(rho, alpha, r):
    """Closed-form two-circle optimum as a JSON-ready dict."""
    from .zolotarev import optimal_sign_two_circles, tau_from_sigma

    h3, sigma = optimal_two_circles(rho, alpha, r)
    h4, _ = optimal_sign_two_circles(rho, alpha, r)
    out = {"rho": rho, "alpha": alpha, "order": int(r), "sigma": sigma,
           "log10_sigma": float(np.log10(sigma)), "tau": float(tau_from_sigma(sigma)),
           "p": (1 - sigma) / (1 + sigma)}
    try:
        out["numerator"], out["denominator"] = coefficient_table(h4)
    except IllConditioned:
        out["numerator"] = out["denominator"] = None
    z3 = to_zero_pole_gain(h3)
    z4 = to_zero_pole_gain(h4)
    out.update(zeros_h3=_pairs(np.sort_complex(z3.zeros)), poles_h3=_pairs(np.sort_complex(z3.poles)),
               zeros_h4=_pairs(np.sort_complex(z4.zeros)), poles_h4=_pairs(np.sort_complex(z4.poles)),
               gain_h3=float(abs(z3.gain)))
    return _jsonable(out)
