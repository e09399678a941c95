"""Command-line front end.

Subcommands
-----------
scan-k     steady-state observables swept over the tuning parameter k
scan-eps   steady-state photon statistics swept over the drive strength
evolve     time evolution of the photon-number probabilities
wigner     Wigner function of a steady state on a phase-space grid
spectrum   spectra of squeezing S_theta(omega) of a steady state
compare    closed-form perturbative solutions vs the numeric solvers

Common flags: --chi --eps --gamma --nth --dim --k / --k-range A:B:STEP
--out PATH --format {csv,json} --jobs N --config PATH.  Values may also be
given in a config file of `key = value` lines (# starts a comment);
command-line flags win over the file.  Output uses 12 significant digits
and the lowercase token "nan" for undefined observables; identical
configurations produce byte-identical files.  When --out is given, a PNG
rendering is written next to the delimited file (suppress with --no-plot).

Exit codes: 0 success, 1 usage error, 2 solver failure, 3 oracle mismatch
(compare only).
"""

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass, fields, replace
from multiprocessing import Pool
from pathlib import Path

import numpy as np

from kerrsim.analytic_oracles import (
    PerturbationParams,
    psi1_evolution,
    steady1_approx,
    steady2_approx,
    trunc2_eigensystem,
)
from kerrsim.correlations import squeezing_spectrum, two_time_covariance
from kerrsim.errors import (
    DegenerateSteadyStateError,
    KerrsimError,
    SolverConvergenceError,
    StaleSteadyStateError,
    WindowTooShortError,
)
from kerrsim.fock_algebra import hermitian_eig
from kerrsim.liouvillian import build_liouvillian
from kerrsim.model import SystemParams, TuningPoint, hamiltonian_rot, hamiltonian_trunc
from kerrsim.observables import (
    DEFAULT_OFFDIAG_PAIRS,
    coherence_param,
    fano,
    offdiag,
    photon_probs,
    purity,
    thermalization,
    truncation_fidelity,
    vn_entropy,
)
from kerrsim.phase_space import wigner_grid
from kerrsim.solvers import evolve_master, evolve_unitary, steady_state


class UsageError(KerrsimError):
    pass


# ---------------------------------------------------------------------------
# configuration


def _parse_range(text):
    parts = str(text).split(":")
    if len(parts) != 3:
        raise UsageError(f"range must be START:STOP:STEP, got {text!r}")
    try:
        a, b, s = (float(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}: {exc}") from None
    if s <= 0:
        raise UsageError(f"range step must be positive, got {s}")
    if b < a:
        raise UsageError(f"range {text!r} is empty")
    return (a, b, s)


def _parse_theta_token(tok):
    tok = tok.strip()
    if tok == "pi":
        return math.pi
    if tok == "pi/2":
        return math.pi / 2
    if tok == "pi/4":
        return math.pi / 4
    try:
        return float(tok)
    except ValueError:
        raise UsageError(f"bad theta value {tok!r}") from None


def _parse_thetas(text):
    toks = [t for t in str(text).split(",") if t.strip()]
    if not toks:
        raise UsageError("theta list is empty")
    return tuple(_parse_theta_token(t) for t in toks)


def _parse_bool(text):
    t = str(text).strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"bad boolean {text!r}")


def _parse_format(text):
    t = str(text).strip().lower()
    if t not in ("csv", "json"):
        raise UsageError(f"format must be csv or json, got {text!r}")
    return t


@dataclass(frozen=True)
class RunConfig:
    """Merged parameters for one subcommand invocation."""

    subcommand: str = ""
    chi: float = 30.0
    eps: float = 5.0
    gamma: float = 1.0
    nth: float = 0.01
    dim: int = 15
    k: float | None = None
    k_range: tuple | None = None
    eps_range: tuple = (0.25, 20.0, 0.25)
    thetas: tuple = (0.0, math.pi / 2)
    tau_max: float = 40.0
    tau_step: float = 0.01
    omega_max: float = 40.0
    omega_step: float = 0.05
    t_max: float = 30.0
    t_step: float = 0.01
    x_min: float = -3.0
    x_max: float = 3.0
    x_step: float = 0.05
    p_min: float = -3.0
    p_max: float = 3.0
    p_step: float = 0.05
    pad: int | None = None
    delta: float = 0.1
    d: float = 1.0
    normalize_coherence: bool = False
    out: str | None = None
    fmt: str = "csv"
    jobs: int = 0
    no_plot: bool = False


# config-file key -> (RunConfig attribute, converter)
_CONFIG_KEYS = {
    "chi": ("chi", float),
    "eps": ("eps", float),
    "gamma": ("gamma", float),
    "nth": ("nth", float),
    "dim": ("dim", int),
    "k": ("k", float),
    "k_range": ("k_range", _parse_range),
    "eps_range": ("eps_range", _parse_range),
    "thetas": ("thetas", _parse_thetas),
    "tau_max": ("tau_max", float),
    "tau_step": ("tau_step", float),
    "omega_max": ("omega_max", float),
    "omega_step": ("omega_step", float),
    "t_max": ("t_max", float),
    "t_step": ("t_step", float),
    "x_min": ("x_min", float),
    "x_max": ("x_max", float),
    "x_step": ("x_step", float),
    "p_min": ("p_min", float),
    "p_max": ("p_max", float),
    "p_step": ("p_step", float),
    "pad": ("pad", int),
    "delta": ("delta", float),
    "d": ("d", float),
    "normalize_coherence": ("normalize_coherence", _parse_bool),
    "no_plot": ("no_plot", _parse_bool),
    "out": ("out", str),
    "format": ("fmt", _parse_format),
    "jobs": ("jobs", int),
}


def load_config_file(path):
    """Parse a `key = value` config file into raw string values."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from None
    raw = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_").lower()
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        raw[key] = value.strip()
    return raw


def build_run_config(args) -> RunConfig:
    """Apply precedence: command-line flags, then config file, then defaults."""
    cfg = RunConfig(subcommand=args.subcommand)
    if getattr(args, "config", None):
        for key, value in load_config_file(args.config).items():
            attr, convert = _CONFIG_KEYS[key]
            cfg = replace(cfg, **{attr: convert(value)})
    updates = {}
    for f in fields(RunConfig):
        flag_val = getattr(args, f.name, None)
        if flag_val is not None and f.name != "subcommand":
            updates[f.name] = flag_val
    if updates:
        cfg = replace(cfg, **updates)
    if cfg.fmt not in ("csv", "json"):
        raise UsageError(f"format must be csv or json, got {cfg.fmt!r}")
    return cfg


# ---------------------------------------------------------------------------
# grids and output


def _range_values(rng):
    a, b, s = rng
    n = int(math.floor((b - a) / s + 1e-9))
    return [a + i * s for i in range(n + 1)]


def _axis(a, b, step):
    if step <= 0 or b <= a:
        raise UsageError(f"bad axis range {a}:{b}:{step}")
    n = int(round((b - a) / step))
    return np.linspace(a, b, n + 1)


def _fmt_cell(v):
    if v is None:
        return "nan"
    if isinstance(v, str):
        return v
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    v = float(v)
    if math.isnan(v):
        return "nan"
    return "%.12g" % v


def _json_cell(v):
    if v is None:
        return '"nan"'
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    v = float(v)
    if math.isnan(v):
        return '"nan"'
    return "%.12g" % v


def write_table(stream, columns, rows, fmt):
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt_cell(row.get(c)) for c in columns])
        return
    stream.write("[\n")
    for i, row in enumerate(rows):
        cells = ", ".join(f"{json.dumps(c)}: {_json_cell(row.get(c))}" for c in columns)
        tail = "," if i + 1 < len(rows) else ""
        stream.write("  {" + cells + "}" + tail + "\n")
    stream.write("]\n")


def _emit(cfg, columns, rows, render=None):
    if cfg.out is None:
        write_table(sys.stdout, columns, rows, cfg.fmt)
        return
    out = Path(cfg.out)
    with open(out, "w", newline="") as fh:
        write_table(fh, columns, rows, cfg.fmt)
    if render is not None and not cfg.no_plot:
        render(out.with_suffix(".png"))


# ---------------------------------------------------------------------------
# subcommand implementations


SCAN_K_COLUMNS = (
    ["k"]
    + [f"p{n}" for n in range(6)]
    + ["f1", "f2", "f3", "fano", "purity", "vn_entropy", "linear_entropy"]
    + ["coherence", "thermalization"]
    + [f"rho_{n}{m}_abs" for n, m in DEFAULT_OFFDIAG_PAIRS]
    + ["error"]
)


def _steady_rho(cfg, k):
    params = SystemParams(
        chi=cfg.chi, eps=cfg.eps, gamma=cfg.gamma, n_th=cfg.nth, dim=cfg.dim
    )
    H = hamiltonian_rot(params, TuningPoint(k=float(k)))
    L = build_liouvillian(H, cfg.gamma, cfg.nth)
    return L, steady_state(L).rho_ss


def _scan_k_row(payload):
    k, cfg = payload
    row = {"k": k, "error": ""}
    try:
        _, rho = _steady_rho(cfg, k)
        probs = photon_probs(rho)
        for n in range(6):
            row[f"p{n}"] = float(probs[n]) if n < probs.size else 0.0
        for m in (1, 2, 3):
            row[f"f{m}"] = truncation_fidelity(rho, m)
        row["fano"] = fano(rho)
        row["purity"] = purity(rho)
        row["vn_entropy"] = vn_entropy(rho)
        row["linear_entropy"] = 1.0 - row["purity"]
        row["coherence"] = coherence_param(rho, normalized=cfg.normalize_coherence)
        row["thermalization"] = thermalization(rho)
        for n, m in DEFAULT_OFFDIAG_PAIRS:
            row[f"rho_{n}{m}_abs"] = abs(offdiag(rho, n, m))
    except KerrsimError as exc:
        for col in SCAN_K_COLUMNS:
            row.setdefault(col, None)
        row["error"] = str(exc)
    return row


def _scan_eps_row(payload):
    eps, cfg, fid_key = payload
    row = {"eps": eps, "error": ""}
    try:
        _, rho = _steady_rho(replace(cfg, eps=float(eps)), cfg.k)
        probs = photon_probs(rho)
        for n in range(4):
            row[f"p{n}"] = float(probs[n]) if n < probs.size else 0.0
        row[fid_key] = truncation_fidelity(rho, int(round(cfg.k)))
    except KerrsimError as exc:
        row = {"eps": eps, "error": str(exc)}
    return row


def _pool_map(func, payloads, jobs):
    jobs = jobs if jobs > 0 else (os.cpu_count() or 1)
    if jobs == 1 or len(payloads) <= 1:
        return [func(p) for p in payloads]
    with Pool(processes=min(jobs, len(payloads))) as pool:
        return pool.map(func, payloads)


def scan_k(cfg: RunConfig):
    if cfg.k is not None:
        ks = [float(cfg.k)]
    else:
        ks = _range_values(cfg.k_range or (0.5, 4.5, 0.02))
    rows = _pool_map(_scan_k_row, [(k, cfg) for k in ks], cfg.jobs)
    return SCAN_K_COLUMNS, rows


def scan_eps(cfg: RunConfig):
    k = cfg.k if cfg.k is not None else 2.0
    if k not in (2.0, 3.0):
        raise UsageError(f"scan-eps requires k = 2 or 3, got {k}")
    cfg = replace(cfg, k=k)
    fid_key = f"f{int(k)}"
    columns = ["eps"] + [f"p{n}" for n in range(4)] + [fid_key, "error"]
    eps_values = _range_values(cfg.eps_range)
    rows = _pool_map(_scan_eps_row, [(e, cfg, fid_key) for e in eps_values], cfg.jobs)
    return columns, rows


def evolve_cmd(cfg: RunConfig):
    k = cfg.k if cfg.k is not None else 2.0
    times = _axis(0.0, cfg.t_max, cfg.t_step)
    fid_m = 2 if round(k) <= 2 else 3
    fid_key = f"f{fid_m}"
    columns = ["t"] + [f"p{n}" for n in range(5)] + [fid_key, "norm"]

    if cfg.gamma == 0.0:
        params = SystemParams(chi=cfg.chi, eps=cfg.eps, gamma=1.0, n_th=0.0, dim=cfg.dim)
        H = hamiltonian_rot(params, TuningPoint(k=float(k)))
        psi0 = np.zeros(cfg.dim, dtype=complex)
        psi0[0] = 1.0
        traj = evolve_unitary(H, psi0, times)
        prob_list = np.abs(traj.states) ** 2
        norms = prob_list.sum(axis=1)
    else:
        params = SystemParams(
            chi=cfg.chi, eps=cfg.eps, gamma=cfg.gamma, n_th=cfg.nth, dim=cfg.dim
        )
        H = hamiltonian_rot(params, TuningPoint(k=float(k)))
        L = build_liouvillian(H, cfg.gamma, cfg.nth)
        rho0 = np.zeros((cfg.dim, cfg.dim), dtype=complex)
        rho0[0, 0] = 1.0
        traj = evolve_master(L, rho0, times)
        prob_list = np.array([np.diag(s).real for s in traj.states])
        norms = np.array([np.trace(s).real for s in traj.states])

    rows = []
    for j, t in enumerate(times):
        row = {"t": float(t), "norm": float(norms[j])}
        for n in range(5):
            row[f"p{n}"] = float(prob_list[j, n]) if n < prob_list.shape[1] else 0.0
        row[fid_key] = float(prob_list[j, : fid_m + 1].sum())
        rows.append(row)
    return columns, rows, fid_key


def wigner_cmd(cfg: RunConfig):
    k = cfg.k if cfg.k is not None else 1.0
    _, rho = _steady_rho(cfg, k)
    xs = _axis(cfg.x_min, cfg.x_max, cfg.x_step)
    ps = _axis(cfg.p_min, cfg.p_max, cfg.p_step)
    grid = wigner_grid(rho, xs, ps, pad=cfg.pad)
    columns = ["x", "p", "w"]
    rows = [
        {"x": float(x), "p": float(p), "w": float(grid.values[i, j])}
        for i, x in enumerate(xs)
        for j, p in enumerate(ps)
    ]
    return columns, rows, grid


def spectrum_cmd(cfg: RunConfig):
    k = cfg.k if cfg.k is not None else 1.0
    L, rho = _steady_rho(cfg, k)
    taus = _axis(0.0, cfg.tau_max, cfg.tau_step)
    omegas = _axis(-cfg.omega_max, cfg.omega_max, cfg.omega_step)
    spectra = []
    for theta in cfg.thetas:
        series = two_time_covariance(L, rho, theta, taus)
        spec = squeezing_spectrum(series, omegas)
        spectra.append((theta, spec.values))
    columns = ["omega"] + [f"s_theta_{theta:g}" for theta, _ in spectra]
    rows = []
    for i, omega in enumerate(omegas):
        row = {"omega": float(omega)}
        for theta, values in spectra:
            row[f"s_theta_{theta:g}"] = float(values[i])
        rows.append(row)
    return columns, rows, (omegas, spectra)


def compare_cmd(cfg: RunConfig):
    """Closed-form perturbative solutions vs the numeric solvers."""
    dl, d = cfg.delta, cfg.d
    p = PerturbationParams(delta=dl, d=d)
    rows = []

    def record(check, measured, bound):
        rows.append(
            {
                "check": check,
                "measured": float(measured),
                "bound": float(bound),
                "status": "ok" if measured <= bound else "exceeded",
            }
        )

    # Damped steady states on the resonant manifolds.  The closed forms fix
    # gamma = 1, eps = 1/delta, chi = 1/(d delta^2).
    gamma = 1.0
    eps = 1.0 / dl
    chi = 1.0 / (d * dl * dl)
    params = SystemParams(chi=chi, eps=eps, gamma=gamma, n_th=0.0, dim=4)
    H4 = hamiltonian_trunc(params, 2, 4)
    rho4 = steady_state(build_liouvillian(H4, gamma, 0.0)).rho_ss
    record(
        "two_photon_steady_state",
        np.abs(rho4 - steady2_approx(p)).max(),
        5.0 * dl**2,
    )
    H3 = hamiltonian_trunc(params, 1, 3)
    rho3 = steady_state(build_liouvillian(H3, gamma, 0.0)).rho_ss
    record(
        "single_photon_steady_state",
        np.abs(rho3 - steady1_approx(p, "delta2")).max(),
        5.0 * dl**3,
    )

    # Lossless two-photon eigensystem at delta = eps/chi (chi = 1 units).
    lam_a, vec_a = trunc2_eigensystem(1.0, dl)
    He = hamiltonian_trunc(SystemParams(chi=1.0, eps=dl, gamma=1.0, n_th=0.0, dim=4), 2, 4)
    lam_e, vec_e = hermitian_eig(He)
    record("eigenvalues", np.abs(lam_a - lam_e).max(), 5.0 * dl**3)
    overlaps = np.abs(np.einsum("ij,ij->j", vec_e.conj(), vec_a))
    record("eigenvector_overlap_deficit", 1.0 - overlaps.min(), 10.0 * dl**4)
    record("eigenvalue_sum", abs(lam_a.sum() - 2.0), 10.0 * dl**2)

    # Single-photon Rabi law over two periods.
    Hr = hamiltonian_trunc(SystemParams(chi=1.0, eps=dl, gamma=1.0, n_th=0.0, dim=3), 1, 3)
    ts = np.linspace(0.0, 4.0 * math.pi / dl, 2001)
    traj = evolve_unitary(Hr, np.array([1.0, 0.0, 0.0], dtype=complex), ts)
    p1 = np.abs(traj.states[:, 1]) ** 2
    record("rabi_law", np.abs(p1 - np.sin(dl * ts) ** 2).max(), 3.0 * dl**2)

    columns = ["check", "measured", "bound", "status"]
    ok = all(row["status"] == "ok" for row in rows)
    return columns, rows, ok


# ---------------------------------------------------------------------------
# argument parsing and dispatch


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse exits with code 2 by default; usage failures are exit 1 here.
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_common(sub):
    sub.add_argument("--chi", type=float, help="Kerr nonlinearity (units of gamma)")
    sub.add_argument("--eps", type=float, help="driving strength (units of gamma)")
    sub.add_argument("--gamma", type=float, help="damping constant (default 1)")
    sub.add_argument("--nth", type=float, help="mean thermal photon number")
    sub.add_argument("--dim", type=int, help="Fock truncation dimension")
    sub.add_argument("--k", type=float, help="tuning parameter")
    sub.add_argument(
        "--k-range", dest="k_range", type=_parse_range, help="k sweep START:STOP:STEP"
    )
    sub.add_argument("--out", type=str, help="output path (default stdout)")
    sub.add_argument(
        "--format", dest="fmt", type=_parse_format, help="output format: csv or json"
    )
    sub.add_argument("--jobs", type=int, help="worker processes (default: all cores)")
    sub.add_argument("--config", type=str, help="key = value config file")
    sub.add_argument(
        "--no-plot",
        dest="no_plot",
        action="store_const",
        const=True,
        help="suppress the PNG rendered next to --out",
    )


def build_parser():
    parser = _Parser(prog="kerrsim", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    s = subs.add_parser("scan-k", help="steady-state observables over a k sweep")
    _add_common(s)
    s.add_argument(
        "--normalize-coherence",
        dest="normalize_coherence",
        action="store_const",
        const=True,
        help="report the coherence parameter normalized by 1 - 1/dim",
    )

    s = subs.add_parser("scan-eps", help="photon statistics over a drive sweep")
    _add_common(s)
    s.add_argument(
        "--eps-range", dest="eps_range", type=_parse_range, help="eps sweep START:STOP:STEP"
    )

    s = subs.add_parser("evolve", help="photon-number evolution from vacuum")
    _add_common(s)
    s.add_argument("--t-max", dest="t_max", type=float, help="final time (1/gamma)")
    s.add_argument("--t-step", dest="t_step", type=float, help="output step (1/gamma)")

    s = subs.add_parser("wigner", help="steady-state Wigner function grid")
    _add_common(s)
    s.add_argument("--x-min", dest="x_min", type=float)
    s.add_argument("--x-max", dest="x_max", type=float)
    s.add_argument("--x-step", dest="x_step", type=float)
    s.add_argument("--p-min", dest="p_min", type=float)
    s.add_argument("--p-max", dest="p_max", type=float)
    s.add_argument("--p-step", dest="p_step", type=float)
    s.add_argument("--pad", type=int, help="Fock padding before displacing (default 2*dim)")

    s = subs.add_parser("spectrum", help="spectra of squeezing of a steady state")
    _add_common(s)
    s.add_argument(
        "--thetas", type=_parse_thetas, help="comma list of quadrature phases (pi allowed)"
    )
    s.add_argument("--tau-max", dest="tau_max", type=float, help="covariance window end")
    s.add_argument("--tau-step", dest="tau_step", type=float, help="covariance step")
    s.add_argument("--omega-max", dest="omega_max", type=float, help="frequency half-range")
    s.add_argument("--omega-step", dest="omega_step", type=float, help="frequency spacing")

    s = subs.add_parser("compare", help="analytic vs numeric residual report")
    _add_common(s)
    s.add_argument("--delta", type=float, help="perturbation parameter")
    s.add_argument("--d", type=float, help="rescaled drive parameter")

    return parser


def _run(cfg: RunConfig) -> int:
    if cfg.subcommand == "scan-k":
        columns, rows = scan_k(cfg)

        def render(path):
            from kerrsim import _figures

            _figures.render_scan_k(rows, path)

        _emit(cfg, columns, rows, render)
        return 0 if any(row["error"] == "" for row in rows) else 2

    if cfg.subcommand == "scan-eps":
        columns, rows = scan_eps(cfg)
        fid_key = columns[-2]

        def render(path):
            from kerrsim import _figures

            _figures.render_scan_eps(rows, path, fid_key)

        _emit(cfg, columns, rows, render)
        return 0 if any(row["error"] == "" for row in rows) else 2

    if cfg.subcommand == "evolve":
        columns, rows, fid_key = evolve_cmd(cfg)

        def render(path):
            from kerrsim import _figures

            _figures.render_evolve(rows, path, fid_key)

        _emit(cfg, columns, rows, render)
        return 0

    if cfg.subcommand == "wigner":
        columns, rows, grid = wigner_cmd(cfg)

        def render(path):
            from kerrsim import _figures

            _figures.render_wigner(grid, path)

        _emit(cfg, columns, rows, render)
        return 0

    if cfg.subcommand == "spectrum":
        columns, rows, (omegas, spectra) = spectrum_cmd(cfg)

        def render(path):
            from kerrsim import _figures

            _figures.render_spectrum(omegas, spectra, path)

        _emit(cfg, columns, rows, render)
        return 0

    if cfg.subcommand == "compare":
        columns, rows, ok = compare_cmd(cfg)

        def render(path):
            from kerrsim import _figures

            _figures.render_compare(rows, path)

        _emit(cfg, columns, rows, render)
        return 0 if ok else 3

    raise UsageError(f"unknown subcommand {cfg.subcommand!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        cfg = build_run_config(args)
        return _run(cfg)
    except UsageError as exc:
        print(f"kerrsim: {exc}", file=sys.stderr)
        return 1
    except (
        SolverConvergenceError,
        DegenerateSteadyStateError,
        WindowTooShortError,
        StaleSteadyStateError,
    ) as exc:
        print(f"kerrsim: solver failure: {exc}", file=sys.stderr)
        return 2
    except KerrsimError as exc:
        print(f"kerrsim: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
