"""Deterministic command-line front end.

Each sub-command maps onto one analysis operation and writes a single CSV
stream (stdout by default). Numbers are always formatted with "%.12g" and
no run metadata is embedded, so identical invocations produce byte-identical
files. Comment lines start with '#'. A flat key=value config file can seed
any flag; explicit flags win.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import analysis
from .costs import bruteforce_cost, canonical_cost, write_cost_csv
from .eigen import EigenSolverError, eigen_lowest

__all__ = ["main", "build_parser"]


def _fmt(value) -> str:
    return "%.12g" % float(value)


class _Stream:
    """Output sink that defers stdout/file choice to a context manager."""

    def __init__(self, path: str | None):
        self.path = path
        self.handle = None

    def __enter__(self):
        self.handle = open(self.path, "w") if self.path else sys.stdout
        return self.handle

    def __exit__(self, *exc):
        if self.path and self.handle is not None:
            self.handle.close()
        return False


def _svg_polyline(xs, ys, x_label: str, y_label: str) -> str:
    """Minimal deterministic SVG line plot (640x480, fixed margins)."""
    width, height, margin = 640.0, 480.0, 60.0
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y1 = y0 + 1.0

    def px(x):
        return margin + (x - x0) / (x1 - x0) * (width - 2 * margin)

    def py(y):
        return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin)

    points = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}">',
        f'<rect width="{width:.0f}" height="{height:.0f}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" stroke="black"/>',
        f'<text x="{width / 2:.0f}" y="{height - 15:.0f}" text-anchor="middle" font-size="14">{x_label}</text>',
        f'<text x="18" y="{height / 2:.0f}" text-anchor="middle" font-size="14" transform="rotate(-90 18 {height / 2:.0f})">{y_label}</text>',
        f'<text x="{margin}" y="{height - margin + 18:.0f}" font-size="11">{_fmt(x0)}</text>',
        f'<text x="{width - margin:.0f}" y="{height - margin + 18:.0f}" text-anchor="end" font-size="11">{_fmt(x1)}</text>',
        f'<text x="{margin - 4:.0f}" y="{height - margin:.0f}" text-anchor="end" font-size="11">{_fmt(y0)}</text>',
        f'<text x="{margin - 4:.0f}" y="{margin + 4:.0f}" text-anchor="end" font-size="11">{_fmt(y1)}</text>',
        f'<polyline points="{points}" fill="none" stroke="#1f77b4" stroke-width="1.5"/>',
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# sub-command handlers; each returns (header, rows, trailing comments, plot)


def _cmd_spectrum(args):
    ham = analysis.standard_hamiltonian(args.n, args.q, kind=args.driver)
    levels = min(args.levels, ham.sys.dim)
    spec = eigen_lowest(ham.at(args.tau), levels)
    rows = [(str(i), _fmt(v)) for i, v in enumerate(spec.eigenvalues)]
    return "index,eigenvalue", rows, [], None


def _cmd_gap_scan(args):
    ham = analysis.standard_hamiltonian(args.n, args.q, kind=args.driver)
    etas = np.linspace(args.eta_min, args.eta_max, args.points)
    trace = analysis.gap_trace(ham, etas, q=args.q)
    rows = [
        (_fmt(eta), _fmt(e[0]), _fmt(e[1]), _fmt(e[2]), _fmt(e[1] - e[0]))
        for eta, e in zip(trace.etas, trace.levels)
    ]
    plot = (trace.etas, trace.gaps, "eta", "gap") if args.format == "plot" else None
    return "eta,E0,E1,E2,gap", rows, [], plot


def _min_gap_row(n, q, result):
    return (
        str(n),
        str(q),
        _fmt(result.tau_c),
        _fmt(result.eta_c),
        _fmt(result.gap_min),
        "true" if result.boundary_minimum else "false",
    )


def _cmd_min_gap(args):
    ham = analysis.standard_hamiltonian(args.n, args.q, kind=args.driver)
    result = analysis.find_min_gap(ham, coarse_points=args.points, tol=args.tol)
    return "n,q,tau_c,eta_c,gap_min,boundary", [_min_gap_row(args.n, args.q, result)], [], None


def _cmd_scaling(args):
    ns = list(range(args.n_start, args.n_end + 1, args.step))
    model = {"linear": "linear", "exp": "exponential"}[args.model]
    fit = analysis.scaling_study(ns, args.q, kind=args.driver, model=model)
    rows = [
        _min_gap_row(n, args.q, res) for n, res in zip(fit.n_values, fit.results)
    ]
    comment = f"# fit: a={_fmt(fit.slope)},b={_fmt(fit.intercept)},R2={_fmt(fit.r_squared)}"
    plot = None
    if args.format == "plot":
        plot = (np.array(fit.n_values, float), fit.gaps, "n", "gap_min")
    return "n,q,tau_c,eta_c,gap_min,boundary", rows, [comment], plot


def _cmd_ground_state(args):
    ham = analysis.standard_hamiltonian(args.n, args.q, kind=args.driver)
    profile = analysis.ground_state_profile(ham, args.tau)
    ms = ham.sys.m_values()
    rows = [(_fmt(m), _fmt(a)) for m, a in zip(ms, profile.amplitudes)]
    plot = (ms, profile.amplitudes, "m", "amplitude") if args.format == "plot" else None
    return "m,amplitude", rows, [], plot


def _cmd_wkb_potential(args):
    phi = np.linspace(-np.pi, np.pi, args.points)
    pot = analysis.wkb_potential(args.q, phi)
    rows = [(_fmt(p), _fmt(v)) for p, v in zip(phi, pot)]
    plot = (phi, pot, "phi", "V") if args.format == "plot" else None
    return "phi,V", rows, [], plot


def _cmd_estimate(args):
    est = analysis.perturbative_estimate(args.n, args.q)
    header = "n,q,hp_ge,hp_e1e2,tau_c,eta_c,gap_min,eta_c_finite,gap_min_evaluated"
    row = (
        str(est.n),
        str(est.q),
        _fmt(est.hp_ge),
        _fmt(est.hp_e1e2),
        _fmt(est.tau_c),
        _fmt(est.eta_c),
        _fmt(est.gap_min),
        _fmt(est.eta_c_finite),
        _fmt(est.gap_min_evaluated),
    )
    return header, [row], [], None


def _cmd_evolve(args):
    ham = analysis.standard_hamiltonian(args.n, args.q, kind=args.driver)
    result = analysis.evolve_schrodinger(ham, args.T, args.steps)
    return "T,success_probability", [(_fmt(args.T), _fmt(result.probability))], [], None


def _cmd_cost(args):
    cost = canonical_cost(args.n, args.q)
    rows = [(str(w), str(f)) for w, f in enumerate(cost.values)]
    comments = []
    if args.verify and args.n > 14:
        raise ValueError("--verify enumerates all bit triples and is capped at n <= 14")
    if args.verify:
        rng = np.random.default_rng(args.seed)
        ok = True
        for w in range(args.n + 1):
            bits = "1" * w + "0" * (args.n - w)
            ok = ok and bruteforce_cost(bits, args.q) == cost.values[w]
        for _ in range(100):
            sample = rng.integers(0, 2, size=args.n)
            bits = "".join(str(b) for b in sample)
            ok = ok and bruteforce_cost(bits, args.q) == cost.values[int(sample.sum())]
        comments.append("# verify: PASS" if ok else "# verify: FAIL")
        if not ok:
            return "w,f", rows, comments, None, 1
    return "w,f", rows, comments, None


_HANDLERS = {
    "spectrum": _cmd_spectrum,
    "gap-scan": _cmd_gap_scan,
    "min-gap": _cmd_min_gap,
    "scaling": _cmd_scaling,
    "ground-state": _cmd_ground_state,
    "wkb-potential": _cmd_wkb_potential,
    "estimate": _cmd_estimate,
    "evolve": _cmd_evolve,
    "cost": _cmd_cost,
}

_PLOTTABLE = {"gap-scan", "scaling", "ground-state", "wkb-potential"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spingap",
        description="Adiabatic spectra and minimum-gap analysis for Hamming-symmetric costs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, driver=True, q=True):
        p.add_argument("--output", "-o", default=None, help="output file (default stdout)")
        p.add_argument("--format", choices=("csv", "plot"), default="csv")
        p.add_argument("--config", default=None, help="flat key=value file seeding the flags")
        if driver:
            p.add_argument("--driver", choices=("extended", "localized"), default="extended")
        if q:
            p.add_argument("--q", type=int, default=3)

    p = sub.add_parser("spectrum", help="lowest eigenvalues of H(tau)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--levels", type=int, default=8)
    common(p)

    p = sub.add_parser("gap-scan", help="E0, E1, E2 and gap over an eta grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eta-min", type=float, default=0.0)
    p.add_argument("--eta-max", type=float, default=12.0)
    p.add_argument("--points", type=int, default=64)
    common(p)

    p = sub.add_parser("min-gap", help="avoided-crossing location and depth")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", type=int, default=64, help="coarse scan points")
    p.add_argument("--tol", type=float, default=1e-6, help="eta refinement width")
    common(p)

    p = sub.add_parser("scaling", help="minimum gap versus n with a fit")
    p.add_argument("--n-start", type=int, required=True)
    p.add_argument("--n-end", type=int, required=True)
    p.add_argument("--step", type=int, default=2)
    p.add_argument("--model", choices=("linear", "exp"), default="linear")
    common(p)

    p = sub.add_parser("ground-state", help="ground-state amplitudes over m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau", type=float, default=0.0)
    common(p)

    p = sub.add_parser("wkb-potential", help="rotor effective potential V(phi)")
    p.add_argument("--points", type=int, default=256)
    common(p, driver=False)

    p = sub.add_parser("estimate", help="free-rotor closed-form crossing estimate")
    p.add_argument("--n", type=int, required=True)
    common(p, driver=False)

    p = sub.add_parser("evolve", help="real-time propagation success probability")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--steps", type=int, default=4000)
    common(p)

    p = sub.add_parser("cost", help="canonical cost table, optionally verified")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--seed", type=int, default=20260801)
    common(p, driver=False)

    return parser


def _apply_config(argv: list[str]) -> list[str]:
    """Inject key=value pairs from --config as defaults before other flags."""
    if "--config" not in argv:
        return argv
    i = argv.index("--config")
    if i + 1 >= len(argv):
        return argv  # argparse will report the missing value
    path = argv[i + 1]
    injected: list[str] = []
    with open(path) as handle:
        for line in handle:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            injected.extend([f"--{key.strip()}", value.strip()])
    rest = argv[:i] + argv[i + 2 :]
    # keep the sub-command first; config-provided flags come before explicit
    # ones so the command line wins
    return rest[:1] + injected + rest[1:]


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv:
        argv = _apply_config(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "plot" and args.command not in _PLOTTABLE:
        parser.error(f"--format plot is not supported for '{args.command}'")
    try:
        outcome = _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"spingap {args.command}: invalid arguments: {exc}", file=sys.stderr)
        return 2
    except (EigenSolverError, RuntimeError) as exc:
        echo = " ".join(f"{k}={v}" for k, v in sorted(vars(args).items()) if k != "config")
        print(f"spingap {args.command}: numerical failure ({exc}) [{echo}]", file=sys.stderr)
        return 1
    header, rows, comments, plot = outcome[:4]
    rc = outcome[4] if len(outcome) > 4 else 0
    with _Stream(args.output) as stream:
        if args.format == "plot" and plot is not None:
            stream.write(_svg_polyline(*plot))
        else:
            stream.write(header + "\n")
            for row in rows:
                stream.write(",".join(row) + "\n")
            for comment in comments:
                stream.write(comment + "\n")
    return rc


if __name__ == "__main__":
    sys.exit(main())
