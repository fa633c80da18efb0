"""Command-line front end: parameter sweeps, figure data, verification battery.

Subcommands:
  sweep   -- concurrence over an (alpha, r, P) grid, CSV out
  fig1    -- concurrence-vs-P curves, both families, r in {0, pi/6, pi/4}
  fig2    -- zero-concurrence boundary surfaces over a (r, P) grid
  verify  -- invariant battery, one pass/fail line per check

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O failure.
All grids evaluate point-independently; --jobs parallelises the sweep but
rows are buffered and emitted in canonical order, so output bytes never
depend on the worker count.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .channel import apply_local_channel, evolved_closed_form, kraus_amplitude_damping
from .entanglement import (Method, concurrence_closed, concurrence_eigen,
                           concurrence_xstate)
from .matcore import check_density_matrix
from .states import R_MAX, Family, StateSpec, reduced_state, reduced_state_analytic
from .sudden_death import (NoBoundaryError, boundary_alpha_theta1,
                           boundary_alpha_theta2, compare_death_ranges,
                           death_range, find_death_point)

CSV_HEADER = "family,alpha,r,p,c_eigen,c_xstate,c_closed,raw,deviation"
DEVIATION_GATE = 1e-9

DEFAULT_ALPHAS = (0.3, 1.0 / math.sqrt(2.0), 0.8, 0.9)
FIG1_R = ((0.0, "r0"), (math.pi / 6, "rpi6"), (math.pi / 4, "rpi4"))

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_IO = 3


def fmt(x: float) -> str:
    return f"{x:.17g}"


def _parse_value(tok: str) -> float:
    tok = tok.strip()
    if tok == "pi":
        return math.pi
    if tok.startswith("pi/"):
        return math.pi / float(tok[3:])
    return float(tok)


def parse_axis(text: str) -> list[float]:
    """Axis spec: comma list of values, or min:max:count grid; 'pi/6' allowed."""
    text = text.strip()
    if ":" in text:
        lo_s, hi_s, n_s = text.split(":")
        lo, hi, n = _parse_value(lo_s), _parse_value(hi_s), int(n_s)
        if n < 1:
            raise ValueError("grid count must be >= 1")
        return [lo] if n == 1 else list(np.linspace(lo, hi, n))
    vals = [_parse_value(t) for t in text.split(",") if t.strip()]
    if not vals:
        raise ValueError(f"empty axis spec: {text!r}")
    return vals


@dataclass(frozen=True)
class SweepSpec:
    families: tuple[Family, ...]
    alphas: tuple[float, ...]
    rs: tuple[float, ...]
    ps: tuple[float, ...]
    methods: tuple[Method, ...]
    out: Path
    jobs: int = 1


@dataclass
class SweepRow:
    family: Family
    alpha: float
    r: float
    p: float
    values: dict[Method, float] = field(default_factory=dict)
    raw: float = 0.0

    @property
    def deviation(self) -> float:
        vals = list(self.values.values())
        return max((abs(a - b) for a in vals for b in vals), default=0.0)

    def to_csv(self) -> str:
        cols = [self.family.value, fmt(self.alpha), fmt(self.r), fmt(self.p)]
        for m in (Method.EIGEN, Method.XSTATE, Method.CLOSED):
            cols.append(fmt(self.values[m]) if m in self.values else "")
        cols.append(fmt(self.raw))
        cols.append(fmt(self.deviation))
        return ",".join(cols)


def _numeric_pipeline_state(family: Family, alpha: float, r: float, p: float) -> np.ndarray:
    spec = StateSpec(family, alpha, allow_degenerate=True)
    return apply_local_channel(reduced_state(spec, r), p, p)


def compute_row(task: tuple) -> SweepRow:
    family, alpha, r, p, methods = task
    row = SweepRow(family=family, alpha=alpha, r=r, p=p)
    raw_by_method: dict[Method, float] = {}
    needs_state = Method.EIGEN in methods or Method.XSTATE in methods
    if needs_state:
        rho = _numeric_pipeline_state(family, alpha, r, p)
    if Method.EIGEN in methods:
        res = concurrence_eigen(rho)
        row.values[Method.EIGEN] = res.value
        raw_by_method[Method.EIGEN] = res.raw
    if Method.XSTATE in methods:
        res = concurrence_xstate(rho)
        row.values[Method.XSTATE] = res.value
        raw_by_method[Method.XSTATE] = res.raw
    if Method.CLOSED in methods:
        res = concurrence_closed(family, alpha, r, p)
        row.values[Method.CLOSED] = res.value
        raw_by_method[Method.CLOSED] = res.raw
    for m in (Method.CLOSED, Method.XSTATE, Method.EIGEN):
        if m in raw_by_method:
            row.raw = raw_by_method[m]
            break
    return row


def run_sweep(spec: SweepSpec) -> tuple[list[SweepRow], float]:
    tasks = [(fam, a, r, p, spec.methods)
             for fam in sorted(spec.families, key=lambda f: f.value)
             for a in sorted(spec.alphas)
             for r in sorted(spec.rs)
             for p in sorted(spec.ps)]
    if spec.jobs > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            rows = list(pool.map(compute_row, tasks, chunksize=32))
    else:
        rows = [compute_row(t) for t in tasks]
    max_dev = max((row.deviation for row in rows), default=0.0)
    return rows, max_dev


def write_rows(path: Path, rows: list[SweepRow]) -> None:
    lines = [CSV_HEADER] + [row.to_csv() for row in rows]
    path.write_text("\n".join(lines) + "\n")


def cmd_sweep(spec: SweepSpec) -> int:
    rows, max_dev = run_sweep(spec)
    write_rows(spec.out, rows)
    print(f"sweep: {len(rows)} rows -> {spec.out}; max cross-method deviation {max_dev:.3e}",
          file=sys.stderr)
    return EXIT_OK if max_dev <= DEVIATION_GATE else EXIT_VERIFY


def cmd_fig1(outdir: Path, jobs: int = 1) -> int:
    """Concurrence-vs-P curves behind the six figure panels.

    The plotted alpha set {0.3, 1/sqrt 2, 0.8, 0.9} is an implementation
    default chosen to exhibit both death and no-death regimes.
    """
    outdir.mkdir(parents=True, exist_ok=True)
    ps = np.linspace(0.0, 1.0, 201)
    for fam in (Family.THETA1, Family.THETA2):
        for r, tag in FIG1_R:
            header = ["p"] + [f"c_alpha_{fmt(a)}" for a in DEFAULT_ALPHAS]
            lines = [",".join(header)]
            for p in ps:
                vals = [concurrence_closed(fam, a, r, p).value for a in DEFAULT_ALPHAS]
                lines.append(",".join([fmt(p)] + [fmt(v) for v in vals]))
            path = outdir / f"fig1_{fam.value}_{tag}.csv"
            path.write_text("\n".join(lines) + "\n")
            print(f"fig1: wrote {path}", file=sys.stderr)
    return EXIT_OK


def cmd_fig2(outdir: Path, n: int = 50) -> int:
    """Zero-concurrence boundary surfaces over an (r, P) grid."""
    outdir.mkdir(parents=True, exist_ok=True)
    rs = np.linspace(0.0, R_MAX, n)
    ps = np.linspace(1.0 / n, 1.0, n)
    for fam, fn in ((Family.THETA1, boundary_alpha_theta1),
                    (Family.THETA2, boundary_alpha_theta2)):
        lines = ["r,p,alpha_boundary"]
        for r in rs:
            for p in ps:
                try:
                    alpha = fn(r, p)
                except NoBoundaryError:
                    alpha = 1.0  # boundary pinned at the edge of the state family
                lines.append(f"{fmt(r)},{fmt(p)},{fmt(alpha)}")
        path = outdir / f"fig2_{fam.value}.csv"
        path.write_text("\n".join(lines) + "\n")
        print(f"fig2: wrote {path}", file=sys.stderr)
    return EXIT_OK


def _verify_checks() -> list[tuple[str, bool, str]]:
    results = []

    def check(name: str, fn):
        try:
            detail = fn()
            results.append((name, True, detail or ""))
        except Exception as exc:  # noqa: BLE001 - any failure is a failed check
            results.append((name, False, f"{type(exc).__name__}: {exc}"))

    alphas = np.linspace(0.05, 0.95, 6)
    rs = np.linspace(0.0, R_MAX, 6)
    ps = np.linspace(0.0, 1.0, 6)

    def oracle_equivalence():
        worst = 0.0
        for fam in Family:
            for a in alphas:
                for r in rs:
                    for p in ps:
                        spec = StateSpec(fam, a)
                        num = apply_local_channel(reduced_state(spec, r), p, p)
                        ana = evolved_closed_form(spec, r, p)
                        worst = max(worst, np.max(np.abs(num - ana)))
                        dev = abs(concurrence_eigen(num).value
                                  - concurrence_closed(fam, a, r, p).value)
                        worst = max(worst, dev)
        assert worst <= 1e-10, f"worst deviation {worst:.3e}"
        return f"max deviation {worst:.3e}"

    def trace_psd():
        rng = np.random.default_rng(7)
        for _ in range(20):
            a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            rho = a @ a.conj().T
            rho /= np.trace(rho).real
            out = apply_local_channel(rho, rng.uniform(), rng.uniform())
            check_density_matrix(out)
            assert abs(np.trace(out).real - 1.0) <= 1e-12
        return ""

    def kraus_completeness():
        for p in ps:
            kraus_amplitude_damping(p)  # constructor enforces completeness
        return ""

    def composition():
        rng = np.random.default_rng(11)
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        rho = a @ a.conj().T
        rho /= np.trace(rho).real
        for p1, p2 in [(0.2, 0.3), (0.5, 0.25), (0.9, 0.05)]:
            two = apply_local_channel(apply_local_channel(rho, p1, p1), p2, p2)
            p12 = 1.0 - (1.0 - p1) * (1.0 - p2)
            one = apply_local_channel(rho, p12, p12)
            assert np.max(np.abs(two - one)) <= 1e-12
        return ""

    def sign_invariance():
        for fam in Family:
            for a in alphas:
                for r in rs[:3]:
                    for p in ps[:3]:
                        assert (concurrence_closed(fam, a, r, p).value
                                == concurrence_closed(fam, -a, r, p).value)
        return ""

    def partner_symmetry():
        for a in alphas:
            partner = math.sqrt(1.0 - a * a)
            for p in ps:
                lhs = concurrence_closed(Family.THETA2, a, 0.0, p).value
                rhs = concurrence_closed(Family.THETA2, partner, 0.0, p).value
                assert abs(lhs - rhs) <= 1e-14
        return ""

    def containment():
        for r in np.linspace(0.0, R_MAX, 25):
            compare_death_ranges(r)
        return ""

    def root_consistency():
        worst = 0.0
        for r in np.linspace(0.0, R_MAX, 12):
            for p in np.linspace(0.1, 1.0, 12):
                a1 = boundary_alpha_theta1(r, p)
                worst = max(worst, abs(concurrence_closed(Family.THETA1, a1, r, p).raw))
                if r > 0:
                    a2 = boundary_alpha_theta2(r, p)
                    worst = max(worst, abs(concurrence_closed(Family.THETA2, a2, r, p).raw))
        assert worst <= 1e-10, f"worst |raw| {worst:.3e}"
        return f"max |raw| {worst:.3e}"

    def inertial_dichotomy():
        for a in (0.5, 0.7, 0.71, 0.9):
            dp1 = find_death_point(Family.THETA1, a, 0.0)
            assert dp1.exists_before_full_decay == (a > 1.0 / math.sqrt(2.0))
            dp2 = find_death_point(Family.THETA2, a, 0.0)
            assert not dp2.exists_before_full_decay
        return ""

    def acceleration_monotonicity():
        for fam in Family:
            stars = [find_death_point(fam, 0.9, r).p_star
                     for r in (0.0, math.pi / 12, math.pi / 6, R_MAX)]
            assert all(stars[i] >= stars[i + 1] - 1e-9 for i in range(len(stars) - 1))
        return ""

    check("oracle-equivalence", oracle_equivalence)
    check("trace-psd", trace_psd)
    check("kraus-completeness", kraus_completeness)
    check("composition-semigroup", composition)
    check("sign-invariance", sign_invariance)
    check("partner-symmetry-r0", partner_symmetry)
    check("death-range-containment", containment)
    check("boundary-root-consistency", root_consistency)
    check("inertial-dichotomy", inertial_dichotomy)
    check("acceleration-monotonicity", acceleration_monotonicity)
    return results


def cmd_verify() -> int:
    results = _verify_checks()
    width = max(len(name) for name, _, _ in results)
    ok_all = True
    for name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        suffix = f"  {detail}" if detail else ""
        print(f"{name.ljust(width)}  {status}{suffix}")
        ok_all &= ok
    return EXIT_OK if ok_all else EXIT_VERIFY


def _read_config(path: Path) -> dict[str, str]:
    cfg = {}
    for line in path.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"bad config line: {line!r}")
        key, val = line.split("=", 1)
        cfg[key.strip()] = val.strip()
    return cfg


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qesd",
        description="Entanglement decay of accelerated two-qubit states under amplitude damping.")
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="concurrence over an (alpha, r, P) grid")
    sweep.add_argument("--family", default=None,
                       help="theta1, theta2 or both (default both)")
    sweep.add_argument("--alpha", default=None,
                       help="alpha axis: comma list or min:max:count (default 0.1:0.9:5)")
    sweep.add_argument("--r", default=None,
                       help="r axis in radians, 'pi/6' accepted (default 0:pi/4:3)")
    sweep.add_argument("--p", default=None,
                       help="P axis (default 0:1:11)")
    sweep.add_argument("--methods", default=None,
                       help="subset of eigen,xstate,closed (default all)")
    sweep.add_argument("--out", default=None, help="output CSV path (default sweep.csv)")
    sweep.add_argument("--config", default=None, help="key=value config file; flags win")
    sweep.add_argument("--jobs", default=None, help="worker processes (default 1)")

    fig1 = sub.add_parser("fig1", help="concurrence-vs-P curve data, six CSV files")
    fig1.add_argument("--out", default=None, help="output directory (default fig1_data)")
    fig1.add_argument("--jobs", default=None, help=argparse.SUPPRESS)

    fig2 = sub.add_parser("fig2", help="sudden-death boundary surfaces, two CSV files")
    fig2.add_argument("--out", default=None, help="output directory (default fig2_data)")

    sub.add_parser("verify", help="run the invariant battery")
    return parser


_SWEEP_DEFAULTS = {
    "family": "both",
    "alpha": "0.1:0.9:5",
    "r": "0:pi/4:3",
    "p": "0:1:11",
    "methods": "eigen,xstate,closed",
    "out": "sweep.csv",
    "jobs": "1",
}


def _resolve(args: argparse.Namespace, key: str, cfg: dict[str, str]) -> str:
    flag = getattr(args, key, None)
    if flag is not None:
        return flag
    if key in cfg:
        return cfg[key]
    return _SWEEP_DEFAULTS[key]


def _sweep_spec_from_args(args: argparse.Namespace) -> SweepSpec:
    cfg = _read_config(Path(args.config)) if getattr(args, "config", None) else {}
    fam_txt = _resolve(args, "family", cfg).lower()
    if fam_txt == "both":
        families = (Family.THETA1, Family.THETA2)
    else:
        families = (Family(fam_txt),)
    methods = tuple(Method(m.strip()) for m in _resolve(args, "methods", cfg).split(",") if m.strip())
    if not methods:
        raise ValueError("at least one method required")
    alphas = parse_axis(_resolve(args, "alpha", cfg))
    rs = parse_axis(_resolve(args, "r", cfg))
    ps = parse_axis(_resolve(args, "p", cfg))
    for a in alphas:
        if not -1.0 <= a <= 1.0:
            raise ValueError(f"alpha {a} outside [-1, 1]")
    for r in rs:
        if not 0.0 <= r <= R_MAX + 1e-15:
            raise ValueError(f"r {r} outside [0, pi/4]")
    for p in ps:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"p {p} outside [0, 1]")
    return SweepSpec(families=families, alphas=tuple(alphas), rs=tuple(rs), ps=tuple(ps),
                     methods=methods, out=Path(_resolve(args, "out", cfg)),
                     jobs=int(_resolve(args, "jobs", cfg)))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sweep":
            return cmd_sweep(_sweep_spec_from_args(args))
        if args.command == "fig1":
            return cmd_fig1(Path(args.out or "fig1_data"))
        if args.command == "fig2":
            return cmd_fig2(Path(args.out or "fig2_data"))
        if args.command == "verify":
            return cmd_verify()
        parser.error(f"unknown command {args.command!r}")
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
