"""Command-line front end: scans, factor runs, verification suites, and
deterministic CSV/JSON emission.

Exit codes: 0 success, 1 configuration error, 2 verification failure.
Relative output paths are resolved against $GAUSSFACTOR_OUTDIR when set.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import factorizer, nslit, verify
from .gausssums import (
    ContinuousSpec,
    WeightProfile,
    monte_carlo_sum,
    reciprocate_complete,
)

OUTDIR_ENV = "GAUSSFACTOR_OUTDIR"


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # config errors exit 1, not argparse's 2
        raise ConfigError(message)


@dataclass
class RunConfig:
    command: str
    n_target: int | None = None
    scheme: str = "continuous"
    delta_m: float = 10.0
    m_terms: int | None = None
    a_param: float = 1.0
    b_param: float | None = None
    xi_min: float = 0.0
    xi_max: float = 0.0
    step: float = 0.01
    l_min: int = 2
    l_max: int | None = None
    l_talbot: int | None = None
    peak_factor: float = factorizer.DEFAULT_PEAK_FACTOR
    zero_factor: float = factorizer.DEFAULT_ZERO_FACTOR
    threshold: float = factorizer.DEFAULT_GHOST_THRESHOLD
    spread_threshold: float = nslit.DEFAULT_SPREAD_THRESHOLD
    seed: int = 0
    samples: int | None = None
    workers: int = 1
    suites: list[str] = field(default_factory=lambda: ["all"])
    output_path: str | None = None
    format: str = "csv"

    def weight_profile(self) -> WeightProfile:
        if self.delta_m <= 0:
            raise ConfigError("--dm must be positive")
        m_max = self.m_terms if self.m_terms is not None else math.ceil(4 * self.delta_m)
        if m_max < 1:
            raise ConfigError("--m-terms must be >= 1")
        return WeightProfile(delta_m=self.delta_m, m_max=m_max)


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output_path is None:
        sys.stdout.write(text)
        return
    path = Path(cfg.output_path)
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir and not path.is_absolute():
        path = Path(outdir) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(text.encode())


def _csv_series(xis, values) -> str:
    lines = ["xi,re,im,abs2"]
    for x, v in zip(xis, values):
        lines.append(
            f"{x:.12g},{v.real:.12g},{v.imag:.12g},{abs(v) ** 2:.12g}"
        )
    return "\n".join(lines) + "\n"


def _json_series(series: factorizer.ScanSeries) -> str:
    doc = {
        "n": series.n_label,
        "unit_c": series.unit_c,
        "samples": [
            {"xi": float(x), "re": v.real, "im": v.imag, "abs2": abs(v) ** 2}
            for x, v in zip(series.xis, series.values)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def _report_text(cfg: RunConfig, report: factorizer.FactorReport) -> str:
    if cfg.format == "json":
        return json.dumps(report.to_json_dict(), indent=2) + "\n"
    lines = ["l,measured,predicted,class"]
    for c in sorted(report.candidates):
        lines.append(f"{c.l},{c.measured:.12g},{c.predicted:.12g},{c.classification.value}")
    return "\n".join(lines) + "\n"


def _cmd_scan(cfg: RunConfig) -> int:
    if cfg.b_param is None:
        if cfg.n_target is None:
            raise ConfigError("scan needs --n or --b")
        cfg.b_param = float(cfg.n_target)
    if cfg.xi_max <= cfg.xi_min:
        raise ConfigError("need --xi-max > --xi-min")
    spec = ContinuousSpec(a_param=cfg.a_param, b_param=cfg.b_param)
    series = factorizer.scan_series(
        spec,
        cfg.weight_profile(),
        cfg.xi_min,
        cfg.xi_max,
        cfg.step,
        n_label=cfg.n_target or round(cfg.b_param),
        workers=cfg.workers,
    )
    _emit(cfg, _csv_series(series.xis, series.values) if cfg.format == "csv" else _json_series(series))
    return 0


def _cmd_factor(cfg: RunConfig) -> int:
    if cfg.n_target is None:
        raise ConfigError("factor needs --n")
    n = cfg.n_target
    if cfg.scheme == "continuous":
        report = factorizer.factor_scan_continuous(
            n, cfg.weight_profile(), grid_step=cfg.step, peak_factor=cfg.peak_factor
        )
    elif cfg.scheme == "even":
        report = factorizer.factor_scan_even(
            n,
            cfg.weight_profile(),
            grid_step=cfg.step,
            peak_factor=cfg.peak_factor,
            zero_factor=cfg.zero_factor,
        )
    elif cfg.scheme == "lines":
        report = factorizer.factor_lines_discrete(n, cfg.weight_profile())
    elif cfg.scheme == "reciprocate":
        report = factorizer.factor_reciprocate(n, cfg.l_max or math.isqrt(n))
    elif cfg.scheme == "truncated":
        if cfg.m_terms is None:
            raise ConfigError("truncated scheme needs --m-terms")
        report = factorizer.factor_truncated(
            n, cfg.l_max or math.isqrt(n), cfg.m_terms, cfg.threshold
        )
    else:
        raise ConfigError(f"unknown scheme {cfg.scheme!r}")
    _emit(cfg, _report_text(cfg, report))
    return 0


def _cmd_lines(cfg: RunConfig) -> int:
    if cfg.n_target is None:
        raise ConfigError("lines needs --n")
    report = factorizer.factor_lines_discrete(cfg.n_target, cfg.weight_profile())
    _emit(cfg, _report_text(cfg, report))
    return 0


def _cmd_reciprocate(cfg: RunConfig) -> int:
    if cfg.n_target is None:
        raise ConfigError("reciprocate needs --n")
    l_max = cfg.l_max or math.isqrt(cfg.n_target)
    ls = np.arange(1, l_max + 1)
    if cfg.samples is not None:
        values = np.array(
            [
                monte_carlo_sum(cfg.n_target, int(l), min(cfg.samples, int(l)), cfg.seed)
                for l in ls
            ]
        )
    else:
        values = np.array([reciprocate_complete(cfg.n_target, int(l)) for l in ls])
    if cfg.format == "json":
        doc = {
            "n": cfg.n_target,
            "samples": [
                {"l": int(l), "re": v.real, "im": v.imag, "abs": abs(v)}
                for l, v in zip(ls, values)
            ],
        }
        _emit(cfg, json.dumps(doc, indent=2) + "\n")
    else:
        _emit(cfg, _csv_series(ls.astype(float), values))
    return 0


def _cmd_nslit(cfg: RunConfig) -> int:
    if cfg.n_target is None:
        raise ConfigError("nslit needs --n")
    if cfg.l_talbot is not None:
        if cfg.xi_max <= cfg.xi_min:
            raise ConfigError("nslit pattern needs --xi-max > --xi-min")
        count = int(math.floor((cfg.xi_max - cfg.xi_min) / cfg.step + 1e-9)) + 1
        xis = cfg.xi_min + cfg.step * np.arange(count)
        c = nslit.NSlitConfig(cfg.n_target, cfg.l_talbot, tuple(xis))
        values = np.array([nslit.green_sum(float(x), c) for x in xis])
        _emit(cfg, _csv_series(xis, values))
        return 0
    rows = nslit.nslit_factor_test(
        cfg.n_target, cfg.l_max or math.isqrt(cfg.n_target), cfg.spread_threshold
    )
    doc = {
        "n": cfg.n_target,
        "rows": [
            {"l": r.l, "flag": r.is_factor_flag, "spread": r.relative_spread, "divides": r.divides}
            for r in rows
        ],
        "factors": [r.l for r in rows if r.is_factor_flag and r.divides],
    }
    _emit(cfg, json.dumps(doc, indent=2) + "\n")
    return 0


def _cmd_ghost(cfg: RunConfig) -> int:
    if cfg.n_target is None or cfg.m_terms is None:
        raise ConfigError("ghost needs --n and --m-terms")
    census = factorizer.ghost_census(
        cfg.n_target, cfg.m_terms, cfg.threshold, cfg.l_min, cfg.l_max
    )
    doc = {
        "n": cfg.n_target,
        "m_terms": cfg.m_terms,
        "threshold": cfg.threshold,
        "ghosts": census.ghosts,
        "count": census.count,
    }
    _emit(cfg, json.dumps(doc, indent=2) + "\n")
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    try:
        results = verify.run(cfg.suites)
    except KeyError as exc:
        raise ConfigError(str(exc)) from exc
    all_ok = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.name:14s} {status}  ({r.seconds:.2f}s)  {r.detail}")
        all_ok &= r.passed
    return 0 if all_ok else 2


def build_parser() -> _Parser:
    p = _Parser(prog="gaussfactor", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *, weights=False, grid=False, lrange=False, out=True):
        sp.add_argument("--n", dest="n_target", type=int)
        if weights:
            sp.add_argument("--dm", dest="delta_m", type=float, default=10.0)
            sp.add_argument("--m-terms", dest="m_terms", type=int, default=None,
                            help="truncation M (default ceil(4*dm))")
        if grid:
            sp.add_argument("--xi-min", type=float, default=0.0)
            sp.add_argument("--xi-max", type=float, default=0.0)
            sp.add_argument("--step", type=float, default=0.01)
            sp.add_argument("--workers", type=int, default=1)
        if lrange:
            sp.add_argument("--l-min", type=int, default=2)
            sp.add_argument("--l-max", type=int, default=None)
        if out:
            sp.add_argument("--output", dest="output_path", default=None)
            sp.add_argument("--format", choices=("csv", "json"), default="csv")

    sp = sub.add_parser("scan", help="continuous-sum scan over a xi grid")
    common(sp, weights=True, grid=True)
    sp.add_argument("--a", dest="a_param", type=float, default=1.0)
    sp.add_argument("--b", dest="b_param", type=float, default=None)

    sp = sub.add_parser("factor", help="run a factor-extraction scheme")
    common(sp, weights=True, grid=True, lrange=True)
    sp.add_argument("--scheme", choices=("continuous", "even", "lines", "reciprocate", "truncated"),
                    default="continuous")
    sp.add_argument("--peak-factor", type=float, default=factorizer.DEFAULT_PEAK_FACTOR)
    sp.add_argument("--zero-factor", type=float, default=factorizer.DEFAULT_ZERO_FACTOR)
    sp.add_argument("--threshold", type=float, default=factorizer.DEFAULT_GHOST_THRESHOLD)

    sp = sub.add_parser("lines", help="discrete |S_N(l)|^2 line report")
    common(sp, weights=True)

    sp = sub.add_parser("reciprocate", help="complete reciprocate series")
    common(sp, lrange=True)
    sp.add_argument("--samples", type=int, default=None,
                    help="Monte-Carlo term count (default: complete sum)")
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("nslit", help="N-slit pattern or factor sweep")
    common(sp, grid=True, lrange=True)
    sp.add_argument("--l", dest="l_talbot", type=int, default=None,
                    help="emit the intensity pattern at this Talbot distance")
    sp.add_argument("--spread-threshold", type=float, default=nslit.DEFAULT_SPREAD_THRESHOLD)

    sp = sub.add_parser("ghost", help="ghost-factor census of the truncated sum")
    common(sp, lrange=True)
    sp.add_argument("--m-terms", dest="m_terms", type=int, required=True)
    sp.add_argument("--threshold", type=float, default=factorizer.DEFAULT_GHOST_THRESHOLD)

    sp = sub.add_parser("verify", help="run the named verification suites")
    sp.add_argument("--suite", dest="suites", nargs="+", default=["all"],
                    choices=sorted(verify.SUITES) + ["all"])
    return p


_COMMANDS = {
    "scan": _cmd_scan,
    "factor": _cmd_factor,
    "lines": _cmd_lines,
    "reciprocate": _cmd_reciprocate,
    "nslit": _cmd_nslit,
    "ghost": _cmd_ghost,
    "verify": _cmd_verify,
}


def run(cfg: RunConfig) -> int:
    """Execute a configured command; deterministic for fixed config and seed."""
    if cfg.command not in _COMMANDS:
        raise ConfigError(f"unknown command {cfg.command!r}")
    return _COMMANDS[cfg.command](cfg)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        return run(RunConfig(**vars(ns)))
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
