"""Command-line front end.

    supercoherent figure --id N [--out PATH|-] [--format csv|json]
    supercoherent verify [--fock-dim D] [--tol NAME=VAL]... [--out PATH|-]
    supercoherent state --label L --alpha RE,IM (--concurrence C | --theta T) --phi PHI
    supercoherent golden --n-max N [--format csv|json]

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 truncation
error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

from . import golden, orthogonality
from .entanglement import concurrence_gram, concurrence_minors, entropy_bits
from .errors import FibonacciOverflow, NoOrthogonalStates, SupercoherentError, TruncationError, UndefinedQuantity
from .figures import FigureSpec, Table, figure_table
from .observables import mandel_q, quadrature_stats
from .superstate import (
    BellLabel,
    concurrence_from_theta,
    eigen_residual,
    partner_annihilator,
    super_annihilator,
    super_coherent,
)
from .tolerances import DEFAULTS
from .verification import run_verification

log = logging.getLogger("supercoherent")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TRUNCATION, EXIT_IO = 0, 1, 2, 3, 4
OUTPUT_DIR_ENV = "SUPERCOHERENT_OUTPUT_DIR"
MIN_FOCK_DIM = 32


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    fock_dim: int = 160
    tolerances: dict = field(default_factory=lambda: dict(DEFAULTS))
    output_format: str = "csv"
    output_dir: Path = field(default_factory=lambda: Path(os.environ.get(OUTPUT_DIR_ENV, ".")))
    n_c: int = 101
    n_phi: int = 101
    n_theta: int = 181

    def validate(self, min_dim: int = MIN_FOCK_DIM) -> "RunConfig":
        if self.fock_dim < min_dim:
            raise UsageError(f"fock_dim must be >= {min_dim}, got {self.fock_dim}")
        for name, val in self.tolerances.items():
            if name not in DEFAULTS:
                raise UsageError(f"unknown tolerance {name!r}; known: {', '.join(DEFAULTS)}")
            if not val > 0:
                raise UsageError(f"tolerance {name} must be positive")
        if self.output_format not in ("csv", "json"):
            raise UsageError(f"format must be csv or json, got {self.output_format!r}")
        if min(self.n_c, self.n_phi, self.n_theta) < 2:
            raise UsageError("grid resolutions must be >= 2")
        return self


def _parse_tol(item: str) -> tuple[str, float]:
    name, sep, val = item.partition("=")
    if not sep:
        raise UsageError(f"expected NAME=VALUE, got {item!r}")
    try:
        return name.strip(), float(val)
    except ValueError:
        raise UsageError(f"tolerance {name!r} is not a number: {val!r}") from None


def read_config_file(path: Path) -> dict:
    """``key = value`` lines; ``#`` starts a comment; ``tol.NAME`` sets a tolerance."""
    out: dict = {"tolerances": {}}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise OSError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        try:
            if key.startswith("tol."):
                out["tolerances"][key[4:]] = float(val)
            elif key in ("fock_dim", "n_c", "n_phi", "n_theta"):
                out[key] = int(val)
            elif key in ("format", "output_format"):
                out["output_format"] = val
            elif key == "output_dir":
                out["output_dir"] = Path(val)
            else:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        except ValueError:
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {val!r}") from None
    return out


def build_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    layers = []
    if getattr(args, "config", None):
        layers.append(read_config_file(args.config))
    flags: dict = {"tolerances": dict(_parse_tol(t) for t in getattr(args, "tol", None) or [])}
    for key in ("fock_dim", "n_c", "n_phi", "n_theta"):
        if getattr(args, key, None) is not None:
            flags[key] = getattr(args, key)
    if getattr(args, "format", None):
        flags["output_format"] = args.format
    layers.append(flags)
    for layer in layers:
        tols = {**cfg.tolerances, **layer.pop("tolerances", {})}
        cfg = replace(cfg, tolerances=tols, **layer)
    return cfg


def _write(text: str, out: str | None, default_name: str | None, cfg: RunConfig) -> str:
    if out == "-" or (out is None and default_name is None):
        sys.stdout.write(text)
        return "-"
    path = Path(out) if out is not None else cfg.output_dir / default_name
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    return str(path)


def _render(table: Table, fmt: str) -> str:
    return table.to_csv() if fmt == "csv" else table.to_json()


# -- subcommands ---------------------------------------------------------------


def cmd_figure(args, cfg: RunConfig) -> int:
    try:
        spec = FigureSpec(args.id, cfg.n_c, cfg.n_phi, cfg.n_theta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    default = f"figure_{args.id}.{cfg.output_format}" if OUTPUT_DIR_ENV in os.environ else None
    dest = _write(_render(figure_table(spec), cfg.output_format), args.out, default, cfg)
    log.info("figure %d written to %s", args.id, dest)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    report = run_verification(cfg.fock_dim, cfg.tolerances)
    payload = json.dumps(report.to_dict(), indent=2) + "\n"
    dest = _write(payload, args.out, "verify_report.json", cfg)
    for c in report.checks:
        mark = "PASS" if c.passed else "FAIL"
        flag = " [flagged]" if c.flagged else ""
        print(f"{mark} {c.name}: residual={c.residual:.3e} tol={c.tolerance:.1e}{flag}", file=sys.stderr)
    print(f"report: {dest}", file=sys.stderr)
    if report.truncation_failures:
        return EXIT_TRUNCATION
    return EXIT_OK if report.passed else EXIT_FAIL


def _parse_alpha(text: str) -> complex:
    try:
        re_s, _, im_s = text.partition(",")
        return complex(float(re_s), float(im_s or 0.0))
    except ValueError:
        raise UsageError(f"--alpha expects RE,IM, got {text!r}") from None


def state_report(label: BellLabel, alpha: complex, c: float, phi: float, dim: int) -> dict:
    s = super_coherent(label, alpha, c, phi, dim)
    st = quadrature_stats(s)
    try:
        q = mandel_q(s)
    except UndefinedQuantity:
        q = None
    op = super_annihilator(partner_annihilator(label), dim)
    try:
        pair = orthogonality.orthogonal_antipodal_pair(alpha, c, phi, label=label, dim=dim)
        partners = [[b.real, b.imag] for b in pair.members]
    except (NoOrthogonalStates, TruncationError):
        partners = None
    return {
        "label": label.value,
        "alpha": [alpha.real, alpha.imag],
        "concurrence_input": c,
        "phi": phi,
        "fock_dim": dim,
        "concurrence_gram": concurrence_gram(s),
        "concurrence_minors": concurrence_minors(s),
        "entropy_bits": entropy_bits(s),
        "mean_x": st.mean_x,
        "mean_p": st.mean_p,
        "var_x": st.var_x,
        "var_p": st.var_p,
        "uncertainty_product": st.product,
        "mandel_q": q,
        "partner_annihilator": partner_annihilator(label).value,
        "eigen_residual": eigen_residual(op, s, alpha, alpha),
        "orthogonal_partners": partners,
    }


def cmd_state(args, cfg: RunConfig) -> int:
    alpha = _parse_alpha(args.alpha)
    try:
        c = args.concurrence if args.concurrence is not None else concurrence_from_theta(args.theta)
        report = state_report(BellLabel(args.label), alpha, c, args.phi, cfg.fock_dim)
    except TruncationError:
        raise
    except SupercoherentError as exc:
        raise UsageError(str(exc)) from None
    _write(json.dumps(report, indent=2) + "\n", args.out, None, cfg)
    return EXIT_OK


def golden_table(n_max: int) -> Table:
    if not 1 <= n_max <= golden.MAX_N:
        raise FibonacciOverflow(f"n_max must lie in 1..{golden.MAX_N}, got {n_max}")
    lim = golden.golden_limits(max(n_max, 10))
    rows = []
    for n in range(1, n_max + 1):
        r = golden.concurrence_sequence(n)
        rows.append((n, r.c_n, r.uncertainty_n, r.ratio_n, lim.ratio_error[n - 1],
                     lim.concurrence_error[n - 1], lim.uncertainty_error[n - 1]))
    return Table(("n", "c_n", "uncertainty_n", "ratio_n", "ratio_error",
                  "concurrence_error", "uncertainty_error"), rows)


def cmd_golden(args, cfg: RunConfig) -> int:
    try:
        table = golden_table(args.n_max)
    except FibonacciOverflow as exc:
        raise UsageError(str(exc)) from None
    _write(_render(table, cfg.output_format), args.out, None, cfg)
    return EXIT_OK


# -- entry point -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="supercoherent", description=__doc__.splitlines()[0])
    p.add_argument("--config", type=Path, help="key=value config file (flags override it)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("figure", help="emit figure data")
    f.add_argument("--id", type=int, required=True, choices=range(1, 7))
    f.add_argument("--out", help="output path, '-' for stdout")
    f.add_argument("--format", choices=("csv", "json"))
    f.add_argument("--n-c", dest="n_c", type=int)
    f.add_argument("--n-phi", dest="n_phi", type=int)
    f.add_argument("--n-theta", dest="n_theta", type=int)
    f.set_defaults(func=cmd_figure)

    v = sub.add_parser("verify", help="run the identity checks")
    v.add_argument("--fock-dim", dest="fock_dim", type=int)
    v.add_argument("--tol", action="append", metavar="NAME=VAL")
    v.add_argument("--out", help="report path, '-' for stdout")
    v.set_defaults(func=cmd_verify, min_dim=2)

    s = sub.add_parser("state", help="inspect one super-coherent state")
    s.add_argument("--label", required=True, choices=[b.value for b in BellLabel])
    s.add_argument("--alpha", required=True, help="RE,IM")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--concurrence", type=float)
    g.add_argument("--theta", type=float)
    s.add_argument("--phi", type=float, required=True)
    s.add_argument("--fock-dim", dest="fock_dim", type=int)
    s.add_argument("--out", help="output path, '-' for stdout")
    s.set_defaults(func=cmd_state)

    gd = sub.add_parser("golden", help="Fibonacci uncertainty sequence")
    gd.add_argument("--n-max", dest="n_max", type=int, required=True)
    gd.add_argument("--format", choices=("csv", "json"))
    gd.add_argument("--out", help="output path, '-' for stdout")
    gd.set_defaults(func=cmd_golden)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        cfg = build_config(args).validate(getattr(args, "min_dim", MIN_FOCK_DIM))
        return args.func(args, cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TruncationError as exc:
        print(f"{parser.prog}: truncation error: {exc}", file=sys.stderr)
        return EXIT_TRUNCATION
    except OSError as exc:
        print(f"{parser.prog}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
