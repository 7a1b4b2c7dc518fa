"""Tabulated data behind the six plots.  Values always come from the
library's closed-form functions."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from . import observables as obs
from .entanglement import entropy_from_concurrence

FIG_ALPHA = (1 + 1j) / math.sqrt(2)


@dataclass(frozen=True)
class FigureSpec:
    id: int
    n_c: int = 101
    n_phi: int = 101
    n_theta: int = 181
    alpha: complex = FIG_ALPHA

    def __post_init__(self):
        if self.id not in range(1, 7):
            raise ValueError(f"figure id must be 1..6, got {self.id}")
        if min(self.n_c, self.n_phi, self.n_theta) < 2:
            raise ValueError("grid resolutions must be >= 2")


@dataclass(frozen=True)
class Table:
    columns: tuple[str, ...]
    rows: list[tuple[float, ...]]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for row in self.rows:
            w.writerow(["%.17g" % v for v in row])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"columns": list(self.columns), "rows": [list(r) for r in self.rows]}) + "\n"


def _grid(spec: FigureSpec):
    cs = np.linspace(0.0, 1.0, spec.n_c)
    phis = np.linspace(0.0, 2 * math.pi, spec.n_phi)
    for c in cs:
        for phi in phis:
            yield float(c), float(phi)


def figure_1(spec: FigureSpec) -> Table:
    rows = []
    for theta in np.linspace(0.0, math.pi, spec.n_theta):
        c_num = math.sin(theta)
        c_ref = math.sin(theta / 2) ** 2
        rows.append((float(theta), c_num, c_ref, entropy_from_concurrence(c_num), entropy_from_concurrence(c_ref)))
    return Table(
        ("theta", "concurrence_supernumber", "concurrence_superqubit",
         "entropy_supernumber", "entropy_superqubit"),
        rows,
    )


def figure_2(spec: FigureSpec) -> Table:
    rows = [(c, phi, obs.mean_closed_form(spec.alpha, c, phi)[0]) for c, phi in _grid(spec)]
    return Table(("concurrence", "phi", "mean_x"), rows)


def figure_3(spec: FigureSpec) -> Table:
    rows = [(c, phi, obs.mean_closed_form(spec.alpha, c, phi)[1]) for c, phi in _grid(spec)]
    return Table(("concurrence", "phi", "mean_p"), rows)


def figure_4(spec: FigureSpec) -> Table:
    rows = [(c, phi, obs.uncertainty_product(c, phi)) for c, phi in _grid(spec)]
    return Table(("concurrence", "phi", "uncertainty_product"), rows)


def figure_5(spec: FigureSpec) -> Table:
    rows = [(c, phi, obs.dispersion_closed_form(c, phi)[0]) for c, phi in _grid(spec)]
    return Table(("concurrence", "phi", "var_x"), rows)


def figure_6(spec: FigureSpec) -> Table:
    rows = []
    for phi in (0.0, math.pi):
        for c in np.linspace(0.0, 1.0, spec.n_c):
            vx, vp = obs.dispersion_closed_form(float(c), phi)
            rows.append((phi, float(c), vx, vp))
    return Table(("phi", "concurrence", "var_x", "var_p"), rows)


FIGURES = {1: figure_1, 2: figure_2, 3: figure_3, 4: figure_4, 5: figure_5, 6: figure_6}


def figure_table(spec: FigureSpec) -> Table:
    return FIGURES[spec.id](spec)
