"""
SVG pictures of real plane curves.


Copyright (c) 2026 Proton AG

This file is part of Proton Stubborn Cert.

Proton Stubborn Cert is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

Proton Stubborn Cert is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with Proton Stubborn Cert.  If not, see <https://www.gnu.org/licenses/>.


Pictures are drawn in the affine chart z = 1 by tracing sign changes of each
form on a regular grid at double precision. They are presentation only and
never used as evidence.
"""
import logging
from typing import Sequence, Tuple

import matplotlib
import numpy as np

from proton.stubborn.poly.mpoly import MPoly

matplotlib.use("Agg")
from matplotlib import pyplot  # noqa: E402 pylint: disable=wrong-import-position

logger = logging.getLogger(__name__)

DEFAULT_RESOLUTION = 400
DEFAULT_BOX = (-3.0, 3.0, -3.0, 3.0)
COLORS = ("tab:blue", "tab:red", "tab:green", "tab:orange", "tab:purple")


def grid_values(form: MPoly, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Values of a ternary form on the grid xs × ys × {1}."""
    exponents, coefficients = form.numeric_arrays()
    grid_x, grid_y = np.meshgrid(xs, ys)
    values = np.zeros_like(grid_x)
    for (i, j, _), coefficient in zip(exponents, coefficients):
        values += coefficient * grid_x ** i * grid_y ** j
    return values


def plot_curves(forms: Sequence[MPoly], path: str, labels: Sequence[str] = (),
                resolution: int = DEFAULT_RESOLUTION,
                box: Tuple[float, float, float, float] = DEFAULT_BOX):
    """Writes an SVG with the zero set of every form; identical inputs give identical files."""
    if resolution < 2:
        raise ValueError("The resolution must be at least 2")
    xs = np.linspace(box[0], box[1], resolution)
    ys = np.linspace(box[2], box[3], resolution)

    with matplotlib.rc_context({"svg.hashsalt": "stubborn-cert", "svg.fonttype": "none"}):
        figure, axes = pyplot.subplots(figsize=(6, 6))
        for index, form in enumerate(forms):
            values = grid_values(form, xs, ys)
            color = COLORS[index % len(COLORS)]
            axes.contour(xs, ys, values, levels=[0.0], colors=[color], linewidths=1.2)
            if index < len(labels):
                axes.plot([], [], color=color, label=labels[index])
        if labels:
            axes.legend(loc="upper right", fontsize="small")
        axes.set_aspect("equal")
        axes.set_xlim(box[0], box[1])
        axes.set_ylim(box[2], box[3])
        axes.set_xlabel("x")
        axes.set_ylabel("y")
        figure.savefig(path, format="svg", metadata={"Date": None})
        pyplot.close(figure)
    logger.info(f"Plotted {len(forms)} curves to {path}")
