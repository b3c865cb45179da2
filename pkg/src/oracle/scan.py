"""
Equilaterality scan over a grid of base triangles
"""

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
from tqdm import tqdm

from src.morley.params import CevianParams
from src.oracle.geometry import construct_scene, defect, side_lengths

logger = logging.getLogger(__name__)

CSV_HEADER = "alpha,beta,GI,IJ,JG,defect"


@dataclass
class ScanReport:
    """Per-cell sides and the worst equilaterality defect"""

    grid: int
    params: CevianParams
    rows: np.ndarray = field(repr=False)
    max_defect: float
    worst_cell: Optional[Tuple[float, float]]

    @property
    def cells(self) -> int:
        return int(self.rows.shape[0])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "grid": self.grid,
            "cells": self.cells,
            "params": self.params.describe(),
            "max_defect": self.max_defect,
            "worst_cell": list(self.worst_cell) if self.worst_cell else None,
        }

    def write_csv(self, path: Union[str, Path]) -> Path:
        """Write alpha, beta, GI, IJ, JG, defect per cell"""
        target = Path(path)
        np.savetxt(target, self.rows, delimiter=",", header=CSV_HEADER, comments="", fmt="%.17g")
        logger.info(f"Wrote {self.cells} scan rows to {target}")
        return target


def grid_angles(grid: int) -> List[Tuple[float, float]]:
    """
    alpha_i = pi (i+1)/(R+2), beta_j = pi (j+1)/(R+2) with i + j < R

    Raises:
        ValueError: If the resolution is below 1
    """
    if grid < 1:
        raise ValueError(f"grid resolution must be at least 1, got {grid}")
    step = math.pi / (grid + 2)
    return [((i + 1) * step, (j + 1) * step) for i in range(grid) for j in range(grid - i)]


def equilateral_scan(
    grid: int,
    params: CevianParams,
    csv_path: Optional[Union[str, Path]] = None,
    progress: bool = False,
) -> ScanReport:
    """
    Largest side difference of GIJ over the admissible angle grid

    Raises:
        ValueError: Inadmissible parameters or a bad grid
    """
    params.require_admissible()
    cells = grid_angles(grid)
    rows = np.empty((len(cells), 6))
    for k, (alpha, beta) in enumerate(tqdm(cells, desc="scan", disable=not progress)):
        sides = side_lengths(construct_scene(alpha, beta, params))
        rows[k] = (alpha, beta, *sides, defect(sides))
    worst = int(np.argmax(rows[:, 5]))
    report = ScanReport(
        grid=grid,
        params=params,
        rows=rows,
        max_defect=float(rows[worst, 5]),
        worst_cell=(float(rows[worst, 0]), float(rows[worst, 1])),
    )
    logger.info(f"Scan {grid}x{grid} ({report.cells} cells): max defect {report.max_defect:.3e}")
    if csv_path is not None:
        report.write_csv(csv_path)
    return report
