"""
residuals.py - ODE residual reports

Each special function here is pinned to the differential equation that
defines it: we sample a polar grid inside the disk, plug the series and its
derivatives into the equation and keep the worst residual.
"""

import logging
from dataclasses import dataclass

import numpy as np

from numerics.errors import DomainError

logger = logging.getLogger(__name__)

# polar grid used by every residual check (radii x angles)
GRID_RADII = 32
GRID_ANGLES = 32


@dataclass(frozen=True)
class OdeResidualReport:
    """worst |ODE residual| seen on a sample grid and where it happened"""
    max_abs_residual: float
    sample_count: int
    worst_z: complex

    def to_dict(self):
        return {
            'max_abs_residual': self.max_abs_residual,
            'sample_count': self.sample_count,
            'worst_z': {'re': self.worst_z.real, 'im': self.worst_z.imag},
        }


def polar_grid(region_r, n_radii=GRID_RADII, n_angles=GRID_ANGLES):
    """points r_k e^{i theta_j} with r_k = region_r k / n_radii, k = 1..n_radii"""
    if not 0.0 < region_r <= 1.0:
        raise DomainError(f"residual region radius must lie in (0, 1], got {region_r}")
    radii = region_r * np.arange(1, n_radii + 1) / n_radii
    thetas = 2.0 * np.pi * np.arange(n_angles) / n_angles
    return (radii[:, None] * np.exp(1j * thetas)[None, :]).ravel()


def residual_report(residuals, zs):
    """reduce residual values on the grid points to an OdeResidualReport"""
    magnitudes = np.abs(np.asarray(residuals))
    worst = int(np.argmax(magnitudes))
    report = OdeResidualReport(float(magnitudes[worst]), int(magnitudes.size), complex(zs[worst]))
    logger.debug(f"residual {report.max_abs_residual:.3g} at z = {report.worst_z:.4g}")
    return report
