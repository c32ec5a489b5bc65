"""ANOVATS package.

The ANOVATS package provides a subsampling-based homogeneity test for short multivariate
time-series panels, the recursive post-hoc clustering procedure built on it, the simulation
generators and Monte Carlo harness used to study its size and power, and the preprocessing
pipeline used to prepare survey panels for testing.
"""

__all__ = ["__app_name__", "__version__"]
__app_name__ = "anovats"
__version__ = "0.3.0"
