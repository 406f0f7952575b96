"""Chromatic quasisymmetric functions of natural unit interval orders.

``x_lambda_oracle`` computes e-expansions by brute force; the other modules
implement closed formulas and identities that are checked against it.
"""
from __future__ import annotations

from .oracle import EExpansion, x_lambda_oracle
from .partition import Partition
from .qpoly import QPoly, qfact, qint

__all__ = ["EExpansion", "Partition", "QPoly", "qfact", "qint", "x_lambda_oracle"]
__version__ = "0.1.0"
