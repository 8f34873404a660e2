"""Minimum-cost two-layer networks resistant to link-removal attacks."""

__version__ = "0.1.0"

from .bounds import curve, lower_bound, lp_oracle
from .designer import DesignParams, DesignResult, StrategyKind, design
from .graph import TwoLayerNetwork, contract, is_connected, min_cut_nonprotected
from .verifier import is_resistant_bruteforce, is_resistant_mincut

__all__ = [
    "DesignParams",
    "DesignResult",
    "StrategyKind",
    "TwoLayerNetwork",
    "contract",
    "curve",
    "design",
    "is_connected",
    "is_resistant_bruteforce",
    "is_resistant_mincut",
    "lower_bound",
    "lp_oracle",
    "min_cut_nonprotected",
]
