"""Exact computations in the truncated rings Gamma_n ~ K[x_1..x_r]/I_n."""

__version__ = "0.1.0"
