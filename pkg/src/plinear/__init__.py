"""
plinear - p-linear schemes for constant-term sequences and rational-function
coefficients modulo prime powers.
"""

__version__ = "0.1.0"
