"""
padic-kwapien: Fourier analysis of vector-valued functions over the p-adic numbers.
"""

__version__ = "0.1.0"
