"""
Radix-p Cooley-Tukey over Z/p^K.

Decimation in time: n = p * n1 + r splits a size-P transform into p transforms
of size P/p on the residue classes r, recombined with the twiddles
omega_P^(r * m). All sub-problems of one level run as a single batch, so the
recursion depth is K and the work is O(P * K * p).
"""

import numpy as np

from ...types import ComplexArray
from ..plan import TransformPlan
from .base import DFTBackend


def _small_dft(values: ComplexArray, roots: ComplexArray) -> ComplexArray:
    n = np.arange(roots.shape[0])
    return np.einsum("mn,bnd->bmd", roots[np.outer(n, n) % roots.shape[0]], values)


def _cooley_tukey(values: ComplexArray, p: int, roots: ComplexArray) -> ComplexArray:
    batch, size, dim = values.shape
    if size == 1:
        return values.copy()
    if size == p:
        return _small_dft(values, roots)
    sub_size = size // p
    residues = values.reshape(batch, sub_size, p, dim).transpose(0, 2, 1, 3)
    sub = _cooley_tukey(residues.reshape(batch * p, sub_size, dim), p, roots[::p])
    sub = sub.reshape(batch, p, sub_size, dim)
    m = np.arange(size)
    twiddle = roots[np.outer(np.arange(p), m) % size]
    return np.einsum("rm,brmd->bmd", twiddle, sub[:, :, m % sub_size, :])


class RadixBackend(DFTBackend):
    name = "radix"

    def apply(self, plan: TransformPlan, values: ComplexArray) -> ComplexArray:
        return _cooley_tukey(np.asarray(values, dtype=np.complex128), plan.p, plan.roots)
