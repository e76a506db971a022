from .base import DFTBackend
from .naive import NaiveBackend
from .numpy_fft import NumpyBackend
from .radix import RadixBackend

BACKENDS: dict[str, type[DFTBackend]] = {
    NaiveBackend.name: NaiveBackend,
    RadixBackend.name: RadixBackend,
    NumpyBackend.name: NumpyBackend,
}

__all__ = ["BACKENDS", "DFTBackend", "NaiveBackend", "NumpyBackend", "RadixBackend"]
