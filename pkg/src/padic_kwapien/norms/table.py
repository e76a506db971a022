"""
Polyhedral norms given by a table of functionals.
"""

from __future__ import annotations

from typing import Any, Sequence

import numpy as np
import numpy.typing as npt

from ..errors import InvalidInputError
from ..types import ScalarField
from .base import NormSpec


class TableNorm(NormSpec):
    """||x|| = max_j |<a_j, x>| for a table of functionals a_j.

    The rows are the support values of the unit ball: a_j lie on the dual unit
    sphere. They must span the space, otherwise this is only a seminorm.
    """

    kind = "table"

    def __init__(
        self,
        functionals: Sequence[Sequence[complex]],
        field: ScalarField = ScalarField.COMPLEX,
    ) -> None:
        table = np.atleast_2d(np.asarray(functionals, dtype=np.complex128))
        super().__init__(table.shape[1], field)
        if np.linalg.matrix_rank(table) < self.dim:
            raise InvalidInputError("table functionals do not span the space")
        self.table = table
        self.table.setflags(write=False)

    def _evaluate(self, x: npt.NDArray[Any]) -> npt.NDArray[np.float64]:
        return np.max(np.abs(x @ self.table.T), axis=-1)

    def describe(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "dim": self.dim,
            "table": [[[z.real, z.imag] for z in row] for row in self.table.tolist()],
            "field": self.field.value,
        }
