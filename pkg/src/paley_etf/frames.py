"""The :class:`Frame` value type."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from .errors import InvalidDimensions

CONSTRUCTIONS = (
    "paley-upper",
    "paley-lower",
    "conference-upper",
    "conference-lower",
    "zauner",
    "drop-one-canonical",
    "conference-etf",
)


@dataclass(frozen=True, eq=False)
class Frame:
    """``n`` vectors in ``C^d``, stored as the columns of a ``d x n`` synthesis matrix.

    ``construction`` is one of :data:`CONSTRUCTIONS` (or ``"custom"``);
    ``field`` is the finite-field descriptor ``{"p", "m", "modulus"}`` when
    one was used and ``parameters`` holds ``dropped_index``,
    ``character_c`` or ``conference_k`` as applicable.

    Unit norm is not enforced here so that damaged frames read from disk can
    still be handed to the verification checks.
    """

    synthesis: np.ndarray
    construction: str = "custom"
    field: dict | None = None
    parameters: dict = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        T = np.array(self.synthesis, dtype=np.complex128)
        if T.ndim != 2 or 0 in T.shape:
            raise InvalidDimensions(f"synthesis matrix must be 2-D and non-empty, got {T.shape}")
        if T.shape[0] > T.shape[1]:
            raise InvalidDimensions(f"d = {T.shape[0]} exceeds n = {T.shape[1]}")
        T.setflags(write=False)
        object.__setattr__(self, "synthesis", T)

    @property
    def d(self) -> int:
        return self.synthesis.shape[0]

    @property
    def n(self) -> int:
        return self.synthesis.shape[1]

    @property
    def vectors(self) -> list[np.ndarray]:
        return [self.synthesis[:, k] for k in range(self.n)]

    def gram(self) -> np.ndarray:
        """``T* T``; entry (j, k) is the inner product of vectors j and k."""
        T = self.synthesis
        return T.conj().T @ T

    def frame_operator(self) -> np.ndarray:
        """``T T*``."""
        T = self.synthesis
        return T @ T.conj().T

    def describe(self) -> dict:
        out = {"construction": self.construction, "n": self.n, "d": self.d}
        if self.field is not None:
            out["field"] = dict(self.field)
        if self.parameters:
            out["parameters"] = dict(self.parameters)
        return out
