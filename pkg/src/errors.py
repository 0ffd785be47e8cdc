"""Exceptions raised across the toric graph-state toolkit."""


class ToricGraphError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(ToricGraphError, ValueError):
    """Operands have incompatible dimensions."""


class NotInvertibleError(ToricGraphError, ValueError):
    """A GF(2) matrix that must be invertible is singular."""


class PauliParseError(ToricGraphError, ValueError):
    """A Pauli label contains a letter other than I, X, Y, Z."""


class LatticeIndexError(ToricGraphError, IndexError):
    """A lattice coordinate, qubit index or vertex is out of range."""


class SizeError(ToricGraphError, ValueError):
    """A size parameter is below its minimum or above a feasibility cap."""


class PipelineInvariantError(ToricGraphError, RuntimeError):
    """An intermediate result of the standard-form reduction is not as predicted."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


class DecompositionError(ToricGraphError, RuntimeError):
    """The star/half decomposition does not reproduce the adjacency matrix."""


class CodewordError(ToricGraphError, ValueError):
    """Codewords or input states violate a precondition (orthonormality, subsets)."""


class LayerConflictError(ToricGraphError, ValueError):
    """Two gates in one circuit layer touch the same qubit."""


class NormError(ToricGraphError, RuntimeError):
    """A simulated state lost its norm beyond tolerance."""
