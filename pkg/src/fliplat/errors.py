"""Exception hierarchy shared across the package.

Every failure mode that callers are expected to branch on gets its own
class; generic misuse raises the usual ValueError/TypeError instead.
"""


class FliplatError(Exception):
    """Base class for all package-specific errors."""


# --- lattice ---

class NotSelfAdjoint(FliplatError):
    """Hopping kernel violates h(-xi) == conj(h(xi))."""


class NonGenerating(FliplatError):
    """Support of the hopping kernel spans a proper sublattice."""


class ZeroOffset(FliplatError):
    """Hopping entry supplied at xi = 0."""


class ZeroVector(FliplatError):
    """A nonzero vector was required."""


class QuadratureNotConverged(FliplatError):
    """Brillouin-zone quadrature did not stabilize under grid refinement."""


# --- markov ---

class OutOfHorizon(FliplatError):
    """Time outside the sampled schedule horizon."""


class NonpositiveRate(FliplatError):
    """Flip rate must be positive."""


# --- simulate ---

class ToleranceNotReached(FliplatError):
    """Polynomial propagator hit its order cap before the tolerance."""


class BoxLeakage(FliplatError):
    """Wave-packet mass in the guard zone exceeded the leakage tolerance."""


class WindowTooShort(FliplatError):
    """Diffusion fit window contains too few sample points."""


class HorizonTooShort(FliplatError):
    """Series horizon too short for the requested exponential average."""


# --- augmented ---

class TruncationMismatch(FliplatError):
    """Vector and operator belong to different truncations."""


class TrivialCell(FliplatError):
    """Operation requires a nontrivial periodicity cell (prod(p) >= 2)."""


# --- spectral ---

class ZeroCoupling(FliplatError):
    """Operation undefined at zero noise coupling."""


class SolverNotConverged(FliplatError):
    """Iterative linear or eigenvalue solver failed to converge."""


class GapCollision(FliplatError):
    """Tracked eigenvalue approached the rest of the spectrum."""


class DegenerateKernel(FliplatError):
    """Required kernel projection vanished on every axis."""


class ValidationFailed(FliplatError):
    """Computed object violated its declared validity tolerances."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


# --- oracle ---

class StateSpaceTooLarge(FliplatError):
    """Enumerated master-equation state space exceeds the memory budget."""


class IntegratorFailed(FliplatError):
    """Adaptive integrator failed to reach the requested accuracy."""


class CheckFailed(FliplatError):
    """A cross-validation check exceeded its tolerance."""

    def __init__(self, message, where=None):
        super().__init__(message)
        self.where = where


# --- cli ---

class ConfigInvalid(FliplatError):
    """Experiment configuration failed validation.

    ``problems`` lists (field_path, message) pairs.
    """

    def __init__(self, problems):
        self.problems = list(problems)
        lines = "; ".join(f"{path}: {msg}" for path, msg in self.problems)
        super().__init__(f"invalid configuration: {lines}")
