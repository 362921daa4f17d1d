"""Quantum-state data model: pure states, density matrices, rank-2 mixtures.

Basis convention: a bipartite vector is stored row-major over |ij>, with i the
A-side index, so ``amplitudes.reshape(d1, d2)[i, j]`` is the coefficient of
|i>|j>.  Pure states store normalized amplitudes with the subnormalization
weight kept separately; the subnormalized vector sqrt(weight) * amplitudes is
reconstructed on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    InvalidEnsemble,
    InvalidState,
    NotHermitian,
    NotPSD,
    ShapeMismatch,
    StateFileError,
    WrongShape,
)
from .tolerances import (
    DIMENSION_CAP,
    HERMITICITY_ATOL,
    INDEPENDENCE_MIN_GRAM,
    NORM_ATOL,
    PSD_EIG_FLOOR,
    TRACE_ATOL,
    WEIGHT_SUM_ATOL,
)

# sigma_y (x) sigma_y in the |00>,|01>,|10>,|11> basis: the spin-flip matrix
SIGMA_Y2 = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ],
    dtype=np.complex128,
)


@dataclass(frozen=True)
class BipartiteShape:
    """Dimensions (d1, d2) of the two subsystems.

    The total dimension is capped at ``tolerances.DIMENSION_CAP`` to keep
    every routine in its verified desk-scale regime.
    """

    d1: int
    d2: int

    def __post_init__(self):
        if self.d1 < 2 or self.d2 < 2:
            raise WrongShape(f"subsystem dimensions must be >= 2, got {self.d1}x{self.d2}")
        if self.d1 * self.d2 > DIMENSION_CAP:
            raise WrongShape(
                f"total dimension {self.d1 * self.d2} exceeds the cap {DIMENSION_CAP}"
            )

    @property
    def dim(self) -> int:
        return self.d1 * self.d2

    @property
    def is_two_qubit(self) -> bool:
        return self.d1 == 2 and self.d2 == 2


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized amplitude vector with an optional subnormalization weight."""

    shape: BipartiteShape
    amplitudes: np.ndarray
    weight: float = 1.0

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        object.__setattr__(self, "amplitudes", amps)
        if amps.size != self.shape.dim:
            raise InvalidState(
                f"amplitude vector has length {amps.size}, expected {self.shape.dim}"
            )
        if not np.all(np.isfinite(amps)):
            raise InvalidState("amplitudes contain NaN or Inf")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_ATOL:
            raise InvalidState(f"amplitudes have norm {norm!r}, expected 1 +- {NORM_ATOL:.0e}")
        if not (0.0 < self.weight <= 1.0):
            raise InvalidState(f"weight must lie in (0, 1], got {self.weight!r}")

    @classmethod
    def normalized(cls, shape: BipartiteShape, vector, weight: float = 1.0) -> "PureState":
        """Build a state from an unnormalized vector."""
        v = np.asarray(vector, dtype=np.complex128).reshape(-1)
        norm = float(np.linalg.norm(v))
        if norm == 0.0:
            raise InvalidState("cannot normalize the zero vector")
        return cls(shape, v / norm, weight)

    def as_matrix(self) -> np.ndarray:
        """Amplitudes reshaped to (d1, d2)."""
        return self.amplitudes.reshape(self.shape.d1, self.shape.d2)

    def subnormalized(self) -> np.ndarray:
        """The vector sqrt(weight) * amplitudes."""
        return np.sqrt(self.weight) * self.amplitudes

    def density(self) -> np.ndarray:
        """weight * |psi><psi| as a plain matrix."""
        return self.weight * np.outer(self.amplitudes, self.amplitudes.conj())


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, PSD, unit-trace matrix over a declared bipartite shape."""

    shape: BipartiteShape
    matrix: np.ndarray

    def __post_init__(self):
        m = linalg.as_complex_matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        d = self.shape.dim
        if m.shape != (d, d):
            raise InvalidState(f"matrix has shape {m.shape}, expected ({d}, {d})")
        dev = float(np.max(np.abs(m - m.conj().T)))
        if dev > HERMITICITY_ATOL:
            raise NotHermitian(f"density matrix deviates from Hermitian by {dev:.3e}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_ATOL:
            raise InvalidState(f"trace is {tr!r}, expected 1 +- {TRACE_ATOL:.0e}")
        w, _ = linalg.hermitian_eigensystem(m)
        if w[-1] < PSD_EIG_FLOOR:
            raise NotPSD(f"smallest eigenvalue {w[-1]:.3e} below {PSD_EIG_FLOOR:.1e}")

    def eigenvalues(self) -> np.ndarray:
        w, _ = linalg.hermitian_eigensystem(self.matrix)
        return w


def _ensemble_failures(p1, p2, psi1, psi2):
    """Yield (check name, ok, slack, detail) tuples for the ensemble invariants."""
    checks = []
    ok_domain = 0.0 < p1 < 1.0 and 0.0 < p2 < 1.0
    checks.append(
        ("weight_domain", ok_domain, min(p1, p2, 1.0 - p1, 1.0 - p2), f"p1={p1!r} p2={p2!r}")
    )
    sum_dev = abs(p1 + p2 - 1.0)
    checks.append(
        ("weight_sum", sum_dev <= WEIGHT_SUM_ATOL, WEIGHT_SUM_ATOL - sum_dev, f"|p1+p2-1|={sum_dev:.3e}")
    )
    same_shape = psi1.shape == psi2.shape
    checks.append(("shape_match", same_shape, 0.0, f"{psi1.shape} vs {psi2.shape}"))
    if same_shape:
        ov = complex(np.vdot(psi1.amplitudes, psi2.amplitudes))
        gram = 1.0 - abs(ov) ** 2
        checks.append(
            (
                "linear_independence",
                gram > INDEPENDENCE_MIN_GRAM,
                gram - INDEPENDENCE_MIN_GRAM,
                f"1-|<psi1|psi2>|^2={gram:.3e}",
            )
        )
    return checks


@dataclass(frozen=True)
class ValidationCheck:
    name: str
    ok: bool
    slack: float
    detail: str


@dataclass(frozen=True)
class EnsembleValidation:
    """Per-invariant report produced by validate_ensemble."""

    checks: tuple[ValidationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> tuple[ValidationCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def validate_ensemble(p1: float, psi1: PureState, psi2: PureState, p2: float | None = None) -> EnsembleValidation:
    """Report every rank-2 ensemble invariant with its measured slack.

    ``p2`` defaults to ``1 - p1``; pass it explicitly to probe a broken weight
    pair.  Construction of Rank2Ensemble enforces the same checks by raising,
    so this is the non-raising twin for callers that want a report.
    """
    if p2 is None:
        p2 = 1.0 - p1
    checks = tuple(ValidationCheck(*c) for c in _ensemble_failures(p1, p2, psi1, psi2))
    return EnsembleValidation(checks)


@dataclass(frozen=True, eq=False)
class Rank2Ensemble:
    """Two weighted, linearly independent pure states mixing to a rank-2 state.

    Member states must carry weight 1; the mixture weights live in (p1, p2).
    """

    p1: float
    p2: float
    psi1: PureState
    psi2: PureState

    def __post_init__(self):
        if self.psi1.weight != 1.0 or self.psi2.weight != 1.0:
            raise InvalidEnsemble(
                "ensemble members must have weight 1; the mixture weights are p1, p2"
            )
        for name, ok, _slack, detail in _ensemble_failures(self.p1, self.p2, self.psi1, self.psi2):
            if not ok:
                if name == "shape_match":
                    raise ShapeMismatch(f"ensemble members differ in shape: {detail}")
                raise InvalidEnsemble(f"{name} failed: {detail}")

    @classmethod
    def of(cls, p1: float, psi1: PureState, psi2: PureState) -> "Rank2Ensemble":
        return cls(p1, 1.0 - p1, psi1, psi2)

    @property
    def shape(self) -> BipartiteShape:
        return self.psi1.shape

    def weighted(self, which: int) -> PureState:
        """Member ``which`` (1 or 2) as a weight-carrying pure state."""
        if which == 1:
            return PureState(self.shape, self.psi1.amplitudes, self.p1)
        if which == 2:
            return PureState(self.shape, self.psi2.amplitudes, self.p2)
        raise ValueError("which must be 1 or 2")

    def subnormalized_pair(self) -> np.ndarray:
        """2 x dim array with rows sqrt(p_a) |psi_a>."""
        return np.vstack(
            [
                np.sqrt(self.p1) * self.psi1.amplitudes,
                np.sqrt(self.p2) * self.psi2.amplitudes,
            ]
        )


def density_from_ensemble(e: Rank2Ensemble) -> DensityMatrix:
    """p1 |psi1><psi1| + p2 |psi2><psi2| as a validated DensityMatrix."""
    v1, v2 = e.psi1.amplitudes, e.psi2.amplitudes
    m = e.p1 * np.outer(v1, v1.conj()) + e.p2 * np.outer(v2, v2.conj())
    return DensityMatrix(e.shape, (m + m.conj().T) / 2.0)


def partial_trace_A(rho: DensityMatrix) -> np.ndarray:
    """Reduced d1 x d1 matrix after tracing out the B subsystem."""
    d1, d2 = rho.shape.d1, rho.shape.d2
    return np.einsum("ikjk->ij", rho.matrix.reshape(d1, d2, d1, d2))


def spin_flip(rho: DensityMatrix) -> np.ndarray:
    """(sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y) for a 2x2-shaped state."""
    if not rho.shape.is_two_qubit:
        raise WrongShape(f"spin flip is defined for 2x2 shapes, got {rho.shape}")
    return SIGMA_Y2 @ rho.matrix.conj() @ SIGMA_Y2


def spin_flip_vector(v: np.ndarray) -> np.ndarray:
    """(sigma_y x sigma_y) conj(v) for a length-4 amplitude vector."""
    return SIGMA_Y2 @ np.asarray(v, dtype=np.complex128).conj()


def overlap(a: PureState, b: PureState) -> complex:
    """<a|b> of the normalized amplitude vectors (weights excluded)."""
    if a.shape != b.shape:
        raise ShapeMismatch(f"overlap needs equal shapes, got {a.shape} vs {b.shape}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


# ---------------------------------------------------------------------------
# state files
#
# A pure state is a JSON object
#   {"shape": [d1, d2], "amplitudes": [[re, im], ...], "weight": 1.0}
# (weight optional); an ensemble is
#   {"ensemble": {"p1": 0.5, "psi1": {...pure...}, "psi2": {...pure...}}}
# ---------------------------------------------------------------------------


def _parse_pure(obj, where: str) -> PureState:
    if not isinstance(obj, dict):
        raise StateFileError(f"{where}: expected an object, got {type(obj).__name__}")
    if "shape" not in obj:
        raise StateFileError(f"{where}.shape: missing")
    shape_raw = obj["shape"]
    if (
        not isinstance(shape_raw, (list, tuple))
        or len(shape_raw) != 2
        or not all(isinstance(d, int) for d in shape_raw)
    ):
        raise StateFileError(f"{where}.shape: expected [d1, d2] integers, got {shape_raw!r}")
    try:
        shape = BipartiteShape(*shape_raw)
    except WrongShape as exc:
        raise StateFileError(f"{where}.shape: {exc}") from exc
    if "amplitudes" not in obj:
        raise StateFileError(f"{where}.amplitudes: missing")
    raw = obj["amplitudes"]
    if not isinstance(raw, list):
        raise StateFileError(f"{where}.amplitudes: expected a list")
    amps = np.zeros(len(raw), dtype=np.complex128)
    for k, pair in enumerate(raw):
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) for x in pair)
        ):
            raise StateFileError(f"{where}.amplitudes[{k}]: expected [re, im], got {pair!r}")
        amps[k] = complex(pair[0], pair[1])
    weight = obj.get("weight", 1.0)
    if not isinstance(weight, (int, float)):
        raise StateFileError(f"{where}.weight: expected a number, got {weight!r}")
    try:
        return PureState(shape, amps, float(weight))
    except InvalidState as exc:
        raise StateFileError(f"{where}: {exc}") from exc


def parse_state(obj, where: str = "$") -> PureState | Rank2Ensemble:
    """Parse a decoded state-file object into a PureState or Rank2Ensemble."""
    if not isinstance(obj, dict):
        raise StateFileError(f"{where}: expected a JSON object at top level")
    if "ensemble" not in obj:
        return _parse_pure(obj, where)
    ens = obj["ensemble"]
    if not isinstance(ens, dict):
        raise StateFileError(f"{where}.ensemble: expected an object")
    if "p1" not in ens or not isinstance(ens["p1"], (int, float)):
        raise StateFileError(f"{where}.ensemble.p1: missing or not a number")
    for leg in ("psi1", "psi2"):
        if leg not in ens:
            raise StateFileError(f"{where}.ensemble.{leg}: missing")
    psi1 = _parse_pure(ens["psi1"], f"{where}.ensemble.psi1")
    psi2 = _parse_pure(ens["psi2"], f"{where}.ensemble.psi2")
    try:
        return Rank2Ensemble.of(float(ens["p1"]), psi1, psi2)
    except (InvalidEnsemble, ShapeMismatch) as exc:
        raise StateFileError(f"{where}.ensemble: {exc}") from exc


def load_state_file(path) -> PureState | Rank2Ensemble:
    """Load a pure state or ensemble from a JSON state file."""
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise StateFileError(f"{path}: line {exc.lineno} col {exc.colno}: {exc.msg}") from exc
    return parse_state(obj, where=str(path))


def state_to_json(state: PureState | Rank2Ensemble) -> dict:
    """Inverse of parse_state, for writing state files."""
    if isinstance(state, PureState):
        return {
            "shape": [state.shape.d1, state.shape.d2],
            "amplitudes": [[float(z.real), float(z.imag)] for z in state.amplitudes],
            "weight": float(state.weight),
        }
    return {
        "ensemble": {
            "p1": float(state.p1),
            "psi1": state_to_json(state.psi1),
            "psi2": state_to_json(state.psi2),
        }
    }
