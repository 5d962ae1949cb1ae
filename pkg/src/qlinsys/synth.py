"""Shortest-circuit synthesis of real 4x4 orthogonal operators.

The search enumerates 2-qubit circuits over a fixed 9-gate vocabulary in
breadth-first order, deduplicating unitaries up to global sign, so the first
circuit that hits a target is one of minimal gate count (ties broken by
vocabulary order).  The reachable set is a finite group, small enough that
the whole table to any practical depth fits in memory; it is built
incrementally and shared across calls.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import sim
from .errors import DimensionMismatchError, NotOrthogonalError, SynthesisNotFoundError

#: Search vocabulary, in tie-breaking order.
VOCABULARY: tuple[sim.Gate, ...] = (
    sim.h(0),
    sim.h(1),
    sim.x(0),
    sim.x(1),
    sim.z(0),
    sim.z(1),
    sim.cx(0, 1),
    sim.cx(1, 0),
    sim.cz(0, 1),
)

_VOCAB_MATRICES = tuple(
    np.real(sim.unitary_of(sim.Circuit(2, (gate,)))) for gate in VOCABULARY
)

DEFAULT_MAX_GATES = 8


@dataclass(frozen=True)
class SynthesisResult:
    """A minimal circuit together with how faithfully it matched the target."""

    circuit: sim.Circuit
    gate_count: int
    matched_sign: int
    max_deviation: float


def _canonical_key(matrix: np.ndarray) -> bytes:
    # Round before hashing so float drift cannot split one group element into
    # two table entries, and flatten -0.0 which has a distinct byte pattern.
    r = np.round(matrix, 12)
    r = np.where(r == 0, 0.0, r)
    flat = r.ravel()
    nonzero = np.nonzero(flat)[0]
    if nonzero.size and flat[nonzero[0]] < 0:
        r = -r
        r = np.where(r == 0, 0.0, r)
    return r.tobytes()


# key -> (gate sequence, gate count); grown lazily by _ensure_depth.
_table: dict[bytes, tuple[tuple[sim.Gate, ...], int]] = {}
_frontier: list[tuple[tuple[sim.Gate, ...], np.ndarray]] = []
_built_depth = -1


def _ensure_depth(depth: int) -> None:
    global _built_depth, _frontier
    if _built_depth < 0:
        eye = np.eye(4)
        _table[_canonical_key(eye)] = ((), 0)
        _frontier = [((), eye)]
        _built_depth = 0
    while _built_depth < depth:
        grown: list[tuple[tuple[sim.Gate, ...], np.ndarray]] = []
        for ops, u in _frontier:
            for gate, g in zip(VOCABULARY, _VOCAB_MATRICES):
                candidate = g @ u
                key = _canonical_key(candidate)
                if key not in _table:
                    _table[key] = (ops + (gate,), _built_depth + 1)
                    grown.append((ops + (gate,), candidate))
        _frontier = grown
        _built_depth += 1


def synthesize(target, max_gates: int = DEFAULT_MAX_GATES) -> SynthesisResult:
    """Find a minimal circuit whose unitary equals the target up to global sign.

    Raises SynthesisNotFoundError when no circuit of at most `max_gates`
    vocabulary gates reaches the target.
    """
    t = np.asarray(target, dtype=float)
    if t.shape != (4, 4):
        raise DimensionMismatchError(f"target must be 4x4, got shape {t.shape}")
    if np.max(np.abs(t.T @ t - np.eye(4))) > 1e-10:
        raise NotOrthogonalError("synthesis target must be orthogonal")
    if max_gates < 0:
        raise ValueError("max_gates must be non-negative")

    _ensure_depth(max_gates)
    entry = _table.get(_canonical_key(t))
    if entry is None or entry[1] > max_gates:
        raise SynthesisNotFoundError(f"no circuit with at most {max_gates} gates reaches the target")
    ops, count = entry

    circuit = sim.Circuit(2, ops)
    realized = np.real(sim.unitary_of(circuit))
    sign = 1 if np.max(np.abs(realized - t)) <= np.max(np.abs(realized + t)) else -1
    deviation = float(np.max(np.abs(realized - sign * t)))
    return SynthesisResult(circuit, count, sign, deviation)


def synthesize_family(max_gates: int = DEFAULT_MAX_GATES) -> dict:
    """Synthesize the solution operator A^T for every catalog matrix."""
    from . import family, linsys

    results = {}
    for spec in family.enumerate_family():
        target = linsys.inverse_operator(spec.matrix)
        results[spec.label] = synthesize(target, max_gates)
    return results


def verify(circuit: sim.Circuit, matrix) -> float:
    """Best-over-sign deviation of U_circuit * A from the identity."""
    a = np.asarray(matrix, dtype=float)
    dim = 2**circuit.n_qubits
    if a.shape != (dim, dim):
        raise DimensionMismatchError(f"matrix shape {a.shape} does not match {circuit.n_qubits} qubits")
    u = sim.unitary_of(circuit)
    eye = np.eye(dim)
    deviations = (np.max(np.abs(s * u @ a - eye)) for s in (1.0, -1.0))
    return float(min(deviations))
