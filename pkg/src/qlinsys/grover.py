"""Amplitude amplification: iteration geometry and executable circuits.

The success probability after k iterations is sin^2((2k + 1) * theta) with
theta = arcsin(sqrt(M / N)) for M marked states out of N.  Circuits realize
each iteration as a marked-set phase flip followed by inversion about the
mean (H layer, phase flip on index 0, H layer); the global sign this leaves
on the state has no effect on measured probabilities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import sim
from .errors import InvalidCountsError, InvalidMarkedSetError

MAX_QUBITS = 10


@dataclass(frozen=True)
class GroverGeometry:
    n_states: int
    n_marked: int
    theta: float


def geometry(n_states: int, n_marked: int) -> GroverGeometry:
    """Rotation-angle description of a search with n_marked targets among n_states."""
    if n_states < 2 or n_states & (n_states - 1):
        raise InvalidCountsError(f"n_states must be a power of two >= 2, got {n_states}")
    if not 0 < n_marked <= n_states:
        raise InvalidCountsError(f"n_marked must lie in 1..{n_states}, got {n_marked}")
    theta = math.asin(math.sqrt(n_marked / n_states))
    return GroverGeometry(n_states, n_marked, theta)


def optimal_iterations(geom: GroverGeometry) -> int:
    """Iteration count maximizing success probability, never negative."""
    return max(round(math.pi / (4.0 * geom.theta) - 0.5), 0)


def success_probability(geom: GroverGeometry, iterations: int) -> float:
    if iterations < 0:
        raise ValueError("iterations must be non-negative")
    return math.sin((2 * iterations + 1) * geom.theta) ** 2


def build_grover_circuit(n_qubits: int, marked, iterations: int) -> sim.Circuit:
    """Uniform superposition followed by `iterations` amplification rounds."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise ValueError(f"n_qubits must lie in 1..{MAX_QUBITS}, got {n_qubits}")
    if iterations < 0:
        raise ValueError("iterations must be non-negative")
    marked_set = frozenset(int(m) for m in marked)
    if not marked_set:
        raise InvalidMarkedSetError("marked set must not be empty")
    if not all(0 <= m < 2**n_qubits for m in marked_set):
        raise InvalidMarkedSetError(
            f"marked indices {sorted(marked_set)} out of range for {n_qubits} qubits"
        )

    layer = [sim.h(q) for q in range(n_qubits)]
    ops = list(layer)
    for _ in range(iterations):
        ops.append(sim.phase_flip(marked_set))
        ops.extend(layer)
        ops.append(sim.phase_flip({0}))
        ops.extend(layer)
    return sim.Circuit(n_qubits, tuple(ops))
