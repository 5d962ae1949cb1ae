"""OpenQASM 2.0 writer for circuits over the named-gate vocabulary."""

from __future__ import annotations

from . import sim
from .errors import UnsupportedGateError

# Kinds map one-to-one onto qelib1 names; phaseflip has no counterpart.
_QASM_NAMES = {
    "h": "h",
    "x": "x",
    "y": "y",
    "z": "z",
    "s": "s",
    "sdg": "sdg",
    "t": "t",
    "cx": "cx",
    "cz": "cz",
}


def circuit_to_qasm(circuit: sim.Circuit) -> str:
    """Serialize a circuit, ending with a full-register measurement.

    Output is deterministic: same circuit, same bytes.
    """
    n = circuit.n_qubits
    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        f"qreg q[{n}];",
        f"creg c[{n}];",
    ]
    for gate in circuit.ops:
        name = _QASM_NAMES.get(gate.kind)
        if name is None:
            raise UnsupportedGateError(f"gate kind {gate.kind!r} has no OpenQASM 2.0 form")
        operands = ",".join(f"q[{q}]" for q in gate.targets)
        lines.append(f"{name} {operands};")
    lines.append("measure q -> c;")
    return "\n".join(lines) + "\n"
