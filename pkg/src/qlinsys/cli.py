"""Command-line front end.

Subcommands: family list, solve, run, table1, tomo, synth, qasm, grover.
Every command is deterministic given its full flag set; sampling commands
take --seed explicitly and default to 0.

Exit codes: 0 success, 2 usage error, 3 validation error, 4 synthesis
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import family, grover, linsys, qasm, sim, synth, tomo
from .errors import (
    InvalidProbabilityError,
    QlinsysError,
    SynthesisNotFoundError,
    ValidationError,
)

#: The eight circuits of the published comparison table, in row order.
TABLE1_LABELS = (
    "A_1324",
    "A_2413",
    "A_3124",
    "A_4213",
    "B_1342",
    "B_2413",
    "B_3142",
    "B_4213",
)

#: Outcome percentages from a 1024-shot hardware run of the eight circuits
#: above on a 5-qubit device, as published (outcomes 0000..0011).  Row
#: B_1342 is reproduced verbatim even though it sums to 97%, apparently a
#: misprint of 27.832 in the second column.  Display-only: tests never use
#: these as oracles for simulated counts.
REFERENCE_PERCENT = {
    "A_1324": (21.875, 24.805, 27.051, 26.27),
    "A_2413": (24.023, 25.781, 23.926, 26.27),
    "A_3124": (24.414, 24.609, 25.684, 25.293),
    "A_4213": (24.316, 24.121, 26.563, 25.0),
    "B_1342": (24.707, 24.832, 24.219, 23.242),
    "B_2413": (24.902, 26.66, 23.047, 25.391),
    "B_3142": (24.805, 25.977, 24.707, 24.512),
    "B_4213": (26.758, 25.098, 25.195, 22.949),
}

_OUTCOMES_2Q = ("00", "01", "10", "11")


def _padded(bits: str) -> str:
    """Zero-pad a bitstring on the left to the four-character display width."""
    return bits.zfill(4)


def _label_arg(text: str) -> family.FamilyLabel:
    try:
        return family.FamilyLabel.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _add_system_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--label", type=_label_arg, metavar="NAME", help="catalog label like A_1234")
    group.add_argument("--matrix", metavar="FILE", help="CSV file holding the matrix")


def _resolve_system(args) -> tuple[str, np.ndarray]:
    if args.label is not None:
        return str(args.label), family.matrix_for(args.label)
    name = os.path.splitext(os.path.basename(args.matrix))[0]
    return name, linsys.load_matrix(args.matrix)


def _vector_arg(text: str, expected: int) -> np.ndarray:
    """Parse --y: either a CSV file path or an inline comma-separated vector."""
    if os.path.exists(text):
        vec = linsys.load_vector(text)
    else:
        try:
            vec = np.array([float(part) for part in text.split(",")], dtype=float)
        except ValueError:
            raise ValidationError(f"could not parse {text!r} as a vector or file path")
    if vec.size != expected:
        raise ValidationError(f"y has length {vec.size}, expected {expected}")
    return vec


def _basis_index(vec: np.ndarray) -> int:
    index = int(np.argmax(np.abs(vec)))
    target = np.zeros(vec.size)
    target[index] = 1.0
    if np.max(np.abs(vec - target)) > 1e-12:
        raise ValidationError(
            "running a circuit needs a computational-basis y; use 'solve' for general right-hand sides"
        )
    return index


def _check_noise(p: float) -> float:
    if not 0.0 <= p <= 1.0:
        raise InvalidProbabilityError(f"--noise must lie in [0, 1], got {p}")
    return p


def _fmt_vec(vec) -> str:
    return " ".join(f"{float(v):+.6f}" for v in vec)


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def cmd_family_list(args) -> int:
    specs = family.enumerate_family()
    if args.klass is not None:
        specs = [spec for spec in specs if spec.label.kind == args.klass]
    if args.output == "json":
        _print_json(
            [
                {
                    "label": str(spec.label),
                    "subset": spec.subset,
                    "matrix": [[float(v) for v in row] for row in spec.matrix],
                    "y": [float(v) for v in spec.y],
                    "equations": list(spec.equations),
                }
                for spec in specs
            ]
        )
    else:
        for spec in specs:
            print(f"{spec.label}  {spec.subset}  {' | '.join(spec.equations)}")
    return 0


def cmd_solve(args) -> int:
    name, matrix = _resolve_system(args)
    if args.y is None:
        y = np.zeros(matrix.shape[0])
        y[0] = 1.0
    else:
        y = _vector_arg(args.y, matrix.shape[0])
    x = linsys.solve(matrix, y)
    probs = np.abs(x) ** 2
    readout = sim.amplitudes_from_probabilities(probs)
    if args.output == "json":
        _print_json(
            {
                "label": name,
                "y": [float(v) for v in y],
                "x": [float(v) for v in x],
                "probabilities": [float(v) for v in probs],
                "readout_magnitudes": [float(v) for v in readout],
                "note": "readout magnitudes are square roots of probabilities; solution signs are not observable",
            }
        )
    else:
        print(f"label: {name}")
        print(f"y:             {_fmt_vec(y)}")
        print(f"x:             {_fmt_vec(x)}")
        print(f"probabilities: {_fmt_vec(probs)}")
        print(f"sqrt readout:  {_fmt_vec(readout)}   (signs lost)")
    return 0


def _sampled_run(matrix: np.ndarray, basis: int, args) -> tuple[synth.SynthesisResult, sim.ShotTable]:
    result = synth.synthesize(linsys.inverse_operator(matrix), args.max_gates)
    state = sim.run(result.circuit, basis)
    probs = sim.probabilities(state)
    noise = _check_noise(args.noise)
    if noise > 0.0:
        probs = (1.0 - noise) * probs + noise / probs.size
    return result, sim.sample_distribution(probs, args.shots, args.seed)


def cmd_run(args) -> int:
    name, matrix = _resolve_system(args)
    if args.y is not None:
        basis = _basis_index(_vector_arg(args.y, matrix.shape[0]))
    else:
        basis = args.basis
    _, table = _sampled_run(matrix, basis, args)
    if args.output == "json":
        _print_json(
            {
                "label": name,
                "shots": table.shots,
                "seed": table.seed,
                "counts": table.counts,
                "frequencies": table.frequencies,
            }
        )
    elif args.output == "csv":
        print("circuit," + ",".join(_padded(b) for b in _OUTCOMES_2Q))
        freq = table.frequencies
        print(name + "," + ",".join(f"{100.0 * freq[b]:.3f}" for b in _OUTCOMES_2Q))
    else:
        print(f"{'circuit':<10}" + "".join(f"{b + '/' + _padded(b):>12}" for b in _OUTCOMES_2Q))
        freq = table.frequencies
        print(f"{name:<10}" + "".join(f"{100.0 * freq[b]:>11.3f}%" for b in _OUTCOMES_2Q))
    return 0


def cmd_table1(args) -> int:
    rows = []
    for offset, name in enumerate(TABLE1_LABELS):
        label = family.FamilyLabel.parse(name)
        result = synth.synthesize(linsys.inverse_operator(family.matrix_for(label)))
        state = sim.run(result.circuit, 0)
        # Per-row seeds stay distinct but reproducible from the single flag.
        table = sim.sample(state, args.shots, args.seed + offset)
        rows.append((name, table))
    if args.output == "json":
        _print_json(
            [
                {
                    "label": name,
                    "shots": table.shots,
                    "seed": table.seed,
                    "counts": table.counts,
                    "frequencies": table.frequencies,
                    "reference_percent": list(REFERENCE_PERCENT[name]),
                }
                for name, table in rows
            ]
        )
    else:
        padded = [_padded(b) for b in _OUTCOMES_2Q]
        print("circuit," + ",".join(padded) + "," + ",".join(f"ref_{p}" for p in padded))
        for name, table in rows:
            freq = table.frequencies
            simulated = ",".join(f"{100.0 * freq[b]:.3f}" for b in _OUTCOMES_2Q)
            reference = ",".join(f"{v:g}" for v in REFERENCE_PERCENT[name])
            print(f"{name},{simulated},{reference}")
    return 0


def cmd_tomo(args) -> int:
    name, matrix = _resolve_system(args)
    y = np.zeros(matrix.shape[0])
    y[0] = 1.0
    x = linsys.solve(matrix, y)
    rho = tomo.density_from_state(x)
    noise = _check_noise(args.noise)
    if noise > 0.0:
        rho = tomo.apply_depolarizing(rho, noise)
    mode = "analytic" if args.analytic else "sampled"
    table = tomo.pauli_expectations(rho, mode=mode, shots=args.shots, seed=args.seed)
    reconstructed = tomo.reconstruct(table)
    fid = tomo.fidelity(reconstructed, x, square_root=args.sqrt_fidelity)
    if args.output == "csv":
        print(f"# label={name} mode={mode} fidelity={fid:.6f}")
        print("row,col,re,im")
        for i in range(reconstructed.shape[0]):
            for j in range(reconstructed.shape[1]):
                v = reconstructed[i, j]
                print(f"{i},{j},{v.real:.12f},{v.imag:.12f}")
    else:
        payload = {
            "label": name,
            "mode": mode,
            "noise_p": noise,
            "fidelity": float(fid),
            "fidelity_convention": "sqrt_overlap" if args.sqrt_fidelity else "overlap",
            "density": {
                "dim": int(reconstructed.shape[0]),
                "re": [[float(v.real) for v in row] for row in reconstructed],
                "im": [[float(v.imag) for v in row] for row in reconstructed],
            },
        }
        if mode == "sampled":
            payload["shots"] = args.shots
            payload["seed"] = args.seed
        _print_json(payload)
    return 0


def _gates_payload(circuit: sim.Circuit) -> list[dict]:
    return [{"kind": gate.kind, "targets": list(gate.targets)} for gate in circuit.ops]


def cmd_synth(args) -> int:
    if args.all:
        if args.output == "qasm":
            raise ValidationError("--output qasm needs a single system; drop --all")
        results = synth.synthesize_family(args.max_gates)
        _print_json(
            [
                {
                    "label": str(label),
                    "gate_count": result.gate_count,
                    "matched_sign": result.matched_sign,
                    "max_deviation": result.max_deviation,
                    "gates": _gates_payload(result.circuit),
                }
                for label, result in results.items()
            ]
        )
        return 0
    name, matrix = _resolve_system(args)
    result = synth.synthesize(linsys.inverse_operator(matrix), args.max_gates)
    if args.output == "qasm":
        sys.stdout.write(qasm.circuit_to_qasm(result.circuit))
    else:
        _print_json(
            {
                "label": name,
                "gate_count": result.gate_count,
                "matched_sign": result.matched_sign,
                "max_deviation": result.max_deviation,
                "gates": _gates_payload(result.circuit),
            }
        )
    return 0


def cmd_export_qasm(args) -> int:
    _, matrix = _resolve_system(args)
    result = synth.synthesize(linsys.inverse_operator(matrix), args.max_gates)
    sys.stdout.write(qasm.circuit_to_qasm(result.circuit))
    return 0


def cmd_grover(args) -> int:
    marked = sorted({int(part) for part in args.marked.split(",")})
    geom = grover.geometry(2**args.qubits, len(marked))
    iterations = args.iterations if args.iterations is not None else grover.optimal_iterations(geom)
    circuit = grover.build_grover_circuit(args.qubits, marked, iterations)
    probs = sim.probabilities(sim.run(circuit, 0))
    simulated = float(sum(probs[m] for m in marked))
    _print_json(
        {
            "n": args.qubits,
            "marked": marked,
            "k": iterations,
            "theta": geom.theta,
            "predicted": grover.success_probability(geom, iterations),
            "simulated": simulated,
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlinsys",
        description="Solve sign-matrix linear systems on a 2-qubit simulator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_family = sub.add_parser("family", help="browse the 48-matrix catalog")
    family_sub = p_family.add_subparsers(dest="action", required=True)
    p_list = family_sub.add_parser("list", help="list catalog entries")
    p_list.add_argument("--class", dest="klass", choices=("A", "B"), help="restrict to one column class")
    p_list.add_argument("--output", choices=("table", "json"), default="table")
    p_list.set_defaults(func=cmd_family_list)

    p_solve = sub.add_parser("solve", help="solve A x = y by the transpose")
    _add_system_flags(p_solve)
    p_solve.add_argument("--y", metavar="VEC", help="right-hand side: inline CSV or a file (default e1)")
    p_solve.add_argument("--output", choices=("table", "json"), default="table")
    p_solve.set_defaults(func=cmd_solve)

    p_run = sub.add_parser("run", help="synthesize, simulate, and sample a circuit")
    _add_system_flags(p_run)
    p_run.add_argument("--y", metavar="VEC", help="basis-vector right-hand side (inline CSV or file)")
    p_run.add_argument("--basis", type=int, default=0, help="initial basis index (default 0)")
    p_run.add_argument("--shots", type=_positive_int, default=1024)
    p_run.add_argument("--seed", type=int, default=0)
    p_run.add_argument("--noise", type=float, default=0.0, help="depolarizing strength in [0, 1]")
    p_run.add_argument("--max-gates", type=int, default=synth.DEFAULT_MAX_GATES)
    p_run.add_argument("--output", choices=("table", "json", "csv"), default="table")
    p_run.set_defaults(func=cmd_run)

    p_table1 = sub.add_parser("table1", help="reproduce the published 8-circuit table")
    p_table1.add_argument("--shots", type=_positive_int, default=1024)
    p_table1.add_argument("--seed", type=int, default=0, help="row i samples with seed + i")
    p_table1.add_argument("--output", choices=("csv", "json"), default="csv")
    p_table1.set_defaults(func=cmd_table1)

    p_tomo = sub.add_parser("tomo", help="tomography report for a solution state")
    _add_system_flags(p_tomo)
    p_tomo.add_argument("--analytic", action="store_true", help="exact expectations instead of sampling")
    p_tomo.add_argument("--shots", type=_positive_int, default=1024)
    p_tomo.add_argument("--seed", type=int, default=0)
    p_tomo.add_argument("--noise", type=float, default=0.0, help="depolarizing strength in [0, 1]")
    p_tomo.add_argument("--sqrt-fidelity", action="store_true", help="report sqrt(<psi|rho|psi>)")
    p_tomo.add_argument("--output", choices=("json", "csv"), default="json")
    p_tomo.set_defaults(func=cmd_tomo)

    p_synth = sub.add_parser("synth", help="find a minimal circuit for the solution operator")
    group = p_synth.add_mutually_exclusive_group(required=True)
    group.add_argument("--label", type=_label_arg, metavar="NAME")
    group.add_argument("--matrix", metavar="FILE")
    group.add_argument("--all", action="store_true", help="synthesize the whole catalog")
    p_synth.add_argument("--max-gates", type=int, default=synth.DEFAULT_MAX_GATES)
    p_synth.add_argument("--output", choices=("json", "qasm"), default="json")
    p_synth.set_defaults(func=cmd_synth)

    p_qasm = sub.add_parser("qasm", help="export the synthesized circuit as OpenQASM 2.0")
    _add_system_flags(p_qasm)
    p_qasm.add_argument("--max-gates", type=int, default=synth.DEFAULT_MAX_GATES)
    p_qasm.set_defaults(func=cmd_export_qasm)

    p_grover = sub.add_parser("grover", help="amplitude-amplification demo")
    p_grover.add_argument("--qubits", type=int, default=2)
    p_grover.add_argument("--marked", default="3", help="comma-separated basis indices")
    p_grover.add_argument("--iterations", type=int, default=None, help="default: the optimal count")
    p_grover.set_defaults(func=cmd_grover)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SynthesisNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (QlinsysError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry_point() -> None:
    raise SystemExit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry_point()
