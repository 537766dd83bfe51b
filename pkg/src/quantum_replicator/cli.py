"""Command-line front end.

Reads a JSON problem spec (game, initial-state weights, analysis options),
runs the requested analysis and writes a JSON report to stdout or a CSV data
file to --out.  Numbers are emitted in shortest round-trip decimal form so
identical specs produce byte-identical outputs.

Exit codes: 0 success, 2 validation failure, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dynamics import (DEFAULT_CONVERGENCE_TOL, DEFAULT_MAX_STEPS, DEFAULT_STEP,
                       ReplicatorField, integrate, phase_portrait)
from .ess import compare_classical_quantum
from .games import (ClassicalBimatrix, InitialStateWeights, SimplifiedGame,
                    ValidationError, k_params, quantum_transform)
from .scenarios import make_case, scan_flip
from .stability import (DEFAULT_ZERO_TOL, equilibria, interior_point, jacobian,
                        eigenvalues, classify)

__all__ = ["main"]

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3

SIMPLIFIED_KEYS = ("a", "b", "c", "d")
BIMATRIX_KEYS = ("a11", "a12", "a21", "a22", "b11", "b12", "b21", "b22")
WEIGHT_KEYS = ("w11", "w12", "w21", "w22")


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load_spec(path):
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read spec file {path}: {exc}", EXIT_IO) from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"spec file {path} is not valid JSON: {exc}", EXIT_VALIDATION) from exc


def _parse_game(spec):
    game = spec.get("game")
    if game is None:
        raise CliError("spec is missing the 'game' object", EXIT_VALIDATION)
    keys = set(game)
    if keys == set(SIMPLIFIED_KEYS):
        simplified = SimplifiedGame(**{k: game[k] for k in SIMPLIFIED_KEYS})
        return simplified.to_bimatrix(), simplified
    if keys == set(BIMATRIX_KEYS):
        full = ClassicalBimatrix(**{k: game[k] for k in BIMATRIX_KEYS})
        return full, SimplifiedGame.from_bimatrix(full)
    raise CliError(
        "game must have exactly the keys a,b,c,d or a11..a22,b11..b22; "
        f"got {sorted(keys)}", EXIT_VALIDATION)


def _parse_weights(spec, renormalize):
    weights = spec.get("weights")
    if weights is None:
        raise CliError("spec is missing 'weights'", EXIT_VALIDATION)
    if isinstance(weights, dict):
        try:
            values = [weights[k] for k in WEIGHT_KEYS]
        except KeyError as exc:
            raise CliError(f"weights is missing {exc.args[0]}", EXIT_VALIDATION) from exc
    elif isinstance(weights, (list, tuple)) and len(weights) == 4:
        values = list(weights)
    else:
        raise CliError("weights must be a 4-list or an object with w11..w22",
                       EXIT_VALIDATION)
    if renormalize:
        return InitialStateWeights.renormalized(*values)
    return InitialStateWeights(*values)


def _option(args, spec, name, default):
    # flags win over the spec's options object; names use underscores in both
    value = getattr(args, name, None)
    if value is not None:
        return value
    return spec.get("options", {}).get(name, default)


def _complex_pair(eigs):
    return [[z.real, z.imag] for z in eigs]


def _emit_json(payload, out_path):
    text = json.dumps(payload, indent=2) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        _write_file(out_path, text)


def _write_file(path, text):
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EXIT_IO) from exc


def _csv_text(header, rows):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(repr(v) if isinstance(v, float) else str(v)
                              for v in row))
    return "\n".join(lines) + "\n"


def _verdict_payload(verdict):
    return {
        "is_attractor": verdict.is_attractor,
        "is_ess": verdict.is_ess,
        "marginal": verdict.marginal,
        "roots": list(verdict.roots),
        "margins": {"m_male": verdict.margins.m_male,
                    "m_female": verdict.margins.m_female},
    }


def cmd_transform(args):
    spec = _load_spec(args.spec)
    game, _ = _parse_game(spec)
    state = _parse_weights(spec, args.renormalize)
    pair = quantum_transform(game, state)
    k = k_params(state)
    _emit_json({
        "omega": [list(row) for row in pair.omega],
        "chi": [list(row) for row in pair.chi],
        "K1": k.K1,
        "K2": k.K2,
    }, args.out)
    return EXIT_OK


def cmd_classify(args):
    spec = _load_spec(args.spec)
    _, simplified = _parse_game(spec)
    state = _parse_weights(spec, args.renormalize)
    tol = float(_option(args, spec, "tol", DEFAULT_ZERO_TOL))
    fld = ReplicatorField.quantum(simplified, state)
    warnings = []
    reports = []
    for eq in equilibria(fld):
        jac = jacobian(fld, (eq.x, eq.y))
        eigs = eigenvalues(jac)
        tag = classify(eigs, tol)
        if tag == "degenerate":
            warnings.append(f"equilibrium ({eq.x}, {eq.y}) is degenerate at tol {tol}")
        reports.append({
            "x": eq.x,
            "y": eq.y,
            "kind": eq.kind,
            "inside_unit_square": eq.inside_unit_square,
            "jacobian": [list(row) for row in jac],
            "eigenvalues": _complex_pair(eigs),
            "tag": tag,
        })
    payload = {"K1": fld.K1, "K2": fld.K2, "equilibria": reports}
    _, reason = interior_point(fld)
    if reason is not None:
        payload["interior_omitted_reason"] = reason
    if warnings:
        payload["warnings"] = warnings
    _emit_json(payload, args.out)
    return EXIT_OK


def cmd_ess(args):
    spec = _load_spec(args.spec)
    _, simplified = _parse_game(spec)
    state = _parse_weights(spec, args.renormalize)
    tol = float(_option(args, spec, "tol", 1e-9))
    report = compare_classical_quantum(simplified, state, tol=tol)
    _emit_json({
        "classical": _verdict_payload(report.classical),
        "quantum": _verdict_payload(report.quantum),
        "flip": report.flip,
    }, args.out)
    return EXIT_OK


def _parse_start(args, spec):
    raw = args.start if args.start is not None else spec.get("start")
    if raw is None:
        raise CliError("simulate needs a start point: --start X,Y", EXIT_VALIDATION)
    if isinstance(raw, str):
        parts = raw.split(",")
        if len(parts) != 2:
            raise CliError(f"--start must be X,Y; got {raw!r}", EXIT_VALIDATION)
        try:
            return (float(parts[0]), float(parts[1]))
        except ValueError as exc:
            raise CliError(f"--start must be numeric: {raw!r}", EXIT_VALIDATION) from exc
    if isinstance(raw, (list, tuple)) and len(raw) == 2:
        return (float(raw[0]), float(raw[1]))
    raise CliError("start must be a pair of numbers", EXIT_VALIDATION)


def _integration_options(args, spec):
    step = float(_option(args, spec, "step", DEFAULT_STEP))
    max_steps = int(_option(args, spec, "max_steps", DEFAULT_MAX_STEPS))
    tol = float(_option(args, spec, "tol", DEFAULT_CONVERGENCE_TOL))
    return step, max_steps, tol


def cmd_simulate(args):
    spec = _load_spec(args.spec)
    _, simplified = _parse_game(spec)
    state = _parse_weights(spec, args.renormalize)
    start = _parse_start(args, spec)
    step, max_steps, tol = _integration_options(args, spec)
    fld = ReplicatorField.quantum(simplified, state)
    traj = integrate(fld, start, step=step, max_steps=max_steps, convergence_tol=tol)
    rows = list(zip(traj.times, traj.xs, traj.ys))
    text = _csv_text(("t", "x", "y"), rows)
    if args.out is None:
        sys.stdout.write(text)
    else:
        _write_file(args.out, text)
    sys.stderr.write(f"status: {traj.status} after {len(traj) - 1} steps\n")
    return EXIT_OK


def cmd_portrait(args):
    spec = _load_spec(args.spec)
    _, simplified = _parse_game(spec)
    state = _parse_weights(spec, args.renormalize)
    grid_n = int(_option(args, spec, "grid", 5))
    step, max_steps, tol = _integration_options(args, spec)
    fld = ReplicatorField.quantum(simplified, state)
    trajectories = phase_portrait(fld, grid_n, step=step, max_steps=max_steps,
                                  convergence_tol=tol)
    rows = []
    for tid, traj in enumerate(trajectories):
        rows.extend((tid, t, x, y) for t, x, y in zip(traj.times, traj.xs, traj.ys))
    text = _csv_text(("id", "t", "x", "y"), rows)
    if args.out is None:
        sys.stdout.write(text)
    else:
        _write_file(args.out, text)
    return EXIT_OK


def cmd_scan(args):
    spec = _load_spec(args.spec)
    _, simplified = _parse_game(spec)
    resolution = int(_option(args, spec, "resolution", 10))
    try:
        hits = scan_flip(simplified, resolution)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_VALIDATION) from exc
    rows = [(s.w11, s.w12, s.w21, s.w22, flip) for s, flip in hits]
    text = _csv_text(("w11", "w12", "w21", "w22", "flip"), rows)
    if args.out is None:
        sys.stdout.write(text)
    else:
        _write_file(args.out, text)
    return EXIT_OK


def cmd_demo(args):
    try:
        instance = make_case(args.case)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_VALIDATION) from exc
    report = compare_classical_quantum(instance.game, instance.state)
    _emit_json({
        "case": instance.case_label,
        "game": {"a": instance.game.a, "b": instance.game.b,
                 "c": instance.game.c, "d": instance.game.d},
        "weights": {k: getattr(instance.state, k) for k in WEIGHT_KEYS},
        "checks": [{"name": c.name, "value": c.value, "ok": c.ok}
                   for c in instance.verification],
        "comparison": {
            "classical": _verdict_payload(report.classical),
            "quantum": _verdict_payload(report.quantum),
            "flip": report.flip,
        },
    }, args.out)
    return EXIT_OK


def _add_common(parser, weights=True):
    parser.add_argument("--spec", help="JSON problem spec file")
    parser.add_argument("--out", help="output file (default: stdout)")
    parser.add_argument("--tol", type=float, help="tolerance override")
    if weights:
        parser.add_argument("--renormalize", action="store_true",
                            help="rescale weights to sum to 1 instead of rejecting")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quantum-replicator",
        description="Classical and quantized replicator dynamics of 2x2 bi-matrix "
                    "games: payoff transforms, equilibrium classification, "
                    "evolutionary-stability reports and trajectory data.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="quantized payoff matrices and K parameters")
    _add_common(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("classify", help="equilibria with Jacobians, eigenvalues, tags")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("ess", help="ESS/attractor verdicts and flip descriptor")
    _add_common(p)
    p.set_defaults(func=cmd_ess)

    p = sub.add_parser("simulate", help="integrate one trajectory to CSV")
    _add_common(p)
    p.add_argument("--start", help="starting point X,Y")
    p.add_argument("--step", type=float, help="integration step size")
    p.add_argument("--max-steps", type=int, help="step limit")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("portrait", help="grid of trajectories to CSV")
    _add_common(p)
    p.add_argument("--grid", type=int, help="seeds per axis")
    p.add_argument("--step", type=float, help="integration step size")
    p.add_argument("--max-steps", type=int, help="step limit")
    p.set_defaults(func=cmd_portrait)

    p = sub.add_parser("scan", help="scan the weight simplex for stability flips")
    _add_common(p, weights=False)
    p.add_argument("--resolution", type=int, help="lattice subdivisions")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("demo", help="one of the verified showcase instances")
    p.add_argument("case", choices=("a", "b", "c"))
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    except ValidationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
