"""Command-line front end: ``h2vqe {curve,point,oracle,plot}``.

Exit codes: 0 success, 1 usage error, 2 data/parse/IO error, 3 accuracy
failure (exact-mode error >= 1e-6, or an oracle consistency failure).
"""
from __future__ import annotations

import argparse
import csv
import datetime as dt
import hashlib
import io
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .ansatz import AnsatzSpec, family_for, prepare
from .measurement import DEFAULT_SHOTS, energy_from_measurements
from .molecule import (
    DEFAULT_TABLE,
    CoefficientTable,
    OffGridError,
    TableError,
    default_table_text,
    load_table,
)
from .optimize import NelderMeadConfig
from .oracle import full_report
from .variational import solve_block

EXACT_TOLERANCE = 1e-6
EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_ACCURACY = 0, 1, 2, 3

CURVE_COLUMNS = ("R", "block", "level", "energy", "theta_opt", "evaluations", "oracle_energy", "abs_error")
SHOT_COLUMNS = ("energy_stderr", "shots")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt_energy(x: float) -> str:
    return f"{x:.6f}"


def _read_table(path: str | None) -> tuple[CoefficientTable, dict]:
    if path is None:
        text = default_table_text()
        ident = f"<bundled>/{DEFAULT_TABLE}"
    else:
        text = Path(path).read_text(encoding="utf-8")
        ident = path
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    return load_table(text), {"path": ident, "sha256": digest}


def _timestamp() -> str:
    # SOURCE_DATE_EPOCH pins the clock for reproducible outputs
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    when = (
        dt.datetime.fromtimestamp(int(epoch), dt.timezone.utc)
        if epoch is not None
        else dt.datetime.now(dt.timezone.utc).replace(microsecond=0)
    )
    return when.isoformat()


def _manifest(command: str, table_id: dict, args, **extra) -> dict:
    m = {
        "tool": "h2vqe",
        "version": __version__,
        "command": command,
        "timestamp": _timestamp(),
        "table": table_id,
    }
    for key in ("formulation", "mode", "shots", "seed", "beta"):
        if hasattr(args, key):
            m[key] = getattr(args, key)
    m.update(extra)
    return m


def _manifest_path(out: Path) -> Path:
    return out.with_name(out.stem + ".manifest.json")


def _write(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _optimizer_dict(cfg: NelderMeadConfig) -> dict:
    return {k: getattr(cfg, k) for k in cfg.__dataclass_fields__}


def _solve_rows(table, formulation, mode, shots, seed, beta, cfg):
    """Yield (row_index, row, point, oracle_energy, measured) in R order."""
    for i, row in enumerate(table):
        report = full_report(row)
        for b, block in enumerate(("A", "B")):
            for point in solve_block(row, formulation, block, beta, cfg):
                oracle = report.block(block)[point.level]
                measured = None
                if mode == "shots":
                    state = prepare(AnsatzSpec(family_for(formulation, block), point.theta_opt))
                    ss = np.random.SeedSequence([seed, i, b, point.level])
                    measured = energy_from_measurements(row, state, "shots", block=block, shots=shots, seed=ss)
                yield i, row, point, oracle, measured


def cmd_curve(args) -> int:
    table, table_id = _read_table(args.table)
    formulation = args.formulation.replace("-", "_")
    cfg = NelderMeadConfig()
    out = Path(args.out)
    mpath = _manifest_path(out)
    buf = io.StringIO()
    buf.write(f"# manifest: {mpath.name}\n")
    writer = csv.writer(buf, lineterminator="\n")
    header = CURVE_COLUMNS + (SHOT_COLUMNS if args.mode == "shots" else ())
    writer.writerow(header)
    results = []
    worst = 0.0
    for _, row, p, oracle, measured in _solve_rows(
        table, formulation, args.mode, args.shots, args.seed, args.beta, cfg
    ):
        energy = measured.energy if measured else p.energy
        err = abs(energy - oracle)
        worst = max(worst, err)
        cells = [row.cells()[0], p.block, p.level, _fmt_energy(energy), f"{p.theta_opt:.6f}",
                 p.evaluations, _fmt_energy(oracle), f"{err:.3e}"]
        if measured:
            cells += [_fmt_energy(measured.error), measured.shots]
        writer.writerow(cells)
        rec = p.as_dict() | {"oracle_energy": oracle, "abs_error": err}
        if measured:
            rec |= {"measured_energy": measured.energy, "energy_stderr": measured.error,
                    "variational_energy": p.energy}
        results.append(rec)
    manifest = _manifest(
        "curve", table_id, args, formulation=formulation, optimizer=_optimizer_dict(cfg),
        outputs=[out.name], results=results,
    )
    _write(out, buf.getvalue())
    _write(mpath, json.dumps(manifest, indent=2) + "\n")
    print(f"wrote {len(results)} rows to {out} (max abs_error {worst:.3e})")
    if args.mode == "exact" and worst >= EXACT_TOLERANCE:
        print(f"accuracy failure: max abs_error {worst:.3e} >= {EXACT_TOLERANCE:g}", file=sys.stderr)
        return EXIT_ACCURACY
    return EXIT_OK


def cmd_point(args) -> int:
    table, table_id = _read_table(args.table)
    row = table.row(args.R)
    formulation = args.formulation.replace("-", "_")
    block = args.block.upper()
    ground, excited = solve_block(row, formulation, block, args.beta)
    p = (ground, excited)[args.level]
    oracle = full_report(row).block(block)[args.level]
    rec = p.as_dict() | {"oracle_energy": oracle, "abs_error": abs(p.energy - oracle), "mode": args.mode}
    if args.mode == "shots":
        state = prepare(AnsatzSpec(family_for(formulation, block), p.theta_opt))
        m = energy_from_measurements(row, state, "shots", block=block, shots=args.shots, seed=args.seed)
        rec |= {"energy": m.energy, "variational_energy": p.energy, "energy_stderr": m.error,
                "shots": m.shots, "abs_error": abs(m.energy - oracle)}
    rec["manifest"] = _manifest("point", table_id, args)
    print(json.dumps(rec, indent=2))
    if args.mode == "exact" and rec["abs_error"] >= EXACT_TOLERANCE:
        return EXIT_ACCURACY
    return EXIT_OK


def cmd_oracle(args) -> int:
    table, table_id = _read_table(args.table)
    buf = io.StringIO()
    out = Path(args.out) if args.out else None
    if out:
        buf.write(f"# manifest: {_manifest_path(out).name}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["R", "e0", "e1", "e2", "e3", "A0", "A1", "B0", "B1", "residual", "block_union"])
    results, ok = [], True
    for row in table:
        rep = full_report(row)
        status = "pass" if rep.consistent else "fail"
        ok &= rep.consistent
        writer.writerow([row.cells()[0], *(f"{x:.10f}" for x in rep.eigenvalues_4q),
                         *(f"{x:.10f}" for x in rep.eigenvalues_A + rep.eigenvalues_B),
                         f"{rep.residual:.3e}", status])
        print(f"R={row.cells()[0]} block-union {status.upper()} (max deviation {rep.union_error:.2e})")
        results.append({"R": rep.R, "eigenvalues_4q": rep.eigenvalues_4q, "eigenvalues_A": rep.eigenvalues_A,
                        "eigenvalues_B": rep.eigenvalues_B, "residual": rep.residual, "block_union": status})
    if out:
        _write(out, buf.getvalue())
        manifest = _manifest("oracle", table_id, args, outputs=[out.name], results=results)
        _write(_manifest_path(out), json.dumps(manifest, indent=2) + "\n")
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK if ok else EXIT_ACCURACY


def read_curve(path: Path) -> tuple[list[dict], str | None]:
    """Parse a curve CSV; returns (records, manifest name)."""
    text = Path(path).read_text(encoding="utf-8")
    manifest = None
    header = None
    records = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            if line.startswith("# manifest:"):
                manifest = line.split(":", 1)[1].strip()
            continue
        cells = next(csv.reader([line]))
        if header is None:
            missing = [c for c in CURVE_COLUMNS if c not in cells]
            if missing:
                raise TableError(f"curve header lacks column(s) {', '.join(missing)}", lineno)
            header = cells
            continue
        if len(cells) != len(header):
            raise TableError(f"expected {len(header)} cells, found {len(cells)}", lineno)
        rec = dict(zip(header, cells))
        try:
            parsed = {
                "R": float(rec["R"]),
                "block": rec["block"],
                "level": int(rec["level"]),
                "energy": float(rec["energy"]),
                "oracle_energy": float(rec["oracle_energy"]),
                "energy_stderr": float(rec["energy_stderr"]) if "energy_stderr" in rec else None,
            }
        except ValueError as exc:
            raise TableError(f"malformed value ({exc})", lineno) from None
        if parsed["block"] not in ("A", "B") or parsed["level"] not in (0, 1):
            raise TableError("block must be A/B and level 0/1", lineno)
        records.append(parsed)
    if header is None:
        raise TableError("curve file has no header")
    return records, manifest


def plot_script(records: list[dict], data_name: str, source: str, manifest: str | None) -> tuple[str, str]:
    """gnuplot script (with inline datablocks) and the matching plain data file."""
    shots = any(r["energy_stderr"] is not None for r in records)
    series = []
    for block in ("A", "B"):
        for level in (0, 1):
            pts = sorted((r for r in records if r["block"] == block and r["level"] == level), key=lambda r: r["R"])
            if pts:
                series.append((f"{block}{level}", pts))
    data_lines, script = [], [
        f"# gnuplot script generated by h2vqe plot from {source}",
        f"# manifest: {manifest}" if manifest else "# manifest: none",
        f"# data also in {data_name}: one index per curve, columns R energy oracle_energy stderr",
        "",
    ]
    for name, pts in series:
        script.append(f"${name} << EOD")
        data_lines.append(f"# {name}")
        for r in pts:
            err = r["energy_stderr"] if r["energy_stderr"] is not None else 0.0
            line = f"{r['R']:.4f} {r['energy']:.6f} {r['oracle_energy']:.6f} {err:.6f}"
            script.append(line)
            data_lines.append(line)
        script.append("EOD")
        data_lines += ["", ""]
    script += [
        "",
        'set xlabel "Internuclear separation R (Angstrom)"',
        'set ylabel "Energy (Ha)"',
        "set key outside right",
        "set grid",
    ]
    plots = []
    for name, _ in series:
        label = f"block {name[0]}, level {name[1]}"
        if shots:
            plots.append(f'${name} using 1:3 with lines title "{label} (exact)"')
            plots.append(f'${name} using 1:2:4 with yerrorbars pt 7 title "{label} (shots)"')
        else:
            plots.append(f'${name} using 1:2 with linespoints title "{label}"')
    script.append("plot " + ", \\\n     ".join(plots))
    return "\n".join(script) + "\n", "\n".join(data_lines).rstrip("\n") + "\n"


def cmd_plot(args) -> int:
    src = Path(args.curve)
    records, manifest = read_curve(src)
    out = Path(args.out)
    data_path = out.with_suffix(".dat")
    script, data = plot_script(records, data_path.name, src.name, manifest)
    _write(out, script)
    _write(data_path, data)
    print(f"wrote {out} and {data_path}")
    return EXIT_OK


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _finite_float(text: str) -> float:
    v = float(text)
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError("must be finite")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="h2vqe", description="VQE/VQD energies of H2 on one or two qubits")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, modes=True):
        sp.add_argument("--table", help="coefficient CSV (default: bundled H2 STO-3G table)")
        if not modes:
            return
        sp.add_argument("--formulation", choices=("two-qubit", "one-qubit"), default="two-qubit")
        sp.add_argument("--mode", choices=("exact", "shots"), default="exact")
        sp.add_argument("--shots", type=_positive_int, default=DEFAULT_SHOTS)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--beta", type=_finite_float, default=None,
                        help="VQD deflation weight in Ha (default: 3.0, raised where it does not exceed the spread)")

    sp = sub.add_parser("curve", help="sweep every tabulated R, all four levels")
    common(sp)
    sp.add_argument("--out", required=True, help="curve CSV path; manifest written alongside")
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("point", help="one (R, block, level) as JSON")
    common(sp)
    sp.add_argument("--R", type=_finite_float, required=True, help="internuclear distance in Angstrom")
    sp.add_argument("--block", choices=("A", "B", "a", "b"), default="A")
    sp.add_argument("--level", type=int, choices=(0, 1), default=0)
    sp.set_defaults(func=cmd_point)

    sp = sub.add_parser("oracle", help="exact spectra for every tabulated R")
    common(sp, modes=False)
    sp.add_argument("--out", help="report CSV path (default: stdout)")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("plot", help="gnuplot script for a curve file")
    sp.add_argument("curve", help="curve CSV written by 'h2vqe curve'")
    sp.add_argument("--out", required=True, help="script path; data written next to it as .dat")
    sp.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OffGridError as exc:
        print(f"h2vqe: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (TableError, OSError, ValueError) as exc:
        print(f"h2vqe: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
