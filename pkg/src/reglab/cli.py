"""Command-line front end.

    reglab fit family.txt --kind reg --origin 1,1 --grid 5
    reglab hilbert-check family.txt --j 0 --series eq1.series --grid 4

Exit status: 0 on success, 1 when a fit fails or a series check finds
mismatches, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass

from .asymptotics import (
    EmptyRegion, FitFailed, NotStabilized, candidate_slopes, fit_envelope, necessary_witnesses,
    pd_stability, tabulate,
)
from .hilbert import compare_series_to_betti, parse_series
from .monomial import power_product
from .resolution import multigraded_betti
from .textformat import ParseError, parse_family

COMMANDS = ("gens", "betti", "table", "fit", "pd", "hilbert-check")


@dataclass
class RunConfig:
    command: str
    input_path: str
    grid_max: int = 6
    origin: tuple[int, ...] | None = None
    j: int | None = None
    kind: str = "reg"
    output: str = "text"
    series_path: str | None = None
    exp: tuple[int, ...] | None = None


class InputError(Exception):
    pass


def _int_tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reglab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input_path", help="ideal family file")
        p.add_argument("--output", choices=("text", "json", "csv"), default="text")
        if name in ("gens", "betti"):
            p.add_argument("--exp", type=_int_tuple, help="exponent a1,...,am (default all ones)")
        if name in ("table", "fit", "pd", "hilbert-check"):
            p.add_argument("--grid", dest="grid_max", type=int, default=4 if name == "hilbert-check" else 6)
        if name in ("table", "fit"):
            p.add_argument("--kind", choices=("t", "reg", "pd") if name == "table" else ("t", "reg"),
                           default="reg")
            p.add_argument("--j", type=int, help="homological index for --kind t")
        if name == "fit":
            p.add_argument("--origin", type=_int_tuple, help="region origin b1,...,bm (default all ones)")
        if name == "hilbert-check":
            p.add_argument("--j", type=int, required=True)
            p.add_argument("--series", dest="series_path", required=True)
    return parser


def config_from_args(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(**{k: v for k, v in vars(ns).items() if v is not None})


def _kind(config: RunConfig) -> str:
    if config.kind == "t":
        if config.j is None:
            raise InputError("--kind t needs --j")
        return f"t{config.j}"
    return config.kind


def _emit(config: RunConfig, payload: dict, text: str, csv_text: str | None, out):
    if config.output == "json":
        header = {k: list(v) if isinstance(v, tuple) else v for k, v in asdict(config).items()}
        json.dump({"config": header, "result": payload}, out, indent=2)
        out.write("\n")
    elif config.output == "csv":
        out.write(csv_text if csv_text is not None else text + "\n")
    else:
        out.write(text + "\n")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def run(config: RunConfig, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        return _run(config, out)
    except (InputError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _run(config: RunConfig, out) -> int:
    if config.command not in COMMANDS:
        raise InputError(f"unknown command {config.command!r}")
    family = parse_family(_read(config.input_path))
    m = family.m
    if config.grid_max < 1:
        raise InputError("--grid must be at least 1")
    if config.origin is None:
        config.origin = (1,) * m
    if config.exp is None and config.command in ("gens", "betti"):
        config.exp = (1,) * m
    for name in ("origin", "exp"):
        v = getattr(config, name)
        if v is not None and len(v) != m:
            raise InputError(f"--{name} needs {m} entries, got {len(v)}")

    if config.command == "gens":
        I = power_product(family, config.exp)
        gens = [g.to_string(family.ring) for g in I.gens]
        payload = {"a": list(config.exp), "gens": [list(g.exponents) for g in I.gens], "degrees": list(I.degrees)}
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(family.ring.names))
        w.writerows(g.exponents for g in I.gens)
        _emit(config, payload, f"I^{config.exp} = (" + ", ".join(gens) + ")", buf.getvalue(), out)
        return 0

    if config.command == "betti":
        table = multigraded_betti(power_product(family, config.exp))
        lines = [f"a = {config.exp}"]
        for j in range(table.pd + 1):
            graded = table.graded(j)
            lines.append(f"  beta_{j}: " + ", ".join(f"{v} in degree {u}" for u, v in sorted(graded.items())))
        lines.append(f"  t = {table.t}  pd = {table.pd}  reg = {table.reg}")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["j"] + [f"b{i + 1}" for i in range(family.ring.n)] + ["dim"])
        for (j, b), v in sorted(table.entries.items()):
            w.writerow([j, *b, v])
        _emit(config, table.to_dict(), "\n".join(lines), buf.getvalue(), out)
        return 0

    if config.command == "table":
        table = tabulate(family, _kind(config), config.grid_max)
        _emit(config, table.to_dict(), table.to_csv().rstrip("\n"), table.to_csv(), out)
        return 0

    if config.command == "fit":
        kind = _kind(config)
        table = tabulate(family, kind, config.grid_max)
        try:
            fit = fit_envelope(table, candidate_slopes(family), config.origin)
        except FitFailed as exc:
            retry = ",".join(str(b + 1) for b in config.origin)
            print(f"fit failed: {exc}; try --origin {retry}", file=sys.stderr)
            if config.output == "json":
                _emit(config, {"failed": True, "witness": list(exc.witness)}, "", None, out)
            return 1
        except EmptyRegion as exc:
            raise InputError(str(exc)) from None
        payload = fit.to_dict()
        payload["witnesses"] = [
            {"form": f.to_dict(), "a": list(a)} for f, a in necessary_witnesses(fit, table).items()
        ]
        _emit(config, payload, fit.pretty(), fit.to_csv(), out)
        return 0

    if config.command == "pd":
        try:
            p, origin = pd_stability(family, config.grid_max)
        except NotStabilized as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        payload = {"pd": p, "origin": list(origin), "grid_max": config.grid_max}
        text = f"pd(I^a) = {p} on [{','.join(map(str, origin))}]..[{','.join([str(config.grid_max)] * m)}]"
        _emit(config, payload, text, f"pd,{','.join(map(str, origin))}\n{p}\n", out)
        return 0

    series = parse_series(_read(config.series_path))
    report = compare_series_to_betti(series, family, config.j, config.grid_max)
    lines = [f"{len(report.mismatches)} mismatches"] + [str(x) for x in report.mismatches]
    if report.negative:
        lines.append(f"negative coefficients at {report.negative}")
    _emit(config, report.to_dict(), "\n".join(lines), None, out)
    return 0 if report.ok else 1


def main(argv=None) -> int:
    try:
        config = config_from_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
