"""Batch command-line surface for the engine.

One process runs one job.  Every command emits a single machine-readable
document (JSON by default, CSV on request) with the fixed envelope
{tower, level, command, results, timings, seed, version}; exit codes are
0 for success, 1 for a mathematical check failure (the document carries a
witness), 2 for invalid input, and 3 for a refused resource limit.
"""

from __future__ import annotations

import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field

import click

from . import __version__
from .characters import (
    character,
    kostka_number,
    kronecker_coefficient,
    littlewood_richardson,
    lr_and_kostka,
    stable_kronecker_oracle,
)
from .combinat import Partition, size
from .scalars import format_scalar

# Exact arithmetic makes cost explode with the level (dimensions grow like
# r!, (2r-1)!! and Bell(2r)); beyond these defaults a job must opt in.
LEVEL_CAPS = {
    "hecke": 5,
    "symmetric": 5,
    "tl": 4,
    "brauer": 4,
    "partition": 6,  # internal levels; 3 whole levels
}

EXIT_OK = 0
EXIT_MATH_FAILURE = 1
EXIT_INVALID = 2
EXIT_RESOURCE = 3


@dataclass
class JobSpec:
    """Everything that determines a job's output."""

    command: str
    tower: str | None = None
    param: int | None = None
    level: int | None = None
    cell: Partition | None = None
    nu: Partition | None = None
    lam: Partition | None = None
    mu: Partition | None = None
    inner_level: int | None = None
    r: int | None = None
    emit: tuple[str, ...] = ()
    fmt: str = "json"
    point: str | None = None
    seed: int = 0
    timings: bool = True
    allow_high_level: bool = False
    extras: dict = field(default_factory=dict)


class Timings:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.phases: dict[str, float | None] = {}

    def phase(self, name: str):
        return _Phase(self, name)


class _Phase:
    def __init__(self, t: Timings, name: str):
        self.t = t
        self.name = name

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        # The phase key is always present; the wall-clock value is dropped
        # when byte-identical reruns are requested.
        elapsed = round(time.perf_counter() - self.start, 6)
        self.t.phases[self.name] = elapsed if self.t.enabled else None
        return False


def parse_partition(text: str | None) -> Partition | None:
    if text is None:
        return None
    text = text.strip()
    if text in ("", "-", "0", "()"):
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise click.BadParameter(f"not a partition: {text!r}")
    if any(p <= 0 for p in parts) or any(
        parts[i] < parts[i + 1] for i in range(len(parts) - 1)
    ):
        raise click.BadParameter(f"not a weakly decreasing positive list: {text!r}")
    return parts


def _fmt_partition(p: Partition) -> str:
    return ",".join(map(str, p)) if p else "-"


def _jsonable(value):
    """Recursively render scalars and labels into JSON-safe primitives."""
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return format_scalar(value) if hasattr(value, "__add__") else str(value)


def emit_report(job: JobSpec, results, timings: Timings, out=None) -> None:
    doc = {
        "tower": job.tower,
        "level": job.level,
        "command": job.command,
        "results": _jsonable(results),
        "timings": timings.phases,
        "seed": job.seed,
        "version": __version__,
    }
    out = out or sys.stdout
    if job.fmt == "json":
        json.dump(doc, out, indent=2, sort_keys=False)
        out.write("\n")
    else:
        _emit_csv(doc, out)


def _emit_csv(doc: dict, out) -> None:
    """CSV rendering: the envelope as comment lines, results as rows."""
    writer = csv.writer(io.StringIO())
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for key in ("tower", "level", "command", "seed", "version"):
        out.write(f"# {key}: {doc[key]}\n")
    for name, value in doc["timings"].items():
        out.write(f"# timing {name}: {value}\n")
    results = doc["results"]
    if isinstance(results, dict) and "rows" in results and "columns" in results:
        writer.writerow([""] + list(results["columns"]))
        for label, row in zip(results["row_labels"], results["rows"]):
            writer.writerow([label] + list(row))
    elif isinstance(results, list) and results and isinstance(results[0], dict):
        keys = sorted({k for entry in results for k in entry})
        writer.writerow(keys)
        for entry in results:
            writer.writerow([entry.get(k, "") for k in keys])
    elif isinstance(results, dict):
        writer.writerow(["key", "value"])
        for k, v in results.items():
            writer.writerow([k, json.dumps(v) if isinstance(v, (dict, list)) else v])
    else:
        writer.writerow(["value"])
        writer.writerow([results])
    out.write(buf.getvalue())


def _make_tower(job: JobSpec):
    from .towers import make_tower

    if job.tower is None:
        raise click.BadParameter("this command needs --tower")
    cap = LEVEL_CAPS.get(job.tower)
    if cap is None:
        raise click.BadParameter(f"unknown tower {job.tower!r}")
    level = job.level if job.level is not None else cap
    if level > cap and not job.allow_high_level:
        click.echo(
            f"level {level} above the default cap {cap} for {job.tower}; "
            "rerun with --allow-high-level to accept the cost",
            err=True,
        )
        sys.exit(EXIT_RESOURCE)
    if job.tower == "partition" and job.param is None:
        raise click.BadParameter("partition tower needs --param n")
    tower = make_tower(job.tower, level, job.param)
    if job.point is not None:
        from .seminormal import specialized_copy

        tower = specialized_copy(tower, points=(job.point,))
    job.level = level
    return tower


def _cell_index(tower, level: int, lam: Partition) -> int:
    from .murphy import LevelData

    data = LevelData.get(tower, level)
    if lam not in data.cells:
        raise click.BadParameter(
            f"no cell {_fmt_partition(lam)} at level {level}; "
            f"cells: {[_fmt_partition(c) for c in data.cells]}"
        )
    return data.cell_index(lam)


def _finish(job: JobSpec, results, timings: Timings, ok: bool) -> None:
    emit_report(job, results, timings)
    sys.exit(EXIT_OK if ok else EXIT_MATH_FAILURE)


# ---------------------------------------------------------------------------
# Command bodies (shared by the CLI and by config-file jobs).


def run(job: JobSpec) -> None:
    handler = {
        "axioms": _run_axioms,
        "murphy": _run_murphy,
        "seminormal": _run_seminormal,
        "gram": _run_gram,
        "skew": _run_skew,
        "multiplicities": _run_multiplicities,
        "kronecker": _run_kronecker,
        "oracle": _run_oracle,
    }.get(job.command)
    if handler is None:
        raise click.BadParameter(f"unknown command {job.command!r}")
    handler(job)


def _run_axioms(job: JobSpec) -> None:
    from .checks import full_axiom_suite

    timings = Timings(job.timings)
    with timings.phase("build-and-check"):
        tower = _make_tower(job)
        report = full_axiom_suite(tower, job.level)
    _finish(job, report.to_json(), timings, report.passed)


def _run_murphy(job: JobSpec) -> None:
    from .murphy import LevelData

    timings = Timings(job.timings)
    with timings.phase("build"):
        tower = _make_tower(job)
        data = LevelData.get(tower, job.level)
    results = []
    for ci, lam in enumerate(data.cells):
        paths = data.paths[lam]
        entry = {
            "cell": _fmt_partition(lam),
            "dim": len(paths),
            "paths": [str(t) for t in paths],
        }
        if "basis" in job.emit:
            entry["basis"] = [
                {"s": str(s), "t": str(t), "element": str(data.m_elt[(ci, si, ti)])}
                for si, s in enumerate(paths)
                for ti, t in enumerate(paths)
            ]
        results.append(entry)
    _finish(job, results, timings, True)


def _run_seminormal(job: JobSpec) -> None:
    from .murphy import LevelData
    from .seminormal import seminormal_cell, seminormal_suite

    timings = Timings(job.timings)
    tower = _make_tower(job)
    if job.cell is None:
        with timings.phase("suite"):
            report = seminormal_suite(tower, job.level)
        _finish(job, report.to_json(), timings, report.passed)
    with timings.phase("cell"):
        ci = _cell_index(tower, job.level, job.cell)
        cell = seminormal_cell(tower, job.level, ci)
        data = LevelData.get(tower, job.level)
        labels = [str(t) for t in data.paths[job.cell]]
    results: dict = {"cell": _fmt_partition(job.cell), "dim": len(labels)}
    emit = job.emit or ("transition",)
    ok = True
    if "transition" in emit:
        with timings.phase("transition"):
            p, _ = cell.transition()
            ok, witness = cell.unitriangular()
        results["transition"] = {
            "columns": labels,
            "row_labels": labels,
            "rows": [[format_scalar(x) for x in row] for row in p],
        }
        results["unitriangular"] = ok
        if not ok:
            results["witness"] = witness
    if "gammas" in emit:
        with timings.phase("gammas"):
            gammas = cell.gammas()
        results["gammas"] = {
            lab: format_scalar(g) for lab, g in zip(labels, gammas)
        }
    _finish(job, results, timings, ok)


def _run_gram(job: JobSpec) -> None:
    from .linalg import mat_det
    from .murphy import LevelData

    timings = Timings(job.timings)
    with timings.phase("build"):
        tower = _make_tower(job)
        data = LevelData.get(tower, job.level)
    cells = (
        [job.cell] if job.cell is not None else list(data.cells)
    )
    results = []
    for lam in cells:
        ci = _cell_index(tower, job.level, lam)
        with timings.phase(f"gram-{_fmt_partition(lam)}"):
            g = data.gram_matrix(ci)
            det = mat_det(g, tower.domain)
        labels = [str(t) for t in data.paths[lam]]
        results.append(
            {
                "cell": _fmt_partition(lam),
                "columns": labels,
                "row_labels": labels,
                "rows": [[format_scalar(x) for x in row] for row in g],
                "determinant": format_scalar(det),
            }
        )
    if job.cell is not None and job.fmt == "csv":
        # A single Gram matrix prints as a labeled table.
        results = results[0]
    _finish(job, results, timings, True)


def _run_skew(job: JobSpec) -> None:
    from .skew import SkewModule, skew_multiplicities

    timings = Timings(job.timings)
    tower = _make_tower(job)
    if job.nu is None or job.lam is None:
        raise click.BadParameter("skew needs --nu and --lam")
    r = job.level
    s = job.inner_level
    if s is None:
        s = size(job.lam) * (2 if job.tower == "partition" else 1)
    if size(job.nu) > (r if job.tower != "partition" else r // 2) and job.tower in (
        "symmetric",
        "hecke",
    ):
        raise click.BadParameter("|nu| larger than the level")
    with timings.phase("module"):
        module = SkewModule(tower, r, s, job.nu, job.lam)
    with timings.phase("multiplicities"):
        mults = skew_multiplicities(tower, r, s, job.nu, job.lam)
    results = {
        "nu": _fmt_partition(job.nu),
        "lam": _fmt_partition(job.lam),
        "outer_level": r,
        "inner_level": s,
        "dim": module.dim,
        "multiplicities": {
            _fmt_partition(mu): m for mu, m in sorted(mults.items()) if m
        },
    }
    _finish(job, results, timings, True)


def _run_multiplicities(job: JobSpec) -> None:
    from .skew import module_multiplicities, right_ideal_module

    timings = Timings(job.timings)
    tower = _make_tower(job)
    if job.mu is None:
        raise click.BadParameter("multiplicities needs --mu (ideal generator cell)")
    with timings.phase("ideal"):
        dim, act = right_ideal_module(tower, job.level, job.mu)
    with timings.phase("decompose"):
        mults = module_multiplicities(tower, job.level, dim, act)
    results = {
        "module": f"right ideal of the cell generator for {_fmt_partition(job.mu)}",
        "dim": dim,
        "multiplicities": {
            _fmt_partition(lam): m for lam, m in sorted(mults.items()) if m
        },
    }
    _finish(job, results, timings, True)


def _run_kronecker(job: JobSpec) -> None:
    from .skew import stable_kronecker_engine
    from .tensorspace import stable_kronecker_tensor

    timings = Timings(job.timings)
    if job.lam is None or job.mu is None or job.nu is None:
        raise click.BadParameter("kronecker needs --lam, --mu and --nu")
    lam, mu, nu = job.lam, job.mu, job.nu
    r = size(lam) + size(mu)
    if job.r is not None and job.r != r:
        raise click.BadParameter(f"--r must equal |lam| + |mu| = {r}")
    if r > 4 and not job.allow_high_level:
        click.echo(
            f"r = {r} above the supported range for exact computation",
            err=True,
        )
        sys.exit(EXIT_RESOURCE)
    route = "direct" if r <= 3 or size(lam) in (0, r) else "tensor"
    with timings.phase("engine"):
        if route == "direct":
            value = stable_kronecker_engine(lam, mu, nu)
        else:
            value = stable_kronecker_tensor(lam, mu, nu)
    with timings.phase("oracle"):
        oracle = stable_kronecker_oracle(lam, mu, nu)
    ok = value == oracle
    results = {
        "lam": _fmt_partition(lam),
        "mu": _fmt_partition(mu),
        "nu": _fmt_partition(nu),
        "r": r,
        "route": route,
        "value": value,
        "oracle": oracle,
        "agree": ok,
    }
    if not ok:
        results["witness"] = {
            "rerun": f"celltower kronecker --lam {_fmt_partition(lam)} "
            f"--mu {_fmt_partition(mu)} --nu {_fmt_partition(nu)}"
        }
    _finish(job, results, timings, ok)


def _run_oracle(job: JobSpec) -> None:
    timings = Timings(job.timings)
    kind = job.extras.get("kind", "kronecker")
    lam, mu, nu = job.lam, job.mu, job.nu
    with timings.phase("oracle"):
        if kind == "kronecker":
            value = kronecker_coefficient(lam, mu, nu)
        elif kind == "stable":
            value = stable_kronecker_oracle(lam, mu, nu)
        elif kind == "lr":
            value = littlewood_richardson(lam, mu, nu)
        elif kind == "kostka":
            value = kostka_number(lam, mu)
        elif kind == "skew-kostka":
            value = lr_and_kostka(lam, mu, nu)[1]
        elif kind == "character":
            value = character(lam, mu)
        else:
            raise click.BadParameter(f"unknown oracle kind {kind!r}")
    _finish(job, {"kind": kind, "value": value}, timings, True)


# ---------------------------------------------------------------------------
# Click wiring.


def _common(f):
    options = [
        click.option("--tower", type=str, default=None),
        click.option("--param", type=int, default=None, help="tower parameter n"),
        click.option("--level", type=int, default=None),
        click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json"),
        click.option("--point", type=str, default=None, help="specialization point a/b"),
        click.option("--seed", type=int, default=0),
        click.option("--no-timings", is_flag=True, help="null timings for byte-identical reruns"),
        click.option("--allow-high-level", is_flag=True),
        click.option("--config", type=click.Path(exists=True), default=None),
    ]
    for opt in reversed(options):
        f = opt(f)
    return f


def _job_from(command: str, config, **kwargs) -> JobSpec:
    no_timings = kwargs.pop("no_timings", False)
    kwargs["timings"] = not no_timings
    extras = kwargs.pop("extras", {})
    if config is not None:
        with open(config) as fh:
            loaded = json.load(fh)
        allowed = set(JobSpec.__dataclass_fields__) | {"kind"}
        unknown = set(loaded) - allowed
        if unknown:
            raise click.BadParameter(f"unknown config fields: {sorted(unknown)}")
        for key, value in loaded.items():
            if key == "kind":
                extras["kind"] = value
            elif key in ("cell", "nu", "lam", "mu") and isinstance(value, str):
                kwargs.setdefault(key, None)
                if kwargs[key] is None:
                    kwargs[key] = parse_partition(value)
            elif kwargs.get(key) in (None, (), False, 0) or key not in kwargs:
                kwargs[key] = value
    kwargs.pop("command", None)
    return JobSpec(command=command, extras=extras, **kwargs)


@click.group()
def main() -> None:
    """Exact engine for towers of diagram algebras."""


@main.command("axioms")
@_common
@click.option("--max-level", type=int, default=None)
def cmd_axioms(config, max_level, **kwargs):
    if max_level is not None:
        kwargs["level"] = max_level
    run(_job_from("axioms", config, **kwargs))


@main.command("murphy")
@_common
@click.option("--emit", multiple=True, type=click.Choice(["paths", "basis"]))
def cmd_murphy(config, **kwargs):
    run(_job_from("murphy", config, **kwargs))


@main.command("seminormal")
@_common
@click.option("--cell", type=str, default=None)
@click.option("--emit", multiple=True, type=click.Choice(["transition", "gammas"]))
def cmd_seminormal(config, cell, **kwargs):
    kwargs["cell"] = parse_partition(cell)
    run(_job_from("seminormal", config, **kwargs))


@main.command("gram")
@_common
@click.option("--cell", type=str, default=None)
def cmd_gram(config, cell, **kwargs):
    kwargs["cell"] = parse_partition(cell)
    run(_job_from("gram", config, **kwargs))


@main.command("skew")
@_common
@click.option("--nu", type=str, default=None)
@click.option("--lam", "--lambda", "lam", type=str, default=None)
@click.option("--inner-level", type=int, default=None)
def cmd_skew(config, nu, lam, **kwargs):
    kwargs["nu"] = parse_partition(nu)
    kwargs["lam"] = parse_partition(lam)
    run(_job_from("skew", config, **kwargs))


@main.command("multiplicities")
@_common
@click.option("--mu", type=str, default=None)
def cmd_multiplicities(config, mu, **kwargs):
    kwargs["mu"] = parse_partition(mu)
    run(_job_from("multiplicities", config, **kwargs))


@main.command("kronecker")
@_common
@click.option("--lam", "--lambda", "lam", type=str, default=None)
@click.option("--mu", type=str, default=None)
@click.option("--nu", type=str, default=None)
@click.option("--r", type=int, default=None)
def cmd_kronecker(config, lam, mu, nu, **kwargs):
    kwargs["lam"] = parse_partition(lam)
    kwargs["mu"] = parse_partition(mu)
    kwargs["nu"] = parse_partition(nu)
    run(_job_from("kronecker", config, **kwargs))


@main.command("oracle")
@_common
@click.option(
    "--kind",
    type=click.Choice(["kronecker", "stable", "lr", "kostka", "skew-kostka", "character"]),
    default="kronecker",
)
@click.option("--alpha", "--lam", "lam", type=str, default=None)
@click.option("--beta", "--mu", "mu", type=str, default=None)
@click.option("--gamma", "--nu", "nu", type=str, default=None)
def cmd_oracle(config, kind, lam, mu, nu, **kwargs):
    kwargs["lam"] = parse_partition(lam)
    kwargs["mu"] = parse_partition(mu)
    kwargs["nu"] = parse_partition(nu)
    kwargs["extras"] = {"kind": kind}
    run(_job_from("oracle", config, **kwargs))


if __name__ == "__main__":
    main()
