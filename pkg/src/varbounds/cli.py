"""Command-line surface and file I/O.

Commands: ``check`` (verify bounds on a user-supplied instance), ``sweep``
(averaged-bound curves over purity as CSV, optionally with Monte Carlo
columns), ``sample`` (property sweep over random ensembles), ``witness``
(tightness certification), and ``lemma-scan`` (grid scan of the scalar
ratio).

Exit codes: 0 success, 2 a numerical bound check failed, 3 maximally mixed
state where a witness was requested, 64 parse/usage error, 65 operator
validation error, 66 I/O error.  Instance files are JSON documents with
matrices encoded as row-major nested arrays of [re, im] pairs.
"""

from __future__ import annotations

import json
import sys

import click
import numpy as np

from .bounds import (
    BoundReport,
    lemma_grid_scan,
    single_bound_report,
    tight_witness,
)
from .errors import InvalidS, MaximallyMixedState, ValidationError
from .products import product_report
from .qubit import BOUND_NAMES, averaged_bounds_analytic, averaged_bounds_monte_carlo
from .states import (
    DensityMatrix,
    Observable,
    make_density,
    make_observable,
    random_density,
    random_observable,
)

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_MAXIMALLY_MIXED = 3
EXIT_PARSE = 64
EXIT_VALIDATION = 65
EXIT_IO = 66

SLACK_TOL = 1e-9


class ParseError(ValueError):
    """The instance file is not valid JSON or not the expected shape."""


def matrix_to_pairs(M: np.ndarray) -> list:
    """Encode a complex matrix as nested [re, im] pairs (exact for doubles)."""
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(M, dtype=complex)]


def matrix_from_pairs(node, dim: int, what: str) -> np.ndarray:
    """Decode the nested [re, im] encoding, validating the shape."""
    if not isinstance(node, list) or len(node) != dim:
        raise ParseError(f"{what}: expected {dim} rows")
    out = np.zeros((dim, dim), dtype=complex)
    for i, row in enumerate(node):
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"{what}: row {i} must have {dim} entries")
        for j, entry in enumerate(row):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(x, (int, float)) for x in entry)
            ):
                raise ParseError(f"{what}: entry ({i},{j}) must be an [re, im] pair")
            out[i, j] = complex(entry[0], entry[1])
    return out


def load_instance(path: str):
    """Read an instance file -> (rho, observables, s_values or None).

    Raises ``OSError`` for unreadable files, ``ParseError`` for structural
    problems, and ``ValidationError`` subclasses when an operator fails its
    invariants (the exception class names the violated invariant).
    """
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("instance file must be a JSON object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise ParseError("'dim' must be a positive integer")
    if "rho" not in doc:
        raise ParseError("missing 'rho'")
    obs_node = doc.get("observables")
    if not isinstance(obs_node, dict) or not obs_node:
        raise ParseError("'observables' must be a non-empty object")
    s_values = doc.get("s_values")
    if s_values is not None:
        if not isinstance(s_values, list) or not all(
            isinstance(x, (int, float)) for x in s_values
        ):
            raise ParseError("'s_values' must be a list of numbers")
        s_values = [float(x) for x in s_values]
    rho = make_density(matrix_from_pairs(doc["rho"], dim, "rho"))
    observables = {
        name: make_observable(matrix_from_pairs(node, dim, f"observable {name!r}"))
        for name, node in obs_node.items()
    }
    return rho, observables, s_values


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_instance_or_exit(path: str):
    try:
        return load_instance(path)
    except OSError as exc:
        _fail(EXIT_IO, f"cannot read {path}: {exc}")
    except ParseError as exc:
        _fail(EXIT_PARSE, str(exc))
    except (ValidationError, InvalidS) as exc:
        _fail(EXIT_VALIDATION, f"{type(exc).__name__}: {exc}")


@click.group()
def main():
    """Variance lower bounds for single observables: check, sweep, certify."""


@main.command()
@click.argument("instance", type=str)
@click.option("--s", "s_flags", multiple=True, type=float, help="Exponent s (repeatable).")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "json"]),
    default="table",
    show_default=True,
    help="Output format.",
)
def check(instance: str, s_flags, fmt: str):
    """Evaluate every bound on the observables of an instance file.

    Exits 0 when every slack is >= -1e-9 and 2 on any violation.
    """
    rho, observables, file_s = _load_instance_or_exit(instance)
    s_list = list(s_flags) or file_s or [0.5, 1.0]
    reports: list[tuple[str, BoundReport]] = []
    try:
        for name, A in observables.items():
            for s in s_list:
                reports.append((name, single_bound_report(rho, A, s)))
    except (ValidationError, InvalidS) as exc:
        _fail(EXIT_VALIDATION, f"{type(exc).__name__}: {exc}")
    all_pass = all(rep.slack >= -SLACK_TOL for _, rep in reports)
    if fmt == "json":
        payload = {
            "instance": instance,
            "reports": [dict(observable=name, **rep.to_dict()) for name, rep in reports],
            "all_pass": all_pass,
        }
        click.echo(json.dumps(payload, indent=2))
    else:
        columns = (
            "variance", "classical", "comm_sq", "coeff", "luo", "optimal", "sharp", "slack"
        )
        click.echo(f"{'observable':<14}{'s':>6}" + "".join(f"{c:>17}" for c in columns))
        for name, rep in reports:
            coeff = "MM" if rep.coefficient is None else f"{rep.coefficient:.10g}"
            cells = (
                f"{rep.variance:.10g}",
                f"{rep.classical_variance:.10g}",
                f"{rep.comm_norm_sq:.10g}",
                coeff,
                f"{rep.luo_bound:.10g}",
                f"{rep.optimal_bound:.10g}",
                f"{rep.sharp_bound:.10g}",
                f"{rep.slack:.10g}",
            )
            click.echo(f"{name:<14}{rep.s:>6g}" + "".join(f"{c:>17}" for c in cells))
    if not all_pass:
        click.echo("bound violation: slack below -1e-9", err=True)
        sys.exit(EXIT_VIOLATION)


@main.command()
@click.option("--p-min", default=0.5, show_default=True, help="Lowest purity.")
@click.option("--p-max", default=1.0, show_default=True, help="Highest purity.")
@click.option("--steps", default=101, show_default=True, help="Grid points.")
@click.option(
    "--mc-samples",
    default=0,
    show_default=True,
    help="Monte Carlo samples per row (0 disables MC columns).",
)
@click.option("--seed", default=0, show_default=True, help="Base seed; row i uses seed+i.")
@click.option("--out", default="-", show_default=True, help="CSV path ('-' for stdout).")
def sweep(p_min: float, p_max: float, steps: int, mc_samples: int, seed: int, out: str):
    """Write the averaged-bound curves over a purity grid as CSV.

    With --mc-samples > 0, appends _mc and _se columns per bound and exits
    2 unless every estimate is within 5 standard errors of its analytic
    value.
    """
    if not 0.5 <= p_min <= p_max <= 1.0:
        _fail(EXIT_PARSE, f"need 0.5 <= p_min <= p_max <= 1, got [{p_min}, {p_max}]")
    if steps < 1:
        _fail(EXIT_PARSE, "steps must be >= 1")
    header = ["purity", *BOUND_NAMES]
    if mc_samples > 0:
        for name in BOUND_NAMES:
            header += [f"{name}_mc", f"{name}_se"]
    lines = [",".join(header)]
    all_within = True
    grid = np.linspace(p_min, p_max, steps)
    for i, P in enumerate(grid):
        analytic = averaged_bounds_analytic(float(P))
        row = [_fmt(float(P)), *(_fmt(v) for v in analytic.as_tuple())]
        if mc_samples > 0:
            mc = averaged_bounds_monte_carlo(float(P), mc_samples, seed + i)
            for name in BOUND_NAMES:
                est = mc.estimate(name)
                row += [_fmt(est.mean), _fmt(est.se)]
                # 1e-12 absolute guard: bounds that are per-sample constant
                # have se ~ 0 with only float-accumulation spread.
                if abs(est.mean - getattr(analytic, name)) > 5.0 * est.se + 1e-12:
                    all_within = False
        lines.append(",".join(row))
    text = "\n".join(lines) + "\n"
    try:
        if out == "-":
            click.echo(text, nl=False)
        else:
            with open(out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
    except OSError as exc:
        _fail(EXIT_IO, f"cannot write {out}: {exc}")
    if not all_within:
        click.echo("Monte Carlo estimate outside 5 standard errors", err=True)
        sys.exit(EXIT_VIOLATION)


@main.command()
@click.option("--dim", default=2, show_default=True, help="Hilbert space dimension.")
@click.option("--n", "n_instances", default=100, show_default=True, help="Instances.")
@click.option("--rank", default=None, type=int, help="State rank (default: dim).")
@click.option("--s", "s_flags", multiple=True, type=float, help="Exponent s (repeatable).")
@click.option("--seed", default=0, show_default=True, help="Base seed.")
def sample(dim: int, n_instances: int, rank: int | None, s_flags, seed: int):
    """Run the bound and product invariants on a random ensemble.

    Prints the minimum slack per bound over the ensemble; exits 0 iff no
    slack falls below -1e-9.
    """
    if dim < 2:
        _fail(EXIT_PARSE, "dim must be >= 2")
    rank = dim if rank is None else rank
    if not 1 <= rank <= dim:
        _fail(EXIT_PARSE, f"rank must lie in [1, {dim}]")
    if n_instances < 1:
        _fail(EXIT_PARSE, "need at least one instance")
    s_list = list(s_flags) or [0.5, 1.0]
    single_min = {s: {"sharp": np.inf, "optimal": np.inf, "luo": np.inf} for s in s_list}
    product_min = {
        s: {k: np.inf for k in ("robertson", "schrodinger", "luo", "optimal", "sharp")}
        for s in s_list
    }
    sharp_abs_max = 0.0
    classical_min = np.inf
    chain_min = np.inf
    try:
        for i in range(n_instances):
            rho = random_density(dim, rank, seed + 3 * i)
            A = random_observable(dim, seed + 3 * i + 1)
            B = random_observable(dim, seed + 3 * i + 2)
            for s in s_list:
                rep = single_bound_report(rho, A, s)
                single_min[s]["sharp"] = min(single_min[s]["sharp"], rep.slack)
                single_min[s]["optimal"] = min(
                    single_min[s]["optimal"], rep.variance - rep.optimal_bound
                )
                single_min[s]["luo"] = min(single_min[s]["luo"], rep.variance - rep.luo_bound)
                if dim == 2:
                    sharp_abs_max = max(sharp_abs_max, abs(rep.slack))
                if s == 0.5:
                    chain_min = min(chain_min, rep.optimal_bound - rep.luo_bound)
                classical_min = min(classical_min, rep.variance - rep.classical_variance)
                prep = product_report(rho, A, B, s)
                for key, val in (
                    ("robertson", prep.robertson),
                    ("schrodinger", prep.schrodinger),
                    ("luo", prep.luo_product),
                    ("optimal", prep.optimal_product),
                    ("sharp", prep.sharp_product),
                ):
                    product_min[s][key] = min(
                        product_min[s][key], prep.variance_product - val
                    )
    except (ValidationError, InvalidS) as exc:
        _fail(EXIT_VALIDATION, f"{type(exc).__name__}: {exc}")
    click.echo(f"ensemble: dim={dim} rank={rank} n={n_instances} seed={seed}")
    violated = False
    for s in s_list:
        parts = " ".join(f"{k}={single_min[s][k]:.6e}" for k in ("sharp", "optimal", "luo"))
        click.echo(f"single s={s:g}: min slack {parts}")
        violated |= any(v < -SLACK_TOL for v in single_min[s].values())
        parts = " ".join(f"{k}={product_min[s][k]:.6e}" for k in product_min[s])
        click.echo(f"product s={s:g}: min slack {parts}")
        violated |= any(v < -SLACK_TOL for v in product_min[s].values())
    click.echo(f"classical: min (variance - classical) = {classical_min:.6e}")
    violated |= classical_min < -SLACK_TOL
    if 0.5 in s_list:
        click.echo(f"chain s=1/2: min (optimal - luo) = {chain_min:.6e}")
        violated |= chain_min < -1e-12
    if dim == 2:
        click.echo(f"qubit identity: max |sharp slack| = {sharp_abs_max:.6e}")
        violated |= sharp_abs_max > SLACK_TOL
    if violated:
        click.echo("violation beyond tolerance", err=True)
        sys.exit(EXIT_VIOLATION)
    click.echo("OK: no violation beyond -1e-9")


@main.command()
@click.option("--instance", default=None, help="Instance file providing the state.")
@click.option("--dim", default=None, type=int, help="Random state dimension.")
@click.option("--seed", default=0, show_default=True, help="Seed for the random state.")
@click.option("--s", "s_flags", multiple=True, type=float, help="Exponent s (repeatable).")
def witness(instance: str | None, dim: int | None, seed: int, s_flags):
    """Emit the tightness witness for a state and certify equality.

    Exits 0 iff |slack| <= 1e-9 at every s and inflating the coefficient by
    (1 + 1e-6) produces a strict violation; exits 3 for a maximally mixed
    state.
    """
    if instance is None and dim is None:
        _fail(EXIT_PARSE, "provide --instance or --dim")
    if instance is not None:
        rho, _, _ = _load_instance_or_exit(instance)
    else:
        if dim < 2:
            _fail(EXIT_PARSE, "dim must be >= 2")
        rho = random_density(dim, dim, seed)
    s_list = list(s_flags) or [0.5, 1.0, 2.0]
    try:
        A = tight_witness(rho)
    except MaximallyMixedState as exc:
        click.echo(f"maximally mixed: {exc}", err=True)
        sys.exit(EXIT_MAXIMALLY_MIXED)
    click.echo(json.dumps({"dim": rho.dim, "witness": matrix_to_pairs(A.matrix)}))
    all_ok = True
    for s in s_list:
        try:
            rep = single_bound_report(rho, A, s)
        except InvalidS as exc:
            _fail(EXIT_VALIDATION, f"InvalidS: {exc}")
        inflated_slack = rep.slack - 1e-6 * rep.optimal_bound
        ok = abs(rep.slack) <= SLACK_TOL and inflated_slack < 0.0
        all_ok &= ok
        click.echo(
            f"s={s:g}: slack={rep.slack:.6e} inflated_slack={inflated_slack:.6e} "
            f"{'ok' if ok else 'FAIL'}"
        )
    if not all_ok:
        click.echo("witness certification failed", err=True)
        sys.exit(EXIT_VIOLATION)


@main.command("lemma-scan")
@click.option("--m", "lower", default=0.1, show_default=True, help="Lower endpoint m > 0.")
@click.option("--M", "upper", default=0.9, show_default=True, help="Upper endpoint M > m.")
@click.option("--grid", default=200, show_default=True, help="Grid points per axis.")
@click.option("--s", "s_flags", multiple=True, type=float, help="Exponent s (repeatable).")
def lemma_scan(lower: float, upper: float, grid: int, s_flags):
    """Scan the scalar ratio (x^s - y^s)²/(x + y) over [m, M]².

    Exits 0 iff the grid maximum never exceeds the corner value F(M, m).
    """
    if not 0 < lower < upper:
        _fail(EXIT_PARSE, f"need 0 < m < M, got m={lower}, M={upper}")
    if grid < 2:
        _fail(EXIT_PARSE, "grid must be >= 2")
    s_list = list(s_flags) or [0.5, 0.75, 1.0, 2.0]
    all_ok = True
    for s in s_list:
        try:
            scan = lemma_grid_scan(lower, upper, grid, s)
        except InvalidS as exc:
            _fail(EXIT_VALIDATION, f"InvalidS: {exc}")
        all_ok &= scan.ok
        click.echo(
            f"s={s:g}: grid max {_fmt(scan.grid_max)} at "
            f"({_fmt(scan.x_at_max)}, {_fmt(scan.y_at_max)}); "
            f"corner F(M,m) = {_fmt(scan.corner)} -> {'ok' if scan.ok else 'FAIL'}"
        )
    if not all_ok:
        click.echo("grid maximum exceeds the corner value", err=True)
        sys.exit(EXIT_VIOLATION)


if __name__ == "__main__":
    main()
