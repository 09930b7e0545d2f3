"""Command-line front end.

Exit codes keep three meanings apart: 0 when every requested check
passes, 1 when a mathematical property fails (the failure always comes
with a witness in the same format the tool accepts as input), 2 for
unusable input or flags.  Text output carries no timestamps; JSON output
gets a generated_at envelope field unless --deterministic asks for
byte-identical reruns.
"""

from __future__ import annotations

import json
import os
import re

import click

from .algebra import Algebra, direct_sum, find_unit, is_alternative, load_algebra, save_algebra
from .commuting import (LinearMap, decompose, decompose_oracle, exhaustive_commuting_check,
                        is_anti_commuting, is_commuting, load_map, random_commuting_map)
from .constructions import cayley_dickson_algebra, matrix_algebra, zorn
from .errors import (BudgetExceededError, DecompositionError, HypothesisError,
                     NotCommutingError, PreconditionError)
from .fields import PrimeField, RationalField
from .lemmas import run_all
from .peirce import (check_peirce_relations, hypothesis_check, nucleus, peirce_decompose,
                     prime_check_exhaustive, verify_idempotent)
from .peirce import center as center_of


def common_options(fn):
    fn = click.option("--format", "fmt", type=click.Choice(["text", "json"]),
                      default="text", show_default=True,
                      help="Report format.")(fn)
    fn = click.option("--deterministic", is_flag=True,
                      help="Omit the generated_at envelope field from JSON output.")(fn)
    fn = click.option("--seed", type=int, default=0, show_default=True,
                      help="Seed for --map random.")(fn)
    fn = click.option("--budget", type=int, default=1_000_000, show_default=True,
                      help="Cap on exhaustive enumeration size.")(fn)
    return fn


def emit(command: str, payload: dict, lines: list[str], fmt: str,
         deterministic: bool) -> None:
    if fmt == "json":
        envelope = {"command": command, "report": payload}
        if not deterministic:
            from datetime import datetime, timezone
            envelope["generated_at"] = datetime.now(timezone.utc).isoformat()
        click.echo(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        for line in lines:
            click.echo(line)


def parse_field(token: str):
    token = token.strip().lower()
    if token == "q":
        return RationalField()
    m = re.fullmatch(r"p(\d+)", token)
    if m:
        try:
            return PrimeField(int(m.group(1)))
        except ValueError as exc:
            raise click.UsageError(str(exc))
    raise click.UsageError(f"unknown field {token!r}; use q or p<prime>, e.g. p5")


def load_algebra_arg(path: str) -> Algebra:
    try:
        return load_algebra(path)
    except OSError as exc:
        raise click.UsageError(f"cannot read algebra file: {exc}")
    except (ValueError, KeyError, TypeError) as exc:
        raise click.UsageError(f"bad algebra file {path}: {exc}")


def parse_element(algebra: Algebra, token: str):
    """An element given as a coords file, a basis label, or inline scalars."""
    if os.path.exists(token):
        try:
            with open(token) as fh:
                raw = json.load(fh)
        except (OSError, ValueError) as exc:
            raise click.UsageError(f"cannot read element file {token}: {exc}")
        coords = raw.get("coords") if isinstance(raw, dict) else raw
        if not isinstance(coords, list):
            raise click.UsageError(f"element file {token} must hold a coords list")
        token_list = [str(c) for c in coords]
    elif token in algebra.basis_labels:
        return algebra.basis_element(algebra.label_index(token))
    else:
        token_list = token.split(",")
    if len(token_list) != algebra.dim:
        raise click.UsageError(
            f"element needs {algebra.dim} coordinates, got {len(token_list)}")
    try:
        coords = [algebra.field.parse(t) for t in token_list]
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"bad element coordinate: {exc}")
    return algebra.element(coords)


def load_map_arg(algebra: Algebra, token: str, seed: int) -> LinearMap:
    if token == "random":
        return random_commuting_map(algebra, seed)
    if not os.path.exists(token):
        raise click.UsageError(f"map file not found: {token} (or pass --map random)")
    try:
        return load_map(algebra, token)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise click.UsageError(f"bad map file {token}: {exc}")


def element_str(el) -> str:
    return ",".join(el.to_strings())


def witness_lines(witness: dict) -> list[str]:
    out = []
    for key, value in witness.items():
        if isinstance(value, list) and value and isinstance(value[0], str):
            value = ",".join(value)
        elif isinstance(value, list):
            value = " | ".join(",".join(v) for v in value)
        out.append(f"  witness {key}: {value}")
    return out


def guarded_peirce(algebra: Algebra, e1, ctx):
    """Peirce data with input problems mapped to exit 2 and math failures to 1."""
    try:
        ok = verify_idempotent(algebra, e1)
    except PreconditionError as exc:
        raise click.UsageError(str(exc))
    if not ok:
        raise click.UsageError(
            f"{element_str(e1)} is not a nontrivial idempotent of this algebra")
    try:
        return peirce_decompose(algebra, e1)
    except PreconditionError as exc:
        click.echo(f"FAIL: {exc}")
        ctx.exit(1)


@click.group()
def main():
    """Exact computations in finite-dimensional alternative algebras."""


# ----------------------------------------------------------------------
# generation


def default_out(algebra: Algebra) -> str:
    # keep minus signs visible so CD2(Q;-1,-1) and CD2(Q;1,1) get distinct files
    slug = algebra.name.lower().replace("-", "m")
    return re.sub(r"[^a-z0-9]+", "", slug) + ".json"


def write_generated(algebra: Algebra, idem, out: str | None, fmt: str,
                    deterministic: bool) -> None:
    path = out or default_out(algebra)
    save_algebra(algebra, path)
    idem_path = None
    if idem is not None:
        idem_path = os.path.splitext(path)[0] + ".idem.json"
        with open(idem_path, "w") as fh:
            json.dump({"coords": idem.to_strings()}, fh, indent=2)
            fh.write("\n")
    payload = {"algebra": path, "idempotent": idem_path,
               "dim": algebra.dim, "field": algebra.field.label, "name": algebra.name}
    lines = [f"wrote {path} ({algebra.name}, dim {algebra.dim})"]
    if idem_path:
        lines.append(f"wrote {idem_path} (idempotent {element_str(idem)})")
    emit("gen", payload, lines, fmt, deterministic)


@main.group()
def gen():
    """Write a builtin algebra (and its canonical idempotent) to JSON files."""


@gen.command("matrix")
@click.option("--n", type=int, default=2, show_default=True, help="Matrix size.")
@click.option("--field", "field_token", default="q", show_default=True,
              help="Scalar field: q or p<prime>.")
@click.option("--out", type=click.Path(), default=None,
              help="Output path (defaults to a name derived from the algebra).")
@common_options
def gen_matrix(n, field_token, out, fmt, deterministic, seed, budget):
    field = parse_field(field_token)
    try:
        algebra, e11 = matrix_algebra(field, n)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    write_generated(algebra, e11, out, fmt, deterministic)


@gen.command("zorn")
@click.option("--field", "field_token", default="q", show_default=True,
              help="Scalar field: q or p<prime>.")
@click.option("--out", type=click.Path(), default=None)
@common_options
def gen_zorn(field_token, out, fmt, deterministic, seed, budget):
    algebra, e11 = zorn(parse_field(field_token))
    write_generated(algebra, e11, out, fmt, deterministic)


@gen.command("cayley-dickson")
@click.option("--steps", type=int, required=True, help="Number of doublings.")
@click.option("--gammas", default=None,
              help="Comma-separated doubling parameters, one per step (default all 1).")
@click.option("--field", "field_token", default="q", show_default=True)
@click.option("--out", type=click.Path(), default=None)
@common_options
def gen_cd(steps, gammas, field_token, out, fmt, deterministic, seed, budget):
    field = parse_field(field_token)
    if steps < 1:
        raise click.UsageError("--steps must be at least 1")
    if gammas is None:
        gamma_list = [field.one] * steps
    else:
        try:
            gamma_list = [field.parse(g) for g in gammas.split(",")]
        except (ValueError, ZeroDivisionError) as exc:
            raise click.UsageError(f"bad --gammas: {exc}")
        if len(gamma_list) != steps:
            raise click.UsageError("--gammas must list one value per step")
    try:
        algebra, idem = cayley_dickson_algebra(field, gamma_list)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    write_generated(algebra, idem, out, fmt, deterministic)


@gen.command("direct-sum")
@click.option("--left", type=click.Path(exists=True), required=True,
              help="Algebra file for the first summand.")
@click.option("--right", type=click.Path(exists=True), required=True,
              help="Algebra file for the second summand.")
@click.option("--out", type=click.Path(), default=None)
@common_options
def gen_direct_sum(left, right, out, fmt, deterministic, seed, budget):
    a = load_algebra_arg(left)
    b = load_algebra_arg(right)
    try:
        algebra = direct_sum(a, b)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    idem = None
    if a.unit is not None:
        coords = list(a.unit.coords) + [b.field.zero] * b.dim
        idem = algebra.element(coords)
    write_generated(algebra, idem, out, fmt, deterministic)


# ----------------------------------------------------------------------
# verification


@main.command()
@click.argument("algebra_path", type=click.Path(exists=True))
@common_options
@click.pass_context
def verify(ctx, algebra_path, fmt, deterministic, seed, budget):
    """Check alternativity and the existence of a unit."""
    algebra = load_algebra_arg(algebra_path)
    alt, triple = is_alternative(algebra)
    unit = find_unit(algebra)
    payload = {"name": algebra.name, "alternative": alt, "unital": unit is not None}
    lines = [f"algebra {algebra.name} (dim {algebra.dim} over {algebra.field.label})"]
    if alt:
        lines.append("alternative: yes")
    else:
        payload["witness"] = {"triple": [element_str(t) for t in triple]}
        lines.append("alternative: NO")
        lines.append(f"  witness triple: ({' ; '.join(element_str(t) for t in triple)})")
    if unit is not None:
        payload["unit"] = element_str(unit)
        lines.append(f"unital: yes, unit = {element_str(unit)}")
    else:
        lines.append("unital: NO (no two-sided unit exists)")
    emit("verify", payload, lines, fmt, deterministic)
    ctx.exit(0 if alt and unit is not None else 1)


@main.command()
@click.argument("algebra_path", type=click.Path(exists=True))
@common_options
def center(algebra_path, fmt, deterministic, seed, budget):
    """Print a basis of the center."""
    algebra = load_algebra_arg(algebra_path)
    z = center_of(algebra)
    payload = {"name": algebra.name, "dim": z.dim,
               "basis": [el.to_strings() for el in z.basis]}
    lines = [f"center of {algebra.name}: dimension {z.dim}"]
    lines += [f"  {element_str(el)}" for el in z.basis]
    emit("center", payload, lines, fmt, deterministic)


@main.command("nucleus")
@click.argument("algebra_path", type=click.Path(exists=True))
@common_options
def nucleus_cmd(algebra_path, fmt, deterministic, seed, budget):
    """Print a basis of the nucleus."""
    algebra = load_algebra_arg(algebra_path)
    nuc = nucleus(algebra)
    payload = {"name": algebra.name, "dim": nuc.dim,
               "basis": [el.to_strings() for el in nuc.basis]}
    lines = [f"nucleus of {algebra.name}: dimension {nuc.dim}"]
    lines += [f"  {element_str(el)}" for el in nuc.basis]
    emit("nucleus", payload, lines, fmt, deterministic)


@main.command()
@click.argument("algebra_path", type=click.Path(exists=True))
@click.option("-e", "--idempotent", "idem_token", required=True,
              help="Idempotent: coords file, basis label, or inline scalars.")
@common_options
@click.pass_context
def peirce(ctx, algebra_path, idem_token, fmt, deterministic, seed, budget):
    """Split along an idempotent and verify the component multiplication rules."""
    algebra = load_algebra_arg(algebra_path)
    e1 = parse_element(algebra, idem_token)
    pd = guarded_peirce(algebra, e1, ctx)
    report = check_peirce_relations(pd)
    dims = pd.dims()
    payload = {"name": algebra.name, "dims": list(dims), "relations": report}
    lines = [f"Peirce split of {algebra.name} at e1 = {element_str(e1)}",
             f"component dimensions (r11, r12, r21, r22) = {dims}"]
    passed = 0
    for entry in report:
        mark = "ok" if entry["pass"] else "FAIL"
        lines.append(f"  {entry['check']}: {mark}")
        if entry["pass"]:
            passed += 1
        else:
            lines += witness_lines(entry["witness"])
    lines.append(f"relations: {passed}/{len(report)} ok")
    emit("peirce", payload, lines, fmt, deterministic)
    ctx.exit(0 if passed == len(report) else 1)


@main.command()
@click.argument("algebra_path", type=click.Path(exists=True))
@click.option("-e", "--idempotent", "idem_token", required=True)
@common_options
@click.pass_context
def hypothesis(ctx, algebra_path, idem_token, fmt, deterministic, seed, budget):
    """Check the regularity condition at e1 and its complement."""
    algebra = load_algebra_arg(algebra_path)
    e1 = parse_element(algebra, idem_token)
    try:
        (ok1, w1), (ok2, w2) = hypothesis_check(algebra, e1)
    except PreconditionError as exc:
        raise click.UsageError(str(exc))
    payload = {"name": algebra.name, "e1": ok1, "e2": ok2}
    lines = [f"regularity of {algebra.name} at e1 = {element_str(e1)}"]
    for label, ok, w in (("e1", ok1, w1), ("e2", ok2, w2)):
        if ok:
            lines.append(f"  {label}: holds")
        else:
            payload[f"witness_{label}"] = w.to_strings()
            lines.append(f"  {label}: FAILS, witness {element_str(w)}")
    emit("hypothesis", payload, lines, fmt, deterministic)
    ctx.exit(0 if ok1 and ok2 else 1)


@main.command()
@click.argument("algebra_path", type=click.Path(exists=True))
@common_options
@click.pass_context
def prime(ctx, algebra_path, fmt, deterministic, seed, budget):
    """Exhaustively search a finite-field algebra for an annihilating pair."""
    algebra = load_algebra_arg(algebra_path)
    try:
        ok, pair = prime_check_exhaustive(algebra, budget=budget)
    except (ValueError, BudgetExceededError) as exc:
        raise click.UsageError(str(exc))
    payload = {"name": algebra.name, "prime": ok}
    if ok:
        lines = [f"{algebra.name}: prime (no nonzero pair with (a x) b = 0 everywhere)"]
    else:
        a, b = pair
        payload["witness"] = {"a": a.to_strings(), "b": b.to_strings()}
        lines = [f"{algebra.name}: NOT prime",
                 f"  witness a = {element_str(a)}, b = {element_str(b)}"]
    emit("prime", payload, lines, fmt, deterministic)
    ctx.exit(0 if ok else 1)


# ----------------------------------------------------------------------
# maps


@main.command("check-map")
@click.argument("algebra_path", type=click.Path(exists=True))
@click.option("--map", "map_token", required=True,
              help="Map file, or 'random' for a seeded commuting map.")
@common_options
@click.pass_context
def check_map(ctx, algebra_path, map_token, fmt, deterministic, seed, budget):
    """Test whether a linear map commutes (and anti-commutes) with its argument."""
    algebra = load_algebra_arg(algebra_path)
    phi = load_map_arg(algebra, map_token, seed)
    ok, pair = is_commuting(algebra, phi)
    anti, anti_pair = is_anti_commuting(algebra, phi)
    payload = {"name": algebra.name, "commuting": ok, "anti_commuting": anti}
    lines = []
    if ok:
        lines.append("commuting: yes")
    else:
        payload["witness"] = {"x": pair[0].to_strings(), "y": pair[1].to_strings()}
        lines.append("commuting: NO")
        lines.append(f"  witness x = {element_str(pair[0])}, y = {element_str(pair[1])}")
    lines.append(f"anti-commuting: {'yes' if anti else 'no'}")
    emit("check-map", payload, lines, fmt, deterministic)
    ctx.exit(0 if ok else 1)


@main.command("decompose")
@click.argument("algebra_path", type=click.Path(exists=True))
@click.option("-e", "--idempotent", "idem_token", required=True)
@click.option("--map", "map_token", required=True)
@common_options
@click.pass_context
def decompose_cmd(ctx, algebra_path, idem_token, map_token, fmt, deterministic,
                  seed, budget):
    """Split a commuting map as phi(x) = z x + xi(x) with z central, xi center-valued."""
    algebra = load_algebra_arg(algebra_path)
    e1 = parse_element(algebra, idem_token)
    phi = load_map_arg(algebra, map_token, seed)
    pd = guarded_peirce(algebra, e1, ctx)
    try:
        dec = decompose(pd, phi)
    except NotCommutingError as exc:
        x, y = exc.witness
        emit("decompose",
             {"error": "not commuting",
              "witness": {"x": x.to_strings(), "y": y.to_strings()}},
             ["FAIL: the map is not commuting",
              f"  witness x = {element_str(x)}, y = {element_str(y)}"],
             fmt, deterministic)
        ctx.exit(1)
    except (HypothesisError, DecompositionError) as exc:
        w = exc.witness
        lines = [f"FAIL: {exc}"]
        payload = {"error": str(exc)}
        if w is not None:
            payload["witness"] = w.to_strings()
            lines.append(f"  witness {element_str(w)}")
        emit("decompose", payload, lines, fmt, deterministic)
        ctx.exit(1)
    payload = dec.to_dict()
    payload["name"] = algebra.name
    lines = [f"z  = {element_str(dec.z)}",
             f"z1 = {element_str(dec.z1)}",
             f"z2 = {element_str(dec.z2)}",
             "xi matrix rows:"]
    lines += ["  " + ",".join(algebra.field.fmt(v) for v in row)
              for row in dec.xi.matrix.data]
    lines.append(f"verified: {dec.verified}")
    emit("decompose", payload, lines, fmt, deterministic)
    ctx.exit(0)


@main.command("lemmas")
@click.argument("algebra_path", type=click.Path(exists=True))
@click.option("-e", "--idempotent", "idem_token", required=True)
@click.option("--map", "map_token", required=True)
@common_options
@click.pass_context
def lemmas_cmd(ctx, algebra_path, idem_token, map_token, fmt, deterministic,
               seed, budget):
    """Run the nine supporting checks and print a table."""
    algebra = load_algebra_arg(algebra_path)
    e1 = parse_element(algebra, idem_token)
    phi = load_map_arg(algebra, map_token, seed)
    pd = guarded_peirce(algebra, e1, ctx)
    reports = run_all(pd, phi)
    marks = {"pass": "✓", "fail": "✗", "not-applicable": "n-a"}
    payload = {"name": algebra.name, "lemmas": [r.to_dict() for r in reports]}
    lines = []
    for r in reports:
        lines.append(f"{r.lemma_id:3} {marks[r.status]:3} {r.notes}")
        if r.witness:
            lines += witness_lines(r.witness)
    passed = sum(r.status == "pass" for r in reports)
    lines.append(f"{passed}/{len(reports)} passed")
    emit("lemmas", payload, lines, fmt, deterministic)
    ctx.exit(0 if all(r.status == "pass" for r in reports) else 1)


@main.command("oracle")
@click.argument("algebra_path", type=click.Path(exists=True))
@click.option("--map", "map_token", required=True)
@common_options
@click.pass_context
def oracle(ctx, algebra_path, map_token, fmt, deterministic, seed, budget):
    """Check [phi(x), x] = 0 on every element of a finite-field algebra."""
    algebra = load_algebra_arg(algebra_path)
    phi = load_map_arg(algebra, map_token, seed)
    try:
        ok, x = exhaustive_commuting_check(algebra, phi, budget=budget)
    except (ValueError, BudgetExceededError) as exc:
        raise click.UsageError(str(exc))
    payload = {"name": algebra.name, "commuting_everywhere": ok}
    if ok:
        lines = [f"[phi(x), x] = 0 for all {algebra.field.p ** algebra.dim} elements"]
    else:
        payload["witness"] = x.to_strings()
        lines = ["found a violating element",
                 f"  witness x = {element_str(x)}"]
    emit("oracle", payload, lines, fmt, deterministic)
    ctx.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
