"""Command-line interface for charclass."""

import json
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, Iterator, Optional

import click
import typer
from pydantic import ValidationError
from rich import print as rprint
from rich.console import Console
from rich.markup import escape
from rich.table import Table
from typer.core import TyperGroup

from charclass.config import Settings, get_settings
from charclass.errors import CharClassError, ContractViolation, DataRequiredError
from charclass.gralg import GradedAlgebraPresentation, PolyF2
from charclass.logging import configure_logging
from charclass.reports import SCHEMA_VERSION, VerificationReport

EXIT_ERROR = 1
EXIT_DATA_REQUIRED = 2
EXIT_VERIFICATION = 3


class CharClassGroup(TyperGroup):
    """Command group whose usage errors exit with ``EXIT_ERROR``; 2 means missing data."""

    def make_context(self, *args: Any, **kwargs: Any) -> click.Context:
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = EXIT_ERROR
            raise

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_ERROR
            raise


app = typer.Typer(
    name="charclass",
    help="Mod-2 characteristic classes of quadric bundles and their degenerations",
    add_completion=False,
    cls=CharClassGroup,
)

console = Console()


class VerificationFailed(Exception):
    """Raised inside a command whose report has failures."""


@app.callback()
def main(
    ctx: typer.Context,
    debug: bool = typer.Option(False, "--debug", help="Enable debug mode"),
) -> None:
    """charclass CLI."""
    settings = get_settings()
    if debug or settings.debug:
        configure_logging(log_level="DEBUG", log_file=settings.log_file)
    else:
        configure_logging(log_level=settings.log_level, log_file=settings.log_file)


def _dump(payload: dict[str, Any]) -> None:
    typer.echo(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=2, sort_keys=True))


@contextmanager
def _guard(json_output: bool) -> Iterator[None]:
    """Map library errors to exit codes and messages."""
    try:
        yield
    except DataRequiredError as e:
        _fail(str(e), EXIT_DATA_REQUIRED, json_output, kind="data_required")
    except CharClassError as e:
        _fail(str(e), EXIT_ERROR, json_output, kind="error")
    except ValidationError as e:
        _fail(f"invalid input: {e.errors()[0]['msg']}", EXIT_ERROR, json_output, kind="error")
    except VerificationFailed:
        raise typer.Exit(EXIT_VERIFICATION)


def _fail(message: str, code: int, json_output: bool, kind: str) -> None:
    if json_output:
        _dump({"status": kind, "error": message})
    else:
        rprint(f"[red]Error:[/red] {escape(message)}")
    raise typer.Exit(code)


def _emit(json_output: bool, payload: dict[str, Any], render: Callable[[], None]) -> None:
    if json_output:
        _dump({"status": "ok", **payload})
    else:
        render()


def _cap(settings: Settings, max_degree: Optional[int]) -> int:
    return max_degree if max_degree is not None else settings.degree_cap


def _report_payload(report: VerificationReport) -> dict[str, Any]:
    return {"ok": report.ok, "report": report.model_dump()}


def _render_report(report: VerificationReport) -> None:
    status = "[green]passed[/green]" if report.ok else "[red]FAILED[/red]"
    rprint(f"{escape(report.subject)} through degree {report.max_degree}: {status}")
    rprint(f"  checks: {escape(', '.join(report.checks))}")
    if report.failures:
        table = Table(title="Failures", show_header=True)
        table.add_column("Check", style="cyan")
        table.add_column("Degree", style="yellow")
        table.add_column("Node", style="white")
        table.add_column("Message", style="red")
        for f in report.failures:
            table.add_row(f.check, "" if f.degree is None else str(f.degree), f.node or "", f.message)
        console.print(table)
    for item in report.skipped:
        rprint(f"  [dim]skipped: {escape(item)}[/dim]")


def _finish_report(report: VerificationReport, json_output: bool) -> None:
    _emit(json_output, _report_payload(report), lambda: _render_report(report))
    if not report.ok:
        raise VerificationFailed(report.subject)


def _load_ring(
    family: str, n: int, settings: Settings, cap: int, file: Optional[Path]
) -> GradedAlgebraPresentation:
    from charclass.rings import RingFamily, RingId, load_even_presentation, ring_for

    ring_id = RingId.parse(family, n)
    if file is not None:
        if ring_id.family is not RingFamily.BGO_even:
            raise ContractViolation("--file only applies to even-rank BGO")
        return load_even_presentation(file, cap).presentation
    return ring_for(ring_id, settings, cap)


# Config commands
config_app = typer.Typer(help="Configuration management")
app.add_typer(config_app, name="config")


@config_app.command("show")
def config_show(
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
) -> None:
    """Show current configuration."""
    settings = get_settings()

    config_dict = {}
    for field_name in type(settings).model_fields:
        value = getattr(settings, field_name)
        config_dict[field_name] = str(value) if isinstance(value, Path) else value

    if json_output:
        _dump({"status": "ok", "settings": config_dict})
    else:
        table = Table(title="charclass Configuration", show_header=True)
        table.add_column("Setting", style="cyan")
        table.add_column("Value", style="green")
        for field_name, value in config_dict.items():
            table.add_row(field_name, str(value))
        console.print(table)


@app.command("ring")
def ring(
    family: str = typer.Argument(..., help="BO, BGL, BGm, BSO or BGO"),
    n: int = typer.Argument(1, help="Rank"),
    max_degree: Optional[int] = typer.Option(None, "--max-degree", "-D", help="Degree cap"),
    poincare: bool = typer.Option(False, "--poincare", help="Print dimensions through the cap"),
    basis: Optional[int] = typer.Option(None, "--basis", help="Print the basis in this degree"),
    file: Optional[Path] = typer.Option(None, "--file", help="Even-rank presentation file"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
) -> None:
    """Show a cohomology ring presentation, its Poincaré series or a degree basis."""
    settings = get_settings()
    with _guard(json_output):
        cap = _cap(settings, max_degree)
        a = _load_ring(family, n, settings, cap, file)
        payload: dict[str, Any] = {
            "ring": a.name,
            "generators": [{"name": g.name, "degree": g.degree} for g in a.generators],
            "relations": [a.format(r) for r in a.relations],
        }
        if poincare:
            payload["poincare"] = a.poincare_series(cap)
        if basis is not None:
            payload["degree"] = basis
            payload["basis"] = [a.format(PolyF2.from_monomial(m)) for m in a.basis(basis)]

        def render() -> None:
            gens = ", ".join(f"{g.name} ({g.degree})" for g in a.generators) or "none"
            rprint(f"[cyan]{escape(a.name)}[/cyan] generators: {escape(gens)}")
            if a.relations:
                rprint(f"  relations: {escape(', '.join(payload['relations']))}")
            if poincare:
                rprint(f"  Poincaré series through degree {cap}: {', '.join(map(str, payload['poincare']))}")
            if basis is not None:
                rprint(f"  basis in degree {basis}: {escape(', '.join(payload['basis'])) or '(empty)'}")

        _emit(json_output, payload, render)


@app.command("primitive")
def primitive(
    family: str = typer.Argument(..., help="BGO"),
    n: int = typer.Argument(..., help="Rank"),
    degree: int = typer.Option(..., "--degree", "-d", help="Degree of the primitive classes"),
    file: Optional[Path] = typer.Option(None, "--file", help="Even-rank presentation file"),
    max_degree: Optional[int] = typer.Option(None, "--max-degree", "-D", help="Degree cap"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
) -> None:
    """Basis of the primitive classes in one degree."""
    from charclass.primitive import builtin_mu_odd, primitive_basis, twist_for_even
    from charclass.rings import RingFamily, RingId, load_even_for_rank

    settings = get_settings()
    with _guard(json_output):
        cap = _cap(settings, max_degree)
        ring_id = RingId.parse(family, n)
        if ring_id.family is RingFamily.BGO_odd:
            twist = builtin_mu_odd(n, cap)
        elif ring_id.family is RingFamily.BGO_even:
            twist = twist_for_even(load_even_for_rank(n, settings, cap, path=file))
        else:
            raise ContractViolation(f"{ring_id.label} carries no twist coproduct; use BGO")
        a = twist.algebra
        classes = [a.format(p) for p in primitive_basis(twist, degree)]
        _emit(
            json_output,
            {"ring": a.name, "degree": degree, "primitive": classes},
            lambda: rprint(
                f"PH^{degree}({escape(a.name)}): {escape(', '.join(classes)) if classes else '0'}"
            ),
        )


@app.command("delta")
def delta_cmd(
    n: int = typer.Argument(..., help="Rank of the source BGO"),
    alpha: str = typer.Option(..., "--alpha", "-a", help="Primitive class, e.g. 'w2*w3'"),
    source_file: Optional[Path] = typer.Option(None, "--source-file", help="Rank-n file (even n)"),
    target_file: Optional[Path] = typer.Option(
        None, "--target-file", help="Rank n-1 file (odd n)"
    ),
    max_degree: Optional[int] = typer.Option(None, "--max-degree", "-D", help="Degree cap"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
) -> None:
    """Evaluate delta = d o B(v)* on a primitive class."""
    from charclass.gysin import delta, delta_context

    settings = get_settings()
    with _guard(json_output):
        ctx = delta_context(n, settings, source_file, target_file, _cap(settings, max_degree))
        cls = ctx.source.algebra.parse(alpha)
        value = delta(n, cls, ctx)
        shown = ctx.target.base.format(value)
        _emit(
            json_output,
            {"n": n, "alpha": ctx.source.algebra.format(cls), "delta": shown, "target": ctx.target.base.name},
            lambda: rprint(f"delta({escape(alpha)}) = {escape(shown)} in {escape(ctx.target.base.name)}"),
        )


@app.command("verify")
def verify(
    file: Path = typer.Option(..., "--file", help="Even-rank presentation file"),
    max_degree: Optional[int] = typer.Option(None, "--max-degree", "-D", help="Top degree"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
) -> None:
    """Verify an even-rank presentation file."""
    from charclass.rings import load_even_presentation, verify_even_datum

    settings = get_settings()
    with _guard(json_output):
        cap = _cap(settings, max_degree)
        datum = load_even_presentation(file, max(cap, settings.degree_cap))
        _finish_report(verify_even_datum(datum, cap), json_output)


# Gysin commands
gysin_app = typer.Typer(help="Gysin sequences")
app.add_typer(gysin_app, name="gysin")


@gysin_app.command("check")
def gysin_check(
    family: str = typer.Argument("BGO", help="BGO"),
    n: int = typer.Argument(..., help="Rank"),
    file: Optional[Path] = typer.Option(None, "--file", help="Even-rank presentation file"),
    max_degree: Optional[int] = typer.Option(None, "--max-degree", "-D", help="Top degree"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
) -> None:
    """Check exactness of the Gysin sequence of (L_n, BGO_n)."""
    from charclass.gysin import check_exactness, even_gysin_datum, odd_gysin_datum
    from charclass.rings import RingFamily, RingId, load_even_for_rank

    settings = get_settings()
    with _guard(json_output):
        cap = _cap(settings, max_degree)
        ring_id = RingId.parse(family, n)
        if ring_id.family is RingFamily.BGO_odd:
            datum = odd_gysin_datum(n, cap + 1)
        elif ring_id.family is RingFamily.BGO_even:
            datum = even_gysin_datum(load_even_for_rank(n, settings, cap + 1, path=file))
        else:
            raise ContractViolation(f"no Gysin pair is built in for {ring_id.label}")
        _finish_report(check_exactness(datum, cap), json_output)


@app.command("commute")
def commute(
    n: int = typer.Argument(..., help="Rank"),
    file: Optional[Path] = typer.Option(None, "--file", help="Rank-n file (even n)"),
    max_degree: Optional[int] = typer.Option(None, "--max-degree", "-D", help="Top degree"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
) -> None:
    """Check that B(v)* intertwines the twist coproducts on primitive classes."""
    from charclass.gysin import bV_commutation_check, delta_context

    settings = get_settings()
    with _guard(json_output):
        cap = _cap(settings, max_degree)
        context = None
        if n % 2 == 0:
            context = delta_context(n, settings, source_file=file, degree_cap=max(cap, settings.degree_cap))
        _finish_report(bV_commutation_check(n, cap, context), json_output)


# Quadratic triple commands
quad_app = typer.Typer(help="Quadratic triples over the local model k[t]")
app.add_typer(quad_app, name="quad")

TRIPLE_OPTION = typer.Option(None, "--triple", "-t", help="Triple JSON file")
ENTRIES_OPTION = typer.Option(
    None, "--entries", help="Inline entries: JSON rows of coefficient lists, constant term first"
)
FIELD_OPTION = typer.Option("Q", "--field", help="Q or Fp")
PRIME_OPTION = typer.Option(None, "--p", help="Odd prime for Fp")
JSON_OPTION = typer.Option(False, "--json", help="Output as JSON")


def _json_rows(text: str, option: str) -> list[list[Any]]:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as e:
        raise ContractViolation(f"{option} is not valid JSON: {e}") from e
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise ContractViolation(f"{option} must be a JSON list of rows")
    return rows


def _triple(triple: Optional[Path], entries: Optional[str], field: str, p: Optional[int]) -> Any:
    from charclass.quadbundle import load_triple, triple_from_data

    if (triple is None) == (entries is None):
        raise ContractViolation("pass exactly one of --triple and --entries")
    if triple is not None:
        return load_triple(triple)
    rows = _json_rows(entries, "--entries")  # type: ignore[arg-type]
    return triple_from_data({"field": field, "p": p, "n": len(rows), "entries": rows})


@quad_app.command("profile")
def quad_profile(
    triple: Optional[Path] = TRIPLE_OPTION,
    entries: Optional[str] = ENTRIES_OPTION,
    field: str = FIELD_OPTION,
    p: Optional[int] = PRIME_OPTION,
    json_output: bool = JSON_OPTION,
) -> None:
    """Generic and special rank, and whether the family degenerates mildly."""
    from charclass.quadbundle import is_mildly_degenerating

    with _guard(json_output):
        t = _triple(triple, entries, field, p)
        check = is_mildly_degenerating(t)
        _emit(
            json_output,
            {
                "n": t.n,
                "generic_rank": check.generic_rank,
                "special_rank": check.special_rank,
                "mild": check.mild,
                "diagnosis": check.diagnosis,
            },
            lambda: rprint(
                f"n={t.n}, generic rank {check.generic_rank}, special rank {check.special_rank}: "
                f"{escape(check.diagnosis)}"
            ),
        )


@quad_app.command("mult")
def quad_mult(
    triple: Optional[Path] = TRIPLE_OPTION,
    entries: Optional[str] = ENTRIES_OPTION,
    field: str = FIELD_OPTION,
    p: Optional[int] = PRIME_OPTION,
    json_output: bool = JSON_OPTION,
) -> None:
    """Degeneration multiplicity: vanishing order of det(b) at t = 0."""
    from charclass.quadbundle import discriminant, multiplicity

    with _guard(json_output):
        t = _triple(triple, entries, field, p)
        nu = multiplicity(t)
        det = str(discriminant(t).as_expr())
        _emit(
            json_output,
            {"multiplicity": nu, "discriminant": det},
            lambda: rprint(f"multiplicity {nu} (det = {escape(det)})"),
        )


@quad_app.command("reduce")
def quad_reduce(
    triple: Optional[Path] = TRIPLE_OPTION,
    entries: Optional[str] = ENTRIES_OPTION,
    field: str = FIELD_OPTION,
    p: Optional[int] = PRIME_OPTION,
    json_output: bool = JSON_OPTION,
) -> None:
    """The nondegenerate form induced on E / ker(b mod t)."""
    from charclass.quadbundle import reduced_triple

    with _guard(json_output):
        t = _triple(triple, entries, field, p)
        reduced = reduced_triple(t)
        inv = reduced.invariants()
        payload = {
            **reduced.plain(),
            "discriminant_class": inv.discriminant_class,
            "scaling_changes_class": inv.scaling_changes_class,
        }

        def render() -> None:
            rprint(f"reduced form of rank {reduced.m} over {t.field}")
            rprint(f"  kernel: {payload['kernel']}")
            rprint(f"  diagonal: {payload['diagonal']}")
            rprint(f"  normalized: {payload['normalized']}")
            rprint(f"  discriminant class: {inv.discriminant_class}")

        _emit(json_output, payload, render)


@quad_app.command("model")
def quad_model(
    q: str = typer.Option(..., "--q", help="Nondegenerate symmetric matrix as JSON rows"),
    field: str = FIELD_OPTION,
    p: Optional[int] = PRIME_OPTION,
    json_output: bool = JSON_OPTION,
) -> None:
    """The standard family (t) + q of multiplicity 1."""
    from charclass.quadbundle import CoefficientField, model_triple, triple_to_data

    with _guard(json_output):
        t = model_triple(_json_rows(q, "--q"), CoefficientField(field, p))  # type: ignore[arg-type]
        data = triple_to_data(t)
        _emit(json_output, {"triple": data}, lambda: typer.echo(json.dumps(data, sort_keys=True)))


@quad_app.command("boundary")
def quad_boundary(
    alpha: str = typer.Option(..., "--alpha", "-a", help="Primitive class of BGO_n"),
    triple: Optional[Path] = TRIPLE_OPTION,
    entries: Optional[str] = ENTRIES_OPTION,
    field: str = FIELD_OPTION,
    p: Optional[int] = PRIME_OPTION,
    source_file: Optional[Path] = typer.Option(None, "--source-file", help="Rank-n file (even n)"),
    target_file: Optional[Path] = typer.Option(
        None, "--target-file", help="Rank n-1 file (odd n)"
    ),
    json_output: bool = JSON_OPTION,
) -> None:
    """Boundary of alpha along the family: nu mod 2 times delta(alpha)."""
    from charclass.gysin import delta_context
    from charclass.quadbundle import degeneration_boundary

    settings = get_settings()
    with _guard(json_output):
        t = _triple(triple, entries, field, p)
        ctx = delta_context(t.n, settings, source_file, target_file)
        result = degeneration_boundary(alpha, t, ctx)
        payload = result.plain()

        def render() -> None:
            rprint(f"multiplicity {result.multiplicity} (parity {result.parity})")
            rprint(f"  delta({escape(alpha)}) = {escape(payload['delta'])}")
            rprint(f"  boundary = {escape(payload['boundary'])}, evaluated on the reduced form")
            rprint(f"  reduced: rank {result.reduced.m}, normalized {payload['reduced']['normalized']}")

        _emit(json_output, payload, render)


if __name__ == "__main__":
    app()
