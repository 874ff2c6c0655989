"""Command-line interface: each subcommand reads a text document and prints one JSON object."""

from __future__ import annotations

import logging
from contextlib import contextmanager
from fractions import Fraction
from typing import Any, BinaryIO, Dict, Iterator, Optional, Tuple

import click

from .core import configure_logging
from .core.errors import DomainError, ParseError
from .services import (
    identity_open_book,
    lutz_twist,
    make_curve,
    murasugi_sum,
    parse_form,
    parse_openbook,
    parse_surgery,
    plan_d3_steps,
    positive_stabilization,
    realize_overtwisted,
    search_records,
    start_tracking,
)
from .services.documents import decode_document, format_rational, parse_rational, print_surgery, to_json
from .services.reports import d3_to_dict, invariants_to_dict, openbook_to_dict, verdict_to_dict

logger = logging.getLogger(__name__)


class RationalType(click.ParamType):
    """Exact rational written as ``p/q`` or an integer."""

    name = "rational"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> Fraction:
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(str(value))
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


class VectorType(click.ParamType):
    """Comma-separated integers; the empty string is the empty vector."""

    name = "vector"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> Tuple[int, ...]:
        if isinstance(value, tuple):
            return value
        text = str(value).strip()
        if not text:
            return ()
        try:
            return tuple(int(part) for part in text.split(","))
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of integers", param, ctx)


RATIONAL = RationalType()
VECTOR = VectorType()
DOCUMENT = click.File("rb")


@contextmanager
def _reporting() -> Iterator[None]:
    """Map package errors to exit codes: 2 for unreadable text, 1 for domain failures."""

    ctx = click.get_current_context()
    try:
        yield
    except ParseError as exc:
        click.echo(f"parse error: {exc}", err=True)
        ctx.exit(2)
    except (DomainError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(1)


def _read(stream: BinaryIO) -> str:
    return decode_document(stream.read())


def _emit(payload: Dict[str, Any]) -> None:
    click.echo(to_json(payload))


@click.group()
@click.option("--verbose", is_flag=True, help="Log the computation steps to stderr.")
def cli(verbose: bool) -> None:
    """Planar open books, contact surgery invariants and the planarity obstruction."""

    configure_logging(verbose)


@cli.command()
@click.argument("source", type=DOCUMENT, default="-")
def invariants(source) -> None:
    """First homology and word data of an open book."""

    with _reporting():
        _emit(invariants_to_dict(parse_openbook(_read(source))))


@cli.command()
@click.argument("source", type=DOCUMENT, default="-")
def d3(source) -> None:
    """d3 invariant of a contact surgery record."""

    with _reporting():
        _emit(d3_to_dict(parse_surgery(_read(source))))


@cli.command()
@click.argument("source", type=DOCUMENT, default="-")
def obstruct(source) -> None:
    """Planarity verdict of a filling's intersection form."""

    with _reporting():
        _emit(verdict_to_dict(parse_form(_read(source))))


@cli.command()
@click.argument("source", type=DOCUMENT, default="-")
@click.option("--through", type=int, multiple=True, help="Hole crossed by the plumbing arc; repeatable.")
def stabilize(source, through: Tuple[int, ...]) -> None:
    """Positive stabilization of an open book."""

    with _reporting():
        ob, _ = positive_stabilization(parse_openbook(_read(source)), through)
        _emit(openbook_to_dict(ob))


@cli.command(name="sum")
@click.argument("first", type=DOCUMENT)
@click.argument("second", type=DOCUMENT)
def sum_(first, second) -> None:
    """Murasugi sum of two open books."""

    with _reporting():
        _emit(openbook_to_dict(murasugi_sum(parse_openbook(_read(first)), parse_openbook(_read(second)))))


@cli.command()
@click.argument("source", type=DOCUMENT, default="-")
@click.option("--curve", "holes", type=int, multiple=True, required=True, help="Hole enclosed by the curve; repeatable.")
@click.option("--orient", type=click.IntRange(-1, 1), required=True, help="Orientation, +1 or -1.")
def lutz(source, holes: Tuple[int, ...], orient: int) -> None:
    """Lutz twist along a page curve, tracking the d2 difference."""

    with _reporting():
        if orient == 0:
            raise ValueError("orientation must be +1 or -1")
        ob = parse_openbook(_read(source))
        curve = make_curve(ob.page, holes)
        _emit(openbook_to_dict(lutz_twist(start_tracking(ob), curve, orient)))


@cli.command(name="realize-ot")
@click.option("--d3", "target", type=RATIONAL, required=True, help="Target d3, a half-integer such as -3/2.")
@click.option("--d2", "delta", type=VECTOR, default=None, help="d2 difference over the base holes, e.g. 1,0.")
@click.option("--base", type=DOCUMENT, default=None, help="Base open book; defaults to the disk book of S^3.")
def realize_ot(target: Fraction, delta: Optional[Tuple[int, ...]], base) -> None:
    """Planar open book of an overtwisted structure with the given invariants."""

    with _reporting():
        book = parse_openbook(_read(base)) if base is not None else identity_open_book(0)
        if delta is None:
            delta = (0,) * book.page.holes
        _emit(openbook_to_dict(realize_overtwisted(book, delta, plan_d3_steps(target))))


@cli.command()
@click.option("--d3", "target", type=RATIONAL, required=True, help="Target d3 value.")
@click.option("--max-components", type=click.IntRange(0), default=None)
@click.option("--tb-bound", type=click.IntRange(0), default=None)
@click.option("--rot-bound", type=click.IntRange(0), default=None)
@click.option("--lk-bound", type=click.IntRange(0), default=None)
def search(target: Fraction, **bounds: Optional[int]) -> None:
    """First small surgery record of a homology sphere with the given d3."""

    with _reporting():
        options = {name: value for name, value in bounds.items() if value is not None}
        record = next(search_records(target, **options), None)
        if record is None:
            raise DomainError(f"no record in the search box has d3 = {format_rational(target)}")
        _emit({"d3": format_rational(target), "record": print_surgery(record)})


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=3000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP API."""

    import uvicorn

    uvicorn.run("planarbook.app:app", host=host, port=port)


def main() -> None:
    cli(prog_name="planarbook")


__all__ = ["cli", "main"]
