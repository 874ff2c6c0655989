from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import random_laminar_book, random_record
from planarbook.core.errors import (
    AsymmetricLinking,
    DegeneratePresentation,
    EmptyCurve,
    HoleOutOfRange,
    NotSymmetric,
    ParseError,
)
from planarbook.models import ContactSurgeryRecord, IntersectionForm, OpenBook
from planarbook.services import (
    block_half,
    d3_invariant,
    negative_e8,
    parse_form,
    parse_openbook,
    parse_surgery,
    print_form,
    print_openbook,
    print_surgery,
)
from planarbook.services.documents import (
    decode_document,
    format_rational,
    parse_document,
    parse_rational,
    print_document,
    to_json,
)

HALF_BLOCK = "page 2\ntwist + 1\ntwist + 2\ntwist - 1 2\n"


def test_parse_half_block():
    ob = parse_openbook(HALF_BLOCK)
    assert ob.page.holes == 2
    assert ob.word == block_half().word
    assert ob.record is None and ob.lutz is None


def test_parse_disk_book():
    ob = parse_openbook("page 0\n")
    assert ob.page.holes == 0 and ob.word == ()


def test_comments_and_crlf():
    text = "# half block\r\npage 2   # two holes\r\n\r\ntwist + 1\r\ntwist + 2\r\ntwist - 2 1\r\n"
    assert parse_openbook(text) == parse_openbook(HALF_BLOCK)


def test_semantic_errors_propagate():
    with pytest.raises(HoleOutOfRange):
        parse_openbook("page 1\ntwist + 3\n")
    with pytest.raises(EmptyCurve):
        parse_openbook("page 1\ntwist +\n")


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("", 1, 1),
        ("page x\n", 1, 6),
        ("twist + 1\n", 1, 1),
        ("page 1\nspin + 1\n", 2, 1),
        ("page 1\ntwist * 1\n", 2, 7),
        ("page 1\n  twist + one\n", 2, 11),
        ("page 1\npage 2\n", 2, 1),
        ("page -1\n", 1, 6),
    ],
)
def test_openbook_parse_errors(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_openbook(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"line {line}, column {column}:")


def test_parse_surgery():
    half = parse_surgery("comp -2 1 +1\n")
    assert d3_invariant(half) == Fraction(1, 2)
    assert parse_surgery("") == ContactSurgeryRecord()
    with pytest.raises(DegeneratePresentation):
        d3_invariant(parse_surgery("comp -1 0 +1\n"))


def test_surgery_linking_lines():
    text = "comp -2 1 1\ncomp -4 -1 -1\nlk 1 2 -2\nlk 2 1 -2\n"
    record = parse_surgery(text)
    assert record.linking == ((0, -2), (-2, 0))
    assert d3_invariant(record) == Fraction(-3, 2)
    with pytest.raises(AsymmetricLinking):
        parse_surgery("comp -2 1 1\ncomp -4 -1 -1\nlk 1 2 -2\nlk 2 1 1\n")


@pytest.mark.parametrize(
    "text",
    [
        "comp -2 1 +2\n",
        "comp -2 1\n",
        "comp -2 1 1\nlk 1 2 1\n",
        "comp -2 1 1\ncomp 0 0 -1\nlk 1 1 1\n",
        "comp -2 1 1\nlk 1 1 0\ncomp 0 0 -1\n",
        "knot -2 1 1\n",
    ],
)
def test_surgery_parse_errors(text):
    with pytest.raises(ParseError):
        parse_surgery(text)


def test_parse_e8(e8_text):
    form = parse_form(e8_text)
    assert form.matrix == negative_e8().matrix
    assert form.boundary_components == 1
    assert not form.boundary_is_homology_sphere


def test_parse_small_forms():
    assert parse_form("1\n-2\n").matrix == ((-2,),)
    form = parse_form("2\n-1 0\n0 -1\nboundary 2\nhomology-sphere true\n")
    assert form.boundary_components == 2
    assert form.boundary_is_homology_sphere
    with pytest.raises(NotSymmetric):
        parse_form("2\n0 1\n2 0\n")


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2\n1 0\n",
        "2\n1 0\n0\n",
        "1\n-2\nboundary 0\n",
        "1\n-2\nhomology-sphere maybe\n",
        "1\n-2\nboundary 1\nboundary 2\n",
        "1 2\n-2\n",
        "1\nx\n",
    ],
)
def test_form_parse_errors(text):
    with pytest.raises(ParseError):
        parse_form(text)


@pytest.mark.parametrize("seed", range(10))
def test_round_trips(seed):
    rng = random.Random(seed)

    ob = random_laminar_book(rng)
    plain = OpenBook(page=ob.page, word=ob.word)
    assert parse_openbook(print_openbook(ob)) == plain

    record = random_record(rng)
    assert parse_surgery(print_surgery(record)) == record

    size = rng.randint(0, 5)
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            rows[i][j] = rows[j][i] = rng.randint(-3, 3)
    form = IntersectionForm(
        matrix=tuple(tuple(row) for row in rows),
        boundary_components=rng.randint(1, 3),
        boundary_is_homology_sphere=rng.random() < 0.5,
    )
    assert parse_form(print_form(form)) == form


@pytest.mark.parametrize(
    "kind, text",
    [("openbook", HALF_BLOCK), ("surgery", "comp -2 1 +1\n"), ("form", "1\n-2\n")],
)
def test_documents(kind, text):
    document = parse_document(kind, text)
    assert document.kind == kind
    assert parse_document(kind, print_document(document)) == document


def test_rational_strings():
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(Fraction(2)) == "2/1"
    assert format_rational(None) is None
    assert parse_rational("-3/2") == Fraction(-3, 2)
    assert parse_rational("4") == Fraction(4)
    with pytest.raises(ValueError):
        parse_rational("0.5")


def test_json_is_stable():
    first = to_json({"b": [1, 2], "a": "x"})
    assert first == to_json({"a": "x", "b": [1, 2]})
    assert first.index('"a"') < first.index('"b"')


def test_decode_reports_the_bad_byte():
    assert decode_document("page 1\n".encode("utf-8")) == "page 1\n"
    with pytest.raises(ParseError) as info:
        decode_document(b"page 2\ntwist + \xfe1\n")
    assert (info.value.line, info.value.column) == (2, 9)
