"""Line-oriented text documents: open books, surgery records and intersection forms."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Tuple

from ..core.errors import AsymmetricLinking, EmptyCurve, ParseError
from ..models import (
    ContactSurgeryRecord,
    Document,
    IntersectionForm,
    OpenBook,
    SurgeryComponent,
    TwistLetter,
)
from .linalg import require_symmetric
from .pages import make_curve, make_page

_INTEGER = re.compile(r"[+-]?[0-9]+", re.ASCII)

Token = Tuple[str, int]


def _lines(text: str) -> Iterator[Tuple[int, List[Token]]]:
    """Yield ``(line number, [(token, column), ...])`` for every non-blank line."""

    for number, raw in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(match.group(), match.start() + 1) for match in re.finditer(r"\S+", line)]
        if tokens:
            yield number, tokens


def _integer(token: Token, line: int, what: str) -> int:
    text, column = token
    if not _INTEGER.fullmatch(text):
        raise ParseError(f"expected {what}, found {text!r}", line, column)
    return int(text)


def _arity(tokens: List[Token], count: int, line: int) -> None:
    if len(tokens) != count:
        column = tokens[min(len(tokens), count) - 1][1] if tokens else 1
        raise ParseError(
            f"{tokens[0][0]!r} takes {count - 1} values, found {len(tokens) - 1}",
            line,
            column,
        )


def decode_document(data: bytes) -> str:
    """UTF-8 text of a document; undecodable bytes are reported where they start."""

    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        column = exc.start - (data.rfind(b"\n", 0, exc.start) + 1) + 1
        raise ParseError(f"invalid UTF-8 byte 0x{data[exc.start]:02x}", line, column) from exc


def parse_openbook(text: str) -> OpenBook:
    """``page h`` followed by ``twist +|- hole...`` lines."""

    page = None
    word: List[TwistLetter] = []
    for line, tokens in _lines(text):
        keyword, column = tokens[0]
        if keyword == "page":
            if page is not None:
                raise ParseError("duplicate page line", line, column)
            _arity(tokens, 2, line)
            holes = _integer(tokens[1], line, "hole count")
            if holes < 0:
                raise ParseError("hole count must be nonnegative", line, tokens[1][1])
            page = make_page(holes)
        elif keyword == "twist":
            if page is None:
                raise ParseError("twist before page line", line, column)
            if len(tokens) < 2:
                raise ParseError("twist needs a sign", line, column)
            sign_text, sign_column = tokens[1]
            if sign_text not in ("+", "-"):
                raise ParseError(f"twist sign must be + or -, found {sign_text!r}", line, sign_column)
            holes = [_integer(token, line, "hole index") for token in tokens[2:]]
            if not holes:
                raise EmptyCurve(f"line {line}: a twist curve must enclose a hole")
            curve = make_curve(page, holes)
            word.append(TwistLetter(curve=curve, sign=1 if sign_text == "+" else -1))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", line, column)
    if page is None:
        raise ParseError("missing page line", 1, 1)
    return OpenBook(page=page, word=tuple(word))


def _coefficient(token: Token, line: int) -> int:
    text, column = token
    if text in ("+1", "1"):
        return 1
    if text == "-1":
        return -1
    raise ParseError(f"contact coefficient must be +1 or -1, found {text!r}", line, column)


def parse_surgery(text: str) -> ContactSurgeryRecord:
    """``comp tb rot coeff`` lines, then ``lk i j v`` lines with 1-based indices."""

    components: List[SurgeryComponent] = []
    links: Dict[Tuple[int, int], int] = {}
    for line, tokens in _lines(text):
        keyword, column = tokens[0]
        if keyword == "comp":
            if links:
                raise ParseError("comp lines must precede lk lines", line, column)
            _arity(tokens, 4, line)
            components.append(
                SurgeryComponent(
                    tb=_integer(tokens[1], line, "tb"),
                    rot=_integer(tokens[2], line, "rot"),
                    coeff=_coefficient(tokens[3], line),
                )
            )
        elif keyword == "lk":
            _arity(tokens, 4, line)
            i, j = (_integer(token, line, "component index") for token in tokens[1:3])
            for index, token in ((i, tokens[1]), (j, tokens[2])):
                if not 1 <= index <= len(components):
                    raise ParseError(f"no component {index}", line, token[1])
            if i == j:
                raise ParseError("a component does not link itself", line, tokens[2][1])
            value = _integer(tokens[3], line, "linking number")
            pair = (min(i, j) - 1, max(i, j) - 1)
            if links.get(pair, value) != value:
                raise AsymmetricLinking(
                    f"line {line}: lk {i} {j} is {value} but was given as {links[pair]}"
                )
            links[pair] = value
        else:
            raise ParseError(f"unknown keyword {keyword!r}", line, column)

    size = len(components)
    rows = [[0] * size for _ in range(size)]
    for (i, j), value in links.items():
        rows[i][j] = rows[j][i] = value
    return ContactSurgeryRecord(
        components=tuple(components),
        linking=tuple(tuple(row) for row in rows),
    )


def parse_form(text: str) -> IntersectionForm:
    """Size line, that many matrix rows, then optional ``boundary`` and ``homology-sphere`` lines."""

    lines = list(_lines(text))
    if not lines:
        raise ParseError("missing matrix size", 1, 1)
    line, tokens = lines[0]
    if len(tokens) != 1:
        raise ParseError("size line holds a single integer", line, tokens[-1][1])
    size = _integer(tokens[0], line, "matrix size")
    if size < 0:
        raise ParseError("matrix size must be nonnegative", line, tokens[0][1])
    if len(lines) < 1 + size:
        last = lines[-1][0]
        raise ParseError(f"expected {size} matrix rows, found {len(lines) - 1}", last + 1, 1)

    matrix: List[Tuple[int, ...]] = []
    for line, tokens in lines[1 : 1 + size]:
        if len(tokens) != size:
            raise ParseError(f"row has {len(tokens)} entries, expected {size}", line, tokens[0][1])
        matrix.append(tuple(_integer(token, line, "matrix entry") for token in tokens))

    boundary = 1
    homology_sphere = False
    seen = set()
    for line, tokens in lines[1 + size :]:
        keyword, column = tokens[0]
        if keyword in seen:
            raise ParseError(f"duplicate {keyword} line", line, column)
        if keyword == "boundary":
            _arity(tokens, 2, line)
            boundary = _integer(tokens[1], line, "boundary component count")
            if boundary < 1:
                raise ParseError("a filling has at least one boundary component", line, tokens[1][1])
        elif keyword == "homology-sphere":
            _arity(tokens, 2, line)
            flag, flag_column = tokens[1]
            if flag not in ("true", "false"):
                raise ParseError(f"expected true or false, found {flag!r}", line, flag_column)
            homology_sphere = flag == "true"
        else:
            raise ParseError(f"unknown keyword {keyword!r}", line, column)
        seen.add(keyword)

    require_symmetric(matrix)
    return IntersectionForm(
        matrix=tuple(matrix),
        boundary_components=boundary,
        boundary_is_homology_sphere=homology_sphere,
    )


def print_openbook(ob: OpenBook) -> str:
    lines = [f"page {ob.page.holes}"]
    for letter in ob.word:
        sign = "+" if letter.sign > 0 else "-"
        lines.append(f"twist {sign} " + " ".join(str(hole) for hole in letter.curve.holes))
    return "\n".join(lines) + "\n"


def print_surgery(record: ContactSurgeryRecord) -> str:
    lines = [f"comp {c.tb} {c.rot} {c.coeff:+d}" for c in record.components]
    for i in range(record.size):
        for j in range(i + 1, record.size):
            if record.linking[i][j]:
                lines.append(f"lk {i + 1} {j + 1} {record.linking[i][j]}")
    return "".join(line + "\n" for line in lines)


def print_form(form: IntersectionForm) -> str:
    lines = [str(form.rank)]
    lines += [" ".join(str(entry) for entry in row) for row in form.matrix]
    lines.append(f"boundary {form.boundary_components}")
    lines.append("homology-sphere " + ("true" if form.boundary_is_homology_sphere else "false"))
    return "\n".join(lines) + "\n"


_PARSERS = {"openbook": parse_openbook, "surgery": parse_surgery, "form": parse_form}
_PRINTERS = {
    OpenBook: print_openbook,
    ContactSurgeryRecord: print_surgery,
    IntersectionForm: print_form,
}


def parse_document(kind: str, text: str) -> Document:
    return Document(kind=kind, payload=_PARSERS[kind](text))


def print_document(document: Document) -> str:
    return _PRINTERS[type(document.payload)](document.payload)


def format_rational(value: Optional[Fraction]) -> Optional[str]:
    """Exact ``p/q`` string; integers keep the ``/1`` so the shape is stable."""

    if value is None:
        return None
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Read ``p/q`` or an integer; decimals are refused so no float sneaks in."""

    if not re.fullmatch(r"[+-]?[0-9]+(/[0-9]+)?", text.strip(), re.ASCII):
        raise ValueError(f"{text!r} is not an exact rational p/q")
    return Fraction(text.strip())


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, separators=(", ", ": "))


__all__ = [
    "decode_document",
    "format_rational",
    "parse_document",
    "parse_form",
    "parse_openbook",
    "parse_rational",
    "parse_surgery",
    "print_document",
    "print_form",
    "print_openbook",
    "print_surgery",
    "to_json",
]
