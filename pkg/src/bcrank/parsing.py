"""Text format for bicomplex matrices.

One matrix row per line, entries separated by commas; blank lines and
``#`` comments are ignored.  Entries follow

    entry := term (('+'|'-') term)*
    term  := coeff unit? | unit
    unit  := 'i1' | 'i2' | 'i1i2' | 'e1' | 'e2'
    coeff := int | int '/' posint

so ``1+2i1+3i2+4i1i2``, ``-5/2e1`` and ``e2`` are all entries.  The
idempotent units are input sugar only; serialization always emits the
four-coefficient form (zero terms omitted, ``0`` for the zero scalar),
which re-parses to an identical matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .matrix import BicomplexMatrix
from .scalar import Bicomplex, E1, E2, I1, I1I2, I2

_UNITS = {"i1i2": I1I2, "i1": I1, "i2": I2, "e1": E1, "e2": E2}
_UNIT_NAMES = ("i1i2", "i1", "i2", "e1", "e2")  # longest match first


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # "int", "unit", "+", "-", "/"
    text: str
    column: int  # 1-based column in the source line


@dataclass(frozen=True, slots=True)
class MatrixDocument:
    """A parsed matrix together with per-entry source positions."""

    source: str
    matrix: BicomplexMatrix
    positions: tuple[tuple[int, int], ...]  # row-major (line, column), 1-based

    def position(self, i: int, j: int) -> tuple[int, int]:
        return self.positions[i * self.matrix.cols + j]


def _lex(segment: str, line: int, col_base: int) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(segment):
        ch = segment[i]
        column = col_base + i + 1
        if ch in " \t":
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(segment) and segment[j].isdigit():
                j += 1
            tokens.append(_Token("int", segment[i:j], column))
            i = j
            continue
        if ch in "+-/":
            tokens.append(_Token(ch if ch != "/" else "/", ch, column))
            i += 1
            continue
        for name in _UNIT_NAMES:
            if segment.startswith(name, i):
                tokens.append(_Token("unit", name, column))
                i += len(name)
                break
        else:
            raise ParseError(line, column, f"unexpected character {ch!r}")
    return tokens


class _EntryParser:
    def __init__(self, tokens: list[_Token], line: int, end_column: int):
        self.tokens = tokens
        self.line = line
        self.end_column = end_column
        self.pos = 0

    def _peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _fail(self, expected: str) -> ParseError:
        tok = self._peek()
        if tok is None:
            return ParseError(self.line, self.end_column, f"expected {expected}")
        return ParseError(
            self.line, tok.column, f"expected {expected}, found {tok.text!r}"
        )

    def parse(self) -> Bicomplex:
        value = self._signed_term(allow_bare=True)
        while self._peek() is not None:
            tok = self._peek()
            if tok.kind not in ("+", "-"):
                raise self._fail("'+' or '-'")
            value = value + self._signed_term(allow_bare=False)
        return value

    def _signed_term(self, allow_bare: bool) -> Bicomplex:
        sign = 1
        tok = self._peek()
        if tok is not None and tok.kind in ("+", "-"):
            sign = 1 if tok.kind == "+" else -1
            self.pos += 1
        elif not allow_bare:
            raise self._fail("'+' or '-'")
        term = self._term()
        return term if sign == 1 else -term

    def _term(self) -> Bicomplex:
        tok = self._peek()
        if tok is None:
            raise self._fail("number or unit")
        if tok.kind == "unit":
            self.pos += 1
            return _UNITS[tok.text]
        if tok.kind == "int":
            self.pos += 1
            coeff = Fraction(int(tok.text))
            nxt = self._peek()
            if nxt is not None and nxt.kind == "/":
                self.pos += 1
                den = self._peek()
                if den is None or den.kind != "int":
                    raise self._fail("positive integer denominator")
                if int(den.text) == 0:
                    raise ParseError(
                        self.line, den.column, "denominator must be positive"
                    )
                self.pos += 1
                coeff = Fraction(int(tok.text), int(den.text))
                nxt = self._peek()
            if nxt is not None and nxt.kind == "unit":
                self.pos += 1
                return coeff * _UNITS[nxt.text]
            return Bicomplex(coeff, 0)
        raise self._fail("number or unit")


def parse_entry(segment: str, line: int = 1, col_base: int = 0) -> Bicomplex:
    """Parse a single scalar entry."""
    tokens = _lex(segment, line, col_base)
    if not tokens:
        raise ParseError(line, col_base + 1, "empty entry")
    return _EntryParser(tokens, line, col_base + len(segment) + 1).parse()


def parse_matrix(text: str) -> MatrixDocument:
    """Parse a whole matrix document."""
    grid: list[list[Bicomplex]] = []
    positions: list[tuple[int, int]] = []
    width: int | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        hash_at = raw.find("#")
        content = raw if hash_at < 0 else raw[:hash_at]
        if not content.strip():
            continue
        row: list[Bicomplex] = []
        row_positions: list[tuple[int, int]] = []
        offset = 0
        for segment in content.split(","):
            stripped = segment.strip()
            lead = len(segment) - len(segment.lstrip(" \t"))
            entry_col = offset + lead + 1
            if not stripped:
                raise ParseError(line_no, entry_col, "empty entry")
            row.append(parse_entry(segment, line_no, offset))
            row_positions.append((line_no, entry_col))
            offset += len(segment) + 1  # account for the comma
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(
                line_no,
                1,
                f"row has {len(row)} entries, previous rows have {width}",
            )
        grid.append(row)
        positions.extend(row_positions)
    if width is None:
        raise ParseError(1, 1, "no matrix rows found")
    matrix = BicomplexMatrix.from_rows(grid)
    return MatrixDocument(source=text, matrix=matrix, positions=tuple(positions))


def serialize_matrix(a: BicomplexMatrix) -> str:
    """Canonical text form; parse_matrix(serialize_matrix(a)) equals a."""
    return "\n".join(
        ", ".join(x.format_literal() for x in a.row(i)) for i in range(a.rows)
    )
