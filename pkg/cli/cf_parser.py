from __future__ import annotations
from cf_core import canonicalize
from cf_core import CoefficientStream
from cf_core import EventuallyPeriodic
from cf_core import Finite
from cf_core import Generator
from cf_core import neg_from_regular
from dataclasses import dataclass
from enum import Enum
from .builtin_examples import BUILTINS
import re
from typing import Optional

REGULAR_TAG: str = "reg:"
INT_PATTERN: re.Pattern = re.compile(r"[+-]?\d+")

class CfSyntaxError(ValueError):
    """malformed continued fraction expression. position is a 0-based character offset."""
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.message: str = message
        self.position: int = position

class Convention(Enum):
    NEGATIVE = "negative"
    REGULAR = "regular"

@dataclass(frozen=True)
class CfExpression:
    """parsed expression. stream always holds the negative continued fraction."""
    source: str
    stream: CoefficientStream
    convention: Convention = Convention.NEGATIVE

class _CfParser:
    def __init__(self, text: str) -> None:
        self.text: str = text
        self.pos: int = 0

    def _skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> Optional[str]:
        self._skip_spaces()
        if self.pos < len(self.text):
            return self.text[self.pos]
        return None

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            found: str = "end of input" if self._peek() is None else repr(self._peek())
            raise CfSyntaxError(f"expected '{char}', found {found}", self.pos)
        self.pos += 1

    def _integer(self) -> int:
        self._skip_spaces()
        match: Optional[re.Match] = INT_PATTERN.match(self.text, self.pos)
        if match is None:
            raise CfSyntaxError("expected an integer", self.pos)
        self.pos = match.end()
        return int(match.group())

    def _integers(self, stop: str) -> tuple[list[int], bool]:
        """integers separated by ',' up to stop, ';' or '('. the flag tells if '(' follows."""
        values: list[int] = []
        if self._peek() in (stop, ";", "("):
            return values, self._peek() == "("
        values.append(self._integer())
        while self._peek() == ",":
            self.pos += 1
            if self._peek() == "(":
                return values, True
            values.append(self._integer())
        return values, self._peek() == "("

    def _brackets(self) -> CoefficientStream:
        self._expect("[")
        prefix, periodic = self._integers("]")
        if self._peek() == ";":
            self.pos += 1
            periodic = True
        if not periodic:
            self._expect("]")
            return Finite(tuple(prefix))
        self._expect("(")
        start: int = self.pos
        period, _ = self._integers(")")
        if len(period) == 0:
            raise CfSyntaxError("empty period", start)
        self._expect(")")
        self._expect("]")
        return EventuallyPeriodic(tuple(prefix), tuple(period))

    def parse(self) -> CfExpression:
        convention: Convention = Convention.NEGATIVE
        self._skip_spaces()
        stream: CoefficientStream
        if self.text.startswith("@", self.pos):
            start: int = self.pos
            name: str = self.text[start:].strip()
            if name not in BUILTINS:
                raise CfSyntaxError(
                    f"unknown builtin '{name}', choose from {sorted(BUILTINS)}", start
                )
            self.pos = len(self.text)
            return CfExpression(self.text, BUILTINS[name], convention)
        if self.text.startswith(REGULAR_TAG, self.pos):
            self.pos += len(REGULAR_TAG)
            convention = Convention.REGULAR
        stream = self._brackets()
        if self._peek() is not None:
            raise CfSyntaxError("unexpected trailing input", self.pos)
        if convention == Convention.REGULAR:
            stream = neg_from_regular(stream)
        return CfExpression(self.text, stream, convention)

def parse_cf(text: str) -> CfExpression:
    """parse "[a0,...,ak]", "[a0,...,ak;(p0,...,pm)]", "reg:[...]" or a builtin "@exampleN".

    the prefix may be empty ("[(1)]", "[;(1)]") and "[]" is the empty continued fraction.
    a comma may stand in place of the semicolon before the period.

    Raises:
        CfSyntaxError: malformed text, empty period or unknown builtin.
    """
    return _CfParser(text).parse()

def format_cf(stream: CoefficientStream) -> str:
    """text that parse_cf reads back to the same stream. periodic streams print canonically."""
    if isinstance(stream, Finite):
        return "[" + ",".join(str(b) for b in stream.coeffs) + "]"
    if isinstance(stream, EventuallyPeriodic):
        stream = canonicalize(stream)
        period: str = "(" + ",".join(str(b) for b in stream.period) + ")"
        if len(stream.prefix) == 0:
            return f"[{period}]"
        return "[" + ",".join(str(b) for b in stream.prefix) + f";{period}]"
    if isinstance(stream, Generator) and stream.name in BUILTINS \
            and stream.head == () and stream.offset == 0:
        return stream.name
    raise ValueError(f"{stream} has no text form.")
