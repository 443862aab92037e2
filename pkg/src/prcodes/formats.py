"""Line-oriented text formats for code specs and words.

Code spec (UTF-8, '#' starts a comment):
    field <p[:m[:c0.c1...cm]]>
    k <int>
    modulus <ascending coefficients, space separated>   (one line each)

Word:
    symbol <index> <ascending coefficients>             (or '?' if erased)

Printing is canonical and byte-stable: fixed line order, single spaces,
'\n' endings, the field descriptor always explicit for extension fields.
"""

from __future__ import annotations

from .code import Code, ReceivedWord
from .field import Field
from .poly import Poly


class FormatError(ValueError):
    """Malformed code-spec or word text."""


def dump_code(code: Code) -> str:
    lines = [f"field {code.field.descriptor()}", f"k {code.k}"]
    for m_i in code.moduli:
        lines.append(f"modulus {m_i.to_text()}")
    return "\n".join(lines) + "\n"


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_code(text: str) -> Code:
    field = None
    k = None
    moduli_texts = []
    for lineno, line in _content_lines(text):
        parts = line.split(None, 1)
        key = parts[0]
        rest = parts[1] if len(parts) > 1 else ""
        if key == "field":
            if field is not None:
                raise FormatError(f"line {lineno}: duplicate field line")
            try:
                field = Field.from_descriptor(rest)
            except ValueError as e:
                raise FormatError(f"line {lineno}: {e}") from None
        elif key == "k":
            if k is not None:
                raise FormatError(f"line {lineno}: duplicate k line")
            try:
                k = int(rest)
            except ValueError:
                raise FormatError(f"line {lineno}: bad k {rest!r}") from None
        elif key == "modulus":
            moduli_texts.append((lineno, rest))
        else:
            raise FormatError(f"line {lineno}: unknown directive {key!r}")
    if field is None:
        raise FormatError("missing field line")
    if k is None:
        raise FormatError("missing k line")
    moduli = []
    for lineno, mtext in moduli_texts:
        try:
            moduli.append(Poly.from_text(field, mtext))
        except ValueError as e:
            raise FormatError(f"line {lineno}: {e}") from None
    try:
        return Code(field, moduli, k)
    except ValueError as e:
        raise FormatError(str(e)) from None


def dump_word(word: ReceivedWord) -> str:
    lines = []
    for i, sym in enumerate(word.symbols):
        if i in word.erased:
            lines.append(f"symbol {i} ?")
        else:
            lines.append(f"symbol {i} {sym.to_text()}")
    return "\n".join(lines) + "\n"


def parse_word(text: str, code: Code) -> ReceivedWord:
    entries = {}
    for lineno, line in _content_lines(text):
        parts = line.split(None, 2)
        if parts[0] != "symbol" or len(parts) < 3:
            raise FormatError(f"line {lineno}: expected 'symbol <index> <coeffs>'")
        try:
            index = int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: bad index {parts[1]!r}") from None
        if index in entries:
            raise FormatError(f"line {lineno}: duplicate symbol {index}")
        entries[index] = (lineno, parts[2].strip())
    if sorted(entries) != list(range(code.n)):
        raise FormatError(f"word must list symbols 0..{code.n - 1} exactly once")
    symbols = []
    erased = set()
    for i in range(code.n):
        lineno, body = entries[i]
        if body == "?":
            erased.add(i)
            symbols.append(Poly.zero(code.field))
            continue
        try:
            symbols.append(Poly.from_text(code.field, body))
        except ValueError as e:
            raise FormatError(f"line {lineno}: {e}") from None
    try:
        return ReceivedWord(symbols, erased).validate(code)
    except ValueError as e:
        raise FormatError(str(e)) from None
