"""Text forms of a truth table: binary strings, hex strings and ANF expressions.

Binary: one '0'/'1' per point, leftmost is point 0. Hex: each nibble holds
four consecutive points, earliest in the most significant bit (needs n >= 2).
ANF: terms joined by '+', each term '1' or 'x<i>' factors joined by '*';
whitespace is ignored and the lone expression '0' is the zero function.
"""

from __future__ import annotations

import re

import numpy as np

from boolnl.bfcore import MAX_N, AnfForm, TruthTable, tt_from_anf
from boolnl.errors import ParseError
from boolnl.transforms import mobius

FORMATS = ("bin", "hex", "anf")

_FACTOR = re.compile(r"x(\d+)")


def _n_from_length(length: int, what: str) -> int:
    if length < 2 or length & (length - 1):
        raise ParseError(f"{what} length {length} is not a power of two >= 2")
    n = length.bit_length() - 1
    if n > MAX_N:
        raise ParseError(f"n={n} exceeds the supported maximum {MAX_N}")
    return n


def _check_n(inferred: int, n: int | None) -> None:
    if n is not None and n != inferred:
        raise ParseError(f"input describes n={inferred} but n={n} was given")


def parse_bin(text: str, n: int | None = None) -> TruthTable:
    text = "".join(text.split())
    if not text or set(text) - {"0", "1"}:
        raise ParseError(f"binary truth table may only contain 0 and 1: {text!r}")
    inferred = _n_from_length(len(text), "binary truth table")
    _check_n(inferred, n)
    bits = np.frombuffer(text.encode(), dtype=np.uint8) - ord("0")
    return TruthTable(inferred, bits)


def parse_hex(text: str, n: int | None = None) -> TruthTable:
    text = "".join(text.split())
    if text.lower().startswith("0x"):
        text = text[2:]
    try:
        nibbles = [int(ch, 16) for ch in text]
    except ValueError:
        raise ParseError(f"invalid hex digit in {text!r}") from None
    if not nibbles:
        raise ParseError("empty hex truth table")
    inferred = _n_from_length(4 * len(nibbles), "hex truth table")
    _check_n(inferred, n)
    bits = [(v >> (3 - k)) & 1 for v in nibbles for k in range(4)]
    return TruthTable(inferred, bits)


def parse_anf(text: str, n: int) -> AnfForm:
    if n is None:
        raise ParseError("the number of variables n is required for ANF input")
    if not 0 <= n <= MAX_N:
        raise ParseError(f"n={n} outside 0..{MAX_N}")
    text = "".join(text.split())
    if text == "0":
        return AnfForm(n, frozenset())
    terms = []
    for term in text.split("+"):
        if term == "1":
            terms.append(())
            continue
        if not term:
            raise ParseError(f"empty term in {text!r}")
        factors = []
        for factor in term.split("*"):
            match = _FACTOR.fullmatch(factor)
            if match is None:
                raise ParseError(f"bad factor {factor!r} in term {term!r}")
            j = int(match.group(1))
            if not 1 <= j <= n:
                raise ParseError(f"variable x{j} outside x1..x{n}")
            if j in factors:
                raise ParseError(f"variable x{j} repeated in term {term!r}")
            factors.append(j)
        terms.append(tuple(factors))
    return AnfForm.from_terms(n, terms)


def parse_function(spec: str, fmt: str, n: int | None = None) -> TruthTable:
    if fmt == "bin":
        return parse_bin(spec, n)
    if fmt == "hex":
        return parse_hex(spec, n)
    if fmt == "anf":
        return tt_from_anf(parse_anf(spec, n))
    raise ValueError(f"unknown format {fmt!r}")


def render_bin(tt: TruthTable) -> str:
    return (tt.bits + ord("0")).tobytes().decode()


def render_hex(tt: TruthTable) -> str:
    if tt.n < 2:
        raise ValueError("hex form needs at least 2 variables")
    nibbles = tt.bits.reshape(-1, 4) @ np.array([8, 4, 2, 1])
    return "".join(f"{int(v):X}" for v in nibbles)


def render_anf(tt: TruthTable) -> str:
    return str(mobius(tt))


def render_function(tt: TruthTable, fmt: str) -> str:
    return {"bin": render_bin, "hex": render_hex, "anf": render_anf}[fmt](tt)
