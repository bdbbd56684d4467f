"""Parsing and formatting of exact scalars, node files and data files.

Node and data files are plain text, one value per line.  A value is either
a decimal literal (``0.5``, ``-1.25e-3``) or a rational literal ``p/q``.
Blank lines and ``#`` comments are ignored.  Parsing is always exact: every
literal becomes a ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Iterable, Union

from .errors import InputError


def parse_scalar(text: str) -> Fraction:
    """Parse a decimal or ``p/q`` literal into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse scalar literal {text!r}: {exc}") from None


def read_values(path: Union[str, Path]) -> list[Fraction]:
    values = []
    for line in Path(path).read_text().splitlines():
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            values.append(parse_scalar(stripped))
    if not values:
        raise InputError(f"no values found in {path}")
    return values


def write_values(path: Union[str, Path], values: Iterable) -> None:
    Path(path).write_text("".join(f"{format_exact(v)}\n" for v in values))


def format_exact(value) -> str:
    """Render a scalar without loss.

    Floats use ``repr`` (shortest round-trip form).  Rationals become an
    exact decimal string when the denominator is of the form 2^a * 5^b,
    and a ``p/q`` literal otherwise.
    """
    if isinstance(value, float):
        return repr(value)
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    den = frac.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{frac.numerator}/{frac.denominator}"
    digits = max(twos, fives)
    scaled = abs(frac.numerator) * 10**digits // frac.denominator
    text = str(scaled).rjust(digits + 1, "0")
    sign = "-" if frac.numerator < 0 else ""
    return f"{sign}{text[:-digits]}.{text[-digits:]}".rstrip("0").rstrip(".") or "0"


def scalar_to_json(value):
    """JSON form of a scalar: floats stay numbers, exact values become
    strings (decimal when exact, ``p/q`` otherwise)."""
    if isinstance(value, float):
        return value
    if isinstance(value, int):
        return value
    return format_exact(value)


def scalar_from_json(value) -> Union[float, Fraction]:
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, bool) or value is None:
        raise InputError(f"not a scalar: {value!r}")
    return float(value)
