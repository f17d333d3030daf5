"""Exact rational scalars.

Every quantity the engine computes is an exact rational number; floating
point appears only in advisory decimal renderings.  When gmpy2 is installed
its ``mpq`` type is used (it is roughly an order of magnitude faster on the
small rationals that dominate moment computations); otherwise the standard
library ``fractions.Fraction`` is a drop-in replacement.  Both types print
as ``p/q`` (or a bare integer), hash consistently, and interoperate with
Python ints.
"""

from __future__ import annotations

import re
from fractions import Fraction

try:
    from gmpy2 import mpq as Rational

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rational = Fraction
    BACKEND = "fractions"

ZERO = Rational(0)
ONE = Rational(1)


def as_rational(value):
    """Coerce ``value`` to the active exact rational type.

    Accepts ints, strings such as ``"3"`` or ``"-3/4"``, Fractions, and
    values of the active type itself.  Floats are rejected: silently
    converting a float would smuggle binary rounding error into an engine
    that promises exactness.
    """
    if isinstance(value, float):
        raise TypeError("refusing to coerce float %r to an exact rational" % (value,))
    if isinstance(value, str):
        return parse_rational(value)
    return Rational(value)


_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?\Z")


def parse_rational(text):
    """Parse ``"p/q"`` or ``"n"`` into an exact rational.

    Decimal notation is rejected: rationals are the wire format, decimal
    strings are output-only renderings.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError("not a rational literal: %r" % (text,))
    try:
        return Rational(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError("not a rational literal: %r" % (text,)) from exc


def format_rational(value) -> str:
    """Render as ``p/q``, or a bare integer when the denominator is 1."""
    return str(value)


def decimal_rendering(value, digits: int = 15) -> str:
    """Advisory decimal form with ``digits`` significant digits."""
    return "%.*g" % (digits, float(value))
