"""Exact rational scalars.

Everything on the exact side of the package computes over `Rat`: gmpy2's mpq
when available (much faster), otherwise the stdlib Fraction.  Both keep values
in lowest terms with positive denominator and print as "a/b" (or "a" for
integers), which is also the wire format used by problem files and the CLI.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rat

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rat

    BACKEND = "fractions"

R0 = Rat(0)
R1 = Rat(1)


def rat(value) -> "Rat":
    """Coerce an int, string, or Rat to Rat.  Floats are refused on purpose:
    the exact pipeline must never silently absorb binary rounding."""
    if isinstance(value, float):
        raise TypeError("refusing float %r on the exact path; pass a string like '1/3'" % value)
    if isinstance(value, str):
        return parse_rational(value)
    return Rat(value)


def parse_rational(text: str) -> "Rat":
    """Parse "a/b", "a", or a decimal string like "-0.25" exactly."""
    s = text.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        d = int(den)
        if d == 0:
            raise ValueError("zero denominator in %r" % text)
        return Rat(int(num), d)
    if "." in s or "e" in s or "E" in s:
        from fractions import Fraction

        f = Fraction(s)  # exact decimal parse
        return Rat(f.numerator, f.denominator)
    return Rat(int(s))


def rat_str(q) -> str:
    """Canonical string form, "a/b" or "a"."""
    return str(q)
