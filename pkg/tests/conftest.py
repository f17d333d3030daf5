"""Shared builders for the test suite.

Everything here is plain construction plumbing: named signatures used
across many tests and a zero-filled state builder so fixtures only spell
out the moments they care about.
"""

from ncindep import (
    AlgebraSignature,
    MomentFunctional,
    Monomial,
    all_monomials,
)
from ncindep.rational import ONE, ZERO, as_rational

# Two scalar-generator factors in each regime, reused throughout.
A1 = AlgebraSignature("A1", True, (("a", 0), ("b", 0)))
A2 = AlgebraSignature("A2", True, (("x", 0), ("y", 0)))
A3 = AlgebraSignature("A3", True, (("s", 0), ("t", 0)))

N1 = AlgebraSignature("A1", False, (("a", 0), ("b", 0)))
N2 = AlgebraSignature("A2", False, (("x", 0), ("y", 0)))
N3 = AlgebraSignature("A3", False, (("s", 0), ("t", 0)))

# Graded factors with one odd and one even generator (unital regime).
G1 = AlgebraSignature("A1", True, (("a", 1), ("b", 0)))
G2 = AlgebraSignature("A2", True, (("x", 1), ("y", 0)))


def total_state(algebra, max_degree, entries=None):
    """A moment functional that is 0 everywhere except the given entries.

    Keys are space-joined letter strings ("a b" for the monomial ab); the
    unit entry of a unital algebra is supplied automatically.
    """
    table = {m: ZERO for m in all_monomials(algebra, max_degree)}
    if algebra.unital:
        table[Monomial(algebra, ())] = ONE
    for key, value in (entries or {}).items():
        letters = tuple(key.split()) if isinstance(key, str) else tuple(key)
        table[Monomial(algebra, letters)] = as_rational(value)
    return MomentFunctional(algebra, max_degree, table)


def mono(algebra, text):
    """Monomial from a space-joined letter string ("" is the unit)."""
    return Monomial(algebra, tuple(text.split()))
