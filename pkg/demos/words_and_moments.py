"""
Words, moment tables, and expressions
=====================================

A walk through the basic vocabulary of the library: algebras are declared
by signatures, their elements are monomials in the generators, mixed
monomials over several algebras are words, and a state is a finite table
of moments.
"""

from ncindep import (
    AlgebraSignature,
    MomentFunctional,
    Monomial,
    Word,
    eval_functional,
    format_expression,
    format_word,
    normalize_word,
    parse_expression,
    state_to_json,
    unitize,
    word_degree,
)
from ncindep.rational import as_rational

# An algebra signature lists a name, whether the algebra has a unit, and
# the generators (each with a parity used only by the graded constructions;
# 0 everywhere here).
A = AlgebraSignature("A", True, (("a", 0), ("b", 0)))
B = AlgebraSignature("B", True, (("x", 0),))

# Monomials are just tuples of generator names under their signature.
ab = Monomial(A, ("a", "b"))
print("a monomial:", ".".join(ab.letters) or "1")

# Words interleave monomials from several algebras.  Building one from raw
# (factor, monomial) pairs normalizes it: neighbouring blocks from the same
# factor merge into one, so the block structure always alternates.
raw = [(0, Monomial(A, ("a",))), (0, Monomial(A, ("a",))), (1, Monomial(B, ("x",)))]
word = normalize_word(raw)
print("normalized word:", format_word(word))  # the two a-blocks merged
print("blocks:", word.num_blocks, " letters:", word.num_letters)
print("degree:", word_degree(word))

# A state is a moment table: one rational per monomial up to a cutoff
# degree.  This one gives the generator of B the moments of a fair +/-1
# coin flip: odd moments vanish, even moments are 1.
coin = MomentFunctional(
    B,
    4,
    {
        Monomial(B, ()): as_rational(1),
        Monomial(B, ("x",)): as_rational(0),
        Monomial(B, ("x", "x")): as_rational(1),
        Monomial(B, ("x",) * 3): as_rational(0),
        Monomial(B, ("x",) * 4): as_rational(1),
    },
)
print("coin moment of x^2:", coin(Monomial(B, ("x", "x"))))

# eval_functional extends the table linearly to polynomials.  Expressions
# can be written as text: coefficients are exact rationals, letters are
# algebra.generator, and juxtaposition multiplies.
poly = parse_expression("3 * B.x^2 + -1/2 * B.x", (B,))
print("parsed:", format_expression(poly))
print("value under the coin state:", eval_functional(coin, poly))  # 3*1 - 0

# States serialize to JSON documents (and back) with rationals kept exact.
doc = state_to_json(coin)
print("serialized keys:", sorted(doc["moments"])[:3], "...")

# A state on a non-unital algebra can be promoted to the unital setting;
# the unit row is added and every old moment is kept.
N = AlgebraSignature("N", False, (("y", 0),))
bare = MomentFunctional(N, 2, {
    Monomial(N, ("y",)): as_rational("1/3"),
    Monomial(N, ("y", "y")): as_rational("1/2"),
})
extended = unitize(bare)
print("unitized keeps y^2:", extended(Monomial(extended.algebra, ("y", "y"))))
print("and knows the unit:", extended(Monomial(extended.algebra, ())))
