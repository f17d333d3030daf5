"""
One word, five notions of independence
======================================

The same mixed word is evaluated under every universal product the
library implements.  Two algebras, one generator each; the states give
each generator the moments m1 = 1/2, m2 = 1/3 (first factor) and
m1 = 1/5, m2 = 1/7 (second factor).
"""

from ncindep import (
    AlgebraSignature,
    JointFunctional,
    MomentFunctional,
    Monomial,
    ProductKind,
    QDeformed,
    Word,
    format_word,
    kind_label,
    unitize,
)
from ncindep.rational import as_rational


def state(signature, m1, m2):
    gen = signature.generator_names[0]
    return MomentFunctional(signature, 2, {
        Monomial(signature, (gen,)): as_rational(m1),
        Monomial(signature, (gen, gen)): as_rational(m2),
    })


# The boolean, monotone, and anti-monotone products live on algebras
# without a unit; tensor and free need the unit, so those two get the
# unitized versions of the same states.
A = AlgebraSignature("A", False, (("a", 0),))
B = AlgebraSignature("B", False, (("b", 0),))
phi = state(A, "1/2", "1/3")
psi = state(B, "1/5", "1/7")

word = Word((
    (0, Monomial(A, ("a",))),
    (1, Monomial(B, ("b",))),
    (0, Monomial(A, ("a",))),
))
print("word:", format_word(word))
print()

# Non-unital kinds first.  Boolean sees three singleton runs, so the value
# is m1(a) * m1(b) * m1(a) = 1/2 * 1/5 * 1/2 = 1/20.  Monotone evaluates
# the inner b-block on its own but joins the outer a-letters into one
# moment: m2(a) * m1(b) = 1/3 * 1/5 = 1/15.  Anti-monotone does the
# opposite and here agrees with boolean.
for kind in (ProductKind.BOOLEAN, ProductKind.MONOTONE, ProductKind.ANTI_MONOTONE):
    joint = JointFunctional((phi, psi), kind)
    print("%-14s %s" % (kind_label(kind), joint.evaluate(word)))

# Unital kinds on the unitized states.  Tensor lets the letters commute:
# m2(a) * m1(b) again.  Free centers each block and keeps the cross terms
# the centering leaves behind.
uphi, upsi = unitize(phi), unitize(psi)
uword = Word((
    (0, Monomial(uphi.algebra, ("a",))),
    (1, Monomial(upsi.algebra, ("b",))),
    (0, Monomial(uphi.algebra, ("a",))),
))
for kind in (ProductKind.TENSOR, ProductKind.FREE):
    joint = JointFunctional((uphi, upsi), kind)
    print("%-14s %s" % (kind_label(kind), joint.evaluate(uword)))

# Two degenerate relatives round out the picture.  The trivial product
# kills every word that mixes the factors, and the q-deformed family
# rescales a kind block by block: each extra block beyond the first
# divides by q, so with q = 2 this three-block word is quartered.
print()
joint = JointFunctional((phi, psi), ProductKind.DEGENERATE)
print("%-14s %s" % ("degenerate", joint.evaluate(word)))
for q in ("1", "2", "1/2"):
    deformed = QDeformed(ProductKind.BOOLEAN, as_rational(q))
    joint = JointFunctional((phi, psi), deformed)
    print("%-14s %s" % (kind_label(deformed), joint.evaluate(word)))
