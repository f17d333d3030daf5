"""
Classical independence is tensor independence
=============================================

On a finite probability space, two random variables are independent
exactly when every joint probability factorizes — equivalently, when the
joint distribution is the product measure of the marginals.  This script
checks both formulations on small spaces, then recomputes the same mixed
expectations through the tensor product of moment functionals to show the
algebraic and the measure-theoretic pictures agree number for number.
"""

from ncindep import (
    AlgebraSignature,
    FiniteProbSpace,
    JointFunctional,
    MomentFunctional,
    Monomial,
    ProductKind,
    RandomVariable,
    Word,
    independence_equivalence,
    product_space,
    projections,
)
from ncindep.rational import ONE, ZERO, as_rational

# A biased coin and a fair die face (three outcomes), and their product
# space: six outcomes, each weighted by the product of the marginals.
coin = FiniteProbSpace(("h", "t"), {"h": as_rational("1/3"), "t": as_rational("2/3")})
die = FiniteProbSpace(
    ("1", "2", "3"), {k: as_rational("1/3") for k in ("1", "2", "3")}
)
both = product_space(coin, die)
print("product outcomes:", len(both.outcomes))

# The coordinate projections are independent: both tests say so.
first, second = projections(both)
verdict = independence_equivalence(first, second)
print("projections independent? atomwise=%s jointfactor=%s" % (verdict.atomwise, verdict.jointfactor))

# A variable paired with itself is as dependent as it gets — unless it is
# constant, in which case independence is restored.  Both tests agree in
# both cases.
same = RandomVariable(coin, {"h": "h", "t": "t"})
verdict = independence_equivalence(same, same)
print("coin vs itself?         atomwise=%s jointfactor=%s" % (verdict.atomwise, verdict.jointfactor))
constant = RandomVariable(coin, {"h": "c", "t": "c"})
verdict = independence_equivalence(constant, same)
print("constant vs coin?       atomwise=%s jointfactor=%s" % (verdict.atomwise, verdict.jointfactor))

# Now the bridge to the algebraic side.  Read the labels as numbers:
# the coin is worth +1 or -1, the die face its own value.
coin_value = {"h": ONE, "t": -ONE}
die_value = {k: as_rational(k) for k in die.outcomes}


def power_moment(space, values, k):
    """E[V^k] summed outcome by outcome."""
    total = ZERO
    for outcome in space.outcomes:
        total += space.weights[outcome] * values[outcome] ** k
    return total


def functional_from(space, values, name, gen, max_degree=4):
    sig = AlgebraSignature(name, True, ((gen, 0),))
    entries = {Monomial(sig, ()): ONE}
    for k in range(1, max_degree + 1):
        entries[Monomial(sig, (gen,) * k)] = power_moment(space, values, k)
    return MomentFunctional(sig, max_degree, entries)


phi = functional_from(coin, coin_value, "Coin", "c")
psi = functional_from(die, die_value, "Die", "d")
joint = JointFunctional((phi, psi), ProductKind.TENSOR)

# Mixed expectations two ways.  Classically: integrate c^j d^k against the
# product measure.  Algebraically: evaluate the word c^j d^k under the
# tensor product of the two moment functionals.
print()
print("E[coin^j die^k]   classical   tensor")
for j, k in ((1, 1), (1, 2), (2, 1), (2, 3)):
    classical_value = ZERO
    for a in coin.outcomes:
        for b in die.outcomes:
            classical_value += both.weights[(a, b)] * coin_value[a] ** j * die_value[b] ** k
    word = Word((
        (0, Monomial(phi.algebra, ("c",) * j)),
        (1, Monomial(psi.algebra, ("d",) * k)),
    ))
    algebraic_value = joint.evaluate(word)
    marker = "ok" if classical_value == algebraic_value else "MISMATCH"
    print("  j=%d k=%d        %8s   %8s   %s" % (j, k, classical_value, algebraic_value, marker))
