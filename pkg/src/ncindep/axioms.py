"""Seeded, replayable property checks of the product laws.

Each axiom is checked word-by-word on randomly generated states and words:
equality of two functionals on every word up to the degree bound is what
linearity leaves to check.  A report lists every failing comparison with a
full serialization of its inputs, so any witness can be replayed by hand or
through the command line.  Reports are bit-identical for a given seed: the
per-trial generator is derived from (seed, trial index) alone, trials are
mutually independent, and results are assembled in trial order.

The laws:

* associativity - the left- and right-bracketed iterations of the binary
  product agree on three-factor words.
* unit law - joining with the trivial state on the empty-generator unital
  algebra changes nothing (unital kinds only).
* inclusion - on single-factor words the joint functional restricts to the
  factor's own functional.
* functoriality - substituting generators (images of length <= 2) commutes
  with taking the product.
* factorization - on two-block words the joint value splits into the
  product of the factors' moments.  Expected to fail for the degenerate
  product and for genuine q-deformations.
* symmetry - swapping the two factors leaves values unchanged.  Expected
  to fail for monotone and anti-monotone.
* mirror - monotone and anti-monotone exchange under the factor swap.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .algebra import (
    AlgebraSignature,
    EMPTY_WORD,
    Homomorphism,
    Monomial,
    Polynomial,
    Word,
    all_monomials,
    apply_homomorphism,
    normalize_word,
)
from .errors import RegimeMismatch
from .moments import MomentFunctional, pullback, state_to_json
from .parsing import format_expression, format_word
from .products import JointFunctional, ProductKind, QDeformed, kind_label
from .rational import ONE, Rational, ZERO, format_rational


class Axiom(Enum):
    ASSOCIATIVITY = "associativity"
    UNIT_LAW = "unitlaw"
    INCLUSION = "inclusion"
    FUNCTORIALITY = "functoriality"
    FACTORIZATION = "factorization"
    SYMMETRY = "symmetry"
    MIRROR = "mirror"


@dataclass(frozen=True)
class AxiomFailure:
    """One failing comparison: replayable inputs and both values."""

    inputs: dict
    lhs: Rational
    rhs: Rational


@dataclass(frozen=True)
class AxiomReport:
    axiom: Axiom
    kind: "ProductKind | QDeformed"
    seed: int
    trials: int
    failures: tuple

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self, max_witnesses: int = 3):
        out = [
            "axiom=%s kind=%s seed=%d trials=%d failures=%d"
            % (self.axiom.value, kind_label(self.kind), self.seed, self.trials, len(self.failures))
        ]
        for failure in self.failures[:max_witnesses]:
            out.append(
                "witness: lhs=%s rhs=%s inputs=%s"
                % (
                    format_rational(failure.lhs),
                    format_rational(failure.rhs),
                    json.dumps(failure.inputs, sort_keys=True),
                )
            )
        hidden = len(self.failures) - max_witnesses
        if hidden > 0:
            out.append("... and %d more witnesses" % hidden)
        return out


def expected_outcome(axiom: Axiom, kind) -> bool:
    """Whether a run of the axiom for this kind should report zero failures."""
    plain = kind.base if isinstance(kind, QDeformed) else kind
    if axiom is Axiom.FACTORIZATION:
        if plain is ProductKind.DEGENERATE:
            return False
        if isinstance(kind, QDeformed) and kind.q != ONE:
            return False
        return True
    if axiom is Axiom.SYMMETRY:
        return plain not in (ProductKind.MONOTONE, ProductKind.ANTI_MONOTONE)
    return True


# ---------------------------------------------------------------------------
# Random generation


_MOMENT_PALETTE = tuple(
    Rational(numerator, denominator)
    for numerator in range(-3, 4)
    for denominator in range(1, 9)
)


def gen_random_state(signature: AlgebraSignature, max_degree: int, seed) -> MomentFunctional:
    """Random moment functional with numerators in [-3, 3] and denominators
    in [1, 8]; the unit gets 1, odd monomials of a graded algebra get 0.
    ``seed`` may be an integer or a ``random.Random``."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    choice = rng.choice
    table = {}
    for monomial in all_monomials(signature, max_degree):
        if monomial.is_unit:
            table[monomial] = ONE
        elif signature.graded and monomial.degree:
            table[monomial] = ZERO
        else:
            table[monomial] = choice(_MOMENT_PALETTE)
    return MomentFunctional(signature, max_degree, table)


def gen_random_word(signatures: Sequence[AlgebraSignature], max_letters: int, seed) -> Word:
    """Random normal-form word with 1..max_letters single-generator letters.
    ``seed`` may be an integer or a ``random.Random``."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    alphabet = [
        (index, name)
        for index, signature in enumerate(signatures)
        for name in signature.generator_names
    ]
    length = rng.randint(1, max_letters)
    blocks = []
    for _ in range(length):
        index, name = rng.choice(alphabet)
        blocks.append((index, Monomial(signatures[index], (name,))))
    return normalize_word(blocks)


def gen_random_homomorphism(
    source: AlgebraSignature,
    target: AlgebraSignature,
    seed,
    max_image_letters: int = 2,
) -> Homomorphism:
    """Random substitution: each generator maps to a 1- or 2-term polynomial
    with monomials of length <= max_image_letters; unital regimes may also
    receive a constant term.  ``seed`` may be an integer or a ``random.Random``."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    images = {}
    for name in source.generator_names:
        poly = Polynomial.zero()
        for _ in range(rng.randint(1, 2)):
            length = rng.randint(1, max_image_letters)
            letters = tuple(rng.choice(target.generator_names) for _ in range(length))
            coeff = Rational(rng.randint(-2, 2), rng.randint(1, 4))
            poly = poly + Polynomial.from_monomial(Monomial(target, letters), 0, coeff)
        if source.unital and rng.random() < 0.25:
            poly = poly + Polynomial.from_word(EMPTY_WORD, Rational(rng.randint(-2, 2), 1))
        images[name] = poly
    return Homomorphism(source, target, images)


def enumerate_words(signatures: Sequence[AlgebraSignature], max_letters: int):
    """Every normal-form word whose letters are single generators, with
    1..max_letters letters, in a deterministic order."""
    alphabet = [
        (index, Monomial(signature, (name,)))
        for index, signature in enumerate(signatures)
        for name in signature.generator_names
    ]
    for length in range(1, max_letters + 1):
        for combo in itertools.product(alphabet, repeat=length):
            yield normalize_word(combo)


# ---------------------------------------------------------------------------
# Suite plumbing


_FACTOR_NAMES = ("A1", "A2", "A3")
_FACTOR_GENS = (("a", "b"), ("x", "y"), ("s", "t"))


def _plain(kind) -> ProductKind:
    return kind.base if isinstance(kind, QDeformed) else kind


def _uses_unital(kind) -> bool:
    if isinstance(kind, QDeformed):
        return False
    return kind in (ProductKind.TENSOR, ProductKind.FREE)


def _signatures(count: int, unital: bool):
    return tuple(
        AlgebraSignature.make(_FACTOR_NAMES[i], _FACTOR_GENS[i], unital=unital)
        for i in range(count)
    )


def _seed_words(signatures, max_letters):
    """Deterministic words guaranteeing shapes random sampling might miss:
    the return-to-first-factor shape and a full tour of the factors."""
    gens = [sig.generator_names[0] for sig in signatures]
    letter = lambda i: (i, Monomial(signatures[i], (gens[i],)))
    shapes = [
        [letter(0), letter(1), letter(0)],
        [letter(i) for i in range(len(signatures))],
        [letter(1), letter(0), letter(1), letter(0)],
    ]
    words = []
    for shape in shapes:
        if len(shape) <= max_letters:
            word = normalize_word(shape)
            if word not in words:
                words.append(word)
    return words


def _word_inputs(states, word, **extra):
    doc = {
        "states": [state_to_json(phi) for phi in states],
        "word": format_word(word),
    }
    doc.update(extra)
    return doc


def run_axiom_suite(
    axiom: Axiom,
    kind,
    seed: int,
    trials: int,
    max_word_len: int = 6,
) -> AxiomReport:
    """Run one axiom for one product kind over seeded random trials."""
    if not isinstance(axiom, Axiom):
        raise TypeError("axiom must be an Axiom")
    if not isinstance(kind, (ProductKind, QDeformed)):
        raise TypeError("kind must be a ProductKind or QDeformed")
    if trials < 1:
        raise ValueError("trials must be positive")
    if max_word_len < 1:
        raise ValueError("max_word_len must be positive")
    if axiom is Axiom.UNIT_LAW and not _uses_unital(kind):
        raise RegimeMismatch("the unit law applies to unital kinds (tensor, free)")
    if axiom is Axiom.MIRROR and kind not in (
        ProductKind.MONOTONE,
        ProductKind.ANTI_MONOTONE,
    ):
        raise RegimeMismatch("the mirror identity relates monotone and anti-monotone")
    runner = _TRIAL_RUNNERS[axiom]
    failures = []
    for trial in range(trials):
        rng = random.Random(seed * 1_000_003 + trial)
        failures.extend(runner(kind, rng, max_word_len))
    return AxiomReport(axiom, kind, seed, trials, tuple(failures))


# ---------------------------------------------------------------------------
# Per-axiom trials


def _trial_associativity(kind, rng, max_word_len):
    signatures = _signatures(3, _uses_unital(kind))
    states = [gen_random_state(sig, max_word_len, rng) for sig in signatures]
    left = JointFunctional(states, kind, bracketing="left")
    right = JointFunctional(states, kind, bracketing="right")
    failures = []
    words = _seed_words(signatures, max_word_len) + [
        gen_random_word(signatures, max_word_len, rng) for _ in range(8)
    ]
    for word in words:
        lhs = left.evaluate(word)
        rhs = right.evaluate(word)
        if lhs != rhs:
            failures.append(
                AxiomFailure(_word_inputs(states, word, bracketing="left-vs-right"), lhs, rhs)
            )
    return failures


def _trial_unit_law(kind, rng, max_word_len):
    signature = _signatures(1, True)[0]
    phi = gen_random_state(signature, max_word_len, rng)
    trivial_sig = AlgebraSignature.make("E", (), unital=True)
    delta = MomentFunctional(trivial_sig, max_word_len, {Monomial(trivial_sig, ()): ONE})
    with_right_unit = JointFunctional([phi, delta], kind)
    with_left_unit = JointFunctional([delta, phi], kind)
    failures = []
    for monomial in all_monomials(signature, max_word_len):
        expected = phi(monomial)
        as_first = normalize_word([(0, monomial)])
        as_second = normalize_word([(1, monomial)])
        for joint, word, side in (
            (with_right_unit, as_first, "phi*delta"),
            (with_left_unit, as_second, "delta*phi"),
        ):
            got = joint.evaluate(word)
            if got != expected:
                failures.append(
                    AxiomFailure(_word_inputs([phi], word, side=side), got, expected)
                )
    return failures


def _trial_inclusion(kind, rng, max_word_len):
    signatures = _signatures(2, _uses_unital(kind))
    states = [gen_random_state(sig, max_word_len, rng) for sig in signatures]
    joint = JointFunctional(states, kind)
    failures = []
    for index in (0, 1):
        for monomial in all_monomials(signatures[index], max_word_len):
            word = normalize_word([(index, monomial)])
            expected = ONE if monomial.is_unit else states[index](monomial)
            got = joint.evaluate(word)
            if got != expected:
                failures.append(
                    AxiomFailure(_word_inputs(states, word, factor=index), got, expected)
                )
    return failures


def _trial_functoriality(kind, rng, max_word_len):
    unital = _uses_unital(kind)
    sources = (
        AlgebraSignature.make("B1", ("u", "v"), unital=unital),
        AlgebraSignature.make("B2", ("w", "z"), unital=unital),
    )
    targets = _signatures(2, unital)
    target_states = [gen_random_state(sig, 2 * max_word_len, rng) for sig in targets]
    homs = [
        gen_random_homomorphism(source, target, rng)
        for source, target in zip(sources, targets)
    ]
    pulled = [
        pullback(phi, hom, max_degree=max_word_len)
        for phi, hom in zip(target_states, homs)
    ]
    joint_target = JointFunctional(target_states, kind)
    joint_pulled = JointFunctional(pulled, kind)
    failures = []
    words = _seed_words(sources, max_word_len) + [
        gen_random_word(sources, max_word_len, rng) for _ in range(6)
    ]
    for word in words:
        lhs = joint_target.evaluate_polynomial(apply_homomorphism(homs, word))
        rhs = joint_pulled.evaluate(word)
        if lhs != rhs:
            hom_doc = [
                {name: format_expression(image) for name, image in hom.images.items()}
                for hom in homs
            ]
            failures.append(
                AxiomFailure(
                    _word_inputs(target_states, word, homomorphisms=hom_doc), lhs, rhs
                )
            )
    return failures


def _trial_factorization(kind, rng, max_word_len):
    signatures = _signatures(2, _uses_unital(kind))
    states = [gen_random_state(sig, max_word_len, rng) for sig in signatures]
    joint = JointFunctional(states, kind)
    failures = []
    for _ in range(8):
        first_len = rng.randint(1, max(1, max_word_len - 1))
        second_len = rng.randint(1, max(1, max_word_len - first_len))
        first = Monomial(
            signatures[0],
            tuple(rng.choice(signatures[0].generator_names) for _ in range(first_len)),
        )
        second = Monomial(
            signatures[1],
            tuple(rng.choice(signatures[1].generator_names) for _ in range(second_len)),
        )
        word = Word(((0, first), (1, second)))
        lhs = joint.evaluate(word)
        rhs = states[0](first) * states[1](second)
        if lhs != rhs:
            failures.append(AxiomFailure(_word_inputs(states, word), lhs, rhs))
    return failures


def _swap_factors(word: Word) -> Word:
    return Word(tuple((1 - factor, monomial) for factor, monomial in word.blocks))


def _trial_symmetry(kind, rng, max_word_len):
    signatures = _signatures(2, _uses_unital(kind))
    states = [gen_random_state(sig, max_word_len, rng) for sig in signatures]
    joint = JointFunctional(states, kind)
    swapped = JointFunctional([states[1], states[0]], kind)
    failures = []
    words = _seed_words(signatures, max_word_len) + [
        gen_random_word(signatures, max_word_len, rng) for _ in range(8)
    ]
    for word in words:
        lhs = joint.evaluate(word)
        rhs = swapped.evaluate(_swap_factors(word))
        if lhs != rhs:
            failures.append(AxiomFailure(_word_inputs(states, word), lhs, rhs))
    return failures


def _trial_mirror(kind, rng, max_word_len):
    other = (
        ProductKind.ANTI_MONOTONE
        if kind is ProductKind.MONOTONE
        else ProductKind.MONOTONE
    )
    signatures = _signatures(2, False)
    states = [gen_random_state(sig, max_word_len, rng) for sig in signatures]
    joint = JointFunctional(states, kind)
    mirrored = JointFunctional([states[1], states[0]], other)
    failures = []
    words = _seed_words(signatures, max_word_len) + [
        gen_random_word(signatures, max_word_len, rng) for _ in range(8)
    ]
    for word in words:
        lhs = joint.evaluate(word)
        rhs = mirrored.evaluate(_swap_factors(word))
        if lhs != rhs:
            failures.append(AxiomFailure(_word_inputs(states, word), lhs, rhs))
    return failures


_TRIAL_RUNNERS = {
    Axiom.ASSOCIATIVITY: _trial_associativity,
    Axiom.UNIT_LAW: _trial_unit_law,
    Axiom.INCLUSION: _trial_inclusion,
    Axiom.FUNCTORIALITY: _trial_functoriality,
    Axiom.FACTORIZATION: _trial_factorization,
    Axiom.SYMMETRY: _trial_symmetry,
    Axiom.MIRROR: _trial_mirror,
}
