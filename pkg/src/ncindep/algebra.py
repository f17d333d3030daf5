"""Free algebras, free-product words, and substitution homomorphisms.

The engine works inside the free product of finitely many free algebras.
A :class:`Word` is kept in alternating-block normal form: each block is a
nonempty monomial in one factor's generators, and neighbouring blocks come
from different factors.  Two regimes exist and are never mixed inside one
word:

* unital - the factors share a single identified unit, represented by the
  empty word; a unit is never stored inside a block.
* non-unital - there is no unit at all, and empty monomials are illegal.

Generators carry a Z2 degree so that the same machinery serves graded
(fermionic) algebras; an ungraded algebra simply has every degree 0.  All
values are immutable and all operations are pure functions, so they can be
shared freely between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import RegimeMismatch
from .rational import ONE, Rational, ZERO, as_rational


@dataclass(frozen=True)
class AlgebraSignature:
    """A named free algebra: an ordered tuple of generators with Z2 degrees.

    ``generators`` is a tuple of ``(name, degree)`` pairs with degree 0 or 1.
    Signatures compare by value, so two algebras with the same name but a
    different unital flag or generator list are distinct.
    """

    name: str
    unital: bool
    generators: tuple[tuple[str, int], ...]

    def __post_init__(self):
        gens = tuple((str(n), int(d)) for n, d in self.generators)
        object.__setattr__(self, "generators", gens)
        names = [n for n, _ in gens]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names in algebra %r" % self.name)
        for n, d in gens:
            if d not in (0, 1):
                raise ValueError("generator %r has degree %r, expected 0 or 1" % (n, d))
            if not n or not n[0].isalpha() and n[0] != "_":
                raise ValueError("generator name %r is not an identifier" % n)
        object.__setattr__(self, "_degree_map", dict(gens))
        object.__setattr__(self, "_graded", any(d == 1 for _, d in gens))
        object.__setattr__(self, "_hash", hash((self.name, self.unital, gens)))

    def __hash__(self):
        return self._hash

    @classmethod
    def make(cls, name: str, generators, *, unital: bool = True) -> "AlgebraSignature":
        """Convenience constructor.

        ``generators`` may be a whitespace-separated string of names (all
        degree 0), or an iterable whose items are names or ``(name, degree)``
        pairs.
        """
        if isinstance(generators, str):
            items: Iterable = generators.split()
        else:
            items = generators
        gens = []
        for item in items:
            if isinstance(item, str):
                gens.append((item, 0))
            else:
                gens.append((item[0], item[1]))
        return cls(name, unital, tuple(gens))

    @property
    def generator_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.generators)

    @property
    def graded(self) -> bool:
        """True when at least one generator is odd."""
        return self._graded

    def degree_of(self, generator: str) -> int:
        try:
            return self._degree_map[generator]
        except KeyError:
            raise ValueError(
                "unknown generator %r of algebra %r" % (generator, self.name)
            ) from None


@dataclass(frozen=True)
class Monomial:
    """A product of generators of one free algebra.

    The empty monomial denotes the unit and is only allowed over a unital
    algebra.  Monomials multiply by concatenation; there are no relations.
    """

    algebra: AlgebraSignature
    letters: tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        degree_map = self.algebra._degree_map
        degree = 0
        if self.algebra._graded:
            for letter in letters:
                try:
                    degree += degree_map[letter]
                except KeyError:
                    self.algebra.degree_of(letter)  # raises with a clear message
        else:
            for letter in letters:
                if letter not in degree_map:
                    self.algebra.degree_of(letter)
        if not letters and not self.algebra.unital:
            raise RegimeMismatch(
                "empty monomial is illegal over the non-unital algebra %r"
                % self.algebra.name
            )
        object.__setattr__(self, "_degree", degree & 1)
        object.__setattr__(self, "_hash", hash((self.algebra, letters)))

    def __hash__(self):
        return self._hash

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_unit(self) -> bool:
        return not self.letters

    @property
    def degree(self) -> int:
        """Total Z2 degree (sum of the letters' degrees mod 2)."""
        return self._degree

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.algebra != other.algebra:
            raise ValueError("cannot multiply monomials of different algebras")
        return Monomial(self.algebra, self.letters + other.letters)

    def __repr__(self):
        body = " ".join(self.letters) if self.letters else "1"
        return "%s[%s]" % (self.algebra.name, body)


@dataclass(frozen=True)
class Word:
    """An element of a free product, in alternating-block normal form.

    ``blocks`` is a tuple of ``(factor, monomial)`` pairs where ``factor``
    indexes a factor list supplied by whoever evaluates the word.  The
    normal form is validated at construction: no block holds an empty
    monomial and neighbouring blocks come from different factors.  The
    empty tuple is the identified unit of the unital regime.  Use
    :func:`normalize_word` to build words from raw block sequences.
    """

    blocks: tuple[tuple[int, Monomial], ...]

    def __post_init__(self):
        blocks = tuple((int(f), m) for f, m in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        previous = None
        for factor, monomial in blocks:
            if factor < 0:
                raise ValueError("negative factor index %d" % factor)
            if monomial.is_unit:
                raise ValueError("normal-form words may not contain unit blocks")
            if factor == previous:
                raise ValueError("adjacent blocks share factor %d" % factor)
            previous = factor
        object.__setattr__(self, "_hash", hash(blocks))

    def __hash__(self):
        return self._hash

    @property
    def is_empty(self) -> bool:
        return not self.blocks

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def num_letters(self) -> int:
        return sum(len(m) for _, m in self.blocks)

    def factors_used(self) -> frozenset:
        return frozenset(f for f, _ in self.blocks)

    def __repr__(self):
        if not self.blocks:
            return "Word(1)"
        parts = ["%d:%s" % (f, " ".join(m.letters)) for f, m in self.blocks]
        return "Word(%s)" % " | ".join(parts)


EMPTY_WORD = Word(())


def normalize_word(blocks: Iterable[tuple[int, Monomial]]) -> Word:
    """Normalize a raw sequence of ``(factor, monomial)`` pairs.

    Unit monomials are dropped (they only exist in the unital regime, where
    all factors share one unit) and adjacent blocks with the same factor
    index are merged by concatenating their monomials.  The result is a
    valid :class:`Word`; normalizing twice is the identity.
    """
    out: list[tuple[int, Monomial]] = []
    for factor, monomial in blocks:
        factor = int(factor)
        if monomial.is_unit:
            continue
        if out and out[-1][0] == factor:
            previous = out[-1][1]
            if previous.algebra != monomial.algebra:
                raise ValueError(
                    "factor %d is used for two different algebras (%r and %r)"
                    % (factor, previous.algebra.name, monomial.algebra.name)
                )
            out[-1] = (factor, Monomial(previous.algebra, previous.letters + monomial.letters))
        else:
            out.append((factor, monomial))
    return Word(tuple(out))


def concat_words(first: Word, second: Word) -> Word:
    """The product of two free-product elements, re-normalized."""
    return normalize_word(first.blocks + second.blocks)


def word_degree(word: Word) -> int:
    """Total Z2 degree of a word (0 for anything over ungraded factors)."""
    degree = 0
    for _, monomial in word.blocks:
        degree ^= monomial.degree
    return degree


def single_block_word(factor: int, monomial: Monomial) -> Word:
    """The word consisting of one block, or the empty word for a unit."""
    if monomial.is_unit:
        return EMPTY_WORD
    return Word(((factor, monomial),))


class Polynomial:
    """A finite rational linear combination of normal-form words.

    Terms with coefficient zero are dropped eagerly, so two polynomials are
    equal exactly when their term dictionaries are equal.  Instances are
    treated as immutable; none of the arithmetic methods mutate.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc: dict[Word, Rational] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for word, coeff in items:
            coeff = as_rational(coeff)
            if not coeff:
                continue
            if word in acc:
                total = acc[word] + coeff
                if total:
                    acc[word] = total
                else:
                    del acc[word]
            else:
                acc[word] = coeff
        self._terms = acc

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def from_word(cls, word: Word, coeff=ONE) -> "Polynomial":
        return cls(((word, coeff),))

    @classmethod
    def from_monomial(cls, monomial: Monomial, factor: int = 0, coeff=ONE) -> "Polynomial":
        return cls.from_word(single_block_word(factor, monomial), coeff)

    @property
    def terms(self) -> Mapping[Word, Rational]:
        """Word-to-coefficient mapping; do not mutate."""
        return self._terms

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # mutating dicts inside; value-hashing is never needed

    def __add__(self, other: "Polynomial") -> "Polynomial":
        acc = dict(self._terms)
        for word, coeff in other._terms.items():
            total = acc.get(word, ZERO) + coeff
            if total:
                acc[word] = total
            else:
                acc.pop(word, None)
        result = Polynomial.__new__(Polynomial)
        result._terms = acc
        return result

    def __neg__(self) -> "Polynomial":
        return self.scaled(-ONE)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scaled(-ONE)

    def scaled(self, coeff) -> "Polynomial":
        coeff = as_rational(coeff)
        result = Polynomial.__new__(Polynomial)
        if not coeff:
            result._terms = {}
        else:
            result._terms = {w: c * coeff for w, c in self._terms.items()}
        return result

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scaled(other)
        acc: dict[Word, Rational] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                word = normalize_word(w1.blocks + w2.blocks)
                total = acc.get(word, ZERO) + c1 * c2
                if total:
                    acc[word] = total
                else:
                    acc.pop(word, None)
        result = Polynomial.__new__(Polynomial)
        result._terms = acc
        return result

    def __rmul__(self, coeff):
        return self.scaled(coeff)

    def __repr__(self):
        if not self._terms:
            return "Polynomial(0)"
        parts = ["%s * %r" % (c, w) for w, c in sorted(
            self._terms.items(), key=lambda item: (item[0].num_letters, item[0].blocks))]
        return "Polynomial(%s)" % " + ".join(parts)


@dataclass(frozen=True, eq=False)
class Homomorphism:
    """A substitution homomorphism between free algebras.

    A homomorphism of free algebras is determined freely by the images of
    the generators.  Each image is a single-factor :class:`Polynomial` over
    the target (blocks tagged with factor 0; a unit term is allowed only in
    the unital regime).  Source and target must live in the same regime,
    and every image must be homogeneous of its generator's degree - for
    ungraded algebras that condition is vacuous.
    """

    source: AlgebraSignature
    target: AlgebraSignature
    images: Mapping[str, Polynomial]

    def __post_init__(self):
        if self.source.unital != self.target.unital:
            raise RegimeMismatch(
                "homomorphism crosses regimes: source unital=%r, target unital=%r"
                % (self.source.unital, self.target.unital)
            )
        images = dict(self.images)
        missing = set(self.source.generator_names) - set(images)
        if missing:
            raise ValueError("missing images for generators: %s" % sorted(missing))
        extra = set(images) - set(self.source.generator_names)
        if extra:
            raise ValueError("images given for unknown generators: %s" % sorted(extra))
        for name in self.source.generator_names:
            degree = self.source.degree_of(name)
            for word in images[name].terms:
                if word.num_blocks > 1:
                    raise ValueError(
                        "image of %r is not a single-factor polynomial" % name
                    )
                for factor, monomial in word.blocks:
                    if factor != 0 or monomial.algebra != self.target:
                        raise ValueError(
                            "image of %r must consist of factor-0 blocks over the target"
                            % name
                        )
                if word_degree(word) != degree:
                    raise ValueError(
                        "image of %r is not homogeneous of degree %d" % (name, degree)
                    )
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_monomial_cache", {})

    @classmethod
    def identity(cls, signature: AlgebraSignature) -> "Homomorphism":
        images = {
            name: Polynomial.from_monomial(Monomial(signature, (name,)))
            for name in signature.generator_names
        }
        return cls(signature, signature, images)

    def apply_monomial(self, monomial: Monomial) -> Polynomial:
        """Image of a source monomial: the product of its letters' images."""
        if monomial.algebra != self.source:
            raise ValueError("monomial does not belong to the source algebra")
        cache = self._monomial_cache
        hit = cache.get(monomial.letters)
        if hit is not None:
            return hit
        if monomial.is_unit:
            result = Polynomial.from_word(EMPTY_WORD)
        else:
            result = self.images[monomial.letters[0]]
            for letter in monomial.letters[1:]:
                result = result * self.images[letter]
        cache[monomial.letters] = result
        return result

    def apply_polynomial(self, polynomial: Polynomial) -> Polynomial:
        """Image of a single-factor polynomial over the source."""
        total = Polynomial.zero()
        for word, coeff in polynomial.items():
            if word.is_empty:
                total = total + Polynomial.from_word(EMPTY_WORD, coeff)
                continue
            if word.num_blocks != 1:
                raise ValueError("polynomial is not single-factor")
            _, monomial = word.blocks[0]
            total = total + self.apply_monomial(monomial).scaled(coeff)
        return total


def _retag(polynomial: Polynomial, factor: int) -> Polynomial:
    """Move a single-factor polynomial onto the given free-product factor."""
    acc = []
    for word, coeff in polynomial.items():
        if word.is_empty:
            acc.append((EMPTY_WORD, coeff))
        else:
            _, monomial = word.blocks[0]
            acc.append((Word(((factor, monomial),)), coeff))
    result = Polynomial(acc)
    return result


def apply_homomorphism(homomorphisms: Sequence[Homomorphism], word: Word) -> Polynomial:
    """Apply the free product of ``homomorphisms`` to a word.

    Block ``(k, m)`` is replaced by the image of ``m`` under the k-th
    homomorphism, re-tagged onto factor ``k`` of the free product of the
    targets; the block images are then multiplied in order, expanding by
    bilinearity and re-normalizing every resulting word.
    """
    result = Polynomial.from_word(EMPTY_WORD)
    for factor, monomial in word.blocks:
        try:
            hom = homomorphisms[factor]
        except IndexError:
            raise ValueError("word uses factor %d, but only %d homomorphisms given"
                             % (factor, len(homomorphisms))) from None
        result = result * _retag(hom.apply_monomial(monomial), factor)
    return result


def all_monomials(algebra: AlgebraSignature, max_degree: int) -> Iterator[Monomial]:
    """All monomials of length at most ``max_degree``, in canonical order.

    Canonical order is by length, then lexicographically in generator
    position.  Over a unital algebra the unit comes first; over a
    non-unital one enumeration starts at length 1.
    """
    names = algebra.generator_names
    start = 0 if algebra.unital else 1
    for length in range(start, max_degree + 1):
        if length == 0:
            yield Monomial(algebra, ())
            continue
        for letters in itertools.product(names, repeat=length):
            yield Monomial(algebra, letters)
