"""
The quantum-commutative extension algebra and its normal forms.

Generators are letters x^a_i = theta^a (x) xi^i, one for each grading slot i
and base index a.  Two letters commute up to the commutation factor,

    x^a_i x^b_j = b(xi^i, xi^j) x^b_j x^a_i,

so every word can be bubble-sorted into ascending (slot, base) order while
collecting a scalar.  Runs of one letter are then cut by the base nilpotency
theta^k = 0, and any square whose self-factor b(xi^i, xi^i) is -1 vanishes.
Because b(g, h) b(h, g) = 1 the result does not depend on the order in which
swaps are performed.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Hashable, Iterable, Iterator, NamedTuple

from .bicharacter import CommutationFactor, eval_factor
from .kernel import GroupElement, QSpec, Scalar, StructureError, group_compose
from .report import Report, collect


class Letter(NamedTuple):
    slot: int
    base: int = 1


Word = tuple[Letter, ...]


@dataclass(frozen=True)
class BaseAlgebraSpec:
    """Nilpotent base algebra A generated by theta^1..theta^m.

    With nilpotency 2 this is the exterior (Grassmann) algebra.  Distinct
    generators always anticommute; each generator satisfies theta^k = 0.
    """

    generators: int = 1
    nilpotency: int = 2

    def __post_init__(self):
        if self.generators < 1:
            raise StructureError("base algebra needs at least one generator")
        if self.nilpotency < 2:
            raise StructureError("nilpotency order must be >= 2")

    @property
    def kind(self) -> str:
        return "grassmann" if self.nilpotency == 2 else "nilpotent"


@dataclass(frozen=True)
class AlgebraSpec:
    cf: CommutationFactor
    base: BaseAlgebraSpec = field(default_factory=BaseAlgebraSpec)

    @property
    def rank(self) -> int:
        return self.cf.rank

    @property
    def modulus(self) -> int:
        return self.cf.modulus

    @property
    def qspec(self) -> QSpec:
        return self.cf.qspec

    def letters(self) -> list[Letter]:
        return [Letter(i, a) for i in range(1, self.rank + 1) for a in range(1, self.base.generators + 1)]

    def check_letter(self, letter: Letter):
        if not (1 <= letter.slot <= self.rank and 1 <= letter.base <= self.base.generators):
            raise IndexError(f"letter x{letter.base}_{letter.slot} outside {self.base.generators} base x {self.rank} slots")


# ---------------------------------------------------------------------------
# base algebra

BaseMonomial = tuple[int, ...]


def base_multiply(base: BaseAlgebraSpec, left: BaseMonomial, right: BaseMonomial) -> tuple[int, BaseMonomial] | None:
    """Product of two sorted base monomials as ``(sign, monomial)``; None if zero."""
    inversions = sum(1 for a in left for b in right if a > b)
    merged = tuple(sorted(left + right))
    for _, run in itertools.groupby(merged):
        if len(tuple(run)) >= base.nilpotency:
            return None
    return (-1 if inversions % 2 else 1), merged


def base_monomials(base: BaseAlgebraSpec) -> list[BaseMonomial]:
    """Monomial basis of A, ordered by length then lexicographically."""
    ranges = [range(base.nilpotency)] * base.generators
    out = []
    for powers in itertools.product(*ranges):
        out.append(tuple(a for a, p in enumerate(powers, start=1) for _ in range(p)))
    return sorted(out, key=lambda m: (len(m), m))


def format_base_monomial(mono: BaseMonomial, single: bool) -> str:
    if not mono:
        return "1"
    parts = []
    for a, run in itertools.groupby(mono):
        p = len(tuple(run))
        name = "theta" if single else f"theta{a}"
        parts.append(name if p == 1 else f"{name}^{p}")
    return "*".join(parts)


# ---------------------------------------------------------------------------
# linear combinations


class Element:
    """Finite linear combination of basis keys with Scalar coefficients.

    Keys are words for the generated algebra and ``(base monomial, degree)``
    pairs for the full extension A (x) kG.  Zero coefficients are dropped, so
    equality is structural.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Hashable, Scalar] | Iterable[tuple[Hashable, Scalar]] = ()):
        acc: dict[Hashable, Scalar] = {}
        for k, c in (terms.items() if isinstance(terms, dict) else terms):
            acc[k] = acc[k] + c if k in acc else c
        self.terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def basis(cls, key: Hashable, qspec: QSpec) -> Element:
        return cls({key: Scalar.one(qspec)})

    def __iter__(self) -> Iterator[tuple[Hashable, Scalar]]:
        return iter(sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0])))

    def keys(self):
        return self.terms.keys()

    def coeff(self, key: Hashable) -> Scalar | None:
        return self.terms.get(key)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: Element) -> Element:
        return Element(itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self):
        return Element({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def scale(self, c: Scalar) -> Element:
        return Element({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, Scalar):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return "Element(" + ", ".join(f"{k}: {c}" for k, c in self) + ")"

    def monomials(self) -> list[Monomial]:
        return [Monomial(c, k) for k, c in self]


def _sort_key(key):
    if isinstance(key, tuple) and len(key) == 2 and isinstance(key[1], GroupElement):
        return (1, key[1].exps, len(key[0]), key[0])
    return (0, len(key), key)


@dataclass(frozen=True)
class Monomial:
    coeff: Scalar
    word: Word = ()


# ---------------------------------------------------------------------------
# the generated algebra


class ExtensionAlgebra:
    """Algebra generated by the letters x^a_i subject to b-commutation.

    ``excluded`` lists letter pairs whose joint occurrence is sent to zero
    (the quotient by a monomial ideal).  With ``base_relations=False`` only
    the commutation relations are imposed: powers of a letter with
    self-factor +1 survive, and enumeration is capped by ``max_power``.
    """

    def __init__(self, spec: AlgebraSpec, excluded: Iterable[tuple[Letter, Letter]] = (), base_relations: bool = True):
        self.spec = spec
        self.excluded = frozenset(tuple(sorted(p)) for p in excluded)
        self.base_relations = base_relations
        self._one = Scalar.one(spec.qspec)

    @property
    def qspec(self) -> QSpec:
        return self.spec.qspec

    @cached_property
    def factors(self) -> list[list[Scalar]]:
        # 1-based slot lookup
        mat = self.spec.cf.matrix()
        return [[None] * (self.spec.rank + 1)] + [[None] + row for row in mat]

    def self_factor(self, slot: int) -> Scalar:
        return self.factors[slot][slot]

    def max_power(self, letter: Letter, cap: int | None = None) -> int | None:
        """Largest surviving power of a letter (None if unbounded)."""
        if self.self_factor(letter.slot) == -1:
            return 1
        if self.base_relations:
            return self.spec.base.nilpotency - 1
        return cap

    # basis

    def one(self) -> Element:
        return Element({(): self._one})

    def gen(self, slot: int, base: int = 1) -> Element:
        letter = Letter(slot, base)
        self.spec.check_letter(letter)
        return Element({(letter,): self._one})

    def key_degree(self, word: Word) -> GroupElement:
        cf = self.spec.cf
        return reduce(group_compose, (cf.generator(l.slot) for l in word), cf.identity())

    def is_excluded(self, word: Word) -> bool:
        if not self.excluded:
            return False
        present = set(word)
        for a, b in self.excluded:
            if a == b:
                if word.count(a) >= 2:
                    return True
            elif a in present and b in present:
                return True
        return False

    def canonical_words(self, max_len: int | None = None, max_power: int | None = None) -> list[Word]:
        """All surviving canonical words, optionally bounded in length."""
        letters = self.spec.letters()
        caps = []
        for l in letters:
            cap = self.max_power(l, max_power)
            if cap is None:
                if max_len is None:
                    raise ValueError("unbounded powers need max_len or max_power")
                cap = max_len
            caps.append(cap)
        out = []
        for powers in itertools.product(*(range(c + 1) for c in caps)):
            if max_len is not None and sum(powers) > max_len:
                continue
            word = tuple(l for l, p in zip(letters, powers) for _ in range(p))
            if not self.is_excluded(word):
                out.append(word)
        return sorted(out, key=lambda w: (len(w), w))

    def basis_of_degree(self, g: GroupElement) -> list[Word]:
        return [w for w in self.canonical_words() if self.key_degree(w) == g]

    # rewriting

    def normal_form(self, word: Iterable, coeff: Scalar | None = None) -> Element:
        word = [Letter(*l) for l in word]
        for l in word:
            self.spec.check_letter(l)
        c = self._one if coeff is None else coeff
        if c.qspec != self.qspec:
            raise StructureError("coefficient ring does not match the algebra")
        n = len(word)
        # bubble sort: each swap of (i,a) > (j,b) picks up b(xi^i, xi^j)
        for end in range(n - 1, 0, -1):
            for j in range(end):
                left, right = word[j], word[j + 1]
                if left > right:
                    c = c * self.factors[left.slot][right.slot]
                    word[j], word[j + 1] = right, left
        word = tuple(word)
        for letter, run in itertools.groupby(word):
            cap = self.max_power(letter)
            if cap is not None and len(tuple(run)) > cap:
                return Element()
        if self.is_excluded(word):
            return Element()
        return Element({word: c})

    def multiply(self, u: Element, v: Element) -> Element:
        out = Element()
        for wu, cu in u.terms.items():
            for wv, cv in v.terms.items():
                out = out + self.normal_form(wu + wv, cu * cv)
        return out

    def homogeneous_parts(self, e: Element) -> dict[GroupElement, Element]:
        parts: dict[GroupElement, dict] = {}
        for k, c in e.terms.items():
            parts.setdefault(self.key_degree(k), {})[k] = c
        return {g: Element(t) for g, t in parts.items()}

    def format_key(self, word: Word) -> str:
        return format_word(self.spec, word)


_ALGEBRAS: dict = {}


def algebra_for(spec: AlgebraSpec) -> ExtensionAlgebra:
    alg = _ALGEBRAS.get(spec)
    if alg is None:
        alg = _ALGEBRAS[spec] = ExtensionAlgebra(spec)
    return alg


def normal_form(spec: AlgebraSpec, raw_word: Iterable, coeff: Scalar | None = None) -> Element:
    return algebra_for(spec).normal_form(raw_word, coeff)


def multiply(spec: AlgebraSpec, u: Element, v: Element) -> Element:
    return algebra_for(spec).multiply(u, v)


def degree(spec: AlgebraSpec, m: Monomial | Word) -> GroupElement:
    word = m.word if isinstance(m, Monomial) else m
    return algebra_for(spec).key_degree(word)


def quantum_commutativity_check(spec: AlgebraSpec, max_len: int = 2) -> Report:
    """u v = b(|u|, |v|) v u for every pair of canonical basis monomials."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    alg = algebra_for(spec)
    basis = alg.canonical_words(max_len)
    bad, count = [], 0
    for wu in basis:
        u = Element.basis(wu, spec.qspec)
        for wv in basis:
            v = Element.basis(wv, spec.qspec)
            lhs = alg.multiply(u, v)
            rhs = alg.multiply(v, u).scale(eval_factor(spec.cf, alg.key_degree(wu), alg.key_degree(wv)))
            if lhs != rhs:
                bad.append(f"{format_word(spec, wu)} . {format_word(spec, wv)}: "
                           f"{format_element(spec, lhs)} != {format_element(spec, rhs)}")
            count += 1
    report = Report("quantum commutativity")
    report.checks.append(collect("u v = b(|u|,|v|) v u", bad, count, note=f"basis words up to length {max_len}"))
    return report


# ---------------------------------------------------------------------------
# text syntax:  terms joined by + or -, factors joined by *,
# factors are integers, fractions, q, q^k, letters x<i> or x<a>_<i>, or 1

_LETTER = re.compile(r"x(\d+)(?:_(\d+))?$")
_QPOW = re.compile(r"q(?:\^\(?(-?\d+)\)?)?$")
_RATIONAL = re.compile(r"\d+(?:/\d+)?$")


class ParseError(ValueError):
    pass


def parse_letter(spec: AlgebraSpec, token: str) -> Letter:
    m = _LETTER.match(token)
    if not m:
        raise ParseError(f"bad letter {token!r}")
    if m.group(2) is None:
        if spec.base.generators != 1:
            raise ParseError(f"letter {token!r} is ambiguous with {spec.base.generators} base generators; write x<a>_<i>")
        letter = Letter(int(m.group(1)), 1)
    else:
        letter = Letter(int(m.group(2)), int(m.group(1)))
    try:
        spec.check_letter(letter)
    except IndexError as exc:
        raise ParseError(str(exc)) from None
    return letter


def parse_term(spec: AlgebraSpec, text: str) -> tuple[Scalar, Word]:
    text = text.strip()
    sign = 1
    while text and text[0] in "+-":
        sign = -sign if text[0] == "-" else sign
        text = text[1:]
    if not text:
        raise ParseError("empty term")
    coeff = Scalar.const(sign, spec.qspec)
    word: list[Letter] = []
    for tok in text.split("*"):
        if not tok:
            raise ParseError(f"empty factor in {text!r}")
        if _RATIONAL.match(tok):
            coeff = coeff * Fraction(tok)
        elif _QPOW.match(tok):
            k = _QPOW.match(tok).group(1)
            coeff = coeff * Scalar.q(spec.qspec, int(k) if k is not None else 1)
        else:
            word.append(parse_letter(spec, tok))
    return coeff, tuple(word)


def split_terms(text: str) -> list[str]:
    text = re.sub(r"\s+", "", text)
    if not text:
        raise ParseError("empty expression")
    parts = re.split(r"(?<=[^\^(+\-])(?=[+-])", text)
    return [p for p in parts if p]


def parse_raw(spec: AlgebraSpec, text: str) -> list[tuple[Scalar, Word]]:
    """Terms exactly as written, before any rewriting."""
    return [parse_term(spec, t) for t in split_terms(text)]


def parse_element(spec: AlgebraSpec, text: str) -> Element:
    alg = algebra_for(spec)
    out = Element()
    for coeff, word in parse_raw(spec, text):
        out = out + alg.normal_form(word, coeff)
    return out


def format_word(spec: AlgebraSpec, word: Word) -> str:
    if not word:
        return "1"
    if spec.base.generators == 1:
        return "*".join(f"x{l.slot}" for l in word)
    return "*".join(f"x{l.base}_{l.slot}" for l in word)


def format_coeff(c: Scalar) -> str:
    s = str(c)
    return f"({s})" if len(c.terms) > 1 else s


def format_element(spec: AlgebraSpec, e: Element) -> str:
    if not e:
        return "0"
    return " + ".join(f"{format_coeff(c)} * {format_word(spec, w)}" for w, c in e)
