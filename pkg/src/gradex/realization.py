"""
Realization of the extension algebra inside A^(x)N.

r(x^a_i) puts theta^a in tensor slot i and 1 elsewhere; products in A^(x)N
are taken slot by slot with no sign between slots.  The extension is an
algebra of reality when r respects every commutation relation and is
injective; otherwise some quasiparticle products must be sent to zero (the
generalized Pauli exclusion principle).
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import reduce

from .algebra import (
    AlgebraSpec,
    BaseAlgebraSpec,
    BaseMonomial,
    ExtensionAlgebra,
    Letter,
    Monomial,
    Word,
    base_multiply,
    format_base_monomial,
    format_word,
)
from .bicharacter import eval_factor, from_flux
from .kernel import GroupElement, QSpec, Scalar, StructureError, group_compose


@dataclass(frozen=True)
class TensorWord:
    coeff: Scalar
    slots: tuple[BaseMonomial, ...]

    def __post_init__(self):
        if self.coeff.is_zero():
            object.__setattr__(self, "slots", tuple(() for _ in self.slots))

    @classmethod
    def identity(cls, rank: int, qspec: QSpec) -> TensorWord:
        return cls(Scalar.one(qspec), ((),) * rank)

    @classmethod
    def zero(cls, rank: int, qspec: QSpec) -> TensorWord:
        return cls(Scalar.zero(qspec), ((),) * rank)

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def scale(self, c: Scalar) -> TensorWord:
        return TensorWord(self.coeff * c, self.slots)

    def format(self, single: bool = True) -> str:
        if self.is_zero():
            return "0"
        body = "(" + ", ".join(format_base_monomial(m, single) for m in self.slots) + ")"
        if self.coeff == 1:
            return body
        if self.coeff == -1:
            return "-" + body
        return f"{self.coeff} * {body}"

    def __str__(self):
        return self.format()


def r_generator(spec: AlgebraSpec, a: int, i: int) -> TensorWord:
    spec.check_letter(Letter(i, a))
    return TensorWord(Scalar.one(spec.qspec), tuple((a,) if k == i else () for k in range(1, spec.rank + 1)))


def tensor_multiply(base: BaseAlgebraSpec, u: TensorWord, v: TensorWord) -> TensorWord:
    if len(u.slots) != len(v.slots):
        raise StructureError("tensor words of different length")
    if u.is_zero() or v.is_zero():
        return TensorWord(u.coeff * v.coeff, u.slots)
    sign, slots = 1, []
    for left, right in zip(u.slots, v.slots):
        prod = base_multiply(base, left, right)
        if prod is None:
            return TensorWord(u.coeff * 0, u.slots)
        sign *= prod[0]
        slots.append(prod[1])
    c = u.coeff * v.coeff
    return TensorWord(c if sign > 0 else -c, tuple(slots))


def r_image(spec: AlgebraSpec, m: Monomial | Word) -> TensorWord:
    if isinstance(m, Monomial):
        coeff, word = m.coeff, m.word
    else:
        coeff, word = Scalar.one(spec.qspec), tuple(m)
    out = reduce(lambda acc, l: tensor_multiply(spec.base, acc, r_generator(spec, l.base, l.slot)),
                 word, TensorWord.identity(spec.rank, spec.qspec))
    return out.scale(coeff)


def tensor_degree(spec: AlgebraSpec, t: TensorWord) -> GroupElement:
    """Slot-occupancy degree: slot i counts as xi^i once per theta it holds."""
    cf = spec.cf
    return reduce(group_compose, (cf.generator(i) for i, mono in enumerate(t.slots, 1) for _ in mono), cf.identity())


@dataclass
class ClassificationReport:
    verdict: str
    pauli_pairs: frozenset
    pair_factors: dict
    injective: bool
    lost_words: list = field(default_factory=list)
    flux_label: str | None = None
    single_base: bool = True

    def slot_pairs(self) -> set[tuple[int, int]]:
        return {(a.slot, b.slot) for a, b in self.pauli_pairs}

    def pairs_for_output(self) -> list:
        pairs = sorted(self.pauli_pairs)
        if self.single_base:
            return [[a.slot, b.slot] for a, b in pairs]
        return [[[a.slot, a.base], [b.slot, b.base]] for a, b in pairs]

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "flux_label": self.flux_label,
            "pauli_pairs": self.pairs_for_output(),
            "injective": self.injective,
            "lost_words": list(self.lost_words),
            "pair_factors": {f"{i},{j}": str(c) for (i, j), c in sorted(self.pair_factors.items())},
        }


def relation_defects(spec: AlgebraSpec) -> list[tuple[Letter, Letter]]:
    """Letter pairs whose commutation relation r cannot respect.

    For l < l' in slots i, j this compares r(l) r(l') with b^ij r(l') r(l)
    inside A^(x)N; a mismatch forces the product l l' to zero.
    """
    out = []
    for l1, l2 in itertools.combinations(spec.letters(), 2):
        lhs = tensor_multiply(spec.base, r_generator(spec, l1.base, l1.slot), r_generator(spec, l2.base, l2.slot))
        rhs = tensor_multiply(spec.base, r_generator(spec, l2.base, l2.slot), r_generator(spec, l1.base, l1.slot))
        rhs = rhs.scale(eval_factor(spec.cf, spec.cf.generator(l1.slot), spec.cf.generator(l2.slot)))
        if lhs != rhs:
            out.append((l1, l2))
    return out


def injectivity_defects(spec: AlgebraSpec) -> list[Word]:
    """Canonical words of the commutation-only algebra that r kills or identifies.

    Only the commutation relations are imposed here, so a letter with
    self-factor +1 keeps its square even over a Grassmann base; powers are
    enumerated up to the base nilpotency order, which is where r first
    vanishes.
    """
    stats = ExtensionAlgebra(spec, base_relations=False)
    seen: dict = {}
    lost = []
    for word in stats.canonical_words(max_power=spec.base.nilpotency):
        img = r_image(spec, word)
        if img.is_zero():
            lost.append(word)
            continue
        key = img.slots
        if key in seen:
            lost.append(word)
        else:
            seen[key] = word
    return _minimal(lost)


def _minimal(words: list[Word]) -> list[Word]:
    """Drop words that contain a shorter lost word as a sub-multiset."""
    counts = [Counter(w) for w in words]
    keep = []
    for w, cw in zip(words, counts):
        if not any(len(v) < len(w) and not (cv - cw) for v, cv in zip(words, counts)):
            keep.append(w)
    return keep


def consistency_check(spec: AlgebraSpec) -> ClassificationReport:
    pauli = frozenset(relation_defects(spec))
    lost = injectivity_defects(spec)
    factors = {}
    for i in range(1, spec.rank + 1):
        for j in range(i, spec.rank + 1):
            factors[(i, j)] = eval_factor(spec.cf, spec.cf.generator(i), spec.cf.generator(j))
    verdict = "reality" if not pauli and not lost else "degenerate"
    return ClassificationReport(
        verdict=verdict,
        pauli_pairs=pauli,
        pair_factors=factors,
        injective=not lost,
        lost_words=[format_word(spec, w) for w in lost],
        single_base=spec.base.generators == 1,
    )


def flux_spec(n_flux: int) -> AlgebraSpec:
    return AlgebraSpec(from_flux(n_flux), BaseAlgebraSpec(1, 2))


def classify_flux(n_flux: int) -> ClassificationReport:
    if n_flux < 1:
        raise ValueError("number of fluxes must be >= 1")
    report = consistency_check(flux_spec(n_flux))
    report.flux_label = "composite_fermion" if report.verdict == "reality" else "composite_boson"
    return report
