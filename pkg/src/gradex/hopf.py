"""
The group Hopf algebra kG and the Hopf-module structure of A (x) kG.

For a group-like g:  Delta(g) = g (x) g,  eps(g) = 1,  S(g) = g^-1.
A right kG-Hopf module is the same thing as a G-graded space: the coaction
sends a homogeneous vector v of degree g to v (x) g, and the right action of h
shifts the degree, x^a_g <| h = x^a_{gh}.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable

from .algebra import (
    AlgebraSpec,
    BaseMonomial,
    Element,
    ExtensionAlgebra,
    algebra_for,
    base_monomials,
    base_multiply,
    format_base_monomial,
)
from .bicharacter import CommutationFactor, eval_factor
from .kernel import GroupElement, QSpec, Scalar, StructureError, group_compose, group_inverse
from .report import Report, collect


def coproduct(g: GroupElement) -> tuple[GroupElement, GroupElement]:
    return g, g


def counit(g: GroupElement, qspec: QSpec | None = None) -> Scalar:
    return Scalar.one(qspec)


def antipode(g: GroupElement) -> GroupElement:
    return group_inverse(g)


class GroupAlgebraElement:
    """Linear combination of group elements, sum_g c_g g."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[GroupElement, Scalar]):
        self.terms = {g: c for g, c in terms.items() if c}

    @classmethod
    def of(cls, g: GroupElement, qspec: QSpec | None = None) -> GroupAlgebraElement:
        return cls({g: Scalar.one(qspec)})

    def __mul__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        out: dict[GroupElement, Scalar] = {}
        for g, a in self.terms.items():
            for h, b in other.terms.items():
                gh = group_compose(g, h)
                out[gh] = out[gh] + a * b if gh in out else a * b
        return GroupAlgebraElement(out)

    def coproduct(self) -> dict[tuple[GroupElement, GroupElement], Scalar]:
        return {coproduct(g): c for g, c in self.terms.items()}

    def counit(self, qspec: QSpec | None = None) -> Scalar:
        total = Scalar.zero(qspec)
        for c in self.terms.values():
            total = c if not total else total + c
        return total

    def antipode(self) -> GroupAlgebraElement:
        return GroupAlgebraElement({antipode(g): c for g, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))


class CoactionResult:
    """An element of M (x) H^(x n), stored as group tuple -> M-component."""

    __slots__ = ("parts",)

    def __init__(self, parts: dict[tuple[GroupElement, ...], Element]):
        self.parts = {k: v for k, v in parts.items() if v}

    @property
    def pairs(self) -> list[tuple[Element, GroupElement]]:
        return [(e, gs[0]) for gs, e in sorted(self.parts.items(), key=lambda kv: [g.exps for g in kv[0]])]

    def __eq__(self, other):
        if isinstance(other, CoactionResult):
            return self.parts == other.parts
        if isinstance(other, list):
            return self.pairs == other
        return NotImplemented

    def __repr__(self):
        return "CoactionResult(" + ", ".join(f"{e!r} (x) {' (x) '.join(map(str, gs))}" for gs, e in self.parts.items()) + ")"


# ---------------------------------------------------------------------------
# the module A (x) kG with basis x^label_g = label (x) g


class FullExtension:
    """A (x) kG with the untwisted product (a (x) g)(a' (x) h) = a a' (x) gh.

    Keys are ``(base monomial, group element)``; the generator x^a_i of the
    quantum-commutative algebra corresponds to ``((a,), xi^i)``.
    """

    def __init__(self, spec: AlgebraSpec):
        self.spec = spec
        self.qspec = spec.qspec
        self._one = Scalar.one(spec.qspec)

    def one(self) -> Element:
        return Element({((), self.spec.cf.identity()): self._one})

    def vector(self, label: BaseMonomial, g: GroupElement, coeff: Scalar | None = None) -> Element:
        return Element({(tuple(label), g): coeff if coeff is not None else self._one})

    def key_degree(self, key) -> GroupElement:
        return key[1]

    def group(self) -> list[GroupElement]:
        return list(self.spec.cf.elements())

    def basis_of_degree(self, g: GroupElement) -> list:
        return [(m, g) for m in base_monomials(self.spec.base)]

    def multiply(self, u: Element, v: Element) -> Element:
        out: dict = {}
        for (lu, gu), cu in u.terms.items():
            for (lv, gv), cv in v.terms.items():
                prod = base_multiply(self.spec.base, lu, lv)
                if prod is None:
                    continue
                sign, label = prod
                key = (label, group_compose(gu, gv))
                c = cu * cv if sign > 0 else -(cu * cv)
                out[key] = out[key] + c if key in out else c
        return Element(out)

    def homogeneous_parts(self, e: Element) -> dict[GroupElement, Element]:
        parts: dict = {}
        for k, c in e.terms.items():
            parts.setdefault(k[1], {})[k] = c
        return {g: Element(t) for g, t in parts.items()}

    def format_key(self, key) -> str:
        label, g = key
        return f"{format_base_monomial(label, self.spec.base.generators == 1)}@{g}"


def module_basis(spec: AlgebraSpec, full: bool = False) -> list[Element]:
    """Basis vectors x^a_g of E (x) kG.

    ``full=False`` takes E = span{theta^a}; ``full=True`` takes E = A.
    """
    ext = FullExtension(spec)
    labels = base_monomials(spec.base) if full else [(a,) for a in range(1, spec.base.generators + 1)]
    return [ext.vector(lab, g) for g in spec.cf.elements() for lab in labels]


def _model(obj):
    if isinstance(obj, AlgebraSpec):
        return algebra_for(obj)
    return obj


def coaction(model, e: Element) -> CoactionResult:
    """delta(e): each homogeneous part e_g goes to e_g (x) g."""
    model = _model(model)
    parts = model.homogeneous_parts(e)
    if not e:
        return CoactionResult({})
    return CoactionResult({(g,): part for g, part in parts.items()})


def right_action(m: Element, h: GroupElement) -> Element:
    """x^a_g <| h = x^a_{gh} on basis vectors of E (x) kG, extended linearly."""
    out = {}
    for (label, g), c in m.terms.items():
        out[(label, group_compose(g, h))] = c
    return Element(out)


def left_action(cf: CommutationFactor, h: GroupElement, m: Element) -> Element:
    """h |> x_g = b(g, h) x_{gh}."""
    out = {}
    for (label, g), c in m.terms.items():
        out[(label, group_compose(g, h))] = c * eval_factor(cf, g, h)
    return Element(out)


def _graded_coaction(m: Element) -> dict[tuple, Scalar]:
    return {(k, k[1]): c for k, c in m.terms.items()}


def _tensor_add(acc: dict, key, c):
    acc[key] = acc[key] + c if key in acc else c


def hopf_module_check(
    spec: AlgebraSpec,
    basis: Iterable[Element] | None = None,
    action: Callable[[Element, GroupElement], Element] = right_action,
    coaction_map: Callable[[Element], dict[tuple, Scalar]] = _graded_coaction,
) -> Report:
    """delta(m <| h) = sum m_(0) <| h_(1) (x) m_(1) h_(2), for every basis m and every h in G.

    The default module is E (x) kG with E spanned by the base generators; a
    different module is supplied through ``basis``, ``action`` and
    ``coaction_map`` (the latter returns ``{(key, g): coeff}`` for M (x) H).
    """
    if spec.modulus == 0:
        raise StructureError("Hopf-module check needs a finite grading group; reduce Z^N modulo n")
    basis = module_basis(spec) if basis is None else list(basis)
    group = list(spec.cf.elements())
    bad, count = [], 0
    for m in basis:
        delta_m = coaction_map(m)
        for h in group:
            lhs = {k: c for k, c in coaction_map(action(m, h)).items() if c}
            rhs: dict = {}
            h1, h2 = coproduct(h)
            for (key, g), c in delta_m.items():
                shifted = action(Element({key: c}), h1)
                for k2, c2 in shifted.terms.items():
                    _tensor_add(rhs, (k2, group_compose(g, h2)), c2)
            rhs = {k: c for k, c in rhs.items() if c}
            if lhs != rhs:
                bad.append(f"m={m!r}, h={h}")
            count += 1
    report = Report("hopf module")
    report.checks.append(collect("delta is a right module map", bad, count, note=f"{len(basis)} basis vectors x {len(group)} group elements"))
    return report


def action_checks(spec: AlgebraSpec, full: bool = False) -> Report:
    """Unit, associativity and left/right compatibility of the actions, exhaustively over G.

    The degree-shift right action is a genuine action.  The left action
    h |> x_g = b(g,h) x_{gh} only commutes with the right one up to a
    factor, and that factor is what is checked here:

        h |> (m <| k) = b(k, h) (h |> m) <| k.
    """
    if spec.modulus == 0:
        raise StructureError("action checks need a finite grading group")
    cf = spec.cf
    group = list(cf.elements())
    e = cf.identity()
    basis = module_basis(spec, full)
    unit, assoc, compat = [], [], []
    count = 0
    for m in basis:
        if right_action(m, e) != m or left_action(cf, e, m) != m:
            unit.append(repr(m))
        for h, k in itertools.product(group, repeat=2):
            count += 1
            if right_action(right_action(m, h), k) != right_action(m, group_compose(h, k)):
                assoc.append(f"{m!r} <| {h} <| {k}")
            lhs = left_action(cf, h, right_action(m, k))
            rhs = right_action(left_action(cf, h, m), k).scale(eval_factor(cf, k, h))
            if lhs != rhs:
                compat.append(f"{h} |> ({m!r} <| {k})")
    report = Report("actions")
    report.checks.append(collect("unit acts trivially", unit, len(basis)))
    report.checks.append(collect("(m <| h) <| k = m <| hk", assoc, count))
    report.checks.append(collect("h |> (m <| k) = b(k,h) (h |> m) <| k", compat, count))
    return report


def coinvariants(model, elems: Iterable[Element]) -> list[Element]:
    """Degree-e components of ``elems`` (nonzero, without repeats).

    The coinvariant subspace is the span of the returned vectors.
    """
    model = _model(model)
    seen, out = set(), []
    for x in elems:
        for g, part in model.homogeneous_parts(x).items():
            if g.is_identity() and part not in seen:
                seen.add(part)
                out.append(part)
    return out


def is_coinvariant(model, x: Element) -> bool:
    model = _model(model)
    delta = coaction(model, x)
    return all(gs[0].is_identity() for gs in delta.parts)
