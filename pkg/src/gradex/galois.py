"""
The Galois map and the strong-grading test.

beta(a (x)_A b) = (a (x) 1) delta(b) = sum_g a b_g (x) g.  For H = kG the
extension is Galois exactly when it is strongly graded, A_g A_h = A_{gh} for
every pair, which reduces bijectivity of beta to exact rank computations on
finite-dimensional homogeneous components.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import AlgebraSpec, Element, ExtensionAlgebra, algebra_for
from .hopf import CoactionResult, FullExtension
from .kernel import GroupElement, StructureError, group_compose, group_inverse
from .linalg import coordinates, lower, rank, solve


@dataclass
class GradedComponentBasis:
    degree: GroupElement
    basis: list[Element]
    keys: list = field(default_factory=list)

    def __post_init__(self):
        if not self.keys:
            self.keys = sorted({k for v in self.basis for k in v.keys()}, key=repr)
        if self.basis:
            qspec = next(iter(self.basis[0].terms.values())).qspec
            if rank(coordinates(self.basis, self.keys, qspec)) != len(self.basis):
                raise ValueError(f"basis of component {self.degree} is linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)


def _model(obj):
    return algebra_for(obj) if isinstance(obj, AlgebraSpec) else obj


def components(model) -> dict[GroupElement, GradedComponentBasis]:
    """Homogeneous components spanned by the model's basis keys."""
    model = _model(model)
    spec = model.spec
    if spec.modulus == 0:
        raise StructureError("component enumeration needs a finite grading group")
    out = {}
    for g in spec.cf.elements():
        keys = model.basis_of_degree(g)
        out[g] = GradedComponentBasis(g, [Element.basis(k, spec.qspec) for k in keys], list(keys))
    return out


def full_extension(spec: AlgebraSpec) -> tuple[FullExtension, dict[GroupElement, GradedComponentBasis]]:
    """A (x) kG with components {base monomials} (x) g."""
    model = FullExtension(spec)
    return model, components(model)


def pauli_quotient(spec: AlgebraSpec, excluded=None) -> tuple[ExtensionAlgebra, dict[GroupElement, GradedComponentBasis]]:
    """Subalgebra generated by the letters, with excluded products sent to zero.

    ``excluded`` defaults to the pairs found by the realization consistency check.
    """
    if excluded is None:
        from .realization import consistency_check

        excluded = consistency_check(spec).pauli_pairs
    model = ExtensionAlgebra(spec, excluded)
    return model, components(model)


# ---------------------------------------------------------------------------
# beta and its iterates


def beta(model, a: Element, b: Element) -> CoactionResult:
    model = _model(model)
    parts = {}
    for g, b_g in model.homogeneous_parts(b).items():
        parts[(g,)] = model.multiply(a, b_g)
    return CoactionResult(parts)


def beta_n(model, elems: list[Element]) -> CoactionResult:
    """beta^n = (beta (x) id) o ... o (id (x) beta (x) id) o (id (x) beta) on a_0 (x) ... (x) a_n.

    The innermost pair is folded first; homogeneous inputs of degrees
    g_1..g_n give a_0..a_n (x) g_1..g_n (x) g_2..g_n (x) ... (x) g_n.
    """
    model = _model(model)
    if len(elems) < 2:
        raise ValueError("beta_n needs n+1 >= 2 tensor factors")
    acc: dict[tuple[GroupElement, ...], Element] = {(): elems[-1]}
    for a in reversed(elems[:-1]):
        nxt: dict[tuple[GroupElement, ...], Element] = {}
        for groups, y in acc.items():
            for g, y_g in model.homogeneous_parts(y).items():
                key = (g,) + groups
                prod = model.multiply(a, y_g)
                nxt[key] = nxt[key] + prod if key in nxt else prod
        acc = {k: v for k, v in nxt.items() if v}
    return CoactionResult(acc)


# ---------------------------------------------------------------------------
# strong grading


@dataclass
class PairResult:
    g: GroupElement
    h: GroupElement
    target_dim: int
    span_dim: int

    @property
    def passed(self) -> bool:
        return self.span_dim == self.target_dim

    @property
    def deficit(self) -> int:
        return self.target_dim - self.span_dim

    def to_dict(self) -> dict:
        return {"g": list(self.g.exps), "h": list(self.h.exps), "gh": list(group_compose(self.g, self.h).exps),
                "target_dim": self.target_dim, "span_dim": self.span_dim, "deficit": self.deficit}


@dataclass
class StrongGradingReport:
    pairs: list[PairResult]

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.pairs)

    def deficient(self) -> list[PairResult]:
        return [p for p in self.pairs if not p.passed]


def _check_cover(comps, model):
    for g in model.spec.cf.elements():
        if g not in comps:
            raise StructureError(f"no component given for degree {g}")


def product_span_dim(model, comps, g: GroupElement, h: GroupElement) -> int:
    target = comps[group_compose(g, h)]
    prods = [model.multiply(u, v) for u in comps[g].basis for v in comps[h].basis]
    prods = [p for p in prods if p]
    if not prods:
        return 0
    try:
        rows = coordinates(prods, target.keys, model.spec.qspec)
    except KeyError as exc:
        raise StructureError(f"product of degrees {g}, {h} leaves component {group_compose(g, h)}: {exc}") from None
    return rank(rows)


def strong_grading_check(comps: dict[GroupElement, GradedComponentBasis], model) -> StrongGradingReport:
    """A_g A_h = A_{gh} for all pairs, by comparing ranks of the product span."""
    model = _model(model)
    _check_cover(comps, model)
    group = list(model.spec.cf.elements())
    pairs = []
    for g, h in itertools.product(group, repeat=2):
        target = comps[group_compose(g, h)]
        pairs.append(PairResult(g, h, target.dim, product_span_dim(model, comps, g, h)))
    return StrongGradingReport(pairs)


@dataclass
class GaloisVerdict:
    verdict: str
    evidence: list[PairResult]
    report: StrongGradingReport

    @property
    def is_galois(self) -> bool:
        return self.verdict == "galois"


def galois_verdict(model, comps) -> GaloisVerdict:
    report = strong_grading_check(comps, model)
    return GaloisVerdict("galois" if report.passed else "not_galois", report.deficient(), report)


# ---------------------------------------------------------------------------
# surjectivity witnesses


@dataclass
class Preimage:
    """target (x) g = sum_k coeff_k beta(left_k, right_k) with right_k of degree g."""

    terms: list[tuple[object, Element, Element]]


def beta_preimage(model, comps, target: Element, g: GroupElement) -> Preimage | None:
    """Solve for sum c_k a_k (x) b_k mapping to target (x) g under beta.

    ``target`` must be homogeneous; its degree f fixes a_k in A_{f g^-1}.
    """
    model = _model(model)
    parts = model.homogeneous_parts(target)
    if len(parts) != 1:
        raise ValueError("target must be homogeneous and nonzero")
    (f, _), = parts.items()
    left_deg = group_compose(f, group_inverse(g))
    pairs = [(u, v) for u in comps[left_deg].basis for v in comps[g].basis]
    keys = comps[f].keys
    qspec = model.spec.qspec
    cols = coordinates([model.multiply(u, v) for u, v in pairs], keys, qspec) if pairs else []
    rhs = coordinates([target], keys, qspec)[0]
    x = solve(cols, rhs) if pairs else None
    if x is None:
        return None
    terms = [(lower(c), u, v) for c, (u, v) in zip(x, pairs) if c]
    return Preimage(terms)


def verify_preimage(model, pre: Preimage, target: Element, g: GroupElement) -> bool:
    model = _model(model)
    total: dict = {}
    for c, u, v in pre.terms:
        for gs, part in beta(model, u, v).parts.items():
            total[gs] = total[gs] + part.scale(c) if gs in total else part.scale(c)
    return CoactionResult(total) == CoactionResult({(g,): target})


def surjectivity_witnesses(model, comps) -> tuple[int, list[tuple[GroupElement, GroupElement, Element]]]:
    """Try every (basis vector of A_f) (x) g; returns (found, missing)."""
    model = _model(model)
    found, missing = 0, []
    for f, comp in comps.items():
        for v in comp.basis:
            for g in comps:
                pre = beta_preimage(model, comps, v, g)
                if pre is not None and verify_preimage(model, pre, v, g):
                    found += 1
                else:
                    missing.append((f, g, v))
    return found, missing


def balanced_tensor_check(model, comps) -> list[str]:
    """beta(a z, b) = beta(a, z b) for z in the identity component."""
    model = _model(model)
    e = model.spec.cf.identity()
    bad = []
    vectors = [v for c in comps.values() for v in c.basis]
    for z in comps[e].basis:
        for a in vectors:
            for b in vectors:
                if beta(model, model.multiply(a, z), b) != beta(model, a, model.multiply(z, b)):
                    bad.append(f"a={a!r} z={z!r} b={b!r}")
    return bad
