"""
Commutation factors on the grading group.

A commutation factor is determined by an integer symmetric matrix ``sigma``,
an integer antisymmetric matrix ``omega`` and the parameter q:

    b(g, h) = (-1)^(g . sigma . h) * q^(g . omega . h)

which on generators gives b(xi^i, xi^j) = (-1)^sigma_ij q^omega_ij.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property

from .kernel import (
    GroupElement,
    QSpec,
    Scalar,
    StructureError,
    generator,
    group_compose,
    group_elements,
    group_identity,
)
from .report import CheckResult, Report, collect

Matrix = tuple[tuple[int, ...], ...]

# exhaustive triple checks beyond this many triples fall back to sampling
EXHAUSTIVE_LIMIT = 300_000


def _as_matrix(rows, name: str, rank: int) -> Matrix:
    mat = tuple(tuple(int(x) for x in row) for row in rows)
    if len(mat) != rank or any(len(row) != rank for row in mat):
        raise StructureError(f"{name} must be {rank}x{rank}")
    return mat


def _bilinear(mat: Matrix, g: tuple[int, ...], h: tuple[int, ...]) -> int:
    return sum(g[i] * mat[i][j] * h[j] for i in range(len(g)) if g[i] for j in range(len(h)) if h[j])


@dataclass(frozen=True)
class CommutationFactor:
    sigma: Matrix
    omega: Matrix
    qspec: QSpec
    modulus: int = 0

    def __post_init__(self):
        rank = len(self.sigma)
        object.__setattr__(self, "sigma", _as_matrix(self.sigma, "sigma", rank))
        object.__setattr__(self, "omega", _as_matrix(self.omega, "omega", rank))
        bad = modulus_violations(self.sigma, self.omega, self.qspec, self.modulus)
        if bad:
            raise StructureError("commutation factor not well defined on Z_%d^%d: %s" % (self.modulus, rank, "; ".join(bad)))

    @property
    def rank(self) -> int:
        return len(self.sigma)

    def identity(self) -> GroupElement:
        return group_identity(self.rank, self.modulus)

    def generator(self, i: int) -> GroupElement:
        return generator(i, self.rank, self.modulus)

    def generators(self) -> list[GroupElement]:
        return [self.generator(i) for i in range(1, self.rank + 1)]

    def elements(self):
        return group_elements(self.rank, self.modulus)

    @cached_property
    def _sign_cache(self) -> dict:
        return {}

    def __call__(self, g: GroupElement, h: GroupElement) -> Scalar:
        return eval_factor(self, g, h)

    def matrix(self) -> list[list[Scalar]]:
        """b(xi^i, xi^j) for all generator pairs."""
        gens = self.generators()
        return [[eval_factor(self, g, h) for h in gens] for g in gens]


def modulus_violations(sigma: Matrix, omega: Matrix, qspec: QSpec, modulus: int) -> list[str]:
    if modulus == 0:
        return []
    out = []
    for i, j in itertools.product(range(len(sigma)), repeat=2):
        if (modulus * sigma[i][j]) % 2:
            out.append(f"{modulus}*sigma[{i}][{j}] is odd")
        w = modulus * omega[i][j]
        if w and not (qspec.kind == "root_of_unity" and w % qspec.order == 0):
            out.append(f"q^({modulus}*omega[{i}][{j}]) != 1")
    return out


def eval_factor(cf: CommutationFactor, g: GroupElement, h: GroupElement) -> Scalar:
    if g.rank != cf.rank or h.rank != cf.rank or g.modulus != cf.modulus or h.modulus != cf.modulus:
        raise StructureError(f"group elements {g}, {h} do not match factor of rank {cf.rank} mod {cf.modulus}")
    key = (g.exps, h.exps)
    cache = cf._sign_cache
    val = cache.get(key)
    if val is None:
        s = _bilinear(cf.sigma, g.exps, h.exps)
        w = _bilinear(cf.omega, g.exps, h.exps)
        val = Scalar({w: -1 if s % 2 else 1}, cf.qspec)
        if len(cache) < 100_000:
            cache[key] = val
    return val


# `eval` in the operation list; the builtin name is left alone at module level
evaluate = eval_factor


def from_flux(n_flux: int) -> CommutationFactor:
    """Factor b^ij = (-1)^(delta_ij + N) on Z_2^N for N flux quanta per particle."""
    if n_flux < 1:
        raise ValueError("number of fluxes must be >= 1")
    sigma = [[(int(i == j) + n_flux) % 2 for j in range(n_flux)] for i in range(n_flux)]
    omega = [[0] * n_flux for _ in range(n_flux)]
    return CommutationFactor(sigma, omega, QSpec.root_of_unity(2), 2)


def trivial(rank: int, modulus: int = 2, qspec: QSpec | None = None) -> CommutationFactor:
    zero = [[0] * rank for _ in range(rank)]
    return CommutationFactor(zero, zero, qspec or QSpec.root_of_unity(2), modulus)


def _sample_elements(cf: CommutationFactor, rng: random.Random, count: int) -> list[GroupElement]:
    """Generators, identity, and random vectors (used when G is infinite or large)."""
    pts = [cf.identity()] + cf.generators()
    span = cf.modulus or 7
    lo = 0 if cf.modulus else -span
    for _ in range(count):
        pts.append(GroupElement(tuple(rng.randrange(lo, span) for _ in range(cf.rank)), cf.modulus))
    return pts


def validate(cf: CommutationFactor, samples: int = 12, seed: int = 0) -> Report:
    """Check the commutation-factor axioms; failures are reported, never raised."""
    report = Report("commutation factor")
    n = cf.rank

    bad = [f"sigma[{i}][{j}]={cf.sigma[i][j]} != sigma[{j}][{i}]={cf.sigma[j][i]}"
           for i in range(n) for j in range(i + 1, n) if cf.sigma[i][j] != cf.sigma[j][i]]
    bad += [f"omega[{i}][{j}]={cf.omega[i][j]} != -omega[{j}][{i}]={-cf.omega[j][i]}"
            for i in range(n) for j in range(i, n) if cf.omega[i][j] != -cf.omega[j][i]]
    report.checks.append(collect("symmetry", bad, n * n))

    size = cf.modulus**n if cf.modulus else None
    if size is not None and size**3 <= EXHAUSTIVE_LIMIT:
        points = list(cf.elements())
        note = f"exhaustive over Z_{cf.modulus}^{n}"
    else:
        points = _sample_elements(cf, random.Random(seed), samples)
        note = "generators, identity and random vectors"

    bad, count = [], 0
    for g, h, k in itertools.product(points, repeat=3):
        hk, gh = group_compose(h, k), group_compose(g, h)
        if eval_factor(cf, g, hk) != eval_factor(cf, g, h) * eval_factor(cf, g, k):
            bad.append(f"b({g}, {h}*{k}) != b({g},{h}) b({g},{k})")
        if eval_factor(cf, gh, k) != eval_factor(cf, g, k) * eval_factor(cf, h, k):
            bad.append(f"b({g}*{h}, {k}) != b({g},{k}) b({h},{k})")
        count += 1
    report.checks.append(collect("multiplicativity", bad, count, note=note))

    bad, count = [], 0
    for g, h in itertools.product(points, repeat=2):
        if eval_factor(cf, g, h) * eval_factor(cf, h, g) != 1:
            bad.append(f"b({g},{h}) b({h},{g}) = {eval_factor(cf, g, h) * eval_factor(cf, h, g)}")
        count += 1
    report.checks.append(collect("commutation law", bad, count, note=note))

    report.checks.append(collect("modulus", modulus_violations(cf.sigma, cf.omega, cf.qspec, cf.modulus), n * n))
    report.checks.append(CheckResult("cqt intertwining", True, 0, note="vacuous for group-like elements of a commutative group algebra"))
    return report
