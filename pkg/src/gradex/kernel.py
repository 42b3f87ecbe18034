"""
Exact scalars and the abelian grading group.

Scalars are finite sums  sum_k c_k q^k  with rational c_k.  When q is formal
they are Laurent polynomials; when q is a primitive n-th root of unity they
are reduced modulo the n-th cyclotomic polynomial, so every element of the
field Q(zeta_n) has exactly one representative with exponents in [0, phi(n)).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union


class StructureError(ValueError):
    """Operands do not live in the same ring or group."""


# ---------------------------------------------------------------------------
# coefficient ring


@dataclass(frozen=True)
class QSpec:
    kind: str = "formal"
    order: int | None = None

    def __post_init__(self):
        if self.kind == "formal":
            if self.order is not None:
                raise StructureError("formal q carries no order")
        elif self.kind == "root_of_unity":
            if not isinstance(self.order, int) or self.order < 2:
                raise StructureError(f"root of unity order must be an integer >= 2, got {self.order!r}")
        else:
            raise StructureError(f"unknown q kind {self.kind!r}")

    @classmethod
    def formal(cls) -> QSpec:
        return cls("formal")

    @classmethod
    def root_of_unity(cls, n: int) -> QSpec:
        return cls("root_of_unity", n)

    @property
    def is_field(self) -> bool:
        return self.kind == "root_of_unity"

    def __str__(self):
        return "q formal" if self.kind == "formal" else f"q = exp(2 pi i/{self.order})"


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den monic; dense coefficient lists, constant term first
    num = list(num)
    dd = len(den) - 1
    quot = [0] * max(len(num) - dd, 1)
    for d in range(len(num) - 1, dd - 1, -1):
        c = num[d]
        if c:
            quot[d - dd] = c
            for k, dc in enumerate(den):
                num[d - dd + k] -= c * dc
    return quot, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


Coeff = Union[int, Fraction]


class Scalar:
    """An exact element of Q[q, 1/q] or of Q[q]/(Phi_n).

    Instances are immutable and hashable.  Terms are stored as a sorted tuple
    of ``(exponent, Fraction)`` pairs with no zero coefficients.
    """

    __slots__ = ("terms", "qspec", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | Iterable[tuple[int, Coeff]] = (), qspec: QSpec | None = None):
        qspec = qspec or QSpec.formal()
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), Fraction(0)) + Fraction(c)
        if qspec.kind == "root_of_unity":
            acc = _reduce_cyclotomic(acc, qspec.order)
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c != 0)))
        object.__setattr__(self, "qspec", qspec)
        object.__setattr__(self, "_hash", hash((self.terms, qspec)))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # constructors

    @classmethod
    def const(cls, c: Coeff, qspec: QSpec | None = None) -> Scalar:
        return cls({0: c}, qspec)

    @classmethod
    def zero(cls, qspec: QSpec | None = None) -> Scalar:
        return cls({}, qspec)

    @classmethod
    def one(cls, qspec: QSpec | None = None) -> Scalar:
        return cls({0: 1}, qspec)

    @classmethod
    def q(cls, qspec: QSpec | None = None, k: int = 1) -> Scalar:
        """The monomial q^k."""
        return cls({k: 1}, qspec)

    # predicates

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_rational(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.terms[0][1] if self.terms else Fraction(0)

    # arithmetic

    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.qspec != self.qspec:
                raise StructureError(f"scalars over different rings: {self.qspec} vs {other.qspec}")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.const(other, self.qspec)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(itertools.chain(self.terms, other.terms), self.qspec)

    __radd__ = __add__

    def __neg__(self):
        return Scalar([(e, -c) for e, c in self.terms], self.qspec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms), self.qspec)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = Scalar.one(self.qspec), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> Scalar:
        """Multiplicative inverse.

        Every nonzero element is invertible over a root of unity.  In the
        formal Laurent ring only the monomials c q^k are units; anything else
        raises ``ArithmeticError``.
        """
        if not self.terms:
            raise ZeroDivisionError("inverse of zero scalar")
        if len(self.terms) == 1:
            (e, c), = self.terms
            return Scalar({-e: 1 / c}, self.qspec)
        if self.qspec.kind == "formal":
            raise ArithmeticError(f"{self} is not a unit of Q[q, 1/q]")
        return Scalar(enumerate(_cyclotomic_inverse(self.dense(), self.qspec.order)), self.qspec)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def dense(self) -> list[Fraction]:
        """Coefficient list from exponent 0 upward (root-of-unity scalars only)."""
        if self.qspec.kind != "root_of_unity":
            raise StructureError("dense form only defined over a root of unity")
        out = [Fraction(0)] * euler_phi(self.qspec.order)
        for e, c in self.terms:
            out[e] = c
        return out

    # comparison

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational() == other
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.qspec == other.qspec and self.terms == other.terms

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            if e == 0:
                body = _fmt_frac(c)
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                body = qpart if c == 1 else "-" + qpart if c == -1 else f"{_fmt_frac(c)}*{qpart}"
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _reduce_cyclotomic(acc: dict[int, Fraction], n: int) -> dict[int, Fraction]:
    dense = [Fraction(0)] * n
    for e, c in acc.items():
        dense[e % n] += c
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    for d in range(n - 1, deg - 1, -1):
        c = dense[d]
        if c:
            for k, pk in enumerate(phi):
                dense[d - deg + k] -= c * pk
    return {e: c for e, c in enumerate(dense[:deg]) if c}


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _trim(list(a))
    b = _trim(list(b))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for k, bk in enumerate(b):
            a[shift + k] -= c * bk
        _trim(a)
    return q, a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def _cyclotomic_inverse(a: list[Fraction], n: int) -> list[Fraction]:
    # extended Euclid: find s with s*a = 1 mod Phi_n (Phi_n irreducible over Q)
    modulus = [Fraction(c) for c in cyclotomic_polynomial(n)]
    r0, r1 = modulus, _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        quo, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(quo, s1))
    if not r1:
        raise ZeroDivisionError("not invertible modulo the cyclotomic polynomial")
    c = r1[0]
    return [x / c for x in s1]


# ---------------------------------------------------------------------------
# grading group  Z^N  or  (Z_n)^N


@dataclass(frozen=True, order=True)
class GroupElement:
    """Exponent vector of an element of Z^N (modulus 0) or Z_n^N."""

    exps: tuple[int, ...]
    modulus: int = 0

    def __post_init__(self):
        if self.modulus < 0 or self.modulus == 1:
            raise StructureError(f"modulus must be 0 or >= 2, got {self.modulus}")
        exps = tuple(int(x) for x in self.exps)
        if self.modulus:
            exps = tuple(x % self.modulus for x in exps)
        object.__setattr__(self, "exps", exps)

    @property
    def rank(self) -> int:
        return len(self.exps)

    def is_identity(self) -> bool:
        return not any(self.exps)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return group_compose(self, other)

    def __str__(self):
        if self.is_identity():
            return "e"
        return "(" + ",".join(map(str, self.exps)) + ")"


def _check_shape(g: GroupElement, h: GroupElement):
    if g.rank != h.rank or g.modulus != h.modulus:
        raise StructureError(f"group elements of different shape: {g!r} vs {h!r}")


def group_compose(g: GroupElement, h: GroupElement) -> GroupElement:
    _check_shape(g, h)
    return GroupElement(tuple(a + b for a, b in zip(g.exps, h.exps)), g.modulus)


def group_inverse(g: GroupElement) -> GroupElement:
    return GroupElement(tuple(-a for a in g.exps), g.modulus)


def group_identity(rank: int, modulus: int = 0) -> GroupElement:
    return GroupElement((0,) * rank, modulus)


def generator(i: int, rank: int, modulus: int = 0) -> GroupElement:
    """The generator with 1 in slot ``i`` (1-based)."""
    if not 1 <= i <= rank:
        raise IndexError(f"generator index {i} out of range 1..{rank}")
    return GroupElement(tuple(int(k == i - 1) for k in range(rank)), modulus)


def group_elements(rank: int, modulus: int) -> Iterator[GroupElement]:
    """Enumerate a finite grading group in lexicographic order."""
    if modulus == 0:
        raise StructureError("Z^N is infinite; reduce modulo n to enumerate")
    for exps in itertools.product(range(modulus), repeat=rank):
        yield GroupElement(exps, modulus)


def group_order(rank: int, modulus: int) -> int | None:
    return None if modulus == 0 else modulus**rank
