"""
Exact Gaussian elimination over the scalar field.

Over a root of unity the scalars already form a field.  For formal q the
Laurent ring is only a domain, so entries are lifted to fractions num/den and
compared by cross-multiplication; no gcd is ever taken.
"""
from __future__ import annotations

from typing import Hashable, Sequence

from .kernel import QSpec, Scalar


class RationalFunction:
    """num/den with Laurent-polynomial numerator and denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Scalar, den: Scalar | None = None):
        den = Scalar.one(num.qspec) if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.is_monomial():
            num, den = num * den.inverse(), Scalar.one(num.qspec)
        self.num, self.den = num, den

    def __add__(self, other):
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return RationalFunction(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            other = RationalFunction(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalFunction is unhashable")

    def __repr__(self):
        return f"({self.num})/({self.den})" if self.den != 1 else str(self.num)


def lift(s: Scalar):
    return s if s.qspec.is_field else RationalFunction(s)


def lower(x) -> Scalar:
    """Back to a Scalar; raises if a formal fraction does not reduce to a Laurent polynomial."""
    if isinstance(x, Scalar):
        return x
    if x.den == 1:
        return x.num
    if x.den.is_monomial():
        return x.num / x.den
    raise ArithmeticError(f"{x!r} is not a Laurent polynomial")


def zero_like(qspec: QSpec):
    return lift(Scalar.zero(qspec))


def row_echelon(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r][c]
        mat[r] = [x / p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_echelon(rows)[1])


def solve(columns: Sequence[Sequence], target: Sequence) -> list | None:
    """Coefficients x with sum_j x_j columns[j] = target, or None if inconsistent."""
    nrows = len(target)
    ncols = len(columns)
    if nrows == 0:
        return []
    zero = target[0] - target[0]
    aug = [[columns[j][i] for j in range(ncols)] + [target[i]] for i in range(nrows)]
    ech, pivots = row_echelon(aug)
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for row, c in zip(ech, pivots):
        x[c] = row[ncols]
    return x


def coordinates(vectors: Sequence, keys: Sequence[Hashable], qspec: QSpec) -> list[list]:
    """Rows of lifted coefficients of Element-like vectors in the given key order."""
    index = {k: i for i, k in enumerate(keys)}
    zero = zero_like(qspec)
    rows = []
    for v in vectors:
        row = [zero] * len(keys)
        for k, c in v.terms.items():
            row[index[k]] = lift(c)
        rows.append(row)
    return rows
