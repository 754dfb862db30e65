"""Shamir sharing over the subgroup's scalar field.

Shares are scalars mod r (the order of the curve subgroup) because they are
used as exponents on curve points. Recombination comes in two forms: plain
Lagrange interpolation of the secret, and the same interpolation carried out
"in the exponent" on public points f(x_i) * P, which reconstructs Q = s * P
without revealing any share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import CurveParams, CurvePoint, FieldElement, scalar_mul
from .errors import (
    DuplicateShareX,
    InvalidThreshold,
    NotInSubgroup,
    ReservedEvaluationPoint,
)


class MasterPolynomial:
    """f(x) = a0 + a1 x + ... + a_{t-1} x^{t-1} with a0 the master secret.

    Exactly t coefficients are stored; the top one may legitimately be zero
    since it is sampled uniformly.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence[FieldElement]):
        if not coefficients:
            raise InvalidThreshold("polynomial needs at least the constant term")
        self.coefficients = tuple(coefficients)

    @property
    def threshold(self) -> int:
        return len(self.coefficients)

    @property
    def secret(self) -> FieldElement:
        return self.coefficients[0]

    def evaluate(self, x: FieldElement) -> FieldElement:
        acc = x.params.zero()
        for coeff in reversed(self.coefficients):
            acc = acc * x + coeff
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, MasterPolynomial)
            and self.coefficients == other.coefficients
        )


@dataclass(frozen=True)
class Share:
    """One member's key pair: public x, private y = f(x)."""

    x: FieldElement
    y: FieldElement


@dataclass(frozen=True)
class PublicShare:
    """The broadcastable form: x and the point y * P, tagged with the owner id."""

    x: FieldElement
    point: CurvePoint
    member_id: str


def sample_polynomial(t: int, secret: FieldElement, rng) -> MasterPolynomial:
    """Uniform degree-(t-1) polynomial with the given constant term."""
    if t < 1:
        raise InvalidThreshold(f"threshold must be at least 1, got {t}")
    params = secret.params
    coeffs = [secret]
    for _ in range(t - 1):
        coeffs.append(params.element(rng.randrange(params.p)))
    return MasterPolynomial(coeffs)


def issue_share(poly: MasterPolynomial, x: FieldElement) -> Share:
    if x.is_zero():
        raise ReservedEvaluationPoint("x = 0 evaluates to the secret itself")
    return Share(x=x, y=poly.evaluate(x))


def _check_distinct(xs: Sequence[FieldElement]):
    seen = set()
    for x in xs:
        if x.is_zero():
            raise ReservedEvaluationPoint("x = 0 cannot appear among shares")
        if x.value in seen:
            raise DuplicateShareX(f"duplicate share x = {x.value}")
        seen.add(x.value)


def lagrange_coefficient(xs: Sequence[FieldElement], i: int) -> FieldElement:
    """lambda_i = prod_{j != i} (-x_j) / (x_i - x_j), the weight of share i at x = 0."""
    _check_distinct(xs)
    params = xs[i].params
    num = params.one()
    den = params.one()
    for j, xj in enumerate(xs):
        if j == i:
            continue
        num = num * -xj
        den = den * (xs[i] - xj)
    return num / den


def interpolate_secret(shares: Sequence[Share]) -> FieldElement:
    """sum lambda_i * y_i; equals f(0) when the shares lie on one polynomial."""
    if not shares:
        raise InvalidThreshold("no shares to interpolate")
    xs = [s.x for s in shares]
    _check_distinct(xs)
    acc = xs[0].params.zero()
    for i, share in enumerate(shares):
        acc = acc + lagrange_coefficient(xs, i) * share.y
    return acc


def interpolate_in_exponent(public_shares: Sequence[PublicShare], curve: CurveParams) -> CurvePoint:
    """sum lambda_i * (y_i P) = (sum lambda_i y_i) P, computed from points alone."""
    if not public_shares:
        raise InvalidThreshold("no public shares to interpolate")
    xs = [s.x for s in public_shares]
    _check_distinct(xs)
    acc = CurvePoint.identity(curve.field)
    for i, share in enumerate(public_shares):
        if not curve.in_subgroup(share.point):
            raise NotInSubgroup(f"public share of {share.member_id} is outside the subgroup")
        lam = lagrange_coefficient(xs, i)
        acc = acc + scalar_mul(lam.value, share.point)
    return acc
