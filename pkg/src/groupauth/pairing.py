"""Symmetric pairing on the supersingular curve via Miller's algorithm.

pair(A, B) runs one Miller loop for f_{r,A}, evaluates the line functions at
the distorted point phi(B) = (-x_B, i*y_B), and raises the result to
(p^2 - 1) / r. Vertical-line denominators are omitted: they evaluate in F_p
(phi keeps the x-coordinate in the base field) and (p^2 - 1)/r is a multiple
of p - 1, so the final exponentiation kills them.

The resulting map e: G x G -> mu_r is bilinear, symmetric in the sense
e(aP, bP) = e(P, P)^(ab), and non-degenerate on the order-r subgroup.
"""

from __future__ import annotations

from .algebra import CurveParams, CurvePoint, Fp2Element, scalar_mul
from .errors import MillerDegenerate, NotInSubgroup, ParamsMismatch


class Fp2Point:
    """Point with F_p^2 coordinates; only produced by the distortion map."""

    __slots__ = ("x", "y")

    def __init__(self, x: Fp2Element, y: Fp2Element):
        self.x = x
        self.y = y

    @property
    def is_identity(self) -> bool:
        return self.x is None

    def __eq__(self, other):
        return isinstance(other, Fp2Point) and self.x == other.x and self.y == other.y


_IDENTITY_FP2 = Fp2Point.__new__(Fp2Point)
_IDENTITY_FP2.x = None
_IDENTITY_FP2.y = None


def distortion_map(a: CurvePoint) -> Fp2Point:
    """(x, y) -> (-x, iy), an automorphism of y^2 = x^3 + x over F_p^2.

    For a point of odd prime order the image lies outside the base-field
    subgroup, which is what makes pair(P, P) non-trivial.
    """
    if a.is_identity:
        return _IDENTITY_FP2
    field = a.field
    zero = field.zero()
    return Fp2Point(
        Fp2Element(-a.x, zero),
        Fp2Element(field.zero(), a.y),
    )


class GtElement:
    """Element of the order-r target subgroup of F_p^2*."""

    __slots__ = ("value", "r")

    def __init__(self, value: Fp2Element, r: int):
        self.value = value
        self.r = r

    def __mul__(self, other: "GtElement") -> "GtElement":
        if self.r != other.r:
            raise ParamsMismatch("target-group elements of different order")
        return GtElement(self.value * other.value, self.r)

    def __truediv__(self, other: "GtElement") -> "GtElement":
        if self.r != other.r:
            raise ParamsMismatch("target-group elements of different order")
        return GtElement(self.value * other.value.inverse(), self.r)

    def __eq__(self, other):
        return isinstance(other, GtElement) and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    @property
    def is_one(self) -> bool:
        return self.value.is_one()

    def encode(self) -> bytes:
        return self.value.encode()

    def __repr__(self):
        return f"GtElement({self.value!r})"


def gt_pow(z: GtElement, k: int) -> GtElement:
    """z^k; exponents act modulo r since z^r = 1."""
    return GtElement(z.value ** (k % z.r), z.r)


class PairingEngine:
    """Binds the Miller-loop pairing to one curve's parameters."""

    def __init__(self, curve: CurveParams):
        self.curve = curve
        self.final_exponent = (curve.field.p * curve.field.p - 1) // curve.r
        if self.pair(curve.generator, curve.generator).is_one:
            raise MillerDegenerate("pairing is degenerate on the configured generator")

    def one(self) -> GtElement:
        field = self.curve.field
        return GtElement(Fp2Element(field.one(), field.zero()), self.curve.r)

    def _line_at(self, t: CurvePoint, q: CurvePoint, s: Fp2Point) -> Fp2Element:
        """Line through t and q (tangent when equal), evaluated at s."""
        field = self.curve.field
        if t == q:
            slope = (t.x * t.x * 3 + 1) / (t.y * 2)
        elif t.x != q.x:
            slope = (q.y - t.y) / (q.x - t.x)
        else:
            # t = -q: vertical line x - x_t
            value = s.x - Fp2Element(t.x, field.zero())
            if value.is_zero():
                raise MillerDegenerate("evaluation point on a vertical loop line")
            return value
        # (s.y - t.y) - slope * (s.x - t.x)
        zero = field.zero()
        value = (s.y - Fp2Element(t.y, zero)) - Fp2Element(slope, zero) * (
            s.x - Fp2Element(t.x, zero)
        )
        if value.is_zero():
            raise MillerDegenerate("evaluation point on a loop line")
        return value

    def _miller(self, a: CurvePoint, s: Fp2Point) -> Fp2Element:
        field = self.curve.field
        f = Fp2Element(field.one(), field.zero())
        t = a
        for bit in bin(self.curve.r)[3:]:
            f = f.square() * self._line_at(t, t, s)
            t = t + t
            if bit == "1":
                f = f * self._line_at(t, a, s)
                t = t + a
        if not t.is_identity:
            raise MillerDegenerate("Miller loop did not close at the identity")
        return f

    def pair(self, a: CurvePoint, b: CurvePoint) -> GtElement:
        curve = self.curve
        if a.field.p != curve.field.p or b.field.p != curve.field.p:
            raise ParamsMismatch("points from a different curve")
        if not scalar_mul(curve.r, a).is_identity:
            raise NotInSubgroup("first argument is outside the order-r subgroup")
        if not scalar_mul(curve.r, b).is_identity:
            raise NotInSubgroup("second argument is outside the order-r subgroup")
        if a.is_identity or b.is_identity:
            return self.one()
        f = self._miller(a, distortion_map(b))
        return GtElement(f ** self.final_exponent, curve.r)


_engine_cache: dict = {}


def get_engine(curve: CurveParams) -> PairingEngine:
    key = (curve.field.p, curve.r)
    engine = _engine_cache.get(key)
    if engine is None:
        engine = PairingEngine(curve)
        _engine_cache[key] = engine
    return engine
