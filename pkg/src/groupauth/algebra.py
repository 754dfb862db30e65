"""Prime-field and elliptic-curve arithmetic at desk scale.

The curve is fixed to y^2 = x^3 + x over F_p with p = 3 (mod 4). That curve
is supersingular with exactly p + 1 points and admits the quadratic twist
endomorphism (x, y) -> (-x, iy) over F_p^2, which is what makes a symmetric
pairing possible on a single cyclic subgroup.

Primes are checked by trial division and arithmetic uses Python integers;
nothing here is constant-time or sized for real cryptographic strength.
"""

from __future__ import annotations

from .errors import GeneratorSearchFailed, InvalidOperand, ParamsMismatch


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for word-sized n."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class FieldParams:
    """The prime field F_p.

    Instances compare equal by modulus so separately built profiles
    interoperate. Curve fields additionally need p = 3 (mod 4); that is
    enforced by CurveParams, not here, because scalar fields (mod the
    subgroup order r) have no residue constraint.
    """

    __slots__ = ("p", "encoded_size")

    def __init__(self, p: int):
        if not is_prime(p):
            raise InvalidOperand(f"{p} is not prime")
        if p == 2:
            raise InvalidOperand("p must be an odd prime")
        self.p = p
        self.encoded_size = (p.bit_length() + 7) // 8

    @property
    def supports_distortion(self) -> bool:
        # -1 must be a non-residue for i^2 = -1 to define F_p^2
        return self.p % 4 == 3

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def __eq__(self, other):
        return isinstance(other, FieldParams) and self.p == other.p

    def __hash__(self):
        return hash(self.p)

    def __repr__(self):
        return f"FieldParams({self.p})"


class FieldElement:
    """An element of F_p, always stored fully reduced."""

    __slots__ = ("value", "params")

    def __init__(self, value: int, params: FieldParams):
        self.value = value % params.p
        self.params = params

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.params.p != self.params.p:
                raise ParamsMismatch("operands from different fields")
            return other
        if isinstance(other, int):
            return FieldElement(other, self.params)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.value + o.value, self.params)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.value - o.value, self.params)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(o.value - self.value, self.params)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.value * o.value, self.params)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __neg__(self):
        return FieldElement(-self.value, self.params)

    def __pow__(self, exponent: int):
        return FieldElement(pow(self.value, exponent, self.params.p), self.params)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise InvalidOperand("inverse of zero")
        return FieldElement(pow(self.value, self.params.p - 2, self.params.p), self.params)

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.value == other.value
            and self.params.p == other.params.p
        )

    def __hash__(self):
        return hash((self.value, self.params.p))

    def encode(self) -> bytes:
        """Fixed-width big-endian encoding, ceil(bits(p)/8) bytes."""
        return self.value.to_bytes(self.params.encoded_size, "big")

    def __repr__(self):
        return f"FieldElement({self.value} mod {self.params.p})"


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def decode_field_element(data: bytes, params: FieldParams) -> FieldElement:
    if len(data) != params.encoded_size:
        raise InvalidOperand(f"expected {params.encoded_size} bytes, got {len(data)}")
    value = int.from_bytes(data, "big")
    if value >= params.p:
        raise InvalidOperand("encoded value not reduced")
    return FieldElement(value, params)


class Fp2Element:
    """c0 + c1*i in F_p^2 with i^2 = -1. Valid only when -1 is a non-residue."""

    __slots__ = ("c0", "c1")

    def __init__(self, c0: FieldElement, c1: FieldElement):
        if c0.params.p != c1.params.p:
            raise ParamsMismatch("components from different fields")
        self.c0 = c0
        self.c1 = c1

    @classmethod
    def from_ints(cls, c0: int, c1: int, params: FieldParams) -> "Fp2Element":
        return cls(params.element(c0), params.element(c1))

    @property
    def params(self) -> FieldParams:
        return self.c0.params

    def _check(self, other: "Fp2Element"):
        if other.params.p != self.params.p:
            raise ParamsMismatch("operands from different fields")

    def __add__(self, other: "Fp2Element") -> "Fp2Element":
        self._check(other)
        return Fp2Element(self.c0 + other.c0, self.c1 + other.c1)

    def __sub__(self, other: "Fp2Element") -> "Fp2Element":
        self._check(other)
        return Fp2Element(self.c0 - other.c0, self.c1 - other.c1)

    def __mul__(self, other: "Fp2Element") -> "Fp2Element":
        self._check(other)
        a0, a1 = self.c0, self.c1
        b0, b1 = other.c0, other.c1
        return Fp2Element(a0 * b0 - a1 * b1, a0 * b1 + a1 * b0)

    def __neg__(self):
        return Fp2Element(-self.c0, -self.c1)

    def square(self) -> "Fp2Element":
        return self * self

    def conjugate(self) -> "Fp2Element":
        return Fp2Element(self.c0, -self.c1)

    def norm(self) -> FieldElement:
        return self.c0 * self.c0 + self.c1 * self.c1

    def inverse(self) -> "Fp2Element":
        n = self.norm()
        if n.is_zero():
            raise InvalidOperand("inverse of zero in F_p^2")
        ninv = n.inverse()
        return Fp2Element(self.c0 * ninv, -self.c1 * ninv)

    def __truediv__(self, other: "Fp2Element") -> "Fp2Element":
        return self * other.inverse()

    def __pow__(self, exponent: int) -> "Fp2Element":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Fp2Element(self.params.one(), self.params.zero())
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return self.c0.is_zero() and self.c1.is_zero()

    def is_one(self) -> bool:
        return self.c0.value == 1 and self.c1.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, Fp2Element)
            and self.c0 == other.c0
            and self.c1 == other.c1
        )

    def __hash__(self):
        return hash((self.c0.value, self.c1.value, self.params.p))

    def encode(self) -> bytes:
        return self.c0.encode() + self.c1.encode()

    def __repr__(self):
        return f"Fp2Element({self.c0.value} + {self.c1.value}i mod {self.params.p})"


class CurvePoint:
    """Affine point on y^2 = x^3 + x over F_p, or the identity marker."""

    __slots__ = ("x", "y", "field")

    def __init__(self, x, y, field: FieldParams):
        self.field = field
        self.x = x
        self.y = y
        if x is None and y is None:
            return
        if x is None or y is None:
            raise InvalidOperand("half-specified point")
        if y * y != x * x * x + x:
            raise InvalidOperand(f"({x.value}, {y.value}) is not on y^2 = x^3 + x")

    @classmethod
    def identity(cls, field: FieldParams) -> "CurvePoint":
        return cls(None, None, field)

    @classmethod
    def from_ints(cls, x: int, y: int, field: FieldParams) -> "CurvePoint":
        return cls(field.element(x), field.element(y), field)

    @property
    def is_identity(self) -> bool:
        return self.x is None

    def _check(self, other: "CurvePoint"):
        if other.field.p != self.field.p:
            raise ParamsMismatch("points from different curves")

    def __add__(self, other: "CurvePoint") -> "CurvePoint":
        self._check(other)
        if self.is_identity:
            return other
        if other.is_identity:
            return self
        if self.x == other.x:
            if (self.y + other.y).is_zero():
                return CurvePoint.identity(self.field)
            # equal points, tangent slope; y != 0 here since -P was handled
            slope = (self.x * self.x * 3 + 1) / (self.y * 2)
        else:
            slope = (other.y - self.y) / (other.x - self.x)
        x3 = slope * slope - self.x - other.x
        y3 = slope * (self.x - x3) - self.y
        return CurvePoint(x3, y3, self.field)

    def __neg__(self) -> "CurvePoint":
        if self.is_identity:
            return self
        return CurvePoint(self.x, -self.y, self.field)

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self.field.p != other.field.p:
            return False
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.is_identity:
            return hash(("pt", self.field.p))
        return hash(("pt", self.x.value, self.y.value, self.field.p))

    def __rmul__(self, k: int) -> "CurvePoint":
        return scalar_mul(k, self)

    def encode(self) -> bytes:
        """0x00 for identity, else 0x04 || x || y fixed-width big-endian."""
        if self.is_identity:
            return b"\x00"
        return b"\x04" + self.x.encode() + self.y.encode()

    @classmethod
    def decode(cls, data: bytes, field: FieldParams) -> "CurvePoint":
        if data == b"\x00":
            return cls.identity(field)
        size = field.encoded_size
        if len(data) != 1 + 2 * size or data[0] != 0x04:
            raise InvalidOperand("malformed point encoding")
        x = decode_field_element(data[1 : 1 + size], field)
        y = decode_field_element(data[1 + size :], field)
        return cls(x, y, field)

    def __repr__(self):
        if self.is_identity:
            return "CurvePoint(identity)"
        return f"CurvePoint({self.x.value}, {self.y.value} mod {self.field.p})"


def point_add(a: CurvePoint, b: CurvePoint) -> CurvePoint:
    return a + b


def scalar_mul(k: int, a: CurvePoint) -> CurvePoint:
    """k-fold sum of a by double-and-add; k must be non-negative."""
    if k < 0:
        raise InvalidOperand("negative scalar")
    result = CurvePoint.identity(a.field)
    addend = a
    while k:
        if k & 1:
            result = result + addend
        addend = addend + addend
        k >>= 1
    return result


def sqrt_mod(value: FieldElement):
    """Square root in F_p for p = 3 (mod 4); None when value is a non-residue."""
    p = value.params.p
    if value.is_zero():
        return value
    candidate = value ** ((p + 1) // 4)
    if candidate * candidate == value:
        return candidate
    return None


def find_subgroup_generator(field: FieldParams, r: int, h: int, rng, max_attempts: int = 512) -> CurvePoint:
    """Find a point of order exactly r by clearing the cofactor h on random points.

    h * r must equal p + 1 (the curve order). Every attempt that survives
    the identity check already has order r because r is prime, so the loop
    only fails when r * h mismatches the group structure (e.g. r = 1).
    """
    if h * r != field.p + 1:
        raise InvalidOperand("h * r must equal the curve order p + 1")
    for _ in range(max_attempts):
        x = field.element(rng.randrange(field.p))
        rhs = x * x * x + x
        if rhs.is_zero():
            continue  # 2-torsion x, cofactor-cleared to identity anyway
        y = sqrt_mod(rhs)
        if y is None:
            continue
        candidate = scalar_mul(h, CurvePoint(x, y, field))
        if candidate.is_identity:
            continue
        if not scalar_mul(r, candidate).is_identity:
            raise GeneratorSearchFailed("cofactor-cleared point escaped the r-subgroup")
        return candidate
    raise GeneratorSearchFailed(f"no point of order {r} found in {max_attempts} attempts")


class CurveParams:
    """The curve group: y^2 = x^3 + x over F_p with a pinned order-r generator.

    Checked at construction:
      - p = 3 (mod 4), so the curve is supersingular with p + 1 points and
        the distortion map exists;
      - r prime, r | p + 1, r does not divide p - 1 (embedding degree 2);
      - the generator is a non-identity point annihilated by r.
    """

    __slots__ = ("field", "r", "h", "generator", "scalar_field")

    def __init__(self, field: FieldParams, r: int, h: int, generator: CurvePoint):
        if not field.supports_distortion:
            raise InvalidOperand("curve field must have p = 3 (mod 4)")
        if not is_prime(r):
            raise InvalidOperand("subgroup order r must be prime")
        if h * r != field.p + 1:
            raise InvalidOperand("h * r must equal p + 1")
        if (field.p - 1) % r == 0:
            raise InvalidOperand("r must not divide p - 1")
        if generator.is_identity:
            raise InvalidOperand("generator is the identity")
        if generator.field.p != field.p:
            raise ParamsMismatch("generator from a different field")
        if not scalar_mul(r, generator).is_identity:
            raise InvalidOperand("generator does not have order r")
        self.field = field
        self.r = r
        self.h = h
        self.generator = generator
        self.scalar_field = FieldParams(r)

    def in_subgroup(self, point: CurvePoint) -> bool:
        if point.field.p != self.field.p:
            raise ParamsMismatch("point from a different curve")
        return scalar_mul(self.r, point).is_identity

    def scalar(self, value: int) -> FieldElement:
        return self.scalar_field.element(value)

    def __eq__(self, other):
        return (
            isinstance(other, CurveParams)
            and self.field == other.field
            and self.r == other.r
            and self.generator == other.generator
        )

    def __hash__(self):
        return hash((self.field.p, self.r))

    def __repr__(self):
        return f"CurveParams(p={self.field.p}, r={self.r}, h={self.h})"


# Named profiles. Generators are derived with a fixed seed so every build of
# the same profile pins the same point.
_PROFILE_NUMBERS = {
    "toy23": (23, 3, 8),
    "toy43": (43, 11, 4),
    "toy59": (59, 5, 12),
    "demo": (2147482867, 536870717, 4),
}

_GENERATOR_SEED = 0x5EED
_profile_cache: dict = {}


def curve_profile(name: str) -> CurveParams:
    """Build (and cache) one of the named curve profiles."""
    if name not in _PROFILE_NUMBERS:
        raise InvalidOperand(f"unknown curve profile {name!r} (have {sorted(_PROFILE_NUMBERS)})")
    if name not in _profile_cache:
        import random

        p, r, h = _PROFILE_NUMBERS[name]
        field = FieldParams(p)
        gen = find_subgroup_generator(field, r, h, random.Random(_GENERATOR_SEED))
        _profile_cache[name] = CurveParams(field, r, h, gen)
    return _profile_cache[name]


def profile_names():
    return sorted(_PROFILE_NUMBERS)
