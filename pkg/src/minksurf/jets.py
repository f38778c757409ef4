"""Forward-mode differentiation with second-order bivariate jets.

A :class:`Jet2` carries a value together with its first and second partial
derivatives with respect to two independent variables u and v.  Arithmetic
propagates the truncated Taylor algebra, so derivatives of any composite
expression are exact up to rounding -- no step-size error.  One-variable
profile functions are evaluated on jets seeded in u or v alone; the unused
variable's slots stay identically zero.

Mixed partials occupy a single ``duv`` slot; symmetry of second derivatives
is built into the representation rather than checked after the fact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from .errors import DomainError
from .minkowski import Vec4M

Scalar = Union[int, float]


@dataclass(frozen=True, slots=True)
class Jet2:
    """Value and partial derivatives (du, dv, duu, duv, dvv) at a point."""

    val: float
    du: float = 0.0
    dv: float = 0.0
    duu: float = 0.0
    duv: float = 0.0
    dvv: float = 0.0

    # -- constructors -------------------------------------------------

    @staticmethod
    def constant(c: Scalar) -> "Jet2":
        return Jet2(float(c))

    @staticmethod
    def seed_u(t: Scalar) -> "Jet2":
        return Jet2(float(t), du=1.0)

    @staticmethod
    def seed_v(t: Scalar) -> "Jet2":
        return Jet2(float(t), dv=1.0)

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(x: Union["Jet2", Scalar]) -> "Jet2":
        return x if isinstance(x, Jet2) else Jet2(float(x))

    def __add__(self, other: Union["Jet2", Scalar]) -> "Jet2":
        o = Jet2._coerce(other)
        return Jet2(self.val + o.val, self.du + o.du, self.dv + o.dv,
                    self.duu + o.duu, self.duv + o.duv, self.dvv + o.dvv)

    __radd__ = __add__

    def __sub__(self, other: Union["Jet2", Scalar]) -> "Jet2":
        o = Jet2._coerce(other)
        return Jet2(self.val - o.val, self.du - o.du, self.dv - o.dv,
                    self.duu - o.duu, self.duv - o.duv, self.dvv - o.dvv)

    def __rsub__(self, other: Union["Jet2", Scalar]) -> "Jet2":
        return Jet2._coerce(other).__sub__(self)

    def __neg__(self) -> "Jet2":
        return Jet2(-self.val, -self.du, -self.dv, -self.duu, -self.duv, -self.dvv)

    def __mul__(self, other: Union["Jet2", Scalar]) -> "Jet2":
        o = Jet2._coerce(other)
        a, b = self, o
        return Jet2(
            a.val * b.val,
            a.du * b.val + a.val * b.du,
            a.dv * b.val + a.val * b.dv,
            a.duu * b.val + 2.0 * a.du * b.du + a.val * b.duu,
            a.duv * b.val + a.du * b.dv + a.dv * b.du + a.val * b.duv,
            a.dvv * b.val + 2.0 * a.dv * b.dv + a.val * b.dvv,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Union["Jet2", Scalar]) -> "Jet2":
        return self * reciprocal(Jet2._coerce(other))

    def __rtruediv__(self, other: Union["Jet2", Scalar]) -> "Jet2":
        return Jet2._coerce(other) * reciprocal(self)

    def __pow__(self, p: Scalar) -> "Jet2":
        return powr(self, float(p))


def _chain(x: Jet2, f0: float, f1: float, f2: float) -> Jet2:
    """Compose an outer scalar function given f(x), f'(x), f''(x)."""
    return Jet2(
        f0,
        f1 * x.du,
        f1 * x.dv,
        f2 * x.du * x.du + f1 * x.duu,
        f2 * x.du * x.dv + f1 * x.duv,
        f2 * x.dv * x.dv + f1 * x.dvv,
    )


def sin(x: Jet2) -> Jet2:
    s, c = math.sin(x.val), math.cos(x.val)
    return _chain(x, s, c, -s)


def cos(x: Jet2) -> Jet2:
    s, c = math.sin(x.val), math.cos(x.val)
    return _chain(x, c, -s, -c)


def sqrt(x: Jet2) -> Jet2:
    if x.val <= 0.0:
        raise DomainError("sqrt", x.val, "argument > 0")
    r = math.sqrt(x.val)
    inv = 0.5 / r
    return _chain(x, r, inv, -0.5 * inv / x.val)


def ln(x: Jet2) -> Jet2:
    if x.val <= 0.0:
        raise DomainError("ln", x.val, "argument > 0")
    inv = 1.0 / x.val
    return _chain(x, math.log(x.val), inv, -inv * inv)


def exp(x: Jet2) -> Jet2:
    e = math.exp(x.val)
    return _chain(x, e, e, e)


def sinh(x: Jet2) -> Jet2:
    s, c = math.sinh(x.val), math.cosh(x.val)
    return _chain(x, s, c, s)


def cosh(x: Jet2) -> Jet2:
    s, c = math.sinh(x.val), math.cosh(x.val)
    return _chain(x, c, s, c)


def reciprocal(x: Jet2) -> Jet2:
    if x.val == 0.0:
        raise DomainError("reciprocal", x.val, "argument != 0")
    inv = 1.0 / x.val
    return _chain(x, inv, -inv * inv, 2.0 * inv * inv * inv)


def powr(x: Jet2, p: float) -> Jet2:
    """x**p for a real exponent; requires x > 0."""
    if x.val <= 0.0:
        raise DomainError("pow-by-real", x.val, "argument > 0")
    f0 = x.val ** p
    f1 = p * x.val ** (p - 1.0)
    f2 = p * (p - 1.0) * x.val ** (p - 2.0)
    return _chain(x, f0, f1, f2)


def powi(x: Jet2, n: int) -> Jet2:
    """x**n for an integer exponent; any base (nonzero when n < 0)."""
    if n < 0:
        return reciprocal(powi(x, -n))
    result = Jet2.constant(1.0)
    base = x
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def log_abs(x: Jet2) -> Jet2:
    """ln |x| for x != 0; d/dx ln|x| = 1/x on either side of zero."""
    if x.val == 0.0:
        raise DomainError("log-abs", x.val, "argument != 0")
    inv = 1.0 / x.val
    return _chain(x, math.log(abs(x.val)), inv, -inv * inv)


_ELEMENTARY: dict[str, Callable[[Jet2], Jet2]] = {
    "sin": sin,
    "cos": cos,
    "sqrt": sqrt,
    "ln": ln,
    "exp": exp,
    "reciprocal": reciprocal,
}


def jet_apply(tag: str, x: Jet2, exponent: float | None = None) -> Jet2:
    """Apply a tagged elementary function to a jet.

    Tags: sin, cos, sqrt, ln, exp, reciprocal, pow-by-real (the last
    requires ``exponent``).
    """
    if tag == "pow-by-real":
        if exponent is None:
            raise DomainError("pow-by-real", math.nan, "exponent required")
        return powr(x, exponent)
    try:
        f = _ELEMENTARY[tag]
    except KeyError:
        raise DomainError(tag, x.val, "a known elementary-function tag") from None
    return f(x)


@dataclass(frozen=True, slots=True)
class Jet2Vec4:
    """Four jet components in the orthonormal basis of R^4_1."""

    x1: Jet2
    x2: Jet2
    x3: Jet2
    x4: Jet2

    def value(self) -> Vec4M:
        return Vec4M(self.x1.val, self.x2.val, self.x3.val, self.x4.val)

    def d_u(self) -> Vec4M:
        return Vec4M(self.x1.du, self.x2.du, self.x3.du, self.x4.du)

    def d_v(self) -> Vec4M:
        return Vec4M(self.x1.dv, self.x2.dv, self.x3.dv, self.x4.dv)

    def d_uu(self) -> Vec4M:
        return Vec4M(self.x1.duu, self.x2.duu, self.x3.duu, self.x4.duu)

    def d_uv(self) -> Vec4M:
        return Vec4M(self.x1.duv, self.x2.duv, self.x3.duv, self.x4.duv)

    def d_vv(self) -> Vec4M:
        return Vec4M(self.x1.dvv, self.x2.dvv, self.x3.dvv, self.x4.dvv)


def vec_from_null_jets(z1: Jet2, z2: Jet2, eta1: Jet2, eta2: Jet2) -> Jet2Vec4:
    """Assemble a Jet2Vec4 from pseudo-orthonormal components.

    The basis change is linear, so it commutes with differentiation and
    is applied slot-wise.
    """
    s = math.sqrt(0.5)
    return Jet2Vec4(z1, z2, (eta1 - eta2) * s, (eta1 + eta2) * s)
