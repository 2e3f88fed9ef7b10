"""Polar decomposition, De Moivre powers, exponentials, matrix roots, periods.

An element is *elliptic* when its axis discriminant
D = l12*a1^2 + l13*a2^2 + l23*a3^2 is strictly positive; only then does the
circular decomposition ``p = sqrt(norm) * (cos(theta) + axis*sin(theta))``
exist with a real angle and a unit axis.  With indefinite parameter families
non-elliptic elements are common; they are rejected rather than given
hyperbolic decompositions.

Angles follow a single convention everywhere: theta = atan2(sqrt(D), a0),
which lands in [0, pi] and makes the round trip unambiguous.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

from .core import GQuat, GVec3, ParamTriple, bilinear_f
from .errors import NonElliptic, NonUnit, NotUnitVector, ZeroNorm, NoPeriod, CongruenceViolation
from .matrices import Mat4

__all__ = [
    "PolarForm",
    "RootSet",
    "to_polar",
    "demoivre_pow",
    "polar_matrix",
    "matrix_pow",
    "euler_exp",
    "euler_exp_matrix",
    "matrix_roots",
    "power_period",
    "scaled_power_relation",
    "UNIT_NORM_TOL",
    "UNIT_AXIS_TOL",
    "PERIOD_REL_TOL",
]

# |norm - 1| tolerance for operations restricted to unit quaternions.
UNIT_NORM_TOL = 1e-9
# |f(axis, axis) - 1| tolerance for unit-vector preconditions.
UNIT_AXIS_TOL = 1e-10
# Relative tolerance for recognizing 2*pi/theta as an integer.
PERIOD_REL_TOL = 1e-9


@dataclass(frozen=True)
class PolarForm:
    """Decomposition modulus * (cos(theta) + axis*sin(theta)).

    ``modulus`` is the positive square root of the norm and ``theta`` lies in
    [0, pi].  ``axis`` is a unit vector under the bilinear form, except for
    pure scalars, where any axis would do: then ``axis`` is None and theta is
    0 or pi.
    """

    modulus: float
    theta: float
    axis: GVec3 | None
    params: ParamTriple

    def compose(self) -> GQuat:
        """Rebuild the quaternion this form decomposes."""
        c = self.modulus * math.cos(self.theta)
        if self.axis is None:
            return GQuat.scalar(c, self.params)
        s = self.modulus * math.sin(self.theta)
        return GQuat(c, s * self.axis.a1, s * self.axis.a2, s * self.axis.a3, self.params)


@dataclass(frozen=True)
class RootSet:
    """All nth roots of a unit-quaternion matrix, indexed k = 0..degree-1."""

    degree: int
    roots: tuple[Mat4, ...]


def _discriminant(p: GQuat) -> float:
    pr = p.params
    return pr.l12 * p.a1 * p.a1 + pr.l13 * p.a2 * p.a2 + pr.l23 * p.a3 * p.a3


def to_polar(p: GQuat) -> PolarForm:
    """Decompose an elliptic quaternion into modulus, angle and unit axis.

    theta = atan2(sqrt(D), a0) in [0, pi]; axis = vector part / sqrt(D).
    Pure scalars get theta 0 or pi with axis None instead of a fabricated
    axis.  Raises ZeroNorm when the norm is not positive and NonElliptic when
    D <= 0 for a non-scalar.
    """
    if p.a1 == 0.0 and p.a2 == 0.0 and p.a3 == 0.0:
        if abs(p.a0) <= math.sqrt(p.zero_norm_eps()):
            raise ZeroNorm("zero quaternion has no polar form")
        theta = 0.0 if p.a0 > 0 else math.pi
        return PolarForm(abs(p.a0), theta, None, p.params)

    n = p.norm()
    if n <= p.zero_norm_eps():
        raise ZeroNorm(f"norm {n} is not positive; no real modulus exists")
    d = _discriminant(p)
    if d <= 0.0:
        raise NonElliptic(f"axis discriminant {d} is not positive; element is not elliptic")

    sd = math.sqrt(d)
    theta = math.atan2(sd, p.a0)
    axis = GVec3(p.a1 / sd, p.a2 / sd, p.a3 / sd, p.params)
    return PolarForm(math.sqrt(n), theta, axis, p.params)


def demoivre_pow(p: GQuat, n: int) -> GQuat:
    """Integer power via the angle map: modulus^n * (cos(n*theta) + axis*sin(n*theta)).

    Works for negative n as well (cosine is even, sine odd, and the modulus
    is positive).  Requires an elliptic input; pure scalars are rejected.
    """
    _require_int(n)
    form = to_polar(p)
    if form.axis is None:
        raise NonElliptic("pure scalar has no polar axis; power by angle is undefined")
    m = form.modulus ** n
    c = m * math.cos(n * form.theta)
    s = m * math.sin(n * form.theta)
    ax = form.axis
    return GQuat(c, s * ax.a1, s * ax.a2, s * ax.a3, p.params)


def polar_matrix(axis: GVec3, theta: float) -> Mat4:
    """Left-multiplication matrix of cos(theta) + axis*sin(theta), unit axis.

    Written directly in terms of the angle so that substituting n*theta gives
    the nth power and (theta + 2*pi*k)/n gives the nth roots.
    """
    l1, l2, l3 = axis.params.as_tuple()
    p1, p2, p3 = axis.components
    c = math.cos(theta)
    s = math.sin(theta)
    return Mat4([
        [c, -l1 * l2 * p1 * s, -l1 * l3 * p2 * s, -l2 * l3 * p3 * s],
        [p1 * s, c, -l3 * p3 * s, l3 * p2 * s],
        [p2 * s, l2 * p3 * s, c, -l2 * p1 * s],
        [p3 * s, -l1 * p2 * s, l1 * p1 * s, c],
    ], axis.params)


def _require_int(n) -> None:
    if not isinstance(n, numbers.Integral):
        raise TypeError(f"exponent must be an integer, got {type(n).__name__}")


def _unit_polar(p: GQuat, unit_tol: float) -> PolarForm:
    n = p.norm()
    if abs(n - 1.0) > unit_tol:
        raise NonUnit(f"norm {n} != 1; operation is defined for unit quaternions")
    form = to_polar(p)
    if form.axis is None:
        raise NonElliptic("pure scalar has no polar axis")
    return form


def matrix_pow(p: GQuat, n: int, *, unit_tol: float = UNIT_NORM_TOL) -> Mat4:
    """nth power of the left-multiplication matrix of a unit elliptic quaternion.

    Computed as the polar matrix at angle n*theta (negative n included via
    the even/odd symmetry of cosine and sine), never by repeated numeric
    multiplication or inversion.
    """
    _require_int(n)
    form = _unit_polar(p, unit_tol)
    return polar_matrix(form.axis, n * form.theta)


def euler_exp(v: GVec3, theta: float, *, axis_tol: float = UNIT_AXIS_TOL) -> GQuat:
    """Exponential cos(theta) + v*sin(theta) of a unit pure direction.

    ``v`` must satisfy f(v, v) = 1; such a vector squares to -1 in the
    algebra, making the exponential series collapse to cosine and sine.
    """
    if abs(bilinear_f(v, v) - 1.0) > axis_tol:
        raise NotUnitVector(f"f(v, v) = {bilinear_f(v, v)} != 1")
    c = math.cos(theta)
    s = math.sin(theta)
    return GQuat(c, s * v.a1, s * v.a2, s * v.a3, v.params)


def euler_exp_matrix(axis: GVec3, theta: float, *, axis_tol: float = UNIT_AXIS_TOL) -> Mat4:
    """Matrix form of the exponential: cos(theta)*I + sin(theta)*P.

    P is the left-multiplication matrix of the unit pure direction; it
    satisfies P @ P = -I, so the matrix series also collapses.
    """
    if abs(bilinear_f(axis, axis) - 1.0) > axis_tol:
        raise NotUnitVector(f"f(axis, axis) = {bilinear_f(axis, axis)} != 1")
    return polar_matrix(axis, theta)


def matrix_roots(p: GQuat, n: int, *, unit_tol: float = UNIT_NORM_TOL) -> RootSet:
    """All n matrix solutions of X^n = left_matrix(p) for unit elliptic p.

    Root k is the polar matrix at angle (theta + 2*pi*k)/n with the same
    axis, k = 0..n-1.
    """
    _require_int(n)
    if n < 1:
        raise ValueError(f"root degree must be >= 1, got {n}")
    form = _unit_polar(p, unit_tol)
    roots = tuple(
        polar_matrix(form.axis, (form.theta + 2.0 * math.pi * k) / n)
        for k in range(n)
    )
    return RootSet(degree=n, roots=roots)


def power_period(p: GQuat, *, unit_tol: float = UNIT_NORM_TOL,
                 period_rel_tol: float = PERIOD_REL_TOL) -> int | None:
    """Smallest m >= 2 with p^(k+m) = p^k for all k, if the angle admits one.

    Exists exactly when 2*pi/theta is an integer; detected within a relative
    tolerance because theta comes out of atan2.  Returns None otherwise.
    """
    form = _unit_polar(p, unit_tol)
    ratio = 2.0 * math.pi / form.theta
    m = round(ratio)
    if m >= 2 and abs(ratio - m) < period_rel_tol * ratio:
        return m
    return None


def scaled_power_relation(p: GQuat, n: int, s: int, *,
                          unit_tol: float = UNIT_NORM_TOL,
                          period_rel_tol: float = PERIOD_REL_TOL) -> GQuat:
    """Reduce p^n to modulus^(n-s) * p^s using the period of the unit part.

    Requires the normalized quaternion p/modulus to have an integer power
    period m and n = s (mod m); under those conditions the returned value
    equals demoivre_pow(p, n).
    """
    _require_int(n)
    _require_int(s)
    form = to_polar(p)
    if form.axis is None:
        raise NonElliptic("pure scalar has no polar axis")
    ratio = 2.0 * math.pi / form.theta
    m = round(ratio)
    if not (m >= 2 and abs(ratio - m) < period_rel_tol * ratio):
        raise NoPeriod(f"2*pi/theta = {ratio} is not an integer >= 2")
    if (n - s) % m != 0:
        raise CongruenceViolation(f"{n} != {s} (mod {m})")
    return demoivre_pow(p, s).scale(form.modulus ** (n - s))
