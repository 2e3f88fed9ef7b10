"""Lie structure of the unit-norm group: bracket, adjoint action, Killing form.

The pure quaternions form the tangent space at the identity of the group of
unit-norm elements.  The bracket here is the full commutator x*y - y*x (not
the half-commutator), so the basis relations carry a factor of two:

    [e1, e2] = 2*lambda1*e3
    [e2, e3] = 2*lambda3*e1
    [e3, e1] = 2*lambda2*e2

All 3x3 matrices act on vector coordinates (a1, a2, a3).  The diagonal metric
``eps = diag(l12, l13, l23)`` is preserved by the adjoint action of unit
elements, and the Killing form works out to -8 times the bilinear form, which
is what makes the all-positive families compact.
"""

from __future__ import annotations

import math

import numpy as np

from .core import GQuat, GVec3, ParamTriple, bilinear_f, _require_same_params
from .errors import NotPositiveFamily, NotUnitVector
from .matrices import Mat3

__all__ = [
    "metric_eps",
    "bracket",
    "adjoint_group",
    "adjoint_closed_form",
    "skew_of_axis",
    "adjoint_rodrigues",
    "ad_matrix",
    "killing_form",
    "killing_matrix",
    "is_compact",
]

# |f(axis, axis) - 1| tolerance for unit-vector preconditions.
_UNIT_AXIS_TOL = 1e-10


def metric_eps(params: ParamTriple) -> Mat3:
    """The diagonal metric diag(l12, l13, l23) on vector coordinates.

    Entries are plain products of the parameters, so the matrix is exact;
    off-diagonal entries are exactly zero.
    """
    return Mat3([
        [params.l12, 0.0, 0.0],
        [0.0, params.l13, 0.0],
        [0.0, 0.0, params.l23],
    ], params)


def bracket(x: GVec3, y: GVec3) -> GVec3:
    """Lie bracket [x, y], the bilinear extension of the basis relations.

    Coincides with the commutator x*y - y*x of the embedded pure quaternions
    (whose scalar parts cancel by symmetry of the bilinear form).
    """
    _require_same_params(x.params, y.params)
    l1, l2, l3 = x.params.as_tuple()
    return GVec3(
        2.0 * l3 * (x.a2 * y.a3 - x.a3 * y.a2),
        2.0 * l2 * (x.a3 * y.a1 - x.a1 * y.a3),
        2.0 * l1 * (x.a1 * y.a2 - x.a2 * y.a1),
        x.params,
    )


def adjoint_group(p: GQuat) -> Mat3:
    """Matrix of the conjugation action q -> p*q*p^(-1) on vector coordinates.

    Column j holds the coordinates of p*e_j*p^(-1), computed by actual
    conjugation, so the result is correct for any invertible p (conjugation is
    scale-invariant).  For unit p it agrees with ``adjoint_closed_form`` and
    preserves ``metric_eps`` with determinant one.  Raises ZeroNorm on null p.
    """
    pinv = p.inverse()
    cols = []
    for j in (1, 2, 3):
        r = p * GQuat.basis(j, p.params) * pinv
        cols.append((r.a1, r.a2, r.a3))
    return Mat3(np.array(cols, dtype=float).T, p.params)


def adjoint_closed_form(p: GQuat) -> Mat3:
    """The adjoint action written as polynomials in the components of p.

    These are the entries the conjugation action takes on unit quaternions,
    kept polynomial (no division by the norm), so for general p the matrix
    equals norm(p) times ``adjoint_group(p)``.  Consequently it transforms the
    metric by norm(p)^2 and has determinant norm(p)^3 for every p, unit or
    not.
    """
    l1, l2, l3 = p.params.as_tuple()
    a0, a1, a2, a3 = p.components
    return Mat3([
        [a0 * a0 + l1 * l2 * a1 * a1 - l1 * l3 * a2 * a2 - l2 * l3 * a3 * a3,
         2.0 * l1 * l3 * a1 * a2 - 2.0 * l3 * a0 * a3,
         2.0 * l2 * l3 * a1 * a3 + 2.0 * l3 * a0 * a2],
        [2.0 * l1 * l2 * a1 * a2 + 2.0 * l2 * a0 * a3,
         a0 * a0 - l1 * l2 * a1 * a1 + l1 * l3 * a2 * a2 - l2 * l3 * a3 * a3,
         2.0 * l2 * l3 * a2 * a3 - 2.0 * l2 * a0 * a1],
        [2.0 * l1 * l2 * a1 * a3 - 2.0 * l1 * a0 * a2,
         2.0 * l1 * l3 * a2 * a3 + 2.0 * l1 * a0 * a1,
         a0 * a0 - l1 * l2 * a1 * a1 - l1 * l3 * a2 * a2 + l2 * l3 * a3 * a3],
    ], p.params)


def skew_of_axis(s: GVec3) -> Mat3:
    """Lambda-weighted skew matrix of a direction vector.

    Satisfies eps @ S = -(S.T @ eps), and the matrix commutator of two such
    skews is the skew of the weighted cross product of their axes.  This is
    the generator appearing in the rotation-style decomposition of the
    adjoint action.
    """
    l1, l2, l3 = s.params.as_tuple()
    s1, s2, s3 = s.components
    return Mat3([
        [0.0, -l3 * s3, l3 * s2],
        [l2 * s3, 0.0, -l2 * s1],
        [-l1 * s2, l1 * s1, 0.0],
    ], s.params)


def adjoint_rodrigues(axis: GVec3, theta: float, *, axis_tol: float = _UNIT_AXIS_TOL) -> Mat3:
    """Adjoint of the half-angle element as I + sin(theta)*S + (1-cos(theta))*S^2.

    Defined for all-positive parameter families (where the bilinear form is
    positive definite) and a unit axis; equals
    adjoint_group(cos(theta/2) + axis*sin(theta/2)).
    """
    if not axis.params.is_positive:
        raise NotPositiveFamily(
            f"rotation decomposition needs all lambdas > 0, got {axis.params.as_tuple()}")
    ff = bilinear_f(axis, axis)
    if abs(ff - 1.0) > axis_tol:
        raise NotUnitVector(f"f(axis, axis) = {ff} != 1")
    s = skew_of_axis(axis)
    sa = np.asarray(s, dtype=float)
    out = np.eye(3) + math.sin(theta) * sa + (1.0 - math.cos(theta)) * (sa @ sa)
    return Mat3(out, axis.params)


def ad_matrix(x: GVec3) -> Mat3:
    """Matrix of y -> [x, y] on vector coordinates (twice the weighted skew)."""
    l1, l2, l3 = x.params.as_tuple()
    x1, x2, x3 = x.components
    return Mat3([
        [0.0, -2.0 * l3 * x3, 2.0 * l3 * x2],
        [2.0 * l2 * x3, 0.0, -2.0 * l2 * x1],
        [-2.0 * l1 * x2, 2.0 * l1 * x1, 0.0],
    ], x.params)


def killing_form(x: GVec3, y: GVec3) -> float:
    """Killing form: the trace of ad_matrix(x) @ ad_matrix(y).

    Computed from the trace definition; numerically it equals -8 times the
    bilinear form, which the test suite checks rather than assumes.
    """
    _require_same_params(x.params, y.params)
    ax = np.asarray(ad_matrix(x), dtype=float)
    ay = np.asarray(ad_matrix(y), dtype=float)
    return float(np.trace(ax @ ay))


def killing_matrix(params: ParamTriple) -> Mat3:
    """Gram matrix of the Killing form over the vector basis (e1, e2, e3)."""
    basis = [GVec3.basis(i, params) for i in (1, 2, 3)]
    return Mat3([[killing_form(a, b) for b in basis] for a in basis], params)


def is_compact(params: ParamTriple) -> bool:
    """Whether the unit-norm group of this family is compact.

    True exactly when all three parameters are positive; then the Killing
    form is negative definite on nonzero vectors.
    """
    return params.is_positive
