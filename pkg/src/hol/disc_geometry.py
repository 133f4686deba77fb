"""Geometry of the open unit disc and its non-elliptic automorphisms.

Provides Moebius self-maps of the disc in the canonical form
``z -> rotation * (center - z) / (1 - conj(center) z)``, the
pseudo-hyperbolic and hyperbolic metrics, classification of a general
automorphism by its fixed points, reduction of a non-elliptic map to its
half-plane normal form (dilation ``w -> alpha w`` with ``alpha > 1``, or
translation ``w -> w + t`` with ``t > 0``), closed-form iterates, boundary
derivatives, the half-open fundamental domain and the boundary interval
whose translates tile the circle.

All values are plain complex numbers internally; the small wrapper types
validate domain invariants at construction. Every operation is pure and
accepts numpy arrays wherever a point argument is documented as complex.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import DegenerateIdentity, EllipticInput, FixedPointSingularity

__all__ = [
    "DiscPoint",
    "BoundaryPoint",
    "MoebiusAutomorphism",
    "GeneralAutomorphismParams",
    "HyperbolicForm",
    "ParabolicForm",
    "NonEllipticNormalForm",
    "NormalFormResult",
    "FundamentalDomain",
    "BoundaryArc",
    "BoundaryIntervalJ",
    "mobius_eval",
    "rho",
    "beta",
    "classify",
    "to_normal_form",
    "iterate_eval",
    "boundary_derivative",
    "quotient_index",
    "boundary_tile_J",
    "fundamental_domain",
    "half_plane",
    "half_plane_inverse",
]

#: Radius around a fixed point inside which evaluations raise
#: :class:`FixedPointSingularity` (the half-plane chart blows up there).
FIXED_POINT_TOL = 1e-12

#: Default tolerance separating the parabolic boundary case from the
#: hyperbolic/elliptic ones in :func:`classify`.
CLASSIFY_TOL = 1e-12


def _as_complex(z) -> complex:
    if isinstance(z, (DiscPoint, BoundaryPoint)):
        return z.value
    return complex(z)


@dataclass(frozen=True)
class DiscPoint:
    """A point of the open unit disc; construction enforces ``|value| < 1``."""

    value: complex

    def __post_init__(self):
        v = complex(self.value)
        if not abs(v) < 1.0:
            raise ValueError(f"DiscPoint requires |z| < 1, got |z| = {abs(v)!r}")
        object.__setattr__(self, "value", v)

    def __complex__(self) -> complex:
        return self.value


@dataclass(frozen=True)
class BoundaryPoint:
    """A point of the unit circle, stored as an angle in (-pi, pi].

    Storing the angle keeps the materialized value exactly unimodular;
    ``value`` is computed on demand.
    """

    angle: float

    def __post_init__(self):
        a = float(self.angle)
        a = math.remainder(a, 2.0 * math.pi)
        if a <= -math.pi:
            a += 2.0 * math.pi
        object.__setattr__(self, "angle", a)

    @property
    def value(self) -> complex:
        return cmath.exp(1j * self.angle)

    @classmethod
    def from_complex(cls, z, tol: float = 1e-9) -> "BoundaryPoint":
        z = complex(z)
        if abs(abs(z) - 1.0) > tol:
            raise ValueError(f"not a boundary point: |z| = {abs(z)!r}")
        return cls(cmath.phase(z))

    def __complex__(self) -> complex:
        return self.value


def _involution(w, z):
    """The basic involution interchanging 0 and ``w``."""
    return (w - z) / (1.0 - np.conj(w) * z)


@dataclass(frozen=True)
class MoebiusAutomorphism:
    """Disc automorphism ``z -> rotation * (center - z)/(1 - conj(center) z)``.

    ``rotation`` is unimodular (checked to 1e-14) and ``center`` interior.
    The map is an involution exactly when ``rotation == 1``.
    """

    rotation: complex
    center: complex

    def __post_init__(self):
        lam = complex(self.rotation)
        w = _as_complex(self.center)
        if abs(abs(lam) - 1.0) > 1e-14:
            raise ValueError(f"rotation must be unimodular, |rotation| = {abs(lam)!r}")
        if not abs(w) < 1.0:
            raise ValueError("center must lie in the open disc")
        object.__setattr__(self, "rotation", lam)
        object.__setattr__(self, "center", w)

    @classmethod
    def identity(cls) -> "MoebiusAutomorphism":
        return cls(-1.0, 0.0)

    @classmethod
    def from_matrix(cls, a, b, c, d) -> "MoebiusAutomorphism":
        """Canonical (rotation, center) pair of ``z -> (az+b)/(cz+d)``.

        The matrix must represent a disc automorphism.
        """
        if abs(a) == 0.0:
            raise ValueError("degenerate matrix for a disc automorphism")
        w = -b / a
        if abs(w) < 1e-300:
            lam = -a / d
        else:
            lam = (b / d) / w
        lam = lam / abs(lam)
        return cls(lam, w)

    def matrix(self) -> tuple[complex, complex, complex, complex]:
        lam, w = self.rotation, self.center
        return (-lam, lam * w, -np.conj(w), 1.0)

    def __call__(self, z):
        z = z.value if isinstance(z, (DiscPoint, BoundaryPoint)) else z
        return self.rotation * _involution(self.center, z)

    def inverse(self) -> "MoebiusAutomorphism":
        # inverse of lam*phi_w is z -> phi_w(conj(lam) z)
        lam, w = self.rotation, self.center
        return MoebiusAutomorphism(np.conj(lam), lam * w)

    def compose(self, other: "MoebiusAutomorphism") -> "MoebiusAutomorphism":
        """self after other, i.e. z -> self(other(z))."""
        a1, b1, c1, d1 = self.matrix()
        a2, b2, c2, d2 = other.matrix()
        return MoebiusAutomorphism.from_matrix(
            a1 * a2 + b1 * c2, a1 * b2 + b1 * d2,
            c1 * a2 + d1 * c2, c1 * b2 + d1 * d2,
        )

    def conjugate_by(self, sigma: "MoebiusAutomorphism") -> "MoebiusAutomorphism":
        """sigma o self o sigma^{-1}."""
        return sigma.compose(self.compose(sigma.inverse()))

    def derivative(self, z):
        """Complex derivative at ``z`` (any point off the pole 1/conj(center))."""
        z = _as_complex(z) if np.isscalar(z) or isinstance(z, (DiscPoint, BoundaryPoint)) else z
        w = self.center
        return self.rotation * (abs(w) ** 2 - 1.0) / (1.0 - np.conj(w) * z) ** 2

    def derivative_abs(self, z):
        """|derivative| at ``z``; equals (1-|center|^2)/|1-conj(center) z|^2."""
        z = _as_complex(z) if np.isscalar(z) or isinstance(z, (DiscPoint, BoundaryPoint)) else z
        w = self.center
        return (1.0 - abs(w) ** 2) / np.abs(1.0 - np.conj(w) * z) ** 2

    def fixed_points(self) -> tuple[complex, ...]:
        """Fixed points in the closed disc (one interior or 1-2 boundary)."""
        # lam*(w - z) = z*(1 - conj(w) z)
        lam, w = self.rotation, self.center
        a = np.conj(w)
        b = -(1.0 + lam)
        c = lam * w
        if abs(a) < 1e-300:
            # rotation about 0: fixed point 0 (identity excluded upstream)
            return (0.0,)
        disc = b * b - 4.0 * a * c
        sq = cmath.sqrt(disc)
        if abs(-b + sq) < abs(-b - sq):
            sq = -sq
        q = (-b + sq) / 2.0
        z1 = q / a
        z2 = c / q if abs(q) > 0 else z1
        roots = sorted({z1, z2}, key=lambda u: (u.real, u.imag))
        inside = [r for r in roots if abs(r) <= 1.0 + 1e-9]
        return tuple(inside)

    def params(self) -> "GeneralAutomorphismParams":
        return GeneralAutomorphismParams(cmath.phase(self.rotation), self.center)


@dataclass(frozen=True)
class GeneralAutomorphismParams:
    """Automorphism data ``z -> e^{i theta} (p - z)/(1 - conj(p) z)``."""

    theta: float
    p: complex

    def __post_init__(self):
        th = float(self.theta)
        th = math.remainder(th, 2.0 * math.pi)
        if th <= -math.pi:
            th += 2.0 * math.pi
        p = _as_complex(self.p)
        if not abs(p) < 1.0:
            raise ValueError("p must lie in the open disc")
        object.__setattr__(self, "theta", th)
        object.__setattr__(self, "p", p)

    def to_moebius(self) -> MoebiusAutomorphism:
        return MoebiusAutomorphism(cmath.exp(1j * self.theta), self.p)

    def __call__(self, z):
        return self.to_moebius()(z)


def mobius_eval(m: MoebiusAutomorphism, z) -> complex:
    """Evaluate ``m`` at a closed-disc point; rejects ``|z| > 1 + 1e-12``."""
    zv = _as_complex(z)
    if abs(zv) > 1.0 + 1e-12:
        raise ValueError(f"point outside the closed disc: |z| = {abs(zv)!r}")
    return m(zv)


def rho(z, w) -> float:
    """Pseudo-hyperbolic distance |(w - z)/(1 - conj(w) z)|."""
    zv, wv = _as_complex(z), _as_complex(w)
    return abs(_involution(wv, zv))


def beta(z, w) -> float:
    """Hyperbolic distance log((1 + rho)/(1 - rho))."""
    r = rho(z, w)
    return math.log1p(r) - math.log1p(-r)


# ---------------------------------------------------------------------------
# Classification and normal forms


def classify(params: Union[GeneralAutomorphismParams, MoebiusAutomorphism],
             tol: float = CLASSIFY_TOL) -> str:
    """Classify as ``'elliptic'``, ``'parabolic'`` or ``'hyperbolic'``.

    The map is hyperbolic when ``|p| > cos(theta/2)``, parabolic at equality
    (within ``tol``), elliptic below. The identity map is rejected.
    """
    if isinstance(params, MoebiusAutomorphism):
        params = params.params()
    p, th = params.p, params.theta
    if abs(p) < tol and abs(th - math.pi) < tol:
        raise DegenerateIdentity("the identity map has no fixed-point class")
    gap = abs(p) - math.cos(th / 2.0)
    if gap > tol:
        return "hyperbolic"
    if gap < -tol:
        return "elliptic"
    return "parabolic"


class NonEllipticNormalForm:
    """Base for the two half-plane normal forms."""

    kind: str

    def automorphism(self, n: int = 1) -> MoebiusAutomorphism:
        raise NotImplementedError

    @property
    def fixed_points(self) -> tuple[complex, ...]:
        raise NotImplementedError

    def iterate_centers(self, n):
        """Vectorized (rotation, center) arrays for iterate indices ``n``."""
        raise NotImplementedError


@dataclass(frozen=True)
class HyperbolicForm(NonEllipticNormalForm):
    """Normalized hyperbolic map: fixed points -1 (repulsive) and 1 (attractive).

    Conjugate to the half-plane dilation ``w -> alpha w`` with ``alpha > 1``;
    the n-th iterate is ``-phi_c`` with ``c = (1 - alpha^n)/(1 + alpha^n)``.
    """

    alpha: float

    def __post_init__(self):
        if not self.alpha > 1.0:
            raise ValueError("hyperbolic form requires alpha > 1")
        object.__setattr__(self, "alpha", float(self.alpha))

    kind = "hyperbolic"

    @property
    def fixed_points(self) -> tuple[complex, ...]:
        return (1.0 + 0.0j, -1.0 + 0.0j)

    @property
    def attractive_fixed_point(self) -> complex:
        return 1.0 + 0.0j

    def automorphism(self, n: int = 1) -> MoebiusAutomorphism:
        c = -math.tanh(0.5 * n * math.log(self.alpha))
        return MoebiusAutomorphism(-1.0, c)

    def iterate_centers(self, n):
        n = np.asarray(n, dtype=float)
        c = -np.tanh(0.5 * n * math.log(self.alpha))
        return np.full_like(c, -1.0, dtype=complex), c.astype(complex)


@dataclass(frozen=True)
class ParabolicForm(NonEllipticNormalForm):
    """Normalized parabolic map: unique fixed point 1.

    Conjugate to the half-plane translation ``w -> w + t`` with ``t > 0``;
    the n-th iterate is ``((nt-2i)/(nt+2i)) phi_{nt/(nt-2i)}``.
    """

    t: float

    def __post_init__(self):
        if not self.t > 0.0:
            raise ValueError("parabolic form requires t > 0")
        object.__setattr__(self, "t", float(self.t))

    kind = "parabolic"

    @property
    def fixed_points(self) -> tuple[complex, ...]:
        return (1.0 + 0.0j,)

    @property
    def attractive_fixed_point(self) -> complex:
        return 1.0 + 0.0j

    def automorphism(self, n: int = 1) -> MoebiusAutomorphism:
        if n == 0:
            return MoebiusAutomorphism.identity()
        nt = n * self.t
        lam = (nt - 2j) / (nt + 2j)
        w = nt / (nt - 2j)
        return MoebiusAutomorphism(lam / abs(lam), w)

    def iterate_centers(self, n):
        n = np.asarray(n, dtype=float)
        nt = n * self.t
        lam = np.where(n == 0, -1.0 + 0j, (nt - 2j) / (nt + 2j))
        lam = lam / np.abs(lam)
        w = np.where(n == 0, 0.0 + 0j, nt / np.where(n == 0, 1.0, nt - 2j))
        return lam, w


def half_plane(z):
    """Cayley chart h(z) = i (1+z)/(1-z) onto the upper half-plane."""
    z = _as_complex(z) if np.isscalar(z) or isinstance(z, (DiscPoint, BoundaryPoint)) else z
    return 1j * (1.0 + z) / (1.0 - z)


def half_plane_inverse(v):
    """Inverse Cayley chart, (v - i)/(v + i)."""
    return (v - 1j) / (v + 1j)


def iterate_eval(form: NonEllipticNormalForm, n: int, z):
    """Closed-form n-th iterate of the normal form at ``z`` (|z| <= 1).

    ``n`` may be any integer; negative indices give iterates of the inverse.
    """
    return form.automorphism(int(n))(z)


def boundary_derivative(form: NonEllipticNormalForm, n: int, w) -> float:
    """|d/dw of the n-th iterate| at a boundary point ``w`` off the fixed points."""
    wv = _as_complex(w)
    for fp in form.fixed_points:
        if abs(wv - fp) < FIXED_POINT_TOL:
            raise FixedPointSingularity(f"boundary derivative at fixed point {fp}")
    return float(form.automorphism(int(n)).derivative_abs(wv))


def quotient_index(form: NonEllipticNormalForm, z) -> int:
    """The unique ``n`` with ``phi^(-n)(z)`` in the fundamental domain.

    Interior points use the half-open convention ``1 <= |h| < alpha``
    (hyperbolic) and ``0 <= Re h < t`` (parabolic); boundary points land
    in the interval J under the same convention.
    """
    zv = _as_complex(z)
    for fp in form.fixed_points:
        if abs(zv - fp) < FIXED_POINT_TOL:
            raise FixedPointSingularity(f"quotient index at fixed point {fp}")
    h = half_plane(zv)
    if form.kind == "hyperbolic":
        n = math.floor(math.log(abs(h)) / math.log(form.alpha))
    else:
        n = math.floor(h.real / form.t)
    # Floating drift near a tile boundary can put the pullback just outside
    # the half-open window; nudge by one step when that happens.
    pull = half_plane(iterate_eval(form, -n, zv))
    if form.kind == "hyperbolic":
        r = abs(pull)
        if r < 1.0:
            n -= 1
        elif r >= form.alpha:
            n += 1
    else:
        x = pull.real
        if x < 0.0:
            n -= 1
        elif x >= form.t:
            n += 1
    return int(n)


@dataclass(frozen=True)
class FundamentalDomain:
    """Half-open fundamental domain of the normal form.

    Hyperbolic: ``1 <= |h(z)| < alpha``; parabolic: ``0 <= Re h(z) < t``.
    Every disc point off the fixed points has exactly one iterate index
    whose pullback lands here.
    """

    form: NonEllipticNormalForm

    @property
    def convention(self) -> str:
        if self.form.kind == "hyperbolic":
            return "1 <= |h(z)| < alpha"
        return "0 <= Re h(z) < t"

    def contains(self, z) -> bool:
        return quotient_index(self.form, z) == 0

    def project(self, z) -> complex:
        """Quotient map onto the domain: the orbit representative of ``z``."""
        n = quotient_index(self.form, z)
        return iterate_eval(self.form, -n, _as_complex(z))


def fundamental_domain(form: NonEllipticNormalForm) -> FundamentalDomain:
    return FundamentalDomain(form)


@dataclass(frozen=True)
class BoundaryArc:
    """Counterclockwise circle arc from angle ``theta0`` over ``dtheta > 0``."""

    theta0: float
    dtheta: float
    closed_start: bool
    closed_end: bool

    def angle(self, s):
        """Angle at arc parameter ``s`` in [0, 1]."""
        return self.theta0 + np.asarray(s, dtype=float) * self.dtheta

    def point(self, s):
        return np.exp(1j * self.angle(s))


@dataclass(frozen=True)
class BoundaryIntervalJ:
    """Boundary interval whose iterate translates tile the circle.

    Hyperbolic: the two arcs ``(phi(i), i]`` and ``[-i, phi(-i))``;
    parabolic: the single arc ``[-1, phi(-1))``. Endpoints follow the
    half-open convention of :func:`quotient_index`, so membership is
    exactly ``quotient_index == 0``.
    """

    form: NonEllipticNormalForm
    arcs: tuple[BoundaryArc, ...] = field(default=())

    def __post_init__(self):
        if self.arcs:
            return
        form = self.form
        if form.kind == "hyperbolic":
            phi_i = iterate_eval(form, 1, 1j)
            a = cmath.phase(phi_i)  # in (0, pi/2)
            upper = BoundaryArc(a, math.pi / 2.0 - a, False, True)
            lower = BoundaryArc(-math.pi / 2.0, math.pi / 2.0 - a, True, False)
            object.__setattr__(self, "arcs", (upper, lower))
        else:
            phi_m1 = iterate_eval(form, 1, -1.0 + 0j)
            end = cmath.phase(phi_m1)  # in (-pi, 0)
            object.__setattr__(
                self, "arcs", (BoundaryArc(math.pi, math.pi + end, True, False),)
            )

    @property
    def endpoints(self) -> tuple[BoundaryPoint, ...]:
        pts = []
        for arc in self.arcs:
            pts.append(BoundaryPoint(arc.theta0))
            pts.append(BoundaryPoint(arc.theta0 + arc.dtheta))
        return tuple(pts)

    @property
    def arc_length(self) -> float:
        return float(sum(arc.dtheta for arc in self.arcs))

    def contains(self, xi) -> bool:
        try:
            return quotient_index(self.form, xi) == 0
        except FixedPointSingularity:
            return False

    def gauss_nodes(self, n_per_arc: int = 64):
        """Gauss-Legendre nodes/weights in angle over each arc, concatenated.

        Returns ``(angles, weights)`` with ``sum(weights) == arc_length``.
        For the hyperbolic form the lower-arc nodes are the mirror images of
        the upper-arc ones, so conjugation symmetry is exact in quadrature.
        """
        from scipy.special import roots_legendre

        x, w = roots_legendre(int(n_per_arc))
        if self.form.kind == "hyperbolic":
            up = self.arcs[0]
            mid, half = up.theta0 + up.dtheta / 2.0, up.dtheta / 2.0
            ang_up = mid + half * x
            w_up = w * half
            angles = np.concatenate([ang_up, -ang_up])
            weights = np.concatenate([w_up, w_up])
        else:
            arc = self.arcs[0]
            mid, half = arc.theta0 + arc.dtheta / 2.0, arc.dtheta / 2.0
            angles = mid + half * x
            weights = w * half
        return angles, weights

    def sample(self, count: int, rng=None):
        """Boundary points in J, uniform in arc parameter (endpoints excluded)."""
        if rng is None:
            s = (np.arange(count) + 0.5) / count
        else:
            s = rng.uniform(0.0, 1.0, size=count)
        total = self.arc_length
        out = np.empty(count, dtype=complex)
        offsets = np.cumsum([0.0] + [a.dtheta / total for a in self.arcs])
        for i, arc in enumerate(self.arcs):
            mask = (s >= offsets[i]) & (s < offsets[i + 1])
            local = (s[mask] - offsets[i]) / (arc.dtheta / total)
            out[mask] = arc.point(np.clip(local, 1e-12, 1.0 - 1e-12))
        return out

    def angle_to_param(self, angle: float) -> float:
        """Global arc parameter in [0, 1) of a boundary angle inside J."""
        total = self.arc_length
        acc = 0.0
        for arc in self.arcs:
            rel = math.remainder(angle - arc.theta0, 2.0 * math.pi)
            if -1e-12 <= rel <= arc.dtheta + 1e-12:
                return (acc + min(max(rel, 0.0), arc.dtheta)) / total
            acc += arc.dtheta
        raise ValueError(f"angle {angle!r} is not in J")


def boundary_tile_J(form: NonEllipticNormalForm) -> BoundaryIntervalJ:
    """The boundary interval J associated with the normal form."""
    return BoundaryIntervalJ(form)


# ---------------------------------------------------------------------------
# Reduction of a general non-elliptic automorphism to its normal form


@dataclass(frozen=True)
class NormalFormResult:
    """Outcome of :func:`to_normal_form`.

    ``conjugator`` is a disc automorphism ``sigma`` with
    ``sigma o phi o sigma^{-1}`` equal to ``form`` when ``inverted`` is
    False, and ``sigma o phi^{-1} o sigma^{-1}`` equal to ``form`` when
    ``inverted`` is True (the parabolic translation class with t < 0 is
    only conjugate to t > 0 after inverting the map).
    """

    form: NonEllipticNormalForm
    conjugator: MoebiusAutomorphism
    inverted: bool = False

    def __iter__(self):
        return iter((self.form, self.conjugator))


def _geodesic_midpoint(z1: complex, z2: complex) -> complex:
    """Point of the geodesic with boundary endpoints z1, z2 nearest the origin."""
    if abs(z1 + z2) < 1e-12:
        return 0.0 + 0.0j
    # circle orthogonal to the unit circle through z1, z2:
    # Re(conj(z1) c) = 1 and Re(conj(z2) c) = 1
    a11, a12 = z1.real, z1.imag
    a21, a22 = z2.real, z2.imag
    det = a11 * a22 - a12 * a21
    if abs(det) < 1e-14:
        raise ValueError("degenerate fixed-point pair")
    cx = (a22 - a12) / det
    cy = (a11 - a21) / det
    c = complex(cx, cy)
    r = math.sqrt(abs(c) ** 2 - 1.0)
    return c * (1.0 - r / abs(c))


def _map_pair_to_plus_minus_one(z_plus: complex, z_minus: complex) -> MoebiusAutomorphism:
    """Disc automorphism sending z_plus -> 1 and z_minus -> -1."""
    a = _geodesic_midpoint(z_plus, z_minus)
    inv = MoebiusAutomorphism(1.0, a)
    u = inv(z_plus)
    lam = np.conj(u / abs(u))
    return MoebiusAutomorphism(lam * 1.0, a)  # z -> lam * phi_a(z)


def to_normal_form(
    params: Union[GeneralAutomorphismParams, MoebiusAutomorphism],
    tol: float = CLASSIFY_TOL,
) -> NormalFormResult:
    """Reduce a non-elliptic automorphism to its normal form.

    Returns the form (alpha > 1 or t > 0), the conjugating automorphism and
    an inversion flag (see :class:`NormalFormResult`). Raises
    :class:`EllipticInput` for elliptic maps.
    """
    if isinstance(params, MoebiusAutomorphism):
        moebius = params
        params = moebius.params()
    else:
        moebius = params.to_moebius()
    kind = classify(params, tol)
    if kind == "elliptic":
        raise EllipticInput("elliptic automorphisms have no non-elliptic normal form")

    fps = moebius.fixed_points()
    if kind == "hyperbolic":
        if len(fps) != 2:
            raise EllipticInput("hyperbolic map must have two boundary fixed points")
        z1, z2 = (f / abs(f) for f in fps)
        d1 = moebius.derivative_abs(z1)
        z_plus, z_minus = (z1, z2) if d1 < 1.0 else (z2, z1)
        sigma = _map_pair_to_plus_minus_one(z_plus, z_minus)
        alpha = 1.0 / moebius.derivative_abs(z_plus)
        return NormalFormResult(HyperbolicForm(alpha), sigma, False)

    # parabolic: unique boundary fixed point
    z_fix = fps[0] / abs(fps[0])
    sigma = _map_pair_to_plus_minus_one(z_fix, -z_fix)
    psi = moebius.conjugate_by(sigma)
    t_c = half_plane(psi(0.0)) - half_plane(0.0 + 0.0j)
    t = t_c.real
    if abs(t_c.imag) > 1e-8 * max(1.0, abs(t)):
        raise EllipticInput("conjugated map is not a real translation")
    if t < 0.0:
        return NormalFormResult(ParabolicForm(-t), sigma, True)
    return NormalFormResult(ParabolicForm(t), sigma, False)
