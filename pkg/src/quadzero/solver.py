"""Locates all zeros of q inside its bounding disk.

Strategy: circumscribe the disk D(0, R) with a square, subdivide it as a
quadtree, and prune any cell where a Lipschitz estimate certifies |q| > 0.
Surviving max-depth cells get a battery of damped Newton starts on the
equivalent 2-real-equation system; accepted points are deduplicated,
classified by orientation, and cross-checked against the argument
principle on C(0, R+1).

The pruning bound certifies exclusions only; inclusion confidence comes
from the winding consistency check.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional

from .bounds import BoundSource, CountBound, DiskBound, count_bound, radius_bound
from .contour import Circle, winding_number
from .errors import (
    BoundUnavailable,
    DegenerateJacobian,
    HypothesisViolation,
    NumericalError,
)
from .model import (
    HarmonicQuadrinomial,
    OrientationClass,
    analytic_derivative,
    classify_point,
    coanalytic_derivative,
    evaluate,
    jacobian,
)

_NEWTON_CAP = 100


@dataclass(frozen=True)
class SolveConfig:
    accept_tol: float = 1e-10
    merge_radius: Optional[float] = None  # default 1e-7 * max(1, R)
    max_depth: int = 12
    extra_starts: int = 8
    seed: int = 0
    singular_tol: float = 1e-12

    def __post_init__(self):
        if self.accept_tol <= 0 or self.singular_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.merge_radius is not None and self.merge_radius <= 0:
            raise ValueError("merge_radius must be positive")


@dataclass(frozen=True)
class ZeroRecord:
    location: complex
    residual: float
    jacobian: float
    orientation: OrientationClass
    multiplicity_hint: int = 1


@dataclass(frozen=True)
class ZeroSetReport:
    zeros: tuple[ZeroRecord, ...]
    count: int
    n_plus: int
    n_minus: int
    n_singular: int
    bound: Optional[CountBound]
    disk: DiskBound
    winding_check: str  # "passed" | "failed" | "inconclusive"
    winding: Optional[int] = None


def real_system(p: HarmonicQuadrinomial, z: complex) -> tuple[float, float]:
    """(Re q(z), Im q(z)); both vanish iff q(z) = 0."""
    v = evaluate(p, z)
    return (v.real, v.imag)


def newton_step(
    p: HarmonicQuadrinomial, z: complex, max_step: float = math.inf
) -> complex:
    """One damped Newton update on the real 2x2 system, in complex form.

    Solving fz*d + fzb*conj(d) = -q(z) with fz = h'(z), fzb = conj(g'(z))
    gives d = (fzb*conj(q) - conj(fz)*q) / J where J is the Jacobian of
    the real system.
    """
    fz = analytic_derivative(p, z)
    fzb = coanalytic_derivative(p, z).conjugate()
    j = (fz.real**2 + fz.imag**2) - (fzb.real**2 + fzb.imag**2)
    mag = fz.real**2 + fz.imag**2 + fzb.real**2 + fzb.imag**2
    if abs(j) <= 1e-14 * max(1.0, mag):
        raise DegenerateJacobian(f"Jacobian {j:.3e} below degeneracy floor at {z!r}")
    v = evaluate(p, z)
    d = (fzb * v.conjugate() - fz.conjugate() * v) / j
    step = abs(d)
    if step > max_step:
        d *= max_step / step
    return z + d


def _gradient_bound(p: HarmonicQuadrinomial, rho: float) -> float:
    """Upper bound for |dq/dz| + |dq/dzbar| on |z| <= rho."""
    return (
        abs(p.b) * p.k * rho ** (p.k - 1)
        + 1.0
        + p.n * rho ** (p.n - 1)
        + abs(p.c) * p.m * rho ** (p.m - 1)
    )


def _newton_polish(
    p: HarmonicQuadrinomial,
    z: complex,
    max_step: float,
    accept_tol: float,
    escape_radius: float,
) -> Optional[complex]:
    for _ in range(_NEWTON_CAP):
        v = evaluate(p, z)
        if abs(v) <= accept_tol:
            return z
        try:
            z = newton_step(p, z, max_step)
        except DegenerateJacobian:
            return None
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            return None
        if abs(z) > escape_radius:
            return None
    if abs(evaluate(p, z)) <= accept_tol:
        return z
    return None


def _cluster(points, radius):
    """Greedy dedup: deterministic order, representative = smallest residual."""
    clusters = []  # [rep, residual, members]
    for z, res in points:
        for cl in clusters:
            if abs(z - cl[0]) <= radius:
                cl[2].append(z)
                if res < cl[1]:
                    cl[0], cl[1] = z, res
                break
        else:
            clusters.append([z, res, [z]])
    return clusters


def find_zeros(
    p: HarmonicQuadrinomial, cfg: SolveConfig = SolveConfig()
) -> ZeroSetReport:
    disk = radius_bound(p)
    if disk.source is BoundSource.UNAVAILABLE:
        raise BoundUnavailable(
            "no zero-inclusion disk available (k = n with |b| = 1)"
        )
    r_disk = disk.radius
    merge_radius = (
        cfg.merge_radius
        if cfg.merge_radius is not None
        else 1e-7 * max(1.0, r_disk)
    )

    # Quadtree over the circumscribing square [-R, R]^2.  Depth-first,
    # children pushed in fixed order, so leaf order is deterministic.
    leaves = []
    stack = [(0j, r_disk, 0)]
    while stack:
        center, half, depth = stack.pop()
        diag = half * math.sqrt(2.0)
        qc = abs(evaluate(p, center))
        if qc > _gradient_bound(p, abs(center) + diag) * diag:
            continue  # certified zero-free
        if depth >= cfg.max_depth:
            leaves.append((center, half))
            continue
        h2 = 0.5 * half
        d2 = depth + 1
        stack.append((center + complex(h2, h2), h2, d2))
        stack.append((center + complex(-h2, h2), h2, d2))
        stack.append((center + complex(h2, -h2), h2, d2))
        stack.append((center + complex(-h2, -h2), h2, d2))

    escape_radius = r_disk + 1.0
    candidates = [(0j, 0.0)]  # q(0) = 0 identically: every term has z or zbar
    for idx, (center, half) in enumerate(leaves):
        rng = random.Random(cfg.seed * 0x9E3779B1 + idx)
        starts = [
            center,
            center + complex(half, half),
            center + complex(-half, half),
            center + complex(half, -half),
            center + complex(-half, -half),
        ]
        for _ in range(cfg.extra_starts):
            starts.append(
                center
                + complex(
                    rng.uniform(-half, half), rng.uniform(-half, half)
                )
            )
        max_step = 2.0 * half * math.sqrt(2.0)
        for z0 in starts:
            z = _newton_polish(p, z0, max_step, cfg.accept_tol, escape_radius)
            if z is not None:
                candidates.append((z, abs(evaluate(p, z))))

    # Two-stage dedup: first absorb Newton jitter at a tight radius, then
    # merge at merge_radius; the second stage's cluster size feeds the
    # multiplicity hint.
    candidates.sort(key=lambda t: (t[0].real, t[0].imag, t[1]))
    jitter = min(1e-10 * max(1.0, r_disk), 0.5 * merge_radius)
    stage1 = [(cl[0], cl[1]) for cl in _cluster(candidates, jitter)]
    stage1.sort(key=lambda t: (t[0].real, t[0].imag, t[1]))
    records = []
    for rep, res, members in _cluster(stage1, merge_radius):
        records.append(
            ZeroRecord(
                location=rep,
                residual=res,
                jacobian=jacobian(p, rep),
                orientation=classify_point(p, rep, cfg.singular_tol),
                multiplicity_hint=len(members),
            )
        )
    records.sort(key=lambda r: (r.location.real, r.location.imag))

    n_plus = sum(
        1 for r in records if r.orientation is OrientationClass.SENSE_PRESERVING
    )
    n_minus = sum(
        1 for r in records if r.orientation is OrientationClass.SENSE_REVERSING
    )
    n_singular = len(records) - n_plus - n_minus

    winding = None
    if n_singular > 0:
        # Argument-principle hypothesis (no singular zeros) is violated.
        winding_check = "inconclusive"
    else:
        try:
            report = winding_number(p, Circle(0j, r_disk + 1.0))
            winding = report.winding
            winding_check = "passed" if winding == n_plus - n_minus else "failed"
        except NumericalError:
            winding_check = "inconclusive"

    try:
        bound = count_bound(p)
    except HypothesisViolation:
        bound = None

    return ZeroSetReport(
        zeros=tuple(records),
        count=len(records),
        n_plus=n_plus,
        n_minus=n_minus,
        n_singular=n_singular,
        bound=bound,
        disk=disk,
        winding_check=winding_check,
        winding=winding,
    )


def count_zeros(p: HarmonicQuadrinomial, cfg: SolveConfig = SolveConfig()) -> int:
    return find_zeros(p, cfg).count
