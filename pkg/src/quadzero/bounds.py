"""Zero-inclusion disks and zero-count bounds for the quadrinomial family.

The primary route builds the radius equation |b|x^(k+1) - (|b|+|c|)x^k + |c| = 0
(or its |c| <= 1 variant with |c| replaced by 1), deflates the trivial root
x = 1, and isolates the remaining positive root.  Outside the hypotheses
(b, c nonzero and k > n) a cruder triangle-inequality disk is produced so
parameter sweeps never stall; the one genuinely unbounded-looking case
(k = n with |b| = 1) is reported as unavailable.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import HypothesisViolation
from .model import HarmonicQuadrinomial
from .realroots import RealPoly, deflate_at_one, positive_root_bracketed


class BoundSource(enum.Enum):
    THM31 = "Thm31"
    THM32 = "Thm32"
    FALLBACK_CAUCHY = "FallbackCauchy"
    UNAVAILABLE = "Unavailable"


class CountBranch(enum.Enum):
    B_ZERO = "BZero"
    B_NONZERO_CONJECTURAL = "BNonzeroConjectural"
    B_NONZERO_WILMSHURST = "BNonzeroWilmshurst"


@dataclass(frozen=True)
class DiskBound:
    """Closed disk D(0, radius) containing every zero of q.

    delta is the non-unit positive root of the radius equation when the
    theorem route applies.  radius is +inf when source is UNAVAILABLE.
    """

    radius: float
    delta: Optional[float]
    source: BoundSource


@dataclass(frozen=True)
class CountBound:
    upper: int
    upper_is_proven: bool
    lower: int
    branch: CountBranch


def radius_polynomial(p: HarmonicQuadrinomial) -> tuple[RealPoly, BoundSource]:
    """The undeflated radius equation for instances meeting b,c != 0, k > n.

    Both variants vanish identically at x = 1 by construction (the middle
    coefficient is minus the sum of the outer two).
    """
    if p.b == 0.0 or p.c == 0.0 or not p.k > p.n:
        raise HypothesisViolation(
            "Theorems 3.1/3.2 require b != 0, c != 0 and k > n"
        )
    bb, cc = abs(p.b), abs(p.c)
    if cc > 1.0:
        const, source = cc, BoundSource.THM31
    else:
        const, source = 1.0, BoundSource.THM32
    coeffs = [const] + [0.0] * (p.k - 1) + [-(bb + const), bb]
    return RealPoly(tuple(coeffs)), source


def _majorant_root(p: HarmonicQuadrinomial) -> float:
    """Positive root of |b|x^k - x^n - |c|x^m - x (requires b != 0, k > n).

    By the triangle inequality |q(z)| >= |b||z|^k - |z|^n - |c||z|^m - |z|,
    so every zero of q has modulus at most this root.  The coefficient
    sequence has exactly one sign change, hence a unique positive root.
    """
    coeffs = [0.0] * (p.k + 1)
    coeffs[p.k] = abs(p.b)
    coeffs[p.n] -= 1.0
    coeffs[p.m] -= abs(p.c)
    coeffs[1] -= 1.0
    return positive_root_bracketed(RealPoly(tuple(coeffs))).value


def radius_bound(p: HarmonicQuadrinomial) -> DiskBound:
    """Zero-inclusion disk; hypothesis checks route internally.

    Fallbacks (all from termwise triangle inequalities on |z| >= 1):
      - b = 0 or k < n: the degree-n co-analytic term dominates,
        R = max(1, |b| + |c| + 1).
      - k > n with c = 0: |b||z|^k <= |z|^n + |z| <= 2|z|^n,
        R = max(1, (2/|b|)^(1/(k-n))).
      - k = n, |b| != 1: |b z^k + conj(z)^k| >= ||b|-1| |z|^k,
        R = max(1, (|c|+1)/||b|-1|).
      - k = n, |b| = 1: no disk from these estimates; UNAVAILABLE.
    """
    bb, cc = abs(p.b), abs(p.c)
    if p.b != 0.0 and p.c != 0.0 and p.k > p.n:
        poly, source = radius_polynomial(p)
        delta = positive_root_bracketed(deflate_at_one(poly)).value
        if p.k == 3:
            # The radius equation rests on the termwise comparison
            # x + x^n + x^m <= x^(k-1) + ... + x + 1 (x >= 1), which
            # needs three distinct geometric-sum terms and so k >= 4.
            # At k = 3 (forcing n = 2, m = 1) the left side is
            # x^2 + 2x > x^2 + x + 1, and the equation's root can
            # undershoot a real zero of q.  Guard with the direct
            # majorant |b|x^k - x^n - |c|x^m - x, whose single positive
            # root always bounds |z| for any zero.
            guard = _majorant_root(p)
            if guard > delta:
                return DiskBound(
                    max(1.0, guard), guard, BoundSource.FALLBACK_CAUCHY
                )
        return DiskBound(max(1.0, delta), delta, source)
    if p.b == 0.0 or p.k < p.n:
        return DiskBound(max(1.0, bb + cc + 1.0), None, BoundSource.FALLBACK_CAUCHY)
    if p.k > p.n:  # b != 0, c == 0
        r = (2.0 / bb) ** (1.0 / (p.k - p.n))
        return DiskBound(max(1.0, r), None, BoundSource.FALLBACK_CAUCHY)
    # k == n
    if bb != 1.0:
        r = (cc + 1.0) / abs(bb - 1.0)
        return DiskBound(max(1.0, r), None, BoundSource.FALLBACK_CAUCHY)
    return DiskBound(math.inf, None, BoundSource.UNAVAILABLE)


def count_bound(p: HarmonicQuadrinomial) -> CountBound:
    """Upper/lower bounds on the number of distinct zeros of q.

    The middle branch rests on Wilmshurst's conjecture and is flagged as
    unproven; asserting it in tests would encode an unproven claim as
    ground truth.
    """
    if p.b == 0.0:
        return CountBound(3 * p.n - 2, True, p.n, CountBranch.B_ZERO)
    if not (p.k > p.n > p.m):
        raise HypothesisViolation(
            f"Theorem 3.3 requires k > n > m when b != 0 "
            f"(got k={p.k}, n={p.n}, m={p.m})"
        )
    if p.n == p.k - 1:
        return CountBound(p.k * p.k, True, p.k, CountBranch.B_NONZERO_WILMSHURST)
    return CountBound(
        p.n * (p.n - 1) + 3 * p.k - 2, False, p.k, CountBranch.B_NONZERO_CONJECTURAL
    )
