"""Total argument change (winding number) of q along closed contours.

Samples the contour, unwraps principal-branch argument increments, and
adaptively bisects any segment whose increment exceeds pi/2 — a 4x safety
margin over the pi aliasing limit, so branch cuts cannot be skipped
silently.  The accumulated angle must land within 0.25 * 2*pi of an
integer multiple or the computation is rejected.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Union

from .errors import NonIntegerWinding, SampleCapExceeded, ZeroOnContour
from .model import HarmonicQuadrinomial, evaluate

_MAX_STEP = 0.5 * math.pi
_SAMPLE_CAP = 2**20
_ZERO_TOL = 1e-9


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("circle radius must be positive")

    def point(self, t: float) -> complex:
        return self.center + self.radius * cmath.exp(2j * math.pi * t)


@dataclass(frozen=True)
class Rectangle:
    """Axis-aligned rectangle with corners lo (bottom-left), hi (top-right)."""

    lo: complex
    hi: complex

    def __post_init__(self):
        if not (self.hi.real > self.lo.real and self.hi.imag > self.lo.imag):
            raise ValueError("rectangle must be nondegenerate with lo < hi")

    def point(self, t: float) -> complex:
        w = self.hi.real - self.lo.real
        h = self.hi.imag - self.lo.imag
        per = 2.0 * (w + h)
        s = (t % 1.0) * per
        if s < w:
            return complex(self.lo.real + s, self.lo.imag)
        s -= w
        if s < h:
            return complex(self.hi.real, self.lo.imag + s)
        s -= h
        if s < w:
            return complex(self.hi.real - s, self.hi.imag)
        s -= w
        return complex(self.lo.real, self.hi.imag - s)


Contour = Union[Circle, Rectangle]


@dataclass(frozen=True)
class WindingReport:
    winding: int
    min_modulus: float
    samples_used: int
    refined: bool


def winding_number(
    f: Union[HarmonicQuadrinomial, Callable[[complex], complex]],
    contour: Contour,
    initial_samples: int = 256,
) -> WindingReport:
    """Winding number of f along the (counterclockwise) contour.

    f may be a HarmonicQuadrinomial or any callable z -> complex.  Fails
    with ZeroOnContour if |f| gets within 1e-9 of zero relative to the
    largest |f| seen, with SampleCapExceeded past 2^20 samples, and with
    NonIntegerWinding if the total angle is not close to a full multiple
    of 2*pi.
    """
    if isinstance(f, HarmonicQuadrinomial):
        p = f
        f = lambda z: evaluate(p, z)  # noqa: E731
        # enough initial samples that a full turn of the leading term spans
        # many segments; guards against increment aliasing
        initial_samples = max(initial_samples, 64 * max(p.k, p.n))
    if initial_samples < 8:
        raise ValueError("need at least 8 initial samples")

    n0 = initial_samples
    ts = [j / n0 for j in range(n0)]
    vals = [f(contour.point(t)) for t in ts]
    samples = n0
    min_mod = min(abs(v) for v in vals)
    max_mod = max(abs(v) for v in vals)
    refined = False

    def check_zero(v: complex):
        nonlocal min_mod, max_mod
        a = abs(v)
        min_mod = min(min_mod, a)
        max_mod = max(max_mod, a)
        if a <= _ZERO_TOL * max_mod:
            raise ZeroOnContour(
                f"|f| = {a:.3e} on the contour (scale {max_mod:.3e})"
            )

    for v in vals:
        check_zero(v)

    total = 0.0
    for j in range(n0):
        t0, v0 = ts[j], vals[j]
        t1 = ts[j + 1] if j + 1 < n0 else 1.0
        v1 = vals[j + 1] if j + 1 < n0 else vals[0]
        # Depth-first bisection of one segment, leftmost piece first.
        stack = [(t0, v0, t1, v1)]
        while stack:
            a, va, b, vb = stack.pop()
            d = cmath.phase(vb / va)
            if abs(d) <= _MAX_STEP:
                total += d
                continue
            if samples >= _SAMPLE_CAP:
                raise SampleCapExceeded(
                    f"adaptive refinement exceeded {_SAMPLE_CAP} samples"
                )
            tm = 0.5 * (a + b)
            vm = f(contour.point(tm))
            samples += 1
            refined = True
            check_zero(vm)
            stack.append((tm, vm, b, vb))
            stack.append((a, va, tm, vm))

    # Re-check against the final scale: early samples were only compared
    # against the running maximum.
    if min_mod <= _ZERO_TOL * max_mod:
        raise ZeroOnContour(
            f"|f| = {min_mod:.3e} on the contour (scale {max_mod:.3e})"
        )

    w = total / (2.0 * math.pi)
    n = round(w)
    if abs(w - n) > 0.25:
        raise NonIntegerWinding(
            f"accumulated argument {w:.6f} turns is not close to an integer"
        )
    return WindingReport(int(n), min_mod, samples, refined)
