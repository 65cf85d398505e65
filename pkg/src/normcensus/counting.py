"""Exact integral-point counts: brute-force scans, unit-orbit enumeration,
and the staircase slope they share.

Solutions of N(z) = m fall into finitely many orbits under multiplication by
the norm-one fundamental unit eps (signs give separate orbits).  The orbit
representative is normalized into the window sqrt(|m|/eps) < |sigma_1(z)| <=
sqrt(|m|*eps), which contains exactly one member of each orbit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

import numpy as np

from .quadfield import QuadElem

if TYPE_CHECKING:  # pragma: no cover
    from .census import EquationSpec

_BRUTE_LIMIT = 10**8
_NUMPY_CUTOFF = 50_000
_CHUNK = 1 << 20


@dataclass(frozen=True)
class SolutionOrbits:
    d: int
    m: int
    representatives: tuple[QuadElem, ...]
    orbit_count: int


def _eps_upper(spec: "EquationSpec") -> Fraction:
    # rational upper bound on eps = (a + b sqrt(d))/denom
    eps = spec.field.eps
    s = math.isqrt(spec.d)
    return Fraction(eps.a + eps.b * (s + 1), eps.denom)


def _window_reduce(z: QuadElem, spec: "EquationSpec") -> QuadElem:
    """Unique orbit member with sqrt(|m|/eps) < |sigma_1| <= sqrt(|m|*eps)."""
    eps = spec.field.eps
    eps_inv = eps.conj()  # norm one
    am = abs(spec.m)
    one = QuadElem(1, 0, 1, spec.d)
    while True:
        sq = z * z
        # |sigma_1|^2 > |m| * eps ?
        if (sq - eps.scale(am)).sign_embed1() > 0:
            z = z * eps_inv
            continue
        # |sigma_1|^2 <= |m| / eps ?
        if (sq * eps - one.scale(am)).sign_embed1() <= 0:
            z = z * eps
            continue
        return z


def _x_solutions(spec: "EquationSpec", y: int) -> list[int]:
    # integer x with N(x + y*omega) = m, for fixed y
    d, m = spec.d, spec.m
    if d % 4 == 1:
        s2 = d * y * y + 4 * m
        if s2 < 0:
            return []
        t = math.isqrt(s2)
        if t * t != s2 or (t - y) % 2:
            return []
        return sorted({(t - y) // 2, (-t - y) // 2})
    s2 = d * y * y + m
    if s2 < 0:
        return []
    t = math.isqrt(s2)
    if t * t != s2:
        return []
    return sorted({t, -t})


def fundamental_solutions(spec: "EquationSpec") -> SolutionOrbits:
    """One canonical representative per eps-orbit of solutions."""
    d, m = spec.d, spec.m
    bound = Fraction(abs(m)) * _eps_upper(spec) / d
    if d % 4 == 1:
        bound *= 4
    Y = math.isqrt(int(bound)) + 1
    reps: set[QuadElem] = set()
    for y in range(-Y, Y + 1):
        for x in _x_solutions(spec, y):
            z = QuadElem.from_coords(d, x, y)
            assert spec.evaluate(x, y) == m
            reps.add(_window_reduce(z, spec))
    ordered = tuple(sorted(reps, key=lambda z: (z.a, z.b, z.denom)))
    return SolutionOrbits(d, m, ordered, len(ordered))


def brute_count(spec: "EquationSpec", T: int) -> int:
    """Number of solutions with max(|x|, |y|) <= T, by direct scan."""
    if T < 0:
        raise ValueError("T must be nonnegative")
    if T > _BRUTE_LIMIT:
        raise ValueError(
            f"T={T} exceeds the direct-scan budget ({_BRUTE_LIMIT}); "
            "use count_via_orbits"
        )
    d, m = spec.d, spec.m
    if d % 4 == 1:
        ymax = min(T, math.isqrt(max(0, 9 * T * T - 4 * m) // d))
    else:
        ymax = min(T, math.isqrt(max(0, T * T - m) // d))
    total = sum(1 for x in _x_solutions(spec, 0) if abs(x) <= T)
    if ymax >= 1:
        if ymax <= _NUMPY_CUTOFF:
            for y in range(1, ymax + 1):
                total += 2 * sum(1 for x in _x_solutions(spec, y) if abs(x) <= T)
        else:
            total += 2 * _scan_numpy(spec, T, ymax)
    return total


def _exact_sqrt_mask(rhs):
    # rhs int64 >= 0; returns (is_square, isqrt) elementwise
    t = np.rint(np.sqrt(rhs.astype(np.float64))).astype(np.int64)
    t = np.maximum(t, 0)
    # float rounding can be off by one near perfect squares
    for cand in (t - 1, t, t + 1):
        good = cand >= 0
        hit = good & (cand * cand == rhs)
        t = np.where(hit, cand, t)
    return (t * t == rhs), t


def _scan_numpy(spec: "EquationSpec", T: int, ymax: int) -> int:
    d, m = spec.d, spec.m
    if d * ymax * ymax + abs(4 * m) >= 2**62:  # pragma: no cover - desk scale
        return sum(
            sum(1 for x in _x_solutions(spec, y) if abs(x) <= T)
            for y in range(1, ymax + 1)
        )
    total = 0
    half = d % 4 == 1
    for start in range(1, ymax + 1, _CHUNK):
        y = np.arange(start, min(start + _CHUNK, ymax + 1), dtype=np.int64)
        if half:
            rhs = d * y * y + 4 * m
        else:
            rhs = d * y * y + m
        ok = rhs >= 0
        sq, t = _exact_sqrt_mask(np.where(ok, rhs, 0))
        sq &= ok
        if half:
            sq &= (t - y) % 2 == 0
            x1 = (t - y) >> 1
            x2 = (-t - y) >> 1
            total += int(np.sum(sq & (np.abs(x1) <= T)))
            total += int(np.sum(sq & (t > 0) & (np.abs(x2) <= T)))
        else:
            inrange = sq & (t <= T)
            total += int(np.sum(inrange & (t > 0)) * 2 + np.sum(inrange & (t == 0)))
    return total


def count_via_orbits(spec: "EquationSpec", T: int) -> int:
    """Number of solutions with max(|x|, |y|) <= T, by walking each orbit.

    Works for astronomically large T (exact big-integer arithmetic only).
    """
    if T < 0:
        raise ValueError("T must be nonnegative")
    d, m = spec.d, spec.m
    orbits = fundamental_solutions(spec)
    eps = spec.field.eps
    eps_inv = eps.conj()
    # |sigma_1| cutoff beyond which max(|x|,|y|) > T is guaranteed:
    # |z1| <= (1 + sqrt(d)) * T + sqrt(|m| eps) for any solution in the box
    s = math.isqrt(d)
    B = 3 * (s + 1) * max(T, 1) + math.isqrt(int(abs(m) * _eps_upper(spec))) + 2
    m2 = m * m
    total = 0
    for rep in orbits.representatives:
        z = rep
        while z.abs1_leq(B):
            if z.height() <= T:
                total += 1
            z = z * eps
        z = rep * eps_inv
        # walk down while |sigma_2(z)| <= B, i.e. |sigma_1| >= |m| / B
        while ((z * z).scale(B * B) - QuadElem(m2, 0, 1, d)).sign_embed1() >= 0:
            if z.height() <= T:
                total += 1
            z = z * eps_inv
    return total


def exact_slope(spec: "EquationSpec") -> float:
    """Exact staircase slope 2 * orbit_count / log(eps)."""
    return 2 * fundamental_solutions(spec).orbit_count / spec.field.log_eps


def calibration(spec: "EquationSpec") -> float:
    """Ratio exact_slope / predicted_slope; rejects equations with c_m = 0."""
    from .census import c_m, predicted_slope

    if c_m(spec) == 0:
        raise ValueError("calibration undefined when the character sum vanishes")
    return exact_slope(spec) / predicted_slope(spec)
