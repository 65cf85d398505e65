"""Solvability census for N(x + y*omega) = m over Z.

The decision procedure: m is representable integrally iff it is representable
over every Z_p and a character sum c_m over the narrow class group is
nonzero.  c_m also gives the predicted staircase slope of the point count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import Factorization, factorize, kronecker, sqrt_mod_prime_power
from .classgroup import NarrowClassGroup, characters, class_group, frobenius_class, sign_class
from .cyclotomic import CycInt
from .quadfield import FieldData, field_data


@dataclass(frozen=True)
class EquationSpec:
    """The equation N(x + y*omega) = m in the maximal order of Q(sqrt(d))."""

    d: int
    D: int
    m: int
    m_fact: Factorization
    field: FieldData

    def norm_form(self) -> tuple[int, int, int]:
        """(A, B, C) with N(x + y*omega) = A x^2 + B xy + C y^2."""
        if self.d % 4 == 1:
            return (1, 1, (1 - self.d) // 4)
        return (1, 0, -self.d)

    def evaluate(self, x: int, y: int) -> int:
        A, B, C = self.norm_form()
        return A * x * x + B * x * y + C * y * y


def equation_spec(d: int, m: int) -> EquationSpec:
    fd = field_data(d)
    return EquationSpec(d, fd.D, m, factorize(m), fd)


@dataclass(frozen=True)
class PrimeClassification:
    p: int
    e: int
    category: str  # "split" | "inert" | "ramified"
    pi: int | None  # Pi_1..Pi_4 tag for d=34, p coprime to 34


def _pi_tag_34(p: int) -> int:
    k2, k17 = kronecker(2, p), kronecker(17, p)
    if k2 == -1 and k17 == -1:
        return 1
    if k2 == 1 and k17 == 1:
        # quartic symbol ((-7+4*sqrt(2))/p); independent of the root chosen
        # since (-7+4r)(-7-4r) = 17 is a residue here
        r = sqrt_mod_prime_power(2, p, 1)
        return 3 if kronecker(-7 + 4 * r, p) == 1 else 4
    return 2


def classify_primes(spec: EquationSpec) -> list[PrimeClassification]:
    """Splitting category of every prime of m, with Pi tags when d = 34."""
    out = []
    for p, e in spec.m_fact.factors:
        if spec.D % p == 0:
            cat = "ramified"
        else:
            cat = "split" if kronecker(spec.D, p) == 1 else "inert"
        pi = None
        if spec.d == 34 and p not in (2, 17):
            pi = _pi_tag_34(p)
        out.append(PrimeClassification(p, e, cat, pi))
    return out


def delta_p(n: int, zeta_exp: int, e: int) -> CycInt:
    """Local character factor sum_{j=0}^{e} zeta^(2j - e), zeta = zeta_n^zeta_exp."""
    out = CycInt.zero(n)
    for j in range(e + 1):
        out = out + CycInt.root(n, zeta_exp * (2 * j - e))
    return out


def c_m(spec: EquationSpec) -> int:
    """Character sum deciding the global obstruction; a nonnegative integer."""
    G = class_group(spec.D)
    n = G.exponent
    sgn_idx = sign_class(G) if spec.m < 0 else G.identity
    local_parts: list[tuple[int, int]] = []  # (class index, exponent) for ramified
    split_parts: list[tuple[int, int]] = []  # (class index, e) for split
    for p, e in spec.m_fact.factors:
        if spec.D % p == 0:
            local_parts.append((frobenius_class(G, p), e))
        elif kronecker(spec.D, p) == 1:
            split_parts.append((frobenius_class(G, p), e))
        # inert primes do not enter the sum
    total = CycInt.zero(n)
    for chi in characters(G):
        term = chi.value(sgn_idx)
        for idx, t in local_parts:
            term = term * CycInt.root(n, chi.exponent(idx) * t)
        for idx, e in split_parts:
            term = term * delta_p(n, chi.exponent(idx), e)
        total = total + term
    val = total.as_int()
    if val is None or val < 0:
        raise ArithmeticError(f"character sum is not a nonnegative integer: {total}")
    return val


def predicted_slope(spec: EquationSpec) -> float:
    """Predicted staircase slope 2*c_m / (h_plus * sqrt(D) * log eps)."""
    G = class_group(spec.D)
    return 2 * c_m(spec) / (G.h_plus * math.sqrt(spec.D) * spec.field.log_eps)


@dataclass(frozen=True)
class CensusVerdict:
    d: int
    m: int
    locally_solvable: dict[int, bool]
    c_m: int
    solvable: bool
    predicted_slope: float
    witness: tuple[int, int] | None
    m1: int | None = None


def _witness(spec: EquationSpec) -> tuple[int, int]:
    from . import counting

    orbits = counting.fundamental_solutions(spec)
    if not orbits.representatives:
        raise ArithmeticError(
            f"criterion says solvable but no orbit found for d={spec.d}, m={spec.m}"
        )
    best = min(
        (z.coords() for z in orbits.representatives),
        key=lambda xy: (max(abs(xy[0]), abs(xy[1])), xy[0] < 0, xy[1] < 0),
    )
    return best


def verdict(spec: EquationSpec) -> CensusVerdict:
    """Full decision: local solvability at every bad prime plus the character sum."""
    from . import localdata

    places = sorted({2} | {p for p, _ in factorize(2 * spec.d * spec.m).factors})
    local = {p: localdata.locally_solvable(spec, p) for p in places}
    c = c_m(spec)
    solvable = all(local.values()) and c > 0
    slope = predicted_slope(spec)
    witness = _witness(spec) if solvable else None
    return CensusVerdict(spec.d, spec.m, local, c, solvable, slope, witness)


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def pell34_criterion(m: int) -> CensusVerdict:
    """Closed-form criterion for x^2 - 34 y^2 = m.

    Write m = (-1)^s0 * 2^s1 * 17^s2 * prod p_i^e_i and split the p_i by the
    residue symbols of 2 and 17: Pi_1 both non-residues, Pi_2 with 34 a
    non-residue, Pi_3/Pi_4 both residues with quartic symbol +1/-1.  The
    character sum collapses to three terms (trivial, quadratic, the two
    quartic characters); m is representable iff it is positive mod 8 data
    (m1 = +-1 mod 8 for m1 = (-1)^s0 * prod_{Pi_1} p_i^e_i), (m1/17) = 1,
    every odd-exponent p_i has (34/p_i) = 1, and the sum is nonzero.
    """
    spec = equation_spec(34, m)
    s0 = 1 if m < 0 else 0
    s2 = spec.m_fact.exponent_of(17)
    tagged = [(c.p, c.e, c.pi) for c in classify_primes(spec) if c.pi is not None]
    pi1 = [(p, e) for p, e, t in tagged if t == 1]
    pi3 = [(p, e) for p, e, t in tagged if t == 3]
    pi4 = [(p, e) for p, e, t in tagged if t == 4]
    m1 = (-1) ** s0 * _prod(p**e for p, e in pi1)
    local = {2: m1 % 8 in (1, 7), 17: kronecker(m1, 17) == 1}
    for p, e, t in tagged:
        local[p] = e % 2 == 0 or kronecker(34, p) == 1
    locally_ok = all(local.values())

    # trivial character; quadratic character (Pi_1 classes square to -1,
    # Pi_4 classes to +1); the conjugate pair of quartic characters, whose
    # Pi_1 factor is 0 for odd exponent and (-1)^(e/2) for even
    term1 = _prod(1 + e for p, e, t in tagged if t != 2)
    term2 = _prod((-1) ** e * (1 + e) for _, e in pi1) * _prod(
        1 + e for _, e in pi3 + pi4
    )
    quartic_pi1 = _prod(
        0 if e % 2 else (-1) ** (e // 2) for _, e in pi1
    )
    term3 = (
        2
        * (-1) ** (s0 + s2)
        * quartic_pi1
        * _prod(1 + e for _, e in pi3)
        * _prod((-1) ** e * (1 + e) for _, e in pi4)
    )
    c = term1 + term2 + term3
    assert c >= 0

    solvable = locally_ok and c > 0
    G = class_group(136)
    slope = 2 * c / (G.h_plus * math.sqrt(136) * spec.field.log_eps)
    witness = _witness(spec) if solvable else None
    return CensusVerdict(34, m, local, c, solvable, slope, witness, m1=m1)


def neg_pell_solvable(delta: int) -> bool:
    """Whether x^2 - delta*y^2 = -1 has an integer solution (delta squarefree,
    not 1 mod 4): equivalent to the fundamental unit having norm -1."""
    if delta % 4 == 1:
        raise ValueError("delta = 1 (mod 4) is outside this criterion")
    return field_data(delta).norm_eps0 == -1
