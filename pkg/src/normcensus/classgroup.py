"""Narrow class groups of real quadratic fields, realized as proper
equivalence classes of primitive indefinite binary quadratic forms.

A form (a, b, c) of fundamental discriminant D > 0 is reduced when
|sqrt(D) - 2|a|| < b < sqrt(D).  Reduced forms fall into cycles under the
reduction step rho; cycles = classes; the canonical class representative is
the cycle member with lexicographically least (a, b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import factorize, is_perfect_square, kronecker, sqrt_mod_prime_power
from .cyclotomic import CycInt


@dataclass(frozen=True, order=True)
class Form:
    a: int
    b: int
    c: int

    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_primitive(self) -> bool:
        return math.gcd(math.gcd(self.a, self.b), self.c) == 1

    def inverse(self) -> "Form":
        return Form(self.a, -self.b, self.c)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def _validate_disc(D: int) -> None:
    if D <= 0:
        raise ValueError("discriminant must be positive")
    if is_perfect_square(D) is not None:
        raise ValueError("discriminant must not be a square")
    if D % 4 == 1:
        if any(e > 1 for _, e in factorize(D).factors):
            raise ValueError(f"D={D} is not fundamental")
    elif D % 4 == 0:
        k = D // 4
        if k % 4 not in (2, 3) or any(e > 1 for _, e in factorize(k).factors):
            raise ValueError(f"D={D} is not fundamental")
    else:
        raise ValueError(f"D={D} is not a discriminant")


def _is_reduced(f: Form, s: int) -> bool:
    # |sqrt(D) - 2|a|| < b < sqrt(D), via exact integer comparisons
    # (s = isqrt(D), D never a square here).
    if f.b <= 0 or f.b > s:
        return False
    t = 2 * abs(f.a)
    lo = t - f.b  # need |sqrt(D)-t| < b, i.e. (t-b)^2 < D < (t+b)^2
    D = f.disc()
    if lo > 0 and lo * lo >= D:
        return False
    return (t + f.b) ** 2 > D


def _rho(f: Form, D: int, s: int) -> Form:
    # One reduction step (a,b,c) -> (c, r, (r^2-D)/(4c)), r = -b mod 2|c|
    # placed in the proper window.
    c2 = 2 * abs(f.c)
    if f.c * f.c > D:
        r = (-f.b) % c2
        if r > abs(f.c):
            r -= c2
    else:
        r = s - (s + f.b) % c2
    return Form(f.c, r, (r * r - D) // (4 * f.c))


def reduce_form(f: Form) -> Form:
    """Canonical representative of the proper equivalence class of f."""
    D = f.disc()
    _validate_disc(D)
    if not f.is_primitive():
        raise ValueError(f"form {f} is not primitive")
    s = math.isqrt(D)
    for _ in range(10000):
        if _is_reduced(f, s):
            break
        f = _rho(f, D, s)
    else:  # pragma: no cover
        raise ArithmeticError("reduction did not terminate")
    return min(_cycle(f, D, s))


def _cycle(f: Form, D: int, s: int) -> list[Form]:
    cyc = [f]
    g = _rho(f, D, s)
    while g != f:
        cyc.append(g)
        g = _rho(g, D, s)
    return cyc


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _pos_a(f: Form, D: int, s: int) -> Form:
    # equivalent reduced form with positive leading coefficient (the cycle
    # alternates the sign of a, so one rho step suffices)
    if f.a > 0:
        return f
    return _rho(f, D, s)


def compose(f1: Form, f2: Form) -> Form:
    """Gauss composition; returns the canonical representative of the product."""
    D = f1.disc()
    if f2.disc() != D:
        raise ValueError("composition needs equal discriminants")
    s0 = math.isqrt(D)
    f1 = _pos_a(reduce_form(f1), D, s0)
    f2 = _pos_a(reduce_form(f2), D, s0)
    if f1.a > f2.a:
        f1, f2 = f2, f1
    a1, b1, c1 = f1.a, f1.b, f1.c
    a2, b2, c2 = f2.a, f2.b, f2.c
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, u, _ = _xgcd(a2, a1)
        y1 = u
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, u2, v2 = _xgcd(s, d)
        x2, y2 = u2, -v2
    v1 = a1 // d1
    v2_ = a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    a3 = v1 * v2_
    b3 = b2 + 2 * v2_ * r
    c3 = (c2 * d1 + r * (b2 + v2_ * r)) // v1
    return reduce_form(Form(a3, b3, c3))


@dataclass(frozen=True)
class NarrowClassGroup:
    D: int
    forms: tuple[Form, ...]  # canonical representatives, sorted
    table: tuple[tuple[int, ...], ...]
    identity: int
    h_plus: int
    decomposition: tuple[tuple[int, int], ...]  # (generator index, order)
    exponent: int
    coords: tuple[tuple[int, ...], ...]  # class index -> generator exponents

    def index_of(self, f: Form) -> int:
        return self.forms.index(reduce_form(f))

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self.forms.index(reduce_form(self.forms[i].inverse()))

    def power(self, i: int, k: int) -> int:
        out = self.identity
        g = i
        if k < 0:
            g, k = self.inv(i), -k
        while k:
            if k & 1:
                out = self.op(out, g)
            g = self.op(g, g)
            k >>= 1
        return out

    def order_of(self, i: int) -> int:
        k, g = 1, i
        while g != self.identity:
            g = self.op(g, i)
            k += 1
        return k


def _all_reduced_forms(D: int) -> list[Form]:
    s = math.isqrt(D)
    out = []
    for b in range(1, s + 1):
        if (D - b) % 2:
            continue
        M4 = D - b * b
        if M4 <= 0 or M4 % 4:
            continue
        M = M4 // 4
        for a_abs in range(1, M + 1):
            if M % a_abs:
                continue
            # window sqrt(D)-b < 2|a| < sqrt(D)+b
            t = 2 * a_abs
            if t - b >= 0 and (t - b) ** 2 >= D:
                continue
            if (t + b) ** 2 <= D:
                continue
            for a in (a_abs, -a_abs):
                f = Form(a, b, -M // a)
                if f.is_primitive():
                    out.append(f)
    return out


def _decompose(table, identity, h):
    # Greedy invariant-factor style decomposition: repeatedly adjoin an
    # element of maximal order in the current quotient.
    def op(i, j):
        return table[i][j]

    subgroup = {identity}
    gens: list[tuple[int, int]] = []
    while len(subgroup) < h:
        best, best_ord = None, 0
        for g in range(h):
            k, x = 1, g
            while x not in subgroup:
                x = op(x, g)
                k += 1
            if k > best_ord:
                best, best_ord = g, k
        gens.append((best, best_ord))
        new = set()
        for x in subgroup:
            y = x
            for _ in range(best_ord):
                new.add(y)
                y = op(y, best)
        subgroup = new
    return gens


@lru_cache(maxsize=None)
def class_group(D: int) -> NarrowClassGroup:
    """Narrow class group of discriminant D from the full reduced-form census."""
    _validate_disc(D)
    s = math.isqrt(D)
    reduced = set(_all_reduced_forms(D))
    reps = []
    seen: set[Form] = set()
    for f in sorted(reduced):
        if f in seen:
            continue
        cyc = _cycle(f, D, s)
        assert seen.isdisjoint(cyc)
        seen |= set(cyc)
        reps.append(min(cyc))
    assert seen == reduced
    reps.sort()
    forms = tuple(reps)
    index = {f: i for i, f in enumerate(forms)}
    h = len(forms)
    table = tuple(
        tuple(index[compose(f, g)] for g in forms) for f in forms
    )
    if D % 4 == 0:
        principal = Form(1, 0, -D // 4)
    else:
        principal = Form(1, 1, (1 - D) // 4)
    identity = index[reduce_form(principal)]
    # group sanity: identity row/column, associativity
    assert all(table[identity][j] == j and table[j][identity] == j for j in range(h))
    for i in range(h):
        for j in range(h):
            for k in range(h):
                assert table[table[i][j]][k] == table[i][table[j][k]]
    gens = _decompose(table, identity, h)
    exponent = math.lcm(*(o for _, o in gens)) if gens else 1
    # coordinates of every class in the chosen generators; the decomposition
    # is direct exactly when every class gets one coordinate tuple
    from itertools import product

    coords: list[tuple[int, ...] | None] = [None] * h
    for tup in product(*(range(o) for _, o in gens)):
        x = identity
        for (g, _), e in zip(gens, tup):
            for _ in range(e):
                x = table[x][g]
        if coords[x] is not None:
            raise ArithmeticError("generator decomposition is not direct")
        coords[x] = tup
    assert all(c is not None for c in coords)
    return NarrowClassGroup(
        D, forms, table, identity, h, tuple(gens), exponent, tuple(coords)
    )


def frobenius_class(G: NarrowClassGroup, p: int) -> int:
    """Class of a prime form (p, b, *), for p split or ramified in Q(sqrt(D)).

    Defined up to inversion for split p (the choice between the two primes
    above p); the smallest valid b in [0, 2p) is used.  Inert p is rejected.
    """
    D = G.D
    if kronecker(D, p) == -1:
        raise ValueError(f"p={p} is inert: no prime form exists")
    for b in range(2 * p):
        if (b * b - D) % (4 * p) == 0:
            f = Form(p, b, (b * b - D) // (4 * p))
            if f.is_primitive():
                return G.index_of(f)
    raise ValueError(f"no primitive prime form above p={p}")  # pragma: no cover


def sign_class(G: NarrowClassGroup) -> int:
    """Class of a form representing -1; trivial iff the fundamental unit has norm -1."""
    D = G.D
    if D % 4 == 0:
        f = Form(-1, 0, D // 4)
    else:
        f = Form(-1, 1, (D - 1) // 4)
    return G.index_of(f)


@dataclass(frozen=True)
class Character:
    """Character of the narrow class group, as an exponent map into Z/n."""

    group: NarrowClassGroup
    labels: tuple[int, ...]  # one exponent per generator

    def exponent(self, class_index: int) -> int:
        n = self.group.exponent
        tup = self.group.coords[class_index]
        total = 0
        for (_, order), lab, k in zip(self.group.decomposition, self.labels, tup):
            total += lab * k * (n // order)
        return total % n

    def value(self, class_index: int) -> CycInt:
        return CycInt.root(self.group.exponent, self.exponent(class_index))

    def value_order(self) -> int:
        n = self.group.exponent
        orders = [
            order // math.gcd(order, lab)
            for (_, order), lab in zip(self.group.decomposition, self.labels)
        ]
        return math.lcm(*orders) if orders else 1

    def is_trivial(self) -> bool:
        return all(lab == 0 for lab in self.labels)


def characters(G: NarrowClassGroup) -> list[Character]:
    """All h characters of G."""
    from itertools import product

    return [
        Character(G, tup)
        for tup in product(*(range(o) for _, o in G.decomposition))
    ]
