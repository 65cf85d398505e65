"""Exact arithmetic in Z[zeta_n], used to certify character sums.

Elements are carried in the group ring Z[x]/(x^n - 1) (cyclic convolution);
rationality is decided by reducing modulo the n-th cyclotomic polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den monic; exact division over Z
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        coef = num[i + len(den) - 1]
        out[i] = coef
        for j, c in enumerate(den):
            num[i + j] -= coef * c
    while num and num[-1] == 0:
        num.pop()
    return out, num


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_poly(d)))
            assert not rem
    return tuple(num)


@dataclass(frozen=True)
class CycInt:
    """Integer combination of n-th roots of unity: sum coeffs[i] * zeta^i."""

    n: int
    coeffs: tuple[int, ...]

    @staticmethod
    def zero(n: int) -> "CycInt":
        return CycInt(n, (0,) * n)

    @staticmethod
    def integer(n: int, c: int) -> "CycInt":
        return CycInt(n, (c,) + (0,) * (n - 1))

    @staticmethod
    def root(n: int, k: int) -> "CycInt":
        v = [0] * n
        v[k % n] = 1
        return CycInt(n, tuple(v))

    def _chk(self, other: "CycInt") -> None:
        if self.n != other.n:
            raise ValueError("mixed cyclotomic orders")

    def __add__(self, other: "CycInt") -> "CycInt":
        self._chk(other)
        return CycInt(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycInt") -> "CycInt":
        self._chk(other)
        return CycInt(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "CycInt") -> "CycInt":
        self._chk(other)
        out = [0] * self.n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % self.n] += a * b
        return CycInt(self.n, tuple(out))

    def conj(self) -> "CycInt":
        """Galois conjugate zeta -> zeta^(-1)."""
        return CycInt(self.n, tuple(self.coeffs[-i % self.n] for i in range(self.n)))

    def _reduced(self) -> list[int]:
        phi = list(cyclotomic_poly(self.n))
        rem = list(self.coeffs)
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) >= len(phi):
            _, rem = _poly_divmod(rem, phi)
        return rem

    def as_int(self) -> int | None:
        """The value as a rational integer, or None if irrational."""
        rem = self._reduced()
        if len(rem) > 1:
            return None
        return rem[0] if rem else 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycInt):
            return NotImplemented
        if self.n != other.n:
            return False
        diff = (self - other)._reduced()
        return not diff

    def __hash__(self) -> int:  # pragma: no cover - not used as dict key
        return hash((self.n, tuple(self._reduced())))
