"""Rule-defined approximation functions.

Every rule is an immutable value that can be shipped to worker processes.
Support iterators yield ``(n, psi(n))`` with ``psi(n) > 0`` in increasing n.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator, List, Optional, Tuple

from src.domain.entities.case_tables import Case2Tables
from src.domain.entities.spectrum_digits import SpectrumDigits
from src.domain.exceptions.domain_exceptions import (
    InvalidDigitsException,
    InvalidInputException,
    OutOfRangeException,
)
from src.domain.interfaces.psi_rule import IPsiRule
from src.domain.services.number_theory import is_prime, primes_up_to
from src.domain.services.padic_core import integer_valuation

Row = Tuple[int, Fraction]

I_CLASS = "I-class"


def _check_n(n: int) -> None:
    if n < 1:
        raise InvalidInputException(f"psi is defined on n >= 1, got {n}")


def _is_prime_square(n: int) -> Optional[int]:
    root = isqrt(n)
    return root if root * root == n and is_prime(root) else None


@dataclass(frozen=True)
class ZeroRule:
    """psi identically 0."""

    def value(self, n: int) -> Fraction:
        _check_n(n)
        return Fraction(0)

    def support(self, limit: int) -> Iterator[Row]:
        return iter(())

    def label(self, n: int) -> str:
        return "zero"


@dataclass(frozen=True)
class TableRule:
    """psi given by an explicit finite table, 0 off the table."""

    entries: Tuple[Row, ...]

    def __post_init__(self) -> None:
        """Validate entity after initialization."""
        seen = set()
        for n, psi_n in self.entries:
            if n < 1:
                raise InvalidInputException(f"Table index {n} must be >= 1")
            if psi_n < 0:
                raise InvalidInputException(f"psi({n}) = {psi_n} is negative")
            if n in seen:
                raise InvalidInputException(f"psi({n}) given twice")
            seen.add(n)

    def value(self, n: int) -> Fraction:
        _check_n(n)
        for m, psi_m in self.entries:
            if m == n:
                return Fraction(psi_m)
        return Fraction(0)

    def support(self, limit: int) -> Iterator[Row]:
        rows = sorted((n, Fraction(v)) for n, v in self.entries if v > 0 and n <= limit)
        return iter(rows)

    def label(self, n: int) -> str:
        return "table"


@dataclass(frozen=True)
class Theorem1Rule:
    """Shell rule ``psi(n) = x_{v(n)} n / p^{v(n)+1}``.

    By default only n = p^k q with q a prime other than p is supported;
    ``full_support`` evaluates the closed formula at every n.
    """

    prime: int
    digits: SpectrumDigits
    full_support: bool = False

    def __post_init__(self) -> None:
        """Validate entity after initialization."""
        if self.digits.prime != self.prime:
            raise InvalidInputException("Digit base differs from the rule prime")
        if not self.digits.is_binary:
            raise InvalidDigitsException(f"Shell rule needs binary digits, got {self.digits}")

    def value(self, n: int) -> Fraction:
        _check_n(n)
        p = self.prime
        k = integer_valuation(p, n)
        if self.digits.digit(k) == 0:
            return Fraction(0)
        if not self.full_support and not is_prime(n // p**k):
            return Fraction(0)
        return Fraction(n, p ** (k + 1))

    def support(self, limit: int) -> Iterator[Row]:
        p = self.prime
        rows: List[Row] = []
        for k, x_k in enumerate(self.digits.digits):
            step = p**k
            if x_k == 0 or step > limit:
                continue
            if self.full_support:
                cofactors: Iterator[int] = (m for m in range(1, limit // step + 1) if m % p)
            else:
                cofactors = (q for q in primes_up_to(limit // step) if q != p)
            rows.extend((step * m, Fraction(m, p)) for m in cofactors)
        return iter(sorted(rows))

    def label(self, n: int) -> str:
        return f"shell-{integer_valuation(self.prime, n)}"


@dataclass(frozen=True)
class Theorem2Rule:
    """Multiplicative-set rule: ``psi(p^k q) = f_k(q)`` for primes q != p.

    ``f_k(q)`` is ``q/p`` when q mod p lies in I_{x_k}, ``q/p^{i+1}`` when
    ``q = g + b'p^i (mod p^{i+1})`` with ``1 <= b' <= b_{k,i}``, else 0.
    """

    tables: Case2Tables

    def classify(self, k: int, q: int) -> Optional[Tuple[Fraction, str]]:
        """psi(p^k q) and its rule part for a prime q, or None when 0."""
        tables = self.tables
        p = tables.prime
        if q == p or k > tables.max_stage:
            return None
        stage = tables.stage(k)
        if q % p in stage.residues:
            return Fraction(q, p), I_CLASS
        shifted = q - tables.generator
        if shifted <= 0:
            return None
        i = integer_valuation(p, shifted)
        b_prime = shifted // p**i % p
        if i >= 1 and 1 <= b_prime <= stage.b_at(i):
            return Fraction(q, p ** (i + 1)), f"({i},{b_prime})-class"
        return None

    def _split(self, n: int) -> Optional[Tuple[int, int]]:
        p = self.tables.prime
        k = integer_valuation(p, n)
        q = n // p**k
        return (k, q) if is_prime(q) else None

    def value(self, n: int) -> Fraction:
        _check_n(n)
        split = self._split(n)
        hit = self.classify(*split) if split else None
        return hit[0] if hit else Fraction(0)

    def support(self, limit: int) -> Iterator[Row]:
        p = self.tables.prime
        rows: List[Row] = []
        for stage in self.tables.stages:
            step = p**stage.k
            if step > limit:
                break
            for q in primes_up_to(limit // step):
                hit = self.classify(stage.k, q)
                if hit:
                    rows.append((step * q, hit[0]))
        return iter(sorted(rows))

    def label(self, n: int) -> str:
        split = self._split(n)
        hit = self.classify(*split) if split else None
        return hit[1] if hit else "none"


@dataclass(frozen=True)
class RealPrimeRule:
    """``psi(q) = q x`` on primes q, 0 elsewhere."""

    x: Fraction

    def __post_init__(self) -> None:
        """Validate entity after initialization."""
        if not 0 <= self.x <= 1:
            raise OutOfRangeException(f"x = {self.x} is outside [0, 1]")

    def value(self, n: int) -> Fraction:
        _check_n(n)
        return n * Fraction(self.x) if is_prime(n) else Fraction(0)

    def support(self, limit: int) -> Iterator[Row]:
        if self.x == 0:
            return iter(())
        return ((q, q * Fraction(self.x)) for q in primes_up_to(limit))

    def label(self, n: int) -> str:
        return "prime"


@dataclass(frozen=True)
class PrimeSquareRule:
    """``psi(q^2) = q^2 x`` on squares of primes, 0 elsewhere."""

    x: Fraction

    def __post_init__(self) -> None:
        """Validate entity after initialization."""
        if not 0 <= self.x <= 1:
            raise OutOfRangeException(f"x = {self.x} is outside [0, 1]")

    def value(self, n: int) -> Fraction:
        _check_n(n)
        return n * Fraction(self.x) if _is_prime_square(n) else Fraction(0)

    def support(self, limit: int) -> Iterator[Row]:
        if self.x == 0:
            return iter(())
        return ((q * q, q * q * Fraction(self.x)) for q in primes_up_to(isqrt(limit)))

    def label(self, n: int) -> str:
        return "prime-square"


def primed_value(p: int, n: int, psi_n: Fraction) -> Fraction:
    """``p psi(n)`` when ``psi(n) = n / p^k`` for an integer k, else psi(n)."""
    if psi_n == 0:
        return psi_n
    ratio = Fraction(n) / psi_n
    num, den = ratio.numerator, ratio.denominator
    if den == 1 and num == p ** integer_valuation(p, num):
        return p * psi_n
    if num == 1 and den == p ** integer_valuation(p, den):
        return p * psi_n
    return psi_n


@dataclass(frozen=True)
class PrimedRule:
    """The strict-family companion psi' of a base rule."""

    base: IPsiRule
    prime: int

    def value(self, n: int) -> Fraction:
        return primed_value(self.prime, n, self.base.value(n))

    def support(self, limit: int) -> Iterator[Row]:
        return ((n, primed_value(self.prime, n, v)) for n, v in self.base.support(limit))

    def label(self, n: int) -> str:
        return self.base.label(n)
