"""Exact p-adic scalar arithmetic.

Valuations, digit expansions, inverses modulo prime powers, conversion of
closed (or open) balls of Q_p into residue classes of Z_p, and the digit
reversal map that turns a ball into a real half-open interval.
"""

import math
from fractions import Fraction
from typing import Optional, Union

from src.domain.entities.digit_vector import DigitVector
from src.domain.entities.interval import HalfOpenInterval
from src.domain.entities.padic_ball import PAdicBall
from src.domain.exceptions.domain_exceptions import (
    DegenerateBallException,
    InvalidRadiusException,
    NotAUnitBallException,
    NotInvertibleException,
    NotPAdicIntegerException,
)

INFINITE_VALUATION = math.inf

Valuation = Union[int, float]


def integer_valuation(p: int, n: int) -> int:
    """Exponent of p in a nonzero integer.

    Args:
        p: Prime
        n: Nonzero integer

    Returns:
        Largest e with p^e dividing n
    """
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def valuation(p: int, q: Union[int, Fraction]) -> Valuation:
    """p-adic valuation of a rational.

    Args:
        p: Prime
        q: Rational number

    Returns:
        ``v_p(num) - v_p(den)``, or ``INFINITE_VALUATION`` when q = 0
    """
    q = Fraction(q)
    if q == 0:
        return INFINITE_VALUATION
    return integer_valuation(p, q.numerator) - integer_valuation(p, q.denominator)


def mod_inverse_prime_power(a: int, p: int, precision: int) -> int:
    """Inverse of a modulo p^M.

    Args:
        a: Integer coprime to p
        p: Prime
        precision: Exponent M >= 1

    Returns:
        b in [0, p^M) with a*b = 1 mod p^M

    Raises:
        NotInvertibleException: If p divides a
    """
    if a % p == 0:
        raise NotInvertibleException(f"{a} is not invertible modulo {p}^{precision}")
    return pow(a, -1, p**precision)


def residue_mod(p: int, q: Union[int, Fraction], precision: int) -> int:
    """Reduce a p-adic integral rational modulo p^M.

    Raises:
        NotPAdicIntegerException: If p divides the reduced denominator
    """
    q = Fraction(q)
    modulus = p**precision
    if q.denominator % p == 0:
        raise NotPAdicIntegerException(f"{q} is not a {p}-adic integer")
    if precision == 0:
        return 0
    return q.numerator * pow(q.denominator, -1, modulus) % modulus


def digit_expand(p: int, q: Union[int, Fraction], precision: int) -> DigitVector:
    """Base-p digits of q modulo p^M, least significant first.

    Args:
        p: Prime
        q: Rational with denominator coprime to p
        precision: Number of digits M

    Returns:
        Digit vector whose reconstruction is congruent to q mod p^M

    Raises:
        NotPAdicIntegerException: If p divides the denominator
    """
    residue = residue_mod(p, q, precision)
    digits = []
    for _ in range(precision):
        residue, digit = divmod(residue, p)
        digits.append(digit)
    return DigitVector(prime=p, digits=tuple(digits))


def depth_for_radius(p: int, radius: Fraction, strict: bool = False) -> Optional[int]:
    """Smallest M with p^-M <= radius (or < radius when strict).

    Exact rational comparisons only.

    Returns:
        The depth, or None for the degenerate radius 0
    """
    if radius == 0:
        return None
    a, b = radius.numerator, radius.denominator

    def covers(m: int) -> bool:
        # p^-m <= a/b  <=>  b <= a p^m ; strict variant uses <
        if m >= 0:
            lhs, rhs = b, a * p**m
        else:
            lhs, rhs = b * p ** (-m), a
        return lhs < rhs if strict else lhs <= rhs

    m = 0
    if covers(0):
        while covers(m - 1):
            m -= 1
    else:
        while not covers(m):
            m += 1
    return m


def ball_intersect_Zp(
    p: int,
    center: Union[int, Fraction],
    radius: Union[int, Fraction],
    strict: bool = False,
) -> PAdicBall:
    """Intersect the ball B(center, radius) of Q_p with Z_p.

    Args:
        p: Prime
        center: Rational center
        radius: Nonnegative rational radius; 0 means the singleton
        strict: Use the open ball ``|x - c|_p < r`` instead of the closed one

    Returns:
        Empty, a singleton, or a residue class

    Raises:
        InvalidRadiusException: If radius < 0
    """
    center = Fraction(center)
    radius = Fraction(radius)
    if radius < 0:
        raise InvalidRadiusException(f"Radius {radius} is negative")
    v = valuation(p, center)
    if radius == 0:
        if strict or v < 0:
            return PAdicBall.empty(p)
        return PAdicBall.singleton(p, center)
    depth = depth_for_radius(p, radius, strict)
    assert depth is not None
    if depth <= 0:
        return PAdicBall.full(p) if v >= depth else PAdicBall.empty(p)
    if v < 0:
        return PAdicBall.empty(p)
    return PAdicBall.residue_class(p, residue_mod(p, center, depth), depth)


def iota_inverse_ball(ball: PAdicBall) -> HalfOpenInterval:
    """Real interval obtained by reversing the digits of a residue class.

    ``c + p^M Z_p`` with digits b_0..b_{M-1} maps to
    ``sum b_m p^-m + [0, p^{1-M})``, an interval of length p * mu_p(ball).

    Raises:
        DegenerateBallException: If the ball is empty or a singleton
    """
    if not ball.is_class:
        raise DegenerateBallException(f"{ball} has no interval image")
    assert ball.residue is not None and ball.depth is not None
    p = ball.prime
    digits = digit_expand(p, ball.residue, ball.depth)
    left = sum(
        (Fraction(d, p**m) for m, d in enumerate(digits)), start=Fraction(0)
    )
    return HalfOpenInterval(left=left, right=left + Fraction(p, p**ball.depth))


def invert_unit_ball(ball: PAdicBall) -> PAdicBall:
    """Image of a unit residue class under x -> 1/x.

    Raises:
        NotAUnitBallException: If the ball is not a class of depth >= 1 of units
    """
    p = ball.prime
    if not ball.is_class or not ball.depth or ball.residue is None:
        raise NotAUnitBallException(f"{ball} is not contained in Z_{p}^x")
    if ball.residue % p == 0:
        raise NotAUnitBallException(f"{ball} meets {p}Z_{p}")
    return PAdicBall.residue_class(
        p, mod_inverse_prime_power(ball.residue, p, ball.depth), ball.depth
    )


def reconstruct(digits: DigitVector) -> int:
    """Integer in [0, p^M) whose base-p digits are ``digits``."""
    return digits.to_residue()
