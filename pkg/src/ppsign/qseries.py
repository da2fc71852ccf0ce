"""Shifted factorials, binomials, q-binomials at q = -1, the box product
formula, and terminating hypergeometric sums.

Everything here is exact: integers stay integers, everything else is a
`fractions.Fraction`.  No floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError, SingularParameterError

Rational = int | Fraction


def shifted_factorial(a: Rational, n: int) -> Rational:
    """Rising factorial a(a+1)...(a+n-1); empty product for n = 0."""
    if n < 0:
        raise InvalidInputError(f"shifted factorial needs n >= 0, got {n}")
    result: Rational = 1
    for t in range(n):
        result *= a + t
    return result


def binom(n: int, k: int) -> int:
    """Binomial coefficient extended to negative upper index.

    Returns 0 for k < 0 and for 0 <= n < k; for n < 0 uses the polynomial
    extension n(n-1)...(n-k+1)/k!.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    num = 1
    for t in range(k):
        num *= n - t
    q, r = divmod(num, math.factorial(k))
    assert r == 0
    return q


def qbinom_minus1(n: int, k: int) -> int:
    """Gaussian binomial [n k]_q evaluated at q = -1.

    Vanishes for even n and odd k, otherwise reduces to an ordinary
    binomial of the halved arguments.
    """
    if n < 0:
        raise InvalidInputError(f"qbinom_minus1 needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    if n % 2 == 0 and k % 2 == 1:
        return 0
    return math.comb(n // 2, k // 2)


def macmahon_box(a: int, b: int, c: int) -> int:
    """Number of plane partitions in an a x b x c box (product formula)."""
    if min(a, b, c) < 0:
        raise InvalidInputError("box sides must be nonnegative")
    value = Fraction(1)
    for i in range(1, a + 1):
        value *= Fraction(shifted_factorial(c + i, b), shifted_factorial(i, b))
    assert value.denominator == 1
    return int(value)


@dataclass(frozen=True)
class HyperParams:
    """Parameters of a terminating hypergeometric series rFs(upper; lower; z).

    At least one upper parameter must be a nonpositive integer so the sum
    terminates.
    """

    upper: tuple[Rational, ...]
    lower: tuple[Rational, ...]
    argument: Rational = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        if not any(_is_nonpositive_int(a) for a in self.upper):
            raise InvalidInputError(
                "series does not terminate: no nonpositive-integer upper parameter"
            )

    @property
    def terminal_index(self) -> int:
        """Largest k with a nonzero term: min(-a) over terminating uppers."""
        return min(-int(a) for a in self.upper if _is_nonpositive_int(a))


def _is_nonpositive_int(x: Rational) -> bool:
    return (isinstance(x, int) or x.denominator == 1) and x <= 0


def hyper_terminating(p: HyperParams) -> Fraction:
    """Exact finite sum of the terminating hypergeometric series."""
    total = Fraction(0)
    term = Fraction(1)
    n = p.terminal_index
    for k in range(n + 1):
        total += term
        if k == n:
            break
        # extend every Pochhammer factor from length k to k+1
        for a in p.upper:
            term *= a + k
        for idx, b in enumerate(p.lower):
            factor = b + k
            if factor == 0:
                raise SingularParameterError(
                    f"lower parameter {idx} hits zero factor at term {k + 1}"
                )
            term /= factor
        term *= Fraction(p.argument, k + 1)
    return total


def pfaff_saalschutz_rhs(a: Rational, b: Rational, c: Rational, n: int) -> Fraction:
    """Closed form for the Saalschuetzian 3F2[a, b, -n; c, 1+a+b-c-n; 1]."""
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    den = Fraction(shifted_factorial(c, n)) * Fraction(
        shifted_factorial(-a - b + c, n)
    )
    if den == 0:
        raise SingularParameterError("denominator shifted factorial vanishes")
    num = Fraction(shifted_factorial(-a + c, n)) * Fraction(
        shifted_factorial(-b + c, n)
    )
    return num / den
