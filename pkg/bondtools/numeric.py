"""
Exact and certified arithmetic shared by the embedding and bound modules.

Rationals are ``gmpy2.mpq`` values. Irrational quantities (square roots,
logarithms, fractional powers) are enclosed in :class:`IntervalReal` objects
whose endpoints are ``gmpy2.mpfr`` numbers computed with directed rounding,
so the true value always lies inside the interval. Integer ceilings and
floors are only read off an interval once it no longer straddles an integer.
"""
import logging

import gmpy2

__all__ = ["ExactRational", "rational", "IntervalReal", "BoundaryError",
           "ceil_power", "ceil_sqrt_expr", "floor_sqrt_expr", "floor_real_bound",
           "ceil_log", "power_at_least", "power_greater", "refine",
           "DEFAULT_PRECISION", "MAX_PRECISION"]

logger = logging.getLogger(__name__)

DEFAULT_PRECISION = 128
MAX_PRECISION = 1024

ExactRational = type(gmpy2.mpq(0))


class BoundaryError(ArithmeticError):
    """An interval kept straddling an integer up to the maximum precision."""
    pass


def rational(num, den=1):
    """Normalized exact rational ``num/den``."""
    if den == 0:
        raise ZeroDivisionError("Rational with zero denominator.")
    return gmpy2.mpq(num, den)


def _down(prec):
    return gmpy2.context(precision=prec, round=gmpy2.RoundDown)


def _up(prec):
    return gmpy2.context(precision=prec, round=gmpy2.RoundUp)


class IntervalReal(object):
    """
    Closed interval ``[lower, upper]`` of ``mpfr`` bounds with outward rounding.

    :param lower: Lower endpoint
    :param upper: Upper endpoint
    :param precision: Working precision in bits used by the arithmetic below
    :type precision: int
    """
    __slots__ = ("lower", "upper", "precision")

    def __init__(self, lower, upper, precision=DEFAULT_PRECISION):
        if lower > upper:
            raise ValueError("Interval lower bound exceeds its upper bound.")
        self.lower = lower
        self.upper = upper
        self.precision = precision

    @classmethod
    def exact(cls, value, precision=DEFAULT_PRECISION):
        """Tightest enclosure of an integer or rational ``value``."""
        value = gmpy2.mpq(value)
        with _down(precision):
            lo = gmpy2.mpfr(value)
        with _up(precision):
            hi = gmpy2.mpfr(value)
        return cls(lo, hi, precision)

    def __repr__(self):
        return "IntervalReal([%s, %s], %d bits)" % (self.lower, self.upper, self.precision)

    def __contains__(self, value):
        value = gmpy2.mpq(value)
        return gmpy2.mpq(self.lower) <= value <= gmpy2.mpq(self.upper)

    def _coerce(self, other):
        if isinstance(other, IntervalReal):
            return other
        return IntervalReal.exact(other, self.precision)

    def __add__(self, other):
        other = self._coerce(other)
        with _down(self.precision):
            lo = self.lower + other.lower
        with _up(self.precision):
            hi = self.upper + other.upper
        return IntervalReal(lo, hi, self.precision)

    __radd__ = __add__

    def __neg__(self):
        # exact at the endpoints' own precision
        with _down(self.precision):
            lo = -self.upper
            hi = -self.lower
        return IntervalReal(lo, hi, self.precision)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        pairs = [(a, b) for a in (self.lower, self.upper) for b in (other.lower, other.upper)]
        with _down(self.precision):
            lo = min(a * b for a, b in pairs)
        with _up(self.precision):
            hi = max(a * b for a, b in pairs)
        return IntervalReal(lo, hi, self.precision)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.lower <= 0 <= other.upper:
            raise ZeroDivisionError("Interval divisor contains zero.")
        pairs = [(a, b) for a in (self.lower, self.upper) for b in (other.lower, other.upper)]
        with _down(self.precision):
            lo = min(a / b for a, b in pairs)
        with _up(self.precision):
            hi = max(a / b for a, b in pairs)
        return IntervalReal(lo, hi, self.precision)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def sqrt(self):
        if self.upper < 0:
            raise ValueError("Square root of a negative interval.")
        with _down(self.precision):
            lo = gmpy2.sqrt(self.lower) if self.lower > 0 else gmpy2.mpfr(0)
        with _up(self.precision):
            hi = gmpy2.sqrt(self.upper)
        return IntervalReal(lo, hi, self.precision)

    def log(self):
        if self.lower <= 0:
            raise ValueError("Logarithm of an interval reaching zero.")
        with _down(self.precision):
            lo = gmpy2.log(self.lower)
        with _up(self.precision):
            hi = gmpy2.log(self.upper)
        return IntervalReal(lo, hi, self.precision)

    def square(self):
        if self.lower >= 0:
            return self * self
        if self.upper <= 0:
            return (-self) * (-self)
        with _up(self.precision):
            hi = max(self.lower * self.lower, self.upper * self.upper)
            zero = gmpy2.mpfr(0)
        return IntervalReal(zero, hi, self.precision)

    def width(self):
        """Exact width as a rational."""
        return gmpy2.mpq(self.upper) - gmpy2.mpq(self.lower)

    def floor(self):
        """``floor`` of the enclosed value, or None while the interval straddles an integer."""
        lo, hi = _floor(self.lower), _floor(self.upper)
        return lo if lo == hi else None

    def ceil(self):
        lo, hi = -_floor(-gmpy2.mpq(self.lower)), -_floor(-gmpy2.mpq(self.upper))
        return lo if lo == hi else None


def _floor(x):
    # through mpq, so no rounding at the default context precision
    q = gmpy2.mpq(x)
    return int(q.numerator // q.denominator)


def refine(evaluate, rounding="floor", precision=DEFAULT_PRECISION, max_precision=MAX_PRECISION):
    """
    Evaluate ``evaluate(precision) -> IntervalReal`` at increasing precision
    until its floor (or ceiling) is determined.

    :param evaluate: Callable building the enclosure at a given precision
    :param rounding: ``"floor"`` or ``"ceil"``
    :type rounding: str
    :raises BoundaryError: if ``max_precision`` is reached without separation
    """
    while precision <= max_precision:
        interval = evaluate(precision)
        value = interval.floor() if rounding == "floor" else interval.ceil()
        if value is not None:
            return value
        logger.debug("Interval %r straddles an integer, doubling precision.", interval)
        precision *= 2
    raise BoundaryError("Could not separate %s from an integer boundary at %d bits." % (rounding, max_precision))


def ceil_power(base, exp_num, exp_den):
    """
    ``ceil(base ** (exp_num / exp_den))`` for a fractional exponent in ``(0, 1)``.

    The ceiling is the least integer ``c`` with ``c ** exp_den >= base ** exp_num``,
    found with an exact integer root, so there is no rounding at all.

    :type base: int
    :type exp_num: int
    :type exp_den: int
    """
    if base < 0:
        raise ValueError("ceil_power needs a nonnegative base, got %d." % base)
    if exp_den <= 0 or not 0 < exp_num < exp_den:
        raise ValueError("Exponent %d/%d is not in (0, 1)." % (exp_num, exp_den))
    if gmpy2.gcd(exp_num, exp_den) != 1:
        raise ValueError("Exponent %d/%d is not in lowest terms." % (exp_num, exp_den))
    if base == 0:
        return 0
    root, exact = gmpy2.iroot(gmpy2.mpz(base) ** exp_num, exp_den)
    return int(root) if exact else int(root) + 1


def floor_sqrt_expr(c0, c1, c2):
    """Exact ``floor((c0 + sqrt(c1)) / c2)`` for ``c1 >= 0``, ``c2 > 0``."""
    if c1 < 0 or c2 <= 0:
        raise ValueError("floor_sqrt_expr needs c1 >= 0 and c2 > 0.")
    return int((c0 + gmpy2.isqrt(c1)) // c2)


def ceil_sqrt_expr(c0, c1, c2):
    """
    Exact ``ceil((c0 + sqrt(c1)) / c2)`` for ``c1 >= 0``, ``c2 > 0``.

    When ``c1`` is not a perfect square the quotient is irrational, hence never
    an integer, and the ceiling is one more than the floor.
    """
    if c1 < 0 or c2 <= 0:
        raise ValueError("ceil_sqrt_expr needs c1 >= 0 and c2 > 0.")
    r = gmpy2.isqrt(c1)
    if r * r == c1:
        return int(-((-(c0 + r)) // c2))
    return int((c0 + r) // c2) + 1


def power_at_least(n, base, exp_num, exp_den):
    """``n >= base ** (exp_num / exp_den)`` decided as ``n ** exp_den >= base ** exp_num``."""
    if n < 0:
        return False
    return gmpy2.mpz(n) ** exp_den >= gmpy2.mpz(base) ** exp_num


def power_greater(n, base, exp_num, exp_den):
    """Strict variant of :func:`power_at_least`."""
    if n < 0:
        return False
    return gmpy2.mpz(n) ** exp_den > gmpy2.mpz(base) ** exp_num


def ceil_log(x, power=1):
    """
    ``ceil(ln(x) ** power)`` for an integer ``x >= 1``.

    ``ln x`` is transcendental for integers ``x >= 2``, so the interval always
    separates eventually; ``x = 1`` is exact.
    """
    if x < 1:
        raise ValueError("ceil_log needs x >= 1, got %d." % x)
    if x == 1:
        return 0

    def evaluate(prec):
        ln = IntervalReal.exact(x, prec).log()
        value = ln
        for _ in range(power - 1):
            value = value * ln
        return value

    return refine(evaluate, rounding="ceil")


# Closed-form bound shapes ---------------------------------------------------
#
# Each shape maps its integer input to (radicand, exact_value_fn, interval_fn).
# When the radicand is a perfect square the value is rational and is floored
# exactly; otherwise it is irrational and interval refinement terminates.

def _constant_orientable(h, r):
    # 11 + 24(h-1)(3 - r) / (1 - 8h)
    return 11 + 24 * (h - 1) * (3 - r) / (1 - 8 * h)


def _constant_nonorientable(k, r):
    # 11 + 12(k-2)(3 - r) / (1 - 4k)
    return 11 + 12 * (k - 2) * (3 - r) / (1 - 4 * k)


def _triangle_free_orientable(h, r):
    # 7 + 8(h-1) / (1 + r), r = sqrt(2h)
    return 7 + 8 * (h - 1) / (1 + r)


def _triangle_free_nonorientable(k, r):
    # 7 + 4(k-2) / (1 + r), r = sqrt(k)
    return 7 + 4 * (k - 2) / (1 + r)


BOUND_SHAPES = {
    "constant_orientable": (lambda h: 16 * h + 1, _constant_orientable),
    "constant_nonorientable": (lambda k: 8 * k + 1, _constant_nonorientable),
    "triangle_free_orientable": (lambda h: 2 * h, _triangle_free_orientable),
    "triangle_free_nonorientable": (lambda k: k, _triangle_free_nonorientable),
}


def floor_real_bound(expr, genus):
    """
    Certified floor of one of the closed-form genus bounds.

    :param expr: One of the keys of ``BOUND_SHAPES``
    :type expr: str
    :param genus: The orientable or non-orientable genus plugged into the shape
    :type genus: int
    :return: ``floor`` of the real value
    :rtype: int
    """
    if expr not in BOUND_SHAPES:
        raise ValueError("Unknown bound shape %r." % expr)
    radicand_of, shape = BOUND_SHAPES[expr]
    radicand = radicand_of(genus)
    root, exact = gmpy2.iroot(gmpy2.mpz(radicand), 2)
    if exact:
        value = shape(gmpy2.mpq(genus), gmpy2.mpq(root))
        return int(value.numerator // value.denominator)

    def evaluate(prec):
        r = IntervalReal.exact(radicand, prec).sqrt()
        g = IntervalReal.exact(genus, prec)
        return shape(g, r)

    return refine(evaluate, rounding="floor")
