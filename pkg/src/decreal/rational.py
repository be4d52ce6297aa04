"""Exact scalar layer: big rationals and the subring of decimal fractions.

``BigRat`` is the stdlib ``Fraction`` (already reduced, exact, hashable).
``DecFrac`` covers the rationals whose denominator divides a power of ten;
keeping them as ``mant * 10**exp`` pairs makes truncations, digit reads and
carry scans pure integer work.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidLiteral

BigRat = Fraction

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")

_POW10 = {}


def pow10(n):
    """10**n for n >= 0, cached for small exponents."""
    if n > 4096:
        return 10 ** n
    p = _POW10.get(n)
    if p is None:
        p = _POW10[n] = 10 ** n
    return p


def ten_valuation(m):
    """The largest e with 10**e dividing m (m != 0), in O(len * log len).

    Climbs a ladder of squared powers instead of peeling one zero at a
    time, so canonicalizing a mantissa with millions of trailing zeros
    stays cheap.
    """
    m = abs(m)
    if m == 0:
        raise ValueError("10-adic valuation of zero is undefined")
    if m % 10:
        return 0
    ladder = [10]
    while ladder[-1] <= m:
        ladder.append(ladder[-1] ** 2)
    e = 0
    step = 1 << (len(ladder) - 1)
    for p in reversed(ladder):
        while m % p == 0:
            m //= p
            e += step
        step >>= 1
    return e


def rat_add(a, b):
    return Fraction(a) + Fraction(b)


def rat_sub(a, b):
    return Fraction(a) - Fraction(b)


def rat_mul(a, b):
    return Fraction(a) * Fraction(b)


def rat_abs(a):
    return abs(Fraction(a))


def rat_recip(a):
    a = Fraction(a)
    if a == 0:
        raise ZeroDivisionError("reciprocal of zero")
    return 1 / a


def rat_cmp(a, b):
    """-1, 0 or +1 as a <, == or > b."""
    a, b = Fraction(a), Fraction(b)
    return (a > b) - (a < b)


def parse_rat(text):
    """Parse 'num/den' (or a bare integer) into a Fraction."""
    text = text.strip()
    if not _RAT_RE.match(text):
        raise InvalidLiteral(f"not a rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise InvalidLiteral(f"zero denominator: {text!r}") from None


def format_rat(q):
    """Inverse of parse_rat; always prints an explicit denominator."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def ten_smooth(n):
    """True when n (> 0) has no prime factor besides 2 and 5."""
    for p in (2, 5):
        while n % p == 0:
            n //= p
    return n == 1


@dataclass(frozen=True)
class DecFrac:
    """mant * 10**exp with mant not divisible by 10 (and exp = 0 for zero)."""

    mant: int
    exp: int = 0

    def __post_init__(self):
        mant, exp = self.mant, self.exp
        if mant == 0:
            exp = 0
        else:
            e = ten_valuation(mant)
            if e:
                mant //= pow10(e)
                exp += e
        object.__setattr__(self, "mant", mant)
        object.__setattr__(self, "exp", exp)

    @classmethod
    def from_fraction(cls, q):
        q = Fraction(q)
        den = q.denominator
        e2 = e5 = 0
        while den % 2 == 0:
            den //= 2
            e2 += 1
        while den % 5 == 0:
            den //= 5
            e5 += 1
        if den != 1:
            raise ValueError(f"{q} is not a decimal fraction")
        scale = max(e2, e5)
        # multiply up to a common power of ten
        mant = q.numerator * 2 ** (scale - e2) * 5 ** (scale - e5)
        return cls(mant, -scale)

    def to_fraction(self):
        if self.exp >= 0:
            return Fraction(self.mant * pow10(self.exp))
        return Fraction(self.mant, pow10(-self.exp))

    def __add__(self, other):
        if not isinstance(other, DecFrac):
            return NotImplemented
        e = min(self.exp, other.exp)
        return DecFrac(self.mant * pow10(self.exp - e) + other.mant * pow10(other.exp - e), e)

    def __sub__(self, other):
        if not isinstance(other, DecFrac):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, DecFrac):
            return NotImplemented
        return DecFrac(self.mant * other.mant, self.exp + other.exp)

    def __neg__(self):
        return DecFrac(-self.mant, self.exp)

    def __abs__(self):
        return DecFrac(abs(self.mant), self.exp)

    def __bool__(self):
        return self.mant != 0

    def __lt__(self, other):
        return self.to_fraction() < other.to_fraction()

    def __le__(self, other):
        return self.to_fraction() <= other.to_fraction()

    def __str__(self):
        return format_decfrac(self)


def parse_decfrac(text):
    """Parse a plain (non-repeating) decimal literal like '-20.3'."""
    m = re.match(r"^([+-]?)(\d+)(?:\.(\d+))?$", text.strip())
    if not m:
        raise InvalidLiteral(f"not a plain decimal literal: {text!r}")
    sign, intpart, frac = m.group(1), m.group(2), m.group(3) or ""
    mant = int(intpart + frac)
    if sign == "-":
        mant = -mant
    return DecFrac(mant, -len(frac))


def format_decfrac(f):
    """Inverse of parse_decfrac (canonical form, no trailing zeros)."""
    if f.mant == 0:
        return "0"
    sign = "-" if f.mant < 0 else ""
    digits = str(abs(f.mant))
    if f.exp >= 0:
        return sign + digits + "0" * f.exp
    if -f.exp < len(digits):
        cut = len(digits) + f.exp
        return sign + digits[:cut] + "." + digits[cut:]
    return sign + "0." + "0" * (-f.exp - len(digits)) + digits


def approx_recip(a, k):
    """A decimal fraction b with |a*b - 1| < 1/k, exactly.

    Works by scaling: pick the least l >= 1 with |num(a)| / 10**l < 1/k, then
    the integer p minimizing |p*num(a) - 10**l| (ties resolved toward the p of
    smaller absolute value).  b = p * den(a) / 10**l then satisfies the bound
    because |a*b - 1| = |p*num(a) - 10**l| / 10**l <= (|num(a)|/2) / 10**l.
    """
    a = Fraction(a)
    if a == 0:
        raise ZeroDivisionError("approx_recip of zero")
    if k < 1:
        raise ValueError("k must be a positive integer")
    num, den = a.numerator, a.denominator
    l = 1
    while pow10(l) <= abs(num) * k:
        l += 1
    target = pow10(l)
    p_lo = target // num  # floor, also for negative num
    best = min((p_lo, p_lo + 1), key=lambda p: (abs(p * num - target), abs(p)))
    b = DecFrac(best * den, -l)
    assert abs(a * b.to_fraction() - 1) * k < 1
    return b
