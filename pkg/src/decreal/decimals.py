"""Decimals as signed digit streams.

A decimal here is a formal object ``(-) sum of digit(n) * 10**n`` over
positions ``n <= order`` subject to three structural conditions:

* the digit at ``order`` is nonzero unless ``order == 0``;
* no infinite trailing run of nines;
* the all-zero stream never carries a minus sign.

``TermDecimal`` stores finitely many digits.  ``FalseDecimal`` is the word
obtained from a terminating one by borrowing one unit at its lowest nonzero
digit and paying it back with an infinite tail of nines; such words are
value-equal to their base but sit immediately below it in the digitwise
order, forming a gap pair.  ``Decimal`` is the general stream, backed either
by a ``TermDecimal``, by an exact ``Fraction``, or by an arbitrary digit
producer plus a nine-escape witness.
"""

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional

from .errors import (
    EmptySetError,
    InvalidLiteral,
    InvariantViolation,
    OracleUnavailable,
)
from .rational import DecFrac, pow10, ten_smooth

# ---------------------------------------------------------------------------
# terminating decimals


@dataclass(frozen=True)
class TermDecimal:
    """Finitely many stored digits: sign * sum(digits[i] * 10**(order - i)).

    Canonical form: the last stored digit is nonzero (unless the value is
    zero, stored as ``(0,)`` with positive sign), and a zero top digit forces
    order 0.
    """

    sign: int
    order: int
    digits: tuple

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.order < 0:
            raise ValueError("order must be >= 0")
        if not self.digits or any(not (0 <= d <= 9) for d in self.digits):
            raise ValueError("digits must be a nonempty tuple of 0..9")
        if self.digits == (0,):
            if self.sign < 0 or self.order != 0:
                raise ValueError("zero must be +, order 0")
            return
        if self.digits[-1] == 0:
            raise ValueError("stored digits must not end in zero")
        if self.digits[0] == 0 and self.order != 0:
            raise ValueError("zero top digit forces order 0")

    @classmethod
    def from_digits(cls, sign, order, digits):
        """Canonicalize an arbitrary digit window into a TermDecimal."""
        digits = list(digits)
        while digits and digits[0] == 0 and order > 0:
            digits.pop(0)
            order -= 1
        while digits and digits[-1] == 0:
            digits.pop()
        if not digits:
            return TERM_ZERO
        return cls(1 if sign >= 0 else -1, order, tuple(digits))

    @property
    def low(self):
        """Position of the lowest stored digit (the lowest nonzero one)."""
        return self.order - len(self.digits) + 1

    @property
    def is_zero(self):
        return self.digits == (0,)

    def digit(self, n):
        if n > self.order:
            return 0
        i = self.order - n
        return self.digits[i] if i < len(self.digits) else 0

    def leading_index(self):
        """Position of the most significant nonzero digit, None for zero."""
        if self.is_zero:
            return None
        for i, d in enumerate(self.digits):
            if d:
                return self.order - i
        raise AssertionError("canonical nonzero TermDecimal has a nonzero digit")

    def decfrac(self):
        mant = 0
        for d in self.digits:
            mant = mant * 10 + d
        return DecFrac(self.sign * mant, self.low)

    def value(self):
        return self.decfrac().to_fraction()

    def neg(self):
        if self.is_zero:
            return self
        return TermDecimal(-self.sign, self.order, self.digits)


TERM_ZERO = TermDecimal(1, 0, (0,))


def r_map(t):
    """Exact value of a terminating decimal inside the decimal fractions."""
    return t.decfrac()


def _int_digits(m):
    """Decimal digits of m >= 0, top down, immune to the int-to-str cap."""
    if m.bit_length() < 13000:  # < ~3900 digits: direct conversion is safe
        return [int(c) for c in str(m)]
    half = m.bit_length() * 30103 // 200000  # ~ half the decimal length
    hi, lo = divmod(m, pow10(half))
    low = _int_digits(lo)
    return _int_digits(hi) + [0] * (half - len(low)) + low


def r_inv(f):
    """The terminating decimal whose value is the decimal fraction f."""
    if f.mant == 0:
        return TERM_ZERO
    digits = _int_digits(abs(f.mant))
    top = f.exp + len(digits) - 1
    if top < 0:
        digits = [0] * (-top) + digits
        top = 0
    return TermDecimal(1 if f.mant > 0 else -1, top, tuple(digits))


# ---------------------------------------------------------------------------
# false decimals (nine-tail words)


@dataclass(frozen=True)
class FalseDecimal:
    """The nine-tail word value-equal to ``base``.

    Below the lowest nonzero digit of ``base`` every digit is 9, that digit
    itself drops by one, and everything above is unchanged.  The word for
    zero is the excluded minus-zero stream.
    """

    base: TermDecimal

    @property
    def sign(self):
        # the false zero is the minus-signed all-zero word
        return -1 if self.base.is_zero else self.base.sign

    @property
    def order(self):
        b = self.base
        if b.is_zero:
            return 0
        # a lone top digit 1 turns into 0 and the order drops by one
        if b.low == b.order and b.order > 0 and b.digit(b.order) == 1:
            return b.order - 1
        return b.order

    def digit(self, n):
        b = self.base
        if b.is_zero:
            return 0
        if n < b.low:
            return 9
        if n == b.low:
            return b.digit(n) - 1
        return b.digit(n)

    @property
    def is_false_zero(self):
        return self.base.is_zero

    def value(self):
        return self.base.value()


def bar(t):
    """The false decimal paired with a terminating one."""
    return FalseDecimal(t)


def bar_inv(f):
    """Inverse of bar: recover the terminating base of a false decimal."""
    return f.base


# ---------------------------------------------------------------------------
# general decimals


@dataclass(frozen=True)
class NineEscapeWitness:
    """Certifies no nine-tail: escape(n) is a position m < n with digit(m) != 9."""

    escape: Callable[[int], int]


def searched_nine_escape(digit_fn):
    """Escape witness found by plain downward search (use for honest streams)."""

    def escape(n):
        m = n - 1
        while digit_fn(m) == 9:
            m -= 1
        return m

    return NineEscapeWitness(escape)


def digit_of_fraction(q, n):
    """Digit at 10**n of the standard (no nine-tail) expansion of |q|."""
    num, den = abs(q.numerator), q.denominator
    if n >= 0:
        return num // (den * pow10(n)) % 10
    return num * pow10(-n) // den % 10


def interval_digit(lo, hi, n):
    """The digit at 10**n shared by every value in [lo, hi], or None.

    Values are read through the no-nine-tail expansion of their absolute
    value, so the digit is only settled when the whole bracket avoids the
    cell boundaries (multiples of 10**n, mirrored around zero).
    """
    cell = Fraction(pow10(n)) if n >= 0 else Fraction(1, pow10(-n))
    if lo > hi:
        raise ValueError("empty interval")
    if lo >= 0:
        i1 = (lo / cell).__floor__()
        i2 = (hi / cell).__floor__()
        return i1 % 10 if i1 == i2 else None
    if hi <= 0:
        return interval_digit(-hi, -lo, n)
    return 0 if max(-lo, hi) < cell else None


class Decimal:
    """A decimal digit stream with a terminating, rational or stream backing."""

    __slots__ = ("sign", "order", "_kind", "_term", "_value", "_producer", "_witness", "_memo")

    def __init__(self, kind, sign, order, term=None, value=None, producer=None, witness=None):
        object.__setattr__(self, "_kind", kind)
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_term", term)
        object.__setattr__(self, "_value", value)
        object.__setattr__(self, "_producer", producer)
        object.__setattr__(self, "_witness", witness)
        object.__setattr__(self, "_memo", {} if kind == "stream" else None)

    def __setattr__(self, name, value):
        raise AttributeError("Decimal is immutable")

    # -- constructors

    @classmethod
    def from_term(cls, t):
        return cls("terminating", t.sign, t.order, term=t)

    @classmethod
    def from_fraction(cls, q):
        q = Fraction(q)
        if q == 0:
            return cls.from_term(TERM_ZERO)
        sign = 1 if q > 0 else -1
        aq = abs(q)
        order = len(str(aq.numerator // aq.denominator)) - 1 if aq >= 1 else 0
        return cls("rational", sign, order, value=q)

    @classmethod
    def from_int(cls, n):
        return cls.from_fraction(Fraction(n))

    @classmethod
    def from_stream(cls, sign, order, producer, witness):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if order < 0:
            raise ValueError("order must be >= 0")
        return cls("stream", sign, order, producer=producer, witness=witness)

    @classmethod
    def zero(cls):
        return cls.from_term(TERM_ZERO)

    # -- digit access

    def digit(self, n):
        if n > self.order:
            return 0
        if self._kind == "terminating":
            return self._term.digit(n)
        if self._kind == "rational":
            return digit_of_fraction(self._value, n)
        d = self._memo.get(n)
        if d is None:
            d = self._producer(n)
            if not isinstance(d, int) or not 0 <= d <= 9:
                raise InvariantViolation(f"stream produced {d!r}", position=n)
            self._memo[n] = d
        return d

    # -- exact views

    @property
    def backing(self):
        return self._kind

    @property
    def has_exact_value(self):
        return self._kind != "stream"

    def value(self):
        if self._kind == "terminating":
            return self._term.value()
        if self._kind == "rational":
            return self._value
        raise OracleUnavailable("stream backing has no exact value")

    @property
    def nine_escape(self):
        return self._witness

    def is_zero(self):
        return self.has_exact_value and self.value() == 0

    def leading_index(self):
        """Position of the most significant nonzero digit, None for zero."""
        if self._kind == "terminating":
            return self._term.leading_index()
        if self._kind == "stream":
            raise OracleUnavailable("leading index of a stream is not observable")
        q = abs(self._value)
        if q == 0:
            return None
        if q >= 1:
            return self.order
        num, den, pos = q.numerator, q.denominator, 0
        while num < den:
            num *= 10
            pos -= 1
        return pos

    # -- structure

    def neg(self):
        if self._kind == "terminating":
            return Decimal.from_term(self._term.neg())
        if self._kind == "rational":
            return Decimal.from_fraction(-self._value)
        return Decimal("stream", -self.sign, self.order,
                       producer=self._producer, witness=self._witness)

    def abs(self):
        return self if self.sign > 0 else self.neg()

    def __eq__(self, other):
        if not isinstance(other, Decimal):
            return NotImplemented
        if self.has_exact_value and other.has_exact_value:
            return self.value() == other.value()
        return self is other

    def __hash__(self):
        if self.has_exact_value:
            return hash(self.value())
        return id(self)

    def __repr__(self):
        if self.has_exact_value:
            return f"Decimal({format_decimal(self)!r})"
        return f"Decimal(<stream>, sign={self.sign}, order={self.order})"


def truncate(d, m):
    """Keep the digits of d at positions >= -m, zero below, canonicalized.

    The truncation of a tiny negative decimal collapses to plain zero (the
    minus-signed all-zero word is excluded).
    """
    if d.has_exact_value:
        q = d.value()
        num, scale = abs(q.numerator), q.denominator
        if m >= 0:
            num *= pow10(m)
        else:  # cutting above the point scales the denominator instead
            scale *= pow10(-m)
        mant = num // scale if q >= 0 else -(num // scale)
        return r_inv(DecFrac(mant, -m))
    digits = [d.digit(n) for n in range(d.order, -m - 1, -1)]
    return TermDecimal.from_digits(d.sign, d.order, digits)


def digit_at(d, n):
    """Digit of d at 10**n (module-level face of Decimal.digit)."""
    return d.digit(n)


def negate(x, extended=False):
    """Sign flip on decimals and false decimals.

    With ``extended=True`` the two zero words swap: plain zero goes to the
    minus-zero word and back.  Without it zero is a fixed point.
    """
    if isinstance(x, Decimal):
        if x.has_exact_value and x.value() == 0:
            return FalseDecimal(TERM_ZERO) if extended else x
        return x.neg()
    if isinstance(x, TermDecimal):
        if x.is_zero:
            return FalseDecimal(x) if extended else x
        return x.neg()
    if isinstance(x, FalseDecimal):
        if x.base.is_zero:
            return Decimal.zero() if extended else x
        return FalseDecimal(x.base.neg())
    raise TypeError(f"cannot negate {type(x).__name__}")


# ---------------------------------------------------------------------------
# order


class Verdict(Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class SeparationWitness:
    """Truncations separate: r(e|n) - r(d|n) > 1/k exactly for all n >= n0."""

    k: int
    n0: int


@dataclass(frozen=True)
class Comparison:
    verdict: Verdict
    witness: Optional[SeparationWitness] = None


def _sep_from_position(t):
    # a proven gap > 10**t turns into a witness with 1/k = 10**t
    return SeparationWitness(pow10(-t) if t < 0 else 1, max(1, -t))


def _sep_nonneg(lo, hi):
    """Witness for two nonnegative exact-backed decimals with lo < hi."""
    n = max(lo.order, hi.order)
    while lo.digit(n) == hi.digit(n):
        n -= 1
    gap = hi.digit(n) - lo.digit(n)
    assert gap > 0
    if gap >= 2:
        return _sep_from_position(n)
    m = n - 1
    while lo.digit(m) == 9:  # terminates: exact expansions have no nine tail
        m -= 1
    return _sep_from_position(m)


def _separation(lo, hi):
    """Witness for exact-backed lo < hi, any signs."""
    vlo, vhi = lo.value(), hi.value()
    if vlo >= 0:
        return _sep_nonneg(lo, hi)
    if vhi <= 0:
        return _sep_nonneg(hi.abs(), lo.abs())
    # straddling zero: either side alone already separates the truncations
    side = hi if vhi > 0 else lo.abs()
    return _sep_nonneg(Decimal.zero(), side)


def _leading_scan(d, budget):
    """Position of the top nonzero digit of |d|, scanning at most budget digits."""
    n = d.order
    for _ in range(budget):
        if d.digit(n) != 0:
            return n
        n -= 1
    return None


def _magnitude_scan(a, b, budget):
    """First position (from the top) where |a| and |b| differ; None if tied."""
    n = max(a.order, b.order)
    steps = 0
    while steps < budget:
        if a.digit(n) != b.digit(n):
            return n
        n -= 1
        steps += 1
    return None


def _nine_free_position(d, n, budget):
    """Some position m < n with digit(m) != 9, via scan then escape witness."""
    m = n - 1
    if d.has_exact_value:
        while d.digit(m) == 9:
            m -= 1
        return m
    for _ in range(budget):
        if d.digit(m) != 9:
            return m
        m -= 1
    w = d.nine_escape
    if w is None:
        return None
    m = w.escape(n)
    if not m < n or d.digit(m) == 9:
        raise InvariantViolation("nine-escape witness lied", position=m)
    return m


def compare(d, e, budget=128):
    """Digitwise order on decimals.

    Exact backings on both sides decide equality exactly.  Otherwise digits
    are scanned from the top; a tie within ``budget`` positions comes back
    UNDECIDED, while a decision carries a separation witness built from the
    first differing digit (a digit gap of one needs a nine-free position
    below, found by scanning or by the stream's escape witness).
    """
    if d.has_exact_value and e.has_exact_value:
        vd, ve = d.value(), e.value()
        if vd == ve:
            return Comparison(Verdict.EQUAL)
        if vd < ve:
            return Comparison(Verdict.LESS, _separation(d, e))
        return Comparison(Verdict.GREATER, _separation(e, d))

    if d.sign != e.sign:
        # a minus word sits below a plus word; the witness needs the leading
        # digit of some side known to be nonzero
        neg, pos = (d, e) if d.sign < 0 else (e, d)
        t = neg.leading_index() if neg.has_exact_value else _leading_scan(neg.abs(), budget)
        if t is None:
            t = pos.leading_index() if pos.has_exact_value else _leading_scan(pos, budget)
        if t is None:
            return Comparison(Verdict.UNDECIDED)
        # truncation gap is at least 10**t; halve for strictness
        w = SeparationWitness(2 * (pow10(-t) if t < 0 else 1), max(1, -t))
        verdict = Verdict.LESS if d.sign < 0 else Verdict.GREATER
        return Comparison(verdict, w)

    a, b = d.abs(), e.abs()
    n = _magnitude_scan(a, b, budget)
    if n is None:
        return Comparison(Verdict.UNDECIDED)
    small, big = (a, b) if a.digit(n) < b.digit(n) else (b, a)
    gap = big.digit(n) - small.digit(n)
    if gap >= 2:
        w = _sep_from_position(n)
    else:
        m = _nine_free_position(small, n, budget)
        if m is None:
            return Comparison(Verdict.UNDECIDED)
        w = _sep_from_position(m)
    smaller_is_d = small is a
    if d.sign > 0:
        verdict = Verdict.LESS if smaller_is_d else Verdict.GREATER
    else:
        verdict = Verdict.GREATER if smaller_is_d else Verdict.LESS
    return Comparison(verdict, w)


def check_separation(d, e, w, samples=16):
    """Exact spot-check of a separation witness for d < e."""
    for n in range(w.n0, w.n0 + samples):
        if not truncate(e, n).value() - truncate(d, n).value() > Fraction(1, w.k):
            return False
    return True


def _is_false_zero(x):
    return isinstance(x, FalseDecimal) and x.is_false_zero


def _is_plain_zero(x):
    if isinstance(x, TermDecimal):
        return x.is_zero
    return isinstance(x, Decimal) and x.has_exact_value and x.value() == 0


def compare_extended(x, y, budget=128):
    """Word order on decimals and false decimals together (no witnesses).

    The two zero words are treated as equal; between a terminating decimal
    and its false twin the nine-tail word is the smaller one.
    """
    zx, zy = _is_plain_zero(x) or _is_false_zero(x), _is_plain_zero(y) or _is_false_zero(y)
    if zx and zy:
        return Comparison(Verdict.EQUAL)
    if x.sign != y.sign:
        return Comparison(Verdict.LESS if x.sign < y.sign else Verdict.GREATER)
    if _word_equal_exact(x, y):
        return Comparison(Verdict.EQUAL)
    exact = _is_exact_face(x) and _is_exact_face(y)
    n = max(x.order, y.order)
    steps = 0
    while exact or steps < budget:
        dx, dy = x.digit(n), y.digit(n)
        if dx != dy:
            if x.sign > 0:
                return Comparison(Verdict.LESS if dx < dy else Verdict.GREATER)
            return Comparison(Verdict.LESS if dx > dy else Verdict.GREATER)
        n -= 1
        steps += 1
    return Comparison(Verdict.UNDECIDED)


def _is_exact_face(x):
    if isinstance(x, (TermDecimal, FalseDecimal)):
        return True
    return isinstance(x, Decimal) and x.has_exact_value


def _word_equal_exact(x, y):
    fx, fy = isinstance(x, FalseDecimal), isinstance(y, FalseDecimal)
    if fx != fy:
        return False  # nine-tail words never coincide with true decimals
    if fx:
        return x.base == y.base
    if _is_exact_face(x) and _is_exact_face(y):
        return x.value() == y.value() and x.sign == y.sign
    return x is y


# ---------------------------------------------------------------------------
# suprema of finite sets


class _SupEngine:
    """Nested digitwise filter: fix digits from the top, keep the extremal words."""

    def __init__(self, items, mode):
        self.mode = mode
        pick = max if mode == "max" else min
        self.top = pick(x.order for x in items)
        self.survivors = [x for x in items if x.order == self.top]
        self.pos = self.top + 1
        self.fixed = {}

    def advance(self):
        p = self.pos - 1
        ds = [x.digit(p) for x in self.survivors]
        best = max(ds) if self.mode == "max" else min(ds)
        self.survivors = [x for x, d in zip(self.survivors, ds) if d == best]
        self.fixed[p] = best
        self.pos = p

    def digit(self, n):
        if n > self.top:
            return 0
        while self.pos > n:
            self.advance()
        return self.fixed[n]


def sup_finite(elems, domain="extended"):
    """Supremum of a finite set of decimals / false decimals.

    Digits are produced by the nested filter from the order proof: take the
    extremal order, then the extremal digit position by position, keeping
    only the words that attain it.  With ``domain="real"`` a nine-tail result
    is replaced by its terminating twin.
    """
    if domain not in ("extended", "real"):
        raise ValueError(f"unknown domain {domain!r}")
    items = list(elems)
    if not items:
        raise EmptySetError("sup of the empty set")
    for x in items:
        if not isinstance(x, (Decimal, FalseDecimal)):
            raise TypeError(f"unsupported element {type(x).__name__}")

    nonneg = [x for x in items if x.sign > 0]
    if nonneg:
        engine, sign = _SupEngine(nonneg, "max"), 1
    else:
        engine, sign = _SupEngine(items, "min"), -1

    # false words are exact, so they separate from everything else at a
    # finite depth; run the filter until the surviving kind is settled
    while len({isinstance(x, FalseDecimal) for x in engine.survivors}) > 1:
        engine.advance()

    if isinstance(engine.survivors[0], FalseDecimal):
        while len({x.base for x in engine.survivors}) > 1:
            engine.advance()
        winner = engine.survivors[0]
        if domain == "real":
            return Decimal.from_term(bar_inv(winner))
        return winner

    if all(x.has_exact_value for x in engine.survivors):
        while len({x.value() for x in engine.survivors}) > 1:
            engine.advance()
        return engine.survivors[0]

    return Decimal.from_stream(sign, engine.top, engine.digit,
                               searched_nine_escape(engine.digit))


def inf_finite(elems, domain="extended"):
    """Infimum via the reflection inf(U) = -sup(-U)."""
    ext = domain == "extended"
    flipped = [negate(x, extended=ext) for x in elems]
    return negate(sup_finite(flipped, domain), extended=ext)


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class ValidationReport:
    depth: int
    positions_checked: int


def validate_prefix(d, depth):
    """Sample the structural conditions on the digits down to 10**-depth.

    Raises InvariantViolation when the observable window shows a zero top
    digit above order 0, a run of nines of length >= depth still open at the
    bottom of the window with no usable escape, or an all-zero minus-signed
    prefix that nothing certifies as nonzero.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if d.order > 0 and d.digit(d.order) == 0:
        raise InvariantViolation("zero digit at a positive order", position=d.order)
    run = 0
    seen_nonzero = False
    count = 0
    for n in range(d.order, -depth - 1, -1):
        g = d.digit(n)
        count += 1
        if g != 0:
            seen_nonzero = True
        run = run + 1 if g == 9 else 0
    bottom = -depth
    if run >= depth:
        if d.has_exact_value:
            m = bottom - 1
            while d.digit(m) == 9:  # exact expansions escape eventually
                m -= 1
        else:
            w = d.nine_escape
            if w is None:
                raise InvariantViolation(
                    f"run of {run} nines with no escape below 10**{bottom}",
                    position=bottom)
            m = w.escape(bottom)
            if not m < bottom or d.digit(m) == 9:
                raise InvariantViolation("nine-escape witness lied", position=m)
    if not seen_nonzero and d.sign < 0:
        if not (d.has_exact_value and d.value() != 0):
            raise InvariantViolation(
                "minus sign on an all-zero prefix", position=bottom)
    return ValidationReport(depth=depth, positions_checked=count)


# ---------------------------------------------------------------------------
# literals

_DEC_RE = re.compile(r"^([+-]?)(\d+)(?:\.(\d*))?(?:\((\d+)\))?$")


def parse_decimal(text):
    """Parse ``[-] digits ['.' digits] ['(' digits ')']`` into a Decimal.

    A parenthesized block repeats forever: ``0.(3)`` is a third.  An all-nine
    block would name a nine-tail word and is rejected.
    """
    m = _DEC_RE.match(text.strip())
    if not m:
        raise InvalidLiteral(f"not a decimal literal: {text!r}")
    sign_s, int_s, frac_s, block_s = m.groups()
    if frac_s is None:
        frac_s = ""
    elif frac_s == "" and block_s is None:
        raise InvalidLiteral(f"dangling decimal point: {text!r}")
    sign = -1 if sign_s == "-" else 1
    f = len(frac_s)
    base = Fraction(int(int_s + frac_s), pow10(f))
    if block_s:
        if set(block_s) == {"9"}:
            raise InvalidLiteral("a repeating block of nines names a nine-tail word")
        base += Fraction(int(block_s), pow10(f) * (pow10(len(block_s)) - 1))
        if int(block_s):
            return Decimal.from_fraction(sign * base)
    return Decimal.from_term(r_inv(DecFrac.from_fraction(sign * base)))


def format_decimal(d):
    """Literal for an exact-backed decimal; repeating part in parentheses."""
    if not d.has_exact_value:
        raise OracleUnavailable("cannot name a stream exactly")
    q = d.value()
    if q == 0:
        return "0"
    if ten_smooth(q.denominator):
        return str(DecFrac.from_fraction(q))
    sign = "-" if q < 0 else ""
    num, den = abs(q.numerator), q.denominator
    ip, rem = divmod(num, den)
    digits = []
    seen = {}
    while rem and rem not in seen:
        seen[rem] = len(digits)
        rem *= 10
        digits.append(str(rem // den))
        rem %= den
    if not rem:
        return sign + str(ip) + ("." + "".join(digits) if digits else "")
    start = seen[rem]
    pre, block = "".join(digits[:start]), "".join(digits[start:])
    return f"{sign}{ip}.{pre}({block})"


def render_digits(d, frac_digits):
    """Plain positional rendering with exactly frac_digits places shown."""
    sign = "-" if d.sign < 0 else ""
    ip = "".join(str(d.digit(n)) for n in range(d.order, -1, -1))
    if frac_digits <= 0:
        return sign + ip
    fp = "".join(str(d.digit(-i)) for i in range(1, frac_digits + 1))
    return f"{sign}{ip}.{fp}"
