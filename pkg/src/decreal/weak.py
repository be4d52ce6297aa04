"""Hinted arithmetic on decimal streams.

Adding or multiplying two decimals digit by digit stumbles on exactly one
obstruction: nobody can tell, from finitely many digits, whether the result
is about to terminate (and if so, which of its two spellings to emit).  A
*hint* disposes of the obstruction by declaring the order of the result
and, when the result terminates, the whole terminating answer.  Everything
else is honest bounded lookahead:

* each digit of a sum scans below its position for the first digit pair
  that settles the carry (pair sum != 9) or the borrow (unequal digits);
* each digit of a product squeezes an exact truncation bracket until it
  fits inside one digit cell.

Both scans halt on every input whose result really is non-terminating,
which is precisely what a correct hint promises.  Hints also travel as
single positive integers, ``(2k + 1) * 2**r``: order in the odd part,
terminating payload (if any) in the 2-adic part.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .decimals import (
    Decimal,
    TERM_ZERO,
    TermDecimal,
    Verdict,
    compare,
    digit_of_fraction,
    interval_digit,
    r_inv,
    r_map,
    searched_nine_escape,
    truncate,
)
from .errors import HintMismatch, MalformedHint, OracleUnavailable
from .rational import DecFrac, pow10, ten_smooth
from .words import bin_lsb_encode, decode_xr, encode_xr, traced

# ---------------------------------------------------------------------------
# hints


@dataclass(frozen=True)
class Hint:
    """What a digit-by-digit computation cannot find out on its own.

    ``order`` bounds the result: every digit above it is zero.  A non-None
    ``terminating`` carries the entire answer for the terminating case; its
    order must agree with the hint order.
    """

    order: int
    terminating: Optional[TermDecimal] = None

    def __post_init__(self):
        if self.order < 0:
            raise MalformedHint("hint order must be >= 0")
        if self.terminating is not None and self.terminating.order != self.order:
            raise MalformedHint("payload order disagrees with the hint order")


_TERMINATOR = 10


def _payload_code(t: TermDecimal) -> int:
    """Base-11 packing of a terminating decimal, least significant first.

    The letter stream is: sign (0 plus / 1 minus), the bits of the order
    (least first), the stored digits from the top down, then the terminator
    letter 10 -- which doubles as the guarantee that the code is nonzero.
    """
    seq = [0 if t.sign > 0 else 1]
    seq.extend(int(b) for b in bin_lsb_encode(t.order))
    seq.extend(t.digits)
    seq.append(_TERMINATOR)
    code = 0
    for v in reversed(seq):
        code = code * 11 + v
    return code


def _payload_decode(code: int, order: int) -> TermDecimal:
    seq = []
    while code:
        code, v = divmod(code, 11)
        seq.append(v)
    if not seq or seq[-1] != _TERMINATOR:
        raise MalformedHint("payload lacks its terminator letter")
    seq.pop()
    if _TERMINATOR in seq:
        raise MalformedHint("stray terminator letter inside the payload")
    if not seq:
        raise MalformedHint("empty payload")
    sign_letter = seq.pop(0)
    if sign_letter not in (0, 1):
        raise MalformedHint(f"bad sign letter {sign_letter}")
    bits = bin_lsb_encode(order)
    if len(seq) < len(bits) + 1:
        raise MalformedHint("payload too short for its order field")
    if [str(v) for v in seq[: len(bits)]] != bits:
        raise MalformedHint("payload order bits disagree with the hint order")
    digits = seq[len(bits):]
    try:
        return TermDecimal(-1 if sign_letter else 1, order, tuple(digits))
    except ValueError as exc:
        raise MalformedHint(str(exc)) from None


def hint_encode(h: Hint) -> int:
    r = 0 if h.terminating is None else 1 + _payload_code(h.terminating)
    return (2 * h.order + 1) << r


def hint_decode(x: int) -> Hint:
    if not isinstance(x, int) or x <= 0:
        raise MalformedHint("a hint travels as a positive integer")
    r = (x & -x).bit_length() - 1
    order = ((x >> r) - 1) // 2
    if r == 0:
        return Hint(order, None)
    return Hint(order, _payload_decode(r - 1, order))


def compute_hint(op: str, d: Decimal, e: Decimal) -> Hint:
    """Oracle for the hint of ``d op e``; needs exact operand values."""
    if op not in ("add", "mul"):
        raise ValueError(f"unknown operation {op!r}")
    if not (d.has_exact_value and e.has_exact_value):
        raise OracleUnavailable("hints are only computable from exact operands")
    vd, ve = d.value(), e.value()
    v = vd + ve if op == "add" else vd * ve
    if v == 0:
        return Hint(0, TERM_ZERO)
    av = abs(v)
    order = len(str(av.numerator // av.denominator)) - 1 if av >= 1 else 0
    if ten_smooth(v.denominator):
        return Hint(order, r_inv(DecFrac.from_fraction(v)))
    return Hint(order, None)


# ---------------------------------------------------------------------------
# addition


def add_digit_rule(d: Decimal, e: Decimal, n: int) -> int:
    """One digit of ``d + e`` in the two reduced sign configurations.

    Both operands nonnegative: scan positions below n for the first pair
    whose digits do not sum to 9; that pair tells whether a carry reaches n.
    Second operand negative with ``|e| <= d``: scan for the first unequal
    pair, which tells whether a borrow reaches n.  Either scan runs forever
    only if the true result terminates at or above n -- the case a correct
    hint never routes here.
    """
    if d.sign < 0:
        raise ValueError("reduced cases require a nonnegative first operand")
    if e.sign < 0:
        a, b = d, e.abs()
        s0 = a.digit(n) - b.digit(n)
        i = 1
        while True:
            da, db = a.digit(n - i), b.digit(n - i)
            if da != db:
                return (s0 if da > db else s0 - 1) % 10
            i += 1
    s0 = d.digit(n) + e.digit(n)
    i = 1
    while True:
        t = d.digit(n - i) + e.digit(n - i)
        if t != 9:
            return (s0 if t < 9 else s0 + 1) % 10
        i += 1


def weak_add(d: Decimal, e: Decimal, hint: Hint, sign_budget=4096) -> Decimal:
    """The sum of two decimals under a hint.

    A terminating hint is the whole answer.  Otherwise the sign and the
    reduced configuration are found by comparing magnitudes (bounded by
    ``sign_budget``; a tie means the sum would be zero, contradicting the
    hint), and every digit comes from ``add_digit_rule``.  Cheap sanity
    checks around the hinted order raise ``HintMismatch`` early, but a
    subtly wrong hint can still only corrupt the result via the order
    field -- digits are computed, never trusted.
    """
    if hint.terminating is not None:
        return Decimal.from_term(hint.terminating)
    if d.sign == e.sign:
        sign = d.sign
        a, b = d.abs(), e.abs()
    else:
        c = compare(d.abs(), e.abs(), budget=sign_budget)
        if c.verdict in (Verdict.EQUAL, Verdict.UNDECIDED):
            raise HintMismatch(
                "magnitudes look equal: the sum terminates, but the hint says otherwise"
            )
        big, small = (d, e) if c.verdict is Verdict.GREATER else (e, d)
        sign = big.sign
        a, b = big.abs(), small.abs().neg()

    def producer(n):
        return add_digit_rule(a, b, n)

    if hint.order > 0 and producer(hint.order) == 0:
        raise HintMismatch("zero digit at the hinted (positive) order")
    if producer(hint.order + 1) != 0:
        raise HintMismatch("nonzero digit above the hinted order")
    return Decimal.from_stream(sign, hint.order, producer, searched_nine_escape(producer))


# ---------------------------------------------------------------------------
# multiplication


@dataclass(frozen=True)
class MulTruncation:
    """The exact product of the depth-l truncations of two decimals."""

    depth: int
    value: DecFrac


def mul_truncation(d: Decimal, e: Decimal, depth: int) -> MulTruncation:
    prod = r_map(truncate(d, depth)) * r_map(truncate(e, depth))
    return MulTruncation(depth, prod)


def _pow10f(m) -> Fraction:
    return Fraction(pow10(m)) if m >= 0 else Fraction(1, pow10(-m))


def mul_stabilized_digit(d: Decimal, e: Decimal, n: int) -> int:
    """Digit at 10**n of the truncation product at depth ``max(1, K - n + 2)``.

    K is the larger operand order.  At that depth the product sits within
    ``2 * 10**(n - 1)`` of the true value, which pins the digit *near* the
    truth but -- when the bracket straddles a cell boundary -- not exactly;
    see ``mul_certified_digit`` for the version that keeps deepening until
    the digit is provably right.
    """
    k_top = max(d.order, e.order)
    depth = max(1, k_top - n + 2)
    f = mul_truncation(d, e, depth).value.to_fraction()
    return digit_of_fraction(f, n)


def mul_certified_digit(d: Decimal, e: Decimal, n: int, max_depth=None) -> int:
    """Digit at 10**n of ``d * e`` for nonnegative operands, certified.

    The truncation product at depth l undershoots the true product by less
    than ``2 * 10**(K + 1 - l)``, so the truth lives in the closed bracket
    ``[f(l), f(l) + 2*10**(K+1-l)]``.  Deepen until the bracket fits inside
    a single digit cell.  Terminates whenever the product does not
    terminate; ``max_depth`` (if given) turns a misuse into an error
    instead of a loop.
    """
    k_top = max(d.order, e.order)
    depth = max(1, k_top - n + 2)
    while True:
        lo = mul_truncation(d, e, depth).value.to_fraction()
        hi = lo + 2 * _pow10f(k_top + 1 - depth)
        dig = interval_digit(lo, hi, n)
        if dig is not None:
            return dig
        depth += 1
        if max_depth is not None and depth > max_depth:
            raise OracleUnavailable(
                f"digit at 10**{n} still straddles a cell boundary at depth {max_depth}"
            )


def weak_mul(d: Decimal, e: Decimal, hint: Hint, digit_path="certified") -> Decimal:
    """The product of two decimals under a hint.

    A terminating hint is the whole answer; in particular a zero operand
    always arrives that way, so in the streaming case the sign is just the
    product of the operand signs.  ``digit_path`` selects between the
    certified bracket digits (default) and the fixed-depth stabilized
    digits.
    """
    if hint.terminating is not None:
        return Decimal.from_term(hint.terminating)
    sign = d.sign * e.sign
    a, b = d.abs(), e.abs()
    if digit_path == "certified":
        def producer(n):
            return mul_certified_digit(a, b, n)
    elif digit_path in ("stabilized", "paper"):
        def producer(n):
            return mul_stabilized_digit(a, b, n)
    else:
        raise ValueError(f"unknown digit path {digit_path!r}")

    if hint.order > 0 and producer(hint.order) == 0:
        raise HintMismatch("zero digit at the hinted (positive) order")
    if producer(hint.order + 1) != 0:
        raise HintMismatch("nonzero digit above the hinted order")
    return Decimal.from_stream(sign, hint.order, producer, searched_nine_escape(producer))


# ---------------------------------------------------------------------------
# machine-level wrapper


def result_letter(op: str, x, y, m: int, h):
    """Letter m of the encoded result of ``x op y``, plus both read traces.

    ``x`` and ``y`` are tape words; every letter they surrender is logged.
    ``h`` may be a ``Hint`` or its integer encoding.  The return value is
    ``(letter, trace_x, trace_y)``; the traces expose how deep one output
    letter forced the computation to read.
    """
    hint = h if isinstance(h, Hint) else hint_decode(h)
    tx, trace_x = traced(x)
    ty, trace_y = traced(y)
    dx = decode_xr(tx)
    dy = decode_xr(ty)
    if op == "add":
        f = weak_add(dx, dy, hint)
    elif op == "mul":
        f = weak_mul(dx, dy, hint)
    else:
        raise ValueError(f"unknown operation {op!r}")
    return encode_xr(f).letter(m), trace_x, trace_y
