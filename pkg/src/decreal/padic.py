"""Streaming p-adic numbers: digits ascend, carries stay local.

A p-adic number is ``sum of digit(n) * p**n`` over ``n >= order`` with
digits in ``0..p-1`` and ``order <= 0``; the digit at ``order`` is nonzero
unless ``order == 0``.  Unlike base-10 reals, addition and multiplication
here move carries *upward* with the stream, so the digit at ``p**n`` of a
sum or product only ever depends on input digits at positions ``<= n``.
That makes both operations letter-by-letter computable, and the tracing
helpers below let tests check the locality claim read by read.
"""

from fractions import Fraction

from .errors import DenominatorDivisibleByP, MalformedWord, PrimeMismatch
from .words import XI, InfWord, ReadTrace, bin_lsb_decode, bin_lsb_encode


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PAdic:
    """A p-adic number as a memoized digit stream.

    ``base`` is a position at or below every nonzero digit.  The true
    ``order`` (lowest nonzero position, or 0 for zero) may be left lazy:
    results of arithmetic scan the finitely many positions ``base..0`` for
    their first nonzero digit only when someone asks.
    """

    __slots__ = ("p", "base", "_order", "_producer", "_memo")

    def __init__(self, p, order, producer, base=None):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if base is None:
            base = order
        if base is None or base > 0:
            raise ValueError("base position must be an integer <= 0")
        if order is not None and order != base:
            raise ValueError("an explicit order must equal the base position")
        self.p = p
        self.base = base
        self._order = order
        self._producer = producer
        self._memo = {}

    def digit(self, n):
        if n < self.base:
            return 0
        if n not in self._memo:
            d = self._producer(n)
            if not 0 <= d < self.p:
                raise MalformedWord(f"digit {d} out of range for p={self.p}")
            self._memo[n] = d
        return self._memo[n]

    @property
    def order(self):
        """Lowest nonzero position (0 for zero); computed on first use."""
        if self._order is None:
            o = 0
            for j in range(self.base, 1):
                if self.digit(j) != 0:
                    o = j
                    break
            self._order = o
        return self._order

    def digits_from(self, count):
        """The first ``count`` digits starting at the base position."""
        return [self.digit(self.base + i) for i in range(count)]

    def __repr__(self):
        shown = " ".join(str(d) for d in self.digits_from(8))
        return f"PAdic(p={self.p}, base={self.base}, {shown} ...)"


def padic_from_rational(p, q) -> PAdic:
    """The p-adic expansion of a rational whose denominator p does not divide.

    Digits are produced by the usual peeling: ``a = x mod p`` (a modular
    inverse supplies division by the denominator), then ``x := (x - a)/p``.
    Integers and rationals with p-free denominators land in the p-adic
    integers, so the order is 0 and digits start there.
    """
    q = Fraction(q)
    if q.denominator % p == 0:
        raise DenominatorDivisibleByP(
            f"{p} divides the denominator of {q}; no p-adic integer expansion"
        )
    state = {0: q}
    memo = []

    def producer(n):
        while len(memo) <= n:
            x = state[0]
            a = x.numerator * pow(x.denominator, -1, p) % p
            memo.append(a)
            state[0] = (x - a) / p
        return memo[n]

    return PAdic(p, 0, producer)


def padic_add(a: PAdic, b: PAdic) -> PAdic:
    """Digitwise sum with an upward carry in {0, 1}.

    The carry into position n is settled by positions < n alone, so the
    digit at p**n reads nothing above n from either operand.
    """
    if a.p != b.p:
        raise PrimeMismatch(f"cannot add p={a.p} and p={b.p}")
    p = a.p
    k0 = min(a.base, b.base)
    memo = []
    carry = [0]

    def producer(n):
        while len(memo) <= n - k0:
            j = k0 + len(memo)
            t = a.digit(j) + b.digit(j) + carry[0]
            memo.append(t % p)
            carry[0] = t // p
        return memo[n - k0]

    return PAdic(p, None, producer, base=k0)


def padic_mul(a: PAdic, b: PAdic) -> PAdic:
    """Column products with an upward carry.

    Column j collects ``a_i * b_(j-i)`` over the finitely many in-range
    splits; the carry never looks ahead.  The result digit at p**n depends
    on operand digits at positions ``<= n - other.base`` -- in particular on
    positions ``<= n`` whenever both operands are p-adic integers.
    """
    if a.p != b.p:
        raise PrimeMismatch(f"cannot multiply p={a.p} and p={b.p}")
    p = a.p
    k0 = a.base + b.base
    memo = []
    carry = [0]

    def producer(n):
        while len(memo) <= n - k0:
            j = k0 + len(memo)
            col = sum(
                a.digit(i) * b.digit(j - i)
                for i in range(a.base, j - b.base + 1)
            )
            t = col + carry[0]
            memo.append(t % p)
            carry[0] = t // p
        return memo[n - k0]

    return PAdic(p, None, producer, base=k0)


def traced_padic(a: PAdic):
    """A twin of ``a`` whose digit reads are logged position by position."""
    trace = ReadTrace()

    def producer(n):
        trace.note(n)
        return a.digit(n)

    return PAdic(a.p, None, producer, base=a.base), trace


# ---------------------------------------------------------------------------
# tape encoding


def padic_encode(a: PAdic) -> InfWord:
    """One-way infinite word: binary |order| (least bit first), ξ, then digits."""
    head = bin_lsb_encode(-a.order) + [XI]
    order = a.order

    def letter(m):
        if m < len(head):
            return head[m]
        return str(a.digit(order + (m - len(head))))

    alphabet = {XI, "0", "1"} | {str(i) for i in range(a.p)}
    return InfWord(alphabet, letter)


def padic_decode(p, w: InfWord, head_limit=64) -> PAdic:
    """Rebuild a p-adic number from its tape word."""
    bits = []
    i = 0
    while True:
        c = w.letter(i)
        if c == XI:
            break
        bits.append(c)
        i += 1
        if i > head_limit:
            raise MalformedWord("no ξ separator within the head limit")
    order = -bin_lsb_decode(bits)
    body = i + 1

    def producer(n):
        c = w.letter(body + (n - order))
        try:
            d = int(c)
        except ValueError:
            raise MalformedWord(f"letter {c!r} is not a p-adic digit") from None
        return d

    return PAdic(p, order, producer)
