"""Infinite words over finite alphabets and the standard number layouts.

A decimal is laid out on a one-way tape as: optional minus sign, the order
in binary least-significant-bit first, a separator letter, then the digits
from the top downward.  The scientific layout instead writes the position of
the leading nonzero digit after the separator, so tiny magnitudes stay at
the front of the tape; its zero word hides the exponent behind an endless
run of zeros, which is exactly what makes it hard to read back.

Every read can be routed through a ReadTrace, which records how far into a
word (or how deep into a digit stream) a computation had to look.
"""

from dataclasses import dataclass
from typing import Callable, Optional

from .decimals import Decimal, searched_nine_escape
from .errors import InvariantViolation, MalformedWord, OracleUnavailable

XI = "ξ"
EPS = "eps"

DEC_ALPHABET = frozenset({"-", XI} | {str(i) for i in range(10)})


class InfWord:
    """An infinite sequence of letters from a fixed finite alphabet."""

    __slots__ = ("alphabet", "_letters")

    def __init__(self, alphabet, letters):
        self.alphabet = frozenset(alphabet)
        self._letters = letters

    def letter(self, m):
        if m < 0:
            raise IndexError("letters are indexed from 0")
        c = self._letters(m)
        if c not in self.alphabet:
            raise InvariantViolation(f"letter {c!r} outside the alphabet", position=m)
        return c

    def prefix(self, n):
        return [self.letter(m) for m in range(n)]


@dataclass
class ReadTrace:
    """Monotone record of the positions consulted on one input."""

    max_index: Optional[int] = None
    min_index: Optional[int] = None
    total: int = 0

    def note(self, i):
        if self.max_index is None or i > self.max_index:
            self.max_index = i
        if self.min_index is None or i < self.min_index:
            self.min_index = i
        self.total += 1


def traced(w):
    """A view of w that records every letter read, plus its trace handle."""
    trace = ReadTrace()

    def letters(m):
        trace.note(m)
        return w.letter(m)

    return InfWord(w.alphabet, letters), trace


def traced_decimal(d):
    """A stream view of a decimal recording which digit positions are read.

    The view memoizes, so the trace counts distinct positions once.
    """
    trace = ReadTrace()

    def producer(n):
        trace.note(n)
        return d.digit(n)

    return (Decimal.from_stream(d.sign, d.order, producer,
                                searched_nine_escape(producer)), trace)


# ---------------------------------------------------------------------------
# binary runs (least significant bit first)


def bin_lsb_encode(n):
    """Bits of n >= 0, LSB first, no trailing zeros ('0' alone for zero)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ["0"]
    out = []
    while n:
        out.append(str(n & 1))
        n >>= 1
    return out


def bin_lsb_decode(letters):
    """Inverse of bin_lsb_encode, rejecting non-canonical spellings."""
    letters = list(letters)
    if not letters or any(c not in ("0", "1") for c in letters):
        raise MalformedWord(f"not a binary run: {letters!r}")
    if len(letters) > 1 and letters[-1] == "0":
        raise MalformedWord("binary run has a trailing zero")
    n = 0
    for c in reversed(letters):
        n = (n << 1) | (c == "1")
    return n


# ---------------------------------------------------------------------------
# positional layout


def encode_xr(d):
    """Word for a decimal: [-] order-bits XI digits-from-the-top-down."""
    head = (["-"] if d.sign < 0 else []) + bin_lsb_encode(d.order) + [XI]
    h = len(head)
    top = d.order

    def letters(m):
        if m < h:
            return head[m]
        return str(d.digit(top - (m - h)))

    return InfWord(DEC_ALPHABET, letters)


@dataclass(frozen=True)
class DecodedPrefix:
    sign: int
    order: int
    digits: tuple  # from 10**order downward, as far as the prefix reached


def _scan_head(w, start, limit):
    """Collect binary letters from ``start`` up to the separator."""
    bits = []
    i = start
    while True:
        if i - start > limit:
            raise MalformedWord(f"no {XI!r} separator within {limit} letters")
        c = w.letter(i)
        if c == XI:
            break
        if c not in ("0", "1"):
            raise MalformedWord(f"unexpected letter {c!r} in the order field")
        bits.append(c)
        i += 1
    return bits, i + 1


def decode_xr(w, head_limit=64):
    """Lazy decimal view of a positional word (digits read on demand)."""
    sign = 1
    start = 0
    if w.letter(0) == "-":
        sign = -1
        start = 1
    bits, body = _scan_head(w, start, head_limit)
    order = bin_lsb_decode(bits)

    def producer(n):
        c = w.letter(body + (order - n))
        if c not in "0123456789":
            raise MalformedWord(f"unexpected letter {c!r} in the digit field")
        return int(c)

    return Decimal.from_stream(sign, order, producer, searched_nine_escape(producer))


def decode_xr_prefix(w, depth):
    """Parse the first ``depth`` letters into sign, order and leading digits."""
    d = decode_xr(w, head_limit=depth)
    head = (1 if d.sign < 0 else 0) + len(bin_lsb_encode(d.order)) + 1
    digits = tuple(d.digit(d.order - j) for j in range(max(0, depth - head)))
    return DecodedPrefix(d.sign, d.order, digits)


# ---------------------------------------------------------------------------
# scientific layout

_AUTO = object()


def encode_xs(d, leading=_AUTO):
    """Word for a decimal keyed by its leading nonzero position.

    Layout: [-] XI [-] |leading|-bits XI digits-from-the-leading-down.  The
    zero decimal is spelled XI - 0 0 0 ...: its exponent field never ends.
    For stream-backed inputs the leading position must be supplied.
    """
    if leading is _AUTO:
        leading = d.leading_index()
    if leading is None:
        def zero_letters(m):
            if m == 0:
                return XI
            if m == 1:
                return "-"
            return "0"

        return InfWord(DEC_ALPHABET, zero_letters)

    m0 = leading
    if d.digit(m0) == 0:
        raise ValueError(f"leading index {m0} points at a zero digit")
    head = ((["-"] if d.sign < 0 else []) + [XI]
            + (["-"] if m0 < 0 else []) + bin_lsb_encode(abs(m0)) + [XI])
    h = len(head)

    def letters(m):
        if m < h:
            return head[m]
        return str(d.digit(m0 - (m - h)))

    return InfWord(DEC_ALPHABET, letters)


def decode_xs(w, head_limit=10_000):
    """Lazy decimal view of a scientific word.

    The zero word cannot be recognized from any finite prefix; hitting the
    scan limit without a second separator raises OracleUnavailable.
    """
    sign = 1
    i = 0
    if w.letter(0) == "-":
        sign = -1
        i = 1
    if w.letter(i) != XI:
        raise MalformedWord(f"expected {XI!r} at letter {i}")
    i += 1
    msign = 1
    if w.letter(i) == "-":
        msign = -1
        i += 1
    try:
        bits, body = _scan_head(w, i, head_limit)
    except MalformedWord as exc:
        if msign < 0:
            raise OracleUnavailable(
                "no exponent terminator found; this may be the zero word") from exc
        raise
    m0 = msign * bin_lsb_decode(bits)
    order = max(0, m0)

    def producer(n):
        if n > m0:
            return 0
        c = w.letter(body + (m0 - n))
        if c not in "0123456789":
            raise MalformedWord(f"unexpected letter {c!r} in the digit field")
        return int(c)

    return Decimal.from_stream(sign, order, producer, searched_nine_escape(producer))


def convert_xr_xs(w, leading=None, search_limit=10_000):
    """Rewrite a positional word in the scientific layout.

    Without a supplied leading index the digits are searched downward; an
    all-zero stretch longer than the limit cannot be told apart from zero.
    """
    d = decode_xr(w)
    if leading is None:
        n = d.order
        for _ in range(search_limit):
            if d.digit(n) != 0:
                leading = n
                break
            n -= 1
        else:
            raise OracleUnavailable(
                f"no nonzero digit above 10**{n}; leading index unknown")
    return encode_xs(d, leading=leading)


def convert_xs_xr(w, head_limit=10_000):
    """Rewrite a scientific word in the positional layout."""
    return encode_xr(decode_xs(w, head_limit=head_limit))


# ---------------------------------------------------------------------------
# tape pictures


@dataclass(frozen=True)
class TapeSnapshot:
    """A finite window of tape cells; blanks are shown as ``eps``."""

    window: tuple
    cells: tuple

    def render(self):
        lo, _ = self.window
        out = []
        for off, c in enumerate(self.cells):
            i = lo + off
            out.append(f"[{c}]" if i == 0 else c)
        return " ".join(out)


def tape_snapshot(content, window=None):
    if window is None:
        if isinstance(content, InfWord):
            raise ValueError("an infinite word needs an explicit window")
        window = (-1, len(content))
    lo, hi = window
    cells = []
    for i in range(lo, hi + 1):
        if isinstance(content, InfWord):
            cells.append(content.letter(i) if i >= 0 else EPS)
        else:
            cells.append(str(content[i]) if 0 <= i < len(content) else EPS)
    return TapeSnapshot((lo, hi), tuple(cells))


def render_tape(content, window=None):
    """Space-separated cell picture with square brackets around cell 0."""
    return tape_snapshot(content, window).render()
