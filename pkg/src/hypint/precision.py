"""Precision bookkeeping for all arbitrary-precision computations.

Values are mpmath ``mpf`` numbers.  Every analytic operation takes an
explicit :class:`PrecisionContext`; nothing reads ambient precision state
except through the ``working`` context manager, which sets mpmath's
precision to the context's working precision (bits + guard bits) and
restores it afterwards.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass

from mpmath import mp, mpf

from .errors import DomainError

MIN_BITS = 64
MIN_GUARD = 32


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision: ``bits`` of target mantissa plus internal guard bits.

    Results of public operations are correct to within ~2^-(bits-8)
    relative error; computations run at ``bits + guard_bits``.
    """

    bits: int = 128
    guard_bits: int = 48

    def __post_init__(self):
        if self.bits < MIN_BITS:
            raise DomainError(f"precision must be >= {MIN_BITS} bits, got {self.bits}")
        if self.guard_bits < MIN_GUARD:
            raise DomainError(f"guard_bits must be >= {MIN_GUARD}, got {self.guard_bits}")

    @property
    def wp(self) -> int:
        return self.bits + self.guard_bits

    @property
    def eps(self) -> mpf:
        """Unit roundoff at target precision."""
        with mp.workprec(self.wp):
            return mpf(2) ** (-self.bits)

    @property
    def weps(self) -> mpf:
        """Unit roundoff at working precision."""
        with mp.workprec(self.wp):
            return mpf(2) ** (-self.wp)

    def tolerance(self, slack_bits: int = 8) -> mpf:
        with mp.workprec(self.wp):
            return mpf(2) ** (-(self.bits - slack_bits))

    def decimal_digits(self) -> int:
        # never print digits beyond computed accuracy
        return int(self.bits * 0.301) - 2

    def working(self):
        return mp.workprec(self.wp)

    def extra(self, more_bits: int):
        return mp.workprec(self.wp + more_bits)


DEFAULT_CONTEXT = PrecisionContext()


@contextlib.contextmanager
def workprec_bits(bits: int):
    with mp.workprec(bits):
        yield


def to_mpf(x, ctx: PrecisionContext) -> mpf:
    """Convert int/float/str/Fraction/mpf to mpf at working precision.

    Strings are preferred for non-representable decimals: they are parsed
    at full working precision instead of going through a binary double.
    """
    with ctx.working():
        if hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, int):
            return mpf(x.numerator) / mpf(x.denominator)
        return mpf(x)


def format_decimal(x, ctx: PrecisionContext) -> str:
    """Decimal string at the context's printable digit count."""
    with ctx.working():
        return mp.nstr(mpf(x), ctx.decimal_digits(), strip_zeros=False)
