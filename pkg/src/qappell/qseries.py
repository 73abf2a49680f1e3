"""Truncated formal power series in t over the rational functions of q.

A series carries coefficients for t^0 .. t^N where N is its order.  The
order is fixed at construction and operations never extend it silently:
binary operations demand equal orders, and division shrinks the order by
the valuation of the divisor.
"""

from __future__ import annotations

from fractions import Fraction

from .qarith import (FracAcc, P_ONE, QPoly, QRat, QRAT_ONE, QRAT_Q,
                     QRAT_ZERO, q_factorial, q_integer)


class OrderMismatchError(ValueError):
    """Binary operation on series with different truncation orders."""


class ZeroDivisorError(ArithmeticError):
    """Division by a series that is identically zero to its order."""


class CancellationError(ArithmeticError):
    """Division where the dividend has a nonzero coefficient below the
    divisor's valuation, so the common t-power does not cancel."""


def _as_qrat(c) -> QRat:
    if isinstance(c, QRat):
        return c
    if isinstance(c, (int, Fraction, QPoly)):
        return QRat(c)
    raise TypeError(f"expected a QRat-coercible coefficient, got {type(c).__name__}")


class Series:
    """Immutable truncated power series in t with QRat coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(_as_qrat(c) for c in coeffs)
        if not cs:
            raise ValueError("a series stores at least the t^0 coefficient")
        self.coeffs = cs

    @classmethod
    def constant(cls, c, order: int) -> Series:
        if order < 0:
            raise ValueError("order must be >= 0")
        return cls((_as_qrat(c),) + (QRAT_ZERO,) * order)

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls.constant(QRAT_ZERO, order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls.constant(QRAT_ONE, order)

    @classmethod
    def monomial(cls, order: int, k: int, c=1) -> Series:
        """c * t^k truncated at the given order."""
        if not 0 <= k <= order:
            raise ValueError("monomial power outside 0..order")
        cs = [QRAT_ZERO] * (order + 1)
        cs[k] = _as_qrat(c)
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> QRat:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside 0..{self.order}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all zero."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return None

    def _check_order(self, other: Series) -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"series orders differ: {self.order} vs {other.order}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> Series:
        return Series([-c for c in self.coeffs])

    def __add__(self, other) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        self._check_order(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        self._check_order(other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other) -> Series:
        """Cauchy product truncated to the common order."""
        if not isinstance(other, Series):
            return NotImplemented
        self._check_order(other)
        n = self.order
        out = []
        for m in range(n + 1):
            acc = FracAcc()
            for k in range(m + 1):
                acc.add_product(self.coeffs[k], other.coeffs[m - k])
            out.append(acc.value())
        return Series(out)

    def __truediv__(self, other) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        return self.divide(other)

    def divide(self, b: Series) -> Series:
        """Truncated quotient.

        If b has valuation m, the first m coefficients of self must be
        zero; the common t^m cancels and the result has order
        self.order - m.
        """
        self._check_order(b)
        m = b.valuation()
        if m is None:
            raise ZeroDivisorError("division by a series that is zero to its order")
        for i in range(m):
            if not self.coeffs[i].is_zero():
                raise CancellationError(
                    f"dividend has a nonzero t^{i} coefficient below the "
                    f"divisor valuation {m}")
        a = self.coeffs[m:]
        bb = b.coeffs[m:]
        inv = bb[0].reciprocal()
        out: list[QRat] = []
        for n in range(len(a)):
            acc = FracAcc()
            acc.add(a[n])
            for j in range(1, min(n, len(bb) - 1) + 1):
                acc.sub_product(bb[j], out[n - j])
            out.append(acc.value() * inv)
        return Series(out)

    def scale(self, c) -> Series:
        """Multiply every coefficient by the scalar c."""
        c = _as_qrat(c)
        return Series([a * c for a in self.coeffs])

    def scale_arg(self, c) -> Series:
        """Substitute t -> c*t: the t^n coefficient picks up c^n."""
        c = _as_qrat(c)
        out = []
        power = QRAT_ONE
        for n, a in enumerate(self.coeffs):
            out.append(a if n == 0 else a * power)
            power = power * c
        return Series(out)

    def q_derivative(self) -> Series:
        """Jackson derivative in t: the t^n coefficient becomes
        [n+1]_q * a_{n+1}; the order drops by one."""
        if self.order < 1:
            raise ValueError("q_derivative needs order >= 1")
        out = []
        for n in range(1, self.order + 1):
            a = self.coeffs[n]
            out.append(a if a.is_zero() else a * QRat.from_poly(q_integer(n)))
        return Series(out)

    def times_t(self) -> Series:
        """Multiply by t exactly; the order grows by one."""
        return Series((QRAT_ZERO,) + self.coeffs)

    def truncate(self, order: int) -> Series:
        """Drop coefficients above the given (smaller or equal) order."""
        if not 0 <= order <= self.order:
            raise ValueError("can only truncate to 0..order")
        return Series(self.coeffs[: order + 1])

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:5])
        tail = ", ..." if self.order > 4 else ""
        return f"Series(order={self.order}; {shown}{tail})"


def eq_exponential(order: int) -> Series:
    """The q-exponential e_q(t) = sum t^n / [n]_q! truncated at `order`."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return Series([QRat(P_ONE, q_factorial(n), _canonical=True)
                   for n in range(order + 1)])


def scale_arg_q(s: Series) -> Series:
    """Substitute t -> q*t."""
    return s.scale_arg(QRAT_Q)
