"""The q-Hermite family: explicit series form, three-term recurrence,
second-order q-difference equation, and the generator ratio identity.

The explicit series form used here carries a normalizing factor [n]_q!
relative to the bare sum

    sum_k (-1)^k q^(k(k-1)) x^(n-2k) / ([2k]_q!! [n-2k]_q!),

which is what makes it agree with the generating-function construction
and with the small-n table H_2 = x^2 - 1, H_3 = x^3 - [3]_q x,
H_4 = x^4 - (1+q^2)[3]_q x^2 + [3]_q q^2.  The bare sum itself is kept
available as a descriptive claim ("h0-normalization") in the discrepancy
report.
"""

from __future__ import annotations

from .qarith import (QPoly, QRat, QRAT_Q, QRAT_ZERO, q_double_factorial_even,
                     q_factorial, q_integer)
from .qseries import scale_arg_q
from .appell import (AppellFamily, VerificationReport, XPoly, make_report)
from .families import DiscrepancyReport, FamilyKind, make_family

_DEFAULT_ORDER = 20


def hermite_family(order: int = _DEFAULT_ORDER) -> AppellFamily:
    return make_family(FamilyKind.HERMITE, order)


def _bare_series_sum(n: int) -> XPoly:
    coeffs = [QRAT_ZERO] * (n + 1)
    for k in range(n // 2 + 1):
        num = QPoly.q_power(k * (k - 1))
        if k % 2:
            num = -num
        den = q_double_factorial_even(k) * q_factorial(n - 2 * k)
        coeffs[n - 2 * k] = QRat(num, den)
    return XPoly(coeffs)


def hermite_series_form(n: int) -> XPoly:
    """H_n(x) as the normalized explicit sum; equals the family polynomial."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    return _bare_series_sum(n).scale(QRat.from_poly(q_factorial(n)))


def printed_series_form(n: int) -> XPoly:
    """The bare explicit sum without the [n]_q! factor, exactly as printed."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    return _bare_series_sum(n)


def recurrence_residual(n: int, fam: AppellFamily | None = None) -> XPoly:
    """H_n(qx) - x q^n H_{n-1}(x) + [n-1]_q q^(n-2) H_{n-2}(x)."""
    if fam is None:
        fam = hermite_family(max(n, _DEFAULT_ORDER))
    poly = fam.polynomial
    lhs = poly(n).scale_x(QRAT_Q)
    rhs = poly(n - 1).times_x().scale(QRat.q_power(n))
    back = poly(n - 2).scale(QRat.from_poly(q_integer(n - 1)) * QRat.q_power(n - 2))
    return lhs - rhs + back


def difference_residual(n: int, fam: AppellFamily | None = None) -> XPoly:
    """q^(n-2) D^2 H_n - x q^n D H_n + [n]_q H_n(qx)."""
    if fam is None:
        fam = hermite_family(max(n, _DEFAULT_ORDER))
    hn = fam.polynomial(n)
    d1 = hn.q_derivative()
    d2 = d1.q_derivative()
    total = d2.scale(QRat.q_power(n - 2))
    total = total - d1.times_x().scale(QRat.q_power(n))
    return total + hn.scale_x(QRAT_Q).scale(QRat.from_poly(q_integer(n)))


def verify_hermite_recurrence(n: int, order: int | None = None) -> VerificationReport:
    if n < 2:
        raise ValueError("the three-term recurrence starts at n = 2")
    fam = hermite_family(order if order is not None else max(n, _DEFAULT_ORDER))
    return make_report("h1", "hermite", (n, n), (recurrence_residual(n, fam),))


def verify_hermite_difference(n: int, order: int | None = None) -> VerificationReport:
    if n < 1:
        raise ValueError("the difference equation starts at n = 1")
    fam = hermite_family(order if order is not None else max(n, _DEFAULT_ORDER))
    return make_report("h2", "hermite", (n, n), (difference_residual(n, fam),))


def verify_hermite_generator_ratio(order: int) -> VerificationReport:
    """Check D_q H(t) = -t * H(qt) coefficientwise to order - 1.

    The residual series is recorded as an XPoly over the t-powers so it
    fits the shared report type; first_failure is the smallest failing
    t-power.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    gen = hermite_family(order).generator
    lhs = gen.q_derivative()
    rhs = scale_arg_q(gen).truncate(order - 2).times_t()
    residual = lhs + rhs
    return make_report("hermite-ratio", "hermite", (0, order - 1),
                       tuple(XPoly((c,)) for c in residual.coeffs))


def verify_cross_construction(max_n: int, order: int | None = None) -> VerificationReport:
    """Generating-function construction vs normalized explicit sum."""
    fam = hermite_family(order if order is not None else max(max_n, _DEFAULT_ORDER))
    residuals = [hermite_series_form(n) - fam.polynomial(n)
                 for n in range(max_n + 1)]
    return make_report("h0-cross", "hermite", (0, max_n), residuals)


def verify_printed_series_form(max_n: int) -> DiscrepancyReport:
    """Descriptive claim: the printed explicit sum without the [n]_q!
    factor against the generating-function polynomials."""
    fam = hermite_family(max(max_n, 2))
    for n in range(max_n + 1):
        residual = printed_series_form(n) - fam.polynomial(n)
        if not residual.is_zero():
            return DiscrepancyReport("h0-normalization", "refuted", n, residual)
    return DiscrepancyReport("h0-normalization", "confirmed", None, None)
