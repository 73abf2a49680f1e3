"""Generic q-Appell machinery.

A family is determined by its generator series A(t): the polynomials are
A_n(x) = sum_k [n k]_q A_k x^(n-k) with A_k = [k]_q! times the t^k
coefficient of the generator.  The alpha coefficients are read off the
quotient t * D_q A(t) / A(qt), and the two structural identities checked
here are

  recurrence:  [n]_q A_n(qx) = sum_k [n k]_q alpha_k q^(n-k) A_{n-k}(x)
                               + x [n]_q q^n A_{n-1}(x)

  difference:  sum_k (q^(n-k) alpha_k / [k]_q!) D^k A_n(x)
               + x q^n D A_n(x) - [n]_q A_n(qx) = 0

together with the lowering chain A_{n-k} = ([n-k]_q!/[n]_q!) D^k A_n.
Generators with zero constant term (the Genocchi case) are accepted: the
alpha quotient then cancels a common factor of t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .qarith import (QRat, QRAT_ONE, QRAT_Q, QRAT_ZERO, q_binomial,
                     q_factorial, q_integer)
from .qseries import Series, scale_arg_q


def _as_qrat(c) -> QRat:
    if isinstance(c, QRat):
        return c
    return QRat(c)


class XPoly:
    """Polynomial in x with QRat coefficients, ascending powers.

    Canonical form: no trailing zero coefficients; the zero polynomial is
    the empty tuple.  Identity checks reduce to ``residual.is_zero()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_qrat(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> XPoly:
        return cls()

    @classmethod
    def monomial(cls, c, k: int) -> XPoly:
        return cls((QRAT_ZERO,) * k + (_as_qrat(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> QRat:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return QRAT_ZERO

    def __eq__(self, other) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> XPoly:
        return XPoly([-c for c in self.coeffs])

    def __add__(self, other) -> XPoly:
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly(out)

    def __sub__(self, other) -> XPoly:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> XPoly:
        c = _as_qrat(c)
        if c.is_zero():
            return XPoly()
        return XPoly([a * c for a in self.coeffs])

    def times_x(self, k: int = 1) -> XPoly:
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return XPoly((QRAT_ZERO,) * k + self.coeffs)

    def scale_x(self, c) -> XPoly:
        """Substitute x -> c*x: the x^k coefficient picks up c^k."""
        c = _as_qrat(c)
        out = []
        power = QRAT_ONE
        for k, a in enumerate(self.coeffs):
            out.append(a if k == 0 else a * power)
            power = power * c
        return XPoly(out)

    def q_derivative(self) -> XPoly:
        """Jackson derivative in x: x^n -> [n]_q x^(n-1)."""
        out = []
        for n in range(1, len(self.coeffs)):
            a = self.coeffs[n]
            out.append(a if a.is_zero() else a * QRat.from_poly(q_integer(n)))
        return XPoly(out)

    def evaluate_x(self, x0) -> QRat:
        """Exact value at a rational x0, with q still symbolic (Horner)."""
        x0 = _as_qrat(x0)
        acc = QRAT_ZERO
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def evaluate_q(self, q0) -> list[Fraction]:
        """Coefficient list at numeric q = q0 (raises PoleError at poles)."""
        return [c.evaluate(q0) for c in self.coeffs]

    def evaluate(self, q0, x0) -> Fraction:
        """Exact value at numeric (q0, x0)."""
        x0 = x0 if isinstance(x0, Fraction) else Fraction(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c.evaluate(q0)
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            sign, body = _split_sign(c)
            var = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if var and body == "1":
                term = var
            elif var:
                term = f"({body})*{var}" if _is_composite(c) else f"{body}*{var}"
            else:
                term = body
            if not parts:
                parts.append(f"-{term}" if sign < 0 else term)
            else:
                parts.append(f" - {term}" if sign < 0 else f" + {term}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"XPoly({self})"


def _split_sign(c: QRat) -> tuple[int, str]:
    """Factor an overall -1 out of a coefficient whose numerator terms are
    all nonpositive, for readable term rendering."""
    nonzero = [x for x in c.num.coeffs if x]
    if nonzero and all(x < 0 for x in nonzero):
        return -1, str(-c)
    return 1, str(c)


def _is_composite(c: QRat) -> bool:
    return (not c.den.is_one()) or sum(1 for x in c.num.coeffs if x) > 1


class AppellFamily:
    """A q-Appell family, defined by name and generator series.

    The generator must not vanish identically; a zero constant term
    (valuation 1, the "shifted" case) is accepted, while a valuation of
    two or more is rejected because the alpha quotient is then undefined.
    Derived data (numbers, polynomials, alphas) is cached; the cached
    values are immutable, so sharing a family between threads is safe.
    """

    def __init__(self, name: str, generator: Series):
        v = generator.valuation()
        if v is None:
            raise ValueError("generator is identically zero")
        if v > 1:
            raise ValueError(
                "generator vanishes to order >= 2 at t = 0; the alpha "
                "quotient does not determine a power series")
        self.name = name
        self.generator = generator
        self.shifted = v == 1
        self._numbers: tuple[QRat, ...] | None = None
        self._alphas: tuple[QRat, ...] | None = None
        self._polys: dict[int, XPoly] = {}

    @property
    def order(self) -> int:
        return self.generator.order

    def numbers(self, upto: int) -> tuple[QRat, ...]:
        """A_0 .. A_upto, where A_n = [n]_q! * (t^n coefficient)."""
        if upto > self.order:
            raise ValueError(f"index {upto} exceeds the generator order {self.order}")
        if self._numbers is None:
            self._numbers = tuple(
                c if c.is_zero() else c * QRat.from_poly(q_factorial(n))
                for n, c in enumerate(self.generator.coeffs))
        return self._numbers[: upto + 1]

    def polynomial(self, n: int) -> XPoly:
        """A_n(x) = sum_k [n k]_q A_k x^(n-k)."""
        if not 0 <= n <= self.order:
            raise ValueError(f"degree {n} outside 0..{self.order}")
        cached = self._polys.get(n)
        if cached is None:
            nums = self.numbers(n)
            coeffs = []
            for k in range(n, -1, -1):
                # coefficient of x^(n-k)
                a = nums[k]
                coeffs.append(a if a.is_zero()
                              else a * QRat.from_poly(q_binomial(n, k)))
            cached = XPoly(coeffs)
            self._polys[n] = cached
        return cached

    def alphas(self, upto: int) -> tuple[QRat, ...]:
        """alpha_0 .. alpha_upto from t * D_q A(t) / A(qt).

        The quotient is computed at the smallest truncation that covers
        the request (its leading coefficients do not depend on the
        truncation order) and recomputed only if a later call asks for
        more.
        """
        if upto > self.order - 1:
            raise ValueError(
                f"alpha index {upto} exceeds order-1 = {self.order - 1}")
        if self._alphas is None or len(self._alphas) <= upto:
            need = min(upto + (1 if self.shifted else 0), self.order)
            numerator = self.generator.q_derivative().times_t().truncate(need)
            denominator = scale_arg_q(self.generator).truncate(need)
            quotient = numerator.divide(denominator)
            self._alphas = tuple(
                c if c.is_zero() else c * QRat.from_poly(q_factorial(n))
                for n, c in enumerate(quotient.coeffs))
        return self._alphas[: upto + 1]


def family_numbers(fam: AppellFamily, upto: int) -> list[QRat]:
    return list(fam.numbers(upto))


def appell_polynomial(fam: AppellFamily, n: int) -> XPoly:
    return fam.polynomial(n)


def alpha_coefficients(fam: AppellFamily, upto: int) -> list[QRat]:
    return list(fam.alphas(upto))


def q_derivative_x(p: XPoly) -> XPoly:
    return p.q_derivative()


def scale_x_by_q(p: XPoly) -> XPoly:
    return p.scale_x(QRAT_Q)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a symbolic identity check over a degree range."""

    theorem_id: str
    family: str
    n_range: tuple[int, int]
    residuals: tuple[XPoly, ...]
    passed: bool
    first_failure: int | None


def make_report(theorem_id: str, family: str, n_range: tuple[int, int],
                residuals) -> VerificationReport:
    residuals = tuple(residuals)
    first = None
    for n, r in zip(range(n_range[0], n_range[1] + 1), residuals):
        if not r.is_zero():
            first = n
            break
    return VerificationReport(theorem_id, family, n_range, residuals,
                              first is None, first)


def recurrence_residual(fam: AppellFamily, n: int, alphas=None) -> XPoly:
    """[n]_q A_n(qx) - sum_k [n k]_q alpha_k q^(n-k) A_{n-k}(x)
    - x [n]_q q^n A_{n-1}(x), identically zero when the recurrence holds.

    An explicit `alphas` vector substitutes for the family's own; the
    residual relation between the two theorem forms holds for any vector.
    """
    if alphas is None:
        alphas = fam.alphas(n)
    qn = QRat.from_poly(q_integer(n))
    lhs = fam.polynomial(n).scale_x(QRAT_Q).scale(qn)
    rhs = XPoly.zero()
    for k in range(n + 1):
        a = alphas[k]
        if a.is_zero():
            continue
        c = a * QRat.from_poly(q_binomial(n, k)) * QRat.q_power(n - k)
        rhs = rhs + fam.polynomial(n - k).scale(c)
    rhs = rhs + fam.polynomial(n - 1).times_x().scale(qn * QRat.q_power(n))
    return lhs - rhs


def difference_residual(fam: AppellFamily, n: int, alphas=None) -> XPoly:
    """sum_k (q^(n-k) alpha_k/[k]_q!) D^k A_n + x q^n D A_n - [n]_q A_n(qx)."""
    if alphas is None:
        alphas = fam.alphas(n)
    derivs = [fam.polynomial(n)]
    for _ in range(n):
        derivs.append(derivs[-1].q_derivative())
    total = XPoly.zero()
    for k in range(n + 1):
        a = alphas[k]
        if a.is_zero():
            continue
        c = a * QRat.q_power(n - k) / QRat.from_poly(q_factorial(k))
        total = total + derivs[k].scale(c)
    total = total + derivs[1].times_x().scale(QRat.q_power(n))
    qn = QRat.from_poly(q_integer(n))
    total = total - fam.polynomial(n).scale_x(QRAT_Q).scale(qn)
    return total


def lowering_residual(fam: AppellFamily, n: int, k: int) -> XPoly:
    """A_{n-k}(x) - ([n-k]_q!/[n]_q!) D^k A_n(x)."""
    d = fam.polynomial(n)
    for _ in range(k):
        d = d.q_derivative()
    scale = QRat(q_factorial(n - k), q_factorial(n))
    return fam.polynomial(n - k) - d.scale(scale)


def verify_recurrence_a1(fam: AppellFamily, n: int) -> VerificationReport:
    if not 1 <= n <= fam.order - 1:
        raise ValueError(f"recurrence check needs 1 <= n <= {fam.order - 1}")
    return make_report("a1", fam.name, (n, n), (recurrence_residual(fam, n),))


def verify_difference_a2(fam: AppellFamily, n: int) -> VerificationReport:
    if not 1 <= n <= fam.order - 1:
        raise ValueError(f"difference check needs 1 <= n <= {fam.order - 1}")
    return make_report("a2", fam.name, (n, n), (difference_residual(fam, n),))


def verify_lowering(fam: AppellFamily, n: int, k: int) -> VerificationReport:
    if not 0 <= k <= n <= fam.order:
        raise ValueError(f"lowering check needs 0 <= k <= n <= {fam.order}")
    return make_report("lowering", fam.name, (n, n),
                       (lowering_residual(fam, n, k),))


def verify_recurrence_range(fam: AppellFamily, lo: int, hi: int) -> VerificationReport:
    return make_report("a1", fam.name, (lo, hi),
                       [recurrence_residual(fam, n) for n in range(lo, hi + 1)])


def verify_difference_range(fam: AppellFamily, lo: int, hi: int) -> VerificationReport:
    return make_report("a2", fam.name, (lo, hi),
                       [difference_residual(fam, n) for n in range(lo, hi + 1)])


def verify_lowering_range(fam: AppellFamily, max_n: int) -> VerificationReport:
    """All iterated lowerings 0 <= k <= n <= max_n, merged into one report.

    The per-n residual recorded is the sum over k of the individual
    residuals, so it is zero exactly when every chain length passes.
    """
    residuals = []
    first = None
    for n in range(max_n + 1):
        d = fam.polynomial(n)
        combined = XPoly.zero()
        for k in range(n + 1):
            scale = QRat(q_factorial(n - k), q_factorial(n))
            r = fam.polynomial(n - k) - d.scale(scale)
            if not r.is_zero():
                if first is None:
                    first = n
                combined = combined + r
            if k < n:
                d = d.q_derivative()
        residuals.append(combined)
    return VerificationReport("lowering", fam.name, (0, max_n),
                              tuple(residuals), first is None, first)
