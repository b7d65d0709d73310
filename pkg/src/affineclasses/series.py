"""Exact truncated formal power series in one variable u.

Two coefficient rings: plain rationals (Fraction) and QPoly, polynomials in a
formal prime power q with rational coefficients.  Everything is exact; there is
no floating point anywhere.  Series keep a fixed truncation order and all
binary operations truncate to the smaller order of the two operands.
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction

RATIONAL = "rational"
QPOLY = "q-polynomial"

DEFAULT_ORDER = 40

_ZERO = Fraction(0)
_ONE = Fraction(1)


class QPoly:
    """Polynomial in q over the rationals, coefficients lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        c = [x if type(x) is Fraction else Fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)

    @property
    def degree(self):
        return len(self.c) - 1

    def is_constant(self):
        return len(self.c) <= 1

    def constant(self) -> Fraction:
        # constant term; for is_constant() polynomials this is the whole value
        return self.c[0] if self.c else _ZERO

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash(self.c)

    def __add__(self, other):
        other = _as_qpoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = out[i] + x
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-x for x in self.c])

    def __sub__(self, other):
        other = _as_qpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_qpoly(other) + (-self)

    def __mul__(self, other):
        other = _as_qpoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        if not a or not b:
            return QPoly()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division by a nonzero scalar only
        if isinstance(other, QPoly):
            if not other.is_constant():
                raise ZeroDivisionError("QPoly division only by constants")
            other = other.constant()
        s = Fraction(other)
        return QPoly([x / s for x in self.c])

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("QPoly power wants a non-negative integer")
        out = QPoly(1)
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, q0):
        """Evaluate at a concrete value q0, exactly."""
        q0 = Fraction(q0)
        acc = _ZERO
        for x in reversed(self.c):
            acc = acc * q0 + x
        return acc

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for deg in range(len(self.c) - 1, -1, -1):
            x = self.c[deg]
            if not x:
                continue
            neg = x < 0
            x = -x if neg else x
            if deg == 0:
                body = _coef_str(x)
            else:
                var = "q" if deg == 1 else "q^%d" % deg
                body = var if x == 1 else _coef_str(x) + var
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "QPoly(%s)" % (self,)


def _coef_str(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return "(%d/%d)" % (x.numerator, x.denominator)


def _as_qpoly(x):
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return QPoly(x)
    return NotImplemented


#: the indeterminate q
Q = QPoly((0, 1))


def evaluate_q(p, q0) -> Fraction:
    """Substitute a concrete prime power q0 into a QPoly (or pass a scalar through)."""
    if isinstance(p, QPoly):
        return p(q0)
    return Fraction(p)


def _coerce(ring, x):
    if ring == RATIONAL:
        if isinstance(x, QPoly):
            if not x.is_constant():
                raise TypeError("non-constant QPoly in a rational series")
            return x.constant()
        return x if type(x) is Fraction else Fraction(x)
    if ring == QPOLY:
        return _as_qpoly(x)
    raise ValueError("unknown ring %r" % (ring,))


def _ring_inv(ring, x):
    if ring == RATIONAL:
        if not x:
            raise ZeroDivisionError("constant term is not a unit")
        return 1 / Fraction(x)
    if not (isinstance(x, QPoly) and x.is_constant() and x.constant()):
        raise ZeroDivisionError("constant term is not a unit")
    return QPoly(1 / x.constant())


class TruncatedSeries:
    """Power series in u truncated at a fixed order, exact coefficients."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring, order, coeffs):
        if order < 0:
            raise ValueError("order must be non-negative")
        coeffs = tuple(_coerce(ring, x) for x in coeffs)
        if len(coeffs) != order + 1:
            raise ValueError("need exactly order+1 coefficients")
        self.ring = ring
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, ring=RATIONAL, order=DEFAULT_ORDER):
        return cls(ring, order, [0] * (order + 1))

    @classmethod
    def one(cls, ring=RATIONAL, order=DEFAULT_ORDER):
        return cls.monomial(1, 0, ring, order)

    @classmethod
    def monomial(cls, c, n, ring=RATIONAL, order=DEFAULT_ORDER):
        coeffs = [0] * (order + 1)
        if n <= order:
            coeffs[n] = c
        return cls(ring, order, coeffs)

    @classmethod
    def from_coeffs(cls, coeffs, ring=RATIONAL, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        coeffs += [0] * (order + 1 - len(coeffs))
        return cls(ring, order, coeffs[: order + 1])

    def coeff(self, n):
        if not 0 <= n <= self.order:
            raise IndexError("coefficient %d out of range (order %d)" % (n, self.order))
        return self.coeffs[n]

    def truncate(self, order):
        if order >= self.order:
            return self
        return TruncatedSeries(self.ring, order, self.coeffs[: order + 1])

    def _pair(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if self.ring != other.ring:
            raise TypeError("ring mismatch: %s vs %s" % (self.ring, other.ring))
        n = min(self.order, other.order)
        return n, self.coeffs, other.coeffs

    def __add__(self, other):
        n, a, b = self._pair(other)
        return TruncatedSeries(self.ring, n, [a[i] + b[i] for i in range(n + 1)])

    def __sub__(self, other):
        n, a, b = self._pair(other)
        return TruncatedSeries(self.ring, n, [a[i] - b[i] for i in range(n + 1)])

    def __neg__(self):
        return TruncatedSeries(self.ring, self.order, [-x for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QPoly)):
            c = _coerce(self.ring, other)
            return TruncatedSeries(self.ring, self.order, [x * c for x in self.coeffs])
        n, a, b = self._pair(other)
        out = [_coerce(self.ring, 0)] * (n + 1)
        for i in range(n + 1):
            x = a[i]
            if not x:
                continue
            for j in range(n + 1 - i):
                y = b[j]
                if y:
                    out[i + j] += x * y
        return TruncatedSeries(self.ring, n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.ring != other.ring:
            return False
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None

    def invert(self):
        """Multiplicative inverse up to truncation; needs a unit constant term."""
        inv0 = _ring_inv(self.ring, self.coeffs[0])
        n = self.order
        a = self.coeffs
        out = [inv0] + [_coerce(self.ring, 0)] * n
        for m in range(1, n + 1):
            acc = _coerce(self.ring, 0)
            for k in range(1, m + 1):
                if a[k]:
                    acc += a[k] * out[m - k]
            out[m] = -inv0 * acc
        return TruncatedSeries(self.ring, n, out)

    def substitute_power(self, d: int):
        """Return the series a(u^d), truncated at the same order."""
        if d < 1:
            raise ValueError("substitute_power wants d >= 1")
        out = [_coerce(self.ring, 0)] * (self.order + 1)
        for i, x in enumerate(self.coeffs):
            if i * d > self.order:
                break
            out[i * d] = x
        return TruncatedSeries(self.ring, self.order, out)

    def eval_real_at(self, r) -> Fraction:
        """Exact value of the truncated polynomial at u=r (rational ring only)."""
        if self.ring != RATIONAL:
            raise TypeError("eval_real_at needs a rational-coefficient series")
        r = Fraction(r)
        acc = _ZERO
        for x in reversed(self.coeffs):
            acc = acc * r + x
        return acc

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return "TruncatedSeries(%s, order=%d, [%s%s])" % (self.ring, self.order, shown, tail)


class FactorFamily:
    """One group of factors of an infinite product: prod over i>=1 of
    (1 + coefficient(i) * u^uexp(i)) ** power, optionally filtered on i.

    uexp must be strictly increasing over the accepted indices so the product
    truncates after finitely many factors at any fixed order.
    """

    __slots__ = ("coefficient", "uexp", "power", "index_filter")

    def __init__(self, coefficient, uexp, power=1, index_filter=None):
        # QPoly is callable (evaluation at q), but as a coefficient it is a
        # constant, not a function of the factor index
        is_fn = callable(coefficient) and not isinstance(coefficient, QPoly)
        self.coefficient = coefficient if is_fn else (lambda i, _c=coefficient: _c)
        self.uexp = uexp
        self.power = power
        self.index_filter = index_filter

    def factors_up_to(self, order):
        """Yield (c, j) for every accepted index with u-exponent j <= order."""
        i = 0
        rejected = 0
        while True:
            i += 1
            if self.index_filter is not None and not self.index_filter(i):
                rejected += 1
                if rejected > 10000:
                    raise ValueError("index filter rejects every index past %d" % (i - rejected))
                continue
            rejected = 0
            j = self.uexp(i)
            if j < 1:
                raise ValueError("u-exponent must be positive")
            if j > order:
                return
            yield self.coefficient(i), j


def _mul_factor_inplace(coeffs, c, j, order):
    # multiply by (1 + c u^j): descending so each source index is the old value
    for n in range(order, j - 1, -1):
        x = coeffs[n - j]
        if x:
            coeffs[n] += c * x


def _div_factor_inplace(coeffs, c, j, order):
    # divide by (1 + c u^j): ascending, using already-updated entries
    for n in range(j, order + 1):
        x = coeffs[n - j]
        if x:
            coeffs[n] -= c * x


def apply_product(base: TruncatedSeries, families) -> TruncatedSeries:
    """Multiply base by every family's truncated infinite product."""
    order = base.order
    ring = base.ring
    coeffs = list(base.coeffs)
    for fam in families:
        e = fam.power
        for c, j in fam.factors_up_to(order):
            c = _coerce(ring, c)
            if not c:
                continue
            for _ in range(abs(e)):
                if e > 0:
                    _mul_factor_inplace(coeffs, c, j, order)
                else:
                    _div_factor_inplace(coeffs, c, j, order)
    return TruncatedSeries(ring, order, coeffs)


def pow_factor(c, j: int, exponent, ring=RATIONAL, order=DEFAULT_ORDER) -> TruncatedSeries:
    """(1 + c*u^j) ** exponent via the generalized binomial series.

    The exponent may be an integer, a Fraction, or a QPoly (the latter makes
    sense in the q-polynomial ring, where e.g. exponents N(q;d) occur).
    """
    if j < 1:
        raise ValueError("pow_factor wants j >= 1")
    c = _coerce(ring, c)
    e = _coerce(ring, exponent)
    out = [_coerce(ring, 0)] * (order + 1)
    term = _coerce(ring, 1)
    out[0] = term
    k = 0
    while (k + 1) * j <= order:
        # term_{k+1} = term_k * (e - k) * c / (k + 1)
        term = term * (e - k) * c / (k + 1)
        k += 1
        out[k * j] = term
    return TruncatedSeries(ring, order, out)


def geometric(c, j: int, ring=RATIONAL, order=DEFAULT_ORDER) -> TruncatedSeries:
    """1/(1 - c*u^j) as a truncated series."""
    out = [_coerce(ring, 0)] * (order + 1)
    term = _coerce(ring, 1)
    out[0] = term
    k = j
    while k <= order:
        term = term * c
        out[k] = term
        k += j
    return TruncatedSeries(ring, order, out)


# spec-named functional aliases

def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def invert(a: TruncatedSeries) -> TruncatedSeries:
    return a.invert()


def substitute_power(a: TruncatedSeries, d: int) -> TruncatedSeries:
    return a.substitute_power(d)


def coeff(a: TruncatedSeries, n):
    return a.coeff(n)


def eval_real_at(a: TruncatedSeries, r) -> Fraction:
    return a.eval_real_at(r)
