"""Exact algebra for the conformable derivative in the reduced variable.

Everything in the core works over the substitution u = x**alpha / alpha.
Each power x**(k*alpha) carries exactly alpha**(-k) in the formulas of
interest, so a polynomial in u with plain rational coefficients captures
the whole alpha dependence, and the order-alpha derivative acts on this
class as d/du.  The upshot is that every symbolic identity can be checked
with exact rational arithmetic, with alpha entering only at evaluation or
rendering time.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, NamedTuple, Union

__all__ = [
    "AlgebraError",
    "AlphaValue",
    "ExpPoly",
    "ReducedPoly",
    "XViewTerm",
    "as_alpha",
    "d_alpha",
    "d_alpha_n",
    "d_alpha_numeric",
    "from_x_view",
    "x_view",
    "x_view_str",
]

Rational = Union[int, Fraction]


class AlgebraError(RuntimeError):
    """An internal exact-algebra consistency check failed."""


def _as_fraction(value) -> Fraction:
    # The core is float-free by construction; reject floats loudly instead
    # of silently converting their binary expansions.
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(
        f"exact coefficient expected (int or Fraction), got {type(value).__name__}"
    )


@dataclass(frozen=True)
class AlphaValue:
    """Derivative order, restricted to (0, 1]."""

    value: float

    def __post_init__(self):
        v = float(self.value)
        if not (0.0 < v <= 1.0):
            raise ValueError(f"alpha must lie in (0, 1], got {self.value!r}")
        object.__setattr__(self, "value", v)

    def __float__(self) -> float:
        return self.value


def as_alpha(alpha) -> float:
    """Validate an order given as a float, Fraction or AlphaValue."""
    if isinstance(alpha, AlphaValue):
        return alpha.value
    return AlphaValue(float(alpha)).value


class ReducedPoly:
    """Polynomial in u = x**alpha / alpha with exact rational coefficients.

    ``coeffs[k]`` multiplies u**k.  Trailing zeros are stripped on
    construction, so the highest stored coefficient is nonzero and the zero
    polynomial stores nothing; equality and hashing are structural.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "ReducedPoly":
        return cls()

    @classmethod
    def one(cls) -> "ReducedPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, coeff: Rational = 1) -> "ReducedPoly":
        """coeff * u**k."""
        if k < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return cls((0,) * k + (coeff,))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(value) -> "ReducedPoly | None":
        if isinstance(value, ReducedPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return ReducedPoly((value,))
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a, b = self._coeffs, q._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ReducedPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ReducedPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return ReducedPoly(tuple(c * a for a in self._coeffs))
        if isinstance(other, ReducedPoly):
            if self.is_zero or other.is_zero:
                return ReducedPoly()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a:
                    for j, b in enumerate(other._coeffs):
                        out[i + j] += a * b
            return ReducedPoly(out)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return self * (Fraction(1) / _as_fraction(scalar))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = ReducedPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def deriv(self, order: int = 1) -> "ReducedPoly":
        """Derivative d/du, applied ``order`` times."""
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        p = self
        for _ in range(order):
            p = ReducedPoly(tuple(k * c for k, c in enumerate(p._coeffs) if k))
        return p

    def divide_by_u(self, m: int) -> "ReducedPoly":
        """Exact division by u**m; the low coefficients must vanish."""
        if m < 0:
            raise ValueError("power must be nonnegative")
        if any(c != 0 for c in self._coeffs[:m]):
            raise AlgebraError(f"u^{m} does not divide {self}")
        return ReducedPoly(self._coeffs[m:])

    def taylor_shift(self, a: Rational) -> "ReducedPoly":
        """Coefficients of p(u + a)."""
        a = _as_fraction(a)
        shift = ReducedPoly((a, 1))
        out = ReducedPoly()
        for c in reversed(self._coeffs):
            out = out * shift + c
        return out

    # -- evaluation ----------------------------------------------------------

    def __call__(self, u):
        """Horner evaluation; exact for int/Fraction inputs."""
        if not self._coeffs:
            return 0 * u
        acc = self._coeffs[-1]
        for c in reversed(self._coeffs[:-1]):
            acc = acc * u + c
        return acc

    def eval(self, x: float, alpha) -> float:
        """Numeric value at x >= 0 for a given order (u = x**alpha / alpha)."""
        a = as_alpha(alpha)
        if x < 0:
            raise ValueError("x must be nonnegative")
        u = float(x) ** a / a
        return float(self(u))

    # -- structure -----------------------------------------------------------

    def __eq__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._coeffs == q._coeffs

    def __hash__(self):
        return hash(("ReducedPoly", self._coeffs))

    def __bool__(self):
        return bool(self._coeffs)

    def to_str(self, var: str = "u") -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}{var}" if k == 1 else f"{head}{var}^{k}"
            pieces.append((c < 0, body))
        neg, body = pieces[0]
        text = ("-" if neg else "") + body
        for neg, body in pieces[1:]:
            text += (" - " if neg else " + ") + body
        return text

    def __str__(self):
        return self.to_str("u")

    def __repr__(self):
        return f"ReducedPoly({[str(c) for c in self._coeffs]})"


class ExpPoly:
    """Finite sum of poly(u) * exp(rate * u) terms with rational rates.

    Terms are merged on construction so rates are pairwise distinct, terms
    with a zero polynomial part are dropped, and the remaining terms are kept
    sorted by rate.  The rate-0 term is the plain polynomial part.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[Rational, "ReducedPoly | Rational"]] = ()):
        merged: dict[Fraction, ReducedPoly] = {}
        for rate, poly in terms:
            r = _as_fraction(rate)
            p = ReducedPoly._coerce(poly)
            if p is None:
                raise TypeError(f"polynomial part expected, got {type(poly).__name__}")
            merged[r] = merged.get(r, ReducedPoly()) + p
        self._terms = tuple(
            (r, merged[r]) for r in sorted(merged) if not merged[r].is_zero
        )

    @classmethod
    def from_poly(cls, poly) -> "ExpPoly":
        return cls(((Fraction(0), poly),))

    @classmethod
    def exp(cls, rate: Rational, poly: "ReducedPoly | Rational" = 1) -> "ExpPoly":
        """poly(u) * exp(rate * u)."""
        return cls(((rate, poly),))

    @property
    def terms(self) -> tuple[tuple[Fraction, ReducedPoly], ...]:
        return self._terms

    @property
    def rates(self) -> tuple[Fraction, ...]:
        return tuple(r for r, _ in self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @staticmethod
    def _coerce(value) -> "ExpPoly | None":
        if isinstance(value, ExpPoly):
            return value
        p = ReducedPoly._coerce(value)
        if p is not None:
            return ExpPoly.from_poly(p)
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return ExpPoly(self._terms + q._terms)

    __radd__ = __add__

    def __neg__(self):
        return ExpPoly(tuple((r, -p) for r, p in self._terms))

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExpPoly(tuple((r, p * other) for r, p in self._terms))
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        # Rates add pairwise: exp(a*u) * exp(b*u) = exp((a+b)*u).
        return ExpPoly(
            (ra + rb, pa * pb) for ra, pa in self._terms for rb, pb in q._terms
        )

    __rmul__ = __mul__

    def d_alpha(self) -> "ExpPoly":
        """Conformable derivative: on a rate-r term it is (p' + r*p)*exp(r*u)."""
        return ExpPoly((r, p.deriv() + p * r) for r, p in self._terms)

    def value_at_zero(self) -> Fraction:
        """Exact value at u = 0 (exponentials all equal 1 there)."""
        return sum((p(Fraction(0)) for _, p in self._terms), start=Fraction(0))

    def as_poly(self) -> ReducedPoly:
        """The rate-0 polynomial, provided no exponential term survives."""
        if not self._terms:
            return ReducedPoly()
        if len(self._terms) == 1 and self._terms[0][0] == 0:
            return self._terms[0][1]
        raise AlgebraError(f"exponential terms survive in {self}")

    def eval_u(self, u: float) -> float:
        return sum(float(p(float(u))) * math.exp(float(r) * u) for r, p in self._terms)

    def eval(self, x: float, alpha) -> float:
        """Numeric value at x >= 0; by continuity u = 0 at x = 0."""
        a = as_alpha(alpha)
        if x < 0:
            raise ValueError("x must be nonnegative")
        return self.eval_u(float(x) ** a / a)

    def __eq__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._terms == q._terms

    def __hash__(self):
        return hash(("ExpPoly", self._terms))

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for r, p in self._terms:
            body = p.to_str("u")
            if r != 0:
                body = f"({body})" if (" " in body or body.startswith("-")) else body
                rate = "-u" if r == -1 else ("u" if r == 1 else f"{r}*u")
                body = f"{body}*exp({rate})"
            pieces.append(body)
        return " + ".join(pieces)

    def __repr__(self):
        return f"ExpPoly({[(str(r), str(p)) for r, p in self._terms]})"


def d_alpha(f):
    """Exact conformable derivative of a ReducedPoly or ExpPoly.

    On functions of u the conformable derivative reduces to d/du, because
    applying x**(1-alpha) * d/dx to u = x**alpha / alpha gives exactly 1.
    """
    if isinstance(f, ReducedPoly):
        return f.deriv()
    if isinstance(f, ExpPoly):
        return f.d_alpha()
    raise TypeError(f"ReducedPoly or ExpPoly expected, got {type(f).__name__}")


def d_alpha_n(f, n: int):
    """n-fold conformable derivative."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a nonnegative integer")
    for _ in range(n):
        f = d_alpha(f)
    return f


def d_alpha_numeric(
    f: Callable[[float], float], x: float, alpha, h: float = 1e-5
) -> float:
    """Central-difference estimate of the conformable derivative at x > 0.

    Uses the limit definition directly: the increment is h * x**(1-alpha),
    so the estimate is [f(x + h*x**(1-alpha)) - f(x - h*x**(1-alpha))] / (2h)
    with error O(h**2) for smooth f.
    """
    a = as_alpha(alpha)
    if x <= 0:
        raise ValueError("x must be positive (x**(1-alpha) branches at 0)")
    if h <= 0:
        raise ValueError("step size must be positive")
    step = h * x ** (1.0 - a)
    return (f(x + step) - f(x - step)) / (2.0 * h)


class XViewTerm(NamedTuple):
    """One term of the x-space rendering: rational_part * alpha**alpha_power * x**(k*alpha)."""

    k: int
    rational_part: Fraction
    alpha_power: int


def x_view(p: ReducedPoly) -> tuple[XViewTerm, ...]:
    """Render a reduced polynomial in x-space, one term per nonzero u**k.

    Term k reads coeff * alpha**(-k) * x**(k*alpha), since u**k expands to
    x**(k*alpha) / alpha**k.  Zero coefficients are skipped.
    """
    return tuple(
        XViewTerm(k, c, -k) for k, c in enumerate(p.coeffs) if c != 0
    )


def from_x_view(terms: Iterable[XViewTerm]) -> ReducedPoly:
    """Inverse of :func:`x_view`; exact round trip."""
    terms = tuple(terms)
    out: list[Fraction] = []
    for t in terms:
        if t.alpha_power != -t.k:
            raise ValueError(f"non-canonical x-view term {t}")
        while len(out) <= t.k:
            out.append(Fraction(0))
        out[t.k] += t.rational_part
    return ReducedPoly(out)


def x_view_str(p: ReducedPoly) -> str:
    """Text form of the x-view, e.g. ``1 - 2 * a^(-1) * x^(1*a)``."""
    terms = x_view(p)
    if not terms:
        return "0"
    pieces = []
    for t in terms:
        mag = abs(t.rational_part)
        if t.k == 0:
            body = str(mag)
        else:
            body = f"{mag} * a^({t.alpha_power}) * x^({t.k}*a)"
        pieces.append((t.rational_part < 0, body))
    neg, body = pieces[0]
    text = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        text += (" - " if neg else " + ") + body
    return text
