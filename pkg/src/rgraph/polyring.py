"""Exact Laurent polynomials and rational functions in lambda.

Two value types live here:

* :class:`LaurentPoly` -- integer Laurent polynomial in one formal variable.
  The variable is contextual: ``A`` for brackets, ``mu = A^4`` after
  collapsing, ``L`` (lambda) for invariants.
* :class:`LambdaRational` -- a polynomial in lambda divided by
  ``(L+1)^a (L+2)^b``, always stored in reduced form.

Everything is exact; coefficients are Python integers and evaluation
returns :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "LambdaRational",
    "INFINITY",
    "chebyshev_to_lambda",
    "rational_reduce",
    "rational_evaluate",
    "format_value",
]


class _Infinity:
    """Value of a rational function at a pole."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    >>> A = LaurentPoly.monomial(1)
    >>> (A**2 + A**-2) * (A**2 + A**-2)
    LaurentPoly({-4: 1, 0: 2, 4: 1})
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def const(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def from_ascending(cls, coeffs: Iterable[int], start: int = 0) -> "LaurentPoly":
        return cls({start + i: c for i, c in enumerate(coeffs)})

    # -- inspection ---------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def valuation(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    def is_symmetric(self) -> bool:
        """True when the polynomial is invariant under x -> 1/x."""
        c = self._c
        return all(c.get(-e) == v for e, v in c.items())

    def ascending(self) -> list[int]:
        """Coefficients from exponent 0 upward; requires no negative exponents."""
        if not self._c:
            return []
        if self.valuation() < 0:
            raise ValueError("polynomial has negative exponents")
        return [self._c.get(e, 0) for e in range(self.degree() + 1)]

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, v),) = self._c.items()
            if v not in (1, -1):
                raise ValueError("monomial coefficient is not a unit")
            return LaurentPoly._raw({e * n: v ** (-n)})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def invert_variable(self) -> "LaurentPoly":
        """Substitute x -> 1/x."""
        return LaurentPoly._raw({-e: v for e, v in self._c.items()})

    def compress(self, k: int) -> "LaurentPoly":
        """Substitute x^k -> y; every exponent must be divisible by ``k``."""
        bad = [e for e in self._c if e % k]
        if bad:
            raise ValueError(f"exponents {sorted(bad)} not divisible by {k}")
        return LaurentPoly._raw({e // k: v for e, v in self._c.items()})

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        if x == 0 and self._c and self.valuation() < 0:
            raise ZeroDivisionError("negative power evaluated at zero")
        total = Fraction(0)
        for e, v in self._c.items():
            total += v * x**e
        return total

    def divmod_linear(self, root: int) -> tuple["LaurentPoly", int]:
        """Synthetic division by the monic factor (x - root).

        Only defined for ordinary polynomials (no negative exponents).
        Returns ``(quotient, remainder)``.
        """
        coeffs = self.ascending()
        if not coeffs:
            return LaurentPoly(), 0
        q = [0] * (len(coeffs) - 1)
        acc = 0
        for i in range(len(coeffs) - 1, -1, -1):
            acc = acc * root + coeffs[i]
            if i:
                q[i - 1] = acc
        return LaurentPoly.from_ascending(q), acc

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Quotient by a divisor with unit top coefficient; ValueError if inexact."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor[divisor.degree()]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = dict(self._c)
        quot: dict[int, int] = {}
        top = divisor.degree()
        # the lowest possible quotient term
        floor = self.valuation() - divisor.valuation() if rem else 0
        while rem and max(rem) - top >= floor:
            e = max(rem)
            k, c = e - top, rem[e] * lead
            quot[k] = c
            for de, dc in divisor.items():
                v = rem.get(de + k, 0) - c * dc
                if v:
                    rem[de + k] = v
                else:
                    rem.pop(de + k, None)
        if rem:
            raise ValueError("polynomial division is not exact")
        return LaurentPoly(quot)

    # -- comparison / display ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._c.items()))})"

    def format(self, var: str = "L") -> str:
        """Render with descending powers, e.g. ``-L^3+2*L^2+2``."""
        if not self._c:
            return "0"
        out = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            out.append(sign + body)
        text = "".join(out)
        return text[1:] if text.startswith("+") else text

    __str__ = format


def _lambda_basis(n: int) -> list[LaurentPoly]:
    # p_k(L) with p_k(x + 1/x) = x^k + x^-k; p_0 = 2 seeds the recurrence
    L = LaurentPoly.monomial(1)
    basis = [LaurentPoly.const(2), L]
    while len(basis) <= n:
        basis.append(L * basis[-1] - basis[-2])
    return basis


def chebyshev_to_lambda(p: LaurentPoly) -> LaurentPoly:
    """Rewrite a palindromic Laurent polynomial in mu as a polynomial in
    lambda = mu + 1/mu.

    >>> mu = LaurentPoly.monomial(1)
    >>> chebyshev_to_lambda(mu**2 + mu**-2).format()
    'L^2-2'
    """
    if not p.is_symmetric():
        raise ValueError(f"input is not symmetric under mu -> 1/mu: {p!r}")
    if p.is_zero():
        return LaurentPoly()
    top = p.degree()
    basis = _lambda_basis(max(top, 1))
    result = LaurentPoly.const(p[0])
    for k in range(1, top + 1):
        c = p[k]
        if c:
            result = result + c * basis[k]
    return result


class LambdaRational:
    """``num(L) / ((L+1)^den_a * (L+2)^den_b)`` in reduced form.

    Construct through :func:`rational_reduce`, or directly; the
    constructor always reduces.
    """

    __slots__ = ("num", "den_a", "den_b")

    def __init__(self, num: LaurentPoly, den_a: int = 0, den_b: int = 0):
        if den_a < 0 or den_b < 0:
            raise ValueError("denominator powers must be nonnegative")
        if num and num.valuation() < 0:
            raise ValueError("numerator must be an ordinary polynomial")
        if num.is_zero():
            den_a = den_b = 0
        else:
            num, den_a = _strip_factor(num, -1, den_a)
            num, den_b = _strip_factor(num, -2, den_b)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den_a", den_a)
        object.__setattr__(self, "den_b", den_b)

    def __setattr__(self, name, value):
        raise AttributeError("LambdaRational is immutable")

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "LambdaRational":
        return cls(p, 0, 0)

    def is_polynomial(self) -> bool:
        return self.den_a == 0 and self.den_b == 0

    def denominator(self) -> LaurentPoly:
        L = LaurentPoly.monomial(1)
        return (L + 1) ** self.den_a * (L + 2) ** self.den_b

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            other = LambdaRational(other)
        if not isinstance(other, LambdaRational):
            return NotImplemented
        return LambdaRational(
            self.num * other.num, self.den_a + other.den_a, self.den_b + other.den_b
        )

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            other = LambdaRational(other)
        if not isinstance(other, LambdaRational):
            return NotImplemented
        L = LaurentPoly.monomial(1)
        a = max(self.den_a, other.den_a)
        b = max(self.den_b, other.den_b)
        n1 = self.num * (L + 1) ** (a - self.den_a) * (L + 2) ** (b - self.den_b)
        n2 = other.num * (L + 1) ** (a - other.den_a) * (L + 2) ** (b - other.den_b)
        return LambdaRational(n1 + n2, a, b)

    def __neg__(self):
        return LambdaRational(-self.num, self.den_a, self.den_b)

    def __sub__(self, other):
        if isinstance(other, LaurentPoly):
            other = LambdaRational(other)
        if not isinstance(other, LambdaRational):
            return NotImplemented
        return self + (-other)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            other = LambdaRational(other)
        if not isinstance(other, LambdaRational):
            return NotImplemented
        return (self.num, self.den_a, self.den_b) == (other.num, other.den_a, other.den_b)

    def __hash__(self):
        return hash((self.num, self.den_a, self.den_b))

    def __repr__(self) -> str:
        return f"LambdaRational({self.format()!r})"

    def evaluate(self, x):
        return rational_evaluate(self, x)

    def format(self) -> str:
        """Canonical text, e.g. ``(L+2) / (L+1)`` or ``-L^3+2*L^2+2``."""
        num = self.num.format()
        if self.is_polynomial():
            return num
        factors = []
        for base, k in (("(L+1)", self.den_a), ("(L+2)", self.den_b)):
            if k == 1:
                factors.append(base)
            elif k > 1:
                factors.append(f"{base}^{k}")
        den = "*".join(factors)
        if len(factors) > 1:
            den = f"({den})"
        if len(self.num) > 1:
            num = f"({num})"
        return f"{num} / {den}"

    __str__ = format


def _strip_factor(num: LaurentPoly, root: int, power: int) -> tuple[LaurentPoly, int]:
    while power > 0:
        q, rem = num.divmod_linear(root)
        if rem:
            break
        num, power = q, power - 1
    return num, power


def rational_reduce(num: LaurentPoly, a: int, b: int) -> LambdaRational:
    """Cancel factors (L+1) and (L+2) shared by ``num`` and the denominator."""
    return LambdaRational(num, a, b)


def rational_evaluate(r: LambdaRational, x):
    """Exact value at ``x``; :data:`INFINITY` at a pole."""
    x = Fraction(x)
    den = (x + 1) ** r.den_a * (x + 2) ** r.den_b
    num = r.num.evaluate(x)
    if den == 0:
        # reduced form never has num vanishing at a pole
        return INFINITY
    return num / den


def format_value(v) -> str:
    """Render an exact value: ``"inf"``, ``"7"`` or ``"7/9"``."""
    if v is INFINITY:
        return "inf"
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"
