"""Exact scalar domains.

Rationals are plain :class:`fractions.Fraction`.  This module adds Gaussian
rationals and Laurent polynomials in one formal variable ``s``.  GF(2) lives in
:mod:`tlzero.gf2` as packed bit rows.

Conventions for the Hecke/Jones side: ``q = t = s**2``, ``sqrt(t) = s`` and
``beta = s + 1/s``.  Evaluating at ``s = i`` gives ``q = -1`` and ``beta = 0``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Union

Rational = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class GaussianRational:
    """a + b*i with a, b rational."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def _coerce(cls, other) -> "GaussianRational":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = o.norm()
        if d == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        return GaussianRational._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return GaussianRational(1) / (self ** (-k))
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"


I = GaussianRational(0, 1)


class Laurent:
    """Laurent polynomial in ``s`` with rational coefficients.

    Stored as an exponent -> coefficient dict with no zero entries, so the
    lowest/highest exponents are always genuine (trimmed) terms.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Union[Mapping[int, Rational], Rational, None] = None):
        if coeffs is None:
            self._c: Dict[int, Fraction] = {}
        elif isinstance(coeffs, (int, Fraction)):
            self._c = {0: _frac(coeffs)} if coeffs else {}
        else:
            self._c = {int(k): _frac(v) for k, v in coeffs.items() if v}

    @classmethod
    def monomial(cls, k: int, c: Rational = 1) -> "Laurent":
        return cls({k: c})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple]) -> "Laurent":
        acc: Dict[int, Fraction] = {}
        for k, c in terms:
            acc[k] = acc.get(k, Fraction(0)) + _frac(c)
        return cls(acc)

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> int:
        return min(self._c)

    def max_degree(self) -> int:
        return max(self._c)

    def coeff(self, k: int) -> Fraction:
        return self._c.get(k, Fraction(0))

    @classmethod
    def _coerce(cls, other) -> "Laurent":
        if isinstance(other, Laurent):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c = dict(self._c)
        for k, v in o._c.items():
            w = c.get(k, 0) + v
            if w:
                c[k] = w
            else:
                c.pop(k, None)
        out = Laurent()
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Laurent()
        out._c = {k: -v for k, v in self._c.items()}
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c: Dict[int, Fraction] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in o._c.items():
                k = k1 + k2
                c[k] = c.get(k, 0) + v1 * v2
        return Laurent(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible")
            (e, v), = self._c.items()
            return Laurent({-e * (-k): Fraction(1) / v ** (-k)})
        out = Laurent(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "Laurent":
        """Multiply by s**k."""
        out = Laurent()
        out._c = {e + k: v for e, v in self._c.items()}
        return out

    def divmod(self, divisor: "Laurent"):
        """Exact long division; returns (quotient, remainder) in the Laurent ring.

        Both operands are shifted to genuine polynomials first, so the remainder
        is measured against the polynomial part of ``divisor``.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return Laurent(), Laurent()
        a_shift = self.min_degree()
        b_shift = divisor.min_degree()
        a = {k - a_shift: v for k, v in self._c.items()}
        b = {k - b_shift: v for k, v in divisor._c.items()}
        db = max(b)
        lead = b[db]
        q: Dict[int, Fraction] = {}
        while a and max(a) >= db:
            da = max(a)
            f = a[da] / lead
            q[da - db] = f
            for k, v in b.items():
                w = a.get(k + da - db, 0) - f * v
                if w:
                    a[k + da - db] = w
                else:
                    a.pop(k + da - db, None)
        quot = Laurent(q).shift(a_shift - b_shift)
        rem = Laurent(a).shift(a_shift)
        return quot, rem

    def exact_div(self, divisor: "Laurent") -> "Laurent":
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return quot

    def evaluate(self, x):
        """Evaluate at an exact scalar (Fraction, int or GaussianRational)."""
        total = 0
        for k, v in self._c.items():
            total = total + v * (x ** k)
        return total

    def substitute_power(self, r: int) -> "Laurent":
        """s -> s**r."""
        out = Laurent()
        out._c = {k * r: v for k, v in self._c.items()}
        return out

    def is_palindromic(self, center2: int) -> bool:
        """True when coeff(k) == coeff(center2 - k) for all k."""
        return all(self._c.get(center2 - k) == v for k, v in self._c.items())

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self._c == o._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"Laurent({self._c!r})"

    def format(self, var: str = "s") -> str:
        """Render as ``c*s^k`` terms in increasing exponent order; unit coefficients are dropped."""
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c):
            v = self._c[k]
            if k == 0:
                parts.append(str(v))
                continue
            mono = var if k == 1 else f"{var}^{k}"
            if v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.format()

    @classmethod
    def parse(cls, text: str, var: str = "s") -> "Laurent":
        """Inverse of :meth:`format`."""
        text = text.strip()
        if text == "0":
            return cls()
        if text.startswith("-"):
            text = "0 + " + text
        text = text.replace(" - ", " + -")
        terms = []
        for tok in text.split(" + "):
            tok = tok.strip()
            if var in tok:
                head, _, rest = tok.partition(var)
                k = int(rest[1:]) if rest.startswith("^") else 1
                head = head.rstrip("*")
                coef = {"": "1", "-": "-1"}.get(head, head)
            else:
                coef, k = tok, 0
            terms.append((k, Fraction(coef)))
        return cls.from_terms(terms)


S = Laurent.monomial(1)
S_INV = Laurent.monomial(-1)
BETA = S + S_INV
