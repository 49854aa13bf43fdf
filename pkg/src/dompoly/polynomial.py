"""Dense univariate polynomials over the integers, and their quotients.

Coefficients are plain Python ints, so there is no overflow at any size.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class InexactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""

    def __init__(self, message: str, remainder: "Polynomial | None" = None):
        super().__init__(message)
        self.remainder = remainder


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    """Immutable polynomial ``c0 + c1*x + ...`` with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are trimmed,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if not isinstance(c, int):
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = c.numerator
                else:
                    raise TypeError(f"integer coefficient expected, got {c!r}")
            cs.append(int(c))
        object.__setattr__(self, "coeffs", _trim(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, coeffs: list[int]) -> "Polynomial":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", _trim(coeffs))
        object.__setattr__(p, "_hash", None)
        return p

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw([c])

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "Polynomial":
        return cls._raw([0] * degree + [c])

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- ring arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial._raw([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return ZERO
        if len(b) == 1:
            k = b[0]
            return Polynomial._raw([c * k for c in a])
        if len(a) == 1:
            k = a[0]
            return Polynomial._raw([c * k for c in b])
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "Polynomial":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return Polynomial._raw([0] * k + list(self.coeffs))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(("Polynomial", self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    # -- calculus and evaluation -------------------------------------------

    def derivative(self, times: int = 1) -> "Polynomial":
        p = self
        for _ in range(times):
            p = Polynomial._raw([i * c for i, c in enumerate(p.coeffs)][1:])
        return p

    def __call__(self, t: Number) -> Number:
        return self.eval_at(t)

    def eval_at(self, t: Number) -> Number:
        """Exact Horner evaluation at an integer or Fraction."""
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    # -- division ----------------------------------------------------------

    def divmod_exact(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Long division in Z[x]; raises if a quotient coefficient is not integral."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.leading
        b = other.coeffs
        if len(rem) <= db:
            return ZERO, self
        q = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if c == 0:
                continue
            qk, r = divmod(c, lb)
            if r:
                raise InexactDivisionError(
                    f"leading coefficient {lb} does not divide {c}",
                    Polynomial._raw(rem),
                )
            q[k] = qk
            for j, bj in enumerate(b):
                rem[k + j] -= qk * bj
        return Polynomial._raw(q), Polynomial._raw(rem)

    def divide_exact(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial._raw([other])
        q, r = self.divmod_exact(other)
        if not r.is_zero():
            raise InexactDivisionError(
                f"({self}) is not divisible by ({other}); remainder {r}", r
            )
        return q

    def __floordiv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.divide_exact(o)

    def pseudo_rem(self, other: "Polynomial") -> "Polynomial":
        """Pseudo-remainder: lc(other)**k * self mod other, always in Z[x]."""
        k = self.degree - other.degree + 1
        if k <= 0:
            return self
        _, r = (self * other.leading**k).divmod_exact(other)
        return r

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


ZERO = Polynomial._raw([])
ONE = Polynomial._raw([1])
X = Polynomial._raw([0, 1])


def poly(*coeffs: int) -> Polynomial:
    """Shorthand: ``poly(0, 2, 1)`` is ``2*x + x^2``."""
    return Polynomial(coeffs)


def render(p: Polynomial) -> str:
    """Text form ``c0 + c1*x + c2*x^2 + ...`` with zero terms omitted."""
    terms = [(i, c) for i, c in enumerate(p.coeffs) if c]
    if not terms:
        return "0"
    out = []
    for k, (i, c) in enumerate(terms):
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = "x" if i == 1 else f"x^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor in Z[x] via primitive pseudo-remainder sequences.

    The result is primitive with positive leading coefficient (ONE if coprime),
    scaled by the gcd of the contents.
    """
    from math import gcd

    if a.is_zero():
        return _normalize_sign(b)
    if b.is_zero():
        return _normalize_sign(a)
    ca, cb = a.content(), b.content()
    c = gcd(ca, cb)
    a = a.divide_exact(ca)
    b = b.divide_exact(cb)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a = b
        if r.is_zero():
            b = r
        else:
            b = r.divide_exact(r.content())
    return _normalize_sign(a.divide_exact(a.content()) * c)


def _normalize_sign(p: Polynomial) -> Polynomial:
    return -p if p.leading < 0 else p


class RationalFunction:
    """Quotient of two Polynomials, kept with a positive leading denominator.

    Equality is decided by cross-multiplication, so no gcd reduction is needed
    for correctness; ``reduced()`` gives the canonical lowest-terms form.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial | int, den: Polynomial | int = 1):
        num = Polynomial._coerce(num)
        den = Polynomial._coerce(den)
        if num is None or den is None:
            raise TypeError("RationalFunction needs Polynomial or int parts")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.leading < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    @staticmethod
    def _coerce(other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Polynomial, int)):
            return RationalFunction(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        r = self.reduced()
        return hash(("RationalFunction", r.num, r.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def reduced(self) -> "RationalFunction":
        g = poly_gcd(self.num, self.den)
        if g == ONE:
            return self
        return RationalFunction(self.num.divide_exact(g), self.den.divide_exact(g))

    def eval_at(self, t: Number) -> Fraction:
        return Fraction(self.num.eval_at(t)) / Fraction(self.den.eval_at(t))

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


def rf_simplify_to_polynomial(r: RationalFunction) -> Polynomial:
    """The polynomial value of ``r``; raises InexactDivisionError otherwise."""
    return r.num.divide_exact(r.den)


def from_string_coeffs(values: Sequence[str | int]) -> Polynomial:
    return Polynomial(int(v) for v in values)
