"""Exact arithmetic over the rational function field Q(q).

Laurent polynomials in a single indeterminate q with rational
coefficients, and canonically reduced quotients of them.  The canonical
form is chosen so that mathematical equality is plain structural
equality of representations: every identity check downstream is
``lhs == rhs``, with no numeric tolerance and no randomized equality
testing.

Canonical form of a nonzero quotient num/den:

* den is an ordinary polynomial (minimal exponent 0, so its constant
  term is nonzero) with coprime integer coefficients and a positive
  leading coefficient;
* num is a Laurent polynomial carrying everything else, including the
  overall power of q and the rational content;
* the polynomial parts of num and den are coprime;
* zero is 0/1.

q is treated as a formal indeterminate here.  Substituting a rational
number for q is a separate, explicit step (`eval_at`), and the p-adic
reading of q lives entirely in the `padic` module.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Mapping, Union

__all__ = [
    "BigRational",
    "LaurentPolyQ",
    "PoleError",
    "QBracketArgs",
    "RatFuncQ",
    "ZERO",
    "ONE",
    "Q",
    "binomial",
    "eval_at",
    "q_power",
    "qbracket",
    "qbracket_reflect",
    "ratfunc_arith",
    "subst_q_inverse",
]

# Arbitrary-precision rationals: numerator/denominator invariants
# (reduced, positive denominator) are exactly what fractions.Fraction
# guarantees, so it is used directly as the coefficient type.
BigRational = Fraction

Rational = Union[Fraction, int]


class PoleError(ArithmeticError):
    """Evaluation at a point where the value is not defined."""


# ---------------------------------------------------------------------------
# dense integer polynomial helpers (ascending coefficient lists, [] == 0)
# ---------------------------------------------------------------------------


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _int_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _int_divexact(a: list[int], b: list[int]) -> list[int]:
    # exact division in Z[q]; callers only divide by known factors
    if not a:
        return []
    rem = list(a)
    lb = b[-1]
    out = [0] * (len(a) - len(b) + 1)
    for shift in range(len(a) - len(b), -1, -1):
        c = rem[shift + len(b) - 1]
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        c //= lb
        out[shift] = c
        if c:
            for j, y in enumerate(b):
                rem[shift + j] -= c * y
    if any(rem):
        raise ArithmeticError("nonzero remainder in exact polynomial division")
    return _trim(out)


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # remainder of lc(b)^k * a by b, computed without fractions
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    _trim(r)
    while len(r) - 1 >= db:
        lr = r[-1]
        d = len(r) - 1 - db
        r = [lb * x for x in r]
        for j, y in enumerate(b):
            r[j + d] -= lr * y
        _trim(r)
        if not r:
            break
    return r


def _int_content(cs: list[int]) -> int:
    return math.gcd(*cs) if cs else 0


def _int_primitive(cs: list[int]) -> list[int]:
    c = _int_content(cs)
    if c in (0, 1):
        return list(cs)
    return [x // c for x in cs]


def _int_gcd_poly(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd in Z[q], normalized to a positive leading coefficient."""
    a = _int_primitive(_trim(list(a)))
    b = _int_primitive(_trim(list(b)))
    if not a:
        a, b = b, a
    if not b:
        if not a:
            return []
        return a if a[-1] > 0 else [-x for x in a]
    if a == b:
        pass
    else:
        if len(a) < len(b):
            a, b = b, a
        while b:
            r = _pseudo_rem(a, b)
            a, b = b, _int_primitive(r)
    return a if a[-1] > 0 else [-x for x in a]


def _split_fraction_dense(dense: list[Fraction]) -> tuple[Fraction, list[int]]:
    # dense nonzero with nonzero ends -> (signed content, primitive part)
    # primitive part has coprime integer coefficients and positive lead
    num_gcd = math.gcd(*(c.numerator for c in dense))
    den_lcm = 1
    for c in dense:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    content = Fraction(num_gcd, den_lcm)
    if dense[-1] < 0:
        content = -content
    prim = [int(c / content) for c in dense]
    return content, prim


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPolyQ:
    """Sparse Laurent polynomial in q over Q.

    Exponents may be negative; zero coefficients are never stored.
    Instances are immutable and hashable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, Rational] | None = None):
        c: dict[int, Fraction] = {}
        if coeffs:
            for e, v in coeffs.items():
                v = Fraction(v)
                if v:
                    c[int(e)] = v
        self._c = c

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPolyQ":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolyQ":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: Rational = 1) -> "LaurentPolyQ":
        return cls({exp: coeff})

    @classmethod
    def _from_dense(cls, shift: int, dense: list) -> "LaurentPolyQ":
        p = cls.__new__(cls)
        p._c = {shift + i: Fraction(v) for i, v in enumerate(dense) if v}
        return p

    # -- inspection ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._c

    def items(self) -> list[tuple[int, Fraction]]:
        """Coefficients as (exponent, value) pairs, ascending in exponent."""
        return sorted(self._c.items())

    def coeff(self, exp: int) -> Fraction:
        return self._c.get(exp, Fraction(0))

    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return max(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPolyQ):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == LaurentPolyQ({0: other})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        p = LaurentPolyQ.__new__(LaurentPolyQ)
        p._c = c
        return p

    __radd__ = __add__

    def __neg__(self):
        p = LaurentPolyQ.__new__(LaurentPolyQ)
        p._c = {e: -v for e, v in self._c.items()}
        return p

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            p = LaurentPolyQ.__new__(LaurentPolyQ)
            p._c = {e: v * other for e, v in self._c.items()} if other else {}
            return p
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        c: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                s = c.get(e, 0) + v1 * v2
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        p = LaurentPolyQ.__new__(LaurentPolyQ)
        p._c = c
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of Laurent polynomials are not polynomials")
        out = LaurentPolyQ.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPolyQ":
        """Multiply by q^k."""
        p = LaurentPolyQ.__new__(LaurentPolyQ)
        p._c = {e + k: v for e, v in self._c.items()}
        return p

    def mirror(self) -> "LaurentPolyQ":
        """Substitute q -> 1/q (negate every exponent)."""
        p = LaurentPolyQ.__new__(LaurentPolyQ)
        p._c = {-e: v for e, v in self._c.items()}
        return p

    def __call__(self, q0: Rational) -> Fraction:
        q0 = Fraction(q0)
        total = Fraction(0)
        for e, v in self._c.items():
            if q0 == 0:
                if e < 0:
                    raise PoleError("negative exponent at q = 0")
                total += v if e == 0 else 0
            else:
                total += v * q0**e
        return total

    # -- internal normal forms ------------------------------------------

    def _split(self) -> tuple[int, Fraction, list[int]]:
        # self == content * q^shift * primitive(q); requires self != 0
        if not self._c:
            raise ValueError("cannot split the zero polynomial")
        lo = min(self._c)
        hi = max(self._c)
        dense = [self._c.get(lo + i, Fraction(0)) for i in range(hi - lo + 1)]
        content, prim = _split_fraction_dense(dense)
        return lo, content, prim

    def _int_coeffs(self) -> list[int]:
        # dense integer coefficients of a polynomial (min_exp == 0)
        hi = max(self._c)
        out = [0] * (hi + 1)
        for e, v in self._c.items():
            out[e] = int(v)
        return out

    # -- formatting ------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts: list[str] = []
        for e, v in self.items():
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                body = qpart if mag == 1 else f"{mag}*{qpart}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolyQ({dict(self.items())!r})"


def _as_laurent(value) -> "LaurentPolyQ":
    if isinstance(value, LaurentPolyQ):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPolyQ({0: value})
    if isinstance(value, dict):
        return LaurentPolyQ(value)
    return NotImplemented


# ---------------------------------------------------------------------------
# canonical rational functions
# ---------------------------------------------------------------------------


_TERM_RE = re.compile(r"^(-?\d+(?:/\d+)?)\*q\^(-?\d+)$")


class RatFuncQ:
    """Canonically reduced quotient of Laurent polynomials in q.

    All arithmetic returns canonical values, so `==` decides mathematical
    equality.  The denominator is an ordinary polynomial with content 1,
    positive leading coefficient and nonzero constant term; the numerator
    absorbs the rational content and the overall power of q.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num_l = _as_laurent(num)
        den_l = _as_laurent(den)
        if num_l is NotImplemented or den_l is NotImplemented:
            raise TypeError("RatFuncQ expects Laurent polynomials or rationals")
        n, d = _canonical_parts(num_l, den_l)
        self.num = n
        self.den = d

    @classmethod
    def _make(cls, num: LaurentPolyQ, den: LaurentPolyQ) -> "RatFuncQ":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def _from_parts(cls, shift: int, content: Fraction, num_prim: list[int],
                    den_prim: list[int]) -> "RatFuncQ":
        if not num_prim or content == 0:
            return ZERO
        num = LaurentPolyQ._from_dense(shift, [content * c for c in num_prim])
        den = LaurentPolyQ._from_dense(0, den_prim)
        return cls._make(num, den)

    # -- inspection ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, LaurentPolyQ, dict)):
            other = RatFuncQ(other)
        if isinstance(other, RatFuncQ):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero:
            return other
        if other.num.is_zero:
            return self
        s1, c1, n1 = self.num._split()
        s2, c2, n2 = other.num._split()
        d1 = self.den._int_coeffs()
        d2 = other.den._int_coeffs()
        if d1 == d2:
            g, d1r, d2r = d1, [1], [1]
        elif d1 == [1] or d2 == [1]:
            g, d1r, d2r = [1], d1, d2
        else:
            g = _int_gcd_poly(d1, d2)
            if g == [1]:
                d1r, d2r = d1, d2
            else:
                d1r = _int_divexact(d1, g)
                d2r = _int_divexact(d2, g)
        a = _int_mul(n1, d2r)
        b = _int_mul(n2, d1r)
        lo = min(s1, s2)
        hi = max(s1 + len(a), s2 + len(b))
        dense = [Fraction(0)] * (hi - lo)
        for i, x in enumerate(a):
            if x:
                dense[s1 - lo + i] += c1 * x
        for i, x in enumerate(b):
            if x:
                dense[s2 - lo + i] += c2 * x
        while dense and not dense[-1]:
            dense.pop()
        start = 0
        while start < len(dense) and not dense[start]:
            start += 1
        if start == len(dense):
            return ZERO
        dense = dense[start:]
        content, prim = _split_fraction_dense(dense)
        den_full = _int_mul(g, _int_mul(d1r, d2r))
        if g != [1]:
            h = _int_gcd_poly(prim, g)
            if h != [1]:
                prim = _int_divexact(prim, h)
                den_full = _int_divexact(den_full, h)
        return RatFuncQ._from_parts(lo + start, content, prim, den_full)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncQ._make(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero or other.num.is_zero:
            return ZERO
        s1, c1, n1 = self.num._split()
        s2, c2, n2 = other.num._split()
        d1 = self.den._int_coeffs()
        d2 = other.den._int_coeffs()
        g1 = _int_gcd_poly(n1, d2) if d2 != [1] else [1]
        g2 = _int_gcd_poly(n2, d1) if d1 != [1] else [1]
        if g1 != [1]:
            n1 = _int_divexact(n1, g1)
            d2 = _int_divexact(d2, g1)
        if g2 != [1]:
            n2 = _int_divexact(n2, g2)
            d1 = _int_divexact(d1, g2)
        return RatFuncQ._from_parts(
            s1 + s2, c1 * c2, _int_mul(n1, n2), _int_mul(d1, d2)
        )

    __rmul__ = __mul__

    def _inverse(self) -> "RatFuncQ":
        if self.num.is_zero:
            raise ZeroDivisionError("inverse of zero rational function")
        s, c, n = self.num._split()
        d = self.den._int_coeffs()
        return RatFuncQ._from_parts(-s, 1 / c, d, n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other._inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self._inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("rational function powers must be integers")
        if k == 0:
            return ONE
        if k < 0:
            return self._inverse() ** (-k)
        if self.num.is_zero:
            return ZERO
        s, c, n = self.num._split()
        d = self.den._int_coeffs()
        nk = [1]
        dk = [1]
        for _ in range(k):
            nk = _int_mul(nk, n)
            dk = _int_mul(dk, d)
        return RatFuncQ._from_parts(s * k, c**k, nk, dk)

    # -- substitutions ------------------------------------------------------

    def subst_q_inverse(self) -> "RatFuncQ":
        """Replace q by 1/q and re-canonicalize."""
        return RatFuncQ(self.num.mirror(), self.den.mirror())

    def eval_at(self, q0: Rational) -> Fraction:
        """Exact value at q = q0; raises PoleError at a pole."""
        q0 = Fraction(q0)
        dv = self.den(q0)
        if dv == 0:
            raise PoleError(f"denominator vanishes at q = {q0}")
        return self.num(q0) / dv

    # -- serialization --------------------------------------------------------

    def to_canonical_string(self) -> str:
        """Machine form: explicit terms, ascending exponents, 'num / den'."""
        return f"{_poly_canonical(self.num)} / {_poly_canonical(self.den)}"

    @classmethod
    def from_canonical_string(cls, text: str) -> "RatFuncQ":
        try:
            num_text, den_text = text.split(" / ")
        except ValueError:
            raise ValueError(f"malformed rational function string: {text!r}") from None
        return cls(_poly_parse(num_text), _poly_parse(den_text))

    def __str__(self) -> str:
        if self.den == LaurentPolyQ.one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFuncQ({self.to_canonical_string()!r})"


def _poly_canonical(p: LaurentPolyQ) -> str:
    if p.is_zero:
        return "0"
    return " + ".join(f"{c}*q^{e}" for e, c in p.items())


def _poly_parse(text: str) -> LaurentPolyQ:
    if text == "0":
        return LaurentPolyQ.zero()
    coeffs: dict[int, Fraction] = {}
    for term in text.split(" + "):
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"malformed term: {term!r}")
        coeffs[int(m.group(2))] = Fraction(m.group(1))
    return LaurentPolyQ(coeffs)


def _coerce(value) -> "RatFuncQ":
    if isinstance(value, RatFuncQ):
        return value
    if isinstance(value, (int, Fraction, LaurentPolyQ)):
        return RatFuncQ(value)
    return NotImplemented


def _canonical_parts(num: LaurentPolyQ, den: LaurentPolyQ) -> tuple[LaurentPolyQ, LaurentPolyQ]:
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    if num.is_zero:
        return LaurentPolyQ.zero(), LaurentPolyQ.one()
    sn, cn, n = num._split()
    sd, cd, d = den._split()
    g = _int_gcd_poly(n, d)
    if g != [1]:
        n = _int_divexact(n, g)
        d = _int_divexact(d, g)
    content = cn / cd
    num_out = LaurentPolyQ._from_dense(sn - sd, [content * c for c in n])
    den_out = LaurentPolyQ._from_dense(0, d)
    return num_out, den_out


ZERO = RatFuncQ(0)
ONE = RatFuncQ(1)
Q = RatFuncQ(LaurentPolyQ.monomial(1))


def q_power(e: int) -> RatFuncQ:
    """The monomial q^e (e may be negative)."""
    return RatFuncQ._make(LaurentPolyQ.monomial(e), LaurentPolyQ.one())


# ---------------------------------------------------------------------------
# spec operations
# ---------------------------------------------------------------------------


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError("binomial expects a nonnegative upper index")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def qbracket(x: int, a: int) -> RatFuncQ:
    """q-analogue [x]_{q^a} = (1 - q^(a x)) / (1 - q^a).

    For x >= 0 this reduces to the geometric sum
    1 + q^a + ... + q^(a (x-1)); negative x gives a Laurent value.
    """
    if a == 0:
        raise ValueError("bracket scale must be nonzero")
    num = LaurentPolyQ({0: 1}) - LaurentPolyQ.monomial(a * x)
    den = LaurentPolyQ({0: 1}) - LaurentPolyQ.monomial(a)
    return RatFuncQ(num, den)


@dataclass(frozen=True)
class QBracketArgs:
    """Argument pair of a q-bracket: [x] with bracket base q^a."""

    x: int
    a: int

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("bracket scale must be nonzero")

    def value(self) -> RatFuncQ:
        return qbracket(self.x, self.a)


def qbracket_reflect(x: int, alpha: int, n: int) -> tuple[RatFuncQ, RatFuncQ]:
    """Both sides of [1-x]_{q^-a}^n == (-1)^n q^(n a) [x-1]_{q^a}^n.

    Returned as a pair so the reflection stays a permanent regression
    witness; the two components are structurally equal.
    """
    if alpha < 1:
        raise ValueError("weight must be a positive integer")
    if n < 0:
        raise ValueError("power must be nonnegative")
    lhs = qbracket(1 - x, -alpha) ** n
    rhs = (-1) ** n * q_power(n * alpha) * qbracket(x - 1, alpha) ** n
    return lhs, rhs


def subst_q_inverse(f: RatFuncQ) -> RatFuncQ:
    """q -> 1/q on a rational function; involutive."""
    return f.subst_q_inverse()


def eval_at(f: RatFuncQ, q0: Rational) -> Fraction:
    """Exact rational value of f at q = q0 (PoleError at poles).

    Because values are canonical, removable singularities are already
    cancelled; in particular q0 = 1 realizes the q -> 1 limit.
    """
    return f.eval_at(q0)


def ratfunc_arith(lhs: RatFuncQ, rhs, op: str) -> RatFuncQ:
    """Dispatch-style surface over the operators: add/sub/mul/div/pow."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    if op == "pow":
        return lhs ** rhs
    raise ValueError(f"unknown operation: {op!r}")
