"""Exact arithmetic in the ring Z[q^{+-1}][a].

Two layers:

* ``LaurentPoly`` -- integer Laurent polynomials in q, stored as a sparse
  map from q-exponent to nonzero integer coefficient.
* ``Coefficient`` -- polynomials in the formal parameter ``a`` whose
  coefficients are Laurent polynomials in q.

Everything is exact; there is no field of fractions.  The only division
offered is ``exact_divide``, which raises ``NotDivisible`` when the
quotient does not exist in the ring.  A failed division always signals a
wrong construction upstream, never a rounding problem.
"""

from __future__ import annotations

import re


class NotDivisible(ArithmeticError):
    """Raised when an exact division in Z[q^{+-1}][a] leaves a remainder."""


def _trim(d):
    return {k: v for k, v in d.items() if v != 0}


class LaurentPoly:
    """An integer Laurent polynomial in q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _trim(dict(terms or {}))

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero():
        return LaurentPoly()

    @staticmethod
    def one():
        return LaurentPoly({0: 1})

    @staticmethod
    def q_power(k, coeff=1):
        return LaurentPoly({k: coeff})

    @staticmethod
    def from_int(c):
        return LaurentPoly({0: c})

    # -- ring structure -----------------------------------------------

    def __add__(self, other):
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return LaurentPoly(terms)

    def __sub__(self, other):
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) - v
        return LaurentPoly(terms)

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({k: v * other for k, v in self.terms.items()})
        terms = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = k1 + k2
                terms[k] = terms.get(k, 0) + v1 * v2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, m):
        out = LaurentPoly.one()
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def bar(self):
        """The bar involution q -> q^{-1}."""
        return LaurentPoly({-k: v for k, v in self.terms.items()})

    def eval_at_one(self):
        return sum(self.terms.values())

    # -- exact division -----------------------------------------------

    def exact_divide(self, den: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self/den; raises NotDivisible on any remainder."""
        if den.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        # Shift both so the divisor becomes an honest polynomial with
        # nonzero constant term, then do long division from the top.
        num = dict(self.terms)
        dmax, dmin = max(den.terms), min(den.terms)
        dlead = den.terms[dmax]
        # any quotient exponent must lie in [min(num)-dmin, max(num)-dmax]
        qfloor = min(num) - dmin
        quot = {}
        while num:
            k = max(num)
            c = num[k]
            if c % dlead != 0:
                raise NotDivisible(f"{self} is not divisible by {den}")
            qc, qk = c // dlead, k - dmax
            if qk < qfloor:
                raise NotDivisible(f"{self} is not divisible by {den}")
            quot[qk] = quot.get(qk, 0) + qc
            for dk, dv in den.terms.items():
                kk = qk + dk
                num[kk] = num.get(kk, 0) - qc * dv
                if num[kk] == 0:
                    del num[kk]
        return LaurentPoly(quot)

    # -- text form ----------------------------------------------------

    def __str__(self):
        return str(Coefficient.from_laurent(self))

    __repr__ = __str__


def q_integer(m: int) -> LaurentPoly:
    """[m]_q = q^{m-1} + q^{m-3} + ... + q^{-(m-1)}; [0]_q = 0."""
    if m < 0:
        raise ValueError("q_integer needs m >= 0")
    return LaurentPoly({m - 1 - 2 * j: 1 for j in range(m)})


def q_factorial(m: int) -> LaurentPoly:
    out = LaurentPoly.one()
    for j in range(1, m + 1):
        out = out * q_integer(j)
    return out


def q_binomial(m: int, k: int) -> LaurentPoly:
    """The Gaussian binomial [m choose k]_q, by exact Laurent division."""
    if not 0 <= k <= m:
        raise ValueError("q_binomial needs 0 <= k <= m")
    num = LaurentPoly.one()
    for j in range(m - k + 1, m + 1):
        num = num * q_integer(j)
    return num.exact_divide(q_factorial(k))


class Coefficient:
    """An element of Z[q^{+-1}][a]: a polynomial in a over LaurentPoly."""

    __slots__ = ("a_terms",)

    def __init__(self, a_terms=None):
        self.a_terms = {d: p for d, p in (a_terms or {}).items() if not p.is_zero()}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero():
        return Coefficient()

    @staticmethod
    def one():
        return Coefficient({0: LaurentPoly.one()})

    @staticmethod
    def from_laurent(p: LaurentPoly, a_degree: int = 0):
        return Coefficient({a_degree: p})

    @staticmethod
    def from_int(c: int):
        return Coefficient({0: LaurentPoly.from_int(c)})

    @staticmethod
    def q_power(k: int):
        return Coefficient({0: LaurentPoly.q_power(k)})

    @staticmethod
    def a_power(d: int):
        return Coefficient({d: LaurentPoly.one()})

    # -- ring structure -----------------------------------------------

    def __add__(self, other):
        terms = dict(self.a_terms)
        for d, p in other.a_terms.items():
            terms[d] = terms.get(d, LaurentPoly.zero()) + p
        return Coefficient(terms)

    def __sub__(self, other):
        terms = dict(self.a_terms)
        for d, p in other.a_terms.items():
            terms[d] = terms.get(d, LaurentPoly.zero()) - p
        return Coefficient(terms)

    def __neg__(self):
        return Coefficient({d: -p for d, p in self.a_terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            other = Coefficient.from_int(other)
        elif isinstance(other, LaurentPoly):
            other = Coefficient.from_laurent(other)
        terms = {}
        for d1, p1 in self.a_terms.items():
            for d2, p2 in other.a_terms.items():
                d = d1 + d2
                prod = p1 * p2
                terms[d] = terms.get(d, LaurentPoly.zero()) + prod
        return Coefficient(terms)

    __rmul__ = __mul__

    def __pow__(self, m):
        out = Coefficient.one()
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Coefficient.from_int(other)
        elif isinstance(other, LaurentPoly):
            other = Coefficient.from_laurent(other)
        return isinstance(other, Coefficient) and self.a_terms == other.a_terms

    def __hash__(self):
        return hash(tuple(sorted((d, tuple(sorted(p.terms.items())))
                                 for d, p in self.a_terms.items())))

    def __bool__(self):
        return bool(self.a_terms)

    def is_zero(self):
        return not self.a_terms

    def bar(self):
        return Coefficient({d: p.bar() for d, p in self.a_terms.items()})

    # -- text form ----------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        chunks = []
        for d in sorted(self.a_terms):
            p = self.a_terms[d]
            for k in sorted(p.terms):
                chunks.append((p.terms[k], k, d))
        out = []
        for c, k, d in chunks:
            parts = []
            if abs(c) != 1 or (k == 0 and d == 0):
                parts.append(str(abs(c)))
            if k != 0:
                parts.append(f"q^{k}")
            if d != 0:
                parts.append("a" if d == 1 else f"a^{d}")
            mono = "*".join(parts)
            if not out:
                out.append(("-" if c < 0 else "") + mono)
            else:
                out.append(("- " if c < 0 else "+ ") + mono)
        return " ".join(out)

    __repr__ = __str__


_MONO_RE = re.compile(
    r"^(?P<int>-?\d+)?"
    r"(?:\*?q\^(?P<q>-?\d+))?"
    r"(?:\*?a(?:\^(?P<a>\d+))?)?$"
)


def parse_coefficient(text: str) -> Coefficient:
    """Parse the canonical text form produced by Coefficient.__str__."""
    text = text.strip()
    if text == "0":
        return Coefficient.zero()
    # normalize "x - y" into "x + -y" then split on +
    text = text.replace("- ", "+ -").replace("+ +", "+")
    out = Coefficient.zero()
    for raw in text.split("+"):
        mono = raw.strip().replace(" ", "")
        if not mono:
            continue
        neg = mono.startswith("-") and not mono[1:2].isdigit()
        if neg:
            mono = mono[1:]
        m = _MONO_RE.match(mono)
        if not m or not mono:
            raise ValueError(f"cannot parse monomial {raw!r}")
        c = int(m.group("int")) if m.group("int") is not None else 1
        if neg:
            c = -c
        k = int(m.group("q")) if m.group("q") is not None else 0
        has_a = "a" in mono
        d = int(m.group("a")) if m.group("a") is not None else (1 if has_a else 0)
        out = out + Coefficient({d: LaurentPoly.q_power(k, c)})
    return out


def exact_divide(num: Coefficient, den: LaurentPoly) -> Coefficient:
    """Divide every a-component of num by den; NotDivisible on remainder."""
    return Coefficient({d: p.exact_divide(den) for d, p in num.a_terms.items()})
