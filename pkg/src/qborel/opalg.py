"""Formal noncommutative operator expressions and relation checking.

An ``OperatorExpr`` is a finite Coefficient-linear combination of words
in the letters ``e_0..e_n`` and ``k_i^{+-1}``.  Words act on module
elements right-to-left.  Two expressions are never compared as free
words: equality of operators is always decided by evaluation on graded
bases, since distinct free words can act identically.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .coeffring import Coefficient, LaurentPoly, q_binomial
from .latticemod import Element, get_module, random_datum
from .rootdata import AffineType, cartan_matrix

# letters: an int i means e_i; ("k", i, s) means k_i^s with s = +-1.


class OperatorExpr:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}

    @staticmethod
    def zero():
        return OperatorExpr()

    @staticmethod
    def identity():
        return OperatorExpr({(): Coefficient.one()})

    @staticmethod
    def e(i):
        return OperatorExpr({(i,): Coefficient.one()})

    @staticmethod
    def k(i, s=1):
        return OperatorExpr({(("k", i, s),): Coefficient.one()})

    @staticmethod
    def word(letters, coeff=None):
        return OperatorExpr({tuple(letters): coeff or Coefficient.one()})

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, Coefficient.zero()) + c
        return OperatorExpr(terms)

    def __sub__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, Coefficient.zero()) - c
        return OperatorExpr(terms)

    def __neg__(self):
        return OperatorExpr({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        """Concatenation product: (xy)(v) = x(y(v))."""
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                terms[w] = terms.get(w, Coefficient.zero()) + c
        return OperatorExpr(terms)

    def scale(self, coeff):
        if isinstance(coeff, (int, LaurentPoly)):
            coeff = coeff * Coefficient.one()
        return OperatorExpr({w: coeff * c for w, c in self.terms.items()})

    def __eq__(self, other):
        """Free-word equality only; operator equality goes via evaluation."""
        return isinstance(other, OperatorExpr) and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def words(self):
        return set(self.terms)

    def relabel(self, f):
        """Apply a letter relabeling i -> f(i) to every e-letter."""
        terms = {}
        for w, c in self.terms.items():
            w2 = tuple(x if isinstance(x, tuple) else f(x) for x in w)
            terms[w2] = terms.get(w2, Coefficient.zero()) + c
        return OperatorExpr(terms)

    def substitute(self, table):
        """Replace each e-letter i by the OperatorExpr table[i]."""
        out = OperatorExpr.zero()
        for w, c in self.terms.items():
            prod = OperatorExpr({(): c})
            for x in w:
                factor = table[x] if not isinstance(x, tuple) else OperatorExpr({(x,): Coefficient.one()})
                prod = prod * factor
            out = out + prod
        return out

    def __str__(self):
        if self.is_zero():
            return "0"

        def lstr(x):
            if isinstance(x, tuple):
                return f"k{x[1]}" + ("" if x[2] == 1 else "^-1")
            return f"e{x}"

        return " + ".join(
            f"({c}) * {'.'.join(map(lstr, w)) or '1'}"
            for w, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), str(kv[0]))))

    __repr__ = __str__


def q_bracket(x: OperatorExpr, y: OperatorExpr) -> OperatorExpr:
    """[x, y]_q = xy - q^{-1} yx."""
    return x * y - (y * x).scale(Coefficient.q_power(-1))


def evaluate(x: OperatorExpr, t: AffineType, v: Element) -> Element:
    """Apply the expression to a module element, letters right-to-left."""
    mod = get_module(t)
    out = Element.zero()
    for w, c in x.terms.items():
        u = v
        for letter in reversed(w):
            if u.is_zero():
                break
            if isinstance(letter, tuple):
                u = mod.apply_k(letter[1], letter[2], u)
            else:
                u = mod.apply_e(letter, u)
        out = out + u.scale(c)
    return out


def serre_expr(i: int, j: int, t: AffineType) -> OperatorExpr:
    """The denominator-cleared quantum Serre relation for the pair (i, j):
    sum_m (-1)^m [1-a_ij choose m]_q e_i^{1-a_ij-m} e_j e_i^m."""
    if i == j:
        raise ValueError("need i != j")
    aij = cartan_matrix(t)[i][j]
    N = 1 - aij
    out = OperatorExpr.zero()
    for m in range(N + 1):
        word = (i,) * (N - m) + (j,) + (i,) * m
        coeff = Coefficient.from_laurent(q_binomial(N, m) * ((-1) ** m))
        out = out + OperatorExpr.word(word, coeff)
    return out


def k_e_conjugation_expr(i: int, j: int, t: AffineType) -> OperatorExpr:
    """k_i e_j k_i^{-1} - q^{a_ij} e_j (zero in the algebra)."""
    aij = cartan_matrix(t)[i][j]
    return (OperatorExpr.k(i) * OperatorExpr.e(j) * OperatorExpr.k(i, -1)
            - OperatorExpr.e(j).scale(Coefficient.q_power(aij)))


def k_commutation_expr(i: int, j: int) -> OperatorExpr:
    return OperatorExpr.k(i) * OperatorExpr.k(j) - OperatorExpr.k(j) * OperatorExpr.k(i)


def central_element_expr(t: AffineType) -> OperatorExpr:
    """k_0 * prod k_i^{a_i} - 1, with a_i the marks; acts as zero."""
    from .rootdata import marks
    x = OperatorExpr.k(0)
    for i, a in enumerate(marks(t), start=1):
        for _ in range(a):
            x = x * OperatorExpr.k(i)
    return x - OperatorExpr.identity()


@dataclass
class CheckReport:
    name: str
    passed: bool
    detail: str = ""
    lines: list = field(default_factory=list)

    def line(self):
        tail = f" {self.detail}" if self.detail else ""
        return f"CHECK {self.name} {'PASS' if self.passed else 'FAIL'}{tail}"


def check_identity_on_basis(x: OperatorExpr, t: AffineType, bound,
                            extra_random: int = 0, seed: int = 0,
                            name: str = "identity",
                            height: int = None) -> CheckReport:
    """Evaluate x on every basis vector in the bound (a simple-root box,
    or a total height cap via `height`) plus extra seeded random data;
    PASS iff every value is zero."""
    mod = get_module(t)
    if height is not None:
        data = mod.enumerate_data(height=height)
    else:
        data = mod.enumerate_data(box=bound)
    rng = random.Random(seed)
    data = list(data) + [random_datum(t, rng) for _ in range(extra_random)]
    for c in data:
        out = evaluate(x, t, Element.basis(c))
        if not out.is_zero():
            return CheckReport(name, False,
                               f"counterexample {mod.datum_str(c)} -> {out}")
    return CheckReport(name, True, f"{len(data)} vectors")
