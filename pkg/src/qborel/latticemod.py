"""The combinatorial module U(n,r)_a on multiplicity data.

A basis label ("datum") is a multiplicity function on the root list
``positive_roots_wr(t)``, stored as a plain tuple of nonnegative ints
aligned with that list.  The Chevalley generators act by closed
combinatorial formulas:

* ``e_i`` (i in I) moves one unit from a root beta to beta - alpha_i
  (deleting it when beta = alpha_r), with coefficient
  q^{E(i,beta,c)} [c_beta]_q, where [c_beta]_q is the q-integer of the
  multiplicity of the DECREMENTED root and E is linear in the datum;
* ``e_0`` adds one unit at theta with coefficient
  a * q^{-(theta, wt(c)) - c_theta};
* ``k_i`` acts diagonally by q^{(alpha_i, wt(c))}, and k_0 by
  q^{-(theta, wt(c))}.

All exponents here are linear functionals of the datum, so each move is
precomputed as (decremented index, incremented index or None, exponent
vector) and evaluated by a dot product.
"""

from __future__ import annotations

from functools import lru_cache

from .coeffring import Coefficient, LaurentPoly, q_integer
from .rootdata import (AffineType, pairing, positive_roots_wr, root_str,
                       simple_root, theta, to_simple_coords)


class Element:
    """A finite Coefficient-linear combination of basis data."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {c: v for c, v in (terms or {}).items() if not v.is_zero()}

    @staticmethod
    def zero():
        return Element()

    @staticmethod
    def basis(c, coeff=None):
        return Element({tuple(c): coeff if coeff is not None else Coefficient.one()})

    def __add__(self, other):
        terms = dict(self.terms)
        for c, v in other.terms.items():
            terms[c] = terms.get(c, Coefficient.zero()) + v
        return Element(terms)

    def __sub__(self, other):
        terms = dict(self.terms)
        for c, v in other.terms.items():
            terms[c] = terms.get(c, Coefficient.zero()) - v
        return Element(terms)

    def __neg__(self):
        return Element({c: -v for c, v in self.terms.items()})

    def scale(self, coeff):
        if isinstance(coeff, (int, LaurentPoly)):
            coeff = coeff * Coefficient.one()
        return Element({c: coeff * v for c, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Element) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def is_zero(self):
        return not self.terms

    def support(self):
        return set(self.terms)

    def __str__(self):
        if self.is_zero():
            return "0"
        return " + ".join(f"({v}) * [{','.join(map(str, c))}]"
                          for c, v in sorted(self.terms.items()))

    __repr__ = __str__


class LatticeModule:
    """Action tables and evaluation for one affine type."""

    def __init__(self, t: AffineType):
        self.t = t
        self.roots = positive_roots_wr(t)
        self.nroots = len(self.roots)
        self.idx = {b: p for p, b in enumerate(self.roots)}
        self.simple = [to_simple_coords(t, b) for b in self.roots]
        self.height = [sum(s) for s in self.simple]
        self.theta = theta(t)
        self.theta_idx = self.idx[self.theta]
        # alpha_r itself is always a stored root label (for D r = n-1 the
        # eps_n sign flip makes alpha_{n-1} = eps_{n-1} - eps_n literal)
        self.alpha_r_idx = self.idx[simple_root(t, t.r)]
        self.vacuum = (0,) * self.nroots
        self._moves = self._build_moves()
        self._e0_vec = tuple(
            pairing(self.theta, b) - (1 if p == self.theta_idx else 0)
            for p, b in enumerate(self.roots))
        self._k_vec = {0: tuple(pairing(self.theta, b) for b in self.roots)}
        for i in range(1, t.n + 1):
            ai = simple_root(t, i)
            self._k_vec[i] = tuple(-pairing(ai, b) for b in self.roots)
        self._e_cache = {}

    # -- move construction --------------------------------------------

    def _build_moves(self):
        t = self.t
        if t.family == "A":
            return self._moves_type_A()
        if t.r == 1:
            return self._moves_D_r1()
        n = t.n
        if t.r == n:
            pos = lambda k, l: self.idx[self._plus_root(k, l, flip=False)]
            table = self._moves_D_rn(pos)
            return table
        # r = n-1: same combinatorics through the eps_n sign flip and the
        # diagram flip n <-> n-1 on generator indices.
        pos = lambda k, l: self.idx[self._plus_root(k, l, flip=True)]
        table = self._moves_D_rn(pos)
        sigma = {i: i for i in range(1, n + 1)}
        sigma[n - 1], sigma[n] = n, n - 1
        return {i: table[sigma[i]] for i in table}

    def _plus_root(self, k, l, flip):
        v = [0] * self.t.n
        v[k - 1] += 1
        v[l - 1] += 1
        if flip:
            v[self.t.n - 1] = -v[self.t.n - 1]
        return tuple(v)

    def _moves_type_A(self):
        t = self.t
        n, r = t.n, t.r
        z = [0] * self.nroots

        def pos(i, j):  # root eps_i - eps_j
            v = [0] * (n + 1)
            v[i - 1], v[j - 1] = 1, -1
            return self.idx[tuple(v)]

        moves = {}
        for i in range(1, n + 1):
            mv = []
            if i < r:
                for l in range(r + 1, n + 2):
                    vec = list(z)
                    for tt in range(r + 1, l):
                        vec[pos(i + 1, tt)] += 1
                        vec[pos(i, tt)] -= 1
                    mv.append((pos(i, l), pos(i + 1, l), tuple(vec)))
            elif i == r:
                mv.append((pos(r, r + 1), None, tuple(z)))
            else:
                for k in range(1, r + 1):
                    vec = list(z)
                    for tt in range(k + 1, r + 1):
                        vec[pos(tt, i)] += 1
                        vec[pos(tt, i + 1)] -= 1
                    mv.append((pos(k, i + 1), pos(k, i), tuple(vec)))
            moves[i] = tuple(mv)
        return moves

    def _moves_D_r1(self):
        t = self.t
        n = t.n
        z = [0] * self.nroots

        def minus(i):  # eps_1 - eps_i
            v = [0] * n
            v[0], v[i - 1] = 1, -1
            return self.idx[tuple(v)]

        def plus(i):  # eps_1 + eps_i
            v = [0] * n
            v[0], v[i - 1] = 1, 1
            return self.idx[tuple(v)]

        moves = {1: ((minus(2), None, tuple(z)),)}
        for i in range(2, n):
            vec = list(z)
            vec[minus(i)] += 1
            vec[minus(i + 1)] -= 1
            moves[i] = ((minus(i + 1), minus(i), tuple(z)),
                        (plus(i), plus(i + 1), tuple(vec)))
        vec = list(z)
        vec[minus(n - 1)] += 1
        vec[plus(n)] -= 1
        moves[n] = ((plus(n), minus(n - 1), tuple(z)),
                    (plus(n - 1), minus(n), tuple(vec)))
        return moves

    def _moves_D_rn(self, pos):
        """Moves for the r = n combinatorics, abstracted over the cell
        position map so the r = n-1 flip can reuse it verbatim.

        Each e_i (i < n) converts one unit along a (source, target) pair
        with target = source - alpha_i.  The pairs are scanned in a fixed
        order -- eps_i + eps_l for l = n down to i+2, then eps_k + eps_i
        for k = i-1 down to 1 -- and the q-exponent of a move is the
        accumulated (c_target - c_source) over all earlier pairs, the
        pass-through cost of the derivation reaching that factor of the
        dual PBW product."""
        n = self.t.n
        moves = {}
        for i in range(1, n):
            pairs = [(pos(i, l), pos(i + 1, l)) for l in range(n, i + 1, -1)]
            pairs += [(pos(k, i), pos(k, i + 1)) for k in range(i - 1, 0, -1)]
            mv = []
            vec = [0] * self.nroots
            for src, tgt in pairs:
                mv.append((src, tgt, tuple(vec)))
                vec[tgt] += 1
                vec[src] -= 1
            moves[i] = tuple(mv)
        moves[n] = ((pos(n - 1, n), None, (0,) * self.nroots),)
        return moves

    # -- weights --------------------------------------------------------

    def wt(self, c):
        """-sum c_beta beta, in simple-root coordinates (length n)."""
        out = [0] * self.t.n
        for p, m in enumerate(c):
            if m:
                for j, x in enumerate(self.simple[p]):
                    out[j] -= m * x
        return tuple(out)

    def height_of(self, c):
        return sum(m * h for m, h in zip(c, self.height))

    # -- generator actions ----------------------------------------------

    def e_on_datum(self, i, c):
        """e_i applied to a basis datum, as a tuple of (Coefficient, datum)."""
        key = (i, c)
        hit = self._e_cache.get(key)
        if hit is not None:
            return hit
        out = []
        if i == 0:
            e = sum(v * m for v, m in zip(self._e0_vec, c))
            d = list(c)
            d[self.theta_idx] += 1
            out.append((Coefficient({1: LaurentPoly.q_power(e)}), tuple(d)))
        else:
            for dec, inc, vec in self._moves[i]:
                m = c[dec]
                if m == 0:
                    continue
                e = sum(v * mm for v, mm in zip(vec, c))
                d = list(c)
                d[dec] -= 1
                if inc is not None:
                    d[inc] += 1
                coeff = Coefficient.from_laurent(
                    LaurentPoly.q_power(e) * q_integer(m))
                out.append((coeff, tuple(d)))
        out = tuple(out)
        self._e_cache[key] = out
        return out

    def apply_e(self, i, v: Element) -> Element:
        terms = {}
        for c, coef in v.terms.items():
            for mc, md in self.e_on_datum(i, c):
                terms[md] = terms.get(md, Coefficient.zero()) + coef * mc
        return Element(terms)

    def apply_k(self, i, exponent, v: Element) -> Element:
        if exponent not in (1, -1):
            raise ValueError("k exponent must be +-1")
        vec = self._k_vec[i]
        terms = {}
        for c, coef in v.terms.items():
            e = exponent * sum(x * m for x, m in zip(vec, c))
            terms[c] = coef * Coefficient.q_power(e)
        return Element(terms)

    # -- basis enumeration ------------------------------------------------

    def enumerate_data(self, height=None, box=None):
        """All data within a total-height cap and/or a simple-root box,
        in lexicographic order of the datum tuple."""
        if height is None and box is None:
            raise ValueError("need a height cap or a box")
        out = []
        datum = [0] * self.nroots
        box = tuple(box) if box is not None else None
        used = [0] * self.t.n

        def feasible(p):
            if height is not None and self.height_of(datum) > height:
                return False
            if box is not None and any(u > b for u, b in zip(used, box)):
                return False
            return True

        def rec(p):
            if p == self.nroots:
                out.append(tuple(datum))
                return
            m = 0
            while True:
                rec(p + 1)
                datum[p] += 1
                for j, x in enumerate(self.simple[p]):
                    used[j] += x
                m += 1
                if not feasible(p):
                    break
            datum[p] = 0
            for j, x in enumerate(self.simple[p]):
                used[j] -= m * x
            return

        rec(0)
        return out

    def datum_str(self, c):
        parts = [f"{root_str(self.roots[p])}:{m}" for p, m in enumerate(c) if m]
        return "{" + ", ".join(parts) + "}"


@lru_cache(maxsize=None)
def get_module(t: AffineType) -> LatticeModule:
    return LatticeModule(t)


def wt(t: AffineType, c):
    return get_module(t).wt(c)


def apply_e(t: AffineType, i, v):
    return get_module(t).apply_e(i, v)


def apply_k(t: AffineType, i, exponent, v):
    return get_module(t).apply_k(i, exponent, v)


def enumerate_basis(t: AffineType, bound):
    """All data c with -wt(c) <= bound componentwise (bound in simple
    root coordinates), in deterministic lexicographic order."""
    return get_module(t).enumerate_data(box=bound)


def random_datum(t: AffineType, rng, max_entry=10):
    mod = get_module(t)
    return tuple(rng.randint(0, max_entry) for _ in range(mod.nroots))
