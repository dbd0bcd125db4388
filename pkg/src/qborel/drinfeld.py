"""Higher root vectors E_{k delta - alpha_i} and the currents psi+_{i,k}.

The level-raising step is the four-term combination

    -(q + q^{-1}) E_{(k+1)d - a_i}
        = E_{d-a_i} e_i E_k - q^{-2} e_i E_{d-a_i} E_k
          - E_k E_{d-a_i} e_i + q^{-2} E_k e_i E_{d-a_i},

applied with memoized lazy evaluation on basis data (materializing E_k
as a word expression would grow exponentially in k).  The division by
q + q^{-1} must be exact; a failure is a hard error and always means
the base operator data is wrong.

The central element acts trivially on every module here, so no
C^{1/2} bookkeeping appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coeffring import Coefficient, LaurentPoly, exact_divide, q_integer
from .latticemod import Element, get_module
from .opalg import evaluate
from .rootdata import AffineType, o_sign
from .rootvec import catalog_entry


class DomainViolation(RuntimeError):
    """A leading-word operator was needed outside its verified span."""


class NotEigenvector(RuntimeError):
    def __init__(self, msg, residual=None):
        super().__init__(msg)
        self.residual = residual


@dataclass
class EllWeight:
    """Truncated l-weight: per node i, coefficients (Psi_{i,0},...,Psi_{i,K})."""
    psi: dict
    closed_form: dict = field(default_factory=dict)

    def series(self, i):
        return self.psi[i]


def c_r(t: AffineType) -> Coefficient:
    """The spectral-parameter shift scalar between the constructed module
    and the prefundamental representation."""
    n = t.n
    qmq = LaurentPoly({1: 1, -1: -1})  # q - q^{-1}
    if t.family == "A":
        sign = (-1) ** (n + 1) * o_sign(t, t.r)
        return Coefficient.from_laurent(qmq * LaurentPoly.q_power(-(n + 1), sign))
    return Coefficient.from_laurent(
        qmq * LaurentPoly.q_power(-2 * (n - 1), o_sign(t, t.r)))


class CurrentEngine:
    """Memoized computation of E_{k delta - alpha_i} on the lattice module."""

    def __init__(self, t: AffineType):
        self.t = t
        self.mod = get_module(t)
        self._entries = {i: catalog_entry(t, i) for i in range(1, t.n + 1)}
        self._cache = {}
        self._q2 = Coefficient.q_power(-2)
        self._two = q_integer(2)  # q + q^{-1}

    # -- level one ----------------------------------------------------

    def _string_power(self, c):
        """m if the datum is m units at alpha_r, else None."""
        p = self.mod.alpha_r_idx
        if all(x == 0 for i, x in enumerate(c) if i != p):
            return c[p]
        return None

    def E1(self, i: int, v: Element) -> Element:
        entry = self._entries[i]
        if entry.full is not None:
            return evaluate(entry.full, self.t, v)
        # leading-only (or zero) operator: restrict to the verified span
        for c in v.terms:
            m = self._string_power(c)
            if m is None or m > 2:
                raise DomainViolation(
                    f"E_(delta-alpha_{i}) needed outside the alpha_r-string "
                    f"span at {self.mod.datum_str(c)}")
        return evaluate(entry.leading, self.t, v)

    # -- level k ------------------------------------------------------

    def E(self, i: int, k: int, v: Element) -> Element:
        if k < 1:
            raise ValueError("level must be >= 1")
        out = Element.zero()
        for c, coeff in v.terms.items():
            out = out + self._E_on_datum(i, k, c).scale(coeff)
        return out

    def _E_on_datum(self, i: int, k: int, c) -> Element:
        key = (i, k, c)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        v = Element.basis(c)
        if k == 1:
            out = self.E1(i, v)
        else:
            e = lambda u: self.mod.apply_e(i, u)
            Ek = lambda u: self.E(i, k - 1, u)
            E1 = lambda u: self.E1(i, u)
            four = (E1(e(Ek(v)))
                    - e(E1(Ek(v))).scale(self._q2)
                    - Ek(E1(e(v)))
                    + Ek(e(E1(v))).scale(self._q2))
            out = Element(
                {d: -exact_divide(cf, self._two) for d, cf in four.terms.items()})
        self._cache[key] = out
        return out

    # -- currents ------------------------------------------------------

    def psi_plus(self, i: int, k: int, v: Element) -> Element:
        o = o_sign(self.t, i)
        qmq = Coefficient.from_laurent(LaurentPoly({1: 1, -1: -1}))
        w = (self.E(i, k, self.mod.apply_e(i, v))
             - self.mod.apply_e(i, self.E(i, k, v)).scale(self._q2))
        w = self.mod.apply_k(i, 1, w)
        return w.scale(qmq * (o ** k))

    def x_minus_on_vacuum(self, i: int, k: int) -> Element:
        vac = Element.basis(self.mod.vacuum)
        o = o_sign(self.t, i)
        return self.mod.apply_k(i, 1, self.E(i, k, vac)).scale(-(o ** k))


def ell_weight_of_vacuum(t: AffineType, K: int = 6) -> EllWeight:
    """Eigenvalue lists of psi+_{i,k} on the vacuum, k <= K, per node."""
    eng = CurrentEngine(t)
    vac = Element.basis(eng.mod.vacuum)
    vkey = eng.mod.vacuum
    psi = {}
    form = {}
    for i in range(1, t.n + 1):
        coeffs = [Coefficient.one()]
        for k in range(1, K + 1):
            w = eng.psi_plus(i, k, vac)
            if w.is_zero():
                coeffs.append(Coefficient.zero())
            elif set(w.terms) == {vkey}:
                coeffs.append(w.terms[vkey])
            else:
                raise NotEigenvector(
                    f"psi+_{i},{k} does not preserve the vacuum line", w)
        coeffs = tuple(coeffs)
        psi[i] = coeffs
        expected = [Coefficient.one(), -(Coefficient.a_power(1) * c_r(t))]
        expected += [Coefficient.zero()] * (K - 1)
        if i == t.r and coeffs == tuple(expected):
            form[i] = "polynomial"
        elif all(c.is_zero() for c in coeffs[1:]):
            form[i] = "trivial"
        else:
            form[i] = "unrecognized"
    return EllWeight(psi, form)
