"""Graded characters of the lattice module and product-series expansions.

Characters live over the root lattice: a graded dimension is a map from
a depth vector (the simple-root coordinates of minus the weight, always
componentwise nonnegative here) to a dimension.  Two independent routes
are provided and never merged:

* ``module_character`` counts basis data directly;
* ``product_character`` expands a product of geometric series
  prod_beta (1 - e^{-beta})^{-m_beta} coefficientwise.

Their agreement on the inversion-set roots with unit exponents is a
proved identity, checked by ``character_identity_check``; the two routes share
no code beyond the cell enumeration.
"""

from __future__ import annotations

from itertools import product as iproduct

from .opalg import CheckReport
from .rootdata import AffineType, positive_roots_wr, to_simple_coords


def positive_roots_simple(t: AffineType):
    """The inversion-set roots in simple-root coordinates."""
    return [tuple(to_simple_coords(t, b)) for b in positive_roots_wr(t)]


def _cells(rank, bound=None, height=None):
    """Depth vectors within a componentwise box and/or a total cap,
    in lexicographic order."""
    if bound is None and height is None:
        raise ValueError("need a box or a height cap")
    if bound is None:
        bound = (height,) * rank
    out = []
    for w in iproduct(*(range(b + 1) for b in bound)):
        if height is None or sum(w) <= height:
            out.append(w)
    return out


def module_character(t: AffineType, bound=None, height=None):
    """Weight-space dimensions of the lattice module by direct count."""
    from .latticemod import get_module
    mod = get_module(t)
    dims = {}
    for c in mod.enumerate_data(height=height, box=bound):
        w = tuple(-x for x in mod.wt(c))
        dims[w] = dims.get(w, 0) + 1
    return dims


def product_character(roots, exponents, bound=None, height=None):
    """Coefficients of prod_i (1 - e^{-roots[i]})^{-exponents[i]} on the
    cell set; roots are simple-root coordinate tuples."""
    if len(roots) != len(exponents):
        raise ValueError("one exponent per root")
    if any(m < 1 for m in exponents):
        raise ValueError("exponents must be positive")
    rank = len(roots[0])
    cells = _cells(rank, bound=bound, height=height)
    cellset = set(cells)
    dims = {w: 0 for w in cells}
    dims[(0,) * rank] = 1
    # in-place forward pass over lexicographically ordered cells turns
    # each factor into its full geometric series
    for beta, m in zip(roots, exponents):
        for _ in range(m):
            for w in cells:
                prev = tuple(x - y for x, y in zip(w, beta))
                if prev in cellset:
                    dims[w] += dims[prev]
    return {w: d for w, d in dims.items() if d}


def character_identity_check(t: AffineType, height: int) -> CheckReport:
    """Direct count vs unit-exponent product expansion on the full
    height-capped weight box."""
    roots = positive_roots_simple(t)
    lhs = module_character(t, height=height)
    rhs = product_character(roots, [1] * len(roots), height=height)
    name = f"character-{t}-h{height}"
    if lhs == rhs:
        return CheckReport(name, True, f"{len(lhs)} weights")
    bad = sorted(set(lhs) ^ set(rhs)
                 | {w for w in set(lhs) & set(rhs) if lhs[w] != rhs[w]})
    w = bad[0]
    return CheckReport(name, False,
                       f"at depth {w}: count {lhs.get(w, 0)}, "
                       f"product {rhs.get(w, 0)}")


def dump_csv(dims) -> str:
    """One line per weight: comma-separated depth coordinates, then the
    dimension."""
    lines = []
    for w in sorted(dims):
        lines.append(",".join(map(str, w)) + f";{dims[w]}")
    return "\n".join(lines)
