"""
Smoothness, stabilizer parabolic and Poincare polynomial of X(w).

The singular locus of X(w) is closed and B-stable, so X(w) is smooth iff it
is smooth at the base point eB.  Two tests are used:

* simply-laced: smooth iff rationally smooth (Peterson), and rational
  smoothness is palindromicity of the Poincare polynomial (Carrell-Peterson);
* other types: Kumar's criterion.  The equivariant multiplicity of X(w) at e,
  computed from a Bott-Samelson resolution, must equal
  1 / prod{beta : s_beta <= w}, with exactly l(w) such beta.

The reflection count #{beta > 0 : s_beta <= w} is always a lower bound for
dim T_e X(w) and is exact in type A.  It is not a smoothness test on its own
in type D: D4 has a singular divisor with exactly l(w) reflections below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsys import Root, RootSystem
from .weyl import (DEFAULT_CAP, WeylElement, bruhat_leq, identity, interval_below, left_descents,
                   reflections)


def reflections_below(rs: RootSystem, w: WeylElement) -> tuple[Root, ...]:
    """{beta > 0 : s_beta <= w}, in the root-table order."""
    refl = reflections(rs)
    return tuple(b for b in rs.positive_roots if bruhat_leq(refl[b], w))


def tangent_dim_at_base(rs: RootSystem, w: WeylElement) -> int:
    """#{beta > 0 : s_beta <= w}; a lower bound for dim T_e X(w), exact in type A."""
    return len(reflections_below(rs, w))


def _linear(rs: RootSystem, beta, xs):
    return sum(c * x for c, x in zip(beta, xs))


@lru_cache(maxsize=4096)
def equivariant_multiplicity_at_base(rs: RootSystem, w: WeylElement):
    """e_e X(w) as a sympy rational function in the simple-root variables x1..xn.

    Sum over subwords eps of the canonical word with product e of
    1 / prod_k tau_k(alpha_{i_k}), tau_k = s_{i_1}^{eps_1} ... s_{i_k}^{eps_k}.
    """
    import sympy

    xs = sympy.symbols(f"x1:{rs.rank + 1}")
    word = w.word0
    # dynamic programming over prefixes, keyed by tau_k
    states = {identity(rs): sympy.Integer(1)}
    for i in word:
        nxt: dict = {}
        for tau, f in states.items():
            for flip in (False, True):
                t = tau.right_mul(i) if flip else tau
                wt = _linear(rs, t.act(rs.simple_roots[i]), xs)
                nxt[t] = nxt.get(t, 0) + f / wt
        states = {t: sympy.cancel(f) for t, f in nxt.items()}
    return states.get(identity(rs), sympy.Integer(0))


def kumar_smooth(rs: RootSystem, w: WeylElement) -> bool:
    """Exact smoothness at eB via the equivariant multiplicity (any type)."""
    import sympy

    below = reflections_below(rs, w)
    if len(below) != w.length:
        return False
    xs = sympy.symbols(f"x1:{rs.rank + 1}")
    prod = sympy.Integer(1)
    for b in below:
        prod *= _linear(rs, b, xs)
    return sympy.cancel(equivariant_multiplicity_at_base(rs, w) * prod - 1) == 0


def poincare_polynomial(rs: RootSystem, w: WeylElement, cap: int = DEFAULT_CAP) -> list[int]:
    """Coefficient k counts {v <= w : l(v) = k}."""
    coeffs = [0] * (w.length + 1)
    for v in interval_below(w, cap):
        coeffs[v.length] += 1
    return coeffs


def rationally_smooth(rs: RootSystem, w: WeylElement, cap: int = DEFAULT_CAP) -> bool:
    p = poincare_polynomial(rs, w, cap)
    return p == p[::-1]


def is_smooth(rs: RootSystem, w: WeylElement, cap: int = DEFAULT_CAP) -> bool:
    if tangent_dim_at_base(rs, w) != w.length:
        return False
    if rs.simply_laced:
        return rationally_smooth(rs, w, cap)
    return kumar_smooth(rs, w)


def stabilizer_parabolic(rs: RootSystem, w: WeylElement) -> frozenset[int]:
    """Simple roots (1-based labels) generating P_w over B: the left descents of w."""
    return left_descents(w)


def dim_parabolic(rs: RootSystem, descents) -> int:
    """dim P for the parabolic containing B generated by the given simple labels."""
    levi = rs.levi_positive_roots(i - 1 for i in descents)
    return len(rs.negative_roots) + rs.rank + len(levi)


@dataclass(frozen=True)
class SchubertFacts:
    w: WeylElement
    dim: int
    smooth: bool
    rationally_smooth: bool
    tangent_dim_at_base: int
    left_descents: frozenset[int]
    poincare: tuple[int, ...]

    def __post_init__(self):
        if self.smooth and not self.rationally_smooth:
            raise AssertionError(f"{self.w.label}: smooth but not rationally smooth")
        if self.tangent_dim_at_base < self.dim:
            raise AssertionError(f"{self.w.label}: tangent count below l(w)")
        if self.smooth and self.tangent_dim_at_base != self.dim:
            raise AssertionError(f"{self.w.label}: smooth but tangent count exceeds l(w)")


def schubert_facts(rs: RootSystem, w: WeylElement, cap: int = DEFAULT_CAP) -> SchubertFacts:
    poin = poincare_polynomial(rs, w, cap)
    return SchubertFacts(
        w=w,
        dim=w.length,
        smooth=is_smooth(rs, w, cap),
        rationally_smooth=poin == poin[::-1],
        tangent_dim_at_base=tangent_dim_at_base(rs, w),
        left_descents=left_descents(w),
        poincare=tuple(poin),
    )
