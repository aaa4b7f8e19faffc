"""
Per-w verdict on Aut^0(X(w)) versus the stabilizer parabolic P_w.

The action map phi_w : P_w -> Aut^0(X(w)) has kernel K_w.  In simply-laced
types K_w is generated by the subtorus T(w) = intersection of ker(alpha)
over alpha in J_w and the root subgroups U_-beta with beta outside every
R+(v^-1), v <= w; phi_w is onto when X(w) is smooth.  In the other types
only injectivity is available, so dim Aut^0 is reported as a lower bound
and the kernel description is refused.

Four booleans must agree for every w:
    w^-1(alpha_0) < 0,  H^0(w, b) = 0,  X(w^-1)^ss_T(L_alpha_0) != empty,
    and ch H^0(w, g/b) = ch g (contains ch g outside simply-laced types).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .bmod import borel, h0_module, h0_tangent_char, h1_module_char, h1_tangent_char, line_cohomology
from .charring import SignedCharacter, adjoint_character, demazure_char
from .errors import InvariantViolation, Refused
from .rootsys import Root, RootSystem, is_negative
from .schubert import SchubertFacts, dim_parabolic, schubert_facts
from .weyl import DEFAULT_CAP, WeylElement, interval_below, inversions, left_descents, support


def criterion(rs: RootSystem, w: WeylElement) -> bool:
    """w^-1(alpha_0) is a negative root."""
    return is_negative(w.inverse().act(rs.highest_long_root))


def candidate_kernel_roots(rs: RootSystem, w: WeylElement, cap: int = DEFAULT_CAP) -> frozenset[Root]:
    """R+ minus the union of R+(v^-1) over v <= w."""
    covered: set = set()
    for v in interval_below(w, cap):
        covered |= inversions(v.inverse())
    return frozenset(b for b in rs.positive_roots if b not in covered)


def _component_group_order(rs: RootSystem, J) -> int:
    # T(w) = kernel of T -> (C*)^J, t -> (alpha(t)); its component group is the
    # torsion of coker(Z^J -> X(T)), read off the elementary divisors
    if not J:
        return 1
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    rows = [list(rs.simple_roots[j - 1]) for j in sorted(J)]
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    order = 1
    for k in range(min(snf.shape)):
        d = abs(int(snf[k, k]))
        if d:
            order *= d
    return order


@dataclass(frozen=True)
class KernelStructure:
    torus_dim: int
    torus_codim: int
    component_group_order: int
    unipotent_roots: frozenset[Root]

    @property
    def dim(self) -> int:
        return self.torus_dim + len(self.unipotent_roots)


def kernel_structure(rs: RootSystem, w: WeylElement, cap: int = DEFAULT_CAP) -> KernelStructure:
    """K_w = <T(w), U_{<=w}>; refused outside simply-laced types."""
    cands = candidate_kernel_roots(rs, w, cap)
    if not rs.simply_laced:
        listed = ", ".join(str(b) for b in sorted(cands)) or "none"
        raise Refused(
            f"{rs.name} is not simply laced: the description <T(w), U_<=w> of the kernel "
            f"does not apply. Roots beta in R+ minus the union of R+(v^-1) over v <= {w.label}: "
            f"{listed}; for such beta the root group U_-beta need not act trivially on X(w)")
    J = support(w)
    return KernelStructure(
        torus_dim=rs.rank - len(J),
        torus_codim=len(J),
        component_group_order=_component_group_order(rs, J),
        unipotent_roots=cands,
    )


def semistable_nonempty(rs: RootSystem, w: WeylElement, max_power: int = 2) -> bool:
    """A T-invariant section of L(n alpha_0) on X(w^-1) exists for some n <= max_power."""
    winv = w.inverse()
    a0 = rs.highest_long_root
    for n in range(1, max_power + 1):
        lam = tuple(n * x for x in a0)
        if demazure_char(rs, winv, lam)[rs.zero] > 0:
            return True
    return False


def dim_P(rs: RootSystem, w: WeylElement) -> int:
    return dim_parabolic(rs, left_descents(w))


@dataclass(frozen=True)
class AutVerdict:
    """Aut^0 facts for one w; group-theoretic fields are None when X(w) is singular."""

    w: WeylElement
    smooth: bool
    criterion_holds: bool
    simply_laced: bool
    h0_b_zero: bool
    semistable_nonempty: bool
    h0_tangent_is_adjoint: bool
    dim_P_w: int
    kernel_torus_codim: int
    kernel_torus_component_group_order: int | None
    kernel_unipotent_roots: frozenset[Root] | None
    dim_K_w: int | None
    dim_K_w_upper: int
    phi_surjective: bool | None
    phi_injective: bool | None
    dim_Aut0: int | None
    dim_Aut0_is_lower_bound: bool

    @property
    def aut0_equals_P_w(self) -> bool | None:
        if not self.smooth:
            return None
        if self.simply_laced:
            return self.criterion_holds
        # injective only; equality is not established outside simply-laced types
        return None

    def check(self):
        c = self.criterion_holds
        if not (c == self.h0_b_zero == self.semistable_nonempty == self.h0_tangent_is_adjoint):
            raise InvariantViolation(
                f"{self.w.label}: criterion={c}, H0(b)=0 {self.h0_b_zero}, "
                f"semistable={self.semistable_nonempty}, H0(g/b)~g {self.h0_tangent_is_adjoint}")
        if self.simply_laced and (self.dim_K_w == 0) != c:
            raise InvariantViolation(f"{self.w.label}: dim K_w = {self.dim_K_w} but criterion={c}")
        return self


@lru_cache(maxsize=8192)
def verdict(rs: RootSystem, w: WeylElement, cap: int = DEFAULT_CAP,
            facts: SchubertFacts | None = None) -> AutVerdict:
    facts = facts or schubert_facts(rs, w, cap)
    crit = criterion(rs, w)
    adj = adjoint_character(rs)
    h0t = h0_tangent_char(rs, w)
    is_adj = h0t == adj if rs.simply_laced else h0t.contains(adj)
    h0b = h0_module(rs, w, borel(rs))
    J = support(w)
    torus = rs.rank - len(J)
    cands = candidate_kernel_roots(rs, w, cap)
    k_upper = 0 if (crit and not rs.simply_laced) else torus + len(cands)
    dp = dim_P(rs, w)

    if rs.simply_laced:
        ks = kernel_structure(rs, w, cap)
        order, roots, dim_k = ks.component_group_order, ks.unipotent_roots, ks.dim
    else:
        order, roots = None, None
        dim_k = 0 if crit else None

    smooth = facts.smooth
    if smooth:
        surj = True if rs.simply_laced else None
        inj = crit
        dim_aut = dp - (dim_k if dim_k is not None else k_upper)
        lower = not rs.simply_laced
    else:
        surj = inj = dim_aut = None
        lower = False

    return AutVerdict(
        w=w, smooth=smooth, criterion_holds=crit, simply_laced=rs.simply_laced,
        h0_b_zero=h0b.dim == 0, semistable_nonempty=semistable_nonempty(rs, w),
        h0_tangent_is_adjoint=is_adj, dim_P_w=dp, kernel_torus_codim=len(J),
        kernel_torus_component_group_order=order, kernel_unipotent_roots=roots,
        dim_K_w=dim_k, dim_K_w_upper=k_upper, phi_surjective=surj, phi_injective=inj,
        dim_Aut0=dim_aut, dim_Aut0_is_lower_bound=lower,
    ).check()


@dataclass(frozen=True)
class CohomologySummary:
    name: str
    h0: SignedCharacter
    h1: SignedCharacter
    exact: bool = True
    h1_upper: SignedCharacter | None = None


@dataclass(frozen=True)
class SchubertReport:
    rs: RootSystem = field(repr=False)
    facts: SchubertFacts
    verdict: AutVerdict
    cohomology: tuple[CohomologySummary, ...] = ()


def cohomology_b(rs: RootSystem, w: WeylElement) -> CohomologySummary:
    b = borel(rs)
    h1, _ = h1_module_char(rs, w, b)
    return CohomologySummary("b", h0_module(rs, w, b).character, h1)


def cohomology_tangent(rs: RootSystem, w: WeylElement) -> CohomologySummary:
    return CohomologySummary("g/b", h0_tangent_char(rs, w), h1_tangent_char(rs, w))


def cohomology_line(rs: RootSystem, w: WeylElement, beta) -> CohomologySummary:
    lc = line_cohomology(rs, w, beta)
    return CohomologySummary(f"line:{','.join(map(str, lc.beta))}", lc.h0_lower, lc.h1_lower,
                             lc.exact, None if lc.exact else lc.h1_upper)


def report(rs: RootSystem, w: WeylElement, cohomology=("g/b", "b"), cap: int = DEFAULT_CAP) -> SchubertReport:
    facts = schubert_facts(rs, w, cap)
    parts = []
    for item in cohomology:
        if item == "g/b":
            parts.append(cohomology_tangent(rs, w))
        elif item == "b":
            parts.append(cohomology_b(rs, w))
        else:
            parts.append(cohomology_line(rs, w, item))
    return SchubertReport(rs, facts, verdict(rs, w, cap, facts), tuple(parts))
