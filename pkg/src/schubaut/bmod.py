"""
B-submodules of the adjoint algebra and their cohomology over X(w).

Convention: B is the *negative* Borel, with roots R-.  B-stability of a
T-stable subspace V of g therefore means closure under bracketing with
g_{-alpha} for simple alpha:

    beta in V, beta - alpha in R   ->  beta - alpha in V
    beta = alpha in V              ->  h_alpha in V
    h in V with alpha(h) != 0      ->  -alpha in V

The weights of g/b are the positive roots.  No structure constants are
needed anywhere: [g_-alpha, g_beta] != 0 iff beta - alpha is a root or 0.

H^0(w, V) is computed as a subspace of V by folding one P^1-step at a time
along a reduced word, rightmost letter first.  Each step splits V into
indecomposable B_gamma-summands; a summand survives iff its twist a is 0.
ch H^1(w, V) is the difference between ch H^0 and the Euler characteristic,
which is valid because H^i(w, V) = 0 for i >= 2 on these modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .charring import ZERO, SignedCharacter, adjoint_character, demazure_char, euler_char_module
from .errors import InvalidInput, InvariantViolation, StructuralError
from .rootsys import Root, RootSystem, _norm, add, is_positive, sub
from .weyl import WeylElement

Row = tuple  # a rational vector in coroot coordinates


# ---------------------------------------------------------------------------
# rational linear algebra on Cartan subspaces (coroot basis)


def _to_frac(x) -> Fraction:
    return Fraction(int(x.p), int(x.q))


@lru_cache(maxsize=100_000)
def _rref(rows: tuple[Row, ...], n: int) -> tuple[Row, ...]:
    if not rows:
        return ()
    from sympy import Matrix, Rational

    m = Matrix([[Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x
                 for x in r] for r in rows])
    red, pivots = m.rref()
    return tuple(
        tuple(_norm(_to_frac(red[i, j])) for j in range(n)) for i in range(len(pivots))
    )


def _gamma_values(rs: RootSystem, rows: Sequence[Row], g: int) -> list:
    """gamma(h) for each row h, with gamma = alpha_g and h in coroot coordinates."""
    c = rs.cartan[g]
    return [_norm(sum((Fraction(x) * c[j] for j, x in enumerate(r)), Fraction(0))) for r in rows]


@lru_cache(maxsize=100_000)
def _kernel_part(rs: RootSystem, rows: tuple[Row, ...], g: int) -> tuple[Row, ...]:
    """Basis (RREF) of span(rows) intersected with ker alpha_g."""
    vals = _gamma_values(rs, rows, g)
    pivot = next((k for k, v in enumerate(vals) if v != 0), None)
    if pivot is None:
        return rows
    out = []
    for k, r in enumerate(rows):
        if k == pivot:
            continue
        t = Fraction(vals[k]) / vals[pivot]
        out.append(tuple(_norm(a - t * b) for a, b in zip(r, rows[pivot])))
    return _rref(tuple(out), rs.rank)


def _in_span(rows: tuple[Row, ...], v: Row, n: int) -> bool:
    return len(_rref(rows + (v,), n)) == len(rows)


def _unit(n: int, i: int) -> Row:
    return tuple(int(i == j) for j in range(n))


# ---------------------------------------------------------------------------
# subspaces of g


@dataclass(frozen=True, eq=False)
class GSubspace:
    """A T-stable subspace of g: root spaces plus a subspace of h (RREF rows)."""

    rs: RootSystem = field(repr=False)
    roots: frozenset
    cartan: tuple[Row, ...] = ()

    def __post_init__(self):
        for b in self.roots:
            self.rs.check_root(b)
        object.__setattr__(self, "roots", frozenset(self.roots))
        object.__setattr__(self, "cartan", _rref(tuple(tuple(r) for r in self.cartan), self.rs.rank))

    def __eq__(self, other):
        return (isinstance(other, GSubspace) and self.rs is other.rs
                and self.roots == other.roots and self.cartan == other.cartan)

    def __hash__(self):
        return hash((self.rs.name, self.roots, self.cartan))

    def __repr__(self):
        return f"GSubspace({self.rs.name}, dim={self.dim}, cartan_dim={len(self.cartan)})"

    @property
    def dim(self) -> int:
        return len(self.roots) + len(self.cartan)

    @property
    def cartan_dim(self) -> int:
        return len(self.cartan)

    @cached_property
    def character(self) -> SignedCharacter:
        terms = [(b, 1) for b in self.roots]
        if self.cartan:
            terms.append((self.rs.zero, len(self.cartan)))
        return SignedCharacter(terms)

    def weights(self) -> list:
        """Weight multiset (zero repeated once per Cartan dimension)."""
        return sorted(self.roots) + [self.rs.zero] * len(self.cartan)

    def contains(self, other: "GSubspace") -> bool:
        if not other.roots <= self.roots:
            return False
        return len(_rref(self.cartan + other.cartan, self.rs.rank)) == len(self.cartan)

    def has_coroot(self, i: int) -> bool:
        return _in_span(self.cartan, _unit(self.rs.rank, i), self.rs.rank)

    def stability_violations(self) -> list[str]:
        """Reasons V fails to be B-stable (empty list when it is a B-module)."""
        rs = self.rs
        out = []
        for b in sorted(self.roots):
            for i in range(rs.rank):
                d = list(b)
                d[i] -= 1
                d = tuple(d)
                if d in rs.root_set and d not in self.roots:
                    out.append(f"root {b} lowers by alpha_{i + 1} to {d}, which is missing")
                elif not any(d) and not self.has_coroot(i):
                    out.append(f"root {b} = alpha_{i + 1} but h_{i + 1} is not in the Cartan part")
        for i, v in enumerate(_cartan_functionals(rs, self.cartan)):
            if v and tuple(-x for x in _unit(rs.rank, i)) not in self.roots:
                out.append(f"alpha_{i + 1} is nonzero on the Cartan part but -alpha_{i + 1} is missing")
        return out

    def is_b_stable(self) -> bool:
        return not self.stability_violations()

    def require_b_stable(self):
        bad = self.stability_violations()
        if bad:
            raise StructuralError("not a B-submodule of g: " + "; ".join(bad))


def _cartan_functionals(rs: RootSystem, rows) -> list[bool]:
    """For each simple alpha_i: whether alpha_i is nonzero somewhere on span(rows)."""
    return [any(v != 0 for v in _gamma_values(rs, rows, i)) for i in range(rs.rank)]


def zero_subspace(rs: RootSystem) -> GSubspace:
    return GSubspace(rs, frozenset())


def whole(rs: RootSystem) -> GSubspace:
    """g itself."""
    return GSubspace(rs, frozenset(rs.roots), tuple(_unit(rs.rank, i) for i in range(rs.rank)))


def borel(rs: RootSystem) -> GSubspace:
    """b = h + sum of the negative root spaces."""
    return GSubspace(rs, frozenset(rs.negative_roots), tuple(_unit(rs.rank, i) for i in range(rs.rank)))


def generated_by(rs: RootSystem, roots: Iterable[Sequence], cartan: Iterable[Row] = ()) -> GSubspace:
    """Smallest B-submodule of g containing the given root spaces and Cartan vectors."""
    n = rs.rank
    todo = [rs.check_root(b) for b in roots]
    have: set = set()
    rows = _rref(tuple(tuple(r) for r in cartan), n)
    while True:
        while todo:
            b = todo.pop()
            if b in have:
                continue
            have.add(b)
            for i in range(n):
                d = list(b)
                d[i] -= 1
                d = tuple(d)
                if d in rs.root_set:
                    todo.append(d)
                elif not any(d):
                    rows = _rref(rows + (_unit(n, i),), n)
        new = [tuple(-x for x in _unit(n, i)) for i, v in enumerate(_cartan_functionals(rs, rows)) if v]
        new = [b for b in new if b not in have]
        if not new:
            return GSubspace(rs, frozenset(have), rows)
        todo.extend(new)


def weight_filtration_pair(rs: RootSystem, beta: Sequence) -> tuple[GSubspace, GSubspace]:
    """(V1, V2) with V1 = sum of g_mu over mu <= beta and V2 over mu < beta; V1/V2 = C_beta.

    beta must be a positive root; both pieces contain b.
    """
    beta = rs.check_root(beta)
    if not is_positive(beta):
        raise InvalidInput(f"{beta} is not a positive root")
    below = frozenset(r for r in rs.roots if all(x >= 0 for x in sub(beta, r)))
    full = tuple(_unit(rs.rank, i) for i in range(rs.rank))
    v1 = GSubspace(rs, below, full)
    v2 = GSubspace(rs, below - {beta}, full)
    return v1, v2


# ---------------------------------------------------------------------------
# B_gamma decomposition


class Kind(str, Enum):
    CARTAN_LINE = "CartanLine"
    ROOT_LINE = "RootLine"
    ROOT_STRING = "RootString"
    ZERO_MINUS_GAMMA = "ZeroMinusGamma"
    SL2_GAMMA = "Sl2Gamma"
    MINUS_GAMMA_ALONE = "MinusGammaAlone"


@dataclass(frozen=True)
class BGammaSummand:
    """One indecomposable B_gamma-summand; ``a`` is the twist by a*omega_gamma."""

    kind: Kind
    a: int
    roots: tuple[Root, ...] = ()  # top first
    h: Row | None = None

    @property
    def dim(self) -> int:
        return len(self.roots) + (self.h is not None)

    @property
    def top(self) -> Root | None:
        return self.roots[0] if self.roots else None

    @property
    def bottom(self) -> Root | None:
        return self.roots[-1] if self.roots else None


def _gamma_string(rs: RootSystem, beta: Root, g: int) -> list[Root]:
    """The full gamma-string through beta, top first (beta not proportional to gamma)."""
    step = _unit(rs.rank, g)
    top = beta
    while add(top, step) in rs.root_set:
        top = add(top, step)
    out = [top]
    while sub(out[-1], step) in rs.root_set:
        out.append(sub(out[-1], step))
    return out


def decompose_bgamma(rs: RootSystem, V: GSubspace, gamma) -> list[BGammaSummand]:
    """Split V into indecomposable B_gamma-summands (gamma: simple root or 0-based index)."""
    g = _gamma_index(rs, gamma)
    n = rs.rank
    gam = _unit(n, g)
    mgam = tuple(-x for x in gam)
    out: list[BGammaSummand] = []

    seen: set = set()
    for beta in sorted(V.roots, key=lambda r: (-sum(r), r)):
        if beta in seen or beta in (gam, mgam):
            continue
        string = _gamma_string(rs, beta, g)
        seg = [r for r in string if r in V.roots]
        seen.update(seg)
        # V is closed under lowering by -gamma, so seg is a bottom piece of the string
        if seg != string[len(string) - len(seg):]:
            missing = next(r for r in string[string.index(seg[0]):] if r not in V.roots)
            raise StructuralError(
                f"not closed under -alpha_{g + 1}: {seg[0]} is present but {missing} is not")
        top_p = rs.simple_pairing(seg[0], g)
        bot_p = rs.simple_pairing(seg[-1], g)
        a = _norm(Fraction(top_p + bot_p, 2))
        kind = Kind.ROOT_LINE if len(seg) == 1 else Kind.ROOT_STRING
        out.append(BGammaSummand(kind, a, tuple(seg)))

    rows = V.cartan
    if gam in V.roots:
        if mgam not in V.roots:
            raise StructuralError(f"alpha_{g + 1} is present but -alpha_{g + 1} is not")
        if not V.has_coroot(g):
            raise StructuralError(f"alpha_{g + 1} is present but h_{g + 1} is not")
        out.append(BGammaSummand(Kind.SL2_GAMMA, 0, (gam, mgam), _unit(n, g)))
        rest = _kernel_part(rs, rows, g)
    else:
        vals = _gamma_values(rs, rows, g)
        k = next((k for k, v in enumerate(vals) if v != 0), None)
        if k is not None:
            if mgam not in V.roots:
                raise StructuralError(
                    f"alpha_{g + 1} is nonzero on Cartan vector {rows[k]} but -alpha_{g + 1} is missing")
            # canonical choice: first RREF row on which gamma is nonzero, scaled to gamma(h) = 1
            h = tuple(_norm(Fraction(x) / vals[k]) for x in rows[k])
            out.append(BGammaSummand(Kind.ZERO_MINUS_GAMMA, -1, (mgam,), h))
        elif mgam in V.roots:
            out.append(BGammaSummand(Kind.MINUS_GAMMA_ALONE, -2, (mgam,)))
        rest = _kernel_part(rs, rows, g)
    out.extend(BGammaSummand(Kind.CARTAN_LINE, 0, (), r) for r in rest)

    total = sum(s.dim for s in out)
    if total != V.dim:
        raise InvariantViolation(f"summand dimensions add to {total}, expected {V.dim}")
    return out


def _gamma_index(rs: RootSystem, gamma) -> int:
    if isinstance(gamma, int):
        if not 0 <= gamma < rs.rank:
            raise InvalidInput(f"simple root index {gamma} out of range for {rs.name}")
        return gamma
    gamma = tuple(gamma)
    if gamma not in rs.simple_roots:
        raise InvalidInput(f"{gamma} is not a simple root of {rs.name}")
    return gamma.index(1)


def simply_laced_kind_ok(rs: RootSystem, s: BGammaSummand, g: int) -> bool:
    """Whether a summand is one of the shapes allowed in simply-laced runs from V >= b."""
    if s.kind in (Kind.CARTAN_LINE, Kind.ZERO_MINUS_GAMMA, Kind.SL2_GAMMA):
        return True
    if s.kind == Kind.ROOT_LINE:
        return rs.simple_pairing(s.top, g) in (-1, 0)
    if s.kind == Kind.ROOT_STRING:
        return rs.simple_pairing(s.top, g) == 1 and len(s.roots) == 2
    return False


# ---------------------------------------------------------------------------
# one P^1-step


def _survivors(rs: RootSystem, V: GSubspace, summands: list[BGammaSummand], g: int) -> GSubspace:
    roots = frozenset(r for s in summands if s.a == 0 for r in s.roots)
    rows = tuple(s.h for s in summands if s.a == 0 and s.h is not None)
    return GSubspace(rs, roots, rows)


def h0_step(rs: RootSystem, V: GSubspace, gamma) -> GSubspace:
    """H^0(s_gamma, V), the largest P_gamma-submodule of V."""
    g = _gamma_index(rs, gamma)
    return _survivors(rs, V, decompose_bgamma(rs, V, g), g)


def _sl2_h1(rs: RootSystem, s: BGammaSummand, g: int) -> SignedCharacter:
    # summand = V(k-1) (x) C_lam, so H^1 = V(k-1) (x) H^0(s_gamma, s_gamma . lam)
    gam = _unit(rs.rank, g)
    k = len(s.roots)
    half = tuple(_norm(Fraction(k - 1, 2) * x) for x in gam)
    lam = sub(s.top, half)
    dot = sub(rs.simple_reflect(lam, g), gam)
    n = rs.simple_pairing(dot, g)
    h0 = [tuple(_norm(d - j * x) for d, x in zip(dot, gam)) for j in range(n + 1)]
    vk = [tuple(_norm(t - j * x) for t, x in zip(half, gam)) for j in range(k)]
    return SignedCharacter((add(u, v), 1) for u in vk for v in h0)


def h1_step_from_summands(rs: RootSystem, summands: list[BGammaSummand], g: int) -> SignedCharacter:
    acc = ZERO
    for s in summands:
        if s.a > 0:
            raise InvariantViolation(f"summand with positive twist a = {s.a}")
        if s.a <= -2:
            acc = acc + _sl2_h1(rs, s, g)
    return acc


def h1_step_char(rs: RootSystem, V: GSubspace, gamma) -> SignedCharacter:
    """ch H^1(s_gamma, V): contributions of the summands with a <= -2."""
    g = _gamma_index(rs, gamma)
    return h1_step_from_summands(rs, decompose_bgamma(rs, V, g), g)


# ---------------------------------------------------------------------------
# folding along a reduced word


@dataclass(frozen=True)
class StepRecord:
    letter: int  # 1-based simple root label
    source: GSubspace
    summands: tuple[BGammaSummand, ...]
    result: GSubspace
    h1: SignedCharacter


@dataclass(frozen=True)
class Fold:
    w: WeylElement
    word: tuple[int, ...]
    module: GSubspace
    steps: tuple[StepRecord, ...]  # in application order: rightmost letter first

    @property
    def result(self) -> GSubspace:
        return self.steps[-1].result if self.steps else self.module

    @property
    def certificates(self) -> list[SignedCharacter]:
        return [s.h1 for s in self.steps]


def _word0(w: WeylElement, word: Sequence[int] | None) -> tuple[int, ...]:
    if word is None:
        return w.word0
    from .weyl import from_word

    word = tuple(word)
    if len(word) != w.length or from_word(w.rs, word) != w:
        raise InvalidInput(f"{word} is not a reduced word for {w.label}")
    return tuple(i - 1 for i in word)


@lru_cache(maxsize=50_000)
def _fold_cached(rs: RootSystem, word0: tuple[int, ...], V: GSubspace) -> tuple[StepRecord, ...]:
    if not word0:
        return ()
    prev = _fold_cached(rs, word0[1:], V)
    cur = prev[-1].result if prev else V
    g = word0[0]
    summands = decompose_bgamma(rs, cur, g)
    rec = StepRecord(g + 1, cur, tuple(summands), _survivors(rs, cur, summands, g),
                     h1_step_from_summands(rs, summands, g))
    return prev + (rec,)


def fold(rs: RootSystem, w: WeylElement, V: GSubspace, word: Sequence[int] | None = None) -> Fold:
    """Run the H^0 recursion along a reduced word, keeping every intermediate step."""
    V.require_b_stable()
    word0 = _word0(w, word)
    return Fold(w, tuple(i + 1 for i in word0), V, _fold_cached(rs, word0, V))


def h0_module(rs: RootSystem, w: WeylElement, V: GSubspace, word: Sequence[int] | None = None) -> GSubspace:
    """H^0(w, V) as a subspace of V."""
    return fold(rs, w, V, word).result


def h1_module_char(rs: RootSystem, w: WeylElement, V: GSubspace,
                   word: Sequence[int] | None = None) -> tuple[SignedCharacter, list[SignedCharacter]]:
    """(ch H^1(w, V), per-step H^1(s_gamma, .) characters along the fold)."""
    f = fold(rs, w, V, word)
    h1 = f.result.character - euler_char_module(rs, w, V.character, word)
    return h1, f.certificates


def h1_module_char_stepwise(rs: RootSystem, w: WeylElement, V: GSubspace,
                            word: Sequence[int] | None = None) -> SignedCharacter:
    """ch H^1(w, V) assembled from the per-step H^1 pieces, pushed through the prefixes.

    Independent of Euler-characteristic subtraction; used to cross-check it.
    """
    f = fold(rs, w, V, word)
    word1 = f.word
    acc = ZERO
    r = len(word1)
    for n, step in enumerate(f.steps):
        if step.h1:
            prefix = word1[: r - n - 1]
            acc = acc + demazure_char(rs, w, step.h1, word=prefix)
    return acc


# ---------------------------------------------------------------------------
# tangent bundle and line bundles


def h0_tangent_char(rs: RootSystem, w: WeylElement) -> SignedCharacter:
    """ch H^0(w, g/b) = ch g - ch H^0(w, b) + ch H^1(w, b)."""
    b = borel(rs)
    h1, _ = h1_module_char(rs, w, b)
    return adjoint_character(rs) - h0_module(rs, w, b).character + h1


def h1_tangent_char(rs: RootSystem, w: WeylElement) -> SignedCharacter:
    """ch H^1(w, g/b) = ch H^0(w, g/b) - chi(w, g/b); identically zero."""
    return h0_tangent_char(rs, w) - euler_char_module(rs, w, rs.positive_roots)


@dataclass(frozen=True)
class LineCohomology:
    """Per-weight bounds on H^0 and H^1 of the line bundle of a positive root."""

    beta: Root
    euler: SignedCharacter
    h1_lower: SignedCharacter
    h1_upper: SignedCharacter

    @property
    def exact(self) -> bool:
        return self.h1_lower == self.h1_upper

    @property
    def h0_lower(self) -> SignedCharacter:
        return self.euler + self.h1_lower

    @property
    def h0_upper(self) -> SignedCharacter:
        return self.euler + self.h1_upper


def line_cohomology(rs: RootSystem, w: WeylElement, beta: Sequence) -> LineCohomology:
    """Bounds on H^*(w, C_beta) from 0 -> V2 -> V1 -> C_beta -> 0.

    The long exact sequence gives, weight by weight,
      h1 >= max(0, c - chi, H^1(V1) - H^1(V2)),  h1 <= min(H^1(V1), c + H^1(V2) - chi)
    with c = ch H^0(V1) - ch H^0(V2).  Both are exact when they meet.
    """
    v1, v2 = weight_filtration_pair(rs, beta)
    beta = tuple(beta)
    chi = demazure_char(rs, w, beta)
    a1, _ = h1_module_char(rs, w, v1)
    a2, _ = h1_module_char(rs, w, v2)
    c = h0_module(rs, w, v1).character - h0_module(rs, w, v2).character
    lo, hi = {}, {}
    for mu in set(chi) | set(a1) | set(a2) | set(c):
        lo[mu] = max(0, c[mu] - chi[mu], a1[mu] - a2[mu])
        hi[mu] = min(a1[mu], c[mu] + a2[mu] - chi[mu])
        if lo[mu] > hi[mu]:
            raise InvariantViolation(f"inconsistent bounds at weight {mu}: {lo[mu]} > {hi[mu]}")
    return LineCohomology(beta, chi, SignedCharacter(lo), SignedCharacter(hi))
