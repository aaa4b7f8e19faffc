"""
Brute-force oracles, written independently of the library code paths.

Each one trades speed for obviousness: explicit matrices, subword
enumeration, polynomial division, greatest fixed points.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

# -- root systems from the Cartan matrix alone --------------------------------


def roots_by_strings(cartan) -> set[tuple[int, ...]]:
    """Positive roots via alpha-strings: beta + alpha_i is a root iff p - q > 0 ... the classical
    algorithm: q = max k with beta - k alpha_i a root, p = q - <beta, alpha_i^vee>."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    pos = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for b in layer:
            for i in range(n):
                pairing = sum(b[j] * cartan[j][i] for j in range(n))
                q = 0
                while True:
                    d = list(b)
                    d[i] -= q + 1
                    if tuple(d) in pos:
                        q += 1
                    else:
                        break
                p = q - pairing
                if p > 0:
                    up = list(b)
                    up[i] += 1
                    up = tuple(up)
                    if up not in pos:
                        pos.add(up)
                        nxt.append(up)
        layer = nxt
    return pos | {tuple(-x for x in r) for r in pos}


# -- Weyl groups as integer matrices ------------------------------------------


def simple_matrix(cartan, i):
    """Matrix of s_i acting on simple-root coordinates (column vectors)."""
    n = len(cartan)
    m = sympy.eye(n)
    for j in range(n):
        m[i, j] -= cartan[j][i]
    return m


def word_matrix(cartan, word):
    n = len(cartan)
    m = sympy.eye(n)
    for i in word:
        m = m * simple_matrix(cartan, i - 1)
    return m


def matrix_key(m):
    return tuple(m)


def group_by_bfs(cartan):
    n = len(cartan)
    gens = [simple_matrix(cartan, i) for i in range(n)]
    start = sympy.eye(n)
    seen = {matrix_key(start): start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = m * g
                k = matrix_key(p)
                if k not in seen:
                    seen[k] = p
                    nxt.append(p)
        frontier = nxt
    return list(seen.values())


def act(m, v):
    return tuple(int(x) for x in m * sympy.Matrix(v))


def subword_set(cartan, word):
    """Keys of all products of subwords: the Bruhat interval below the product."""
    out = set()
    for mask in itertools.product((0, 1), repeat=len(word)):
        out.add(matrix_key(word_matrix(cartan, [c for c, b in zip(word, mask) if b])))
    return out


def length_by_inversions(m, positive_roots):
    return sum(1 for b in positive_roots if any(x < 0 for x in act(m, b)))


# -- Demazure operators by polynomial division ----------------------------------


def _laurent(terms, xs):
    return sum(m * sympy.prod([x ** c for x, c in zip(xs, mu)]) for mu, m in terms)


def demazure_by_division(cartan, i, terms):
    """D_i f = (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}) with Laurent polynomials."""
    n = len(cartan)
    xs = sympy.symbols(f"y0:{n}")

    def refl(mu):
        k = sum(mu[j] * cartan[j][i] for j in range(n))
        out = list(mu)
        out[i] -= k
        return tuple(out)

    f = _laurent(terms, xs)
    sf = _laurent([(tuple(c - int(j == i) for j, c in enumerate(refl(mu))), m) for mu, m in terms], xs)
    q = sympy.cancel((f - sf) / (1 - 1 / xs[i]))
    q = sympy.expand(q)
    out = {}
    for term in sympy.Add.make_args(q):
        if term == 0:
            continue
        coeff, mono = term.as_coeff_Mul()
        powers = mono.as_powers_dict()
        mu = tuple(int(powers.get(x, 0)) for x in xs)
        out[mu] = out.get(mu, 0) + int(coeff)
    return {k: v for k, v in out.items() if v}


# -- the largest P_gamma-submodule as a greatest fixed point ---------------------


def largest_pgamma_submodule(rs, roots, cartan_rows, g):
    """Roots and Cartan span (as a sympy Matrix rowspace) of the largest subspace of V
    stable under T, every g_{-alpha} and g_{gamma}."""
    n = rs.rank
    R = set(roots)
    C = sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in r]
                      for r in cartan_rows]) if cartan_rows else sympy.zeros(0, n)

    def coroot_in(Cm, i):
        if Cm.rows == 0:
            return False
        e = sympy.Matrix([[int(i == j) for j in range(n)]])
        return Cm.rank() == Cm.col_join(e).rank()

    def restrict(Cm, functionals):
        # intersect rowspace of Cm with the kernels of the given simple roots
        if Cm.rows == 0 or not functionals:
            return Cm
        A = sympy.Matrix([[sum(Cm[r, j] * rs.cartan[i][j] for j in range(n)) for i in functionals]
                          for r in range(Cm.rows)])
        ns = A.T.nullspace()
        if not ns:
            return sympy.zeros(0, n)
        rows = [(v.T * Cm) for v in ns]
        M = sympy.Matrix.vstack(*rows)
        red, piv = M.rref()
        return red[: len(piv), :]

    while True:
        kill = [i for i in range(n) if tuple(-int(i == j) for j in range(n)) not in R]
        gam = tuple(int(g == j) for j in range(n))
        if gam not in R:
            kill.append(g)
        C2 = restrict(C, sorted(set(kill)))
        R2 = set()
        for b in R:
            ok = True
            up = tuple(x + (1 if j == g else 0) for j, x in enumerate(b))
            if up in rs.root_set and up not in R:
                ok = False
            if not any(up) and not coroot_in(C2, g):
                ok = False
            for i in range(n):
                d = tuple(x - (1 if j == i else 0) for j, x in enumerate(b))
                if d in rs.root_set and d not in R:
                    ok = False
                if not any(d) and not coroot_in(C2, i):
                    ok = False
            if ok:
                R2.add(b)
        if R2 == R and C2.rows == C.rows:
            return R, C.rows
        R, C = R2, C2


# -- Weyl dimension formula --------------------------------------------------------


def weyl_dimension(rs, lam):
    rho = rs.rho
    num = Fraction(1)
    for a in rs.positive_roots:
        num *= Fraction(rs.inner([l + r for l, r in zip(lam, rho)], a)) / rs.inner(rho, a)
    return int(num)
