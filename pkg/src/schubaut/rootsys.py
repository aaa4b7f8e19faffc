"""
Root systems of the simple types A-G in Bourbaki numbering.

Everything lives in the basis of simple roots.  A root is a tuple of ints;
a weight is a tuple of ints or ``Fraction`` (rho and fundamental weights
need not be integral in this basis).  The Cartan matrix is stored as

    cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)

so B2 has cartan[0][1] = <alpha_1, alpha_2> = -2 (alpha_2 short).

Roots are generated by closing the simple roots under the simple
reflections; the classical root counts are only used as checksums.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence, Union

from .errors import InvalidInput, InvariantViolation

Root = tuple[int, ...]
Weight = tuple[Union[int, Fraction], ...]

ALLOWED_RANKS = {
    "A": "rank >= 1",
    "B": "rank >= 2",
    "C": "rank >= 2",
    "D": "rank >= 4",
    "E": "rank 6, 7 or 8",
    "F": "rank 4",
    "G": "rank 2",
}


def _valid(letter: str, rank: int) -> bool:
    if letter == "A":
        return rank >= 1
    if letter in "BC":
        return rank >= 2
    if letter == "D":
        return rank >= 4
    if letter == "E":
        return rank in (6, 7, 8)
    if letter == "F":
        return rank == 4
    if letter == "G":
        return rank == 2
    return False


def _edges(letter: str, n: int) -> dict[tuple[int, int], int]:
    """Off-diagonal Cartan entries (0-based), Bourbaki labels."""
    e: dict[tuple[int, int], int] = {}

    def link(i, j, a_ij=-1, a_ji=-1):
        e[(i, j)] = a_ij
        e[(j, i)] = a_ji

    if letter in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if letter == "B":
            link(n - 2, n - 1, -2, -1)  # alpha_n short
        elif letter == "C":
            link(n - 2, n - 1, -1, -2)  # alpha_n long
    elif letter == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -2, -1)  # alpha_3, alpha_4 short
        link(2, 3)
    elif letter == "G":
        link(0, 1, -1, -3)  # alpha_1 short
    return e


def cartan_matrix(letter: str, rank: int) -> tuple[tuple[int, ...], ...]:
    edges = _edges(letter, rank)
    return tuple(
        tuple(2 if i == j else edges.get((i, j), 0) for j in range(rank))
        for i in range(rank)
    )


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _symmetrizer(cartan) -> tuple[Fraction, ...]:
    # (alpha_i, alpha_j) = cartan[i][j] * d_j / 2 must be symmetric
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                stack.append(j)
    longest = max(d)
    # long roots get squared length 2
    return tuple(2 * x / longest for x in d)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable root data for one simple type; build with :func:`build`."""

    type_letter: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    simple_lengths: tuple[Fraction, ...] = field(repr=False)
    roots: tuple[Root, ...] = field(repr=False)

    def __repr__(self):
        return f"RootSystem({self.type_letter}{self.rank})"

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"

    # -- tables ----------------------------------------------------------

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if is_positive(r))

    @cached_property
    def negative_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if not is_positive(r))

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.roots)

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        d = self.simple_lengths
        return tuple(
            tuple(Fraction(self.cartan[i][j]) * d[j] / 2 for j in range(self.rank))
            for i in range(self.rank)
        )

    @cached_property
    def simply_laced(self) -> bool:
        return len(set(self.simple_lengths)) == 1

    @cached_property
    def long_length(self) -> Fraction:
        return max(self.simple_lengths)

    def is_long(self, root: Root) -> bool:
        return self.inner(root, root) == self.long_length

    def is_short(self, root: Root) -> bool:
        return not self.is_long(root)

    def length_class(self, root: Root) -> str:
        self.check_root(root)
        return "long" if self.is_long(root) else "short"

    @cached_property
    def highest_long_root(self) -> Root:
        """alpha_0, the highest root."""
        return max((r for r in self.positive_roots if self.is_long(r)), key=sum)

    @cached_property
    def highest_short_root(self) -> Root | None:
        """beta_0; None in simply-laced types."""
        if self.simply_laced:
            return None
        return max((r for r in self.positive_roots if self.is_short(r)), key=sum)

    @cached_property
    def rho(self) -> Weight:
        s = [0] * self.rank
        for r in self.positive_roots:
            for i, c in enumerate(r):
                s[i] += c
        return tuple(_norm(Fraction(c, 2)) for c in s)

    @cached_property
    def zero(self) -> Root:
        return (0,) * self.rank

    @cached_property
    def dim_g(self) -> int:
        return len(self.roots) + self.rank

    def fundamental_weight(self, i: int) -> Weight:
        """omega_{i+1} in simple-root coordinates (0-based index)."""
        from sympy import Matrix

        # <omega_i, alpha_j^vee> = delta_ij, i.e. x^T cartan = e_i
        a = Matrix(self.cartan).T
        sol = a.solve(Matrix([int(k == i) for k in range(self.rank)]))
        return tuple(_norm(Fraction(int(v.p), int(v.q))) for v in sol)

    # -- arithmetic ------------------------------------------------------

    def check_root(self, alpha) -> Root:
        alpha = tuple(alpha)
        if alpha not in self.root_set:
            raise InvalidInput(f"{alpha} is not a root of {self.name}")
        return alpha

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.gram
        return sum(
            (x[i] * g[i][j] * y[j] for i in range(self.rank) for j in range(self.rank)
             if x[i] and y[j]),
            Fraction(0),
        )

    def simple_pairing(self, mu: Sequence, i: int):
        """<mu, alpha_i^vee> for a simple root (fast path, no validation)."""
        c = self.cartan
        return _norm(sum((mu[j] * c[j][i] for j in range(self.rank)), 0))

    def pairing(self, mu: Sequence, alpha: Sequence):
        """<mu, alpha^vee> = 2 (mu, alpha) / (alpha, alpha); alpha must be a root."""
        alpha = self.check_root(alpha)
        if sum(alpha) == 1 and max(alpha) == 1:
            return self.simple_pairing(mu, alpha.index(1))
        return _norm(2 * self.inner(mu, alpha) / self.inner(alpha, alpha))

    def reflect(self, mu: Sequence, alpha: Sequence) -> Weight:
        """s_alpha(mu) = mu - <mu, alpha^vee> alpha."""
        k = self.pairing(mu, alpha)
        return tuple(_norm(m - k * a) for m, a in zip(mu, alpha))

    def simple_reflect(self, mu: Sequence, i: int) -> Weight:
        k = self.simple_pairing(mu, i)
        if not k:
            return tuple(mu)
        out = list(mu)
        out[i] = _norm(out[i] - k)
        return tuple(out)

    def is_dominant(self, mu: Sequence) -> bool:
        return all(self.simple_pairing(mu, i) >= 0 for i in range(self.rank))

    def is_root_lattice(self, mu: Sequence) -> bool:
        return all(Fraction(m).denominator == 1 for m in mu)

    def dominant_conjugate(self, mu: Sequence) -> Weight:
        mu = tuple(mu)
        while True:
            for i in range(self.rank):
                if self.simple_pairing(mu, i) < 0:
                    mu = self.simple_reflect(mu, i)
                    break
            else:
                return mu

    def height(self, mu: Sequence):
        return _norm(sum(mu, 0))

    def levi_positive_roots(self, subset: Iterable[int]) -> tuple[Root, ...]:
        """Positive roots supported on the given simple-root indices."""
        subset = set(subset)
        return tuple(
            r for r in self.positive_roots
            if all(c == 0 or i in subset for i, c in enumerate(r))
        )


def is_positive(r: Sequence) -> bool:
    return any(c > 0 for c in r)


def is_negative(r: Sequence) -> bool:
    return any(c < 0 for c in r)


def add(x: Sequence, y: Sequence) -> Weight:
    return tuple(_norm(a + b) for a, b in zip(x, y))


def sub(x: Sequence, y: Sequence) -> Weight:
    return tuple(_norm(a - b) for a, b in zip(x, y))


def scale(k, x: Sequence) -> Weight:
    return tuple(_norm(k * a) for a in x)


def neg(x: Sequence) -> Weight:
    return tuple(-a for a in x)


_CHECKSUM = {"B": lambda n: 2 * n * n, "C": lambda n: 2 * n * n,
             "A": lambda n: n * (n + 1), "D": lambda n: 2 * n * (n - 1)}
_EXCEPTIONAL = {("G", 2): 12, ("F", 4): 48, ("E", 6): 72, ("E", 7): 126, ("E", 8): 240}


def classical_root_count(letter: str, rank: int) -> int:
    if letter in _CHECKSUM:
        return _CHECKSUM[letter](rank)
    return _EXCEPTIONAL[(letter, rank)]


def _closure(cartan) -> tuple[Root, ...]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                k = sum(r[j] * cartan[j][i] for j in range(n))
                if k:
                    s = list(r)
                    s[i] -= k
                    s = tuple(s)
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
        frontier = nxt
    # positive roots by height, then negatives
    pos = sorted((r for r in seen if is_positive(r)), key=lambda r: (sum(r), tuple(-c for c in r)))
    return tuple(pos) + tuple(neg(r) for r in pos)


@lru_cache(maxsize=None)
def build(type_letter: str, rank: int) -> RootSystem:
    """Root system of type ``type_letter`` and the given rank (Bourbaki)."""
    letter = str(type_letter).upper()
    if not isinstance(rank, int) or not _valid(letter, rank):
        allowed = "; ".join(f"{k}: {v}" for k, v in ALLOWED_RANKS.items())
        raise InvalidInput(f"no simple root system {type_letter}{rank} (allowed: {allowed})")
    cartan = cartan_matrix(letter, rank)
    roots = _closure(cartan)
    expected = classical_root_count(letter, rank)
    if len(roots) != expected:
        raise InvariantViolation(f"{letter}{rank}: closure gave {len(roots)} roots, expected {expected}")
    return RootSystem(letter, rank, cartan, _symmetrizer(cartan), roots)


def dot_action(w, lam: Sequence) -> Weight:
    """w . lam = w(lam + rho) - rho, for any Weyl element exposing ``rs`` and ``act``."""
    rho = w.rs.rho
    return sub(w.act(add(lam, rho)), rho)
