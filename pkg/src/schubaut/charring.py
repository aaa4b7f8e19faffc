"""
Signed characters over the root lattice and Demazure operators.

A character is a finite map weight -> nonzero integer.  ``demazure_op``
uses the three-case closed form per term, so no division ever happens:

    <lam, a> >= 0   ->  e^lam + e^(lam - a) + ... + e^(s_a lam)
    <lam, a> == -1  ->  0
    <lam, a> <= -2  ->  -(e^(lam + a) + ... + e^(s_a lam - a))

Applied along a reduced word this is chi(w, lam), the Euler characteristic
of the line bundle on X(w); for dominant lam it is the character of H^0.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInput
from .rootsys import RootSystem, _norm, add, sub
from .weyl import WeylElement


class SignedCharacter:
    """Immutable sparse Z-linear combination of weights."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence, int] | Iterable[tuple[Sequence, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, int] = {}
        for mu, m in items:
            mu = tuple(_norm(x) for x in mu)
            acc[mu] = acc.get(mu, 0) + m
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def of_weights(cls, weights: Iterable[Sequence]) -> "SignedCharacter":
        return cls((mu, 1) for mu in weights)

    @classmethod
    def monomial(cls, mu: Sequence, mult: int = 1) -> "SignedCharacter":
        return cls([(mu, mult)])

    # -- container protocol ---------------------------------------------

    def __getitem__(self, mu) -> int:
        return self._terms.get(tuple(mu), 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def __eq__(self, other):
        if isinstance(other, SignedCharacter):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "SignedCharacter(0)"
        body = " + ".join(f"{m}*e^{mu}" for mu, m in self.sorted_terms())
        return f"SignedCharacter({body})"

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "SignedCharacter") -> "SignedCharacter":
        return SignedCharacter(list(self.items()) + list(other.items()))

    def __sub__(self, other: "SignedCharacter") -> "SignedCharacter":
        return SignedCharacter(list(self.items()) + [(k, -v) for k, v in other.items()])

    def __neg__(self):
        return SignedCharacter((k, -v) for k, v in self.items())

    def __mul__(self, other):
        if isinstance(other, int):
            return SignedCharacter((k, other * v) for k, v in self.items())
        return SignedCharacter(
            (add(a, b), m * n) for a, m in self.items() for b, n in other.items()
        )

    __rmul__ = __mul__

    # -- queries --------------------------------------------------------

    @property
    def dim(self) -> int:
        """Signed dimension (sum of multiplicities)."""
        return sum(self._terms.values())

    def is_effective(self) -> bool:
        """True when every multiplicity is nonnegative (a genuine module character)."""
        return all(v > 0 for v in self._terms.values())

    def contains(self, other: "SignedCharacter") -> bool:
        return (self - other).is_effective()

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        """Terms ordered by decreasing height, then lexicographically decreasing."""
        return sorted(self._terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))

    def as_json(self) -> list[list]:
        return [[[int(x) if Fraction(x).denominator == 1 else str(x) for x in mu], m]
                for mu, m in self.sorted_terms()]


ZERO = SignedCharacter()


def _simple_index(rs: RootSystem, alpha) -> int:
    if isinstance(alpha, int):
        if not 0 <= alpha < rs.rank:
            raise InvalidInput(f"simple root index {alpha} out of range for {rs.name}")
        return alpha
    alpha = tuple(alpha)
    if alpha not in rs.simple_roots:
        raise InvalidInput(f"{alpha} is not a simple root of {rs.name}")
    return alpha.index(1)


def _demazure_term(rs: RootSystem, i: int, lam: tuple) -> list[tuple[tuple, int]]:
    n = rs.simple_pairing(lam, i)
    if n == -1:
        return []
    step = [0] * rs.rank
    step[i] = 1
    if n >= 0:
        out, cur = [], lam
        for _ in range(n + 1):
            out.append((cur, 1))
            cur = sub(cur, step)
        return out
    out, cur = [], lam
    for _ in range(-n - 1):
        cur = add(cur, step)
        out.append((cur, -1))
    return out


def demazure_op(rs: RootSystem, alpha, c: SignedCharacter) -> SignedCharacter:
    """D_alpha applied termwise; ``alpha`` is a simple root vector or a 0-based index."""
    i = _simple_index(rs, alpha)
    terms = []
    for lam, m in c.items():
        if not rs.is_root_lattice(lam):
            raise InvalidInput(f"{lam} is outside the root lattice")
        terms.extend((mu, m * k) for mu, k in _demazure_term(rs, i, lam))
    return SignedCharacter(terms)


@lru_cache(maxsize=200_000)
def _demazure_monomial(rs: RootSystem, word0: tuple[int, ...], lam: tuple) -> SignedCharacter:
    if not word0:
        return SignedCharacter.monomial(lam)
    # D_{i1} ... D_{ir} e^lam: apply the rightmost letter first
    inner = demazure_op(rs, word0[-1], SignedCharacter.monomial(lam))
    acc = ZERO
    for mu, m in inner.items():
        acc = acc + _demazure_monomial(rs, word0[:-1], mu) * m
    return acc


def demazure_char(rs: RootSystem, w: WeylElement, lam, word: Sequence[int] | None = None) -> SignedCharacter:
    """chi(w, lam) along ``word`` (1-based, defaults to the canonical reduced word).

    ``lam`` may be a weight or a SignedCharacter (extended linearly).
    """
    word0 = tuple(i - 1 for i in word) if word is not None else w.word0
    if isinstance(lam, SignedCharacter):
        acc = ZERO
        for mu, m in lam.items():
            acc = acc + _demazure_monomial(rs, word0, mu) * m
        return acc
    return _demazure_monomial(rs, word0, tuple(_norm(x) for x in lam))


def euler_char_module(rs: RootSystem, w: WeylElement, weights: Iterable[Sequence] | SignedCharacter,
                      word: Sequence[int] | None = None) -> SignedCharacter:
    """Euler characteristic of a B-module, additive over a filtration by lines."""
    ch = weights if isinstance(weights, SignedCharacter) else SignedCharacter.of_weights(weights)
    return demazure_char(rs, w, ch, word)


def adjoint_character(rs: RootSystem) -> SignedCharacter:
    return SignedCharacter([(r, 1) for r in rs.roots] + [(rs.zero, rs.rank)])


def weyl_char_oracle(rs: RootSystem, lam: Sequence) -> SignedCharacter:
    """Character of the irreducible module of highest weight lam (Freudenthal).

    Independent of the Demazure code path; used as a test oracle.
    """
    lam = tuple(_norm(x) for x in lam)
    if not rs.is_root_lattice(lam):
        raise InvalidInput(f"{lam} is outside the root lattice")
    if not rs.is_dominant(lam):
        raise InvalidInput(f"{lam} is not dominant")
    rho = rs.rho
    lr = add(lam, rho)
    norm_lr = rs.inner(lr, lr)

    def is_weight(mu):
        d = sub(lam, rs.dominant_conjugate(mu))
        return all(x >= 0 for x in d)

    mult: dict[tuple, int] = {lam: 1}
    # weights lie in lam - Q+, with depth at most ht(lam - w0 lam) = 2 ht(lam) bounded
    max_depth = 2 * int(sum(lam)) + 1
    layer = [lam]
    for _ in range(max_depth):
        nxt = set()
        for mu in layer:
            for i in range(rs.rank):
                nu = list(mu)
                nu[i] -= 1
                nu = tuple(nu)
                if nu not in mult and is_weight(nu):
                    nxt.add(nu)
        if not nxt:
            break
        for mu in sorted(nxt, key=lambda m: -sum(m)):
            total = Fraction(0)
            for a in rs.positive_roots:
                k = 1
                while True:
                    up = tuple(m + k * x for m, x in zip(mu, a))
                    if up not in mult:
                        if not is_weight(up):
                            break
                        k += 1
                        continue
                    total += mult[up] * rs.inner(up, a)
                    k += 1
            mr = add(mu, rho)
            denom = norm_lr - rs.inner(mr, mr)
            m = 2 * total / denom
            if m.denominator != 1:
                raise ArithmeticError(f"non-integral Freudenthal multiplicity at {mu}")
            mult[mu] = int(m)
        layer = list(nxt)
    return SignedCharacter(mult)
