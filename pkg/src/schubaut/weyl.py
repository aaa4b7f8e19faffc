"""
Weyl group elements, Bruhat order, inversion and descent sets.

An element is stored by the images of the simple roots, which is a faithful
fingerprint, so equality never depends on the word used to build it.  The
printed word is the lexicographically least reduced word (1-based labels).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInput, ResourceLimit
from .rootsys import Root, RootSystem, Weight, _norm, is_negative

DEFAULT_CAP = 10**6

Images = tuple[Root, ...]


def _apply(rs: RootSystem, images: Images, mu: Sequence) -> Weight:
    out = [0] * rs.rank
    for i, m in enumerate(mu):
        if m:
            for j, c in enumerate(images[i]):
                if c:
                    out[j] += m * c
    return tuple(_norm(x) for x in out)


def _times_simple(rs: RootSystem, images: Images, i: int) -> Images:
    """Images of w*s_i, given the images of w."""
    c = rs.cartan
    wi = images[i]
    return tuple(
        img if c[j][i] == 0 else tuple(a - c[j][i] * b for a, b in zip(img, wi))
        for j, img in enumerate(images)
    )


def _simple_times(rs: RootSystem, images: Images, i: int) -> Images:
    """Images of s_i*w, given the images of w."""
    return tuple(rs.simple_reflect(img, i) for img in images)


def _identity_images(rs: RootSystem) -> Images:
    return rs.simple_roots


def _word_from_images(rs: RootSystem, images: Images) -> list[int]:
    # peel right descents; returns a reduced word (0-based)
    word: list[int] = []
    cur = images
    while True:
        for i in range(rs.rank):
            if is_negative(cur[i]):
                word.append(i)
                cur = _times_simple(rs, cur, i)
                break
        else:
            break
    word.reverse()
    return word


def _images_from_word(rs: RootSystem, word: Iterable[int]) -> Images:
    cur = _identity_images(rs)
    for i in word:
        cur = _times_simple(rs, cur, i)
    return cur


def _lex_word(rs: RootSystem, inv_images: Images) -> tuple[int, ...]:
    # lex-least reduced word: the first letter is the least left descent
    word = []
    inv = inv_images
    while True:
        for i in range(rs.rank):
            if is_negative(inv[i]):
                word.append(i)
                inv = _times_simple(rs, inv, i)
                break
        else:
            return tuple(word)


@dataclass(frozen=True, eq=False)
class WeylElement:
    rs: RootSystem = field(repr=False)
    images: Images

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.rs is other.rs
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.rs.name, self.images))

    def __repr__(self):
        return f"WeylElement({self.rs.name}, {self.label})"

    # -- structure -------------------------------------------------------

    @cached_property
    def inverse_images(self) -> Images:
        return _images_from_word(self.rs, reversed(_word_from_images(self.rs, self.images)))

    @cached_property
    def word0(self) -> tuple[int, ...]:
        """Canonical (lex-least) reduced word, 0-based letters."""
        return _lex_word(self.rs, self.inverse_images)

    @property
    def word(self) -> tuple[int, ...]:
        """Canonical reduced word with 1-based Bourbaki labels."""
        return tuple(i + 1 for i in self.word0)

    @property
    def label(self) -> str:
        return ",".join(map(str, self.word)) if self.word else "e"

    @property
    def length(self) -> int:
        return len(self.word0)

    def __len__(self):
        return self.length

    @property
    def is_identity(self) -> bool:
        return self.images == self.rs.simple_roots

    def inverse(self) -> "WeylElement":
        return WeylElement(self.rs, self.inverse_images)

    def act(self, mu: Sequence) -> Weight:
        """w(mu) for a weight in simple-root coordinates."""
        return _apply(self.rs, self.images, mu)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        _same(self, other)
        return WeylElement(self.rs, tuple(self.act(img) for img in other.images))

    def left_mul(self, i: int) -> "WeylElement":
        """s_i * self (0-based i)."""
        return WeylElement(self.rs, _simple_times(self.rs, self.images, i))

    def right_mul(self, i: int) -> "WeylElement":
        """self * s_i (0-based i)."""
        return WeylElement(self.rs, _times_simple(self.rs, self.images, i))

    @cached_property
    def permutation(self) -> tuple[int, ...]:
        """Action as a permutation of ``rs.roots`` (index -> index)."""
        index = {r: k for k, r in enumerate(self.rs.roots)}
        return tuple(index[self.act(r)] for r in self.rs.roots)


def _same(v: WeylElement, w: WeylElement):
    if v.rs is not w.rs:
        raise InvalidInput(f"elements of different Weyl groups: {v.rs.name} vs {w.rs.name}")


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, _identity_images(rs))


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """s_i for a 1-based label i."""
    return from_word(rs, [i])


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """Group element of a word of 1-based simple-root labels (need not be reduced)."""
    letters = []
    for pos, i in enumerate(word):
        if not isinstance(i, int) or not 1 <= i <= rs.rank:
            raise InvalidInput(f"letter {i!r} at position {pos} is outside 1..{rs.rank}")
        letters.append(i - 1)
    return WeylElement(rs, _images_from_word(rs, letters))


@lru_cache(maxsize=None)
def longest(rs: RootSystem) -> WeylElement:
    # w0 sends every positive root negative; peel left descents of nothing
    images = _identity_images(rs)
    while True:
        for i in range(rs.rank):
            if not is_negative(images[i]):
                images = _times_simple(rs, images, i)
                break
        else:
            return WeylElement(rs, images)


def inversions(w: WeylElement) -> frozenset[Root]:
    """R+(w) = {beta > 0 : w(beta) < 0}."""
    return frozenset(b for b in w.rs.positive_roots if is_negative(w.act(b)))


def left_descents(w: WeylElement) -> frozenset[int]:
    """1-based labels i with l(s_i w) < l(w)."""
    return frozenset(i + 1 for i, r in enumerate(w.inverse_images) if is_negative(r))


def right_descents(w: WeylElement) -> frozenset[int]:
    """1-based labels i with l(w s_i) < l(w)."""
    return frozenset(i + 1 for i, r in enumerate(w.images) if is_negative(r))


def support(w: WeylElement) -> frozenset[int]:
    """J_w: labels of simple reflections below w (letters of any reduced word)."""
    return frozenset(w.word)


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    """v <= w, by the lifting property along the canonical word of w."""
    _same(v, w)
    if v.length > w.length:
        return False
    rs = v.rs
    inv = v.inverse_images
    # w = s_{i1} ... s_{ir}: each i_k is a left descent of what remains of w;
    # strip it from v too whenever it is a left descent of v.
    for i in w.word0:
        if is_negative(inv[i]):
            inv = _times_simple(rs, inv, i)
    return inv == rs.simple_roots


def group_order(rs: RootSystem) -> int:
    n = rs.rank
    t = rs.type_letter
    if t == "A":
        return math.factorial(n + 1)
    if t in "BC":
        return 2**n * math.factorial(n)
    if t == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(t, n)]


def _sort_key(w: WeylElement):
    return (w.length, w.word)


def elements(rs: RootSystem, cap: int = DEFAULT_CAP) -> list[WeylElement]:
    """All of W, ordered by (length, canonical word)."""
    order = group_order(rs)
    if order > cap:
        raise ResourceLimit(f"|W({rs.name})| = {order} exceeds the enumeration cap {cap}")
    seen = {_identity_images(rs)}
    frontier = [_identity_images(rs)]
    while frontier:
        nxt = []
        for img in frontier:
            for i in range(rs.rank):
                if not is_negative(img[i]):
                    u = _times_simple(rs, img, i)
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
        frontier = nxt
    return sorted((WeylElement(rs, img) for img in seen), key=_sort_key)


def interval_below(w: WeylElement, cap: int = DEFAULT_CAP) -> list[WeylElement]:
    """[e, w] in Bruhat order, ordered by (length, canonical word)."""
    rs = w.rs
    # [e, s w'] = [e, w'] u s[e, w'] when s w' > w'; build from the right end
    below = {_identity_images(rs)}
    for i in reversed(w.word0):
        below |= {_simple_times(rs, img, i) for img in below}
        if len(below) > cap:
            raise ResourceLimit(f"Bruhat interval below {w.label} exceeds the cap {cap}")
    return sorted((WeylElement(rs, img) for img in below), key=_sort_key)


def reduced_words(w: WeylElement) -> list[tuple[int, ...]]:
    """Every reduced word of w (1-based labels), in lexicographic order."""
    return sorted(_reduced_words(w))


@lru_cache(maxsize=4096)
def _reduced_words(w: WeylElement) -> tuple[tuple[int, ...], ...]:
    if w.is_identity:
        return ((),)
    out = []
    for i in sorted(left_descents(w)):
        for tail in _reduced_words(w.left_mul(i - 1)):
            out.append((i,) + tail)
    return tuple(out)


def reflection_word(rs: RootSystem, beta: Root) -> tuple[int, ...]:
    """A reduced palindromic word (1-based) for the reflection s_beta, beta > 0."""
    beta = rs.check_root(beta)
    if is_negative(beta):
        raise InvalidInput(f"{beta} is not a positive root")
    path = []
    cur = beta
    while sum(cur) != 1:
        for i in range(rs.rank):
            if rs.simple_pairing(cur, i) > 0:
                path.append(i + 1)
                cur = rs.simple_reflect(cur, i)
                break
    k = cur.index(1) + 1
    return tuple(path) + (k,) + tuple(reversed(path))


@lru_cache(maxsize=None)
def reflections(rs: RootSystem) -> dict[Root, WeylElement]:
    """s_beta for every positive root, built once per root system."""
    return {b: from_word(rs, reflection_word(rs, b)) for b in rs.positive_roots}


def iter_subword_products(word: Sequence[int], rs: RootSystem) -> Iterator[WeylElement]:
    """Products of all 2^len subwords of a word; used as a brute-force Bruhat oracle."""
    n = len(word)
    for mask in range(1 << n):
        yield from_word(rs, [word[k] for k in range(n) if mask >> k & 1])
