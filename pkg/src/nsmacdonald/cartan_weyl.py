"""Finite root data and Weyl group arithmetic.

Conventions
-----------
* Simple indices are 1-based, so ``s1`` is the first simple reflection.
* Weights are integer tuples in the basis of fundamental weights.
* Roots are integer tuples in the basis of simple roots.
* The Cartan matrix has ``a[i][j] = <alpha_i^vee, alpha_j>``, so the weight
  coordinates of ``alpha_j`` are the j-th column.
* A Weyl group element is identified by the image of ``rho``; this image is a
  regular weight and determines the element.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError

Weight = tuple[int, ...]
Root = tuple[int, ...]

_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class CartanType:
    letter: str
    rank: int

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text or "")
        if not m:
            raise ParseError(f"cannot parse Cartan type {text!r}")
        letter, rank = m.group(1).upper(), int(m.group(2))
        if not _RANK_OK[letter](rank):
            raise ParseError(f"no finite type {letter}{rank}")
        return cls(letter, rank)

    def __str__(self) -> str:
        return f"{self.letter}{self.rank}"


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Bourbaki-numbered Cartan matrix with ``a[i][j] = <alpha_i^vee, alpha_j>``."""
    n, X = ct.rank, ct.letter
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if X in "ABC":
        for i in range(1, n):
            link(i, i + 1)
        if X == "B":
            # alpha_n short
            link(n - 1, n, -1, -2)
        elif X == "C":
            # alpha_n long
            link(n - 1, n, -2, -1)
    elif X == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif X == "E":
        for i, j in [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]:
            if max(i, j) <= n:
                link(i, j)
    elif X == "F":
        link(1, 2)
        link(2, 3, -1, -2)
        link(3, 4)
    elif X == "G":
        # alpha_1 short
        link(1, 2, -3, -1)
    return tuple(tuple(r) for r in a)


@dataclass(frozen=True)
class WeylElt:
    """An element of W, keyed by ``w(rho)``; ``word`` is its canonical reduced word."""

    key: Weight
    word: tuple[int, ...] = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return word_str(self.word)


def word_str(word: Sequence[int]) -> str:
    return " ".join(f"s{i}" for i in word) if word else "e"


def pairing(coroot: Sequence[int], weight: Sequence) -> int | Fraction:
    """``<beta^vee, xi>`` for a coroot in simple-coroot coordinates."""
    if len(coroot) != len(weight):
        raise ValueError("rank mismatch in pairing")
    return sum(c * x for c, x in zip(coroot, weight))


class RootDatum:
    """Root system of a finite Cartan type together with its Weyl group."""

    def __init__(self, ctype: CartanType | str):
        if isinstance(ctype, str):
            ctype = CartanType.parse(ctype)
        self.ctype = ctype
        self.rank = n = ctype.rank
        self.cartan = cartan_matrix(ctype)
        self.rho: Weight = (1,) * n
        self._sqlen = self._root_lengths()
        self.positive_roots: tuple[Root, ...] = self._generate_roots()
        self._coroot = {b: self._compute_coroot(b) for b in self.positive_roots}
        self._by_key: dict[Weight, WeylElt] = {}
        self._bruhat: dict[tuple[Weight, Weight], bool] = {}
        self._reps: dict[frozenset, tuple[WeylElt, ...]] = {}
        self._w0 = self.from_key(tuple(-c for c in self.rho))

    def __repr__(self) -> str:
        return f"RootDatum({self.ctype})"

    # ---------------------------------------------------------------- roots

    def _root_lengths(self) -> list[Fraction]:
        # solve a_ij * L_i = a_ji * L_j along the (connected) Dynkin diagram
        n, a = self.rank, self.cartan
        L: list[Fraction | None] = [None] * n
        L[0] = Fraction(1)
        todo = [0]
        while todo:
            i = todo.pop()
            for j in range(n):
                if a[i][j] and L[j] is None:
                    L[j] = L[i] * a[i][j] / a[j][i]
                    todo.append(j)
        m = min(L)
        return [x / m for x in L]

    def inner(self, beta: Root, gamma: Root) -> Fraction:
        """Invariant form on roots, normalised so short simple roots have length 1."""
        n, a, L = self.rank, self.cartan, self._sqlen
        return sum(
            (beta[i] * gamma[j] * a[i][j] * L[i] / 2 for i in range(n) for j in range(n)),
            Fraction(0),
        )

    def _compute_coroot(self, beta: Root) -> tuple[int, ...]:
        bb = self.inner(beta, beta)
        out = []
        for i, c in enumerate(beta):
            v = c * self._sqlen[i] / bb
            if v.denominator != 1:
                raise ArithmeticError("non-integral coroot")
            out.append(int(v))
        return tuple(out)

    def simple_root(self, i: int) -> Root:
        self._check_index(i)
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def _check_index(self, i: int):
        if not 1 <= i <= self.rank:
            raise ParseError(f"simple index {i} out of range for {self.ctype}")

    def root_weight(self, beta: Root) -> Weight:
        """Fundamental-weight coordinates of a root."""
        a = self.cartan
        return tuple(sum(a[i][j] * beta[j] for j in range(self.rank)) for i in range(self.rank))

    def coroot(self, beta: Root) -> tuple[int, ...]:
        if beta in self._coroot:
            return self._coroot[beta]
        neg = tuple(-c for c in beta)
        if neg in self._coroot:
            return tuple(-c for c in self._coroot[neg])
        raise ValueError(f"{beta} is not a root")

    def pair(self, beta: Root, xi: Sequence) -> int | Fraction:
        """``<beta^vee, xi>`` for a root ``beta`` and a weight ``xi``."""
        return pairing(self.coroot(beta), xi)

    def _reflect_root_simple(self, i: int, beta: Root) -> Root:
        c = sum(self.cartan[i - 1][j] * beta[j] for j in range(self.rank))
        return tuple(b - c if k == i - 1 else b for k, b in enumerate(beta))

    def _generate_roots(self) -> tuple[Root, ...]:
        found = {self.simple_root(i) for i in range(1, self.rank + 1)}
        queue = deque(found)
        while queue:
            b = queue.popleft()
            for i in range(1, self.rank + 1):
                c = self._reflect_root_simple(i, b)
                if all(x >= 0 for x in c) and any(c) and c not in found:
                    found.add(c)
                    queue.append(c)
        return tuple(sorted(found, key=root_sort_key))

    def is_root(self, beta: Root) -> bool:
        return beta in self._coroot or tuple(-c for c in beta) in self._coroot

    def positive_roots_in(self, J: Iterable[int]) -> tuple[Root, ...]:
        """Positive roots of the parabolic subsystem spanned by ``J``."""
        J = set(J)
        return tuple(b for b in self.positive_roots if all(c == 0 or i + 1 in J for i, c in enumerate(b)))

    def two_rho_in(self, J: Iterable[int]) -> Weight:
        """``2 rho_J`` as a weight."""
        total = [0] * self.rank
        for b in self.positive_roots_in(J):
            for k, x in enumerate(self.root_weight(b)):
                total[k] += x
        return tuple(total)

    # ------------------------------------------------------------- weights

    def reflect(self, i: int, xi: Sequence) -> tuple:
        """Simple reflection ``r_i`` on a weight (integer or rational coordinates)."""
        c = xi[i - 1]
        if c == 0:
            return tuple(xi)
        col = [self.cartan[k][i - 1] for k in range(self.rank)]
        return tuple(x - c * col[k] for k, x in enumerate(xi))

    def reflect_by(self, beta: Root, xi: Sequence, level=0) -> tuple:
        """Affine reflection in the hyperplane ``<beta^vee, .> = level``."""
        c = self.pair(beta, xi) - level
        bw = self.root_weight(beta)
        return tuple(x - c * y for x, y in zip(xi, bw))

    @staticmethod
    def stabilizer(lam: Sequence[int]) -> frozenset:
        """Indices ``i`` with ``<alpha_i^vee, lam> = 0``."""
        return frozenset(i + 1 for i, c in enumerate(lam) if c == 0)

    def check_weight(self, lam: Sequence[int], dominant: bool = True) -> Weight:
        if len(lam) != self.rank:
            raise ParseError(f"weight {tuple(lam)} has wrong length for {self.ctype}")
        if dominant and any(c < 0 for c in lam):
            raise ParseError(f"weight {tuple(lam)} is not dominant")
        return tuple(int(c) for c in lam)

    # --------------------------------------------------------- Weyl group

    def from_key(self, key: Sequence[int]) -> WeylElt:
        key = tuple(key)
        hit = self._by_key.get(key)
        if hit is not None:
            return hit
        word, v = [], key
        while True:
            i = next((k + 1 for k, c in enumerate(v) if c < 0), None)
            if i is None:
                break
            word.append(i)
            v = self.reflect(i, v)
        if v != self.rho:
            raise ValueError(f"{key} is not in the W-orbit of rho")
        w = WeylElt(key, tuple(word))
        self._by_key[key] = w
        return w

    def elt(self, word: Iterable[int]) -> WeylElt:
        """The product ``r_{i1} r_{i2} ...`` (the word need not be reduced)."""
        word = tuple(word)
        for i in word:
            self._check_index(i)
        return self.from_key(self.act_word(word, self.rho))

    @property
    def identity(self) -> WeylElt:
        return self.from_key(self.rho)

    @property
    def longest(self) -> WeylElt:
        return self._w0

    def act_word(self, word: Sequence[int], xi: Sequence) -> tuple:
        xi = tuple(xi)
        for i in reversed(word):
            xi = self.reflect(i, xi)
        return xi

    def act(self, w: WeylElt, xi: Sequence) -> tuple:
        """``w . xi`` for a weight."""
        return self.act_word(w.word, xi)

    def act_root(self, w: WeylElt, beta: Root) -> Root:
        for i in reversed(w.word):
            beta = self._reflect_root_simple(i, beta)
        return beta

    def mul(self, u: WeylElt, v: WeylElt) -> WeylElt:
        return self.from_key(self.act(u, v.key))

    def inv(self, w: WeylElt) -> WeylElt:
        return self.elt(reversed(w.word))

    def left_mul(self, i: int, w: WeylElt) -> WeylElt:
        return self.from_key(self.reflect(i, w.key))

    def right_mul(self, w: WeylElt, i: int) -> WeylElt:
        return self.mul(w, self.elt((i,)))

    def reflection(self, beta: Root) -> WeylElt:
        """The reflection ``r_beta``."""
        return self.from_key(self.reflect_by(beta, self.rho))

    def right_reflect(self, w: WeylElt, beta: Root) -> WeylElt:
        """``w r_beta``."""
        return self.from_key(self.act(w, self.reflection(beta).key))

    def is_left_descent(self, w: WeylElt, i: int) -> bool:
        return w.key[i - 1] < 0

    def is_right_descent(self, w: WeylElt, i: int) -> bool:
        return not is_positive(self.act_root(w, self.simple_root(i)))

    def bruhat_leq(self, u: WeylElt, w: WeylElt) -> bool:
        """Bruhat order, by recursion on a left descent of ``w``."""
        memo = self._bruhat.get((u.key, w.key))
        if memo is not None:
            return memo
        if u.length > w.length:
            res = False
        elif w.length == 0:
            res = u.length == 0
        elif u == w:
            res = True
        else:
            i = w.word[0]
            sw = self.left_mul(i, w)
            su = self.left_mul(i, u) if self.is_left_descent(u, i) else u
            res = self.bruhat_leq(su, sw)
        self._bruhat[(u.key, w.key)] = res
        return res

    def coset_rep_of_weight(self, mu: Sequence[int], lam: Sequence[int]) -> WeylElt:
        """Shortest ``u`` with ``u . lam = mu`` (``lam`` dominant)."""
        word, v = [], tuple(mu)
        while True:
            i = next((k + 1 for k, c in enumerate(v) if c < 0), None)
            if i is None:
                break
            word.append(i)
            v = self.reflect(i, v)
        if v != tuple(lam):
            raise ValueError(f"{tuple(mu)} is not in the orbit of {tuple(lam)}")
        return self.elt(word)

    def _parabolic_weight(self, J: Iterable[int]) -> Weight:
        J = set(J)
        return tuple(0 if i + 1 in J else 1 for i in range(self.rank))

    def min_coset_rep(self, w: WeylElt, J: Iterable[int]) -> WeylElt:
        """The minimal-length representative of ``w W_J``."""
        lam = self._parabolic_weight(J)
        return self.coset_rep_of_weight(self.act(w, lam), lam)

    def in_min_reps(self, w: WeylElt, J: Iterable[int]) -> bool:
        return all(not self.is_right_descent(w, j) for j in J)

    def minimal_reps(self, J: Iterable[int] = ()) -> tuple[WeylElt, ...]:
        """All of ``W^J``, sorted by length then word; ``J = ()`` gives all of W."""
        J = frozenset(J)
        if J in self._reps:
            return self._reps[J]
        lam = self._parabolic_weight(J)
        seen = {lam}
        queue = deque([lam])
        while queue:
            mu = queue.popleft()
            for i in range(1, self.rank + 1):
                if mu[i - 1] > 0:
                    nu = self.reflect(i, mu)
                    if nu not in seen:
                        seen.add(nu)
                        queue.append(nu)
        reps = sorted((self.coset_rep_of_weight(mu, lam) for mu in seen), key=lambda u: (u.length, u.word))
        self._reps[J] = tuple(reps)
        return self._reps[J]

    def elements(self) -> tuple[WeylElt, ...]:
        return self.minimal_reps(())

    def longest_in(self, J: Iterable[int]) -> WeylElt:
        """Longest element of the parabolic subgroup ``W_J``."""
        J = sorted(set(J))
        w = self.identity
        while True:
            j = next((j for j in J if not self.is_right_descent(w, j)), None)
            if j is None:
                return w
            w = self.right_mul(w, j)

    def omega(self, i: int) -> int:
        """The index with ``w0 alpha_i = -alpha_omega(i)``."""
        img = self.act_root(self._w0, self.simple_root(i))
        return next(k + 1 for k, c in enumerate(img) if c)

    def omega_set(self, J: Iterable[int]) -> frozenset:
        return frozenset(self.omega(j) for j in J)

    def omega_elt(self, w: WeylElt) -> WeylElt:
        """``w0 w w0``, i.e. the word of ``w`` with letters relabelled by omega."""
        return self.elt(self.omega(i) for i in w.word)

    def dual_weight(self, lam: Sequence[int]) -> Weight:
        """``-w0 lam``."""
        return tuple(-c for c in self.act(self._w0, lam))

    def parse_word(self, text: str) -> WeylElt:
        """Accepts ``e``, ``w0``, ``s1 s2 s1``, ``s1s2`` or ``1 2 1``."""
        t = (text or "").strip()
        if t in ("e", "1", "id", ""):
            return self.identity
        if t == "w0":
            return self.longest
        if re.fullmatch(r"(s\d+\s*)+", t):
            word = [int(x) for x in re.findall(r"s(\d+)", t)]
        elif re.fullmatch(r"\d+(\s+\d+)*", t):
            word = [int(x) for x in t.split()]
        else:
            raise ParseError(f"cannot parse Weyl group element {text!r}")
        return self.elt(word)


def is_positive(beta: Root) -> bool:
    return any(beta) and all(c >= 0 for c in beta)


def root_sort_key(beta: Root):
    """Height first, then reverse lexicographic so ``alpha_1`` precedes ``alpha_2``."""
    return (sum(beta), tuple(-c for c in beta))


_CACHE: dict[CartanType, RootDatum] = {}


def root_datum(ctype: CartanType | str) -> RootDatum:
    """Shared (cached) root datum for a Cartan type."""
    if isinstance(ctype, str):
        ctype = CartanType.parse(ctype)
    if ctype not in _CACHE:
        _CACHE[ctype] = RootDatum(ctype)
    return _CACHE[ctype]


def parse_weight(text: str, rank: int | None = None) -> Weight:
    try:
        lam = tuple(int(x) for x in re.split(r"[,\s]+", text.strip().strip("[]()")) if x)
    except ValueError:
        raise ParseError(f"cannot parse weight {text!r}") from None
    if not lam or (rank is not None and len(lam) != rank):
        raise ParseError(f"weight {text!r} needs {rank} coordinates")
    return lam
