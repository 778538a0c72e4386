"""Permutations on {0, ..., d-1} and basic permutation-group algorithms.

Group multiplication is function composition: ``(p * q)(i) == p(q(i))``.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


class DegreeMismatch(ValueError):
    pass


class OrbitOverflow(Exception):
    """Raised when a conjugation orbit grows past its cap."""

    def __init__(self, cap: int):
        super().__init__(f"conjugation orbit exceeded cap {cap}")
        self.cap = cap


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(int(i) for i in images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation: %r" % (images,))
        self.images = images
        self._hash = None

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Permutation:
        img = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return self.inverse()

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv, check=False)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return "Permutation(())"
        return "Permutation(%s)" % "".join("(%s)" % " ".join(map(str, c)) for c in moved)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return p∘q, the map i -> p(q(i))."""
    if len(p.images) != len(q.images):
        raise DegreeMismatch(f"degrees differ: {len(p.images)} vs {len(q.images)}")
    pi = p.images
    return Permutation([pi[j] for j in q.images], check=False)


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths stored as sorted (length, multiplicity) pairs."""

    parts: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return sum(length * mult for length, mult in self.parts)

    @property
    def num_cycles(self) -> int:
        return sum(mult for _, mult in self.parts)

    def multiplicity(self, length: int) -> int:
        return dict(self.parts).get(length, 0)

    def __str__(self) -> str:
        return "".join(f"{length}^{mult} " for length, mult in self.parts).strip()


def cycle_type(p: Permutation) -> CycleType:
    counts = Counter(len(c) for c in p.cycles())
    return CycleType(tuple(sorted(counts.items())))


def order_and_cycle_type(p: Permutation) -> tuple[int, CycleType]:
    ct = cycle_type(p)
    order = 1
    for length, _ in ct.parts:
        order = order * length // math.gcd(order, length)
    return order, ct


def order(p: Permutation) -> int:
    return order_and_cycle_type(p)[0]


def orbit_data(p: Permutation) -> tuple[int, int]:
    """Number of cycles (fixed points included) and number of fixed points."""
    ct = cycle_type(p)
    return ct.num_cycles, ct.multiplicity(1)


def conjugation_orbit(seed: Permutation, conjugators: Sequence[Permutation],
                      cap: int = 10**6) -> set[Permutation]:
    """Closure of {seed} under g -> c g c^-1; raises OrbitOverflow past ``cap``."""
    if cap <= 0:
        raise ValueError("cap must be positive")
    pairs = [(c, c.inverse()) for c in conjugators]
    orbit = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for g in frontier:
            for c, ci in pairs:
                h = c * g * ci
                if h not in orbit:
                    orbit.add(h)
                    if len(orbit) > cap:
                        raise OrbitOverflow(cap)
                    nxt.append(h)
        frontier = nxt
    return orbit


def orbit(point: int, gens: Sequence[Permutation]) -> list[int]:
    seen = {point}
    out = [point]
    for x in out:
        for g in gens:
            y = g.images[x]
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


def minimal_block(gens: Sequence[Permutation], a: int, b: int, degree: int) -> list[int]:
    """Smallest block of imprimitivity containing points a and b (Atkinson)."""
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    imgs = [g.images for g in gens]
    parent[find(b)] = find(a)
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        for img in imgs:
            c, d = find(img[x]), find(img[y])
            if c != d:
                parent[d] = c
                queue.append((c, d))
    root = find(a)
    return [x for x in range(degree) if find(x) == root]


class PermGroup:
    """Permutation group with a base and strong generating set.

    The stabilizer chain is built with deterministic Schreier–Sims. Passing
    ``known_order`` lets construction stop once the chain certifies that
    order; this is exact whenever the generators are known to lie in a group
    of that order.
    """

    def __init__(self, gens: Sequence[Permutation], degree: int | None = None,
                 known_order: int | None = None, base: Sequence[int] = ()):
        gens = list(gens)
        if degree is None:
            if not gens:
                raise ValueError("degree required for an empty generator list")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch("generator degrees differ")
        self.degree = degree
        self.generators = gens
        self._build([g.images for g in gens if not g.is_identity()], list(base), known_order)

    # -- construction -------------------------------------------------------

    def _build(self, gens: list[tuple], base: list[int], known_order: int | None):
        n = self.degree
        ident = tuple(range(n))
        self._id = ident
        base = list(base)
        strong: list[tuple] = []
        for g in gens:
            if all(g[b] == b for b in base):
                base.append(next(i for i in range(n) if g[i] != i))
            strong.append(g)
        self.base = base
        self.strong = strong
        # per-level transversals: point -> (coset rep, its inverse)
        self._trans: list[dict[int, tuple[tuple, tuple]]] = []
        self._level_gens: list[list[tuple]] = []
        for i in range(len(base)):
            self._refresh(i)
        if known_order is not None and self.order == known_order:
            return
        i = len(base) - 1
        while i >= 0:
            restart = self._schreier_pass(i, known_order)
            if restart is None:
                i -= 1
            elif restart == -1:
                return
            else:
                i = restart

    def _refresh(self, i: int):
        b = self.base[i]
        prefix = self.base[:i]
        gens = [g for g in self.strong if all(g[x] == x for x in prefix)]
        ident = self._id
        trans = {b: (ident, ident)}
        queue = [b]
        for x in queue:
            ux = trans[x][0]
            for g in gens:
                y = g[x]
                if y not in trans:
                    u = tuple(g[k] for k in ux)
                    uinv = [0] * len(u)
                    for k, v in enumerate(u):
                        uinv[v] = k
                    trans[y] = (u, tuple(uinv))
                    queue.append(y)
        if i < len(self._trans):
            self._trans[i] = trans
            self._level_gens[i] = gens
        else:
            self._trans.append(trans)
            self._level_gens.append(gens)

    def _sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        for j in range(start, len(self.base)):
            beta = g[self.base[j]]
            t = self._trans[j].get(beta)
            if t is None:
                return g, j
            uinv = t[1]
            g = tuple(uinv[k] for k in g)
        return g, len(self.base)

    def _schreier_pass(self, i: int, known_order: int | None):
        trans = self._trans[i]
        for beta, (u, _) in list(trans.items()):
            for s in self._level_gens[i]:
                su = tuple(s[k] for k in u)
                gamma = su[self.base[i]]
                vinv = trans[gamma][1]
                h = tuple(vinv[k] for k in su)
                if h == self._id:
                    continue
                res, j = self._sift(h, i + 1)
                if res == self._id:
                    continue
                self.strong.append(res)
                if j == len(self.base):
                    self.base.append(next(k for k in range(self.degree) if res[k] != k))
                for lvl in range(i + 1, j + 1):
                    self._refresh(lvl)
                if known_order is not None and self.order == known_order:
                    return -1
                return j
        return None

    # -- queries ------------------------------------------------------------

    @property
    def order(self) -> int:
        return math.prod(len(t) for t in self._trans)

    def basic_orbit_lengths(self) -> list[int]:
        return [len(t) for t in self._trans]

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        res, _ = self._sift(p.images)
        return res == self._id

    __contains__ = contains

    def transversals(self) -> list[list[tuple]]:
        return [[u for u, _ in t.values()] for t in self._trans]

    def strong_generators(self) -> list[Permutation]:
        return [Permutation(s, check=False) for s in self.strong]

    def orbit(self, point: int) -> list[int]:
        return orbit(point, self.generators)

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def elements(self):
        """Iterate all elements (only sensible for small groups)."""
        levels = self.transversals()

        def rec(i, acc):
            if i < 0:
                yield Permutation(acc, check=False)
                return
            for u in levels[i]:
                yield from rec(i - 1, tuple(u[k] for k in acc))

        yield from rec(len(levels) - 1, self._id)


def build_bsgs(gens: Sequence[Permutation], degree: int | None = None) -> PermGroup:
    return PermGroup(gens, degree=degree)


def is_primitive(gens: Sequence[Permutation], degree: int,
                 stabilizer_gens: Sequence[Permutation] | None = None) -> bool:
    """Primitivity of a transitive group via minimal blocks through point 0.

    With ``stabilizer_gens`` (any generators of a subgroup of the stabilizer of
    0) only one point per suborbit needs testing, since blocks through {0, i}
    and {0, h(i)} are images of each other under h.
    """
    if degree <= 2:
        return True
    if stabilizer_gens is None:
        candidates = range(1, degree)
    else:
        seen = {0}
        candidates = []
        for i in range(1, degree):
            if i not in seen:
                candidates.append(i)
                seen.update(orbit(i, stabilizer_gens))
    for i in candidates:
        if len(minimal_block(gens, 0, i, degree)) != degree:
            return False
    return True


def transitivity_and_primitivity(G: PermGroup,
                                 stabilizer_gens: Sequence[Permutation] | None = None
                                 ) -> tuple[bool, bool]:
    transitive = G.is_transitive()
    if not transitive:
        return False, False
    return True, is_primitive(G.generators, G.degree, stabilizer_gens)
