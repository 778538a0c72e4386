"""Orbit counting and the Riemann-Hurwitz genus of generating tuples."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import divisors, euler_phi
from .perm import Permutation, PermGroup, orbit_data, order as perm_order
from .socle import SocleModel, TypeBGroup, lcm


class NonIntegralOrbitCount(ArithmeticError):
    pass


@dataclass
class OrbitProfile:
    """Fixed-point counts f(x^d) and orbit counts Orb(x^d) for every d | m."""

    order: int
    fixed: dict[int, int]
    orbits: dict[int, int]

    @property
    def orb(self) -> int:
        return self.orbits[1]

    def index(self, n: int) -> int:
        return n - self.orb


def orb_via_totient(m: int, fixed: dict[int, int]) -> int:
    """Orb(x) = (1/m) * sum_{d | m} phi(m/d) f(x^d)."""
    total = sum(euler_phi(m // d) * fixed[d] for d in divisors(m))
    if total % m:
        raise NonIntegralOrbitCount(f"sum {total} not divisible by order {m}")
    return total // m


def orbit_profile(model: SocleModel, pair, direct: bool = False) -> OrbitProfile:
    """Profile of a pair element.

    The default route uses the class-level closed form for f and the totient
    identity for Orb. ``direct=True`` materializes each power on Omega and
    counts fixed points and cycles instead.
    """
    u, v = pair
    m = model.pair_order(u, v)
    fixed, orbits = {}, {}
    if direct:
        perm = model.act(u, v)
        for d in divisors(m):
            p = perm
            for _ in range(d - 1):
                p = perm[p]
            fixed[d] = int(np.count_nonzero(p == np.arange(model.n)))
            orbits[d] = count_cycles(p)
        return OrbitProfile(m, fixed, orbits)
    c1, c2 = model.pair_class(u, v)
    for d in divisors(m):
        fixed[d] = model.class_fixed(model.class_pow_of(c1, d), model.class_pow_of(c2, d))
    for d in divisors(m):
        md = m // d
        sub = {e: fixed[d * e] for e in divisors(md)}
        orbits[d] = orb_via_totient(md, sub)
    return OrbitProfile(m, fixed, orbits)


def count_cycles(perm: np.ndarray) -> int:
    """Number of cycles of a permutation array, as sum over points of 1/len."""
    n = len(perm)
    seen = np.zeros(n, dtype=bool)
    cycles = 0
    for start in range(n):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def count_cycles_batch(perms: np.ndarray, max_order: int | None = None) -> np.ndarray:
    """Cycle counts for each row of a (B, n) array.

    Pointer doubling spreads the minimum point label around every cycle; a
    point starts a cycle iff it is that minimum. ``max_order`` (a bound on
    cycle lengths) shortens the doubling; without it n is used.
    """
    perms = np.asarray(perms, dtype=np.int64)
    B, n = perms.shape
    offs = (np.arange(B, dtype=np.int64) * n)[:, None]
    P = (perms + offs).reshape(-1)
    lab = np.arange(B * n, dtype=np.int64)
    span = 1
    limit = max_order if max_order is not None else n
    while span < limit:
        lab = np.minimum(lab, lab[P])
        P = P[P]
        span *= 2
    return np.count_nonzero((lab == np.arange(B * n)).reshape(B, n), axis=1)


@dataclass
class TupleGenusReport:
    degree: int
    orders: tuple[int, ...]
    orbit_counts: tuple[int, ...]
    twice_genus_minus_2: int
    product_one: bool
    transitive: bool | None = None
    generates: bool | None = None

    @property
    def genus(self) -> int | None:
        t = self.twice_genus_minus_2 + 2
        if t % 2 or t < 0:
            return None
        return t // 2

    @property
    def index_sum(self) -> int:
        return sum(self.degree - o for o in self.orbit_counts)


def twice_genus_minus_2(n: int, orbit_counts) -> int:
    """2g - 2 = -2n + sum of indices n - Orb(x_i)."""
    return -2 * n + sum(n - o for o in orbit_counts)


def genus_of_tuple(tup, G: TypeBGroup | None = None, check_generation: bool = True) -> TupleGenusReport:
    """Genus of a tuple of pair elements of ``G``, or of raw Permutations if ``G`` is None."""
    if G is None:
        perms = list(tup)
        n = perms[0].degree
        prod_ = Permutation.identity(n)
        for p in perms:
            prod_ = prod_ * p
        orbs = tuple(orbit_data(p)[0] for p in perms)
        orders = tuple(perm_order(p) for p in perms)
        transitive = gens = None
        if check_generation:
            H = PermGroup(perms, n)
            transitive = H.is_transitive()
        return TupleGenusReport(n, orders, orbs, twice_genus_minus_2(n, orbs),
                                prod_.is_identity(), transitive, gens)
    m = G.model
    pairs = [tuple(x) for x in tup]
    pu, pv = 0, 0
    for u, v in pairs:
        if not G.contains((u, v)):
            raise ValueError(f"({u}, {v}) is not an element of {G.label}")
        pu = int(m.mul(pu, u))
        pv = int(m.mul(pv, v))
    orbs = tuple(m.class_orb(*m.pair_class(u, v)) for u, v in pairs)
    orders = tuple(m.pair_order(u, v) for u, v in pairs)
    transitive = gens = None
    if check_generation:
        gens = G.generates(pairs)
        transitive = omega_transitive(m, pairs)
    return TupleGenusReport(m.n, orders, orbs, twice_genus_minus_2(m.n, orbs),
                            pu == 0 and pv == 0, transitive, gens)


def omega_transitive(model: SocleModel, pairs) -> bool:
    perms = [model.act(u, v) for u, v in pairs]
    n = model.n
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    while len(frontier):
        nxt = np.unique(np.concatenate([p[frontier] for p in perms]))
        nxt = nxt[~seen[nxt]]
        seen[nxt] = True
        frontier = nxt
    return bool(seen.all())


def rh_screen(orbit_counts, n: int, genus_set=range(6)) -> dict[int, bool]:
    """For each g: does sum Orb = (r-2) n + 2 - 2g hold?"""
    r = len(orbit_counts)
    total = sum(orbit_counts)
    return {g: total == (r - 2) * n + 2 - 2 * g for g in genus_set}


def genus_from_orbits(orbit_counts, n: int) -> int | None:
    t = twice_genus_minus_2(n, orbit_counts) + 2
    if t % 2 or t < 0:
        return None
    return t // 2


@dataclass
class PremiseViolation:
    group: str
    classes: str
    order: int
    kind: str            # "mfpr" or "or"
    value: Fraction
    bound: Fraction
    power: int = 1


def pair_mfpr(model: SocleModel, c1: int, c2: int) -> tuple[Fraction, int]:
    """max_{0<i<|x|} fpr(x^i) for x in coordinate classes (c1, c2), with the maximizing power."""
    m = lcm(int(model.class_order[c1]), int(model.class_order[c2]))
    best, arg = Fraction(0), 0
    for i in range(1, m):
        f = Fraction(model.class_fixed(model.class_pow_of(c1, i), model.class_pow_of(c2, i)), model.n)
        if f > best:
            best, arg = f, i
    return best, arg


def or_premise(order: int, is_a5: bool) -> Fraction:
    from .ledger import OR_ANY, OR_NOT_A5, OR_ORDER3, OR_ORDER4, OR_ORDER_GE5
    if order == 3:
        return OR_ORDER3
    if order == 4:
        return OR_ORDER4
    if order >= 5:
        return OR_ORDER_GE5
    return OR_ANY if is_a5 else OR_NOT_A5


def premise_audit(G: TypeBGroup) -> list[PremiseViolation]:
    """Elements of G whose mfpr or orbit ratio exceeds the imported order-dependent bound."""
    from .ledger import mfpr_premise
    m = G.model
    is_a5 = m.n == 60
    out = []
    seen = set()
    for c1, c2 in G.class_pairs():
        key = G.g_class_key(c1, c2)
        o = lcm(int(m.class_order[c1]), int(m.class_order[c2]))
        if o == 1 or key in seen:
            continue
        seen.add(key)
        name = G.g_class_name(c1, c2)
        val, power = pair_mfpr(m, c1, c2)
        if val > mfpr_premise(o):
            out.append(PremiseViolation(G.label, name, o, "mfpr", val, mfpr_premise(o), power))
        ratio = Fraction(m.class_orb(c1, c2), m.n)
        if ratio > or_premise(o, is_a5):
            out.append(PremiseViolation(G.label, name, o, "or", ratio, or_premise(o, is_a5)))
    return out
