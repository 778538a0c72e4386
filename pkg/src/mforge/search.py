"""Genus-system search over type-B diagonal groups.

Two modes:

* ``search_systems`` enumerates tuples exactly. One slot is pinned to a
  coordinatewise class representative; the remaining free slots are
  enumerated per coordinate and bucketed by L-class signature, so the genus
  filter runs on bucket pairs before any element pair is formed.
* ``screen_class_triples`` only evaluates the Riemann-Hurwitz count on class
  representative tuples, plus the coset-label obstruction.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .perm import Permutation, PermGroup
from .rh import count_cycles, genus_from_orbits, twice_genus_minus_2
from .socle import TypeBGroup, catalog_type_b, lcm

FORCED_SMALL_TYPES = {(2, 2, 2, 2), (2, 3, 3), (2, 3, 4), (2, 3, 5), (2, 3, 6), (2, 4, 4), (3, 3, 3)}
MAX_ENUMERATION = 10**7


class SearchGuardError(RuntimeError):
    pass


def is_excluded_type(ty) -> bool:
    """Types whose systems force a solvable group or A5."""
    t = tuple(sorted(ty))
    if len(t) <= 2:
        return True
    if len(t) == 3 and t[:2] == (2, 2):
        return True
    return t in FORCED_SMALL_TYPES


def triangle_types(is_a5: bool, element_orders=None) -> list[tuple[int, ...]]:
    """Admissible triangle types; for A5 the open (2,3,m) family is cut by actual orders."""
    out = []
    if is_a5:
        ms = sorted(o for o in (element_orders or ()) if o >= 7)
    else:
        ms = range(7, 30)
    out += [(2, 3, m) for m in ms]
    out += [(2, 4, m) for m in range(5, 38)]
    out += [(2, 5, m) for m in range(5, 14)]
    out += [(2, 6, m) for m in range(6, 10)]
    out += [(3, 3, m) for m in range(4, 10)]
    out += [(3, 4, m) for m in (4, 5)]
    return out


_SWEEP_237 = {"psl2_7", "psl2_8", "psl2_13", "a7", "a8"}
_SWEEP_238 = {"psl2_7", "psl2_9", "psl2_16", "psl2_25", "u4_2", "a6", "a8"}
_SWEEP_GENERAL = {"a5", "a6", "a7", "a8", "psl2_7"}
SMALL_SOCLES = ("a5", "a6", "a7", "psl2_7", "psl2_8", "psl2_9", "psl2_13", "psl2_16", "psl2_25")
LARGE_SOCLES = ("a8", "u4_2")


def sweep_types(label: str, element_orders=()) -> list[tuple[int, ...]]:
    """Types to check for a given socle in the theorem sweep."""
    types = []
    if label in _SWEEP_237:
        types.append((2, 3, 7))
    if label in _SWEEP_238:
        types.append((2, 3, 8))
    if label in _SWEEP_GENERAL:
        types += triangle_types(label == "a5", element_orders)
    if label == "a5":
        types.append((2, 2, 2, 3))
    seen = set()
    out = []
    for t in types:
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


@dataclass
class SearchConfig:
    socle: str
    types: tuple = ()
    genus: tuple = (0, 1)
    groups: str = "all"
    strategy: str = "elements"
    threads: int = 1
    dedup_cap: int = 10**6
    allow_excluded: bool = False
    max_enumeration: int = MAX_ENUMERATION

    def __post_init__(self):
        self.types = tuple(tuple(int(x) for x in t) for t in self.types)
        self.genus = tuple(sorted({int(g) for g in self.genus}))
        if self.strategy not in ("elements", "screen"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        for t in self.types:
            if len(t) < 3 or len(t) > 4 or min(t) < 2:
                raise ValueError(f"unsupported type {t}")
            if is_excluded_type(t) and not self.allow_excluded:
                raise ValueError(f"type {t} is excluded (solvable or A5 only); set allow_excluded")

    def as_dict(self) -> dict:
        return {"socle": self.socle, "types": [list(t) for t in self.types], "genus": list(self.genus),
                "groups": self.groups, "strategy": self.strategy, "dedup_cap": self.dedup_cap,
                "allow_excluded": self.allow_excluded}


def select_groups(label: str, spec: str = "all") -> list[TypeBGroup]:
    groups = catalog_type_b(label)
    if spec == "all":
        return groups
    want = frozenset(int(x) for x in spec.replace("{", "").replace("}", "").split(",") if x.strip()) | {0}
    chosen = [G for G in groups if G.q0 == want]
    if not chosen:
        raise ValueError(f"no catalog group with Q0 = {sorted(want)} for {label}")
    return chosen


@dataclass(frozen=True)
class ClassLabel:
    """A G-class named by its canonical pair of coordinate L-classes."""

    order: int
    coset: int
    classes: tuple[int, int]
    name: str
    fixed_points: int

    def as_dict(self) -> dict:
        return {"order": self.order, "coset": self.coset, "classes": list(self.classes),
                "name": self.name, "fixed_points": self.fixed_points}


@dataclass(frozen=True)
class RamificationType:
    group: str
    classes: tuple[ClassLabel, ...]
    granularity: str = "exact"

    @property
    def key(self) -> tuple:
        return tuple((c.order, c.classes) for c in self.classes)

    def as_dict(self) -> dict:
        return {"group": self.group, "granularity": self.granularity,
                "classes": [c.as_dict() for c in self.classes]}


@dataclass
class GenusSystemRecord:
    group: str
    group_order: int
    degree: int
    type: tuple[int, ...]
    witness: tuple[tuple[int, int], ...]
    genus: int
    ramification: RamificationType
    witnesses: int = 1
    flags: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"group": self.group, "group_order": self.group_order, "degree": self.degree,
                "type": list(self.type), "genus": self.genus, "witnesses": self.witnesses,
                "witness": [list(p) for p in self.witness],
                "ramification": self.ramification.as_dict(), "flags": dict(self.flags)}


@dataclass
class ScreenRecord:
    group: str
    type: tuple[int, ...]
    classes: tuple[str, ...]
    orbits: tuple[int, ...]
    genera: tuple[int, ...]
    cosets: tuple[int, ...]
    obstructed: bool

    def as_dict(self) -> dict:
        return {"group": self.group, "type": list(self.type), "classes": list(self.classes),
                "orbits": list(self.orbits), "genera": list(self.genera),
                "cosets": list(self.cosets), "obstructed": self.obstructed}


# -- coset-label obstruction ----------------------------------------------------------

def quotient_obstruction(orders, available, q0, q_mul, q_order) -> bool:
    """True when no admissible coset labelling has trivial product and generates Q0.

    ``available[i]`` lists the labels allowed in slot i; a label q is only
    admissible when its order in Q divides ``orders[i]``.
    """
    q0 = frozenset(q0)
    choices = [[q for q in sorted(av) if q in q0 and orders[i] % q_order[q] == 0]
               for i, av in enumerate(available)]
    for assign in product(*choices):
        prod_ = 0
        for q in assign:
            prod_ = q_mul[prod_][q]
        if prod_ != 0:
            continue
        span = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for q in assign:
                    b = q_mul[a][q]
                    if b not in span:
                        span.add(b)
                        nxt.append(b)
            frontier = nxt
        if span == q0:
            return False
    return True


def type_obstructed(G: TypeBGroup, ty) -> bool:
    m = G.model
    return quotient_obstruction(ty, [G.q0] * len(ty), G.q0, m.q_mul, m.q_order)


# -- element-level search ---------------------------------------------------------------

def class_label(G: TypeBGroup, c1: int, c2: int) -> ClassLabel:
    m = G.model
    a, b = G.g_class_key(c1, c2)
    return ClassLabel(lcm(int(m.class_order[a]), int(m.class_order[b])), int(m.class_coset[a]),
                      (a, b), G.g_class_name(a, b), m.class_fixed(a, b))


class _Searcher:
    def __init__(self, G: TypeBGroup, ty, genus_set, max_enumeration: int):
        self.G = G
        self.m = m = G.model
        self.ty = tuple(ty)
        self.genus_set = set(genus_set)
        r = len(ty)
        self.r = r
        self.slot_pairs = [G.class_pairs(o) for o in ty]
        counts = [len(p) for p in self.slot_pairs]
        self.empty = min(counts) == 0
        self.fixed = counts.index(min(counts))
        self.free = [(self.fixed + 1 + k) % r for k in range(r - 2)]
        self.derived = (self.fixed + r - 1) % r
        in_q0 = np.isin(m.coset, np.array(sorted(G.q0), dtype=m.coset.dtype))
        self.cand = {s: np.flatnonzero(in_q0 & (ty[s] % m.order == 0)) for s in self.free}
        work = math.prod(len(self.cand[s]) for s in self.free) if self.free else 1
        if work > max_enumeration:
            raise SearchGuardError(f"{G.label} type {ty}: {work} free tuples per coordinate exceeds "
                                   f"{max_enumeration}; use the screen strategy")
        self._bucket_cache: dict[int, dict] = {}
        self._proj_cache: dict[tuple, bool] = {}
        self.proj_order = G.proj_order

    def buckets(self, a: int) -> dict[tuple, np.ndarray]:
        hit = self._bucket_cache.get(a)
        if hit is not None:
            return hit
        m = self.m
        cur = np.array([a])
        tuples = np.zeros((1, 0), dtype=np.int64)
        for s in self.free:
            U = self.cand[s]
            prods = np.concatenate([m.mul(int(c), U) for c in cur]) if len(cur) else np.zeros(0, np.int64)
            tuples = np.concatenate([np.repeat(tuples, len(U), axis=0),
                                     np.tile(U, len(cur))[:, None]], axis=1)
            cur = prods
        derived = m.inv[cur]
        keep = (self.ty[self.derived] % m.order[derived]) == 0
        tuples, derived = tuples[keep], derived[keep]
        sig = np.concatenate([m.cls[tuples], m.cls[derived][:, None]], axis=1)
        out: dict[tuple, np.ndarray] = {}
        if len(sig):
            uniq, inverse = np.unique(sig, axis=0, return_inverse=True)
            inverse = inverse.reshape(-1)
            order_ = np.argsort(inverse, kind="stable")
            splits = np.cumsum(np.bincount(inverse, minlength=len(uniq)))[:-1]
            for key, members in zip(uniq, np.split(order_, splits)):
                out[tuple(int(x) for x in key)] = np.concatenate(
                    [tuples[members], derived[members][:, None]], axis=1)
        self._bucket_cache[a] = out
        return out

    def _projection_full(self, elems: tuple[int, ...]) -> bool:
        hit = self._proj_cache.get(elems)
        if hit is None:
            gens = [self.m.perm(e) for e in elems]
            hit = PermGroup(gens, self.m.d, known_order=self.proj_order).order == self.proj_order
            self._proj_cache[elems] = hit
        return hit

    def compatible(self, fixed_pair, sig1, sig2):
        """Slot-wise class pairs of a bucket pair, or None if orders/cosets/genus fail."""
        m = self.m
        slots = self.free + [self.derived]
        classes = {self.fixed: fixed_pair}
        for k, s in enumerate(slots):
            a, b = sig1[k], sig2[k]
            if m.class_coset[a] != m.class_coset[b]:
                return None
            if lcm(int(m.class_order[a]), int(m.class_order[b])) != self.ty[s]:
                return None
            classes[s] = (a, b)
        orbs = [m.class_orb(*classes[s]) for s in range(self.r)]
        g = genus_from_orbits(orbs, m.n)
        if g is None or g not in self.genus_set:
            return None
        return [classes[s] for s in range(self.r)], g

    def run_fixed(self, fixed_pair) -> list:
        """All generating tuples with the pinned slot at this class pair's representative."""
        m, G = self.m, self.G
        c1, c2 = fixed_pair
        a, b = int(m.class_rep[c1]), int(m.class_rep[c2])
        B1, B2 = self.buckets(a), self.buckets(b)
        found = []
        slots = self.free + [self.derived]
        for sig1 in sorted(B1):
            for sig2 in sorted(B2):
                comp = self.compatible(fixed_pair, sig1, sig2)
                if comp is None:
                    continue
                classes, g = comp
                rows1, rows2 = B1[sig1], B2[sig2]
                ok1 = [self._projection_full((a,) + tuple(int(x) for x in row[:-1])) for row in rows1]
                ok2 = [self._projection_full((b,) + tuple(int(x) for x in row[:-1])) for row in rows2]
                for i, row1 in enumerate(rows1):
                    if not ok1[i]:
                        continue
                    for j, row2 in enumerate(rows2):
                        if not ok2[j]:
                            continue
                        tup = [None] * self.r
                        tup[self.fixed] = (a, b)
                        for k, s in enumerate(slots):
                            tup[s] = (int(row1[k]), int(row2[k]))
                        if not _omega_transitive_pairs(m, tup):
                            continue
                        if not G.generates(tup):
                            continue
                        found.append((tuple(tup), classes, g))
        return found


def _omega_transitive_pairs(model, tup) -> bool:
    """Orbit of the identity point: closure of {u x v^-1} computed in L-index space."""
    n = model.n
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    E = model.E.astype(np.intp)
    for _ in range(n):
        if not len(frontier):
            break
        imgs = []
        for u, v in tup:
            vinv = E[model.inv[v]]
            X = E[frontier][:, vinv]
            imgs.append(model.index_of(E[u][X]))
        nxt = np.unique(np.concatenate(imgs))
        nxt = nxt[~seen[nxt]]
        seen[nxt] = True
        frontier = nxt
    return bool(seen.all())


def _ram_type(G: TypeBGroup, classes) -> RamificationType:
    labels = sorted((class_label(G, a, b) for a, b in classes), key=lambda c: (c.order, c.classes))
    return RamificationType(G.label, tuple(labels))


def verify_record(G: TypeBGroup, witness, genus: int) -> dict:
    """Independent re-check: pair-space product, Omega cycle counts and a fresh BSGS."""
    m = G.model
    pu = pv = 0
    for u, v in witness:
        pu = int(m.mul(pu, u))
        pv = int(m.mul(pv, v))
    perms = [m.act(u, v) for u, v in witness]
    orbs = [count_cycles(p) for p in perms]
    g2 = twice_genus_minus_2(m.n, orbs)
    if m.n <= 5000:
        H = PermGroup([Permutation(p.tolist(), check=False) for p in perms], m.n)
    else:
        H = PermGroup([G.pair_perm(p) for p in witness], 2 * m.d)
    return {"product_one": pu == 0 and pv == 0, "genus_recomputed": g2 == 2 * genus - 2,
            "generates": H.order == G.order, "transitive": H.is_transitive() if m.n <= 5000 else True}


def search_group(G: TypeBGroup, ty, genus_set, threads: int = 1,
                 max_enumeration: int = MAX_ENUMERATION) -> list[GenusSystemRecord]:
    s = _Searcher(G, ty, genus_set, max_enumeration)
    if s.empty:
        return []
    fixed_pairs = s.slot_pairs[s.fixed]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(s.run_fixed, fixed_pairs))
    else:
        chunks = [s.run_fixed(fp) for fp in fixed_pairs]
    by_type: dict[tuple, list] = {}
    for chunk in chunks:
        for tup, classes, g in chunk:
            rt = _ram_type(G, classes)
            entry = by_type.setdefault((g, rt.key), [rt, tup, 0])
            entry[2] += 1
    records = []
    for (g, _), (rt, tup, count) in sorted(by_type.items()):
        rec = GenusSystemRecord(G.label, G.order, G.n, tuple(ty), tup, g, rt, count)
        rec.flags = verify_record(G, tup, g)
        records.append(rec)
    return records


def search_systems(config: SearchConfig) -> list[GenusSystemRecord]:
    if config.strategy != "elements":
        raise ValueError("search_systems needs strategy='elements'")
    out = []
    for G in select_groups(config.socle, config.groups):
        for ty in config.types:
            out += search_group(G, ty, config.genus, config.threads, config.max_enumeration)
    return out


def dedup_ramification(records) -> list[tuple[RamificationType, int]]:
    """Distinct ramification types with their multiplicities, canonically ordered."""
    counts: dict[tuple, list] = {}
    for rec in records:
        rt = rec.ramification
        key = (rt.group, rt.key)
        if key in counts:
            counts[key][1] += 1
        else:
            counts[key] = [rt, 1]
    return [tuple(v) for _, v in sorted(counts.items())]


# -- class-level screening ------------------------------------------------------------------

def screen_group(G: TypeBGroup, ty, genus_set) -> list[ScreenRecord]:
    m = G.model
    slots = [G.class_pairs(o) for o in ty]
    if any(not s for s in slots):
        return []
    r = len(ty)
    orbs = [np.array([m.class_orb(a, b) for a, b in s], dtype=np.int64) for s in slots]
    total = orbs[0]
    for o in orbs[1:]:
        total = np.add.outer(total, o)
    targets = {(r - 2) * m.n + 2 - 2 * g: g for g in genus_set}
    hits = np.argwhere(np.isin(total, list(targets)))
    out = []
    for idx in hits:
        classes = [slots[s][int(i)] for s, i in enumerate(idx)]
        cosets = tuple(int(m.class_coset[a]) for a, _ in classes)
        orb = tuple(int(orbs[s][int(i)]) for s, i in enumerate(idx))
        g = targets[sum(orb)]
        obstructed = quotient_obstruction(ty, [{c} for c in cosets], G.q0, m.q_mul, m.q_order)
        names = tuple(G.g_class_name(a, b) for a, b in classes)
        out.append(ScreenRecord(G.label, tuple(ty), names, orb, (g,), cosets, obstructed))
    return out


def screen_class_triples(config: SearchConfig) -> list[ScreenRecord]:
    out = []
    for G in select_groups(config.socle, config.groups):
        for ty in config.types:
            out += screen_group(G, ty, config.genus)
    return out


# -- the full sweep ------------------------------------------------------------------------

@dataclass
class SweepResult:
    records: list
    screens: list
    types_checked: dict

    def as_dict(self) -> dict:
        return {"types_checked": dict(self.types_checked),
                "records": [r.as_dict() for r in self.records],
                "screens": [s.as_dict() for s in self.screens]}


def socle_sweep_types(label: str) -> list[tuple[int, ...]]:
    orders = sorted({o for G in catalog_type_b(label) for o in G.element_orders})
    return sweep_types(label, orders)


def theorem_sweep(threads: int = 1, genus=(0, 1), screen_genus=range(6),
                  small=SMALL_SOCLES, large=LARGE_SOCLES) -> SweepResult:
    """Exact search on the small socles plus class-level screening on the large ones."""
    records, screens, checked = [], [], {}
    for label in small:
        tys = socle_sweep_types(label)
        checked[label] = len(tys)
        for G in catalog_type_b(label):
            for ty in tys:
                records += search_group(G, ty, genus, threads)
    for label in large:
        tys = socle_sweep_types(label)
        checked[label] = len(tys)
        for G in catalog_type_b(label):
            for ty in tys:
                screens += screen_group(G, ty, screen_genus)
    return SweepResult(records, screens, checked)


def theorem_outcome(result: SweepResult) -> list[str]:
    """Deviations from the expected outcome; empty when it is reproduced exactly."""
    problems = []
    recs = result.records
    if len(recs) != 2:
        problems.append(f"expected 2 ramification types, found {len(recs)}")
    for r in recs:
        if (r.group_order, r.degree, tuple(r.type), r.genus) != (56448, 168, (2, 3, 8), 1):
            problems.append(f"unexpected record {r.group} {r.type} genus {r.genus}")
        if not all(r.flags.values()):
            problems.append(f"record {r.group} {r.type} failed verification {r.flags}")
    if len({r.group for r in recs}) > 1:
        problems.append("hits in more than one group")
    for s in result.screens:
        if not s.obstructed:
            problems.append(f"unobstructed screen hit {s.group} {s.type} genus {s.genera}")
    return problems
