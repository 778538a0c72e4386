"""Type-B diagonal groups with socle L^2 acting on Omega = L.

A ``SocleModel`` enumerates every element of the overgroup H0 as an image
array, with the |L| elements of L first (index 0 is the identity). Elements
of a diagonal group are pairs ``(u, v)`` of H0-indices with uL = vL; the pair
acts on Omega by x -> u x v^-1. Everything about a pair's action that the
search needs (fixed points, orbit counts) depends only on the L-conjugacy
classes of u and v, so these are computed once per model.
"""
from __future__ import annotations

import math
import string
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .algebra import divisors, euler_phi
from .atlas import AtlasEntry, centralizer_in_symmetric, get_entry
from .perm import Permutation, PermGroup, is_primitive

MAX_SOCLE = 2 * 10**5
MAX_OVERGROUP = 2 * 10**6
CHUNK = 1 << 16
DENSE_LIMIT = 1 << 24


class SocleSizeError(ValueError):
    pass


class CosetMismatch(ValueError):
    pass


def lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _enumerate(group: PermGroup) -> np.ndarray:
    """All elements as an (|G|, d) array; row 0 is the identity."""
    levels = group.transversals()
    d = group.degree
    dtype = np.uint8 if d <= 256 else np.uint16
    if not levels:
        return np.arange(d, dtype=dtype)[None, :]
    acc = np.array(levels[-1], dtype=dtype)
    for lvl in reversed(levels[:-1]):
        T = np.array(lvl, dtype=dtype)
        acc = T[:, acc].reshape(-1, d)
    return acc


class SocleModel:
    def __init__(self, entry: AtlasEntry, max_socle: int = MAX_SOCLE):
        if entry.order_L > max_socle:
            raise SocleSizeError(f"|L| = {entry.order_L} exceeds the socle guard {max_socle}")
        if entry.order_H0 > MAX_OVERGROUP:
            raise SocleSizeError(f"|H0| = {entry.order_H0} exceeds {MAX_OVERGROUP}")
        self.entry = entry
        self.label = entry.label
        self.d = entry.degree
        L = entry.L()
        H0 = entry.H0()
        EL = _enumerate(L)
        self.n = n = len(EL)
        ident = tuple(range(self.d))
        # coset representatives of L in H0
        reps = [ident]
        queue = [ident]
        gens = [g.images for g in entry.H0_gens]

        def coset_of(h):
            for k, r in enumerate(reps):
                rinv = np.argsort(r)
                if L.contains(Permutation(tuple(int(rinv[x]) for x in h), check=False)):
                    return k
            return None

        for r in queue:
            for g in gens:
                h = tuple(g[x] for x in r)
                if coset_of(h) is None:
                    reps.append(h)
                    queue.append(h)
        self.coset_reps = reps
        blocks = [EL] + [np.array(r, dtype=EL.dtype)[EL] for r in reps[1:]]
        self.E = np.ascontiguousarray(np.concatenate(blocks))
        self.N = len(self.E)
        if self.N != H0.order:
            raise RuntimeError("overgroup enumeration size mismatch")
        self.coset = np.repeat(np.arange(len(reps), dtype=np.int8), n)
        nq = len(reps)
        self.q_mul = [[coset_of(tuple(reps[i][x] for x in reps[j])) for j in range(nq)]
                      for i in range(nq)]
        self.q_order = []
        for i in range(nq):
            k, x = 1, i
            while x != 0:
                x = self.q_mul[x][i]
                k += 1
            self.q_order.append(k)
        # lookup keys from H0 base images
        self._base = list(H0.base)
        if self.d ** len(self._base) >= 2**62:
            raise SocleSizeError("base too long for integer keys")
        self._radix = np.array([self.d**i for i in range(len(self._base))], dtype=np.int64)
        keys = np.concatenate([self._keys(self.E[lo:lo + CHUNK]) for lo in range(0, self.N, CHUNK)])
        self._order_idx = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._order_idx]
        if len(np.unique(self._sorted_keys)) != self.N:
            raise RuntimeError("duplicate elements in enumeration")
        # direct-address table when the key space is small
        self._dense = None
        space = self.d ** len(self._base)
        if space <= DENSE_LIMIT:
            dense = np.full(space, -1, dtype=np.int32)
            dense[self._sorted_keys] = self._order_idx
            self._dense = dense
        self.inv = np.concatenate([self.index_of(np.argsort(self.E[lo:lo + CHUNK], axis=1))
                                   for lo in range(0, self.N, CHUNK)])
        self.order = self._orders()
        self._classes()

    # -- element arithmetic -------------------------------------------------

    def _keys(self, imgs: np.ndarray) -> np.ndarray:
        return imgs[..., self._base].astype(np.int64) @ self._radix

    def _lookup(self, keys: np.ndarray) -> np.ndarray:
        if self._dense is not None:
            idx = self._dense[keys]
            if np.any(idx < 0):
                raise KeyError("permutation not in the overgroup")
            return idx.astype(np.int64)
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, self.N - 1)
        if not np.all(self._sorted_keys[pos] == keys):
            raise KeyError("permutation not in the overgroup")
        return self._order_idx[pos]

    def index_of(self, imgs: np.ndarray, verify: bool = True) -> np.ndarray:
        """Indices of full image arrays (last axis = degree)."""
        imgs = np.asarray(imgs)
        idx = self._lookup(self._keys(imgs))
        if verify:
            flat_idx = idx.reshape(-1)
            flat = imgs.reshape(-1, self.d)
            for lo in range(0, len(flat_idx), CHUNK):
                if not np.array_equal(self.E[flat_idx[lo:lo + CHUNK]], flat[lo:lo + CHUNK]):
                    raise KeyError("permutation not in the overgroup")
        return idx

    def index_of_perm(self, p: Permutation) -> int:
        return int(self.index_of(np.array(p.images)[None, :])[0])

    def perm(self, i: int) -> Permutation:
        return Permutation(self.E[i].tolist(), check=False)

    def mul(self, a, b) -> np.ndarray:
        """Indices of E[a] o E[b]; either argument may be an index array."""
        A = self.E[a]
        B = self.E[b]
        if A.ndim == 1 and B.ndim == 1:
            return self.index_of(A[B][None, :])[0]
        if A.ndim == 1:
            return self.index_of(A[B])
        if B.ndim == 1:
            return self.index_of(A[:, B])
        return self.index_of(np.take_along_axis(A, B.astype(np.intp), axis=1))

    def power(self, i: int, k: int) -> int:
        k %= int(self.order[i])
        img = np.arange(self.d)
        base = self.E[i].astype(np.intp)
        while k:
            if k & 1:
                img = base[img]
            base = base[base]
            k >>= 1
        return int(self.index_of(img[None, :])[0])

    def _orders(self) -> np.ndarray:
        ident = np.arange(self.d)
        order = np.zeros(self.N, dtype=np.int32)
        for lo in range(0, self.N, CHUNK):
            E = self.E[lo:lo + CHUNK].astype(np.intp)
            P = E.copy()
            sub = order[lo:lo + CHUNK]
            k = 1
            while True:
                sub[(sub == 0) & np.all(P == ident, axis=1)] = k
                if np.all(sub):
                    break
                P = np.take_along_axis(E, P, axis=1)
                k += 1
        return order

    # -- L-conjugacy classes of H0 --------------------------------------------

    def _conj_map(self, c: int) -> np.ndarray:
        cimg = self.E[c]
        cinv = self.E[self.inv[c]].astype(np.intp)
        out = np.empty(self.N, dtype=np.int64)
        for lo in range(0, self.N, CHUNK):
            out[lo:lo + CHUNK] = self.index_of(cimg[self.E[lo:lo + CHUNK][:, cinv]], verify=False)
        return out

    def _classes(self):
        Lgens = [self.index_of_perm(g) for g in self.entry.L_gens]
        rows, cols = [], []
        for c in Lgens:
            m = self._conj_map(c)
            rows.append(np.arange(self.N))
            cols.append(m)
        rows = np.concatenate(rows)
        cols = np.concatenate(cols)
        graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(self.N, self.N))
        _, comp = connected_components(graph, directed=True, connection="weak")
        # relabel by smallest member index
        first = np.full(comp.max() + 1, self.N, dtype=np.int64)
        np.minimum.at(first, comp, np.arange(self.N))
        order_of_comp = np.argsort(first, kind="stable")
        relabel = np.empty_like(order_of_comp)
        relabel[order_of_comp] = np.arange(len(order_of_comp))
        self.cls = relabel[comp].astype(np.int32)
        K = len(order_of_comp)
        self.num_classes = K
        self.class_rep = np.sort(first)
        self.class_size = np.bincount(self.cls, minlength=K)
        if np.any(self.n % self.class_size):
            raise RuntimeError("class size does not divide |L|")
        self.class_cent = self.n // self.class_size
        self.class_order = self.order[self.class_rep]
        self.class_coset = self.coset[self.class_rep]
        self.class_pow = []
        for c in range(K):
            r = int(self.class_rep[c])
            row = [int(self.cls[self.power(r, k)]) for k in range(int(self.class_order[c]))]
            self.class_pow.append(row)
        # induced action of coset representatives on classes
        self.q_class_perm = []
        for q, rep in enumerate(self.coset_reps):
            h = int(self.index_of(np.array(rep)[None, :])[0])
            hinv = int(self.inv[h])
            imgs = self.mul(h, self.mul(self.class_rep, hinv))
            self.q_class_perm.append(self.cls[imgs].astype(np.int32))
        self.class_name = self._name_classes()
        self._orb_cache: dict[tuple[int, int], int] = {}

    def _name_classes(self) -> list[str]:
        names = [""] * self.num_classes
        groups: dict[tuple[int, int], list[int]] = {}
        for c in range(self.num_classes):
            groups.setdefault((int(self.class_coset[c]), int(self.class_order[c])), []).append(c)
        for (q, o), members in groups.items():
            members.sort(key=lambda c: (-int(self.class_cent[c]), c))
            for k, c in enumerate(members):
                letter = string.ascii_uppercase[k] if k < 26 else f"_{k}"
                names[c] = f"{o}{letter}" if q == 0 else f"{o}{letter}'{q}"
        return names

    def class_pow_of(self, c: int, k: int) -> int:
        row = self.class_pow[c]
        return row[k % len(row)]

    # -- action on Omega --------------------------------------------------------

    def check_pair(self, u: int, v: int):
        if self.coset[u] != self.coset[v]:
            raise CosetMismatch(f"uL != vL for pair ({u}, {v})")

    def act(self, u: int, v: int) -> np.ndarray:
        """Permutation of Omega = {0..n-1}: i -> index(u * e_i * v^-1)."""
        self.check_pair(u, v)
        EL = self.E[: self.n].astype(np.intp)
        vinv = self.E[self.inv[v]].astype(np.intp)
        uimg = self.E[u].astype(np.intp)
        return self.index_of(uimg[EL[:, vinv]])

    def act_many(self, us, vs) -> np.ndarray:
        """Batch action on Omega as a (len(us), n) array.

        Only the images of the base points are formed, which pins down the
        product inside H0; uL = vL guarantees the product lies in L.
        """
        us = np.asarray(us)
        vs = np.asarray(vs)
        if np.any(self.coset[us] != self.coset[vs]):
            raise CosetMismatch("uL != vL in batch")
        base = np.array(self._base, dtype=np.intp)
        EL = self.E[: self.n]
        pts = self.E[self.inv[vs]][:, base].astype(np.intp)      # (B, k): v^-1(b_j)
        rows = np.arange(len(us))[None, :]
        U = self.E[us].astype(np.int64)
        keys = None
        for j in range(len(base)):
            mid = EL[:, pts[:, j]]                                 # (n, B): e_i v^-1 (b_j)
            term = (U * int(self._radix[j]))[rows, mid]
            keys = term if keys is None else keys + term
        return self._lookup(keys).T

    def fixed_points(self, u: int, v: int) -> int:
        """Closed form: |C_L(u)| if u and v are L-conjugate, else 0."""
        self.check_pair(u, v)
        cu, cv = int(self.cls[u]), int(self.cls[v])
        return int(self.class_cent[cu]) if cu == cv else 0

    def fixed_points_direct(self, u: int, v: int) -> int:
        """Count x in L with u x v^-1 = x by brute force."""
        return int(np.count_nonzero(self.act(u, v) == np.arange(self.n)))

    def class_fixed(self, c1: int, c2: int) -> int:
        return int(self.class_cent[c1]) if c1 == c2 else 0

    def class_orb(self, c1: int, c2: int) -> int:
        """Orb of any pair with coordinate classes (c1, c2), via the totient identity."""
        key = (c1, c2)
        hit = self._orb_cache.get(key)
        if hit is not None:
            return hit
        m = lcm(int(self.class_order[c1]), int(self.class_order[c2]))
        total = 0
        for dd in divisors(m):
            total += euler_phi(m // dd) * self.class_fixed(self.class_pow_of(c1, dd),
                                                           self.class_pow_of(c2, dd))
        if total % m:
            raise ArithmeticError("non-integral orbit count; class data corrupt")
        self._orb_cache[key] = total // m
        return total // m

    def pair_order(self, u: int, v: int) -> int:
        return lcm(int(self.order[u]), int(self.order[v]))

    def pair_class(self, u: int, v: int) -> tuple[int, int]:
        return int(self.cls[u]), int(self.cls[v])

    # -- quotient Q = H0/L --------------------------------------------------------

    @property
    def num_cosets(self) -> int:
        return len(self.coset_reps)

    def q_closure(self, labels) -> frozenset[int]:
        out = {0}
        frontier = list(set(labels) | {0})
        out |= set(frontier)
        while frontier:
            nxt = []
            for a in list(out):
                for b in frontier:
                    for c in (self.q_mul[a][b], self.q_mul[b][a]):
                        if c not in out:
                            out.add(c)
                            nxt.append(c)
            frontier = nxt
        return frozenset(out)

    def q_subgroups(self) -> list[frozenset[int]]:
        nq = self.num_cosets
        subs = set()
        for k in range(nq + 1):
            for combo in combinations(range(1, nq), k):
                s = frozenset((0,) + combo)
                if all(self.q_mul[a][b] in s for a in s for b in s):
                    subs.add(s)
        return sorted(subs, key=lambda s: (len(s), sorted(s)))

    def q_structure(self, sub: frozenset[int]) -> str:
        size = len(sub)
        if size == 1:
            return "1"
        if any(self.q_order[x] == size for x in sub):
            return f"C{size}"
        if size == 4:
            return "C2xC2"
        return f"Q{size}"


@dataclass(frozen=True)
class PairElement:
    u: int
    v: int

    def __iter__(self):
        yield self.u
        yield self.v


@dataclass
class ClassRep:
    pair: PairElement
    order: int
    coset: int
    classes: tuple[int, int]
    granularity: str = "coordinatewise-L-class"
    size: int | None = None


class TypeBGroup:
    def __init__(self, model: SocleModel, q0: frozenset[int]):
        if 0 not in q0 or any(model.q_mul[a][b] not in q0 for a in q0 for b in q0):
            raise ValueError("Q0 must be a subgroup of Q")
        self.model = model
        self.q0 = frozenset(q0)
        self.n = model.n
        self.order = model.n ** 2 * len(q0)
        struct = model.q_structure(self.q0)
        if struct == "1":
            self.label = f"{model.label}^2"
        else:
            same = [s for s in model.q_subgroups() if model.q_structure(s) == struct]
            tag = "" if len(same) == 1 else "<" + ",".join(map(str, sorted(self.q0))) + ">"
            self.label = f"{model.label}^2.{struct}{tag}"
        # generators: (l,1), (1,l), (h,h) for generators of Q0
        Lg = [model.index_of_perm(g) for g in model.entry.L_gens]
        gens = [PairElement(l, 0) for l in Lg] + [PairElement(0, l) for l in Lg]
        span = frozenset({0})
        for q in sorted(self.q0):
            if q not in span:
                h = int(model.index_of(np.array(model.coset_reps[q])[None, :])[0])
                gens.append(PairElement(h, h))
                span = model.q_closure(span | {q})
        self.generators = gens
        self.proj_order = model.n * len(self.q0)

    def __repr__(self) -> str:
        return f"TypeBGroup({self.label}, order={self.order})"

    def contains(self, pair) -> bool:
        u, v = pair
        m = self.model
        return m.coset[u] == m.coset[v] and int(m.coset[u]) in self.q0

    def pair_perm(self, pair) -> Permutation:
        """Faithful degree-2d representation: u on points 0..d-1, v on d..2d-1."""
        u, v = pair
        d = self.model.d
        E = self.model.E
        return Permutation(E[u].tolist() + (E[v].astype(np.int64) + d).tolist(), check=False)

    def generates(self, pairs) -> bool:
        gens = [self.pair_perm(p) for p in pairs]
        H = PermGroup(gens, 2 * self.model.d, known_order=self.order)
        return H.order == self.order

    def stabilizer_generators(self) -> list[PairElement]:
        """Generators of the stabilizer of the identity point: the diagonal {(h, h)}."""
        m = self.model
        Lg = [m.index_of_perm(g) for g in m.entry.L_gens]
        out = [PairElement(l, l) for l in Lg]
        out += [g for g in self.generators if g.u == g.v and g.u != 0]
        return out

    def g_class_key(self, c1: int, c2: int) -> tuple[int, int]:
        """Canonical label of the G-class containing coordinate classes (c1, c2)."""
        m = self.model
        return min((int(m.q_class_perm[q][c1]), int(m.q_class_perm[q][c2])) for q in self.q0)

    def g_class_name(self, c1: int, c2: int) -> str:
        a, b = self.g_class_key(c1, c2)
        names = self.model.class_name
        return f"({names[a]},{names[b]})"

    def class_pairs(self, order: int | None = None) -> list[tuple[int, int]]:
        m = self.model
        out = []
        for c1 in range(m.num_classes):
            q = int(m.class_coset[c1])
            if q not in self.q0:
                continue
            for c2 in range(m.num_classes):
                if int(m.class_coset[c2]) != q:
                    continue
                if order is None or lcm(int(m.class_order[c1]), int(m.class_order[c2])) == order:
                    out.append((c1, c2))
        return out

    @cached_property
    def element_orders(self) -> list[int]:
        m = self.model
        return sorted({lcm(int(m.class_order[a]), int(m.class_order[b])) for a, b in self.class_pairs()})

    def random_elements(self, rng: np.random.Generator, count: int) -> tuple[np.ndarray, np.ndarray]:
        m = self.model
        qs = np.array(sorted(self.q0))
        q = qs[rng.integers(len(qs), size=count)]
        u = q * m.n + rng.integers(m.n, size=count)
        v = q * m.n + rng.integers(m.n, size=count)
        return u, v

    def all_elements(self):
        """Iterate (u-array, v) blocks covering G: for every v, all compatible u."""
        m = self.model
        for q in sorted(self.q0):
            us = np.arange(q * m.n, (q + 1) * m.n)
            for v in range(q * m.n, (q + 1) * m.n):
                yield us, v


def enumerate_socle(entry: AtlasEntry | str, max_socle: int = MAX_SOCLE) -> SocleModel:
    if isinstance(entry, str):
        entry = get_entry(entry)
    return SocleModel(entry, max_socle=max_socle)


_MODELS: dict[str, SocleModel] = {}


def get_model(label: str) -> SocleModel:
    if label not in _MODELS:
        _MODELS[label] = enumerate_socle(get_entry(label))
    return _MODELS[label]


def build_type_b(model: SocleModel, q0) -> TypeBGroup:
    return TypeBGroup(model, frozenset(q0) | {0})


def catalog_type_b(label: str) -> list[TypeBGroup]:
    model = get_model(label)
    groups = []
    seen = set()
    for sub in model.q_subgroups():
        G = TypeBGroup(model, sub)
        key = (G.order, G.q0)
        if key in seen:
            continue
        seen.add(key)
        groups.append(G)
    return groups


def class_reps(G: TypeBGroup, order_filter=None) -> list[ClassRep]:
    m = G.model
    orders = None
    if order_filter is not None:
        orders = {order_filter} if isinstance(order_filter, int) else set(order_filter)
    out = []
    for c1, c2 in G.class_pairs():
        o = lcm(int(m.class_order[c1]), int(m.class_order[c2]))
        if orders is not None and o not in orders:
            continue
        pair = PairElement(int(m.class_rep[c1]), int(m.class_rep[c2]))
        out.append(ClassRep(pair, o, int(m.class_coset[c1]), (c1, c2),
                            size=int(m.class_size[c1]) * int(m.class_size[c2])))
    return out


def act(model: SocleModel, pair) -> Permutation:
    u, v = pair
    return Permutation(model.act(u, v).tolist(), check=False)


def fixed_points(model: SocleModel, pair) -> int:
    u, v = pair
    return model.fixed_points(u, v)


# -- verification of the diagonal structure -------------------------------------

def _in_left_regular(model: SocleModel, perm: np.ndarray) -> bool:
    """perm equals left multiplication by the element it sends the identity to."""
    x = int(perm[0])
    EL = model.E[: model.n].astype(np.intp)
    return np.array_equal(model.index_of(model.E[x].astype(np.intp)[EL]), perm)


def _in_right_regular(model: SocleModel, perm: np.ndarray) -> bool:
    """perm equals i -> e_i * y^-1 with y^-1 = e_{perm(0)}."""
    y_inv = model.E[int(perm[0])].astype(np.intp)
    EL = model.E[: model.n].astype(np.intp)
    return np.array_equal(model.index_of(EL[:, y_inv]), perm)


def _omega_orbit(gens: list[np.ndarray], n: int) -> int:
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    while len(frontier):
        nxt = np.unique(np.concatenate([g[frontier] for g in gens]))
        nxt = nxt[~seen[nxt]]
        seen[nxt] = True
        frontier = nxt
    return int(seen.sum())


def verify_type_b(G: TypeBGroup, extra_omega_gens=(), extra_stabilizer_gens=()) -> dict:
    """Certify the type-B structure from the action on Omega.

    ``extra_omega_gens`` adjoins raw Omega permutations (used to show that a
    coordinate-swapping extension is rejected).
    """
    m = G.model
    n = m.n
    checks = []

    def check(name, ok, detail=""):
        checks.append((name, bool(ok), detail))

    gens = [m.act(p.u, p.v) for p in G.generators] + [np.asarray(g) for g in extra_omega_gens]
    ident = np.arange(n)
    Lg = [m.index_of_perm(g) for g in m.entry.L_gens]
    left = [m.act(l, 0) for l in Lg]
    right = [m.act(0, l) for l in Lg]

    cent = [c for c in centralizer_in_symmetric(m.entry.L_gens, m.d)
            if not c.is_identity() and m.entry.H0().contains(c)]
    nontrivial = all(not np.array_equal(g, ident) for g in gens)
    check("faithful", not cent and nontrivial,
          "C_H0(L) = 1 so only (1,1) fixes every point; generators act nontrivially")

    def conj(g, x):
        ginv = np.argsort(g)
        return g[x[ginv]]

    norm_left = all(_in_left_regular(m, conj(g, x)) for g in gens for x in left)
    norm_right = all(_in_right_regular(m, conj(g, x)) for g in gens for x in right)
    check("normal-Lx1", norm_left, "generators normalize left multiplications")
    check("normal-1xL", norm_right, "generators normalize right multiplications")
    commute = all(np.array_equal(a[b], b[a]) for a in left for b in right)
    trans_left = _omega_orbit(left, n) == n
    trans_right = _omega_orbit(right, n) == n
    check("regular-Lx1", commute and trans_left and trans_right,
          "Lx1 and 1xL transitive and mutually centralizing, hence both regular of order |L|")
    transitive = _omega_orbit(gens, n) == n
    check("transitive", transitive, "orbit of the identity point is Omega")
    if transitive:
        perms = [Permutation(g.tolist(), check=False) for g in gens]
        stab = [Permutation(m.act(p.u, p.v).tolist(), check=False) for p in G.stabilizer_generators()]
        stab += [Permutation(np.asarray(g).tolist(), check=False) for g in extra_stabilizer_gens]
        check("primitive", is_primitive(perms, n, stab), "minimal blocks through 0 and one point per suborbit")
    else:
        check("primitive", False, "not transitive")
    return {"group": G.label, "order": G.order, "degree": n, "checks": checks,
            "ok": all(ok for _, ok, _ in checks)}


def swap_extension(model: SocleModel) -> np.ndarray:
    """Omega permutation x -> x^-1; adjoining it mixes the two coordinates (not type B)."""
    return model.inv[: model.n].copy()
