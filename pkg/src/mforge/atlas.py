"""Concrete permutation models of the simple groups L and overgroups H0 >= L.

Each entry carries generators of L and of H0 (the H0 list includes the L
generators), where L is normal in H0 and C_{H0}(L) = 1, so that the
diagonal action of {(u, v) in H0^2 : uL = vL} on L is faithful.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from pathlib import Path

from .algebra import FieldTable, make_field, prime_power
from .perm import Permutation, PermGroup


class GroupFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class AtlasInvariantError(ValueError):
    def __init__(self, invariant: str, detail: str = ""):
        super().__init__(f"invariant '{invariant}' violated" + (f": {detail}" if detail else ""))
        self.invariant = invariant


@dataclass
class AtlasEntry:
    label: str
    degree: int
    L_gens: list[Permutation]
    H0_gens: list[Permutation]
    order_L: int
    order_H0: int
    _groups: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def index(self) -> int:
        return self.order_H0 // self.order_L

    def L(self) -> PermGroup:
        if "L" not in self._groups:
            self._groups["L"] = PermGroup(self.L_gens, self.degree, known_order=self.order_L)
        return self._groups["L"]

    def H0(self) -> PermGroup:
        if "H0" not in self._groups:
            self._groups["H0"] = PermGroup(self.H0_gens, self.degree, known_order=self.order_H0)
        return self._groups["H0"]

    def __eq__(self, other) -> bool:
        if not isinstance(other, AtlasEntry):
            return NotImplemented
        return (self.label, self.degree, self.L_gens, self.H0_gens, self.order_L, self.order_H0) == \
            (other.label, other.degree, other.L_gens, other.H0_gens, other.order_L, other.order_H0)


# -- alternating groups ------------------------------------------------------

def build_alternating(M: int, with_overgroup: bool = True, natural: bool = False) -> AtlasEntry:
    if M < 5:
        raise ValueError("alternating socle needs M >= 5")
    if M > 12:
        raise ValueError("alternating groups above A_12 are not catalogued")
    if M == 6 and not natural:
        entry = build_projective(9)
        entry.label = "a6"
        if not with_overgroup:
            entry.H0_gens = list(entry.L_gens)
            entry.order_H0 = entry.order_L
        return entry
    c3 = Permutation.from_cycles(M, (0, 1, 2))
    if M % 2:
        long = Permutation.from_cycles(M, tuple(range(M)))
    else:
        long = Permutation.from_cycles(M, tuple(range(1, M)))
    L_gens = [c3, long]
    H0_gens = list(L_gens)
    order_H0 = math.factorial(M) // 2
    if with_overgroup:
        H0_gens.append(Permutation.from_cycles(M, (0, 1)))
        order_H0 *= 2
    label = f"a{M}" + ("_natural" if M == 6 else "")
    return AtlasEntry(label, M, L_gens, H0_gens, math.factorial(M) // 2, order_H0)


# -- PSL_2(q) on the projective line ------------------------------------------

def psl2_order(q: int) -> int:
    return q * (q * q - 1) // math.gcd(2, q - 1)


def _mobius(F: FieldTable, a: int, b: int, c: int, d: int) -> Permutation:
    inf = F.q
    M, A = F.mul, F.add
    img = []
    for x in range(F.q + 1):
        if x == inf:
            img.append(inf if c == 0 else M[a][F.inv(c)])
            continue
        num = A[M[a][x]][b]
        den = A[M[c][x]][d]
        img.append(inf if den == 0 else M[num][F.inv(den)])
    return Permutation(img)


def build_projective(q: int) -> AtlasEntry:
    p, e = prime_power(q)
    F = make_field(q)
    lam = F.primitive
    one, zero = 1, 0
    minus_one = F.neg(1)
    L_gens = [
        _mobius(F, one, one, zero, one),               # x -> x + 1
        _mobius(F, F.mul[lam][lam], zero, zero, one),  # x -> lam^2 x
        _mobius(F, zero, minus_one, one, zero),        # x -> -1/x
    ]
    H0_gens = list(L_gens)
    if q % 2:
        H0_gens.append(_mobius(F, lam, zero, zero, one))
    if e > 1:
        H0_gens.append(Permutation([F.frobenius(x) for x in range(q)] + [q]))
    order_L = psl2_order(q)
    order_H0 = q * (q * q - 1) * e
    return AtlasEntry(f"psl2_{q}", q + 1, L_gens, H0_gens, order_L, order_H0)


# -- classical groups -------------------------------------------------------

def _normalize(F: FieldTable, v: tuple[int, ...]) -> tuple[int, ...]:
    for x in v:
        if x:
            s = F.inv(x)
            return tuple(F.mul[s][y] for y in v)
    raise ValueError("zero vector")


def _vec_add(F, u, v):
    return tuple(F.add[a][b] for a, b in zip(u, v))


def _scale(F, a, v):
    return tuple(F.mul[a][x] for x in v)


def _close_transvections(points, index, transvection_maps, order: int, degree: int):
    """Greedily pick transvections until they generate a group of ``order``."""
    gens: list[Permutation] = []
    group = None
    for t in transvection_maps:
        perm = Permutation([index[t(pt)] for pt in points])
        if perm.is_identity():
            continue
        if group is not None and group.contains(perm):
            continue
        gens.append(perm)
        group = PermGroup(gens, degree, known_order=order)
        if group.order == order:
            return gens
    raise RuntimeError("transvections failed to generate the expected group")


def _symplectic_sp6_2() -> AtlasEntry:
    F = make_field(2)
    vecs = [tuple((k >> i) & 1 for i in range(6)) for k in range(1, 64)]
    index = {v: i for i, v in enumerate(vecs)}

    def form(x, y):
        return (x[0] * y[3] + x[3] * y[0] + x[1] * y[4] + x[4] * y[1]
                + x[2] * y[5] + x[5] * y[2]) % 2

    def transvection(v):
        return lambda x: _vec_add(F, x, v) if form(x, v) else x

    order = 2**9 * 3**4 * 5 * 7
    gens = _close_transvections(vecs, index, [transvection(v) for v in vecs], order, 63)
    return AtlasEntry("sp6_2", 63, gens, list(gens), order, order)


def _unitary(n: int, q0: int, label: str, order_L: int) -> AtlasEntry:
    """PSU_n(q0) on isotropic points of sum x_i y_i^q0 over F_{q0^2}, plus the field automorphism."""
    q = q0 * q0
    F = make_field(q)

    def sigma(a):
        return F.pow(a, q0)

    def form(x, y):
        acc = 0
        for a, b in zip(x, y):
            acc = F.add[acc][F.mul[a][sigma(b)]]
        return acc

    points = sorted({_normalize(F, v) for v in product(range(q), repeat=n)
                     if any(v) and form(v, v) == 0}, key=lambda v: v[::-1])
    index = {v: i for i, v in enumerate(points)}
    trace_zero = [a for a in range(1, q) if F.add[a][sigma(a)] == 0]

    def transvection(v, a):
        def t(x):
            c = F.mul[a][form(x, v)]
            return _normalize(F, _vec_add(F, x, _scale(F, c, v))) if c else x
        return t

    maps = [transvection(v, a) for v in points for a in trace_zero]
    gens = _close_transvections(points, index, maps, order_L, len(points))
    frob = Permutation([index[_normalize(F, tuple(sigma(x) for x in v))] for v in points])
    return AtlasEntry(label, len(points), gens, gens + [frob], order_L, 2 * order_L)


def psu_order(n: int, q: int) -> int:
    num = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        num *= q**i - (-1) ** i
    return num // math.gcd(n, q + 1)


def build_classical(which: str) -> AtlasEntry:
    if which == "sp6_2":
        return _symplectic_sp6_2()
    if which == "u3_3":
        return _unitary(3, 3, "u3_3", psu_order(3, 3))
    if which == "u4_2":
        return _unitary(4, 2, "u4_2", psu_order(4, 2))
    raise ValueError(f"unknown classical group {which!r}")


# -- catalog ----------------------------------------------------------------

CATALOG = ("a5", "a6", "a7", "a8", "psl2_7", "psl2_8", "psl2_9", "psl2_13",
           "psl2_16", "psl2_25", "u3_3", "u4_2", "sp6_2")
EXTRA = ("a6_natural",)

CLASSICAL_ORDER = {"sp6_2": 2**9 * 3**4 * 5 * 7, "u3_3": 6048, "u4_2": 25920}


def formula_order(label: str) -> int:
    """Order of L from the classical order formulas (independent of any BSGS)."""
    if label.startswith("a"):
        return math.factorial(int(label[1:].split("_")[0])) // 2
    if label.startswith("psl2_"):
        return psl2_order(int(label[5:]))
    if label == "sp6_2":
        return 2**9 * (2**2 - 1) * (2**4 - 1) * (2**6 - 1)
    if label == "u3_3":
        return psu_order(3, 3)
    if label == "u4_2":
        return psu_order(4, 2)
    raise KeyError(label)


def _data_dir() -> Path | None:
    d = os.environ.get("MFORGE_DATA_DIR")
    return Path(d) if d else None


@lru_cache(maxsize=None)
def get_entry(label: str) -> AtlasEntry:
    """Catalog lookup; a file ``<label>.grp`` in $MFORGE_DATA_DIR takes precedence."""
    d = _data_dir()
    if d is not None and (d / f"{label}.grp").exists():
        return load_group_file(d / f"{label}.grp")
    if label == "a6_natural":
        return build_alternating(6, natural=True)
    if label.startswith("a") and label[1:].isdigit():
        return build_alternating(int(label[1:]))
    if label.startswith("psl2_") and label[5:].isdigit():
        return build_projective(int(label[5:]))
    if label in CLASSICAL_ORDER:
        return build_classical(label)
    raise KeyError(f"unknown atlas label {label!r}")


# -- group data files -------------------------------------------------------

def dumps_group(entry: AtlasEntry) -> str:
    lines = [f"# {entry.label}: |L| = {entry.order_L}, |H0| = {entry.order_H0}",
             f"degree {entry.degree}",
             f"label {entry.label}",
             f"order_L {entry.order_L}",
             f"order_H0 {entry.order_H0}",
             "[L]"]
    lines += ["g: " + " ".join(map(str, g.images)) for g in entry.L_gens]
    lines.append("[H0]")
    lines += ["g: " + " ".join(map(str, g.images)) for g in entry.H0_gens]
    return "\n".join(lines) + "\n"


def save_group_file(entry: AtlasEntry, path) -> None:
    Path(path).write_text(dumps_group(entry), encoding="utf-8", newline="\n")


def loads_group(text: str, verify: bool = True) -> AtlasEntry:
    degree = None
    header: dict[str, str] = {}
    sections: dict[str, list[Permutation]] = {"L": [], "H0": []}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line in ("[L]", "[H0]"):
            if degree is None:
                raise GroupFileError("section before 'degree' header", lineno)
            current = line[1:-1]
            continue
        if line.startswith("g:"):
            if current is None:
                raise GroupFileError("generator outside a section", lineno)
            try:
                images = [int(tok) for tok in line[2:].split()]
            except ValueError:
                raise GroupFileError("non-integer in image list", lineno) from None
            if len(images) != degree:
                raise GroupFileError(f"expected {degree} images, got {len(images)}", lineno)
            try:
                sections[current].append(Permutation(images))
            except ValueError:
                raise GroupFileError("image list is not a permutation", lineno) from None
            continue
        key, _, value = line.partition(" ")
        if key == "degree":
            try:
                degree = int(value)
            except ValueError:
                raise GroupFileError("bad degree", lineno) from None
        elif key in ("label", "order_L", "order_H0") and current is None:
            header[key] = value.strip()
        else:
            raise GroupFileError(f"unrecognized line {line!r}", lineno)
    if degree is None:
        raise GroupFileError("missing 'degree' header")
    if not sections["L"]:
        raise GroupFileError("empty [L] section")
    if not sections["H0"]:
        sections["H0"] = list(sections["L"])
    L = PermGroup(sections["L"], degree)
    H0 = PermGroup(sections["H0"], degree)
    entry = AtlasEntry(header.get("label", "custom"), degree, sections["L"], sections["H0"],
                       int(header.get("order_L", L.order)), int(header.get("order_H0", H0.order)))
    entry._groups.update(L=L, H0=H0)
    if verify:
        for name, ok, detail in verify_atlas(entry)["checks"]:
            if not ok:
                raise AtlasInvariantError(name, detail)
    return entry


def load_group_file(path, verify: bool = True) -> AtlasEntry:
    return loads_group(Path(path).read_text(encoding="utf-8"), verify=verify)


# -- verification -------------------------------------------------------------

def centralizer_in_symmetric(gens: list[Permutation], degree: int) -> list[Permutation]:
    """All permutations commuting with a transitive group given by ``gens``.

    Such a permutation c is fixed by c(0): c(g(x)) = g(c(x)) propagates it.
    """
    out = []
    imgs = [g.images for g in gens]
    for j in range(degree):
        c = [-1] * degree
        c[0] = j
        queue = [0]
        ok = True
        for x in queue:
            for g in imgs:
                y, cy = g[x], g[c[x]]
                if c[y] == -1:
                    c[y] = cy
                    queue.append(y)
                elif c[y] != cy:
                    ok = False
                    break
            if not ok:
                break
        if ok and -1 not in c and len(set(c)) == degree:
            out.append(Permutation(c, check=False))
    return out


def verify_atlas(entry: AtlasEntry) -> dict:
    checks = []

    def check(name, ok, detail=""):
        checks.append((name, bool(ok), detail))

    L = PermGroup(entry.L_gens, entry.degree)
    H0 = PermGroup(entry.H0_gens, entry.degree)
    check("order", L.order == entry.order_L, f"BSGS |L| = {L.order}, expected {entry.order_L}")
    try:
        fo = formula_order(entry.label.replace("_natural", ""))
        check("formula-order", fo == L.order, f"formula {fo}")
    except KeyError:
        pass
    check("overgroup-order", H0.order == entry.order_H0,
          f"BSGS |H0| = {H0.order}, expected {entry.order_H0}")
    check("containment", all(H0.contains(g) for g in entry.L_gens), "L <= H0")
    normal = all(L.contains(h * l * h.inverse()) for h in entry.H0_gens for l in entry.L_gens)
    check("normality", normal, "h l h^-1 in L for all generators")
    transitive = L.is_transitive()
    check("transitivity", transitive, "L transitive on the model points")
    if transitive:
        cent = [c for c in centralizer_in_symmetric(entry.L_gens, entry.degree)
                if not c.is_identity() and H0.contains(c)]
        check("centralizer", not cent, f"{len(cent)} nontrivial elements of H0 centralize L")
    else:
        check("centralizer", False, "centralizer test requires a transitive L")
    return {"label": entry.label, "order_L": L.order, "order_H0": H0.order,
            "index": H0.order // L.order if L.order else 0,
            "checks": checks, "ok": all(ok for _, ok, _ in checks)}
