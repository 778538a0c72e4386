"""Exact rationals, Euler's totient and small finite fields."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

Rational = Fraction

# Coefficient lists, constant term first, monic.
IRREDUCIBLE = {
    4: (1, 1, 1),        # x^2 + x + 1
    8: (1, 1, 0, 1),     # x^3 + x + 1
    9: (1, 0, 1),        # x^2 + 1
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
    25: (2, 4, 1),       # x^2 - x + 2
}

CATALOG_Q = (2, 3, 4, 7, 8, 9, 13, 16, 25)


def rational(value, den=None) -> Fraction:
    """Parse ints, 'p/q' strings or Fractions into an exact rational."""
    if den is not None:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return Fraction(value, den)
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(value)


def fmt(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def factorize(m: int) -> dict[int, int]:
    if m < 1:
        raise ValueError("factorize needs m >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("euler_phi is defined for m >= 1")
    result = m
    for p in factorize(m):
        result -= result // p
    return result


def divisors(m: int) -> list[int]:
    small = [d for d in range(1, int(m**0.5) + 1) if m % d == 0]
    return sorted(set(small + [m // d for d in small]))


def prime_power(q: int) -> tuple[int, int]:
    f = factorize(q) if q > 1 else {}
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, e), = f.items()
    return p, e


@dataclass(frozen=True)
class FieldTable:
    """F_q with elements encoded as 0..q-1 (base-p digits, low degree first)."""

    q: int
    p: int
    e: int
    modulus: tuple[int, ...]
    add: tuple[tuple[int, ...], ...] = field(repr=False)
    mul: tuple[tuple[int, ...], ...] = field(repr=False)
    primitive: int = 0
    exp: tuple[int, ...] = field(default=(), repr=False)
    log: dict = field(default_factory=dict, repr=False)

    @property
    def elements(self) -> range:
        return range(self.q)

    def neg(self, a: int) -> int:
        return self.add[a].index(0)

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg(b)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k > 0 else 1
        return self.exp[(self.log[a] * k) % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def from_int(self, k: int) -> int:
        return k % self.p


def _poly_mul_mod(a: list[int], b: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    e = len(mod) - 1
    prod_ = [0] * (2 * e)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod_[i + j] = (prod_[i + j] + x * y) % p
    for k in range(2 * e - 1, e - 1, -1):
        c = prod_[k]
        if c:
            for j in range(e + 1):
                prod_[k - e + j] = (prod_[k - e + j] - c * mod[j]) % p
    return prod_[:e]


def _digits(k: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        out.append(k % p)
        k //= p
    return out


def _undigits(ds: list[int], p: int) -> int:
    return sum(d * p**i for i, d in enumerate(ds))


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldTable:
    p, e = prime_power(q)
    if q > 256 or e > 4:
        raise ValueError(f"field size {q} outside supported range")
    mod = IRREDUCIBLE.get(q)
    if mod is None:
        mod = (0, 1) if e == 1 else _find_irreducible(p, e)
    digits = [_digits(k, p, e) for k in range(q)]
    add = tuple(tuple(_undigits([(x + y) % p for x, y in zip(digits[a], digits[b])], p)
                      for b in range(q)) for a in range(q))
    if e == 1:
        mul = tuple(tuple(a * b % p for b in range(q)) for a in range(q))
    else:
        mul = tuple(tuple(_undigits(_poly_mul_mod(digits[a], digits[b], mod, p), p)
                          for b in range(q)) for a in range(q))
    if any(mul[a][b] == 0 for a in range(1, q) for b in range(1, q)):
        raise ValueError(f"modulus {mod} is reducible over F_{p}")
    prim = None
    for g in range(2 if q > 2 else 1, q):
        x, seen = 1, 0
        for k in range(1, q):
            x = mul[x][g]
            if x == 1:
                seen = k
                break
        if seen == q - 1:
            prim = g
            break
    exp = [1]
    for _ in range(q - 2):
        exp.append(mul[exp[-1]][prim])
    log = {x: k for k, x in enumerate(exp)}
    return FieldTable(q, p, e, tuple(mod), add, mul, prim, tuple(exp), log)


def _find_irreducible(p: int, e: int) -> tuple[int, ...]:
    for coeffs in product(range(p), repeat=e):
        mod = tuple(coeffs) + (1,)
        if coeffs[0] == 0:
            continue
        q = p**e
        digits = [_digits(k, p, e) for k in range(q)]
        ok = all(_undigits(_poly_mul_mod(digits[a], digits[b], mod, p), p)
                 for a in range(1, q) for b in range(1, q))
        if ok:
            return mod
    raise ValueError("no irreducible polynomial found")


def check_field_axioms(F: FieldTable) -> list[str]:
    """Exhaustive axiom check; returns a list of violated axioms."""
    q, A, M = F.q, F.add, F.mul
    bad = []
    R = range(q)
    if any(A[a][0] != a or M[a][1] != a for a in R):
        bad.append("identities")
    if any(A[a][b] != A[b][a] or M[a][b] != M[b][a] for a in R for b in R):
        bad.append("commutativity")
    for a in R:
        for b in R:
            ab, mab = A[a][b], M[a][b]
            for c in R:
                if A[ab][c] != A[a][A[b][c]]:
                    bad.append("add-associativity")
                    return bad
                if M[mab][c] != M[a][M[b][c]]:
                    bad.append("mul-associativity")
                    return bad
                if M[a][A[b][c]] != A[M[a][b]][M[a][c]]:
                    bad.append("distributivity")
                    return bad
    if any(0 not in A[a] for a in R):
        bad.append("additive-inverses")
    if any(1 not in M[a] for a in range(1, q)):
        bad.append("multiplicative-inverses")
    if len(set(F.exp)) != q - 1:
        bad.append("primitive-element")
    frob = [F.frobenius(a) for a in R]
    if sorted(frob) != list(R) or any(frob[M[a][b]] != M[frob[a]][frob[b]] for a in R for b in R):
        bad.append("frobenius")
    return bad
