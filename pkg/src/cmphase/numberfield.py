"""Exact arithmetic for the rational field and quadratic fields Q(sqrt(d)).

Elements are written x + y*omega where omega = sqrt(d) (d != 1 mod 4) or
omega = (1 + sqrt(d))/2 (d = 1 mod 4).  Integral ideals are stored as
Hermite-normal-form lattices Z*a + Z*(b + c*omega).  Everything is plain
Python integers, so there is no overflow anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from sympy import sqrt_mod
from sympy.ntheory import isprime, primerange


def _squarefree(n: int) -> bool:
    n = abs(n)
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


class NumberField:
    """The rational field (d is None) or the quadratic field Q(sqrt(d))."""

    def __init__(self, d: Optional[int] = None):
        if d is not None:
            if d in (0, 1) or not _squarefree(d):
                raise ValueError(f"d must be a squarefree integer != 0, 1, got {d}")
        self.d = d
        if d is None:
            self.discriminant = 1
            self.omega_half = False
            self.real_embedding_count = 1
            self.degree = 1
        else:
            self.omega_half = d % 4 == 1
            self.discriminant = d if self.omega_half else 4 * d
            self.real_embedding_count = 2 if d > 0 else 0
            self.degree = 2
        # omega^2 = omega_lin * omega + omega_const
        if d is None:
            self.omega_lin, self.omega_const = 0, 0
        elif self.omega_half:
            self.omega_lin, self.omega_const = 1, (d - 1) // 4
        else:
            self.omega_lin, self.omega_const = 0, d

    @property
    def is_rational(self) -> bool:
        return self.d is None

    @property
    def is_real_quadratic(self) -> bool:
        return self.d is not None and self.d > 0

    @property
    def is_imaginary_quadratic(self) -> bool:
        return self.d is not None and self.d < 0

    def element(self, x: int, y: int = 0) -> "AlgebraicInteger":
        return AlgebraicInteger(self, x, y)

    def one(self) -> "AlgebraicInteger":
        return self.element(1)

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.d == other.d

    def __hash__(self) -> int:
        return hash(("NumberField", self.d))

    def __repr__(self) -> str:
        return "Q" if self.is_rational else f"Q(sqrt({self.d}))"

    def to_config(self) -> str:
        return "Q" if self.is_rational else f"Q(sqrt,{self.d})"

    @staticmethod
    def from_config(spec: str) -> "NumberField":
        spec = spec.strip()
        if spec == "Q":
            return NumberField()
        if spec.startswith("Q(sqrt,") and spec.endswith(")"):
            return NumberField(int(spec[len("Q(sqrt,"):-1]))
        raise ValueError(f"unrecognized field spec {spec!r}")


@dataclass(frozen=True)
class AlgebraicInteger:
    field: NumberField
    x: int
    y: int = 0

    def __post_init__(self):
        if self.field.is_rational and self.y != 0:
            raise ValueError("rational elements must have y = 0")

    def __add__(self, other: "AlgebraicInteger") -> "AlgebraicInteger":
        return AlgebraicInteger(self.field, self.x + other.x, self.y + other.y)

    def __sub__(self, other: "AlgebraicInteger") -> "AlgebraicInteger":
        return AlgebraicInteger(self.field, self.x - other.x, self.y - other.y)

    def __neg__(self) -> "AlgebraicInteger":
        return AlgebraicInteger(self.field, -self.x, -self.y)

    def __mul__(self, other: "AlgebraicInteger") -> "AlgebraicInteger":
        F = self.field
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        yy = y1 * y2
        return AlgebraicInteger(
            F,
            x1 * x2 + F.omega_const * yy,
            x1 * y2 + x2 * y1 + F.omega_lin * yy,
        )

    def __pow__(self, n: int) -> "AlgebraicInteger":
        if n < 0:
            raise ValueError("negative powers are not integral")
        r = self.field.one()
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def conjugate(self) -> "AlgebraicInteger":
        if self.field.is_rational:
            return self
        if self.field.omega_half:  # omega' = 1 - omega
            return AlgebraicInteger(self.field, self.x + self.y, -self.y)
        return AlgebraicInteger(self.field, self.x, -self.y)

    def norm(self) -> int:
        """Signed field norm N(x + y*omega)."""
        F = self.field
        if F.is_rational:
            return self.x
        if F.omega_half:
            m = (F.d - 1) // 4
            return self.x * self.x + self.x * self.y - m * self.y * self.y
        return self.x * self.x - F.d * self.y * self.y

    def abs_norm(self) -> int:
        return abs(self.norm())

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def omega_mul(self) -> "AlgebraicInteger":
        F = self.field
        return AlgebraicInteger(
            F, F.omega_const * self.y, self.x + F.omega_lin * self.y
        )

    def embedding_signs(self) -> tuple[int, ...]:
        """Sign of the element under each real embedding, exactly.

        For real quadratic fields the two embeddings send sqrt(d) to
        +sqrt(d) and -sqrt(d).  Signs are decided by integer comparisons
        (compare x^2 with d*y^2), never by floating point.
        """
        F = self.field
        if self.is_zero():
            raise ValueError("zero has no sign")
        if F.is_rational:
            return (1 if self.x > 0 else -1,)
        if F.is_imaginary_quadratic:
            return ()
        # value under embedding: (u + s*v*sqrt(d)) / 2 for s = +1, -1
        if F.omega_half:
            u, v = 2 * self.x + self.y, self.y
        else:
            u, v = 2 * self.x, 2 * self.y
        return (_sign_u_plus_v_sqrt(u, v, F.d), _sign_u_plus_v_sqrt(u, -v, F.d))

    def __repr__(self) -> str:
        if self.field.is_rational or self.y == 0:
            return str(self.x)
        w = "w" if self.field.omega_half else f"sqrt({self.field.d})"
        return f"({self.x}+{self.y}{w})"


def _sign_u_plus_v_sqrt(u: int, v: int, d: int) -> int:
    """Exact sign of u + v*sqrt(d) for d > 0 and (u, v) != (0, 0)."""
    if v == 0:
        return 1 if u > 0 else -1
    if u == 0:
        return 1 if v > 0 else -1
    if u > 0 and v > 0:
        return 1
    if u < 0 and v < 0:
        return -1
    # opposite signs: compare u^2 with d*v^2
    if u * u > d * v * v:
        return 1 if u > 0 else -1
    return 1 if v > 0 else -1


def element_norm(x: AlgebraicInteger) -> int:
    """Signed norm; N(xR) = abs(element_norm(x))."""
    return x.norm()


# ---------------------------------------------------------------------------
# Ideals
# ---------------------------------------------------------------------------

class Ideal:
    """Integral (or fractional, via a denominator) ideal in HNF.

    The lattice is Z*a + Z*(b + c*omega), divided by `den`.  Over Q we fix
    c = 1 and b = 0 so that the ideal is (a/den)*Z with norm a/den.
    """

    __slots__ = ("field", "a", "b", "c", "den")

    def __init__(self, field: NumberField, a: int, b: int, c: int, den: int = 1):
        if a <= 0 or c <= 0 or den <= 0:
            raise ValueError("HNF entries a, c and den must be positive")
        g = math.gcd(math.gcd(a, b), math.gcd(c, den))
        if g > 1:
            a, b, c, den = a // g, b // g, c // g, den // g
        self.field = field
        self.a = a
        self.b = b % a
        self.c = c
        self.den = den

    # -- constructors -------------------------------------------------

    @staticmethod
    def unit(field: NumberField) -> "Ideal":
        return Ideal(field, 1, 0, 1)

    @staticmethod
    def from_vectors(field: NumberField, vecs: list[tuple[int, int]]) -> "Ideal":
        """HNF basis of the Z-span of coordinate vectors (x, y)."""
        if field.is_rational:
            a = 0
            for x, _ in vecs:
                a = math.gcd(a, x)
            if a == 0:
                raise ValueError("zero lattice")
            return Ideal(field, a, 0, 1)
        c = 0
        b0 = 0
        for x, y in vecs:
            if y == 0:
                continue
            if c == 0:
                b0, c = x, y
            else:
                g, s, t = _xgcd(c, y)
                b0, c = s * b0 + t * x, g
        if c < 0:
            b0, c = -b0, -c
        a = 0
        for x, y in vecs:
            if c:
                x = x - (y // c) * b0
            a = math.gcd(a, x)
        if a == 0 or c == 0:
            raise ValueError("lattice is not of full rank")
        return Ideal(field, a, b0 % a, c)

    @staticmethod
    def from_generators(field: NumberField, gens: list[AlgebraicInteger]) -> "Ideal":
        """Ideal generated by the given elements."""
        vecs = []
        for g in gens:
            vecs.append((g.x, g.y))
            if not field.is_rational:
                gw = g.omega_mul()
                vecs.append((gw.x, gw.y))
        return Ideal.from_vectors(field, vecs)

    @staticmethod
    def principal(g: AlgebraicInteger) -> "Ideal":
        if g.is_zero():
            raise ValueError("zero generates the zero ideal")
        return Ideal.from_generators(g.field, [g])

    # -- basic queries -------------------------------------------------

    @property
    def is_integral(self) -> bool:
        return self.den == 1

    def norm(self) -> Fraction:
        if self.field.is_rational:
            return Fraction(self.a, self.den)
        return Fraction(self.a * self.c, self.den * self.den)

    def norm_int(self) -> int:
        n = self.norm()
        if n.denominator != 1:
            raise ValueError("norm of a fractional ideal is not an integer")
        return n.numerator

    def basis_elements(self) -> tuple[AlgebraicInteger, AlgebraicInteger]:
        F = self.field
        return F.element(self.a, 0), F.element(self.b, self.c)

    def contains(self, e: AlgebraicInteger) -> bool:
        """Membership of an algebraic integer (integral ideals only)."""
        if not self.is_integral:
            raise ValueError("membership is implemented for integral ideals")
        if self.field.is_rational:
            return e.x % self.a == 0
        if e.y % self.c != 0:
            return False
        return (e.x - (e.y // self.c) * self.b) % self.a == 0

    def is_ideal_lattice(self) -> bool:
        """Check closure of the HNF lattice under multiplication by omega."""
        F = self.field
        if F.is_rational:
            return True
        if self.a % self.c or self.b % self.c:
            return False
        e1, e2 = self.basis_elements()
        t = Ideal(F, self.a, self.b, self.c)
        return t.contains(e1.omega_mul()) and t.contains(e2.omega_mul())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ideal)
            and self.field == other.field
            and (self.a, self.b, self.c, self.den)
            == (other.a, other.b, other.c, other.den)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.a, self.b, self.c, self.den))

    def sort_key(self) -> tuple:
        return (self.norm(), self.a, self.b, self.c)

    def __repr__(self) -> str:
        if self.field.is_rational:
            core = f"({self.a})"
        else:
            core = f"[{self.a}, {self.b}+{self.c}w]"
        return core if self.den == 1 else f"{core}/{self.den}"

    # -- arithmetic ------------------------------------------------------

    def __mul__(self, other: "Ideal") -> "Ideal":
        F = self.field
        if F != other.field:
            raise ValueError("ideals live in different fields")
        if F.is_rational:
            return Ideal(F, self.a * other.a, 0, 1, self.den * other.den)
        e1, e2 = self.basis_elements()
        f1, f2 = other.basis_elements()
        prod = Ideal.from_generators(F, [e1 * f1, e1 * f2, e2 * f1, e2 * f2])
        return Ideal(F, prod.a, prod.b, prod.c, self.den * other.den)

    def __add__(self, other: "Ideal") -> "Ideal":
        """Ideal sum (gcd); integral ideals only."""
        if not (self.is_integral and other.is_integral):
            raise ValueError("ideal sum is implemented for integral ideals")
        F = self.field
        vecs = [(self.a, 0), (self.b, self.c), (other.a, 0), (other.b, other.c)]
        return Ideal.from_vectors(F, vecs)

    def conjugate(self) -> "Ideal":
        F = self.field
        if F.is_rational:
            return self
        e1, e2 = self.basis_elements()
        out = Ideal.from_generators(F, [e1.conjugate(), e2.conjugate()])
        return Ideal(F, out.a, out.b, out.c, self.den)

    def scale(self, num: int, den: int = 1) -> "Ideal":
        """Multiply by the rational number num/den."""
        if num <= 0 or den <= 0:
            raise ValueError("scale factors must be positive")
        return Ideal(self.field, self.a * num, self.b * num, self.c * num,
                     self.den * den)

    def mul_element(self, g: AlgebraicInteger) -> "Ideal":
        """Product with the principal ideal gR."""
        return self * Ideal.principal(g)

    def divide_exact(self, other: "Ideal") -> "Ideal":
        """Quotient self * other^{-1} assuming other divides self exactly."""
        n = other.norm_int()
        q = self * other.conjugate()
        if q.a % n or q.b % n or q.c % n:
            raise ValueError("ideal does not divide")
        return Ideal(self.field, q.a // n, q.b // n, q.c // n, q.den)

    def is_coprime(self, other: "Ideal") -> bool:
        return (self + other) == Ideal.unit(self.field)

    def contains_ideal(self, other: "Ideal") -> bool:
        e1, e2 = other.basis_elements()
        return self.contains(e1) and self.contains(e2)

    def valuation(self, p: "PrimeIdeal") -> int:
        """v_p of an integral ideal."""
        if not self.is_integral:
            raise ValueError("valuation is implemented for integral ideals")
        v = 0
        cur = self
        while p.ideal.contains_ideal(cur):
            cur = cur.divide_exact(p.ideal)
            v += 1
        return v

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {"hnf": [self.a, self.b, self.c], "den": self.den}

    @staticmethod
    def from_json(field: NumberField, obj: dict) -> "Ideal":
        a, b, c = obj["hnf"]
        return Ideal(field, a, b, c, obj.get("den", 1))


@dataclass(frozen=True)
class PrimeIdeal:
    ideal: Ideal
    residue_char: int
    residue_degree: int
    ramified: bool

    def norm_int(self) -> int:
        return self.residue_char ** self.residue_degree

    def __repr__(self) -> str:
        return f"P{self.residue_char}{'r' if self.ramified else ''}:{self.ideal!r}"


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    g, s, t = math.gcd(a, b), 0, 0
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def ideal_mul(a: Ideal, b: Ideal) -> Ideal:
    return a * b


def factor_rational_prime(field: NumberField, p: int) -> list[tuple[PrimeIdeal, int]]:
    """Split/inert/ramified decomposition of pR."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if field.is_rational:
        pi = PrimeIdeal(Ideal(field, p, 0, 1), p, 1, False)
        return [(pi, 1)]
    roots = _min_poly_roots_mod_p(field, p)
    if roots is None:  # inert
        pr = Ideal(field, p, 0, p)
        return [(PrimeIdeal(pr, p, 2, False), 1)]
    if len(roots) == 1:  # ramified
        r = roots[0]
        pr = Ideal.from_generators(field, [field.element(p), field.element(-r, 1)])
        return [(PrimeIdeal(pr, p, 1, True), 2)]
    out = []
    for r in sorted(roots):
        pr = Ideal.from_generators(field, [field.element(p), field.element(-r, 1)])
        out.append((PrimeIdeal(pr, p, 1, False), 1))
    out.sort(key=lambda t: t[0].ideal.sort_key())
    return out


def _min_poly_roots_mod_p(field: NumberField, p: int) -> Optional[list[int]]:
    """Roots mod p of the minimal polynomial of omega; None if irreducible."""
    d = field.d
    if field.omega_half:
        m = (d - 1) // 4
        if p == 2:
            roots = [t for t in (0, 1) if (t * t - t - m) % 2 == 0]
            return roots if roots else None
        if d % p == 0:
            # double root (1 + s)/2 with s = 0
            return [(1 * pow(2, -1, p)) % p]
        s = sqrt_mod(d % p, p, all_roots=False)
        if s is None:
            return None
        inv2 = pow(2, -1, p)
        r1, r2 = ((1 + s) * inv2) % p, ((1 - s) * inv2) % p
        return sorted({r1, r2}) if r1 != r2 else [r1]
    # omega = sqrt(d)
    if p == 2:
        # t^2 - d mod 2: root t = d mod 2, always a double root
        return [d % 2]
    if d % p == 0:
        return [0]
    s = sqrt_mod(d % p, p, all_roots=False)
    if s is None:
        return None
    s %= p
    return sorted({s, p - s}) if s != 0 else [0]


def prime_ideals_up_to(
    field: NumberField, X: int, coprime_to: Optional[Ideal] = None
) -> list[PrimeIdeal]:
    """All prime ideals of norm <= X, optionally coprime to a given ideal."""
    out: list[PrimeIdeal] = []
    for p in primerange(2, X + 1):
        for pr, _ in factor_rational_prime(field, p):
            if pr.norm_int() > X:
                continue
            if coprime_to is not None and pr.ideal.contains_ideal(coprime_to):
                continue
            out.append(pr)
    out.sort(key=lambda pr: (pr.norm_int(),) + pr.ideal.sort_key())
    return out


def enumerate_ideals(
    field: NumberField, X: int, coprime_to: Optional[Ideal] = None
) -> Iterator[Ideal]:
    """All integral ideals of norm <= X in nondecreasing norm order.

    Ideals are produced by multiplying out prime-ideal powers; the
    brute-force HNF scan lives in the test-suite oracle only.
    """
    if X < 1:
        raise ValueError("norm bound must be >= 1")
    primes = prime_ideals_up_to(field, X, coprime_to)
    found: list[Ideal] = []

    def rec(i: int, cur: Ideal, n: int):
        found.append(cur)
        for j in range(i, len(primes)):
            q = primes[j].norm_int()
            if n * q > X:
                break
            rec(j + 1, _power_chain(cur, primes[j], n, X), n * q)

    def _power_chain(cur: Ideal, pr: PrimeIdeal, n: int, X: int):
        return cur * pr.ideal

    # expand prime powers explicitly to keep "each exactly once"
    def rec2(i: int, cur: Ideal, n: int):
        found.append(cur)
        for j in range(i, len(primes)):
            q = primes[j].norm_int()
            m, acc = n, cur
            while m * q <= X:
                acc = acc * primes[j].ideal
                m *= q
                rec2(j + 1, acc, m)

    found.clear()
    rec2(0, Ideal.unit(field), 1)
    found.sort(key=Ideal.sort_key)
    yield from found


# ---------------------------------------------------------------------------
# Units and principality
# ---------------------------------------------------------------------------

def _isqrt_exact(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


@lru_cache(maxsize=None)
def unit_group(field: NumberField) -> tuple[int, Optional[AlgebraicInteger]]:
    """(torsion order, fundamental unit or None)."""
    if field.is_rational:
        return 2, None
    d = field.d
    if d < 0:
        if d == -1:
            return 4, None
        if d == -3:
            return 6, None
        return 2, None
    return 2, _fundamental_unit(field)


def _fundamental_unit(field: NumberField) -> AlgebraicInteger:
    """Fundamental unit of a real quadratic field.

    The continued fraction of sqrt(d) yields the fundamental solution of
    x^2 - d y^2 = +-1, i.e. the fundamental unit of Z[sqrt(d)].  For
    d = 1 mod 4 the full ring of integers may contain a smaller unit
    (t + v sqrt(d))/2 with t^2 - d v^2 = +-4; we search for it below the
    continued-fraction bound.
    """
    d = field.d
    h, k = _pell_by_continued_fraction(d)
    if not field.omega_half:
        return field.element(h, k)
    # x + y*omega with omega = (1+sqrt(d))/2: unit (t + v sqrt(d))/2
    for v in range(1, 2 * k + 1):
        t2 = d * v * v
        for delta in (-4, 4):
            t = _isqrt_exact(t2 + delta)
            if t is not None and (t - v) % 2 == 0:
                return field.element((t - v) // 2, v)
    # unreachable: (2h, 2k) is always a solution of t^2 - d v^2 = +-4
    raise AssertionError("fundamental unit search failed")


def _pell_by_continued_fraction(d: int) -> tuple[int, int]:
    """Smallest (h, k) with h, k > 0 and h^2 - d k^2 = +-1."""
    a0 = math.isqrt(d)
    m, q, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while h * h - d * k * k not in (1, -1):
        m = q * a - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return h, k


def torsion_units(field: NumberField) -> list[AlgebraicInteger]:
    """All roots of unity in the ring of integers."""
    order, _ = unit_group(field)
    one = field.one()
    if order == 2:
        return [one, -one]
    if order == 4:  # Q(i), omega = i
        i = field.element(0, 1)
        return [one, i, -one, -i]
    # Q(sqrt(-3)), omega = (1+sqrt(-3))/2 is a primitive 6th root of unity
    w = field.element(0, 1)
    out, cur = [], one
    for _ in range(6):
        out.append(cur)
        cur = cur * w
    return out


def is_principal(I: Ideal) -> Optional[AlgebraicInteger]:
    """A generator g with gR = I, or None.

    Imaginary quadratic: bounded norm-form search.  Real quadratic: the
    search window covers one fundamental-unit period in the first
    embedding, so every principal ideal has a generator inside it.
    """
    if not I.is_integral:
        raise ValueError("principality test expects an integral ideal")
    F = I.field
    if F.is_rational:
        return F.element(I.a)
    n = I.norm_int()
    if n == 1:
        return F.one()
    d = F.d
    if d < 0:
        for g in _norm_form_solutions_imaginary(F, n):
            if Ideal.principal(g) == I:
                return g
        return None
    eps = _fundamental_unit(F)
    eps_val = _embed_float(eps)
    if eps_val < 1:
        eps_val = 1 / eps_val
    delta = math.sqrt(d) if F.omega_half else 2 * math.sqrt(d)
    ybound = int(math.sqrt(n) * (eps_val + 1) / delta) + 2
    for g in _norm_form_solutions_real(F, n, ybound):
        if Ideal.principal(g) == I:
            return g
    return None


def _embed_float(e: AlgebraicInteger) -> float:
    F = e.field
    if F.is_rational:
        return float(e.x)
    w = (1 + math.sqrt(F.d)) / 2 if F.omega_half else math.sqrt(F.d)
    return e.x + e.y * w


def _norm_form_solutions_imaginary(F: NumberField, n: int) -> Iterator[AlgebraicInteger]:
    d = -F.d
    if F.omega_half:
        # 4n = (2x+y)^2 + d y^2
        ymax = math.isqrt(4 * n // d)
        for y in range(-ymax, ymax + 1):
            s = _isqrt_exact(4 * n - d * y * y)
            if s is None:
                continue
            for sg in ({s, -s}):
                if (sg - y) % 2 == 0:
                    yield F.element((sg - y) // 2, y)
    else:
        ymax = math.isqrt(n // d)
        for y in range(-ymax, ymax + 1):
            s = _isqrt_exact(n - d * y * y)
            if s is None:
                continue
            for sg in ({s, -s}):
                yield F.element(sg, y)


def _norm_form_solutions_real(
    F: NumberField, n: int, ybound: int
) -> Iterator[AlgebraicInteger]:
    d = F.d
    for y in range(-ybound, ybound + 1):
        if F.omega_half:
            base = d * y * y
            for tgt in (base + 4 * n, base - 4 * n):
                s = _isqrt_exact(tgt)
                if s is None:
                    continue
                for sg in ({s, -s}):
                    if (sg - y) % 2 == 0:
                        yield F.element((sg - y) // 2, y)
        else:
            base = d * y * y
            for tgt in (base + n, base - n):
                s = _isqrt_exact(tgt)
                if s is None:
                    continue
                for sg in ({s, -s}):
                    yield F.element(sg, y)
