"""Exact arithmetic in cyclotomic fields Q(zeta_m).

An element of Q(zeta_m) is stored as a dense vector of phi(m) Fractions over
the power basis 1, z, ..., z^(phi(m)-1), reduced modulo the m-th cyclotomic
polynomial.  That representation is canonical, so equality is coordinatewise
once both operands sit in a common field; mixed-modulus operations embed both
sides into Q(zeta_lcm) first.  Everything is exact: no floats enter any
verdict (floats are used only to *guess* a root-of-unity exponent, which is
then verified exactly).

Reduction exploits that Phi_m(x) = Phi_rad(m)(x^(m/rad(m))) and Phi of a
squarefree number has few terms, so reducing a degree < 2m polynomial costs
O(m * terms) coefficient operations.

All values are immutable after construction and safe to share between
workers.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: e} by trial division (desk-scale inputs)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def _divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # den is monic; exact integer division, remainder must vanish
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dd]
        q[i] = c
        if c:
            for j, dc in enumerate(den):
                num[i + j] -= c * dc
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def _cyclotomic_dense(r: int) -> tuple[int, ...]:
    """Coefficients of the r-th cyclotomic polynomial for squarefree r."""
    if r == 1:
        return (-1, 1)
    num = [-1] + [0] * (r - 1) + [1]
    for d in _divisors(r)[:-1]:
        num = _polydiv_exact(num, list(_cyclotomic_dense(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_tail(m: int) -> tuple[tuple[int, int], ...]:
    """Phi_m = x^phi(m) + tail; returns the tail as ((exponent, coeff), ...)."""
    rad = 1
    for p in factorize(m):
        rad *= p
    s = m // rad
    dense = _cyclotomic_dense(rad)
    return tuple((e * s, c) for e, c in enumerate(dense[:-1]) if c)


def _reduce(vec: list, m: int) -> list:
    """Reduce coefficients of a polynomial in zeta_m modulo Phi_m, in place."""
    phi = euler_phi(m)
    tail = _reduction_tail(m)
    for e in range(len(vec) - 1, phi - 1, -1):
        c = vec[e]
        if c:
            vec[e] = 0
            base = e - phi
            for te, tc in tail:
                vec[base + te] -= c * tc
    del vec[phi:]
    return vec


class CyclotomicNumber:
    """An element of Q(zeta_m) in reduced power-basis coordinates."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        if m < 1:
            raise ValueError("modulus must be >= 1")
        phi = euler_phi(m)
        vec = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if len(vec) > phi:
            vec = _reduce(vec, m)
        elif len(vec) < phi:
            vec += [Fraction(0)] * (phi - len(vec))
        self.m = m
        self.coeffs = tuple(vec)

    @classmethod
    def from_rational(cls, x, m: int = 1) -> "CyclotomicNumber":
        return cls(m, [Fraction(x)])

    @classmethod
    def zero(cls, m: int = 1) -> "CyclotomicNumber":
        return cls(m, [])

    @classmethod
    def one(cls, m: int = 1) -> "CyclotomicNumber":
        return cls(m, [1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.coeffs[0]

    def embed(self, m2: int) -> "CyclotomicNumber":
        """The same number inside Q(zeta_m2); requires m | m2."""
        if m2 == self.m:
            return self
        if m2 % self.m:
            raise ValueError(f"cannot embed Q(zeta_{self.m}) into Q(zeta_{m2})")
        scale = m2 // self.m
        vec = [Fraction(0)] * m2
        for j, c in enumerate(self.coeffs):
            if c:
                vec[j * scale] += c
        return CyclotomicNumber(m2, vec)

    def _pair(self, other: "CyclotomicNumber"):
        if self.m == other.m:
            return self, other
        L = math.lcm(self.m, other.m)
        return self.embed(L), other.embed(L)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(other)
        elif isinstance(other, RootOfUnity):
            other = other.to_cyclotomic()
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._pair(other)
        return CyclotomicNumber(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, RootOfUnity):
            other = other.to_cyclotomic()
        return self + (-other if isinstance(other, CyclotomicNumber) else CyclotomicNumber.from_rational(-Fraction(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CyclotomicNumber(self.m, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return CyclotomicNumber.zero(self.m)
            return CyclotomicNumber(self.m, [c * other for c in self.coeffs])
        if isinstance(other, RootOfUnity):
            other = other.to_cyclotomic()
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._pair(other)
        n = len(a.coeffs)
        out = [Fraction(0)] * (2 * n - 1)
        nz = [(j, c) for j, c in enumerate(b.coeffs) if c]
        for i, ci in enumerate(a.coeffs):
            if ci:
                for j, cj in nz:
                    out[i + j] += ci * cj
        return CyclotomicNumber(a.m, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division only by nonzero rationals; everything in scope has this shape
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined here; use conjugate for modulus-one values")
        out = CyclotomicNumber.one(self.m)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, RootOfUnity):
            other = other.to_cyclotomic()
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.m, self.coeffs))

    def galois(self, k: int) -> "CyclotomicNumber":
        """Apply the automorphism zeta_m -> zeta_m^k; k must be prime to m."""
        k %= self.m
        if math.gcd(k, self.m) != 1:
            raise ValueError(f"k={k} is not prime to m={self.m}")
        vec = [Fraction(0)] * self.m
        for j, c in enumerate(self.coeffs):
            if c:
                vec[(j * k) % self.m] += c
        return CyclotomicNumber(self.m, vec)

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(-1)

    def approx(self) -> complex:
        """Float approximation under zeta_m -> exp(2*pi*i/m); guesses only."""
        z = 0j
        for j, c in enumerate(self.coeffs):
            if c:
                z += float(c) * cmath.exp(2j * cmath.pi * j / self.m)
        return z

    def to_json(self) -> dict:
        den = math.lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1
        return {"m": self.m, "num": [int(c * den) for c in self.coeffs], "den": den}

    @classmethod
    def from_json(cls, obj: dict) -> "CyclotomicNumber":
        den = obj["den"]
        return cls(obj["m"], [Fraction(n, den) for n in obj["num"]])

    def __repr__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                mono = f"z{self.m}" + (f"^{j}" if j > 1 else "")
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


class RootOfUnity:
    """zeta_m^k in lowest terms: gcd(k, m) = 1 and k = 0 only for the value 1."""

    __slots__ = ("m", "k")

    def __init__(self, m: int, k: int):
        if m < 1:
            raise ValueError("modulus must be >= 1")
        k %= m
        if k == 0:
            m = 1
        else:
            g = math.gcd(k, m)
            m //= g
            k //= g
        self.m = m
        self.k = k

    @property
    def order(self) -> int:
        return self.m

    def __mul__(self, other):
        if isinstance(other, RootOfUnity):
            L = math.lcm(self.m, other.m)
            return RootOfUnity(L, self.k * (L // self.m) + other.k * (L // other.m))
        if isinstance(other, CyclotomicNumber):
            return self.to_cyclotomic() * other
        return NotImplemented

    def __pow__(self, e: int):
        return RootOfUnity(self.m, (self.k * e) % self.m)

    def inverse(self) -> "RootOfUnity":
        return self**-1

    conjugate = inverse

    def __eq__(self, other):
        if isinstance(other, RootOfUnity):
            return self.m == other.m and self.k == other.k
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return self.to_cyclotomic() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.k))

    def to_cyclotomic(self, ambient: int | None = None) -> CyclotomicNumber:
        m = self.m if ambient is None else ambient
        if m % self.m:
            raise ValueError(f"order {self.m} does not divide ambient modulus {m}")
        return root_of_unity(m, self.k * (m // self.m))

    def to_json(self) -> dict:
        return {"m": self.m, "k": self.k}

    @classmethod
    def from_json(cls, obj: dict) -> "RootOfUnity":
        return cls(obj["m"], obj["k"])

    def __repr__(self):
        if self.m == 1:
            return "1"
        if self.m == 2:
            return "-1"
        return f"z{self.m}" + (f"^{self.k}" if self.k != 1 else "")


ONE = RootOfUnity(1, 0)
MINUS_ONE = RootOfUnity(2, 1)


def sign_root(s: int) -> RootOfUnity:
    """The root of unity +1 or -1 from an integer sign."""
    if s == 1:
        return ONE
    if s == -1:
        return MINUS_ONE
    raise ValueError("sign must be +1 or -1")


class GaloisElement:
    """An automorphism of Q(zeta_m) given by zeta -> zeta^k with gcd(k, m) = 1."""

    __slots__ = ("m", "k")

    def __init__(self, m: int, k: int):
        k %= m
        if math.gcd(k, m) != 1:
            raise ValueError(f"k={k} is not prime to m={m}")
        self.m = m
        self.k = k

    @classmethod
    def identity(cls, m: int) -> "GaloisElement":
        return cls(m, 1)

    def __mul__(self, other: "GaloisElement") -> "GaloisElement":
        if self.m != other.m:
            raise ValueError("composition needs equal moduli")
        return GaloisElement(self.m, self.k * other.k)

    def __eq__(self, other):
        return isinstance(other, GaloisElement) and (self.m, self.k) == (other.m, other.k)

    def __hash__(self):
        return hash(("galois", self.m, self.k))

    def __call__(self, x):
        return galois_apply(x, self)

    def __repr__(self):
        return f"GaloisElement({self.m}, {self.k})"


def root_of_unity(m: int, k: int) -> CyclotomicNumber:
    """zeta_m^k as an exact element of Q(zeta_m)."""
    k %= m
    vec = [Fraction(0)] * m
    vec[k] = Fraction(1)
    return CyclotomicNumber(m, vec)


def embed(x: CyclotomicNumber, m2: int) -> CyclotomicNumber:
    return x.embed(m2)


def galois_apply(x, sigma) -> CyclotomicNumber:
    """Apply sigma (a GaloisElement or a plain exponent k) to x."""
    if isinstance(sigma, GaloisElement):
        if isinstance(x, RootOfUnity):
            if sigma.m % x.m:
                raise ValueError("automorphism modulus must be a multiple of the value's order")
            return x**sigma.k
        if sigma.m % x.m:
            raise ValueError("automorphism modulus must be a multiple of the value's modulus")
        return x.galois(sigma.k)
    if isinstance(x, RootOfUnity):
        return x**int(sigma)
    return x.galois(int(sigma))


def sqrt_pstar(p: int) -> CyclotomicNumber:
    """Exact square root of p* = (-1)^((p-1)/2) * p, inside Q(zeta_p).

    For odd p this is the classical quadratic Gauss sum sum_t zeta_p^(t^2);
    for p = 2 it is zeta_8 + zeta_8^-1 = sqrt(2).
    """
    if p == 2:
        return root_of_unity(8, 1) + root_of_unity(8, 7)
    vec = [0] * p
    for t in range(p):
        vec[(t * t) % p] += 1
    return CyclotomicNumber(p, vec)


def sqrt_p(p: int) -> CyclotomicNumber:
    """The positive real square root of an odd prime p, inside Q(zeta_4p)."""
    if p == 2:
        raise ValueError("use sqrt_pstar(2), which already equals sqrt(2)")
    e = (-p * ((p - 1) // 2) ** 2) % (4 * p)
    return sqrt_pstar(p).embed(4 * p) * root_of_unity(4 * p, e)


def _normalized_root(m: int, j: int, negated: bool) -> RootOfUnity:
    if not negated:
        return RootOfUnity(m, j)
    if m % 2 == 0:
        return RootOfUnity(m, j + m // 2)
    return RootOfUnity(2 * m, 2 * j + m)


def _shift_reduce(vec: list, m: int) -> list:
    vec.insert(0, Fraction(0))
    return _reduce(vec, m)


def as_root_of_unity(x: CyclotomicNumber) -> RootOfUnity | None:
    """Detect whether x is exactly a root of unity; None otherwise.

    Roots of unity in Q(zeta_m) have order dividing lcm(2, m).  A float
    argument only suggests the candidate exponent; the verdict is the exact
    coordinate comparison, with an exhaustive scan as fallback.
    """
    if x.is_zero():
        return None
    if x.is_rational():
        r = x.rational_value()
        if r == 1:
            return RootOfUnity(1, 0)
        if r == -1:
            return RootOfUnity(2, 1)
        return None
    m = x.m
    nz = [(j, c) for j, c in enumerate(x.coeffs) if c]
    if len(nz) == 1:
        j, c = nz[0]
        # a single-term reduced representation has modulus one iff c = +-1
        if c == 1:
            return _normalized_root(m, j, False)
        if c == -1:
            return _normalized_root(m, j, True)
        return None
    z = x.approx()
    scale = sum(abs(float(c)) for _, c in nz)
    if abs(abs(z) - 1.0) <= 1e-9 * max(scale, 1.0):
        M2 = m if m % 2 == 0 else 2 * m
        turns = cmath.phase(z) / (2 * math.pi)
        j0 = round(turns * M2) % M2
        xe = x.embed(M2)
        for dj in (0, 1, -1):
            cand = (j0 + dj) % M2
            if xe == root_of_unity(M2, cand):
                return RootOfUnity(M2, cand)
    # exact fallback: scan zeta_m^j and -zeta_m^j
    pos = x.coeffs
    neg = tuple(-c for c in x.coeffs)
    cur = [Fraction(1)] + [Fraction(0)] * (len(x.coeffs) - 1)
    for j in range(m):
        t = tuple(cur)
        if t == pos:
            return _normalized_root(m, j, False)
        if t == neg:
            return _normalized_root(m, j, True)
        cur = _shift_reduce(cur, m)
    return None


def decompose_root(r: RootOfUnity) -> dict[int, RootOfUnity]:
    """CRT split of zeta_m^k into prime-power order parts; product recovers r."""
    out: dict[int, RootOfUnity] = {}
    if r.m == 1:
        return out
    for ell, a in sorted(factorize(r.m).items()):
        q = ell**a
        rest = r.m // q
        out[ell] = RootOfUnity(q, (r.k * pow(rest, -1, q)) % q)
    return out


def complex_embedding(x: CyclotomicNumber, digits: int = 15):
    """Approximation of x under zeta_m -> exp(2*pi*i/m), to `digits` digits.

    Diagnostics only; verdicts elsewhere are exact.  Returns a gmpy2.mpc.
    """
    import gmpy2

    if digits < 1:
        raise ValueError("digits must be >= 1")
    prec = int(digits * 3.33) + 48
    with gmpy2.context(precision=prec):
        pi2 = 2 * gmpy2.const_pi()
        re = gmpy2.mpfr(0)
        im = gmpy2.mpfr(0)
        for j, c in enumerate(x.coeffs):
            if c:
                cf = gmpy2.mpfr(c.numerator) / gmpy2.mpfr(c.denominator)
                ang = pi2 * j / x.m
                re += cf * gmpy2.cos(ang)
                im += cf * gmpy2.sin(ang)
        return gmpy2.mpc(re, im)
