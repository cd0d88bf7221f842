"""Finite-order multiplicative characters of an unramified p-adic field K.

A character is stored as the product of
  * its value on the uniformizer p (a root of unity, `on_p`),
  * a tame part against the fixed Teichmueller generator g of the prime-to-p
    roots of unity: chi(g) = zeta_(q-1)^tame_exp, trivial on 1-units,
  * a wild logarithmic part chi_alpha(x) = psi(alpha * log x) for alpha in K,
  * for p = 2, f = 1 only: an optional quadratic component (-1)^(sign_exp * s)
    where s detects the unit part being -1 modulo 4.  The logarithmic part
    kills -1 (log of a root of unity is 0), so without this extra slot the
    quadratic characters cut out by ramified extensions of Q_2 would not be
    representable.

alpha is canonicalized to None exactly when chi_alpha is trivial, that is
when |2 alpha| <= p with |x| = p^(-v(x)).  The standard additive character
psi is x -> exp(2 pi i {Tr(x)}) with {.} the p-adic fractional part; it is
trivial on O_K and additive, and every character value is an exact root of
unity.
"""

from __future__ import annotations

import math

from .cyclotomic import GaloisElement, RootOfUnity, factorize
from .padic import PadicElement, PrecisionError, UnramifiedField


def psi(x: PadicElement) -> RootOfUnity:
    """The standard additive character: exp(2 pi i {Tr(x)}), exact."""
    fld = x.field
    if x.is_zero():
        if x.abs_prec < 0:
            raise PrecisionError("additive character needs absolute precision >= 0")
        return RootOfUnity(1, 0)
    t = fld.trace(x)
    if t.is_zero():
        if t.abs_prec < 0:
            raise PrecisionError("additive character needs absolute precision >= 0")
        return RootOfUnity(1, 0)
    if t.v >= 0:
        return RootOfUnity(1, 0)
    n = -t.v
    if t.prec < n:
        raise PrecisionError(f"need {n} digits of the trace, have {t.prec}")
    return RootOfUnity(fld.p**n, t.unit[0] % fld.p**n)


def _wild_is_trivial(alpha: PadicElement) -> bool:
    # |2 alpha| <= p, i.e. v(alpha) >= -1 for odd p, v(alpha) >= -2 for p = 2
    bound = -1 if alpha.field.p != 2 else -2
    return alpha.is_zero() or alpha.v >= bound


class MultiplicativeCharacter:
    """A finite-order character of K^*, split as tame times logarithmic."""

    __slots__ = ("field", "on_p", "tame_exp", "alpha", "sign_exp")

    def __init__(
        self,
        field: UnramifiedField,
        on_p: RootOfUnity = RootOfUnity(1, 0),
        tame_exp: int = 0,
        alpha: PadicElement | None = None,
        sign_exp: int = 0,
    ):
        self.field = field
        self.on_p = on_p
        self.tame_exp = tame_exp % (field.q - 1) if field.q > 2 else 0
        if alpha is not None and _wild_is_trivial(alpha):
            alpha = None
        if alpha is not None and alpha.field != field:
            raise ValueError("alpha lives in a different field")
        self.alpha = alpha
        sign_exp %= 2
        if sign_exp and (field.p != 2 or field.f != 1):
            raise ValueError("the quadratic sign component exists only over Q_2")
        self.sign_exp = sign_exp

    # -- evaluation ------------------------------------------------------------

    def __call__(self, x: PadicElement) -> RootOfUnity:
        if x.is_zero():
            raise ZeroDivisionError("characters are defined on K^* only")
        fld = self.field
        val = self.on_p**x.v
        if self.tame_exp:
            val = val * RootOfUnity(fld.q - 1, self.tame_exp * fld.dlog(x.residue()))
        if self.sign_exp and x.unit[0] % 4 == 3:
            val = val * RootOfUnity(2, 1)
        if self.alpha is not None:
            val = val * psi(self.alpha * fld.iwasawa_log(x.unit_part()))
        return val

    # -- invariants -------------------------------------------------------------

    def is_trivial(self) -> bool:
        return self.on_p.m == 1 and self.tame_exp == 0 and self.alpha is None and not self.sign_exp

    def is_wild(self) -> bool:
        """Nontrivial on the 1-units."""
        return self.alpha is not None or bool(self.sign_exp)

    def is_purely_wild(self) -> bool:
        return self.alpha is not None and self.on_p.m == 1 and self.tame_exp == 0 and not self.sign_exp

    def conductor_exponent(self) -> int:
        c = 0
        if self.tame_exp:
            c = 1
        if self.sign_exp:
            c = max(c, 2)
        if self.alpha is not None:
            c = max(c, -self.alpha.v)
        return c

    def wild_order(self) -> int:
        if self.alpha is None:
            return 1
        n = -self.alpha.v
        return self.field.p ** (n - 1) if self.field.p != 2 else 2 ** (n - 2)

    def order(self) -> int:
        q = self.field.q
        tame_order = (q - 1) // math.gcd(self.tame_exp, q - 1) if q > 2 else 1
        o = math.lcm(self.on_p.m, tame_order, self.wild_order())
        if self.sign_exp:
            o = math.lcm(o, 2)
        return o

    def values_field(self) -> tuple[int, int]:
        """(m_E, n): values generate Q(zeta_m_E); p^n roots of unity live there."""
        m_e = self.order()
        mu = math.lcm(2, m_e)
        return m_e, factorize(mu).get(self.field.p, 0)

    # -- algebra ---------------------------------------------------------------

    def __mul__(self, other: "MultiplicativeCharacter") -> "MultiplicativeCharacter":
        if not isinstance(other, MultiplicativeCharacter):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("characters of different fields")
        if self.alpha is None:
            alpha = other.alpha
        elif other.alpha is None:
            alpha = self.alpha
        else:
            alpha = self.alpha + other.alpha
        return MultiplicativeCharacter(
            self.field,
            self.on_p * other.on_p,
            self.tame_exp + other.tame_exp,
            alpha,
            self.sign_exp + other.sign_exp,
        )

    def __pow__(self, k: int) -> "MultiplicativeCharacter":
        alpha = None if self.alpha is None else self.alpha * k
        return MultiplicativeCharacter(
            self.field, self.on_p**k, self.tame_exp * k, alpha, self.sign_exp * k
        )

    def inverse(self) -> "MultiplicativeCharacter":
        return self**-1

    def galois_twist(self, sigma) -> "MultiplicativeCharacter":
        """The character x -> sigma(chi(x))."""
        if isinstance(sigma, GaloisElement):
            if sigma.m % self.order():
                raise ValueError("automorphism modulus must be a multiple of the order")
            k = sigma.k
        else:
            k = int(sigma)
        if math.gcd(k, self.order()) != 1:
            raise ValueError("twist exponent must be prime to the order")
        return self**k

    def adams(self, k: int) -> "MultiplicativeCharacter":
        """chi composed with x -> x^k; for degree one this is chi^k."""
        return self**k

    # sums and differences of characters promote to virtual characters
    def __add__(self, other):
        return VirtualCharacter.of(self) + other

    __radd__ = __add__

    def __sub__(self, other):
        return VirtualCharacter.of(self) - other

    def __rsub__(self, other):
        return -VirtualCharacter.of(self) + other

    # -- identity ----------------------------------------------------------------

    def key(self):
        fld = self.field
        if self.alpha is None:
            akey = ()
        else:
            n = -self.alpha.v
            depth = n - 1 if fld.p != 2 else n - 2
            m = fld.p**depth
            akey = (n, tuple(c % m for c in self.alpha.unit))
        return (fld.p, fld.f, self.on_p.m, self.on_p.k, self.tame_exp, self.sign_exp, akey)

    def __eq__(self, other):
        return isinstance(other, MultiplicativeCharacter) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        parts = []
        if self.on_p.m > 1:
            parts.append(f"on_p={self.on_p!r}")
        if self.tame_exp:
            parts.append(f"tame={self.tame_exp}")
        if self.alpha is not None:
            parts.append(f"alpha={self.alpha!r}")
        if self.sign_exp:
            parts.append("sign=1")
        return "chi(" + (", ".join(parts) if parts else "trivial") + ")"


def trivial_character(field: UnramifiedField) -> MultiplicativeCharacter:
    return MultiplicativeCharacter(field)


def chi_alpha(alpha: PadicElement) -> MultiplicativeCharacter:
    """The logarithmic character x -> psi(alpha * log x)."""
    return MultiplicativeCharacter(alpha.field, alpha=alpha)


def tame_char(field: UnramifiedField, t: int, w: RootOfUnity = RootOfUnity(1, 0)) -> MultiplicativeCharacter:
    """The tame character with chi(generator) = zeta_(q-1)^t and chi(p) = w."""
    return MultiplicativeCharacter(field, on_p=w, tame_exp=t)


def conductor_exponent(chi: MultiplicativeCharacter) -> int:
    return chi.conductor_exponent()


def galois_twist(chi: MultiplicativeCharacter, sigma) -> MultiplicativeCharacter:
    return chi.galois_twist(sigma)


def adams(obj, k: int):
    """Adams operation: termwise k-th power map on characters."""
    return obj.adams(k)


class VirtualCharacter:
    """A formal integer combination of multiplicative characters."""

    __slots__ = ("field", "terms")

    def __init__(self, field: UnramifiedField, terms=()):
        self.field = field
        merged: dict = {}
        chars: dict = {}
        for chi, mult in terms:
            if chi.field != field:
                raise ValueError("terms live in different fields")
            k = chi.key()
            merged[k] = merged.get(k, 0) + mult
            chars[k] = chi
        self.terms = tuple(
            (chars[k], merged[k]) for k in sorted(merged) if merged[k] != 0
        )

    @classmethod
    def of(cls, chi: MultiplicativeCharacter, mult: int = 1) -> "VirtualCharacter":
        return cls(chi.field, [(chi, mult)])

    @classmethod
    def one(cls, field: UnramifiedField) -> "VirtualCharacter":
        return cls.of(trivial_character(field))

    def components(self):
        return self.terms

    def degree(self) -> int:
        return sum(m for _, m in self.terms)

    def det(self) -> MultiplicativeCharacter:
        out = trivial_character(self.field)
        for chi, m in self.terms:
            out = out * chi**m
        return out

    def conductor_exponent(self) -> int:
        return sum(m * chi.conductor_exponent() for chi, m in self.terms)

    def adams(self, k: int) -> "VirtualCharacter":
        return VirtualCharacter(self.field, [(chi**k, m) for chi, m in self.terms])

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return VirtualCharacter(self.field, list(self.terms) + list(other.terms))

    def __neg__(self):
        return VirtualCharacter(self.field, [(chi, -m) for chi, m in self.terms])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    __radd__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = []
        for chi1, m1 in self.terms:
            for chi2, m2 in other.terms:
                terms.append((chi1 * chi2, m1 * m2))
        return VirtualCharacter(self.field, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("virtual characters have no negative powers")
        out = VirtualCharacter.one(self.field)
        for _ in range(e):
            out = out * self
        return out

    def _coerce(self, other):
        if isinstance(other, VirtualCharacter):
            if other.field != self.field:
                raise ValueError("virtual characters of different fields")
            return other
        if isinstance(other, MultiplicativeCharacter):
            return VirtualCharacter.of(other)
        if isinstance(other, int):
            return VirtualCharacter(self.field, [(trivial_character(self.field), other)])
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return [(c.key(), m) for c, m in self.terms] == [(c.key(), m) for c, m in other.terms]

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{m}*{chi!r}" for chi, m in self.terms)


def virtual_ring(v: VirtualCharacter, w: VirtualCharacter, op: str) -> VirtualCharacter:
    if op == "add":
        return v + w
    if op == "sub":
        return v - w
    if op == "mul":
        return v * w
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# character spec strings (the CLI surface):
#   alpha=<poly>/<den>;tame=<t>;onp=<m>:<k>;sign=<s>
# <poly> is an integer polynomial in w, <den> a power of p, also writable p^n.


def _parse_poly(text: str, p: int, f: int) -> list[int]:
    text = text.strip().replace(" ", "")
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    coeffs = [0] * max(f, 1)
    term = ""
    terms = []
    for ch in text:
        if ch in "+-" and term:
            terms.append(term)
            term = ch if ch == "-" else ""
        else:
            term += ch
    if term:
        terms.append(term)
    for t in terms:
        if not t:
            continue
        sign = 1
        if t[0] == "-":
            sign, t = -1, t[1:]
        elif t[0] == "+":
            t = t[1:]
        if "w" in t:
            coef_s, _, exp_s = t.partition("w")
            coef_s = coef_s.rstrip("*")
            coef = int(coef_s) if coef_s else 1
            e = int(exp_s[1:]) if exp_s.startswith("^") else 1
        else:
            coef = int(t)
            e = 0
        if e >= f:
            raise ValueError(f"power w^{e} out of range for residue degree {f}")
        coeffs[e] += sign * coef
    return coeffs


def parse_character(field: UnramifiedField, spec: str) -> MultiplicativeCharacter:
    """Parse 'alpha=<poly>/<den>;tame=<t>;onp=<m>:<k>;sign=<s>'."""
    on_p = RootOfUnity(1, 0)
    tame = 0
    alpha = None
    sign = 0
    for raw in spec.split(";"):
        raw = raw.strip()
        if not raw:
            continue
        key, _, val = raw.partition("=")
        key = key.strip().lower()
        val = val.strip()
        if not val:
            raise ValueError(f"missing value in {raw!r}")
        if key == "alpha":
            num_s, slash, den_s = val.rpartition("/")
            if not slash:
                raise ValueError("alpha must be <poly>/<denominator>")
            if den_s.startswith("p^"):
                n = int(den_s[2:])
            else:
                den = int(den_s)
                n = 0
                while den % field.p == 0 and den > 1:
                    den //= field.p
                    n += 1
                if den != 1:
                    raise ValueError(f"alpha denominator must be a power of {field.p}")
            poly = _parse_poly(num_s, field.p, field.f)
            alpha = field.element(poly) / field.p**n
        elif key == "tame":
            tame = int(val)
        elif key == "onp":
            m_s, colon, k_s = val.partition(":")
            if not colon:
                raise ValueError("onp must be <m>:<k>")
            on_p = RootOfUnity(int(m_s), int(k_s))
        elif key == "sign":
            sign = int(val)
        else:
            raise ValueError(f"unknown character component {key!r}")
    return MultiplicativeCharacter(field, on_p, tame, alpha, sign)


def character_to_json(chi: MultiplicativeCharacter) -> dict:
    fld = chi.field
    out = {
        "p": fld.p,
        "f": fld.f,
        "precision": fld.N,
        "on_p": chi.on_p.to_json(),
        "tame": chi.tame_exp,
        "alpha": None,
        "sign": chi.sign_exp,
        "conductor_exponent": chi.conductor_exponent(),
        "order": chi.order(),
    }
    if chi.alpha is not None:
        n = -chi.alpha.v
        out["alpha"] = {"num": list(chi.alpha.unit), "den_exponent": n}
    return out
