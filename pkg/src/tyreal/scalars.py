"""Exact scalar arithmetic tower.

Everything downstream computes over Q(zeta_M), the M-th cyclotomic field,
represented in the power basis of Q[x]/Phi_M(x) with integer numerators and a
common positive denominator.  Square roots of integers are adjoined through
quadratic Gauss sums, so values like 1/sqrt(2|G|) stay exact.  On top of the
field sit quaternions over the real subfield and the algebra C (x)_R C used by
the real-complex coefficient tables.
"""

from __future__ import annotations

import cmath
import re as _re
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


# ---------------------------------------------------------------------------
# integer polynomial helpers (dense coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of num by den, both integer polynomials; division must be exact
    and den monic-up-to-sign with integer quotient (true for cyclotomics)."""
    num = list(num)
    dlead = den[-1]
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % dlead != 0:
            raise ArithmeticError("non-exact polynomial division")
        q[i] = c // dlead
        if q[i]:
            for j, dc in enumerate(den):
                num[i + j] -= q[i] * dc
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(M: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_M, lowest degree first."""
    if M < 1:
        raise ValueError("modulus must be positive")
    if M == 1:
        return (-1, 1)
    poly = [0] * M + [1]
    poly[0] = -1  # x^M - 1
    for d in range(1, M):
        if M % d == 0:
            poly = _poly_divmod_exact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _phi_deg(M: int) -> int:
    return len(cyclotomic_poly(M)) - 1


@lru_cache(maxsize=None)
def _power_table(M: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Phi_M for 0 <= k <= max(M, 2*phi-2), rows as coefficient tuples."""
    phi = _phi_deg(M)
    top = max(M, 2 * phi - 1)
    cyc = cyclotomic_poly(M)
    rows: list[tuple[int, ...]] = []
    cur = [0] * phi
    if phi > 0:
        cur[0] = 1
    rows.append(tuple(cur))
    for _ in range(top):
        nxt = [0] + cur[:-1] if phi > 1 else [0]
        lead = cur[-1] if phi >= 1 else 0
        if phi == 1:
            nxt = [0]
            lead = cur[0]
        if lead:
            # x^phi = -(Phi_M - x^phi), subtract lead * lower part of Phi_M
            for j in range(phi):
                nxt[j] -= lead * cyc[j]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


def _normalize(M: int, num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        den = -den
        num = [-c for c in num]
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        den //= g
        num = [c // g for c in num]
    return tuple(num), den


class CycloScalar:
    """Element of Q(zeta_M) in the power basis of Q[x]/Phi_M(x).

    The representation is canonical: coefficients are reduced mod Phi_M and the
    integer numerators share a positive denominator with overall gcd 1.
    Operands with different moduli are promoted to the lcm before combining.
    """

    __slots__ = ("M", "num", "den")

    def __init__(self, M: int, num: tuple[int, ...], den: int = 1):
        phi = _phi_deg(M)
        if len(num) != phi:
            raise ValueError(f"expected {phi} coefficients for M={M}, got {len(num)}")
        self.M = M
        self.num, self.den = _normalize(M, list(num), den)

    # -- constructors -------------------------------------------------------

    @classmethod
    def _raw(cls, M: int, num: tuple[int, ...], den: int) -> "CycloScalar":
        obj = object.__new__(cls)
        obj.M = M
        obj.num, obj.den = _normalize(M, list(num), den)
        return obj

    @classmethod
    def from_rational(cls, value, M: int = 1) -> "CycloScalar":
        fr = Fraction(value)
        phi = _phi_deg(M)
        num = [0] * phi
        num[0] = fr.numerator
        return cls._raw(M, tuple(num), fr.denominator)

    @classmethod
    def zero(cls, M: int = 1) -> "CycloScalar":
        return cls.from_rational(0, M)

    @classmethod
    def one(cls, M: int = 1) -> "CycloScalar":
        return cls.from_rational(1, M)

    @classmethod
    def root_of_unity(cls, n: int, k: int = 1) -> "CycloScalar":
        """zeta_n^k as an element of Q(zeta_n)."""
        k %= n
        row = _power_table(n)[k]
        return cls._raw(n, row, 1)

    # -- promotion ----------------------------------------------------------

    def promote(self, N: int) -> "CycloScalar":
        if N == self.M:
            return self
        if N % self.M != 0:
            raise ValueError(f"cannot promote modulus {self.M} to {N}")
        step = N // self.M
        phi = _phi_deg(N)
        table = _power_table(N)
        out = [0] * phi
        for k, c in enumerate(self.num):
            if c:
                row = table[k * step]
                for j, r in enumerate(row):
                    out[j] += c * r
        return CycloScalar._raw(N, tuple(out), self.den)

    @staticmethod
    def _common(a: "CycloScalar", b: "CycloScalar"):
        if a.M == b.M:
            return a, b
        N = lcm(a.M, b.M)
        return a.promote(N), b.promote(N)

    def _coerce(self, other) -> "CycloScalar":
        if isinstance(other, CycloScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar.from_rational(other, 1)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(self, other)
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return CycloScalar._raw(a.M, tuple(num), a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar._raw(self.M, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(self, other)
        phi = _phi_deg(a.M)
        prod = [0] * (2 * phi - 1 if phi else 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        prod[i + j] += x * y
        table = _power_table(a.M)
        out = [0] * phi
        for k in range(phi):
            out[k] = prod[k]
        for k in range(phi, len(prod)):
            c = prod[k]
            if c:
                row = table[k]
                for j, r in enumerate(row):
                    out[j] += c * r
        return CycloScalar._raw(a.M, tuple(out), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # extended euclid in Q[x] against Phi_M
        cyc = [Fraction(c) for c in cyclotomic_poly(self.M)]
        a = [Fraction(c, self.den) for c in self.num]

        def strip(p):
            while p and p[-1] == 0:
                p.pop()
            return p

        def pdiv(u, v):
            u = strip(list(u))
            v = strip(list(v))
            q = [Fraction(0)] * max(1, len(u) - len(v) + 1)
            while len(u) >= len(v):
                c = u[-1] / v[-1]
                d = len(u) - len(v)
                q[d] = c
                for j, vc in enumerate(v):
                    u[d + j] -= c * vc
                u.pop()
                strip(u)
            return q, u

        # euclid: find s with a*s = 1 mod Phi
        r0, r1 = cyc, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = pdiv(r0, r1)
            r0, r1 = r1, r
            prod = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        prod[i + j] += qc * sc
            s2 = [Fraction(0)] * max(len(s0), len(prod))
            for i, c in enumerate(s0):
                s2[i] += c
            for i, c in enumerate(prod):
                s2[i] -= c
            s0, s1 = s1, s2
        # r0 is the gcd (a nonzero constant since Phi_M is irreducible)
        const = r0[0]
        if any(r0[1:]) or const == 0:
            raise ArithmeticError("inverse failed; Phi_M not coprime?")
        inv = [c / const for c in s0]
        phi = _phi_deg(self.M)
        inv += [Fraction(0)] * (phi - len(inv))
        den = 1
        for c in inv[:phi]:
            den = lcm(den, c.denominator)
        num = tuple(int(c * den) for c in inv[:phi])
        return CycloScalar._raw(self.M, num, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = CycloScalar.one(self.M)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure ----------------------------------------------------------

    def conj(self) -> "CycloScalar":
        """Complex conjugation: zeta_M -> zeta_M^(M-1)."""
        table = _power_table(self.M)
        phi = _phi_deg(self.M)
        out = [0] * phi
        for k, c in enumerate(self.num):
            if c:
                row = table[(self.M - k) % self.M]
                for j, r in enumerate(row):
                    out[j] += c * r
        return CycloScalar._raw(self.M, tuple(out), self.den)

    def conj_pow(self, n: int) -> "CycloScalar":
        """Apply conjugation n times (only the parity matters)."""
        return self.conj() if n % 2 else self

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def is_real(self) -> bool:
        return self.conj() == self

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloScalar.from_rational(other, 1)
        if not isinstance(other, CycloScalar):
            return NotImplemented
        a, b = self._common(self, other)
        return a.num == b.num and a.den == b.den

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None  # equality crosses moduli; do not use as dict keys

    def to_complex(self) -> complex:
        """Numeric embedding zeta_M -> exp(2*pi*i/M)."""
        z = cmath.exp(2j * cmath.pi / self.M)
        acc = 0j
        for k in reversed(range(len(self.num))):
            acc = acc * z + self.num[k]
        return acc / self.den

    def real_part(self) -> "CycloScalar":
        return (self + self.conj()) * Fraction(1, 2)

    def imag_part(self) -> "CycloScalar":
        i = CycloScalar.root_of_unity(4, 1)
        diff = self - self.conj()
        return diff * i.promote(lcm(diff.M, 4)).conj() * Fraction(1, 2)

    def __repr__(self) -> str:
        if self.is_rational():
            fr = self.as_fraction()
            return str(fr)
        terms = []
        for k, c in enumerate(self.num):
            if not c:
                continue
            base = "1" if k == 0 else (f"z{self.M}" if k == 1 else f"z{self.M}^{k}")
            terms.append(f"{c}*{base}" if k else str(c))
        s = " + ".join(terms).replace("+ -", "- ")
        return f"({s})/{self.den}" if self.den != 1 else s

    # -- JSON text encoding -------------------------------------------------

    def to_json(self):
        return {"M": self.M, "c": [[c, self.den] for c in self.num]}

    @classmethod
    def from_json(cls, data) -> "CycloScalar":
        if isinstance(data, str):
            return parse_scalar(data)
        if isinstance(data, (int, float)):
            return cls.from_rational(Fraction(data))
        M = data["M"]
        coeffs = [Fraction(n, d) for n, d in data["c"]]
        den = 1
        for c in coeffs:
            den = lcm(den, c.denominator)
        return cls._raw(M, tuple(int(c * den) for c in coeffs), den)


_ROOT_RE = _re.compile(r"^\s*(-?)z\((\d+)\)(?:\^(-?\d+))?\s*$")


def parse_scalar(text: str) -> CycloScalar:
    """Parse either a rational like '3/2' or root-of-unity sugar 'z(8)^3'."""
    m = _ROOT_RE.match(text)
    if m:
        sign, n, k = m.group(1), int(m.group(2)), int(m.group(3) or 1)
        val = CycloScalar.root_of_unity(n, k)
        return -val if sign == "-" else val
    return CycloScalar.from_rational(Fraction(text))


def is_root_of_unity(s: CycloScalar):
    """Return (order, exponent) with s = zeta_order^exponent, or None.

    Roots of unity inside Q(zeta_M) all lie in the group generated by
    zeta_{2M}; scan it.
    """
    if s.is_zero():
        return None
    if s.den != 1:
        return None
    N = 2 * s.M
    cur = CycloScalar.one(N)
    z = CycloScalar.root_of_unity(N, 1)
    target = s.promote(N)
    for k in range(N):
        if cur == target:
            if k == 0:
                return (1, 0)
            g = gcd(k, N)
            return (N // g, k // g)
        cur = cur * z
    return None


def sqrt_int(d: int, M: int) -> CycloScalar:
    """The positive square root of d > 0 inside Q(zeta_M), requiring 4d | M.

    Built from the quadratic Gauss sum over Z/4d, whose value is (1+i)*2*sqrt(d);
    the numeric embedding only picks the sign between the two exact candidates.
    """
    if d <= 0:
        raise ValueError("radicand must be positive")
    if M % (4 * d) != 0:
        raise ValueError(f"need 4*{d} | M, got M={M}")
    n = 4 * d
    acc = CycloScalar.zero(n)
    for k in range(n):
        acc = acc + CycloScalar.root_of_unity(n, (k * k) % n)
    i = CycloScalar.root_of_unity(4, 1).promote(n)
    one = CycloScalar.one(n)
    root = acc * (one - i) * Fraction(1, 4)  # acc / (2*(1+i))
    emb = root.to_complex()
    if abs(emb.real) <= 1e-6:
        raise ArithmeticError("sign selection failed: embedding too small")
    if emb.real < 0:
        root = -root
    if root * root != CycloScalar.from_rational(d):
        raise ArithmeticError("gauss sum did not square to the radicand")
    return root.promote(M)


def sqrt_scalar(s: CycloScalar) -> CycloScalar:
    """Square root of a unit times a positive rational, exactly.

    Handles the values produced by gauge workflows: s = zeta * r with zeta a
    root of unity and r a positive rational.  The root of unity part takes a
    square root by halving the exponent after doubling the ambient modulus.
    """
    if s.is_zero():
        return CycloScalar.zero(s.M)
    if s.is_rational():
        fr = s.as_fraction()
        if fr > 0:
            p, q = fr.numerator, fr.denominator
            d = p * q
            r = int(d**0.5)
            if r * r == d:
                return CycloScalar.from_rational(Fraction(r, q))
            return sqrt_int(d, 4 * d) * Fraction(1, q)
        rest = sqrt_scalar(-s)
        i = CycloScalar.root_of_unity(4, 1)
        return i * rest
    # try unit * rational: s / |s| with |s|^2 = s * conj(s) rational
    norm2 = s * s.conj()
    if norm2.is_rational():
        modulus = sqrt_scalar(CycloScalar.from_rational(norm2.as_fraction()))
        unit = s / modulus
        ru = is_root_of_unity(unit)
        if ru is not None and modulus.is_rational():
            n, k = ru
            half = CycloScalar.root_of_unity(2 * n, k)
            out = half * sqrt_scalar(modulus)
            if out * out == s:
                return out
            out = -out
            if out * out == s:
                return out
    raise ValueError(f"no supported square root for {s!r}")


# ---------------------------------------------------------------------------
# quaternions over the real subfield
# ---------------------------------------------------------------------------

class QuatScalar:
    """w + x*i + y*j + z*k with components fixed by conjugation."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w, x=None, y=None, z=None, check: bool = True):
        zero = CycloScalar.zero()
        self.w = w if isinstance(w, CycloScalar) else CycloScalar.from_rational(w)
        self.x = zero if x is None else (x if isinstance(x, CycloScalar) else CycloScalar.from_rational(x))
        self.y = zero if y is None else (y if isinstance(y, CycloScalar) else CycloScalar.from_rational(y))
        self.z = zero if z is None else (z if isinstance(z, CycloScalar) else CycloScalar.from_rational(z))
        if check:
            for c in (self.w, self.x, self.y, self.z):
                if not c.is_real():
                    raise ValueError("quaternion components must be conjugation-fixed")

    @classmethod
    def unit(cls, name: str) -> "QuatScalar":
        one = CycloScalar.one()
        zero = CycloScalar.zero()
        table = {
            "1": (one, zero, zero, zero),
            "i": (zero, one, zero, zero),
            "j": (zero, zero, one, zero),
            "k": (zero, zero, zero, one),
        }
        return cls(*table[name], check=False)

    def components(self):
        return (self.w, self.x, self.y, self.z)

    def __add__(self, other: "QuatScalar") -> "QuatScalar":
        return QuatScalar(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z, check=False)

    def __neg__(self) -> "QuatScalar":
        return QuatScalar(-self.w, -self.x, -self.y, -self.z, check=False)

    def __sub__(self, other: "QuatScalar") -> "QuatScalar":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            return QuatScalar(self.w * other, self.x * other,
                              self.y * other, self.z * other, check=False)
        a, b, c, d = self.components()
        e, f, g, h = other.components()
        return QuatScalar(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
            check=False,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            return self * other
        return NotImplemented

    def conj(self) -> "QuatScalar":
        return QuatScalar(self.w, -self.x, -self.y, -self.z, check=False)

    def re(self) -> CycloScalar:
        return self.w

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components())

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CycloScalar)):
            other = QuatScalar(other if isinstance(other, CycloScalar)
                               else CycloScalar.from_rational(other), check=False)
        if not isinstance(other, QuatScalar):
            return NotImplemented
        return all(a == b for a, b in zip(self.components(), other.components()))

    __hash__ = None

    def __repr__(self) -> str:
        return f"Quat({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"


def quat_mul(a: QuatScalar, b: QuatScalar) -> QuatScalar:
    return a * b


def quat_conj(a: QuatScalar) -> QuatScalar:
    return a.conj()


def quat_re(a: QuatScalar) -> CycloScalar:
    return a.re()


# ---------------------------------------------------------------------------
# C (x)_R C
# ---------------------------------------------------------------------------

class TensorCC:
    """1 (x) p + i (x) q in C tensor_R C, with p, q cyclotomic."""

    __slots__ = ("p", "q")

    def __init__(self, p, q=None):
        self.p = p if isinstance(p, CycloScalar) else CycloScalar.from_rational(p)
        self.q = (CycloScalar.zero() if q is None
                  else (q if isinstance(q, CycloScalar) else CycloScalar.from_rational(q)))

    @classmethod
    def from_left_scalar(cls, c: CycloScalar) -> "TensorCC":
        """(x + i y) (x) 1 = 1 (x) x + i (x) y."""
        return cls(c.real_part(), c.imag_part())

    @classmethod
    def from_right_scalar(cls, c: CycloScalar) -> "TensorCC":
        return cls(c, CycloScalar.zero())

    @classmethod
    def zero(cls) -> "TensorCC":
        return cls(CycloScalar.zero())

    @classmethod
    def one(cls) -> "TensorCC":
        return cls(CycloScalar.one())

    def __add__(self, other: "TensorCC") -> "TensorCC":
        return TensorCC(self.p + other.p, self.q + other.q)

    def __neg__(self) -> "TensorCC":
        return TensorCC(-self.p, -self.q)

    def __sub__(self, other: "TensorCC") -> "TensorCC":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            return TensorCC(self.p * other, self.q * other)
        # (1@p + i@q)(1@p' + i@q') = 1@(pp' - qq') + i@(pq' + qp')
        return TensorCC(self.p * other.p - self.q * other.q,
                        self.p * other.q + self.q * other.p)

    __rmul__ = __mul__

    def conj_right(self) -> "TensorCC":
        """Conjugate the right tensor components."""
        return TensorCC(self.p.conj(), self.q.conj())

    def conj_right_pow(self, n: int) -> "TensorCC":
        return self.conj_right() if n % 2 else self

    def conj_left(self) -> "TensorCC":
        """Conjugate the left tensor factor: i (x) q -> -i (x) q."""
        return TensorCC(self.p, -self.q)

    def conj_left_pow(self, n: int) -> "TensorCC":
        return self.conj_left() if n % 2 else self

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.q.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorCC):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    __hash__ = None

    def __repr__(self) -> str:
        return f"TensorCC({self.p!r}, {self.q!r})"

    def to_json(self):
        return [self.p.to_json(), self.q.to_json()]

    @classmethod
    def from_json(cls, data) -> "TensorCC":
        return cls(CycloScalar.from_json(data[0]), CycloScalar.from_json(data[1]))


def conj(s: CycloScalar) -> CycloScalar:
    return s.conj()


def tensor_mul(u: TensorCC, v: TensorCC) -> TensorCC:
    return u * v


def idempotent(u_sign: int, v_sign: int) -> TensorCC:
    """P = (1 (x) 1 + i^u (x) conj(i)^v)/2 with signs +-1 for the two factors."""
    i = CycloScalar.root_of_unity(4, 1)
    left = TensorCC(CycloScalar.zero(), CycloScalar.one() * u_sign)  # i^u (x) 1
    right = TensorCC(-i if v_sign > 0 else i)  # 1 (x) ibar^v
    return (TensorCC.one() + left * right) * Fraction(1, 2)
