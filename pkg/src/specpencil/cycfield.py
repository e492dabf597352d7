"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A CycNumber is stored in canonical form: a coefficient vector of length
phi(m) over the power basis 1, zeta, ..., zeta^(phi(m)-1), reduced modulo
the m-th cyclotomic polynomial.  Canonical form makes the zero test (and
hence equality) a plain coefficient comparison.

Rational scalars are exact arbitrary-precision rationals.  gmpy2.mpq is
used when available (it is much faster); fractions.Fraction otherwise.
Both keep gcd(|num|, den) = 1 and den >= 1 after every operation.
"""

import threading
from math import gcd

try:
    from gmpy2 import mpq as BigRational
except ImportError:  # pragma: no cover
    from fractions import Fraction as BigRational

__all__ = [
    "BigRational",
    "CycNumber",
    "as_cyc",
    "cyc_str",
    "cyclotomic_polynomial",
    "euler_phi",
    "lcm",
    "root_of_unity",
]


def lcm(a, b):
    return a * b // gcd(a, b)


def euler_phi(n):
    if n < 1:
        raise ValueError("euler_phi expects n >= 1")
    count = 0
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            count += 1
    return count


# ---------------------------------------------------------------------------
# integer polynomial helpers (little-endian coefficient lists)

def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_div_exact(num, den):
    """Divide num by monic den over Z; the remainder must vanish."""
    num = list(num)
    dd = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    q = [0] * (len(num) - dd)
    for k in range(len(num) - dd - 1, -1, -1):
        c = num[k + dd]
        q[k] = c
        if c:
            for j in range(dd + 1):
                num[k + j] -= c * den[j]
    if any(num[:dd]):
        raise ValueError("division is not exact")
    return _poly_trim(q)


_cyclo_cache = {}
_cyclo_lock = threading.Lock()


def _cyclotomic_ints(m):
    with _cyclo_lock:
        cached = _cyclo_cache.get(m)
    if cached is not None:
        return cached
    if m == 1:
        poly = (-1, 1)
    else:
        num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
        den = [1]
        for d in range(1, m):
            if m % d == 0:
                den = _poly_mul(den, list(_cyclotomic_ints(d)))
        poly = tuple(_poly_div_exact(num, den))
    with _cyclo_lock:
        _cyclo_cache[m] = poly
    return poly


def cyclotomic_polynomial(m):
    """Coefficients of the m-th cyclotomic polynomial, constant term first."""
    if m < 1:
        raise ValueError("conductor must be a positive integer")
    return [BigRational(c) for c in _cyclotomic_ints(m)]


class _Field:
    """Per-conductor tables: phi, the cyclotomic polynomial, and reductions
    of zeta^k onto the power basis for every exponent k that arithmetic in
    this field can produce (k <= max(2*phi - 2, m - 1))."""

    __slots__ = ("m", "phi", "cyclo", "pow_red", "limit")

    def __init__(self, m):
        cyclo = _cyclotomic_ints(m)
        phi = len(cyclo) - 1
        limit = max(2 * phi - 2, m - 1)
        rows = []
        for k in range(phi):
            row = [0] * phi
            row[k] = 1
            rows.append(tuple(row))
        for k in range(phi, limit + 1):
            prev = rows[k - 1]
            row = [0] + list(prev[: phi - 1])
            top = prev[phi - 1]
            if top:
                for t in range(phi):
                    row[t] -= top * cyclo[t]
            rows.append(tuple(row))
        self.m = m
        self.phi = phi
        self.cyclo = cyclo
        self.pow_red = tuple(rows)
        self.limit = limit


_field_cache = {}
_field_lock = threading.Lock()


def _field(m):
    f = _field_cache.get(m)
    if f is None:
        f = _Field(m)
        with _field_lock:
            _field_cache.setdefault(m, f)
    return f


# ---------------------------------------------------------------------------
# rational polynomial helpers for the inverse (extended Euclid mod Phi_m)

def _rpoly_deg(p):
    d = len(p) - 1
    while d >= 0 and not p[d]:
        d -= 1
    return d


def _rpoly_divmod(num, den):
    num = list(num)
    dn = _rpoly_deg(den)
    lead = BigRational(den[dn])
    q = [BigRational(0)] * max(_rpoly_deg(num) - dn + 1, 1)
    for k in range(_rpoly_deg(num) - dn, -1, -1):
        c = BigRational(num[k + dn]) / lead
        q[k] = c
        if c:
            for j in range(dn + 1):
                num[k + j] -= c * den[j]
    return q, num


class CycNumber:
    """An element of Q(zeta_m) in canonical form.

    Arithmetic between operands at different conductors promotes both to
    the least common multiple conductor first.  Values are immutable.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor, coeffs):
        f = _field(conductor)
        coeffs = tuple(coeffs)
        if len(coeffs) != f.phi:
            raise ValueError(
                f"conductor {conductor} needs {f.phi} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CycNumber is immutable")

    @classmethod
    def _raw(cls, conductor, coeffs):
        self = object.__new__(cls)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)
        return self

    @classmethod
    def zero(cls, conductor=1):
        return cls._raw(conductor, (0,) * _field(conductor).phi)

    @classmethod
    def one(cls, conductor=1):
        phi = _field(conductor).phi
        return cls._raw(conductor, (1,) + (0,) * (phi - 1))

    @classmethod
    def from_rational(cls, value, conductor=1):
        phi = _field(conductor).phi
        return cls._raw(conductor, (BigRational(value),) + (0,) * (phi - 1))

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("not a rational element")
        return BigRational(self.coeffs[0])

    def is_unimodular(self):
        return self * self.conjugate() == 1

    # -- conductor handling --------------------------------------------------

    def promote(self, conductor):
        """Represent the same field element at a larger conductor.

        The current conductor must divide the new one.
        """
        m = self.conductor
        if conductor == m:
            return self
        if conductor % m != 0:
            raise ValueError(f"conductor {m} does not divide {conductor}")
        f2 = _field(conductor)
        step = conductor // m
        out = [0] * f2.phi
        red = f2.pow_red
        for k, ak in enumerate(self.coeffs):
            if not ak:
                continue
            row = red[k * step]
            for t, rt in enumerate(row):
                if rt:
                    out[t] += ak * rt
        return CycNumber._raw(conductor, tuple(out))

    def _common(self, other):
        if self.conductor == other.conductor:
            return self, other
        m = lcm(self.conductor, other.conductor)
        return self.promote(m), other.promote(m)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = as_cyc(other)
        a, b = self._common(other)
        return CycNumber._raw(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNumber._raw(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-as_cyc(other))

    def __rsub__(self, other):
        return as_cyc(other) + (-self)

    def __mul__(self, other):
        other = as_cyc(other)
        a, b = self._common(other)
        f = _field(a.conductor)
        phi = f.phi
        conv = [0] * (2 * phi - 1)
        for i, ai in enumerate(a.coeffs):
            if not ai:
                continue
            for j, bj in enumerate(b.coeffs):
                if bj:
                    conv[i + j] += ai * bj
        out = conv[:phi]
        red = f.pow_red
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = red[k]
                for t, rt in enumerate(row):
                    if rt:
                        out[t] += c * rt
        return CycNumber._raw(a.conductor, tuple(out))

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse via extended Euclid against Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        f = _field(self.conductor)
        old_r = list(self.coeffs)
        r = [BigRational(c) for c in f.cyclo]
        old_s, s = [BigRational(1)], [BigRational(0)]
        while any(r):
            q, rem = _rpoly_divmod(old_r, r)
            old_r, r = r, rem
            width = max(len(old_s), len(q) + len(s) - 1)
            new_s = list(old_s) + [BigRational(0)] * (width - len(old_s))
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s):
                        if sj:
                            new_s[i + j] -= qi * sj
            old_s, s = s, new_s
            if _rpoly_deg(old_r) == 0:
                break
        g = BigRational(old_r[0])
        out = [BigRational(c) / g for c in old_s[: f.phi]]
        out += [BigRational(0)] * (f.phi - len(out))
        return CycNumber._raw(self.conductor, tuple(out))

    def __truediv__(self, other):
        return self * as_cyc(other).inv()

    def __rtruediv__(self, other):
        return as_cyc(other) * self.inv()

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result = CycNumber.one(self.conductor)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def conjugate(self):
        """Complex conjugation: the field automorphism zeta -> zeta^(m-1)."""
        m = self.conductor
        if m <= 2:
            return self
        f = _field(m)
        out = [0] * f.phi
        red = f.pow_red
        for k, ak in enumerate(self.coeffs):
            if not ak:
                continue
            e = (m - k) % m
            row = red[e]
            for t, rt in enumerate(row):
                if rt:
                    out[t] += ak * rt
        return CycNumber._raw(m, tuple(out))

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, CycNumber):
            if isinstance(other, (int, type(BigRational(0)))):
                other = as_cyc(other)
            else:
                return NotImplemented
        a, b = self._common(other)
        return all(x == y for x, y in zip(a.coeffs, b.coeffs))

    __hash__ = None

    # -- text / serialization -------------------------------------------------

    def __str__(self):
        return cyc_str(self)

    def __repr__(self):
        return f"CycNumber(conductor={self.conductor}, {cyc_str(self)})"

    def to_triples(self):
        """[exponent, numerator, denominator] for every nonzero coefficient."""
        out = []
        for k, c in enumerate(self.coeffs):
            if c:
                q = BigRational(c)
                out.append([k, int(q.numerator), int(q.denominator)])
        return out

    @classmethod
    def from_triples(cls, conductor, triples):
        phi = _field(conductor).phi
        coeffs = [0] * phi
        for k, num, den in triples:
            if not 0 <= k < phi:
                raise ValueError(f"exponent {k} out of range for conductor {conductor}")
            coeffs[k] = BigRational(num, den)
        return cls._raw(conductor, tuple(coeffs))


def as_cyc(value, conductor=1):
    """Coerce ints, rationals and CycNumbers to CycNumber."""
    if isinstance(value, CycNumber):
        return value
    return CycNumber.from_rational(value, conductor)


def root_of_unity(m, k):
    """zeta_m^k in canonical form; root_of_unity(m, 0) = 1."""
    if m < 1:
        raise ValueError("conductor must be a positive integer")
    f = _field(m)
    return CycNumber._raw(m, f.pow_red[k % m])


def _rat_str(c):
    return str(BigRational(c))


def cyc_str(a):
    """Render as a sum of "c*w^k" terms, w standing for zeta_conductor."""
    pieces = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        neg = c.numerator < 0
        mag = -c if neg else c
        if k == 0:
            body = _rat_str(mag)
        else:
            base = "w" if k == 1 else f"w^{k}"
            body = base if mag == 1 else f"{_rat_str(mag)}*{base}"
        pieces.append(("-" if neg else "+", body))
    if not pieces:
        return "0"
    sign, body = pieces[0]
    text = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text
