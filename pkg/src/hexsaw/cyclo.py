"""Exact arithmetic in the cyclotomic field Q(zeta_48).

Elements are stored on the power basis 1, z, ..., z^15 with rational
coefficients, where z = exp(i*pi/24) is a primitive 48th root of unity
with minimal polynomial x^16 - x^8 + 1.  This field contains every
constant the model needs at n = 0: cos(pi/8), cos(3*pi/8), sqrt(2), the
critical step weight and the phase factors attached to windings that are
multiples of pi/24.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from numbers import Rational

from .errors import ScalarModeError

_DEG = 16
_ZERO = Fraction(0)
_ONE = Fraction(1)


def _reduce(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a polynomial in z modulo z^16 = z^8 - 1."""
    c = list(coeffs) + [_ZERO] * max(0, _DEG - len(coeffs))
    for m in range(len(c) - 1, _DEG - 1, -1):
        a = c[m]
        if a:
            c[m] = _ZERO
            c[m - 8] += a
            c[m - 16] -= a
    return tuple(c[:_DEG])


def _coerce(x) -> "Cyclo48 | None":
    if isinstance(x, Cyclo48):
        return x
    if isinstance(x, Rational):
        return Cyclo48.from_rational(Fraction(x))
    return None


class Cyclo48:
    """An element of Q(zeta_48) with exact rational coordinates."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = _reduce([Fraction(x) for x in coeffs])

    @classmethod
    def from_rational(cls, q) -> "Cyclo48":
        return cls([Fraction(q)])

    @classmethod
    def zeta_pow(cls, k: int) -> "Cyclo48":
        """z**k for any integer k (reduced mod 48)."""
        k %= 48
        if k < _DEG:
            return cls([_ZERO] * k + [_ONE])
        # z^24 = -1, so z^k = -z^(k-24) for k >= 24; 16..23 need one
        # reduction step via z^16 = z^8 - 1.
        if k >= 24:
            return -cls.zeta_pow(k - 24)
        return cls([_ZERO] * (k - 16) + [-_ONE] + [_ZERO] * 7 + [_ONE])

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            raise ScalarModeError(
                f"cannot mix exact Cyclo48 with {type(other).__name__}"
            )
        return Cyclo48([a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo48([-a for a in self.c])

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            raise ScalarModeError(
                f"cannot mix exact Cyclo48 with {type(other).__name__}"
            )
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            raise ScalarModeError(
                f"cannot mix exact Cyclo48 with {type(other).__name__}"
            )
        prod = [_ZERO] * (2 * _DEG - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        return Cyclo48(prod)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo48":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_48)")
        # Extended Euclid in Q[x] against the minimal polynomial.
        phi = [_ONE] + [_ZERO] * 7 + [-_ONE] + [_ZERO] * 7 + [_ONE]  # x^16-x^8+1
        phi = phi[::-1]
        r0, r1 = phi, list(self.c)
        s0, s1 = [_ZERO], [_ONE]
        while any(r1):
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        lead = next(a for a in reversed(r0) if a)  # gcd is a nonzero constant
        assert all(a == 0 for a in r0[1:]), "element not invertible mod Phi_48"
        return Cyclo48([a / lead for a in s0])

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            raise ScalarModeError(
                f"cannot mix exact Cyclo48 with {type(other).__name__}"
            )
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            raise ScalarModeError(
                f"cannot mix exact Cyclo48 with {type(other).__name__}"
            )
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise ScalarModeError("exponent of a Cyclo48 must be an integer")
        base = self if k >= 0 else self.inverse()
        out = Cyclo48.from_rational(1)
        for _ in range(abs(k)):
            out = out * base
        return out

    # -- field automorphisms and predicates -----------------------------

    def conjugate(self) -> "Cyclo48":
        """Complex conjugation, z -> z^-1."""
        out = Cyclo48.from_rational(0)
        for i, a in enumerate(self.c):
            if a:
                out = out + Cyclo48.zeta_pow(-i) * a
        return out

    def is_real(self) -> bool:
        return self == self.conjugate()

    def is_rational(self) -> bool:
        return all(a == 0 for a in self.c[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.c[0]

    # -- numeric evaluation ---------------------------------------------

    def to_complex(self) -> complex:
        z = cmath.exp(1j * cmath.pi / 24)
        acc = 0j
        for a in reversed(self.c):
            acc = acc * z + complex(a)
        return acc

    def to_float(self) -> float:
        w = self.to_complex()
        if abs(w.imag) > 1e-9:
            raise ValueError(f"{self!r} is not real")
        return w.real

    def eval_mp(self, dps: int = 60):
        """High-precision complex value (for rigorous sign decisions)."""
        import mpmath

        with mpmath.workdps(dps):
            z = mpmath.exp(1j * mpmath.pi / 24)
            acc = mpmath.mpc(0)
            for a in reversed(self.c):
                acc = acc * z + mpmath.mpf(a.numerator) / a.denominator
            return acc

    def sign(self) -> int:
        """Sign of a real element, decided at 60-digit precision.

        Values encountered here are O(1) differences of model constants;
        the magnitude guard rejects anything suspiciously close to zero
        rather than silently guessing.
        """
        if all(a == 0 for a in self.c):
            return 0
        if not self.is_real():
            raise ValueError("sign() requires a real element")
        val = self.eval_mp().real
        if abs(val) < 1e-40:
            raise ValueError(f"sign of {self!r} numerically ambiguous")
        return 1 if val > 0 else -1

    def __lt__(self, other):
        o = _coerce(other)
        if o is None:
            raise ScalarModeError("cannot compare Cyclo48 with floats")
        return (self - o).sign() < 0

    def __le__(self, other):
        return self == other or self < other

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        terms = [f"{a}*z^{i}" for i, a in enumerate(self.c) if a]
        return "Cyclo48(" + (" + ".join(terms) or "0") + ")"


def _poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    b = list(b) + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_divmod(a, b):
    a = list(a)
    db = max(i for i, x in enumerate(b) if x)
    q = [_ZERO] * max(1, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i]:
            f = a[i] / b[db]
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
    return q, a[:db]


ZERO = Cyclo48.from_rational(0)
ONE = Cyclo48.from_rational(1)


def two_cos(k: int) -> Cyclo48:
    """2*cos(k*pi/24) as an exact element."""
    return Cyclo48.zeta_pow(k) + Cyclo48.zeta_pow(-k)


SQRT2 = two_cos(6)
