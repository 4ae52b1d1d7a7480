"""Coefficient fields standing in for an algebraically closed field of
characteristic zero.

Two backends:

* ``ExactField`` -- the cyclotomic extension Q(zeta_L) for a fixed conductor
  L.  Scalars are either ``gmpy2.mpq`` rationals (the common fast path) or
  tuples of ``mpq`` of length phi(L), coordinates w.r.t. the power basis
  1, zeta, ..., zeta^{phi(L)-1}.  Rational values are always normalized to
  the ``mpq`` form, so equality is plain ``==``.

* ``ApproxField`` -- complex floating point with a relative zero-test
  tolerance.

Scalars are plain values; all arithmetic goes through the field object, so
series code stays backend-agnostic.  Scalars of different backends must
never meet in one computation (enforced at the series level).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2
from gmpy2 import mpq

from .errors import ConductorTooSmall, RootNotRepresentable, ZeroInput

__all__ = [
    "RootOfUnity",
    "ExactField",
    "ApproxField",
    "cyclotomic_polynomial",
]


# ---------------------------------------------------------------------------
# integer polynomial helpers (ascending coefficient lists)


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_divexact(p, q):
    """Exact division of integer polynomials; q must divide p."""
    p = list(p)
    dq = len(q) - 1
    lead = q[-1]
    out = [0] * (len(p) - dq)
    for i in range(len(out) - 1, -1, -1):
        c = p[i + dq] // lead
        out[i] = c
        if c:
            for j, b in enumerate(q):
                p[i + j] -= c * b
    if any(p[:dq]):
        raise ValueError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, ascending."""
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, cyclotomic_polynomial(d))
    return tuple(num)


@dataclass(frozen=True)
class RootOfUnity:
    """A root of unity e^(2*pi*i*index/order) as a field scalar."""

    order: int
    index: int
    value: object

    @property
    def primitive(self):
        return math.gcd(self.index, self.order) == 1


# ---------------------------------------------------------------------------


class ExactField:
    """Arithmetic in Q(zeta_L) with exact zero-test."""

    kind = "exact"

    def __init__(self, conductor=24):
        if conductor < 1:
            raise ValueError("conductor must be >= 1")
        L = int(conductor)
        self.conductor = L
        phi = cyclotomic_polynomial(L)
        self.degree = len(phi) - 1
        self.zero = mpq(0)
        self.one = mpq(1)
        # x^k mod Phi_L for k = degree .. 2*degree-2 (Phi_L is monic)
        d = self.degree
        rows = []
        cur = [-mpq(c) for c in phi[:-1]]
        rows.append(list(cur))
        for _ in range(d + 1, 2 * d - 1):
            top = cur[-1]
            cur = [mpq(0)] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] += top * rows[0][i]
            rows.append(list(cur))
        self._red = rows
        # zeta_L^t as normalized scalars, t = 0 .. L-1
        zs = []
        vec = [mpq(0)] * d
        vec[0] = mpq(1)
        for t in range(L):
            zs.append(self._norm(tuple(vec)))
            top = vec[-1]
            vec = [mpq(0)] + vec[:-1]
            if top:
                for i in range(d):
                    vec[i] += top * rows[0][i]
        self._zeta = zs
        # the group of roots of unity inside Q(zeta_L) has order lcm(2, L)
        self.unit_group_order = L if L % 2 == 0 else 2 * L

    # -- representation helpers

    def _norm(self, vec):
        if any(vec[1:]):
            return tuple(vec)
        return vec[0]

    def _vec(self, a):
        if isinstance(a, tuple):
            return a
        v = [mpq(0)] * self.degree
        v[0] = a
        return tuple(v)

    def _unit_root(self, k):
        """The k-th element of the cyclic group of all roots of unity."""
        L = self.conductor
        if L % 2 == 0:
            return self._zeta[k % L]
        k %= 2 * L
        if k % 2 == 0:
            return self._zeta[k // 2]
        return self.neg(self._zeta[((k + L) // 2) % L])

    # -- ring operations

    def coerce(self, x):
        if isinstance(x, (tuple, mpq)):
            return x
        if isinstance(x, int):
            return mpq(x)
        if isinstance(x, Fraction):
            return mpq(x.numerator, x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")

    def add(self, a, b):
        if isinstance(a, mpq) and isinstance(b, mpq):
            return a + b
        va, vb = self._vec(a), self._vec(b)
        return self._norm(tuple(x + y for x, y in zip(va, vb)))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if isinstance(a, mpq):
            return -a
        return tuple(-x for x in a)

    def mul(self, a, b):
        if isinstance(a, mpq) and isinstance(b, mpq):
            return a * b
        if isinstance(a, mpq):
            if not a:
                return self.zero
            return self._norm(tuple(a * x for x in b))
        if isinstance(b, mpq):
            if not b:
                return self.zero
            return self._norm(tuple(b * x for x in a))
        d = self.degree
        conv = [mpq(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = self._red[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return self._norm(tuple(out))

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if isinstance(a, mpq):
            return 1 / a
        # extended Euclid in Q[x] modulo Phi_L
        phi = [mpq(c) for c in cyclotomic_polynomial(self.conductor)]
        r0, r1 = phi, [x for x in a]
        s0, s1 = [mpq(0)], [mpq(1)]
        while any(r1):
            while r1 and not r1[-1]:
                r1.pop()
            dr1 = len(r1) - 1
            if dr1 == 0:
                c = 1 / r1[0]
                inv = [c * x for x in s1]
                break
            q = [mpq(0)] * (len(r0) - dr1)
            rem = list(r0)
            for i in range(len(q) - 1, -1, -1):
                if len(rem) - 1 < i + dr1:
                    continue
                coef = rem[i + dr1] / r1[-1]
                q[i] = coef
                if coef:
                    for j, b in enumerate(r1):
                        rem[i + j] -= coef * b
            while rem and not rem[-1]:
                rem.pop()
            qs1 = _poly_mul_q(q, s1)
            s_new = _poly_sub_q(s0, qs1)
            r0, r1 = r1, rem if rem else [mpq(0)]
            s0, s1 = s1, s_new
        else:
            raise ZeroDivisionError("not invertible")
        # reduce inv modulo Phi_L and pad
        vec = [mpq(0)] * self.degree
        for k, c in enumerate(inv):
            if not c:
                continue
            term = self.mul(c, self._zeta[k % self.conductor] if k >= self.degree else _basis(self, k))
            vec = [x + y for x, y in zip(vec, self._vec(term))]
        return self._norm(tuple(vec))

    def div(self, a, b):
        if isinstance(a, mpq) and isinstance(b, mpq):
            if not b:
                raise ZeroDivisionError("division by zero")
            return a / b
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    # -- predicates

    def is_zero(self, a, scale=None):
        if isinstance(a, mpq):
            return not a
        return False  # tuples are normalized, never all-zero

    def eq(self, a, b, scale=None):
        if isinstance(a, mpq) and isinstance(b, mpq):
            return a == b
        if isinstance(a, tuple) and isinstance(b, tuple):
            return a == b
        return False

    def abs2(self, a):
        """Rough magnitude proxy (exact backend: 0/1 flag for zero-test symmetry)."""
        return 0 if self.is_zero(a) else 1

    # -- roots

    def roots_of_unity(self, n):
        if n < 1:
            raise ValueError("n must be positive")
        if self.conductor % n != 0:
            raise ConductorTooSmall(n, self.conductor)
        step = self.conductor // n
        return [RootOfUnity(n, j, self._zeta[j * step]) for j in range(n)]

    def primitive_root(self, n):
        """Canonical primitive n-th root of unity (index 1)."""
        return self.roots_of_unity(n)[1 % n].value

    def nth_root(self, a, n):
        if n < 1:
            raise ValueError("n must be positive")
        if self.is_zero(a):
            raise ZeroInput("nth_root of zero")
        if n == 1:
            return a
        M = self.unit_group_order
        t = q = None
        for cand in range(M):
            b = self.div(a, self._unit_root(cand))
            if isinstance(b, mpq) and b > 0:
                t, q = cand, b
                break
        if q is None:
            raise RootNotRepresentable(
                f"{a!r} is not rational times a root of unity in Q(zeta_{self.conductor})"
            )
        pr, p_exact = gmpy2.iroot(q.numerator, n)
        qr, q_exact = gmpy2.iroot(q.denominator, n)
        if not (p_exact and q_exact):
            raise RootNotRepresentable(f"no rational {n}-th root of {q}")
        g = math.gcd(n, M)
        if t % g:
            raise RootNotRepresentable(
                f"no {n}-th root of the unit part within U_{M}"
            )
        m = (t // g) * pow(n // g, -1, M // g) % (M // g)
        return self.mul(mpq(pr, qr), self._unit_root(m))

    def element_is_root_of_unity(self, a, max_order):
        p = self.one
        for d in range(1, max_order + 1):
            p = self.mul(p, a)
            if self.eq(p, self.one):
                return d
        return None

    # -- serialization

    def field_json(self):
        return {"kind": "exact", "conductor": self.conductor}

    def scalar_to_json(self, a):
        v = self._vec(a)
        return [f"{x.numerator}/{x.denominator}" for x in v]

    def scalar_from_json(self, data):
        if isinstance(data, str):
            return mpq(data)
        if len(data) != self.degree:
            raise ValueError(
                f"exact scalar needs {self.degree} coordinates, got {len(data)}"
            )
        return self._norm(tuple(mpq(s) for s in data))

    def scalar_str(self, a):
        if isinstance(a, mpq):
            return str(a)
        return "+".join(
            f"({x})*w^{i}" for i, x in enumerate(a) if x
        )

    def __repr__(self):
        return f"ExactField(conductor={self.conductor})"

    def __eq__(self, other):
        return isinstance(other, ExactField) and other.conductor == self.conductor

    def __hash__(self):
        return hash(("exact", self.conductor))


def _basis(field, k):
    v = [mpq(0)] * field.degree
    v[k] = mpq(1)
    return tuple(v)


def _poly_mul_q(p, q):
    out = [mpq(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_sub_q(p, q):
    n = max(len(p), len(q))
    p = list(p) + [mpq(0)] * (n - len(p))
    for j, b in enumerate(q):
        p[j] -= b
    return p


# ---------------------------------------------------------------------------


class ApproxField:
    """Complex floating point with relative tolerance zero-test."""

    kind = "approx"

    def __init__(self, tol=1e-9):
        if tol <= 0:
            raise ValueError("tolerance must be positive")
        self.tol = float(tol)
        self.zero = 0j
        self.one = 1 + 0j

    def coerce(self, x):
        if isinstance(x, complex):
            return x
        if isinstance(x, (int, float)):
            return complex(x)
        if isinstance(x, (Fraction, mpq)):
            return complex(x.numerator / x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return 1 / a

    def div(self, a, b):
        return a / b

    def pow(self, a, k):
        return a ** k

    def is_zero(self, a, scale=None):
        s = 1.0 if scale is None else max(1.0, scale)
        return abs(a) <= self.tol * s

    def eq(self, a, b, scale=None):
        if scale is None:
            scale = max(abs(a), abs(b))
        return self.is_zero(a - b, scale=scale)

    def abs2(self, a):
        return abs(a)

    def roots_of_unity(self, n):
        if n < 1:
            raise ValueError("n must be positive")
        return [
            RootOfUnity(n, j, cmath.exp(2j * math.pi * j / n)) for j in range(n)
        ]

    def primitive_root(self, n):
        return self.roots_of_unity(n)[1 % n].value

    def nth_root(self, a, n):
        if n < 1:
            raise ValueError("n must be positive")
        if self.is_zero(a):
            raise ZeroInput("nth_root of zero")
        if n == 1:
            return a
        # principal branch, argument in (-pi/n, pi/n]
        return cmath.exp(cmath.log(a) / n)

    def element_is_root_of_unity(self, a, max_order):
        if not self.is_zero(abs(a) - 1.0):
            return None
        p = self.one
        for d in range(1, max_order + 1):
            p = p * a
            if self.eq(p, self.one):
                return d
        return None

    def field_json(self):
        return {"kind": "approx", "tol": self.tol}

    def scalar_to_json(self, a):
        return [a.real, a.imag]

    def scalar_from_json(self, data):
        if isinstance(data, (int, float)):
            return complex(data)
        if isinstance(data, str):
            q = mpq(data)
            return complex(q.numerator / q.denominator)
        re, im = data
        return complex(re, im)

    def scalar_str(self, a):
        return f"{a.real:.12g}{a.imag:+.12g}j"

    def __repr__(self):
        return f"ApproxField(tol={self.tol})"

    def __eq__(self, other):
        return isinstance(other, ApproxField) and other.tol == self.tol

    def __hash__(self):
        return hash(("approx", self.tol))
