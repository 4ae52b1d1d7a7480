"""Truncated formal power series over a coefficient field.

A series is known modulo z^(trunc+1).  Arithmetic tracks how far results
stay exact: unknown coefficients of the operands beyond their truncation
can only contaminate high-order output coefficients, and the output trunc
is set to the last guaranteed-exact index.  This makes every "congruent
mod z^(N+1)" identity in the library a theorem of the implementation.
"""
from __future__ import annotations

import math
import re

from gmpy2 import mpq

from .errors import (
    CompositionUndefined,
    NotSymmetric,
    OrderMismatch,
    RootNotRepresentable,
)
from .field import ApproxField, ExactField

__all__ = [
    "TruncatedSeries",
    "split_symmetric",
    "symmetric_mate",
    "series_nth_root",
    "parse_series",
    "field_from_json",
]

ORD_INF = math.inf


def _conv(fa, fb, nmax, field, raw):
    """Coefficients of fa*fb up to index nmax (inclusive)."""
    out = [field.zero] * (nmax + 1)
    if raw:
        for i, a in enumerate(fa):
            if i > nmax:
                break
            if not a:
                continue
            top = nmax - i
            for j, b in enumerate(fb):
                if j > top:
                    break
                if b:
                    out[i + j] = out[i + j] + a * b
    else:
        add, mul, isz = field.add, field.mul, field.is_zero
        for i, a in enumerate(fa):
            if i > nmax:
                break
            if isz(a):
                continue
            top = nmax - i
            for j, b in enumerate(fb):
                if j > top:
                    break
                if not isz(b):
                    out[i + j] = add(out[i + j], mul(a, b))
    return out


class TruncatedSeries:
    """Coefficients c_0..c_N of a series known modulo z^(N+1)."""

    __slots__ = ("field", "trunc", "coeffs", "ord", "_raw")

    def __init__(self, field, coeffs, trunc=None):
        coeffs = list(coeffs)
        if trunc is None:
            trunc = len(coeffs) - 1
        if trunc < 0:
            raise ValueError("trunc must be >= 0")
        if len(coeffs) < trunc + 1:
            coeffs = coeffs + [field.zero] * (trunc + 1 - len(coeffs))
        else:
            coeffs = coeffs[: trunc + 1]
        self.field = field
        self.trunc = trunc
        self.coeffs = tuple(coeffs)
        # structural tests use the absolute tolerance: a coefficient of
        # honest size must stay visible next to a huge tail
        self.ord = ORD_INF
        for i, c in enumerate(self.coeffs):
            if not field.is_zero(c):
                self.ord = i
                break
        if isinstance(field, ApproxField):
            self._raw = True
        else:
            self._raw = all(isinstance(c, mpq) for c in self.coeffs)

    # -- constructors

    @classmethod
    def zero(cls, field, trunc):
        return cls(field, [], trunc)

    @classmethod
    def monomial(cls, field, n, trunc, coeff=1):
        c = [field.zero] * (trunc + 1)
        if n <= trunc:
            c[n] = field.coerce(coeff)
        return cls(field, c, trunc)

    @classmethod
    def identity(cls, field, trunc):
        return cls.monomial(field, 1, trunc)

    @classmethod
    def from_pairs(cls, field, pairs, trunc):
        """Series from (index, coefficient) pairs."""
        c = [field.zero] * (trunc + 1)
        for i, v in pairs:
            if i <= trunc:
                c[i] = field.add(c[i], field.coerce(v))
        return cls(field, c, trunc)

    # -- inspection

    def _scale(self):
        if isinstance(self.field, ApproxField):
            return max((abs(c) for c in self.coeffs), default=0.0)
        return None

    def coeff(self, i):
        return self.coeffs[i] if i <= self.trunc else self.field.zero

    def support(self):
        return [
            i for i, c in enumerate(self.coeffs) if not self.field.is_zero(c)
        ]

    @property
    def is_unit(self):
        return self.ord == 1

    @property
    def is_gamma(self):
        return self.ord != ORD_INF and self.ord >= 2

    def require_unit(self, what="series"):
        if not self.is_unit:
            raise OrderMismatch(f"{what} must have order 1, got {self.ord}")
        return self

    def require_gamma(self, what="series"):
        if not self.is_gamma:
            raise OrderMismatch(f"{what} must have order >= 2, got {self.ord}")
        return self

    def _eff_ord(self):
        """Order used in contamination bookkeeping: unknown tail may start
        right past the truncation."""
        return min(self.ord, self.trunc + 1)

    # -- comparison

    def eq(self, other, refs=()):
        """Equality modulo z^(min(truncs)+1).

        ``refs`` lists extra series whose magnitudes join the tolerance
        scale on the approx backend; verification of a computed result
        should pass the result itself so the comparison measures backward
        error at the scale the computation actually ran at.
        """
        self._check_field(other)
        n = min(self.trunc, other.trunc)
        f = self.field
        if isinstance(f, ApproxField):
            scale = max(
                max((abs(c) for c in self.coeffs[: n + 1]), default=0.0),
                max((abs(c) for c in other.coeffs[: n + 1]), default=0.0),
                *(s._scale() for s in refs),
            )
        else:
            scale = None
        return all(
            f.eq(self.coeffs[i], other.coeffs[i], scale=scale) for i in range(n + 1)
        )

    def _check_field(self, other):
        if self.field != other.field:
            raise TypeError(
                f"mixed backends: {self.field!r} vs {other.field!r}"
            )

    # -- ring arithmetic

    def __add__(self, other):
        self._check_field(other)
        n = min(self.trunc, other.trunc)
        f = self.field
        return TruncatedSeries(
            f, [f.add(self.coeffs[i], other.coeffs[i]) for i in range(n + 1)], n
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        return TruncatedSeries(f, [f.neg(c) for c in self.coeffs], self.trunc)

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        return TruncatedSeries(f, [f.mul(c, x) for x in self.coeffs], self.trunc)

    def __mul__(self, other):
        self._check_field(other)
        nout = min(
            self.trunc + other._eff_ord(), other.trunc + self._eff_ord()
        )
        nout = int(min(nout, self.trunc + other.trunc + 1))
        raw = self._raw and other._raw
        return TruncatedSeries(
            self.field, _conv(self.coeffs, other.coeffs, nout, self.field, raw), nout
        )

    def pow_ring(self, k):
        """Ring power self**k (k >= 0)."""
        if k < 0:
            raise ValueError("ring power needs k >= 0")
        result = TruncatedSeries.from_pairs(self.field, [(0, 1)], self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, r):
        """Multiply by z^r (r >= 0)."""
        f = self.field
        return TruncatedSeries(
            f, [f.zero] * r + list(self.coeffs), self.trunc + r
        )

    def unshift(self, r):
        """Divide by z^r; the first r coefficients must vanish."""
        scale = self._scale()
        for i in range(min(r, self.trunc + 1)):
            if not self.field.is_zero(self.coeffs[i], scale=scale):
                raise OrderMismatch(f"z^{r} does not divide the series")
        return TruncatedSeries(self.field, self.coeffs[r:], self.trunc - r)

    def truncate(self, n):
        if n >= self.trunc:
            return self
        return TruncatedSeries(self.field, self.coeffs[: n + 1], n)

    # -- composition

    def compose(self, other):
        """self(other(z)), defined for ord other >= 1."""
        self._check_field(other)
        f = self.field
        if other.ord == 0:
            raise CompositionUndefined("inner series must have order >= 1")
        ob = int(other._eff_ord())
        ta, tb = self.trunc, other.trunc
        scale = self._scale()
        j0 = ta + 1
        for j in range(1, ta + 1):
            if not f.is_zero(self.coeffs[j], scale=scale):
                j0 = j
                break
        nout = min((ta + 1) * ob - 1, tb + (j0 - 1) * ob)
        if nout < 0:
            nout = 0
        k_top = min(ta, nout // ob)
        raw = self._raw and other._raw
        res = [self.coeffs[k_top]] + [f.zero] * nout
        for j in range(k_top - 1, -1, -1):
            res = _conv(res, other.coeffs, nout, f, raw)
            res[0] = f.add(res[0], self.coeffs[j])
        return TruncatedSeries(f, res, nout)

    def subs_pow(self, m):
        """self(z^m) by coefficient spreading (m >= 1)."""
        if m < 1:
            raise ValueError("m must be >= 1")
        f = self.field
        nout = (self.trunc + 1) * m - 1
        c = [f.zero] * (nout + 1)
        for i, x in enumerate(self.coeffs):
            c[i * m] = x
        return TruncatedSeries(f, c, nout)

    def invert(self):
        """Compositional inverse of a unit series."""
        self.require_unit("compositional inverse argument")
        f = self.field
        n = self.trunc
        u = self.coeffs
        inv_u1 = f.inv(u[1])
        v = [f.zero] * (n + 1)
        v[1] = inv_u1
        pc = _PowerCache(f, v)
        for k in range(2, n + 1):
            s = f.zero
            for j in range(2, k + 1):
                if not f.is_zero(u[j]):
                    s = f.add(s, f.mul(u[j], pc.get(j, k)))
            pc.set(k, f.mul(f.neg(s), inv_u1))
        return TruncatedSeries(f, v, n)

    def iterate(self, l):
        """l-fold composition self o self o ... o self."""
        if l < 1:
            raise ValueError("iterate needs l >= 1")
        if self.ord == ORD_INF or self.ord < 1:
            raise CompositionUndefined("iterate needs ord >= 1")
        result = self
        for _ in range(l - 1):
            result = result.compose(self)
        return result

    # -- i/o

    def to_json(self):
        f = self.field
        return {
            "trunc": self.trunc,
            "field": f.field_json(),
            "coeffs": [f.scalar_to_json(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data, field=None):
        if field is None:
            field = field_from_json(data["field"])
        coeffs = [field.scalar_from_json(c) for c in data["coeffs"]]
        return cls(field, coeffs, data["trunc"])

    def __str__(self):
        f = self.field
        terms = []
        for i in self.support():
            c = f.scalar_str(self.coeffs[i])
            if i == 0:
                terms.append(c)
            elif i == 1:
                terms.append(f"{c}*z" if c != "1" else "z")
            else:
                terms.append(f"{c}*z^{i}" if c != "1" else f"z^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} (mod z^{self.trunc + 1})"

    def __repr__(self):
        return f"TruncatedSeries({self})"


class _PowerCache:
    """Lazy coefficients of powers of a growing order-1 series.

    ``coeffs`` is shared with the caller and filled in increasing index.
    An entry (q, i) may be requested while coefficient j = i-q+1 is still
    undetermined (held at zero); ``set`` patches such entries with the only
    term they miss, q * b1^(q-1) * b_j.
    """

    def __init__(self, field, coeffs):
        self.field = field
        self.b = coeffs
        self.memo = {}

    def get(self, q, i):
        if q == 1:
            return self.b[i]
        if i < q:
            return self.field.zero
        key = (q, i)
        val = self.memo.get(key)
        if val is not None:
            return val
        f = self.field
        s = f.zero
        b = self.b
        for t in range(q - 1, i):
            x = b[i - t]
            if not f.is_zero(x):
                s = f.add(s, f.mul(self.get(q - 1, t), x))
        self.memo[key] = s
        return s

    def set(self, j, val):
        self.b[j] = val
        f = self.field
        if f.is_zero(val):
            return
        # every memoized entry whose highest-index term is b_j needs the
        # patch, including powers q beyond the length of the coefficient
        # list (they arise whenever the subject's order exceeds half the
        # truncation)
        b1 = self.b[1]
        b1p = {}
        for q, i in self.memo:
            if i != q - 1 + j:
                continue
            p = b1p.get(q)
            if p is None:
                p = f.pow(b1, q - 1)
                b1p[q] = p
            bump = f.mul(f.coerce(q), f.mul(p, val))
            self.memo[(q, i)] = f.add(self.memo[(q, i)], bump)


# ---------------------------------------------------------------------------
# structural operations


def split_symmetric(mu, m, refs=()):
    """Write mu = z^r * R(z^m) with r = ord(mu) mod m, or raise NotSymmetric.

    Returns (r, R); the first support index violating the single residue
    class mod m is reported in the exception.  ``refs`` lists series whose
    magnitudes join the tolerance scale on the approx backend: when mu was
    produced by compositions, its coefficients carry roundoff at the scale
    of those operands, not at mu's own scale.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if mu.ord == ORD_INF:
        raise ValueError("split_symmetric needs a nonzero series")
    r = mu.ord % m
    f = mu.field
    # off-class coefficients are compared against the series magnitude,
    # so float junk from prior compositions does not read as support
    scale = mu._scale()
    if scale is not None:
        for s in refs:
            scale = max(scale, s._scale())
    for i, c in enumerate(mu.coeffs):
        if i % m != r and not f.is_zero(c, scale=scale):
            raise NotSymmetric(i, m)
    k = (mu.trunc - r) // m
    rc = [mu.coeff(r + i * m) for i in range(k + 1)]
    return r, TruncatedSeries(f, rc, k)


def symmetric_mate(r_series, r, n):
    """z^r * R(z)^n, the partner of z^r * R(z^n) under z^n o mu1 = mu2 o z^n."""
    return r_series.pow_ring(n).shift(r)


def series_nth_root(t, n, branch=None):
    """Series L with L^n = t; needs n | ord t.

    The constant-term root of the unit part uses the field's canonical
    branch unless ``branch`` (a scalar with branch^n = 1-times adjustments
    handled by the caller) replaces it.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return t
    if t.ord == ORD_INF:
        raise ValueError("nth root of zero series")
    if t.ord % n != 0:
        raise OrderMismatch(f"ord {t.ord} not divisible by {n}")
    s = t.ord // n
    u = t.unshift(t.ord)
    f = t.field
    k = u.trunc
    uc = u.coeffs
    w0 = f.nth_root(uc[0], n) if branch is None else branch
    w = [f.zero] * (k + 1)
    w[0] = w0
    # powers of w maintained densely, patched as each w_j lands
    pw = [None, w] + [[f.zero] * (k + 1) for _ in range(n - 1)]
    for q in range(2, n + 1):
        pw[q][0] = f.pow(w0, q)
    pivot = f.inv(f.mul(f.coerce(n), f.pow(w0, n - 1)))
    for j in range(1, k + 1):
        # [z^j] w^n with w_j = 0 held back
        for q in range(2, n + 1):
            # convolution of the partial w^(q-1) with w; the i = 0 term
            # pairs with the held-back w_j (still zero) and drops out
            s_ = f.mul(pw[q - 1][j], w0)
            for i in range(1, j):
                x = w[j - i]
                if not f.is_zero(x):
                    s_ = f.add(s_, f.mul(pw[q - 1][i], x))
            pw[q][j] = s_
        wj = f.mul(f.sub(uc[j], pw[n][j]), pivot)
        w[j] = wj
        if not f.is_zero(wj):
            for q in range(2, n + 1):
                pw[q][j] = f.add(
                    pw[q][j], f.mul(f.mul(f.coerce(q), f.pow(w0, q - 1)), wj)
                )
    return TruncatedSeries(f, w, k).shift(s)


# ---------------------------------------------------------------------------
# parsing and serialization helpers


def field_from_json(data):
    if data["kind"] == "exact":
        return ExactField(conductor=data.get("conductor", 24))
    if data["kind"] == "approx":
        return ApproxField(tol=data.get("tol", 1e-9))
    raise ValueError(f"unknown field kind {data['kind']!r}")


_TERM_RE = re.compile(
    r"^(?P<sign>[+-])?(?P<coef>\d+(?:/\d+)?)?"
    r"(?:\*?(?P<var>z)(?:\^(?P<exp>\d+))?)?$"
)


def parse_series(field, text, trunc):
    """Parse the compact text form, e.g. "z^2 + 3*z^5 - z^7" or "1/2*z^3"."""
    pairs = []
    chunks = re.split(r"(?=[+-])", text.replace(" ", ""))
    for chunk in chunks:
        if not chunk:
            continue
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse series term {chunk!r}")
        q = mpq(m.group("coef")) if m.group("coef") else mpq(1)
        if m.group("sign") == "-":
            q = -q
        if m.group("var") is None:
            exp = 0
        elif m.group("exp") is None:
            exp = 1
        else:
            exp = int(m.group("exp"))
        pairs.append((exp, q))
    return TruncatedSeries.from_pairs(field, pairs, trunc)
