"""Finite-precision p-adic scalars with explicit valuation and precision.

A nonzero scalar is p^val * unit with the unit known modulo p^rel, so the
absolute precision (the power of p below which all digits are known) is
val + rel.  An inexact zero O(p^N) is stored with unit == 0 and val == N;
the exact zero has val == INF.  Additions work at the minimum absolute
precision of the operands, multiplications at the minimum relative
precision; no operation ever reports more digits than that.

Negative valuations are allowed throughout (the pipeline's final answer
has valuation -2), and exact rationals with p-free denominators embed with
full working precision.
"""

from fractions import Fraction

from .errors import (DivisionByZero, IrrationalRoots, LogDomain, NotASquare,
                     PrecisionExhausted)

INF = float("inf")

_WORKING_PREC = 60


def working_precision():
    return _WORKING_PREC


def set_working_precision(n):
    """Set the default relative precision used when embedding exact data."""
    global _WORKING_PREC
    if n < 1:
        raise ValueError("working precision must be >= 1")
    _WORKING_PREC = int(n)


def vp(n, p):
    """Valuation of a nonzero integer (INF for 0)."""
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PadicScalar:
    __slots__ = ("p", "val", "unit", "rel")

    def __init__(self, p, val, unit, rel):
        self.p = p
        self.val = val
        self.unit = unit
        self.rel = rel

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, p, abs_prec=INF):
        return cls(p, abs_prec, 0, 0)

    @classmethod
    def from_int(cls, n, p, prec=None):
        return cls.from_rational(Fraction(n), p, prec)

    @classmethod
    def from_rational(cls, q, p, prec=None):
        q = Fraction(q)
        if prec is None:
            prec = _WORKING_PREC
        if q == 0:
            return cls.zero(p)
        vn = vp(q.numerator, p)
        vd = vp(q.denominator, p)
        num = q.numerator // p**vn
        den = q.denominator // p**vd
        unit = num * pow(den, -1, p**prec) % p**prec
        return cls(p, vn - vd, unit, prec)

    @classmethod
    def _make(cls, p, v0, scaled, abs_prec):
        # scaled is an integer representing (value / p^v0), known mod
        # p^(abs_prec - v0)
        if abs_prec == INF and scaled == 0:
            return cls.zero(p)
        rel_window = abs_prec - v0
        if rel_window != INF:
            rel_window = int(rel_window)
            if rel_window <= 0:
                return cls.zero(p, abs_prec)
            scaled %= p**rel_window
        if scaled == 0:
            return cls.zero(p, abs_prec)
        w = vp(scaled, p)
        val = v0 + w
        rel = abs_prec - val
        rel = _WORKING_PREC if rel == INF else int(rel)
        unit = (scaled // p**w) % p**rel
        return cls(p, val, unit, rel)

    # -- predicates / accessors -------------------------------------------

    def is_zero(self):
        """True when every known digit is zero."""
        return self.unit == 0

    def is_exact_zero(self):
        return self.unit == 0 and self.val == INF

    @property
    def abs_prec(self):
        if self.unit == 0:
            return self.val
        return self.val + self.rel

    def valuation(self):
        """Valuation, or a lower bound (== abs_prec) for an inexact zero."""
        return self.val

    def lift(self):
        """The canonical rational representative p^val * unit."""
        if self.unit == 0:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.val

    def digits(self):
        """Base-p digits from p^val up to the absolute precision."""
        if self.unit == 0:
            return []
        out = []
        u = self.unit
        for _ in range(self.rel):
            u, d = divmod(u, self.p)
            out.append(d)
        return out

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other, abs_target=None):
        """Embed an exact int/Fraction with enough precision for the
        operation at hand."""
        if isinstance(other, PadicScalar):
            return other
        if not isinstance(other, (int, Fraction)):
            return None
        q = Fraction(other)
        if q == 0:
            return PadicScalar.zero(self.p)
        v = vp(q.numerator, self.p) - vp(q.denominator, self.p)
        prec = max(_WORKING_PREC, self.rel)
        if abs_target is not None and abs_target != INF:
            prec = max(prec, int(abs_target) - v + 1)
        return PadicScalar.from_rational(q, self.p, prec)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        b = self._coerce(other, abs_target=self.abs_prec)
        if b is None:
            return NotImplemented
        a = self
        if a.p != b.p:
            raise ValueError("mixed primes %d, %d" % (a.p, b.p))
        A = min(a.abs_prec, b.abs_prec)
        if a.is_exact_zero():
            return b if A == b.abs_prec else b._cap(A)
        if b.is_exact_zero():
            return a if A == a.abs_prec else a._cap(A)
        if a.unit == 0 and b.unit == 0:
            return PadicScalar.zero(a.p, A)
        v0 = min(a.val if a.unit else A, b.val if b.unit else A, A)
        p = a.p
        s = 0
        if a.unit and a.val < A:
            s += a.unit * p ** int(a.val - v0)
        if b.unit and b.val < A:
            s += b.unit * p ** int(b.val - v0)
        return PadicScalar._make(p, int(v0), s, A)

    __radd__ = __add__

    def __neg__(self):
        if self.unit == 0:
            return self
        return PadicScalar(self.p, self.val,
                           (-self.unit) % self.p**self.rel, self.rel)

    def __sub__(self, other):
        b = self._coerce(other, abs_target=self.abs_prec)
        if b is None:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        a = self
        if a.p != b.p:
            raise ValueError("mixed primes %d, %d" % (a.p, b.p))
        if a.is_exact_zero() or b.is_exact_zero():
            return PadicScalar.zero(a.p)
        if a.unit == 0 or b.unit == 0:
            # O(p^N) * x has valuation at least N + val(x)
            return PadicScalar.zero(a.p, a.val + b.val)
        rel = min(a.rel, b.rel)
        unit = a.unit * b.unit % a.p**rel
        return PadicScalar(a.p, a.val + b.val, unit, rel)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        a = self
        if a.p != b.p:
            raise ValueError("mixed primes %d, %d" % (a.p, b.p))
        if b.unit == 0:
            raise DivisionByZero("divisor has no known nonzero digit")
        if a.is_exact_zero():
            return a
        if a.unit == 0:
            return PadicScalar.zero(a.p, a.val - b.val)
        rel = min(a.rel, b.rel)
        unit = a.unit * pow(b.unit, -1, a.p**rel) % a.p**rel
        return PadicScalar(a.p, a.val - b.val, unit, rel)

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return b / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return PadicScalar(self.p, 0, 1, self.rel if self.unit else _WORKING_PREC)
        if n < 0:
            return (PadicScalar(self.p, 0, 1, self.rel) / self) ** (-n)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        b = self._coerce(other, abs_target=self.abs_prec)
        if b is None:
            return NotImplemented
        try:
            return (self - b).is_zero()
        except PrecisionExhausted:
            return True

    def __hash__(self):
        raise TypeError("PadicScalar is not hashable (fuzzy equality)")

    # -- precision management ---------------------------------------------

    def _cap(self, abs_prec):
        """Forget digits beyond absolute precision abs_prec."""
        if abs_prec >= self.abs_prec:
            return self
        if self.unit == 0 or abs_prec <= self.val:
            return PadicScalar.zero(self.p, abs_prec)
        return PadicScalar._make(self.p, self.val, self.unit, abs_prec)

    def with_abs_prec(self, abs_prec):
        out = self._cap(abs_prec)
        if out.unit == 0 and out.val != INF and out.val <= 0 and abs_prec <= 0:
            raise PrecisionExhausted("capped below one digit")
        return out

    def residue(self, k):
        """Integer representative mod p^k (valuation must be >= 0)."""
        if self.unit == 0:
            if self.val != INF and self.val < k:
                raise PrecisionExhausted(
                    "known only O(p^%s), need mod p^%d" % (self.val, k))
            return 0
        if self.val < 0:
            raise ValueError("negative valuation has no residue")
        if self.abs_prec < k:
            raise PrecisionExhausted(
                "abs precision %s < requested %d" % (self.abs_prec, k))
        return self.unit * self.p**self.val % self.p**k

    # -- rendering ----------------------------------------------------------

    def digit_string(self):
        """Render as a sum of digit * p^k terms, O(p^N) last, matching the
        style 3^-2 + 3^-1 + 2 + 3^1 + ... + O(3^7)."""
        p = self.p
        if self.is_exact_zero():
            return "0"
        if self.unit == 0:
            return "O(%d^%d)" % (p, self.val)
        terms = []
        for i, d in enumerate(self.digits()):
            if d == 0:
                continue
            k = self.val + i
            if k == 0:
                terms.append(str(d))
            elif d == 1:
                terms.append("%d^%d" % (p, k))
            else:
                terms.append("%d*%d^%d" % (d, p, k))
        terms.append("O(%d^%d)" % (p, self.abs_prec))
        return " + ".join(terms)

    def to_json(self):
        if self.unit == 0:
            return {"p": self.p, "valuation": None, "digits": [],
                    "prec": None if self.val == INF else int(self.val)}
        return {"p": self.p, "valuation": int(self.val),
                "digits": self.digits(), "prec": int(self.abs_prec)}

    def __repr__(self):
        return self.digit_string()


def arith(a, b, op):
    """Dispatcher used by the randomized algebra suites."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown op %r" % op)


def hensel_sqrt(a, branch):
    """Square root of a unit square (or a square with even valuation) in Z_p,
    on the branch congruent to `branch` mod p.  Quadratically convergent."""
    p = a.p
    if p == 2:
        raise ValueError("p must be odd")
    if a.is_zero():
        if a.is_exact_zero():
            return a
        return PadicScalar.zero(p, -(-int(a.val) // 2))
    if a.val % 2 != 0:
        raise NotASquare("valuation %s is odd" % a.val)
    rel = a.rel
    a0 = a.unit % p
    if branch % p == 0 or branch * branch % p != a0:
        if pow(a0, (p - 1) // 2, p) != 1:
            raise NotASquare("%d is not a quadratic residue mod %d" % (a0, p))
        raise NotASquare("branch %d does not square to %d mod %d"
                         % (branch, a0, p))
    x = branch % p
    known = 1
    mod = p
    while known < rel:
        known = min(2 * known, rel)
        mod = p**known
        # Newton step for x^2 = unit
        x = x * (3 - pow(x, 2, mod * p) * pow(a.unit % mod, p - 2, mod)) // 1
        inv2 = pow(2, -1, mod)
        x = (x % mod)
        x = (x + a.unit % mod * pow(x, -1, mod)) * inv2 % mod
    return PadicScalar(p, a.val // 2, x % p**rel, rel)


def quad_roots(trace, norm):
    """Both roots of X^2 - trace*X + norm in Q_p, ordered by valuation.

    Found through the discriminant: integral slopes force the discriminant
    to be a square with even valuation.  Raises IrrationalRoots otherwise.
    The slope gap shows up as the usual precision loss in the smaller root.
    """
    p = trace.p
    disc = trace * trace - 4 * norm
    if disc.is_zero():
        if disc.is_exact_zero():
            half = trace / 2
            return half, half
        raise IrrationalRoots(
            "discriminant vanishes to precision O(p^%s); roots not separable"
            % disc.val)
    try:
        branch = None
        u0 = disc.unit % p
        if disc.val % 2 == 0:
            for c in range(1, p):
                if c * c % p == u0:
                    branch = c
                    break
        if branch is None:
            raise NotASquare("odd valuation or non-residue")
        s = hensel_sqrt(disc, branch)
    except NotASquare as exc:
        raise IrrationalRoots(
            "Hecke quadratic has no Q_p roots: %s" % exc) from exc
    alpha = (trace + s) / 2
    beta = (trace - s) / 2
    if beta.val < alpha.val:
        alpha, beta = beta, alpha
    return alpha, beta


def teichmuller(a, p, prec=None):
    """The Teichmuller lift: the (p-1)-st root of unity congruent to a mod p."""
    if prec is None:
        prec = _WORKING_PREC
    a %= p
    if a == 0:
        raise ValueError("a must be nonzero mod p")
    x = a
    for k in range(1, prec):
        x = pow(x, p, p**(k + 1))
    return PadicScalar(p, 0, x % p**prec, prec)


def padic_log(x):
    """log of a 1-unit via the alternating series, with a rigorous
    truncation bound (term k has valuation >= k*v(x-1) - v_p(k))."""
    p = x.p
    t = x - 1
    if t.is_zero():
        return PadicScalar.zero(p, t.abs_prec if not t.is_exact_zero() else INF)
    v = int(t.val)
    if v < 1:
        raise LogDomain("argument is not a 1-unit (v(x-1) = %s)" % t.val)
    target = t.abs_prec
    if target == INF:
        target = v + _WORKING_PREC
    target = int(target)
    # find K with k*v - v_p(k) >= target for all k > K
    K = 1
    while True:
        K += 1
        bound = K * v
        j = 1
        while p**j <= K:
            j += 1
        if bound - (j - 1) >= target and K * v >= target:
            break
    mod = p**(target + max(0, K.bit_length()))
    tl = t.lift()
    acc = Fraction(0)
    power = Fraction(1)
    for k in range(1, K + 1):
        power *= tl
        acc += power * Fraction((-1)**(k + 1), k)
    return PadicScalar.from_rational(acc, p, target + 5)._cap(target)


def poly_unit_root(coeffs, p, N, start=None):
    """Unit root of an integer polynomial mod p^N by Hensel lifting.

    coeffs[i] is the coefficient of x^i.  The root must be simple mod p;
    `start` optionally fixes the residue.  Returns the root mod p^N.
    """
    def ev(x, mod):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % mod
        return acc

    def ev_d(x, mod):
        acc = 0
        for i in range(len(coeffs) - 1, 0, -1):
            acc = (acc * x + i * coeffs[i]) % mod
        return acc

    roots = [start] if start is not None else [
        r for r in range(1, p) if ev(r, p) == 0]
    for r in roots:
        if ev(r, p) == 0 and ev_d(r, p) % p != 0:
            x = r
            known = 1
            while known < N:
                known = min(2 * known, N)
                mod = p**known
                x = (x - ev(x, mod) * pow(ev_d(x, mod), -1, mod)) % mod
            return x % p**N
    raise IrrationalRoots("no simple unit root mod %d" % p)
