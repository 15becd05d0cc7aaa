"""Exact scalar arithmetic: roots of unity and cyclotomic field elements.

A root of unity is stored as the reduced fraction of a full turn it represents
(``RootFraction(1, 4)`` is ``exp(2*pi*i/4) = i``).  General scalars live in the
cyclotomic field Q(zeta_L) as coefficient vectors over the power basis
``1, zeta, ..., zeta^(phi(L)-1)``, reduced modulo the L-th cyclotomic
polynomial, so equality, inversion and zero-tests are exact.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

#: Marker returned by :func:`mult_order` for elements of infinite order.
INFINITE = math.inf

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _euler_phi(n: int) -> int:
    count = 0
    for k in range(1, n + 1):
        if math.gcd(k, n) == 1:
            count += 1
    return count


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_div_exact(num, den):
    """Divide integer polynomials exactly (den monic), ascending coefficients."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd]
        out[k] = c
        if c:
            for j, y in enumerate(den):
                num[k + j] -= c * y
    assert all(c == 0 for c in num[: dd]), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients of Phi_n, ascending, monic, exact integers."""
    if n < 1:
        raise ValueError("conductor must be positive")
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    return tuple(_poly_div_exact(num, den))


@lru_cache(maxsize=None)
def _field_data(L: int):
    """(degree, rows) where rows[k-degree] gives x^k mod Phi_L for k in [degree, L)."""
    poly = cyclotomic_polynomial(L)
    deg = len(poly) - 1
    top = tuple(-c for c in poly[:deg])
    rows = []
    cur = list(top)
    rows.append(tuple(cur))
    for _ in range(deg + 1, L):
        carry = cur[deg - 1]
        cur = [0] + cur[: deg - 1]
        if carry:
            cur = [cur[i] + carry * top[i] for i in range(deg)]
        rows.append(tuple(cur))
    return deg, tuple(rows)


class RootFraction:
    """A root of unity exp(2*pi*i*num/den), kept with 0 <= num < den, gcd 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        f = Fraction(num, den)
        f -= math.floor(f)
        object.__setattr__(self, "num", f.numerator)
        object.__setattr__(self, "den", f.denominator)

    def __setattr__(self, *_):
        raise AttributeError("RootFraction is immutable")

    @classmethod
    def parse(cls, text: str) -> "RootFraction":
        text = text.strip()
        if "/" in text:
            a, b = text.split("/")
            return cls(int(a), int(b))
        return cls(int(text), 1)

    @property
    def turns(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def order(self) -> int:
        """Multiplicative order (the denominator, by canonicity)."""
        return self.den

    def is_one(self) -> bool:
        return self.num == 0

    def __mul__(self, other):
        if not isinstance(other, RootFraction):
            return NotImplemented
        return RootFraction(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    def inverse(self) -> "RootFraction":
        return RootFraction(-self.num, self.den)

    def __pow__(self, k: int) -> "RootFraction":
        return RootFraction(self.num * k, self.den)

    def __eq__(self, other):
        return (isinstance(other, RootFraction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def text(self) -> str:
        return f"{self.num}/{self.den}"

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"RootFraction({self.num}, {self.den})"

    def to_cyc(self) -> "CycNumber":
        return CycNumber.from_root(self)


ROOT_ONE = RootFraction(0, 1)
ROOT_MINUS_ONE = RootFraction(1, 2)


class CycNumber:
    """Element of Q(zeta_L) in the power basis modulo Phi_L."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        deg, _ = _field_data(conductor)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != deg:
            raise ValueError(f"need {deg} coefficients for conductor {conductor}")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("CycNumber is immutable")

    # -- construction -------------------------------------------------

    @classmethod
    def _build(cls, L, dense):
        """From a dense exponent vector (length L) of Fractions."""
        deg, rows = _field_data(L)
        out = list(dense[:deg]) + [_ZERO] * (deg - min(deg, len(dense)))
        for k in range(deg, L):
            c = dense[k] if k < len(dense) else _ZERO
            if c:
                row = rows[k - deg]
                for i in range(deg):
                    if row[i]:
                        out[i] += c * row[i]
        return cls(L, out)

    @classmethod
    def from_rational(cls, value) -> "CycNumber":
        return cls(1, (Fraction(value),))

    @classmethod
    def from_root(cls, root: RootFraction) -> "CycNumber":
        L = root.den
        dense = [_ZERO] * L
        dense[root.num] = _ONE
        return cls._build(L, dense)

    @classmethod
    def zero(cls) -> "CycNumber":
        return _CYC_ZERO

    @classmethod
    def one(cls) -> "CycNumber":
        return _CYC_ONE

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def __bool__(self):
        return not self.is_zero()

    def as_rational(self):
        """The value as a Fraction if it is rational, else None."""
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0]
        return None

    # -- conductor handling ---------------------------------------------

    def rebase(self, M: int) -> "CycNumber":
        """Re-express in Q(zeta_M); M must be a multiple of the conductor."""
        L = self.conductor
        if M == L:
            return self
        if M % L:
            raise ValueError("rebase target must be a multiple of the conductor")
        step = M // L
        dense = [_ZERO] * M
        for t, c in enumerate(self.coeffs):
            if c:
                dense[t * step] = c
        return CycNumber._build(M, dense)

    def _pair(self, other):
        if self.conductor == other.conductor:
            return self, other
        M = math.lcm(self.conductor, other.conductor)
        return self.rebase(M), other.rebase(M)

    @staticmethod
    def _coerce(value):
        if isinstance(value, CycNumber):
            return value
        if isinstance(value, RootFraction):
            return CycNumber.from_root(value)
        if isinstance(value, (int, Fraction)):
            return CycNumber.from_rational(value)
        return None

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._pair(other)
        return CycNumber(a.conductor,
                         tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.conductor, tuple(-c for c in self.coeffs))

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

    def __mul__(self, other):
        if isinstance(other, RootFraction):
            return self.mul_root(other)
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CycNumber(self.conductor, tuple(c * f for c in self.coeffs))
        if not isinstance(other, CycNumber):
            return NotImplemented
        a, b = self._pair(other)
        L = a.conductor
        dense = [_ZERO] * L
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        k = i + j
                        if k >= L:
                            k -= L
                        dense[k] += x * y
        return CycNumber._build(L, dense)

    __rmul__ = __mul__

    def mul_root(self, root: RootFraction) -> "CycNumber":
        """Multiply by a root of unity (cheap exponent shift)."""
        if root.is_one():
            return self
        M = math.lcm(self.conductor, root.den)
        a = self.rebase(M)
        e = root.num * (M // root.den)
        dense = [_ZERO] * M
        for t, c in enumerate(a.coeffs):
            if c:
                dense[(t + e) % M] = c
        return CycNumber._build(M, dense)

    def inverse(self) -> "CycNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.conductor == 1:
            return CycNumber(1, (1 / self.coeffs[0],))
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        while any(c != 0 for c in r1):
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant gcd (Phi_L is irreducible over Q)
        const = next(c for c in r0 if c != 0)
        assert all(c == 0 for c in r0[1:]), "cyclotomic gcd must be constant"
        inv = [c / const for c in s0]
        dense = inv + [_ZERO] * (self.conductor - len(inv))
        return CycNumber._build(self.conductor, dense)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int) -> "CycNumber":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNumber.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __repr__(self):
        return f"CycNumber({self.conductor}, {self.coeffs!r})"

    def __str__(self):
        rat = self.as_rational()
        if rat is not None:
            return str(rat)
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"z{self.conductor}^{k}")
            else:
                parts.append(f"{c}*z{self.conductor}^{k}")
        return " + ".join(parts)

    def as_root(self):
        """Return this value as a RootFraction if it is a root of unity, else None."""
        order = mult_order(self)
        if order is INFINITE:
            return None
        bound = math.lcm(2, self.conductor)
        for t in range(bound):
            cand = RootFraction(t, bound)
            if self == CycNumber.from_root(cand):
                return cand
        return None


def _poly_divmod_frac(num, den):
    """Polynomial division over Fractions, ascending coefficients."""
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    dlist = list(den)
    while dlist and dlist[-1] == 0:
        dlist.pop()
    dd = len(dlist) - 1
    lead = dlist[-1]
    if len(num) - 1 < dd:
        return [_ZERO], num or [_ZERO]
    out = [_ZERO] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd] / lead
        out[k] = c
        if c:
            for j, y in enumerate(dlist):
                num[k + j] -= c * y
    rem = num[:dd] or [_ZERO]
    return out, rem


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    b = list(b) + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


_CYC_ZERO = CycNumber(1, (_ZERO,))
_CYC_ONE = CycNumber(1, (_ONE,))


def embed(root: RootFraction) -> CycNumber:
    """Embed a root of unity into its cyclotomic field."""
    return CycNumber.from_root(root)


def mult_order(a):
    """Multiplicative order of a nonzero scalar, or INFINITE.

    Elements of Q(zeta_L) of finite order have order dividing lcm(2, L), so the
    search is bounded.
    """
    if isinstance(a, RootFraction):
        return a.den
    if a.is_zero():
        raise ValueError("zero has no multiplicative order")
    rat = a.as_rational()
    if rat is not None:
        if rat == 1:
            return 1
        if rat == -1:
            return 2
        return INFINITE
    bound = math.lcm(2, a.conductor)
    acc = a
    for k in range(1, bound + 1):
        if acc.is_one():
            return k
        acc = acc * a
    return INFINITE


def q_int(s: int, q) -> CycNumber:
    """The q-integer (s)_q = 1 + q + ... + q^(s-1)."""
    if s < 0:
        raise ValueError("q-integer needs s >= 0")
    q = CycNumber._coerce(q)
    total = CycNumber.zero()
    power = CycNumber.one()
    for _ in range(s):
        total = total + power
        power = power * q
    return total


def q_factorial(s: int, q) -> CycNumber:
    """The q-factorial (s)_q! = (1)_q (2)_q ... (s)_q."""
    if s < 0:
        raise ValueError("q-factorial needs s >= 0")
    q = CycNumber._coerce(q)
    out = CycNumber.one()
    for k in range(1, s + 1):
        out = out * q_int(k, q)
    return out
