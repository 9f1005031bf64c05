"""Exact scalar arithmetic over prime fields F_p and the rationals.

Scalars are plain Python values in canonical form: residues in ``[0, p)``
for F_p (as ``int``) and ``fractions.Fraction`` for the rationals.  The
field object supplies the operations, so hot loops can work on raw values.

Characteristics 2 and 3 are rejected: the algebra families served by this
package are only defined away from them.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


class FieldError(ValueError):
    """Invalid field construction or an operation outside a field's domain."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin, valid for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """F_p for a prime p >= 5.  Scalars are ints in [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p in (2, 3):
            raise FieldError(f"characteristic {p} is not supported (needs p >= 5)")
        self.p = p
        self.char = p
        self.modulus = p
        self.name = f"fp:{p}"
        self.zero = 0
        self.one = 1
        self._cube_root_cache: dict[int, int | None] = {}

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def of(self, n) -> int:
        """Canonical image of a Python int or Fraction."""
        if isinstance(n, Fraction):
            return self.div(n.numerator % self.p, n.denominator % self.p)
        return n % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return -x % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.name}")
        return pow(x, -1, self.p)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def is_zero(self, x) -> bool:
        return x % self.p == 0

    def primitive_cube_root(self) -> int:
        """The smaller residue z with z^2 + z + 1 = 0, if p = 1 (mod 3)."""
        p = self.p
        if p % 3 != 1:
            raise FieldError(f"no primitive cube root of unity in {self.name} (p != 1 mod 3)")
        s = self.square_root(p - 3)  # sqrt(-3); exists since p = 1 mod 3
        assert s is not None
        half = self.inv(2)
        z1 = (s - 1) * half % p
        z2 = (-s - 1) * half % p
        return min(z1, z2)

    def square_root(self, a) -> int | None:
        """Tonelli-Shanks.  Returns the smaller root, or None for a non-residue."""
        p = self.p
        a = a % p
        if a == 0:
            return 0
        if pow(a, (p - 1) // 2, p) != 1:
            return None
        if p % 4 == 3:
            r = pow(a, (p + 1) // 4, p)
            return min(r, p - r)
        # write p-1 = q * 2^s with q odd
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            t2, i = t * t % p, 1
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
        return min(r, p - r)

    def cube_root(self, a) -> int | None:
        """The smallest residue r with r^3 = a, or None if a is a non-cube."""
        p = self.p
        a = a % p
        if a in self._cube_root_cache:
            return self._cube_root_cache[a]
        r = self._cube_root(a)
        self._cube_root_cache[a] = r
        return r

    def _cube_root(self, a: int) -> int | None:
        p = self.p
        if a == 0:
            return 0
        if p % 3 == 2:
            # cubing is a bijection
            return pow(a, (2 * p - 1) // 3, p)
        if pow(a, (p - 1) // 3, p) != 1:
            return None
        # Adleman-Manders-Miller, r = 3.  Write p-1 = 3^t * m with 3 ∤ m.
        t, m = 0, p - 1
        while m % 3 == 0:
            m //= 3
            t += 1
        g = 2
        while pow(g, (p - 1) // 3, p) == 1:
            g += 1
        gs = pow(g, m, p)                    # generates the 3-Sylow subgroup, order 3^t
        u = pow(3, -1, m)
        x0 = pow(a, u, p)                    # x0^3 = a * D with D = a^(3u-1) in <gs>
        d_elt = x0 * x0 % p * x0 % p * pow(a, -1, p) % p
        e = self._dlog_pow3(d_elt, gs, t)    # D = gs^e; a cube => 3 | e
        if e % 3 != 0:
            return None
        x = x0 * pow(gs, (-(e // 3)) % (p - 1), p) % p
        omega = pow(gs, 3 ** (t - 1), p)     # primitive cube root of unity
        roots = (x, x * omega % p, x * omega % p * omega % p)
        return min(r for r in roots if pow(r, 3, p) == a)

    def _dlog_pow3(self, d_elt: int, gs: int, t: int) -> int:
        """Discrete log base gs (order 3^t) by base-3 digits (Pohlig-Hellman)."""
        p = self.p
        omega = pow(gs, 3 ** (t - 1), p)
        omega2 = omega * omega % p
        e, cur = 0, d_elt
        for i in range(t):
            w = pow(cur, 3 ** (t - 1 - i), p)
            if w == 1:
                digit = 0
            elif w == omega:
                digit = 1
            elif w == omega2:
                digit = 2
            else:
                raise FieldError("element outside the 3-Sylow subgroup")
            if digit:
                e += digit * 3 ** i
                cur = cur * pow(gs, (-digit * 3 ** i) % (p - 1), p) % p
        return e


class RationalField:
    """The rationals; scalars are fractions in lowest terms."""

    def __init__(self):
        self.char = 0
        self.modulus = None
        self.name = "qq"
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __repr__(self):
        return "RationalField()"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("qq")

    def of(self, n) -> Fraction:
        return Fraction(n)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("0 has no inverse in qq")
        return 1 / Fraction(x)

    def div(self, x, y):
        if y == 0:
            raise ZeroDivisionError("0 has no inverse in qq")
        return Fraction(x) / y

    def is_zero(self, x) -> bool:
        return x == 0

    def primitive_cube_root(self):
        raise FieldError("no primitive cube root of unity in qq")

    def square_root(self, a) -> Fraction | None:
        a = Fraction(a)
        if a < 0:
            return None
        rn, rd = isqrt(a.numerator), isqrt(a.denominator)
        if rn * rn == a.numerator and rd * rd == a.denominator:
            return Fraction(rn, rd)
        return None

    def cube_root(self, a) -> Fraction | None:
        a = Fraction(a)
        sign = -1 if a < 0 else 1
        rn = _icbrt(abs(a.numerator))
        rd = _icbrt(a.denominator)
        if rn is not None and rd is not None:
            return Fraction(sign * rn, rd)
        return None


def _icbrt(n: int) -> int | None:
    """Exact integer cube root, or None."""
    if n == 0:
        return 0
    x = int(round(n ** (1.0 / 3)))
    for c in (x - 1, x, x + 1):
        if c >= 0 and c * c * c == n:
            return c
    return None


def parse_field(spec: str):
    """Parse a CLI field label: ``fp:<prime>`` or ``qq``."""
    if spec == "qq":
        return RationalField()
    if spec.startswith("fp:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise FieldError(f"bad field spec {spec!r}") from None
        return PrimeField(p)
    raise FieldError(f"bad field spec {spec!r} (expected fp:<prime> or qq)")
