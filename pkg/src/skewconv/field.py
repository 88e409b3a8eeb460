"""Finite field GF(p^n) arithmetic with a designated Frobenius-power automorphism.

Elements are encoded as integers in [0, p^n) whose base-p digits are the
polynomial-basis coordinates, little-endian: in GF(4) built on x^2+x+1 the
class of x is the integer 2.  Multiplication and inversion run on log/antilog
tables built at construction; the automorphism is theta(a) = a^(p^r).
"""

import math

__all__ = ["FiniteField", "FieldElement", "DEFAULT_BINARY_MODULI"]

# max table size kept small enough for full log/antilog lookup
_MAX_FIELD_SIZE = 2**20

# Default irreducible moduli over GF(2) for degrees 2..16, little-endian
# coefficient lists.  All are primitive; degree 1 defaults to x for any p.
DEFAULT_BINARY_MODULI = {
    2: [1, 1, 1],
    3: [1, 1, 0, 1],
    4: [1, 1, 0, 0, 1],
    5: [1, 0, 1, 0, 0, 1],
    6: [1, 1, 0, 0, 0, 0, 1],
    7: [1, 0, 0, 1, 0, 0, 0, 1],
    8: [1, 0, 1, 1, 1, 0, 0, 0, 1],
    9: [1, 0, 0, 0, 1, 0, 0, 0, 0, 1],
    10: [1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1],
    11: [1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    12: [1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1],
    13: [1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    14: [1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1],
    15: [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    16: [1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1],
}


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _prime_factors(m):
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


# -- polynomial helpers over GF(p), little-endian coefficient lists ----------

def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        _poly_trim(a)
        if len(a) - 1 < dm:
            break
        shift = len(a) - 1 - dm
        factor = a[-1] * inv_lead % p
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * mc) % p
        _poly_trim(a)
    return a


def _is_irreducible(modulus, p):
    """Trial division by every monic polynomial of degree <= n/2."""
    n = len(modulus) - 1
    if n < 1:
        return False
    for deg in range(1, n // 2 + 1):
        for low in range(p**deg):
            div = []
            v = low
            for _ in range(deg):
                v, d = divmod(v, p)
                div.append(d)
            div.append(1)
            if not any(_poly_mod(modulus, div, p)):
                return False
    return True


class FiniteField:
    """GF(p^n) with theta(a) = a^(p^r).

    Immutable after construction; log/antilog tables are built once and the
    instance is safe to share across threads.
    """

    def __init__(self, p, n, modulus=None, theta_r=0):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        if p**n > _MAX_FIELD_SIZE:
            raise ValueError(f"field size {p}^{n} exceeds the {_MAX_FIELD_SIZE} table cap")
        if not 0 <= theta_r < n:
            raise ValueError(f"theta_r must satisfy 0 <= r < n, got {theta_r}")

        if modulus is None:
            if n == 1:
                modulus = [0, 1]
            elif p == 2 and n in DEFAULT_BINARY_MODULI:
                modulus = DEFAULT_BINARY_MODULI[n]
            else:
                raise ValueError(f"no default modulus for GF({p}^{n}); supply one")
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != n + 1 or modulus[-1] == 0:
            raise ValueError(f"modulus must have degree exactly {n}")
        if modulus[-1] != 1:
            inv_lead = pow(modulus[-1], p - 2, p)
            modulus = [c * inv_lead % p for c in modulus]
        if not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")

        self.p = p
        self.n = n
        self.modulus = tuple(modulus)
        self.theta_r = theta_r
        self.size = p**n

        # full modulus as a bit mask, used by the carry-less GF(2^n) multiply
        self._mod_full = sum(c << i for i, c in enumerate(modulus)) if p == 2 else None
        self._build_tables()

    # -- integer <-> digit-vector encoding --

    def to_digits(self, value):
        out = []
        for _ in range(self.n):
            value, d = divmod(value, self.p)
            out.append(d)
        return out

    def from_digits(self, digits):
        value = 0
        for d in reversed(list(digits)):
            value = value * self.p + d % self.p
        return value

    # -- raw arithmetic used to bootstrap the tables --

    def _mul_raw(self, a, b):
        p, n = self.p, self.n
        if p == 2:
            top = 1 << n
            mod_full = self._mod_full
            result = 0
            while b:
                if b & 1:
                    result ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= mod_full
            return result
        da = self.to_digits(a)
        db = self.to_digits(b)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        prod = _poly_mod(prod, list(self.modulus), p)
        prod += [0] * (n - len(prod))
        return self.from_digits(prod[:n])

    def _pow_raw(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self._mul_raw(result, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return result

    def _build_tables(self):
        q1 = self.size - 1
        factors = _prime_factors(q1) if q1 > 1 else []
        gen = 1
        for cand in range(2, self.size):
            if all(self._pow_raw(cand, q1 // f) != 1 for f in factors):
                gen = cand
                break
        self.generator = gen
        antilog = [0] * max(q1, 1)
        log = [-1] * self.size
        x = 1
        for i in range(q1):
            antilog[i] = x
            log[x] = i
            x = self._mul_raw(x, gen)
        self._antilog = antilog
        self._log = log

    # -- integer-level field operations --

    def add_int(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        return self.from_digits(
            [(x + y) % p for x, y in zip(self.to_digits(a), self.to_digits(b))]
        )

    def neg_int(self, a):
        if self.p == 2:
            return a
        p = self.p
        return self.from_digits([(-x) % p for x in self.to_digits(a)])

    def sub_int(self, a, b):
        if self.p == 2:
            return a ^ b
        return self.add_int(a, self.neg_int(b))

    def mul_int(self, a, b):
        if a == 0 or b == 0:
            return 0
        q1 = self.size - 1
        return self._antilog[(self._log[a] + self._log[b]) % q1]

    def inv_int(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in the field")
        q1 = self.size - 1
        return self._antilog[-self._log[a] % q1]

    def pow_int(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("division by zero in the field")
            return 0
        q1 = self.size - 1
        return self._antilog[self._log[a] * e % q1]

    def frobenius_int(self, a, i=1):
        """theta^i(a) where theta(a) = a^(p^r); any integer i is accepted."""
        if a == 0:
            return 0
        j = (self.theta_r * i) % self.n
        if j == 0:
            return a
        q1 = self.size - 1
        return self._antilog[self._log[a] * (self.p**j) % q1]

    @property
    def automorphism_order(self):
        return self.n // math.gcd(self.n, self.theta_r)

    def fixed_subfield(self):
        """Values fixed by theta, i.e. the subfield GF(p^gcd(r, n))."""
        return [a for a in range(self.size) if self.frobenius_int(a) == a]

    # -- element construction and formatting --

    def element(self, value):
        return FieldElement(self, value)

    __call__ = element

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def primitive_element(self):
        return FieldElement(self, self.generator)

    def elements(self):
        return [FieldElement(self, v) for v in range(self.size)]

    def element_name(self, value, symbol="a"):
        """Power-of-generator rendering: 0, 1, a, a^2, ..."""
        if value == 0:
            return "0"
        e = self._log[value]
        if e == 0:
            return "1"
        if e == 1:
            return symbol
        return f"{symbol}^{e}"

    def __eq__(self, other):
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.n, self.modulus, self.theta_r) == (
            other.p,
            other.n,
            other.modulus,
            other.theta_r,
        )

    def __hash__(self):
        return hash((self.p, self.n, self.modulus, self.theta_r))

    def __repr__(self):
        return f"FiniteField(p={self.p}, n={self.n}, theta_r={self.theta_r})"


class FieldElement:
    """Immutable value in a FiniteField; compares equal to plain ints by value."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        if not 0 <= value < field.size:
            raise ValueError(f"value {value} outside [0, {field.size})")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if not isinstance(other, FieldElement):
            return None
        if self.field is not other.field and self.field != other.field:
            raise ValueError("mixed-field operands")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add_int(self.value, other.value))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub_int(self.value, other.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_int(self.value))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_int(self.value, other.value))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(
            self.field, self.field.mul_int(self.value, self.field.inv_int(other.value))
        )

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        return FieldElement(self.field, self.field.pow_int(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv_int(self.value))

    def frobenius(self, i=1):
        return FieldElement(self.field, self.field.frobenius_int(self.value, i))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        if isinstance(other, FieldElement):
            self._coerce(other)
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return self.field.element_name(self.value)
