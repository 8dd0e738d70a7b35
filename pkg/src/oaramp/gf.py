"""Exact arithmetic in the finite field GF(p^j).

Elements are encoded as integers in ``[0, q - 1]``: the element with
coefficient vector ``(c_0, ..., c_{j-1})`` over GF(p) has integer value
``sum(c_i * p**i)``.  The encoding is a bijection, 0 is the additive and 1
the multiplicative identity, and the induced total order on integers is the
canonical element order used everywhere downstream (row sorting, generator
columns, share point assignment).

For extension fields the reducing polynomial is the lexicographically
smallest monic irreducible of degree j, coefficients compared from the
constant term upward.  This is deterministic and needs no table.
"""

from __future__ import annotations

import itertools

ORDER_CAP = 2**16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, j) with q = p^j and p prime, or None if q is not a prime power."""
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            j = 0
            m = q
            while m % p == 0:
                m //= p
                j += 1
            return (p, j) if m == 1 else None
        p += 1
    return (q, 1)  # q itself is prime


# -- polynomial helpers over GF(p); coefficient tuples, constant term first --


def _poly_trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for k, bk in enumerate(b):
                out[i + k] = (out[i + k] + ai * bk) % p
    return _poly_trim(out)


def _poly_mod(a: tuple[int, ...], m: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a modulo the monic polynomial m."""
    r = list(a)
    dm = len(m) - 1
    while len(r) - 1 >= dm and r:
        lead = r[-1]
        if lead:
            shift = len(r) - 1 - dm
            for i, mi in enumerate(m):
                r[shift + i] = (r[shift + i] - lead * mi) % p
        r.pop()
    return _poly_trim(r)


def _monic_polys(degree: int, p: int):
    """All monic polynomials of the given degree, low-order coefficients first."""
    for tail in itertools.product(range(p), repeat=degree):
        yield tail + (1,)


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division of a monic polynomial by every lower-degree monic polynomial."""
    degree = len(poly) - 1
    if degree < 1:
        return False
    if poly[0] == 0:  # divisible by x
        return degree == 1
    for d in range(1, degree // 2 + 1):
        for divisor in _monic_polys(d, p):
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def _smallest_irreducible(p: int, j: int) -> tuple[int, ...]:
    for cand in _monic_polys(j, p):
        if is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {j} over GF({p})")


def _poly_str(poly: tuple[int, ...]) -> str:
    terms = []
    for i in range(len(poly) - 1, -1, -1):
        c = poly[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            x = "x" if i == 1 else f"x^{i}"
            terms.append(x if c == 1 else f"{c}{x}")
    return "+".join(terms) if terms else "0"


class GF:
    """The finite field GF(p^j), operating on integer-encoded elements.

    The methods ``add``/``sub``/``neg``/``mul``/``inv``/``pow`` take and
    return integer encodings.  ``FieldElement`` wraps them with operator
    syntax and cross-field checks.
    """

    __slots__ = ("p", "j", "q", "reducing_poly", "_mul_table", "_inv_table")

    def __init__(self, p: int, j: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if j < 1:
            raise ValueError(f"extension degree must be >= 1, got {j}")
        q = p**j
        if q > ORDER_CAP:
            raise ValueError(f"field order {q} exceeds cap {ORDER_CAP}")
        self.p = p
        self.j = j
        self.q = q
        self.reducing_poly: tuple[int, ...] | None = (
            _smallest_irreducible(p, j) if j > 1 else None
        )
        self._mul_table: list[int] | None = None
        self._inv_table: list[int] | None = None
        if j > 1 and q <= 64:
            self._build_tables()

    # -- encoding helpers --

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector (c_0, ..., c_{j-1}) of the element encoded by a."""
        out = []
        for _ in range(self.j):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def encode(self, coeffs: tuple[int, ...]) -> int:
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c
        return v

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element encoding in GF({self.q})")
        return a

    # -- arithmetic on integer encodings --

    def add(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if self.j == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        self._check(a)
        if self.j == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        while a:
            out += ((p - a % p) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if self.j == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a * self.q + b]
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        prod = _poly_mul(self.coeffs(a), self.coeffs(b), self.p)
        red = _poly_mod(prod, self.reducing_poly, self.p)
        return self.encode(red + (0,) * (self.j - len(red)))

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        if self.j == 1:
            return pow(a, -1, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; negative exponents go through the inverse."""
        self._check(a)
        if e < 0:
            a = self.inv(a)
            e = -e
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def _build_tables(self) -> None:
        q = self.q
        table = [0] * (q * q)
        for a in range(q):
            for b in range(a, q):
                v = self._mul_poly(a, b)
                table[a * q + b] = v
                table[b * q + a] = v
        self._mul_table = table
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self.pow(a, q - 2)
        self._inv_table = inv

    # -- element interface --

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, self._check(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        """All q elements in ascending integer order."""
        return [FieldElement(self, v) for v in range(self.q)]

    def nonzero_elements(self) -> list["FieldElement"]:
        return [FieldElement(self, v) for v in range(1, self.q)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF):
            return NotImplemented
        return (self.p, self.j, self.reducing_poly) == (other.p, other.j, other.reducing_poly)

    def __hash__(self) -> int:
        return hash((self.p, self.j, self.reducing_poly))

    def __repr__(self) -> str:
        if self.j == 1:
            return f"GF({self.p})"
        return f"GF({self.q})=GF({self.p}^{self.j}, {_poly_str(self.reducing_poly)})"


def field_new(p: int, j: int = 1) -> GF:
    """Construct GF(p^j) with the canonical reducing polynomial."""
    return GF(p, j)


def field_for_order(q: int) -> GF:
    """Construct the field of order q, rejecting non-prime-powers."""
    pj = factor_prime_power(q)
    if pj is None:
        raise ValueError(f"{q} is not a prime power")
    return GF(*pj)


class FieldElement:
    """A single element of a GF instance, with operator syntax.

    Binary operators accept an element of the same field or a bare integer
    encoding in ``[0, q - 1]``.  Mixing fields raises ValueError.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"mixed fields: {self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field._check(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(v, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(v)))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(v, self.field.inv(self.value)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        # value-based so that hash is consistent with the int equality below
        return hash(self.value)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"GF({self.field.q})({self.value})"
