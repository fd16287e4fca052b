"""Exact arithmetic in GF(p^m) and explicit embeddings between such fields.

Elements are handled internally as canonical integer encodings
``enc = a_0 + a_1*p + ... + a_{m-1}*p^(m-1)`` of the coefficient vector of
``a_0 + a_1 x + ... + a_{m-1} x^(m-1)``.  :class:`FieldElement` wraps an
encoding together with its field for operator-style use.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

MAX_FIELD_SIZE = 1 << 20
_MAX_PRIME = 1 << 16
_ADD_TABLE_LIMIT = 1 << 10


class FieldError(ValueError):
    """Invalid field parameters or incompatible field operands."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# -- polynomials over GF(p), as coefficient lists, low degree first ----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo b over GF(p); b must be nonzero."""
    r = _trim([c % p for c in a])
    b = _trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(r) >= len(b):
        coef = r[-1] * inv_lead % p
        shift = len(r) - len(b)
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - coef * bc) % p
        _trim(r)
    return r


def _digits(enc: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        enc, d = divmod(enc, p)
        out.append(d)
    return out


def _undigits(coeffs: Sequence[int], p: int) -> int:
    enc = 0
    for c in reversed(coeffs):
        enc = enc * p + c
    return enc


@lru_cache(maxsize=None)
def is_irreducible(p: int, modulus: tuple[int, ...]) -> bool:
    """True iff the monic polynomial has no monic factor of degree <= m/2."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for low in range(p**d):
            divisor = _digits(low, p, d) + [1]
            if not _poly_mod(modulus, divisor, p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(p)[x]/(modulus) with q = p^m elements."""

    p: int
    m: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        if not is_prime(self.p) or self.p > _MAX_PRIME:
            raise FieldError(f"characteristic {self.p} is not a supported prime")
        if self.m < 1:
            raise FieldError(f"extension degree must be >= 1, got {self.m}")
        if self.p**self.m > MAX_FIELD_SIZE:
            raise FieldError(f"field size {self.p}^{self.m} exceeds 2^20")
        if len(self.modulus) != self.m + 1:
            raise FieldError("modulus must have m+1 coefficients")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise FieldError("modulus coefficients must lie in [0, p)")
        if self.modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        if not is_irreducible(self.p, self.modulus):
            raise FieldError(f"modulus {self.modulus} is reducible over GF({self.p})")

    @property
    def size(self) -> int:
        return self.p**self.m

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    # -- encodings ---------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(_digits(a, self.p, self.m))

    def encode(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        return _undigits([c % self.p for c in coeffs], self.p)

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def elements(self) -> range:
        return range(self.size)

    # -- reference polynomial arithmetic (slow, used to build tables) -------

    def poly_mul(self, a: int, b: int) -> int:
        """Multiply by schoolbook polynomial product reduced modulo the modulus."""
        p = self.p
        if p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> self.m:
                    a ^= _undigits(self.modulus, 2)
            return r
        da, db = _digits(a, p, self.m), _digits(b, p, self.m)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return _undigits(_poly_mod(prod, self.modulus, p), p)

    def poly_add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        da, db = _digits(a, p, self.m), _digits(b, p, self.m)
        return _undigits([(x + y) % p for x, y in zip(da, db)], p)

    # -- tables --------------------------------------------------------------

    @cached_property
    def _exp_log(self) -> tuple[list[int], list[int]]:
        q = self.size
        if q == 2:
            return [1, 1], [0, 0]
        for g in range(2, q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self.poly_mul(x, g)
            if len(exp) == q - 1:
                break
        else:  # pragma: no cover - the multiplicative group is cyclic
            raise FieldError("no primitive element found")
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        return exp + exp, log

    @cached_property
    def _add_table(self) -> list[list[int]] | None:
        if self.p == 2 or self.m == 1 or self.size > _ADD_TABLE_LIMIT:
            return None
        q = self.size
        return [[self.poly_add(a, b) for b in range(q)] for a in range(q)]

    @cached_property
    def _neg_table(self) -> list[int]:
        p = self.p
        return [_undigits([(-d) % p for d in _digits(a, p, self.m)], p) for a in range(self.size)]

    # -- arithmetic on encodings --------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        t = self._add_table
        return t[a][b] if t is not None else self.poly_add(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return -a % self.p
        return self._neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        exp, log = self._exp_log
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        exp, log = self._exp_log
        return exp[(self.size - 1 - log[a]) % (self.size - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        exp, log = self._exp_log
        return exp[(log[a] * e) % (self.size - 1)]

    def sum(self, values) -> int:
        s = 0
        for v in values:
            s = self.add(s, v)
        return s

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        s = 0
        for a, b in zip(u, v):
            if a and b:
                s = self.add(s, self.mul(a, b))
        return s

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.size:
            raise FieldError(f"{a!r} is not an element encoding of {self!r}")
        return a

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, obj: dict) -> FieldSpec:
        try:
            return cls(int(obj["p"]), int(obj["m"]), tuple(obj["modulus"]))
        except (KeyError, TypeError) as exc:
            raise FieldError(f"malformed field object: {exc}") from None


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    def __post_init__(self):
        self.field.check(self.value)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"field mismatch: {self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.check(other)
        return NotImplemented

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(self.field, v)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(b, self.value))

    def __neg__(self) -> FieldElement:
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int) -> FieldElement:
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0


def field_make(p: int, m: int = 1) -> FieldSpec:
    """Return GF(p^m) with the smallest-encoding monic irreducible modulus."""
    if not is_prime(p) or p > _MAX_PRIME:
        raise FieldError(f"{p} is not a supported prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_FIELD_SIZE:
        raise FieldError(f"field size {p}^{m} exceeds 2^20")
    return _field_make(p, m)


@lru_cache(maxsize=None)
def _field_make(p: int, m: int) -> FieldSpec:
    for low in range(p**m):
        modulus = tuple(_digits(low, p, m)) + (1,)
        if is_irreducible(p, modulus):
            return FieldSpec(p, m, modulus)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")  # pragma: no cover


def field_arith(kind: str, a: FieldElement, b: FieldElement | int | None = None) -> FieldElement:
    """Dispatch one of add/sub/mul/div/inv/pow on field elements."""
    if kind == "inv":
        return a.inverse()
    if kind == "pow":
        return a ** int(b)
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    if kind not in ops:
        raise ValueError(f"unknown field operation {kind!r}")
    if not isinstance(b, FieldElement):
        raise FieldError("second operand must be a field element")
    return ops[kind](b)


@dataclass(frozen=True)
class FieldEmbedding:
    """Field homomorphism fixing GF(p) and sending the source generator x to `image`."""

    source: FieldSpec
    target: FieldSpec
    image: int

    def __post_init__(self):
        if self.source.p != self.target.p:
            raise FieldError("embedding between fields of different characteristic")
        self.target.check(self.image)
        if _eval_poly(self.target, self.source.modulus, self.image) != 0:
            raise FieldError("image is not a root of the source modulus")

    @cached_property
    def _powers(self) -> list[int]:
        return [self.target.pow(self.image, i) for i in range(self.source.m)]

    @cached_property
    def _table(self) -> list[int] | None:
        if self.source.size > 1 << 16:
            return None
        return [self._apply(a) for a in range(self.source.size)]

    def _apply(self, a: int) -> int:
        t = self.target
        out = 0
        for c, power in zip(self.source.coeffs(a), self._powers):
            out = t.add(out, t.mul(c, power))
        return out

    def __call__(self, a: int) -> int:
        table = self._table
        return table[a] if table is not None else self._apply(a)

    def vector(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(self(a) for a in v)

    def then(self, other: FieldEmbedding) -> FieldEmbedding:
        """Composite embedding: apply self, then other."""
        if other.source != self.target:
            raise FieldError("embeddings do not compose")
        return FieldEmbedding(self.source, other.target, other(self.image))


def _eval_poly(field: FieldSpec, coeffs: Sequence[int], x: int) -> int:
    # coefficients lie in the prime subfield, whose elements encode as 0..p-1
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


def field_embed(source: FieldSpec, target: FieldSpec) -> FieldEmbedding:
    """Embedding sending x to the smallest-encoding root of source.modulus in target."""
    if source.p != target.p:
        raise FieldError(f"cannot embed {source!r} into {target!r}: characteristics differ")
    if target.m % source.m:
        raise FieldError(f"cannot embed {source!r} into {target!r}: degree does not divide")
    for y in range(target.size):
        if _eval_poly(target, source.modulus, y) == 0:
            return FieldEmbedding(source, target, y)
    raise FieldError(f"source modulus has no root in {target!r}")  # pragma: no cover
