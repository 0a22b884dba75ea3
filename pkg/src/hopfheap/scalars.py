"""Exact field arithmetic over the rationals and prime fields.

Tensors throughout the package are numpy ``object`` arrays holding *raw*
canonical values:

* over Q, a Python ``int`` when the value is integral and a reduced
  :class:`fractions.Fraction` otherwise;
* over F_p, a Python ``int`` in ``[0, p)``.

Keeping integral rationals as plain ints makes object-dtype contractions
cheap, since almost every structure constant in practice is an integer.
:class:`Scalar` wraps a raw value together with its field for the public
scalar API and the file format.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

import numpy as np

__all__ = [
    "FieldSpec",
    "QQ",
    "GF",
    "Scalar",
    "scalar_arith",
    "MixedFieldError",
]

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


class MixedFieldError(ValueError):
    """Raised when scalars from different fields meet in one operation."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``kind="Rationals"``) or F_p (``kind="PrimeField"``)."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Rationals":
            if self.p is not None:
                raise ValueError("the rationals carry no modulus")
        elif self.kind == "PrimeField":
            if self.p is None or not _is_prime(int(self.p)):
                raise ValueError(f"modulus {self.p!r} is not prime")
            object.__setattr__(self, "p", int(self.p))
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``Q`` or ``Fp:<p>`` (also ``F<p>`` / ``GF(<p>)``)."""
        t = text.strip()
        if t in ("Q", "QQ", "Rationals"):
            return QQ
        m = re.fullmatch(r"(?:Fp:|F|GF\()(\d+)\)?", t)
        if m is None:
            raise ValueError(f"cannot parse field {text!r}; use Q or Fp:<p>")
        return cls("PrimeField", int(m.group(1)))

    @property
    def is_rational(self) -> bool:
        return self.kind == "Rationals"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self):
        return "Q" if self.is_rational else f"F_{self.p}"

    # -- raw values --------------------------------------------------------

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def coerce(self, value: Any):
        """Return the canonical raw value of an int, Fraction, or Scalar."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise MixedFieldError(f"scalar over {value.field} used over {self}")
            return value.value
        if isinstance(value, (bool, np.bool_)):
            value = int(value)
        if isinstance(value, (int, np.integer)):
            value = int(value)
            return value % self.p if self.p else value
        if isinstance(value, Fraction):
            if self.p:
                den = value.denominator % self.p
                if den == 0:
                    raise ZeroDivisionError(f"{value} has no value in {self}")
                return value.numerator * pow(den, -1, self.p) % self.p
            return value.numerator if value.denominator == 1 else value
        if isinstance(value, str):
            return self.parse_scalar(value)
        raise TypeError(f"cannot interpret {value!r} as an element of {self}")

    def neg(self, x):
        return (-x) % self.p if self.p else -x

    def add(self, x, y):
        return self._norm(x + y)

    def mul(self, x, y):
        return self._norm(x * y)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError(f"0 is not invertible in {self}")
        if self.p:
            return pow(int(x), -1, self.p)
        return self._norm(Fraction(1) / x)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def _norm(self, x):
        if self.p:
            return x % self.p
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def normalize(self, arr) -> np.ndarray:
        """Canonicalise every entry of an object array (returns a new array)."""
        a = np.asarray(arr, dtype=object)
        if self.p:
            return a % self.p
        out = a.copy()
        if set(map(type, out.flat)) <= {int}:
            return out
        flat = out.reshape(-1)
        for idx, x in enumerate(flat):
            if isinstance(x, Fraction) and x.denominator == 1:
                flat[idx] = x.numerator
        return out

    def array(self, data) -> np.ndarray:
        """Build a canonical object array from nested ints/Fractions/Scalars/strings."""
        a = np.array(data, dtype=object)
        flat = a.reshape(-1)
        for idx, x in enumerate(flat):
            flat[idx] = self.coerce(x)
        return a

    def zeros(self, *shape: int) -> np.ndarray:
        a = np.empty(shape, dtype=object)
        a.fill(0)
        return a

    def eye(self, n: int) -> np.ndarray:
        a = self.zeros(n, n)
        for i in range(n):
            a[i, i] = 1
        return a

    def basis_vector(self, n: int, i: int) -> np.ndarray:
        v = self.zeros(n)
        v[i] = 1
        return v

    def einsum(self, subscripts: str, *operands) -> np.ndarray:
        """Exact tensor contraction followed by canonicalisation.

        When every entry is a Python int and a worst-case bound on the result
        fits in 62 bits, the contraction runs in int64; otherwise on objects.
        """
        ops = [np.asarray(o, dtype=object) for o in operands]
        fast = _int64_operands(subscripts, ops)
        if fast is not None:
            out = np.asarray(np.einsum(subscripts, *fast, optimize="greedy"))
            if self.p:
                out = out % self.p
            return out.astype(object)
        out = np.einsum(subscripts, *ops, dtype=object, optimize="greedy")
        return self.normalize(np.asarray(out, dtype=object))

    # -- strings -----------------------------------------------------------

    def parse_scalar(self, text: str):
        m = _SCALAR_RE.match(text)
        if m is None:
            raise ValueError(f"malformed scalar {text!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            return self.coerce(num)
        den = int(m.group(2))
        if den == 0:
            raise ZeroDivisionError(f"malformed scalar {text!r}: zero denominator")
        if self.p:
            if den % self.p == 0:
                raise ZeroDivisionError(f"{text!r} has no value in {self}")
            return num * pow(den, -1, self.p) % self.p
        return self._norm(Fraction(num, den))

    def format_scalar(self, x) -> str:
        return str(self.coerce(x))


_INT64_BOUND = 1 << 62


def _int64_operands(subscripts: str, ops: list[np.ndarray]) -> list[np.ndarray] | None:
    if "->" not in subscripts or "." in subscripts:
        return None
    inputs, output = subscripts.split("->")
    terms = inputs.split(",")
    sizes: dict[str, int] = {}
    bound = 1
    for term, a in zip(terms, ops):
        for ch, d in zip(term, a.shape):
            sizes[ch] = d
        if a.size == 0:
            continue
        if not set(map(type, a.flat)) <= {int}:
            return None
        bound *= max(1, max(map(abs, a.flat)))
    for ch, d in sizes.items():
        if ch not in output:
            bound *= max(1, d)
    if bound >= _INT64_BOUND:
        return None
    return [a.astype(np.int64) for a in ops]


QQ = FieldSpec("Rationals")


def GF(p: int) -> FieldSpec:
    return FieldSpec("PrimeField", p)


@dataclass(frozen=True)
class Scalar:
    """A field element in canonical form; equality is componentwise."""

    field: FieldSpec
    value: Any

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.coerce(self.value))

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "Scalar":
        return cls(field, field.parse_scalar(text))

    @property
    def numerator(self) -> int:
        return Fraction(self.value).numerator

    @property
    def denominator(self) -> int:
        return Fraction(self.value).denominator

    @property
    def residue(self) -> int:
        if self.field.p is None:
            raise AttributeError("rational scalars have no residue")
        return self.value

    def is_zero(self) -> bool:
        return self.value == 0

    def _other(self, other) -> Any:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise MixedFieldError(f"cannot combine {self.field} and {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Scalar(self.field, self._other(other)))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        return self * Scalar(self.field, self._other(other)).inverse()

    def __str__(self):
        return self.field.format_scalar(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self})"


def scalar_arith(op: str, x: Scalar, y: Scalar | None = None) -> Scalar:
    """Apply ``add``, ``mul``, ``neg`` or ``inv`` to scalars of one field."""
    if op in ("add", "mul"):
        if y is None:
            raise TypeError(f"{op} needs two operands")
        if x.field != y.field:
            raise MixedFieldError(f"cannot combine {x.field} and {y.field}")
        return x + y if op == "add" else x * y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    raise ValueError(f"unknown scalar operation {op!r}")


def as_scalars(field: FieldSpec, values: Iterable) -> list[Scalar]:
    return [Scalar(field, v) for v in values]
