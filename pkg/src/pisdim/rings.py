"""Finite products of chain rings and their ideals.

A chain ring is a local ring whose ideals form a single chain
``R > M > M^2 > ... > M^t = 0``.  Such a factor is described by the
nilpotency index ``t`` of its maximal ideal (``t == 1`` is a field).
An ideal of a product ``R_1 x ... x R_n`` is then a vector of exponents
``(e_1, ..., e_n)`` with ``0 <= e_i <= t_i``: exponent 0 is the whole
factor and exponent ``t_i`` is the zero ideal of that factor.
"""

from __future__ import annotations

import enum
import itertools
import math
import re
from dataclasses import dataclass
from typing import Sequence

IdealVector = tuple[int, ...]


class RingSpecError(ValueError):
    """Raised for ring descriptions that cannot be parsed."""


class NotLocalError(RingSpecError):
    """A ``Z(n)`` factor whose modulus is not a prime power."""


@dataclass(frozen=True)
class RingSpec:
    factors: tuple[int, ...]
    display_names: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(t) for t in self.factors))
        if not self.factors:
            raise RingSpecError("a ring needs at least one factor")
        if any(t < 1 for t in self.factors):
            raise RingSpecError(f"nilpotency indices must be >= 1, got {self.factors}")
        if self.display_names is not None:
            names = tuple(self.display_names)
            if len(names) != len(self.factors):
                raise RingSpecError("one display name per factor is required")
            object.__setattr__(self, "display_names", names)

    @property
    def n(self) -> int:
        return len(self.factors)

    @property
    def names(self) -> tuple[str, ...]:
        if self.display_names is not None:
            return self.display_names
        return tuple(
            f"F_{i}" if t == 1 else f"R_{i}" for i, t in enumerate(self.factors, start=1)
        )

    @property
    def zero(self) -> IdealVector:
        return self.factors

    @property
    def whole(self) -> IdealVector:
        return (0,) * self.n

    def __str__(self) -> str:
        return " x ".join(self.names)


# ---------------------------------------------------------------------------
# parsing

_SEPARATOR = re.compile(r"[x×]")
_FIELD = re.compile(r"^F(?:\((?P<q>[0-9^]+)\))?$")
_CHAIN = re.compile(r"^C\((?P<t>-?\d+)\)$")
_INTEGERS = re.compile(r"^Z(?:\((?P<paren>[0-9^]+)\)|_?(?P<bare>\d+))$")


def _prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``n == p**k`` and ``k >= 1``, or None."""
    if n < 2:
        return None
    p = next((d for d in range(2, math.isqrt(n) + 1) if n % d == 0), n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def _int_expr(text: str, token: str) -> int:
    if "^" in text:
        base, _, exp = text.partition("^")
        if not base.isdigit() or not exp.isdigit():
            raise RingSpecError(f"malformed power in {token!r}")
        return int(base) ** int(exp)
    if not text.isdigit():
        raise RingSpecError(f"malformed integer in {token!r}")
    return int(text)


def _parse_factor(token: str, index: int) -> tuple[int, str]:
    if m := _FIELD.match(token):
        if m["q"] is not None:
            q = _int_expr(m["q"], token)
            if _prime_power(q) is None:
                raise RingSpecError(f"field order must be a prime power in {token!r}")
            return 1, token
        return 1, f"F_{index}"
    if m := _CHAIN.match(token):
        t = int(m["t"])
        if t < 1:
            raise RingSpecError(f"nilpotency index must be >= 1 in {token!r}")
        return t, token
    if m := _INTEGERS.match(token):
        modulus = _int_expr(m["paren"] or m["bare"], token)
        pk = _prime_power(modulus)
        if pk is None:
            raise NotLocalError(f"Z({modulus}) is not local: {modulus} is not a prime power")
        return pk[1], f"Z({modulus})"
    raise RingSpecError(f"malformed factor {token!r}")


def parse_ring_spec(text: str) -> RingSpec:
    """Parse a description such as ``"Z(4) x Z(9)"`` or ``"F x F x C(3)"``.

    Factors are ``F``, ``F(q)``, ``C(t)``, ``Z(n)``/``Zn`` (``n`` a prime
    power, also written ``p^k``), separated by ``x`` or ``×``.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise RingSpecError("empty ring description")
    tokens = _SEPARATOR.split(compact)
    if any(not tok for tok in tokens):
        raise RingSpecError(f"empty factor in {text!r}")
    factors, names = zip(*(_parse_factor(tok, i) for i, tok in enumerate(tokens, start=1)))
    return RingSpec(factors, names)


def as_ring_spec(spec: RingSpec | str | Sequence[int]) -> RingSpec:
    if isinstance(spec, RingSpec):
        return spec
    if isinstance(spec, str):
        return parse_ring_spec(spec)
    return RingSpec(tuple(spec))


# ---------------------------------------------------------------------------
# ideals


def enumerate_vertices(spec: RingSpec) -> list[IdealVector]:
    """All nonzero proper ideals, in lexicographic exponent order."""
    skip = {spec.whole, spec.zero}
    return [
        v for v in itertools.product(*(range(t + 1) for t in spec.factors)) if v not in skip
    ]


def ideal_sum(a: Sequence[int], b: Sequence[int]) -> IdealVector:
    if len(a) != len(b):
        raise ValueError(f"ideal vectors of different lengths: {len(a)} != {len(b)}")
    return tuple(min(x, y) for x, y in zip(a, b))


def is_prime_ideal(spec: RingSpec, v: Sequence[int]) -> bool:
    # in a finite product of Artinian local rings the primes are the maximal ideals
    return sorted(v) == [0] * (len(v) - 1) + [1]


def label(spec: RingSpec, v: Sequence[int]) -> str:
    parts = []
    for i, (e, t, name) in enumerate(zip(v, spec.factors, spec.names), start=1):
        if e == 0:
            parts.append(name)
        elif e == t:
            parts.append("0")
        elif e == 1:
            parts.append(f"M_{i}")
        else:
            parts.append(f"M_{i}^{e}")
    return " x ".join(parts)


# ---------------------------------------------------------------------------
# classification


class ClassTag(str, enum.Enum):
    TWO_FIELDS = "TwoFields"
    REDUCED_FIELDS = "ReducedFields"
    UNIQUE_NONTRIVIAL = "UniqueNontrivialIdeals"
    MIXED_UNIQUE_AND_FIELDS = "MixedUniqueAndFields"
    CHAIN_PIR = "ChainPIR"
    LOCAL = "LocalRing"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class RingClass:
    """Ring class with the counts its formulas need.

    ``n`` counts the factors the class is named after (fields for
    ReducedFields, ``t = 2`` factors for the mixed class, ...); ``m``
    counts field factors in the mixed class and is 0 otherwise.
    """

    tag: ClassTag
    n: int
    m: int = 0

    def __str__(self) -> str:
        if self.tag is ClassTag.MIXED_UNIQUE_AND_FIELDS:
            return f"{self.tag.value}(n={self.n}, m={self.m})"
        return f"{self.tag.value}(n={self.n})"


def classify(spec: RingSpec) -> RingClass:
    ts = spec.factors
    n = len(ts)
    if n == 1:
        return RingClass(ClassTag.LOCAL, 1)
    if all(t == 1 for t in ts):
        return RingClass(ClassTag.TWO_FIELDS if n == 2 else ClassTag.REDUCED_FIELDS, n)
    if all(t == 2 for t in ts):
        return RingClass(ClassTag.UNIQUE_NONTRIVIAL, n)
    if all(t in (1, 2) for t in ts):
        twos = ts.count(2)
        return RingClass(ClassTag.MIXED_UNIQUE_AND_FIELDS, twos, n - twos)
    if all(t >= 3 for t in ts):
        return RingClass(ClassTag.CHAIN_PIR, n)
    return RingClass(ClassTag.UNCLASSIFIED, n)
