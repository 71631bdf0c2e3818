"""Exact multivariate polynomials in the variables q, p, s, t.

Coefficients are plain Python integers (arbitrary precision), terms are keyed
by exponent tuples ``(eq, ep, es, et)``.  The zero polynomial stores no terms
and every stored coefficient is nonzero, so each value has exactly one
representation and ``==`` is exact.  Values are never mutated after
construction; all operations return fresh polynomials and are safe to share
across threads or enumeration workers.

Serialization lists terms in descending lexicographic exponent order:

>>> str((MultiPoly.one() - S * T) ** 2)
's^2*t^2 - 2*s*t + 1'
>>> str(S * T**4 - 2 * S**2 * T**3)
'-2*s^2*t^3 + s*t^4'
>>> ((MultiPoly.one() - S * T) ** 2).substitute({"s": 1, "t": 1})
MultiPoly('0')
"""

from __future__ import annotations

import math
from typing import Iterator, Mapping

#: Variable order used everywhere: exponent tuples are (eq, ep, es, et).
VARIABLES = ("q", "p", "s", "t")

Monomial = tuple[int, int, int, int]

_UNIT: Monomial = (0, 0, 0, 0)


class MultiPoly:
    """An immutable polynomial in q, p, s, t with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None) -> None:
        cleaned: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(coeff, int):
                    raise TypeError(f"coefficient {coeff!r} is not an integer")
                if len(mono) != len(VARIABLES) or any(
                    not isinstance(e, int) or e < 0 for e in mono
                ):
                    raise ValueError(f"bad exponent tuple {mono!r}")
                if coeff:
                    cleaned[tuple(mono)] = coeff
        self._terms = cleaned

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({_UNIT: 1})

    @classmethod
    def constant(cls, value: int) -> "MultiPoly":
        return cls({_UNIT: value})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        index = VARIABLES.index(name)
        mono = tuple(1 if i == index else 0 for i in range(len(VARIABLES)))
        return cls({mono: 1})

    @classmethod
    def monomial(cls, exponents: Monomial, coeff: int = 1) -> "MultiPoly":
        return cls({tuple(exponents): coeff})

    # -- inspection ----------------------------------------------------

    def terms(self) -> dict[Monomial, int]:
        """A copy of the term map (monomial -> coefficient)."""
        return dict(self._terms)

    def coefficient(self, exponents: Monomial) -> int:
        return self._terms.get(tuple(exponents), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def constant_value(self) -> int:
        """The value of a constant polynomial.

        >>> (q_integer(3).substitute({"q": 2})).constant_value()
        7
        """
        if not self._terms:
            return 0
        if set(self._terms) != {_UNIT}:
            raise ValueError(f"{self} is not constant")
        return self._terms[_UNIT]

    def split_by_exponent(self, name: str) -> dict[int, "MultiPoly"]:
        """Group terms by the exponent of one variable, removing it.

        Returns a map exponent -> polynomial in the remaining variables.
        """
        index = VARIABLES.index(name)
        layers: dict[int, dict[Monomial, int]] = {}
        for mono, coeff in self._terms.items():
            reduced = list(mono)
            power = reduced[index]
            reduced[index] = 0
            layers.setdefault(power, {})[tuple(reduced)] = coeff
        return {power: MultiPoly(t) for power, t in sorted(layers.items())}

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(value: "MultiPoly | int") -> "MultiPoly | None":
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, int):
            return MultiPoly.constant(value)
        return None

    def __add__(self, other: "MultiPoly | int") -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        result = dict(self._terms)
        for mono, coeff in rhs._terms.items():
            total = result.get(mono, 0) + coeff
            if total:
                result[mono] = total
            else:
                result.pop(mono, None)
        poly = MultiPoly.__new__(MultiPoly)
        poly._terms = result
        return poly

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        poly = MultiPoly.__new__(MultiPoly)
        poly._terms = {mono: -coeff for mono, coeff in self._terms.items()}
        return poly

    def __sub__(self, other: "MultiPoly | int") -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: "MultiPoly | int") -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        result: dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in rhs._terms.items():
                mono = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3])
                total = result.get(mono, 0) + ca * cb
                if total:
                    result[mono] = total
                else:
                    del result[mono]
        poly = MultiPoly.__new__(MultiPoly)
        poly._terms = result
        return poly

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {exponent!r}")
        result = MultiPoly.one()
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute(self, assignment: Mapping[str, int]) -> "MultiPoly":
        """Substitute integers for some variables, leaving the rest symbolic.

        The empty assignment is the identity.

        >>> str((Q**3 * P * S * T**2).substitute({"q": -1}))
        '-p*s*t^2'
        """
        indices = []
        for name, value in assignment.items():
            if name not in VARIABLES:
                raise ValueError(f"unknown variable {name!r}")
            if not isinstance(value, int):
                raise TypeError(f"substitution value {value!r} is not an integer")
            indices.append((VARIABLES.index(name), value))
        result: dict[Monomial, int] = {}
        for mono, coeff in self._terms.items():
            reduced = list(mono)
            factor = coeff
            for index, value in indices:
                factor *= value ** reduced[index]
                reduced[index] = 0
            key = tuple(reduced)
            total = result.get(key, 0) + factor
            if total:
                result[key] = total
            else:
                result.pop(key, None)
        poly = MultiPoly.__new__(MultiPoly)
        poly._terms = result
        return poly

    # -- comparison and rendering ---------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for mono, coeff in self:
            body = _term_text(mono, abs(coeff))
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"MultiPoly('{self}')"


def _term_text(mono: Monomial, coeff: int) -> str:
    parts = []
    for name, exponent in zip(VARIABLES, mono):
        if exponent == 1:
            parts.append(name)
        elif exponent > 1:
            parts.append(f"{name}^{exponent}")
    if not parts:
        return str(coeff)
    if coeff != 1:
        parts.insert(0, str(coeff))
    return "*".join(parts)


Q = MultiPoly.variable("q")
P = MultiPoly.variable("p")
S = MultiPoly.variable("s")
T = MultiPoly.variable("t")


def q_integer(k: int) -> MultiPoly:
    """The q-integer 1 + q + ... + q^(k-1); zero when k = 0.

    >>> str(q_integer(3))
    'q^2 + q + 1'
    >>> q_integer(0)
    MultiPoly('0')
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"q_integer expects a non-negative integer, got {k!r}")
    return MultiPoly({(i, 0, 0, 0): 1 for i in range(k)})


def binomial(n: int, k: int) -> int:
    """Binomial coefficient as an exact integer; zero when k > n."""
    if not isinstance(n, int) or not isinstance(k, int) or n < 0 or k < 0:
        raise ValueError(f"binomial expects non-negative integers, got {n!r}, {k!r}")
    return math.comb(n, k)
