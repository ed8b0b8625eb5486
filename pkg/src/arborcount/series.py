"""Truncated formal power series with exact integer coefficients.

Every series carries an explicit truncation order (the highest exponent it
knows about).  Binary operations truncate to the smaller operand order, so
precision is never silently overstated.  Coefficients are plain Python ints;
nothing in this module ever rounds.
"""

from __future__ import annotations

from typing import Iterable


class NonzeroConstantTerm(ValueError):
    """The operation requires a series with zero constant coefficient."""


class InexactDivision(ArithmeticError):
    """An exact coefficient division failed.

    This always indicates a logic error upstream: every division performed
    by the engine is exact by construction whenever the caller respects the
    documented preconditions.
    """

    def __init__(self, exponent: int, coefficient: int, divisor: int):
        self.exponent = exponent
        self.coefficient = coefficient
        self.divisor = divisor
        super().__init__(
            "coefficient %d of x^%d is not divisible by %d"
            % (coefficient, exponent, divisor)
        )


class PowerSeries:
    """An immutable power series truncated at a fixed order.

    ``coeffs[n]`` is the coefficient of x^n; ``order`` is ``len(coeffs) - 1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        coeffs = tuple(int(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([1] + [0] * order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls.monomial(1, order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coefficient: int = 1) -> "PowerSeries":
        if not 0 <= exponent <= order:
            raise ValueError("exponent must lie within the truncation order")
        coeffs = [0] * (order + 1)
        coeffs[exponent] = coefficient
        return cls(coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int) -> "PowerSeries":
        """Build a series of the given order, zero-padding or truncating."""
        coeffs = list(coeffs)[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        return cls(coeffs)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        return isinstance(other, PowerSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return "PowerSeries(%r)" % (list(self.coeffs),)

    def truncate(self, order: int) -> "PowerSeries":
        if order >= self.order:
            return self
        return PowerSeries(self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        return PowerSeries(
            a + b for a, b in zip(self.coeffs[: order + 1], other.coeffs[: order + 1])
        )

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        return PowerSeries(
            a - b for a, b in zip(self.coeffs[: order + 1], other.coeffs[: order + 1])
        )

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(-c for c in self.coeffs)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: order + 1 - i]):
                    if b:
                        out[i + j] += a * b
        return PowerSeries(out)

    def scale_exponents(self, k: int) -> "PowerSeries":
        """Replace x by x^k: the coefficient of x^{km} becomes coeffs[m]."""
        if k < 1:
            raise ValueError("exponent scale must be a positive integer")
        if k == 1:
            return self
        out = [0] * (self.order + 1)
        for m in range(0, self.order // k + 1):
            out[k * m] = self.coeffs[m]
        return PowerSeries(out)

    def exp(self) -> "PowerSeries":
        """Exponentiate a series with zero constant term.

        Uses the derivative recurrence m*g_m = sum_{k=1}^{m} k*f_k*g_{m-k}
        with g_0 = 1.  The division by m is exact whenever the true result
        has integer coefficients; otherwise InexactDivision fires, which
        means the caller broke exp's integrality contract.
        """
        if self.coeffs[0] != 0:
            raise NonzeroConstantTerm("exp needs a zero constant coefficient")
        n = self.order
        f = self.coeffs
        g = [1] + [0] * n
        for m in range(1, n + 1):
            acc = 0
            for k in range(1, m + 1):
                if f[k]:
                    acc += k * f[k] * g[m - k]
            q, rem = divmod(acc, m)
            if rem:
                raise InexactDivision(m, acc, m)
            g[m] = q
        return PowerSeries(g)

    def substitute(self, inner: "PowerSeries") -> "PowerSeries":
        """Compose self(inner(x)); inner must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise NonzeroConstantTerm("substitution needs a zero constant term")
        order = min(self.order, inner.order)
        b = inner.coeffs[: order + 1]
        # Horner from the top coefficient down, truncating at every step.
        res = [0] * (order + 1)
        for c in reversed(self.coeffs[: order + 1]):
            nxt = [0] * (order + 1)
            for i, ri in enumerate(res):
                if ri:
                    for j, bj in enumerate(b[: order + 1 - i]):
                        if bj:
                            nxt[i + j] += ri * bj
            nxt[0] += c
            res = nxt
        return PowerSeries(res)

    def div_exact(self, m: int) -> "PowerSeries":
        """Divide every coefficient by m, which must be exact."""
        if m < 1:
            raise ValueError("divisor must be a positive integer")
        out = []
        for exponent, c in enumerate(self.coeffs):
            q, rem = divmod(c, m)
            if rem:
                raise InexactDivision(exponent, c, m)
            out.append(q)
        return PowerSeries(out)
