"""
Exact arithmetic in the cyclotomic fields Q(zeta_M).

A scalar is stored as its coordinate vector in the power basis
1, z, ..., z^(phi(M)-1) of Q[z]/(Phi_M(z)). Coordinates are Fractions, so
every equality and zero test is exact.

Usage:
    w = root_of_unity(8, 1)
    assert w ** 8 == 1
    assert multiplicative_order(w * w) == 4
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm

from sympy import divisors, mobius, totient

from .conf import bound
from .exceptions import BoundExceeded, DivisionByZero, MalformedInput

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Integer polynomial helpers (coefficients low -> high)
# ---------------------------------------------------------------------------


def _poly_exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide by a monic integer polynomial; the remainder must vanish."""
    num = list(num)
    quotient = [0] * (len(num) - len(den) + 1)
    for shift in range(len(quotient) - 1, -1, -1):
        coef = num[shift + len(den) - 1]
        quotient[shift] = coef
        if coef:
            for i, d in enumerate(den):
                num[shift + i] -= coef * d
    assert not any(num), "cyclotomic division left a remainder"
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_M, lowest degree first."""
    if order < 1:
        raise MalformedInput(f"cyclotomic order must be positive, got {order}")
    if order == 1:
        return (-1, 1)
    num = [-1] + [0] * (order - 1) + [1]
    for d in divisors(order)[:-1]:
        num = _poly_exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(order: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of z^e for e in 0..M-1, reduced modulo Phi_M."""
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    row = [0] * deg
    row[0] = 1
    table = [tuple(row)]
    for _ in range(order - 1):
        top = row[-1]
        row = [0] + row[:-1]
        if top:
            row = [c - top * p for c, p in zip(row, phi[:-1])]
        table.append(tuple(row))
    return tuple(table)


@lru_cache(maxsize=None)
def _monomial_index(order: int) -> dict[tuple[int, ...], int]:
    return {coords: e for e, coords in enumerate(_power_table(order))}


@lru_cache(maxsize=None)
def _trace_weights(order: int) -> tuple[Fraction, ...]:
    # Tr(z^i) / phi(M) = mu(M/g) / phi(M/g) with g = gcd(i, M); it does not
    # change when the scalar is promoted to a larger order.
    weights = []
    for i in range(int(totient(order))):
        m = order // gcd(i, order)
        weights.append(Fraction(int(mobius(m)), int(totient(m))))
    return tuple(weights)


def _check_order(order: int) -> None:
    cap = bound("FORGE_CYCLOTOMIC_ORDER_CAP")
    if order > cap:
        raise BoundExceeded(
            f"cyclotomic order {order} exceeds the configured cap {cap}",
            order=order,
            cap=cap,
        )


# ---------------------------------------------------------------------------
# Rational polynomial helpers for inversion
# ---------------------------------------------------------------------------


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = _trim(list(a))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        coef = a[-1] / lead
        q[shift] = coef
        for i, c in enumerate(b):
            a[shift + i] -= coef * c
        _trim(a)
    return _trim(q), a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    size = max(len(a), len(b))
    out = [
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)
    ]
    return _trim([Fraction(x) for x in out])


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------


class CycScalar:
    """Immutable element of Q(zeta_order)."""

    __slots__ = ("order", "coords", "_hash")

    def __init__(self, order: int, coords):
        _check_order(order)
        deg = len(cyclotomic_polynomial(order)) - 1
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) > deg:
            coords = _reduce(order, coords)
        elif len(coords) < deg:
            coords = coords + (Fraction(0),) * (deg - len(coords))
        self.order = order
        self.coords = coords
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def rational(cls, value, order: int = 1) -> "CycScalar":
        return cls(order, [Fraction(value)])

    @classmethod
    def zero(cls, order: int = 1) -> "CycScalar":
        return cls(order, [])

    @classmethod
    def one(cls, order: int = 1) -> "CycScalar":
        return cls(order, [1])

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    # -- order changes ------------------------------------------------------

    def promote(self, order: int) -> "CycScalar":
        """Embed into Q(zeta_order); self.order must divide order."""
        if order == self.order:
            return self
        if order % self.order:
            raise MalformedInput(f"cannot embed order {self.order} into order {order}")
        _check_order(order)
        step = order // self.order
        table = _power_table(order)
        out = [Fraction(0)] * len(_trace_weights(order))
        for i, c in enumerate(self.coords):
            if c:
                for j, t in enumerate(table[i * step]):
                    if t:
                        out[j] += c * t
        return CycScalar(order, out)

    def lower(self, order: int) -> "CycScalar | None":
        """Return the same number inside Q(zeta_order), or None if it is not there."""
        if self.order % order:
            raise MalformedInput(f"order {order} does not divide {self.order}")
        if order == self.order:
            return self
        deg = len(_trace_weights(order))
        columns = [CycScalar(order, [0] * i + [1]).promote(self.order).coords for i in range(deg)]
        solution = _solve_rational(columns, self.coords)
        return None if solution is None else CycScalar(order, solution)

    def _aligned(self, other: "CycScalar"):
        if self.order == other.order:
            return self, other
        order = lcm(self.order, other.order)
        return self.promote(order), other.promote(order)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return other
        a, b = self._aligned(other)
        return CycScalar(a.order, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.order, [-c for c in self.coords])

    def __sub__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return other
        if other.is_rational:
            base = self.promote(lcm(self.order, other.order))
            factor = other.coords[0]
            return CycScalar(base.order, [c * factor for c in base.coords])
        if self.is_rational:
            return other * self
        a, b = self._aligned(other)
        raw = [Fraction(0)] * (2 * len(a.coords) - 1)
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    if y:
                        raw[i + j] += x * y
        return CycScalar(a.order, _reduce(a.order, raw))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if self.is_zero:
            raise DivisionByZero("inverse of zero in a cyclotomic field", order=self.order)
        exp = monomial_exponent(self)
        if exp is not None:
            return root_of_unity(self.order, -exp)
        # extended Euclid: s*x + t*Phi = 1
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r0, r1 = phi, _trim(list(self.coords))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        constant = r1[0]
        return CycScalar(self.order, _reduce(self.order, [c / constant for c in s1]))

    def __truediv__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        exp = monomial_exponent(self)
        if exp is not None:
            return root_of_unity(self.order, exp * exponent)
        result = CycScalar.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return other
        a, b = self._aligned(other)
        return a.coords == b.coords

    def __hash__(self):
        if self._hash is None:
            weights = _trace_weights(self.order)
            self._hash = hash(sum((c * w for c, w in zip(self.coords, weights)), Fraction(0)))
        return self._hash

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        exp = monomial_exponent(self)
        if exp is not None:
            return f"CycScalar(z{self.order}^{exp})"
        if self.is_rational:
            return f"CycScalar({self.coords[0]})"
        return f"CycScalar({self.order}, {[str(c) for c in self.coords]})"

    # -- interchange --------------------------------------------------------

    def to_json(self) -> dict:
        exp = monomial_exponent(self)
        if exp is not None:
            return {"order": self.order, "exp": exp}
        return {
            "order": self.order,
            "coords": [[c.numerator, c.denominator] for c in self.coords],
        }

    @classmethod
    def from_json(cls, payload, exp_only: bool = False) -> "CycScalar":
        if not isinstance(payload, dict) or "order" not in payload:
            raise MalformedInput(f"scalar payload must carry an order: {payload!r}")
        try:
            order = int(payload["order"])
            if order < 1:
                raise ValueError(order)
            if "exp" in payload:
                return root_of_unity(order, int(payload["exp"]))
            if exp_only:
                raise MalformedInput("only {order, exp} scalars are accepted here")
            coords = [Fraction(int(num), int(den)) for num, den in payload["coords"]]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise MalformedInput(f"malformed scalar payload {payload!r}") from exc
        if len(coords) != len(_trace_weights(order)):
            raise MalformedInput(f"expected {len(_trace_weights(order))} coordinates for order {order}")
        return cls(order, coords)


def _coerce(value, order: int):
    if isinstance(value, CycScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return CycScalar.rational(value)
    return NotImplemented


def _reduce(order: int, raw) -> list[Fraction]:
    table = _power_table(order)
    deg = len(table[0])
    out = [Fraction(c) for c in raw[:deg]] + [Fraction(0)] * max(0, deg - len(raw))
    for e in range(deg, len(raw)):
        c = raw[e]
        if c:
            for j, t in enumerate(table[e % order]):
                if t:
                    out[j] += c * t
    return out


def _solve_rational(columns: list[tuple], target: tuple) -> list[Fraction] | None:
    """Solve sum_i x_i * columns[i] = target over Q; None when inconsistent."""
    rows = len(target)
    aug = [[Fraction(col[r]) for col in columns] + [Fraction(target[r])] for r in range(rows)]
    width = len(columns)
    pivots = []
    row = 0
    for col in range(width):
        pivot = next((r for r in range(row, rows) if aug[r][col]), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        lead = aug[row][col]
        aug[row] = [x / lead for x in aug[row]]
        for r in range(rows):
            if r != row and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    if any(aug[r][width] for r in range(row, rows)):
        return None
    solution = [Fraction(0)] * width
    for r, col in enumerate(pivots):
        solution[col] = aug[r][width]
    return solution


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def root_of_unity(order: int, k: int) -> CycScalar:
    """zeta_order ** k in canonical form."""
    if order < 1:
        raise MalformedInput(f"cyclotomic order must be positive, got {order}")
    _check_order(order)
    return CycScalar(order, _power_table(order)[k % order])


def monomial_exponent(x: CycScalar) -> int | None:
    """The e with x == zeta_M^e, or None."""
    if any(c.denominator != 1 for c in x.coords):
        return None
    return _monomial_index(x.order).get(tuple(int(c) for c in x.coords))


def multiplicative_order(x: CycScalar) -> int | None:
    """Least m with x**m == 1, or None when x is not a root of unity."""
    if x.is_zero:
        raise DivisionByZero("zero has no multiplicative order")
    # roots of unity in Q(zeta_M) are exactly +-zeta_M^e
    exp = monomial_exponent(x)
    if exp is not None:
        return x.order // gcd(x.order, exp)
    exp = monomial_exponent(-x)
    if exp is not None:
        double = 2 * x.order
        return double // gcd(double, x.order + 2 * exp)
    return None


def in_group(x: CycScalar, m: int) -> bool:
    """Membership in G_m, the primitive m-th roots of unity."""
    return not x.is_zero and multiplicative_order(x) == m


def common_order(scalars) -> int:
    return reduce(lcm, (s.order for s in scalars), 1)


_FIELD_OPS = {
    "add": lambda xs: reduce(lambda a, b: a + b, xs),
    "mul": lambda xs: reduce(lambda a, b: a * b, xs),
    "neg": lambda xs: -xs[0],
    "inv": lambda xs: xs[0].inverse(),
}


def field_arith(op: str, *operands):
    """Dispatch one of add, mul, neg, inv, pow on CycScalar operands.

    pow takes the exponent as its second operand.
    """
    if op == "pow":
        base, exponent = operands
        return base ** int(exponent)
    try:
        handler = _FIELD_OPS[op]
    except KeyError as exc:
        raise MalformedInput(f"unknown field operation {op!r}") from exc
    if not operands:
        raise MalformedInput(f"{op} needs at least one operand")
    return handler(list(operands))
