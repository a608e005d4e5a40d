"""
Exact and modular linear algebra over Q(zeta_M).

The exact path works on CycScalar entries. Below the dense column threshold
it runs a fraction-free (Bareiss) elimination on dense rows; above it, a
sparse Gauss elimination that picks the sparsest pivot row.

The modular path maps zeta_M to a residue rho of exact order M in F_p and
ranks with numpy int64 arithmetic. p is kept below 2**31 so that products
of two residues fit in a machine word.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Hashable, Iterable

import numpy as np
from sympy import isprime, primefactors, primitive_root

from .conf import bound
from .cyclotomic import CycScalar, common_order
from .exceptions import (
    BadPrime,
    DenominatorCollision,
    MalformedInput,
    SearchExhausted,
)

logger = logging.getLogger(__name__)

PRIME_CEILING = 2**31


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycMatrix:
    """Sparse matrix with CycScalar entries of one cyclotomic order."""

    rows: int
    cols: int
    order: int = 1
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        order = common_order(self.entries.values()) if self.entries else self.order
        order = lcm(order, self.order)
        clean = {}
        for (i, j), value in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise MalformedInput(f"entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix")
            if not value.is_zero:
                clean[(i, j)] = value.promote(order)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_rows(cls, rows: list[list], order: int = 1) -> "CycMatrix":
        entries = {}
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                if not isinstance(value, CycScalar):
                    value = CycScalar.rational(value)
                entries[(i, j)] = value
        return cls(len(rows), len(rows[0]) if rows else 0, order, entries)

    @classmethod
    def identity(cls, size: int, order: int = 1) -> "CycMatrix":
        one = CycScalar.one(order)
        return cls(size, size, order, {(i, i): one for i in range(size)})

    @classmethod
    def zero(cls, rows: int, cols: int, order: int = 1) -> "CycMatrix":
        return cls(rows, cols, order, {})

    def __getitem__(self, key) -> CycScalar:
        return self.entries.get(key, CycScalar.zero(self.order))

    def column(self, j: int) -> dict[int, CycScalar]:
        return {i: v for (i, c), v in self.entries.items() if c == j}

    def dense(self) -> list[list[CycScalar]]:
        zero = CycScalar.zero(self.order)
        out = [[zero] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def sparse_rows(self) -> list[dict[int, CycScalar]]:
        out = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        if self.cols != other.rows:
            raise MalformedInput(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        by_row = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out[(i, j)] + a * b if (i, j) in out else a * b
        return CycMatrix(self.rows, other.cols, lcm(self.order, other.order), out)

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        out = dict(self.entries)
        for key, v in other.entries.items():
            out[key] = out[key] + v if key in out else v
        return CycMatrix(self.rows, self.cols, lcm(self.order, other.order), out)

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        return self + other.scale(CycScalar.rational(-1))

    def scale(self, factor: CycScalar) -> "CycMatrix":
        return CycMatrix(
            self.rows,
            self.cols,
            lcm(self.order, factor.order),
            {k: v * factor for k, v in self.entries.items()},
        )

    def transpose(self) -> "CycMatrix":
        return CycMatrix(self.cols, self.rows, self.order, {(j, i): v for (i, j), v in self.entries.items()})

    def apply(self, vector: dict) -> dict:
        """Multiply a sparse column vector {index: scalar}."""
        out = {}
        for (i, j), v in self.entries.items():
            x = vector.get(j)
            if x is not None and not x.is_zero:
                out[i] = out[i] + v * x if i in out else v * x
        return {i: v for i, v in out.items() if not v.is_zero}

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and (self - other).is_zero

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "order": self.order,
            "entries": [[i, j, v.to_json()] for (i, j), v in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, payload: dict) -> "CycMatrix":
        try:
            entries = {
                (int(i), int(j)): CycScalar.from_json(v) for i, j, v in payload["entries"]
            }
            return cls(int(payload["rows"]), int(payload["cols"]), int(payload.get("order", 1)), entries)
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"malformed matrix payload: {exc}") from exc


# ---------------------------------------------------------------------------
# Exact elimination
# ---------------------------------------------------------------------------


def _rank_bareiss(rows: list[list[CycScalar]], cols: int) -> int:
    """Fraction-free elimination; each step divides exactly by the previous pivot."""
    a = [list(r) for r in rows]
    n_rows = len(a)
    rank = 0
    previous = None
    for col in range(cols):
        if rank == n_rows:
            break
        candidates = [r for r in range(rank, n_rows) if not a[r][col].is_zero]
        if not candidates:
            continue
        # fewest nonzeros to the right keeps the fill-in down
        pivot = min(candidates, key=lambda r: sum(1 for x in a[r][col:] if not x.is_zero))
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        inv_previous = previous.inverse() if previous is not None else None
        for r in range(rank + 1, n_rows):
            factor = a[r][col]
            row = a[r]
            for c in range(col + 1, cols):
                value = p * row[c]
                if not factor.is_zero and not a[rank][c].is_zero:
                    value = value - factor * a[rank][c]
                if inv_previous is not None and not value.is_zero:
                    value = value * inv_previous
                row[c] = value
            row[col] = CycScalar.zero(p.order)
        previous = p
        rank += 1
    return rank


def _echelon_sparse(rows: Iterable[dict], strategy: str = "sparsest"):
    """Gauss elimination on sparse rows keyed by arbitrary sortable column ids.

    Returns the list of (pivot column, normalized row) pairs.
    """
    pending = [dict(r) for r in rows if r]
    basis: list[tuple[Hashable, dict]] = []
    while pending:
        if strategy == "sparsest":
            pending.sort(key=len)
        row = pending.pop(0)
        for col, prow in basis:
            factor = row.get(col)
            if factor is not None:
                row = _axpy(row, prow, -factor)
        if not row:
            continue
        col = min(row) if strategy != "last" else max(row)
        inv = row[col].inverse()
        row = {c: v * inv for c, v in row.items()}
        # keep the basis reduced so later rows need one pass
        basis = [(c, _axpy(r, row, -r[col]) if col in r else r) for c, r in basis]
        basis.append((col, row))
    return basis


def _axpy(target: dict, source: dict, factor: CycScalar) -> dict:
    out = dict(target)
    for c, v in source.items():
        value = out[c] + factor * v if c in out else factor * v
        if value.is_zero:
            out.pop(c, None)
        else:
            out[c] = value
    return out


def rank_exact(m: CycMatrix, strategy: str | None = None) -> int:
    """Rank over Q(zeta_M).

    strategy: None picks dense Bareiss below the column threshold and sparse
    elimination above; "bareiss", "sparsest" and "last" force a path.
    """
    if m.is_zero:
        return 0
    if strategy is None:
        strategy = "bareiss" if m.cols < bound("FORGE_DENSE_COLUMN_THRESHOLD") else "sparsest"
    if strategy == "bareiss":
        return _rank_bareiss(m.dense(), m.cols)
    return len(_echelon_sparse(m.sparse_rows(), strategy))


def kernel_basis(m: CycMatrix) -> list[list[CycScalar]]:
    """Exact basis of {v : m v = 0}, as dense vectors of length m.cols."""
    basis = _echelon_sparse(m.sparse_rows(), "first")
    pivots = {col: row for col, row in basis}
    zero = CycScalar.zero(m.order)
    one = CycScalar.one(m.order)
    vectors = []
    for free in range(m.cols):
        if free in pivots:
            continue
        v = [zero] * m.cols
        v[free] = one
        for col, row in pivots.items():
            coef = row.get(free)
            if coef is not None:
                v[col] = -coef
        vectors.append(v)
    return vectors


class SpanSolver:
    """Express targets as combinations of fixed generator vectors.

    Vectors are sparse dicts over any hashable keys. The generators are
    reduced once; solve() then runs one pass per target.
    """

    def __init__(self, vectors: list[dict]):
        self.size = len(vectors)
        # augment each generator with its own coordinate tag
        tagged = []
        for i, vec in enumerate(vectors):
            row = {(0, key): value for key, value in vec.items() if not value.is_zero}
            row[(1, i)] = CycScalar.one()
            tagged.append(row)
        self._basis = []
        self.dependent = []
        for i, row in enumerate(tagged):
            for col, prow in self._basis:
                factor = row.get(col)
                if factor is not None:
                    row = _axpy(row, prow, -factor)
            head = [c for c in row if c[0] == 0]
            if not head:
                self.dependent.append(i)
                continue
            col = min(head)
            inv = row[col].inverse()
            self._basis.append((col, {c: v * inv for c, v in row.items()}))

    @property
    def rank(self) -> int:
        return len(self._basis)

    def solve(self, target: dict) -> list[CycScalar] | None:
        row = {(0, key): value for key, value in target.items() if not value.is_zero}
        for col, prow in self._basis:
            factor = row.get(col)
            if factor is not None:
                row = _axpy(row, prow, -factor)
        if any(c[0] == 0 for c in row):
            return None
        coeffs = [CycScalar.zero()] * self.size
        for (kind, i), value in row.items():
            coeffs[i] = -value
        return coeffs


# ---------------------------------------------------------------------------
# Modular path
# ---------------------------------------------------------------------------


def _residue(value: CycScalar, p: int, powers: list[int]) -> int:
    total = 0
    for c, power in zip(value.coords, powers):
        if c:
            if c.denominator % p == 0:
                raise DenominatorCollision(
                    f"denominator {c.denominator} vanishes modulo {p}", prime=p
                )
            total += c.numerator * pow(c.denominator, -1, p) * power
    return total % p


def validate_projection(order: int, p: int, rho: int) -> None:
    if p >= PRIME_CEILING or not isprime(p):
        raise BadPrime(f"{p} is not a usable prime (must be prime and below 2**31)")
    if (p - 1) % order:
        raise BadPrime(f"p = {p} is not congruent to 1 modulo {order}")
    if pow(rho, order, p) != 1 or any(pow(rho, order // q, p) == 1 for q in primefactors(order)):
        raise BadPrime(f"rho = {rho} does not have order {order} modulo {p}")


def project(value: CycScalar, order: int, p: int, rho: int) -> int:
    """Image of a scalar under zeta_order -> rho in F_p."""
    value = value.promote(order)
    powers = [pow(rho, i, p) for i in range(len(value.coords))]
    return _residue(value, p, powers)


def to_modular(m: CycMatrix, p: int, rho: int) -> np.ndarray:
    validate_projection(m.order, p, rho)
    powers = [pow(rho, i, p) for i in range(len(CycScalar.zero(m.order).coords))]
    out = np.zeros((m.rows, m.cols), dtype=np.int64)
    for (i, j), v in m.entries.items():
        out[i, j] = _residue(v, p, powers)
    return out


def row_reduce_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Row echelon form modulo p; returns the nonzero rows."""
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pivot = r + nz[0]
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        below = a[r + 1 :, c].copy()
        hit = np.nonzero(below)[0]
        if hit.size:
            idx = r + 1 + hit
            a[idx] = (a[idx] - np.outer(below[hit], a[r]) % p) % p
        r += 1
    return a[:r]


def rank_mod(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return int(row_reduce_mod(a, p).shape[0])


def mod_p_rank(m: CycMatrix, p: int, rho: int) -> int:
    """Rank of the image of m under zeta_M -> rho over F_p."""
    return rank_mod(to_modular(m, p, rho), p)


def choose_prime(order: int, seed: int = 0) -> tuple[int, int]:
    """The seed-th prime above the configured floor with p = 1 mod order.

    rho is g**((p-1)/order) for the least primitive root g, so it has exact
    order `order`.
    """
    floor = bound("FORGE_PRIME_FLOOR")
    cap = bound("FORGE_PRIME_SEARCH_CAP")
    candidate = floor + 1 + (-floor) % order
    found = -1
    for _ in range(cap):
        if candidate >= PRIME_CEILING:
            break
        if isprime(candidate):
            found += 1
            if found == seed:
                g = int(primitive_root(candidate))
                rho = pow(g, (candidate - 1) // order, candidate)
                logger.debug("projection prime %s with rho %s for order %s", candidate, rho, order)
                return candidate, rho
        candidate += order
    raise SearchExhausted(f"no prime = 1 mod {order} found within {cap} candidates", order=order, seed=seed)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """a @ b mod p without int64 overflow."""
    bits = max(int(p - 1).bit_length(), 1)
    chunk = max(1, 2 ** max(0, 62 - 2 * bits))
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for start in range(0, a.shape[1], chunk):
        stop = start + chunk
        out = (out + (a[:, start:stop] @ b[start:stop]) % p) % p
    return out


def randomized_rank_lower_bound(
    apply: Callable[[np.ndarray], np.ndarray],
    dim: int,
    r: int,
    seed: int,
    p: int,
    rho: int | None = None,
) -> int:
    """rank(A S B) over F_p for random r x D sketches A and B.

    `apply` maps a batch of row vectors (shape (b, D)) to their images under
    S, all entries reduced mod p.
    """
    if r > dim:
        raise MalformedInput(f"sketch size {r} exceeds dimension {dim}")
    if r == 0:
        return 0
    rng = np.random.default_rng(seed)
    right = rng.integers(0, p, size=(r, dim), dtype=np.int64)
    left = rng.integers(0, p, size=(r, dim), dtype=np.int64)
    images = np.asarray(apply(right), dtype=np.int64) % p
    core = matmul_mod(left, images.T.copy(), p)
    return rank_mod(core, p)


def fraction_matrix(rows: list[list]) -> CycMatrix:
    """Build a rational matrix from nested lists of ints or Fractions."""
    return CycMatrix.from_rows([[CycScalar.rational(Fraction(x)) for x in row] for row in rows])
