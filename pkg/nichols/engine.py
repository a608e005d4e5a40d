"""
Quantum symmetrizer engine.

Degree k of the Nichols algebra of (V, c) is the image of
S_k = sum over sigma in S_k of T_sigma on V^{(x)k}. Columns are built with
the factorisation S_k = (S_{k-1} (x) id) T'_k, where
T'_k = 1 + c_{k-1} (1 + c_{k-2} (1 + ... (1 + c_1))), and memoised one
degree at a time. Ranks are taken block by block over the connected
components of the column supports, exactly over Q(zeta_M) or modulo a
prime p = 1 mod M.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import permutations, product as cartesian
from math import factorial
from typing import Callable

import numpy as np
from sympy.utilities.iterables import multiset_permutations

from algebra.conf import bound
from algebra.cyclotomic import CycScalar, common_order
from algebra.exceptions import BoundExceeded, Disagreement, MalformedInput
from algebra.linalg import (
    CycMatrix,
    choose_prime,
    project,
    randomized_rank_lower_bound,
    rank_exact,
    rank_mod,
    validate_projection,
)

from .braided import BraidedSpace, QMatrix, apply_braiding

logger = logging.getLogger(__name__)

EXACT = "exact"
MODULAR = "modular"
ENGINES = (EXACT, MODULAR)


@dataclass
class TensorElement:
    """Homogeneous element of V^{(x)k}: words are tuples of basis indices."""

    degree: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for word, coef in self.terms.items():
            word = tuple(word)
            if len(word) != self.degree:
                raise MalformedInput(f"word {word} does not have degree {self.degree}")
            if not coef.is_zero:
                clean[word] = coef
        self.terms = clean

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if other.degree != self.degree:
            raise MalformedInput("cannot add tensors of different degrees")
        out = dict(self.terms)
        for word, coef in other.terms.items():
            out[word] = out[word] + coef if word in out else coef
        return TensorElement(self.degree, out)

    def scale(self, factor: CycScalar) -> "TensorElement":
        return TensorElement(self.degree, {w: c * factor for w, c in self.terms.items()})

    def render(self, labels: list) -> str:
        parts = [f"({c!r}) {' '.join(labels[i] for i in w)}" for w, c in sorted(self.terms.items())]
        return " + ".join(parts) or "0"


# ---------------------------------------------------------------------------
# Arithmetic back ends
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Arith:
    name: str
    one: object
    add: Callable
    mul: Callable
    is_zero: Callable
    prime: int | None = None
    rho: int | None = None


_EXACT_ARITH = _Arith(EXACT, CycScalar.one(), lambda x, y: x + y, lambda x, y: x * y, lambda x: x.is_zero)


def _modular_arith(p: int, rho: int) -> _Arith:
    return _Arith(MODULAR, 1, lambda x, y: (x + y) % p, lambda x, y: (x * y) % p, lambda x: x == 0, p, rho)


def _constants_for(B: BraidedSpace, arith: _Arith) -> dict:
    if arith.name == EXACT:
        return B.constants
    out = {}
    for key, terms in B.constants.items():
        out[key] = [(k, l, project(c, B.order, arith.prime, arith.rho)) for k, l, c in terms]
    return out


def _acc(target: dict, key, value, arith: _Arith) -> None:
    total = arith.add(target[key], value) if key in target else value
    if arith.is_zero(total):
        target.pop(key, None)
    else:
        target[key] = total


def _check_dim(B: BraidedSpace, k: int) -> None:
    limit = bound("FORGE_SYMMETRIZER_DIM_BOUND")
    if B.dim**k > limit:
        raise BoundExceeded(f"d^k = {B.dim}^{k} exceeds the symmetrizer bound {limit}", dim=B.dim, degree=k)


# ---------------------------------------------------------------------------
# Braided lifts
# ---------------------------------------------------------------------------


def reduced_word(sigma, strategy: str = "first") -> list[int]:
    """Adjacent transpositions (slots) that sort sigma by bubble sort.

    "first" always swaps the leftmost inversion, "last" the rightmost; both
    give reduced words of the same permutation.
    """
    perm = list(sigma)
    if sorted(perm) != list(range(len(perm))):
        raise MalformedInput(f"{sigma} is not a permutation of 0..{len(perm) - 1}")
    slots = []
    while True:
        descents = [i for i in range(len(perm) - 1) if perm[i] > perm[i + 1]]
        if not descents:
            return slots
        i = descents[0] if strategy == "first" else descents[-1]
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        slots.append(i)


def _word_index(word: tuple, d: int) -> int:
    index = 0
    for letter in word:
        index = index * d + letter
    return index


def braided_lift(B: BraidedSpace, sigma, strategy: str = "first") -> CycMatrix:
    """T_sigma on V^{(x)k} as a d^k x d^k matrix, applying c along a reduced word."""
    k = len(sigma)
    _check_dim(B, k)
    slots = reduced_word(sigma, strategy)
    entries = {}
    for word in cartesian(range(B.dim), repeat=k):
        vector = {word: CycScalar.one()}
        for slot in slots:
            vector = apply_braiding(B, slot, vector)
        col = _word_index(word, B.dim)
        for image, coef in vector.items():
            entries[(_word_index(image, B.dim), col)] = coef
    size = B.dim**k
    return CycMatrix(size, size, B.order, entries)


def symmetrizer_by_permutations(B: BraidedSpace, k: int) -> CycMatrix:
    """sum over S_k of T_sigma, one permutation at a time."""
    _check_dim(B, k)
    limit = bound("FORGE_SYMMETRIZER_PERM_BOUND")
    if factorial(k) > limit:
        raise BoundExceeded(f"{k}! permutations exceed the bound {limit}", degree=k)
    size = B.dim**k
    total = CycMatrix.zero(size, size, B.order)
    for sigma in permutations(range(k)):
        total = total + braided_lift(B, sigma)
    return total


# ---------------------------------------------------------------------------
# Memoised columns
# ---------------------------------------------------------------------------


class SymmetrizerColumns:
    """Columns S_k(e_x) for words x, memoised one degree at a time."""

    def __init__(self, B: BraidedSpace, arith: _Arith = _EXACT_ARITH):
        self.B = B
        self.arith = arith
        self.constants = _constants_for(B, arith)
        self._memo: dict[int, dict] = {}

    def _braid(self, slot: int, vector: dict) -> dict:
        out: dict = {}
        for word, coef in vector.items():
            for k, l, c in self.constants.get((word[slot], word[slot + 1]), ()):
                image = word[:slot] + (k, l) + word[slot + 2 :]
                _acc(out, image, self.arith.mul(coef, c), self.arith)
        return out

    def t_prime(self, word: tuple) -> dict:
        start = {word: self.arith.one}
        current = dict(start)
        for slot in range(len(word) - 1):
            current = self._braid(slot, current)
            for w, c in start.items():
                _acc(current, w, c, self.arith)
        return current

    def degree(self, k: int) -> dict:
        """{word: column} for every word of length k."""
        if k in self._memo:
            return self._memo[k]
        _check_dim(self.B, k)
        words = list(cartesian(range(self.B.dim), repeat=k))
        if k <= 1:
            columns = {w: {w: self.arith.one} for w in words}
        else:
            previous = self.degree(k - 1)
            columns = {}
            for word in words:
                out: dict = {}
                for image, coef in self.t_prime(word).items():
                    for prefix, c2 in previous[image[:-1]].items():
                        _acc(out, prefix + (image[-1],), self.arith.mul(coef, c2), self.arith)
                columns[word] = out
            # only the previous degree is needed to extend
            self._memo.pop(k - 2, None)
        self._memo[k] = columns
        return columns

    def column(self, word: tuple) -> dict:
        return self.degree(len(word))[tuple(word)]


def _blocks(columns: dict) -> list[list[tuple]]:
    """Connected components of the bipartite column/row support graph."""
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for word, col in columns.items():
        for row in col:
            a, b = find(("c", word)), find(("r", row))
            if a != b:
                parent[a] = b
    groups: dict = {}
    for word, col in columns.items():
        if col:
            groups.setdefault(find(("c", word)), []).append(word)
    return list(groups.values())


def _block_rank(columns: dict, block: list, arith: _Arith, order: int) -> int:
    rows = sorted({row for word in block for row in columns[word]})
    row_index = {row: i for i, row in enumerate(rows)}
    if arith.name == EXACT:
        limit = bound("FORGE_EXACT_RANK_BOUND")
        if max(len(rows), len(block)) > limit:
            raise BoundExceeded(f"exact rank block of size {len(rows)}x{len(block)} exceeds {limit}")
        entries = {(row_index[row], j): c for j, word in enumerate(block) for row, c in columns[word].items()}
        return rank_exact(CycMatrix(len(rows), len(block), order, entries))
    dense = np.zeros((len(rows), len(block)), dtype=np.int64)
    for j, word in enumerate(block):
        for row, c in columns[word].items():
            dense[row_index[row], j] = c
    return rank_mod(dense, arith.prime)


def symmetrizer(B: BraidedSpace, k: int) -> CycMatrix:
    """S_k as an exact d^k x d^k matrix."""
    columns = SymmetrizerColumns(B).degree(k)
    entries = {
        (_word_index(row, B.dim), _word_index(word, B.dim)): c for word, col in columns.items() for row, c in col.items()
    }
    size = B.dim**k
    return CycMatrix(size, size, B.order, entries)


def _ranks(B: BraidedSpace, kmax: int, arith: _Arith) -> list[int]:
    engine = SymmetrizerColumns(B, arith)
    dims = []
    for k in range(kmax + 1):
        if dims and dims[-1] == 0:
            dims.append(0)
            continue
        columns = engine.degree(k)
        rank = sum(_block_rank(columns, block, arith, B.order) for block in _blocks(columns))
        logger.debug("degree %s: rank %s (%s)", k, rank, arith.name)
        dims.append(rank)
    return dims


def degree_dims(B: BraidedSpace, kmax: int, engine: str = EXACT, seed: int = 0, primes: int = 1) -> list[int]:
    """rank S_k for k = 0..kmax; zero from the first vanishing degree on.

    The modular engine runs `primes` projections (seeds seed, seed+1, ...)
    and raises Disagreement when they differ.
    """
    if engine not in ENGINES:
        raise MalformedInput(f"unknown engine {engine!r}; expected one of {', '.join(ENGINES)}")
    _check_dim(B, kmax)
    if engine == EXACT:
        return _ranks(B, kmax, _EXACT_ARITH)
    results = {}
    for offset in range(max(primes, 1)):
        p, rho = choose_prime(B.order, seed + offset)
        results[p] = _ranks(B, kmax, _modular_arith(p, rho))
    distinct = {tuple(v) for v in results.values()}
    if len(distinct) > 1:
        raise Disagreement("modular ranks differ between primes", ranks={str(p): v for p, v in results.items()})
    return next(iter(results.values()))


# ---------------------------------------------------------------------------
# Sketches
# ---------------------------------------------------------------------------


def _apply_braiding_dense(constants: dict, d: int, k: int, slot: int, batch: np.ndarray, p: int) -> np.ndarray:
    shape = (batch.shape[0], d**slot, d, d, d ** (k - slot - 2))
    src = batch.reshape(shape)
    out = np.zeros_like(src)
    for (i, j), terms in constants.items():
        for a, b, c in terms:
            out[:, :, a, b, :] = (out[:, :, a, b, :] + src[:, :, i, j, :] * c) % p
    return out.reshape(batch.shape)


def apply_symmetrizer_mod(B: BraidedSpace, k: int, batch: np.ndarray, p: int, rho: int) -> np.ndarray:
    """S_k applied to the rows of batch (shape (b, d^k)) modulo p."""
    validate_projection(B.order, p, rho)
    constants = {key: [(a, b, project(c, B.order, p, rho)) for a, b, c in terms] for key, terms in B.constants.items()}
    return _apply_s(constants, B.dim, k, np.asarray(batch, dtype=np.int64) % p, p)


def _apply_s(constants: dict, d: int, k: int, batch: np.ndarray, p: int) -> np.ndarray:
    if k <= 1:
        return batch
    current = batch.copy()
    for slot in range(k - 1):
        current = (_apply_braiding_dense(constants, d, k, slot, current, p) + batch) % p
    # S_{k-1} (x) id: move the last tensor factor into the batch axis
    b = batch.shape[0]
    head = current.reshape(b, d ** (k - 1), d).transpose(0, 2, 1).reshape(b * d, d ** (k - 1))
    head = _apply_s(constants, d, k - 1, head, p)
    return head.reshape(b, d, d ** (k - 1)).transpose(0, 2, 1).reshape(b, d**k)


def sketch_lower_bound(B: BraidedSpace, k: int, size: int, seed: int = 0) -> dict:
    """rank(A S_k B) for random size x d^k sketches: a lower bound on dim B^k."""
    p, rho = choose_prime(B.order, seed)
    dim = B.dim**k
    lower = randomized_rank_lower_bound(
        lambda rows: apply_symmetrizer_mod(B, k, rows, p, rho), dim, min(size, dim), seed, p, rho
    )
    return {"degree": k, "lower_bound": lower, "size": min(size, dim), "prime": p, "provenance": "sketch-lower-bound"}


# ---------------------------------------------------------------------------
# Diagonal oracle
# ---------------------------------------------------------------------------


def diagonal_degree_dims(q: QMatrix, kmax: int) -> list[int]:
    """Degree dimensions from the bicharacter formula.

    For c(e_i (x) e_j) = q_ij e_j (x) e_i, S_k sends a word x to the sum over
    position maps pi of the product of q_{x_a x_b} over the pairs a < b that
    pi inverts, times the rearranged word. The sum splits by multidegree.
    """
    limit = bound("FORGE_SYMMETRIZER_PERM_BOUND")
    if factorial(kmax) > limit:
        raise BoundExceeded(f"{kmax}! permutations exceed the bound {limit}", degree=kmax)
    d = q.dim
    order = common_order(c for row in q.entries for c in row)
    dims = [1]
    for k in range(1, kmax + 1):
        if dims[-1] == 0:
            dims.append(0)
            continue
        total = 0
        for counts in _compositions(k, d):
            letters = [i for i, c in enumerate(counts) for _ in range(c)]
            words = [tuple(w) for w in multiset_permutations(letters)]
            index = {w: i for i, w in enumerate(words)}
            entries: dict = {}
            for col, x in enumerate(words):
                for pi in permutations(range(k)):
                    y = [0] * k
                    weight = CycScalar.one()
                    for a in range(k):
                        y[pi[a]] = x[a]
                        for b in range(a + 1, k):
                            if pi[a] > pi[b]:
                                weight = weight * q[x[a], x[b]]
                    key = (index[tuple(y)], col)
                    entries[key] = entries[key] + weight if key in entries else weight
            total += rank_exact(CycMatrix(len(words), len(words), order, entries))
        dims.append(total)
    return dims


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Relations and reports
# ---------------------------------------------------------------------------


def apply_symmetrizer(B: BraidedSpace, element: TensorElement, columns: SymmetrizerColumns | None = None) -> dict:
    """S_k(element) as {word: scalar}, exactly."""
    columns = columns or SymmetrizerColumns(B)
    out: dict = {}
    for word, coef in element.terms.items():
        for image, c in columns.column(word).items():
            _acc(out, image, coef * c, _EXACT_ARITH)
    return out


def relation_in_kernel(B: BraidedSpace, rel: TensorElement, columns: SymmetrizerColumns | None = None) -> bool:
    """True iff S_deg(rel) vanishes exactly."""
    _check_dim(B, rel.degree)
    return not apply_symmetrizer(B, rel, columns)


def product_series(*factors: list[int]) -> list[int]:
    """Coefficients of a product of polynomials given as coefficient lists."""
    out = [1]
    for factor in factors:
        nxt = [0] * (len(out) + len(factor) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(factor):
                nxt[i + j] += a * b
        out = nxt
    return out


A2_SQUARED_SERIES = product_series([1, 1], [1, 1], [1, 0, 1], [1, 1], [1, 1], [1, 0, 1])


def hilbert_report(
    B: BraidedSpace,
    kmax: int,
    engine: str = EXACT,
    seed: int = 0,
    primes: int = 1,
    sketch_degrees=(),
    sketch_size: int = 64,
    expected: list[int] | None = None,
    bound_total: int | None = None,
) -> dict:
    """Degree dimensions with provenance, partial sums and optional comparisons."""
    logger.info("Hilbert prefix of a %s-dimensional braiding through degree %s (%s)", B.dim, kmax, engine)
    dims = degree_dims(B, kmax, engine=engine, seed=seed, primes=primes)
    provenance = EXACT if engine == EXACT else ("modular-confirmed" if primes > 1 else MODULAR)
    sums = []
    running = 0
    for value in dims:
        running += value
        sums.append(running)
    terminated = 0 in dims
    report = {
        "dim": B.dim,
        "kmax": kmax,
        "engine": engine,
        "seed": seed,
        "primes": [choose_prime(B.order, seed + i)[0] for i in range(primes)] if engine == MODULAR else [],
        "degrees": [{"degree": k, "dim": v, "provenance": provenance} for k, v in enumerate(dims)],
        "dims": dims,
        "partial_sums": sums,
        "terminated": terminated,
        "total": sums[-1] if terminated else None,
        "sketches": [sketch_lower_bound(B, k, sketch_size, seed) for k in sketch_degrees],
    }
    if expected is not None:
        prefix = list(expected[: kmax + 1]) + [0] * max(0, kmax + 1 - len(expected))
        report["expected"] = prefix
        report["matches_expected"] = prefix == dims
    if bound_total is not None:
        report["bound_total"] = bound_total
        report["within_bound"] = all(s <= bound_total for s in sums)
    return report
