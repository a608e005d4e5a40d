"""
Simple modules of A_{N,2n}^{mu lambda} as explicit matrices.

Families: V_ijk and V'_ijk (one-dimensional), V_jk and V'_jk
(two-dimensional). Matrices act on column vectors; column j of a generator
matrix is the image of the j-th basis vector.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .cyclotomic import CycScalar
from .exceptions import BadIndex
from .linalg import CycMatrix
from .suzuki import LETTER_BRANCH, SuzukiParams, alternating

logger = logging.getLogger(__name__)

FAMILIES = ("V_ijk", "V'_ijk", "V_jk", "V'_jk")


@dataclass
class Representation:
    family: str
    params: SuzukiParams
    indices: dict
    dim: int
    matrices: dict = field(default_factory=dict)

    @property
    def label(self) -> str:
        idx = ",".join(f"{k}={v}" for k, v in self.indices.items())
        return f"{self.family}[{idx}]"

    def act(self, letters: str) -> CycMatrix:
        """Matrix of a generator word (leftmost letter is applied last)."""
        result = CycMatrix.identity(self.dim, self.params.M)
        for letter in letters:
            result = result @ self.matrices[letter]
        return result

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "indices": dict(self.indices),
            "dim": self.dim,
            "matrices": {k: m.to_json() for k, m in sorted(self.matrices.items())},
        }


def _check_index(name: str, value: int, allowed) -> None:
    if value not in allowed:
        raise BadIndex(f"index {name}={value} out of range", index=name, value=value)


def simple_module(family: str, params: SuzukiParams, strict: bool = True, **indices) -> Representation:
    """Build one simple module.

    strict=True enforces the ranges that enumerate each isomorphism class
    exactly once; strict=False only enforces the conditions under which the
    matrices satisfy the defining relations.
    """
    p = params
    w = p.w
    zero = CycScalar.zero(p.M)
    one_by_one = lambda x: CycMatrix.from_rows([[x]], p.M)  # noqa: E731
    two_by_two = lambda top, bottom: CycMatrix.from_rows([[zero, top], [bottom, zero]], p.M)  # noqa: E731

    if family in ("V_ijk", "V'_ijk"):
        i, j, k = (int(indices.get(name, 0)) for name in ("i", "j", "k"))
        _check_index("i", i, (0, 1))
        _check_index("j", j, (0, 1))
        if strict:
            _check_index("k", k, range(p.N))
        base = w(4 * p.n * k)
        x_i = base * (-1) ** i
        x_j = base * (-1) ** j
        if family == "V_ijk":
            matrices = {"a": one_by_one(x_i), "b": one_by_one(x_j), "c": one_by_one(zero), "d": one_by_one(zero)}
        else:
            if p.lam != 1:
                raise BadIndex("V'_ijk exists only for lambda = 1", family=family)
            matrices = {
                "a": one_by_one(zero),
                "b": one_by_one(zero),
                "c": one_by_one(x_i * p.mu_tilde),
                "d": one_by_one(x_j * p.mu_tilde),
            }
        return Representation(family, p, {"i": i, "j": j, "k": k}, 1, matrices)

    if family in ("V_jk", "V'_jk"):
        try:
            j, k = int(indices["j"]), int(indices.get("k", 0))
        except KeyError as exc:
            raise BadIndex(f"{family} needs an index j", family=family) from exc
        if strict:
            _check_index("k", k, range(p.N))
        K, J = 8 * k * p.n, 2 * j * p.N
        zero_block = CycMatrix.zero(2, 2, p.M)
        if family == "V_jk":
            if j % 2:
                raise BadIndex(f"V_jk needs j even (got j={j})", index="j", value=j)
            if strict:
                _check_index("j", j, range(2, 2 * p.n - 1, 2))
            matrices = {
                "a": two_by_two(w(K - J), w(J)),
                "b": two_by_two(w(K), w(0)),
                "c": zero_block,
                "d": zero_block,
            }
        else:
            if (-1) ** j != p.lam:
                raise BadIndex(f"V'_jk needs (-1)^j = lambda (got j={j})", index="j", value=j)
            if strict:
                allowed = range(2, 2 * p.n - 1, 2) if p.lam == 1 else range(1, 2 * p.n, 2)
                _check_index("j", j, allowed)
            matrices = {
                "a": zero_block,
                "b": zero_block,
                "c": two_by_two(p.mu_bar * w(K), w(0)),
                "d": two_by_two(p.mu_bar * w(K - J), w(J)),
            }
        return Representation(family, p, {"j": j, "k": k}, 2, matrices)

    raise BadIndex(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}", family=family)


def relation_failures(rep: Representation) -> list[str]:
    """Names of the defining relations the matrices violate."""
    p = rep.params
    failures = []
    for x in "ab":
        for y in "cd":
            if not rep.act(x + y).is_zero or not rep.act(y + x).is_zero:
                failures.append(f"mixed_parity_{x}{y}")
    if rep.act("aa") != rep.act("bb"):
        failures.append("x11^2 = x22^2")
    if rep.act("cc") != rep.act("dd"):
        failures.append("x12^2 = x21^2")
    if rep.act(alternating("a", "b", p.L)) != rep.act(alternating("b", "a", p.L)):
        failures.append("chi11 = chi22")
    if rep.act(alternating("d", "c", p.L)) != rep.act(alternating("c", "d", p.L)).scale(CycScalar.rational(p.lam)):
        failures.append("chi21 = lambda chi12")
    unit = rep.act("a" * (2 * p.N)) + rep.act("c" * (2 * p.N)).scale(CycScalar.rational(p.mu))
    if unit != CycMatrix.identity(rep.dim, p.M):
        failures.append("x11^2N + mu x12^2N = 1")
    return failures


def enumerate_simple_modules(params: SuzukiParams) -> list[Representation]:
    p = params
    out = []
    for k in range(p.N):
        for i in (0, 1):
            for j in (0, 1):
                out.append(simple_module("V_ijk", p, i=i, j=j, k=k))
                if p.lam == 1:
                    out.append(simple_module("V'_ijk", p, i=i, j=j, k=k))
        for j in range(2, 2 * p.n - 1, 2):
            out.append(simple_module("V_jk", p, j=j, k=k))
        primed = range(2, 2 * p.n - 1, 2) if p.lam == 1 else range(1, 2 * p.n, 2)
        for j in primed:
            out.append(simple_module("V'_jk", p, j=j, k=k))
    return out


def is_decomposable(rep: Representation) -> bool:
    """A 2-dim module of one branch splits when its two generators commute."""
    if rep.dim == 1:
        return False
    branch_letters = [x for x in "abcd" if not rep.matrices[x].is_zero]
    if len(branch_letters) < 2:
        return True
    x, y = branch_letters[:2]
    if LETTER_BRANCH[x] != LETTER_BRANCH[y]:
        return False
    return rep.act(x + y) == rep.act(y + x)


def simple_census(params: SuzukiParams) -> dict:
    """Count the simple modules and compare sum of dim^2 with dim A."""
    modules = enumerate_simple_modules(params)
    counts: dict = {}
    failures = {}
    for rep in modules:
        counts[rep.family] = counts.get(rep.family, 0) + 1
        bad = relation_failures(rep)
        if bad:
            failures[rep.label] = bad
    total = sum(rep.dim**2 for rep in modules)
    excluded = simple_module("V_jk", params, strict=False, j=0, k=0)
    report = {
        "params": params.as_dict(),
        "counts": counts,
        "sum_of_squares": total,
        "dim": params.dim,
        "ok": total == params.dim and not failures,
        "relation_failures": failures,
        "j0_decomposable": is_decomposable(excluded),
    }
    logger.info("Simple census of %s: %s modules, sum of squares %s", params.label, len(modules), total)
    return report
