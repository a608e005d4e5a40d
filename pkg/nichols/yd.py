"""
Simple Yetter-Drinfeld modules over A_{N,2n}^{mu lambda}.

Every family is rebuilt inside a Radford box product V (x) A, where V is a
simple module and

    h . (v [x] g) = (h_(2) . v) [x] h_(1) g S(h_(3)),
    delta(v [x] g) = g_(1) (x) (v [x] g_(2)).

The printed spanning vectors are constructed there, and the action and
coaction matrices are read off by solving against the span. A spanning set
that is not closed raises NotClosed; nothing is copied from a closed form.

Box-product vectors are dicts {(base_index, BasisWord): CycScalar}.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as cartesian
from typing import NamedTuple

from algebra.conf import bound
from algebra.cyclotomic import CycScalar
from algebra.exceptions import BadIndex, BoundExceeded, GapFound, MalformedInput, NotClosed
from algebra.linalg import CycMatrix, SpanSolver, kernel_basis, rank_exact
from algebra.representations import Representation, relation_failures, simple_module
from algebra.suzuki import BasisWord, SuzukiAlgebra, SuzukiParams, algebra_for, alternating

from .braided import BraidedSpace

logger = logging.getLogger(__name__)

# generator letter for the matrix position (p, q) of x_pq
POSITION_LETTER = {(1, 1): "a", (2, 2): "b", (1, 2): "c", (2, 1): "d"}
LETTER_POSITION = {v: k for k, v in POSITION_LETTER.items()}

INDEX_NAMES = {
    "A": ("i", "j", "k", "p", "s"),
    "Abar": ("i", "j", "k", "p", "s"),
    "B": ("i", "j", "k", "s"),
    "C": ("i", "j", "k", "p", "s", "t"),
    "D": ("j", "k", "p", "s", "t"),
    "E": ("j", "k", "p", "s", "t"),
    "F": ("j", "k", "p", "s"),
    "G": ("j", "k", "p", "s", "t"),
    "H": ("j", "k", "p", "s", "t"),
    "P": ("i", "j", "k", "p", "s", "t"),
    "I": ("p", "j", "k", "s"),
    "J": ("p", "j", "k", "s"),
    "K": ("p", "j", "k", "s"),
    "L": ("p", "j", "k", "s"),
    "M": ("i", "j", "k", "s"),
    "N": ("i", "j", "k", "s"),
    "Q": ("i", "j", "k", "p", "s"),
}

BASE_FAMILY = {
    "A": "V_ijk",
    "Abar": "V_ijk",
    "B": "V_ijk",
    "C": "V_ijk",
    "M": "V_ijk",
    "N": "V_ijk",
    "D": "V_jk",
    "E": "V_jk",
    "F": "V_jk",
    "I": "V_jk",
    "J": "V_jk",
    "G": "V'_jk",
    "H": "V'_jk",
    "K": "V'_jk",
    "L": "V'_jk",
    "P": "V'_ijk",
    "Q": "V'_ijk",
}

# families listed in the classification theorem, grouped by dimension class
THEOREM_FAMILIES = {
    "1": ("A", "Abar"),
    "2": ("B", "C", "D", "E", "G", "H", "P"),
    "2n": ("I", "K"),
}
DUPLICATE_FAMILIES = ("F", "J", "L", "M", "N", "Q")


def _chi22(x: int, y: int) -> str:
    """x11^x chi22^y"""
    return "a" * x + alternating("b", "a", y)


def _chi21(x: int, y: int) -> str:
    """x12^x chi21^y"""
    return "c" * x + alternating("d", "c", y)


def _chi11(x: int, y: int) -> str:
    return "a" * x + alternating("a", "b", y)


def _chi12(x: int, y: int) -> str:
    return "c" * x + alternating("c", "d", y)


def _vec_add(target: dict, key, coef: CycScalar) -> None:
    value = target[key] + coef if key in target else coef
    if value.is_zero:
        target.pop(key, None)
    else:
        target[key] = value


# ---------------------------------------------------------------------------
# Box product
# ---------------------------------------------------------------------------


class BoxtimesSpace:
    """V (x) A for a simple module V, with the generator action cached."""

    def __init__(self, base: Representation, algebra: SuzukiAlgebra | None = None):
        self.base = base
        self.params = base.params
        self.alg = algebra or algebra_for(base.params)
        self._conjugates: dict = {}
        self._columns = {
            letter: [base.matrices[letter].column(i) for i in range(base.dim)] for letter in "abcd"
        }

    @property
    def dim(self) -> int:
        return self.base.dim * self.params.dim

    def _conjugate(self, left: str, word, right: str):
        """x_left . word . S(x_right) as an AlgebraElement."""
        key = (left, word, right)
        if key not in self._conjugates:
            alg = self.alg
            self._conjugates[key] = alg.generator(left) * alg.element(word) * alg.antipode_generator(right)
        return self._conjugates[key]

    def act_letter(self, letter: str, vector: dict) -> dict:
        """x_pq . vector, using Delta^2(x_pq) = sum_ab x_pa (x) x_ab (x) x_bq."""
        p, q = LETTER_POSITION[letter]
        out: dict = {}
        for (i, word), coef in vector.items():
            for a, b in cartesian((1, 2), (1, 2)):
                column = self._columns[POSITION_LETTER[(a, b)]][i]
                if not column:
                    continue
                image = self._conjugate(POSITION_LETTER[(p, a)], word, POSITION_LETTER[(b, q)])
                for row, value in column.items():
                    for w, c in image.terms.items():
                        _vec_add(out, (row, w), coef * value * c)
        return out

    def act(self, letters: str, vector: dict) -> dict:
        """A generator word acting; the rightmost letter acts first."""
        for letter in reversed(letters):
            vector = self.act_letter(letter, vector)
        return vector

    def coaction(self, vector: dict) -> dict:
        """{(u1, (i, u2)): coefficient} for delta(v [x] u) = u1 (x) (v [x] u2)."""
        out: dict = {}
        for (i, word), coef in vector.items():
            for (u1, u2), c in self.alg.coproduct(word).items():
                _vec_add(out, (u1, (i, u2)), coef * c)
        return out

    def vector(self, terms) -> dict:
        """Sum of coef * v [x] word over (base, letters, coef) terms.

        base is either a basis index of V or a dict {index: scalar}.
        """
        out: dict = {}
        for base, letters, coef in terms:
            element = self.alg.evaluate(letters)
            base_vec = {base: CycScalar.one()} if isinstance(base, int) else base
            for i, bc in base_vec.items():
                for w, c in element.terms.items():
                    _vec_add(out, (i, w), bc * c * coef)
        return out


def boxtimes_action(h, v: dict, g, base: Representation) -> dict:
    """h . (v [x] g) through the full double coproduct of h.

    Independent of BoxtimesSpace.act_letter: h_(2) acts on V through the word
    matrices of the base module and h_(1) g S(h_(3)) is multiplied out in A.
    v is {base_index: scalar}; h and g are AlgebraElements.
    """
    alg = h.algebra
    out: dict = {}
    for word, cw in h.terms.items():
        for (h1, rest), c1 in alg.coproduct(word).items():
            for (h2, h3), c2 in alg.coproduct(rest).items():
                matrix = base.act(h2.letters())
                middle = alg.element(h1) * g * alg.antipode(h3)
                if middle.is_zero:
                    continue
                for i, vc in v.items():
                    for row, value in matrix.column(i).items():
                        for w, c in middle.terms.items():
                            _vec_add(out, (row, w), cw * c1 * c2 * vc * value * c)
    return out


# ---------------------------------------------------------------------------
# Modules
# ---------------------------------------------------------------------------


class FamilyKey(NamedTuple):
    family: str
    indices: tuple

    def __str__(self):
        return f"{self.family}[{','.join(f'{k}={v}' for k, v in self.indices)}]"

    def as_dict(self) -> dict:
        return {"family": self.family, "indices": dict(self.indices)}


def make_key(family: str, indices: dict) -> FamilyKey:
    return FamilyKey(family, tuple((name, int(indices[name])) for name in INDEX_NAMES[family]))


@dataclass
class YDModule:
    params: SuzukiParams
    family: str
    indices: dict
    dim: int
    labels: list
    action: dict
    coaction: list
    vectors: list = field(default_factory=list, repr=False)
    strict: bool = True

    def __post_init__(self):
        self._words: dict = {}

    @property
    def key(self) -> FamilyKey:
        return make_key(self.family, self.indices)

    def act(self, letters: str) -> CycMatrix:
        """Matrix of a generator word (leftmost letter is applied last)."""
        letters = "".join(letters)
        if letters not in self._words:
            result = CycMatrix.identity(self.dim, self.params.M)
            for letter in letters:
                result = result @ self.action[letter]
            self._words[letters] = result
        return self._words[letters]

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params.as_dict(),
            "indices": {name: self.indices[name] for name in INDEX_NAMES[self.family]},
            "dim": self.dim,
            "labels": list(self.labels),
            "action": {letter: m.to_json() for letter, m in sorted(self.action.items())},
            "coaction": [
                [i, word.to_json(), k, c.to_json()]
                for i, terms in enumerate(self.coaction)
                for word, k, c in terms
            ],
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "YDModule":
        try:
            raw = payload["params"]
            params = SuzukiParams(int(raw["N"]), int(raw["n"]), int(raw["mu"]), int(raw["lambda"]))
            dim = int(payload["dim"])
            action = {letter: CycMatrix.from_json(m) for letter, m in payload["action"].items()}
            coaction = [[] for _ in range(dim)]
            for i, word, k, c in payload["coaction"]:
                coaction[int(i)].append((BasisWord.from_json(word), int(k), CycScalar.from_json(c)))
            labels = list(payload.get("labels") or [f"e{i + 1}" for i in range(dim)])
            return cls(params, str(payload["family"]), dict(payload["indices"]), dim, labels, action, coaction, strict=False)
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise MalformedInput(f"malformed module payload: {exc}") from exc


# ---------------------------------------------------------------------------
# Index ranges
# ---------------------------------------------------------------------------


def _primed_j_range(params: SuzukiParams) -> range:
    return range(2, 2 * params.n - 1, 2) if params.lam == 1 else range(1, 2 * params.n, 2)


def _ladder_j(tag: str, params: SuzukiParams) -> tuple:
    if tag in ("K", "L") and params.lam == -1:
        return (1, 3)
    return (2, 4)


@lru_cache(maxsize=None)
def _family_index_tuples(tag: str, params: SuzukiParams, strict: bool) -> tuple:
    N, n, lam = params.N, params.n, params.lam
    ks, ss, ps = range(N), range(1, N + 1), (0, 1)
    rows = []
    if tag == "A":
        rows = [(i, i, k, p, s) for i in (0, 1) for k in ks for p in ps for s in ss]
    elif tag == "Abar":
        rows = [(i, i if lam == 1 else 1 - i, k, p, s) for i in (0, 1) for k in ks for p in ps for s in ss]
    elif tag == "B":
        rows = [(0, 1, k, s) for k in ks for s in ss]
    elif tag == "C":
        rows = [(i, j, k, p, s, t) for i, j in ((0, 0), (0, 1)) for k in ks for p in ps for s in ss for t in range(n - 1)]
        rows += [(0, 1 if lam == 1 else 0, k, 0, s, n - 1) for k in ks for s in ss]
    elif tag in ("D", "E"):
        rows = [(j, k, p, s, t) for j in range(2, 2 * n - 1, 2) for k in ks for p in ps for s in ss for t in range(n)]
    elif tag in ("G", "H"):
        rows = [(j, k, p, s, t) for j in _primed_j_range(params) for k in ks for p in ps for s in ss for t in range(n)]
    elif tag == "P":
        if lam == 1:
            rows = [(i, j, k, p, s, t) for i, j in ((0, 0), (0, 1)) for k in ks for p in ps for s in ss for t in range(n)]
    elif tag in ("I", "K"):
        rows = [(p, j, k, s) for p in ps for j in _ladder_j(tag, params) for k in ks for s in ss]
    elif not strict:
        if tag == "F":
            rows = [(j, k, p, s) for j in range(2, 2 * n - 1, 2) for k in ks for p in ps for s in ss]
        elif tag in ("J", "L"):
            rows = [(p, j, k, s) for p in ps for j in _ladder_j(tag, params) for k in ks for s in ss]
        elif tag in ("M", "N"):
            rows = [(i, j, k, s) for i in (0, 1) for j in (0, 1) for k in ks for s in ss]
        elif tag == "Q" and lam == 1:
            rows = [(i, j, k, p, s) for i in (0, 1) for j in (0, 1) for k in ks for p in ps for s in ss]
    return tuple(rows)


def family_indices(tag: str, params: SuzukiParams, strict: bool = True) -> list[dict]:
    """Index tuples of a family.

    strict=True lists the representatives of the classification theorem
    (empty for the duplicate families); strict=False lists the extended
    ranges of the duplicates as well.
    """
    if tag not in INDEX_NAMES:
        raise BadIndex(f"unknown family {tag!r}", family=tag)
    names = INDEX_NAMES[tag]
    return [dict(zip(names, row)) for row in _family_index_tuples(tag, params, strict)]


@lru_cache(maxsize=64)
def _strict_rows(tag: str, params: SuzukiParams) -> frozenset:
    return frozenset(_family_index_tuples(tag, params, True))


def is_strict(tag: str, params: SuzukiParams, indices: dict) -> bool:
    row = tuple(int(indices[name]) for name in INDEX_NAMES[tag])
    return row in _strict_rows(tag, params)


def normalize_indices(tag: str, params: SuzukiParams, indices: dict) -> dict:
    if tag not in INDEX_NAMES:
        raise BadIndex(f"unknown family {tag!r}; expected one of {', '.join(INDEX_NAMES)}", family=tag)
    out = {}
    for name in INDEX_NAMES[tag]:
        if indices.get(name) is None:
            raise BadIndex(f"family {tag} needs index {name}", family=tag, index=name)
        out[name] = int(indices[name])
    for name in ("i", "p") + (("j",) if BASE_FAMILY[tag] in ("V_ijk", "V'_ijk") else ()):
        if name in out and out[name] not in (0, 1):
            raise BadIndex(f"index {name}={out[name]} must be 0 or 1", index=name, value=out[name])
    if not 1 <= out["s"] <= params.N:
        raise BadIndex(f"index s={out['s']} out of range 1..{params.N}", index="s", value=out["s"])
    if "t" in out and not 0 <= out["t"] < params.n:
        raise BadIndex(f"index t={out['t']} out of range 0..{params.n - 1}", index="t", value=out["t"])
    return out


# ---------------------------------------------------------------------------
# Spanning vectors
# ---------------------------------------------------------------------------


def _sqrt_sign(params: SuzukiParams, i: int, j: int) -> CycScalar:
    """The chosen square root of (-1)^(i+j)."""
    return params.w(0 if (i + j) % 2 == 0 else params.sqrt_minus_one_exp)


def _ladder(space: BoxtimesSpace, first: dict, length: int, even: tuple, odd: tuple) -> list[dict]:
    """first, then chi^{r-1} . first for r = 2..length; even/odd give the chi letters."""
    out = [first]
    for r in range(2, length + 1):
        a, b = even if r % 2 == 0 else odd
        out.append(space.act(alternating(a, b, r - 1), first))
    return out


def _spanning_vectors(tag: str, space: BoxtimesSpace, idx: dict) -> tuple[list[str], list[dict]]:
    P = space.params
    w, n = P.w, P.n
    s = idx["s"]
    sign = (-1) ** idx.get("p", 0)
    vec = space.vector

    if tag == "A":
        return ["w"], [vec([(0, "a" * (2 * s), 1), (0, "c" * (2 * s), sign)])]
    if tag == "Abar":
        return ["w"], [vec([(0, _chi22(2 * s + 1, 2 * n - 1), 1), (0, _chi21(2 * s + 1, 2 * n - 1), P.sqrt_lambda * sign)])]
    if tag == "B":
        return ["w1", "w2"], [
            vec([(0, "a" * (2 * s), 1), (0, "c" * (2 * s), 1)]),
            vec([(0, "a" * (2 * s), 1), (0, "c" * (2 * s), -1)]),
        ]
    if tag == "C":
        t = idx["t"]
        root = _sqrt_sign(P, idx["i"], idx["j"])
        return ["w1", "w2"], [
            vec([(0, _chi22(2 * s + 1, 2 * t + 1), 1), (0, _chi21(2 * s + 1, 2 * t + 1), root * sign)]),
            vec([(0, _chi22(2 * s, 2 * t + 2), 1), (0, _chi21(2 * s, 2 * t + 2), root.inverse() * sign)]),
        ]
    if tag == "P":
        t = idx["t"]
        root = _sqrt_sign(P, idx["i"], idx["j"])
        return ["w1", "w2"], [
            vec([(0, _chi22(2 * s + 1, 2 * t), 1), (0, _chi21(2 * s + 1, 2 * t), root.inverse() * sign)]),
            vec([(0, _chi22(2 * s, 2 * t + 1), 1), (0, _chi21(2 * s, 2 * t + 1), root * sign)]),
        ]

    if tag in ("D", "E", "F", "G", "H"):
        j, k = idx["j"], idx["k"]
        c1 = w(j * P.N - 4 * k * n) * sign
        c2 = w(4 * k * n - j * P.N) * sign
        if tag == "D":
            t = idx["t"]
            first = [(0, _chi22(2 * s + 1, 2 * t + 1), 1), (1, _chi21(2 * s + 1, 2 * t + 1), c1)]
            second = [(1, _chi22(2 * s, 2 * t + 2), 1), (0, _chi21(2 * s, 2 * t + 2), c2)]
        elif tag == "E":
            t = idx["t"]
            first = [(0, _chi22(2 * s, 2 * t), 1), (1, _chi21(2 * s, 2 * t), c1)]
            second = [(1, _chi11(2 * s, 2 * t), 1), (0, _chi12(2 * s, 2 * t), c2)]
        elif tag == "F":
            first = [(0, "a" * (2 * s), 1), (1, "c" * (2 * s), c1)]
            second = [(1, "a" * (2 * s), 1), (0, "c" * (2 * s), c2)]
        else:
            t = idx["t"]
            mt = P.mu_tilde
            odd_first = tag == "G"
            x1, y1 = (2 * s + 1, 2 * t) if odd_first else (2 * s, 2 * t + 1)
            x2, y2 = (2 * s, 2 * t + 1) if odd_first else (2 * s + 1, 2 * t)
            first = [(0, _chi22(x1, y1), 1), (1, _chi21(x1, y1), c1 / mt)]
            second = [(1, _chi22(x2, y2), 1), (0, _chi21(x2, y2), c2 * mt)]
        return ["w1", "w2"], [vec(first), vec(second)]

    if tag in ("I", "J", "M", "N"):
        if tag in ("I", "J"):
            j, k = idx["j"], idx["k"]
            exponent = 2 * (j * P.N - 2 * k * n) if tag == "I" else -4 * k * n
            base = {0: CycScalar.one(), 1: w(exponent) * sign}
        else:
            base = 0
        if tag in ("I", "M"):
            w_word, m_word = "a" * (2 * s + 1), "c" * (2 * s) + "d"
        else:
            w_word, m_word = "c" * (2 * s + 1), "a" * (2 * s) + "b"
        ws = _ladder(space, vec([(base, w_word, 1)]), n, even=("b", "a"), odd=("a", "b"))
        ms = _ladder(space, vec([(base, m_word, 1)]), n, even=("a", "b"), odd=("b", "a"))
        labels = [f"w{r}" for r in range(1, n + 1)] + [f"m{r}" for r in range(1, n + 1)]
        return labels, ws + ms

    if tag in ("K", "L", "Q"):
        base = 1 if tag == "L" else 0
        first = vec([(base, "a" * (2 * s), 1), (base, "c" * (2 * s), sign)])
        ws = _ladder(space, first, 2 * n, even=("c", "d"), odd=("d", "c"))
        return [f"w{r}" for r in range(1, 2 * n + 1)], ws

    raise BadIndex(f"unknown family {tag!r}", family=tag)


def _base_module(tag: str, params: SuzukiParams, idx: dict) -> Representation:
    family = BASE_FAMILY[tag]
    if family in ("V_ijk", "V'_ijk"):
        return simple_module(family, params, strict=False, i=idx["i"], j=idx["j"], k=idx["k"])
    return simple_module(family, params, strict=False, j=idx["j"], k=idx["k"])


def _assemble(tag: str, params: SuzukiParams, idx: dict, labels: list, vectors: list, space: BoxtimesSpace, strict: bool) -> YDModule:
    """Read action and coaction matrices off a spanning set inside V [x] A."""
    solver = SpanSolver(vectors)
    if solver.dependent:
        raise NotClosed(
            f"{tag} spanning vectors are linearly dependent",
            family=tag,
            indices=idx,
            dependent=[labels[i] for i in solver.dependent],
        )
    d = len(vectors)
    action = {}
    for letter in "abcd":
        entries = {}
        for i, v in enumerate(vectors):
            coords = solver.solve(space.act_letter(letter, v))
            if coords is None:
                raise NotClosed(
                    f"{tag} is not stable under x{LETTER_POSITION[letter][0]}{LETTER_POSITION[letter][1]}",
                    family=tag,
                    indices=idx,
                    vector=labels[i],
                )
            for j, c in enumerate(coords):
                if not c.is_zero:
                    entries[(j, i)] = c
        action[letter] = CycMatrix(d, d, params.M, entries)

    coaction = []
    for i, v in enumerate(vectors):
        grouped: dict = {}
        for (u1, key), c in space.coaction(v).items():
            grouped.setdefault(u1, {})[key] = c
        terms = []
        for u1 in sorted(grouped):
            coords = solver.solve(grouped[u1])
            if coords is None:
                raise NotClosed(
                    f"{tag} is not a subcomodule (left leg {u1})",
                    family=tag,
                    indices=idx,
                    vector=labels[i],
                )
            terms.extend((u1, j, c) for j, c in enumerate(coords) if not c.is_zero)
        coaction.append(terms)
    return YDModule(params, tag, dict(idx), d, list(labels), action, coaction, list(vectors), strict)


def build_family(tag: str, params: SuzukiParams, strict: bool = True, space: BoxtimesSpace | None = None, **indices) -> YDModule:
    """Construct one Yetter-Drinfeld module from its spanning vectors in V [x] A."""
    idx = normalize_indices(tag, params, indices)
    if strict and not is_strict(tag, params, idx):
        raise BadIndex(
            f"{tag} with indices {idx} is not a representative of the classification list",
            family=tag,
            indices=idx,
        )
    if space is None:
        space = BoxtimesSpace(_base_module(tag, params, idx))
    labels, vectors = _spanning_vectors(tag, space, idx)
    module = _assemble(tag, params, idx, labels, vectors, space, strict)
    logger.debug("built %s (dim %s)", module.key, module.dim)
    return module


# ---------------------------------------------------------------------------
# Audits
# ---------------------------------------------------------------------------


@dataclass
class YDReport:
    module: str
    checks: dict = field(default_factory=dict)
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def fail(self, check: str, **payload) -> None:
        self.checks[check] = False
        if self.counterexample is None:
            self.counterexample = {"check": check, **payload}

    def as_dict(self) -> dict:
        return {
            "module": self.module,
            "passed": self.passed,
            "checks": dict(self.checks),
            "counterexample": self.counterexample,
        }


def yd_compat_check(m: YDModule) -> YDReport:
    """Module relations, Yetter-Drinfeld compatibility, counit and coassociativity."""
    alg = algebra_for(m.params)
    report = YDReport(str(m.key), {name: True for name in ("relations", "yd_compatibility", "counit", "coassociativity")})

    for name in relation_failures(m):
        report.fail("relations", relation=name)

    for letter in "abcd":
        p, q = LETTER_POSITION[letter]
        matrix = m.action[letter]
        for i in range(m.dim):
            lhs: dict = {}
            for j, x in matrix.column(i).items():
                for u, k, g in m.coaction[j]:
                    _vec_add(lhs, (u, k), x * g)
            rhs: dict = {}
            for u, k, g in m.coaction[i]:
                for a, b in cartesian((1, 2), (1, 2)):
                    moved = m.action[POSITION_LETTER[(a, b)]].column(k)
                    if not moved:
                        continue
                    left = alg.generator(POSITION_LETTER[(p, a)]) * alg.element(u) * alg.antipode_generator(POSITION_LETTER[(b, q)])
                    for w, c in left.terms.items():
                        for l, y in moved.items():
                            _vec_add(rhs, (w, l), g * c * y)
            if lhs != rhs:
                report.fail("yd_compatibility", generator=f"x{p}{q}", vector=m.labels[i])

    for i in range(m.dim):
        total: dict = {}
        for u, k, g in m.coaction[i]:
            eps = alg.counit(u)
            if not eps.is_zero:
                _vec_add(total, k, g * eps)
        if total != {i: CycScalar.one()}:
            report.fail("counit", vector=m.labels[i])

        left: dict = {}
        right: dict = {}
        for u, k, g in m.coaction[i]:
            for (u1, u2), c in alg.coproduct(u).items():
                _vec_add(left, (u1, u2, k), g * c)
            for u2, l, h in m.coaction[k]:
                _vec_add(right, (u, u2, l), g * h)
        if left != right:
            report.fail("coassociativity", vector=m.labels[i])

    logger.debug("YD audit of %s: %s", m.key, "pass" if report.passed else "FAIL")
    return report


def braiding_of(m: YDModule) -> BraidedSpace:
    """c(e_i (x) e_j) = sum g (u . e_j) (x) e_k over delta(e_i) = sum g u (x) e_k."""
    constants = {}
    for i in range(m.dim):
        for j in range(m.dim):
            acc: dict = {}
            for u, k, g in m.coaction[i]:
                for l, x in m.act(u.letters()).column(j).items():
                    _vec_add(acc, (l, k), g * x)
            if acc:
                constants[(i, j)] = [(l, k, c) for (l, k), c in sorted(acc.items())]
    return BraidedSpace(m.dim, m.params.M, constants, list(m.labels))


def comodule_support(m: YDModule) -> set[str]:
    """Simple subcoalgebras hit by the coaction: g+-_s, h+-_s or Lambda_s,t."""
    alg = algebra_for(m.params)
    group_likes = alg.group_likes()
    blocks: dict = {}
    for i, terms in enumerate(m.coaction):
        for u, k, g in terms:
            kind, s, t = alg.subcoalgebra_of(u)
            if kind == "L":
                blocks.setdefault(("L", s, t), None)
                continue
            entry = blocks.setdefault((kind, s, 0), {})
            entry.setdefault((i, k), {})
            _vec_add(entry[(i, k)], u, g)

    support = set()
    for (kind, s, t), coefficients in blocks.items():
        if kind == "L":
            support.add(f"Lambda_{s},{t}")
            continue
        names = [f"{kind}+_{s}", f"{kind}-_{s}"]
        solver = SpanSolver([group_likes[name].terms for name in names])
        for target in coefficients.values():
            coords = solver.solve(target)
            if coords is None:
                raise NotClosed(f"coaction coefficients of {m.key} leave the span of {names}")
            support.update(name for name, c in zip(names, coords) if not c.is_zero)
    return support


# ---------------------------------------------------------------------------
# Isomorphisms
# ---------------------------------------------------------------------------


def find_isomorphism(m1: YDModule, m2: YDModule) -> CycMatrix | None:
    """An invertible T with T X1 = X2 T for every generator and (id (x) T) delta1 = delta2 T.

    T is d x d; the unknown T[l, i] sits at position l * d + i.
    """
    if m1.dim != m2.dim or m1.params != m2.params:
        return None
    d = m1.dim
    rows = []

    for letter in "abcd":
        x1, x2 = m1.action[letter], m2.action[letter]
        for l in range(d):
            for i in range(d):
                # (T X1)[l, i] - (X2 T)[l, i]
                row: dict = {}
                for j, v in x1.column(i).items():
                    _vec_add(row, l * d + j, v)
                for r in range(d):
                    v = x2[(l, r)]
                    if not v.is_zero:
                        _vec_add(row, r * d + i, -v)
                if row:
                    rows.append(row)

    words = sorted({u for terms in m1.coaction + m2.coaction for u, _, _ in terms})
    for i in range(d):
        for u in words:
            for k in range(d):
                row = {}
                for l in range(d):
                    for u2, kk, g in m2.coaction[l]:
                        if u2 == u and kk == k:
                            _vec_add(row, l * d + i, g)
                for u1, j, g in m1.coaction[i]:
                    if u1 == u:
                        _vec_add(row, k * d + j, -g)
                if row:
                    rows.append(row)

    system = CycMatrix(len(rows), d * d, m1.params.M, {(r, c): v for r, row in enumerate(rows) for c, v in row.items()})
    kernel = kernel_basis(system)
    if not kernel:
        return None

    def as_matrix(flat):
        return CycMatrix(d, d, m1.params.M, {(idx // d, idx % d): v for idx, v in enumerate(flat) if not v.is_zero})

    trials = [list(vec) for vec in kernel]
    for e in range(1, 4):
        combo = [CycScalar.zero()] * (d * d)
        for m_idx, vec in enumerate(kernel):
            weight = CycScalar.rational((m_idx + 1) ** e)
            combo = [a + weight * b for a, b in zip(combo, vec)]
        trials.append(combo)
    for flat in trials:
        candidate = as_matrix(flat)
        if rank_exact(candidate) == d:
            return candidate
    return None


def canonical_key(tag: str, params: SuzukiParams, indices: dict) -> FamilyKey:
    """Map a 2n-dimensional family onto its classification representative."""
    idx = normalize_indices(tag, params, indices)
    n_even = params.n % 2 == 0
    lam = params.lam

    def norm_even(j: int) -> int:
        return 2 if j % 4 == 2 else 4

    def norm_k(j: int) -> int:
        return j % 4 or 4

    if tag == "I":
        if idx["j"] % 2:
            raise BadIndex(f"I needs j even (got j={idx['j']})", index="j", value=idx["j"])
        return make_key("I", {**idx, "j": norm_even(idx["j"])})
    if tag == "J":
        shift = 0 if lam == 1 else 2
        return make_key("I", {**idx, "j": norm_even(idx["j"] + shift)})
    if tag == "M":
        i, j = idx["i"], idx["j"]
        j_new = 4 if n_even or (i + j) % 2 == 0 else 2
        return make_key("I", {"p": i, "j": j_new, "k": idx["k"], "s": idx["s"]})
    if tag == "N":
        i, j = idx["i"], idx["j"]
        if n_even:
            j_new = 4 if lam == 1 else 2
        else:
            even = (i + j) % 2 == 0
            j_new = 4 if even == (lam == 1) else 2
        return make_key("I", {"p": j, "j": j_new, "k": idx["k"], "s": idx["s"]})
    if tag == "K":
        return make_key("K", {**idx, "j": norm_k(idx["j"])})
    if tag == "L":
        return make_key("K", {**idx, "j": norm_k(-idx["j"])})
    if tag == "Q":
        j_l = 0 if n_even or (idx["i"] + idx["j"]) % 2 == 0 else 2
        return make_key("K", {"p": idx["p"], "j": norm_k(-j_l), "k": idx["k"], "s": idx["s"]})
    return make_key(tag, idx)


# ---------------------------------------------------------------------------
# Box-product decomposition and census
# ---------------------------------------------------------------------------


def _constituents(base: Representation) -> list[tuple[str, dict]]:
    P = base.params
    n, lam = P.n, P.lam
    out = []
    for s in range(1, P.N + 1):
        if base.family == "V_ijk":
            i, j, k = (base.indices[name] for name in ("i", "j", "k"))
            ijk = {"i": i, "j": j, "k": k, "s": s}
            out += [("M", ijk), ("N", ijk)]
            if i != j:
                out.append(("B", ijk))
            else:
                out += [("A", {**ijk, "p": p}) for p in (0, 1)]
            out += [("C", {**ijk, "p": p, "t": t}) for t in range(n - 1) for p in (0, 1)]
            if (lam == 1) == (i == j):
                out += [("Abar", {**ijk, "p": p}) for p in (0, 1)]
            else:
                out.append(("C", {**ijk, "p": 0, "t": n - 1}))
        elif base.family == "V_jk":
            jk = {"j": base.indices["j"], "k": base.indices["k"], "s": s}
            for p in (0, 1):
                out += [("I", {**jk, "p": p}), ("J", {**jk, "p": p})]
            for t in range(n - 1):
                for p in (0, 1):
                    out += [("D", {**jk, "p": p, "t": t}), ("E", {**jk, "p": p, "t": t + 1})]
            out += [("D", {**jk, "p": p, "t": n - 1}) for p in (0, 1)]
            out += [("E", {**jk, "p": p, "t": 0}) for p in (0, 1)]
        elif base.family == "V'_jk":
            jk = {"j": base.indices["j"], "k": base.indices["k"], "s": s}
            for p in (0, 1):
                out += [("K", {**jk, "p": p}), ("L", {**jk, "p": p})]
            out += [(tag, {**jk, "p": p, "t": t}) for t in range(n) for p in (0, 1) for tag in ("G", "H")]
        else:
            i, j, k = (base.indices[name] for name in ("i", "j", "k"))
            ijk = {"i": i, "j": j, "k": k, "s": s}
            out += [("Q", {**ijk, "p": p}) for p in (0, 1)]
            out += [("P", {**ijk, "p": p, "t": t}) for t in range(n) for p in (0, 1)]
    return out


def resolve_key(m: YDModule) -> tuple[FamilyKey, str]:
    """Classification representative of a lax module and how it was found."""
    P = m.params
    if m.family in ("I", "J", "K", "L", "M", "N", "Q"):
        return canonical_key(m.family, P, m.indices), "congruence"
    if is_strict(m.family, P, m.indices):
        return m.key, "strict"
    target = "E" if m.family == "F" else m.family
    pinned = {"s": m.indices["s"], "k": m.indices["k"], "t": m.indices.get("t", 0)}
    for candidate in family_indices(target, P):
        if any(candidate.get(name, 0) != value for name, value in pinned.items()):
            continue
        other = build_family(target, P, **candidate)
        if find_isomorphism(m, other) is not None:
            logger.debug("%s resolved to %s by intertwiner search", m.key, other.key)
            return other.key, "intertwiner"
    logger.warning("no classification representative found for %s", m.key)
    return m.key, "unresolved"


def decompose_boxtimes(base: Representation) -> dict:
    """Build every listed constituent of V [x] A and check they partition it."""
    P = base.params
    limit = bound("FORGE_BOXTIMES_BOUND")
    total_dim = base.dim * P.dim
    if total_dim > limit:
        raise BoundExceeded(f"box product dimension {total_dim} exceeds {limit}", dim=total_dim)
    logger.info("Decomposing %s [x] %s (dim %s)", base.label, P.label, total_dim)

    space = BoxtimesSpace(base)
    modules = [build_family(tag, P, strict=False, space=space, **idx) for tag, idx in _constituents(base)]
    vectors = [v for m in modules for v in m.vectors]
    solver = SpanSolver(vectors)
    if solver.dependent:
        raise GapFound(f"constituents of {base.label} [x] A overlap", dependent=len(solver.dependent))
    if len(vectors) != total_dim:
        raise GapFound(
            f"constituents of {base.label} [x] A span {len(vectors)} of {total_dim} dimensions",
            spanned=len(vectors),
            expected=total_dim,
        )

    constituents = []
    census: Counter = Counter()
    for m in modules:
        key, how = resolve_key(m)
        census[str(key)] += 1
        constituents.append({"built": str(m.key), "dim": m.dim, "key": str(key), "resolved_by": how})
    return {
        "base": base.label,
        "params": P.as_dict(),
        "dim": total_dim,
        "spanned": len(vectors),
        "constituents": constituents,
        "census": dict(sorted(census.items())),
    }


def yd_census(params: SuzukiParams) -> dict:
    """Count the classification representatives per dimension class."""
    P = params
    families = {}
    classes = []
    expected = {"1": 8 * P.N**2, "2": 2 * P.N**2 * (4 * P.n**2 - 1), "2n": 8 * P.N**2}
    dims = {"1": 1, "2": 2, "2n": 2 * P.n}
    total = 0
    for cls, tags in THEOREM_FAMILIES.items():
        count = 0
        for tag in tags:
            families[tag] = len(family_indices(tag, P))
            count += families[tag]
        total += count * dims[cls] ** 2
        classes.append({"class": cls, "dim": dims[cls], "count": count, "expected": expected[cls], "ok": count == expected[cls]})
    target = P.dim**2
    logger.info("YD census of %s: sum of squares %s, target %s", P.label, total, target)
    return {
        "params": P.as_dict(),
        "families": families,
        "classes": classes,
        "sum_of_squares": total,
        "target": target,
        "ok": total == target and all(row["ok"] for row in classes),
    }
