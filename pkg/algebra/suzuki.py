"""
The Suzuki Hopf algebras A_{N,2n}^{mu lambda}.

Generators x11, x22, x12, x21 are written as the letters a, b, c, d. A word
made only of a, b lives in the diagonal branch D, a word made only of c, d
in the off-diagonal branch O; any word mixing the two vanishes.

Canonical basis (8Nn words):
    diag (s, t) = x11^s chi22^t = a^s (bab...)_t
    off  (s, t) = x12^s chi21^t = c^s (dcd...)_t
with s in 1..2N and t in 0..2n-1.

The unit is x11^{2N} + mu x12^{2N}; it is not a basis word.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Sequence

from .conf import bound
from .cyclotomic import CycScalar, root_of_unity
from .exceptions import BadIndex, BoundExceeded, MalformedInput

logger = logging.getLogger(__name__)

DIAG = "diag"
OFF = "off"

LETTER_NAMES = {"a": "x11", "b": "x22", "c": "x12", "d": "x21"}
NAME_LETTERS = {v: k for k, v in LETTER_NAMES.items()}

# (first, second) letters of each branch; first is the one carrying x^s
BRANCH_LETTERS = {DIAG: ("a", "b"), OFF: ("c", "d")}
LETTER_BRANCH = {"a": DIAG, "b": DIAG, "c": OFF, "d": OFF}


def alternating(first: str, second: str, length: int) -> str:
    """first second first ... of the given length."""
    return (first + second) * (length // 2) + (first if length % 2 else "")


# ---------------------------------------------------------------------------
# Parameters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SuzukiParams:
    """Parameters (N, n, mu, lambda) of A_{N,2n}^{mu lambda}."""

    N: int
    n: int
    mu: int = 1
    lam: int = 1

    def __post_init__(self):
        if self.N < 1 or self.n < 1:
            raise BadIndex(f"N and n must be positive (got N={self.N}, n={self.n})")
        if self.mu not in (1, -1) or self.lam not in (1, -1):
            raise BadIndex(f"mu and lambda must be +1 or -1 (got {self.mu}, {self.lam})")

    @classmethod
    def from_flags(cls, N: int, n: int, mu: str = "+", lam: str = "+") -> "SuzukiParams":
        signs = {"+": 1, "-": -1, "1": 1, "-1": -1}
        try:
            return cls(int(N), int(n), signs[str(mu)], signs[str(lam)])
        except KeyError as exc:
            raise BadIndex(f"sign flags must be '+' or '-' (got mu={mu!r}, lambda={lam!r})") from exc

    # -- derived quantities --------------------------------------------------

    @property
    def M(self) -> int:
        """Cyclotomic order 8nN; omega is a primitive M-th root of unity."""
        return 8 * self.n * self.N

    @property
    def L(self) -> int:
        """Length 2n of the alternating words in the chi relations."""
        return 2 * self.n

    @property
    def dim(self) -> int:
        return 8 * self.N * self.n

    @property
    def mu_tilde_exp(self) -> int:
        return 0 if self.mu == 1 else 2 * self.n

    @property
    def mu_bar_exp(self) -> int:
        return 0 if self.mu == 1 else 4 * self.n

    @property
    def sqrt_lambda_exp(self) -> int:
        return 0 if self.lam == 1 else 2 * self.n * self.N

    @property
    def sqrt_minus_one_exp(self) -> int:
        return 2 * self.n * self.N

    @property
    def minus_one_exp(self) -> int:
        return 4 * self.n * self.N

    def w(self, exponent: int) -> CycScalar:
        """omega ** exponent."""
        return root_of_unity(self.M, exponent)

    @property
    def omega(self) -> CycScalar:
        return self.w(1)

    @property
    def mu_tilde(self) -> CycScalar:
        return self.w(self.mu_tilde_exp)

    @property
    def mu_bar(self) -> CycScalar:
        return self.w(self.mu_bar_exp)

    @property
    def sqrt_lambda(self) -> CycScalar:
        return self.w(self.sqrt_lambda_exp)

    @property
    def label(self) -> str:
        sign = {1: "+", -1: "-"}
        return f"A_{{{self.N},{self.L}}}^{{{sign[self.mu]}{sign[self.lam]}}}"

    def as_dict(self) -> dict:
        return {"N": self.N, "n": self.n, "mu": self.mu, "lambda": self.lam}


# ---------------------------------------------------------------------------
# Basis words and elements
# ---------------------------------------------------------------------------


class BasisWord(NamedTuple):
    branch: str
    s: int
    t: int

    def letters(self) -> str:
        first, second = BRANCH_LETTERS[self.branch]
        return first * self.s + alternating(second, first, self.t)

    def __str__(self):
        if self.branch == DIAG:
            return f"x11^{self.s} chi22^{self.t}"
        return f"x12^{self.s} chi21^{self.t}"

    def to_json(self) -> list:
        return [self.branch, self.s, self.t]

    @classmethod
    def from_json(cls, payload) -> "BasisWord":
        try:
            branch, s, t = payload
            return cls(str(branch), int(s), int(t))
        except (TypeError, ValueError) as exc:
            raise MalformedInput(f"malformed basis word {payload!r}") from exc


class AlgebraElement:
    """Finite linear combination of basis words."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "SuzukiAlgebra", terms=None):
        self.algebra = algebra
        clean = {}
        for word, coef in (terms or {}).items():
            if not isinstance(coef, CycScalar):
                coef = CycScalar.rational(coef)
            if not coef.is_zero:
                clean[word] = coef
        self.terms = clean

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: BasisWord) -> CycScalar:
        return self.terms.get(word, CycScalar.zero())

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        terms = dict(self.terms)
        for word, coef in other.terms.items():
            terms[word] = terms[word] + coef if word in terms else coef
        return AlgebraElement(self.algebra, terms)

    def __neg__(self):
        return AlgebraElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {w: c * factor for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int):
        result = self.algebra.unit
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self - other).is_zero

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c!r}) {w}" for w, c in sorted(self.terms.items()))

    def to_json(self) -> list:
        return [[w.to_json(), c.to_json()] for w, c in sorted(self.terms.items())]


def _tensor_add(target: dict, key, coef: CycScalar) -> None:
    value = target[key] + coef if key in target else coef
    if value.is_zero:
        target.pop(key, None)
    else:
        target[key] = value


# ---------------------------------------------------------------------------
# The algebra
# ---------------------------------------------------------------------------


class SuzukiAlgebra:
    """Structure constants of A_{N,2n}^{mu lambda}, built lazily and cached."""

    def __init__(self, params: SuzukiParams):
        self.params = params
        self._products: dict = {}
        self._antipodes: dict = {}
        self.unit = AlgebraElement(
            self,
            {
                BasisWord(DIAG, 2 * params.N, 0): 1,
                BasisWord(OFF, 2 * params.N, 0): params.mu,
            },
        )

    # -- basis ---------------------------------------------------------------

    def basis(self) -> list[BasisWord]:
        return [
            BasisWord(branch, s, t)
            for branch in (DIAG, OFF)
            for s in range(1, 2 * self.params.N + 1)
            for t in range(self.params.L)
        ]

    def element(self, word: BasisWord, coef=1) -> AlgebraElement:
        return AlgebraElement(self, {word: coef})

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self)

    # -- normal forms ----------------------------------------------------------

    def _branch_coefficients(self, branch: str) -> tuple[int, int]:
        """(coefficient of the length-2n swap, coefficient of dropping x^{2N})."""
        if branch == DIAG:
            return 1, 1
        return self.params.lam, self.params.mu

    def _finish(self, branch: str, s: int, t: int, coef: int) -> tuple[int, BasisWord]:
        """Bring s into 1..2N using the unit relation."""
        N2 = 2 * self.params.N
        _, drop = self._branch_coefficients(branch)
        if s == 0:
            s, coef = N2, coef * drop
        while s > N2:
            s, coef = s - N2, coef * drop
        return coef, BasisWord(branch, s, t)

    def normalize_word(self, word: Sequence[str] | str, strategy: str = "leftmost") -> AlgebraElement:
        """Rewrite a generator word to the canonical basis.

        This is the reference engine: plain string rewriting with the
        defining relations. strategy selects where the next rule fires
        ("leftmost" or "rightmost").
        """
        letters = _parse_letters(word)
        if not letters:
            return self.unit
        branches = {LETTER_BRANCH[x] for x in letters}
        if len(branches) > 1:
            return self.zero()
        (branch,) = branches
        first, second = BRANCH_LETTERS[branch]
        swap, drop = self._branch_coefficients(branch)
        N, L = self.params.N, self.params.L
        rules = [
            (second * 2, first * 2, 1),
            (second + first * 2, first * 2 + second, 1),
            (alternating(second, first, L), alternating(first, second, L), swap),
            (first * (4 * N), first * (2 * N), drop),
        ]
        coef = 1
        text = "".join(letters)
        while True:
            hit = None
            positions = range(len(text)) if strategy == "leftmost" else range(len(text) - 1, -1, -1)
            for pos in positions:
                for lhs, rhs, factor in rules:
                    if text.startswith(lhs, pos):
                        hit = (pos, lhs, rhs, factor)
                        break
                if hit:
                    break
            if hit is None:
                break
            pos, lhs, rhs, factor = hit
            text = text[:pos] + rhs + text[pos + len(lhs) :]
            coef *= factor
        s = len(text) - len(text.lstrip(first))
        t = len(text) - s
        coef, basis_word = self._finish(branch, s, t, coef)
        return AlgebraElement(self, {basis_word: coef})

    def _reduce_alternating(self, branch: str, m: int, word: str, coef: int) -> tuple[int, BasisWord]:
        first, second = BRANCH_LETTERS[branch]
        swap, _ = self._branch_coefficients(branch)
        L = self.params.L
        while len(word) > L or (len(word) == L and word[0] == second):
            pos = 0 if word[0] == second else 1
            left, right = word[:pos], word[pos + L :]
            coef *= swap
            k1, joined = _join(left, alternating(first, second, L))
            k2, word = _join(joined, right)
            m += k1 + k2
        if not word:
            s, t = 2 * m, 0
        elif word[0] == first:
            s, t = 2 * m + 1, len(word) - 1
        else:
            s, t = 2 * m, len(word)
        return self._finish(branch, s, t, coef)

    def product(self, u: BasisWord, v: BasisWord) -> tuple[int, BasisWord] | None:
        """Closed-form product of two basis words: (sign, word) or None for 0."""
        key = (u, v)
        if key in self._products:
            return self._products[key]
        if u.branch != v.branch:
            result = None
        else:
            mu_, p = _z_form(u)
            mv, q = _z_form(v)
            k, word = _join(p, q)
            result = self._reduce_alternating(u.branch, mu_ + mv + k, word, 1)
        self._products[key] = result
        return result

    def multiply(self, x: AlgebraElement, y: AlgebraElement, engine: str = "closed") -> AlgebraElement:
        terms: dict = {}
        for u, cu in x.terms.items():
            for v, cv in y.terms.items():
                if engine == "closed":
                    hit = self.product(u, v)
                    if hit is None:
                        continue
                    sign, w = hit
                    _tensor_add(terms, w, cu * cv * sign)
                else:
                    for w, c in self.normalize_word(u.letters() + v.letters()).terms.items():
                        _tensor_add(terms, w, cu * cv * c)
        return AlgebraElement(self, terms)

    def evaluate(self, letters: Sequence[str] | str) -> AlgebraElement:
        """Product of generators, computed with the closed-form table."""
        result = self.unit
        for letter in _parse_letters(letters):
            result = result * self.generator(letter)
        return result

    @lru_cache(maxsize=None)
    def generator(self, letter: str) -> AlgebraElement:
        return self.normalize_word(letter)

    # -- coalgebra -------------------------------------------------------------

    def coproduct(self, w: BasisWord) -> dict[tuple[BasisWord, BasisWord], CycScalar]:
        """Delta(w) as {(left, right): coefficient}."""
        s, t = w.s, w.t
        if w.branch == DIAG:
            partner = BasisWord(OFF, s, t)
            right = self.normalize_word("d" * s + alternating("c", "d", t))
            pairs = [((w, w), CycScalar.one())]
            pairs += [((partner, r), c) for r, c in right.terms.items()]
        else:
            partner = BasisWord(DIAG, s, t)
            right = self.normalize_word("b" * s + alternating("a", "b", t))
            pairs = [((partner, w), CycScalar.one())]
            pairs += [((w, r), c) for r, c in right.terms.items()]
        return dict(pairs)

    def coproduct_element(self, x: AlgebraElement) -> dict:
        out: dict = {}
        for w, c in x.terms.items():
            for key, value in self.coproduct(w).items():
                _tensor_add(out, key, value * c)
        return out

    def counit(self, w: BasisWord) -> CycScalar:
        return CycScalar.one() if w.branch == DIAG else CycScalar.zero()

    def counit_element(self, x: AlgebraElement) -> CycScalar:
        total = CycScalar.zero()
        for w, c in x.terms.items():
            if w.branch == DIAG:
                total = total + c
        return total

    def antipode(self, w: BasisWord) -> AlgebraElement:
        """S as an antihomomorphism with S(x_ij) = x_ji^{4N-1}."""
        if w not in self._antipodes:
            result = self.unit
            for letter in reversed(w.letters()):
                result = result * self.antipode_generator(letter)
            self._antipodes[w] = result
        return self._antipodes[w]

    @lru_cache(maxsize=None)
    def antipode_generator(self, letter: str) -> AlgebraElement:
        transpose = {"a": "a", "b": "b", "c": "d", "d": "c"}[letter]
        return self.generator(transpose) ** (4 * self.params.N - 1)

    def antipode_element(self, x: AlgebraElement) -> AlgebraElement:
        result = self.zero()
        for w, c in x.terms.items():
            result = result + self.antipode(w).scale(c)
        return result

    # -- coalgebra structure ---------------------------------------------------

    def group_likes(self) -> dict[str, AlgebraElement]:
        """The 4N group-like elements g+-_s and h+-_s."""
        p = self.params
        out = {}
        for s in range(1, p.N + 1):
            a2s = self.element(BasisWord(DIAG, 2 * s, 0))
            c2s = self.element(BasisWord(OFF, 2 * s, 0))
            out[f"g+_{s}"] = a2s + c2s
            out[f"g-_{s}"] = a2s - c2s
            top_d = self.evaluate("a" * (2 * s + 1) + alternating("b", "a", p.L - 1))
            top_o = self.evaluate("c" * (2 * s + 1) + alternating("d", "c", p.L - 1)).scale(p.sqrt_lambda)
            out[f"h+_{s}"] = top_d + top_o
            out[f"h-_{s}"] = top_d - top_o
        return out

    def subcoalgebra_of(self, w: BasisWord) -> tuple[str, int, int]:
        """Locate w inside the coalgebra decomposition.

        Returns ("g", s, 0) for the span of x11^{2s}, x12^{2s}; ("h", s, 0)
        for the span of the top words x11^{2s} chi11^{2n}, x12^{2s} chi12^{2n};
        ("L", s, t) for the simple subcoalgebra Lambda_{s,t}.
        """
        N, L = self.params.N, self.params.L
        if w.s % 2 == 0:
            s, t = w.s // 2, w.t
        else:
            s, t = (w.s - 1) // 2, w.t + 1
        s = s if s >= 1 else N
        if t == 0:
            return ("g", s, 0)
        if t == L:
            return ("h", s, 0)
        return ("L", s, t)

    def simple_subcoalgebra(self, s: int, t: int) -> dict[str, list[AlgebraElement]]:
        """The two comodule bases spanning Lambda_{s,t} (t in 1..2n-1)."""
        if not (1 <= s <= self.params.N and 1 <= t < self.params.L):
            raise BadIndex(f"Lambda_{{s,t}} needs 1<=s<=N and 1<=t<2n (got s={s}, t={t})")
        return {
            "chi11": [
                self.evaluate("a" * (2 * s) + alternating("a", "b", t)),
                self.evaluate("c" * (2 * s) + alternating("c", "d", t)),
            ],
            "chi22": [
                self.evaluate("a" * (2 * s) + alternating("b", "a", t)),
                self.evaluate("c" * (2 * s) + alternating("d", "c", t)),
            ],
        }

    def coalgebra_census(self) -> dict:
        p = self.params
        group_likes = len(self.group_likes())
        blocks = p.N * (p.L - 1)
        return {
            "group_likes": group_likes,
            "four_dimensional": blocks,
            "total": group_likes + 4 * blocks,
            "dim": p.dim,
            "ok": group_likes + 4 * blocks == p.dim,
        }

    # -- tensor helpers --------------------------------------------------------

    def tensor_multiply(self, x: dict, y: dict) -> dict:
        """Componentwise product in A (x) A."""
        out: dict = {}
        for (u1, u2), c in x.items():
            for (v1, v2), d in y.items():
                left = self.product(u1, v1)
                right = self.product(u2, v2)
                if left is None or right is None:
                    continue
                _tensor_add(out, (left[1], right[1]), c * d * left[0] * right[0])
        return out


def _parse_letters(word: Sequence[str] | str) -> list[str]:
    if isinstance(word, str):
        tokens = list(word) if all(ch in LETTER_NAMES for ch in word) else word.split()
    else:
        tokens = list(word)
    letters = []
    for token in tokens:
        if token in LETTER_NAMES:
            letters.append(token)
        elif token in NAME_LETTERS:
            letters.append(NAME_LETTERS[token])
        else:
            raise MalformedInput(f"unknown generator {token!r}; expected x11, x12, x21 or x22")
    return letters


def _z_form(w: BasisWord) -> tuple[int, str]:
    """Write w as z^m times an alternating word, z = x11^2 (or x12^2)."""
    first, second = BRANCH_LETTERS[w.branch]
    if w.s % 2 == 0:
        return w.s // 2, alternating(second, first, w.t)
    return (w.s - 1) // 2, alternating(first, second, w.t + 1)


def _join(p: str, q: str) -> tuple[int, str]:
    """Concatenate alternating words, cancelling equal letters into z."""
    if not p or not q or p[-1] != q[0]:
        return 0, p + q
    k = min(len(p), len(q))
    return k, p[: len(p) - k] + q[k:]


@lru_cache(maxsize=64)
def algebra_for(params: SuzukiParams) -> SuzukiAlgebra:
    return SuzukiAlgebra(params)


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------


def normalize_word(word, params: SuzukiParams, strategy: str = "leftmost") -> AlgebraElement:
    return algebra_for(params).normalize_word(word, strategy)


def multiply(a: AlgebraElement, b: AlgebraElement, params: SuzukiParams | None = None) -> AlgebraElement:
    return a.algebra.multiply(a, b)


def coproduct(w: BasisWord, params: SuzukiParams) -> dict:
    return algebra_for(params).coproduct(w)


def counit(w: BasisWord) -> CycScalar:
    return CycScalar.one() if w.branch == DIAG else CycScalar.zero()


def antipode(w: BasisWord, params: SuzukiParams) -> AlgebraElement:
    return algebra_for(params).antipode(w)


@dataclass
class HopfReport:
    params: SuzukiParams
    dim: int
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
            "params": self.params.as_dict(),
            "algebra": self.params.label,
            "dim": self.dim,
            "passed": self.passed,
            "checks": dict(self.checks),
            "counterexample": self.counterexample,
        }


def verify_hopf(params: SuzukiParams, cross_engine: bool | None = None) -> HopfReport:
    """Audit every Hopf algebra axiom on the full basis."""
    limit = bound("FORGE_HOPF_AUDIT_BOUND")
    if params.dim > limit:
        raise BoundExceeded(f"algebra dimension {params.dim} exceeds the audit bound {limit}", dim=params.dim)
    alg = SuzukiAlgebra(params)
    basis = alg.basis()
    report = HopfReport(params, len(basis))
    checks = [
        "basis",
        "associativity",
        "unit",
        "coassociativity",
        "counit",
        "coproduct_multiplicative",
        "counit_multiplicative",
        "antipode",
    ]
    if cross_engine is None:
        cross_engine = params.dim <= 64
    if cross_engine:
        checks.append("engines_agree")
    report.checks = {name: True for name in checks}
    logger.info("Hopf audit of %s (dim %s)", params.label, params.dim)

    if len(set(basis)) != params.dim:
        report.fail("basis", size=len(set(basis)))

    elements = {w: alg.element(w) for w in basis}
    for u in basis:
        one_u = alg.unit * elements[u]
        u_one = elements[u] * alg.unit
        if one_u != elements[u] or u_one != elements[u]:
            report.fail("unit", word=str(u))

    for u in basis:
        for v in basis:
            uv = alg.product(u, v)
            if cross_engine:
                reference = alg.multiply(elements[u], elements[v], engine="rewrite")
                closed = alg.zero() if uv is None else alg.element(uv[1], uv[0])
                if reference != closed:
                    report.fail("engines_agree", left=str(u), right=str(v))
            if uv is None:
                continue
            for w in basis:
                left = alg.product(uv[1], w)
                vw = alg.product(v, w)
                right = None if vw is None else alg.product(u, vw[1])
                lhs = None if left is None else (left[0] * uv[0], left[1])
                rhs = None if right is None else (right[0] * vw[0], right[1])
                if lhs != rhs:
                    report.fail("associativity", words=[str(u), str(v), str(w)])

    for u in basis:
        delta = alg.coproduct(u)
        left_first: dict = {}
        right_first: dict = {}
        for (x, y), c in delta.items():
            for (x1, x2), c1 in alg.coproduct(x).items():
                _tensor_add(left_first, (x1, x2, y), c * c1)
            for (y1, y2), c2 in alg.coproduct(y).items():
                _tensor_add(right_first, (x, y1, y2), c * c2)
        if left_first != right_first:
            report.fail("coassociativity", word=str(u))
        eps_left = alg.zero()
        eps_right = alg.zero()
        for (x, y), c in delta.items():
            eps_left = eps_left + alg.element(y, c * alg.counit(x))
            eps_right = eps_right + alg.element(x, c * alg.counit(y))
        if eps_left != elements[u] or eps_right != elements[u]:
            report.fail("counit", word=str(u))

        s_left = alg.zero()
        s_right = alg.zero()
        for (x, y), c in delta.items():
            s_left = s_left + (alg.antipode(x) * elements[y]).scale(c)
            s_right = s_right + (elements[x] * alg.antipode(y)).scale(c)
        expected = alg.unit.scale(alg.counit(u))
        if s_left != expected or s_right != expected:
            report.fail("antipode", word=str(u))

    for u in basis:
        du = alg.coproduct(u)
        for v in basis:
            uv = alg.product(u, v)
            product_of_deltas = alg.tensor_multiply(du, alg.coproduct(v))
            if uv is None:
                delta_uv: dict = {}
                eps_uv = CycScalar.zero()
            else:
                delta_uv = {key: c * uv[0] for key, c in alg.coproduct(uv[1]).items()}
                eps_uv = alg.counit(uv[1]) * uv[0]
            if delta_uv != product_of_deltas:
                report.fail("coproduct_multiplicative", words=[str(u), str(v)])
            if eps_uv != alg.counit(u) * alg.counit(v):
                report.fail("counit_multiplicative", words=[str(u), str(v)])

    logger.info("Hopf audit of %s: %s", params.label, "pass" if report.passed else "FAIL")
    return report


def structure_tables(params: SuzukiParams, what: str = "mult") -> dict:
    """Structure constants for dumping: mult, coprod or antipode."""
    alg = algebra_for(params)
    basis = alg.basis()
    if what == "mult":
        rows = []
        for u in basis:
            for v in basis:
                hit = alg.product(u, v)
                if hit is not None:
                    rows.append([u.to_json(), v.to_json(), hit[0], hit[1].to_json()])
        return {"table": "mult", "entries": rows}
    if what == "coprod":
        return {
            "table": "coprod",
            "entries": [
                [u.to_json(), [[x.to_json(), y.to_json(), c.to_json()] for (x, y), c in sorted(alg.coproduct(u).items())]]
                for u in basis
            ],
        }
    if what == "antipode":
        return {"table": "antipode", "entries": [[u.to_json(), alg.antipode(u).to_json()] for u in basis]}
    raise MalformedInput(f"unknown table {what!r}; expected mult, coprod or antipode")
