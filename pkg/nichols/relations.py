"""
Text fixtures of tensor relations.

A fixture is a list of lines::

    # comment
    labels: w1 w2 m1 m2
    alpha := w(8*k*n*s)
    w1 m1 - alpha m2 w1 + alpha^2 beta w2 m2 - alpha m1 w2 = 0

Juxtaposition and `*` are the tensor product, `/` divides by a scalar,
`^` takes integer powers, `w(e)` is omega^e for M = 8nN. Identifiers that
are neither defined names nor parameters are split greedily into basis
labels, so `w1m1` reads as `w1 m1`. A chain
`a = b = 0` yields every member as a relation; any other chain yields the
differences of neighbours.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path

from django.conf import settings

from algebra.cyclotomic import CycScalar, root_of_unity
from algebra.exceptions import MalformedInput
from algebra.suzuki import SuzukiParams

from .engine import TensorElement

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


@dataclass
class Relation:
    line: int
    source: str
    element: TensorElement

    def as_dict(self, labels: list) -> dict:
        return {
            "line": self.line,
            "source": self.source,
            "degree": self.element.degree,
            "expanded": self.element.render(labels),
        }


# ---------------------------------------------------------------------------
# Values: {word: scalar}, the empty word carrying scalars
# ---------------------------------------------------------------------------


def _add(x: dict, y: dict, sign: int = 1) -> dict:
    out = dict(x)
    for word, c in y.items():
        total = out[word] + c * sign if word in out else c * sign
        if total.is_zero:
            out.pop(word, None)
        else:
            out[word] = total
    return out


def _mul(x: dict, y: dict) -> dict:
    out: dict = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            out = _add(out, {w1 + w2: c1 * c2})
    return out


def _scalar_of(x: dict, what: str) -> CycScalar:
    if not x:
        return CycScalar.zero()
    if set(x) != {()}:
        raise MalformedInput(f"{what} must be a scalar")
    return x[()]


def _scalar(c: CycScalar) -> dict:
    return {} if c.is_zero else {(): c}


def _power(x: dict, exponent: int) -> dict:
    if exponent < 0:
        base = _scalar_of(x, "a negative power")
        if base.is_zero:
            raise MalformedInput("zero raised to a negative power")
        return _scalar(base**exponent)
    out = {(): CycScalar.one()}
    for _ in range(exponent):
        out = _mul(out, x)
    return out


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, env: dict, labels: list, order: int):
        self.tokens = self._tokenize(text)
        self.pos = 0
        self.env = env
        self.labels = labels
        self.order = order

    @staticmethod
    def _tokenize(text: str) -> list[tuple[str, str]]:
        tokens = []
        for number, name, sym in _TOKEN.findall(text):
            if number:
                tokens.append(("num", number))
            elif name:
                tokens.append(("name", name))
            elif sym:
                tokens.append(("sym", sym))
        return tokens

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, sym: str | None = None):
        kind, value = self.peek()
        if kind is None or (sym is not None and value != sym):
            raise MalformedInput(f"expected {sym or 'a token'}, found {value!r}")
        self.pos += 1
        return kind, value

    def done(self) -> bool:
        return self.pos >= len(self.tokens)

    def expression(self) -> dict:
        sign = 1
        if self.peek() == ("sym", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("sym", "+"):
            self.take()
        value = _add({}, self.term(), sign)
        while self.peek() in (("sym", "+"), ("sym", "-")):
            _, op = self.take()
            value = _add(value, self.term(), 1 if op == "+" else -1)
        return value

    def _starts_factor(self) -> bool:
        kind, value = self.peek()
        return kind in ("num", "name") or value == "("

    def term(self) -> dict:
        value = self.factor()
        while True:
            kind, sym = self.peek()
            if sym == "*":
                self.take()
                value = _mul(value, self.factor())
            elif sym == "/":
                self.take()
                divisor = _scalar_of(self.factor(), "a divisor")
                if divisor.is_zero:
                    raise MalformedInput("division by zero in a relation")
                value = _mul(value, _scalar(divisor.inverse()))
            elif self._starts_factor():
                value = _mul(value, self.factor())
            else:
                return value

    def factor(self) -> dict:
        value = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            sign = 1
            if self.peek() == ("sym", "-"):
                self.take()
                sign = -1
            kind, digits = self.take()
            if kind != "num":
                raise MalformedInput(f"exponent must be an integer, found {digits!r}")
            value = _power(value, sign * int(digits))
        return value

    def atom(self) -> dict:
        kind, value = self.take()
        if kind == "num":
            return _scalar(CycScalar.rational(int(value)))
        if value == "(":
            inner = self.expression()
            self.take(")")
            return inner
        if kind == "name":
            if value == "w" and self.peek() == ("sym", "("):
                self.take("(")
                exponent = _scalar_of(self.expression(), "an exponent of omega")
                self.take(")")
                if not exponent.is_rational or exponent.coords[0].denominator != 1:
                    raise MalformedInput("the exponent of omega must be an integer")
                return _scalar(root_of_unity(self.order, int(exponent.coords[0])))
            if value in self.env:
                return dict(self.env[value])
            return self._label_word(value)
        raise MalformedInput(f"unexpected symbol {value!r}")

    def _label_word(self, name: str) -> dict:
        word = []
        rest = name
        ordered = sorted(self.labels, key=len, reverse=True)
        while rest:
            for label in ordered:
                if rest.startswith(label):
                    word.append(self.labels.index(label))
                    rest = rest[len(label) :]
                    break
            else:
                raise MalformedInput(f"unknown name {name!r}")
        return {tuple(word): CycScalar.one()}


def _element(value: dict, line: int) -> TensorElement | None:
    if not value:
        return None
    degrees = {len(word) for word in value}
    if len(degrees) != 1:
        raise MalformedInput(f"line {line}: relation is not homogeneous (degrees {sorted(degrees)})")
    return TensorElement(degrees.pop(), value)


def parse_relations(text: str, labels: list, env: dict | None = None, order: int = 1) -> tuple[list, list[Relation]]:
    """Parse a fixture; returns (labels, relations) with words over the given labels.

    A `labels:` line, when present, must list the same labels.
    """
    env = dict(env or {})
    relations: list[Relation] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("labels:"):
                declared = line[len("labels:") :].split()
                if sorted(declared) != sorted(labels):
                    raise MalformedInput(f"fixture labels {declared} do not match the braiding labels {labels}")
                continue
            if ":=" in line:
                name, expr = (part.strip() for part in line.split(":=", 1))
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                    raise MalformedInput(f"bad name {name!r}")
                env[name] = _evaluate(expr, env, labels, order)
                continue
            members = [_evaluate(part, env, labels, order) for part in line.split("=")]
            if len(members) < 2:
                raise MalformedInput("a relation needs '='")
            if not members[-1]:
                values = list(members[:-1])
            else:
                values = [_add(a, b, -1) for a, b in zip(members, members[1:])]
            for value in values:
                element = _element(value, number)
                if element is None:
                    logger.debug("line %s: member vanishes identically, skipped", number)
                    continue
                relations.append(Relation(number, line, element))
        except MalformedInput as exc:
            raise MalformedInput(f"line {number}: {exc.message}", line=number, source=line) from exc
    return list(labels), relations


def _evaluate(expr: str, env: dict, labels: list, order: int) -> dict:
    parser = _Parser(expr, env, labels, order)
    value = parser.expression()
    if not parser.done():
        raise MalformedInput(f"unexpected {parser.peek()[1]!r} in {expr!r}")
    return value


def relation_env(params: SuzukiParams, indices: dict, q: CycScalar | None = None) -> dict:
    """Names available to fixtures: parameters, indices, mu/lambda scalars and q."""
    scalars = {
        "N": CycScalar.rational(params.N),
        "n": CycScalar.rational(params.n),
        "mu": CycScalar.rational(params.mu),
        "lambda": CycScalar.rational(params.lam),
        "mu_bar": params.mu_bar,
        "mu_tilde": params.mu_tilde,
    }
    for name, value in indices.items():
        scalars[name] = CycScalar.rational(int(value))
    if q is not None:
        scalars["q"] = q
    return {name: _scalar(value) for name, value in scalars.items()}


def fixture_path(name: str) -> Path:
    base = Path(getattr(settings, "FORGE_FIXTURES_DIR", Path(__file__).resolve().parent / "fixtures"))
    path = base / "relations" / name
    if not path.suffix:
        path = path.with_suffix(".txt")
    if not path.exists():
        raise MalformedInput(f"no relation fixture {name!r} under {base / 'relations'}")
    return path


def load_relations(source: str | Path, labels: list, env: dict | None = None, order: int = 1) -> list[Relation]:
    """Read relations from a file path or a fixture name."""
    path = Path(source)
    if not path.exists():
        path = fixture_path(str(source))
    logger.debug("loading relations from %s", path)
    return parse_relations(path.read_text(encoding="utf-8"), labels, env, order)[1]
