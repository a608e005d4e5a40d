"""
Dimension verdicts for the Nichols algebras of the simple Yetter-Drinfeld
modules.

Two independent routes are kept side by side: the per-family arithmetic
conditions (lemma_verdict), evaluated on integer exponents of omega, and the
pipeline that builds the module, extracts its braiding and reads the answer
off the rank-two diagonal table, the V_abe case list or a type D witness.
cross_check runs both and refuses to continue when they contradict each
other.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product as cartesian
from math import gcd
from typing import Callable, Iterable, Iterator

from sympy import isprime

from algebra.conf import bound
from algebra.cyclotomic import CycScalar, in_group, multiplicative_order
from algebra.exceptions import BadIndex, Disagreement, MalformedInput, NotDiagonal, ZeroParameter
from algebra.suzuki import SuzukiParams

from .braided import (
    BraidedSpace,
    QMatrix,
    connected_components,
    detect_diagonal,
    dynkin,
    extract_rack,
    is_type_D,
    match_vabe,
)
from .closed_forms import de_exponents, gh_parameters, p_parameter
from .engine import degree_dims
from .yd import INDEX_NAMES, braiding_of, build_family, family_indices, is_strict, normalize_indices

logger = logging.getLogger(__name__)

FINITE = "finite"
INFINITE = "infinite"
UNKNOWN = "unknown"
UNCLASSIFIED = "unclassified"

TYPE_TAGS = ("A1", "A1xA1", "A2", "A2xA2", "SuperA2", "ufo8", "D4rack", "Vabe4m", "VabeM2", "other")

LEMMA = "lemma"
PIPELINE = "pipeline"

__all__ = [
    "DimVerdict",
    "rank2_table_lookup",
    "diagonal_verdict",
    "lemma_verdict",
    "vabe_verdict",
    "gh_parameters",
    "pipeline_verdict",
    "cross_check",
    "corollary_check",
    "sweep",
    "PRESETS",
]


@dataclass(frozen=True)
class DimVerdict:
    """Outcome of a dimension question.

    Finite verdicts carry a value, or None for type-only answers (SuperA2,
    ufo8) where no dimension is claimed.
    """

    outcome: str
    value: int | None = None
    type_tag: str | None = None
    reason: str = ""
    provenance: str = LEMMA
    flags: tuple = ()
    diagram: dict | None = field(default=None, compare=False)

    @classmethod
    def finite(cls, value, type_tag, reason, **kwargs) -> "DimVerdict":
        if type_tag not in TYPE_TAGS:
            raise MalformedInput(f"unknown type tag {type_tag!r}")
        return cls(FINITE, value, type_tag, reason, **kwargs)

    @classmethod
    def infinite(cls, reason, **kwargs) -> "DimVerdict":
        return cls(INFINITE, None, None, reason, **kwargs)

    @classmethod
    def unknown(cls, reason, **kwargs) -> "DimVerdict":
        return cls(UNKNOWN, None, None, reason, **kwargs)

    @classmethod
    def unclassified(cls, reason, **kwargs) -> "DimVerdict":
        return cls(UNCLASSIFIED, None, None, reason, **kwargs)

    @property
    def type_only(self) -> bool:
        return self.outcome == FINITE and self.value is None

    @property
    def definite(self) -> bool:
        return self.outcome in (FINITE, INFINITE)

    @property
    def label(self) -> str:
        if self.outcome == FINITE:
            return f"Finite({'type-only' if self.value is None else self.value})"
        return self.outcome.capitalize()

    def same_answer(self, other: "DimVerdict") -> bool:
        if self.outcome != other.outcome:
            return False
        if self.outcome != FINITE:
            return True
        if self.type_only or other.type_only:
            return self.type_only and other.type_only and self.type_tag == other.type_tag
        return self.value == other.value

    def as_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "verdict": self.label,
            "value": self.value,
            "type_tag": self.type_tag,
            "reason": self.reason,
            "provenance": self.provenance,
            "flags": list(self.flags),
            "diagram": self.diagram,
        }


# ---------------------------------------------------------------------------
# Rank-two diagonal table
# ---------------------------------------------------------------------------


def _root_order(x: CycScalar) -> int | None:
    if x.is_zero:
        return None
    return multiplicative_order(x)


def _diagram_payload(q: QMatrix) -> dict:
    d = q.dim
    return {
        "vertices": [q[i, i].to_json() for i in range(d)],
        "edges": [[i, j, (q[i, j] * q[j, i]).to_json()] for i in range(d) for j in range(i + 1, d)],
    }


def rank2_table_lookup(q: QMatrix | None, provenance: str = PIPELINE) -> DimVerdict:
    """Verdict for a diagonal braiding of rank one or two.

    Only the patterns that occur for these Hopf algebras are encoded; any
    other diagram comes back Unclassified with the diagram attached.

    Tags name the diagram shape, not a root of unity: a disconnected pair is
    A1xA1 for any vertex orders m0, m1 and has dimension m0 m1. Cartan type
    A2 at q of order m has three positive roots of height m, so m^3; q = -1
    gives 8 and q in G_3 gives 27.
    """
    if q is None:
        raise NotDiagonal("the rank-two table needs a diagonal braiding")
    if q.dim > 2:
        raise MalformedInput(f"the rank-two table covers dimension <= 2, got {q.dim}")
    vertices = [q[i, i] for i in range(q.dim)]
    orders = [_root_order(v) for v in vertices]
    if any(v == 1 for v in vertices):
        return DimVerdict.infinite("a vertex equals 1", provenance=provenance)
    if None in orders:
        return DimVerdict.infinite("a vertex is not a root of unity", provenance=provenance)
    if q.dim == 1:
        return DimVerdict.finite(orders[0], "A1", f"rank one, q of order {orders[0]}", provenance=provenance)

    q0, q1 = vertices
    edge = q[0, 1] * q[1, 0]
    if edge == 1:
        return DimVerdict.finite(
            orders[0] * orders[1], "A1xA1", "disconnected diagram, q~ = 1", provenance=provenance
        )
    if q0 == q1 and edge * q0 == 1:
        return DimVerdict.finite(
            orders[0] ** 3, "A2", f"Cartan type A2, q~ = q^-1, q of order {orders[0]}", provenance=provenance
        )
    if q0 == -1 and q1 == -1 and edge != -1:
        return DimVerdict.finite(None, "SuperA2", "vertices -1, -1 with q~ not in {1, -1}", provenance=provenance)
    if in_group(edge, 12) and q0 == q1 and q0 == -(edge * edge):
        return DimVerdict.finite(None, "ufo8", "vertices -zeta^2, edge zeta with zeta in G_12", provenance=provenance)
    return DimVerdict.unclassified(
        "rank-two diagram outside the encoded patterns", provenance=provenance, diagram=_diagram_payload(q)
    )


def diagonal_verdict(q: QMatrix, provenance: str = PIPELINE) -> DimVerdict:
    """rank2_table_lookup on each connected component of the Dynkin diagram."""
    if q.dim <= 2:
        return rank2_table_lookup(q, provenance)
    parts = []
    for component in connected_components(dynkin(q)):
        if len(component) > 2:
            return DimVerdict.unclassified(
                f"component of rank {len(component)}", provenance=provenance, diagram=_diagram_payload(q)
            )
        sub = QMatrix([[q[i, j] for j in component] for i in component])
        parts.append(rank2_table_lookup(sub, provenance))
    for part in parts:
        if part.outcome == INFINITE:
            return part
    if all(p.outcome == FINITE and p.value is not None for p in parts):
        value = 1
        for p in parts:
            value *= p.value
        tags = sorted(p.type_tag for p in parts)
        tag = {("A1", "A1"): "A1xA1", ("A2", "A2"): "A2xA2"}.get(tuple(tags), "other")
        return DimVerdict.finite(value, tag, "product over components " + " x ".join(tags), provenance=provenance)
    return DimVerdict.unclassified("a component is outside the encoded patterns", provenance=provenance)


# ---------------------------------------------------------------------------
# V_abe
# ---------------------------------------------------------------------------


def vabe_verdict(a, b, e, provenance: str = LEMMA) -> DimVerdict:
    """Dimension of B(V_abe); depends on a and e only through ae."""
    a, b, e = (x if isinstance(x, CycScalar) else CycScalar.rational(x) for x in (a, b, e))
    for name, value in zip("abe", (a, b, e)):
        if value.is_zero:
            raise ZeroParameter(f"V_abe parameter {name} must be nonzero", parameter=name)
    ae = a * e
    if ae == b * b:
        if b == -1:
            return DimVerdict.finite(4, "A1xA1", "ae = b^2, b = -1", provenance=provenance)
        if b**3 == 1 and b != 1:
            return DimVerdict.finite(27, "A2", "ae = b^2, b in G_3", provenance=provenance)
        return DimVerdict.infinite("ae = b^2 with b not in {-1} u G_3", provenance=provenance)
    m_ae, m_b = multiplicative_order(ae), multiplicative_order(b)
    if m_ae is None or m_b is None:
        return DimVerdict.unknown("a parameter is not a root of unity", provenance=provenance)
    if b == -1:
        return DimVerdict.finite(4 * m_ae, "Vabe4m", f"b = -1, ae in G_{m_ae}", provenance=provenance)
    if ae == 1 and m_b >= 2:
        return DimVerdict.finite(m_b * m_b, "VabeM2", f"ae = 1, b in G_{m_b}", provenance=provenance)
    if b * b * ae == 1 and m_b >= 5:
        return DimVerdict.infinite(f"b^2 = (ae)^-1 with b in G_{m_b}, m >= 5", provenance=provenance)
    if b == 1:
        return DimVerdict.infinite("b = 1", provenance=provenance)
    return DimVerdict.unknown("outside the known V_abe cases", provenance=provenance)


# ---------------------------------------------------------------------------
# Per-family conditions
# ---------------------------------------------------------------------------


def _order(exponent: int, modulus: int) -> int:
    return modulus // gcd(modulus, exponent % modulus)


def _validate(tag: str, params: SuzukiParams, indices: dict) -> dict:
    idx = normalize_indices(tag, params, indices)
    if not is_strict(tag, params, idx):
        raise BadIndex(f"{tag} with indices {idx} is not in the classification list", family=tag, indices=idx)
    return idx


def _verdict_A(P: SuzukiParams, idx: dict) -> DimVerdict:
    N, ks = P.N, idx["k"] * idx["s"]
    if ks % N == 0:
        return DimVerdict.infinite("N | ks")
    return DimVerdict.finite(N // gcd(N, ks), "A1", "N does not divide ks: N/(N, ks)")


def _verdict_Abar(P: SuzukiParams, idx: dict) -> DimVerdict:
    N, n, k, s = P.N, P.n, idx["k"], idx["s"]
    if P.lam == 1:
        x = k * (s + n)
        if x % N == 0:
            return DimVerdict.infinite("lambda = 1, N | k(s+n)")
        return DimVerdict.finite(N // gcd(N, x), "A1", "lambda = 1: N/(N, k(s+n))")
    x = N * n + 2 * k * (s + n)
    if x % (2 * N) == 0:
        return DimVerdict.infinite("lambda = -1, 2N | Nn + 2k(s+n)")
    return DimVerdict.finite(2 * N // gcd(2 * N, x), "A1", "lambda = -1: 2N/(2N, Nn + 2k(s+n))")


def _small_cases(divides_double: bool, divides_triple: bool, label: str) -> DimVerdict:
    if divides_double:
        return DimVerdict.finite(4, "A1xA1", f"{label}: q = -1")
    if divides_triple:
        return DimVerdict.finite(27, "A2", f"{label}: q in G_3")
    return DimVerdict.infinite(f"{label}: q not in {{-1}} u G_3")


def _verdict_B(P: SuzukiParams, idx: dict) -> DimVerdict:
    N, ks = P.N, idx["k"] * idx["s"]
    if ks % N == 0:
        return DimVerdict.infinite("B: N | ks")
    return _small_cases((2 * ks) % N == 0, (3 * ks) % N == 0, "B")


def _verdict_C(P: SuzukiParams, idx: dict) -> DimVerdict:
    N = P.N
    i, j, k, s, t = (idx[x] for x in ("i", "j", "k", "s", "t"))
    d = 2 * k * (s + t + 1) + N * (i + j) * (t + 1)
    not_double = d % (2 * N) != 0
    return _small_cases(d % N == 0 and not_double, (3 * d) % (2 * N) == 0 and not_double, "C")


def de_cases(tag: str, params: SuzukiParams, idx: dict) -> list[tuple[str, str]]:
    """Every matching case of the D/E conditions, in the printed order."""
    M = params.M
    alpha, beta = de_exponents(tag, params, idx)
    half = M // 2
    matches = []
    if alpha != 0 and (2 * beta) % M == 0:
        matches.append(("A1xA1", "alpha != 0, 2 beta = 0"))
    if alpha != 0 and (alpha + 2 * beta) % M == 0:
        matches.append(("A2", "alpha != 0, alpha + 2 beta = 0"))
    if alpha == half and (2 * beta) % M not in (0, half):
        matches.append(("SuperA2", "alpha = M/2, 2 beta not in {0, M/2}"))
    if (alpha - 4 * beta) % M == half and (12 * beta) % M == half and (8 * beta) % M != 0:
        matches.append(("ufo8", "alpha - 4 beta = 12 beta = M/2, 8 beta != 0"))
    return matches


def _verdict_DE(tag: str, P: SuzukiParams, idx: dict) -> DimVerdict:
    alpha, _ = de_exponents(tag, P, idx)
    matches = de_cases(tag, P, idx)
    if not matches:
        return DimVerdict.infinite(f"{tag}: none of the four cases holds (mod M = {P.M})")
    flags = tuple(name for name, _ in matches[1:])
    tag_name, why = matches[0]
    reason = f"{tag}: {why} (mod M = {P.M})"
    q_order = _order(alpha, P.M)
    if tag_name == "A1xA1":
        return DimVerdict.finite(q_order**2, tag_name, reason, flags=flags)
    if tag_name == "A2":
        return DimVerdict.finite(q_order**3, tag_name, reason, flags=flags)
    return DimVerdict.finite(None, tag_name, reason, flags=flags)


def _verdict_P(P: SuzukiParams, idx: dict) -> DimVerdict:
    q = p_parameter(P, idx)
    if q == -1:
        return DimVerdict.finite(4, "A1xA1", "P: q = -1")
    if q**3 == 1 and q != 1:
        return DimVerdict.finite(27, "A2", "P: q in G_3")
    return DimVerdict.infinite("P: q not in {-1} u G_3")


def _verdict_GH(tag: str, P: SuzukiParams, idx: dict) -> DimVerdict:
    ae, b = gh_parameters(tag, P, idx)
    verdict = vabe_verdict(ae, b, CycScalar.one())
    return DimVerdict(verdict.outcome, verdict.value, verdict.type_tag, f"{tag}: V_abe with {verdict.reason}")


def _two_case_rule(q_exp: int, lam_exp: int, M: int, label: str) -> DimVerdict:
    """n = 1 rule of the I and K families on integer exponents."""
    if q_exp % M != 0 and (2 * q_exp + lam_exp) % M == 0:
        return DimVerdict.finite(_order(q_exp, M) ** 2, "A1xA1", f"{label}: lambda q^2 = 1 != q")
    if q_exp % M != 0 and (3 * q_exp + lam_exp) % M == 0:
        return DimVerdict.finite(_order(q_exp, M) ** 3, "A2", f"{label}: lambda q^3 = 1 != q")
    return DimVerdict.infinite(f"{label}: neither lambda q^2 = 1 nor lambda q^3 = 1 with q != 1")


def _lam_exp(P: SuzukiParams) -> int:
    return 0 if P.lam == 1 else P.minus_one_exp


def _verdict_I(P: SuzukiParams, idx: dict) -> DimVerdict:
    M, n = P.M, P.n
    q_exp = 4 * idx["k"] * n * (2 * idx["s"] + 1) + idx["p"] * P.minus_one_exp
    if n == 1:
        return _two_case_rule(q_exp, _lam_exp(P), M, "I, n = 1")
    if n == 2:
        if q_exp % M == P.minus_one_exp and P.lam == 1:
            tag = "D4rack" if idx["j"] == 2 else "A2xA2"
            return DimVerdict.finite(64, tag, f"I, n = 2: q = -1, lambda = 1, j = {idx['j']}")
        return DimVerdict.infinite("I, n = 2: not (q = -1 and lambda = 1)")
    return DimVerdict.infinite("I, n > 2: rack of type D")


def k_q_exponent(P: SuzukiParams, idx: dict) -> int:
    """Exponent of omega giving the scalar q of a K module."""
    s = idx["s"]
    return (idx["p"] * P.minus_one_exp + s * P.mu_bar_exp + 8 * idx["k"] * P.n * s) % P.M


def _verdict_K(P: SuzukiParams, idx: dict) -> DimVerdict:
    M, n = P.M, P.n
    q_exp = k_q_exponent(P, idx)
    if n == 1:
        return _two_case_rule(q_exp, _lam_exp(P), M, "K, n = 1")
    if n == 2:
        minus_one = q_exp == P.minus_one_exp
        if P.lam == 1:
            if minus_one:
                return DimVerdict.finite(64, "A2xA2", "K, n = 2, lambda = 1: q = -1")
            return DimVerdict.infinite("K, n = 2, lambda = 1: q != -1")
        cube = q_exp != 0 and (3 * q_exp) % M == 0
        if not (minus_one or cube):
            return DimVerdict.infinite("K, n = 2, lambda = -1: neither q = -1 nor q in G_3")
        return DimVerdict.unknown(
            "K, n = 2, lambda = -1: only the necessary condition (q = -1 or q in G_3) is known",
            flags=("necessary-condition-met",),
        )
    return DimVerdict.unknown(f"K, n = {n}: no dimension result")


def lemma_verdict(tag: str, params: SuzukiParams, indices: dict) -> DimVerdict:
    """The per-family arithmetic conditions, evaluated on exponents of omega."""
    idx = _validate(tag, params, indices)
    if tag == "A":
        return _verdict_A(params, idx)
    if tag == "Abar":
        return _verdict_Abar(params, idx)
    if tag == "B":
        return _verdict_B(params, idx)
    if tag == "C":
        return _verdict_C(params, idx)
    if tag in ("D", "E"):
        return _verdict_DE(tag, params, idx)
    if tag == "P":
        return _verdict_P(params, idx)
    if tag in ("G", "H"):
        return _verdict_GH(tag, params, idx)
    if tag == "I":
        return _verdict_I(params, idx)
    if tag == "K":
        return _verdict_K(params, idx)
    raise BadIndex(f"family {tag} is a duplicate and has no verdict of its own", family=tag)


# ---------------------------------------------------------------------------
# Pipeline and cross-check
# ---------------------------------------------------------------------------


def braiding_verdict(B: BraidedSpace) -> DimVerdict:
    """Read a verdict off a braiding: diagonal table, V_abe, racks of type D, then an eigenbasis."""
    q = detect_diagonal(B)
    if q is not None and q.basis == "standard":
        return diagonal_verdict(q, PIPELINE)
    abe = match_vabe(B)
    if abe is not None:
        return vabe_verdict(*abe, provenance=PIPELINE)
    extracted = extract_rack(B)
    witness = is_type_D(extracted[0]) if extracted is not None else None
    if witness is not None:
        return DimVerdict.infinite(
            f"rack of type D: {witness['r']} > ({witness['s']} > ({witness['r']} > {witness['s']})) "
            f"= {witness['value']} ({witness['method']})",
            provenance=PIPELINE,
        )
    if q is not None:
        return diagonal_verdict(q, PIPELINE)
    if extracted is not None:
        return DimVerdict.unclassified("rack without a type D witness", provenance=PIPELINE)
    return DimVerdict.unclassified("braiding is neither diagonal, V_abe nor of rack type", provenance=PIPELINE)


def pipeline_verdict(tag: str, params: SuzukiParams, indices: dict) -> tuple[DimVerdict, BraidedSpace]:
    module = build_family(tag, params, **indices)
    B = braiding_of(module)
    return braiding_verdict(B), B


def _confirm_with_engine(B: BraidedSpace, verdict: DimVerdict) -> dict:
    limit = bound("FORGE_SYMMETRIZER_DIM_BOUND")
    kmax = 1
    while B.dim ** (kmax + 1) <= limit and kmax < verdict.value:
        kmax += 1
    dims = degree_dims(B, kmax)
    total = sum(dims)
    terminated = dims[-1] == 0
    if terminated and total != verdict.value:
        raise Disagreement(
            f"engine total {total} differs from the verdict {verdict.value}",
            dims=dims,
            verdict=verdict.as_dict(),
            braiding=B.to_json(),
        )
    return {"dims": dims, "total": total if terminated else None, "terminated": terminated, "provenance": "exact"}


def cross_check(tag: str, params: SuzukiParams, indices: dict, confirm: bool = False) -> dict:
    """Compare the lemma verdict with the pipeline verdict for one module.

    Raises Disagreement, with the braiding attached, when both routes give a
    definite but different answer.
    """
    lemma = lemma_verdict(tag, params, indices)
    pipeline, B = pipeline_verdict(tag, params, indices)
    if lemma.definite and pipeline.definite:
        if not lemma.same_answer(pipeline):
            raise Disagreement(
                f"{tag} {indices}: lemma says {lemma.label}, pipeline says {pipeline.label}",
                lemma=lemma.as_dict(),
                pipeline=pipeline.as_dict(),
                braiding=B.to_json(),
            )
        agreement = "agree"
    elif lemma.definite:
        agreement = "lemma-only"
    elif pipeline.definite:
        agreement = "pipeline-only"
    else:
        agreement = "neither"
    report = {
        "family": tag,
        "params": params.as_dict(),
        "indices": dict(indices),
        "lemma": lemma.as_dict(),
        "pipeline": pipeline.as_dict(),
        "agreement": agreement,
        "engine": None,
    }
    if (
        confirm
        and lemma.outcome == FINITE
        and lemma.value is not None
        and lemma.value <= 27
        and detect_diagonal(B) is not None
    ):
        report["engine"] = _confirm_with_engine(B, lemma)
    logger.debug("cross-check %s %s: %s", tag, indices, agreement)
    return report


def corollary_check(params: SuzukiParams) -> list[dict]:
    """Lemma verdicts next to the closed corollary predictions for A and Abar."""
    N = params.N
    rows = []
    if N == 1 or isprime(N):
        for idx in family_indices("A", params):
            k, s = idx["k"], idx["s"]
            if N == 1 or k == 0 or s == N:
                expected = DimVerdict.infinite("corollary")
            else:
                expected = DimVerdict.finite(N, "A1", "corollary")
            rows.append(_corollary_row("A", idx, lemma_verdict("A", params, idx), expected))
    if N == 1:
        for idx in family_indices("Abar", params):
            if params.lam == -1 and params.n % 2 == 1:
                expected = DimVerdict.finite(2, "A1", "corollary")
            else:
                expected = DimVerdict.infinite("corollary")
            rows.append(_corollary_row("Abar", idx, lemma_verdict("Abar", params, idx), expected))
    return rows


def _corollary_row(tag: str, idx: dict, lemma: DimVerdict, expected: DimVerdict) -> dict:
    return {
        "family": tag,
        "indices": idx,
        "lemma": lemma.label,
        "prediction": expected.label,
        "agree": lemma.same_answer(expected),
    }


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------


def sweep(
    tag: str,
    params: SuzukiParams,
    ranges: dict[str, Iterable],
    predicate: Callable[[DimVerdict], bool] | None = None,
    sink: Callable[[dict], None] | None = None,
) -> Iterator[dict]:
    """lemma_verdict over the product of the index ranges, in sorted order.

    Tuples outside the classification list are skipped. Records that pass
    the predicate are yielded and, when a sink is given, handed to it as well.
    """
    missing = set(INDEX_NAMES.get(tag, ())) - set(ranges)
    if missing:
        raise MalformedInput(f"sweep of {tag} needs ranges for {', '.join(sorted(missing))}")
    names = sorted(ranges)
    grids = [sorted(ranges[name]) for name in names]
    for values in cartesian(*grids):
        idx = dict(zip(names, values))
        if not is_strict(tag, params, idx):
            continue
        verdict = lemma_verdict(tag, params, idx)
        if predicate is not None and not predicate(verdict):
            continue
        record = {
            **idx,
            "verdict": verdict.label,
            "type_tag": verdict.type_tag or "",
            "reason": verdict.reason,
        }
        if sink is not None:
            sink(record)
        yield record


def _ufo8_preset(tag: str) -> dict:
    params = SuzukiParams(48, 8)
    records = sweep(
        tag,
        params,
        {"j": [2], "p": [0], "k": range(12), "s": range(1, 49), "t": range(8)},
        predicate=lambda v: v.type_tag == "ufo8",
    )
    rows = sorted(
        ({"k": r["k"], "s": r["s"], "t": r["t"], "verdict": r["verdict"], "type_tag": r["type_tag"], "reason": r["reason"]} for r in records),
        key=lambda r: (r["k"], r["s"], r["t"]),
    )
    return {
        "preset": f"ufo8-{tag}",
        "family": tag,
        "params": params.as_dict(),
        "columns": ["k", "s", "t", "verdict", "type_tag", "reason"],
        "rows": rows,
    }


def ufo8_necessary(max_N: int = 12, max_n: int = 8) -> dict:
    """Check 5 !| N, 17 !| n  =>  8 | N, 4 | n for every ufo(8) hit on a grid."""
    hits, violations = 0, []
    for N in range(1, max_N + 1):
        for n in range(2, max_n + 1):
            params = SuzukiParams(N, n)
            for tag in ("D", "E"):
                for idx in family_indices(tag, params):
                    if not any(name == "ufo8" for name, _ in de_cases(tag, params, idx)):
                        continue
                    hits += 1
                    if N % 5 and n % 17 and (N % 8 or n % 4):
                        violations.append({"family": tag, "N": N, "n": n, **idx})
    logger.info("ufo8 necessary-condition grid N <= %s, n <= %s: %s hits", max_N, max_n, hits)
    return {"preset": "ufo8-necessary", "max_N": max_N, "max_n": max_n, "hits": hits, "violations": violations}


def gh_search(target: str, N: int = 2, n: int = 2) -> dict:
    """G/H index tuples with ae = 1 (target "ae-one") or b = -1 ("b-minus-one")."""
    if target not in ("ae-one", "b-minus-one"):
        raise MalformedInput(f"unknown G/H search target {target!r}")
    rows = []
    for mu, lam in cartesian((1, -1), repeat=2):
        params = SuzukiParams(N, n, mu, lam)
        for tag in ("G", "H"):
            for idx in family_indices(tag, params):
                ae, b = gh_parameters(tag, params, idx)
                if (target == "ae-one" and ae != 1) or (target == "b-minus-one" and b != -1):
                    continue
                verdict = vabe_verdict(ae, b, CycScalar.one())
                rows.append({"family": tag, "mu": mu, "lambda": lam, **idx, "verdict": verdict.label, "type_tag": verdict.type_tag or ""})
    return {"preset": f"gh-{target}", "N": N, "n": n, "rows": rows}


PRESETS = {
    "ufo8-D": lambda **kw: _ufo8_preset("D"),
    "ufo8-E": lambda **kw: _ufo8_preset("E"),
    "ufo8-necessary": lambda **kw: ufo8_necessary(kw.get("max_N", 12), kw.get("max_n", 8)),
    "gh-ae-one": lambda **kw: gh_search("ae-one", kw.get("N", 2), kw.get("n", 2)),
    "gh-b-minus-one": lambda **kw: gh_search("b-minus-one", kw.get("N", 2), kw.get("n", 2)),
}
