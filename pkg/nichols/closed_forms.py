"""
Printed braiding formulas for the simple Yetter-Drinfeld families.

These are kept apart from the Radford construction in yd.py so the two can
be compared: braiding_of(build_family(...)) against closed_form(...).
Exponents of omega are taken modulo M = 8nN.
"""

from __future__ import annotations

import logging
from math import lcm

from algebra.cyclotomic import CycScalar, monomial_exponent
from algebra.exceptions import BadIndex
from algebra.suzuki import SuzukiParams

from .braided import BraidedSpace, QMatrix, diagonal_braiding, make_vabe

logger = logging.getLogger(__name__)

DIAGONAL_FAMILIES = ("A", "Abar", "B", "C", "D", "E")
VABE_FAMILIES = ("G", "H", "P")


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _constant_qmatrix(q: CycScalar, size: int) -> QMatrix:
    return QMatrix([[q] * size for _ in range(size)])


def _de_exponents(tag: str, params: SuzukiParams, idx: dict) -> tuple[int, int]:
    n, N = params.n, params.N
    j, k, s, t = idx["j"], idx["k"], idx["s"], idx["t"]
    if tag == "D":
        base, twist = 8 * n * k * (s + t + 1), 2 * j * N * (t + 1)
        return base - twist, base + twist
    base, twist = 8 * n * k * (s + t), 2 * j * N * t
    return base + twist, base - twist


def de_exponents(tag: str, params: SuzukiParams, idx: dict) -> tuple[int, int]:
    """(alpha, beta) with q_11 = q_22 = omega^alpha and q_12 = q_21 = omega^beta."""
    if tag not in ("D", "E"):
        raise BadIndex(f"alpha/beta exponents are defined for D and E, not {tag}", family=tag)
    alpha, beta = _de_exponents(tag, params, idx)
    return alpha % params.M, beta % params.M


def diagonal_closed_form(tag: str, params: SuzukiParams, idx: dict) -> QMatrix:
    P = params
    n, N, w = P.n, P.N, P.w
    k, s = idx["k"], idx["s"]
    if tag == "A":
        return _constant_qmatrix(w(8 * n * k * s), 1)
    if tag == "Abar":
        q = w(8 * k * n * (s + n)) * _sign((idx["i"] + idx["j"]) * n)
        return _constant_qmatrix(q, 1)
    if tag == "B":
        return _constant_qmatrix(w(8 * n * k * s), 2)
    if tag == "C":
        i, j, t = idx["i"], idx["j"], idx["t"]
        q = w(8 * n * k * (s + t + 1)) * _sign((i + j) * (t + 1))
        return _constant_qmatrix(q, 2)
    if tag in ("D", "E"):
        alpha, beta = _de_exponents(tag, P, idx)
        return QMatrix([[w(alpha), w(beta)], [w(beta), w(alpha)]])
    raise BadIndex(f"family {tag} has no diagonal closed form", family=tag)


def p_parameter(params: SuzukiParams, idx: dict) -> CycScalar:
    """q with the P family braiding of shape V_qqq."""
    P = params
    i, j, k, p, s, t = (idx[x] for x in ("i", "j", "k", "p", "s", "t"))
    q = P.mu_tilde ** (2 * s + 2 * t + 1) * P.w(4 * P.n * k * (2 * s + 2 * t + 1))
    q = q * _sign(p + (i + j) * t + j)
    if (i + j) % 2:
        q = q * P.w(P.sqrt_minus_one_exp)
    return q


def gh_parameters(tag: str, params: SuzukiParams, idx: dict) -> tuple[CycScalar, CycScalar]:
    """(ae, b) of the V_abe braiding of a G or H module."""
    if tag not in ("G", "H"):
        raise BadIndex(f"(ae, b) closed forms exist for G and H, not {tag}", family=tag)
    P = params
    n, N, w = P.n, P.N, P.w
    j, k, p, s, t = (idx[x] for x in ("j", "k", "p", "s", "t"))
    twist = 1 if tag == "H" else -1
    ae = P.mu_bar ** (2 * s + 2 * t + 1) * w(4 * k * n * (4 * s + 4 * t + 2) + twist * j * N * (4 * t + 2))
    b = P.mu_tilde ** (2 * s + 2 * t + 1) * w(4 * n * k * (2 * s + 2 * t + 1) - twist * j * N * (2 * t + 1))
    return ae, b * _sign(p)


def ae_over_b_squared(tag: str, params: SuzukiParams, idx: dict) -> CycScalar:
    """ae/b^2 of a G, H or P module; P has the shape V_qqq, so its ratio is 1."""
    if tag == "P":
        return CycScalar.one()
    twist = 1 if tag == "H" else -1
    return params.w(twist * 4 * idx["j"] * params.N * (2 * idx["t"] + 1))


# ---------------------------------------------------------------------------
# I family
# ---------------------------------------------------------------------------


def i_parameter(params: SuzukiParams, idx: dict) -> CycScalar:
    return params.w(4 * idx["k"] * params.n * (2 * idx["s"] + 1)) * _sign(idx["p"])


def i_braiding(params: SuzukiParams, idx: dict) -> BraidedSpace:
    """Printed I braidings for n = 1 (diagonal) and n = 2 (dihedral rack)."""
    P = params
    n, N, w = P.n, P.N, P.w
    j, k, s = idx["j"], idx["k"], idx["s"]
    q = i_parameter(P, idx)
    lam = CycScalar.rational(P.lam)
    if n == 1:
        table = {
            (0, 0): (0, 0, q),
            (0, 1): (1, 0, lam * q * w(2 * n * j * N * (2 * s + 1))),
            (1, 0): (0, 1, q * w(2 * n * j * N)),
            (1, 1): (1, 1, q),
        }
        return _from_table(P, table, ["w1", "m1"])
    if n != 2:
        raise BadIndex("the I braiding is printed for n = 1 and n = 2 only", n=n)
    alpha, beta = w(8 * k * n * s), w(2 * n * j * N)
    w1, w2, m1, m2 = range(4)
    q2 = q * q
    table = {
        (w1, w1): (w1, w1, q),
        (w1, w2): (w2, w1, q * beta),
        (w2, w1): (w1, w2, q * beta),
        (w2, w2): (w2, w2, q),
        (w1, m1): (m2, w1, alpha),
        (w1, m2): (m1, w1, q2 / alpha),
        (w2, m1): (m2, w2, lam * alpha * beta),
        (w2, m2): (m1, w2, lam * q2 / alpha * beta),
        (m1, m1): (m1, m1, q),
        (m1, m2): (m2, m1, q * lam * beta),
        (m2, m1): (m1, m2, q * lam * beta),
        (m2, m2): (m2, m2, q),
        (m1, w1): (w2, m1, alpha),
        (m1, w2): (w1, m1, q2 / alpha),
        (m2, w1): (w2, m2, alpha * beta),
        (m2, w2): (w1, m2, q2 / alpha * beta),
    }
    return _from_table(P, table, ["w1", "w2", "m1", "m2"])


# ---------------------------------------------------------------------------
# K family
# ---------------------------------------------------------------------------


def k_parameter(params: SuzukiParams, idx: dict) -> CycScalar:
    s = idx["s"]
    return params.mu_bar**s * params.w(8 * idx["k"] * params.n * s) * _sign(idx["p"])


def k_entry(params: SuzukiParams, idx: dict, a: int, b: int) -> tuple[int, int, CycScalar]:
    """c(w_a (x) w_b) = coef w_x (x) w_y for the K family, 1-based labels.

    Writes b + 2a - 2 = 2nr + d and 2n + 1 - b + 2a - 2 = 2ne + f with
    0 <= d, f < 2n and picks the branch by the parity of a + b.
    """
    P = params
    n, N, w = P.n, P.N, P.w
    j, k, p, s = idx["j"], idx["k"], idx["p"], idx["s"]
    lam, mb = P.lam, P.mu_bar
    u = mb * w(8 * n * k)
    sign = _sign(p)
    if a == 1:
        return b, 1, u**s * sign
    second = 2 * n - a + 2
    if (a + b) % 2 == 0:
        r, d = divmod(b + 2 * a - 2, 2 * n)
        if d == 0:
            coef = mb ** (s + n * (r - 2)) * w(2 * n * (r - 2) * (4 * n * k + j * N) + 8 * n * k * s)
            return 2 * n, second, coef * sign * lam**r
        coef = mb ** (s + n * (r - 1)) * w(2 * n * (r - 1) * (4 * n * k + j * N) + 8 * n * k * s)
        return d, second, coef * sign * lam ** (r + 1)
    e, f = divmod(2 * n + 1 - b + 2 * a - 2, 2 * n)
    if f == 0:
        coef = u ** (s - n * e - 2 + 2 * a) * w(-2 * j * N * n * e)
        return 1, second, coef * sign * lam**e
    coef = u ** (s - n * (e + 1) - 2 + 2 * a) * w(-2 * j * N * n * (e + 1))
    return 2 * n + 1 - f, second, coef * sign * lam ** (e + 1)


def k_braiding(params: SuzukiParams, idx: dict) -> BraidedSpace:
    size = 2 * params.n
    table = {}
    for a in range(1, size + 1):
        for b in range(1, size + 1):
            x, y, coef = k_entry(params, idx, a, b)
            table[(a - 1, b - 1)] = (x - 1, y - 1, coef)
    return _from_table(params, table, [f"w{r}" for r in range(1, size + 1)])


# printed tables: (a, b) -> (x, y, e1, e2, el) for
# c(w_a (x) w_b) = q first^e1 second^e2 lambda^el w_x (x) w_y
_K_TABLE_N1 = {
    (1, 1): (1, 1, 0, 0, 0),
    (1, 2): (2, 1, 0, 0, 0),
    (2, 1): (1, 2, -1, 0, 0),
    (2, 2): (2, 2, 0, 0, 0),
}
_K_TABLE_N2 = {
    (1, 1): (1, 1, 0, 0, 0),
    (1, 2): (2, 1, 0, 0, 0),
    (1, 3): (3, 1, 0, 0, 0),
    (1, 4): (4, 1, 0, 0, 0),
    (2, 1): (3, 4, -1, 2, 0),
    (2, 2): (4, 4, -1, -1, 1),
    (2, 3): (1, 4, 0, -1, 1),
    (2, 4): (2, 4, 0, 0, 0),
    (3, 1): (1, 3, 0, 0, 0),
    (3, 2): (2, 3, 0, 2, 0),
    (3, 3): (3, 3, 0, 0, 0),
    (3, 4): (4, 3, 0, 2, 0),
    (4, 1): (3, 2, 0, 1, 1),
    (4, 2): (4, 2, 0, 0, 0),
    (4, 3): (1, 2, 1, 2, 0),
    (4, 4): (2, 2, 1, 1, 1),
}
_K_TABLE_N3 = {
    (1, 1): (1, 1, 0, 0, 0),
    (1, 2): (2, 1, 0, 0, 0),
    (1, 3): (3, 1, 0, 0, 0),
    (1, 4): (4, 1, 0, 0, 0),
    (1, 5): (5, 1, 0, 0, 0),
    (1, 6): (6, 1, 0, 0, 0),
    (2, 1): (5, 6, -4, -2, 0),
    (2, 2): (4, 6, -3, -1, 0),
    (2, 3): (1, 6, -1, -1, 0),
    (2, 4): (6, 6, -3, -1, 0),
    (2, 5): (3, 6, -1, -1, 0),
    (2, 6): (2, 6, 0, 0, 0),
    (3, 1): (5, 5, -3, -1, 0),
    (3, 2): (4, 5, -2, -2, 0),
    (3, 3): (1, 5, 0, 0, 0),
    (3, 4): (6, 5, -2, -2, 0),
    (3, 5): (3, 5, 0, 0, 0),
    (3, 6): (2, 5, 1, -1, 0),
    (4, 1): (1, 4, 0, -2, 0),
    (4, 2): (2, 4, 0, 0, 0),
    (4, 3): (3, 4, 0, -2, 0),
    (4, 4): (4, 4, 0, 0, 0),
    (4, 5): (5, 4, 0, -2, 0),
    (4, 6): (6, 4, 0, 0, 0),
    (5, 1): (3, 3, 0, 0, 0),
    (5, 2): (6, 3, -1, -3, 0),
    (5, 3): (5, 3, 0, 0, 0),
    (5, 4): (2, 3, 2, -2, 0),
    (5, 5): (1, 3, 3, 1, 0),
    (5, 6): (4, 3, 2, -2, 0),
    (6, 1): (3, 2, 1, -3, 0),
    (6, 2): (6, 2, 0, 0, 0),
    (6, 3): (5, 2, 1, -3, 0),
    (6, 4): (2, 2, 3, 1, 0),
    (6, 5): (1, 2, 4, -2, 0),
    (6, 6): (4, 2, 3, 1, 0),
}


def k_table(params: SuzukiParams, idx: dict) -> BraidedSpace:
    """The printed K braiding tables for n = 1, 2, 3.

    n = 1 uses omega^{4jN} as its only constant; n = 2 uses
    a = mu_bar^2 omega^{16kn} and b = omega^{4jN}; n = 3 uses
    alpha = lambda mu_bar omega^{8kn} and beta = omega^{6jN}.
    """
    P = params
    n, N, w = P.n, P.N, P.w
    j, k = idx["j"], idx["k"]
    q = k_parameter(P, idx)
    lam = CycScalar.rational(P.lam)
    if n == 1:
        first, second, rows = w(4 * j * N), CycScalar.one(), _K_TABLE_N1
    elif n == 2:
        first, second, rows = P.mu_bar**2 * w(16 * k * n), w(4 * j * N), _K_TABLE_N2
    elif n == 3:
        first, second, rows = lam * P.mu_bar * w(8 * k * n), w(6 * j * N), _K_TABLE_N3
    else:
        raise BadIndex("the K braiding is tabulated for n <= 3; use k_braiding", n=n)
    table = {}
    for (a, b), (x, y, e1, e2, el) in rows.items():
        table[(a - 1, b - 1)] = (x - 1, y - 1, q * first**e1 * second**e2 * lam**el)
    return _from_table(P, table, [f"w{r}" for r in range(1, 2 * n + 1)])


# ---------------------------------------------------------------------------
# Dispatch and comparison
# ---------------------------------------------------------------------------


def _from_table(params: SuzukiParams, table: dict, labels: list) -> BraidedSpace:
    constants = {key: [(x, y, coef)] for key, (x, y, coef) in table.items()}
    return BraidedSpace(len(labels), params.M, constants, labels)


def closed_form(tag: str, params: SuzukiParams, idx: dict) -> BraidedSpace | None:
    """Printed braiding of a family, or None where only invariants are printed."""
    if tag in DIAGONAL_FAMILIES:
        q = diagonal_closed_form(tag, params, idx)
        labels = ["w"] if q.dim == 1 else ["w1", "w2"]
        return diagonal_braiding(q, labels)
    if tag == "P":
        q = p_parameter(params, idx)
        return make_vabe(q, q, q, labels=["w1", "w2"])
    if tag == "I" and params.n <= 2:
        return i_braiding(params, idx)
    if tag == "K":
        return k_braiding(params, idx)
    return None


def _exponent(value: CycScalar):
    exp = monomial_exponent(value)
    return exp if exp is not None else value.to_json()


def compare_braidings(actual: BraidedSpace, expected: BraidedSpace) -> list[dict]:
    """Entries where the two braidings differ, as monomial exponents."""
    if actual.dim != expected.dim:
        return [{"dim": [actual.dim, expected.dim]}]
    order = lcm(actual.order, expected.order)
    mismatches = []
    for i in range(actual.dim):
        for j in range(actual.dim):
            got = {(k, l): c.promote(order) for k, l, c in actual.image(i, j)}
            want = {(k, l): c.promote(order) for k, l, c in expected.image(i, j)}
            if got != want:
                mismatches.append(
                    {
                        "source": [actual.labels[i], actual.labels[j]],
                        "actual": [[actual.labels[k], actual.labels[l], _exponent(c)] for (k, l), c in sorted(got.items())],
                        "expected": [
                            [expected.labels[k], expected.labels[l], _exponent(c)] for (k, l), c in sorted(want.items())
                        ],
                    }
                )
    if mismatches:
        logger.debug("%s braiding entries differ from the closed form", len(mismatches))
    return mismatches
