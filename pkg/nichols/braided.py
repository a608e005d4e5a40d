"""
Braided vector spaces and their structural analysis.

A braiding is stored as sparse structure constants: constants[(i, j)] is
the list of (k, l, scalar) with c(e_i (x) e_j) = sum scalar e_k (x) e_l.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, product as cartesian
from math import lcm

from algebra.conf import bound
from algebra.cyclotomic import CycScalar, common_order, multiplicative_order, root_of_unity
from algebra.exceptions import AxiomFailure, MalformedInput, ZeroParameter
from algebra.linalg import CycMatrix, rank_exact

logger = logging.getLogger(__name__)

TYPE_D_DEFINITION = (
    "X = R u S with R, S nonempty, X > R = R and X > S = S, "
    "and some r in R, s in S with r > (s > (r > s)) != s"
)


def _acc(target: dict, key, coef: CycScalar) -> None:
    value = target[key] + coef if key in target else coef
    if value.is_zero:
        target.pop(key, None)
    else:
        target[key] = value


@dataclass
class BraidedSpace:
    dim: int
    order: int
    constants: dict = field(default_factory=dict)
    labels: list = field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = [f"e{i + 1}" for i in range(self.dim)]
        if len(self.labels) != self.dim:
            raise MalformedInput(f"{len(self.labels)} labels for a {self.dim}-dimensional space")

    def image(self, i: int, j: int) -> list:
        return self.constants.get((i, j), [])

    def matrix(self) -> CycMatrix:
        """c as a d^2 x d^2 matrix; e_i (x) e_j has index i * d + j."""
        d = self.dim
        entries = {}
        for (i, j), terms in self.constants.items():
            for k, l, c in terms:
                entries[(k * d + l, i * d + j)] = c
        return CycMatrix(d * d, d * d, self.order, entries)

    def scalars(self) -> list[CycScalar]:
        return [c for terms in self.constants.values() for _, _, c in terms]

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "order": self.order,
            "labels": list(self.labels),
            "constants": [
                [i, j, k, l, c.to_json()]
                for (i, j), terms in sorted(self.constants.items())
                for k, l, c in terms
            ],
        }

    @classmethod
    def from_json(cls, payload: dict, exp_only: bool = False) -> "BraidedSpace":
        try:
            dim = int(payload["dim"])
            order = int(payload.get("order", 1))
            constants: dict = {}
            for i, j, k, l, c in payload["constants"]:
                i, j, k, l = int(i), int(j), int(k), int(l)
                if not all(0 <= x < dim for x in (i, j, k, l)):
                    raise MalformedInput(f"basis index out of range in constant {[i, j, k, l]}")
                scalar = CycScalar.from_json(c, exp_only=exp_only)
                order = lcm(order, scalar.order)
                constants.setdefault((i, j), []).append((k, l, scalar))
            labels = list(payload.get("labels") or [])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"malformed braiding payload: {exc}") from exc
        return cls(dim, order, constants, labels)


def apply_braiding(B: BraidedSpace, position: int, vector: dict) -> dict:
    """c acting on tensor slots (position, position + 1) of {tuple: scalar}."""
    out: dict = {}
    for word, coef in vector.items():
        for k, l, c in B.image(word[position], word[position + 1]):
            _acc(out, word[:position] + (k, l) + word[position + 2 :], coef * c)
    return out


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


@dataclass
class BraidReport:
    passed: bool
    triples: int
    mismatch: dict | None = None

    def as_dict(self) -> dict:
        return {"passed": self.passed, "triples": self.triples, "mismatch": self.mismatch}


def check_braid_equation(B: BraidedSpace) -> BraidReport:
    """(c (x) id)(id (x) c)(c (x) id) = (id (x) c)(c (x) id)(id (x) c) on every basis triple."""
    d = B.dim
    count = 0
    for x, y, z in cartesian(range(d), repeat=3):
        count += 1
        start = {(x, y, z): CycScalar.one()}
        left = apply_braiding(B, 0, apply_braiding(B, 1, apply_braiding(B, 0, start)))
        right = apply_braiding(B, 1, apply_braiding(B, 0, apply_braiding(B, 1, start)))
        if left != right:
            return BraidReport(False, count, {"triple": [B.labels[x], B.labels[y], B.labels[z]]})
    return BraidReport(True, count)


def is_invertible(B: BraidedSpace) -> bool:
    return rank_exact(B.matrix()) == B.dim**2


# ---------------------------------------------------------------------------
# Diagonal type
# ---------------------------------------------------------------------------


@dataclass
class QMatrix:
    entries: list
    basis: str = "standard"
    vectors: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, key) -> CycScalar:
        i, j = key
        return self.entries[i][j]

    def to_json(self) -> dict:
        payload = {"basis": self.basis, "q": [[c.to_json() for c in row] for row in self.entries]}
        if self.vectors:
            payload["vectors"] = [{str(x): c.to_json() for x, c in sorted(v.items())} for v in self.vectors]
        return payload


@dataclass
class DynkinDiagram:
    vertices: list
    edges: dict

    def to_json(self) -> dict:
        return {
            "vertices": [q.to_json() for q in self.vertices],
            "edges": [[i, j, q.to_json()] for (i, j), q in sorted(self.edges.items())],
        }


def diagonal_braiding(q: QMatrix, labels: list | None = None) -> BraidedSpace:
    """c(e_i (x) e_j) = q_ij e_j (x) e_i."""
    d = q.dim
    constants = {(i, j): [(j, i, q[i, j])] for i in range(d) for j in range(d)}
    order = common_order(c for row in q.entries for c in row)
    return BraidedSpace(d, order, constants, labels or [])


def _raw_diagonal(B: BraidedSpace) -> QMatrix | None:
    d = B.dim
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            terms = B.image(i, j)
            if len(terms) != 1 or terms[0][:2] != (j, i):
                return None
            row.append(terms[0][2])
        rows.append(row)
    return QMatrix(rows)


def _leg_operators(B: BraidedSpace) -> list[dict]:
    """The maps read off c with one leg of the image fixed.

    For each (j, k): e_i -> the part of c(e_i (x) e_j) with first leg e_k.
    For each (i, l): e_j -> the part of c(e_i (x) e_j) with second leg e_l.
    Operators are sparse: {source: {target: coef}}.
    """
    first: dict = {}
    second: dict = {}
    for (i, j), terms in B.constants.items():
        for k, l, coef in terms:
            _acc(first.setdefault((j, k), {}).setdefault(i, {}), l, coef)
            _acc(second.setdefault((i, l), {}).setdefault(j, {}), k, coef)
    return list(first.values()) + list(second.values())


def _apply(op: dict, vector: dict) -> dict:
    out: dict = {}
    for x, cx in vector.items():
        for y, c in op.get(x, {}).items():
            _acc(out, y, cx * c)
    return out


def _is_eigenvector(op: dict, vector: dict) -> bool:
    image = _apply(op, vector)
    if not image:
        return True
    pivot = min(vector)
    if pivot not in image:
        return False
    ratio = image[pivot] / vector[pivot]
    for x, c in vector.items():
        _acc(image, x, -(ratio * c))
    return not image


def _square_roots(r: CycScalar) -> list[CycScalar]:
    """Both square roots of a root of unity; [] for anything else."""
    m = multiplicative_order(r)
    if m is None:
        return []
    exp = next(e for e in range(m) if root_of_unity(m, e) == r)
    root = root_of_unity(2 * m, exp)
    return [root, -root]


def _eigen_candidates(B: BraidedSpace, operators: list[dict]) -> list[dict]:
    """Basis vectors, plus e_x +- sqrt(alpha/beta) e_y for every 2-cycle e_x -> alpha e_y -> alpha beta e_x."""
    one = CycScalar.one()
    found = [{x: one} for x in range(B.dim)]
    for op in operators:
        for x, image in op.items():
            if len(image) != 1:
                continue
            ((y, alpha),) = image.items()
            back = op.get(y, {})
            if y <= x or len(back) != 1 or x not in back:
                continue
            for root in _square_roots(alpha / back[x]):
                vector = {x: one, y: root}
                if vector not in found:
                    found.append(vector)
    return found


def _q_entry(B: BraidedSpace, u: dict, v: dict) -> CycScalar | None:
    """q with c(u (x) v) = q v (x) u, or None when the image is not of that shape."""
    image: dict = {}
    for a, ca in u.items():
        for b, cb in v.items():
            for k, l, coef in B.image(a, b):
                _acc(image, (k, l), ca * cb * coef)
    k, l = min(v), min(u)
    if (k, l) not in image:
        return None
    q = image[(k, l)] / (v[k] * u[l])
    for x, cx in v.items():
        for y, cy in u.items():
            _acc(image, (x, y), -(q * cx * cy))
    return None if image else q


def diagonal_eigenbasis(B: BraidedSpace) -> QMatrix | None:
    """A basis u_1..u_d with c(u_i (x) u_j) = q_ij u_j (x) u_i, if one is found.

    A vector can belong to such a basis only if it is a common eigenvector
    of every leg operator; any independent set of d common eigenvectors
    then diagonalizes c. Candidates are the basis vectors and the
    eigenvectors of 2-cycles in monomial operators, so braidings that need
    wider combinations are missed.
    """
    operators = _leg_operators(B)
    common = [v for v in _eigen_candidates(B, operators) if all(_is_eigenvector(op, v) for op in operators)]
    chosen: list[dict] = []
    for vector in common:
        trial = chosen + [vector]
        rows = CycMatrix(
            len(trial), B.dim, entries={(r, x): c for r, u in enumerate(trial) for x, c in u.items()}
        )
        if rank_exact(rows) == len(trial):
            chosen = trial
        if len(chosen) == B.dim:
            break
    if len(chosen) < B.dim:
        return None
    entries = [[_q_entry(B, u, v) for v in chosen] for u in chosen]
    if any(q is None for row in entries for q in row):
        logger.warning("common eigenvectors failed to diagonalize a %s-dimensional braiding", B.dim)
        return None
    return QMatrix(entries, basis="eigenbasis", vectors=chosen)


def detect_diagonal(B: BraidedSpace) -> QMatrix | None:
    """The q-matrix when c(e_i (x) e_j) = q_ij e_j (x) e_i.

    A V_abe space with ae = b^2 is diagonal in the basis
    v1 +- sqrt(b/e) v2, where the q-matrix is [[b, -b], [-b, b]].
    Other spaces go through diagonal_eigenbasis.
    """
    raw = _raw_diagonal(B)
    if raw is not None:
        return raw
    abe = match_vabe(B)
    if abe is not None:
        a, b, e = abe
        if a * e == b * b:
            return QMatrix([[b, -b], [-b, b]], basis="vabe-eigenbasis")
        return None
    return diagonal_eigenbasis(B)


def dynkin(q: QMatrix) -> DynkinDiagram:
    d = q.dim
    edges = {}
    for i, j in combinations(range(d), 2):
        q_tilde = q[i, j] * q[j, i]
        if q_tilde != 1:
            edges[(i, j)] = q_tilde
    return DynkinDiagram([q[i, i] for i in range(d)], edges)


def connected_components(diagram: DynkinDiagram) -> list[list[int]]:
    d = len(diagram.vertices)
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in diagram.edges:
        parent[find(i)] = find(j)
    groups: dict = {}
    for x in range(d):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


# ---------------------------------------------------------------------------
# V_abe
# ---------------------------------------------------------------------------


def make_vabe(a: CycScalar, b: CycScalar, e: CycScalar, labels: list | None = None) -> BraidedSpace:
    """c(v1v1) = a v2v2, c(v1v2) = b v1v2, c(v2v1) = b v2v1, c(v2v2) = e v1v1."""
    a, b, e = (x if isinstance(x, CycScalar) else CycScalar.rational(x) for x in (a, b, e))
    for name, value in zip("abe", (a, b, e)):
        if value.is_zero:
            raise ZeroParameter(f"V_abe parameter {name} must be nonzero", parameter=name)
    order = common_order((a, b, e))
    constants = {
        (0, 0): [(1, 1, a)],
        (0, 1): [(0, 1, b)],
        (1, 0): [(1, 0, b)],
        (1, 1): [(0, 0, e)],
    }
    space = BraidedSpace(2, order, constants, labels or ["v1", "v2"])
    report = check_braid_equation(space)
    if not report.passed:
        raise AxiomFailure("V_abe braiding fails the braid equation", mismatch=report.mismatch)
    return space


def match_vabe(B: BraidedSpace) -> tuple[CycScalar, CycScalar, CycScalar] | None:
    """(a, b, e) when B has the V_abe shape in its given basis."""
    if B.dim != 2:
        return None

    def single(i, j, k, l):
        terms = B.image(i, j)
        if len(terms) == 1 and terms[0][:2] == (k, l):
            return terms[0][2]
        return None

    a = single(0, 0, 1, 1)
    b1 = single(0, 1, 0, 1)
    b2 = single(1, 0, 1, 0)
    e = single(1, 1, 0, 0)
    if None in (a, b1, b2, e) or b1 != b2:
        return None
    return a, b1, e


# ---------------------------------------------------------------------------
# Racks
# ---------------------------------------------------------------------------


@dataclass
class Rack:
    size: int
    table: dict
    labels: list = field(default_factory=list)

    def op(self, x: int, y: int) -> int:
        return self.table[(x, y)]

    def translations_bijective(self) -> bool:
        return all(len({self.table[(x, y)] for y in range(self.size)}) == self.size for x in range(self.size))

    def self_distributive(self) -> bool:
        op = self.op
        return all(
            op(x, op(y, z)) == op(op(x, y), op(x, z)) for x, y, z in cartesian(range(self.size), repeat=3)
        )

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "labels": list(self.labels),
            "table": [[self.table[(x, y)] for y in range(self.size)] for x in range(self.size)],
        }


def extract_rack(B: BraidedSpace) -> tuple[Rack, dict] | None:
    """Rack and cocycle when c(e_x (x) e_y) = g_xy e_{x > y} (x) e_x for all x, y."""
    d = B.dim
    table = {}
    cocycle = {}
    for x, y in cartesian(range(d), repeat=2):
        terms = B.image(x, y)
        if len(terms) != 1 or terms[0][1] != x:
            return None
        table[(x, y)] = terms[0][0]
        cocycle[(x, y)] = terms[0][2]
    rack = Rack(d, table, list(B.labels))
    if not rack.translations_bijective() or not rack.self_distributive():
        return None
    return rack, cocycle


def _is_decomposition(rack: Rack, part: set) -> bool:
    """X > part = part and X > complement = complement."""
    rest = set(range(rack.size)) - part
    for x in range(rack.size):
        if any(rack.op(x, r) not in part for r in part):
            return False
        if any(rack.op(x, s) not in rest for s in rest):
            return False
    return True


def _witness(rack: Rack, part: set) -> tuple[int, int, int] | None:
    rest = sorted(set(range(rack.size)) - part)
    op = rack.op
    for r in sorted(part):
        for s in rest:
            value = op(r, op(s, op(r, s)))
            if value != s:
                return r, s, value
    return None


def is_type_D(rack: Rack) -> dict | None:
    """A type D witness (r, s, r > (s > (r > s))) or None.

    The split into w* and m* labels is tried first; racks up to the
    configured size are then searched exhaustively, larger ones are only
    searched along the label split and reported as heuristic.
    """
    labels = rack.labels or [str(x) for x in range(rack.size)]
    cap = bound("FORGE_TYPE_D_EXHAUSTIVE_CAP")
    exhaustive = rack.size <= cap

    def payload(hit, method, part):
        r, s, value = hit
        return {
            "r": labels[r],
            "s": labels[s],
            "value": labels[value],
            "part": sorted(labels[x] for x in part),
            "method": method,
            "definition": TYPE_D_DEFINITION,
        }

    canonical = {x for x, name in enumerate(labels) if name.startswith("w")}
    if canonical and len(canonical) < rack.size and _is_decomposition(rack, canonical):
        hit = _witness(rack, canonical) or _witness(rack, set(range(rack.size)) - canonical)
        if hit is not None:
            return payload(hit, "canonical-split" if exhaustive else "heuristic", canonical)

    if not exhaustive:
        logger.info("rack of size %s above the exhaustive cap %s; split search only", rack.size, cap)
        return None

    others = range(1, rack.size)
    for size in range(0, rack.size - 1):
        for extra in combinations(others, size):
            part = {0, *extra}
            if not _is_decomposition(rack, part):
                continue
            hit = _witness(rack, part) or _witness(rack, set(range(rack.size)) - part)
            if hit is not None:
                return payload(hit, "exhaustive", part)
    return None


def analyze(B: BraidedSpace) -> dict:
    """Everything the analysis layer can say about one braided space."""
    braid = check_braid_equation(B)
    q = detect_diagonal(B)
    abe = match_vabe(B)
    rack = extract_rack(B)
    report = {
        "dim": B.dim,
        "braid_equation": braid.as_dict(),
        "diagonal": q is not None,
        "qmatrix": q.to_json() if q is not None else None,
        "dynkin": dynkin(q).to_json() if q is not None else None,
        "vabe": None,
        "rack": None,
        "type_d": None,
    }
    if abe is not None:
        a, b, e = abe
        report["vabe"] = {"a": a.to_json(), "b": b.to_json(), "e": e.to_json(), "ae": (a * e).to_json()}
    if rack is not None:
        report["rack"] = rack[0].to_json()
        report["type_d"] = is_type_D(rack[0])
    return report
