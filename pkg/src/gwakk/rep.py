"""Truncated shift-matrix representations of canonical GWAs.

For sigma(h) = h - 1 with P(0) = 0 the representation sends h to
N = diag(0, -1, -2, ...), x to the left shift and y to P(N) times the right
shift; for sigma(h) = q h with P(1) = 0 the diagonal is G = diag(1, q, q^2, ...).
Matrices are cut to M x M. Products of cut matrices agree with the cut of the
infinite product away from a border whose width is the band width involved,
so every comparison here is exact on an explicit window.
"""

from __future__ import annotations

from typing import Dict, Iterable

from .gwa import GWA, GWAElement
from .poly import Poly
from .sampling import case_rng, random_element
from .scalar import Field, ModeError, is_root_of_unity

__all__ = [
    "TruncatedMatrix", "RepresentationError", "basis_matrices", "representation_kind",
    "represent", "window_equal", "verify_representation", "faithfulness_probe",
    "faithfulness_threshold", "verify_faithfulness", "relation_checks",
]


class RepresentationError(ValueError):
    pass


class TruncatedMatrix:
    """Sparse exact M x M matrix; only nonzero entries are stored."""

    __slots__ = ("size", "entries", "field")

    def __init__(self, size: int, entries: Dict[tuple, object] | None = None, field: Field | None = None):
        self.size = size
        self.field = field
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    @classmethod
    def _raw(cls, size, entries, field):
        obj = object.__new__(cls)
        obj.size = size
        obj.entries = entries
        obj.field = field
        return obj

    @classmethod
    def identity(cls, size: int, field: Field | None = None) -> "TruncatedMatrix":
        one = field.one if field else 1
        return cls._raw(size, {(i, i): one for i in range(size)}, field)

    @classmethod
    def diagonal(cls, values: Iterable, field: Field | None = None) -> "TruncatedMatrix":
        values = list(values)
        return cls(len(values), {(i, i): v for i, v in enumerate(values)}, field)

    @classmethod
    def unit(cls, size: int, i: int, j: int, field: Field | None = None) -> "TruncatedMatrix":
        return cls._raw(size, {(i, j): field.one if field else 1}, field)

    def _check(self, other: "TruncatedMatrix"):
        if self.size != other.size:
            raise ValueError(f"size mismatch: {self.size} vs {other.size}")
        if self.field is not None and other.field is not None and self.field is not other.field:
            raise ModeError()

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.size and 0 <= j < self.size):
            raise IndexError(key)
        return self.entries.get(key, self.field.zero if self.field else 0)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, TruncatedMatrix):
            return NotImplemented
        self._check(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            w = out[k] + v if k in out else v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return TruncatedMatrix._raw(self.size, out, self.field or other.field)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedMatrix._raw(self.size, {k: -v for k, v in self.entries.items()}, self.field)

    def __sub__(self, other):
        if not isinstance(other, TruncatedMatrix):
            return NotImplemented
        return self + (-other)

    def __matmul__(self, other):
        if not isinstance(other, TruncatedMatrix):
            return NotImplemented
        self._check(other)
        rows: Dict[int, list] = {}
        for (k, j), v in other.entries.items():
            rows.setdefault(k, []).append((j, v))
        out: Dict[tuple, object] = {}
        for (i, k), a in self.entries.items():
            for j, b in rows.get(k, ()):
                key = (i, j)
                out[key] = out[key] + a * b if key in out else a * b
        return TruncatedMatrix._raw(self.size, {k: v for k, v in out.items() if v},
                                    self.field or other.field)

    def __mul__(self, other):
        if isinstance(other, TruncatedMatrix):
            return self @ other
        if isinstance(other, bool):
            return NotImplemented
        try:
            c = other if self.field is None else self.field(other)
        except (TypeError, ModeError):
            return NotImplemented
        if not c:
            return TruncatedMatrix._raw(self.size, {}, self.field)
        return TruncatedMatrix._raw(self.size, {k: v * c for k, v in self.entries.items()}, self.field)

    def __rmul__(self, other):
        if isinstance(other, TruncatedMatrix):
            return other @ self
        return self * other

    def __pow__(self, n: int):
        out = TruncatedMatrix.identity(self.size, self.field)
        for _ in range(n):
            out = out @ self
        return out

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        if not isinstance(other, TruncatedMatrix):
            return NotImplemented
        return self.size == other.size and self.entries == other.entries

    def __hash__(self):
        return hash((self.size, frozenset(self.entries.items())))

    def window(self, w: int) -> Dict[tuple, object]:
        return {k: v for k, v in self.entries.items() if k[0] < w and k[1] < w}

    def to_rows(self) -> list:
        zero = self.field.zero if self.field else 0
        return [[self.entries.get((i, j), zero) for j in range(self.size)] for i in range(self.size)]

    def __repr__(self):
        return f"TruncatedMatrix({self.size}, {len(self.entries)} nonzero)"

    def __str__(self):
        rows = [[str(v) for v in row] for row in self.to_rows()]
        width = max((len(s) for row in rows for s in row), default=1)
        return "\n".join(" ".join(s.rjust(width) for s in row) for row in rows)


def basis_matrices(M: int, kind: str, q=None, field: Field | None = None) -> TruncatedMatrix:
    """U1 (right shift), Um1 (left shift), N = diag(0, -1, ...) or G = diag(1, q, ...)."""
    if M < 1:
        raise ValueError("size must be positive")
    if kind == "U1":
        return TruncatedMatrix(M, {(i + 1, i): _one(field) for i in range(M - 1)}, field)
    if kind == "Um1":
        return TruncatedMatrix(M, {(i, i + 1): _one(field) for i in range(M - 1)}, field)
    if kind == "N":
        return TruncatedMatrix.diagonal((_conv(field, -i) for i in range(M)), field)
    if kind == "G":
        if q is None:
            raise ValueError("kind G needs the parameter q")
        if not q:
            raise ValueError("automorphism parameter must be nonzero")
        vals, cur = [], q ** 0
        for _ in range(M):
            vals.append(cur)
            cur = cur * q
        return TruncatedMatrix.diagonal(vals, field)
    raise ValueError(f"unknown kind {kind!r}")


def _one(field):
    return field.one if field else 1


def _conv(field, v):
    return field(v) if field else v


def representation_kind(pres: GWA) -> str:
    """'classical' or 'quantum' when the shift representation applies, else raise."""
    s, P = pres.sigma, pres.P
    one = pres.field.one
    if P:
        if s.q == 1 and s.h0 == -1 and not P(pres.field.zero):
            return "classical"
        if not s.h0 and s.q != 1 and not is_root_of_unity(s.q) and not P(one):
            return "quantum"
    raise RepresentationError(
        "no faithful representation available (representation hypotheses unmet)")


def _diag_values(pres: GWA, kind: str, M: int):
    if kind == "classical":
        return [pres.field(-i) for i in range(M)]
    vals, cur = [], pres.field.one
    for _ in range(M):
        vals.append(cur)
        cur = cur * pres.sigma.q
    return vals


def represent(u: GWAElement, pres: GWA | None = None, M: int = 8) -> TruncatedMatrix:
    """Exact M x M cut of rho(u); the componentwise formula is

    (d, p) -> p(D) (P(D) U1)^d for d > 0, p(D) for d = 0, p(D) Um1^-d for d < 0.
    """
    pres = pres or u.algebra
    kind = representation_kind(pres)
    D = _diag_values(pres, kind, M)
    Pd = [pres.P(v) for v in D]
    entries: Dict[tuple, object] = {}
    for d, p in u.components.items():
        pd = [p(v) for v in D]
        if d == 0:
            for i in range(M):
                if pd[i]:
                    entries[(i, i)] = pd[i]
        elif d > 0:
            for i in range(M - d):
                val = pd[i + d]
                if not val:
                    continue
                for t in range(1, d + 1):
                    val = val * Pd[i + t]
                    if not val:
                        break
                if val:
                    entries[(i + d, i)] = val
        else:
            m = -d
            for i in range(M - m):
                if pd[i]:
                    entries[(i, i + m)] = pd[i]
    return TruncatedMatrix._raw(M, entries, pres.field)


def window_equal(A: TruncatedMatrix, B: TruncatedMatrix, w: int) -> bool:
    if w > A.size or w > B.size:
        raise ValueError("window larger than the matrix")
    return A.window(w) == B.window(w)


# -- randomized verification ----------------------------------------------------

def relation_checks(pres: GWA, M: int) -> Dict[str, bool]:
    """Exact shift/diagonal relations at size M (no border defect)."""
    fld = pres.field
    U1, Um1 = basis_matrices(M, "U1", field=fld), basis_matrices(M, "Um1", field=fld)
    I = TruncatedMatrix.identity(M, fld)
    e00 = TruncatedMatrix.unit(M, 0, 0, fld)
    eMM = TruncatedMatrix.unit(M, M - 1, M - 1, fld)
    checks = {
        "U1*Um1 = 1 - e00": U1 @ Um1 == I - e00,
        "Um1*U1 = 1 - e(M-1,M-1)": Um1 @ U1 == I - eMM,
    }
    kind = representation_kind(pres)
    if kind == "classical":
        N = basis_matrices(M, "N", field=fld)
        checks["U1*N = (N+1)*U1"] = U1 @ N == (N + I) @ U1
        checks["Um1*N = (N-1)*Um1"] = Um1 @ N == (N - I) @ Um1
    else:
        q = pres.sigma.q
        G = basis_matrices(M, "G", q=q, field=fld)
        checks["U1*G = (q^-1 G)*U1"] = U1 @ G == (G * (fld.one / q)) @ U1
        checks["Um1*G = (qG)*Um1"] = Um1 @ G == (G * q) @ Um1
    return checks


def verify_representation(pres: GWA, cases: int = 200, M: int = 24, max_deg: int = 4,
                          seed: int = 0, poly_degree: int = 2) -> dict:
    """Relation checks plus windowed homomorphism checks on random pairs."""
    representation_kind(pres)
    window = M - 2 * max_deg
    if window < 1:
        raise ValueError("truncation too small for the degree bound")
    relations = {}
    for size in range(2, max(M, 2) + 1):
        for name, ok in relation_checks(pres, size).items():
            relations[name] = relations.get(name, True) and ok
    failures = []
    passed = 0
    for case in range(cases):
        rng = case_rng(seed, case, "rep")
        u = random_element(pres, rng, max_deg=max_deg, poly_degree=poly_degree, height=5)
        v = random_element(pres, rng, max_deg=max_deg, poly_degree=poly_degree, height=5)
        lhs = represent(u * v, pres, M)
        rhs = represent(u, pres, M) @ represent(v, pres, M)
        if window_equal(lhs, rhs, window):
            passed += 1
        else:
            failures.append({"case": case, "u": u.to_json(), "v": v.to_json()})
    return {
        "suite": "rep",
        "presentation": pres.to_json(),
        "truncation": M,
        "window": window,
        "relations": relations,
        "window_checks": passed,
        "cases": cases,
        "failures": failures,
        "passed": all(relations.values()) and not failures,
    }


def faithfulness_threshold(u: GWAElement) -> int:
    if not u.components:
        return 1
    return max(abs(d) for d in u.components) + max(p.degree for p in u.components.values()) + 2


def faithfulness_probe(u: GWAElement, pres: GWA | None = None, M: int = 8) -> bool:
    """Whether the cut representation of u is nonzero."""
    pres = pres or u.algebra
    if M < faithfulness_threshold(u):
        raise ValueError("truncation below faithfulness threshold")
    return bool(represent(u, pres, M))


def verify_faithfulness(pres: GWA, cases: int = 100, seed: int = 0, max_deg: int = 4,
                        poly_degree: int = 3) -> dict:
    """Random nonzero elements have nonzero cut representations at the threshold size."""
    representation_kind(pres)
    failures = []
    for case in range(cases):
        rng = case_rng(seed, case, "faithful")
        u = random_element(pres, rng, max_deg=max_deg, poly_degree=poly_degree, nonzero=True)
        if not faithfulness_probe(u, pres, faithfulness_threshold(u)):
            failures.append({"case": case, "u": u.to_json()})
    return {"suite": "rep-faithfulness", "presentation": pres.to_json(), "cases": cases,
            "failures": failures, "passed": not failures}
