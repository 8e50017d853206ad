"""Limit-curve combinatorics and finite-field dimension experiments.

Three layers live here.  The combinatorial layer enumerates alpha-tuples
(chain multiplicities constrained by sum j*alpha_j = p, sum (j-1)*alpha_j =
delta, alpha_j <= 2(k-1)) and packages chains plus marked points into nodal
limit-curve models.  The descent layer asks whether a pencil on the line
descends to such a model: every node pair must lie in a single member and
every marked point must carry the prescribed ramification.  The experimental
layer counts pencils over F_q satisfying incidence/ramification constraints
by exhaustive, exactly-once enumeration of 2-dimensional subspaces, and fits
a dimension exponent to counts across primes.

Search constraints compile to antisymmetric bilinear forms on coefficient
vectors, so a subspace matches iff one (hence any) basis pair (f, g) does;
the inner loop is a vectorized evaluation of those forms over numpy int64.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

import numpy as np
import sympy

from .errors import (
    ChainMismatch,
    PointCollision,
    ResourceLimit,
    ZeroCount,
)
from .fields import Field
from .pencil_geometry import (
    BinaryForm,
    Pencil,
    PlaneCurve,
    ProjPoint,
    SymPoint,
    _move_to_origin,
    _poly_squarefree,
    _trim,
    base_locus,
    curve_to_sympy,
    squarefree_form,
    wedge_basis_curve,
)

SAMPLE_LIMIT = 20

# Candidate budget for exhaustive searches.  The k=3 Grassmannian over F_101
# holds 105,111,206 pencils, which the dimension experiments walk constraint
# by constraint, so the default sits above that but still refuses anything
# an order of magnitude larger.
DEFAULT_SEARCH_BUDGET = 200_000_000

_CHUNK_ROWS = 256


# ---------------------------------------------------------------------------
# alpha-tuples


@dataclass(frozen=True)
class AlphaTuple:
    """Chain multiplicities (alpha_1..alpha_p) of a degenerate p-section."""

    p: int
    alphas: tuple

    def __post_init__(self):
        alphas = tuple(int(a) for a in self.alphas)
        if self.p < 1:
            raise ValueError("p must be positive")
        if len(alphas) != self.p:
            raise ValueError(f"need exactly {self.p} multiplicities")
        if any(a < 0 for a in alphas):
            raise ValueError("multiplicities must be nonnegative")
        if sum(j * a for j, a in enumerate(alphas, start=1)) != self.p:
            raise ValueError("weighted chain lengths must sum to p")
        object.__setattr__(self, "alphas", alphas)
        # g = sum alpha_j and p - delta count the same nodes two ways
        assert self.genus == self.p - self.delta

    @property
    def delta(self) -> int:
        return sum((j - 1) * a for j, a in enumerate(self.alphas, start=1))

    @property
    def genus(self) -> int:
        return sum(self.alphas)

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "alphas": list(self.alphas),
            "delta": self.delta,
            "genus": self.genus,
        }


def enumerate_alpha(p: int, delta: int, k: int) -> list[AlphaTuple]:
    """All tuples with sum j*a_j = p, sum (j-1)*a_j = delta, a_j <= 2(k-1).

    Returned in lexicographic order of (a_1..a_p).  An empty list is a valid
    answer; it matches the emptiness of the corresponding nodal family.
    """
    if not 0 <= delta < p:
        raise ValueError("need 0 <= delta < p")
    if k < 2:
        raise ValueError("k must be at least 2")
    cap = 2 * (k - 1)
    found: list[tuple] = []

    def walk(j: int, rem_p: int, rem_delta: int, acc: list) -> None:
        if j == 1:
            if rem_delta == 0 and rem_p <= cap:
                found.append(tuple([rem_p] + acc))
            return
        top = min(cap, rem_p // j, rem_delta // (j - 1))
        for a in range(top + 1):
            walk(j - 1, rem_p - j * a, rem_delta - (j - 1) * a, [a] + acc)

    walk(p, p, delta, [])
    return [AlphaTuple(p, t) for t in sorted(found)]


def exists_alpha(p: int, delta: int, k: int) -> bool:
    """Nonemptiness of enumerate_alpha, with early exit."""
    if not 0 <= delta < p:
        raise ValueError("need 0 <= delta < p")
    if k < 2:
        raise ValueError("k must be at least 2")
    cap = 2 * (k - 1)

    def walk(j: int, rem_p: int, rem_delta: int) -> bool:
        if j == 1:
            return rem_delta == 0 and rem_p <= cap
        top = min(cap, rem_p // j, rem_delta // (j - 1))
        return any(
            walk(j - 1, rem_p - j * a, rem_delta - (j - 1) * a)
            for a in range(top + 1)
        )

    return walk(p, p, delta)


# ---------------------------------------------------------------------------
# chains and limit-curve models


@dataclass(frozen=True)
class ChainSpec:
    """A chain of 2m-1 ruling lines, remembered by its distinguished pair."""

    m: int
    pair: tuple

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("chain parameter m must be at least 1")
        a, b = self.pair
        if not isinstance(a, ProjPoint) or not isinstance(b, ProjPoint):
            raise TypeError("pair must hold two projective points")
        if a == b:
            raise PointCollision("distinguished pair must be two distinct points")
        object.__setattr__(self, "pair", (a, b))

    @property
    def length(self) -> int:
        return 2 * self.m - 1


@dataclass(frozen=True)
class LimitCurveModel:
    """A g-nodal model of the sectional line: node pairs plus marked points."""

    node_pairs: tuple
    marked_points: tuple
    orders: tuple

    def __post_init__(self):
        pairs = tuple((a, b) for a, b in self.node_pairs)
        marked = tuple(self.marked_points)
        orders = tuple(int(e) for e in self.orders)
        if len(marked) != len(orders):
            raise ValueError("one order per marked point")
        if any(e < 2 for e in orders):
            raise ValueError("ramification orders must be at least 2")
        seen: list[ProjPoint] = []
        for pt in [p for pair in pairs for p in pair] + list(marked):
            if any(pt == s for s in seen):
                raise PointCollision(f"point {pt.to_json()} listed twice")
            seen.append(pt)
        fields = {p.field for p in seen}
        if len(fields) > 1:
            raise ValueError("all points must live over one field")
        object.__setattr__(self, "node_pairs", pairs)
        object.__setattr__(self, "marked_points", marked)
        object.__setattr__(self, "orders", orders)

    @property
    def genus(self) -> int:
        return len(self.node_pairs)


def build_limit_curve(
    alpha: AlphaTuple, chains: list[ChainSpec], marked: list[tuple]
) -> LimitCurveModel:
    """Assemble the nodal model for an alpha-tuple from its chains.

    The chain multiset must contain exactly alpha_j chains with parameter j;
    each contributes its distinguished pair as one node.  marked is a list of
    (point, order) pairs.
    """
    want = {j: a for j, a in enumerate(alpha.alphas, start=1) if a > 0}
    got: dict[int, int] = {}
    for chain in chains:
        got[chain.m] = got.get(chain.m, 0) + 1
    if got != want:
        raise ChainMismatch(
            f"alpha-tuple asks for chain multiplicities {want}, got {got}"
        )
    points = [pt for pt, _ in marked]
    orders = [e for _, e in marked]
    model = LimitCurveModel(
        tuple(chain.pair for chain in chains), tuple(points), tuple(orders)
    )
    assert model.genus == alpha.genus
    return model


# ---------------------------------------------------------------------------
# descent of pencils to nodal models


@dataclass(frozen=True)
class DescentReport:
    """Per-node and per-marked-point verdicts for a pencil on a nodal model."""

    pair_in_fiber: tuple
    pair_ambiguous: tuple
    ramification_ok: tuple
    descends: bool
    non_neutral: tuple | None

    def to_json_dict(self) -> dict:
        return {
            "pair_in_fiber": list(self.pair_in_fiber),
            "pair_ambiguous": list(self.pair_ambiguous),
            "ramification_ok": list(self.ramification_ok),
            "descends": self.descends,
            "non_neutral": None if self.non_neutral is None else list(self.non_neutral),
        }


def descends(
    model: LimitCurveModel, pencil: Pencil, second: Pencil | None = None
) -> DescentReport:
    """Whether the pencil factors through the nodal model.

    Each node pair must lie in a single member (base-point pairs count as
    lying in every member and are flagged ambiguous); each marked point must
    carry ramification of at least its order.  When a second pencil is given,
    its nodes are additionally classified: non-neutral means the two branches
    of the node land in different members of that pencil.
    """
    from .pencil_geometry import has_ramification_at, is_base_point, same_fiber

    if model.orders and max(model.orders) > pencil.degree:
        raise ValueError("pencil degree below a prescribed ramification order")
    in_fiber = []
    ambiguous = []
    for y, z in model.node_pairs:
        both_base = is_base_point(pencil, y) and is_base_point(pencil, z)
        ambiguous.append(both_base)
        in_fiber.append(same_fiber(pencil, y, z, strict=False))
    ram_ok = [
        has_ramification_at(pencil, pt, e)
        for pt, e in zip(model.marked_points, model.orders)
    ]
    non_neutral = None
    if second is not None:
        non_neutral = tuple(
            not same_fiber(second, y, z, strict=False) for y, z in model.node_pairs
        )
    return DescentReport(
        pair_in_fiber=tuple(in_fiber),
        pair_ambiguous=tuple(ambiguous),
        ramification_ok=tuple(ram_ok),
        descends=all(in_fiber) and all(ram_ok),
        non_neutral=non_neutral,
    )


# ---------------------------------------------------------------------------
# finite-field search


@dataclass(frozen=True)
class SearchConstraint:
    """Incidence and ramification conditions imposed on a pencil.

    incidences: SymPoints the induced plane curve must pass through.
    ramifications: (point, order) pairs each demanding a member vanishing to
    at least that order there.
    """

    incidences: tuple = ()
    ramifications: tuple = ()

    def __post_init__(self):
        inc = tuple(self.incidences)
        ram = tuple((pt, int(e)) for pt, e in self.ramifications)
        for sp in inc:
            if not isinstance(sp, SymPoint):
                raise TypeError("incidences must be SymPoints")
        for pt, e in ram:
            if not isinstance(pt, ProjPoint):
                raise TypeError("ramification points must be ProjPoints")
            if e < 2:
                raise ValueError("ramification orders must be at least 2")
        object.__setattr__(self, "incidences", inc)
        object.__setattr__(self, "ramifications", ram)

    def is_empty(self) -> bool:
        return not self.incidences and not self.ramifications

    def to_json_dict(self) -> dict:
        return {
            "incidences": [sp.to_json() for sp in self.incidences],
            "ramifications": [[pt.to_json(), e] for pt, e in self.ramifications],
        }


@dataclass(frozen=True)
class SearchResult:
    count: int
    samples: tuple
    strata: dict | None

    def to_json_dict(self) -> dict:
        return {
            "count": self.count,
            "samples": [p.to_json_dict() for p in self.samples],
            "strata": self.strata,
        }


def grassmannian_pencil_count(k: int, q: int) -> int:
    """Number of pencils of degree-k forms over F_q: lines in P^k(F_q)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    N = k + 1
    num = (q**N - 1) * (q**N - q)
    den = (q**2 - 1) * (q**2 - q)
    assert num % den == 0
    return num // den


def _cells(k: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(k + 1) for j in range(i + 1, k + 1)]


def _free_columns(k: int, i: int, j: int) -> tuple[list[int], list[int]]:
    cols0 = [c for c in range(i + 1, k + 1) if c != j]
    cols1 = list(range(j + 1, k + 1))
    return cols0, cols1


def _taylor_rows(field: Field, k: int, p: ProjPoint, order: int) -> list[list[int]]:
    """Rows a < order of the matrix taking coefficients to Taylor coefficients at p."""
    rows = [[0] * (k + 1) for _ in range(order)]
    for col in range(k + 1):
        unit = BinaryForm(field, k, tuple(1 if t == col else 0 for t in range(k + 1)))
        moved = _move_to_origin(unit, p)
        for a in range(order):
            rows[a][col] = int(moved.coeffs[a])
    return rows


def compile_constraint(k: int, q: int, constraint: SearchConstraint) -> list:
    """Antisymmetric matrices A with: pencil span(f, g) matches iff f^T A g = 0 for all A.

    Incidence at a SymPoint contributes one matrix, built from the coordinate
    wedge-basis curves (so the test agrees with bezoutian_curve evaluation).
    Ramification of order e contributes the C(e, 2) Taylor minors that
    has_ramification_at checks.  Basis invariance is automatic: antisymmetric
    bilinear values rescale by the determinant under basis change.
    """
    field = Field(q)
    mats: list[np.ndarray] = []
    for sp in constraint.incidences:
        if sp.field != field:
            raise ValueError("incidence point field does not match q")
        A = np.zeros((k + 1, k + 1), dtype=np.int64)
        for i in range(k + 1):
            for j in range(i + 1, k + 1):
                val = int(wedge_basis_curve(field, k, i, j).evaluate(sp))
                A[i, j] = val
                A[j, i] = (-val) % q
        mats.append(A)
    for pt, order in constraint.ramifications:
        if pt.field != field:
            raise ValueError("ramification point field does not match q")
        if order > k:
            raise ValueError("ramification order exceeds the degree")
        T = _taylor_rows(field, k, pt, order)
        for a in range(order):
            for b in range(a + 1, order):
                A = np.zeros((k + 1, k + 1), dtype=np.int64)
                for i in range(k + 1):
                    for l in range(k + 1):
                        A[i, l] = (T[a][i] * T[b][l] - T[b][i] * T[a][l]) % q
                mats.append(A)
    return mats


def _assignments(q: int, width: int) -> np.ndarray:
    """All width-tuples over 0..q-1, lexicographic, first coordinate most significant."""
    if width == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(iter_product(range(q), repeat=width)), dtype=np.int64)


def _pencil_from_indices(
    field: Field, k: int, cell: tuple[int, int], f_vals, g_vals
) -> Pencil:
    i, j = cell
    cols0, cols1 = _free_columns(k, i, j)
    f = [0] * (k + 1)
    g = [0] * (k + 1)
    f[i] = 1
    g[j] = 1
    for c, v in zip(cols0, f_vals):
        f[c] = int(v)
    for c, v in zip(cols1, g_vals):
        g[c] = int(v)
    return Pencil(BinaryForm(field, k, tuple(f)), BinaryForm(field, k, tuple(g)))


def _classify_stratum(pencil: Pencil) -> str:
    locus = base_locus(pencil)
    if locus.degree == 0:
        return "base_point_free"
    return "simple_base_divisor" if squarefree_form(locus) else "multiple_base_points"


def _search_shard(payload) -> tuple[int, list, dict]:
    """Count matches for one cell's f-index range; top-level for pickling."""
    (q, k, cell_idx, i, j, f_lo, f_hi, mats_raw, want_strata, sample_cap) = payload
    field = Field(q)
    mats = [np.array(m, dtype=np.int64) for m in mats_raw]
    cols0, cols1 = _free_columns(k, i, j)
    f_assign = _assignments(q, len(cols0))[f_lo:f_hi]
    g_assign = _assignments(q, len(cols1))
    n_g = g_assign.shape[0]
    count = 0
    samples: list[tuple] = []
    strata: dict[str, int] = {}
    for lo in range(0, f_assign.shape[0], _CHUNK_ROWS):
        chunk = f_assign[lo : lo + _CHUNK_ROWS]
        B = chunk.shape[0]
        F_rows = np.zeros((B, k + 1), dtype=np.int64)
        F_rows[:, i] = 1
        if cols0:
            F_rows[:, cols0] = chunk
        mask = np.ones((B, n_g), dtype=bool)
        for A in mats:
            R = (F_rows @ A) % q
            vals = R[:, [j]]
            if cols1:
                vals = vals + R[:, cols1] @ g_assign.T
            mask &= (vals % q) == 0
        hits = int(mask.sum())
        count += hits
        if hits and (len(samples) < sample_cap or want_strata):
            rows, cols = np.nonzero(mask)
            for b, gi in zip(rows.tolist(), cols.tolist()):
                f_idx = f_lo + lo + b
                if want_strata:
                    pencil = _pencil_from_indices(
                        field, k, (i, j), f_assign[lo + b], g_assign[gi]
                    )
                    name = _classify_stratum(pencil)
                    strata[name] = strata.get(name, 0) + 1
                if len(samples) < sample_cap:
                    samples.append((cell_idx, f_idx, gi))
                elif not want_strata:
                    break
    return count, samples, strata


def search_pencils_ffield(
    k: int,
    q: int,
    constraint: SearchConstraint,
    budget: int = DEFAULT_SEARCH_BUDGET,
    jobs: int = 1,
    cache_dir: str | None = None,
    use_cache: bool = True,
    report_strata: bool = False,
) -> SearchResult:
    """Count pencils over F_q meeting the constraint, with up to 20 samples.

    Every 2-dimensional subspace of degree-k forms is visited exactly once
    through reduced-row-echelon representatives, grouped into cells by pivot
    pair.  With no constraint (and no strata request) the per-cell counts are
    summed arithmetically instead of iterated; any actual enumeration larger
    than the budget raises ResourceLimit first.  Samples are the first
    matches in (cell, f, g) lexicographic order, so results are independent
    of jobs.  Strata reporting classifies every matching pencil by its base
    divisor at Python speed: keep it to small q.

    With cache_dir set, results persist as JSON keyed by a content hash of
    (k, q, constraint); use_cache=False recomputes and refreshes the entry.
    """
    field = Field(q)  # rejects q = 2 and composites
    if k < 1:
        raise ValueError("k must be at least 1")
    if q <= k:
        raise ValueError("need q > k so that distinct ramification points exist")
    cache_path = None
    if cache_dir is not None:
        cache_path = _cache_path(cache_dir, k, q, constraint)
        if use_cache and os.path.exists(cache_path):
            cached = _load_cached(field, k, cache_path, report_strata)
            if cached is not None:
                return cached
    cells = _cells(k)
    cell_sizes = [
        q ** (len(c0) + len(c1)) for c0, c1 in (_free_columns(k, i, j) for i, j in cells)
    ]
    total = sum(cell_sizes)
    if constraint.is_empty() and not report_strata:
        samples = _prefix_samples(field, k, q, SAMPLE_LIMIT)
        result = SearchResult(count=total, samples=tuple(samples), strata=None)
        if cache_path is not None:
            _store_cached(cache_path, k, q, constraint, result)
        return result
    if total > budget:
        raise ResourceLimit(
            f"enumerating {total} pencils exceeds the budget of {budget}"
        )
    mats = compile_constraint(k, q, constraint)
    mats_raw = [tuple(map(tuple, A.tolist())) for A in mats]
    tasks = []
    for cell_idx, (i, j) in enumerate(cells):
        cols0, _ = _free_columns(k, i, j)
        n_f = q ** len(cols0)
        shards = max(1, min(jobs, n_f // 4)) if jobs > 1 else 1
        bounds = [round(s * n_f / shards) for s in range(shards + 1)]
        for lo, hi in zip(bounds, bounds[1:]):
            if lo < hi:
                tasks.append(
                    (q, k, cell_idx, i, j, lo, hi, mats_raw, report_strata, SAMPLE_LIMIT)
                )
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_search_shard, tasks))
    else:
        outcomes = [_search_shard(t) for t in tasks]
    count = sum(c for c, _, _ in outcomes)
    keys = sorted(key for _, sample_keys, _ in outcomes for key in sample_keys)
    strata: dict[str, int] = {}
    for _, _, part in outcomes:
        for name, val in part.items():
            strata[name] = strata.get(name, 0) + val
    samples = []
    for cell_idx, f_idx, g_idx in keys[:SAMPLE_LIMIT]:
        i, j = cells[cell_idx]
        cols0, cols1 = _free_columns(k, i, j)
        f_vals = _digits(f_idx, q, len(cols0))
        g_vals = _digits(g_idx, q, len(cols1))
        samples.append(_pencil_from_indices(field, k, (i, j), f_vals, g_vals))
    result = SearchResult(
        count=count, samples=tuple(samples), strata=strata if report_strata else None
    )
    if cache_path is not None:
        _store_cached(cache_path, k, q, constraint, result)
    return result


def _digits(idx: int, q: int, width: int) -> list[int]:
    out = [0] * width
    for pos in range(width - 1, -1, -1):
        out[pos] = idx % q
        idx //= q
    return out


def _prefix_samples(field: Field, k: int, q: int, cap: int) -> list[Pencil]:
    out: list[Pencil] = []
    for cell in _cells(k):
        cols0, cols1 = _free_columns(k, *cell)
        for f_idx in range(q ** len(cols0)):
            for g_idx in range(q ** len(cols1)):
                out.append(
                    _pencil_from_indices(
                        field,
                        k,
                        cell,
                        _digits(f_idx, q, len(cols0)),
                        _digits(g_idx, q, len(cols1)),
                    )
                )
                if len(out) == cap:
                    return out
    return out


# --- cache plumbing ---


def _cache_key(k: int, q: int, constraint: SearchConstraint) -> str:
    doc = {"k": k, "q": q, "constraint": constraint.to_json_dict()}
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _cache_path(cache_dir: str, k: int, q: int, constraint: SearchConstraint) -> str:
    os.makedirs(cache_dir, exist_ok=True)
    return os.path.join(cache_dir, f"search-{_cache_key(k, q, constraint)[:24]}.json")


def _store_cached(
    path: str, k: int, q: int, constraint: SearchConstraint, result: SearchResult
) -> None:
    doc = {
        "schema": 1,
        "k": k,
        "q": q,
        "constraint": constraint.to_json_dict(),
        "count": result.count,
        "samples": [p.to_json_dict() for p in result.samples],
        "strata": result.strata,
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(doc, fh, sort_keys=True, separators=(",", ":"))
    os.replace(tmp, path)


def _load_cached(
    field: Field, k: int, path: str, report_strata: bool
) -> SearchResult | None:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, ValueError):
        return None
    if doc.get("schema") != 1:
        return None
    if report_strata and doc.get("strata") is None:
        return None  # cached run lacks the strata breakdown; recompute
    samples = tuple(
        Pencil(
            BinaryForm.from_json_dict(field, s["f"]),
            BinaryForm.from_json_dict(field, s["g"]),
        )
        for s in doc["samples"]
    )
    return SearchResult(count=doc["count"], samples=samples, strata=doc.get("strata"))


# ---------------------------------------------------------------------------
# dimension estimation


@dataclass(frozen=True)
class DimensionEstimate:
    raw: float
    rational: Fraction
    nearest: int
    residual: float

    def to_json_dict(self) -> dict:
        return {
            "raw": self.raw,
            "rational": [self.rational.numerator, self.rational.denominator],
            "nearest": self.nearest,
            "residual": self.residual,
        }


def dimension_estimate(counts: list[tuple[int, int]]) -> DimensionEstimate:
    """Fit d in count ~ c * q^d from (q, count) pairs at two or more primes.

    Two samples use the log-ratio directly; more use the least-squares slope
    of log(count) against log(q).  The rational field carries the same value
    with numerator and denominator rounded at 10^-6, making reports stable to
    print and compare.  A zero count means the variety is empty and no
    dimension exists: that raises ZeroCount rather than returning -inf.
    """
    if len(counts) < 2:
        raise ValueError("need at least two (q, count) samples")
    qs = [q for q, _ in counts]
    if len(set(qs)) != len(qs):
        raise ValueError("samples must use distinct primes")
    for q, c in counts:
        if c < 0:
            raise ValueError("counts cannot be negative")
        if c == 0:
            raise ZeroCount(f"count at q={q} is zero; the family is empty there")
    if len(counts) == 2:
        (q1, c1), (q2, c2) = counts
        num = math.log(c2 / c1)
        den = math.log(q2 / q1)
    else:
        xs = [math.log(q) for q, _ in counts]
        ys = [math.log(c) for _, c in counts]
        xbar = sum(xs) / len(xs)
        ybar = sum(ys) / len(ys)
        num = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
        den = sum((x - xbar) ** 2 for x in xs)
    raw = num / den
    rational = Fraction(round(num * 10**6), round(den * 10**6))
    nearest = round(raw)
    return DimensionEstimate(
        raw=raw, rational=rational, nearest=nearest, residual=raw - nearest
    )


# ---------------------------------------------------------------------------
# conic sections of plane curves


@dataclass(frozen=True)
class ConicSectionReport:
    """Resultant-based summary of curve-conic intersection.

    transversal is a proxy: full expected degree and a squarefree resultant.
    """

    expected_degree: int
    degree: int
    homogeneous: bool
    squarefree: bool | None
    transversal: bool
    resultant: BinaryForm | None

    def to_json_dict(self) -> dict:
        return {
            "expected_degree": self.expected_degree,
            "degree": self.degree,
            "homogeneous": self.homogeneous,
            "squarefree": self.squarefree,
            "transversal": self.transversal,
            "resultant": None if self.resultant is None else self.resultant.to_json_dict(),
        }


def intersect_with_conic(curve: PlaneCurve, conic: PlaneCurve) -> ConicSectionReport:
    """Eliminate w between the curve and a conic; report the (u, v) resultant.

    Transversal intersection shows up as a squarefree resultant of degree
    2 * deg(curve): each of the 2*deg intersection points contributes one
    simple root.  Coefficients stay exact; over F_q the integer resultant is
    reduced mod q, which is valid because the stored residues are already the
    field elements and the construction is polynomial in them.
    """
    if conic.degree != 2:
        raise ValueError("second argument must be a conic")
    if curve.field != conic.field:
        raise ValueError("field mismatch")
    if curve.is_zero() or conic.is_zero():
        raise ValueError("zero input")
    field = curve.field
    u, v, w = sympy.symbols("u v w")
    e1 = curve_to_sympy(curve)
    e2 = curve_to_sympy(conic)
    res = sympy.expand(sympy.resultant(e1, e2, w))
    expected = 2 * curve.degree
    if res == 0:
        return ConicSectionReport(
            expected_degree=expected,
            degree=-1,
            homogeneous=False,
            squarefree=None,
            transversal=False,
            resultant=None,
        )
    poly = sympy.Poly(res, u, v)
    degrees = {sum(mon) for mon in poly.monoms()}
    homogeneous = len(degrees) == 1
    degree = max(degrees)
    if not homogeneous:
        return ConicSectionReport(
            expected_degree=expected,
            degree=degree,
            homogeneous=False,
            squarefree=None,
            transversal=False,
            resultant=None,
        )
    coeffs = [field.zero] * (degree + 1)
    for mon, c in zip(poly.monoms(), poly.coeffs()):
        rat = sympy.Rational(c)
        val = field.coerce(Fraction(int(rat.p), int(rat.q)))
        coeffs[mon[1]] = val
    if all(field.is_zero(c) for c in coeffs):
        # the integer resultant reduced to zero: shared root over the closure
        return ConicSectionReport(
            expected_degree=expected,
            degree=-1,
            homogeneous=False,
            squarefree=None,
            transversal=False,
            resultant=None,
        )
    form = BinaryForm(field, degree, tuple(coeffs))
    chart = _trim(field, list(form.coeffs))
    x0_mult = form.degree - (len(chart) - 1)
    sqf = x0_mult <= 1 and _poly_squarefree(field, chart)
    return ConicSectionReport(
        expected_degree=expected,
        degree=degree,
        homogeneous=homogeneous,
        squarefree=sqf,
        transversal=homogeneous and degree == expected and sqf,
        resultant=form,
    )


__all__ = [
    "AlphaTuple",
    "ChainSpec",
    "ConicSectionReport",
    "DescentReport",
    "DimensionEstimate",
    "LimitCurveModel",
    "SearchConstraint",
    "SearchResult",
    "build_limit_curve",
    "compile_constraint",
    "descends",
    "dimension_estimate",
    "enumerate_alpha",
    "exists_alpha",
    "grassmannian_pencil_count",
    "intersect_with_conic",
    "search_pencils_ffield",
    "DEFAULT_SEARCH_BUDGET",
]
