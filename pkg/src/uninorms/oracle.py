"""Brute-force enumeration engines and exhaustive verification of every
characterization at desk scale.

Enumeration classes live behind hard feasibility bounds; exceeding a bound is
an error rather than a silent sample. Where a bound forces sampling (chain
size 4 and 5 for the quadruple-identity checks), the sample is drawn with one
fixed seed split into fixed-size chunks, so results do not depend on how many
workers run the chunks.

``verify_theorem`` is the single entry point: it looks up a named claim in
the catalog, scans the relevant candidate class, and reports the number of
candidates checked plus any counterexamples found (there must be none).
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from math import comb
from typing import Iterator, Optional

import numpy as np

from .core import BinaryOperation, FiniteChain, LinearOrder, table_to_json_dict
from .generate import (
    enumerate_gspecs,
    generate_all_uninorms_gc,
    gspec_collision_report,
    uninorm_from_gspec,
)
from .properties import (
    find_neutral_conservative,
    find_neutral_element,
    find_neutral_via_sections,
    is_associative,
    is_associative_conservative_rect,
    is_bisymmetric,
    is_conservative,
    is_conservative_via_contour,
    is_idempotent,
    is_nondecreasing,
    is_symmetric,
    isolated_points,
    rectangle_count,
    rectangles,
)
from .single_peaked import (
    enumerate_single_peaked,
    is_single_peaked,
    order_to_uninorm,
    uninorm_to_order,
)

SAMPLE_SIZE = 100_000
_SAMPLE_CHUNKS = 100
_SCAN_CHUNKS = 64
_MAX_COUNTEREXAMPLES = 20


@dataclass(frozen=True)
class PropertyProfile:
    """All property flags of one operation, computed in a single pass."""

    idempotent: bool
    conservative: bool
    symmetric: bool
    nondecreasing: bool
    associative: bool
    bisymmetric: bool
    neutral: Optional[int]
    isolated: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "idempotent": self.idempotent,
            "conservative": self.conservative,
            "symmetric": self.symmetric,
            "nondecreasing": self.nondecreasing,
            "associative": self.associative,
            "bisymmetric": self.bisymmetric,
            "neutral": self.neutral,
            "isolated": [list(p) for p in self.isolated],
        }


def profile(op: BinaryOperation) -> PropertyProfile:
    return PropertyProfile(
        idempotent=is_idempotent(op),
        conservative=is_conservative(op),
        symmetric=is_symmetric(op),
        nondecreasing=is_nondecreasing(op),
        associative=is_associative(op),
        bisymmetric=is_bisymmetric(op),
        neutral=find_neutral_element(op),
        isolated=isolated_points(op),
    )


# ---------------------------------------------------------------------------
# indexed table spaces
#
# A space is a lexicographically indexed family of tables: a template with
# fixed entries plus free cells, each with its own ascending value list. The
# index doubles as the work-partitioning key for parallel scans.

class TableSpace:
    def __init__(self, n: int, cells, choices, base, mirror: bool = False):
        self.n = n
        self.cells = cells
        self.choices = choices
        self.base = base
        self.mirror = mirror
        size = 1
        for ch in choices:
            size *= len(ch)
        self.size = size

    def decode(self, index: int) -> tuple[tuple[int, ...], ...]:
        digits = [0] * len(self.choices)
        for k in range(len(self.choices) - 1, -1, -1):
            index, digits[k] = divmod(index, len(self.choices[k]))
        rows = [row[:] for row in self.base]
        self._apply(rows, digits)
        return tuple(tuple(r) for r in rows)

    def _apply(self, rows, digits) -> None:
        for (i, j), ch, d in zip(self.cells, self.choices, digits):
            rows[i][j] = ch[d]
            if self.mirror:
                rows[j][i] = ch[d]

    def iter_range(self, start: int, stop: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        """Tables start..stop-1 in index order, via odometer increments."""
        if start >= stop:
            return
        digits = [0] * len(self.choices)
        index = start
        for k in range(len(self.choices) - 1, -1, -1):
            index, digits[k] = divmod(index, len(self.choices[k]))
        rows = [row[:] for row in self.base]
        self._apply(rows, digits)
        for _ in range(start, stop):
            yield tuple(tuple(r) for r in rows)
            for k in range(len(self.choices) - 1, -1, -1):
                digits[k] += 1
                if digits[k] < len(self.choices[k]):
                    i, j = self.cells[k]
                    rows[i][j] = self.choices[k][digits[k]]
                    if self.mirror:
                        rows[j][i] = self.choices[k][digits[k]]
                    break
                digits[k] = 0
                i, j = self.cells[k]
                rows[i][j] = self.choices[k][0]
                if self.mirror:
                    rows[j][i] = self.choices[k][0]

    def __iter__(self):
        return self.iter_range(0, self.size)


def full_space(n: int) -> TableSpace:
    cells = [(i, j) for i in range(n) for j in range(n)]
    values = tuple(range(1, n + 1))
    return TableSpace(n, cells, [values] * len(cells), [[0] * n for _ in range(n)])


def idempotent_space(n: int) -> TableSpace:
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    values = tuple(range(1, n + 1))
    base = [[i + 1 if i == j else 0 for j in range(n)] for i in range(n)]
    return TableSpace(n, cells, [values] * len(cells), base)


def conservative_space(n: int) -> TableSpace:
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    choices = [tuple(sorted((i + 1, j + 1))) for (i, j) in cells]
    base = [[i + 1 if i == j else 0 for j in range(n)] for i in range(n)]
    return TableSpace(n, cells, choices, base)


def conservative_symmetric_space(n: int) -> TableSpace:
    cells = [(i, j) for i in range(n) for j in range(i + 1, n)]
    choices = [(i + 1, j + 1) for (i, j) in cells]
    base = [[i + 1 if i == j else 0 for j in range(n)] for i in range(n)]
    return TableSpace(n, cells, choices, base, mirror=True)


def symmetric_space(n: int) -> TableSpace:
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    values = tuple(range(1, n + 1))
    return TableSpace(n, cells, [values] * len(cells),
                      [[0] * n for _ in range(n)], mirror=True)


def _wrap(n: int, table: tuple[tuple[int, ...], ...]) -> BinaryOperation:
    return BinaryOperation(FiniteChain(n), table)


# ---------------------------------------------------------------------------
# public enumerators (hard feasibility bounds)

def enumerate_all_operations(n: int) -> Iterator[BinaryOperation]:
    """All n^(n^2) total tables, lexicographic by table entries; n <= 3."""
    _feasible(n, 3, "all operations", "n^(n^2)")
    chain = FiniteChain(n)
    for t in full_space(n):
        yield BinaryOperation(chain, t)


def enumerate_conservative(n: int, symmetric_only: bool = False) -> Iterator[BinaryOperation]:
    """All conservative tables (diagonal forced, each off-diagonal cell one of
    its two coordinates): 2^(n^2-n) in general, 2^(n(n-1)/2) symmetric."""
    if symmetric_only:
        _feasible(n, 8, "symmetric conservative operations", "2^(n(n-1)/2)")
        space = conservative_symmetric_space(n)
    else:
        _feasible(n, 5, "conservative operations", "2^(n^2-n)")
        space = conservative_space(n)
    chain = FiniteChain(n)
    for t in space:
        yield BinaryOperation(chain, t)


def enumerate_nondecreasing(n: int) -> Iterator[BinaryOperation]:
    """All tables nondecreasing in both coordinates, by backtracking over rows
    (24696 tables at n = 4); n <= 4."""
    _feasible(n, 4, "nondecreasing operations", "box plane partition numbers")
    chain = FiniteChain(n)

    def rec_col(y: int, cols: list[list[int]]) -> Iterator[BinaryOperation]:
        # cols[y-1] is the file line y: F(1,y) .. F(n,y)
        if y > n:
            table = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
            yield BinaryOperation(chain, table)
            return
        prev = cols[-1] if cols else None

        def rec_cell(x: int, line: list[int]) -> Iterator[BinaryOperation]:
            if x > n:
                yield from rec_col(y + 1, cols + [line])
                return
            lo = line[-1] if line else 1
            if prev is not None:
                lo = max(lo, prev[x - 1])
            for v in range(lo, n + 1):
                yield from rec_cell(x + 1, line + [v])

        yield from rec_cell(1, [])

    yield from rec_col(1, [])


def _feasible(n: int, cap: int, what: str, growth: str) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ValueError(
            f"exhaustive enumeration of {what} grows as {growth}; "
            f"n = {n} exceeds the supported bound {cap}"
        )


# ---------------------------------------------------------------------------
# scan plumbing: fixed chunking, optional process pool

def _chunk_bounds(total: int, chunks: int = _SCAN_CHUNKS) -> list[tuple[int, int]]:
    k = max(1, min(chunks, total))
    step, rem = divmod(total, k)
    bounds = []
    start = 0
    for i in range(k):
        stop = start + step + (1 if i < rem else 0)
        bounds.append((start, stop))
        start = stop
    return bounds


def _run_chunks(fn, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def _merge_scans(parts: list[dict]) -> dict:
    merged: dict = {"checked": 0, "stats": {}, "counterexamples": []}
    for p in parts:
        merged["checked"] += p["checked"]
        for k, v in p["stats"].items():
            merged["stats"][k] = merged["stats"].get(k, 0) + v
        merged["counterexamples"].extend(p["counterexamples"])
    return merged


_SPACES = {
    "full": full_space,
    "idempotent": idempotent_space,
    "conservative": conservative_space,
    "conservative-symmetric": conservative_symmetric_space,
    "symmetric": symmetric_space,
}


def _scan_chunk(args) -> dict:
    check_name, space_name, n, start, stop = args
    space = _SPACES[space_name](n)
    check = _CHECKS[check_name]
    chain = FiniteChain(n)
    stats: dict[str, int] = {}
    cex: list[dict] = []
    for t in space.iter_range(start, stop):
        op = BinaryOperation(chain, t)
        delta, bad = check(op)
        for k in delta:
            stats[k] = stats.get(k, 0) + 1
        if bad is not None and len(cex) < _MAX_COUNTEREXAMPLES:
            record = {"table": table_to_json_dict(op)["table"], "reason": bad}
            cex.append(record)
    return {"checked": stop - start, "stats": stats, "counterexamples": cex}


def _scan_space(check_name: str, space_name: str, n: int, jobs: int) -> dict:
    space = _SPACES[space_name](n)
    tasks = [
        (check_name, space_name, n, a, b) for a, b in _chunk_bounds(space.size)
    ]
    return _merge_scans(_run_chunks(_scan_chunk, tasks, jobs))


# per-table checks; each returns (stats flags to count, failure reason or None)

def _check_mainb(op: BinaryOperation):
    if not is_nondecreasing(op) or find_neutral_element(op) is None:
        return (), None
    lhs = is_bisymmetric(op)
    rhs = is_associative(op) and is_symmetric(op)
    delta = ["candidate"]
    if lhs:
        delta.append("bisymmetric_side")
    if rhs:
        delta.append("uninorm_side")
    if lhs != rhs:
        return delta, f"bisymmetric={lhs} but associative-and-symmetric={rhs}"
    return delta, None


def _check_corollary_mainb(op: BinaryOperation):
    if not is_nondecreasing(op) or find_neutral_element(op) is None:
        return (), None
    idem = is_idempotent(op)
    cons = is_conservative(op)
    bis = is_bisymmetric(op)
    rhs = idem and is_associative(op) and is_symmetric(op)
    delta = ["candidate"]
    if rhs:
        delta.append("idempotent_uninorms")
    if (idem and bis) != rhs:
        return delta, f"idempotent+bisymmetric={idem and bis} but idempotent uninorm={rhs}"
    if (cons and bis) != rhs:
        return delta, f"conservative+bisymmetric={cons and bis} but idempotent uninorm={rhs}"
    return delta, None


def _check_bis_a(op: BinaryOperation):
    if find_neutral_element(op) is None or not is_bisymmetric(op):
        return (), None
    if not (is_associative(op) and is_symmetric(op)):
        return ("antecedent",), "bisymmetric with neutral element but not associative+symmetric"
    return ("antecedent",), None


def _check_bis_b(op: BinaryOperation):
    if not (is_associative(op) and is_symmetric(op)):
        return (), None
    if not is_bisymmetric(op):
        return ("antecedent",), "associative and symmetric but not bisymmetric"
    return ("antecedent",), None


def _check_bis_c(op: BinaryOperation):
    if not is_conservative(op) or not is_bisymmetric(op):
        return (), None
    if not is_associative(op):
        return ("antecedent",), "conservative and bisymmetric but not associative"
    return ("antecedent",), None


def _check_idis(op: BinaryOperation):
    bad = [p for p in isolated_points(op) if p[0] != p[1]]
    if bad:
        return (), f"idempotent operation with off-diagonal isolated point {bad[0]}"
    return (), None


def _check_ee(op: BinaryOperation):
    iso = isolated_points(op)
    if len(iso) > 1:
        return (), f"conservative operation with {len(iso)} isolated points"
    if iso and iso[0][0] != iso[0][1]:
        return (), f"conservative operation with off-diagonal isolated point {iso[0]}"
    via_iso = find_neutral_conservative(op)
    naive = find_neutral_element(op)
    if via_iso != naive:
        return (), f"isolated-point rule gives {via_iso}, definition gives {naive}"
    delta = ("has_neutral",) if naive is not None else ()
    return delta, None


def _check_tcons(op: BinaryOperation):
    naive = is_conservative(op)
    structural = is_conservative_via_contour(op)
    if naive != structural:
        return (), f"definition says {naive}, contour test says {structural}"
    return (("conservative",) if naive else ()), None


def _check_te3(op: BinaryOperation):
    sections = find_neutral_via_sections(op)
    naive = find_neutral_element(op)
    found = sections.e if sections is not None else None
    if found != naive:
        return (), f"section test gives {found}, definition gives {naive}"
    return (("has_neutral",) if naive is not None else ()), None


def _check_testca(op: BinaryOperation):
    naive = is_associative(op)
    rect = is_associative_conservative_rect(op)
    if naive != rect:
        return (), f"triple loop says {naive}, rectangle test says {rect}"
    return (("associative",) if naive else ()), None


def _check_consj(op: BinaryOperation):
    n = op.n
    cons = is_conservative(op)
    closed = _closed_under_all_subsets(op, n)
    traceable = _membership_traceable(op, n)
    if not (cons == closed == traceable):
        return (), (
            f"conservative={cons}, closed-under-subsets={closed}, "
            f"membership-traceable={traceable}"
        )
    return (("conservative",) if cons else ()), None


def _closed_under_all_subsets(op: BinaryOperation, n: int) -> bool:
    for mask in range(1, 1 << n):
        members = [v for v in range(1, n + 1) if mask >> (v - 1) & 1]
        for x in members:
            for y in members:
                if not (mask >> (op(x, y) - 1) & 1):
                    return False
    return True


def _membership_traceable(op: BinaryOperation, n: int) -> bool:
    # if a value lands in S, one of its arguments must already be in S
    for mask in range(1, 1 << n):
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                if mask >> (op(x, y) - 1) & 1:
                    if not (mask >> (x - 1) & 1 or mask >> (y - 1) & 1):
                        return False
    return True


def _check_main3(op: BinaryOperation):
    if not is_nondecreasing(op):
        return (), None
    # the scanned space is symmetric conservative, so the table qualifies
    if not is_associative(op):
        return ("candidate",), "conservative symmetric nondecreasing but not associative"
    if find_neutral_element(op) is None:
        return ("candidate",), "conservative symmetric nondecreasing but no neutral element"
    return ("candidate",), None


def _check_prel34(op: BinaryOperation):
    if not is_idempotent(op):
        return (), None
    e = find_neutral_element(op)
    if e is None:
        return (), None
    n = op.n
    for x in range(1, e + 1):
        for y in range(1, e + 1):
            if op(x, y) != min(x, y):
                return ("candidate",), f"below the neutral element F({x},{y}) != min"
    for x in range(e, n + 1):
        for y in range(e, n + 1):
            if op(x, y) != max(x, y):
                return ("candidate",), f"above the neutral element F({x},{y}) != max"
    return ("candidate",), None


_CHECKS = {
    "mainb": _check_mainb,
    "corollary-mainb": _check_corollary_mainb,
    "bis-a": _check_bis_a,
    "bis-b": _check_bis_b,
    "bis-c": _check_bis_c,
    "idis": _check_idis,
    "ee": _check_ee,
    "tcons": _check_tcons,
    "te3": _check_te3,
    "testca": _check_testca,
    "consj": _check_consj,
    "main3": _check_main3,
    "prel34": _check_prel34,
}


# ---------------------------------------------------------------------------
# fixed-seed sampling (chain sizes where exhaustion is out of reach)

def _chunk_rng(seed: int, chunk: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(chunk,)))


def _nondecreasing_mask(arr: np.ndarray) -> np.ndarray:
    d1 = (np.diff(arr, axis=1) >= 0).all(axis=(1, 2))
    d2 = (np.diff(arr, axis=2) >= 0).all(axis=(1, 2))
    return d1 & d2


def _neutral_mask(arr: np.ndarray, n: int) -> np.ndarray:
    idx = np.arange(1, n + 1)
    out = np.zeros(len(arr), dtype=bool)
    for e0 in range(n):
        out |= (arr[:, e0, :] == idx).all(axis=1) & (arr[:, :, e0] == idx).all(axis=1)
    return out


def _symmetric_mask(arr: np.ndarray) -> np.ndarray:
    return (arr == arr.transpose(0, 2, 1)).all(axis=(1, 2))


def _np_to_table(t: np.ndarray) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in t)


def _sample_chunk(args) -> dict:
    check_name, n, seed, chunk, count, prefilter = args
    rng = _chunk_rng(seed, chunk)
    arr = rng.integers(1, n + 1, size=(count, n, n))
    if prefilter == "neutral":
        keep = _neutral_mask(arr, n)
    elif prefilter == "symmetric":
        keep = _symmetric_mask(arr)
    elif prefilter == "nondecreasing+neutral":
        keep = _nondecreasing_mask(arr) & _neutral_mask(arr, n)
    else:
        raise ValueError(prefilter)
    check = _CHECKS[check_name]
    chain = FiniteChain(n)
    stats = {"prefiltered": int(keep.sum())}
    cex: list[dict] = []
    for t in arr[keep]:
        op = BinaryOperation(chain, _np_to_table(t))
        delta, bad = check(op)
        for k in delta:
            stats[k] = stats.get(k, 0) + 1
        if bad is not None and len(cex) < _MAX_COUNTEREXAMPLES:
            cex.append({"table": table_to_json_dict(op)["table"], "reason": bad})
    return {"checked": count, "stats": stats, "counterexamples": cex}


def _sample_space(check_name: str, n: int, seed: int, jobs: int,
                  prefilter: str, total: int = SAMPLE_SIZE) -> dict:
    per = total // _SAMPLE_CHUNKS
    tasks = [
        (check_name, n, seed, chunk, per, prefilter)
        for chunk in range(_SAMPLE_CHUNKS)
    ]
    return _merge_scans(_run_chunks(_sample_chunk, tasks, jobs))


# ---------------------------------------------------------------------------
# theorem runners

def _report(name: str, n: int, candidates: int, counterexamples: list,
            **extras) -> dict:
    out = {
        "theorem": name,
        "n": n,
        "candidates": candidates,
        "counterexamples": counterexamples,
        "counterexample_count": len(counterexamples),
        "ok": not counterexamples,
    }
    out.update(extras)
    return out


def _main_chunk(args) -> list:
    n, start, stop = args
    space = conservative_symmetric_space(n)
    chain = FiniteChain(n)
    keep = []
    for t in space.iter_range(start, stop):
        if is_nondecreasing(BinaryOperation(chain, t)):
            keep.append(t)
    return keep


def _brute_force_uninorm_tables(n: int, jobs: int) -> set:
    space = conservative_symmetric_space(n)
    tasks = [(n, a, b) for a, b in _chunk_bounds(space.size)]
    parts = _run_chunks(_main_chunk, tasks, jobs)
    return {t for part in parts for t in part}


def _verify_main(name: str, n: int, seed: int, jobs: int) -> dict:
    space_size = conservative_symmetric_space(n).size
    brute = _brute_force_uninorm_tables(n, jobs)
    generated = {op.table for op in generate_all_uninorms_gc(n)}
    cex = []
    for t in sorted(brute - generated):
        cex.append({"table": table_to_json_dict(_wrap(n, t))["table"],
                    "reason": "passes the axioms but is never generated"})
    for t in sorted(generated - brute):
        cex.append({"table": table_to_json_dict(_wrap(n, t))["table"],
                    "reason": "generated but fails the axioms"})
    return _report(name, n, space_size, cex[:_MAX_COUNTEREXAMPLES],
                   brute_force_count=len(brute), generated_count=len(generated))


def _verify_main2n(name: str, n: int, seed: int, jobs: int) -> dict:
    tables = [op.table for op in generate_all_uninorms_gc(n)]
    distinct = len(set(tables))
    expected = 2 ** (n - 1)
    cex = []
    if len(tables) != expected or distinct != expected:
        cex.append({"reason": f"generator yielded {len(tables)} tables "
                              f"({distinct} distinct), expected {expected}"})
    extras = {"generated": len(tables), "distinct": distinct, "expected": expected}
    if n <= 6:
        brute = len(_brute_force_uninorm_tables(n, jobs))
        extras["brute_force_count"] = brute
        if brute != expected:
            cex.append({"reason": f"brute force found {brute}, expected {expected}"})
    return _report(name, n, len(tables), cex, **extras)


def _verify_gc(name: str, n: int, seed: int, jobs: int) -> dict:
    by_neutral: dict[int, int] = {}
    total = 0
    cex = []
    for op in generate_all_uninorms_gc(n):
        total += 1
        e = find_neutral_conservative(op)
        if e is None:
            cex.append({"table": table_to_json_dict(op)["table"],
                        "reason": "generated table has no neutral element"})
            continue
        by_neutral[e] = by_neutral.get(e, 0) + 1
    for e in range(1, n + 1):
        want = comb(n - 1, e - 1)
        got = by_neutral.get(e, 0)
        if got != want:
            cex.append({"reason": f"neutral element {e}: {got} tables, expected {want}"})
    if sum(by_neutral.values()) != 2 ** (n - 1):
        cex.append({"reason": "per-neutral counts do not sum to the total"})
    return _report(name, n, total, cex[:_MAX_COUNTEREXAMPLES],
                   by_neutral={str(e): c for e, c in sorted(by_neutral.items())})


def _verify_qob(name: str, n: int, seed: int, jobs: int) -> dict:
    cex = []
    orders = list(enumerate_single_peaked(n))
    from_orders = {}
    for order in orders:
        if order.seq[-1] not in (1, n):
            cex.append({"reason": f"ordering {order.seq} ends in {order.seq[-1]}"})
        op = order_to_uninorm(order)
        from_orders[op.table] = order.seq
        back = uninorm_to_order(op)
        if back.seq != order.seq:
            cex.append({"reason": f"round trip changed {order.seq} into {back.seq}"})
    gc_tables = set()
    for op in generate_all_uninorms_gc(n):
        gc_tables.add(op.table)
        back = order_to_uninorm(uninorm_to_order(op)).table
        if back != op.table:
            cex.append({"table": table_to_json_dict(op)["table"],
                        "reason": "uninorm round trip changed the table"})
    gspec_tables = {uninorm_from_gspec(s).table for s in enumerate_gspecs(n)}
    if set(from_orders) != gc_tables:
        cex.append({"reason": "order-maximum tables differ from the contour algorithm's"})
    if gspec_tables != gc_tables:
        cex.append({"reason": "patchwork construction image differs from the contour algorithm's"})
    extras = {
        "orders": len(orders),
        "distinct_operations": len(gc_tables),
        "gspec_image": len(gspec_tables),
        "gspec_collisions": gspec_collision_report(n)["colliding_operations"],
    }
    if n <= 8:
        chain = FiniteChain(n)
        filtered = [
            seq for seq in permutations(range(1, n + 1))
            if is_single_peaked(LinearOrder(chain, seq))
        ]
        extras["factorial_filtered"] = len(filtered)
        if sorted(o.seq for o in orders) != sorted(filtered):
            cex.append({"reason": "incremental enumeration disagrees with the n! filter"})
    return _report(name, n, len(orders), cex[:_MAX_COUNTEREXAMPLES], **extras)


def _verify_scan(check_name: str, space_name: str):
    def run(name: str, n: int, seed: int, jobs: int) -> dict:
        merged = _scan_space(check_name, space_name, n, jobs)
        return _report(name, n, merged["checked"],
                       merged["counterexamples"][:_MAX_COUNTEREXAMPLES],
                       stats=merged["stats"])
    return run


def _verify_mainb(name: str, n: int, seed: int, jobs: int) -> dict:
    if n <= 3:
        merged = _scan_space("mainb", "full", n, jobs)
        return _report(name, n, merged["checked"],
                       merged["counterexamples"][:_MAX_COUNTEREXAMPLES],
                       stats=merged["stats"])
    sampled = _sample_space("mainb", n, seed, jobs, "nondecreasing+neutral")
    sweep = {"checked": 0, "stats": {}, "counterexamples": []}
    for op in enumerate_nondecreasing(n):
        sweep["checked"] += 1
        delta, bad = _check_mainb(op)
        for k in delta:
            sweep["stats"][k] = sweep["stats"].get(k, 0) + 1
        if bad is not None:
            sweep["counterexamples"].append(
                {"table": table_to_json_dict(op)["table"], "reason": bad})
    cex = (sampled["counterexamples"] + sweep["counterexamples"])[:_MAX_COUNTEREXAMPLES]
    return _report(
        name, n, sampled["checked"] + sweep["checked"], cex,
        seed=seed,
        sampled=sampled["checked"],
        sampled_stats=sampled["stats"],
        nondecreasing_sweep=sweep["checked"],
        sweep_stats=sweep["stats"],
    )


def _verify_corollary_mainb(name: str, n: int, seed: int, jobs: int) -> dict:
    if n <= 3:
        merged = _scan_space("corollary-mainb", "full", n, jobs)
        return _report(name, n, merged["checked"],
                       merged["counterexamples"][:_MAX_COUNTEREXAMPLES],
                       stats=merged["stats"])
    sampled = _sample_space("corollary-mainb", n, seed, jobs, "nondecreasing+neutral")
    sweep_cex = []
    sweep_checked = 0
    sweep_stats: dict[str, int] = {}
    for op in enumerate_nondecreasing(n):
        sweep_checked += 1
        delta, bad = _check_corollary_mainb(op)
        for k in delta:
            sweep_stats[k] = sweep_stats.get(k, 0) + 1
        if bad is not None:
            sweep_cex.append({"table": table_to_json_dict(op)["table"], "reason": bad})
    cex = (sampled["counterexamples"] + sweep_cex)[:_MAX_COUNTEREXAMPLES]
    return _report(name, n, sampled["checked"] + sweep_checked, cex,
                   seed=seed, sampled=sampled["checked"],
                   sampled_stats=sampled["stats"],
                   nondecreasing_sweep=sweep_checked, sweep_stats=sweep_stats)


def _verify_bis(check_name: str):
    def run(name: str, n: int, seed: int, jobs: int) -> dict:
        if n <= 3:
            merged = _scan_space(check_name, "full", n, jobs)
            return _report(name, n, merged["checked"],
                           merged["counterexamples"][:_MAX_COUNTEREXAMPLES],
                           stats=merged["stats"])
        if check_name == "bis-c":
            merged = _scan_space(check_name, "conservative", n, jobs)
            return _report(name, n, merged["checked"],
                           merged["counterexamples"][:_MAX_COUNTEREXAMPLES],
                           stats=merged["stats"])
        prefilter = "neutral" if check_name == "bis-a" else "symmetric"
        sampled = _sample_space(check_name, n, seed, jobs, prefilter)
        return _report(name, n, sampled["checked"],
                       sampled["counterexamples"][:_MAX_COUNTEREXAMPLES],
                       seed=seed, stats=sampled["stats"])
    return run


def _verify_rec8n(name: str, n: int, seed: int, jobs: int) -> dict:
    cex = []
    seen = set()
    count = 0
    for rect in rectangles(n, symmetric=False):
        count += 1
        a, b, c = rect
        if len({a, b, c}) != 3:
            cex.append({"reason": f"triple {rect} is not pairwise distinct"})
        (p, q, r, s) = rect.vertices
        if r[0] != r[1]:
            cex.append({"reason": f"rectangle {rect} has no vertex on the diagonal"})
        for v in (p, q, s):
            if v[0] == v[1]:
                cex.append({"reason": f"rectangle {rect} vertex {v} on the diagonal"})
        seen.add((a, b, c))
    expected = rectangle_count(n, symmetric=False)
    if count != expected or len(seen) != expected:
        cex.append({"reason": f"iterator yielded {count} rectangles "
                              f"({len(seen)} distinct), expected {expected}"})
    sym_count = sum(1 for _ in rectangles(n, symmetric=True))
    sym_expected = rectangle_count(n, symmetric=True)
    if sym_count != sym_expected:
        cex.append({"reason": f"symmetric iterator yielded {sym_count}, "
                              f"expected {sym_expected}"})
    return _report(name, n, count, cex[:_MAX_COUNTEREXAMPLES],
                   expected=expected, symmetric_expected=sym_expected)


def _verify_prel34(name: str, n: int, seed: int, jobs: int) -> dict:
    # backtracking enumeration cannot be index-partitioned; runs sequentially
    checked = 0
    stats: dict[str, int] = {}
    cex = []
    for op in enumerate_nondecreasing(n):
        checked += 1
        delta, bad = _check_prel34(op)
        for k in delta:
            stats[k] = stats.get(k, 0) + 1
        if bad is not None and len(cex) < _MAX_COUNTEREXAMPLES:
            cex.append({"table": table_to_json_dict(op)["table"], "reason": bad})
    return _report(name, n, checked, cex, stats=stats)


def _verify_open_questions(name: str, n: int, seed: int, jobs: int) -> dict:
    report = probe_open_questions(n, seed=seed, jobs=jobs)
    return _report(name, n, report["a"]["conservative"], [], probe=report)


_CATALOG: dict[str, tuple[int, str, str]] = {
    # name: (max n, runner key, summary)
    "main": (6, "main", "the three axioms characterize the generated uninorms"),
    "main2n": (12, "main2n", "there are exactly 2^(n-1) idempotent discrete uninorms"),
    "main3": (5, "main3", "the three axioms imply associativity and a neutral element"),
    "gc": (12, "gc", "uninorms with neutral element e number C(n-1, e-1)"),
    "qob": (12, "qob", "single-peaked maxima, contour algorithm, and patchwork agree"),
    "mainb": (4, "mainb", "bisymmetry + monotonicity + neutral element = discrete uninorm"),
    "corollary-mainb": (4, "corollary-mainb",
                        "adding idempotency or conservativeness yields the idempotent ones"),
    "bis-a": (5, "bis-a", "bisymmetric with neutral element implies associative and symmetric"),
    "bis-b": (5, "bis-b", "associative and symmetric implies bisymmetric"),
    "bis-c": (4, "bis-c", "bisymmetric and conservative implies associative"),
    "idis": (3, "idis", "isolated points of idempotent operations lie on the diagonal"),
    "ee": (4, "ee", "for conservative operations, neutral = unique isolated diagonal point"),
    "tcons": (3, "tcons", "conservativeness = idempotency + diagonal-connected contour"),
    "te3": (3, "te3", "neutral elements = identity sections crossing on the diagonal"),
    "testca": (4, "testca", "rectangle test decides associativity of conservative operations"),
    "rec8n": (10, "rec8n", "there are n(n-1)(n-2) test rectangles, C(n,3) up to symmetry"),
    "prel34": (4, "prel34", "idempotent nondecreasing with neutral e: min below e, max above"),
    "consj": (3, "consj", "conservativeness = closure under every subset"),
    "open-questions": (5, "open-questions", "empirical probes, no assertion made"),
}

_RUNNERS = {
    "main": _verify_main,
    "main2n": _verify_main2n,
    "main3": _verify_scan("main3", "conservative-symmetric"),
    "gc": _verify_gc,
    "qob": _verify_qob,
    "mainb": _verify_mainb,
    "corollary-mainb": _verify_corollary_mainb,
    "bis-a": _verify_bis("bis-a"),
    "bis-b": _verify_bis("bis-b"),
    "bis-c": _verify_bis("bis-c"),
    "idis": _verify_scan("idis", "idempotent"),
    "ee": _verify_scan("ee", "conservative"),
    "tcons": _verify_scan("tcons", "full"),
    "te3": _verify_scan("te3", "full"),
    "testca": _verify_scan("testca", "conservative"),
    "rec8n": _verify_rec8n,
    "prel34": _verify_prel34,
    "consj": _verify_scan("consj", "full"),
    "open-questions": _verify_open_questions,
}


def theorem_names() -> list[str]:
    return sorted(_CATALOG)


def theorem_bound(name: str) -> int:
    if name not in _CATALOG:
        raise ValueError(f"unknown claim {name!r}; known: {', '.join(theorem_names())}")
    return _CATALOG[name][0]


def verify_theorem(name: str, n: int, seed: int = 0, jobs: int = 1) -> dict:
    """Exhaustively (or by fixed-seed sampling, where documented) check one
    named claim at chain size n and report candidates checked plus any
    counterexamples. The report is deterministic for fixed (name, n, seed),
    regardless of the number of workers."""
    key = name.lower()
    cap = theorem_bound(key)
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ValueError(f"claim {key!r} is only checkable up to n = {cap}")
    start = time.perf_counter()
    report = _RUNNERS[_CATALOG[key][1]](key, n, seed, jobs)
    report["summary"] = _CATALOG[key][2]
    report["runtime_seconds"] = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# open questions: raw-table scans (kept light so the n = 5 sweep stays usable)

def _raw_symmetric(t, n: int) -> bool:
    for i in range(n):
        for j in range(i + 1, n):
            if t[i][j] != t[j][i]:
                return False
    return True


def _raw_rect_associative(t, n: int) -> bool:
    # conservative input assumed; associativity via the rectangle test
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if b == a:
                continue
            vab = t[a - 1][b - 1]
            for c in range(1, n + 1):
                if c == a or c == b:
                    continue
                vac = t[a - 1][c - 1]
                if vac == vab:
                    continue
                vbc = t[b - 1][c - 1]
                if vbc != vab and vbc != vac:
                    return False
    return True


def _probe_cons_chunk(args) -> dict:
    n, start, stop = args
    space = conservative_space(n)
    assoc = symm = both = 0
    for t in space.iter_range(start, stop):
        a = _raw_rect_associative(t, n)
        s = _raw_symmetric(t, n)
        assoc += a
        symm += s
        both += a and s
    return {"checked": stop - start,
            "stats": {"associative": assoc, "symmetric": symm,
                      "symmetric_associative": both},
            "counterexamples": []}


def _probe_c_exhaustive(n: int, jobs: int) -> dict:
    space = symmetric_space(n)
    tasks = [("probe-c", n, a, b) for a, b in _chunk_bounds(space.size)]
    parts = _run_chunks(_probe_c_chunk, tasks, jobs)
    return _merge_scans(parts)


def _probe_c_examine(op: BinaryOperation, stats: dict, findings: list) -> None:
    stats["bisymmetric_symmetric"] = stats.get("bisymmetric_symmetric", 0) + 1
    assoc = is_associative(op)
    neutral = find_neutral_element(op)
    if not assoc:
        stats["lacking_associativity"] = stats.get("lacking_associativity", 0) + 1
        if len(findings) < _MAX_COUNTEREXAMPLES:
            findings.append({"table": table_to_json_dict(op)["table"],
                             "finding": "bisymmetric and symmetric, not associative"})
    if neutral is None:
        stats["lacking_neutral"] = stats.get("lacking_neutral", 0) + 1
        if len(findings) < _MAX_COUNTEREXAMPLES and assoc:
            findings.append({"table": table_to_json_dict(op)["table"],
                             "finding": "bisymmetric and symmetric, no neutral element"})


def _probe_c_chunk(args) -> dict:
    _, n, start, stop = args
    space = symmetric_space(n)
    chain = FiniteChain(n)
    stats: dict[str, int] = {}
    findings: list[dict] = []
    for t in space.iter_range(start, stop):
        op = BinaryOperation(chain, t)
        if not is_bisymmetric(op):
            continue
        _probe_c_examine(op, stats, findings)
    return {"checked": stop - start, "stats": stats, "counterexamples": findings}


def _probe_c_sample_chunk(args) -> dict:
    n, seed, chunk, count = args
    rng = _chunk_rng(seed, chunk)
    arr = rng.integers(1, n + 1, size=(count, n, n))
    upper = np.triu_indices(n, k=1)
    arr[:, upper[1], upper[0]] = arr[:, upper[0], upper[1]]  # force symmetry
    chain = FiniteChain(n)
    stats: dict[str, int] = {}
    findings: list[dict] = []
    for t in arr:
        op = BinaryOperation(chain, _np_to_table(t))
        if not is_bisymmetric(op):
            continue
        _probe_c_examine(op, stats, findings)
    return {"checked": count, "stats": stats, "counterexamples": findings}


def probe_open_questions(n: int, seed: int = 0, jobs: int = 1) -> dict:
    """Gather empirical evidence on the open enumeration and implication
    questions. Findings are reported as data; nothing is asserted.

    * counts of conservative / conservative+associative / conservative+
      symmetric tables (exact, exhaustive);
    * a search for symmetric bisymmetric tables lacking associativity or a
      neutral element (exhaustive up to n = 3, fixed-seed sampling above).
    """
    _feasible(n, 5, "conservative operations", "2^(n^2-n)")
    space = conservative_space(n)
    tasks = [(n, a, b) for a, b in _chunk_bounds(space.size)]
    cons = _merge_scans(_run_chunks(_probe_cons_chunk, tasks, jobs))

    if n <= 3:
        part_c = _probe_c_exhaustive(n, jobs)
        mode_c = "exhaustive"
    else:
        per = SAMPLE_SIZE // _SAMPLE_CHUNKS
        tasks_c = [(n, seed, chunk, per) for chunk in range(_SAMPLE_CHUNKS)]
        part_c = _merge_scans(_run_chunks(_probe_c_sample_chunk, tasks_c, jobs))
        mode_c = "sampled"

    return {
        "n": n,
        "a": {
            "conservative": cons["checked"],
            "conservative_associative": cons["stats"].get("associative", 0),
            "conservative_symmetric": cons["stats"].get("symmetric", 0),
            "conservative_symmetric_associative":
                cons["stats"].get("symmetric_associative", 0),
        },
        "b": "no graphical bisymmetry test is known for non-symmetric "
             "conservative operations; the symmetric case reduces to the "
             "rectangle test",
        "c": {
            "mode": mode_c,
            "seed": seed if mode_c == "sampled" else None,
            "symmetric_tables_examined": part_c["checked"],
            "stats": part_c["stats"],
            "findings": part_c["counterexamples"],
            "note": "findings are empirical observations, not a theorem",
        },
    }
