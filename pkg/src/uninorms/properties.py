"""Decision procedures for the axioms of interest: idempotency, conservativeness,
symmetry, monotonicity, associativity, bisymmetry, neutral elements.

Most properties come in two flavors: the naive definitional check and a
structural check that reads the contour plot instead (connectedness of level
sets, isolated points, sections, rectangles). The two flavors are equivalent
on their stated input classes; the test suite verifies this exhaustively at
small chain sizes.

Checks iterate in lexicographic order, so the *_witness functions always
return the same (first) counterexample for a given table.
"""
from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator, NamedTuple, Optional

from .core import BinaryOperation, contour_partition


def idempotency_witness(op: BinaryOperation) -> Optional[int]:
    for x in range(1, op.n + 1):
        if op(x, x) != x:
            return x
    return None


def is_idempotent(op: BinaryOperation) -> bool:
    return idempotency_witness(op) is None


def conservativeness_witness(op: BinaryOperation) -> Optional[tuple[int, int]]:
    """First (x, y) with F(x,y) outside {x, y}, if any."""
    for x, y in op.pairs():
        if op(x, y) != x and op(x, y) != y:
            return (x, y)
    return None


def is_conservative(op: BinaryOperation) -> bool:
    return conservativeness_witness(op) is None


def contour_conservativeness_witness(op: BinaryOperation) -> Optional[tuple[int, int]]:
    """Structural version: the operation is conservative iff it is idempotent
    and every off-diagonal point is connected to one of the two diagonal
    points below it, i.e. shares its level set with (x,x) or (y,y)."""
    x = idempotency_witness(op)
    if x is not None:
        return (x, x)
    part = contour_partition(op)
    index = {}
    for i, cls in enumerate(part.classes):
        for p in cls:
            index[p] = i
    for x, y in op.pairs():
        if x == y:
            continue
        i = index[(x, y)]
        if i != index[(x, x)] and i != index[(y, y)]:
            return (x, y)
    return None


def is_conservative_via_contour(op: BinaryOperation) -> bool:
    return contour_conservativeness_witness(op) is None


def symmetry_witness(op: BinaryOperation) -> Optional[tuple[int, int]]:
    for x in range(1, op.n + 1):
        for y in range(x + 1, op.n + 1):
            if op(x, y) != op(y, x):
                return (x, y)
    return None


def is_symmetric(op: BinaryOperation) -> bool:
    return symmetry_witness(op) is None


def monotonicity_witness(op: BinaryOperation) -> Optional[tuple[tuple[int, int], tuple[int, int]]]:
    """First adjacent pair of points where the value strictly drops.

    Checking unit steps in each coordinate is enough by transitivity.
    """
    n = op.n
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if x < n and op(x, y) > op(x + 1, y):
                return ((x, y), (x + 1, y))
            if y < n and op(x, y) > op(x, y + 1):
                return ((x, y), (x, y + 1))
    return None


def is_nondecreasing(op: BinaryOperation) -> bool:
    return monotonicity_witness(op) is None


def associativity_witness(op: BinaryOperation) -> Optional[tuple[int, int, int]]:
    n = op.n
    t = op.table
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            txy = t[x - 1][y - 1]
            for z in range(1, n + 1):
                if t[txy - 1][z - 1] != t[x - 1][t[y - 1][z - 1] - 1]:
                    return (x, y, z)
    return None


def is_associative(op: BinaryOperation) -> bool:
    return associativity_witness(op) is None


def bisymmetry_witness(op: BinaryOperation) -> Optional[tuple[int, int, int, int]]:
    """First (x, y, u, v) with F(F(x,y),F(u,v)) != F(F(x,u),F(y,v))."""
    n = op.n
    t = op.table
    rng = range(1, n + 1)
    for x in rng:
        for y in rng:
            for u in rng:
                txu = t[x - 1][u - 1]
                txy = t[x - 1][y - 1]
                for v in rng:
                    if t[txy - 1][t[u - 1][v - 1] - 1] != t[txu - 1][t[y - 1][v - 1] - 1]:
                        return (x, y, u, v)
    return None


def is_bisymmetric(op: BinaryOperation) -> bool:
    return bisymmetry_witness(op) is None


# ---------------------------------------------------------------------------
# rectangles: the graphical associativity test for conservative operations

class Rectangle(NamedTuple):
    """A rectangle with one vertex on the diagonal, determined by a triple of
    pairwise distinct elements: vertices (a,c), (b,c), (b,b), (a,b)."""

    a: int
    b: int
    c: int

    @property
    def vertices(self) -> tuple[tuple[int, int], ...]:
        a, b, c = self
        return ((a, c), (b, c), (b, b), (a, b))


class RectWitness(NamedTuple):
    triple: tuple[int, int, int]
    rectangle: Rectangle
    values: tuple[int, int, int]


def rectangles(n: int, symmetric: bool = False) -> Iterator[Rectangle]:
    """All test rectangles on the n-chain in lexicographic triple order.

    With ``symmetric=True`` only one rectangle per 3-element subset is
    produced, which suffices for symmetric operations.
    """
    if symmetric:
        for a, b, c in combinations(range(1, n + 1), 3):
            yield Rectangle(a, b, c)
    else:
        for a, b, c in permutations(range(1, n + 1), 3):
            yield Rectangle(a, b, c)


def rectangle_count(n: int, symmetric: bool = False) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    if symmetric:
        return n * (n - 1) * (n - 2) // 6
    return n * (n - 1) * (n - 2)


def rect_associativity_witness(op: BinaryOperation) -> Optional[RectWitness]:
    """Rectangle test: a conservative operation fails associativity exactly
    when some pairwise distinct a, b, c give pairwise distinct values
    F(a,b), F(a,c), F(b,c)."""
    _require(op, conservative=True)
    for rect in rectangles(op.n, symmetric=False):
        a, b, c = rect
        vab, vac, vbc = op(a, b), op(a, c), op(b, c)
        if vab != vac and vab != vbc and vac != vbc:
            return RectWitness((a, b, c), rect, (vab, vac, vbc))
    return None


def is_associative_conservative_rect(op: BinaryOperation) -> bool:
    return rect_associativity_witness(op) is None


def is_bisymmetric_via_rect(op: BinaryOperation) -> bool:
    """For conservative symmetric operations, bisymmetry is the same as
    associativity, so the rectangle test decides it."""
    _require(op, conservative=True, symmetric=True)
    for rect in rectangles(op.n, symmetric=True):
        a, b, c = rect
        vab, vac, vbc = op(a, b), op(a, c), op(b, c)
        if vab != vac and vab != vbc and vac != vbc:
            return False
    return True


# ---------------------------------------------------------------------------
# neutral elements and isolated points

def find_neutral_element(op: BinaryOperation) -> Optional[int]:
    """The unique e with F(x,e) = F(e,x) = x for all x, or None."""
    n = op.n
    for e in range(1, n + 1):
        if all(op(x, e) == x and op(e, x) == x for x in range(1, n + 1)):
            return e
    return None


class NeutralSections(NamedTuple):
    e: int
    vertical: tuple[tuple[int, int], ...]
    horizontal: tuple[tuple[int, int], ...]


def find_neutral_via_sections(op: BinaryOperation) -> Optional[NeutralSections]:
    """Graphical version: look for a vertical and a horizontal section meeting
    on the diagonal on which the operation restricts to the identity. The
    crossing point of the two sections is the neutral element."""
    n = op.n
    for e in range(1, n + 1):
        if all(op(e, y) == y for y in range(1, n + 1)) and all(
            op(x, e) == x for x in range(1, n + 1)
        ):
            vertical = tuple((e, y) for y in range(1, n + 1))
            horizontal = tuple((x, e) for x in range(1, n + 1))
            return NeutralSections(e, vertical, horizontal)
    return None


def isolated_points(op: BinaryOperation) -> tuple[tuple[int, int], ...]:
    """Points connected to no other point: the singleton level sets."""
    return contour_partition(op).isolated()


def find_neutral_conservative(op: BinaryOperation) -> Optional[int]:
    """For conservative operations the neutral element is the diagonal point
    whose level set is a singleton; there is at most one isolated point."""
    _require(op, conservative=True)
    isolated = isolated_points(op)
    if not isolated:
        return None
    (x, y) = isolated[0]
    return x if x == y else None


def isolated_implies_diagonal_check(op: BinaryOperation) -> bool:
    """Executable witness that isolated points of an idempotent operation lie
    on the diagonal; a False return would indicate a bug, not a property of
    the input."""
    _require(op, idempotent=True)
    return all(x == y for (x, y) in isolated_points(op))


def _require(op: BinaryOperation, conservative: bool = False,
             symmetric: bool = False, idempotent: bool = False) -> None:
    if conservative:
        w = conservativeness_witness(op)
        if w is not None:
            raise ValueError(f"operation is not conservative: F{w} = {op(*w)}")
    if symmetric:
        w = symmetry_witness(op)
        if w is not None:
            raise ValueError(f"operation is not symmetric at {w}")
    if idempotent:
        x = idempotency_witness(op)
        if x is not None:
            raise ValueError(f"operation is not idempotent: F({x},{x}) = {op(x, x)}")
