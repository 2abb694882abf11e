"""Integral first homology of the presented manifold, and the integer solve
that drives extension-link synthesis.

Generators A_i are the oriented core loops of the 1-handles; relator R_j is
the class of the j-th characteristic curve, read off as signed passes through
each handle.  Everything is exact: plain Python integers throughout, Bareiss
elimination for determinants and elementary row/column transforms for the
Smith normal form.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .model import HeegaardGraph, LinkDiagram

Matrix = list[list[int]]


class NoIntegralSolution(ValueError):
    """The class vector lies outside the relator lattice: the link is not
    homologically trivial in this manifold."""


# ---------------------------------------------------------------------------
# Reading the presentation off the combinatorial data
# ---------------------------------------------------------------------------


def relator_matrix(graph: HeegaardGraph) -> Matrix:
    """g x g matrix; entry (i, j) is the signed count of color-j passes
    through handle i (rows = generators, columns = relators)."""
    g = graph.genus
    matrix = [[0] * g for _ in range(g)]
    for e in graph.edges:
        (i, s), _ = e.head
        matrix[i - 1][e.color - 1] += s
    return matrix


def link_class(diagram: LinkDiagram) -> list[int]:
    """Homology class of the whole link: signed passage count per handle."""
    ell = [0] * diagram.graph.genus
    for p in diagram.passages:
        (i, s), _ = p.end
        ell[i - 1] += s
    return ell


# ---------------------------------------------------------------------------
# Exact integer linear algebra
# ---------------------------------------------------------------------------


def determinant(matrix: Matrix) -> int:
    """Fraction-free Bareiss elimination; exact for integer input."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("determinant requires a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class SmithNormalForm:
    """U * M * V = diag(diagonal); U, V unimodular."""

    diagonal: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]


def smith_normal_form(matrix: Matrix) -> SmithNormalForm:
    """Diagonalize over the integers with unimodular transforms.

    The diagonal is non-negative and satisfies the divisibility chain
    d_1 | d_2 | ... ; zeros come last.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    a = [list(map(int, row)) for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("ragged matrix")
    u = _identity(m)
    v = _identity(n)

    def swap_rows(r1, r2):
        a[r1], a[r2] = a[r2], a[r1]
        u[r1], u[r2] = u[r2], u[r1]

    def swap_cols(c1, c2):
        for row in a:
            row[c1], row[c2] = row[c2], row[c1]
        for row in v:
            row[c1], row[c2] = row[c2], row[c1]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def negate_row(r):
        a[r] = [-x for x in a[r]]
        u[r] = [-x for x in u[r]]

    def find_pivot(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(m, n):
        pivot = find_pivot(t)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            if a[t][t] < 0:
                negate_row(t)
            dirty = False
            for i in range(m):
                if i != t and a[i][t] != 0:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(n):
                if j != t and a[t][j] != 0:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # Pivot must divide the remaining block for the chain to hold.
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        t += 1
    diagonal = tuple(a[k][k] for k in range(min(m, n)))
    return SmithNormalForm(diagonal, tuple(map(tuple, u)), tuple(map(tuple, v)))


def certify_homology_sphere(matrix: Matrix) -> bool:
    """True iff the presented manifold is an integral homology sphere."""
    return abs(determinant(matrix)) == 1


# ---------------------------------------------------------------------------
# Integer solve R x = ell
# ---------------------------------------------------------------------------


def _mat_vec(matrix, vec) -> list[int]:
    return [sum(r * x for r, x in zip(row, vec)) for row in matrix]


def _l1(vec) -> int:
    return sum(abs(x) for x in vec)


def solve_extension_coefficients(matrix: Matrix, ell: list[int]) -> list[int]:
    """Exact integer solution of R x = ell via the Smith transforms.

    Unique when R is unimodular.  When the solution set is a coset of the
    kernel lattice, returns the vector minimizing sum(|x_j|), ties broken
    lexicographically.  Raises NoIntegralSolution when ell is outside the
    column lattice.
    """
    g = len(matrix)
    if len(ell) != g:
        raise ValueError(f"class vector has length {len(ell)}, expected {g}")
    if g == 0:
        return []
    snf = smith_normal_form(matrix)
    rhs = _mat_vec(snf.left, ell)
    y = []
    for d, b in zip(snf.diagonal, rhs):
        if d == 0:
            if b != 0:
                raise NoIntegralSolution(f"no integral solution for class {tuple(ell)}")
            y.append(0)
        else:
            if b % d != 0:
                raise NoIntegralSolution(f"no integral solution for class {tuple(ell)}")
            y.append(b // d)
    x = _mat_vec(snf.right, y)
    kernel = [
        [snf.right[r][k] for r in range(g)]
        for k, d in enumerate(snf.diagonal)
        if d == 0
    ]
    if not kernel:
        return x
    return _minimize_over_coset(x, kernel)


def _minimize_over_coset(x0: list[int], basis: list[list[int]]) -> list[int]:
    g = len(x0)
    k = len(basis)

    def shifted(z):
        return [x0[r] + sum(z[c] * basis[c][r] for c in range(k)) for r in range(g)]

    # Cheap greedy descent first, to shrink the exhaustive search radius.
    x = list(x0)
    improved = True
    while improved:
        improved = False
        for c in range(k):
            for d in (1, -1):
                cand = [x[r] + d * basis[c][r] for r in range(g)]
                if _l1(cand) < _l1(x):
                    x = cand
                    improved = True
    # z offsets are measured from the descended point.
    base = x
    bound = 2 * _l1(base)
    if bound == 0:
        return base
    # Exact coefficient bound: any competitive lattice shift w = B z has
    # ||w||_1 <= bound, and z = (B^T B)^{-1} B^T w recovers z from w.
    gram = [
        [sum(basis[c1][r] * basis[c2][r] for r in range(g)) for c2 in range(k)]
        for c1 in range(k)
    ]
    pseudo = _solve_rational(gram, [[Fraction(basis[c][r]) for r in range(g)] for c in range(k)])
    radii = []
    for c in range(k):
        row_max = max(abs(p) for p in pseudo[c])
        radii.append(int(row_max * bound))
    if _box_size(radii) > 4_000_000:
        raise ValueError("kernel coset search space too large")
    best = (_l1(base), tuple(base))
    for z in product(*[range(-r, r + 1) for r in radii]):
        cand = [base[r] + sum(z[c] * basis[c][r] for c in range(k)) for r in range(g)]
        key = (_l1(cand), tuple(cand))
        if key < best:
            best = key
    return list(best[1])


def _box_size(radii) -> int:
    size = 1
    for r in radii:
        size *= 2 * r + 1
    return size


def _solve_rational(gram: list[list[int]], rhs: list[list[Fraction]]) -> list[list[Fraction]]:
    """Solve gram * X = rhs exactly (gram symmetric positive definite)."""
    k = len(gram)
    aug = [[Fraction(gram[i][j]) for j in range(k)] + list(rhs[i]) for i in range(k)]
    for col in range(k):
        pivot = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


# ---------------------------------------------------------------------------
# Presentation record and formatting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HomologyPresentation:
    generators: int
    relators: tuple[tuple[int, ...], ...]  # rows = generators, cols = relators
    determinant: int
    snf_diagonal: tuple[int, ...]
    is_zhs: bool


def presentation_from_graph(graph: HeegaardGraph) -> HomologyPresentation:
    matrix = relator_matrix(graph)
    det = determinant(matrix)
    diag = smith_normal_form(matrix).diagonal
    return HomologyPresentation(
        generators=graph.genus,
        relators=tuple(tuple(row) for row in matrix),
        determinant=det,
        snf_diagonal=diag,
        is_zhs=abs(det) == 1,
    )


def relator_text(matrix: Matrix, col: int) -> str:
    parts = []
    for i in range(len(matrix)):
        c = matrix[i][col]
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        if not parts:
            parts.append(("-" if c < 0 else "") + f"{mag}A{i + 1}")
        else:
            parts.append(("-" if c < 0 else "+") + f"{mag}A{i + 1}")
    return "".join(parts) if parts else "0"


def presentation_text(presentation: HomologyPresentation) -> str:
    g = presentation.generators
    matrix = [list(row) for row in presentation.relators]
    gens = ", ".join(f"A{i + 1}" for i in range(g))
    rels = ", ".join(relator_text(matrix, j) for j in range(g))
    if g == 0:
        return "⟨ | ⟩"
    return f"⟨{gens} | {rels}⟩"
