"""Degree-normalized (Randic) matrices, exact characteristic polynomials,
a cyclic Jacobi eigensolver, and the two spectral energies.

The Randic matrix has entry 1/sqrt(d_i*d_j) on adjacent pairs. Its entries
are irrational, but it is similar (via D^{1/2}) to the random-walk matrix
W = D^{-1}A whose entries are rational, so the characteristic polynomial is
computed exactly on W with arbitrary-precision arithmetic. Isolated
vertices are split off first (each contributes one factor of λ, and D is
singular there).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConvergenceError, DomainError
from .graphs import Graph
from .ratpoly import RatPoly

DEFAULT_SOLVER_TOL = 1e-12
JACOBI_SWEEP_CAP = 100
EXACT_ORDER_CAP = 64


@dataclass(frozen=True)
class SymMatrix:
    """Dense symmetric matrix of floats (row-major tuple of row tuples)."""

    entries: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ValueError("matrix must be square")

    @property
    def order(self) -> int:
        return len(self.entries)

    def is_symmetric(self) -> bool:
        a = self.entries
        n = len(a)
        return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted non-increasing, multiplicities as repeats."""

    values: tuple[float, ...]

    def __post_init__(self):
        if any(self.values[i] < self.values[i + 1] for i in range(len(self.values) - 1)):
            raise ValueError("spectrum must be sorted non-increasing")

    def __len__(self) -> int:
        return len(self.values)


def randic_matrix(g: Graph) -> SymMatrix:
    """Matrix with (i,j) entry 1/sqrt(d_i*d_j) when i~j, else 0."""
    n = g.n
    degs = g.degrees
    rows = [[0.0] * n for _ in range(n)]
    for u, v in g.edges:
        w = 1.0 / math.sqrt(degs[u] * degs[v])
        rows[u][v] = w
        rows[v][u] = w
    return SymMatrix(tuple(tuple(r) for r in rows))


def adjacency_matrix(g: Graph) -> SymMatrix:
    """Plain 0/1 adjacency matrix."""
    n = g.n
    rows = [[0.0] * n for _ in range(n)]
    for u, v in g.edges:
        rows[u][v] = 1.0
        rows[v][u] = 1.0
    return SymMatrix(tuple(tuple(r) for r in rows))


def randic_index(g: Graph) -> float:
    """Sum over edges of 1/sqrt(d_i*d_j)."""
    degs = g.degrees
    return sum(1.0 / math.sqrt(degs[u] * degs[v]) for u, v in g.edges)


def _lcm_all(values) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


def _int_charpoly(n: int, sparse_rows: list[list[tuple[int, int]]]) -> list[int]:
    """Characteristic polynomial det(λI - M) of an integer matrix.

    Faddeev-LeVerrier trace recursion; every division is exact because the
    coefficients of an integer matrix are integers. Returns ascending
    coefficients c[0..n] with c[n] = 1. ``sparse_rows[i]`` lists the nonzero
    (column, value) pairs of row i.
    """
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    aux = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        prod = []
        for i in range(n):
            acc = [0] * n
            for j, a in sparse_rows[i]:
                row = aux[j]
                if a == 1:
                    acc = [x + y for x, y in zip(acc, row)]
                else:
                    acc = [x + a * y for x, y in zip(acc, row)]
            prod.append(acc)
        tr = sum(prod[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("trace recursion produced a non-exact division")
        c = -(tr // k)
        coeffs[n - k] = c
        if k < n:
            for i in range(n):
                prod[i][i] += c
            aux = prod
    return coeffs


def charpoly_exact(g: Graph, order_cap: int = EXACT_ORDER_CAP) -> RatPoly:
    """Monic degree-n characteristic polynomial of the Randic matrix, exact.

    Computed on the similar rational matrix W = D^{-1}A after splitting off
    isolated vertices (factor λ each). W is scaled by the lcm of the degrees
    so the trace recursion runs on integers; the coefficients are rescaled
    back exactly.
    """
    isolated = sum(1 for d in g.degrees if d == 0)
    core = [v for v in range(g.n) if g.degrees[v] > 0]
    k = len(core)
    if k > order_cap:
        raise DomainError(f"exact characteristic polynomial capped at order {order_cap} (got {k})")
    if k == 0:
        return RatPoly.one().shift(isolated)
    index = {v: i for i, v in enumerate(core)}
    degs = g.degrees
    scale = _lcm_all(degs[v] for v in core)
    # row i of the scaled walk matrix: scale/d_i at each neighbor column
    sparse_rows: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    for u, v in g.edges:
        sparse_rows[index[u]].append((index[v], scale // degs[u]))
        sparse_rows[index[v]].append((index[u], scale // degs[v]))
    ints = _int_charpoly(k, sparse_rows)
    coeffs = [Fraction(ints[j], scale ** (k - j)) for j in range(k + 1)]
    return RatPoly(coeffs).shift(isolated)


def eigenvalues(
    mat: SymMatrix,
    tol: float = DEFAULT_SOLVER_TOL,
    max_sweeps: int = JACOBI_SWEEP_CAP,
) -> Spectrum:
    """All eigenvalues of a symmetric matrix by cyclic-by-row Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm drops below ``tol``;
    exceeding ``max_sweeps`` raises ConvergenceError carrying the residual.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not mat.is_symmetric():
        raise ValueError("matrix is not symmetric")
    n = mat.order
    if n == 0:
        return Spectrum(())
    if n == 1:
        return Spectrum((mat.entries[0][0],))
    a = [list(row) for row in mat.entries]

    def off_norm() -> float:
        s = 0.0
        for i in range(n):
            ai = a[i]
            for j in range(i + 1, n):
                s += ai[j] * ai[j]
        return math.sqrt(2.0 * s)

    sweeps = 0
    while True:
        residual = off_norm()
        if residual < tol:
            break
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps (residual {residual:.3e})",
                residual,
            )
        sweeps += 1
        for p in range(n - 1):
            ap = a[p]
            for q in range(p + 1, n):
                apq = ap[q]
                if apq == 0.0:
                    continue
                aq = a[q]
                app = ap[p]
                aqq = aq[q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (tau - math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    if i == p or i == q:
                        continue
                    ai = a[i]
                    aip = ai[p]
                    aiq = ai[q]
                    x = c * aip - s * aiq
                    y = s * aip + c * aiq
                    ai[p] = x
                    ai[q] = y
                    ap[i] = x
                    aq[i] = y
                ap[p] = app - t * apq
                aq[q] = aqq + t * apq
                ap[q] = 0.0
                aq[p] = 0.0
    diag = sorted((a[i][i] for i in range(n)), reverse=True)
    return Spectrum(tuple(diag))


def randic_energy(g: Graph, tol: float = DEFAULT_SOLVER_TOL) -> float:
    """Sum of absolute eigenvalues of the Randic matrix."""
    return sum(abs(v) for v in eigenvalues(randic_matrix(g), tol).values)


def graph_energy(g: Graph, tol: float = DEFAULT_SOLVER_TOL) -> float:
    """Sum of absolute eigenvalues of the adjacency matrix."""
    return sum(abs(v) for v in eigenvalues(adjacency_matrix(g), tol).values)
