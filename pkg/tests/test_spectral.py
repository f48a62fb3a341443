import math
import random
from fractions import Fraction as Fr

import pytest
from oracles import charpoly_bruteforce

from randic import (
    ConvergenceError,
    DomainError,
    FamilySpec,
    RatPoly,
    SymMatrix,
    adjacency_matrix,
    charpoly_exact,
    delete_edge,
    disjoint_union,
    eigenvalues,
    generate,
    graph_energy,
    permute_vertices,
    randic_energy,
    randic_index,
    randic_matrix,
)

SQRT2 = math.sqrt(2.0)

SMALL_SPECS = [
    FamilySpec("path", 2),
    FamilySpec("path", 5),
    FamilySpec("cycle", 3),
    FamilySpec("cycle", 6),
    FamilySpec("star", 5),
    FamilySpec("complete", 4),
    FamilySpec("complete_bipartite", 3, m=2),
    FamilySpec("friendship", 2),
    FamilySpec("dutch4", 2),
    FamilySpec("complete", 5, minus_edge=True),
    FamilySpec("complete_bipartite", 3, m=2, minus_edge=True),
    FamilySpec("star", 5, minus_edge=True),
]


# ---------------------------------------------------------------- matrices


def test_randic_matrix_path3():
    mat = randic_matrix(generate(FamilySpec("path", 3)))
    w = 1.0 / SQRT2
    assert mat.entries[0][1] == pytest.approx(0.7071067811865476, abs=1e-15)
    assert mat.entries[0][1] == mat.entries[1][0] == w
    assert mat.entries[1][2] == mat.entries[2][1] == w
    assert mat.entries[0][2] == 0.0
    assert all(mat.entries[i][i] == 0.0 for i in range(3))


def test_randic_matrix_complete3_and_star4():
    k3 = randic_matrix(generate(FamilySpec("complete", 3)))
    assert all(k3.entries[i][j] == 0.5 for i in range(3) for j in range(3) if i != j)
    s4 = randic_matrix(generate(FamilySpec("star", 4)))
    w = 1.0 / math.sqrt(3.0)
    assert all(s4.entries[0][j] == w for j in range(1, 4))
    assert s4.entries[1][2] == 0.0


def test_randic_matrix_isolated_rows_zero():
    g = delete_edge(generate(FamilySpec("star", 4)), 0, 1)
    mat = randic_matrix(g)
    assert all(v == 0.0 for v in mat.entries[1])


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_randic_matrix_exactly_symmetric(spec):
    mat = randic_matrix(generate(spec))
    assert mat.is_symmetric()


def test_randic_index_examples():
    assert randic_index(generate(FamilySpec("complete", 4))) == pytest.approx(2.0, abs=1e-15)
    assert randic_index(generate(FamilySpec("path", 3))) == pytest.approx(SQRT2, abs=1e-15)
    assert randic_index(generate(FamilySpec("cycle", 5))) == pytest.approx(2.5, abs=0)


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_randic_index_is_half_matrix_sum(spec):
    g = generate(spec)
    mat = randic_matrix(g)
    total = sum(sum(row) for row in mat.entries)
    assert randic_index(g) == pytest.approx(total / 2.0, abs=1e-12)


# ---------------------------------------------------------------- exact charpoly


def test_charpoly_known_values():
    assert charpoly_exact(generate(FamilySpec("complete", 3))) == RatPoly(
        [Fr(-1, 4), Fr(-3, 4), 0, 1]
    )
    assert charpoly_exact(generate(FamilySpec("path", 3))) == RatPoly([0, -1, 0, 1])
    assert charpoly_exact(generate(FamilySpec("cycle", 4))) == RatPoly([0, 0, -1, 0, 1])
    assert charpoly_exact(generate(FamilySpec("path", 4))) == RatPoly(
        [Fr(1, 4), 0, Fr(-5, 4), 0, 1]
    )


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_charpoly_matches_cofactor_oracle(spec):
    g = generate(spec)
    if g.n > 7:
        pytest.skip("oracle limited to small orders")
    assert charpoly_exact(g) == charpoly_bruteforce(g)


def test_charpoly_oracle_on_deleted_edges():
    for base, edge in [
        (FamilySpec("path", 5), (1, 2)),
        (FamilySpec("star", 5), (0, 1)),
        (FamilySpec("cycle", 5), (0, 1)),
    ]:
        g = delete_edge(generate(base), *edge)
        assert charpoly_exact(g) == charpoly_bruteforce(g)


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_charpoly_monic_degree_and_coefficient_identities(spec):
    g = generate(spec)
    p = charpoly_exact(g)
    assert p.degree == g.n
    assert p.is_monic
    # zero trace and the exact second coefficient identity
    assert p.coefficient(g.n - 1) == 0
    expected = -sum(Fr(1, g.degrees[u] * g.degrees[v]) for u, v in g.edges)
    assert p.coefficient(g.n - 2) == expected


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_charpoly_label_invariant(spec):
    g = generate(spec)
    p = charpoly_exact(g)
    rng = random.Random(hash(spec) & 0xFFFF)
    for _ in range(3):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert charpoly_exact(permute_vertices(g, perm)) == p


def test_charpoly_isolated_vertices_factor_lambda():
    g = delete_edge(generate(FamilySpec("star", 4)), 0, 1)
    p = charpoly_exact(g)
    assert p.coefficient(0) == 0
    assert p == charpoly_exact(generate(FamilySpec("star", 3))).shift(1)


def test_charpoly_empty_and_edgeless_graphs():
    from randic import Graph

    assert charpoly_exact(Graph(0, frozenset())) == RatPoly.one()
    assert charpoly_exact(Graph(3, frozenset())) == RatPoly.monomial(3)


def test_charpoly_order_cap():
    g = generate(FamilySpec("path", 70))
    with pytest.raises(DomainError):
        charpoly_exact(g)
    assert charpoly_exact(g, order_cap=70).degree == 70


# ---------------------------------------------------------------- eigensolver


def test_eigenvalues_exchange_matrix():
    spec = eigenvalues(SymMatrix(((0.0, 1.0), (1.0, 0.0))))
    assert spec.values == pytest.approx((1.0, -1.0), abs=1e-12)


def test_eigenvalues_randic_k3():
    spec = eigenvalues(randic_matrix(generate(FamilySpec("complete", 3))))
    assert spec.values == pytest.approx((1.0, -0.5, -0.5), abs=1e-12)


def test_eigenvalues_randic_c4():
    spec = eigenvalues(randic_matrix(generate(FamilySpec("cycle", 4))))
    assert spec.values == pytest.approx((1.0, 0.0, 0.0, -1.0), abs=1e-12)


@pytest.mark.parametrize("n", [3, 5, 8, 12])
def test_eigenvalues_cycle_analytic(n):
    # normalized cycle matrix has spectrum cos(2πk/n)
    got = eigenvalues(randic_matrix(generate(FamilySpec("cycle", n)))).values
    want = sorted((math.cos(2.0 * math.pi * k / n) for k in range(n)), reverse=True)
    assert got == pytest.approx(want, abs=1e-11)


@pytest.mark.parametrize("n", [2, 4, 7, 12])
def test_eigenvalues_path_adjacency_analytic(n):
    got = eigenvalues(adjacency_matrix(generate(FamilySpec("path", n)))).values
    want = sorted((2.0 * math.cos(j * math.pi / (n + 1)) for j in range(1, n + 1)), reverse=True)
    assert got == pytest.approx(want, abs=1e-11)


def test_eigenvalues_sorted_and_sized():
    spec = eigenvalues(randic_matrix(generate(FamilySpec("dutch4", 3))))
    vals = spec.values
    assert len(vals) == 10
    assert all(vals[i] >= vals[i + 1] for i in range(len(vals) - 1))


def test_eigenvalues_rejects_bad_input():
    with pytest.raises(ValueError):
        eigenvalues(SymMatrix(((0.0, 1.0), (0.5, 0.0))))
    with pytest.raises(ValueError):
        eigenvalues(SymMatrix(((1.0,),)), tol=0.0)


def test_eigenvalues_trivial_orders():
    assert eigenvalues(SymMatrix(())).values == ()
    assert eigenvalues(SymMatrix(((3.5,),))).values == (3.5,)


def test_convergence_error_carries_residual():
    mat = SymMatrix(((0.0, 1.0), (1.0, 0.0)))
    with pytest.raises(ConvergenceError) as err:
        eigenvalues(mat, max_sweeps=0)
    assert err.value.residual == pytest.approx(SQRT2, abs=1e-12)


# ---------------------------------------------------------------- energies


def test_randic_energy_examples():
    assert randic_energy(generate(FamilySpec("complete", 5))) == pytest.approx(2.0, abs=1e-10)
    assert randic_energy(generate(FamilySpec("friendship", 3))) == pytest.approx(4.0, abs=1e-10)
    assert randic_energy(generate(FamilySpec("path", 5))) == pytest.approx(
        3.414213562373095, abs=1e-10
    )


def test_graph_energy_examples():
    assert graph_energy(generate(FamilySpec("complete", 2))) == pytest.approx(2.0, abs=1e-10)
    assert graph_energy(generate(FamilySpec("path", 3))) == pytest.approx(
        2.8284271247461903, abs=1e-10
    )
    assert graph_energy(generate(FamilySpec("cycle", 4))) == pytest.approx(4.0, abs=1e-10)


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_spectrum_trace_and_frobenius(spec):
    g = generate(spec)
    vals = eigenvalues(randic_matrix(g)).values
    assert sum(vals) == pytest.approx(0.0, abs=1e-9)
    frob = sum(2.0 / (g.degrees[u] * g.degrees[v]) for u, v in g.edges)
    assert sum(v * v for v in vals) == pytest.approx(frob, abs=1e-9)


@pytest.mark.parametrize(
    "spec",
    [FamilySpec("path", 9), FamilySpec("cycle", 7), FamilySpec("friendship", 4)],
)
def test_connected_randic_spectrum_peaks_at_one(spec):
    vals = eigenvalues(randic_matrix(generate(spec))).values
    assert vals[0] == pytest.approx(1.0, abs=1e-9)
    assert all(-1.0 - 1e-9 <= v <= 1.0 + 1e-9 for v in vals)


def test_energy_additive_over_disjoint_union():
    rng = random.Random(5)
    pool = [
        generate(FamilySpec("path", 4)),
        generate(FamilySpec("cycle", 5)),
        generate(FamilySpec("star", 6)),
        generate(FamilySpec("friendship", 2)),
    ]
    for _ in range(6):
        g1, g2 = rng.choice(pool), rng.choice(pool)
        whole = randic_energy(disjoint_union(g1, g2))
        assert whole == pytest.approx(randic_energy(g1) + randic_energy(g2), abs=1e-9)
