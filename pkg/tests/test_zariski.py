from fractions import Fraction
from random import Random

import pytest

from zdense.matrices import (
    GroupKind,
    Matrix,
    adjugate_inverse,
    determinant,
    multiply,
    random_word,
    validate,
)
from zdense.zariski import (
    Certainty,
    adjoint_matrices,
    general_zariski_dense,
    is_irreducible_algebra,
    lie_algebra_basis,
    lie_algebra_dimension,
    word_length,
    zariski_dense,
    _bareiss_rank,
)

S = Matrix([[0, -1], [1, 0]])
T = Matrix([[1, 1], [0, 1]])


def test_word_length_formula():
    assert word_length("1e-6") == 139  # ceil(10 * ln 1e6)
    assert word_length("0.9") == 16  # floor kicks in
    assert word_length("1e-6", Fraction("4.3")) == 60
    with pytest.raises(ValueError):
        word_length("1e-6", 0)


def test_bareiss_rank_matches_fraction_elimination():
    from fractions import Fraction as F

    def fraction_rank(rows):
        m = [[F(x) for x in r] for r in rows]
        rank = 0
        for col in range(len(m[0])):
            piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            inv = m[rank][col]
            m[rank] = [x / inv for x in m[rank]]
            for i in range(len(m)):
                if i != rank and m[i][col]:
                    c = m[i][col]
                    m[i] = [a - c * b for a, b in zip(m[i], m[rank])]
            rank += 1
        return rank

    rng = Random(31)
    for _ in range(80):
        nrows = rng.randrange(1, 8)
        ncols = rng.randrange(1, 8)
        rows = [[rng.randrange(-6, 7) for _ in range(ncols)] for _ in range(nrows)]
        rank, pivots = _bareiss_rank(rows)
        assert rank == fraction_rank(rows)
        assert len(pivots) == rank
        if rank:
            sub_rank, _ = _bareiss_rank([rows[i] for i in pivots])
            assert sub_rank == rank  # the kept rows really are independent


def test_irreducible_algebra_examples():
    res = is_irreducible_algebra([S, T], 2)
    assert res.irreducible and res.certain and res.algebra_dimension == 4
    res = is_irreducible_algebra([T, Matrix([[1, 2], [0, 1]])], 2)
    assert not res.irreducible and res.certain  # common invariant line e1
    res = is_irreducible_algebra([Matrix.identity(2)], 2)
    assert not res.irreducible and res.algebra_dimension == 1
    with pytest.raises(ValueError):
        is_irreducible_algebra([S], 3)


def test_irreducible_algebra_scalars_on_line():
    res = is_irreducible_algebra([Matrix([[5]])], 1)
    assert res.irreducible  # M_1 is the scalars


def test_lie_algebra_basis_shapes():
    for kind, dim in ((GroupKind.SPECIAL_LINEAR, 2), (GroupKind.SPECIAL_LINEAR, 3),
                      (GroupKind.SYMPLECTIC, 2), (GroupKind.SYMPLECTIC, 4),
                      (GroupKind.SYMPLECTIC, 6)):
        basis = lie_algebra_basis(kind, dim)
        expected = lie_algebra_dimension(kind, dim)
        assert len(basis) == expected
        vecs = [b.flatten() for b in basis]
        rank, _ = _bareiss_rank(vecs)
        assert rank == expected  # linearly independent
        if kind is GroupKind.SPECIAL_LINEAR:
            for b in basis:
                assert sum(b.rows[i][i] for i in range(dim)) == 0
        else:
            from zdense.matrices import symplectic_form

            j = symplectic_form(dim)
            for b in basis:
                lhs = multiply(b.transpose(), j)
                rhs = multiply(j, b)
                total = Matrix(
                    [
                        [lhs.rows[r][c] + rhs.rows[r][c] for c in range(dim)]
                        for r in range(dim)
                    ]
                )
                assert all(v == 0 for row in total.rows for v in row)
    with pytest.raises(ValueError):
        lie_algebra_basis(GroupKind.SPECIAL_LINEAR, 1)


def test_adjoint_of_shear_matches_hand_computation(sl2):
    gs = validate(GroupKind.SPECIAL_LINEAR, 2, [T])
    assert adjoint_matrices(gs)[0] == Matrix([[1, -2, -1], [0, 1, 1], [0, 0, 1]])


def test_adjoint_identity_and_inverse(sl3, sp4):
    for gs in (sl3, sp4):
        ads = adjoint_matrices(gs)
        ident = Matrix.identity(lie_algebra_dimension(gs.kind, gs.dim))
        for ad, g, g_inv in zip(ads, gs.generators, gs.inverses):
            inv_gs = validate(gs.kind, gs.dim, [g_inv])
            ad_inv = adjoint_matrices(inv_gs)[0]
            assert multiply(ad, ad_inv) == ident
            assert determinant(ad) == 1


def _sp6():
    j = [[0] * 6 for _ in range(6)]
    for i in range(3):
        j[i][3 + i] = 1
        j[3 + i][i] = -1
    n1 = [[1 if a == b else 0 for b in range(6)] for a in range(6)]
    n1[0][3] = 1  # [[I, E_11], [0, I]]
    n2 = [[1 if a == b else 0 for b in range(6)] for a in range(6)]
    n2[1][5] = 1
    n2[2][4] = 1  # symmetric block E_23 + E_32
    return validate(GroupKind.SYMPLECTIC, 6, [Matrix(j), Matrix(n1), Matrix(n2)])


def test_adjoint_is_multiplicative(sl3, sp4):
    rng = Random(606)
    for gs in (sl3, sp4, _sp6()):
        for _ in range(20):
            g = random_word(gs, rng.randrange(1, 6), rng)
            h = random_word(gs, rng.randrange(1, 6), rng)
            ad = lambda m: adjoint_matrices(validate(gs.kind, gs.dim, [m]))[0]
            assert ad(multiply(g, h)) == multiply(ad(g), ad(h))


def test_zariski_dense_sl2(sl2):
    v = zariski_dense(sl2, "1e-6", Random(1000))
    assert v.dense and v.certainty is Certainty.CERTAIN
    assert v.epsilon == Fraction(1, 10**6)
    steps = [s["step"] for s in v.trail]
    assert steps.count("sample_word") == 2
    assert "commutation_check" in steps
    assert steps.count("galois_certificate") == 2
    assert steps.count("finite_order_guard") == 2  # dim 2 guard ran


def test_zariski_dense_heisenberg(heisenberg):
    for seed in range(5):
        v = zariski_dense(heisenberg, "1e-6", Random(seed))
        assert not v.dense
        assert v.epsilon == Fraction(1, 10**6)


def test_zariski_commuting_pair_fails_at_gate():
    gs = validate(GroupKind.SPECIAL_LINEAR, 2, [T])
    v = zariski_dense(gs, "1e-6", Random(3))
    assert not v.dense and v.certainty is Certainty.MONTE_CARLO
    gate = [s for s in v.trail if s["step"] == "commutation_check"]
    assert gate and gate[0]["commute"]


def test_zariski_finite_order_guard_fires(sl2):
    # seed found by scanning: both words certify S_2 but one is elliptic
    v = zariski_dense(sl2, "1e-2", Random(4))
    fired = [
        s for s in v.trail if s["step"] == "finite_order_guard" and s["cyclotomic"]
    ]
    assert fired and not v.dense


def test_zariski_dense_sp4(sp4):
    v = zariski_dense(sp4, "1e-6", Random(4001), word_constant=Fraction("4.3"))
    assert v.dense and v.certainty is Certainty.CERTAIN
    gate = [s for s in v.trail if s["step"] == "standard_rep_irreducibility"]
    assert gate and gate[0]["irreducible"] and gate[0]["algebra_dimension"] == 16


def test_zariski_block_sl2_pair_in_sp4_not_dense():
    # two commuting SL(2) blocks on the hyperbolic planes (1,3) and (2,4):
    # standard action is reducible, so density must never be claimed
    def embed(m, coords):
        rows = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
        for a, ra in enumerate(coords):
            for b, rb in enumerate(coords):
                rows[ra][rb] = m.rows[a][b]
        return Matrix(rows)

    gens = [embed(S, (0, 2)), embed(T, (0, 2)), embed(S, (1, 3)), embed(T, (1, 3))]
    gs = validate(GroupKind.SYMPLECTIC, 4, gens)
    assert not is_irreducible_algebra(gens, 4).irreducible
    for seed in range(8):
        assert not zariski_dense(gs, "1e-4", Random(seed)).dense


def test_zariski_block_sl2_in_sl3_not_dense():
    # SL(2) x 1 block subgroup: words always keep the eigenvalue 1, so the
    # cubic characteristic polynomial is reducible and never certifies S_3
    def pad(m):
        return Matrix([[m.rows[0][0], m.rows[0][1], 0], [m.rows[1][0], m.rows[1][1], 0], [0, 0, 1]])

    gs = validate(GroupKind.SPECIAL_LINEAR, 3, [pad(S), pad(T)])
    for seed in range(8):
        assert not zariski_dense(gs, "1e-4", Random(seed)).dense


def test_zariski_trivial_group_dim1():
    gs = validate(GroupKind.SPECIAL_LINEAR, 1, [Matrix([[1]])])
    assert zariski_dense(gs, "1e-6", Random(0)).dense
    assert general_zariski_dense(gs, "1e-6", Random(0)).dense


def test_zariski_seed_determinism(sl2, sp4):
    for gs in (sl2, sp4):
        a = zariski_dense(gs, "1e-6", Random(77))
        b = zariski_dense(gs, "1e-6", Random(77))
        assert a == b


def test_zariski_trail_witnesses_reproduce(sl2):
    from zdense.modular import factor_degrees_mod
    from zdense.polynomials import IntPoly

    v = zariski_dense(sl2, "1e-6", Random(1000))
    for step in v.trail:
        if step["step"] != "galois_certificate":
            continue
        f = IntPoly(step["charpoly"])
        for witness in step["verdict"]["witnesses"]:
            assert factor_degrees_mod(f, witness["prime"]) == tuple(witness["degrees"])


def test_general_zariski_dense(sl2, heisenberg):
    v = general_zariski_dense(sl2, "1e-6", Random(11))
    assert v.dense and v.certainty is Certainty.CERTAIN
    gate = [s for s in v.trail if s["step"] == "adjoint_irreducibility"]
    assert gate and gate[0]["algebra_dimension"] == 9

    v = general_zariski_dense(heisenberg, "1e-6", Random(12))
    assert not v.dense and v.certainty is Certainty.MONTE_CARLO
    gate = [s for s in v.trail if s["step"] == "cyclotomic_check"]
    assert gate and gate[0]["cyclotomic"]
    # unipotent word: charpoly (x-1)^3
    assert gate[0]["charpoly"] == [-1, 3, -3, 1]


def test_general_zariski_single_rotation():
    gs = validate(GroupKind.SPECIAL_LINEAR, 2, [S])
    v = general_zariski_dense(gs, "1e-6", Random(13))
    assert not v.dense
    gate = [s for s in v.trail if s["step"] == "cyclotomic_check"]
    assert gate and gate[0]["cyclotomic"]  # powers of S have cyclotomic charpoly


def test_general_zariski_sp4(sp4):
    v = general_zariski_dense(sp4, "1e-6", Random(14))
    assert v.dense
    gate = [s for s in v.trail if s["step"] == "adjoint_irreducibility"]
    assert gate[0]["algebra_dimension"] == 100  # 10x10 adjoint fills up


def test_epsilon_validation(sl2):
    for bad in (0, 1, 2, -0.5):
        with pytest.raises(ValueError):
            zariski_dense(sl2, bad, Random(0))
