import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form

from insertion_complex.blocks import parse_block
from insertion_complex.chains import (
    Chain,
    boundary_block,
    boundary_chain,
    format_chain,
    is_cycle,
    link_chain,
    parse_chain,
    star_chain,
)
from insertion_complex.complex import build_complex
from insertion_complex.homology import (
    betti_mod2,
    boundary_matrix,
    homology_from_boundaries,
    homology_Z,
    homology_Z2,
    is_boundary,
)
from insertion_complex.smith import Lattice, invariant_factors, rank, rank_mod2, smith_diagonal

from conftest import CIRCLE_MONOMIAL, CUBE_WORDS, FOUR_CYCLE, SPHERE8, valid_blocks, word_sets

P = parse_block


def C(*items):
    return parse_chain(items)


# -- oracles -------------------------------------------------------------------------

def sympy_factors(columns, n_rows):
    """Nonzero |diagonal| of sympy's Smith normal form."""
    if not columns or n_rows == 0:
        return []
    M = sympy.zeros(n_rows, len(columns))
    for j, col in enumerate(columns):
        for i, v in col.items():
            M[i, j] = v
    D = smith_normal_form(M, domain=sympy.ZZ)
    return sorted(abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0)


def gf2_rank(columns, n_rows):
    rows = [[0] * len(columns) for _ in range(n_rows)]
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows[i][j] = v % 2
    r = 0
    for c in range(len(columns)):
        piv = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(n_rows):
            if i != r and rows[i][c]:
                rows[i] = [(x + y) % 2 for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


sparse_matrices = st.integers(0, 6).flatmap(
    lambda n: st.lists(
        st.dictionaries(st.integers(0, max(n - 1, 0)), st.integers(-6, 6), max_size=n), max_size=6
    ).map(lambda cols: (n, [c for c in cols] if n else [{} for _ in cols]))
)


# -- boundary of blocks ---------------------------------------------------------------

def test_boundary_examples():
    assert boundary_block(P("(a)(b)")) == C((1, "a(b)"), (-1, "(b)"), (-1, "(a)b"), (1, "(a)"))
    assert boundary_block(P("x(a)y")) == C((1, "xay"), (-1, "xy"))
    assert boundary_block(P("(a)b(a)")) == C((1, "ab(a)"), (-1, "b(a)"), (-1, "(a)ba"), (1, "(a)b"))
    with pytest.raises(ValueError):
        boundary_block(P("ab"))


def test_boundary_is_linear_and_squares_to_zero():
    s = P("(a)(b)")
    assert boundary_chain(2 * Chain.of(s)) == 2 * boundary_block(s)
    assert boundary_chain(boundary_block(P("(a)(b)(c)"))) == Chain()
    assert boundary_chain(Chain()) == Chain()


@given(valid_blocks(symbols="abc", max_dim=5, max_seg=4))
def test_boundary_squares_to_zero(sigma):
    if sigma.dim >= 1:
        assert not boundary_chain(boundary_block(sigma))


def test_chain_arithmetic_and_text():
    c = C((1, "(a)ab"), (2, "a(a)b"))
    assert c == C((3, "a(a)b"))
    assert c[P("(a)ab")] == 3
    assert (c - c) == Chain() and not (c - c)
    assert format_chain(C((1, "(a)"), (-2, "(b)"))) == "(a) - 2(b)"
    assert format_chain(C((-1, "(a)"))) == "-(a)"
    assert format_chain(Chain()) == "0"
    assert parse_chain(c.to_list()) == c
    with pytest.raises(ValueError):
        C((1, "a"), (1, "(a)"))
    with pytest.raises(ValueError):
        C((1, "(a)(a)"))


# -- boundary matrices -------------------------------------------------------------

def test_four_cycle_boundary_matrix():
    K = build_complex(FOUR_CYCLE)
    B = boundary_matrix(K, 1)
    assert B.shape == (4, 4)
    for col in B.columns:
        assert sorted(col.values()) == [-1, 1]
    assert rank(B.columns) == 3


def test_boundary_matrix_without_blocks():
    K = build_complex(["ab"])
    assert boundary_matrix(K, 1).shape == (1, 0)
    with pytest.raises(IndexError):
        boundary_matrix(K, 2)


@given(word_sets("ab", 4, 10))
def test_consecutive_boundary_matrices_compose_to_zero(words):
    K = build_complex(words)
    for k in range(1, K.dim):
        A = sympy.Matrix(boundary_matrix(K, k).dense())
        B = sympy.Matrix(boundary_matrix(K, k + 1).dense())
        assert (A * B).is_zero_matrix


# -- Smith normal form ---------------------------------------------------------------

@given(sparse_matrices)
def test_invariant_factors_match_sympy(data):
    n, cols = data
    ours = invariant_factors(cols)
    assert ours == sorted(ours)
    assert all(b % a == 0 for a, b in zip(ours, ours[1:]))
    assert ours == sympy_factors(cols, n)


@given(sparse_matrices)
def test_dense_smith_diagonal_matches(data):
    n, cols = data
    dense = [[col.get(i, 0) for col in cols] for i in range(n)]
    assert smith_diagonal(dense) == sympy_factors(cols, n)


@given(sparse_matrices)
def test_rank_mod2_matches_dense_elimination(data):
    n, cols = data
    assert rank_mod2(cols) == gf2_rank(cols, n)


@given(word_sets("abc", 3, 10))
def test_boundary_invariants_match_sympy(words):
    K = build_complex(words)
    for k in range(1, K.dim + 1):
        B = boundary_matrix(K, k)
        assert invariant_factors(B.columns) == sympy_factors(list(B.columns), B.shape[0])


@given(sparse_matrices, st.lists(st.integers(-3, 3), max_size=6), st.dictionaries(st.integers(0, 5), st.integers(-5, 5)))
def test_lattice_membership(data, coefs, probe):
    n, cols = data
    L = Lattice(cols)
    combo: dict[int, int] = {}
    for c, col in zip(coefs, cols):
        for i, v in col.items():
            combo[i] = combo.get(i, 0) + c * v
    assert combo in L
    # a probe lies in the lattice iff appending it changes no invariant factor
    probe = {i: v for i, v in probe.items() if i < n and v}
    if n:
        expected = sympy_factors(cols, n) == sympy_factors(cols + [probe], n)
        assert (probe in L) == expected


# -- homology -----------------------------------------------------------------------

def test_homology_fixtures():
    assert str(homology_Z(build_complex(FOUR_CYCLE))) == "(Z, Z)"
    H = homology_Z(build_complex(SPHERE8))
    assert H.betti == (1, 0, 1) and H.torsion == ((), (), ())
    assert str(H) == "(Z, 0, Z)"
    assert str(homology_Z(build_complex(CIRCLE_MONOMIAL))) == "(Z, Z)"
    assert str(homology_Z(build_complex(CUBE_WORDS))) == "(Z)"
    assert homology_Z(build_complex(["", "a", "b", "ab", "ba"])).is_trivial()


def test_homology_z2_fixtures():
    assert homology_Z2(build_complex(FOUR_CYCLE)) == (1, 1)
    assert homology_Z2(build_complex(["abc"])) == (1,)
    assert homology_Z2(build_complex(SPHERE8)) == (1, 0, 1)


def test_homology_of_empty_complex():
    H = homology_Z(build_complex([]))
    assert H.betti == () and str(H) == "()" and H.to_dict() == {"dims": [], "euler": 0}


def test_torsion_is_reported():
    # Z --2--> Z has H0 = Z/2
    H = homology_from_boundaries([1, 1], [[{0: 2}]])
    assert H.betti == (0, 0) and H.torsion == ((2,), ())
    assert str(H) == "(Z/2)"
    assert betti_mod2([1, 1], [[{0: 2}]]) == (1, 1)


def test_homology_report_document():
    doc = homology_Z(build_complex(FOUR_CYCLE)).to_dict()
    assert doc == {
        "dims": [{"k": 0, "betti": 1, "torsion": []}, {"k": 1, "betti": 1, "torsion": []}],
        "euler": 0,
    }


@given(word_sets("abc", 3, 12))
def test_euler_characteristic_and_z2_bound(words):
    K = build_complex(words)
    H = homology_Z(K)
    assert H.euler == sum((-1) ** k * b for k, b in enumerate(H.betti))
    b2 = homology_Z2(K)
    assert all(x >= y for x, y in zip(b2, H.betti))


@given(word_sets("abc", 4, 8), st.text("abc", max_size=2), st.text("abc", max_size=2), st.permutations("abc"))
def test_homology_invariant_under_transforms(words, prefix, suffix, perm):
    H = homology_Z(build_complex(words)).trimmed()
    assert homology_Z(build_complex({w[::-1] for w in words})).trimmed() == H
    assert homology_Z(build_complex({prefix + w + suffix for w in words})).trimmed() == H
    table = str.maketrans("abc", "".join(perm))
    assert homology_Z(build_complex({w.translate(table) for w in words})).trimmed() == H


# -- cycles, boundaries, stars and links ----------------------------------------------

def test_is_boundary_examples():
    K = build_complex(FOUR_CYCLE)
    loop = C((1, "(a)b"), (-1, "b(a)"), (1, "(b)a"), (-1, "a(b)"))
    assert is_cycle(loop)
    assert not is_boundary(K, loop)
    S = build_complex(["", "a", "b", "ab", "ba"])
    for sigma in S.k_blocks(2):
        d = boundary_block(sigma)
        assert is_cycle(d) and is_boundary(S, d)
    assert is_cycle(Chain()) and is_boundary(S, Chain())
    with pytest.raises(ValueError):
        is_boundary(K, C((1, "(c)")))


def sphere_cycle():
    K = build_complex(SPHERE8)
    B = sympy.Matrix(boundary_matrix(K, 2).dense())
    (v,) = B.nullspace()
    v = v / sympy.gcd(list(v))
    return K, Chain({sigma: int(x) for sigma, x in zip(K.k_blocks(2), v)})


def test_sphere_generator_is_not_a_boundary():
    K, gamma = sphere_cycle()
    assert len(gamma) == 6 and is_cycle(gamma)
    assert not is_boundary(K, gamma)
    assert not is_boundary(K, 2 * gamma) and is_cycle(2 * gamma)


def test_star_and_link():
    sigma = P("(a)(b)")
    g = Chain.of(sigma)
    assert star_chain(g, "ab") == g
    assert star_chain(g, "zz") == Chain()
    _, gamma = sphere_cycle()
    for w in ("aba", "bab", "aa", "bb"):
        link = link_chain(gamma, w)
        assert link and is_cycle(link)
        assert star_chain(link, w) == Chain()


def test_random_chains_boundary_membership(rng):
    # boundaries of random 2-chains are boundaries; checked on a random word set
    words = {"".join(rng.choice("ab") for _ in range(rng.randint(0, 4))) for _ in range(14)}
    K = build_complex(words)
    squares = K.k_blocks(2)
    for _ in range(20):
        c = Chain({s: rng.randint(-2, 2) for s in squares})
        assert is_boundary(K, boundary_chain(c))
