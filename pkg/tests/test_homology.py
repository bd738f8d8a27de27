import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import GF as sympy_GF
from sympy import Matrix
from sympy.polys.matrices import DomainMatrix

from cointerval import (
    GF2,
    GF3,
    GF32003,
    QQ,
    Field,
    Hypergraph,
    acyclicity_status,
    boundary_matrices,
    build_complex,
    homology_ranks,
    is_acyclic,
)
from cointerval._kernels import nullspace_rational, rank_bareiss, rank_mod
from cointerval.homology import ACYCLIC, EMPTY, NOT_ACYCLIC

ALL_FIELDS = (GF2, GF3, GF32003, QQ)


def test_field_validation():
    assert str(QQ) == "Q" and str(GF2) == "GF(2)"
    with pytest.raises(ValueError):
        Field(4)
    with pytest.raises(ValueError):
        Field(-3)
    assert Field(32003) == GF32003


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


@given(matrices)
@settings(max_examples=80, deadline=None)
def test_rank_kernels_against_sympy(rows):
    ncols = len(rows[0])
    assert rank_bareiss(rows) == Matrix(rows).rank()
    for p in (2, 3, 32003):
        dom = DomainMatrix.from_list(rows, sympy_GF(p))
        assert rank_mod(rows, p) == dom.rank(), (rows, p)
    null = nullspace_rational(rows, ncols)
    assert len(null) == ncols - Matrix(rows).rank()
    for vec in null:
        for row in rows:
            assert sum(a * x for a, x in zip(row, vec)) == 0


def test_rank_mod_catches_characteristic():
    rows = [[2]]
    assert rank_mod(rows, 2) == 0
    assert rank_mod(rows, 3) == 1
    assert rank_bareiss(rows) == 1


def test_two_points_not_acyclic(two_k2):
    X = build_complex(two_k2)
    assert X.f_vector() == (2,)
    for fld in ALL_FIELDS:
        assert acyclicity_status(X, fld) == NOT_ACYCLIC
        assert homology_ranks(X, fld) == [1]


def test_cointerval_complexes_acyclic(copath5, k4_3):
    for H in (copath5, k4_3):
        X = build_complex(H)
        for fld in ALL_FIELDS:
            assert acyclicity_status(X, fld) == ACYCLIC
            assert is_acyclic(X, fld)


def test_empty_complex_is_flagged(copath5):
    X = build_complex(Hypergraph(2, [1, 2], []))
    assert acyclicity_status(X, GF2) == EMPTY
    assert not is_acyclic(X, GF2)


def test_single_point_acyclic():
    X = build_complex(Hypergraph(2, [1, 2], [(1, 2)]))
    for fld in ALL_FIELDS:
        assert acyclicity_status(X, fld) == ACYCLIC


def test_circle_homology(copath5):
    # strict downset below the full label of a square-ish region gives a circle
    X = build_complex(copath5)
    Y = X.downset_lt(frozenset({1, 2, 3, 4, 5}))
    for fld in ALL_FIELDS:
        ranks = homology_ranks(Y, fld)
        assert ranks == [0, 0, 1]  # the 2-sphere-less shell of the removed 3-cell


def test_boundary_matrices_shape(copath5):
    X = build_complex(copath5)
    cc = boundary_matrices(X, GF2)
    assert cc.sizes == {0: 7, 1: 11, 2: 6, 3: 1}
    # one row per cell, columns over the basis one degree down;
    # the augmentation sends every vertex to the empty cell
    assert cc.matrices[0] == [[1]] * 7
    assert len(cc.matrices[1]) == 11 and len(cc.matrices[1][0]) == 7


def test_characteristic_independence_on_downsets(copath5, k4_3):
    for H in (copath5, k4_3):
        X = build_complex(H)
        for alpha in X.lcm_lattice():
            per_field = {
                fld: homology_ranks(X.downset_leq(alpha), fld)
                for fld in ALL_FIELDS
            }
            assert len(set(map(tuple, per_field.values()))) == 1, (
                H,
                alpha,
                per_field,
            )


def test_complex_boundary_ranks_match_sympy(copath5):
    X = build_complex(copath5)
    cc = boundary_matrices(X, QQ)
    for mat in cc.matrices.values():
        if mat and mat[0]:
            assert rank_bareiss(mat) == Matrix(mat).rank()


def test_random_complex_ranks_match_sympy():
    rng = random.Random(7)
    import itertools

    universe = list(itertools.combinations(range(1, 7), 2))
    for _ in range(10):
        edges = [e for e in universe if rng.random() < 0.45]
        X = build_complex(Hypergraph(2, range(1, 7), edges))
        if X.is_empty:
            continue
        for fld, p in ((GF2, 2), (GF3, 3)):
            cc = boundary_matrices(X, fld)
            for mat in cc.matrices.values():
                if mat and mat[0]:
                    dom = DomainMatrix.from_list(mat, sympy_GF(p))
                    assert rank_mod(mat, p) == dom.rank()
