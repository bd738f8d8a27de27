import itertools

import pytest

from cointerval import (
    GF2,
    GF3,
    QQ,
    BettiTable,
    Hypergraph,
    PreconditionError,
    betti_from_downset_homology,
    betti_from_faces,
    betti_hochster,
    build_complex,
    cube_betti,
    independence_complex,
    taylor_complex,
    verify_minimal,
    verify_resolution,
)

# resolution of the running example, frozen entry by entry
COPATH5_TABLE = {
    (0, frozenset({1, 2})): 1,
    (0, frozenset({1, 3})): 1,
    (0, frozenset({1, 4})): 1,
    (0, frozenset({1, 5})): 1,
    (0, frozenset({2, 4})): 1,
    (0, frozenset({2, 5})): 1,
    (0, frozenset({3, 5})): 1,
    (1, frozenset({1, 2, 3})): 1,
    (1, frozenset({1, 2, 4})): 2,
    (1, frozenset({1, 2, 5})): 2,
    (1, frozenset({1, 3, 4})): 1,
    (1, frozenset({1, 3, 5})): 2,
    (1, frozenset({1, 4, 5})): 1,
    (1, frozenset({2, 3, 5})): 1,
    (1, frozenset({2, 4, 5})): 1,
    (2, frozenset({1, 2, 3, 4})): 1,
    (2, frozenset({1, 2, 3, 5})): 2,
    (2, frozenset({1, 2, 4, 5})): 2,
    (2, frozenset({1, 3, 4, 5})): 1,
    (3, frozenset({1, 2, 3, 4, 5})): 1,
}


def test_worked_example_fine_table(copath5):
    table = betti_from_faces(copath5)
    assert table.entries == COPATH5_TABLE
    assert table.totals() == (7, 11, 6, 1)
    assert table.pdim() == 3
    assert table.is_d_linear(2)
    assert table.get(1, {1, 2, 4}) == 2
    assert table.get(2, {1, 2, 3, 5}) == 2
    assert table.get(3, {1, 2, 3, 4, 5}) == 1
    assert table.get(1, {2, 3, 4}) == 0


def test_three_methods_agree(copath5, k4_3):
    for H in (copath5, k4_3):
        X = build_complex(H)
        faces = betti_from_faces(H)
        for fld in (GF2, QQ):
            assert betti_from_downset_homology(X, fld) == faces
            assert betti_hochster(H, fld) == faces


def test_betti_from_faces_needs_cointerval(two_k2):
    with pytest.raises(PreconditionError):
        betti_from_faces(two_k2)


def test_hochster_handles_any_graph(two_k2):
    table = betti_hochster(two_k2)
    assert table.entries == {
        (0, frozenset({1, 2})): 1,
        (0, frozenset({3, 4})): 1,
        (1, frozenset({1, 2, 3, 4})): 1,
    }
    assert not table.is_d_linear(2)  # the 4-cycle independence class obstructs


def test_verify_worked_example(copath5):
    X = build_complex(copath5)
    report = verify_resolution(X, fields=(GF2, GF3, QQ))
    assert report.passed and report.minimal
    assert len(report.alpha_status) == 21
    assert not report.failures
    assert "pass" in report.summary()


def test_verify_fails_on_two_points(two_k2):
    X = build_complex(two_k2)
    report = verify_resolution(X)
    assert not report.passed
    assert (frozenset({1, 2, 3, 4}), GF2) in report.failures
    report_ff = verify_resolution(X, fail_fast=True)
    assert len(report_ff.failures) == 1


def test_verify_empty_complex():
    X = build_complex(Hypergraph(2, [1, 2, 3], []))
    report = verify_resolution(X)
    assert report.passed and report.minimal
    assert report.alpha_status == []


def test_taylor_always_resolves_but_rarely_minimal():
    K3 = Hypergraph(2, range(1, 4), itertools.combinations(range(1, 4), 2))
    T = taylor_complex(K3)
    assert T.f_vector() == (3, 3, 1)
    report = verify_resolution(T, fields=(GF2, QQ))
    assert report.passed
    assert not report.minimal  # all four top-dimensional labels coincide
    assert not verify_minimal(T)
    # yet the Betti numbers it reports are the true (minimal) ones
    assert betti_from_downset_homology(T, checked=True) == betti_from_faces(K3)


def test_taylor_of_2k2_is_minimal(two_k2):
    T = taylor_complex(two_k2)
    assert T.f_vector() == (2, 1)
    report = verify_resolution(T)
    assert report.passed and report.minimal
    assert betti_from_downset_homology(T, checked=True) == betti_hochster(two_k2)


def test_downset_betti_rejects_non_resolution(two_k2):
    with pytest.raises(PreconditionError):
        betti_from_downset_homology(build_complex(two_k2))


def test_cube_betti(copath5):
    assert cube_betti(copath5) == 1
    assert cube_betti(copath5, (1, 2, 4)) == betti_from_faces(copath5).get(
        1, {1, 2, 4}
    )
    K4 = Hypergraph(2, range(1, 5), itertools.combinations(range(1, 5), 2))
    assert cube_betti(K4) == 3  # three ways to cut 1234 into two runs
    assert cube_betti(K4, (1, 2)) == 1
    assert cube_betti(K4, (1,)) == 0


def test_independence_complex(two_k2):
    ind = independence_complex(two_k2)
    # independent sets of 2K2: singletons and the four cross pairs
    assert ind.f_vector() == (4, 4)
    ind_k3 = independence_complex(
        Hypergraph(2, range(1, 4), itertools.combinations(range(1, 4), 2))
    )
    assert ind_k3.f_vector() == (3,)


def test_betti_table_formatting(copath5):
    table = betti_from_faces(copath5)
    text = table.format_text()
    assert "1 | 1 2 4 | 2" in text
    assert "coarse:" in text
    assert "3 5 1" in text
    empty = BettiTable({})
    assert not empty
    assert empty.totals() == ()


def test_coarse_collapse(copath5):
    coarse = betti_from_faces(copath5).coarse()
    assert coarse == {(0, 2): 7, (1, 3): 11, (2, 4): 6, (3, 5): 1}
