"""Smoke tests of the python bindings against the frozen reference values."""

import pytest

_bistellar = pytest.importorskip("_bistellar")

SPHERE5 = [[1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [2, 3, 4], [2, 3, 5]]


def test_manifold_from_facets_and_face_vectors():
    m = _bistellar.Manifold.from_facets(SPHERE5)
    assert m.dimension == 2
    fv = m.face_vectors()
    assert fv["f"] == [5, 9, 6]
    assert fv["h"] == [1, 2, 2, 1]
    assert fv["g"] == [1, 1]


def test_text_round_trip():
    m = _bistellar.Manifold.from_facets(SPHERE5)
    again = _bistellar.Manifold.from_text(m.to_text())
    assert again == m


def test_find_pairs_and_move():
    m = _bistellar.Manifold.from_facets(SPHERE5)
    pairs = m.find_pairs(1)
    assert pairs == [([1, 2], [4, 5]), ([1, 3], [4, 5]), ([2, 3], [4, 5])]
    flipped = m.apply_move([1, 2])
    assert [1, 4, 5] in flipped.facets
    roundtrip = flipped.apply_move([4, 5])
    assert roundtrip == m


def test_exchange_matrix_of_simplex_boundary():
    facets = [[1, 2, 3, 4], [1, 2, 3, 5], [1, 2, 4, 5], [1, 3, 4, 5], [2, 3, 4, 5]]
    m = _bistellar.Manifold.from_facets(facets)
    B = m.exchange_matrix()
    assert B["index"][0] == [1, 2, 3]
    assert B["entries"][0] == [0, -1, 1, 1, -1, 0, -1, 1, 0, 0]
    n = len(B["entries"])
    for i in range(n):
        for j in range(n):
            assert B["entries"][i][j] == -B["entries"][j][i]


def test_mutation_matches_moved_matrix():
    m = _bistellar.Manifold.from_facets(SPHERE5)
    mutated = m.mutated_matrix([1, 2])
    direct = m.apply_move([1, 2]).exchange_matrix()
    assert mutated == direct


def test_orbit_counts():
    m = _bistellar.Manifold.from_facets(SPHERE5)
    orbit = _bistellar.orbit(m)
    assert orbit["nodes"] == 10
    assert orbit["edges"] == 15
    assert orbit["directed_pairs"] == 30


def test_relations():
    m = _bistellar.Manifold.from_facets(SPHERE5)
    result = _bistellar.relations(m, "trivial")
    assert len(result["generators"]) == 10
    assert len(result["relations"]) == 15


def test_chain():
    tetra = _bistellar.Manifold.from_facets([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])
    levels = _bistellar.chain2d(tetra, 5)
    assert [lv["generators"] for lv in levels] == [6, 10]


def test_random_sphere_is_deterministic():
    a = _bistellar.random_sphere2(7)
    b = _bistellar.random_sphere2(7)
    assert a == b


def test_validation_error_is_raised():
    with pytest.raises(_bistellar.BistellarError):
        _bistellar.Manifold.from_facets([[1, 2, 3], [1, 2, 4]])
