import json

import pytest

import hsimplex


def test_toric_h():
    assert hsimplex.toric_h_formula(3, 7) == [1, 8, 29, 29, 29, 8, 1]
    assert hsimplex.toric_h_recursion(3, 6) == [1, 7, 22, 22, 7, 1]
    assert hsimplex.toric_h_formula(4, 6) == hsimplex.toric_h_formula(2, 6)


def test_face_lattice():
    assert hsimplex.f_vector(2, 4) == [6, 12, 8]
    assert hsimplex.f_vector(2, 4, dual=True) == [8, 12, 6]
    assert hsimplex.is_eulerian(3, 6, dual=True)
    poset = json.loads(hsimplex.face_lattice_json(1, 3))
    assert len(poset["elements"]) == 8


def test_chow_betti():
    assert [hsimplex.chow_betti_formula(r, 3, 8) for r in range(8)] == [1, 1, 9, 37, 37, 37, 9, 1]
    assert hsimplex.chow_betti_oracle(3, 3, 6) == 22
    assert hsimplex.chow_betti_oracle(2, 5, 10, mode="modp") == 11
    report = json.loads(hsimplex.verify_basis(2, 2, 4))
    assert report["basis_count"] == 5 and report["independent"]
    assert hsimplex.set_inclusion_rank(2, 3, 8) == 28


def test_coordinator():
    assert hsimplex.coordination_sequence(3, 3) == [1, 6, 12, 18]
    assert hsimplex.coordinator_from_bfs(4) == [1, 5, 5, 1]
    assert hsimplex.coordinator_formula(5) == [1, 6, 16, 6, 1]


def test_big_values_are_python_ints():
    assert hsimplex.binomial(100, 50) == 100891344545564193334812497256


def test_table_and_verify():
    assert hsimplex.table(4) == "2, 4 | 1 5 5 1 | 1 1 5 1\n"
    passed, families = hsimplex.verify(max_n=5)
    assert passed
    assert all(not failures for _, failures in families.values())
    passed, _ = hsimplex.verify(max_n=5, fault="coord_split:+1")
    assert not passed


def test_bad_parameters():
    with pytest.raises(ValueError):
        hsimplex.toric_h_formula(0, 5)
    with pytest.raises(ValueError):
        hsimplex.chow_betti_oracle(1, 2, 4, mode="float")
