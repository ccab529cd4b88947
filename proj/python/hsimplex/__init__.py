"""Toric h-vectors and Chow-Betti numbers of hypersimplices, coordinator numbers of A_{n-1}*."""

from ._core import (
    InvalidParameters,
    NotEulerian,
    binomial,
    chow_betti_formula,
    chow_betti_oracle,
    coordination_sequence,
    coordinator_formula,
    coordinator_from_bfs,
    f_vector,
    face_lattice_json,
    is_eulerian,
    set_inclusion_rank,
    table,
    toric_h_formula,
    toric_h_recursion,
    verify,
    verify_basis,
)

__all__ = [
    "InvalidParameters",
    "NotEulerian",
    "binomial",
    "chow_betti_formula",
    "chow_betti_oracle",
    "coordination_sequence",
    "coordinator_formula",
    "coordinator_from_bfs",
    "f_vector",
    "face_lattice_json",
    "is_eulerian",
    "set_inclusion_rank",
    "table",
    "toric_h_formula",
    "toric_h_recursion",
    "verify",
    "verify_basis",
]
