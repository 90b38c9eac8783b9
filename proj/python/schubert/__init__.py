"""Schubert unions in Grassmannians over finite fields."""

from ._schubert import (  # noqa: F401
    Poly,
    ResourceLimitError,
    SchubertUnion,
    bound_table,
    direction,
    enumerate_ideals,
    experiment,
    generator_matrix,
    grassmannian_points,
    krull_dK,
    min_distance,
    oracle_dr,
    table,
    union_code_d1,
)
