"""Bistellar cluster algebras over triangulated manifolds."""

from ._bistellar import (
    BistellarError,
    Manifold,
    chain2d,
    orbit,
    random_sphere2,
    relations,
    verify_paper,
)

__all__ = [
    "BistellarError",
    "Manifold",
    "chain2d",
    "orbit",
    "random_sphere2",
    "relations",
    "verify_paper",
]
