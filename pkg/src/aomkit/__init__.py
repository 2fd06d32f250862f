"""Sign vectors, oriented matroids and affine oriented matroids."""

from .axioms import AxiomId, check_affine, check_covector, is_aom, is_com, is_om
from .core_sign import GroundSet, SignVector
from .geometry import Arrangement, Hyperplane, enumerate_covectors, sign_at
from .io import parse_arr, parse_svs, render_svs
from .kernels import BACKEND
from .systems import SignSystem, dagger, parallel_vectors, q_vectors, stabilizer

__all__ = [
    "Arrangement",
    "AxiomId",
    "BACKEND",
    "GroundSet",
    "Hyperplane",
    "SignSystem",
    "SignVector",
    "check_affine",
    "check_covector",
    "dagger",
    "enumerate_covectors",
    "is_aom",
    "is_com",
    "is_om",
    "parallel_vectors",
    "parse_arr",
    "parse_svs",
    "q_vectors",
    "render_svs",
    "sign_at",
    "stabilizer",
]
