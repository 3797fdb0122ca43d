"""
시험 행렬 생성기
"""
from dqeig.graphgen.fixtures import (
    complex_dominant_spectrum,
    fail_iii,
    fail_iv,
    fail_v,
    infinite_eigenvalue_example,
    non_necessity_example,
    size_sweep_spectrum,
)
from dqeig.graphgen.laplacian import Udqdg, cycle_laplacian, wheel_laplacian
from dqeig.graphgen.sampling import rand_unit_dq, random_invertible
from dqeig.graphgen.spectrum import jordan_experiment_matrix, leading_spectrum, prescribed_spectrum_matrix

__all__ = [
    "Udqdg",
    "rand_unit_dq",
    "random_invertible",
    "cycle_laplacian",
    "wheel_laplacian",
    "prescribed_spectrum_matrix",
    "jordan_experiment_matrix",
    "leading_spectrum",
    "fail_iii",
    "fail_iv",
    "fail_v",
    "non_necessity_example",
    "infinite_eigenvalue_example",
    "size_sweep_spectrum",
    "complex_dominant_spectrum",
]
