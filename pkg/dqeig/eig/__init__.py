"""
거듭제곱법 고유쌍 풀이
"""
from dqeig.eig.power import SOLVERS, dcam_power_method, power_method, random_initial_vector
from dqeig.eig.rate import estimate_rate

__all__ = ["power_method", "dcam_power_method", "random_initial_vector", "estimate_rate", "SOLVERS"]
