"""
이원 복소 수반 행렬 도구
"""
from dqeig.dcam.adjoint import adjoint_block, dcam_map, f_inv, f_map
from dqeig.dcam.matrix import DCMatrix, DCVector, dc_matmul, dc_matvec

__all__ = ["DCMatrix", "DCVector", "dc_matvec", "dc_matmul", "dcam_map", "adjoint_block", "f_map", "f_inv"]
