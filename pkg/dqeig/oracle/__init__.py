"""
독립 검증 도구
"""
from dqeig.oracle.qr import complex_eigs
from dqeig.oracle.report import assumption_report, geometric_multiplicity, verify_eigenpair
from dqeig.oracle.spectrum import (
    analytic_cycle_spectrum,
    analytic_wheel_spectrum,
    complex_adjoint_std,
    sort_spectrum,
    standard_eigs,
    standard_form,
)

__all__ = [
    "complex_eigs",
    "complex_adjoint_std",
    "standard_eigs",
    "standard_form",
    "sort_spectrum",
    "analytic_cycle_spectrum",
    "analytic_wheel_spectrum",
    "assumption_report",
    "geometric_multiplicity",
    "verify_eigenpair",
]
