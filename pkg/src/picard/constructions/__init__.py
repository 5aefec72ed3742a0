"""Table-building constructions on R-2-modules."""

from .cokernel import CokernelResult, cokernel, cokernel_factor
from .common import Factoring, composite, same_tables, strict_hom
from .image import Factorization, factorize, factorize_pl, im1, im1_pl, im2, im2_pl, omega_pl_inverse
from .kernel import KernelResult, kernel, kernel_factor
from .pips import (COPIP_OBJECT, PipResult, RootResult, copip, coroot, full_submodule, pip, quotient_module,
                   root)
from .puppe import puppe_check

__all__ = [
    "CokernelResult", "cokernel", "cokernel_factor", "Factoring", "composite", "same_tables", "strict_hom",
    "Factorization", "factorize", "factorize_pl", "im1", "im1_pl", "im2", "im2_pl", "omega_pl_inverse",
    "KernelResult", "kernel", "kernel_factor", "COPIP_OBJECT", "PipResult", "RootResult", "copip", "coroot",
    "full_submodule", "pip", "quotient_module", "root", "puppe_check",
]
