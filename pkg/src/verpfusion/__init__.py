"""Exact computations in the Verlinde categories Ver_p and Ver_p(SL(n)), and
weight combinatorics for GL(X) with a Steinberg factorization engine."""

from .qcyclo import CycNum, qint
from .verp import (
    JordanModule,
    VerpObject,
    dual,
    ext_power_jordan,
    fpdim,
    frobenius_twist,
    fuse,
    length,
    qdim,
    semisimplify,
    split_plus_super,
    sym_algebra_dims,
    sym_power_jordan,
    tensor_jordan,
)
from .versln import (
    AlcoveWeight,
    SLnParams,
    enumerate_simples,
    fuse_sln,
    invertible_action,
    is_plus,
    pointed_plus_factorize,
    qdim_sln,
)
from .glx import (
    Factorization,
    GLXShape,
    GWeight,
    SimpleIndex,
    build_shape,
    frobkernel_equiv,
    hc_pair,
    is_dominant,
    is_restricted,
    kernel_coord_dims,
    padic_decompose,
    root_space,
    roots,
    steinberg_factorize,
    steinberg_step,
)

__version__ = "0.1.0"
