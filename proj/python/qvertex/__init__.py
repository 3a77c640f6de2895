"""Exact vertex operator states and q-zonal functions."""

from ._core import (
    DualFockState,
    FockState,
    Rational,
    SymFunc,
    cn_series,
    collinear_ratio,
    dual_one_row_vos,
    dual_qzonal_from_vos,
    dual_two_row_vos,
    identity_names,
    inner_product,
    jack_P,
    macdonald_P,
    matrix_element,
    matrix_element_series,
    one_row_vos,
    one_row_Z,
    pairing,
    partitions_of,
    q,
    qint,
    qzonal_from_vos,
    specialize_q1,
    two_row_vos,
    two_row_Z,
    verify,
    z_q,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
