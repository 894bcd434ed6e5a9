"""Tail-biting trellises of linear codes over prime fields.

Matrices are lists of integer rows, spans are ``(a, b)`` pairs meaning the circular interval
``(a, b]`` on ``Z_n``.
"""

from ._tbtrellis import (
    TrellisError,
    bcjr_trellis,
    characteristic_pair,
    characteristic_spans,
    dual_characteristic_pair,
    fixture,
    fixture_names,
    kv_conjecture,
    parity_check,
    product_trellis,
    run_suite,
)

__all__ = [
    "TrellisError",
    "bcjr_trellis",
    "characteristic_pair",
    "characteristic_spans",
    "dual_characteristic_pair",
    "fixture",
    "fixture_names",
    "kv_conjecture",
    "parity_check",
    "product_trellis",
    "run_suite",
]

__version__ = "0.1.0"
