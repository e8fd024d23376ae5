"""Exact baric algebras, bowtie products and executable property checks."""

from ._baric import (
    BaricAlgebra,
    BaricError,
    bowtie,
    check,
    classify,
    componentwise,
    decompose,
    dual_numbers,
    kernel_ideals,
    kpow,
    property_flags,
    proposition_ids,
    random_baric,
    run_cli,
    weights,
)

__all__ = [
    "BaricAlgebra",
    "BaricError",
    "bowtie",
    "check",
    "classify",
    "componentwise",
    "decompose",
    "dual_numbers",
    "kernel_ideals",
    "kpow",
    "property_flags",
    "proposition_ids",
    "random_baric",
    "run_cli",
    "weights",
]
