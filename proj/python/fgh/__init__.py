"""Cantor normal form ordinals and the relativised fast-growing hierarchy."""

from fgh._core import (
    BaseFunction,
    Ordinal,
    add,
    base_function_prefix,
    classify,
    compare,
    eval_base,
    eval_recursive,
    from_nat,
    fund_seq,
    mc,
    omega_pow,
    omega_tower,
    parse,
    predecessor,
    render,
    run,
    to_nat,
    verify_claim_json,
)

__all__ = [
    "BaseFunction",
    "Ordinal",
    "add",
    "base_function_prefix",
    "classify",
    "compare",
    "eval_base",
    "eval_recursive",
    "from_nat",
    "fund_seq",
    "mc",
    "omega_pow",
    "omega_tower",
    "parse",
    "predecessor",
    "render",
    "run",
    "to_nat",
    "verify_claim_json",
]

__version__ = "0.1.0"
