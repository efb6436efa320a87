"""ULP-error test bench for univariate math functions."""

from ._core import (
    decode_hex,
    domain,
    encode_hex,
    finite_count,
    formats,
    functions,
    main,
    next_down,
    next_up,
    rank,
    reference,
    reference_bits,
    round,
    run_function,
    special_points,
    test_point,
    ulp,
    ulp_error,
    unrank,
)

__all__ = [
    "decode_hex",
    "domain",
    "encode_hex",
    "finite_count",
    "formats",
    "functions",
    "main",
    "next_down",
    "next_up",
    "rank",
    "reference",
    "reference_bits",
    "round",
    "run_function",
    "special_points",
    "test_point",
    "ulp",
    "ulp_error",
    "unrank",
]
