"""MD-192 hash function with a SHA-1 baseline and analysis helpers.

The heavy lifting lives in the compiled ``_core`` extension; this package
just re-exports it.
"""

from ._core import (
    Md192,
    Sha1,
    avalanche,
    benchmark,
    expansion_weights,
    md192,
    md192_hex,
    run_kat_file,
    sha1,
    sha1_hex,
)

__all__ = [
    "Md192",
    "Sha1",
    "avalanche",
    "benchmark",
    "expansion_weights",
    "md192",
    "md192_hex",
    "run_kat_file",
    "sha1",
    "sha1_hex",
]
