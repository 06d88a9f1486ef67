"""Kernel selection: compiled extension when built, pure Python otherwise.

Set the environment variable ``SCREWINV_PURE=1`` before import to force the
pure implementation (used by the benchmark and the backend-parity tests).
"""

from __future__ import annotations

import os

if os.environ.get("SCREWINV_PURE"):
    from screwinv._kernel._py import monom_mul, terms_add, terms_mul, terms_scale, terms_sub

    BACKEND = "pure"
else:
    try:
        from screwinv._kernel._speedups import (  # type: ignore[no-redef]
            monom_mul,
            terms_add,
            terms_mul,
            terms_scale,
            terms_sub,
        )

        BACKEND = "compiled"
    except ImportError:
        from screwinv._kernel._py import (  # type: ignore[no-redef]
            monom_mul,
            terms_add,
            terms_mul,
            terms_scale,
            terms_sub,
        )

        BACKEND = "pure"

__all__ = ["BACKEND", "backend", "monom_mul", "terms_add", "terms_mul", "terms_scale", "terms_sub"]


def backend() -> str:
    """Name of the active kernel implementation: "compiled" or "pure"."""
    return BACKEND
