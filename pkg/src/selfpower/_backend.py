"""Scan-kernel selection: the compiled Cython kernel when built and in range,
the pure-Python twin otherwise."""

from __future__ import annotations

from . import _scan_py

try:
    from . import _scan as _compiled
except ImportError:
    _compiled = None

#: Name of the kernel the package selected at import.
BACKEND = "compiled" if _compiled is not None else "pure"


def _fits_compiled(d: int, n_mult: int, b_hi: int, r: int, s: int) -> bool:
    # every window product in the kernel must stay inside int64
    e_max = n_mult * b_hi * d
    bl = max(r.bit_length(), s.bit_length(), 64)
    return e_max < 1 << 40 and e_max * bl < 1 << 62 and b_hi * bl < 1 << 62


def scan_denominators(d, n_mult, b_lo, b_hi, r, s, force: str | None = None):
    """Dispatch the candidate scan; force is None (auto), 'pure' or 'compiled'."""
    if force == "pure":
        return _scan_py.scan_denominators(d, n_mult, b_lo, b_hi, r, s)
    if force == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled scan kernel is not available")
        return _compiled.scan_denominators(d, n_mult, b_lo, b_hi, r, s)
    if _compiled is not None and _fits_compiled(d, n_mult, b_hi, r, s):
        return _compiled.scan_denominators(d, n_mult, b_lo, b_hi, r, s)
    return _scan_py.scan_denominators(d, n_mult, b_lo, b_hi, r, s)
