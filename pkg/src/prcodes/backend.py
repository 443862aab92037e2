"""Backend selection: compiled kernel when importable, pure Python otherwise.

PRCODES_BACKEND=py forces the fallback, =c requires the extension, =auto
(default) prefers the extension.  set_backend() switches at runtime; the
bench command uses it to compare both implementations.  Fields too large
for log/antilog tables always take the pure-Python path.
"""

from __future__ import annotations

import os

from . import _pyops

try:
    from . import _kernel
except ImportError:
    _kernel = None


class OpCounter:
    """Tally of coefficient multiplications and inversions."""

    __slots__ = ("mults", "invs")

    def __init__(self):
        self.mults = 0
        self.invs = 0


def _check_mode(mode: str) -> str:
    if mode not in ("auto", "c", "py"):
        raise ValueError(f"unknown backend {mode!r} (expected auto, c or py)")
    if mode == "c" and _kernel is None:
        raise RuntimeError("compiled kernel requested but the extension is not built")
    return mode


_mode = _check_mode(os.environ.get("PRCODES_BACKEND", "auto"))


def have_kernel() -> bool:
    return _kernel is not None


def backend_name() -> str:
    return "c" if (_kernel is not None and _mode != "py") else "py"


def set_backend(mode: str) -> None:
    global _mode
    _mode = _check_mode(mode)


def _kfield(field):
    if _kernel is None or _mode == "py":
        return None
    kf = field._kfield
    if kf is None:
        tables = field.kernel_tables()
        if tables is None:
            kf = False
        else:
            kf = _kernel.KernelField(field.p, field.m, field.q, tables[0], tables[1])
        field._kfield = kf
    return kf if kf is not False else None


def poly_mul(field, a, b, ctr=None):
    kf = _kfield(field)
    if kf is not None:
        return _kernel.poly_mul(kf, a, b, ctr)
    return _pyops.poly_mul(field, a, b, ctr)


def poly_divmod(field, a, b, ctr=None):
    kf = _kfield(field)
    if kf is not None:
        return _kernel.poly_divmod(kf, a, b, ctr)
    return _pyops.poly_divmod(field, a, b, ctr)


def gcd_pass(field, r, rt, s, st, t, tt, ctr=None):
    kf = _kfield(field)
    if kf is not None:
        return _kernel.gcd_pass(kf, r, rt, s, st, t, tt, ctr)
    return _pyops.gcd_pass(field, r, rt, s, st, t, tt, ctr)
