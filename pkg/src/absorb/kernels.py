"""Backend selection for the scan kernels.

Prefers the compiled extension and falls back to the pure-Python module.
``ABSORB_BACKEND=c`` or ``ABSORB_BACKEND=python`` forces a choice (the ``c``
value raises if the extension was not built).
"""

import os

_forced = os.environ.get("ABSORB_BACKEND", "").strip().lower()

if _forced == "python":
    from absorb import _kernels_py as _impl
elif _forced == "c":
    from absorb import _ckernels as _impl  # type: ignore[no-redef]
elif _forced:
    raise ValueError(f"ABSORB_BACKEND must be 'c' or 'python', got {_forced!r}")
else:
    try:
        from absorb import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from absorb import _kernels_py as _impl  # type: ignore[no-redef]

BACKEND = getattr(_impl, "BACKEND_NAME", "c")

find_absorbing_violation = _impl.find_absorbing_violation
find_pair_violation = _impl.find_pair_violation
find_two_absorbing_violation = _impl.find_two_absorbing_violation
check_axioms = _impl.check_axioms
