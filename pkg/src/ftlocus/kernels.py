"""Float kernel selector: compiled extension when available, else pure.

Set FTLOCUS_PURE_KERNELS=1 to skip the extension even when it is built.
`BACKEND` records which implementation is live; everything downstream
imports the kernels from here and never from the twins directly.
"""

import os

if os.environ.get("FTLOCUS_PURE_KERNELS"):
    from . import _kernels_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _kernels as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "pure"

objective_batch_poly = _impl.objective_batch_poly
objective_batch_lp = _impl.objective_batch_lp
refine_nested_ternary_poly = _impl.refine_nested_ternary_poly
refine_nested_ternary_lp = _impl.refine_nested_ternary_lp
