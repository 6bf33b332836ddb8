"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``HESSK3_PURE=1`` to force the pure-Python kernel.
"""

import os

from . import _pure

pure = _pure
compiled = None
if os.environ.get("HESSK3_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on the build
        compiled = None

active = compiled if compiled is not None else pure
NAME = "compiled" if compiled is not None else "pure"


def use(name: str) -> None:
    """Switch the active kernel (``"pure"`` or ``"compiled"``)."""
    global active, NAME
    if name == "pure":
        active, NAME = pure, "pure"
    elif name == "compiled":
        if compiled is None:
            raise RuntimeError("compiled kernel is not available")
        active, NAME = compiled, "compiled"
    else:
        raise ValueError(name)
