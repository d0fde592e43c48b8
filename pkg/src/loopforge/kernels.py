"""Hot-loop kernels, compiled when the Cython extension is built.

``python`` always refers to the pure-Python implementations and ``compiled``
to the extension module (or None). The module-level names are bound to the
compiled versions when available.
"""
from . import _pykernels as python

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

active = compiled if compiled is not None else python
BACKEND = "cython" if compiled is not None else "python"

NAMES = (
    "right_bol_violation",
    "left_bol_violation",
    "assoc_violation",
    "closure",
    "pair_reach",
    "is_homomorphism",
    "extend_by_words",
)

right_bol_violation = active.right_bol_violation
left_bol_violation = active.left_bol_violation
assoc_violation = active.assoc_violation
closure = active.closure
pair_reach = active.pair_reach
is_homomorphism = active.is_homomorphism
extend_by_words = active.extend_by_words


def backends():
    """Available kernel modules keyed by name."""
    out = {"python": python}
    if compiled is not None:
        out["cython"] = compiled
    return out
