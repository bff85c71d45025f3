"""Elimination-kernel selection.

The compiled extension is preferred when it was built; otherwise the
pure-Python lane is used.  Both lanes share representation and semantics,
so everything downstream is backend-agnostic.  `benchmarks/bench_elim.py`
compares the two on real degree-span matrices.
"""

from fmchow import _elim_py

try:  # pragma: no cover - depends on whether the extension was built
    from fmchow import _speedups as _compiled
except ImportError:  # pragma: no cover
    _compiled = None

BACKENDS = {"python": _elim_py.Echelon}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled.Echelon

BACKEND = "compiled" if _compiled is not None else "python"
Echelon = BACKENDS[BACKEND]


def get_echelon_class(backend=None):
    """Echelon class for an explicit backend name (None = the default)."""
    if backend is None:
        return Echelon
    try:
        return BACKENDS[backend]
    except KeyError:
        raise ValueError(
            f"unknown backend {backend!r}; available: {sorted(BACKENDS)}"
        ) from None
