from ._core import (
    AtlasError,
    __version__,
    act,
    borbits,
    count,
    dim,
    korbits,
    oracle_sizes,
    rep,
    verify,
    weak_order_dot,
)

__all__ = [
    "AtlasError",
    "__version__",
    "act",
    "borbits",
    "count",
    "dim",
    "korbits",
    "oracle_sizes",
    "rep",
    "verify",
    "weak_order_dot",
]
