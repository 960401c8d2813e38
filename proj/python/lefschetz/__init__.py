"""Exact symplectic cohomology of solvmanifolds presented as Lie algebras.

Thin wrapper over the C++ core: every function accepts a catalog name
(``"sol3xr"``, ``"nakamura6"``, ...) or the path of an algebra JSON file, and
returns plain dicts/lists mirroring the CLI's ``--json`` output.
"""

from lefschetz._core import (
    ArgumentError,
    MathError,
    algebra_json,
    audit,
    betti,
    catalog,
    catalog_info,
    cohomology,
    ddlambda,
    hlc,
    jinv,
    lejmi,
    param_hlc,
    validate,
)

__all__ = [
    "ArgumentError",
    "MathError",
    "algebra_json",
    "audit",
    "betti",
    "catalog",
    "catalog_info",
    "cohomology",
    "ddlambda",
    "hlc",
    "jinv",
    "lejmi",
    "param_hlc",
    "validate",
]
