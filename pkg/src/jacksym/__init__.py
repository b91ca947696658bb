"""Exact Jack symmetric functions over Q(alpha).

Entry points: ``jacksym.jack.jack`` for expansions, ``jacksym.structure`` for
Pieri and Littlewood-Richardson data, ``jacksym.virasoro`` for the Virasoro
action, and the ``jacksym`` console script.
"""

from .field import ALPHA, ONE, ZERO, IntPoly, PoleError, RatFun
from .partition import Partition
from .symfunc import SymExpr, inner

__all__ = ["ALPHA", "ONE", "ZERO", "IntPoly", "PoleError", "RatFun", "Partition", "SymExpr", "inner"]
__version__ = "0.1.0"
