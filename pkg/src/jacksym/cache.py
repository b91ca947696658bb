"""On-disk JSON cache for D' tables and Jack expansions.

Layout under the cache root::

    tables/dprime_w{n}.json
    expansions/{norm}_{basis}_{shape}.json

Every file carries ``schema``; files that fail to parse or validate are
counted as corrupt and recomputed. Writes go to a temp file in the same
directory and are moved into place with os.replace.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Optional

from .field import RatFun
from .jack import JackExpansion
from .operator import dprime_table, seed_table
from .partition import Partition, revlex_order
from .symfunc import SymExpr

SCHEMA_VERSION = 1


@dataclass
class CacheStats:
    hits: int = 0
    misses: int = 0
    corrupt: int = 0
    writes: int = 0


class DiskCache:
    def __init__(self, root):
        self.root = Path(root)
        self.stats = CacheStats()

    # -- paths ------------------------------------------------------------
    def table_path(self, weight: int) -> Path:
        return self.root / "tables" / f"dprime_w{weight}.json"

    def expansion_path(self, la: Partition, norm: str, basis: str) -> Path:
        shape = "-".join(map(str, la)) or "empty"
        return self.root / "expansions" / f"{norm}_{basis}_{shape}.json"

    # -- raw io -----------------------------------------------------------
    def _read(self, path: Path, kind: str, decode: Callable):
        if not path.exists():
            self.stats.misses += 1
            return None
        try:
            with open(path, encoding="utf-8") as fh:
                obj = json.load(fh)
            if obj.get("schema") != SCHEMA_VERSION or obj.get("kind") != kind:
                raise ValueError("schema mismatch")
            value = decode(obj)
        except (OSError, ValueError, KeyError, TypeError, AttributeError):
            self.stats.corrupt += 1
            return None
        self.stats.hits += 1
        return value

    def _write(self, path: Path, obj: dict):
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(obj, fh, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        self.stats.writes += 1

    # -- D' tables --------------------------------------------------------
    def load_table(self, weight: int) -> dict:
        """dprime_table(weight), from disk when a valid file exists."""
        path = self.table_path(weight)

        def decode(obj):
            if obj["weight"] != weight:
                raise ValueError("weight mismatch")
            table = {Partition.parse(row["nu"]): {Partition.parse(e["mu"]): RatFun.from_json(e["r"])
                                                  for e in row["entries"]}
                     for row in obj["rows"]}
            if set(table) != set(revlex_order(weight)):
                raise ValueError("incomplete table")
            return table

        table = self._read(path, "dprime_table", decode)
        if table is None:
            table = dprime_table(weight)
            self._write(path, table_to_json(weight, table))
        else:
            seed_table(weight, table)
        return table

    # -- expansions -------------------------------------------------------
    def get_expansion(self, la: Partition, norm: str, basis: str,
                      compute: Callable[[], JackExpansion]) -> JackExpansion:
        path = self.expansion_path(la, norm, basis)

        def decode(obj):
            if (obj["shape"], obj["norm"], obj["basis"]) != (str(la), norm, basis):
                raise ValueError("key mismatch")
            expr = SymExpr.from_json(obj["expr"])
            if expr.basis != basis:
                raise ValueError("basis mismatch")
            return JackExpansion(la, norm, expr, obj["method"])

        hit = self._read(path, "expansion", decode)
        if hit is not None:
            return hit
        x = compute()
        self._write(path, {"schema": SCHEMA_VERSION, "kind": "expansion", "shape": str(la),
                           "norm": norm, "basis": basis, "method": x.method,
                           "expr": x.expr.to_json()})
        return x

    def stats_json(self) -> dict:
        return asdict(self.stats)


def table_to_json(weight: int, table: dict) -> dict:
    rows = []
    for nu in revlex_order(weight):
        row = table[nu]
        entries = [{"mu": str(mu), "r": row[mu].to_json()}
                   for mu in revlex_order(weight) if mu in row]
        rows.append({"nu": str(nu), "entries": entries})
    return {"schema": SCHEMA_VERSION, "kind": "dprime_table", "weight": weight, "rows": rows}


def open_cache(root: Optional[str]) -> Optional[DiskCache]:
    return DiskCache(root) if root else None
