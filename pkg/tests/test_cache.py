import json

import pytest

from jacksym.cache import SCHEMA_VERSION, DiskCache, open_cache
from jacksym.field import const
from jacksym.jack import clear_caches, jack
from jacksym.operator import dprime_table, unseed_tables
from jacksym.partition import Partition

P = Partition


@pytest.fixture(autouse=True)
def _fresh_tables():
    yield
    unseed_tables()
    clear_caches()


def test_open_cache():
    assert open_cache(None) is None
    assert isinstance(open_cache("/tmp/x"), DiskCache)


def test_table_round_trip(tmp_path):
    c = DiskCache(tmp_path)
    fresh = dprime_table(5)
    assert c.load_table(5) == fresh
    assert c.stats.misses == 1 and c.stats.writes == 1
    c2 = DiskCache(tmp_path)
    assert c2.load_table(5) == fresh
    assert c2.stats.hits == 1 and c2.stats.writes == 0
    assert json.loads(c.table_path(5).read_text())["schema"] == SCHEMA_VERSION


def test_expansion_transparency(tmp_path):
    c = DiskCache(tmp_path)
    la = P((3, 2, 1))
    ref = jack(la, "J", "m")
    first = c.get_expansion(la, "J", "m", lambda: jack(la, "J", "m"))
    again = DiskCache(tmp_path).get_expansion(la, "J", "m", lambda: pytest.fail("recomputed"))
    assert first.terms == again.terms == ref.terms
    assert again.method == "iteration"


@pytest.mark.parametrize("payload", ["{not json", json.dumps({"schema": 999, "kind": "expansion"}),
                                     json.dumps({"schema": SCHEMA_VERSION, "kind": "expansion",
                                                 "shape": "2,1", "norm": "J", "basis": "m",
                                                 "method": "x", "expr": {"basis": "m"}})])
def test_corrupt_expansion_is_recomputed(tmp_path, payload):
    c = DiskCache(tmp_path)
    la = P((2, 1))
    path = c.expansion_path(la, "J", "m")
    path.parent.mkdir(parents=True)
    path.write_text(payload)
    x = c.get_expansion(la, "J", "m", lambda: jack(la, "J", "m"))
    assert x.terms == jack(la, "J", "m").terms
    assert c.stats.corrupt == 1 and c.stats.writes == 1
    assert json.loads(path.read_text())["schema"] == SCHEMA_VERSION


def test_incomplete_table_is_recomputed(tmp_path):
    c = DiskCache(tmp_path)
    c.load_table(4)
    obj = json.loads(c.table_path(4).read_text())
    obj["rows"] = obj["rows"][:-1]
    c.table_path(4).write_text(json.dumps(obj))
    unseed_tables()
    c2 = DiskCache(tmp_path)
    assert c2.load_table(4) == dprime_table(4)
    assert c2.stats.corrupt == 1


def test_seeded_table_is_used(tmp_path):
    # a valid file is trusted: a tampered entry shows up in dprime_table
    c = DiskCache(tmp_path)
    c.load_table(2)
    obj = json.loads(c.table_path(2).read_text())
    obj["rows"][1]["entries"][0]["r"] = const(7).to_json()
    c.table_path(2).write_text(json.dumps(obj))
    DiskCache(tmp_path).load_table(2)
    assert dprime_table(2)[P((1, 1))][P((2,))] == const(7)
    unseed_tables()
    assert dprime_table(2)[P((1, 1))][P((2,))] == const(2)


def test_no_temp_files_left(tmp_path):
    c = DiskCache(tmp_path)
    for w in range(1, 5):
        c.load_table(w)
    c.get_expansion(P((2, 2)), "Q", "q", lambda: jack((2, 2), "Q", "q"))
    leftovers = [p for p in tmp_path.rglob("*") if p.name.startswith(".tmp-")]
    assert leftovers == []
    assert c.expansion_path(P(()), "J", "m").name == "J_m_empty.json"
