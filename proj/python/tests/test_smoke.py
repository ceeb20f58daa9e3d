# Copyright 2026 The mtcodes Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import pathlib

import pytest

import mtcodes

DATA = pathlib.Path(
    os.environ.get("MTCODES_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data")
)


def test_field_arithmetic():
    f4 = mtcodes.Field(2, 2, [1, 1, 1])
    assert f4.q == 4
    assert f4.mul(2, 2) == 3
    assert f4.mul(2, f4.inv(2)) == 1
    assert f4.mult_order(2) == 3
    with pytest.raises(mtcodes.Error, match="InvalidField|invalid"):
        mtcodes.Field(4)


def test_poly_ops():
    f2 = mtcodes.Field(2)
    a = mtcodes.Poly(f2, "{0,5}")
    b = mtcodes.Poly(f2, "{0,1}")
    q, r = a.divmod(b)
    assert r.is_zero()
    assert q * b == a
    assert a.gcd(b) == b
    factors = a.factor()
    assert sorted(e for _, e in factors) == [1, 1]
    assert mtcodes.Poly(f2, "{0,1,3}").reciprocal() == mtcodes.Poly(f2, "{0,2,3}")


def test_hnf_roundtrip():
    f3 = mtcodes.Field(3)
    a = mtcodes.PolyMat(f3, [["1@0+1@1", "1@2"], ["1@1", "2@0"]])
    h, u, rank = a.hnf()
    assert rank == 2
    assert u * a == h
    assert u.is_unimodular()


def test_qc_code_properties():
    c = mtcodes.Code.load(str(DATA / "qc_f2_25.code"))
    assert c.shape.n == 25
    assert c.dimension == 8
    assert c.is_reversible()
    assert c.is_self_orthogonal()
    checks = c.combined_checks()
    assert checks["gjg_zero"]
    assert not checks["a_eq_jgj"]
    assert c.is_self_dual()[0] is False
    assert c.min_distance() == 8
    w = c.weight_enumerator()
    assert sum(w) == 2**8
    dual_w = mtcodes.macwilliams(w, 2, 2**8)
    assert sum(dual_w) == 2**17
    assert c.dual().weight_enumerator() == dual_w
    assert c.dual().dual() == c
    assert c.reversed() == c


def test_constacyclic_dual_shape():
    c = mtcodes.Code.load(str(DATA / "consta_f9_5.code"))
    assert c.dimension == 3
    assert c.min_distance() == 3
    assert mtcodes.singleton_check(5, 3, 3) == (True, True)
    d = c.dual()
    assert d.shape == c.shape.dual()
    assert d.dimension == 2


def test_expand_matches_enumerator():
    c = mtcodes.Code.parse("field p=3 ext=1\nblocks 3 2\nlambdas 1 2\ngpm 1 2\n1@0+1@1; 1@0\n")
    rows = c.expand()
    assert len(rows) == c.dimension
    again = mtcodes.Code.from_generator_matrix(c.shape, rows)
    assert again == c


def test_verify_table_row():
    text = (DATA / "sor_qc_table.txt").read_text()
    rows = mtcodes.verify_table(text, cap=1 << 20)
    assert rows
    assert all(r["dimension"] == r["k"] for r in rows)
    assert all(r["self_orthogonal"] and r["reversible"] for r in rows)


def test_search_finds_code():
    hits, nodes, exhausted = mtcodes.search("ell 1\nm 3\n")
    assert not exhausted
    assert nodes > 0
    for code, k, d in hits:
        assert code.dimension == k
        assert code.min_distance() == d
        assert code.is_reversible()


def test_error_kind_in_message():
    f2 = mtcodes.Field(2)
    s = mtcodes.Shape(f2, [3], [1])
    with pytest.raises(mtcodes.Error):
        mtcodes.Code.constacyclic(mtcodes.Poly(f2, "{0,2}"), 3, 1)
    assert s.n == 3
