import json
import os
import subprocess

import pytest

gsp4serre = pytest.importorskip("gsp4serre")


def test_predict_reference_type():
    weights = gsp4serre.predict((6, 2, 8), 17)
    assert len(weights) == 20
    direct = [w for w in weights if w["provenance"] == "direct"]
    assert len(direct) == 8
    lams = {w["lambda"] for w in weights}
    assert (4, 1, 5) in lams
    assert (24, 13, 21) in lams
    for w in weights:
        assert w["regular"]


def test_predict_entry_points_agree():
    a = gsp4serre.predict((6, 2, 8), 17)
    b = gsp4serre.predict_from_modular_weight(7, 4, 17)
    c = gsp4serre.predict_from_exponents((8, 6, 2, 0), 17)
    key = lambda ws: sorted(w["lambda"] for w in ws)
    assert key(a) == key(b) == key(c)


def test_canonicalization_and_equivalence():
    assert gsp4serre.canonical_type((18, 10, 40), 17) == (6, 2, 8)
    assert gsp4serre.types_equivalent((6, 2, 8), (18, 10, 40), 17)
    assert not gsp4serre.types_equivalent((6, 2, 8), (6, 3, 9), 17)


def test_enumerate_counts():
    assert len(gsp4serre.enumerate_serre_weights(3)) == 18
    assert len(gsp4serre.enumerate_serre_weights(3, regular_only=True)) == 8


def test_decompose():
    dec = gsp4serre.decompose_weyl((20, 13, 5), 17)
    assert sorted(dec) == [((18, 11, 5), 1), ((20, 13, 5), 1)]


def test_bgg_and_valuations():
    o = gsp4serre.bgg_outline(7, 4)
    assert list(o["fil_jumps"]) == [0, 2, 6, 8]
    assert o["last_differential_degree"] == 3
    assert list(gsp4serre.root_valuations(7, 4)) == [0, 2, 6, 8]


def test_companions():
    recs = gsp4serre.companion_table(7, 4, 17)
    c1 = next(r for r in recs if r["case"] == "C1")
    assert (c1["k_prime"], c1["ell_prime"]) == (23, 16)
    assert c1["lambda_prime"] == (20, 13, 5)
    assert gsp4serre.companion_matches_table(7, 4, 17)


def test_lift_recipes_balance():
    recipes = gsp4serre.lift_recipes((6, 2, 8), 17)
    assert len(recipes) == 20
    for r in recipes:
        ht = r["ht_weights"]
        assert ht[0] + ht[3] == ht[1] + ht[2]
        assert sorted(ht) == sorted(gsp4serre.spin_cochar(r["mu_row"]))


def test_errors_are_typed():
    with pytest.raises(gsp4serre.Gsp4Error):
        gsp4serre.decompose_weyl((-1, 0, 1), 17)


cli = os.environ.get("GSP4SERRE_CLI")


@pytest.mark.skipif(not cli, reason="CLI path not provided")
class TestCli:
    def run(self, *args):
        return subprocess.run([cli, *args], capture_output=True, text=True)

    def test_predict_json(self):
        r = self.run("predict", "--p", "17", "--weight", "7,4", "--format", "json")
        assert r.returncode == 0
        payload = json.loads(r.stdout)
        assert payload["p"] == 17
        assert payload["mu"] == [6, 2, 8]
        assert len(payload["weights"]) == 20

    def test_byte_determinism(self):
        a = self.run("predict", "--p", "17", "--weight", "7,4", "--format", "json")
        b = self.run("predict", "--p", "17", "--weight", "7,4", "--format", "json")
        assert a.stdout == b.stdout
        assert a.stdout.encode() == b.stdout.encode()

    def test_enumerate_regular(self):
        r = self.run("enumerate", "--p", "3", "--regular", "--format", "json")
        assert r.returncode == 0
        assert len(json.loads(r.stdout)) == 8

    def test_decompose(self):
        r = self.run("decompose", "--p", "17", "--lambda", "20,13,5", "--format", "json")
        assert r.returncode == 0
        assert len(json.loads(r.stdout)["constituents"]) == 2

    def test_validation_errors_exit_2(self):
        r = self.run("predict", "--p", "16", "--weight", "7,4")
        assert r.returncode == 2
        err = json.loads(r.stderr)
        assert "error" in err

        r = self.run("predict", "--p", "17", "--weight", "7,4", "--mu", "1,1,2")
        assert r.returncode == 2

        r = self.run("decompose", "--p", "17", "--lambda", "1,0,0")
        assert r.returncode == 2
