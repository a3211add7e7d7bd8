# Copyright 2026 The netshare Authors.
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
import json

import pytest

import netshare


def test_multicast_poa_is_n():
    inst = netshare.generate("multicast-const-lb", n=5, c=1)
    assert len(inst["vertices"]) == 7
    report = netshare.analyze(inst, "equal-split")
    assert report["poa"]["exact"] == "5/1"
    assert report["costs"]["opt"] == "1/1"
    assert not report["tie_detected"]


def test_spg_poa_is_one():
    inst = netshare.generate("random-spg", shape="strictly-concave", players=3, n_max=4, seed=11)
    report = netshare.analyze(inst, "spg")
    assert report["poa"]["exact"] == "1/1"
    assert report["pne_count"] >= 1


def test_nwa_reports_eps_accounting():
    inst = netshare.generate("random-dag", shape="concave-int", players=3, n_max=4, seed=3)
    report = netshare.analyze(inst, "nwa", threads=2)
    assert report["pne_count"] == 1
    assert report["eps_accounting"] is not None
    assert report["tie_detector_hits"] == 0


def test_nwa_needs_symmetric_instance():
    inst = netshare.generate("multicast-const-lb", n=3)
    with pytest.raises(netshare.NetshareError) as err:
        netshare.analyze(inst, "nwa")
    assert netshare.error_kind(err.value) == "ProtocolInapplicable"


def test_profile_cap():
    inst = netshare.generate("multicast-const-lb", n=5)
    with pytest.raises(netshare.NetshareError) as err:
        netshare.analyze(inst, "equal-split", max_profiles=10)
    assert netshare.error_kind(err.value) == "PathExplosion"


def test_is_nash_witness():
    inst = {
        "format": "netshare-instance",
        "version": 1,
        "vertices": [0, 1],
        "n_max": 2,
        "edges": [
            {"id": 0, "tail": 0, "head": 1, "cost": ["0", "1", "1"]},
            {"id": 1, "tail": 0, "head": 1, "cost": ["0", "1", "1"]},
        ],
        "players": [{"id": 0, "source": 0, "sink": 1}, {"id": 1, "source": 0, "sink": 1}],
    }
    assert netshare.is_nash(inst, "equal-split", [[0], [0]])["is_nash"]
    res = netshare.is_nash(inst, "equal-split", [[0], [1]])
    assert not res["is_nash"]
    assert res["witness"]["player"] == 0
    assert res["witness"]["new_total"] == "1/2"


def test_round_trip_and_digest(tmp_path):
    inst = netshare.generate("overcharge-lb", digits=12)
    path = tmp_path / "inst.json"
    netshare.save_instance(inst, path)
    assert netshare.load_instance(path) == inst
    assert netshare.digest(path) == netshare.digest(inst)
    assert len(netshare.digest(inst)) == 16


def test_paths_and_perturb():
    inst = netshare.generate("overcharge-lb", digits=12)
    assert netshare.paths(inst, 0, 3) == [[0], [1, 5], [2, 3, 5], [2, 4]]
    pert = netshare.perturb(netshare.generate("random-dag", shape="concave-int", n_max=3), 3)
    assert pert["perturbation"]["r"] == 3


def test_classify():
    assert netshare.classify([0, 1, 4, 9])["convex"]
    assert netshare.classify(["0", "2", "2", "2"])["constant"]
    with pytest.raises(netshare.NetshareError):
        netshare.classify([1, 2])


def test_facts_suite():
    res = netshare.verify("paper-facts", seed=1)
    assert res["passed"]
    assert [c["criterion"] for c in res["checks"]] == [5, 6, 7, 8]


def test_families():
    assert "static-share-lb" in netshare.family_names()
    with pytest.raises(netshare.NetshareError):
        netshare.generate("nope")
