import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest
from referencing import Registry, Resource

import legendrian as L

CLI = os.environ.get("LEGENDRIAN_CLI")
SCHEMAS = Path(os.environ.get("LEGENDRIAN_SCHEMAS", Path(__file__).parents[2] / "docs" / "schemas"))


def registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


REGISTRY = registry()


def validate(doc):
    schema = REGISTRY.contents(f"{doc['schema']}.schema.json")
    jsonschema.Draft202012Validator(schema, registry=REGISTRY).validate(doc)


def test_module_basics():
    assert L.max_tb2(3, 2, 1) == 1
    assert L.peaks(-3, 2, 1, 0) == [-1, 1]
    assert L.jet_max_tb(2, 3) == 5
    assert L.jet_max_tb(2, -3) == -2
    assert L.realizable((3, 2, -1, 0, 1, 0))["realizable"]
    assert L.classify_cable((3, 2, -1, 0, 1, 0), (3, 2, -1, 0, 1, 0))["outcome"] == "Isotopic"
    assert L.classify_jet((2, -3, -2, 1), (2, -3, -2, -1))["outcome"] == "NotIsotopic"
    assert L.transverse_realizable(3, 2, -1, 1)
    assert not L.transverse_realizable(3, 2, -1, 2)
    assert L.transverse_realizable(3, 2, None, 5)


def test_fronts_round_trip():
    front = L.construct((2, 3, -2, 1, 0, -1))
    validate(front)
    inv = L.front_invariants(front)
    validate(inv)
    assert [c["tb"] for c in inv["components"]] == [-2, 0]
    assert inv["linking"][0]["lk"] == 3
    stab = L.stabilize(L.unknot_front(-1, 0), 0, +1)
    c = L.front_invariants(stab)["components"][0]
    assert (c["tb"], c["rot"]) == (-2, 1)
    assert L.front_violations({"ambient": "plane", "components": [{"vertices": [[0, 1, 0, 1], [1, 1, 1, 1]]}]})


def test_errors_carry_codes():
    with pytest.raises(L.Error, match="NonCoprime"):
        L.construct((2, 4, -1, 0, 0, 0))
    with pytest.raises(L.Error, match="Unsupported"):
        L.construct((-3, 2, -1, 0, -6, 1))


def test_geometry_report():
    r = L.verify_geometry(samples=2000, seed=1, segments=256)
    validate(r)
    assert r["passed"]


def test_in_process_cli():
    code, out, err = L.run_cli("range", "--p", -3, "--q", 2, "--m", 1, "--rot1", 0, "--floor", -8)
    assert code == 0 and not err
    validate(json.loads(out))


COMMANDS = [
    (["realizable", "--tuple", "3,2,-1,0,1,0"], 0),
    (["realizable", "--tuple", "3,-2,-1,0,1,0"], 1),
    (["classify", "--a", "3,2,-1,0,1,0", "--b", "3,2,-1,0,1,0"], 0),
    (["classify", "--a", "-3,2,-1,0,-6,1", "--b", "-3,2,-1,0,-6,-1"], 1),
    (["classify", "--a", "3,2,-1,0,2,1", "--b", "3,2,-1,0,2,1"], 2),
    (["range", "--p", "-3", "--q", "2", "--m", "1", "--rot1", "0", "--floor", "-8"], 0),
    (["construct", "--tuple", "-1,3,-1,0,-5,0"], 0),
    (["construct", "--tuple", "-3,2,-1,0,-6,1"], 2),
    (["jet", "classify", "--a", "2,3,5,0", "--b", "2,3,5,0"], 0),
    (["jet", "range", "--n", "2", "--p", "3"], 0),
    (["transverse", "classify", "--a", "3,2,-1,1", "--b", "3,2,-1,-1"], 1),
    (["transverse", "classify", "--jet", "--a", "2,3,5", "--b", "2,3,5"], 0),
    (["transverse", "range", "--p", "-3", "--q", "2", "--m", "1", "--rot1", "0"], 0),
    (["verify-geometry", "--samples", "2000", "--seed", "7"], 0),
    (["classify", "--a", "1,2,3", "--b", "3,2,-1,0,1,0"], 3),
]


@pytest.mark.skipif(not CLI, reason="LEGENDRIAN_CLI not set")
@pytest.mark.parametrize("args,code", COMMANDS)
def test_cli_outputs_match_schemas(args, code):
    runs = [subprocess.run([CLI, *args], capture_output=True, text=True) for _ in range(2)]
    assert runs[0].returncode == code
    assert runs[0].stdout == runs[1].stdout
    stream = runs[0].stdout if runs[0].stdout else runs[0].stderr
    validate(json.loads(stream))


@pytest.mark.skipif(not CLI, reason="LEGENDRIAN_CLI not set")
def test_cli_invariants_file(tmp_path):
    front = tmp_path / "link.json"
    subprocess.run([CLI, "construct", "--tuple", "3,2,-2,1,1,0", "--out", str(front)], check=True)
    validate(json.loads(front.read_text()))
    r = subprocess.run([CLI, "invariants", str(front)], capture_output=True, text=True)
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    validate(doc)
    assert doc["linking"][0]["lk"] == 2
