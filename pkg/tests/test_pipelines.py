import json

import pytest

from waringhf.hilbert import first_difference, hilbert_function
from waringhf.io import loads_ideal
from waringhf.liaison import RandomConfig
from waringhf.pipelines import PipelineReport, cubic_hilbert, run_example1, run_example2
from waringhf.scalars import GF

EX1_ROWS = {
    "Z1": [1, 3, 6, 10, 15, 21, 22, 22, 22, 22, 22],
    "A'": [1, 3, 6, 10, 15, 21, 26, 27, 27, 27, 27],
    "U": [1, 3, 6, 10, 15, 21, 28, 34, 39, 43, 46, 48, 49],
    "Z2": [1, 3, 6, 10, 15, 20, 22, 22, 22, 22, 22],
}
EX2_ROWS = {
    "A": [1, 3, 6, 9, 12, 12],
    "X": [1, 3, 6, 10, 15, 21, 27, 32, 36, 39, 41, 42, 42, 42],
    "Z1": [1, 3, 6, 10, 15, 21, 27, 29, 30, 30, 30, 30, 30, 30],
    "Y": [1, 3, 6, 10, 15, 21, 27, 33, 39, 45, 50, 54, 57, 59, 60],
    "Z2": [1, 3, 6, 10, 15, 21, 26, 30, 30, 30, 30, 30, 30, 30],
}


@pytest.mark.parametrize("name", sorted(EX1_ROWS))
def test_example1_rows(example1_report, name):
    st = example1_report.stage(name)
    assert st["hilbert"] == EX1_ROWS[name]
    assert st["degree"] == EX1_ROWS[name][-1]


@pytest.mark.parametrize("name", sorted(EX2_ROWS))
def test_example2_rows(example2_report, name):
    st = example2_report.stage(name)
    assert st["hilbert"] == EX2_ROWS[name]
    assert st["degree"] == EX2_ROWS[name][-1]


def test_example1_geometry(example1_report):
    r = example1_report
    assert r.stage("singular")["codim"] == 2 and r.stage("singular")["degree"] == 1
    assert r.stage("singular")["nodal"]
    assert (r.stage("fiber")["dim"], r.stage("fiber")["degree"], r.stage("fiber")["radical"]) == (1, 2, True)
    assert len(r.stage("restriction")["generators"]) == 3


def test_example1_flags(example1_report):
    r = example1_report
    assert r.ok, r.failed_flags()
    form = r.stage("form")
    assert form["table_Z1"] == [1, 3, 6, 10, 15, 21] + [22] * 9
    assert form["table_Z2"] == [1, 3, 6, 10, 15, 20] + [22] * 9
    assert r.values["first_difference_degree"] == 5
    assert r.values["union_profile"] == [1, 2, 3, 4, 5, 6, 7, 6, 4, 3, 2, 1]


def test_example2_flags_and_values(example2_report):
    r = example2_report
    assert r.ok, r.failed_flags()
    form = r.stage("form")
    assert form["table_Z1"] == [1, 3, 6, 10, 15, 21, 27, 29] + [30] * 7
    assert form["table_Z2"] == [1, 3, 6, 10, 15, 21, 26] + [30] * 8
    assert (r.values["regularity_Z1"], r.values["regularity_Z2"]) == (8, 7)
    assert r.values["union_profile"] == [1, 2, 3, 4, 5, 6, 6, 6, 6, 6, 5, 4, 3, 2, 1]
    assert r.values["h1_union"] == 1
    assert r.values["rank_bound"] == 28
    assert r.values["rank_bound_pointwise_tail"] == 30


@pytest.mark.parametrize("fixture", ["example1_report", "example2_report"])
def test_stage_tables_are_valid_profiles(request, fixture):
    r = request.getfixturevalue(fixture)
    for st in r.stages:
        if "hilbert" not in st:
            continue
        h = st["hilbert"]
        if h[-1] == st["degree"]:
            first_difference(h).validate()


@pytest.mark.parametrize("fixture", ["example1_report", "example2_report"])
def test_serialized_ideals_reproduce_tables(request, fixture):
    r = request.getfixturevalue(fixture)
    assert r.ideals
    for name, text in r.ideals.items():
        I = loads_ideal(text, name)
        try:
            st = r.stage(name)
        except KeyError:
            continue
        assert hilbert_function(I, len(st["hilbert"]) - 1) == st["hilbert"], name


def test_report_json_is_stable(example2_report):
    again = run_example2(RandomConfig(0), GF(32003))
    assert again.to_json() == example2_report.to_json()
    data = json.loads(again.to_json())
    assert data["version"] == 1 and data["example"] == "example2"
    assert set(data) == {"version", "example", "field", "seed", "coordinate_bound", "max_retries",
                         "stages", "form", "flags", "values", "ideals"}


def test_other_seed_still_verifies():
    r = run_example1(RandomConfig(7), GF(32003))
    assert r.ok, r.failed_flags()
    assert r.stage("Z2")["hilbert"] == EX1_ROWS["Z2"]


def test_small_characteristic_rejected():
    with pytest.raises(ValueError):
        run_example2(RandomConfig(0), GF(13))


def test_cubic_hilbert():
    assert cubic_hilbert(12, 5) == [1, 3, 6, 9, 12, 12]


def test_text_report(example1_report):
    text = example1_report.to_text()
    assert text.startswith("example1 over fp:32003, seed 0")
    assert "[ok] unique_form" in text
