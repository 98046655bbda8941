"""Text and JSON output."""
import json
import math

import pandas as pd

from shelflab.output import JsonOutput
from shelflab.output import SCHEMA_VERSION
from shelflab.output import TextOutput
from shelflab.output import create_output
from shelflab.magma import from_function


TWO = from_function(2, min)


def test_text():
    writer = TextOutput()
    writer.write_fields({"order": 2, "shelf": True})
    writer.write_magma(TWO, ["min"], offset=1)
    writer.write_text("done")
    assert writer.render() == "order: 2\nshelf: True\n\n# min\n2\n1 1\n1 2\n\ndone\n"


def test_text_frame():
    writer = TextOutput()
    writer.write_frame("counts", pd.DataFrame({"n": [1, 2]}))
    assert writer.render().startswith("# counts\n")


def test_json():
    writer = JsonOutput("laver")
    writer.write_fields({"k": 1})
    writer.write_magma(TWO, ["min"], offset=1)
    writer.write_text("legend")
    document = json.loads(writer.render())
    assert document["schema"] == SCHEMA_VERSION
    assert document["command"] == "laver"
    assert document["k"] == 1
    assert document["tables"] == [
        {"order": 2, "offset": 1, "table": [[1, 1], [1, 2]], "comments": ["min"]},
    ]
    assert document["text"] == ["legend"]


def test_json_frame_turns_nan_into_null():
    writer = JsonOutput("enumerate")
    frame = pd.DataFrame({"n": [1, 2], "value": [math.nan, 3.0]}).set_index("n")
    writer.write_frame("counts", frame)
    document = json.loads(writer.render())
    assert document["counts"] == [{"n": 1, "value": None}, {"n": 2, "value": 3.0}]


def test_factory():
    assert isinstance(create_output("json", "free"), JsonOutput)
    assert isinstance(create_output("text", "free"), TextOutput)
