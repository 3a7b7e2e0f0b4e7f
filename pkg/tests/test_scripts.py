import pathlib
import subprocess
import sys

import pytest

SCRIPTS = pathlib.Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize(
    "name, args, expect",
    [
        ("knot_example.py", [], "OrderableSpecial"),
        ("knot_example.py", ["--", "-x+3-x^-1"], "OrderableTPR"),
        ("root_product_survey.py", ["--weight", "1", "--base", "x^3-3x-1", "--quiet"], "0 failures"),
        ("free_order_demo.py", ["--count", "4", "--seed", "1"], "depth 2  x1*x2*x1^-1*x2^-1"),
    ],
)
def test_script_runs(name, args, expect):
    out = subprocess.run([sys.executable, str(SCRIPTS / name), *args], capture_output=True, text=True, check=True)
    assert expect in out.stdout
