import os
import shutil
import subprocess

import pytest

import tbtrellis as tb

G5 = [[0, 1, 1, 1, 0], [1, 0, 0, 1, 0], [0, 1, 1, 0, 1]]
H5 = [[1, 0, 1, 1, 1], [0, 1, 1, 0, 0]]


def test_characteristic_pair_of_the_extended_hamming_code():
    fx = tb.fixture("hamming_8_4")
    x = tb.characteristic_pair(fx["p"], fx["generators"])
    assert x["T"] == [(5, 0), (4, 1), (7, 2), (6, 3), (1, 4), (0, 5), (3, 6), (2, 7)]
    assert x["X"][0] == [1, 0, 0, 0, 0, 1, 1, 1]


def test_bcjr_trellis_states():
    t = tb.bcjr_trellis(2, G5, H5, [(1, 3), (3, 0), (2, 1)])
    assert t["scp"] == [2, 1, 1, 2, 2]
    assert t["states"][1] == [[0, 0], [0, 0], [0, 1]]
    assert t["staggered"].splitlines()[0] == "00|0|00|1|01|1|10|1|00|0|00"
    assert t["one_to_one"]


def test_product_trellis_profiles():
    t = tb.product_trellis(2, [[0, 1, 1], [1, 0, 1]], [(1, 2), (0, 2)])
    assert (t["scp"], t["ecp"]) == ([0, 1, 2], [1, 2, 2])
    assert t["local_dual"]["ecp"] == [1, 2, 1]
    assert not t["biproper"]


def test_dual_characteristic_pair():
    X = [[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 1, 1, 1]]
    T = [(3, 0), (2, 1), (1, 2), (0, 3)]
    r = tb.dual_characteristic_pair(2, X, T, [[1, 1, 1, 1], [0, 1, 1, 0]])
    assert r["v"] == [[1, 1], [0, 1], [1, 0], [1, 1]]
    assert r["Y"] == [[1, 0, 0, 1], [0, 1, 1, 0], [1, 1, 1, 1], [1, 0, 0, 1]]


def test_kv_report_and_suites():
    rep = tb.kv_conjecture(3, [[1, 2, 0, 0], [0, 0, 1, 1]], tie_break="normalized")
    assert rep["ok"]
    assert tb.run_suite("paper-examples")["ok"]
    assert "selfdual-4-2" in [tb.fixture(n)["name"] for n in tb.fixture_names()]


def test_errors_carry_their_code():
    with pytest.raises(tb.TrellisError) as info:
        tb.characteristic_pair(2, [[1, 1, 0], [0, 0, 1]])
    assert info.value.code == "SupportError"
    with pytest.raises(tb.TrellisError):
        tb.characteristic_pair(4, [[1, 1]])


def test_cli_smoke():
    bundled = os.path.join(os.path.dirname(tb.__file__), "bin", "tbt")
    cli = os.environ.get("TBT_CLI") or (bundled if os.path.exists(bundled) else shutil.which("tbt"))
    if not cli:
        pytest.skip("tbt executable not available")
    out = subprocess.run([cli, "charmat", "--order", "start", "fixture:selfdual_4_2"],
                         capture_output=True, text=True, check=True).stdout
    assert out.splitlines()[-1] == "T = [(0,3], (1,2], (2,1], (3,0]]"
