"""Smoke test for the compiled module: build it with `maturin develop` first."""

import srg_paths_py as sp

petersen = sp.family("petersen")
assert petersen.srg_params() == (10, 3, 0, 1)
assert petersen.is_primitive()
assert petersen.girth() == 5
assert petersen.find_induced("P5") is not None
assert petersen.find_induced("COP5") is None
vertices, branch = petersen.p4_witness()
assert len(vertices) == 4 and branch == "a"

g = sp.Graph.from_graph6("Dhc")
assert g.srg_params() == (5, 2, 0, 1)
assert g.to_graph6() == "Dhc"
assert g == sp.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
assert not g.is_cograph()

assert sp.expected_params("johnson2", [6]) == (15, 8, 4, 4)
assert sp.complement_params((10, 3, 0, 1)) == (10, 6, 3, 4)
assert sp.constructive_witness("sts13:1", "P5") == (
    ["1 2 3", "1 4 5", "4 6 7", "6 8 9", "8 10 11"],
    "blocks",
)

try:
    sp.family("johnson2:1")
except ValueError as e:
    assert "bad order" in str(e)
else:
    raise AssertionError("expected ValueError")

ok, report = sp.verify_claims("johnson")
assert ok and report.startswith("group,claim,")
print("smoke test passed")
