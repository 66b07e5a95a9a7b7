"""End-to-end pass through the public package surface."""

import cfc_lab


def test_package_pipeline():
    g = cfc_lab.gen(cfc_lab.FamilySpec(cfc_lab.Family.Q, k=3))
    exact = cfc_lab.cfc_exact(g)
    coloring, trace = cfc_lab.color_via_theorem1(g)

    assert cfc_lab.is_conflict_free_connected(exact.witness).passed
    assert exact.value <= coloring.palette_size <= cfc_lab.independence_number(g).value
    assert trace.method == "theorem1"
    assert cfc_lab.__version__ == "1.0.0"
