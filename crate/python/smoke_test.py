"""Smoke test for the dpl_py extension module.

Build and install it first:
    pip install --no-build-isolation -e crates/dpl-py
"""

import dpl_py


def main():
    c04 = dpl_py.Arrangement.catalog("C04")
    assert c04.genus() == 1
    assert c04.face_vector() == {3: 4, 4: 9}
    assert c04.isomorphic(dpl_py.Arrangement.cyclic_thin(3))

    c64 = dpl_py.Arrangement.catalog("C64")
    assert c64.automorphism_order() == 24
    assert c64.orbit_count() == 2

    m1 = dpl_py.Arrangement.catalog("M1")
    chi = m1.chirotope()
    assert chi.names()[(2, 3, 4)] == "C04(2 3 4)"
    assert chi.reconstruct() == m1

    flipped = c04.act([-2, 1, 3])
    assert flipped.isomorphic(c04)

    accepted, subset, _ = dpl_py.Chirotope.catalog("allC04_n5").is_k_chirotope(5)
    assert not accepted and subset is not None

    census = dpl_py.enumerate(3, "moebius")
    assert (census["a"], census["b"], census["c"], census["d"]) == (118, 22, 16, 12)
    assert dpl_py.enumerate(3)["classes"] == 13

    label = dpl_py.CocycleLabel("12..")
    assert len(label.orbit([1, 2])) == 4
    assert label.overline_reversed().overline_reversed() == label

    print("smoke test ok:", len(dpl_py.catalog_names()), "catalog fixtures")


if __name__ == "__main__":
    main()
