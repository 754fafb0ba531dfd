"""Smoke test for the isingvec Python extension.

Build and install first, e.g. `pip install ./crates/py` or
`maturin build -m crates/py/Cargo.toml` followed by `pip install` of the wheel.
"""

import json

import isingvec


def main() -> None:
    a1 = isingvec.Lattice.preset("sqrt2A1")
    assert a1.rank == 1 and a1.shell(4) == [[-1], [1]]

    g = isingvec.GriessAlgebra(a1)
    assert g.dim == 2
    plus = g.omega_pm([1], 1)
    minus = g.omega_pm([1], -1)
    assert g.form(plus, plus) == "1/4"
    assert g.is_ising(plus) == (True, None)
    assert g.mul(plus, minus).is_zero()
    assert dict(g.eigen_dims(plus)) == {"2": 1, "0": 1, "1/2": 0, "1/16": 0}
    doubled = g.scale(plus, "2")
    ok, why = g.is_ising(doubled)
    assert not ok and why
    assert g.element_from_json(plus.to_json()) == plus

    odd = isingvec.Lattice([[4, 1], [1, 4]], "odd")
    go = isingvec.GriessAlgebra(odd)
    tau = go.tau(go.omega_pm(odd.shell(4)[0], 1))
    assert any(v == "-1" for _, _, v in tau)

    try:
        isingvec.GriessAlgebra(isingvec.Lattice([[2, -1], [-1, 2]], "A2"))
    except ValueError as e:
        assert "lattice has roots" in str(e)
    else:
        raise AssertionError("A2 accepted")

    e8 = isingvec.Lattice.preset("sqrt2E8")
    assert isingvec.count_formula(e8) == 496
    c = isingvec.enumerate_ising(e8)
    assert (c.ising_total, c.l4_count, c.e8_sublattice_count) == (496, 240, 1)
    assert c.violations() == []
    report = json.loads(c.report_json())
    assert len(report["records"]) == 496
    ge8 = isingvec.GriessAlgebra(e8)
    w = ge8.omega_e8(0, 5)
    assert ge8.is_ising(w)[0] and len(w.support()) == 120

    print("isingvec smoke test: ok")


if __name__ == "__main__":
    main()
