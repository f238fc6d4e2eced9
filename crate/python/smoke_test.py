"""Smoke test for the helicity_algebra extension.

Build and copy the module next to this script first:

    cargo build --release -p helicity-py
    cp target/release/libhelicity_algebra.so python/helicity_algebra.so
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import helicity_algebra as ha  # noqa: E402


def close(a, b, tol=1e-12):
    return all(abs(x - y) < tol for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def main():
    plus, minus = ha.central_idempotents(3)
    one = ha.Multivector.one(3)
    assert plus * plus == plus
    assert (plus * minus).is_zero()
    assert plus + minus == one
    assert plus.pseudo_conjugate() == minus

    report = json.loads(ha.decompose(5))
    assert report["epsilon"] == "1" and report["swap"] is False and report["all_laws"]
    try:
        ha.decompose(4)
    except ValueError as e:
        assert "n must be odd" in str(e)
    else:
        raise AssertionError("even n accepted")

    e3 = ha.Multivector.generator(3, 3)
    image = ha.quotient_map(ha.project(e3, "+"), "+")
    assert image.signature == (2, 0, True)
    assert abs(image.coefficient([1, 2]) - 1j) < 1e-15
    assert ha.lift(image, 3, "+") == ha.project(e3, "+")

    g0 = ha.Multivector.generator(1, 1, 3, complex=False)
    assert close(ha.rep(g0, "gamma"), [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
    assert json.loads(ha.rep_json(g0))["basis"] == "gamma"
    e1 = ha.Multivector.generator(1, 3, complex=False)
    assert close(ha.rep(e1, "pauli"), [[0, 1], [1, 0]])

    psi = ha.weyl_split([1, 0, 0, 0])
    assert abs(psi[0][0] - 0.5j) < 1e-15

    assert "Lorentz" in ha.derive("nabla-a")
    assert len(json.loads(ha.derive("weyl-split", "json"))["groups"]) == 16

    checks = json.loads(ha.check("rep", seed=5))
    assert checks["failed"] == 0 and checks["seed"] == 5

    table = json.loads(ha.wave([0.0, 0.0, 1.0], "-", 0.25, 2))
    assert len(table["rows"]) == 2
    curl_h = table["orders"][table["labels"].index("curlH")][0]
    assert abs(curl_h - 2.0) < 0.4

    fixture = os.path.join(os.path.dirname(__file__), "..", "crates", "cli", "tests", "fixtures", "plane_wave.json")
    summary = json.loads(ha.field(fixture, "maxwell"))
    assert max(summary["residual"].values()) < 0.02

    print("smoke test passed")


if __name__ == "__main__":
    main()
