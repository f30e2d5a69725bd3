"""Smoke tests for the Python bindings.

Run via ctest (which points PYTHONPATH at the built extension) or after
``pip install .``.
"""

import os

import pytest

import gdcalc


TREFOIL = "classical: true\ncircle: O1+ U2+ O3+ U1+ O2+ U3+\n"


def test_parse_and_roundtrip():
    d = gdcalc.parse(TREFOIL)
    assert d.classical
    assert d.circle_count == 1
    assert d.arrow_count == 3
    assert gdcalc.serialize(d) == TREFOIL
    assert "3 arrows" in repr(d)


def test_conway_and_compute():
    d = gdcalc.parse(TREFOIL)
    assert gdcalc.conway(d) == {0: 1, 2: 1}
    assert gdcalc.conway(d, mode="desc") == {0: 1, 2: 1}
    assert gdcalc.compute(d, "conway") == {0: 1, 2: 1}
    assert gdcalc.compute(d, "i", degree=3) == -2
    assert gdcalc.conway_skein(d) == {0: 1, 2: 1}
    assert gdcalc.nabla_ad(d) == {}


def test_errors_surface_as_python_exceptions():
    with pytest.raises(gdcalc.ParseError):
        gdcalc.parse("circle: O1+\n")
    with pytest.raises(gdcalc.PreconditionError):
        gdcalc.compute(gdcalc.parse(TREFOIL), "i")
    with pytest.raises(gdcalc.PreconditionError):
        gdcalc.compute(gdcalc.parse(TREFOIL), "conway", degree=2)
    with pytest.raises(gdcalc.PreconditionError):
        gdcalc.conway(gdcalc.parse(TREFOIL), mode="sideways")


def test_corpus_access():
    names = gdcalc.corpus_names()
    assert len(names) == 19
    assert "kishino" in names
    kis = gdcalc.corpus_diagram("kishino")
    assert gdcalc.conway(kis) == {0: 1, 2: -2, 4: 1}
    assert gdcalc.conway(kis, mode="desc") == {0: 1}
    assert gdcalc.nabla_ad(kis) == {2: -2, 4: 1}
    assert gdcalc.corpus_text("unknot").startswith('link "unknot"')
    corpus_dir = os.environ.get("GDCALC_CORPUS_DIR")
    if corpus_dir:
        with open(os.path.join(corpus_dir, "kishino.gauss"), "rb") as fh:
            assert fh.read().decode() == gdcalc.corpus_text("kishino")


def test_surgery_and_witnesses():
    kis = gdcalc.corpus_diagram("kishino")
    hat = gdcalc.move_base_point(kis, 0, 4)
    assert gdcalc.conway(hat) == {0: 1}
    assert gdcalc.conway(hat, mode="desc") == {0: 1, 2: -2, 4: 1}

    vpa = gdcalc.corpus_diagram("virt-pair-a")
    flipped = gdcalc.virtualize(vpa, 1)
    assert not flipped.classical
    assert gdcalc.conway(flipped) != gdcalc.conway(vpa)

    tre = gdcalc.parse(TREFOIL)
    assert gdcalc.is_planar(tre)
    assert not gdcalc.is_planar(gdcalc.corpus_diagram("virtual-trefoil"))
    both = gdcalc.connected_sum(tre, tre)
    assert gdcalc.conway(both) == {0: 1, 2: 2, 4: 1}


def test_random_and_moves():
    d = gdcalc.random_diagram(7, 2, 5)
    assert d.circle_count == 2
    assert d.arrow_count == 5
    assert not d.classical

    base = gdcalc.parse(TREFOIL)
    walk, trace = gdcalc.random_classical(5, base, 4)
    assert walk.classical
    assert len(trace) == 4
    assert all(isinstance(t, str) for t in trace)

    moves = gdcalc.list_moves(base)
    assert any(m.startswith("om1-insert") for m in moves)
    assert any(m.startswith("virtualize") for m in moves)


def test_verify_suite_dict():
    rep = gdcalc.verify_suite("structural", seed=3, trials=2, max_arrows=6)
    assert rep["suite"] == "structural"
    assert rep["failed"] == 0
    assert rep["passed"] > 0
    assert rep["first"] is None

    bad = gdcalc.verify_suite("skein", seed=3, trials=2, max_arrows=6,
                              inject_fault=True)
    assert bad["failed"] > 0
    assert bad["first"] is not None
    assert bad["first"]["detail"]

    assert gdcalc.suite_names()[0] == "skein"
    with pytest.raises(gdcalc.PreconditionError):
        gdcalc.verify_suite("nope")
