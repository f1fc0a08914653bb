"""Smoke tests for the doobgraphs extension module."""

import pytest

import doobgraphs as dg


def test_graph_parameters():
    s = dg.GraphSpec(1, 1)
    assert dg.num_vertices(s) == 64
    assert dg.degree(s) == 9
    assert dg.diameter_param(s) == 3
    assert dg.eigenvalues(s) == [9, 5, 1, -3]
    assert sum(dg.eigenvalue_multiplicity(s, i) for i in range(4)) == 64
    nb = dg.neighbors(s, 0)
    assert len(nb) == 9
    assert all(dg.distance(s, 0, v) == 1 for v in nb)
    assert len(dg.ball(s, 0)) == 10


def test_mds_coloring_quotient():
    s = dg.GraphSpec(0, 2)
    col = dg.mds_coloring(s)
    q = dg.compute_quotient(col)
    assert q == [[0, 2, 2, 2], [2, 0, 2, 2], [2, 2, 0, 2], [2, 2, 2, 0]]
    assert dg.verify_quotient(col, q)
    assert not dg.verify_quotient(col, [[6, 0, 0, 0]] * 4)


def test_make_coloring_and_rejection():
    # Parity of the symbol-pair sum on H(2,4) is a perfect (4,4)-coloring.
    colors = [1 if (((v >> 2) ^ v) & 2) == 0 else 2 for v in range(16)]
    col = dg.make_coloring(0, 2, 2, colors)
    assert dg.compute_quotient(col) == [[2, 4], [4, 2]]
    with pytest.raises(ValueError):
        dg.make_coloring(0, 2, 2, colors[:-1])


def test_hamming_code_and_partition():
    code = dg.hamming_code(2)
    assert len(code) == 64
    assert dg.is_mu_fold_perfect(code, 1)
    assert dg.code_distance(code) == 3
    parts = dg.perfect_code_partition(dg.GraphSpec(2, 1))
    assert len(parts) == 16
    seen = set()
    for p in parts:
        ms = p.members()
        assert len(ms) == 64
        assert seen.isdisjoint(ms)
        seen.update(ms)
    assert len(seen) == 1024


def test_multifold_partition():
    alpha, codes = dg.multifold_partition(dg.GraphSpec(0, 5))
    assert alpha == 1
    assert len(codes) == 16


def test_build_bc_coloring():
    col, q, method = dg.build_bc_coloring(6, 2)
    assert q == [[0, 6], [2, 4]]
    assert dg.verify_quotient(col, q)
    assert method
    with pytest.raises(dg.NotAdmissible):
        dg.build_bc_coloring(5, 1)


def test_find_perfect_coloring():
    s = dg.GraphSpec(0, 2)
    q = [[0, 2, 2, 2], [2, 0, 2, 2], [2, 2, 0, 2], [2, 2, 2, 0]]
    col = dg.find_perfect_coloring(s, q)
    assert col is not None
    assert dg.verify_quotient(col, q)
    assert dg.find_perfect_coloring(s, [[0, 6], [6, 0]]) is None


def test_io_round_trip(tmp_path):
    col = dg.mds_coloring(dg.GraphSpec(1, 0))
    path = str(tmp_path / "c.pc1")
    dg.write_pc1(path, col)
    back = dg.read_pc1(path)
    assert back.colors == col.colors
    code = dg.hamming_code(1)
    cpath = str(tmp_path / "c.code1")
    dg.write_code1(cpath, code)
    assert dg.read_code1(cpath).members() == code.members()
