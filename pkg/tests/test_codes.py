from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from conftest import small_codes
from graphreal import fixtures
from graphreal.codes import (
    LinearCode,
    canonicalize,
    cross_section,
    direct_sum,
    dual_code,
    minimum_distance,
    project,
    zero_code,
)
from graphreal.guards import GuardExceeded


def labels(n):
    return [str(i) for i in range(1, n + 1)]


def test_canonicalize_dependent_rows():
    # 110, 011, 101 over GF(2): the third row is the sum of the first two.
    code = canonicalize([[1, 1, 0], [0, 1, 1], [1, 0, 1]], labels(3), 2)
    assert code.dim == 2
    oracle = helpers.span_words([[1, 1, 0], [0, 1, 1], [1, 0, 1]], 2, 3)
    assert len(oracle) == 4
    assert set(code.codewords()) == oracle


def test_canonicalize_zero_matrix():
    code = canonicalize([[0, 0, 0]], labels(3), 2)
    assert code.dim == 0
    assert list(code.codewords()) == [(0, 0, 0)]


def test_canonicalize_appendix_code():
    code = fixtures.appendix_code()
    assert code.dim == 3
    assert code.n == 11


def test_canonicalize_idempotent_and_row_space_invariant():
    rows = [[1, 1, 0, 1], [0, 1, 1, 1]]
    c1 = canonicalize(rows, labels(4), 2)
    # A different basis of the same space.
    c2 = canonicalize([[1, 0, 1, 0], [0, 1, 1, 1]], labels(4), 2)
    assert c1 == c2
    again = canonicalize([list(g) for g in c1.generators], labels(4), 2)
    assert again == c1


def test_canonicalize_column_mismatch():
    with pytest.raises(ValueError):
        canonicalize([[1, 0]], labels(3), 2)


def test_project_examples():
    appendix = fixtures.appendix_code()
    proj = project(appendix, {"3", "4", "5"})
    assert proj.index_set == ("3", "4", "5")
    assert proj.dim == 2
    oracle = helpers.project_words(set(appendix.codewords()), [2, 3, 4])
    assert set(proj.codewords()) == oracle

    assert project(appendix, appendix.index_set) == appendix

    rep = fixtures.repetition_code(3)
    p1 = project(rep, {"1"})
    assert p1.dim == 1
    assert set(p1.codewords()) == {(0,), (1,)}


def test_project_unknown_label():
    with pytest.raises(KeyError):
        project(fixtures.repetition_code(3), {"9"})


def test_cross_section_examples():
    appendix = fixtures.appendix_code()
    words = set(appendix.codewords())

    cs = cross_section(appendix, {"4", "5", "6", "7", "8"})
    assert cs.dim == 2
    oracle = helpers.cross_section_words(words, [3, 4, 5, 6, 7], 11)
    assert set(cs.codewords()) == oracle

    assert cross_section(appendix, set()).dim == 0
    assert cross_section(appendix, {"1", "2"}).dim == 0


def test_cross_section_inside_projection():
    appendix = fixtures.appendix_code()
    for J in [{"1", "2", "3"}, {"4", "5", "6"}, {"3", "5", "7", "9"}]:
        cs = set(cross_section(appendix, J).codewords())
        pj = set(project(appendix, J).codewords())
        assert cs <= pj


def test_direct_sum():
    rep = fixtures.repetition_code(3)
    other = canonicalize([[1, 1, 1]], ["4", "5", "6"], 2)
    both = direct_sum([rep, other])
    assert both.n == 6 and both.dim == 2
    assert len(set(both.codewords())) == 4
    assert project(both, {"1", "2", "3"}) == rep
    assert cross_section(both, {"1", "2", "3"}) == rep

    assert direct_sum([rep]) == rep

    z = zero_code(["7", "8"], 2)
    padded = direct_sum([z, rep])
    assert padded.dim == rep.dim
    assert padded.n == 5


def test_direct_sum_overlap_rejected():
    rep = fixtures.repetition_code(3)
    with pytest.raises(ValueError):
        direct_sum([rep, rep])


def test_minimum_distance():
    assert minimum_distance(fixtures.appendix_code()) == 3
    assert minimum_distance(fixtures.repetition_code(3)) == 3
    assert minimum_distance(fixtures.even_weight_code(3)) == 2
    with pytest.raises(ValueError):
        minimum_distance(zero_code(labels(3), 2))


def test_minimum_distance_guard():
    big = canonicalize([[1 if i == j else 0 for j in range(30)] for i in range(30)], labels(30), 2)
    with pytest.raises(GuardExceeded):
        minimum_distance(big)


def test_golay_parameters():
    golay = fixtures.golay_code()
    assert golay.n == 24
    assert golay.dim == 12
    assert minimum_distance(golay) == 8


@settings(max_examples=60, deadline=None)
@given(code=small_codes(), data=st.data())
def test_dimension_identity(code: LinearCode, data):
    # dim C_J + dim C|_(I \ J) = dim C, against enumeration.
    J = set(data.draw(st.lists(st.sampled_from(list(code.index_set)), unique=True)))
    comp = [lbl for lbl in code.index_set if lbl not in J]
    cs = cross_section(code, J)
    pj = project(code, comp)
    assert cs.dim + pj.dim == code.dim

    words = set(code.codewords())
    pos = [i for i, lbl in enumerate(code.index_set) if lbl in J]
    oracle_cs = helpers.cross_section_words(words, pos, code.n)
    assert helpers.dim_of(oracle_cs, code.q) == cs.dim
    comp_pos = [i for i, lbl in enumerate(code.index_set) if lbl not in J]
    oracle_pj = helpers.project_words(words, comp_pos)
    assert helpers.dim_of(oracle_pj, code.q) == pj.dim


@settings(max_examples=40, deadline=None)
@given(code=small_codes(), data=st.data())
def test_cross_section_monotone(code: LinearCode, data):
    K = set(data.draw(st.lists(st.sampled_from(list(code.index_set)), unique=True)))
    if K:
        J = set(data.draw(st.lists(st.sampled_from(sorted(K)), unique=True)))
    else:
        J = set()
    assert cross_section(code, J).dim <= cross_section(code, K).dim


@settings(max_examples=50, deadline=None)
@given(code=small_codes(), data=st.data())
def test_canonical_form_is_row_space_invariant(code: LinearCode, data):
    # Rebuild the generators by random invertible row operations and a
    # shuffle; the canonical form must not change.
    q = code.q
    rows = [list(g) for g in code.generators]
    if rows:
        for _ in range(data.draw(st.integers(min_value=0, max_value=6))):
            i = data.draw(st.integers(0, len(rows) - 1))
            j = data.draw(st.integers(0, len(rows) - 1))
            c = data.draw(st.integers(1, q - 1))
            if i != j:
                rows[i] = [(a + c * b) % q for a, b in zip(rows[i], rows[j])]
            else:
                rows[i] = [(c * a) % q for a in rows[i]]
        rows = data.draw(st.permutations(rows))
    rebuilt = canonicalize(rows, list(code.index_set), q)
    assert rebuilt == code


@settings(max_examples=40, deadline=None)
@given(code=small_codes())
def test_dual_code(code: LinearCode):
    dual = dual_code(code)
    assert dual.dim == code.n - code.dim
    for g, h in itertools.product(code.generators, dual.generators):
        assert sum(a * b for a, b in zip(g, h)) % code.q == 0
