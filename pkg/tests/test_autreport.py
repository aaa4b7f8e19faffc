import pytest
from hypothesis import given

from schubaut.autreport import (candidate_kernel_roots, criterion, dim_P, kernel_structure, report,
                                semistable_nonempty, verdict)
from schubaut.bmod import h0_tangent_char
from schubaut.errors import Refused
from schubaut.rootsys import build
from schubaut.weyl import elements, from_word, identity, longest

from conftest import system_and_word


@pytest.mark.parametrize("word,expected", [([1, 2, 1], True), ([1], False), ([1, 2], True), ([2, 1], True),
                                           ([], False), ([2], False)])
def test_criterion_a2(word, expected):
    rs = build("A", 2)
    assert criterion(rs, from_word(rs, word)) is expected


@pytest.mark.parametrize("t,n", [("A", 1), ("A", 3), ("B", 2), ("C", 3), ("D", 4), ("G", 2), ("F", 4)])
def test_criterion_at_extremes(t, n):
    rs = build(t, n)
    assert criterion(rs, longest(rs)) and not criterion(rs, identity(rs))


def test_kernel_a2_s1():
    rs = build("A", 2)
    ks = kernel_structure(rs, from_word(rs, [1]))
    assert ks.torus_dim == 1 and ks.torus_codim == 1 and ks.component_group_order == 1
    assert ks.unipotent_roots == {(0, 1), (1, 1)}
    assert ks.dim == 3


@pytest.mark.parametrize("t,n", [("A", 2), ("A", 3), ("D", 4)])
def test_kernel_longest(t, n):
    rs = build(t, n)
    ks = kernel_structure(rs, longest(rs))
    assert ks.torus_dim == 0 and ks.unipotent_roots == frozenset() and ks.dim == 0


def test_kernel_identity():
    rs = build("A", 3)
    ks = kernel_structure(rs, identity(rs))
    assert ks.torus_dim == 3 and ks.unipotent_roots == set(rs.positive_roots)


def test_kernel_refused_b2():
    rs = build("B", 2)
    w = from_word(rs, [2, 1])
    assert candidate_kernel_roots(rs, w) == {(1, 1)}
    with pytest.raises(Refused, match=r"\(1, 1\)"):
        kernel_structure(rs, w)


def test_verdict_a2_examples():
    rs = build("A", 2)
    v = verdict(rs, from_word(rs, [1, 2]))
    assert v.smooth and v.criterion_holds and v.aut0_equals_P_w
    assert v.dim_P_w == 6 and v.dim_Aut0 == 6 and v.dim_K_w == 0
    assert v.phi_surjective and v.phi_injective

    v = verdict(rs, from_word(rs, [1]))
    assert v.smooth and not v.criterion_holds and v.aut0_equals_P_w is False
    assert v.dim_K_w == 3 and v.dim_Aut0 == 3
    assert v.kernel_torus_codim == 1 and len(v.kernel_unipotent_roots) == 2


@pytest.mark.parametrize("t,n", [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("G", 2), ("D", 4)])
def test_verdict_longest(t, n):
    rs = build(t, n)
    v = verdict(rs, longest(rs))
    assert v.smooth and v.criterion_holds and v.dim_P_w == len(rs.roots) + n
    assert v.dim_Aut0 == len(rs.roots) + n
    assert v.dim_Aut0_is_lower_bound == (not rs.simply_laced)


@pytest.mark.parametrize("t,n", [("A", 2), ("A", 3), ("B", 2), ("G", 2)])
def test_verdict_invariants(t, n):
    rs = build(t, n)
    for w in elements(rs):
        v = verdict(rs, w)  # check() runs inside
        assert v.phi_injective in (None, v.criterion_holds)
        if not v.smooth:
            assert v.dim_Aut0 is None and v.phi_surjective is None
        if rs.simply_laced:
            ks = kernel_structure(rs, w)
            assert v.dim_K_w == (n - v.kernel_torus_codim) + len(v.kernel_unipotent_roots) == ks.dim
            if v.smooth:
                assert v.dim_Aut0 == v.dim_P_w - v.dim_K_w
                assert v.dim_Aut0 <= h0_tangent_char(rs, w).dim
        else:
            assert v.kernel_unipotent_roots is None
            if v.smooth:
                assert v.dim_Aut0 >= v.dim_P_w - v.dim_K_w_upper


@pytest.mark.parametrize("t,n", [("A", 1), ("A", 2), ("A", 3), ("D", 4)])
def test_dim_accounting_equality_on_flag_variety(t, n):
    rs = build(t, n)
    w = longest(rs)
    v = verdict(rs, w)
    assert v.dim_P_w - v.dim_K_w == h0_tangent_char(rs, w).dim


def test_dim_accounting_projective_line_inside_a2():
    # X(s1) = P^1, but H^0(s1, g/b) also sees the normal directions in G/B
    rs = build("A", 2)
    v = verdict(rs, from_word(rs, [1]))
    assert v.dim_P_w - v.dim_K_w == 3 < h0_tangent_char(rs, from_word(rs, [1])).dim == 5


@given(system_and_word())
def test_semistable_matches_criterion(sw):
    rs, word = sw
    w = from_word(rs, word)
    assert semistable_nonempty(rs, w) == criterion(rs, w)


def test_dim_P_range():
    rs = build("B", 2)
    assert dim_P(rs, identity(rs)) == 6 and dim_P(rs, longest(rs)) == 10


def test_report_parts():
    rs = build("B", 2)
    r = report(rs, from_word(rs, [2, 1]), cohomology=("g/b", "b", (1, 0)))
    assert [c.name for c in r.cohomology] == ["g/b", "b", "line:1,0"]
    assert r.facts.smooth and r.verdict.dim_K_w == 0
    assert r.cohomology[0].h1 == 0
