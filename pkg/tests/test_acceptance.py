"""
Acceptance criteria 1-13.  Each criterion is a function returning
(ok, detail); the pytest wrappers print one PASS/FAIL line per criterion.

    python3 tests/test_acceptance.py       # the same table without pytest
"""

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles as O  # noqa: E402
from schubaut.autreport import (candidate_kernel_roots, criterion, kernel_structure,  # noqa: E402
                                semistable_nonempty, verdict)
from schubaut.bmod import (borel, fold, h0_module, h0_tangent_char, h1_module_char,  # noqa: E402
                           h1_tangent_char, line_cohomology, simply_laced_kind_ok,
                           weight_filtration_pair, whole, generated_by)
from schubaut.charring import (SignedCharacter, adjoint_character, demazure_char,  # noqa: E402
                               euler_char_module, weyl_char_oracle)
from schubaut.errors import Refused  # noqa: E402
from schubaut.rootsys import build, classical_root_count, dot_action  # noqa: E402
from schubaut.schubert import (is_smooth, poincare_polynomial, rationally_smooth,  # noqa: E402
                               tangent_dim_at_base)
from schubaut.weyl import bruhat_leq, elements, from_word, longest, reduced_words  # noqa: E402

SEED = 20261016


def criterion_1():
    systems = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("F", 4), ("G", 2)]
    bad = []
    for t, n in systems:
        rs = build(t, n)
        if len(rs.roots) != classical_root_count(t, n) or len(O.roots_by_strings(rs.cartan)) != len(rs.roots):
            bad.append(rs.name)
    return not bad, f"{len(systems)} systems, mismatches {bad or 'none'}"


def criterion_2():
    rng = random.Random(SEED)
    checked = 0
    for t, n in [("A", 2), ("A", 3), ("B", 2), ("G", 2)]:
        rs = build(t, n)
        for w in elements(rs):
            words = reduced_words(w)
            for _ in range(20):
                lam = tuple(rng.randint(-3, 3) for _ in range(n))
                ref = demazure_char(rs, w, lam, word=words[0])
                for x in words[1:]:
                    if demazure_char(rs, w, lam, word=x) != ref:
                        return False, f"{rs.name} w={w.label} lambda={lam} word={x}"
                    checked += 1
    return True, f"{checked} comparisons across reduced words"


def criterion_3():
    checked = 0
    for t, n in [("A", 2), ("A", 3), ("B", 2), ("G", 2)]:
        rs = build(t, n)
        w0 = longest(rs)
        for m in range(3 ** n):
            lam = tuple((m // 3 ** k) % 3 for k in range(n))
            if not rs.is_dominant(lam):
                continue
            if demazure_char(rs, w0, lam) != weyl_char_oracle(rs, lam):
                return False, f"{rs.name} lambda={lam}"
            checked += 1
    return True, f"{checked} dominant root-lattice weights"


SYSTEMS_4 = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G", 2), ("D", 4)]


def criterion_4():
    total = 0
    for t, n in SYSTEMS_4:
        rs = build(t, n)
        for w in elements(rs):
            if h1_tangent_char(rs, w) != 0:
                return False, f"{rs.name} w={w.label}: H^1(g/b) nonzero"
            if h0_tangent_char(rs, w) != euler_char_module(rs, w, rs.positive_roots):
                return False, f"{rs.name} w={w.label}: Euler check"
            total += 1
    return True, f"{total} elements, H^1(w, g/b) = 0 throughout"


def criterion_5():
    total = 0
    for t, n in SYSTEMS_4:
        rs = build(t, n)
        g = adjoint_character(rs)
        for w in elements(rs):
            h0 = h0_tangent_char(rs, w)
            side = h0 == g if rs.simply_laced else h0.contains(g)
            if side != criterion(rs, w):
                return False, f"{rs.name} w={w.label}"
            total += 1
    return True, f"{total} elements agree"


def _simply_laced_runs():
    for t, n in [("A", 2), ("A", 3), ("D", 4)]:
        rs = build(t, n)
        mods = [borel(rs), whole(rs)] + [v for b in rs.positive_roots for v in weight_filtration_pair(rs, b)]
        for w in elements(rs):
            for V in mods:
                for step in fold(rs, w, V).steps:
                    yield rs, w, step


def criterion_6():
    steps = bad = 0
    for rs, w, step in _simply_laced_runs():
        steps += 1
        if any(s.a not in (-1, 0) for s in step.summands) or step.h1 != 0:
            bad += 1
    return bad == 0, f"{steps} steps, {bad} violations"


def criterion_7():
    summands = bad = 0
    for rs, w, step in _simply_laced_runs():
        for s in step.summands:
            summands += 1
            if not simply_laced_kind_ok(rs, s, step.letter - 1):
                bad += 1
    return bad == 0, f"{summands} summands, {bad} unclassifiable"


def _weight_ok(rs, mu):
    simple_neg = {tuple(-x for x in a) for a in rs.simple_roots}
    return not any(mu) or (mu in rs.root_set and rs.is_short(mu) and mu not in simple_neg)


def criterion_8():
    checked = 0
    for t, n in [("B", 2), ("B", 3), ("C", 3), ("G", 2)]:
        rs = build(t, n)
        mods = [borel(rs)] + [generated_by(rs, [r]) for r in rs.negative_roots]
        for w in elements(rs):
            chars = [h1_module_char(rs, w, V)[0] for V in mods]
            for c in chars:
                for mu in c:
                    if not _weight_ok(rs, mu):
                        return False, f"{rs.name} w={w.label} weight {mu}"
                checked += 1
    return True, f"{checked} H^1 characters, zero violations"


def criterion_9():
    rs = build("B", 2)
    s2 = from_word(rs, [2])
    beta = (1, 0)
    if dot_action(s2, rs.highest_short_root) != beta:
        return False, "s_2 . beta_0 is not alpha_1"
    lc = line_cohomology(rs, s2, beta)
    if not (lc.exact and lc.h1_lower == SignedCharacter.monomial(rs.highest_short_root)):
        return False, f"H^1(s2, alpha_1) = {lc.h1_lower.sorted_terms()}"
    above = [w for w in elements(rs) if bruhat_leq(s2, w)]
    zero = [w.label for w in above if line_cohomology(rs, w, beta).h1_lower == 0]
    return not zero, f"H^1(s2, alpha_1) = e^beta_0; nonzero for all {len(above)} w >= s2"


def criterion_10():
    a2 = build("A", 2)
    s1 = from_word(a2, [1])
    ks = kernel_structure(a2, s1)
    v = verdict(a2, s1)
    if (ks.torus_dim, len(ks.unipotent_roots), ks.dim) != (1, 2, 3) or v.dim_P_w - v.dim_K_w != 3:
        return False, "A2 s1"
    a3 = build("A", 3)
    n_smooth = 0
    for w in elements(a3):
        v = verdict(a3, w)
        if v.smooth:
            n_smooth += 1
            if not v.dim_P_w - v.dim_K_w <= h0_tangent_char(a3, w).dim:
                return False, f"A3 w={w.label}: bound"
    for t, n in [("A", 2), ("A", 3), ("D", 4), ("B", 2), ("G", 2)]:
        rs = build(t, n)
        v = verdict(rs, longest(rs))
        if v.dim_Aut0 != len(rs.roots) + n or v.dim_K_w != 0:
            return False, f"{rs.name} w0"
    return True, f"A2 s1 gives 6 - 3 = 3; bound holds on {n_smooth} smooth A3 elements; w0 gives dim g"


def criterion_11():
    rs = build("B", 2)
    w = from_word(rs, [2, 1])
    if (1, 1) not in candidate_kernel_roots(rs, w):
        return False, "alpha_1 + alpha_2 not a candidate"
    try:
        kernel_structure(rs, w)
    except Refused as e:
        return "(1, 1)" in str(e), "refused with alpha_1 + alpha_2 named"
    return False, "not refused"


def _brute_tangent_count(rs, w):
    mats = O.group_by_bfs(rs.cartan)
    refl = set()
    for u in mats:
        for i in range(rs.rank):
            refl.add(O.matrix_key(u * O.simple_matrix(rs.cartan, i) * u.inv()))
    return len(refl & O.subword_set(rs.cartan, w.word))


def criterion_12():
    for t, n in [("A", 2), ("A", 3)]:
        rs = build(t, n)
        for w in elements(rs):
            brute = _brute_tangent_count(rs, w)
            if brute != tangent_dim_at_base(rs, w):
                return False, f"{rs.name} w={w.label}: tangent count"
            if (brute == w.length) != rationally_smooth(rs, w) or is_smooth(rs, w) != (brute == w.length):
                return False, f"{rs.name} w={w.label}: palindromic disagreement"
    a3 = build("A", 3)
    w3412 = from_word(a3, [2, 1, 3, 2])
    sing = sorted(w.label for w in elements(a3) if not is_smooth(a3, w))
    ok = not is_smooth(a3, w3412) and poincare_polynomial(a3, w3412) == [1, 3, 5, 4, 1]
    return ok, f"A2, A3 agree on all 30 elements; A3 singular: {sing}"


def criterion_13():
    total = 0
    for t, n in [("A", 2), ("A", 3), ("D", 4)]:
        rs = build(t, n)
        g = adjoint_character(rs)
        for w in elements(rs):
            if not is_smooth(rs, w):
                continue
            four = {criterion(rs, w), h0_module(rs, w, borel(rs)).dim == 0,
                    semistable_nonempty(rs, w), h0_tangent_char(rs, w) == g}
            if len(four) != 1:
                return False, f"{rs.name} w={w.label}"
            total += 1
    return True, f"{total} smooth elements, four booleans agree"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10, criterion_11, criterion_12, criterion_13]


@pytest.mark.parametrize("k", range(1, 14))
def test_criterion(k, request):
    ok, detail = CRITERIA[k - 1]()
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}"
    tr = request.config.pluginmanager.get_plugin("terminalreporter")
    if tr is not None:
        tr.write_line("")
        tr.write_line(line)
    else:
        print(line)
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for k, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failed += not ok
        print(f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}", flush=True)
    sys.exit(1 if failed else 0)
