"""Which families of B-submodules V of g obey the short-root constraint on H^1(w, V).

For each non-simply-laced system and each family, count the pairs (w, V) for
which H^1(w, V) has a nonzero weight that is not a short root mu with -mu
outside the simple roots, and print the first offender.

    python3 scripts/weight_constraint_scope.py --systems B2 G2
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from schubaut.bmod import borel, generated_by, h1_module_char, weight_filtration_pair
from schubaut.rootsys import build
from schubaut.weyl import elements


@dataclass
class ScopeConfig:
    systems: tuple[str, ...] = ("B2", "G2", "B3", "C3")


def families(rs):
    yield "b", [borel(rs)]
    yield "one negative root", [generated_by(rs, [r]) for r in rs.negative_roots]
    yield "V1 (weights <= beta)", [weight_filtration_pair(rs, b)[0] for b in rs.positive_roots]
    yield "V2 (weights < beta)", [weight_filtration_pair(rs, b)[1] for b in rs.positive_roots]


def offending(rs, mu) -> bool:
    if not any(mu):
        return False
    simple_neg = {tuple(-x for x in a) for a in rs.simple_roots}
    return not (rs.is_short(mu) and mu not in simple_neg)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--systems", nargs="+", default=list(ScopeConfig.systems))
    cfg = ScopeConfig(tuple(p.parse_args(argv).systems))
    for name in cfg.systems:
        rs = build(name[0], int(name[1:]))
        ws = elements(rs)
        for fam, mods in families(rs):
            bad, first, max0 = 0, None, 0
            for w in ws:
                for V in mods:
                    h1, _ = h1_module_char(rs, w, V)
                    max0 = max(max0, h1[rs.zero])
                    hits = [mu for mu in h1 if offending(rs, mu)]
                    if hits:
                        bad += 1
                        first = first or (w.label, sorted(V.roots), hits[0])
            print(f"{name:4} {fam:24} pairs {len(ws) * len(mods):6}  violations {bad:5}  "
                  f"max zero-weight mult {max0}")
            if first:
                print(f"     first: w={first[0]} weight {first[2]} V roots {first[1]}")


if __name__ == "__main__":
    main()
