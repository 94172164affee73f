#!/usr/bin/env python3
"""Walk through the parameter feasibility machinery.

A Neumaier parameter tuple (v, k, lambda; e, s) describes an edge-regular
graph with an e-regular clique of size s. This demo applies the individual
necessary conditions to a few tuples and then reproduces the full table of
feasible strictly-Neumaier tuples on at most 64 vertices, annotated with
the two complement-counting exclusions.
"""

from neumaier import (NeumaierParams, complement_defect,
                      corollary_complement_test, enumerate_feasible,
                      erg_conditions, neumaier_conditions, strict_conditions,
                      theorem_family_6l3)

print("== individual conditions ==")
for v, k, lam in ((16, 9, 4), (5, 3, 1), (10, 7, 3)):
    verdict = erg_conditions(v, k, lam)
    print(f"edge-regular conditions on {(v, k, lam)}: {verdict.status} "
          f"{verdict.reason_codes()}")

params = NeumaierParams(16, 9, 4, 2, 4)
print(f"\ncounting identities on {params.as_tuple()}: "
      f"{neumaier_conditions(params).status}")
print(f"strictness conditions: {strict_conditions(params).status}")

print("\n== the complement bound ==")
for v, k, lam in ((39, 30, 23), (56, 45, 36), (16, 9, 4)):
    verdict = corollary_complement_test(v, k, lam)
    print(f"D({v},{k},{lam}) = {complement_defect(v, k, lam):4d} -> {verdict.status}")

print("\n== the excluded family (6l+3, 4l+2, 3l; l+1, 2l+1) ==")
for l in (3, 4, 10):
    p = NeumaierParams(6 * l + 3, 4 * l + 2, 3 * l, l + 1, 2 * l + 1)
    print(f"l = {l:2d}: {p.as_tuple()} excluded: {theorem_family_6l3(p)}")

print("\n== every feasible tuple with v <= 64 ==")
rows = enumerate_feasible(64)
print(f"{len(rows)} rows; the ones ruled out or pinned to strong regularity:")
for row in rows:
    if row.verdict.status != "open":
        codes = ",".join(row.verdict.reason_codes())
        print(f"  {row.params.as_tuple()}  {row.verdict.status:10s}  {codes}")
