#!/usr/bin/env python3
"""Count |S cap (S+1)| three ways: enumeration, Jacobi sums, closed forms.

The count is the edge-regularity parameter lambda of the Cayley graphs and
controls when the fusion construction applies (lambda = -2 mod q). Direct
enumeration is the oracle; the Jacobi-sum master formula and the quadratic
closed forms must agree with it exactly.
"""

import time

from neumaier import (count_closed, count_direct, count_jacobi, fermat_vanishing,
                      mod6_predict, quad_decomp, rsuv_split)
from neumaier.charsums import FORM_THREE_SQUARES, FORM_TWO_SQUARES

CASES = [(13, 5, 2), (421, 5, 2), (139, 7, 26), (79, 7, 54), (817519, 247, 22890547)]

print("p, q, a                     direct   jacobi   closed  branch")
for p, q, a in CASES:
    t0 = time.perf_counter()
    direct = count_direct(p, q, a)
    jac = count_jacobi(p, q, a)
    closed = count_closed(p, q, a)
    assert direct == jac == closed.value
    print(f"{str((p, q, a)):27s} {direct:6d} {jac:8d} {closed.value:8d}  "
          f"{closed.branch}  [{time.perf_counter() - t0:.2f}s]")

print("\n== the quadratic decompositions behind the closed forms ==")
d = quad_decomp(421, FORM_TWO_SQUARES, 2)
print(f"421 = ({d.x})^2 + ({d.y})^2 -> 3(p+1+2x+4y)/16 = "
      f"{3 * (421 + 1 + 2 * d.x + 4 * d.y) // 16}")
d = quad_decomp(139, FORM_THREE_SQUARES, 2)
r, s, u, v = rsuv_split(d.x, d.y)
print(f"139 = {d.x}^2 + 3*{d.y}^2, companion (r,s,u,v) = {(r, s, u, v)} "
      f"with 4p = r^2+3s^2 = u^2+3v^2")

print("\n== congruence structure mod 6 ==")
for p, q, a in ((13, 5, 2), (61, 5, 17), (139, 7, 26)):
    pred = mod6_predict(p, q, a)
    count = count_direct(p, q, a)
    print(f"(p,q,a) = {(p, q, a)}: delta={pred.delta} epsilon={pred.epsilon} "
          f"-> count {count} = {pred.residue} mod 6: {count % 6 == pred.residue}")

print("\n== Fermat-prime vanishing ==")
for q in (35, 55, 119, 5, 85):
    print(f"q = {q:3d}: forced zero count for all (p, a): {fermat_vanishing(q)}")
