#!/usr/bin/env python3
"""From prime scans to admissible triples: the infinite-family machinery.

Scanning a fixed congruence class of Gaussian or Eisenstein primes yields
infinitely many primes p; each hit assembles into a triple (p, q, a) whose
count is -2 mod q, so every hit feeds the fusion construction. For general
q (a product of primes 1 mod 6) the right congruence class comes from a
conic over Z/12qZ.
"""

from neumaier import (assemble_from_eisenstein, assemble_from_gaussian,
                      conic_solve, count_direct, scan_quadratic_primes,
                      search_triples)
from neumaier.primesearch import RING_EISENSTEIN, RING_GAUSSIAN, conic_conditions

print("== table rows for q = 5, p <= 200 ==")
for row in search_triples(5, 200).rows:
    print(f"  p={row.p:4d} a={row.a:3d} t={row.t:2d} -> {row.params.as_tuple()}")

print("\n== Gaussian scan: class 5+6i mod 20, norm <= 2000 ==")
for elt, p in scan_quadratic_primes(RING_GAUSSIAN, (5, 6), 20, 2000):
    asm = assemble_from_gaussian(elt)
    check = count_direct(asm.p, 5, asm.a)
    print(f"  pi = {str(elt):10s} p = {p:5d} a = {asm.a:6d} "
          f"count = {asm.predicted_count:4d} (= {check}, = -2 mod 5: "
          f"{asm.predicted_count % 5 == 3})")

print("\n== Eisenstein scan: class 3+10z mod 84, norm <= 2000 ==")
for elt, p in scan_quadratic_primes(RING_EISENSTEIN, (3, 10), 84, 2000):
    asm = assemble_from_eisenstein(elt, 7)
    print(f"  pi = {str(elt):10s} p = {p:5d} a = {asm.a:6d} "
          f"count = {asm.predicted_count:4d}")

print("\n== general q through the conic: q = 247 = 13 * 19 ==")
sol = conic_solve(247)
print(f"conic point mod 12q: (z1, z2) = ({sol.z1}, {sol.z2}), "
      f"conditions: {'all pass' if not conic_conditions(247, sol.z1, sol.z2) else 'FAIL'}")
print(f"the published point (2717, 1002) also passes: "
      f"{not conic_conditions(247, 2717, 1002)}")

asm = assemble_from_eisenstein((-247, 1002), 247)
print(f"assembling pi = -247+1002z: p = {asm.p}, a = {asm.a}, "
      f"count = {asm.predicted_count} = 184*247 - 2")
