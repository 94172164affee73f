#!/usr/bin/env python3
"""Build the smallest graph the fusion construction produces.

The Cayley graph on Z/65Z generated by the powers of 2 is edge-regular
(65, 12, 3) and its 13 cosets of the subgroup {0, 13, 26, 39, 52} form a
spread of 1-regular cocliques. Turning each coset into a clique yields a
strictly Neumaier graph with parameters (65, 16, 3; 1, 5).
"""

import tempfile

from neumaier import (CayleySpec, construct_neumaier, gamma_pq, gen_set,
                      is_regular_subset, is_strictly_neumaier,
                      regularity_report, strictness_check, verify_neumaier)
from neumaier.graphs import load, save

S = gen_set(65, 2)
print(f"S_65(2) has {S.order} elements: {S.sorted_elements()}")

graph, spread, lam = gamma_pq(CayleySpec(13, 5, 2))
rep = regularity_report(graph)
print(f"\nCayley graph: edge-regular ({graph.n}, {rep.k}, {rep.lam}), "
      f"lambda = |S cap (S+1)| = {lam}")
block = spread.blocks[0]
print(f"first spread block {sorted(block.members)} is a coclique, "
      f"1-regular: {is_regular_subset(graph, block) == 1}")

built = construct_neumaier(5, 13, 2)
print(f"\nfused graph parameters: {built.params.as_tuple()} with t = {built.t}")
print(f"witness clique: {sorted(built.witness.members)}")
print(f"verify_neumaier:      {verify_neumaier(built.graph, built.params, built.witness)}")
print(f"is_strictly_neumaier: {is_strictly_neumaier(built.graph, built.params, built.witness)}")
verdict = strictness_check(built.fusion, built.graph)
print(f"strictness route:     {verdict.method} ({verdict.detail})")

with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as fh:
    path = fh.name
save(built.graph, path)
assert load(path) == built.graph
print(f"\ngraph file round trip through {path}: ok")

# a larger instance fusing four copies
built4 = construct_neumaier(5, 61, 17)
print(f"\nfour-copy instance: {built4.params.as_tuple()}, "
      f"verified: {verify_neumaier(built4.graph, built4.params, built4.witness)}")
