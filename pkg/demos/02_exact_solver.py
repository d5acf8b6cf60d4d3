# Exact ADHC search: the bitset DP against the permutation oracle, plus the
# fixed-endpoint path variant and the state budget.
from adhc_lab import (
    BudgetExceeded,
    OrientedGraph,
    RandomModel,
    adhc_oracle,
    find_adhc,
    find_adhp_between,
    labeled_oriented_graphs,
    random_oriented,
)
from adhc_lab.generators import almost_regular_tournament

square = OrientedGraph.from_arcs(4, [(0, 1), (2, 1), (2, 3), (0, 3)])
res = find_adhc(square)
print(res.verdict.value, res.witness.vertices, [d.value for d in res.witness.directions])

# every labeled oriented graph on 4 vertices
hits = sum(find_adhc(g).found for g in labeled_oriented_graphs(4))
print("n=4 graphs with an ADHC:", hits, "of 729")

# random graphs against the oracle
bad = 0
for seed in range(200):
    g = random_oriented(RandomModel(8, 0.6, seed))
    bad += find_adhc(g).verdict is not adhc_oracle(g).verdict
print("n=8 mismatches over 200 graphs:", bad)

# Hamilton path from 0 to 5 whose first arc leaves 0
g = random_oriented(RandomModel(10, 0.7, 3))
for pattern in ("fwd", "bwd"):
    r = find_adhp_between(g, 0, 5, pattern)
    print("path 0..5", pattern, r.verdict.value, r.witness.vertices if r.found else "")

t = almost_regular_tournament(20)
print("rotational tournament n=20:", find_adhc(t).verdict.value)
try:
    find_adhc(t, budget_states=10_000)
except BudgetExceeded as e:
    print("budget of 10k states ran out after", e.states, "states: no verdict")
