# Non-expansion witnesses turn into partitions (A, B, C, D); on the extremal
# families the recovered partition is nice and the vertices are good.
from fractions import Fraction

from adhc_lab import ExtremalSpec, generate_extremal
from adhc_lab.generators import almost_regular_tournament
from adhc_lab.structure import (
    ExpanderParams,
    Mode,
    check_nice_partition,
    classify_good_bad,
    derive_nice_partition,
    find_special_arcs,
    is_robust_outexpander,
)

params = ExpanderParams(Fraction(1, 10), Fraction(1, 10))

t = almost_regular_tournament(15)
print("tournament n=15 expands:", is_robust_outexpander(t, ExpanderParams(Fraction(1, 15), Fraction(1, 3))).verdict)

inst = generate_extremal(ExtremalSpec("C", 3))
g = inst.graph
rep = is_robust_outexpander(g, params, Mode.EXACT)
print("family C s=3 expands:", rep.verdict, " witness S =", rep.witness.to_list(), " RN+ =", rep.rn_plus.to_list())

dp = derive_nice_partition(g, rep)
print("derived", dp.partition.to_json(), "reversed" if dp.reversed else "")
print("e(A∪D, C∪D) =", dp.graph.arcs_between(dp.partition.a | dp.partition.d, dp.partition.c | dp.partition.d),
      "<= nu n^2 =", params.nu * g.n ** 2)

# the generating partition itself
print(check_nice_partition(g, inst.partition, Fraction(1, 4)))
labels = classify_good_bad(g, inst.partition, Fraction(1, 10))
print("bad vertices:", labels.bad.to_list())

for fam, s in [("A", 1), ("B", 3), ("C", 3)]:
    x = generate_extremal(ExtremalSpec(fam, s))
    print(fam, "special arcs:", find_special_arcs(x.graph, x.partition))

# sampled mode for graphs past the exact cap
big = almost_regular_tournament(40)
r = is_robust_outexpander(big, ExpanderParams(Fraction(1, 40), Fraction(1, 4)), Mode.SAMPLED, samples=500, seed=1)
print("n=40 sampled:", r.verdict, "conclusive" if r.conclusive else "(inconclusive)")
