# The three extremal families sit exactly one below the degree threshold
# and still have no antidirected Hamilton cycle.
from adhc_lab import ExtremalSpec, find_adhc, generate_extremal, sigma_plus_minus
from adhc_lab.harness import ore_threshold

for family, scales in [("C", [1, 2, 3, 4]), ("B", [2, 3, 4, 5]), ("A", [1])]:
    for s in scales:
        inst = generate_extremal(ExtremalSpec(family, s))
        g = inst.graph
        res = find_adhc(g)
        print(f"{family} s={s}  n={g.n:2d}  parts={inst.partition.sizes()}  "
              f"sigma+-={sigma_plus_minus(g):2d}  threshold={ore_threshold(g.n):2d}  "
              f"ADHC={res.verdict.value}  states={res.states}")

# family B at s = 1 is the odd one out: one C vertex cannot be both an in- and
# an out-neighbour of the single A vertex, so sigma+- lands at 2, not 3
b1 = generate_extremal(ExtremalSpec("B", 1))
print("B s=1 sigma+- =", sigma_plus_minus(b1.graph), "(formula says", b1.spec.expected_sigma, ")")

# a seeded variant shuffles ids inside each part; sigma and the verdict do not move
v = generate_extremal(ExtremalSpec("C", 3), seed=42)
print("C s=3 seed=42:", sigma_plus_minus(v.graph), find_adhc(v.graph).verdict.value)
