# D-proper paths through special arcs, and the long B-D path.
from fractions import Fraction

from adhc_lab import ExtremalSpec, generate_extremal
from adhc_lab.structure import (
    ExtensionFailed,
    build_bd_path,
    check_L_conditions,
    classify_good_bad,
    extend_to_proper_path,
    find_special_arcs,
    find_two_disjoint_special_arcs,
)

# family A with two extra arcs: 0 -> 8 runs A -> C and 9 -> 1 runs C -> A
base = generate_extremal(ExtremalSpec("A", 1))
g = base.graph.add_arcs([(0, 8), (9, 1)])
p = base.partition
labels = classify_good_bad(g, p, Fraction(1, 5))
print("parts:", p.to_json())
print("special:", find_special_arcs(g, p), " disjoint pair:", find_two_disjoint_special_arcs(g, p))

for arc in [(0, 8), (9, 1)]:
    pp = extend_to_proper_path(g, p, labels, arc)
    print("proper path through", arc, pp.vertices, [d.value for d in pp.walk.directions])

# asking the second path to avoid the first one is too much for so small a graph
first = extend_to_proper_path(g, p, labels, (0, 8))
try:
    extend_to_proper_path(g, p, labels, (9, 1), w=[v for v in first.vertices if v not in (9, 1)])
except ExtensionFailed as e:
    print("disjoint second path:", e)

# family B: both special arcs go through the single A vertex, and extension fails
b = generate_extremal(ExtremalSpec("B", 3))
lb = classify_good_bad(b.graph, b.partition, Fraction(1, 10))
for arc in find_special_arcs(b.graph, b.partition):
    try:
        extend_to_proper_path(b.graph, b.partition, lb, arc)
    except ExtensionFailed as e:
        print("B arc", arc, "stuck at", e.choice_point)

c = generate_extremal(ExtremalSpec("C", 4))
lc = classify_good_bad(c.graph, c.partition, Fraction(1, 10))
walk = build_bd_path(c.graph, c.partition, lc, 9)
print("P* =", walk.vertices)
print(check_L_conditions(c.graph, c.partition, lc, walk, Fraction(1, 10)))
