"""Sort the strong 4-transitive digraphs of order <= 5 into their structural families."""
from collections import Counter

from dikernels import EnumClass, FilterSpec, class_table, classify_strong_4_transitive, encode_digraph6
from dikernels.families import add_pendants, three_cycle_extension

labels = Counter()
for n in range(1, 6):
    for d in class_table(n, EnumClass.ALL, FilterSpec.of("k-transitive:4", "strong")):
        labels[classify_strong_4_transitive(d).index] += 1
print("family sizes:", dict(sorted(labels.items())))

# a 3-cycle extension with two symmetric pendants on one vertex
d = add_pendants(three_cycle_extension((1, 2, 1)), 0, 2)
lab = classify_strong_4_transitive(d)
print(encode_digraph6(d), "->", lab.index, lab.evidence["partition"], "pendants", lab.evidence["pendants"])
