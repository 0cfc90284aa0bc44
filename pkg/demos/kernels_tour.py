"""Kernels, kernel-perfection and critical kernel imperfection on small named digraphs."""
from dikernels import (
    all_kernels,
    antihole,
    circulant,
    directed_cycle,
    find_kernel,
    is_cki,
    is_kernel_perfect,
)
from dikernels.families import biorient, star_edges

# even cycles alternate, odd cycles have nowhere to stop
for n in range(3, 9):
    c = directed_cycle(n)
    print(f"C{n}: kernels {[sorted(k) for k in all_kernels(c)]}, kernel-perfect {is_kernel_perfect(c)}, CKI {is_cki(c)}")

# a biorientation always has a kernel: any maximal independent set absorbs
star = biorient(star_edges(4), 5)
print("star kernels:", [sorted(k) for k in all_kernels(star)])

# antiholes: every vertex beats all but its predecessor
for n in range(3, 8):
    print(f"A{n}: CKI {is_cki(antihole(n))}")

# the one sporadic asymmetric example below order 8
c712 = circulant(7, {1, 2})
print("C7(1,2): has kernel", find_kernel(c712).found, "CKI", is_cki(c712))
