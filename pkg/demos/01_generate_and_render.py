"""Generate every idempotent discrete uninorm on a small chain and draw them.

Each operation is built shell by shell: pick the neutral element, then grow
an interval of the chain one endpoint at a time, connecting the new L-shaped
band of points with the newly added element as common value. The isolated
cell (marked *) is always the neutral element.
"""
from uninorms import (
    count_uninorms_by_neutral,
    find_neutral_conservative,
    generate_all_uninorms_gc,
    render_contour_text,
)

N = 4

print(f"All idempotent discrete uninorms on the {N}-chain "
      f"(expected 2^{N - 1} = {2 ** (N - 1)}):\n")

for i, op in enumerate(generate_all_uninorms_gc(N), start=1):
    e = find_neutral_conservative(op)
    print(f"#{i}  neutral element {e}")
    print(render_contour_text(op))

print("How many have each neutral element?")
for e in range(1, N + 1):
    print(f"  e = {e}: {count_uninorms_by_neutral(N, e)}  (binomial C({N - 1},{e - 1}))")
