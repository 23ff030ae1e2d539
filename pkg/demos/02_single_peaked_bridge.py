"""The correspondence between single-peaked orderings and uninorms.

An ordering of the chain is single-peaked when, among any three elements,
the middle one is never ranked last; equivalently its height chart has one
local maximum. Taking the maximum with respect to such an ordering gives an
idempotent discrete uninorm, and the map is a bijection.
"""
from uninorms import (
    enumerate_single_peaked,
    order_to_uninorm,
    parse_order,
    render_contour_text,
    render_profile,
    uninorm_to_order,
)

print("A single-peaked ordering and one that is not:\n")
for text in ("2 3 4 1 5", "5 2 1 3 4"):
    print(render_profile(parse_order(text)))

print("The maximum with respect to 2 < 3 < 4 < 1 < 5 (as an operation):\n")
order = parse_order("2 3 4 1 5")
op = order_to_uninorm(order)
print(render_contour_text(op))

back = uninorm_to_order(op)
print(f"Reading the ordering back from the table: {' '.join(map(str, back.seq))}\n")

n = 5
orders = list(enumerate_single_peaked(n))
print(f"There are {len(orders)} single-peaked orderings of the {n}-chain, "
      f"and the last-ranked element is always 1 or {n}:")
for o in orders:
    print(f"  {' '.join(map(str, o.seq))}")
