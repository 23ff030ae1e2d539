"""Tour of the property checkers on the fixture catalog.

Every definitional check has a graphical twin that reads the contour plot
instead: conservativeness via diagonal-connectedness, neutral elements via
identity sections or the unique isolated point, associativity of conservative
operations via the rectangle test.
"""
from uninorms import (
    find_neutral_conservative,
    find_neutral_element,
    find_neutral_via_sections,
    fixture,
    fixture_names,
    is_associative,
    is_conservative,
    is_conservative_via_contour,
    profile,
    rect_associativity_witness,
    render_contour_text,
)

print("Fixture profiles:\n")
header = f"{'name':8s} idem cons symm nondec assoc bisym neutral isolated"
print(header)
for name in fixture_names():
    p = profile(fixture(name))
    flags = "  ".join(
        " yes" if f else "  no"
        for f in (p.idempotent, p.conservative, p.symmetric,
                  p.nondecreasing, p.associative, p.bisymmetric)
    )
    print(f"{name:8s} {flags}   {p.neutral or '-'}     {list(p.isolated) or '-'}")

print("\nGraphical checks agree with the definitions:")
op = fixture("fig3")
print(f"  fig3 conservative: naive={is_conservative(op)}, "
      f"contour={is_conservative_via_contour(op)}")
sections = find_neutral_via_sections(op)
print(f"  fig3 neutral via sections: {sections.e} "
      f"(definition gives {find_neutral_element(op)})")
op = fixture("fig14")
print(f"  fig14 neutral via its isolated point: {find_neutral_conservative(op)}")

print("\nThe rectangle test on a conservative operation that fails associativity:")
op = fixture("fig7")
w = rect_associativity_witness(op)
print(f"  fig7 associative = {is_associative(op)}; witness triple {w.triple} "
      f"with pairwise distinct values {w.values}")
print("  the failing rectangle, bracketed on the plot:\n")
print(render_contour_text(op, witness=w.rectangle.vertices))
