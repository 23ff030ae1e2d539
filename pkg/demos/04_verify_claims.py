"""Run the whole verification catalog at comfortable sizes.

Every named claim is checked by brute force over its candidate class
(exhaustively, or by fixed-seed sampling where exhaustion is impossible);
a claim passes when zero counterexamples are found.
"""
from uninorms import theorem_bound, theorem_names, verify_theorem

SIZES = {name: min(theorem_bound(name), 4) for name in theorem_names()}
SIZES["main"] = 6
SIZES["main2n"] = 12
SIZES["gc"] = 10
SIZES["qob"] = 8
SIZES["rec8n"] = 10

for name in theorem_names():
    if name == "open-questions":
        continue
    n = SIZES[name]
    r = verify_theorem(name, n)
    print(f"{name:16s} n={n:2d}  candidates={r['candidates']:>8}  "
          f"counterexamples={r['counterexample_count']}  "
          f"[{r['runtime_seconds']:.2f}s]  {r['summary']}")
