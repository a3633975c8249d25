"""Regenerate the bundled instance corpus.

Expected sizes come from a naive multiset enumeration that shares no code
with the library, so the corpus doubles as a regression oracle.
"""

import json
import random
from itertools import combinations_with_replacement
from math import gcd
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "sumsetlab" / "data" / "corpus"
SIZE_HORIZON = 6


def naive_sizes(points, horizon):
    out = []
    for N in range(1, horizon + 1):
        sums = {tuple(map(sum, zip(*combo))) for combo in combinations_with_replacement(points, N)}
        out.append(len(sums))
    return out


def instance(name, points, tags, basis=None, extra=None):
    expected = {"sizes": naive_sizes([tuple(p) for p in points], SIZE_HORIZON), "tags": tags}
    expected.update(extra or {})
    obj = {"name": name, "points": sorted(points), "expected": expected}
    if basis is not None:
        obj["basis"] = basis
    return obj


def corpus():
    items = []
    for pts in ([[0], [1]], [[0], [1], [2]], [[0], [2], [3]], [[0], [2], [5]]):
        name = "line_" + "_".join(str(p[0]) for p in pts)
        items.append(instance(name, pts, ["one_dim", "simplex"]))
    for a, b in ((3, 7), (5, 12), (4, 9)):
        assert gcd(a, b) == 1
        items.append(instance(f"triple_{a}_{b}", [[0], [a], [b]], ["one_dim", "triple", "simplex"],
                              extra={"n_kh": max(1, b - 2), "n_str": 1}))
    for m1, m2 in ((2, 3), (3, 5), (2, 5)):
        items.append(instance(f"kite_{m1}_{m2}", [[0, 0], [1, 1], [m1, 0], [0, m2]],
                              ["kite", "simplex", "d_plus_2"], extra={"n_kh": m1 * m2 - 3, "n_str": 1}))
    simplices = {
        "tri_unit": [[0, 0], [1, 0], [0, 1]],
        "tri_2_3": [[0, 0], [2, 0], [0, 3]],
        "tri_3_interior": [[0, 0], [3, 0], [0, 3], [1, 1]],
        "tri_4_2_edge": [[0, 0], [4, 0], [0, 2], [1, 0]],
        "tri_5_two_inner": [[0, 0], [5, 0], [0, 5], [1, 2], [2, 1]],
        "tri_6_4_three_inner": [[0, 0], [6, 0], [0, 4], [1, 1], [3, 1], [2, 2]],
        "tri_skew": [[0, 0], [3, 1], [1, 3], [2, 2]],
        "tet_unit": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]],
        "tet_reeve_3": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 3]],
        "tet_4_center": [[0, 0, 0], [4, 0, 0], [0, 4, 0], [0, 0, 4], [1, 1, 1]],
        "tet_3_two_edge": [[0, 0, 0], [3, 0, 0], [0, 3, 0], [0, 0, 3], [1, 1, 0], [0, 1, 1]],
    }
    for name, pts in simplices.items():
        d = len(pts[0])
        tags = ["simplex"]
        if len(pts) == d + 1:
            tags.append("d_plus_1")
        elif len(pts) == d + 2:
            tags.append("d_plus_2")
        items.append(instance(name, pts, tags))
    rng = random.Random(20240611)
    made = 0
    while made < 3:
        ell = 4
        pts = sorted({(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(ell)})
        if len(pts) != ell:
            continue
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        if max(xs) - min(xs) > 3 or max(ys) - min(ys) > 3:
            continue
        # skip collinear draws
        (x0, y0), (x1, y1) = pts[0], pts[1]
        if all((x1 - x0) * (y - y0) - (y1 - y0) * (x - x0) == 0 for x, y in pts):
            continue
        made += 1
        items.append(instance(f"random2d_{made}", [list(p) for p in pts], ["random"]))
    items.append(instance("unit_square", [[0, 0], [1, 0], [0, 1], [1, 1]], ["square"]))
    return items


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    for obj in corpus():
        (OUT / f"{obj['name']}.json").write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
