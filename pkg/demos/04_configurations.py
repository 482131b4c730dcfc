"""Walkthrough: finding reducible configurations and replaying the fix.

Run as `python3 demos/04_configurations.py`.  A configuration is a small
labeled pattern whose presence lets one vertex be deleted, the rest be
colored recursively, and the deleted vertex's edges be re-colored within
the claimed palette.  `verify_reducibility` replays exactly that argument
on a concrete host graph.
"""

from strongedge import (
    Graph,
    Scheme,
    catalog,
    classify,
    find_configurations,
    verify_reducibility,
)


def main():
    for scheme in (Scheme.THETA7, Scheme.THETA8):
        names = [p.id for p in catalog(scheme)]
        print(f"catalog for {scheme.value}: {len(names)} patterns")
        for name in names:
            print("   ", name)
    print()

    # Every vertex of a 5-cycle is a 2-vertex whose neighbors are not
    # 4-vertices, so the theta7 sweep finds the bad-neighbor pattern at
    # each of the ten (vertex, neighbor) placements.
    c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    labels = classify(c5, Scheme.THETA7).labels
    matches = find_configurations(c5, Scheme.THETA7, labels)
    print("5-cycle, theta7:", len(matches), "matches")
    for m in matches[:3]:
        print("   ", m.pattern_id, m.mapping)
    print("    ...")

    # Replay one: delete the designated vertex, color the rest with 13
    # colors, then put the deleted edges back.
    report = verify_reducibility(c5, matches[0], budget=30.0)
    print("\nreplay of", matches[0].pattern_id)
    print("  verdict:  ", report.verdict)
    print("  palette:  ", report.k)
    print("  deleted:  ", report.deleted)
    print("  erased:   ", report.erased)
    print("  strategy: ", report.strategy)
    print("  bounds ok:", report.bounds_ok)

    # Patterns with explicit list-size bounds report each check.  A
    # triangle of two-4-neighbor 4-vertices (theta8) carries four of them.
    edges = [(0, 1), (0, 2), (1, 2)]
    nxt = 3
    for corner in (0, 1, 2):
        for _ in range(2):
            three = nxt
            edges.append((corner, three))
            nxt += 1
            for _ in range(2):
                edges.append((three, nxt))
                nxt += 1
    host = Graph(nxt, edges)
    labels = classify(host, Scheme.THETA8).labels
    match = next(
        m
        for m in find_configurations(host, Scheme.THETA8, labels)
        if m.pattern_id == "triangle-4c"
    )
    report = verify_reducibility(host, match, budget=30.0)
    print("\nreplay of triangle-4c:", report.verdict)
    for check in report.bounds:
        print(f"  edge {check.edge} {check.phase}: "
              f"{check.observed} <= {check.asserted} -> {check.ok}")


if __name__ == "__main__":
    main()
