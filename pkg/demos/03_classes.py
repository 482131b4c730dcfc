"""Walkthrough: the local vertex classes the discharging arguments use.

Run as `python3 demos/03_classes.py`.  Each scheme labels vertices by
degree and by how many highest-degree neighbors they have; a second pass
splits the one-high-neighbor 3-vertices by the quality of their support.
"""

from strongedge import Graph, Scheme, classify, scheme_labels, scheme_target


def showcase():
    # A hub of degree 4 (vertex 0), one 2-vertex (4), several 3-vertices
    # with one 4-neighbor each (1, 2, 3), and a 3-regular back side.
    edges = [
        (0, 1), (0, 2), (0, 3), (0, 4),
        (1, 5), (1, 6), (2, 5), (2, 6), (3, 7), (3, 8),
        (4, 7), (5, 9), (6, 9), (7, 8), (8, 9),
    ]
    return Graph(10, edges)


def main():
    g = showcase()
    for scheme in (Scheme.THETA7, Scheme.THETA8):
        print(f"scheme {scheme.value} (density target {scheme_target(scheme)})")
        print("  proper labels:",
              ", ".join(sorted(label.value for label in scheme_labels(scheme))))
        result = classify(g, scheme)
        for v in range(g.n):
            print(f"  vertex {v} (degree {g.degree(v)}):",
                  result.labels[v].value)
        if result.warnings:
            print("  warnings:")
            for w in result.warnings:
                print("   ", w)
        print()

    # The second pass in action: vertices 1 and 2 lean on 5 and 6, whose
    # other neighbors are all 3-vertices, so both are the weak kind; vertex
    # 3 leans on a mix and comes out moderate.
    labels = classify(g, Scheme.THETA7).labels
    for v in (1, 2, 3):
        print(f"one-4-neighbor vertex {v} refines to {labels[v].value}")


if __name__ == "__main__":
    main()
