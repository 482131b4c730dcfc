"""Walkthrough: strong edge-coloring, exact and decision variants.

Run as `python3 demos/02_coloring.py`.  Two edges conflict when they share
an endpoint or some third edge joins them; a strong coloring gives
conflicting edges distinct colors.
"""

from strongedge import (
    Graph,
    PartialColoring,
    available_colors,
    build_conflict_graph,
    chi_s_exact,
    is_valid_strong_coloring,
    k_colorable,
)


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def main():
    # On a 5-cycle every pair of edges conflicts, so all five edges need
    # their own color.
    c5 = cycle(5)
    cg = build_conflict_graph(c5)
    print("5-cycle conflict graph: each edge sees", len(cg.sees[0]), "others")
    result = chi_s_exact(cg)
    print("exact strong chromatic index:", result.value,
          f"(search explored {result.nodes} nodes)")
    print("optimal coloring, edge -> color:")
    for e, color in enumerate(result.coloring.colors):
        print("   ", cg.base.edges[e], "->", color)

    # The decision form answers one palette size at a time.
    print("\n4 colors:", k_colorable(cg, 4).status)
    print("5 colors:", k_colorable(cg, 5).status)

    # A 6-cycle relaxes the conflicts: opposite edges never see each other,
    # and three colors, each reused once, are enough.
    c6 = cycle(6)
    cg6 = build_conflict_graph(c6)
    print("\n6-cycle exact strong chromatic index:",
          chi_s_exact(cg6).value)

    # Validity checking works on partial colorings too, and reports every
    # conflicting same-colored pair it finds.
    partial = PartialColoring(3, [1, 2, 3, None, None, None])
    ok, violations = is_valid_strong_coloring(cg6, partial)
    print("\npartial coloring of the 6-cycle valid so far:", ok)
    print("colors still open for edge 3:",
          sorted(available_colors(cg6, partial, 3)))

    bad = PartialColoring(3, [1, 1, 3, None, None, None])
    ok, violations = is_valid_strong_coloring(cg6, bad)
    print("repainting edge 1 with color 1 breaks it:", violations)


if __name__ == "__main__":
    main()
