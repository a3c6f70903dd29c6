#!/usr/bin/env python3
"""Smoke test for the bookem_py extension module.

Builds nothing itself: it locates the cdylib produced by
`cargo build -p bookem-py` (release preferred), loads it, and runs the main
operations end to end. Exits nonzero on the first failure.
"""

import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / "release" / "libbookem_py.so",
        ROOT / "target" / "debug" / "libbookem_py.so",
        ROOT / "target" / "release" / "libbookem_py.dylib",
        ROOT / "target" / "debug" / "libbookem_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("no built extension found; run `cargo build -p bookem-py` first")
    stage = pathlib.Path(tempfile.mkdtemp(prefix="bookem-py-"))
    shutil.copy(built, stage / "bookem_py.so")
    sys.path.insert(0, str(stage))
    import bookem_py

    return bookem_py


def main():
    bk = load_module()

    # K4: planar, not outerplanar, pagenumber 2
    k4 = bk.Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert k4.n == 4 and k4.m == 6
    assert k4.is_planar()
    assert not k4.is_outerplanar()
    assert k4.pagenumber() == 2
    layout = k4.two_page_embed()
    assert layout.page_count <= 2
    assert layout.verify(k4) == []
    assert layout.to_svg(k4).startswith("<svg")
    assert '"page_count": 2' in layout.to_json(k4)

    # the same layout machinery under a hand-picked order
    assert k4.assign_pages([0, 1, 2, 3], 1) is None
    two = k4.assign_pages([0, 1, 2, 3], 2)
    assert two is not None and two.page_count == 2

    # K5 is rejected as nonplanar
    k5 = bk.Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert not k5.is_planar()
    assert k5.pagenumber() == 3
    try:
        k5.two_page_embed()
    except bk.BookemError as e:
        assert "planar" in str(e)
    else:
        sys.exit("expected BookemError for K5")

    # grids and x-trees embed in at most two pages, verifier clean
    for g in [bk.grid(6, 7), bk.x_tree(4), bk.extended_x_tree(4)]:
        layout = g.two_page_embed()
        assert layout.page_count <= 2
        assert layout.verify(g) == []

    # an outerplanar cycle stays on one page
    c6 = bk.Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert c6.is_outerplanar()
    assert c6.two_page_embed().page_count == 1

    # a graph with a separating triangle fails directly but succeeds
    # up to homeomorphism
    octa = bk.Graph(
        6,
        [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5),
         (2, 4), (2, 5), (3, 4), (3, 5)],
    )
    stuffed = bk.Graph(7, octa.edges() + [(6, 0), (6, 2), (6, 4)])
    assert stuffed.separating_triangles() == [(0, 2, 4)]
    try:
        stuffed.two_page_embed()
    except bk.BookemError as e:
        assert "separating" in str(e)
    else:
        sys.exit("expected BookemError for a separating triangle")
    sub, sub_layout, crossings = stuffed.homeomorphic_two_page()
    assert sub.n == stuffed.n + stuffed.m
    assert sub_layout.page_count <= 2
    assert sub_layout.verify(sub) == []
    assert crossings >= 0

    # augmentation produces a triangulation-sized supergraph
    c4 = bk.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    aug, added = c4.augment_to_triangulation()
    assert aug.m == 3 * aug.n - 6
    assert added == list(range(4, aug.n))

    # subdivision and parsing round out the module surface
    sub_k4, path_map = bk.subdivide(k4, 1)
    assert sub_k4.n == 10 and len(path_map) == 6
    parsed = bk.parse_edge_list("p 3 3\n0 1\n1 2\n2 0\n")
    assert parsed.n == 3 and parsed.pagenumber() == 1

    print("bookem_py smoke test: OK")


if __name__ == "__main__":
    main()
