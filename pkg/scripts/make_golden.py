"""Regenerate the golden reference files under tests/golden/."""

import pathlib

from nihoval import gf2m, geometry, gfun

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"

TABLE1 = (("hyperconic", None), ("translation", 2), ("segre", None),
          ("subiaco_payne", None), ("cherowitzo", None), ("okeefe_penttila", None))
TABLE2 = ("hyperconic", "subiaco", "subiaco2", "adelaide")


def main():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for m in range(1, 8):
        P = gf2m.field_create(m)
        (GOLDEN / f"field_m{m}.json").write_text(P.to_json() + "\n")
    P5 = gf2m.field_create(5)
    for fam, r in TABLE1:
        g = gfun.g_catalog(P5, fam, r=r)
        (GOLDEN / f"table1_{fam}.csv").write_text(g.serialize_csv())
    P6 = gf2m.field_create(6)
    for fam in TABLE2:
        g = gfun.g_catalog(P6, fam)
        (GOLDEN / f"table2_{fam}.csv").write_text(g.serialize_csv())
    # section-4.6 hyperoval point sets in both models
    for m, fam in ((3, "hyperconic"), (4, "hyperconic"), (4, "lunelli_sce")):
        P = gf2m.field_create(m)
        g = gfun.g_catalog(P, fam)
        pts = g.hyperoval_points_k()
        (GOLDEN / f"sec46_{fam}_m{m}_K.json").write_text(
            geometry.points_to_json(P, pts, "K") + "\n")
        (GOLDEN / f"sec46_{fam}_m{m}_H.json").write_text(
            geometry.points_to_json(P, pts, "H") + "\n")
    print("golden files written to", GOLDEN)


if __name__ == "__main__":
    main()
