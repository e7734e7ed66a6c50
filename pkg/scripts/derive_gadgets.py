#!/usr/bin/env python3
"""Regenerate the bundled gadget file from first principles.

Both gadgets the toolkit ships are pinned uniquely by core sweeps rather
than entered by hand: F5 is the one minimal non-embeddable core at host
order 9 (edge budget 6) besides K4- and S6, and G1 is the one at host
order 10 (edge budget 8) besides the four constructible cores and the two
terminal unions.  F5 is cross-checked against its standard construction
(two triangles sharing a vertex) before being written.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hamsq.catalog import (
    complete,
    complete_minus_edge,
    default_gadget_path,
    friendship,
    split_star,
    star,
    wheel,
)
from hamsq.core import disjoint_union
from hamsq.enumeration import minimal_forbidden_cores
from hamsq.iso import canonical_form, is_isomorphic


def unique_unnamed_core(n, t_max, known):
    cores = minimal_forbidden_cores(n, t_max)
    unmatched = [g for g in cores if not any(is_isomorphic(g, h) for h in known)]
    if len(unmatched) != 1:
        raise SystemExit(
            f"host order {n}: expected exactly one unnamed core, found {len(unmatched)}"
        )
    return unmatched[0]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "--out",
        default=str(default_gadget_path()),
        help="gadget file to write (default: the bundled location)",
    )
    args = ap.parse_args(argv)

    f5 = unique_unnamed_core(9, 6, [complete_minus_edge(4), star(6)])
    if not is_isomorphic(f5, friendship(5)):
        raise SystemExit("derived F5 is not two triangles sharing a vertex")
    g1 = unique_unnamed_core(
        10,
        8,
        [
            complete(4),
            star(7),
            split_star(5, 2),
            wheel(5),
            disjoint_union(complete(3), star(6)),
            disjoint_union(star(4), star(6)),
        ],
    )

    lines = [
        "# Gadget graphs resolvable only by computation, graph6 encoded.",
        "# Regenerate with scripts/derive_gadgets.py; do not edit by hand.",
        "# F5: the unique minimal non-embeddable core at host order 9 (t <= 6)",
        "# besides K4- and S6; equals two triangles sharing a vertex.",
        f"F5\t{canonical_form(f5).code}",
        "# G1: the unique minimal non-embeddable core at host order 10 (t <= 8)",
        "# beyond the constructible cores and terminal unions.",
        f"G1\t{canonical_form(g1).code}",
        "",
    ]
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(lines))
    for nm, g in (("F5", f5), ("G1", g1)):
        print(
            f"{nm} = {canonical_form(g).code}: {g.order} vertices,",
            f"{g.edge_count()} edges, degrees {sorted(g.degrees())}",
        )
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
