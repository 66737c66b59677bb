"""Generate the bundled ten-crossing table data.

Needs the ``database_knotinfo`` package (only here, not at runtime) to
cross-check every generated diagram by its Jones polynomial.  Usage:

    python tools/gen_table.py [--knotinfo PATH] [--out DIR]
"""

import argparse
import itertools
import json
import re
import sys
from pathlib import Path

from qatwist.diagram import (canonical_key, mirror, parse_pd, from_crossings,
                             simplify, smooth_corners)
from qatwist.families import pretzel_determinant, pretzel_diagram
from qatwist.qa import certify, verify
from qatwist.statesum import jones_polynomial
from qatwist.tait import goeritz_determinant
from qatwist.tangle import RationalTangle, epsilon, replace_with_tangle

# name, Conway notation (display), tangle digit strings, index of the bold one
MONTESINOS = [
    ("10_129", "32, 21, 2-", ["32", "21", "2"], 0),
    ("10_130", "311, 3, 2-", ["311", "3", "2"], 1),
    ("10_131", "311, 21, 2-", ["311", "21", "2"], 1),
    ("10_133", "23, 21, 2-", ["23", "21", "2"], 0),
    ("10_134", "221, 3, 2-", ["221", "3", "2"], 1),
    ("10_135", "221, 21, 2-", ["221", "21", "2"], 1),
    ("10_137", "22, 211, 2-", ["22", "211", "2"], 0),
    ("10_138", "211, 211, 2-", ["211", "211", "2"], 0),
    ("10_142", "31, 3, 3-", ["31", "3", "3"], 1),
    ("10_144", "31, 21, 21-", ["31", "21", "21"], 1),
    ("10_146", "22, 21, 21-", ["22", "21", "21"], 1),
    ("10_147", "211, 3, 21-", ["211", "3", "21"], 1),
]

NEGATIVE = [("9_46", (3, 3, -3)), ("10_140", (4, 3, -3))]


def parse_jones(text):
    out = {}
    for sign, coeff, power in re.findall(r"([+-]?)\s*(\d*)\*?(t(?:\^\(?-?\d+\)?)?)?", text.replace(" ", "")):
        if not coeff and not power:
            continue
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        if not power:
            e = 0
        elif power == "t":
            e = 1
        else:
            e = int(power[2:].strip("()"))
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def jones_dict(d):
    return {int(e): c for e, c in jones_polynomial(d).coeffs.items()}


def matches(d, target):
    j = jones_dict(d)
    return j == target or {-e: c for e, c in j.items()} == target


def montesinos_entry(name, conway, digits, bold, target):
    for seeds in itertools.product((1, -1), repeat=3):
        base = pretzel_diagram(seeds)
        for axes in itertools.product((0, 1), repeat=3):
            for orders in itertools.product((False, True), repeat=3):
                tangles = []
                for i, ds in enumerate(digits):
                    co = [int(x) for x in ds]
                    if orders[i]:
                        co.reverse()
                    eps = epsilon(base, i, axes[i])
                    tangles.append(RationalTangle(tuple(eps * a for a in co)))
                reduced = base
                for i in range(3):
                    if i != bold:
                        reduced = replace_with_tangle(reduced, i, tangles[i], axes[i])
                full = replace_with_tangle(reduced, bold, tangles[bold], axes[bold])
                if full.n != 10 or not matches(full, target):
                    continue
                res = certify(reduced, crossing=bold)
                if res.status != "Certified":
                    continue
                return reduced.with_marked(None), full.with_marked(None), bold, tangles[bold], axes[bold]
    raise SystemExit("no construction found for %s" % name)


def twist_regions_of_two(d):
    """Pairs (c, k) where crossing c has a bigon face at corner k."""
    out = []
    for c in range(d.n):
        for k in range(4):
            face = d.faces[d.corner_face[(c, k)]]
            if len(face) == 2 and len({cc for cc, _ in face}) == 2:
                out.append((c, k))
    return out


def collapse_entry(name, pd_terms, target):
    """Collapse a two-crossing twist region of the table diagram to one crossing."""
    full0 = from_crossings(pd_terms)
    key0 = canonical_key(full0)
    for c, k in twist_regions_of_two(full0):
      # one of the two smoothings leaves the other bigon crossing alone
      for merge in (k, k + 1):
        reduced = simplify(smooth_corners(full0, c, merge))
        if reduced.n != full0.n - 1:
            continue
        for i in range(reduced.n):
            for axes in (0, 1):
                eps = epsilon(reduced, i, axes)
                for co in ((2,), (1, 1)):
                    t = RationalTangle(tuple(eps * a for a in co))
                    full = replace_with_tangle(reduced, i, t, axes)
                    if canonical_key(full) != key0 and canonical_key(mirror(full)) != key0:
                        continue
                    if not matches(full, target):
                        continue
                    if certify(reduced, crossing=i).status != "Certified":
                        continue
                    return reduced, full.with_marked(None), i, t, axes
    raise SystemExit("no collapse found for %s" % name)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--knotinfo", default="/tmp/ki")
    ap.add_argument("--out", default=str(Path(__file__).resolve().parents[1]
                                         / "src" / "qatwist" / "data" / "table"))
    args = ap.parse_args(argv)
    sys.path.insert(0, args.knotinfo)
    from database_knotinfo import link_list

    info = {k["name"]: k for k in link_list() if "name" in k}
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    entries = []

    def write(name, kind, d):
        fname = "%s.%s.pd" % (name, kind)
        (out / fname).write_text("# %s\n%s\n" % (name, d.to_pd()))
        return fname

    for name, conway, digits, bold in MONTESINOS:
        target = parse_jones(info[name]["jones_polynomial"])
        reduced, full, c, t, axes = montesinos_entry(name, conway, digits, bold, target)
        entries.append((name, conway, reduced, full, c, t, axes, int(info[name]["determinant"])))

    k160 = info["10_160"]
    terms = json.loads(k160["pd_notation"])
    reduced, full, c, t, axes = collapse_entry("10_160", terms, parse_jones(k160["jones_polynomial"]))
    entries.append(("10_160", "-30: 20: 20", reduced, full, c, t, axes, int(k160["determinant"])))

    table = {"entries": [], "negative": []}
    for name, conway, reduced, full, c, t, axes, det in entries:
        assert goeritz_determinant(full) == det, name
        res = certify(full)
        assert res.status == "Certified" and verify(res.certificate, full), name
        table["entries"].append({
            "name": name, "conway": conway,
            "reduced": write(name, "reduced", reduced),
            "knot": write(name, "knot", full),
            "crossing": c, "tangle": list(t.coefficients), "axes": axes,
            "det": det,
        })
        print(name, "crossing", c, t, "axes", axes, "det", det)
    for name, spec in NEGATIVE:
        d = pretzel_diagram(spec)
        assert matches(d, parse_jones(info[name]["jones_polynomial"])), name
        assert goeritz_determinant(d) == pretzel_determinant(spec) == int(info[name]["determinant"])
        table["negative"].append({"name": name, "pretzel": list(spec),
                                  "knot": write(name, "knot", d),
                                  "det": int(info[name]["determinant"])})
    (out / "table.json").write_text(json.dumps(table, indent=1) + "\n")


if __name__ == "__main__":
    main()
