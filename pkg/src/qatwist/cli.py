"""Command-line interface and the bundled ten-crossing table.

Exit status: 0 on success, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .diagram import DiagramError, LinkDiagram, canonical_key, parse_pd
from .families import (ALTERNATING, NOTQA_LSPACE, NOTQA_THM, OPEN, QA_THM,
                       PretzelSpec, classify_pretzel, pretzel_determinant,
                       pretzel_diagram)
from .qa import (CertificateFormatError, certify, from_json, to_json, verify)
from .statesum import (BudgetExceeded, determinant_jones, jones_polynomial,
                       state_summary, turaev_genus)
from .tait import goeritz_determinant, tree_determinant
from .tangle import ExtensionViolated, RationalTangle, replace_with_tangle

NEGATIVE_BUDGET = 10 ** 6


class MissingDataFile(FileNotFoundError):
    pass


class UsageError(Exception):
    pass


# -- table data ----------------------------------------------------------


@dataclass(frozen=True)
class TableEntry:
    name: str
    conway: str
    reduced: LinkDiagram
    knot: LinkDiagram
    tangle_crossing: int
    tangle: RationalTangle
    axes: int
    det: int


@dataclass(frozen=True)
class NegativeFixture:
    name: str
    knot: LinkDiagram
    det: int


def data_dir(override: str | None = None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get("QACERT_DATA")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "data" / "table"


def _read_pd(root: Path, fname: str) -> LinkDiagram:
    path = root / fname
    if not path.is_file():
        raise MissingDataFile("missing data file %s" % path)
    return parse_pd(path.read_text())


def load_table(directory: str | Path | None = None):
    """Entries and negative fixtures from ``table.json`` in the data directory."""
    root = data_dir(str(directory) if directory is not None else None)
    index = root / "table.json"
    if not index.is_file():
        raise MissingDataFile("missing data file %s" % index)
    raw = json.loads(index.read_text())
    entries = [TableEntry(e["name"], e["conway"], _read_pd(root, e["reduced"]),
                          _read_pd(root, e["knot"]), int(e["crossing"]),
                          RationalTangle(tuple(e["tangle"])), int(e["axes"]), int(e["det"]))
               for e in raw["entries"]]
    negatives = [NegativeFixture(e["name"], _read_pd(root, e["knot"]), int(e["det"]))
                 for e in raw.get("negative", [])]
    return entries, negatives


@dataclass(frozen=True)
class EntryReport:
    name: str
    ok: bool
    detail: str
    certificate: object = None


def verify_entry(e: TableEntry) -> EntryReport:
    """Certify the reduced diagram at the collapsed crossing, put the tangle
    back, and certify the result."""
    first = certify(e.reduced, crossing=e.tangle_crossing)
    if first.status != "Certified" or not verify(first.certificate, e.reduced):
        return EntryReport(e.name, False, "crossing %d not certified in reduced diagram"
                           % e.tangle_crossing)
    try:
        full = replace_with_tangle(e.reduced, e.tangle_crossing, e.tangle, e.axes)
    except ExtensionViolated as exc:
        return EntryReport(e.name, False, str(exc))
    if canonical_key(full) != canonical_key(e.knot):
        return EntryReport(e.name, False, "replaced diagram differs from the knot diagram")
    det = goeritz_determinant(full)
    if det != e.det:
        return EntryReport(e.name, False, "det %d, expected %d" % (det, e.det))
    res = certify(full)
    if res.status != "Certified" or not verify(res.certificate, full):
        return EntryReport(e.name, False, "replaced diagram not certified")
    c = first.certificate
    return EntryReport(e.name, True, "reduced det %d = %d + %d at crossing %d; %s gives det %d"
                       % (c.det, c.det0, c.det_inf, e.tangle_crossing, e.tangle, det),
                       res.certificate)


def table_verify(directory=None, negative_budget: int = NEGATIVE_BUDGET):
    """Per-entry reports for the table, then one per negative fixture."""
    entries, negatives = load_table(directory)
    reports = [verify_entry(e) for e in entries]
    for n in negatives:
        res = certify(n.knot, budget=negative_budget)
        ok = res.status != "Certified"
        reports.append(EntryReport(n.name, ok, "negative fixture: %s" % res.status))
    return reports


# -- command line --------------------------------------------------------


def _read_diagram(path: str) -> LinkDiagram:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc.strerror)) from None
    try:
        return parse_pd(text)
    except DiagramError as exc:
        raise UsageError("%s: %s: %s" % (path, type(exc).__name__, exc)) from None


def _spec(text: str) -> PretzelSpec:
    try:
        return PretzelSpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_det(args, out):
    d = _read_diagram(args.file)
    engines = ["tree", "goeritz", "jones"] if args.engine == "all" else [args.engine]
    funcs = {"tree": tree_determinant, "goeritz": goeritz_determinant,
             "jones": determinant_jones}
    values = []
    for name in engines:
        try:
            v = funcs[name](d)
        except BudgetExceeded as exc:
            raise UsageError(str(exc)) from None
        values.append(v)
        out.write("%s %d\n" % (name, v))
    if len(values) > 1:
        agree = len(set(values)) == 1
        out.write("AGREE\n" if agree else "DISAGREE\n")
        return 0 if agree else 1
    return 0


def cmd_jones(args, out):
    d = _read_diagram(args.file)
    try:
        out.write(jones_polynomial(d).format("t") + "\n")
    except BudgetExceeded as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_certify(args, out):
    d = _read_diagram(args.file)
    res = certify(d, budget=args.budget)
    if res.status == "Certified":
        c = res.certificate
        out.write("Certified det=%d nodes=%d\n" % (c.det, res.nodes))
        text = to_json(c)
        if args.output:
            Path(args.output).write_text(text)
        else:
            out.write(text)
        return 0
    if res.status == "NotQA":
        out.write("NotQA (%s)\n" % res.reason)
    else:
        out.write("Unknown (%s)\n" % res.note)
    return 1


def cmd_verify(args, out):
    try:
        cert = from_json(Path(args.cert).read_text())
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (args.cert, exc.strerror)) from None
    except (ValueError, CertificateFormatError) as exc:
        out.write("INVALID (malformed certificate: %s)\n" % exc)
        return 1
    d = _read_diagram(args.file)
    ok = verify(cert, d)
    out.write("VALID\n" if ok else "INVALID\n")
    return 0 if ok else 1


def cmd_twist(args, out):
    d = _read_diagram(args.file)
    try:
        t = RationalTangle.parse(args.tangle)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not 0 <= args.crossing < d.n:
        raise UsageError("crossing %d out of range 0..%d" % (args.crossing, d.n - 1))
    try:
        new = replace_with_tangle(d, args.crossing, t, args.axes)
    except ExtensionViolated as exc:
        raise UsageError(str(exc)) from None
    out.write(new.to_pd() + "\n")
    return 0


_LABEL_TEXT = {
    ALTERNATING: "Alternating",
    QA_THM: "QA (Theorem 3.2(1))",
    NOTQA_THM: "NotQA (Theorem 3.2(2))",
    NOTQA_LSPACE: "NotQA (L-space criterion)",
    OPEN: "Open",
}


def cmd_pretzel(args, out):
    s = _spec(args.spec)
    if args.what == "diagram":
        out.write(pretzel_diagram(s).to_pd() + "\n")
    elif args.what == "det":
        out.write("%d\n" % pretzel_determinant(s))
    else:
        d = pretzel_diagram(s)
        summary = state_summary(d)
        out.write("%s; %s; Turaev genus %d\n" % (
            _LABEL_TEXT[classify_pretzel(s)],
            "adequate" if summary.adequate else "not adequate", turaev_genus(d)))
    return 0


def cmd_adequacy(args, out):
    s = state_summary(_read_diagram(args.file))
    out.write("A-state circles %d, %s\n" % (s.all_A_circles,
                                           "A-adequate" if s.plus_adequate else "not A-adequate"))
    out.write("B-state circles %d, %s\n" % (s.all_B_circles,
                                           "B-adequate" if s.minus_adequate else "not B-adequate"))
    out.write("adequate\n" if s.adequate else "not adequate\n")
    return 0


def cmd_turaev(args, out):
    out.write("%d\n" % turaev_genus(_read_diagram(args.file)))
    return 0


def cmd_table(args, out):
    try:
        reports = table_verify(args.data)
    except MissingDataFile as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    for r in reports:
        out.write("%-8s %s  %s\n" % (r.name, "PASS" if r.ok else "FAIL", r.detail))
        if args.certs and r.certificate is not None:
            Path(args.certs).mkdir(parents=True, exist_ok=True)
            (Path(args.certs) / ("%s.cert.json" % r.name)).write_text(to_json(r.certificate))
    passed = sum(r.ok for r in reports)
    out.write("%d/%d passed\n" % (passed, len(reports)))
    return 0 if passed == len(reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qatwist",
                                description="Link determinants and quasi-alternating certificates.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("det", help="link determinant")
    s.add_argument("file")
    s.add_argument("--engine", choices=["tree", "goeritz", "jones", "all"], default="all")
    s.set_defaults(func=cmd_det)

    s = sub.add_parser("jones", help="Jones polynomial")
    s.add_argument("file")
    s.set_defaults(func=cmd_jones)

    qa = sub.add_parser("qa", help="quasi-alternating certificates")
    qsub = qa.add_subparsers(dest="qa_command", required=True)
    s = qsub.add_parser("certify")
    s.add_argument("file")
    s.add_argument("--budget", type=int, default=100_000)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_certify)
    s = qsub.add_parser("verify")
    s.add_argument("cert")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("twist", help="replace a crossing by a rational tangle")
    s.add_argument("file")
    s.add_argument("--crossing", type=int, required=True)
    s.add_argument("--tangle", required=True, help="coefficients, e.g. 5,3,2")
    s.add_argument("--axes", type=int, choices=[0, 1],
                   help="corner parity taken as vertical (default: shaded corners)")
    s.set_defaults(func=cmd_twist)

    s = sub.add_parser("pretzel", help="pretzel links")
    s.add_argument("what", choices=["diagram", "det", "classify"])
    s.add_argument("spec", help="signed entries, e.g. 3,3,-4")
    s.set_defaults(func=cmd_pretzel)

    s = sub.add_parser("adequacy", help="all-A / all-B state adequacy")
    s.add_argument("file")
    s.set_defaults(func=cmd_adequacy)

    s = sub.add_parser("turaev-genus", help="Turaev genus of the diagram")
    s.add_argument("file")
    s.set_defaults(func=cmd_turaev)

    tb = sub.add_parser("table", help="bundled ten-crossing table")
    tsub = tb.add_subparsers(dest="table_command", required=True)
    s = tsub.add_parser("verify")
    s.add_argument("--data", help="data directory (default: $QACERT_DATA or bundled)")
    s.add_argument("--certs", help="write each entry's certificate into this directory")
    s.set_defaults(func=cmd_table)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    # negative literals look like options to argparse
    argv = list(sys.argv[1:] if argv is None else argv)
    if len(argv) >= 3 and argv[0] == "pretzel" and argv[2].startswith("-"):
        argv = argv[:2] + ["--"] + argv[2:]
    for i in range(len(argv) - 1):
        if argv[i] == "--tangle" and argv[i + 1].startswith("-"):
            argv[i:i + 2] = ["--tangle=" + argv[i + 1], ""]
    argv = [a for a in argv if a != ""]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
