"""Command line front end: analysis, classification, invariant construction,
census, seed-triple search, equivalence, and verification suites."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .forms import QuadForm, SearchExhausted, is_equivalent, reduce_form
from .binary import binary_characters, build_qs, char_of_form, enumerate_P, recognize_qs
from .ternary import genus_equal_smith, jordan_odd, smith_data
from .surface import NSElement, SurfaceModel, genus_census, is_polarization, refined_humbert
from .classify import NOT_REFINED_HUMBERT, REFINED_HUMBERT, UNRESOLVED, classify
from . import suites

PARSE_ERROR = 2


def _load_form(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, ValueError) as exc:
        raise CliError("cannot read form file %s: %s" % (path, exc))
    try:
        if isinstance(obj, list):
            return QuadForm.from_coeffs(obj)
        return QuadForm.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError("bad form data in %s: %s" % (path, exc))


def _parse_ints(text, expected, what):
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise CliError("cannot parse %s %r" % (what, text))
    if len(parts) != expected:
        raise CliError("%s needs %d comma-separated integers" % (what, expected))
    return parts


class CliError(Exception):
    pass


def cmd_analyze(args):
    f = _load_form(args.form)
    out = {
        "form": f.to_json(),
        "disc": f.disc,
        "det": f.det,
        "content": f.content(),
        "primitivity": f.primitivity().kind,
    }
    if f.arity == 2 and f.content() == 1:
        out["characters"] = {c.label(): char_of_form(c, f)
                             for c in binary_characters(f)}
    if f.arity == 3 and f.is_positive_definite():
        try:
            out["genus_profile"] = smith_data(f).to_json()
        except ValueError:
            pass
        if f.content() % 4 == 0:
            half = f.half()
            try:
                out["half_genus_profile"] = smith_data(half).to_json()
            except ValueError:
                pass
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def cmd_classify(args):
    f = _load_form(args.form)
    cert = classify(f, cond2_bound=args.bound, height_cap=args.height,
                    prime_cap=args.prime_cap)
    print(json.dumps(cert.to_json(), indent=2, sort_keys=True))
    return {REFINED_HUMBERT: 0, NOT_REFINED_HUMBERT: 1, UNRESOLVED: 3}[cert.verdict]


def cmd_humbert(args):
    a, b, c = _parse_ints(args.q, 3, "--q")
    ta, tb, h1, h2 = _parse_ints(args.theta, 4, "--theta")
    surface = SurfaceModel(QuadForm.binary(a, b, c))
    theta = NSElement(ta, tb, (h1, h2))
    ok, even = is_polarization(theta, surface)
    if not ok:
        raise CliError("theta is not a polarization of the given surface")
    form = refined_humbert(surface, theta)
    red, _ = reduce_form(form)
    print(json.dumps({
        "form": form.to_json(),
        "reduced": red.to_json(),
        "even": even,
        "det": form.det,
        "disc": form.disc,
    }, indent=2, sort_keys=True))
    return 0


def cmd_census(args):
    a, b, c = _parse_ints(args.q, 3, "--q")
    surface = SurfaceModel(QuadForm.binary(a, b, c))
    try:
        rows = genus_census(surface, args.height)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["a11", "a22", "a33", "a23", "a13", "a12", "count", "fingerprint"])
    for rep, count, prof in rows:
        fp = ";".join("%s=%+d" % (ch.label(), v)
                      for ch, v in list(prof.chars_f) + list(prof.chars_reciprocal))
        writer.writerow(list(rep.coeffs()) + [count, fp])
    sys.stdout.write(buf.getvalue())
    return 0


def cmd_qs(args):
    triples = enumerate_P(args.delta, args.bound, even_only=not args.all)
    out = []
    for s in triples:
        q = build_qs(s)
        out.append({"seed": s.to_json(), "form": q.to_json(), "disc": q.disc})
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def cmd_recognize(args):
    f = _load_form(args.form)
    try:
        s = recognize_qs(f, args.delta)
    except SearchExhausted as exc:
        print(json.dumps({"status": "exhausted", "bound": exc.bound}))
        return 3
    if s is None:
        print(json.dumps({"status": "not_in_family"}))
        return 1
    print(json.dumps({"status": "recognized", "seed": s.to_json()}))
    return 0


def cmd_equiv(args):
    f1, f2 = _load_form(args.form1), _load_form(args.form2)
    out = {}
    if args.genus:
        out["genus_equal"] = genus_equal_smith(f1, f2)
    elif args.local:
        out["locally_equal"] = jordan_odd(f1, args.local) == jordan_odd(f2, args.local)
        out["prime"] = args.local
    else:
        m = is_equivalent(f1, f2)
        out["equivalent"] = m is not None
        if m is not None:
            out["matrix"] = [list(r) for r in m.matrix]
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0 if any(v is True for v in out.values()) or "matrix" in out else 1


def cmd_verify(args):
    runner = suites.SUITES.get(args.suite)
    if runner is None:
        print("unknown suite %r; available: %s"
              % (args.suite, ", ".join(sorted(suites.SUITES))), file=sys.stderr)
        return PARSE_ERROR
    failures = runner()
    for line in failures or ["%s: pass" % args.suite]:
        print(line)
    return 1 if failures else 0


def build_parser():
    top = argparse.ArgumentParser(prog="humbert")
    top.add_argument("--jobs", type=int, default=1,
                     help="parallelism degree (output is identical for any value)")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invariants of a form file")
    p.add_argument("form")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="refined Humbert classification")
    p.add_argument("form")
    p.add_argument("--bound", type=int, default=50)
    p.add_argument("--height", type=int, default=16)
    p.add_argument("--prime-cap", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("humbert", help="invariant of a polarization")
    p.add_argument("--q", required=True, help="binary degree form a,b,c")
    p.add_argument("--theta", required=True, help="polarization a,b,h1,h2")
    p.set_defaults(func=cmd_humbert)

    p = sub.add_parser("census", help="genus census of even polarizations")
    p.add_argument("--q", required=True)
    p.add_argument("--height", type=int, default=8)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("qs", help="enumerate the seed-triple family")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--bound", type=int, default=64)
    p.add_argument("--all", action="store_true", help="include odd triples")
    p.set_defaults(func=cmd_qs)

    p = sub.add_parser("recognize", help="match a form against the q_s family")
    p.add_argument("form")
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("equiv", help="equivalence of two form files")
    p.add_argument("form1")
    p.add_argument("form2")
    p.add_argument("--genus", action="store_true")
    p.add_argument("--local", type=int, metavar="P")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite")
    p.set_defaults(func=cmd_verify)

    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return PARSE_ERROR
    try:
        return args.func(args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return PARSE_ERROR
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
