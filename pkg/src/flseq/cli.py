"""flseq command line.

Exit codes: 0 success, 2 invalid input, 3 search failure, 4 I/O error,
5 unsupported convention (composite character order for linear span).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .bounds import antipodal_code_bound, bound_report, kerdock_params
from .characters import OrderDoesNotDivide, make_character
from .correlation import auto_report, correlation_spectrum, tmax_family
from .finite_field import FieldError, FieldSpec, field_of_order, make_field
from .linear_span import CompositeCharacterOrder, berlekamp_massey, to_symbol_stream
from .projective_group import MoebiusMap, NotFound, ProjPoint, element_order, find_psi, orbit
from .sequence_family import (
    CharSequence,
    Family,
    build_family,
    family_to_csv,
    parse_strategy,
    select_phis,
)

EXIT_OK, EXIT_INPUT, EXIT_SEARCH, EXIT_IO, EXIT_CONVENTION = 0, 2, 3, 4, 5

BINARY_NOTE = "symbols are root-of-unity exponents reduced into Z_d for the character order d"


class CLIError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


# -- helpers -------------------------------------------------------------------


def _complex_json(v) -> list[float]:
    c = complex(v)
    return [c.real, c.imag, abs(c)]


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise CLIError(f"cannot write {out}: {exc}", EXIT_IO) from exc


def resolve_field(args) -> FieldSpec:
    try:
        if args.field_file:
            try:
                data = json.loads(Path(args.field_file).read_text())
            except OSError as exc:
                raise CLIError(f"cannot read {args.field_file}: {exc}", EXIT_IO) from exc
            return FieldSpec.from_json(data)
        if args.p is not None:
            return make_field(args.p, args.m or 1)
        if args.q is not None:
            return field_of_order(args.q)
    except FieldError as exc:
        raise CLIError(str(exc)) from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise CLIError(f"malformed field description: {exc}") from exc
    raise CLIError("give --q, --p/--m or --field-file")


def _character(field: FieldSpec, order: int):
    try:
        return make_character(field, order=order)
    except OrderDoesNotDivide as exc:
        raise CLIError(str(exc)) from exc


def _psi(field: FieldSpec) -> MoebiusMap:
    try:
        return find_psi(field)
    except NotFound as exc:
        raise CLIError(str(exc), EXIT_SEARCH) from exc


def build_from_args(args) -> tuple[Family, dict]:
    field = resolve_field(args)
    chi = _character(field, args.char_order)
    psi = _psi(field)
    try:
        kwargs = parse_strategy(args.phis)
        if kwargs["strategy"] == "sample":
            kwargs.setdefault("seed", args.seed)
        phis = select_phis(field, psi=psi, **kwargs)
    except (ValueError, FieldError) as exc:
        raise CLIError(str(exc)) from exc
    fam = build_family(phis, psi, chi)
    manifest = {
        "field": field.to_json(),
        "psi": psi.to_json(),
        "chi": chi.to_json(),
        "phi_strategy": args.phis,
        "seed": args.seed,
        "N": fam.N,
        "M": fam.M,
        "phis": [phi.to_json() for phi in phis],
    }
    return fam, manifest


def family_document(fam: Family, manifest: dict) -> dict:
    return {
        "manifest": manifest,
        "members": [{"index": i, "entries": list(seq.exponents)} for i, seq in enumerate(fam)],
    }


def load_family(path: str) -> tuple[Family, dict]:
    """Read a family from JSON, or from CSV with its ``.manifest.json`` side file."""
    p = Path(path)
    try:
        if p.suffix == ".csv":
            manifest = json.loads(Path(str(p) + ".manifest.json").read_text())
            rows = [[int(x) for x in row] for row in csv.reader(io.StringIO(p.read_text())) if row]
        else:
            doc = json.loads(p.read_text())
            manifest = doc["manifest"]
            rows = [m["entries"] for m in doc["members"]]
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc}") from exc
    except (ValueError, KeyError, TypeError) as exc:
        raise CLIError(f"malformed family file {path}: {exc}") from exc
    try:
        field = FieldSpec.from_json(manifest["field"])
        psi = MoebiusMap.from_json(field, manifest["psi"])
        chi = make_character(field, index=manifest["chi"]["index"])
        phis = [MoebiusMap.from_json(field, f) for f in manifest["phis"]]
        if len(phis) != len(rows) or not rows:
            raise ValueError("member count does not match the phi list")
        n = chi.modulus
        members = []
        for phi, row in zip(phis, rows):
            if len(row) != field.q + 1 or any(not 0 <= int(e) < n for e in row):
                raise ValueError("entry row has the wrong length or range")
            members.append(CharSequence(tuple(int(e) for e in row), psi, phi, chi))
        return Family(tuple(members), tuple(phis)), manifest
    except (KeyError, TypeError, ValueError, FieldError) as exc:
        raise CLIError(f"malformed family file {path}: {exc}") from exc


def correlation_document(fam: Family, manifest: dict, pairs: bool = False) -> dict:
    members = []
    for i, seq in enumerate(fam):
        rep = auto_report(seq)
        members.append(
            {
                "index": i,
                "T0": _complex_json(rep.spectrum[0])[0],
                "tmax": rep.tmax,
                "argmax_shift": rep.argmax_shift,
                "spectrum": [_complex_json(v) for v in rep.spectrum],
            }
        )
    best = tmax_family(fam)
    notes = []
    if len({seq.exponents for seq in fam}) < fam.M:
        notes.append("duplicate members")
    doc = {
        "provenance": manifest,
        "N": fam.N,
        "M": fam.M,
        "members": members,
        "TA": best.value,
        "TA_at": {"i": best.i, "j": best.j, "s": best.s},
        "notes": notes,
    }
    if pairs:
        doc["pairs"] = [
            {"i": i, "j": j, "spectrum": [_complex_json(v) for v in correlation_spectrum(a, b)]}
            for i, a in enumerate(fam)
            for j, b in enumerate(fam)
            if i != j
        ]
    return doc


def linspan_document(fam: Family, periods: int) -> dict:
    try:
        results = [berlekamp_massey(to_symbol_stream(seq, periods)) for seq in fam]
    except CompositeCharacterOrder as exc:
        raise CLIError(str(exc), EXIT_CONVENTION) from exc
    return {
        "periods": periods,
        "convention": BINARY_NOTE,
        "sequences": [dict(index=i, **r.to_json()) for i, r in enumerate(results)],
    }


# -- commands ------------------------------------------------------------------


def cmd_psi(args) -> int:
    field = resolve_field(args)
    psi = _psi(field)
    pts = orbit(psi, ProjPoint.finite(field.one))
    doc = {
        "field": field.to_json(),
        "psi": psi.to_json(),
        "order": element_order(psi),
        "orbit": [pt.to_json() for pt in pts],
        "orbit_display": [str(pt) for pt in pts],
    }
    _emit(_dumps(doc), args.out)
    return EXIT_OK


def cmd_family(args) -> int:
    fam, manifest = build_from_args(args)
    if args.format == "csv":
        _emit(family_to_csv(fam), args.out)
        if args.out:
            _emit(_dumps(manifest), args.out + ".manifest.json")
    else:
        _emit(_dumps(family_document(fam, manifest)), args.out)
    return EXIT_OK


def cmd_correlate(args) -> int:
    fam, manifest = load_family(args.family)
    doc = correlation_document(fam, manifest, args.pairs)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["member", "s", "re", "im", "abs"])
        for m in doc["members"]:
            for s, (re, im, ab) in enumerate(m["spectrum"]):
                w.writerow([m["index"], s, repr(re), repr(im), repr(ab)])
        _emit(buf.getvalue(), args.out)
    else:
        _emit(_dumps(doc), args.out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.bounds_cmd == "kerdock":
        try:
            k = kerdock_params(args.kerdock_m)
        except ValueError as exc:
            raise CLIError(str(exc)) from exc
        b = antipodal_code_bound(k.n, k.d)
        doc = {
            "m": args.kerdock_m,
            "n": k.n,
            "d": k.d,
            "size": k.size,
            "bound": b.value,
            "bound_fraction": str(b.fraction),
            "meets": b.fraction == k.size,
        }
        _emit(_dumps(doc), args.out)
        return EXIT_OK
    if args.N is None or args.M is None or args.N < 1 or args.M < 1:
        raise CLIError("bounds needs positive --N and --M")
    rep = bound_report(args.N, args.M)
    doc = rep.to_json()
    if args.measured is not None:
        doc["measured"] = args.measured
        doc["ratio_to_welch"] = args.measured / rep.welch if rep.welch else None
        doc["consistent"] = args.measured >= rep.welch - 1e-9
    _emit(_dumps(doc), args.out)
    return EXIT_OK


def cmd_linspan(args) -> int:
    fam, _ = load_family(args.family)
    _emit(_dumps(linspan_document(fam, args.periods)), args.out)
    return EXIT_OK


def cmd_report(args) -> int:
    fam, manifest = build_from_args(args)
    corr = correlation_document(fam, manifest)
    per_member = [{k: m[k] for k in ("index", "T0", "tmax", "argmax_shift")} for m in corr["members"]]
    bounds = bound_report(fam.N, fam.M).to_json()
    bounds["measured_TA"] = corr["TA"]
    bounds["consistent"] = corr["TA"] >= bounds["welch"] - 1e-9
    try:
        span = linspan_document(fam, args.periods)
    except CLIError as exc:
        if exc.code != EXIT_CONVENTION:
            raise
        span = {"unsupported": str(exc)}
    doc = {
        "version": __version__,
        "provenance": manifest,
        "sequences": [list(seq.exponents) for seq in fam],
        "correlation": {"members": per_member, "TA": corr["TA"], "TA_at": corr["TA_at"], "notes": corr["notes"]},
        "bounds": bounds,
        "linear_span": span,
        "metadata": {"generated_at": datetime.now(timezone.utc).isoformat()},
    }
    _emit(_dumps(doc), args.out)
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--q", type=int, help="field size (prime power)")
    p.add_argument("--p", type=int, help="field characteristic")
    p.add_argument("--m", type=int, help="extension degree")
    p.add_argument("--field-file", help="JSON field description")
    p.add_argument("--char-order", type=int, default=2, help="order d of the character (d | q-1)")
    p.add_argument("--phis", default="coset-distinct", help="all | coset-distinct | sample:K[,seed=S]")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="flseq", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("psi", parents=[common], help="find the full-cycle map and its orbit")
    sp.set_defaults(func=cmd_psi)

    sp = sub.add_parser("family", parents=[common], help="build a sequence family")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("correlate", parents=[common], help="correlation spectra of a family file")
    sp.add_argument("family")
    sp.add_argument("--pairs", action="store_true", help="include cross spectra for every ordered pair")
    sp.set_defaults(func=cmd_correlate)

    sp = sub.add_parser("bounds", parents=[common], help="bound values for length N, size M")
    sp.add_argument("--N", type=int)
    sp.add_argument("--M", type=int)
    sp.add_argument("--measured", type=float, help="measured T(A) to check against the Welch bound")
    bsub = sp.add_subparsers(dest="bounds_cmd")
    kp = bsub.add_parser("kerdock", help="Kerdock parameters against the antipodal bound")
    kp.add_argument("--m", dest="kerdock_m", type=int, required=True, help="even exponent, n = 2^m")
    kp.add_argument("--out", help="output path (default stdout)")
    sp.set_defaults(func=cmd_bounds, bounds_cmd=None)

    sp = sub.add_parser("linspan", parents=[common], help="linear span of each sequence in a family file")
    sp.add_argument("family")
    sp.add_argument("--periods", type=int, default=2)
    sp.set_defaults(func=cmd_linspan)

    sp = sub.add_parser("report", parents=[common], help="family, correlation, bounds and span in one run")
    sp.add_argument("--periods", type=int, default=2)
    sp.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"flseq: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
