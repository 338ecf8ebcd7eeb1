"""Command-line front end.

Reads a problem description (root datum, twist, word, optional mask) from
a single JSON or TOML document, runs the requested computation, and emits
a text or JSON report.  Exit codes: 0 success, 2 invalid input, 3 no
integral solution for some lambda_i, 4 strata guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

try:
    import tomllib
except ModuleNotFoundError:  # 3.10
    import tomli as tomllib

from .frobenius import (
    NoCertificate,
    NoSuchAutomorphism,
    NotPrimePower,
    twist_from_json,
    twist_to_json,
)
from .invariants import (
    NoIntegralSolution,
    TooManyStrata,
    full_report,
    quotient_iso_check,
    ramification_report,
    torus_group,
)
from .lattice import SingularMatrix
from .rootdata import (
    BadCartan,
    ImprimitiveCoroot,
    UnknownPreset,
    check_mask,
    check_word,
    datum_from_json,
    preset,
)
from .sl2 import FieldUnsupported, check_phi, drinfeld_points

VALIDATION_ERRORS = (
    UnknownPreset,
    ImprimitiveCoroot,
    BadCartan,
    NotPrimePower,
    NoSuchAutomorphism,
    NoCertificate,
    SingularMatrix,
    FieldUnsupported,
    ValueError,
    KeyError,
    TypeError,
    OSError,
)


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the documented exit code."""
    if isinstance(exc, NoIntegralSolution):
        return 3
    if isinstance(exc, TooManyStrata):
        return 4
    if isinstance(exc, VALIDATION_ERRORS):
        return 2
    raise exc


def load_document(path: str) -> dict:
    """Parse a problem file; .toml goes through tomllib, anything else
    is treated as JSON."""
    with open(path, "rb") as fh:
        raw = fh.read()
    if path.endswith(".toml"):
        doc = tomllib.loads(raw.decode("utf-8"))
    else:
        doc = json.loads(raw)
    if not isinstance(doc, dict):
        raise ValueError("problem document must be a table/object")
    return doc


def build_problem(doc: dict):
    """Turn a parsed document into (datum, twist, word, mask)."""
    rd = doc["root_datum"]
    if "preset" in rd:
        datum = preset(rd["preset"])
    else:
        datum = datum_from_json(rd)
    twist = twist_from_json(doc["twist"], datum)
    word = check_word(datum, tuple(int(i) for i in doc["word"]))
    mask = check_mask(word, tuple(int(i) for i in doc.get("mask", ())))
    return datum, twist, word, mask


def parse_mask(text: str) -> tuple[int, ...]:
    """'1,3' -> (1, 3); empty string -> ()."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


# -- report builders --------------------------------------------------


def cmd_invariants(datum, twist, word, mask) -> dict:
    return full_report(datum, twist, word, with_strata=False)


def cmd_strata(datum, twist, word, mask) -> dict:
    return full_report(datum, twist, word, with_strata=True)


def cmd_ramification(datum, twist, word, mask) -> dict:
    torus = torus_group(datum, twist, word)
    entries = ramification_report(datum, twist, word)
    return {
        "word": list(word),
        "twist": twist_to_json(twist),
        "torus": {
            "factors": list(torus.invariant_factors),
            "order": torus.order,
        },
        "ramification": [
            {
                "i": e.position,
                "beta": list(e.beta),
                "m": e.m,
                "stabilizer_order": e.stabilizer_order,
            }
            for e in entries
        ],
    }


def cmd_quotient_iso(datum, twist, word, mask) -> dict:
    res = quotient_iso_check(datum, twist, word, mask)
    return {
        "word": list(word),
        "twist": twist_to_json(twist),
        "mask": list(res.mask),
        "factors_word": list(res.factors_word),
        "factors_subword": list(res.factors_subword),
        "equal": res.equal,
    }


def cmd_verify_sl2(q: int, k: int | None) -> tuple[dict, bool]:
    """Exhaustive checks for one field; the bool is True when all pass.

    Default k is the largest exponent the lookup tables can serve:
    2 when q <= 4 (so q^k <= 16), otherwise 1.
    """
    rep = check_phi(q)
    if k is None:
        k = 2 if q <= 4 else 1
    dr = drinfeld_points(q, k)
    report = {
        "q": rep.q,
        "group_order": rep.group_order,
        "checks": {
            "b": rep.scaling,
            "c": rep.twisted_conjugation,
            "d": rep.zero_locus_is_triangular,
            "e": rep.one_locus_is_cell,
            "biinv": rep.bi_invariance,
        },
        "drinfeld": {
            "k": dr.k,
            "count": dr.count,
            "orbits": dr.orbits,
            "free": dr.free,
        },
    }
    ok = rep.ok and dr.free and rep.group_order == q**3 - q
    return report, ok


# -- text rendering ---------------------------------------------------


def _fmt_twist(tw: dict) -> str:
    bits = [tw["kind"], f"p={tw['p']}"]
    if "q0" in tw:
        bits.append(f"q0={tw['q0']}")
    if "perm" in tw:
        bits.append("perm=" + ",".join(str(i) for i in tw["perm"]))
    return " ".join(bits)


def _fmt_factors(factors) -> str:
    if not factors:
        return "trivial"
    return " x ".join(f"Z/{f}" for f in factors)


def render_text(command: str, report: dict) -> str:
    lines = []
    if command == "verify-sl2":
        lines.append(f"q={report['q']} group_order={report['group_order']}")
        labels = {
            "b": "torus scaling",
            "c": "twisted conjugation",
            "d": "zero locus is the triangular subgroup",
            "e": "one locus is the big cell",
            "biinv": "two-sided unipotent invariance",
        }
        for key, label in labels.items():
            state = "pass" if report["checks"][key] else "FAIL"
            lines.append(f"check {key} ({label}): {state}")
        dr = report["drinfeld"]
        lines.append(
            "curve over F_q^{k}: count={count} orbits={orbits} "
            "free={free}".format(**dr)
        )
        return "\n".join(lines)

    lines.append("word: " + " ".join(str(i) for i in report["word"]))
    lines.append("twist: " + _fmt_twist(report["twist"]))
    if "certificate" in report:
        cert = report["certificate"]
        lines.append(f"certificate: d={cert['d']} q={cert['q']}")
    if "torus" in report:
        t = report["torus"]
        lines.append(
            f"torus: {_fmt_factors(t['factors'])} (order {t['order']})"
        )
    for lm in report.get("per_i", ()):
        lines.append(
            "i={i}: beta={beta} lambda={lam} m={m}".format(
                i=lm["i"],
                beta=tuple(lm["beta"]),
                lam=tuple(lm["lambda"]),
                m=lm["m"],
            )
        )
    for e in report.get("ramification", ()):
        lines.append(
            "i={i}: beta={beta} m={m} stabilizer_order={s}".format(
                i=e["i"], beta=tuple(e["beta"]), m=e["m"],
                s=e["stabilizer_order"],
            )
        )
    if report.get("strata") is not None:
        for s in report["strata"]:
            mask = "{" + ",".join(str(i) for i in s["I"]) + "}"
            lines.append(
                "stratum I={m}: stab={st} H={h} {flag}".format(
                    m=mask,
                    st=_fmt_factors(s["stab_factors"]),
                    h=_fmt_factors(s["h_factors"]),
                    flag=s["flag"],
                )
            )
    if "mask" in report and "equal" in report:
        mask = "{" + ",".join(str(i) for i in report["mask"]) + "}"
        lines.append(
            "quotient-iso I={m}: word side {a}, subword side {b} -> "
            "{verdict}".format(
                m=mask,
                a=_fmt_factors(report["factors_word"]),
                b=_fmt_factors(report["factors_subword"]),
                verdict="equal" if report["equal"] else "DIFFERENT",
            )
        )
    if "checks" in report and "f_gamma" in report["checks"]:
        ch = report["checks"]
        parts = [f"f_gamma={'pass' if ch['f_gamma'] else 'FAIL'}",
                 f"norm={'pass' if ch['nw'] else 'FAIL'}"]
        if ch.get("quotient_iso") is not None:
            parts.append(
                f"quotient_iso={'pass' if ch['quotient_iso'] else 'FAIL'}"
            )
        lines.append("checks: " + " ".join(parts))
    return "\n".join(lines)


def emit(report: dict, as_json: bool, command: str) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(render_text(command, report))


# -- argument parsing -------------------------------------------------

_SPEC_COMMANDS = {
    "invariants": cmd_invariants,
    "strata": cmd_strata,
    "ramification": cmd_ramification,
    "quotient-iso": cmd_quotient_iso,
}


def _add_format_flags(sp: argparse.ArgumentParser) -> None:
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument(
        "--json", dest="as_json", action="store_true", help="JSON output"
    )
    fmt.add_argument(
        "--text", dest="as_json", action="store_false",
        help="plain-text output (default)",
    )
    sp.set_defaults(as_json=False)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dlcover",
        description="Exact invariants of torus covers attached to words "
        "in a Weyl group.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    helps = {
        "invariants": "fixed-point torus, lambda_i / m_i, and (d, q)",
        "strata": "stabilizer and H-group for every subword mask",
        "ramification": "per-position ramification orders",
        "quotient-iso": "compare the two quotient groups for one mask",
    }
    for name in _SPEC_COMMANDS:
        sp = sub.add_parser(name, help=helps[name])
        sp.add_argument(
            "--spec", required=True, metavar="FILE",
            help="problem description (JSON, or TOML with .toml suffix)",
        )
        if name == "quotient-iso":
            sp.add_argument(
                "--mask", default=None, metavar="I",
                help="comma-separated positions, e.g. '1,3'; overrides "
                "the mask in the file",
            )
        _add_format_flags(sp)

    sp = sub.add_parser(
        "verify-sl2", help="exhaustive small-field checks of the "
        "lower-left-entry function and the plane curve",
    )
    sp.add_argument("--q", type=int, required=True, help="field size")
    sp.add_argument(
        "--k", type=int, default=None,
        help="count curve points over the degree-k extension "
        "(default: 2 if q <= 4 else 1)",
    )
    _add_format_flags(sp)
    return parser


def run(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        if args.command == "verify-sl2":
            report, ok = cmd_verify_sl2(args.q, args.k)
        else:
            doc = load_document(args.spec)
            datum, twist, word, mask = build_problem(doc)
            if getattr(args, "mask", None) is not None:
                mask = check_mask(word, parse_mask(args.mask))
            report = _SPEC_COMMANDS[args.command](datum, twist, word, mask)
            ok = True
    except (NoIntegralSolution, TooManyStrata, *VALIDATION_ERRORS) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    emit(report, args.as_json, args.command)
    return 0 if ok else 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
