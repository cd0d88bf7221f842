"""Command-line surface: root numbers, verification suites, family tables.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 precision exhaustion.  Output is deterministic for a fixed configuration
and seed; per-case timings are only included on request since they would
break byte-identical reruns.
"""

from __future__ import annotations

import json
import math
import random
from concurrent.futures import ProcessPoolExecutor

import click

from . import epsilon as eps
from .characters import character_to_json, parse_character
from .cyclotomic import RootOfUnity
from .epsilon import IDENTITY_DESCRIPTIONS, verify_identity
from .padic import PrecisionError, make_field

SUITES = (
    "p3-agreement",
    "p1",
    "sqrt-lemma",
    "c1",
    "c2",
    "c3",
    "c4",
    "c5",
    "c6",
    "c7",
    "witt",
    "l1a",
    "l1b",
    "ultra-2adic",
    "all",
)

_GUARD_DIGITS = 4


def _required_depth(spec: str, p: int) -> int:
    depth = 0
    for part in spec.split(";"):
        key, _, val = part.partition("=")
        if key.strip().lower() != "alpha":
            continue
        _, _, den = val.rpartition("/")
        den = den.strip()
        if den.startswith("p^"):
            depth = max(depth, int(den[2:]))
        else:
            d = int(den)
            n = 0
            while d % p == 0 and d > 1:
                d //= p
                n += 1
            depth = max(depth, n)
    return depth


def _resolve_precision(prec: str, needed: int) -> int:
    if prec == "auto":
        return max(needed + _GUARD_DIGITS, 6)
    n = int(prec)
    if n < 1:
        raise click.UsageError("precision must be a positive integer or 'auto'")
    return n


def _parse_primes(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise click.UsageError(f"bad prime list {text!r}") from exc


def _emit(lines: list[str], out: str | None):
    data = "\n".join(lines) + ("\n" if lines else "")
    if out:
        with open(out, "w") as fh:
            fh.write(data)
    else:
        click.echo(data, nl=False)


def _fmt_value(obj) -> str:
    if isinstance(obj, dict):
        if "root" in obj:
            r = RootOfUnity.from_json(obj["root"])
            return str(r)
        if "cyclotomic" in obj:
            return f"cyclotomic(m={obj['cyclotomic']['m']})"
    return str(obj)


@click.group()
def main():
    """Exact local root numbers of characters of unramified p-adic fields."""


# ---------------------------------------------------------------------------
# w: compute root numbers for explicit characters


def _w_record(chi) -> dict:
    oracle = eps.w_oracle(chi)
    rec = {
        "character": character_to_json(chi),
        "iota": eps.iota(chi).to_json(),
        "w_oracle": oracle.to_json(),
        "w_closed": None,
        "agree": None,
        "w_star": eps.w_star(chi, backend="oracle").to_json(),
        "decomposition": None,
    }
    if chi.alpha is not None and not chi.sign_exp:
        closed = eps.w_closed(chi)
        rec["w_closed"] = closed.to_json()
        rec["agree"] = bool(oracle.value == closed.value)
        parts = eps.three_factor(chi, backend="closed")
        rec["decomposition"] = {
            "tame_unit": parts["tame_unit"].to_json(),
            "quartic": parts["quartic"].to_json(),
            "p_primary": parts["p_primary"].to_json(),
        }
    return rec


def _w_pretty(rec: dict) -> list[str]:
    ch = rec["character"]
    lines = [f"character: p={ch['p']} f={ch['f']} conductor_exponent={ch['conductor_exponent']} order={ch['order']}"]
    lines.append(f"  W (oracle) = {_fmt_value(rec['w_oracle'])}")
    if rec["w_closed"] is not None:
        lines.append(f"  W (closed) = {_fmt_value(rec['w_closed'])}   agree={rec['agree']}")
    lines.append(f"  iota = {_fmt_value({'root': rec['iota']})}   W* = {_fmt_value(rec['w_star'])}")
    if rec["decomposition"] is not None:
        d = rec["decomposition"]
        lines.append(
            "  decomposition: tame_unit="
            + _fmt_value({"root": d["tame_unit"]})
            + " quartic="
            + _fmt_value({"root": d["quartic"]})
            + " p_primary="
            + _fmt_value({"root": d["p_primary"]})
        )
    return lines


@main.command("w")
@click.option("--p", type=int, required=True, help="residue characteristic")
@click.option("--f", type=int, default=1, show_default=True, help="residue degree")
@click.option("--prec", default="auto", show_default=True, help="working precision or 'auto'")
@click.option("--char", "chars", multiple=True, required=True, help="character spec, repeatable")
@click.option("--format", "fmt", type=click.Choice(["pretty", "json", "tsv"]), default="pretty", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="output file")
@click.pass_context
def cmd_w(ctx, p, f, prec, chars, fmt, out):
    """Compute W, W*, iota and the three-factor decomposition."""
    try:
        try:
            needed = max((_required_depth(s, p) for s in chars), default=0)
        except ValueError as exc:
            raise click.UsageError(f"bad character spec: {exc}") from exc
        fld = make_field(p, f, _resolve_precision(prec, needed))
        records = []
        for spec in chars:
            try:
                chi = parse_character(fld, spec)
            except ValueError as exc:
                raise click.UsageError(f"bad character spec {spec!r}: {exc}") from exc
            records.append(_w_record(chi))
    except PrecisionError as exc:
        click.echo(f"precision exhausted: {exc}", err=True)
        ctx.exit(3)
    if fmt == "json":
        lines = [json.dumps(r, sort_keys=True) for r in records]
    elif fmt == "tsv":
        lines = ["char\tconductor\torder\tw\tw_star\tagree"]
        for r in records:
            ch = r["character"]
            lines.append(
                "\t".join(
                    [
                        json.dumps(ch["alpha"]) + f";tame={ch['tame']}",
                        str(ch["conductor_exponent"]),
                        str(ch["order"]),
                        _fmt_value(r["w_oracle"]),
                        _fmt_value(r["w_star"]),
                        str(r["agree"]),
                    ]
                )
            )
    else:
        lines = []
        for r in records:
            lines.extend(_w_pretty(r))
    _emit(lines, out)


# ---------------------------------------------------------------------------
# verify: named suites over parameter grids


def _unit_numerators(p, f, n, sample, seed):
    """Numerator specs for unit residues modulo p^n; sampled when asked."""
    fld = make_field(p, f, n + _GUARD_DIGITS)
    specs = []
    for u in fld.unit_residues(n):
        coeffs = u.unit
        if f == 1:
            specs.append(str(coeffs[0]))
        else:
            terms = []
            for i, c in enumerate(coeffs[:f]):
                if c:
                    terms.append(str(c) if i == 0 else (f"{c}w" if i == 1 else f"{c}w^{i}"))
            specs.append("+".join(terms))
    if sample is not None and len(specs) > sample:
        rng = random.Random(seed)
        specs = rng.sample(specs, sample)
    return specs


def _case(identity: str, **kw) -> dict:
    kw["identity"] = identity
    return kw


def build_cases(suite: str, ps: list[int], f: int, max_n: int, seed: int) -> list[dict]:
    cases: list[dict] = []
    if suite == "all":
        for s in SUITES[:-1]:
            cases.extend(build_cases(s, ps, f, max_n, seed))
        return cases
    if suite == "p3-agreement":
        for p in ps:
            if p == 2:
                for n in (3, 4, 5, 6, 8):
                    for a in _unit_numerators(2, 1, n, None, seed):
                        cases.append(_case("agreement", p=2, f=1, N=n + _GUARD_DIGITS, char=f"alpha={a}/p^{n}"))
            else:
                sample = 20 if f > 1 else None
                for n in range(2, max_n + 1):
                    for a in _unit_numerators(p, f, n, sample, seed):
                        cases.append(_case("agreement", p=p, f=f, N=n + _GUARD_DIGITS, char=f"alpha=({a})/p^{n}"))
    elif suite == "p1":
        for p in ps:
            if p == 2:
                continue
            for n in (2, 3):
                for a in (1, 2):
                    for tame in (0, 1):
                        spec = f"alpha={a}/p^{n}" + (";tame=1" if tame else "")
                        M = math.lcm(8, 4 * p, p ** (n + 1), p**f - 1)
                        ks = [k for k in (5, 7, 11, 13, 17) if math.gcd(k, M) == 1][:3]
                        for k in ks:
                            cases.append(_case("p1", p=p, f=f, N=n + _GUARD_DIGITS, char=spec, k=k))
    elif suite == "sqrt-lemma":
        for p in ps:
            m = 8 if p == 2 else p
            for k in (2, 3, 5, 7, 11):
                if math.gcd(k, m) == 1:
                    cases.append(_case("sqrt-lemma", p=p, k=k))
    elif suite in ("c1", "c2", "c3"):
        for p in ps:
            ns = (3, 4) if p == 2 else (2, 3)
            for n in ns:
                for tame in (0, 1):
                    if tame and (p == 2 or suite == "c2"):
                        continue
                    spec = f"alpha=1/p^{n}" + (";tame=1" if tame else "")
                    cases.append(_case(suite, p=p, f=f, N=n + _GUARD_DIGITS, char=spec))
    elif suite == "c4":
        for p in ps:
            if p == 2:
                continue
            spec = f"alpha=1/p^{3}"
            order = p**2
            for k in range(1, 30):
                if k % order == 1 and math.gcd(k, p * order) == 1:
                    cases.append(_case("c4", p=p, f=f, N=3 + _GUARD_DIGITS, char=spec, k=k))
    elif suite == "c5":
        for p in ps:
            if p == 2:
                continue
            spec = f"alpha=1/p^{2}"
            for k in range(1, 30):
                if math.gcd(k, p * p) == 1 or k % p == 0:
                    cases.append(_case("c5", p=p, f=f, N=2 + _GUARD_DIGITS, char=spec, k=k))
    elif suite == "c6":
        for p in ps:
            if p == 2:
                continue
            for a in _unit_numerators(p, 1, 3, None, seed):
                cases.append(_case("c6", p=p, f=1, N=3 + _GUARD_DIGITS, char=f"alpha={a}/p^3"))
    elif suite == "c7":
        import itertools

        for p in ps:
            if p == 2:
                continue
            for a in (1, 2):
                cases.append(_case("c7a", p=p, f=f, N=2 + _GUARD_DIGITS, a=a))
            for combo in itertools.product((1, 2), repeat=p):
                cases.append(_case("c7b", p=p, f=f, N=2 + _GUARD_DIGITS, a_list=list(combo)))
            cases.append(_case("c7c", p=p, f=f, N=2 + _GUARD_DIGITS, a_list=[1, 2] * ((p + 1) // 2) + ([1] if (p + 1) % 2 else [])))
            for n in (2, 3) if p == 3 else (2,):
                cases.append(_case("c7d", p=p, n=n))
    elif suite == "witt":
        for p in ps:
            if p == 2:
                continue
            for a1 in (1, 2):
                for a2 in (1, 2):
                    cases.append(_case("witt", p=p, f=f, N=2 + _GUARD_DIGITS, a1=a1, a2=a2))
    elif suite == "l1a":
        for p in ps:
            if p == 2:
                continue
            for a in _unit_numerators(p, 1, 3, None, seed):
                cases.append(_case("l1a", p=p, f=1, N=3 + _GUARD_DIGITS, char=f"alpha={a}/p^3"))
    elif suite == "l1b":
        cases.append(_case("l1b", l=3, p1=109, p2=31))
    elif suite == "ultra-2adic":
        if 2 in ps:
            for u in (3, 5, 7, -1, 9):
                cases.append(_case("ultra", u=u))
    else:
        raise click.UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return cases


def run_case(case: dict) -> dict:
    case = dict(case)
    identity = case.pop("identity")
    kwargs = {}
    if "char" in case:
        fld = make_field(case.pop("p"), case.pop("f"), case.pop("N"))
        kwargs["chi"] = parse_character(fld, case.pop("char"))
    elif identity in ("c7a", "c7b", "c7c", "witt"):
        kwargs["fld"] = make_field(case.pop("p"), case.pop("f"), case.pop("N"))
    elif identity == "ultra":
        fld = make_field(2, 1, 10)
        kwargs["u"] = fld.from_int(case.pop("u"))
    kwargs.update(case)
    return verify_identity(identity, **kwargs)


@main.command("verify")
@click.option("--suite", required=True, help="comma list of suites, or 'all'")
@click.option("--p", "p_text", default="3", show_default=True, help="comma list of primes")
@click.option("--f", type=int, default=1, show_default=True)
@click.option("--max-n", type=int, default=3, show_default=True, help="deepest conductor exponent for sweeps")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["pretty", "json", "tsv"]), default="pretty", show_default=True)
@click.option("--timing/--no-timing", default=False, show_default=True, help="include per-case timings (breaks byte-identical reruns)")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def cmd_verify(ctx, suite, p_text, f, max_n, seed, jobs, fmt, timing, out):
    """Run named verification suites; nonzero exit iff any case fails."""
    ps = _parse_primes(p_text)
    cases = []
    for name in suite.split(","):
        name = name.strip()
        if name not in SUITES:
            raise click.UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
        cases.extend(build_cases(name, ps, f, max_n, seed))
    try:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                reports = list(pool.map(run_case, cases))
        else:
            reports = [run_case(c) for c in cases]
    except PrecisionError as exc:
        click.echo(f"precision exhausted: {exc}", err=True)
        ctx.exit(3)
    failures = 0
    lines = []
    for rep in reports:
        if not timing:
            rep.pop("timing", None)
        ok = rep["equal"]
        failures += 0 if ok else 1
        if fmt == "json":
            lines.append(json.dumps(rep, sort_keys=True, default=str))
        elif fmt == "tsv":
            lines.append(
                "\t".join(
                    [rep["identity"], json.dumps(rep["params"], sort_keys=True, default=str),
                     _fmt_value(rep["lhs"]), _fmt_value(rep["rhs"]), "ok" if ok else "FAIL"]
                )
            )
        else:
            tag = "ok  " if ok else "FAIL"
            lines.append(f"{tag} {rep['identity']:<10} {json.dumps(rep['params'], sort_keys=True, default=str)}")
    if fmt == "pretty":
        lines.append(f"{len(reports) - failures}/{len(reports)} cases passed")
    _emit(lines, out)
    if failures:
        ctx.exit(1)


@main.command("suites")
def cmd_suites():
    """List the verification suites and what each one checks."""
    for name in SUITES[:-1]:
        key = {"p3-agreement": "agreement", "ultra-2adic": "ultra"}.get(name, name)
        desc = IDENTITY_DESCRIPTIONS.get(key, "composite suite")
        click.echo(f"{name:<14} {desc}")
    click.echo(f"{'all':<14} every suite above")


# ---------------------------------------------------------------------------
# table: sweep a family of characters


@main.command("table")
@click.option("--p", type=int, required=True)
@click.option("--f", type=int, default=1, show_default=True)
@click.option("--prec", default="auto", show_default=True)
@click.option("--family", required=True, help="family spec, e.g. 'alpha=a/p^2' (a sweeps the units)")
@click.option("--format", "fmt", type=click.Choice(["pretty", "json", "tsv"]), default="tsv", show_default=True)
@click.option("--max-rows", type=int, default=512, show_default=True, help="row-count cap")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def cmd_table(ctx, p, f, prec, family, fmt, max_rows, seed, out):
    """One row per family member: conductor, order, W, W*, W_p."""
    family = family.strip()
    if "a/" not in family.replace(" ", ""):
        raise click.UsageError("family spec must use the symbol 'a', e.g. alpha=a/p^2")
    probe = family.replace("a/", "1/")
    n = _required_depth(probe, p)
    if n == 0:
        raise click.UsageError("family must have a p-power denominator")
    fld = make_field(p, f, _resolve_precision(prec, n))
    numerators = _unit_numerators(p, f, n, None, seed)
    if len(numerators) > max_rows:
        raise click.UsageError(
            f"family has {len(numerators)} rows, above the cap {max_rows}; raise --max-rows to override"
        )
    header = ["a", "conductor", "order", "w", "w_star", "w_p"]
    rows = []
    try:
        for a in numerators:
            chi = parse_character(fld, family.replace("a/", f"({a})/"))
            w = eps.w_closed(chi) if chi.alpha is not None and not chi.sign_exp else eps.w_oracle(chi)
            ws = eps.iota(chi) * w.root if w.root is not None else None
            parts = eps.three_factor(chi, backend="closed") if chi.alpha is not None and not chi.sign_exp else None
            rows.append(
                {
                    "a": a,
                    "conductor": chi.conductor_exponent(),
                    "order": chi.order(),
                    "w": w.root.to_json() if w.root is not None else w.value.to_json(),
                    "w_star": ws.to_json() if ws is not None else None,
                    "w_p": parts["p_primary"].to_json() if parts else None,
                }
            )
    except PrecisionError as exc:
        click.echo(f"precision exhausted: {exc}", err=True)
        ctx.exit(3)
    if fmt == "json":
        lines = [json.dumps(r, sort_keys=True) for r in rows]
    else:
        lines = ["\t".join(header)]
        for r in rows:
            lines.append(
                "\t".join(
                    [
                        str(r["a"]),
                        str(r["conductor"]),
                        str(r["order"]),
                        _fmt_value({"root": r["w"]}) if r["w"] and "m" in r["w"] and "k" in r["w"] else str(r["w"]),
                        _fmt_value({"root": r["w_star"]}) if r["w_star"] else "",
                        _fmt_value({"root": r["w_p"]}) if r["w_p"] else "",
                    ]
                )
            )
    _emit(lines, out)


if __name__ == "__main__":
    main()
