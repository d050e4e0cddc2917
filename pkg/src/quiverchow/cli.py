"""Command line surface for the package.

Subcommands: orbits, paving, count, gdim, gdim-table, klr-selftest,
complex, suite.  Output is JSON by default (one versioned document per
run, compact separators) or a plain table with --format table.  Exit codes:
0 on success, 1 on usage errors (bad flags, malformed quiver/composition/
multisegment strings, non-prime --q), 2 when a comparison or self-test
command finds a mismatch.  Runs are deterministic given flags and --seed;
--threads only fans out independent cases and never changes output bytes.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .extalg import compare_block, gdim_alg_klr, gdim_geo
from .homotopy import (
    complex_from_json,
    complex_to_json,
    complexes_equal,
    cone,
    euler_symbol,
    identity_map,
    minimize,
    parse_handle,
    random_complex,
    shift,
    twist,
    validate,
    weight_truncate,
)
from .klrpoly import relation_suite
from .nilrep import (
    Multisegment,
    Segment,
    aut_series_exponents,
    enumerate_nilreps,
    orbit_dim,
    parse_multisegment,
)
from .paving import count_points, is_prime, paving_cells, poincare
from .quiver import (
    Composition,
    DimVector,
    Quiver,
    dim_qvariety,
    enumerate_complete_comps,
    enumerate_compositions,
    parse_composition,
    parse_dimvector,
    parse_quiver,
    parse_word,
)
from .series import DEFAULT_TRUNC, HalfLaurentSeries

INF = float("inf")


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    return v


def _series_json(s: HalfLaurentSeries) -> dict:
    return {
        "trunc": None if s.trunc == INF else s.trunc,
        "coeffs": {str(e): _jsonable(c) for e, c in s.coeffs},
    }


def _dumps(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":"))


# ---------------------------------------------------------------------------
# flag plumbing


def _shared_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--trunc", type=int, default=DEFAULT_TRUNC,
                   help="series truncation exponent in u (default 24)")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--threads", type=int, default=1,
                   help="worker pool size for independent cases")
    p.add_argument("--seed", type=int, default=0)


def _quiver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--quiver", required=True, help='"A<n>" or "cyclic:<n>"')
    p.add_argument("--dim", required=True, help='dimension vector, e.g. "1,2,1"')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quiverchow", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("orbits", help="nilpotent classes with orbit data")
    _quiver_flags(p)
    _shared_flags(p)

    p = sub.add_parser("paving", help="paving cells of one flag variety")
    _quiver_flags(p)
    p.add_argument("--rep", required=True, help='multisegment, e.g. "(0,2)+(0,1)"')
    p.add_argument("--comp", required=True, help='composition, e.g. "1,0;0,1"')
    _shared_flags(p)

    p = sub.add_parser("count", help="point count of one flag variety over F_q")
    _quiver_flags(p)
    p.add_argument("--rep", required=True)
    p.add_argument("--comp", required=True)
    p.add_argument("--q", type=int, default=2, help="prime field size")
    _shared_flags(p)

    p = sub.add_parser("gdim", help="graded dimension of one block")
    _quiver_flags(p)
    p.add_argument("--mode", choices=("geo", "alg", "compare"), required=True)
    p.add_argument("--word-i", help='complete word, e.g. "0,1"')
    p.add_argument("--word-j", help='complete word, e.g. "1,0"')
    p.add_argument("--comp-i", help="composition (geo mode only)")
    p.add_argument("--comp-j", help="composition (geo mode only)")
    _shared_flags(p)

    p = sub.add_parser("gdim-table", help="geometric series for every block")
    _quiver_flags(p)
    p.add_argument("--all-comps", action="store_true",
                   help="all compositions, not only complete ones")
    _shared_flags(p)

    p = sub.add_parser("klr-selftest", help="relation suite on one algebra")
    _quiver_flags(p)
    p.add_argument("--trials", type=int, default=100)
    _shared_flags(p)

    p = sub.add_parser("complex", help="operate on a JSON chain complex")
    p.add_argument("--handle",
                   help='algebra handle, e.g. "nilhecke:2", "klr:A2:1,1", '
                        '"smash:2" (defaults to the document handle)')
    p.add_argument("--input", required=True, help="JSON file path, or - for stdin")
    p.add_argument("--op", required=True,
                   help="validate | minimize | cone-id | shift:N | twist:N | truncate:N")
    _shared_flags(p)

    p = sub.add_parser("suite", help="run a named acceptance battery")
    p.add_argument("name", choices=("paving-oracle", "klr-match", "relations", "homotopy"))
    p.add_argument("--max-total", type=int, default=4,
                   help="dimension bound for paving-oracle/relations")
    p.add_argument("--trials", type=int, default=100, help="relation trials per family")
    p.add_argument("--count", type=int, default=200, help="homotopy corpus size per handle")
    _shared_flags(p)

    return parser


# ---------------------------------------------------------------------------
# small commands


def cmd_orbits(args) -> tuple[int, str]:
    Q = parse_quiver(args.quiver)
    d = parse_dimvector(args.dim)
    rows = [
        {
            "rep": str(M),
            "orbit_dim": orbit_dim(Q, M),
            "aut_exponents": list(aut_series_exponents(M)),
        }
        for M in enumerate_nilreps(Q, d)
    ]
    rows.sort(key=lambda r: (r["orbit_dim"], r["rep"]))
    if args.format == "table":
        lines = [f"{r['rep']}\torbit_dim={r['orbit_dim']}\taut={r['aut_exponents']}" for r in rows]
        return 0, "\n".join(lines)
    doc = {
        "schema": "orbits/1",
        "quiver": str(Q),
        "dim": list(d),
        "orbits": rows,
    }
    return 0, _dumps(doc)


def _parse_rep(Q: Quiver, d: DimVector, text: str) -> Multisegment:
    M = parse_multisegment(text)
    for seg in M:
        if not seg.valid_on(Q):
            raise ValueError(f"segment {seg} does not fit on {Q}")
    if tuple(M.dim_vector(Q)) != tuple(d):
        raise ValueError(f"multisegment {M} has dimension {M.dim_vector(Q)}, not {d}")
    return M


def cmd_paving(args) -> tuple[int, str]:
    Q = parse_quiver(args.quiver)
    d = parse_dimvector(args.dim)
    M = _parse_rep(Q, d, args.rep)
    comp = parse_composition(args.comp, Q.n)
    cells = paving_cells(Q, M, comp)
    P = poincare(Q, M, comp)
    if args.format == "table":
        return 0, f"cells: {list(cells.dims)}\npoincare: {P}\neuler: {P.cell_count}"
    doc = {
        "schema": "paving/1",
        "quiver": str(Q),
        "dim": list(d),
        "rep": str(M),
        "comp": str(comp),
        "cells": list(cells.dims),
        "poincare": {str(e): c for e, c in P.coefficients},
        "euler": P.cell_count,
    }
    return 0, _dumps(doc)


def cmd_count(args) -> tuple[int, str]:
    Q = parse_quiver(args.quiver)
    d = parse_dimvector(args.dim)
    M = _parse_rep(Q, d, args.rep)
    comp = parse_composition(args.comp, Q.n)
    if not is_prime(args.q):
        raise ValueError(f"--q must be prime, got {args.q}")
    n = count_points(Q, M, comp, args.q)
    if args.format == "table":
        return 0, f"|Fl(M)({args.q})| = {n}"
    doc = {
        "schema": "count/1",
        "quiver": str(Q),
        "dim": list(d),
        "rep": str(M),
        "comp": str(comp),
        "q": args.q,
        "count": n,
    }
    return 0, _dumps(doc)


def cmd_gdim(args) -> tuple[int, str]:
    Q = parse_quiver(args.quiver)
    d = parse_dimvector(args.dim)
    N = args.trunc
    doc = {"schema": "gdim/1", "quiver": str(Q), "dim": list(d), "mode": args.mode,
           "trunc": N}
    code = 0
    if args.mode == "geo":
        ci = _geo_comp(Q, args.comp_i, args.word_i, "--comp-i/--word-i")
        cj = _geo_comp(Q, args.comp_j, args.word_j, "--comp-j/--word-j")
        series = gdim_geo(Q, d, ci, cj, N)
        doc.update({"i": str(ci), "j": str(cj), "series": _series_json(series)})
        lines = [f"gdim_geo[{ci} | {cj}] = {series}"]
    else:
        if args.word_i is None or args.word_j is None:
            raise ValueError(f"mode {args.mode} needs --word-i and --word-j")
        i = parse_word(args.word_i)
        j = parse_word(args.word_j)
        if args.mode == "alg":
            series = gdim_alg_klr(Q, d, i, j, N)
            doc.update({
                "i": ",".join(map(str, i)),
                "j": ",".join(map(str, j)),
                "series": _series_json(series),
            })
            lines = [f"gdim_alg[{i} | {j}] = {series}"]
        else:
            rep = compare_block(Q, d, i, j, N)
            ci = Composition.from_word(i, Q.n)
            cj = Composition.from_word(j, Q.n)
            shift_exp = dim_qvariety(Q, cj) - dim_qvariety(Q, ci)
            doc.update({
                "i": ",".join(map(str, i)),
                "j": ",".join(map(str, j)),
                "geometric": _series_json(rep.geometric),
                "algebraic": _series_json(rep.algebraic),
                "shift": shift_exp,
                "match": rep.normalized_match,
                "first_discrepancy": rep.first_discrepancy,
            })
            lines = [
                f"geometric: {rep.geometric}",
                f"algebraic: {rep.algebraic}",
                f"shift: u^{shift_exp}",
                f"match: {rep.normalized_match}",
            ]
            if not rep.normalized_match:
                lines.append(f"first discrepancy at u^{rep.first_discrepancy}")
                code = 2
    return code, "\n".join(lines) if args.format == "table" else _dumps(doc)


def _geo_comp(Q: Quiver, comp_text, word_text, flag: str) -> Composition:
    if comp_text is not None:
        return parse_composition(comp_text, Q.n)
    if word_text is not None:
        return Composition.from_word(parse_word(word_text), Q.n)
    raise ValueError(f"mode geo needs {flag}")


def cmd_gdim_table(args) -> tuple[int, str]:
    Q = parse_quiver(args.quiver)
    d = parse_dimvector(args.dim)
    N = args.trunc
    if args.all_comps:
        comps = enumerate_compositions(d)
    else:
        comps = enumerate_complete_comps(Q, d)
    pairs = [(ci, cj) for ci in comps for cj in comps]
    pairs.sort(key=lambda p: (str(p[0]), str(p[1])))

    def one(pair):
        ci, cj = pair
        return gdim_geo(Q, d, ci, cj, N)

    series_list = _fan_out(one, pairs, args.threads)
    blocks = [
        {"i": str(ci), "j": str(cj), "series": _series_json(s)}
        for (ci, cj), s in zip(pairs, series_list)
    ]
    if args.format == "table":
        lines = [f"[{b['i']} | {b['j']}]  " + _series_str(b) for b in blocks]
        return 0, "\n".join(lines)
    doc = {
        "schema": "gdim-table/1",
        "quiver": str(Q),
        "dim": list(d),
        "trunc": N,
        "all_comps": bool(args.all_comps),
        "blocks": blocks,
    }
    return 0, _dumps(doc)


def _series_str(block: dict) -> str:
    coeffs = block["series"]["coeffs"]
    return " ".join(f"u^{e}:{c}" for e, c in coeffs.items()) or "0"


def cmd_klr_selftest(args) -> tuple[int, str]:
    Q = parse_quiver(args.quiver)
    d = parse_dimvector(args.dim)
    report = relation_suite(Q, d, trials=args.trials, seed=args.seed)
    doc = {
        "schema": "klr-selftest/1",
        "quiver": str(Q),
        "dim": list(d),
        "trials": args.trials,
        "seed": args.seed,
        "relations": [
            {
                "name": v.name,
                "trials": v.trials,
                "failures": v.failures,
                "witness": v.witness,
            }
            for v in report.verdicts
        ],
        "ok": report.ok,
    }
    if args.format == "table":
        lines = [
            f"{'PASS' if v.failures == 0 else 'FAIL'} {v.name} "
            f"({v.trials} trials, {v.failures} failures)"
            + (f" witness: {v.witness}" if v.witness else "")
            for v in report.verdicts
        ]
        return (0 if report.ok else 2), "\n".join(lines)
    return (0 if report.ok else 2), _dumps(doc)


def cmd_complex(args) -> tuple[int, str]:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    doc = json.loads(text)
    handle = parse_handle(args.handle) if args.handle else None
    c = complex_from_json(doc, handle)
    op = args.op
    if op == "validate":
        report = validate(c)
        out = {
            "schema": "complex-validate/1",
            "handle": c.handle.name,
            "equality_bound": c.handle.equality_bound,
            "ok": report.ok,
            "problems": list(report.problems),
        }
        if args.format == "table":
            body = "ok" if report.ok else "\n".join(report.problems)
            return (0 if report.ok else 2), body
        return (0 if report.ok else 2), _dumps(out)
    if op == "minimize":
        result = minimize(c)
    elif op == "cone-id":
        result = cone(identity_map(c))
    elif op.startswith("shift:"):
        result = shift(c, int(op.split(":", 1)[1]))
    elif op.startswith("twist:"):
        result = twist(c, int(op.split(":", 1)[1]))
    elif op.startswith("truncate:"):
        n = int(op.split(":", 1)[1])
        upper, lower, inclusion = weight_truncate(c, n)
        out = {
            "schema": "complex-truncate/1",
            "at": n,
            "upper": complex_to_json(upper),
            "lower": complex_to_json(lower),
            "inclusion": [
                [row, col, c.handle.render(el)]
                for (row, col), el in sorted(inclusion.entries.items())
            ],
        }
        return 0, _table_complexes(out) if args.format == "table" else _dumps(out)
    else:
        raise ValueError(f"unknown complex op {op!r}")
    out = complex_to_json(result)
    if args.format == "table":
        return 0, _render_complex_table(out)
    return 0, _dumps(out)


def _render_complex_table(doc: dict) -> str:
    lines = [f"handle: {doc['handle']}"]
    lines.append("generators:")
    for k, (idem, s, cd) in enumerate(doc["generators"]):
        lines.append(f"  {k}: e{idem} <{s}> @ {cd}")
    lines.append("differential:")
    for row, col, expr in doc["differential"]:
        lines.append(f"  ({row},{col}): {expr}")
    return "\n".join(lines)


def _table_complexes(doc: dict) -> str:
    parts = [f"truncated at {doc['at']}"]
    parts.append("upper:\n" + _render_complex_table(doc["upper"]))
    parts.append("lower:\n" + _render_complex_table(doc["lower"]))
    return "\n".join(parts)


# ---------------------------------------------------------------------------
# suites


@dataclass(frozen=True)
class CaseResult:
    case: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: tuple[CaseResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)


def _fan_out(fn, items, threads: int) -> list:
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


SUITE_QUIVERS = ("A1", "A2", "A3", "cyclic:1", "cyclic:2", "cyclic:3")
HOMOTOPY_HANDLES = ("nilhecke:2", "klr:A2:1,1", "klr:cyclic:2:1,1", "smash:2")


def _dim_vectors(n: int, total: int):
    if n == 1:
        yield DimVector((total,))
        return
    for first in range(total + 1):
        for rest in _dim_vectors(n - 1, total - first):
            yield DimVector((first,) + tuple(rest))


def paving_oracle_cases(max_total: int = 4):
    """One case per (quiver, multisegment): Poincaré polynomial equals the
    point-count oracle at q in {2,3,5} for every composition; plus the
    named subregular case with its frozen oracle values."""
    cases = []

    def subregular():
        Q = parse_quiver("cyclic:1")
        M = parse_multisegment("(0,2)+(0,1)")
        comp = parse_composition("1;1;1", 1)
        P = poincare(Q, M, comp)
        want = {(0, 1), (1, 2)}
        got = set(P.coefficients)
        c2 = count_points(Q, M, comp, 2)
        c3 = count_points(Q, M, comp, 3)
        if got != want:
            return False, f"poincare {P}, expected 1 + 2*q"
        if (c2, c3) != (5, 7):
            return False, f"counts ({c2},{c3}), expected (5,7)"
        return True, "1 + 2*q; F_2 = 5, F_3 = 7"

    cases.append(("subregular", subregular))

    for qspec in SUITE_QUIVERS:
        Q = parse_quiver(qspec)
        for total in range(0, max_total + 1):
            for d in _dim_vectors(Q.n, total):
                for M in enumerate_nilreps(Q, d):
                    def check(Q=Q, d=d, M=M):
                        for comp in enumerate_compositions(d):
                            P = poincare(Q, M, comp)
                            for q in (2, 3, 5):
                                got = count_points(Q, M, comp, q)
                                want = P.evaluate(q)
                                if got != want:
                                    return False, (
                                        f"comp {comp}, q={q}: "
                                        f"count {got} != poincare {want}"
                                    )
                        return True, "all compositions at q in {2,3,5}"
                    cases.append((f"{qspec} {d} {M}", check))
    return cases


def klr_match_cases(trunc: int = DEFAULT_TRUNC):
    """One case per (quiver, d): every complete block matches after the
    normalization shift, and the transpose symmetry holds; plus the nil
    Hecke closed form for one vertex."""
    cases = []

    def nilhecke(n: int):
        def check():
            Q = parse_quiver("A1")
            d = DimVector((n,))
            comp = Composition.from_word((0,) * n, 1)
            geo = gdim_geo(Q, d, comp, comp, trunc)
            coeffs: dict[int, int] = {}
            for w in itertools.permutations(range(n)):
                inv = sum(
                    1 for k in range(n) for l in range(k + 1, n) if w[k] > w[l]
                )
                coeffs[-2 * inv] = coeffs.get(-2 * inv, 0) + 1
            from .series import bgl

            m0 = min(coeffs)
            want = (
                HalfLaurentSeries.from_map(coeffs)
                .mul(bgl(1, trunc - m0).pow(n))
                .truncate(trunc)
            )
            if geo != want:
                return False, f"gdim_geo differs from the closed form for n={n}"
            return True, f"closed form matches to u^{trunc}"
        return check

    for n in (1, 2, 3):
        cases.append((f"nilhecke n={n}", nilhecke(n)))

    for qspec in ("A2", "A3", "cyclic:2", "cyclic:3"):
        Q = parse_quiver(qspec)
        for total in range(1, 4):
            for d in _dim_vectors(Q.n, total):
                words = [c.word() for c in enumerate_complete_comps(Q, d)]
                if not words:
                    continue

                def check(Q=Q, d=d, words=words):
                    geo_cache = {}
                    for i in words:
                        for j in words:
                            rep = compare_block(Q, d, i, j, trunc)
                            if not rep.normalized_match:
                                return False, (
                                    f"block ({i},{j}) mismatch at "
                                    f"u^{rep.first_discrepancy}"
                                )
                            geo_cache[(i, j)] = rep.geometric
                    for i in words:
                        for j in words:
                            a = geo_cache[(i, j)]
                            b = geo_cache[(j, i)]
                            di = dim_qvariety(Q, Composition.from_word(i, Q.n))
                            dj = dim_qvariety(Q, Composition.from_word(j, Q.n))
                            for m in range(-trunc, trunc // 2):
                                lhs = a.coefficient(2 * m)
                                rhs_exp = 2 * (m + di - dj)
                                if rhs_exp > b.trunc or 2 * m > a.trunc:
                                    continue
                                if lhs != b.coefficient(rhs_exp):
                                    return False, (
                                        f"transpose symmetry fails at "
                                        f"({i},{j}), u^{2 * m}"
                                    )
                    return True, f"{len(words) ** 2} blocks match; symmetry holds"

                cases.append((f"{qspec} {d}", check))
    return cases


def relations_cases(max_total: int = 4, trials: int = 100, seed: int = 0):
    """One case per (quiver, d) with 1 <= total(d) <= max_total."""
    cases = []
    for qspec in SUITE_QUIVERS:
        Q = parse_quiver(qspec)
        for total in range(1, max_total + 1):
            for d in _dim_vectors(Q.n, total):
                def check(Q=Q, d=d):
                    report = relation_suite(Q, d, trials=trials, seed=seed)
                    if report.ok:
                        names = len(report.verdicts)
                        return True, f"{names} relation families, {trials} trials each"
                    bad = next(v for v in report.verdicts if not v.ok)
                    return False, f"{bad.name}: {bad.failures} failures; {bad.witness}"
                cases.append((f"{qspec} {d}", check))
    return cases


def homotopy_cases(count: int = 200, seed: int = 0):
    """One case per algebra handle: a corpus of randomized valid complexes
    where cone(id) minimizes to zero, euler_symbol is invariant under
    minimize, minimize is idempotent, and weight truncation reassembles."""
    cases = []
    for spec in HOMOTOPY_HANDLES:
        def check(spec=spec):
            handle = parse_handle(spec)
            for t in range(count):
                rng = random.Random(f"{seed}:{spec}:{t}")
                c = random_complex(handle, rng)
                label = f"trial {t}"
                report = validate(c)
                if not report.ok:
                    return False, f"{label}: invalid complex: {report.problems[0]}"
                if len(minimize(cone(identity_map(c)))) != 0:
                    return False, f"{label}: cone(id) did not minimize to zero"
                m = minimize(c)
                if not validate(m).ok:
                    return False, f"{label}: minimize broke validity"
                if euler_symbol(m) != euler_symbol(c):
                    return False, f"{label}: euler symbol changed under minimize"
                if not complexes_equal(minimize(m), m):
                    return False, f"{label}: minimize not idempotent"
                degs = c.cohdegs()
                n = rng.choice(degs) if degs else 0
                upper, lower, inc = weight_truncate(c, n)
                if not complexes_equal(minimize(cone(inc)), minimize(lower)):
                    return False, f"{label}: truncation reassembly failed at {n}"
            return True, f"{count} randomized complexes"
        cases.append((spec, check))
    return cases


def run_suite(
    name: str,
    threads: int = 1,
    seed: int = 0,
    max_total: int = 4,
    trials: int = 100,
    count: int = 200,
    trunc: int = DEFAULT_TRUNC,
) -> SuiteResult:
    if name == "paving-oracle":
        cases = paving_oracle_cases(max_total)
    elif name == "klr-match":
        cases = klr_match_cases(trunc)
    elif name == "relations":
        cases = relations_cases(max_total, trials, seed)
    elif name == "homotopy":
        cases = homotopy_cases(count, seed)
    else:
        raise ValueError(f"unknown suite {name!r}")

    def run_case(item):
        case_id, fn = item
        ok, detail = fn()
        return CaseResult(case_id, ok, detail)

    results = _fan_out(run_case, cases, threads)
    return SuiteResult(name, tuple(results))


def cmd_suite(args) -> tuple[int, str]:
    result = run_suite(
        args.name,
        threads=args.threads,
        seed=args.seed,
        max_total=args.max_total,
        trials=args.trials,
        count=args.count,
        trunc=args.trunc,
    )
    if args.format == "table":
        lines = [
            f"{'PASS' if c.ok else 'FAIL'} {c.case}: {c.detail}" for c in result.cases
        ]
        passed = sum(1 for c in result.cases if c.ok)
        lines.append(f"suite {result.name}: {passed}/{len(result.cases)} passed")
        return (0 if result.ok else 2), "\n".join(lines)
    doc = {
        "schema": "suite/1",
        "name": result.name,
        "seed": args.seed,
        "cases": [
            {"case": c.case, "ok": c.ok, "detail": c.detail} for c in result.cases
        ],
        "ok": result.ok,
    }
    return (0 if result.ok else 2), _dumps(doc)


# ---------------------------------------------------------------------------
# entry point

_HANDLERS = {
    "orbits": cmd_orbits,
    "paving": cmd_paving,
    "count": cmd_count,
    "gdim": cmd_gdim,
    "gdim-table": cmd_gdim_table,
    "klr-selftest": cmd_klr_selftest,
    "complex": cmd_complex,
    "suite": cmd_suite,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code or 0
    try:
        code, text = _HANDLERS[args.command](args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
