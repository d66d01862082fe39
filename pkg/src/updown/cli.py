"""Command line front end.

    updown enumerate --n 1 --r 3 --shape "[1]"
    updown sundaram "[[],[1],[1,1],[2,1],[2],[1],[2],[2,1],[2,1,1],[2,1]]"
    updown roby "[[],[1],[1,1]]"
    updown render-growth "[[],[1],[1,1]]"
    updown verify descents --n 2 --r 6

Exit status is 0 on success, 1 when a verification fails and 2 on a usage
error.  ``OSC_THREADS`` caps the number of worker processes used by
``verify`` (default 1).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from itertools import permutations
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator, Optional

from .growth import descent_visualization, grow_row, lemma_left_cross, roby
from .oscillating import (
    OscillatingTableau,
    descents_crystal_word,
    descents_oscillating,
    enumerate_oscillating,
    is_n_symplectic,
    tableau_to_word,
)
from .partitions import as_partition, has_even_columns, partitions, to_string
from .rs import descents_involution, involution_pairs, rs_partial
from .sundaram import enumerate_lr_tableaux, sun1_trace, sun_details, sun_inverse
from .symfunc import (
    berele_identity,
    eq5_identity,
    format_schur_expansion,
    frobenius_via_descents,
    frobenius_via_lr,
    invariant_character,
    schur_expansion,
    schur_qsym_identity,
)
from .tableaux import descents_partial, enumerate_syt, row_insert, shape

MAX_R = 10
MAX_N = 4
MAX_R_CHARACTERS = 8

IDENTITIES = ("descents", "roby", "schur-qsym", "eq5", "frobenius", "invariant", "berele", "rs-lemmas")


class UsageError(Exception):
    pass


def _parse_shape(text: Optional[str]):
    if text is None:
        return None
    try:
        return as_partition(json.loads(text))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"invalid shape {text!r}: {exc}") from None


def _parse_tableau(text: str) -> OscillatingTableau:
    try:
        data = json.loads(text)
        return OscillatingTableau.from_shapes(data)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"invalid oscillating tableau: {exc}") from None


def _rows(t) -> list[list[int]]:
    return [list(r) for r in t]


def _fmt_tab(t) -> str:
    if not t:
        return "∅"
    return "/".join("".join(str(x) if x is not None else "." for x in r) if all(
        x is None or x < 10 for x in r) else ",".join("." if x is None else str(x) for x in r) for r in t)


def _emit(args, record: dict, ascii_line: str) -> None:
    print(json.dumps(record) if args.format == "json" else ascii_line)


# -- subcommands ------------------------------------------------------------

def cmd_enumerate(args) -> int:
    r = args.r if args.r is not None else 0
    shape_ = _parse_shape(args.shape) or ()
    limit = args.limit
    if args.family == "osc":
        n = args.n if args.n is not None else max(len(shape_), 1)
        items: Iterator = enumerate_oscillating(r, n, shape_)
        render = lambda t: ({"tableau": t.to_json(), "word": list(tableau_to_word(t)),
                             "descents": sorted(descents_oscillating(t))},
                            f"{t}  word={' '.join(map(str, tableau_to_word(t))) or '-'}  "
                            f"Des={sorted(descents_oscillating(t))}")
    elif args.family == "syt":
        items = enumerate_syt(shape_)
        render = lambda q: ({"tableau": _rows(q), "descents": sorted(descents_partial(q))},
                            f"{_fmt_tab(q)}  Des={sorted(descents_partial(q))}")
    else:
        if args.outer is None or args.weight is None:
            raise UsageError("--family lr needs --outer and --weight")
        n = args.n
        items = enumerate_lr_tableaux(_parse_shape(args.outer), shape_, _parse_shape(args.weight), n)
        render = lambda s: (s.to_json(), _fmt_tab(s.rows))
    count = 0
    for item in items:
        if limit is not None and count >= limit:
            count += 1 + sum(1 for _ in items)
            break
        record, line = render(item)
        _emit(args, record, line)
        count += 1
    if args.format == "json":
        print(json.dumps({"count": count}))
    else:
        print(f"count: {count}")
    return 0


def cmd_sundaram(args) -> int:
    t = _parse_tableau(args.tableau)
    n = args.n if args.n is not None else max((len(s) for s in t.shapes), default=0)
    if not is_n_symplectic(t, n):
        bad = next(k for k, s in enumerate(t.shapes) if len(s) > n)
        raise UsageError(f"step {bad}: shape {to_string(t.shapes[bad])} has more than {n} rows")
    iota_pairs: list = []
    for step in sun1_trace(t):
        if step.pair:
            iota_pairs.append(step.pair)
        record = {"k": step.k, "step": "expansion" if step.expansion else "contraction",
                  "box": list(step.box), "iota": [list(p) for p in sorted(iota_pairs)],
                  "T": _rows(step.tableau)}
        line = (f"{step.k:>3}  {record['step']:<11}  b=({step.box.row},{step.box.col})  "
                f"T={_fmt_tab(step.tableau):<16} iota={sorted(iota_pairs)}")
        _emit(args, record, line)
    res = sun_details(t)
    back = sun_inverse(res.q, res.s, n, t.shape)
    final = {
        "word": list(tableau_to_word(t)),
        "iota": [list(p) for p in involution_pairs(res.iota)],
        "T": _rows(res.partial),
        "I": _rows(res.involution_tableau),
        "Q": _rows(res.q),
        "S": res.s.to_json(),
        "des_T": sorted(descents_oscillating(t)),
        "des_Q": sorted(descents_partial(res.q)),
        "round_trip": back == t,
    }
    if args.format == "json":
        print(json.dumps(final))
    else:
        print(f"word   {' '.join(map(str, final['word']))}")
        print(f"iota   {involution_pairs(res.iota)}")
        print(f"T      {_fmt_tab(res.partial)}")
        print(f"I      {_fmt_tab(res.involution_tableau)}")
        print(f"Q      {_fmt_tab(res.q)}")
        print(f"S      {_fmt_tab(res.s.rows)}")
        print(f"Des(T) {final['des_T']}")
        print(f"Des(Q) {final['des_Q']}")
    return 0


def cmd_roby(args) -> int:
    t = _parse_tableau(args.tableau)
    res = roby(t)
    out = {
        "A": sorted(res.domain),
        "iota": [list(p) for p in involution_pairs(res.iota)],
        "T": _rows(res.partial),
        "Q": _rows(res.q),
        "I": _rows(res.involution_tableau),
        "kappa": [list(p) for p in res.kappa],
        "tau": [list(p) for p in res.tau],
        "nu": [list(p) for p in res.nu],
    }
    if args.format == "json":
        out["diagram"] = res.diagram.to_json()
        out["second"] = res.second.to_json()
        print(json.dumps(out))
    else:
        print(res.diagram.render())
        print()
        print(res.second.render())
        print()
        for key in ("kappa", "tau", "nu"):
            print(f"{key:<6} (" + ",".join(to_string(tuple(p)) for p in out[key]) + ")")
        print(f"A      {out['A']}")
        print(f"iota   {involution_pairs(res.iota)}")
        for key in ("T", "Q", "I"):
            print(f"{key:<6} {_fmt_tab(out[key])}")
    return 0


def cmd_render_growth(args) -> int:
    t = _parse_tableau(args.tableau)
    d = roby(t).diagram
    print(json.dumps(d.to_json()) if args.format == "json" else d.render())
    return 0


# -- verification -----------------------------------------------------------

def _check_descents(n: int, r: int, shape_, k=None) -> tuple[bool, str]:
    for mu in _shapes(r, n, shape_):
        for t in enumerate_oscillating(r, n, mu):
            res = sun_details(t)
            des = descents_oscillating(t)
            if des != descents_partial(res.q) or des != descents_crystal_word(tableau_to_word(t), n):
                return False, f"counterexample {t}: Des(T)={sorted(des)} Des(Q)={sorted(descents_partial(res.q))}"
    return True, ""


def _check_roby(n: int, r: int, shape_, k=None) -> tuple[bool, str]:
    for mu in _shapes(r, n, shape_):
        for t in enumerate_oscillating(r, n, mu):
            a = sun_details(t)
            b = roby(t)
            if (a.iota, a.partial, a.q, a.involution_tableau) != (b.iota, b.partial, b.q, b.involution_tableau):
                return False, f"counterexample {t}"
            if descent_visualization(t) != descents_oscillating(t):
                return False, f"descent visualization fails for {t}"
            cells = [(i, j) for i in range(1, t.length + 1) for j in range(1, t.length + 1)]
            if not all(lemma_left_cross(b.diagram, i, j) for i, j in cells):
                return False, f"left-cross lemma fails for {t}"
    return True, ""


def _check_frobenius(n: int, r: int, shape_, k=None) -> tuple[bool, str]:
    for mu in _shapes(r, n, shape_):
        lhs, rhs = frobenius_via_lr(r, mu, n, k), frobenius_via_descents(r, mu, n, k)
        if lhs != rhs:
            return False, f"mu={list(mu)}: {lhs} != {rhs}"
    detail = ""
    if shape_ is not None:
        exp = schur_expansion(frobenius_via_lr(r, shape_, n, k), r)
        detail = "both sides " + (format_schur_expansion(exp) if exp is not None else "?")
    return True, detail


def _check_invariant(n: int, r: int, shape_, k=None) -> tuple[bool, str]:
    lhs, rhs = frobenius_via_descents(r, (), n, k), invariant_character(r, n, k)
    return lhs == rhs, "" if lhs == rhs else f"{lhs} != {rhs}"


def _check_schur(n: int, r: int, shape_, k=None) -> tuple[bool, str]:
    for mu in _shapes(r, None, shape_):
        for kk in ([k] if k else sorted({2, 3, r})):
            if not schur_qsym_identity(mu, kk):
                return False, f"mu={list(mu)} k={kk}"
    return True, ""


def _check_eq5(n: int, r: int, shape_, k=None) -> tuple[bool, str]:
    for mu in _shapes(r, None, shape_):
        for kk in ([k] if k else sorted({2, 3, r})):
            if not eq5_identity(mu, kk):
                return False, f"mu={list(mu)} k={kk}"
    return True, ""


def _check_berele(n: int, r: int, shape_, k=None) -> tuple[bool, str]:
    return berele_identity(r, n), ""


def _check_rs(n: int, r: int, shape_, k=None) -> tuple[bool, str]:
    for perm in permutations(range(1, r + 1)):
        pi = dict(enumerate(perm, 1))
        p, q = rs_partial(pi)
        if descents_involution(pi) != descents_partial(q):
            return False, f"Des mismatch for {perm}"
        fpf = all(pi[pi[a]] == a and pi[a] != a for a in pi)
        if fpf != (p == q and has_even_columns(shape(q))):
            return False, f"involution criterion fails for {perm}"
    # single-row growth against row insertion on random partial permutations
    rng = random.Random(k if k is not None else 0)
    for _ in range(200):
        perm = rng.sample(range(1, r + 2), r + 1)
        p = ()
        for x in perm[:-1]:
            p, _ = row_insert(p, x)
        if grow_row(p, perm[-1], r + 1) != row_insert(p, perm[-1])[0]:
            return False, f"single-row growth differs from row insertion for {perm}"
    return True, ""


def _shapes(r: int, n: Optional[int], shape_) -> list:
    if shape_ is not None:
        return [shape_]
    out = []
    for size in range(r % 2 if n is not None else r, r + 1, 2 if n is not None else 1):
        out.extend(partitions(size, max_length=n))
    return out


CHECKS: dict[str, Callable] = {
    "descents": _check_descents,
    "roby": _check_roby,
    "schur-qsym": _check_schur,
    "eq5": _check_eq5,
    "frobenius": _check_frobenius,
    "invariant": _check_invariant,
    "berele": _check_berele,
    "rs-lemmas": _check_rs,
}


def _run_check(job):
    name, n, r, shape_, k = job
    return CHECKS[name](n, r, shape_, k)


def cmd_verify(args) -> int:
    name = args.identity
    n = args.n if args.n is not None else 1
    r = args.r if args.r is not None else 4
    shape_ = _parse_shape(args.shape)
    limit = MAX_R_CHARACTERS if name in ("frobenius", "invariant", "berele", "schur-qsym", "eq5") else MAX_R
    if not 0 <= r <= limit or not 1 <= n <= MAX_N:
        raise UsageError(f"bounds out of range for {name}: need 0 <= r <= {limit}, 1 <= n <= {MAX_N}")
    if shape_ is not None:
        jobs = [(name, n, r, shape_, args.vars)]
    elif name == "rs-lemmas":
        jobs = [(name, n, rr, None, args.seed) for rr in range(0, r + 1)]
    elif name in ("schur-qsym", "eq5"):
        jobs = [(name, n, rr, None, args.vars) for rr in range(0, r + 1)]
    else:
        jobs = [(name, nn, rr, None, args.vars) for nn in range(1, n + 1) for rr in range(0, r + 1)]
    threads = max(1, int(os.environ.get("OSC_THREADS", "1") or 1))
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_check, jobs))
    else:
        results = [_run_check(job) for job in jobs]
    failed = 0
    for (nm, nn, rr, sh, _), (ok, detail) in zip(jobs, results):
        failed += not ok
        record = {"identity": nm, "n": nn, "r": rr, "shape": list(sh) if sh is not None else None,
                  "result": "PASS" if ok else "FAIL", "detail": detail}
        where = f"n={nn} r={rr}" + (f" shape={list(sh)}" if sh is not None else "")
        _emit(args, record, f"{'PASS' if ok else 'FAIL'}  {nm}  {where}" + (f"  {detail}" if detail else ""))
    return 1 if failed else 0


# -- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="updown", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="rank of the symplectic group")
    common.add_argument("--r", type=int, help="length / degree")
    common.add_argument("--shape", help="partition as JSON, e.g. '[2,1]'")
    common.add_argument("--vars", type=int, help="number of variables")
    common.add_argument("--format", choices=("json", "ascii"), default="ascii")
    common.add_argument("--limit", type=int)
    common.add_argument("--seed", type=int, help="random seed for the sampled checks of verify rs-lemmas")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list oscillating, standard or LR tableaux")
    p.add_argument("--family", choices=("osc", "syt", "lr"), default="osc")
    p.add_argument("--outer", help="outer shape for --family lr")
    p.add_argument("--weight", help="weight for --family lr")
    p.set_defaults(func=cmd_enumerate)

    for name, func, text in (
        ("sundaram", cmd_sundaram, "trace Sundaram's bijection"),
        ("roby", cmd_roby, "run Roby's growth diagram construction"),
        ("render-growth", cmd_render_growth, "draw the growth diagram"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("tableau", help="oscillating tableau as a JSON list of partitions")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", parents=[common], help="check an identity exhaustively")
    p.add_argument("identity", choices=IDENTITIES)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"updown: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
