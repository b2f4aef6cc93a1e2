"""
Command-line front end.

Every command prints either readable text (``--format human``, the default)
or one JSON envelope (``--format structured``) with sorted keys and sorted
collections, so repeated runs are byte-identical.

Exit codes: 0 success, 1 usage or parse error, 2 an internal cross-check
disagreed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import commutator_algebra as ca
from . import matrix_oracle as mo
from . import sequence_action as sa
from . import tm_set as tm
from .permutations import all_permutations, format_one_line, parse_one_line

# default caps on exponential work, lifted with --max-degree
CAPS = {"tm": 16, "expand": 14, "vm": 10, "oracle": 8, "mirror": 16, "ow": 16}


class UsageError(Exception):
    pass


class CrossCheckError(Exception):
    def __init__(self, message, envelope):
        super().__init__(message)
        self.envelope = envelope


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _cap(args, name: str, m: int):
    cap = args.max_degree if args.max_degree is not None else CAPS[name]
    if m > cap:
        raise UsageError(f"degree {m} exceeds the cap {cap} for '{name}'; pass --max-degree to lift it")


def _perm(text):
    try:
        return parse_one_line(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _seq(text):
    try:
        return sa.parse_sequence(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _degree(text, minimum):
    try:
        m = int(text)
    except ValueError:
        raise UsageError(f"bad degree {text!r}") from None
    if m < minimum:
        raise UsageError(f"degree must be at least {minimum}, got {m}")
    return m


def _envelope(command, inputs, result, lines):
    return {"command": command, "input": inputs, "result": result}, lines


# tm

def cmd_tm(args):
    action = args.action
    if action in ("list", "count"):
        m = _degree(args.arg, 1)
        _cap(args, "tm", m)
    if action == "list":
        members = tm.enumerate_tm(m)
        records = [tm.tm_record(s) for s in members]
        lines = [f"{r['perm']}  t={r['t']} sign={r['sign']:+d} tau={r['tau_set']}" for r in records]
        return _envelope("tm list", {"m": m}, {"m": m, "count": len(records), "members": records}, lines)
    if action == "count":
        slices = [{"t": t, "count": tm.count_tm_t(m, t), "enumerated": len(tm.enumerate_tm_t(m, t))}
                  for t in range(1, m + 1)]
        result = {"m": m, "count": tm.count_tm(m), "enumerated": len(tm.enumerate_tm(m)),
                  "slices": slices}
        lines = [str(result["count"])] + [f"  t={s['t']}: {s['count']}" for s in slices]
        ok = (result["count"] == result["enumerated"] == sum(s["count"] for s in slices)
              and all(s["count"] == s["enumerated"] for s in slices))
        env = _envelope("tm count", {"m": m}, result, lines)
        if not ok:
            raise CrossCheckError("closed-form counts disagree with enumeration", env)
        return env

    sigma = _perm(args.arg)
    inputs = {"perm": format_one_line(sigma)}
    if action == "check":
        routes = {
            "descent": tm.is_member_descent(sigma),
            "block": tm.is_member_block(sigma),
            "cycles": tm.is_member_cycles(sigma),
            "tau": tm.is_member_tau(sigma),
        }
        member = routes["descent"]
        result = {"perm": inputs["perm"], "member": member, "sign": tm.sign(sigma), "routes": routes}
        lines = [f"member={str(member).lower()} sign={tm.sign(sigma):+d}",
                 "routes: " + " ".join(f"{k}={str(v).lower()}" for k, v in sorted(routes.items()))]
        env = _envelope("tm check", inputs, result, lines)
        if len(set(routes.values())) != 1:
            raise CrossCheckError("membership predicates disagree", env)
        return env
    if not tm.is_member_descent(sigma):
        raise UsageError(f"{inputs['perm']} is not in T_{sigma.degree}")
    if action == "decompose":
        d = sorted(tm.tau_decomposition(sigma))
        env = _envelope("tm decompose", inputs, {"perm": inputs["perm"], "tau_set": d},
                        ["{" + ",".join(map(str, d)) + "}"])
        if tm.recompose_tau(sigma.degree, d) != sigma:
            raise CrossCheckError("tau factors do not recompose", env)
        return env
    if action == "witness":
        w = tm.witness(sigma)
        result = {"perm": inputs["perm"], "t": w.t, "r": w.r, "cycles": list(w.cycle_indices)}
        env = _envelope("tm witness", inputs, result, [f"t={w.t} r={w.r} cycles={list(w.cycle_indices)}"])
        if tm.recompose_witness(sigma.degree, w.cycle_indices) != sigma:
            raise CrossCheckError("cycle factors do not recompose", env)
        return env
    raise UsageError(f"unknown tm action {action!r}")


# expand / vm

def cmd_expand(args):
    m = _degree(args.m, 1 if args.mode == "recursive" and not args.compare else 2)
    _cap(args, "expand", m)
    inputs = {"m": m, "mode": args.mode, "compare": args.compare}
    if args.compare:
        rec, via = ca.commutator_recursive(m), ca.commutator_via_tm(m)
        equal = rec == via
        result = {"equal": equal, "terms": len(via)}
        env = _envelope("expand", inputs, result, [f"equal={str(equal).lower()} terms={len(via)}"])
        if not equal:
            raise CrossCheckError("recursive and T_m expansions differ", env)
        return env
    p = ca.commutator_recursive(m) if args.mode == "recursive" else ca.commutator_via_tm(m)
    return _envelope("expand", inputs, {"terms": len(p), "polynomial": p.to_records()}, [str(p)])


def cmd_vm(args):
    m = _degree(args.m, 2)
    _cap(args, "vm", m)
    inputs = {"m": m, "form": args.form}
    builders = {"definition": ca.vm_definition, "cycles": ca.vm_cycles, "tau": ca.vm_tau}
    if args.form != "verify":
        v = builders[args.form](m)
        return _envelope("vm", inputs, {"support": len(v), "element": v.to_records()}, [str(v)])
    forms = {k: f(m) for k, f in builders.items()}
    pairs = {f"{a}={b}": forms[a] == forms[b]
             for a, b in (("definition", "cycles"), ("definition", "tau"), ("cycles", "tau"))}
    all_equal = all(pairs.values())
    result = {"all_equal": all_equal, "support": len(forms["definition"]), "pairs": pairs}
    env = _envelope("vm", inputs, result,
                    [f"all_equal={str(all_equal).lower()} support={result['support']}"])
    if not all_equal:
        raise CrossCheckError("v_m constructions differ", env)
    return env


# oracle

def _oracle_record(units, sigma):
    return {
        "perm": format_one_line(sigma),
        "product_nonzero": mo.permuted_product_is_nonzero(units, sigma),
        "commutator_nonzero": bool(mo.permuted_commutator(units, sigma)),
    }


def cmd_oracle(args):
    m = _degree(args.m, 2)
    units = mo.unit_chain(m)
    if args.perm is not None:
        sigma = _perm(args.perm)
        if sigma.degree != m:
            raise UsageError(f"permutation has degree {sigma.degree}, expected {m}")
        rec = _oracle_record(units, sigma)
        rec["member"] = tm.is_member_descent(sigma)
        lines = [f"product_nonzero={str(rec['product_nonzero']).lower()} "
                 f"commutator_nonzero={str(rec['commutator_nonzero']).lower()}"]
        env = _envelope("oracle", {"m": m, "perm": rec["perm"]}, rec, lines)
        if rec["commutator_nonzero"] != rec["member"]:
            raise CrossCheckError("matrix oracle disagrees with T_m membership", env)
        return env
    _cap(args, "oracle", m)
    records = [_oracle_record(units, s) for s in all_permutations(m)]
    tm_perms = {format_one_line(s) for s in tm.enumerate_tm(m)}
    mismatches = [r["perm"] for r in records if r["commutator_nonzero"] != (r["perm"] in tm_perms)]
    nonzero_products = [r["perm"] for r in records if r["product_nonzero"]]
    ident = ",".join(map(str, range(1, m + 1)))
    agreement = not mismatches and nonzero_products == [ident]
    result = {"m": m, "agreement": agreement, "tm_size": len(tm_perms),
              "mismatches": mismatches, "nonzero_products": nonzero_products, "records": records}
    env = _envelope("oracle", {"m": m}, result,
                    [f"agreement={str(agreement).lower()} tm_size={len(tm_perms)}"])
    if not agreement:
        raise CrossCheckError("matrix oracle disagrees with T_m", env)
    return env


# sequences

def _pair(args):
    s, s2 = _seq(args.s), _seq(args.s2)
    if len(s) != len(s2):
        raise UsageError(f"length mismatch: {len(s)} vs {len(s2)}")
    return s, s2


def cmd_mirror(args):
    s, s2 = _pair(args)
    inputs = {"s": sa.format_sequence(s), "s2": sa.format_sequence(s2), "mode": args.mode}
    result = {}
    if args.mode in ("fast", "both"):
        result["fast"] = sa.mirrored_fast(s, s2)
    if args.mode in ("brute", "both"):
        _cap(args, "mirror", len(s))
        found = sa.mirror_witnesses(s, s2, max_length=len(s))
        result["brute"] = found is not None
        if found is not None:
            forward, backward = found
            result["witnesses"] = {
                "forward": [[str(a), str(b)] for a, b in forward],
                "backward": [[str(a), str(b)] for a, b in backward],
            }
    lines = [" ".join(f"{k}={str(result[k]).lower()}" for k in ("fast", "brute") if k in result)]
    env = _envelope("mirror", inputs, result, lines)
    if "fast" in result and "brute" in result and result["fast"] != result["brute"]:
        raise CrossCheckError("closed form and brute force disagree", env)
    return env


def _levels(s, a, b):
    return [{"value": v, "indices": sorted(idx)} for v, idx in sa.m_levels(s, a, b)]


def cmd_spectrum(args):
    s = _seq(args.s)
    try:
        sig = sa.spectrum(s, args.a, args.b)
    except ValueError as e:
        raise UsageError(str(e)) from None
    result = {"runs": list(sig.runs),
              "levels": {args.a: _levels(s, args.a, args.b), args.b: _levels(s, args.b, args.a)}}
    lines = ["(" + ",".join(map(str, sig.runs)) + ")"]
    for sym in (args.a, args.b):
        lines.append(f"m_{sym}: " + " ".join(str(l["value"]) for l in result["levels"][sym]))
    return _envelope("spectrum", {"s": sa.format_sequence(s), "a": args.a, "b": args.b}, result, lines)


def cmd_ow(args):
    s, w = _seq(args.s), _seq(args.w)
    if len(w) > len(s):
        raise UsageError(f"pattern longer than sequence ({len(w)} > {len(s)})")
    _cap(args, "ow", len(s))
    o = sa.occurrence_index(s, w)
    value = "inf" if o == sa.INFINITY else o
    return _envelope("ow", {"s": sa.format_sequence(s), "w": sa.format_sequence(w)},
                     {"o_w": value}, [str(value)])


def cmd_special(args):
    s, s2 = _pair(args)
    classes = {a: sa.classify_symbol(s, s2, a) for a in sorted(set(s))}
    special = all(c != "neither" for c in classes.values())
    lines = [f"special={str(special).lower()}"] + [f"  {a}: {c}" for a, c in classes.items()]
    return _envelope("special", {"s": sa.format_sequence(s), "s2": sa.format_sequence(s2)},
                     {"special": special, "classification": classes}, lines)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="leftnormed", description=__doc__.split("\n\n")[0].strip())
    p.add_argument("--format", choices=("human", "structured"), default="human")
    p.add_argument("--max-degree", type=int, default=None,
                   help="lift the default cap on exponential sweeps")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("tm", help="enumerate, count, test and factor members of T_m")
    q.add_argument("action", choices=("list", "check", "count", "decompose", "witness"))
    q.add_argument("arg", help="degree m, or a one-line permutation such as 2,1,3")
    q.set_defaults(func=cmd_tm)

    q = sub.add_parser("expand", help="expand the left-normed commutator")
    q.add_argument("m")
    q.add_argument("--mode", choices=("recursive", "tm"), default="recursive")
    q.add_argument("--compare", action="store_true")
    q.set_defaults(func=cmd_expand)

    q = sub.add_parser("vm", help="the signed sum of T_m in the group ring")
    q.add_argument("m")
    q.add_argument("form", nargs="?", choices=("definition", "cycles", "tau", "verify"),
                   default="definition")
    q.set_defaults(func=cmd_vm)

    q = sub.add_parser("oracle", help="matrix-unit check of T_m")
    q.add_argument("m")
    q.add_argument("perm", nargs="?")
    q.set_defaults(func=cmd_oracle)

    q = sub.add_parser("mirror", help="decide whether two sequences are mirrored")
    q.add_argument("s")
    q.add_argument("s2")
    q.add_argument("mode", nargs="?", choices=("fast", "brute", "both"), default="both")
    q.set_defaults(func=cmd_mirror)

    q = sub.add_parser("spectrum", help="run-length spectrum and level towers")
    q.add_argument("s")
    q.add_argument("a")
    q.add_argument("b")
    q.set_defaults(func=cmd_spectrum)

    q = sub.add_parser("ow", help="occurrence index of a pattern")
    q.add_argument("s")
    q.add_argument("w")
    q.set_defaults(func=cmd_ow)

    q = sub.add_parser("special", help="classify symbols as direct or reverse")
    q.add_argument("s")
    q.add_argument("s2")
    q.set_defaults(func=cmd_special)
    return p


def _emit(args, envelope, lines, out):
    if args.format == "structured":
        envelope = dict(envelope, format="structured")
        out.write(json.dumps(envelope, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        envelope, lines = args.func(args)
    except UsageError as e:
        sys.stderr.write(f"leftnormed: error: {e}\n")
        return 1
    except CrossCheckError as e:
        envelope, lines = e.envelope
        _emit(args, envelope, lines, out)
        sys.stderr.write(f"leftnormed: cross-check failed: {e}\n")
        return 2
    _emit(args, envelope, lines, out)
    return 0


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
