"""Command-line interface: JSON in, JSON out.

Exit codes: 0 success, 2 domain failure (reported as {"error": code,
"detail": message}), 1 malformed input.
"""

from __future__ import annotations

import argparse
import sys

from . import algebra, automorph, derivation, io, oracle, reduced
from .errors import DomainError, InputError
from .poset import comparability, quotient, spanning_forest, triangles
from .rings import format_elem

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="incalg",
                     description="exact computations in incidence algebras "
                                 "of finite preordered sets")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, *, poset2=False, ring=False, fn=False, fn2=False,
             cocycle=False, table=False, mode=False, figure=False):
        sp = sub.add_parser(name)
        sp.add_argument("--poset", required=True, metavar="FILE")
        if poset2:
            sp.add_argument("--poset2", metavar="FILE")
        if ring:
            sp.add_argument("--ring", required=True, metavar="SPEC")
        if fn:
            sp.add_argument("--fn", required=True, metavar="FILE")
        if fn2:
            sp.add_argument("--fn2", required=True, metavar="FILE")
        if cocycle:
            sp.add_argument("--cocycle", required=True, metavar="FILE")
        if table:
            sp.add_argument("--table", required=True, metavar="FILE")
        if mode:
            sp.add_argument("--mode", choices=["full", "tree"], default=None)
        if figure:
            sp.add_argument("--figure", metavar="FILE")
        sp.add_argument("--out", metavar="FILE")
        return sp

    verb("poset-info", figure=True)
    verb("mobius", ring=True)
    verb("invert", ring=True, fn=True)
    verb("radical", ring=True, fn=True)
    verb("structmat", ring=True, fn=True)
    verb("aut-build", ring=True, cocycle=True, mode=True)
    verb("aut-decompose", ring=True, cocycle=True, mode=True)
    verb("aut-verify", poset2=True, ring=True, table=True)
    verb("deriv-space", ring=True, figure=True)
    verb("deriv-decompose", ring=True, cocycle=True, mode=True)
    verb("deriv-oracle", ring=True)
    verb("reduced-types")
    verb("reduced-coeffs")
    verb("reduced-mul", fn=True, fn2=True)
    return parser


def _load_poset(args):
    return io.poset_from_json(io.load_json(args.poset))


def _load_cocycle(args, spec):
    assignment, mode = io.cocycle_from_json(io.load_json(args.cocycle), spec)
    if getattr(args, "mode", None):
        mode = args.mode
    return assignment, mode


def _cycle_report(witness):
    cyc, w = witness
    return {"chord": list(cyc.chord), "path": list(cyc.path),
            "weight": format_elem(w)}


def _run(args):
    p = _load_poset(args)
    q = quotient(p)
    verb = args.verb

    if verb == "poset-info":
        g = comparability(q)
        forest = spanning_forest(g)
        if args.figure:
            from .figures import draw_comparability
            draw_comparability(q, args.figure)
        return {
            "n": p.n,
            "classes": [list(c) for c in q.classes],
            "is_poset": q.is_poset(),
            "lt": [list(e) for e in sorted(q.lt)],
            "m": g.m,
            "components": len(g.components),
            "lambda": g.cyclomatic,
            "tree_edges": [list(e) for e in forest.tree_edges],
            "chords": [list(e) for e in forest.chords],
            "triangles": len(triangles(q)),
            "max_interval_length": q.max_interval_length(),
        }

    if verb == "mobius":
        spec = io.ring_from_string(args.ring)
        return io.function_to_json(algebra.mobius(p, spec))

    if verb == "invert":
        spec = io.ring_from_string(args.ring)
        f = io.function_from_json(io.load_json(args.fn), p, spec)
        return io.function_to_json(algebra.invert(f))

    if verb == "radical":
        spec = io.ring_from_string(args.ring)
        f = io.function_from_json(io.load_json(args.fn), p, spec)
        return {"in_radical": algebra.in_radical_fn(f, q)}

    if verb == "structmat":
        spec = io.ring_from_string(args.ring)
        f = io.function_from_json(io.load_json(args.fn), p, spec)
        matrix, pattern, order = algebra.to_structural(f)
        return {
            "matrix": [[format_elem(v) for v in row] for row in matrix],
            "pattern": [[1 if b else 0 for b in row] for row in pattern],
            "order": order,
        }

    if verb == "aut-build":
        spec = io.ring_from_string(args.ring)
        assignment, mode = _load_cocycle(args, spec)
        c = automorph.mult_cocycle(q, spec, assignment, mode)
        return io.mult_cocycle_to_json(c)

    if verb == "aut-decompose":
        spec = io.ring_from_string(args.ring)
        assignment, mode = _load_cocycle(args, spec)
        c = automorph.mult_cocycle(q, spec, assignment, mode)
        units, residue, inner, witness = automorph.decompose_mult(c)
        return {
            "is_inner": inner,
            "vertex_units": [{"class": x, "value": format_elem(units[x])}
                             for x in sorted(units)],
            "residue": io.mult_cocycle_to_json(residue),
            "failing_cycle": None if inner else _cycle_report(witness),
        }

    if verb == "aut-verify":
        spec = io.ring_from_string(args.ring)
        target = io.poset_from_json(io.load_json(args.poset2)) \
            if args.poset2 else p
        t = io.table_from_json(io.load_json(args.table), p, target, spec)
        return {"is_automorphism": automorph.verify_automorphism(t)}

    if verb == "deriv-space":
        spec = io.ring_from_string(args.ring)
        rep = derivation.derivation_space(q, spec)
        if args.figure:
            from .figures import draw_comparability
            draw_comparability(q, args.figure)
        return {
            "edges": [list(e) for e in rep.edges],
            "m": rep.n_edges,
            "lambda": rep.cyclomatic,
            "rank": rep.tri_rank,
            "dim_psi": rep.dim_cocycles,
            "dim_psi0": rep.dim_potentials,
            "dim_out": rep.dim_outer,
            "all_inner": rep.all_inner,
            "kernel_basis": [[str(v) for v in vec] for vec in rep.kernel_basis],
        }

    if verb == "deriv-decompose":
        spec = io.ring_from_string(args.ring)
        assignment, mode = _load_cocycle(args, spec)
        c = derivation.add_cocycle(q, spec, assignment, mode)
        pot, residue, inner, witness = derivation.decompose_add(c)
        return {
            "is_inner": inner,
            "potential": [{"class": x, "value": format_elem(pot[x])}
                          for x in sorted(pot)],
            "residue": io.add_cocycle_to_json(residue),
            "failing_cycle": None if inner else _cycle_report(witness),
        }

    if verb == "deriv-oracle":
        spec = io.ring_from_string(args.ring)
        dim_der, dim_inn, _ = oracle.brute_derivations(p, spec)
        return {"dim_der": dim_der, "dim_inn": dim_inn,
                "dim_out": dim_der - dim_inn}

    if verb == "reduced-types":
        red = reduced.standard_types(q)
        return {"types": [{"id": t.id, "class": t.cls,
                           "representative": list(t.representative),
                           "members": len(t.members)} for t in red.types]}

    if verb == "reduced-coeffs":
        red = reduced.standard_types(q)
        table = reduced.coefficients(red)
        return {"entries": [{"t": t, "r": r, "s": s, "count": count}
                            for (t, r, s), count in table.entries]}

    if verb == "reduced-mul":
        red = reduced.standard_types(q)
        a = io.reduced_from_json(io.load_json(args.fn), len(red.types))
        b = io.reduced_from_json(io.load_json(args.fn2), len(red.types))
        table = reduced.coefficients(red)
        return io.reduced_to_json(reduced.reduced_convolve(a, b, table))

    raise InputError(f"unknown verb {verb!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        doc = _run(args)
    except InputError as exc:
        sys.stdout.write(io.dump_json({"error": "input", "detail": str(exc)}))
        return 1
    except DomainError as exc:
        sys.stdout.write(io.dump_json({"error": exc.code, "detail": str(exc)}))
        return 2
    sys.stdout.write(io.dump_json(doc, getattr(args, "out", None)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
