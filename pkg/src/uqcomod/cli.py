"""Command line front end.

Subcommands:
  verify    run verification suites at a chosen order N
  classify  print the machine-readable description of the comodule zoo
  minpoly   minimal polynomial of alpha Et + beta F + gamma K^{-1} in u_q
  export    dump an algebra, cocycle or family as exact JSON

Exit codes: 0 all checks passed, 1 some check failed, 2 bad arguments.
Reports are byte-identical across runs unless --timings is given.
"""

import argparse
import json
import sys

from .cyclofield import field
from .exactlinalg import minimal_polynomial_of_element
from .hopfcore import (
    ConvForm,
    check_comodule_algebra_morphism,
    coinvariants,
    comodule_to_json,
    direct_sum_comodule_algebras,
    dumps_sorted,
    form_to_json,
    hopf_to_json,
    vec_add_into,
    vec_scale,
    verify_comodule_algebra,
    verify_hopf,
    verify_hopf_2cocycle,
)
from .reporting import VerificationReport
from . import comodzoo, polyid, uqsl2

SUITES = ("hopf-axioms", "cocycle", "deformation", "families", "minpoly",
          "chebyshev", "morita", "filtration")


def _parse_coeff(fld, text):
    return fld.parse(text)


def _zoo_tuples(N, small):
    """Default parameter tuples exercised by the family suites."""
    fld = field(N)
    tuples = [
        comodzoo.zoo_params("L1", N, r=N, xi=2),
        comodzoo.zoo_params("L3N", N, xi=1, zeta=2, eta=fld.q),
        comodzoo.zoo_params("L4", N, alpha=1, beta=1, xi=2),
    ]
    if small:
        tuples += [
            comodzoo.zoo_params("L0", N, r=1),
            comodzoo.zoo_params("L0", N, r=N),
            comodzoo.zoo_params("L1", N, r=1, xi=fld.q),
            comodzoo.zoo_params("L2", N, r=N, zeta=-1),
            comodzoo.zoo_params("L3", N, r=1, xi=1, zeta=1),
            comodzoo.zoo_params("L3", N, r=N, xi=2, zeta=fld.q),
            comodzoo.zoo_params("L3N", N, xi=0, zeta=0, eta=fld.one),
        ]
    return tuples


def suite_hopf_axioms(N, mode, sample_count, seed) -> VerificationReport:
    gens = [uqsl2.monomial_index(N, 1, 0, 0),
            uqsl2.monomial_index(N, 0, 1, 0),
            uqsl2.monomial_index(N, 0, 0, 1)]
    rep = verify_hopf(uqsl2.build_gr_uq(N), mode=mode,
                      sample_count=sample_count, seed=seed,
                      always_indices=gens)
    rep.extend(uqsl2.closed_comultiplication_report(N))
    rep.extend(uqsl2.verify_dual_relations(N, mode=mode,
                                           sample_count=sample_count,
                                           seed=seed))
    rep.extend(verify_hopf(uqsl2.build_uq(N), mode=mode,
                           sample_count=sample_count, seed=seed,
                           always_indices=gens))
    return rep


def suite_cocycle(N, mode, sample_count, seed) -> VerificationReport:
    sigma = uqsl2.build_sigma(N)
    rep = verify_hopf_2cocycle(sigma, mode=mode,
                               sample_count=sample_count, seed=seed)
    closed = uqsl2.sigma_closed_coords(N)
    rep.add("sigma-closed-coordinates", "cocycle-exponential-form",
            sigma.coords == closed, None)
    inv = uqsl2.build_sigma_inverse(N)
    unit = ConvForm.unit(sigma.hopf, 2)
    rep.add("sigma-inverse-left", "cocycle-inverse", (inv * sigma) == unit,
            None)
    rep.add("sigma-inverse-right", "cocycle-inverse", (sigma * inv) == unit,
            None)
    return rep


def suite_deformation(N, mode, sample_count, seed) -> VerificationReport:
    if N <= 5:
        rep = uqsl2.uq_relation_report(N, multiplier=uqsl2.build_uq(N).algebra)
    else:
        rep = uqsl2.uq_relation_report(N)
    return rep


def suite_families(N, mode, sample_count, seed) -> VerificationReport:
    rep = VerificationReport({"suite": "families"})
    for p in _zoo_tuples(N, small=N == 3):
        rep.extend(comodzoo.verify_family_presentation(p))
        rep.extend(comodzoo.verify_deformed_presentation(p))
        rep.extend(verify_comodule_algebra(
            comodzoo.build_family(p), mode=mode,
            sample_count=sample_count // 4, seed=seed))
        rep.extend(verify_comodule_algebra(
            comodzoo.deform_family(p), mode=mode,
            sample_count=sample_count // 4, seed=seed))
    return rep


def suite_minpoly(N, mode, sample_count, seed) -> VerificationReport:
    fld = field(N)
    rep = VerificationReport({"suite": "minpoly"})
    triples = [(1, 1, 0), (1, 2, 3), (0, 1, 1), (1, 0, 2), (0, 0, 2),
               (0, 0, 0), (fld.q, 1, fld.q_power(2))]
    for a, b, g in triples:
        rep.extend(comodzoo.verify_min_pol_lemma(N, a, b, g))
    rep.extend(comodzoo.embed_A4_into_uq(N, u=1, v=2))
    rep.extend(comodzoo.embed_A4_into_uq(N, u=fld.q, v=0))
    rep.extend(comodzoo.one_dim_reps_A4(N, u=1, v=2))
    rep.extend(comodzoo.one_dim_reps_A4(N, u=1, v=1))
    generic = comodzoo.semisimplicity_A4(
        comodzoo.zoo_params("L4", N, alpha=1, beta=1, xi=3))
    w2 = fld.one - fld.q_power(2)  # beta for the boundary chart point u=v=1
    bound = comodzoo.semisimplicity_A4(
        comodzoo.zoo_params("L4", N, alpha=1, beta=w2, xi=2))
    rep.add("semisimple-generic-point", "semisimplicity-criterion",
            generic["semisimple"], generic)
    rep.add("semisimple-boundary-point", "semisimplicity-criterion",
            not bound["semisimple"], bound)
    return rep


def suite_chebyshev(N, mode, sample_count, seed) -> VerificationReport:
    rep = VerificationReport({"suite": "chebyshev"})
    for n in range(2, 8):
        rep.add(f"product-identity-omega-q-{n}", "root-product-identity",
                polyid.verify_chebyshev_identity(n), None)
    rep.add(f"product-identity-omega-q2-{N}", "root-product-identity",
            polyid.verify_min_pol_formula_consistency(N), None)
    fld0 = field(1)
    names = ("u", "v")
    u = polyid.MultiPoly.variable(fld0, names, "u")
    v = polyid.MultiPoly.variable(fld0, names, "v")
    for n in range(1, 12):
        lhs = polyid.power_sum_P(n).compose((u + v, u * v))
        rep.add(f"power-sum-{n}", "power-sum-recursion",
                lhs == u ** n + v ** n, None)
    return rep


def suite_morita(N, mode, sample_count, seed) -> VerificationReport:
    fld = field(N)
    rep = VerificationReport({"suite": "morita"})
    zp = comodzoo.zoo_params
    eta = fld.q
    lam = fld.from_rational(2)
    cases = [
        ("L0-r", zp("L0", N, r=1), zp("L0", N, r=N), False),
        ("L0-same", zp("L0", N, r=N), zp("L0", N, r=N), True),
        ("L1-xi", zp("L1", N, r=N, xi=1), zp("L1", N, r=N, xi=2), False),
        ("L1-same", zp("L1", N, r=N, xi=1), zp("L1", N, r=N, xi=1), True),
        ("L1-vs-L2", zp("L1", N, r=N, xi=1), zp("L2", N, r=N, zeta=1), False),
        ("L3N-eta-rotation", zp("L3N", N, xi=1, zeta=2, eta=eta),
         zp("L3N", N, xi=1, zeta=2, eta=eta * fld.q_power(2)), True),
        ("L3N-eta-scale", zp("L3N", N, xi=1, zeta=2, eta=fld.one),
         zp("L3N", N, xi=1, zeta=2, eta=fld.from_rational(2)), False),
        ("L3-fold", zp("L3", N, r=N, xi=1, zeta=2),
         zp("L3N", N, xi=1, zeta=2, eta=0), True),
        ("L1-fold", zp("L1", N, r=1, xi=2),
         zp("L4", N, alpha=1, beta=0, xi=2), True),
        ("L4-rescale", zp("L4", N, alpha=1, beta=1, xi=3),
         zp("L4", N, alpha=lam * fld.q_power(2), beta=lam * fld.q_power(-2),
            xi=lam ** N * fld.from_rational(3)), True),
        ("L4-not", zp("L4", N, alpha=1, beta=1, xi=3),
         zp("L4", N, alpha=2, beta=2, xi=7), False),
        ("L4-sided", zp("L4", N, alpha=1, beta=0, xi=1),
         zp("L4", N, alpha=0, beta=1, xi=1), False),
    ]
    for tag, p1, p2, want in cases:
        got = comodzoo.morita_equivalent_params(p1, p2)
        sym = comodzoo.morita_equivalent_params(p2, p1)
        rep.add(f"morita-{tag}", "equivalence-criterion",
                got == want and sym == want,
                None if got == want and sym == want else
                {"got": got, "symmetric": sym, "expected": want,
                 "pair": [p1.label(), p2.label()]})

    # explicit isomorphisms behind the True rows
    src = zp("L3N", N, xi=1, zeta=2, eta=eta * fld.q_power(2))
    dst = zp("L3N", N, xi=1, zeta=2, eta=eta)
    for deformed in (False, True):
        m, A, B = comodzoo.diagonal_family_map(
            src, dst, g_scale=fld.q_power(1), deformed=deformed)
        sub = check_comodule_algebra_morphism(m, A, B)
        rep.add(f"morita-eta-rotation-map-{'deformed' if deformed else 'plain'}",
                "eta-rotation-isomorphism", sub.ok,
                None if sub.ok else [c.claim_id for c in sub.failures()])
    src = zp("L4", N, alpha=2, beta=2, xi=lam ** N * fld.one)
    dst = zp("L4", N, alpha=1, beta=1, xi=1)
    for deformed in (False, True):
        m, A, B = comodzoo.diagonal_family_map(src, dst, w_scale=lam,
                                               deformed=deformed)
        sub = check_comodule_algebra_morphism(m, A, B)
        rep.add(f"morita-L4-rescale-map-{'deformed' if deformed else 'plain'}",
                "rescaling-isomorphism", sub.ok,
                None if sub.ok else [c.claim_id for c in sub.failures()])
    for power in (1, 2):
        sub = comodzoo.conjugation_invariance_report(
            zp("L4", N, alpha=1, beta=1, xi=3), power)
        rep.add(f"morita-conjugation-{power}", "conjugation-equivalence",
                sub.ok, None if sub.ok else
                [c.claim_id for c in sub.failures()])

    # distinguishing invariants
    d1 = comodzoo.morita_invariant_d(
        comodzoo.build_family(zp("L1", N, r=N, xi=2)))
    d3 = comodzoo.morita_invariant_d(
        comodzoo.build_family(zp("L3N", N, xi=1, zeta=2, eta=eta)))
    rep.add("morita-d-invariant-separates", "d-invariant",
            d1 != d3, {"L1": str(d1), "L3N": str(d3)})
    C1 = comodzoo.coefficient_coalgebra(
        comodzoo.build_family(zp("L1", N, r=N, xi=2)))
    C2 = comodzoo.coefficient_coalgebra(
        comodzoo.build_family(zp("L2", N, r=N, zeta=2)))
    rep.add("morita-coefficient-coalgebra-separates", "coefficient-coalgebra",
            C1 != C2, {"dim_L1": C1.dim, "dim_L2": C2.dim})
    return rep


def suite_filtration(N, mode, sample_count, seed) -> VerificationReport:
    fld = field(N)
    rep = VerificationReport({"suite": "filtration"})
    zp = comodzoo.zoo_params
    params = [zp("L1", N, r=N, xi=2), zp("L4", N, alpha=1, beta=1, xi=2)]
    if N == 3:
        params.append(zp("L3N", N, xi=1, zeta=2, eta=fld.q))
    for p in params:
        for build, tag in ((comodzoo.build_family, "plain"),
                           (comodzoo.deform_family, "deformed")):
            A = build(p)
            fil = comodzoo.loewy_filtration(A)
            rep.add(f"filtration-exhaustive-{p.family}-{tag}",
                    "loewy-filtration", fil.is_exhaustive(),
                    {"dims": list(fil.dims)})
            rep.add(f"filtration-products-{p.family}-{tag}",
                    "filtered-algebra", fil.respects_products(), None)
            rep.add(f"coinvariants-trivial-{p.family}-{tag}",
                    "coinvariants-dimension", coinvariants(A).dim == 1,
                    {"dim": coinvariants(A).dim})
            res = comodzoo.is_right_H_simple(A, seed=seed)
            rep.add(f"right-simple-{p.family}-{tag}", "H-simplicity",
                    res["simple"], res if not res["simple"] else
                    {"method": res["method"]})
    if N == 3:
        fil = comodzoo.loewy_filtration(
            comodzoo.build_family(zp("L3N", N, xi=1, zeta=2, eta=fld.q)))
        rep.add("filtration-L3N-layer-dims", "loewy-dimensions",
                fil.dims == (3, 9, 18, 24, 27), {"dims": list(fil.dims)})
        ds = direct_sum_comodule_algebras(
            comodzoo.build_family(zp("L0", N, r=N)),
            comodzoo.build_family(zp("L0", N, r=N)))
        res = comodzoo.is_right_H_simple(ds, seed=seed)
        rep.add("direct-sum-not-simple", "H-simplicity-counterexample",
                not res["simple"], res["witness"])
    return rep


_SUITE_FUNCS = {
    "hopf-axioms": suite_hopf_axioms,
    "cocycle": suite_cocycle,
    "deformation": suite_deformation,
    "families": suite_families,
    "minpoly": suite_minpoly,
    "chebyshev": suite_chebyshev,
    "morita": suite_morita,
    "filtration": suite_filtration,
}


def _emit(args, payload: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(payload)
            if not payload.endswith("\n"):
                fh.write("\n")
    else:
        print(payload)


def _report_text(rep: VerificationReport) -> str:
    lines = []
    for c in rep.checks:
        if c.ok:
            lines.append(f"PASS {c.claim_id}")
        else:
            lines.append(f"FAIL {c.claim_id} :: {json.dumps(c.witness, sort_keys=True, default=str)}")
    s = rep.summary()
    lines.append(f"{s['passed']}/{s['total']} checks passed")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    N = args.N
    uqsl2.check_order(N)
    mode = args.mode
    if mode == "auto":
        mode = "exhaustive" if N == 3 else "sampled"
    suites = args.suites.split(",") if args.suites else list(SUITES)
    for s in suites:
        if s not in _SUITE_FUNCS:
            raise ValueError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
    merged = VerificationReport({"N": N, "mode": mode,
                                 "sample_count": args.sample_count,
                                 "seed": args.seed,
                                 "suites": list(suites)})
    for s in suites:
        merged.extend(_SUITE_FUNCS[s](N, mode, args.sample_count, args.seed))
    if args.format == "json":
        _emit(args, merged.to_json(include_timings=args.timings))
    else:
        _emit(args, _report_text(merged))
    return 0 if merged.ok else 1


def cmd_classify(args) -> int:
    uqsl2.check_order(args.N)
    _emit(args, json.dumps(comodzoo.classify(args.N), indent=2,
                           sort_keys=True))
    return 0


def cmd_minpoly(args) -> int:
    N = args.N
    uqsl2.check_order(N)
    fld = field(N)
    alpha = _parse_coeff(fld, args.alpha)
    beta = _parse_coeff(fld, args.beta)
    gamma = _parse_coeff(fld, args.gamma)
    rep = comodzoo.verify_min_pol_lemma(N, alpha, beta, gamma)
    uq = uqsl2.build_uq(N)
    gen = uqsl2.uq_generators(N)
    Z = {}
    for name, coef in (("Et", alpha), ("F", beta), ("Kinv", gamma)):
        for k, c in vec_scale(gen[name], coef).items():
            vec_add_into(Z, k, c)
    minp = minimal_polynomial_of_element(uq.algebra, Z)
    payload = {
        "N": N,
        "element": f"({alpha}) Et + ({beta}) F + ({gamma}) Kinv",
        "minimal_polynomial": str(minp),
        "report": rep.as_dict(include_timings=args.timings),
    }
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2, sort_keys=True))
    else:
        lines = [f"element: {payload['element']}",
                 f"minimal polynomial: {payload['minimal_polynomial']}",
                 _report_text(rep)]
        _emit(args, "\n".join(lines))
    return 0 if rep.ok else 1


def cmd_export(args) -> int:
    N = args.N
    uqsl2.check_order(N)
    what = args.what
    if what == "gr-uq":
        data = hopf_to_json(uqsl2.build_gr_uq(N))
    elif what == "uq":
        data = hopf_to_json(uqsl2.build_uq(N))
    elif what == "sigma":
        data = form_to_json(uqsl2.build_sigma(N))
    elif what == "sigma-inverse":
        data = form_to_json(uqsl2.build_sigma_inverse(N))
    elif what == "family":
        if not args.family:
            raise ValueError("export family needs --family")
        fld = field(N)
        kw = {}
        for name in ("xi", "zeta", "eta", "alpha", "beta"):
            raw = getattr(args, name)
            if raw is not None:
                kw[name] = _parse_coeff(fld, raw)
        p = comodzoo.zoo_params(args.family, N, r=args.r, **kw)
        A = comodzoo.deform_family(p) if args.deformed \
            else comodzoo.build_family(p)
        data = comodule_to_json(A)
    else:
        raise ValueError(f"unknown export target {what!r}")
    _emit(args, dumps_sorted(data))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="uqcomod",
        description="exact verification of u_q(sl2), its cocycle deformation "
                    "and the comodule-algebra zoo")
    sub = ap.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int, default=3,
                        help="odd root-of-unity order (default 3)")
    common.add_argument("--output", default=None, help="write to file")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--timings", action="store_true",
                        help="include elapsed times (breaks byte-for-byte "
                             "reproducibility)")

    v = sub.add_parser("verify", parents=[common],
                       help="run verification suites")
    v.add_argument("--suites", default=None,
                   help="comma-separated subset of: " + ",".join(SUITES))
    v.add_argument("--mode", choices=("auto", "exhaustive", "sampled"),
                   default="auto")
    v.add_argument("--sample-count", type=int, default=10000)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", parents=[common],
                       help="describe the zoo at order N")
    c.set_defaults(func=cmd_classify)

    m = sub.add_parser("minpoly", parents=[common],
                       help="minimal polynomial of alpha Et + beta F "
                            "+ gamma K^-1")
    m.add_argument("--alpha", default="0")
    m.add_argument("--beta", default="0")
    m.add_argument("--gamma", default="0")
    m.set_defaults(func=cmd_minpoly)

    e = sub.add_parser("export", parents=[common],
                       help="dump exact JSON data")
    e.add_argument("--what", required=True,
                   choices=("gr-uq", "uq", "sigma", "sigma-inverse",
                            "family"))
    e.add_argument("--family", default=None,
                   choices=("L0", "L1", "L2", "L3", "L3N", "L4"))
    e.add_argument("--r", type=int, default=None)
    e.add_argument("--xi", default=None)
    e.add_argument("--zeta", default=None)
    e.add_argument("--eta", default=None)
    e.add_argument("--alpha", default=None)
    e.add_argument("--beta", default=None)
    e.add_argument("--deformed", action="store_true")
    e.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
