"""Batch verification suites over the presented algebras and their modules.

    jordandouble run <suite> [--field-ext K] [--exp-bound E] [--range R] [--nmax N]
                             [--seed S] [--json PATH]
    jordandouble zoo --family U1 --r 2 [--field-ext K]
    jordandouble dump-basis <preset>
    jordandouble dump-module --family Aband --n 2 --lambda 3 --field-ext 4

Exit status is 0 when no check fails, 1 when some check fails and 2 on a
usage error.  JSON reports have sorted keys and carry no timings, so two runs
with the same configuration produce identical bytes.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from dataclasses import dataclass, field as dc_field

from . import algebras, hopf as hopfmod, identities, reptheory as rt, zoo
from .exactmath import cached_field
from .hopf import FAIL, PASS, UNVERIFIED, Check, status_of
from .rewrite import PRESETS, complete, enumerate_basis, get_system

SUITES = (
    "presentations",
    "hopf-axioms",
    "sequence-2-7",
    "simples",
    "ext-table",
    "projectives",
    "basic-quiver",
    "strings-bands",
    "zoo",
    "duality",
    "dtilde",
    "diagram-5-10",
)

MAX_FIELD_EXT = 16
MAX_EXP_BOUND = 10
MAX_RANGE = 5
BAND_FIELD_EXT = 4


class UsageError(ValueError):
    pass


@dataclass
class SuiteConfig:
    field_ext: int = 1
    exp_bound: int = 6
    range: int = 3
    nmax: int = 3
    seed: int = rt.DEFAULT_SEED

    def validate(self) -> None:
        if not 1 <= self.field_ext <= MAX_FIELD_EXT:
            raise UsageError(f"--field-ext must be in 1..{MAX_FIELD_EXT}")
        if not 1 <= self.exp_bound <= MAX_EXP_BOUND:
            raise UsageError(f"--exp-bound must be in 1..{MAX_EXP_BOUND}")
        if not 1 <= self.range <= MAX_RANGE:
            raise UsageError(f"--range must be in 1..{MAX_RANGE}")
        if self.nmax < 1:
            raise UsageError("--nmax must be at least 1")

    def to_dict(self) -> dict:
        return {"field_ext": self.field_ext, "exp_bound": self.exp_bound, "range": self.range, "nmax": self.nmax, "seed": self.seed}


@dataclass
class Report:
    suite: str
    config: SuiteConfig
    checks: list = dc_field(default_factory=list)
    notices: list = dc_field(default_factory=list)
    duration: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "config": self.config.to_dict(),
            "notices": list(self.notices),
            "ok": self.ok,
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.check_id)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, default=str)

    def to_text(self) -> str:
        lines = [f"suite {self.suite}  ({self.duration:.1f} s)"]
        lines += [f"  notice: {n}" for n in self.notices]
        for c in sorted(self.checks, key=lambda c: c.check_id):
            extra = []
            if c.expected is not None:
                extra.append(f"expected={c.expected}")
            if c.actual is not None:
                extra.append(f"actual={c.actual}")
            if c.witness is not None:
                extra.append(f"witness={c.witness}")
            lines.append(f"  [{c.status}] {c.check_id}" + (f"  {'  '.join(map(str, extra))}" if extra else ""))
        n_fail = sum(c.status == FAIL for c in self.checks)
        lines.append(f"  {len(self.checks)} checks, {n_fail} failing")
        return "\n".join(lines)


def _anchor(checks: list[Check], text: str) -> list[Check]:
    for c in checks:
        if not c.ref:
            c.ref = text
    return checks


def _eq(check_id: str, expected, actual, ref: str = "", witness=None) -> Check:
    return Check(check_id, status_of(expected == actual), ref, expected, actual, witness)


# ---------------------------------------------------------------------------
# suites


def suite_presentations(cfg: SuiteConfig, rep: Report) -> None:
    expected = {"um": 32, "H": 32, "Hstar": 32, "DH": 1024, "basic": 8, "quiverQI": 8}
    for name, dim in expected.items():
        A = algebras.build(name)
        rep.checks.append(Check(f"presentations.{name}.confluent", status_of(A.report.confluent), "confluence of the presentation", actual=A.report.pairs_checked))
        rep.checks.append(_eq(f"presentations.{name}.dim", dim, A.dim, "dimension of the presented algebra"))
    D = algebras.build("DH")
    K = algebras.subalgebra_basis(D, [D.elem(s) for s in ("x1", "x21", "g", "w1", "w21")])
    rep.checks.append(_eq("presentations.K.dim", 32, len(K), "kernel of the projection onto u(m)"))
    for res in identities.check_identities(cfg.exp_bound):
        witness = None
        if not res["holds"]:
            witness = {"failures": res["failures"][:3], "failure_count": res["failure_count"]}
            if "alternative" in res:
                witness["alternative"] = res["alternative"]
            if "holds_with_xi_one_plus_zeta" in res:
                witness["holds_with_xi_one_plus_zeta"] = res["holds_with_xi_one_plus_zeta"]
        rep.checks.append(
            Check(
                f"identities.{res['system']}.{res['id']}",
                status_of(res["holds"]),
                "consequence identities by normal form",
                actual=f"exponents <= {res['bound']}",
                witness=witness,
            )
        )


def suite_hopf_axioms(cfg: SuiteConfig, rep: Report) -> None:
    for name in ("um", "H", "Hstar", "DH"):
        rep.checks += _anchor(hopfmod.check_hopf_axioms(hopfmod.hopf(name), seed=cfg.seed), "Hopf structure maps")
    ok, w = hopfmod.antipode_power_check(hopfmod.hopf("um"), 2)
    rep.checks.append(Check("um.S^2=id", status_of(ok), "involutory antipode", witness=w))
    ok, w = hopfmod.antipode_power_check(hopfmod.hopf("H"), 2, conj_by="g")
    rep.checks.append(Check("H.S^2=conjugation-by-g", status_of(ok), "antipode of the bosonization", witness=w))
    ok, w = hopfmod.antipode_power_check(hopfmod.hopf("H"), 2)
    rep.checks.append(Check("H.S^2-not-identity", status_of(not ok), "antipode of the bosonization", witness=w))
    ok, w = hopfmod.antipode_power_check(hopfmod.hopf("DH"), 2, conj_by="g")
    rep.checks.append(Check("DH.S^2=conjugation-by-g", status_of(ok), "square of the antipode of the double", actual=1024, witness=w))
    rep.checks.append(Check("DH.pointed", UNVERIFIED, "pointedness of the double", witness="coradical argument, no finite check"))


def suite_sequence(cfg: SuiteConfig, rep: Report) -> None:
    D, um = algebras.build("DH"), algebras.build("um")
    HD, Hu = hopfmod.hopf("DH"), hopfmod.hopf("um")
    K = algebras.subalgebra_basis(D, [D.elem(s) for s in ("x1", "x21", "g", "w1", "w21")])
    checks, ker_dim = hopfmod.exact_sequence_check(K, D, HD, um, Hu, hopfmod.named_map("pi_u"), "sequence")
    rep.checks += _anchor(checks, "exact sequence K -> D(H) -> u(m)")
    rep.checks.append(_eq("sequence.dim-ker-pi=992", 992, ker_dim, "exact sequence K -> D(H) -> u(m)"))
    rep.checks.append(_eq("sequence.dim-K", 32, len(K), "exact sequence K -> D(H) -> u(m)"))
    # K is local: every PBW monomial of K other than 1 and g is nilpotent
    S = D.system
    gidx = S.index["g"]
    bad = []
    tested = 0
    for m in enumerate_basis(S):
        if any(e for i, e in enumerate(m) if S.gens[i].name not in ("x1", "x21", "g", "w1", "w21")):
            continue
        if all(e == 0 for i, e in enumerate(m) if i != gidx):
            continue
        tested += 1
        y = D.from_element(S.monomial(m))
        for _ in range(D.dim.bit_length()):
            y = D.mul(y, y)
        if y:
            bad.append(S.format_mono(m))
    rep.checks.append(Check("sequence.K-local", status_of(not bad), "K is local", actual=tested, witness=bad[:3] or None))
    left, right, same = hopfmod.integral_spaces(D, HD)
    rep.checks.append(_eq("DH.left-integrals-dim", 1, len(left), "unimodularity of the double"))
    rep.checks.append(_eq("DH.right-integrals-dim", 1, len(right), "unimodularity of the double"))
    rep.checks.append(Check("DH.unimodular", status_of(same), "unimodularity of the double"))


def suite_simples(cfg: SuiteConfig, rep: Report) -> None:
    ref = "simple modules"
    for name in ("um", "DH"):
        sc = rt.simple_classification(name, cfg.seed)
        rep.checks.append(_eq(f"simples.{name}.count", 2, len(sc.simples), ref))
        rep.checks.append(_eq(f"simples.{name}.dims", [1, 3], [s.dim for s in sc.simples], ref))
    V1 = rt.classify_simples("um", cfg.seed)[1]
    rep.checks.append(Check("simples.V1-table-matches-meataxe", status_of(rt.is_isomorphic(zoo.make_module("V1"), V1, cfg.seed)), ref))
    DV1 = rt.classify_simples("DH", cfg.seed)[1]
    pulled = zoo.pullback_to_double(zoo.make_module("V1"))
    rep.checks.append(Check("simples.DH-V1-is-pullback", status_of(rt.is_isomorphic(pulled, DV1, cfg.seed)), "simple modules of the double"))
    valid, nonzero = rt.small_um_representations(2)
    rep.checks.append(
        Check("simples.dim2-reps-trivial", status_of(nonzero == 0), "two-dimensional modules are trivial", expected=0, actual=nonzero, witness=f"{valid} valid triples of 4096")
    )
    rep.checks.append(Check("simples.seed", PASS, "meataxe seed", actual=cfg.seed))


def suite_ext(cfg: SuiteConfig, rep: Report) -> None:
    V0, V1 = rt.classify_simples("um", cfg.seed)
    expected = {("V0", "V0"): 0, ("V0", "V1"): 2, ("V1", "V0"): 2, ("V1", "V1"): 0}
    for (s, t), want in expected.items():
        S, T = (V0 if s == "V0" else V1), (V0 if t == "V0" else V1)
        rep.checks.append(_eq(f"ext.{s}-{t}", want, rt.ext1("um", S, T, cfg.seed), "first extension groups between simples"))
    # every extension module V[theta, lam, mu] has V1 as a submodule and V0 as the quotient
    bad = []
    F = cached_field(1)
    for th, la, m in itertools.product((0, 1), repeat=3):
        X = zoo.make_module(zoo.StringBandSpec("Vext", theta=th, lam=la, mu=m))
        W = rt.Subspace(F, 4, [F.row_unit(i) for i in (1, 2, 3)])
        if not rt.is_submodule(X, W):
            bad.append(X.name)
            continue
        sub, quo = rt.sub_representation(X, W), rt.quotient_representation(X, W)
        if not (rt.is_isomorphic(sub, V1, cfg.seed) and rt.is_isomorphic(quo, V0, cfg.seed)):
            bad.append(X.name)
    rep.checks.append(Check("ext.Vext-is-extension-of-V0-by-V1", status_of(not bad), "explicit extension modules", actual=8, witness=bad or None))


def suite_projectives(cfg: SuiteConfig, rep: Report) -> None:
    data = algebras.basic_algebra_data()
    for k, v in data.check_idempotents().items():
        rep.checks.append(Check(f"projectives.{k}", status_of(v), "idempotents of u(m)"))
    P = rt.projective_covers(cfg.seed)
    M, N = zoo.make_module("M"), zoo.make_module("N")
    for simple, X in (("V0", M), ("V1", N)):
        Q = P[simple]
        rep.checks.append(_eq(f"projectives.P({simple}).dim", 8, Q.dim, "projective covers"))
        rep.checks.append(Check(f"projectives.P({simple})~{X.name}", status_of(rt.is_isomorphic(Q, X, cfg.seed)), "projective covers"))
    want = {
        "M": (["V0", "V1", "V1", "V0"], ["V0"], ["V0"]),
        "N": (["V1", "V0", "V0", "V1"], ["V1"], ["V1"]),
    }
    for X in (M, N):
        s = rt.module_series(X, cfg.seed)
        factors, top, soc = want[X.name]
        ref = f"composition series of {X.name}"
        rep.checks.append(_eq(f"projectives.{X.name}.factors", factors, s.factors, ref))
        rep.checks.append(_eq(f"projectives.{X.name}.top", top, s.radical_layers[0], ref))
        rep.checks.append(_eq(f"projectives.{X.name}.socle", soc, s.socle_layers[0], ref))
        for k, v in zoo.biserial_witness(X.name, cfg.seed).items():
            rep.checks.append(Check(f"projectives.{X.name}.biserial.{k}", status_of(v), "biseriality of u(m)"))
        rep.checks.append(_eq(f"projectives.{X.name}.jordan-type-a", [4, 4], rt.jordan_type(X.action["a"]), "no Jordan block of size 2"))
    sc = rt.simple_classification("um", cfg.seed)
    mult = {"V0": 2 * 1 + 2 * 3, "V1": 2 * 1 + 2 * 3}
    rep.checks.append(
        _eq("projectives.regular=P(V0)+3P(V1)", [mult["V0"], mult["V1"]], sc.factor_counts, "decomposition of the regular module", witness="32 = 8 + 3*8")
    )


def suite_basic_quiver(cfg: SuiteConfig, rep: Report) -> None:
    B = algebras.build("basic")
    J = rt.radical_of_algebra(B, cfg.seed)
    J2 = rt.ideal_power(B, J, 2)
    label = lambda vs: sorted(B.format(v) for v in vs)
    ref = "radical of the basic algebra"
    rep.checks.append(_eq("basic.Jac", sorted(["ae0", "a3e1", "b3e0", "be1", "a3b3e0", "abe1"]), label(J), ref))
    rep.checks.append(_eq("basic.Jac^2", sorted(["a3b3e0", "abe1"]), label(J2), ref))
    rep.checks.append(_eq("basic.Jac-nilpotency", 3, rt.nilpotency_index(B, J), ref))
    Q = algebras.build("quiverQI")
    res = algebras.quiver_map_check(Q, B)
    ref = "bound quiver presentation of the basic algebra"
    rep.checks.append(Check("quiver.phi-surjective", status_of(res["surjective"]), ref))
    rep.checks.append(Check("quiver.phi-arrows-compatible", status_of(res["arrows_compatible"]), ref))
    for r, ok in res["relations_to_zero"].items():
        rep.checks.append(Check(f"quiver.relation[{r}]-in-kernel", status_of(ok), ref))
    rep.checks.append(_eq("quiver.dim-kQ/I", 8, res["quotient_dim"], ref))
    n, bad = algebras.basic_algebra_data().check_psi()
    rep.checks.append(Check("basic.psi-anti-multiplicative", status_of(not bad and n == 64), "anti-automorphism of the basic algebra", actual=n, witness=bad[:3] or None))


def suite_strings_bands(cfg: SuiteConfig, rep: Report) -> None:
    ref = "strings and bands of the bound quiver"
    L = 10
    got = set(zoo.enumerate_strings(L))
    want = zoo.string_families(L)
    rep.checks.append(
        Check("strings.enumeration=families", status_of(got == want), ref, expected=len(want), actual=len(got), witness=sorted(w.format() for w in got ^ want)[:5] or None)
    )
    two = [w.format() for w in zoo.enumerate_strings(2)]
    rep.checks.append(_eq("strings.length<=2", 18, len(two), ref))
    rep.checks.append(Check("strings.reject[alpha1 beta2 alpha1 alpha2^-1]", status_of(not zoo.is_string(zoo.walk("alpha1 beta2 alpha1 alpha2^-1"))), ref))
    rep.checks.append(Check("strings.accept[alpha1 alpha2^-1 alpha1]", status_of(zoo.is_string(zoo.walk("alpha1 alpha2^-1 alpha1"))), ref))
    bands = zoo.enumerate_bands(L)
    rep.checks.append(_eq("bands.classes", 2, len(bands), ref, witness=[b.format() for b in bands]))
    want_keys = {zoo.band_key(zoo.walk("alpha1 alpha2^-1")), zoo.band_key(zoo.walk("beta1 beta2^-1"))}
    rep.checks.append(Check("bands.are-u-and-v", status_of({zoo.band_key(b) for b in bands} == want_keys), ref))
    rep.checks.append(_eq("strings.family-count", 8, len(zoo.STRING_FAMILIES), "families of string modules"))


def _band_field(cfg: SuiteConfig, rep: Report):
    k = cfg.field_ext
    if k < BAND_FIELD_EXT:
        rep.notices.append(f"band checks run over GF(2^{BAND_FIELD_EXT}) instead of GF(2^{k})")
        k = BAND_FIELD_EXT
    return cached_field(k)


def suite_zoo(cfg: SuiteConfig, rep: Report) -> None:
    F = _band_field(cfg, rep)
    ref = "classification of indecomposable u(m)-modules"
    z = zoo.verify_classification(cfg.range, cfg.nmax, F, cfg.seed)
    rep.checks.append(_eq("zoo.members-valid", [], z.invalid, ref, witness=f"{z.members} members"))
    rep.checks.append(_eq("zoo.indecomposable", [], z.decomposable, ref, witness=z.methods))
    rep.checks.append(_eq("zoo.dimensions", [], z.wrong_dim, ref))
    rep.checks.append(_eq("zoo.no-jordan-block-2", [], z.jordan_two, "no Jordan block of size 2"))
    rep.checks.append(_eq("zoo.pairwise-non-isomorphic", [], z.isomorphic_pairs, ref, witness=f"{z.pairs_tested} pairs"))
    rep.checks.append(_eq("zoo.duality-table", [], z.duality_failures, "duals of string and band modules", witness=f"{z.duals_tested} duals"))
    tw = zoo.chevalley_twist_check(F, 2, cfg.seed)
    bad = [lam for lam, v in tw.items() if not v["theta"]]
    rep.checks.append(_eq("zoo.chevalley-twist-A[lam],2~A[1/lam],2", [], bad, "twist by the Chevalley involution", witness=f"{len(tw)} values of lambda"))
    bad = [lam for lam, v in tw.items() if not v["theta_inverse"]]
    rep.checks.append(_eq("zoo.chevalley-twist-inverse-orientation", [], bad, "twist by the Chevalley involution"))
    # pullback to the double keeps members valid and indecomposable
    bad = []
    specs = zoo.family_members(cfg.range, cfg.nmax, F)
    for spec in specs:
        X = zoo.pullback_to_double(zoo.make_module(spec, F))
        if not rt.is_indecomposable(X, cfg.seed).indecomposable:
            bad.append(spec.label)
    rep.checks.append(_eq("zoo.pullback-to-DH-indecomposable", [], bad, "restriction along D(H) -> u(m)", witness=f"{len(specs)} members"))


def suite_duality(cfg: SuiteConfig, rep: Report) -> None:
    F = _band_field(cfg, rep)
    ref = "duals of u(m)-modules"
    V0, V1 = rt.classify_simples("um", cfg.seed)
    rep.checks.append(Check("duality.V1*~V1", status_of(rt.is_isomorphic(rt.dual_module(V1), V1, cfg.seed)), ref))
    rep.checks.append(Check("duality.V0*=V0", status_of(rt.dual_module(V0).action == V0.action), ref))
    bad_table, bad_double, bad_inv = [], [], []
    specs = zoo.family_members(cfg.range, cfg.nmax, F)
    for spec in specs:
        X = zoo.make_module(spec, F)
        D = rt.dual_module(X)
        if not rt.isomorphism(X, rt.dual_module(D), cfg.seed, indecomposable=True).isomorphic:
            bad_double.append(spec.label)
        if rt.dual_module(X, use_inverse_antipode=True).action != D.action:
            bad_inv.append(spec.label)
        partner = zoo.make_module(zoo.dual_partner(spec), F)
        if not rt.isomorphism(partner, D, cfg.seed, indecomposable=True).isomorphic:
            bad_table.append(spec.label)
    rep.checks.append(_eq("duality.table", [], bad_table, "duals of string and band modules", witness=f"{len(specs)} members"))
    rep.checks.append(_eq("duality.double-dual", [], bad_double, ref))
    rep.checks.append(_eq("duality.S-and-S^-1-agree", [], bad_inv, ref))
    theta = rt.chevalley_theta()
    rep.checks.append(_eq("duality.chevalley-theta-order-2", theta, rt.inverse_automorphism(get_system("um"), theta), "Chevalley involution"))


def suite_dtilde(cfg: SuiteConfig, rep: Report) -> None:
    _, report = complete("Dtilde", cfg.exp_bound)
    rep.checks.append(
        Check("Dtilde.local-confluence", status_of(report.confluent, True), "presentation of the infinite double", actual=report.pairs_checked, witness=f"exponent bound {cfg.exp_bound}")
    )
    rep.checks += _anchor(hopfmod.dtilde_checks(seed=cfg.seed), "Hopf structure of the infinite double")
    # the cross relation w2 x1 = x1 w + 1 + g, with w read as w1 + w2, in both doubles
    bad = []
    for name in ("Dtilde", "DH"):
        S = get_system(name)
        if S.elem("w2 x1") != S.elem("x1 w1 + x1 w2 + 1 + g"):
            bad.append(name)
    rep.checks.append(Check("Dtilde.w-reading", status_of(not bad), "cross relation of the doubles", witness=bad or "w = w1 + w2"))
    rep.checks += _anchor(hopfmod.check_pairing_axioms(500, 3, cfg.seed), "skew pairing")


def suite_diagram(cfg: SuiteConfig, rep: Report) -> None:
    rep.checks += _anchor(hopfmod.middle_column_checks(), "middle column of the diagram")
    rep.checks += _anchor(hopfmod.middle_row_checks(), "middle row of the diagram")
    rep.checks += _anchor(hopfmod.left_column_checks(), "left column of the diagram")
    rep.checks += _anchor(hopfmod.diagram_checks(), "commutativity of the diagram")


RUNNERS = {
    "presentations": suite_presentations,
    "hopf-axioms": suite_hopf_axioms,
    "sequence-2-7": suite_sequence,
    "simples": suite_simples,
    "ext-table": suite_ext,
    "projectives": suite_projectives,
    "basic-quiver": suite_basic_quiver,
    "strings-bands": suite_strings_bands,
    "zoo": suite_zoo,
    "duality": suite_duality,
    "dtilde": suite_dtilde,
    "diagram-5-10": suite_diagram,
}


def run_suite(name: str, config: SuiteConfig | None = None) -> Report:
    cfg = config or SuiteConfig()
    cfg.validate()
    if name not in RUNNERS and name != "all":
        raise UsageError(f"unknown suite {name!r}; expected one of {', '.join(SUITES + ('all',))}")
    rep = Report(name, cfg)
    t0 = time.perf_counter()
    for s in SUITES if name == "all" else (name,):
        sub = Report(s, cfg)
        RUNNERS[s](cfg, sub)
        rep.checks += sub.checks
        rep.notices += [n for n in sub.notices if n not in rep.notices]
    rep.duration = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# command line


def _spec_from_args(args) -> zoo.StringBandSpec:
    return zoo.StringBandSpec(args.family, r=args.r, t=args.t, n=args.n, lam=args.lam, theta=args.theta, mu=args.mu)


def _add_family_flags(p) -> None:
    p.add_argument("--family", required=True, choices=zoo.FAMILIES)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--lambda", dest="lam", type=int, default=1)
    p.add_argument("--theta", type=int, default=0)
    p.add_argument("--mu", type=int, default=0)
    p.add_argument("--field-ext", type=int, default=None)
    p.add_argument("--seed", type=int, default=rt.DEFAULT_SEED)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jordandouble", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="run a verification suite")
    r.add_argument("suite", choices=SUITES + ("all",))
    r.add_argument("--field-ext", type=int, default=1)
    r.add_argument("--exp-bound", type=int, default=6)
    r.add_argument("--range", type=int, default=3)
    r.add_argument("--nmax", type=int, default=3)
    r.add_argument("--seed", type=int, default=rt.DEFAULT_SEED)
    r.add_argument("--json", metavar="PATH")
    z = sub.add_parser("zoo", help="check one family member")
    _add_family_flags(z)
    d = sub.add_parser("dump-basis", help="print the monomial basis of a preset")
    d.add_argument("preset", choices=PRESETS)
    d.add_argument("--exp-bound", type=int, default=6)
    m = sub.add_parser("dump-module", help="print the action graph of a module")
    _add_family_flags(m)
    return p


def _member_report(spec: zoo.StringBandSpec, k: int, seed: int) -> Report:
    cfg = SuiteConfig(field_ext=k, seed=seed)
    rep = Report(f"zoo:{spec.label}", cfg)
    F = cached_field(k)
    ref = "classification of indecomposable u(m)-modules"
    X = zoo.make_module(spec, F)
    rep.checks.append(_eq("member.dim", spec.dim, X.dim, ref))
    ind = rt.is_indecomposable(X, seed)
    rep.checks.append(Check("member.indecomposable", status_of(ind.indecomposable), ref, actual=ind.method))
    rep.checks.append(Check("member.no-jordan-block-2", status_of(2 not in rt.jordan_type(X.action["a"])), "no Jordan block of size 2"))
    if spec.family in zoo.DUALITY_TABLE or spec.family in zoo.DUALITY_TABLE.values():
        partner = zoo.make_module(zoo.dual_partner(spec), F)
        ok = rt.isomorphism(partner, rt.dual_module(X), seed, indecomposable=True).isomorphic
        rep.checks.append(Check("member.dual", status_of(ok), "duals of string and band modules", actual=partner.name))
    return rep


def _emit(rep: Report, args) -> int:
    print(rep.to_text())
    path = getattr(args, "json", None)
    if path:
        with open(path, "w") as fh:
            fh.write(rep.to_json() + "\n")
    return 0 if rep.ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        if args.command == "run":
            cfg = SuiteConfig(args.field_ext, args.exp_bound, args.range, args.nmax, args.seed)
            return _emit(run_suite(args.suite, cfg), args)
        if args.command == "dump-basis":
            if not 1 <= args.exp_bound <= MAX_EXP_BOUND:
                raise UsageError(f"--exp-bound must be in 1..{MAX_EXP_BOUND}")
            A = algebras.build(args.preset, args.exp_bound)
            if hasattr(A, "labels"):
                lines = list(A.labels)
            else:
                S = A.system
                lines = [S.format_mono(m) for m in enumerate_basis(S, args.exp_bound)]
            print("\n".join(lines))
            return 0
        k = args.field_ext
        spec = _spec_from_args(args)
        if k is None:
            k = BAND_FIELD_EXT if spec.family in zoo.BAND_FAMILIES else 1
        if not 1 <= k <= MAX_FIELD_EXT:
            raise UsageError(f"--field-ext must be in 1..{MAX_FIELD_EXT}")
        if args.command == "dump-module":
            print(zoo.dump_module(zoo.make_module(spec, cached_field(k))))
            return 0
        return _emit(_member_report(spec, k, args.seed), args)
    except (UsageError, zoo.ParameterError, rt.ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
