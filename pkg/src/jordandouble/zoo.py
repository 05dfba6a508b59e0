"""Named u(m)-modules: simples, projectives, extensions, string and band families.

String and band modules are written down in a basis z_1, ..., z_d where

    a z_i = kappa_i z_{i+1},  b z_i = mu_i z_{i-1} (+ xi_i lam z_{i+3}),  c z_i = nu_i z_i.

Each family records where kappa, mu and xi vanish as residue conditions on i,
and nu as a parity shift.  Every constructed module is checked against the
u(m) relations, so a wrong table entry raises immediately.

The second half handles the combinatorics of the bound quiver: walks,
the string and band predicates and exhaustive enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .algebras import QuiverData
from .exactmath import Field, Matrix, cached_field
from .reptheory import (
    DEFAULT_SEED,
    _simples_for,
    Representation,
    ResourceError,
    Subspace,
    chevalley_theta,
    dual_module,
    identify_simple,
    inverse_automorphism,
    is_indecomposable,
    is_submodule,
    is_uniserial,
    isomorphism,
    jordan_type,
    radical,
    sub_representation,
    twist_by_automorphism,
)
from .rewrite import get_system


class ParameterError(ValueError):
    pass


# ---------------------------------------------------------------------------
# coefficient tables


@dataclass(frozen=True)
class Vanish:
    """Indices i (1-based, in a module of dimension d) where a coefficient is 0."""

    residues: frozenset = frozenset()
    first: bool = False
    last: bool = False

    def __call__(self, i: int, d: int) -> bool:
        return (i % 4) in self.residues or (self.first and i == 1) or (self.last and i == d)


def _v(*residues, first=False, last=False) -> Vanish:
    return Vanish(frozenset(residues), first, last)


@dataclass(frozen=True)
class Coefficients:
    kappa: Vanish
    mu: Vanish
    nu_shift: int  # nu_i = (i + shift) mod 2
    xi: Vanish | None = None  # bands only


STRING_TABLE = {
    "U1": Coefficients(_v(0, last=True), _v(2, first=True), 1),
    "U2": Coefficients(_v(3), _v(1), 0),
    "U3": Coefficients(_v(0, last=True), _v(0, first=True), 0),
    "U4": Coefficients(_v(1), _v(1), 1),
    "Vfam1": Coefficients(_v(0), _v(2, first=True), 1),
    "Vfam2": Coefficients(_v(3, last=True), _v(1), 0),
    "Wfam1": Coefficients(_v(0, last=True), _v(0, first=True), 0),
    "Wfam2": Coefficients(_v(1, last=True), _v(1, first=True), 1),
}

BAND_TABLE = {
    "Aband": Coefficients(_v(0), _v(2, first=True), 1, _v(0, 2, 3)),
    "Bband": Coefficients(_v(0), _v(0, first=True), 0, _v(0, 2, 3)),
}

STRING_FAMILIES = tuple(STRING_TABLE)
BAND_FAMILIES = tuple(BAND_TABLE)
FAMILIES = STRING_FAMILIES + BAND_FAMILIES + ("V0", "V1", "Vext", "M", "N")


def kappa(family: str, i: int, d: int) -> int:
    if i >= d:
        return 0
    return 0 if _coeffs(family).kappa(i, d) else 1


def mu(family: str, i: int, d: int) -> int:
    if i <= 1:
        return 0
    return 0 if _coeffs(family).mu(i, d) else 1


def xi(family: str, i: int, d: int) -> int:
    C = _coeffs(family)
    if C.xi is None or i + 3 > d:
        return 0
    return 0 if C.xi(i, d) else 1


def nu(family: str, i: int) -> int:
    return (i + _coeffs(family).nu_shift) % 2


def _coeffs(family: str) -> Coefficients:
    if family in STRING_TABLE:
        return STRING_TABLE[family]
    if family in BAND_TABLE:
        return BAND_TABLE[family]
    raise ParameterError(f"no coefficient table for {family!r}")


# ---------------------------------------------------------------------------
# specs


@dataclass(frozen=True)
class StringBandSpec:
    family: str
    r: int = 1
    t: int = 0
    n: int = 1
    lam: int = 1
    theta: int = 0
    mu: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.family.startswith("U") and self.r < 1:
            raise ParameterError("r must be at least 1")
        if self.family[:4] in ("Vfam", "Wfam") and self.t < 0:
            raise ParameterError("t must be non-negative")
        if self.family in BAND_FAMILIES:
            if self.n < 1:
                raise ParameterError("n must be at least 1")
            if self.lam == 0:
                raise ParameterError("band parameter lambda must be nonzero")

    @property
    def dim(self) -> int:
        f = self.family
        if f in ("U1", "U4"):
            return 4 * self.r + 1
        if f in ("U2", "U3"):
            return 4 * self.r + 3
        if f in ("Vfam1", "Vfam2", "Wfam1", "Wfam2"):
            return 4 * (self.t + 1)
        if f in BAND_FAMILIES:
            return 4 * self.n
        return {"V0": 1, "V1": 3, "Vext": 4, "M": 8, "N": 8}[f]

    @property
    def label(self) -> str:
        f = self.family
        if f.startswith("U"):
            return f"U{f[1]},{self.r}"
        if f[:4] in ("Vfam", "Wfam"):
            return f"{f[0]}{f[-1]},{self.t}"
        if f in BAND_FAMILIES:
            return f"{f[0]}[{self.lam}],{self.n}"
        if f == "Vext":
            return f"V[{self.theta},{self.lam},{self.mu}]"
        return f


def _from_images(F: Field, d: int, images: dict) -> Matrix:
    """Matrix whose column j is sum of c z_i over (i, c) in images[j] (0-based)."""
    rows = [[0] * d for _ in range(d)]
    for j, terms in images.items():
        for i, c in terms:
            rows[i][j] = F.add(rows[i][j], c)
    return Matrix.from_lists(F, rows)


def _table_module(spec: StringBandSpec, F: Field) -> dict:
    f, d = spec.family, spec.dim
    a, b, c = {}, {}, {}
    for i in range(1, d + 1):
        j = i - 1
        a[j] = [(j + 1, 1)] if kappa(f, i, d) else []
        b[j] = [(j - 1, 1)] if mu(f, i, d) else []
        if xi(f, i, d):
            b[j].append((j + 3, spec.lam))
        c[j] = [(j, 1)] if nu(f, i) else []
    return {"a": _from_images(F, d, a), "b": _from_images(F, d, b), "c": _from_images(F, d, c)}


def _named(names: list[str], F: Field, images: dict) -> Matrix:
    """Matrix from an action given on named basis vectors."""
    idx = {n: k for k, n in enumerate(names)}
    return _from_images(F, len(names), {idx[x]: [(idx[y], 1) for y in ys] for x, ys in images.items()})


_MN_BASIS = ["v1", "v2", "v3", "v4", "w1", "w2", "w3", "w4"]
_A_CHAINS = {"v1": ["v2"], "v2": ["v3"], "v3": ["v4"], "w1": ["w2"], "w2": ["w3"], "w3": ["w4"]}

M_ACTION = {
    "a": _A_CHAINS,
    "b": {"v2": ["v1"], "v3": ["v2"], "w1": ["v3"], "w2": ["v4"], "w3": ["w2"], "w4": ["w3"]},
    "c": {"v1": ["v1"], "v3": ["v3"], "w2": ["w2"], "w4": ["w4"]},
}
N_ACTION = {
    "a": _A_CHAINS,
    "b": {"v3": ["v2"], "v4": ["v3"], "w1": ["v1"], "w4": ["v4"], "w2": ["v2", "w1"], "w3": ["v3", "w2"]},
    "c": {"v2": ["v2"], "v4": ["v4"], "w1": ["w1"], "w3": ["w3"]},
}

# V1 in the basis (b, c, a) of its construction
V1_ACTION = {
    "a": [[0, 0, 0], [1, 0, 0], [0, 1, 0]],
    "b": [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
    "c": [[1, 0, 0], [0, 0, 0], [0, 0, 1]],
}


def _vext(F: Field, theta: int, lam: int, mu_: int) -> dict:
    a = [[0] * 4 for _ in range(4)]
    b = [[0] * 4 for _ in range(4)]
    c = [[0] * 4 for _ in range(4)]
    a[1][0], a[2][1], a[3][2] = theta, 1, 1
    b[1][2], b[2][0], b[2][3], b[3][0] = 1, lam, 1, mu_
    c[1][1], c[3][0], c[3][3] = 1, lam, 1
    return {k: Matrix.from_lists(F, v) for k, v in (("a", a), ("b", b), ("c", c))}


def make_module(spec: StringBandSpec | str, field: Field | None = None, **params) -> Representation:
    """The u(m)-module named by spec, checked against the u(m) relations."""
    if isinstance(spec, str):
        spec = StringBandSpec(spec, **params)
    F = field or cached_field(1)
    for v in (spec.lam, spec.theta, spec.mu):
        if not 0 <= v < F.order:
            raise ParameterError(f"parameter {v} is not an element of GF({F.order})")
    f = spec.family
    if f in STRING_TABLE or f in BAND_TABLE:
        act = _table_module(spec, F)
    elif f == "V0":
        act = {k: Matrix.zeros(F, 1) for k in "abc"}
    elif f == "V1":
        act = {k: Matrix.from_lists(F, v) for k, v in V1_ACTION.items()}
    elif f == "Vext":
        act = _vext(F, spec.theta, spec.lam, spec.mu)
    else:
        table = M_ACTION if f == "M" else N_ACTION
        act = {k: _named(_MN_BASIS, F, table[k]) for k in "abc"}
    return Representation("um", act, F, spec.label)


def family_members(R: int = 3, Nmax: int = 3, field: Field | None = None) -> list[StringBandSpec]:
    """All string and band specs with r in 1..R, t in 0..R, n in 1..Nmax, lambda in F^x."""
    F = field or cached_field(1)
    out = []
    for f in STRING_FAMILIES:
        if f.startswith("U"):
            out.extend(StringBandSpec(f, r=r) for r in range(1, R + 1))
        else:
            out.extend(StringBandSpec(f, t=t) for t in range(0, R + 1))
    for f in BAND_FAMILIES:
        for n in range(1, Nmax + 1):
            out.extend(StringBandSpec(f, n=n, lam=lam) for lam in F.nonzero())
    return out


DUALITY_TABLE = {"U1": "U4", "U2": "U3", "Vfam1": "Wfam1", "Vfam2": "Wfam2", "Aband": "Bband"}


def dual_partner(spec: StringBandSpec) -> StringBandSpec:
    f = spec.family
    inv = {v: k for k, v in DUALITY_TABLE.items()}
    g = DUALITY_TABLE.get(f) or inv.get(f)
    if g is None:
        raise ParameterError(f"no duality entry for {f}")
    return StringBandSpec(g, r=spec.r, t=spec.t, n=spec.n, lam=spec.lam)


# radical of M and N as a sum of two uniserial submodules with simple intersection
BISERIAL_WITNESSES = {
    "M": (["v1", "v2", "v3", "v4"], ["v4", "w2", "w3", "w4"], "V0"),
    "N": (["v1", "v2", "v3", "v4"], ["v2", "v3", "v4", "w4"], "V1"),
}


def _span(rep: Representation, names: list[str]) -> Subspace:
    F = rep.field
    return Subspace(F, rep.dim, [F.row_unit(_MN_BASIS.index(x)) for x in names])


def biserial_witness(name: str, seed: int = DEFAULT_SEED) -> dict:
    """Verdicts for rad X = U + V with U, V uniserial submodules and U cap V simple."""
    X = make_module(name)
    u, v, inter = BISERIAL_WITNESSES[name]
    U, V = _span(X, u), _span(X, v)
    I = U.intersect(V)
    out = {
        "U-submodule": is_submodule(X, U),
        "V-submodule": is_submodule(X, V),
        "U+V=rad": U.sum(V) == radical(X),
    }
    if out["U-submodule"] and out["V-submodule"]:
        out["U-uniserial"] = is_uniserial(sub_representation(X, U), seed)
        out["V-uniserial"] = is_uniserial(sub_representation(X, V), seed)
        IR = sub_representation(X, I)
        out[f"U-cap-V={inter}"] = identify_simple(IR, _simples_for(IR), seed) == inter
    return out


# ---------------------------------------------------------------------------
# the pullback along D(H) -> u(m)


def pullback_to_double(rep: Representation) -> Representation:
    """Restrict a u(m)-module to D(H) through the projection D(H) -> u(m)."""
    from .hopf import named_map

    pi = named_map("pi_u")
    D = pi.source
    act = {}
    for g in D.gens:
        if g.definition is None:
            act[g.name] = rep.element_matrix(pi(D.gen(g.name)))
    name = f"pi*({rep.name})" if rep.name else ""
    return Representation(D, act, rep.field, name)


# ---------------------------------------------------------------------------
# verification sweep


@dataclass
class ZooReport:
    members: int = 0
    invalid: list = dc_field(default_factory=list)
    decomposable: list = dc_field(default_factory=list)
    wrong_dim: list = dc_field(default_factory=list)
    jordan_two: list = dc_field(default_factory=list)
    isomorphic_pairs: list = dc_field(default_factory=list)
    pairs_tested: int = 0
    duality_failures: list = dc_field(default_factory=list)
    duals_tested: int = 0
    methods: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not (
            self.invalid
            or self.decomposable
            or self.wrong_dim
            or self.jordan_two
            or self.isomorphic_pairs
            or self.duality_failures
        )


def verify_classification(R: int = 3, Nmax: int = 3, field: Field | None = None, seed: int = DEFAULT_SEED) -> ZooReport:
    F = field or cached_field(4)
    rep = ZooReport()
    mods: dict = {}
    indec: set = set()
    for spec in family_members(R, Nmax, F):
        rep.members += 1
        try:
            M = make_module(spec, F)
        except Exception as exc:  # any failure here is a table error
            rep.invalid.append((spec.label, str(exc)))
            continue
        mods[spec] = M
        if M.dim != spec.dim:
            rep.wrong_dim.append((spec.label, spec.dim, M.dim))
        ind = is_indecomposable(M, seed)
        rep.methods[ind.method] = rep.methods.get(ind.method, 0) + 1
        if ind.indecomposable:
            indec.add(spec)
        else:
            rep.decomposable.append(spec.label)
        if 2 in jordan_type(M.action["a"]):
            rep.jordan_two.append(spec.label)
    by_dim: dict = {}
    for spec, M in mods.items():
        by_dim.setdefault(M.dim, []).append((spec, M))
    for group in by_dim.values():
        for (s1, M1), (s2, M2) in itertools.combinations(group, 2):
            rep.pairs_tested += 1
            if isomorphism(M1, M2, seed, indecomposable=s1 in indec).isomorphic:
                rep.isomorphic_pairs.append((s1.label, s2.label))
    for spec, M in mods.items():
        if spec.family not in DUALITY_TABLE:
            continue
        other = dual_partner(spec)
        partner = mods.get(other)
        if partner is None:
            continue
        rep.duals_tested += 1
        if not isomorphism(partner, dual_module(M), seed, indecomposable=other in indec).isomorphic:
            rep.duality_failures.append((spec.label, partner.name))
    return rep


def chevalley_twist_check(field: Field | None = None, n: int = 2, seed: int = DEFAULT_SEED) -> dict:
    """For each lambda: does the twist of A[lambda],n match A[1/lambda],n, and in which orientation."""
    F = field or cached_field(4)
    theta = chevalley_theta(F)
    out = {}
    for lam in F.nonzero():
        A = make_module(StringBandSpec("Aband", n=n, lam=lam), F)
        target = make_module(StringBandSpec("Aband", n=n, lam=F.inv(lam)), F)
        local = is_indecomposable(target, seed).indecomposable
        tw = twist_by_automorphism(A, theta)
        tw_inv = twist_by_automorphism(A, theta, inverse=inverse_automorphism(A.algebra, theta))
        out[lam] = {
            "theta": isomorphism(target, tw, seed, indecomposable=local).isomorphic,
            "theta_inverse": isomorphism(target, tw_inv, seed, indecomposable=local).isomorphic,
            "same_lambda": isomorphism(target, A, seed, indecomposable=local).isomorphic,
        }
    return out


# ---------------------------------------------------------------------------
# walks on the bound quiver


@dataclass(frozen=True)
class Walk:
    """A walk: letters (arrow, +1) or (arrow, -1); a trivial walk keeps its vertex."""

    letters: tuple = ()
    vertex: int | None = None

    def source(self, q: QuiverData) -> int:
        if not self.letters:
            return self.vertex
        a, s = self.letters[0]
        return q.arrows[a][0 if s > 0 else 1]

    def target(self, q: QuiverData) -> int:
        if not self.letters:
            return self.vertex
        a, s = self.letters[-1]
        return q.arrows[a][1 if s > 0 else 0]

    def inverse(self) -> "Walk":
        return Walk(tuple((a, -s) for a, s in reversed(self.letters)), self.vertex)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Walk") -> "Walk":
        return Walk(self.letters + other.letters, self.vertex if not other.letters else None)

    def format(self) -> str:
        if not self.letters:
            return f"e{self.vertex}"
        return " ".join(a if s > 0 else f"{a}^-1" for a, s in self.letters)

    def __repr__(self) -> str:
        return f"Walk({self.format()})"


def walk(text: str) -> Walk:
    """Parse 'alpha1 alpha2^-1 ...' (or 'e0', 'e1')."""
    toks = text.split()
    if len(toks) == 1 and toks[0] in ("e0", "e1"):
        return Walk((), int(toks[0][1]))
    out = []
    for t in toks:
        if t.endswith("^-1"):
            out.append((t[:-3], -1))
        else:
            out.append((t, 1))
    return Walk(tuple(out))


def is_composable(w: Walk, q: QuiverData) -> bool:
    for (a, s), (b, t) in zip(w.letters, w.letters[1:]):
        end = q.arrows[a][1 if s > 0 else 0]
        start = q.arrows[b][0 if t > 0 else 1]
        if end != start:
            return False
    return True


def is_reduced(w: Walk, q: QuiverData) -> bool:
    if not is_composable(w, q):
        return False
    return all(not (a == b and s == -t) for (a, s), (b, t) in zip(w.letters, w.letters[1:]))


class QuiverRelations:
    """Zero paths (decided by normal form in kQ/I) and maximal binomial subpaths."""

    def __init__(self, q: QuiverData | None = None):
        self.q = q or QuiverData()
        self.system = get_system("quiverQI")
        self.binomial_terms = set()
        for r in self.q.relations:
            terms = [tuple(t.split()) for t in r.split("+")]
            if len(terms) == 2:
                self.binomial_terms.update(terms)
        self._zero: dict = {}

    def is_zero(self, path: tuple) -> bool:
        hit = self._zero.get(path)
        if hit is None:
            hit = not self.system.normal_form(" ".join(path))
            self._zero[path] = hit
        return hit

    def is_zero_relation(self, path: tuple) -> bool:
        """Zero in kQ/I with every proper subpath nonzero."""
        if len(path) < 2 or not self.is_zero(path):
            return False
        return not (self.is_zero(path[1:]) or self.is_zero(path[:-1]))

    def forbidden(self, path: tuple) -> bool:
        return self.is_zero_relation(path) or path in self.binomial_terms


def _contained_paths(w: Walk):
    """Every path p such that p or p^-1 is a subword of w."""
    L = w.letters
    i = 0
    while i < len(L):
        j = i
        while j + 1 < len(L) and L[j + 1][1] == L[i][1]:
            j += 1
        run = [a for a, _ in L[i : j + 1]]
        if L[i][1] < 0:
            run.reverse()
        for x in range(len(run)):
            for y in range(x + 2, len(run) + 1):
                yield tuple(run[x:y])
        i = j + 1


def is_string(w: Walk, rel: QuiverRelations | None = None) -> bool:
    rel = rel or QuiverRelations()
    if not w.letters:
        return w.vertex in rel.q.vertices
    if not is_reduced(w, rel.q):
        return False
    return not any(rel.forbidden(p) for p in _contained_paths(w))


def _is_proper_power(w: Walk) -> bool:
    L = w.letters
    n = len(L)
    return any(n % k == 0 and L == L[:k] * (n // k) for k in range(1, n))


def is_band(w: Walk, rel: QuiverRelations | None = None) -> bool:
    rel = rel or QuiverRelations()
    if not w.letters or w.source(rel.q) != w.target(rel.q):
        return False
    if _is_proper_power(w):
        return False
    # a forbidden path inside some power already shows up in the cube
    return is_string(w * w * w, rel)


MAX_WALK_LEN = 12


def enumerate_strings(max_len: int, q: QuiverData | None = None) -> list[Walk]:
    """All strings of length <= max_len, trivial ones first, then by length."""
    if max_len > MAX_WALK_LEN:
        raise ResourceError(f"max_len {max_len} exceeds the guard {MAX_WALK_LEN}")
    rel = QuiverRelations(q)
    out = [Walk((), v) for v in rel.q.vertices]
    letters = [(a, s) for a in rel.q.arrows for s in (1, -1)]
    frontier = [Walk((l,)) for l in letters]
    for _ in range(max_len):
        frontier = [w for w in frontier if is_string(w, rel)]
        out.extend(frontier)
        frontier = [Walk(w.letters + (l,)) for w in frontier for l in letters]
    return out


def band_key(w: Walk) -> tuple:
    """Canonical representative up to rotation and inversion."""
    cands = []
    for v in (w, w.inverse()):
        L = v.letters
        cands.extend(L[k:] + L[:k] for k in range(len(L)))
    return min(cands)


def enumerate_bands(max_len: int = 8, q: QuiverData | None = None) -> list[Walk]:
    """Band classes of length <= max_len, one representative each."""
    rel = QuiverRelations(q)
    seen = {}
    for w in enumerate_strings(max_len, q):
        if w.letters and is_band(w, rel):
            seen.setdefault(band_key(w), w)
    return [Walk(k) for k in sorted(seen)]


# the families of strings, built from the four basic two-letter strings
S_WORDS = {
    "s1": walk("alpha1 alpha2^-1"),
    "s2": walk("alpha1^-1 alpha2"),
    "s3": walk("beta1 beta2^-1"),
    "s4": walk("beta1^-1 beta2"),
}


def _power(w: Walk, k: int) -> Walk:
    return Walk(w.letters * k)


def string_families(max_len: int) -> set:
    """Letter tuples of the listed string families (and inverses) up to max_len, plus e0, e1."""
    out = {Walk((), 0), Walk((), 1)}
    a1, a2, b1, b2 = (walk(x) for x in ("alpha1", "alpha2", "beta1", "beta2"))
    s1, s2, s3, s4 = (S_WORDS[k] for k in ("s1", "s2", "s3", "s4"))
    ws = []
    for r in range(1, max_len // 2 + 1):
        ws.extend(_power(s, r) for s in (s1, s2, s3, s4))
    for t in range(0, max_len // 2 + 1):
        ws.extend([_power(s1, t) * a1, a2 * _power(s2, t), _power(s3, t) * b1, b2 * _power(s4, t)])
    for w in ws:
        if len(w) <= max_len:
            out.add(w)
            out.add(w.inverse())
    return out


# ---------------------------------------------------------------------------
# text dump of an action graph


def dump_module(rep: Representation) -> str:
    """DOT-like text: one node per basis vector (marked by its c-eigenvalue), edges for a and b."""
    a, b, c = (rep.action[k].to_lists() for k in "abc")
    lines = [f"digraph \"{rep.name}\" {{"]
    for j in range(rep.dim):
        e = c[j][j]
        diag = all(c[i][j] == 0 for i in range(rep.dim) if i != j)
        shape = ("filled" if e == 1 else "hollow") if diag and e in (0, 1) else "mixed"
        lines.append(f"  z{j + 1} [{shape}];")
    for name, M in (("a", a), ("b", b)):
        for j in range(rep.dim):
            for i in range(rep.dim):
                if M[i][j]:
                    coef = "" if M[i][j] == 1 else f" {M[i][j]}"
                    lines.append(f"  z{j + 1} -> z{i + 1} [{name}{coef}];")
    lines.append("}")
    return "\n".join(lines)
