"""Module theory over the finite-dimensional presets.

A representation assigns a square matrix over GF(2^k) to each generator of
a presented algebra.  Everything here works with the list of generator
matrices: submodules are spun from vectors, simple modules are split off by
a seeded Meataxe, radicals and socles come from Hom spaces into and out of
the simples.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .algebras import BitEchelon, FDAlgebra, bits, build, basic_algebra_data, lie_m, phi_g, check_lie_automorphism, CHEVALLEY
from .exactmath import Echelon, Field, Matrix, cached_field, invert, nullspace, row_reduce
from .rewrite import INTEGER, Element, RewriteSystem, get_system

DEFAULT_SEED = 20240607
MEATAXE_BUDGET = 400
EXHAUSTIVE_HOM_LIMIT = 1 << 16
EXHAUSTIVE_END_LIMIT = 2**8
ISO_SAMPLES = 200


class RepresentationError(ValueError):
    """The matrices do not satisfy the relations of the algebra."""


class ResourceError(RuntimeError):
    """A randomized search ran out of budget."""


# ---------------------------------------------------------------------------
# small linear-algebra helpers on packed vectors


def _scalar_identity(F: Field, n: int, c: int) -> Matrix:
    return Matrix(F, n, n, [F.row_unit(i, c) for i in range(n)])


def _combine(F: Field, n: int, terms) -> Matrix:
    """sum of c * M over (c, M)."""
    rows = [F.zero_row()] * n
    for c, M in terms:
        if c:
            rows = [F.row_axpy(r, c, s) for r, s in zip(rows, M.rows)]
    return Matrix(F, n, n, rows)


def _projective_points(F: Field, basis: list[tuple], limit: int):
    """All nonzero combinations of basis vectors up to scalars (None if more than limit)."""
    d = len(basis)
    q = F.order
    count = (q**d - 1) // (q - 1)
    if count > limit:
        return None
    pts = []
    for lead in range(d):
        for tail in itertools.product(range(q), repeat=d - lead - 1):
            v = basis[lead]
            for c, b in zip(tail, basis[lead + 1 :]):
                if c:
                    v = F.row_axpy(v, c, b)
            pts.append(v)
    return pts


class Subspace:
    """Subspace of F^dim kept in reduced echelon form; equality is equality of bases."""

    def __init__(self, field: Field, dim: int, vectors=()):
        self.field = field
        self.dim = dim
        self.ech = Echelon(field, dim)
        for v in vectors:
            self.ech.add(v)

    def add(self, v: tuple) -> bool:
        return self.ech.add(v)

    def contains(self, v: tuple) -> bool:
        return self.ech.contains(v)

    def basis(self) -> list[tuple]:
        return self.ech.sorted_basis()

    def matrix(self) -> Matrix:
        return self.ech.matrix()

    @property
    def pivots(self) -> list[int]:
        return sorted(self.ech.pivots)

    def __len__(self) -> int:
        return len(self.ech)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.dim == other.dim and self.basis() == other.basis()

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis())

    def intersect(self, other: "Subspace") -> "Subspace":
        F = self.field
        a, b = self.basis(), other.basis()
        if not a or not b:
            return Subspace(F, self.dim)
        # solve sum x_i a_i = sum y_j b_j
        cols = a + b
        M = Matrix.from_columns(F, self.dim, cols)
        out = Subspace(F, self.dim)
        for k in nullspace(M):
            v = F.zero_row()
            for i in range(len(a)):
                c = F.row_get(k, i)
                if c:
                    v = F.row_axpy(v, c, a[i])
            out.add(v)
        return out

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.field, self.dim, self.basis() + other.basis())

    def __repr__(self) -> str:
        return f"Subspace(dim {len(self)} in {self.dim})"


# ---------------------------------------------------------------------------
# representations


class Representation:
    """Generator -> matrix assignment, checked against the algebra's relations."""

    def __init__(self, algebra, action: dict, field: Field | None = None, name: str = "", check: bool = True):
        if isinstance(algebra, str):
            algebra = get_system(algebra)
        self.algebra = algebra
        mats = list(action.values())
        self.field = field or (mats[0].field if mats else cached_field(1))
        self.dim = mats[0].nrows if mats else 0
        self.name = name
        for k, M in action.items():
            if M.nrows != self.dim or M.ncols != self.dim:
                raise ValueError(f"{k}: shape {M.shape} does not match dimension {self.dim}")
        self.action = dict(action)
        self._letter: dict = {}
        self._mono: dict = {}
        if isinstance(algebra, RewriteSystem):
            self._complete_letters()
        if check:
            bad = check_representation(self)
            if bad:
                raise RepresentationError(f"{name or 'representation'}: {bad[0]}")

    # -- letters and elements
    def _complete_letters(self) -> None:
        S = self.algebra
        for i, g in enumerate(S.gens):
            if g.definition is not None:
                continue
            if g.name not in self.action:
                raise ValueError(f"no matrix for generator {g.name}")
            self._letter[(i, 1)] = self.action[g.name]
            if g.cap == INTEGER:
                inv = self.action.get(f"{g.name}^-1")
                if inv is None:
                    inv = invert(self.action[g.name])
                    if isinstance(inv, str):
                        raise RepresentationError(f"{g.name} acts by a singular matrix")
                self._letter[(i, -1)] = inv
        for i, g in enumerate(S.gens):
            if g.definition is not None:
                self._letter[(i, 1)] = self.free_matrix(g.definition)

    def free_matrix(self, terms: dict) -> Matrix:
        """Matrix of a combination of words in the generators."""
        F, n = self.field, self.dim
        out = []
        for w, c in terms.items():
            M = _scalar_identity(F, n, c)
            for l in w:
                M = M @ self._letter[l]
            out.append((1, M))
        return _combine(F, n, out) if out else Matrix.zeros(F, n)

    def mono_matrix(self, M: tuple) -> Matrix:
        hit = self._mono.get(M)
        if hit is None:
            S = self.algebra
            hit = Matrix.identity(self.field, self.dim)
            for l in S.mono_word(M):
                hit = hit @ self._letter[l]
            self._mono[M] = hit
        return hit

    def element_matrix(self, x) -> Matrix:
        if isinstance(self.algebra, FDAlgebra):
            return _combine(self.field, self.dim, [(1, self.action[self.algebra.labels[i]]) for i in bits(x)])
        if isinstance(x, str):
            x = self.algebra.elem(x)
        return _combine(self.field, self.dim, [(c, self.mono_matrix(m)) for m, c in x.terms.items()])

    def matrix(self, name: str) -> Matrix:
        if name in self.action:
            return self.action[name]
        return self.element_matrix(name)

    @property
    def mats(self) -> list[Matrix]:
        return list(self.action.values())

    def __repr__(self) -> str:
        return f"Representation({self.name or '?'}, dim {self.dim}, GF(2^{self.field.k}))"


def check_representation(rep: Representation) -> list[str]:
    """Violated relations (empty iff rep is a module)."""
    A = rep.algebra
    F, n = rep.field, rep.dim
    bad = []
    if isinstance(A, FDAlgebra):
        labels = A.labels
        if set(rep.action) != set(labels):
            return [f"action must be given on the basis {labels}"]
        one = rep.element_matrix(A.unit)
        if not one.is_identity():
            bad.append("unit does not act by the identity")
        for i, j in itertools.product(range(A.dim), repeat=2):
            lhs = rep.action[labels[i]] @ rep.action[labels[j]]
            if lhs != rep.element_matrix(A.mul_basis(i, j)):
                bad.append(f"{labels[i]} * {labels[j]}")
        return bad
    S = A
    for rel in S.defining:
        if rep.free_matrix(rel.lhs) != rep.free_matrix(rel.rhs):
            bad.append(f"{rel.label} fails: {_relation_text(S, rel.lhs)} != {_relation_text(S, rel.rhs)}")
    for i, g in enumerate(S.gens):
        if g.bounded:
            lhs = rep.free_matrix({((i, 1),) * g.n: 1})
            rhs = rep.free_matrix(g.replacement) if g.replacement else Matrix.zeros(F, n)
            if lhs != rhs:
                bad.append(f"{g.name}^{g.n} = {_relation_text(S, g.replacement) if g.replacement else '0'} fails")
        if g.cap == INTEGER:
            if not (rep._letter[(i, 1)] @ rep._letter[(i, -1)]).is_identity():
                bad.append(f"{g.name} {g.name}^-1 = 1 fails")
    return bad


def _relation_text(S: RewriteSystem, terms: dict) -> str:
    if not terms:
        return "0"
    return " + ".join(S.format_word(w) if c == 1 else f"[{c}] {S.format_word(w)}" for w, c in terms.items())


def from_lists(algebra, action: dict, field: Field | None = None, name: str = "", check: bool = True) -> Representation:
    F = field or cached_field(1)
    return Representation(algebra, {k: Matrix.from_lists(F, v) for k, v in action.items()}, F, name, check)


def trivial_module(algebra="um", dim: int = 1, field: Field | None = None) -> Representation:
    """Generators act through the counit (1 on grouplikes, 0 elsewhere)."""
    S = get_system(algebra) if isinstance(algebra, str) else algebra
    from .hopf import hopf

    H = hopf(S.name)
    F = field or cached_field(1)
    act = {}
    for i, g in enumerate(S.gens):
        if g.definition is None:
            e = H.eps(H.letter_element((i, 1)))
            act[g.name] = _scalar_identity(F, dim, e)
    return Representation(S, act, F, "V0" if dim == 1 else f"V0^{dim}")


def direct_sum(r1: Representation, r2: Representation, name: str = "") -> Representation:
    act = {k: r1.action[k].block_diag(r2.action[k]) for k in r1.action}
    return Representation(r1.algebra, act, r1.field, name or f"{r1.name}+{r2.name}")


def change_field(rep: Representation, F: Field) -> Representation:
    """Extend scalars from GF(2) (entries are kept as bit patterns)."""
    if rep.field.k != 1 and rep.field != F:
        raise ValueError("only GF(2) modules can be extended")
    act = {k: Matrix.from_lists(F, M.to_lists()) for k, M in rep.action.items()}
    return Representation(rep.algebra, act, F, rep.name, check=False)


# ---------------------------------------------------------------------------
# submodules and quotients


def spin(mats: list[Matrix], F: Field, dim: int, vectors) -> Subspace:
    """Smallest subspace containing the vectors and stable under the matrices."""
    W = Subspace(F, dim)
    queue = []
    for v in vectors:
        if W.add(v):
            queue.append(v)
    while queue:
        v = queue.pop()
        for M in mats:
            u = M.mul_vec(v)
            if W.add(u):
                queue.append(u)
    return W


def submodule(rep: Representation, vectors) -> Subspace:
    return spin(rep.mats, rep.field, rep.dim, vectors)


def _gather(v: tuple, posmap: dict) -> tuple:
    """Coordinates of v at the positions of posmap (position -> new index), plane by plane."""
    out = []
    for p in v:
        r = 0
        while p:
            low = p & -p
            j = posmap.get(low.bit_length() - 1)
            if j is not None:
                r |= 1 << j
            p ^= low
        out.append(r)
    return tuple(out)


def _restrict(M: Matrix, W: Subspace) -> Matrix:
    F = M.field
    posmap = {p: i for i, p in enumerate(W.pivots)}
    cols = [_gather(M.mul_vec(b), posmap) for b in W.basis()]
    return Matrix.from_columns(F, len(posmap), cols)


def _quotient(M: Matrix, W: Subspace) -> Matrix:
    F = M.field
    pivset = set(W.pivots)
    free = [j for j in range(W.dim) if j not in pivset]
    posmap = {p: i for i, p in enumerate(free)}
    cols = [_gather(W.ech.reduce(M.mul_vec(F.row_unit(j))), posmap) for j in free]
    return Matrix.from_columns(F, len(free), cols)


def sub_representation(rep: Representation, W: Subspace, name: str = "") -> Representation:
    if not len(W):
        raise ValueError("zero subspace")
    act = {k: _restrict(M, W) for k, M in rep.action.items()}
    return Representation(rep.algebra, act, rep.field, name, check=False)


def quotient_representation(rep: Representation, W: Subspace, name: str = "") -> Representation:
    if len(W) == rep.dim:
        raise ValueError("quotient by the whole module")
    act = {k: _quotient(M, W) for k, M in rep.action.items()}
    return Representation(rep.algebra, act, rep.field, name, check=False)


def is_submodule(rep: Representation, W: Subspace) -> bool:
    return all(W.contains(M.mul_vec(b)) for M in rep.mats for b in W.basis())


# ---------------------------------------------------------------------------
# Meataxe


@dataclass
class _Module:
    field: Field
    dim: int
    mats: list


def _random_element(mod: _Module, rng: random.Random) -> Matrix:
    F, n = mod.field, mod.dim
    terms = []
    gens = mod.mats
    for _ in range(3):
        w = [rng.choice(gens) for _ in range(rng.randint(1, 2))]
        M = w[0]
        for N in w[1:]:
            M = M @ N
        terms.append((F.random(rng, nonzero=True), M))
    terms.append((F.random(rng), Matrix.identity(F, n)))
    return _combine(F, n, terms)


def _annihilator(F: Field, dim: int, U: Subspace) -> Subspace:
    M = U.matrix()
    return Subspace(F, dim, nullspace(M))


def find_proper_submodule(mod: _Module, rng: random.Random, budget: int = MEATAXE_BUDGET):
    """A proper nonzero submodule, or None after Norton's test certifies irreducibility."""
    F, n = mod.field, mod.dim
    if n == 1:
        return None
    for _ in range(budget):
        x = _random_element(mod, rng)
        ker = nullspace(x)
        if not ker:
            continue
        pts = _projective_points(F, ker, 64)
        trial = pts if pts is not None else ker[:2] + [
            _rand_comb(F, ker, rng) for _ in range(2)
        ]
        for v in trial:
            W = spin(mod.mats, F, n, [v])
            if len(W) < n:
                return W
        if pts is None:
            continue
        kerT = nullspace(x.transpose())
        ptsT = _projective_points(F, kerT, 64)
        tmats = [M.transpose() for M in mod.mats]
        for u in ptsT:
            U = spin(tmats, F, n, [u])
            if len(U) < n:
                return _annihilator(F, n, U)
        return None
    raise ResourceError("no splitting element found; try a larger field extension")


def _rand_comb(F: Field, basis, rng):
    v = F.zero_row()
    for b in basis:
        v = F.row_axpy(v, F.random(rng), b)
    return v if any(v) else basis[0]


def composition_factors_raw(mod: _Module, rng: random.Random) -> list[_Module]:
    """Composition factors bottom-up along one composition series."""
    W = find_proper_submodule(mod, rng)
    if W is None:
        return [mod]
    sub = _Module(mod.field, len(W), [_restrict(M, W) for M in mod.mats])
    quo = _Module(mod.field, mod.dim - len(W), [_quotient(M, W) for M in mod.mats])
    return composition_factors_raw(sub, rng) + composition_factors_raw(quo, rng)


def composition_factors(rep: Representation, seed: int = DEFAULT_SEED) -> list[Representation]:
    rng = random.Random(seed)
    names = list(rep.action)
    out = []
    for m in composition_factors_raw(_Module(rep.field, rep.dim, rep.mats), rng):
        out.append(Representation(rep.algebra, dict(zip(names, m.mats)), rep.field, check=False))
    return out


def is_simple(rep: Representation, seed: int = DEFAULT_SEED) -> bool:
    return find_proper_submodule(_Module(rep.field, rep.dim, rep.mats), random.Random(seed)) is None


# ---------------------------------------------------------------------------
# Hom spaces and isomorphism


def hom_space(r1: Representation, r2: Representation) -> list[Matrix]:
    """Basis of {T : T rho1(x) = rho2(x) T for all generators x}, T of shape dim2 x dim1."""
    F = r1.field
    n1, n2 = r1.dim, r2.dim
    nv = n1 * n2
    if nv == 0:
        return []
    rows = []
    # unknown T[i][k] sits at position i * n1 + k
    for key in r1.action:
        A = r1.action[key].to_lists()
        B = r2.action[key].to_lists()
        for i in range(n2):
            for j in range(n1):
                coeffs = [0] * nv
                for k in range(n1):
                    if A[k][j]:
                        coeffs[i * n1 + k] ^= A[k][j]
                for k in range(n2):
                    if B[i][k]:
                        coeffs[k * n1 + j] ^= B[i][k]
                if any(coeffs):
                    rows.append(F.row_from(coeffs))
    if rows:
        kern = nullspace(Matrix(F, len(rows), nv, rows))
    else:
        kern = [F.row_unit(p) for p in range(nv)]
    out = []
    for v in kern:
        vals = F.row_to(v, nv)
        out.append(Matrix.from_lists(F, [vals[i * n1 : (i + 1) * n1] for i in range(n2)], n1))
    return out


def _combo(F: Field, basis: list[Matrix], coeffs) -> Matrix:
    n = basis[0].nrows
    rows = [F.zero_row()] * n
    for c, M in zip(coeffs, basis):
        if c:
            rows = [F.row_axpy(r, c, s) for r, s in zip(rows, M.rows)]
    return Matrix(F, n, basis[0].ncols, rows)


@dataclass
class IsoResult:
    isomorphic: bool
    method: str
    witness: Matrix | None = None

    def __bool__(self) -> bool:
        return self.isomorphic


def isomorphism(
    r1: Representation, r2: Representation, seed: int = DEFAULT_SEED, indecomposable: bool = False
) -> IsoResult:
    """Search the Hom space for an invertible intertwiner.

    With indecomposable=True the caller vouches that End(r1) is local.  Then
    the non-invertible endomorphisms form an ideal, so r1 and r2 are
    isomorphic iff psi phi is invertible for some pair of basis maps
    phi: r1 -> r2 and psi: r2 -> r1.  This test is exact.
    """
    if r1.dim != r2.dim:
        return IsoResult(False, "dimension")
    if r1.dim == 0:
        return IsoResult(True, "zero")
    F = r1.field
    H = hom_space(r1, r2)
    if not H:
        return IsoResult(False, "hom=0")
    # a quick invariant: ranks of the generator actions must agree
    for k in r1.action:
        if r1.action[k].rank() != r2.action[k].rank():
            return IsoResult(False, f"rank of {k}")
    if indecomposable:
        back = hom_space(r2, r1)
        for phi in H:
            if phi.rank() < r1.dim:
                continue
            for psi in back:
                if (psi @ phi).rank() == r1.dim:
                    return IsoResult(True, "local-end", phi)
        return IsoResult(False, "local-end")
    q = F.order
    if q ** len(H) <= EXHAUSTIVE_HOM_LIMIT:
        for coeffs in itertools.product(range(q), repeat=len(H)):
            if not any(coeffs):
                continue
            T = _combo(F, H, coeffs)
            if T.rank() == r1.dim:
                return IsoResult(True, "exhaustive", T)
        return IsoResult(False, "exhaustive")
    rng = random.Random(seed)
    for T in H:
        if T.rank() == r1.dim:
            return IsoResult(True, "sampled", T)
    for _ in range(ISO_SAMPLES):
        T = _combo(F, H, [F.random(rng) for _ in H])
        if T.rank() == r1.dim:
            return IsoResult(True, "sampled", T)
    return IsoResult(False, "probably-non-isomorphic")


def is_isomorphic(r1: Representation, r2: Representation, seed: int = DEFAULT_SEED) -> bool:
    return isomorphism(r1, r2, seed).isomorphic


# ---------------------------------------------------------------------------
# indecomposability


@dataclass
class IndecResult:
    indecomposable: bool
    method: str
    end_dim: int
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.indecomposable


def _coordinate_solver(F: Field, basis: list[Matrix]):
    """Function sending a matrix in span(basis) to its coordinate list."""
    e = len(basis)
    n = basis[0].nrows
    flat = [F.row_from([x for r in M.to_lists() for x in r]) for M in basis]
    R = Matrix(F, e, n * n, flat)
    _, piv, _, _ = row_reduce(R)
    sub = Matrix.from_lists(F, [[F.row_get(v, p) for p in piv] for v in flat], e)
    inv = invert(sub)

    def coords(M: Matrix) -> list[int]:
        vals = [x for r in M.to_lists() for x in r]
        row = F.row_from([vals[p] for p in piv])
        return F.row_to(inv.vec_mul(row), e)

    return coords


def _end_algebra_is_local(F: Field, End: list[Matrix], seed: int) -> tuple[bool, str]:
    """Exact test: End is local iff its regular module has one simple type S and End acts commutatively on S."""
    e = len(End)
    coords = _coordinate_solver(F, End)
    left = []
    for a in End:
        cols = [F.row_from(coords(a @ b)) for b in End]
        left.append(Matrix.from_columns(F, e, cols))
    factors = composition_factors_raw(_Module(F, e, left), random.Random(seed))
    first = factors[0]
    for f in factors[1:]:
        if not _iso_modules(first, f, seed):
            return False, "two simple types"
    for X, Y in itertools.combinations(first.mats, 2):
        if X @ Y != Y @ X:
            return False, "matrix algebra quotient"
    return True, "structural"


def _iso_modules(m1: _Module, m2: _Module, seed: int) -> bool:
    if m1.dim != m2.dim:
        return False
    r1 = Representation.__new__(Representation)
    r2 = Representation.__new__(Representation)
    for r, m in ((r1, m1), (r2, m2)):
        r.field, r.dim, r.action, r.algebra, r.name = m.field, m.dim, {i: M for i, M in enumerate(m.mats)}, None, ""
    return isomorphism(r1, r2, seed).isomorphic


def is_indecomposable(rep: Representation, seed: int = DEFAULT_SEED) -> IndecResult:
    """End(rep) is local."""
    if rep.dim == 0:
        return IndecResult(False, "zero module", 0)
    End = hom_space(rep, rep)
    F = rep.field
    q = F.order
    e = len(End)
    if q**e <= EXHAUSTIVE_END_LIMIT:
        singular = []
        for coeffs in itertools.product(range(q), repeat=e):
            T = _combo(F, End, coeffs)
            if T.rank() < rep.dim:
                singular.append(coeffs)
        sing = set(singular)
        for s, t in itertools.combinations(singular, 2):
            u = tuple(a ^ b for a, b in zip(s, t))
            if u not in sing:
                return IndecResult(False, "exhaustive", e, "sum of two singular endomorphisms is invertible")
        return IndecResult(True, "exhaustive", e)
    ok, method = _end_algebra_is_local(F, End, seed)
    return IndecResult(ok, method, e, None if ok else method)


# ---------------------------------------------------------------------------
# simples, radical, socle, series


def regular_representation(A: FDAlgebra | str, field: Field | None = None) -> Representation:
    if isinstance(A, str):
        A = build(A)
    F = cached_field(1)
    if isinstance(A.system, RewriteSystem):
        act = {g.name: A.left_matrix(A.from_element(A.system.gen(g.name))) for g in A.system.gens if g.definition is None}
        rep = Representation(A.system, act, F, f"{A.name} regular", check=False)
    else:
        act = {l: A.left_matrix(1 << i) for i, l in enumerate(A.labels)}
        rep = Representation(A, act, F, f"{A.name} regular", check=False)
    return change_field(rep, field) if field is not None and field.k != 1 else rep


@dataclass
class SimpleClassification:
    algebra: str
    simples: list
    factor_counts: list
    seed: int


_SIMPLES: dict = {}


def classify_simples(A: FDAlgebra | str, seed: int = DEFAULT_SEED) -> list[Representation]:
    """Pairwise non-isomorphic simples, from the composition factors of the regular module."""
    return simple_classification(A, seed).simples


def simple_classification(A: FDAlgebra | str, seed: int = DEFAULT_SEED) -> SimpleClassification:
    if isinstance(A, str):
        A = build(A)
    key = (A.name, seed)
    if key in _SIMPLES:
        return _SIMPLES[key]
    reg = regular_representation(A)
    factors = composition_factors(reg, seed)
    simples: list[Representation] = []
    counts: list[int] = []
    for f in factors:
        for i, s in enumerate(simples):
            if s.dim == f.dim and is_isomorphic(s, f, seed):
                counts[i] += 1
                break
        else:
            simples.append(f)
            counts.append(1)
    order = sorted(range(len(simples)), key=lambda i: (simples[i].dim, i))
    simples = [simples[i] for i in order]
    counts = [counts[i] for i in order]
    for i, s in enumerate(simples):
        s.name = f"V{i}"
        bad = check_representation(s)
        if bad:
            raise RepresentationError(f"simple factor fails {bad[0]}")
    res = SimpleClassification(A.name, simples, counts, seed)
    _SIMPLES[key] = res
    return res


def identify_simple(rep: Representation, simples: list[Representation], seed: int = DEFAULT_SEED) -> str:
    for s in simples:
        if s.dim == rep.dim and is_isomorphic(change_field(s, rep.field) if s.field != rep.field else s, rep, seed):
            return s.name
    return "?"


def _simples_for(rep: Representation) -> list[Representation]:
    A = rep.algebra
    name = A.name
    simples = classify_simples(name)
    if rep.field.k != 1:
        simples = [change_field(s, rep.field) for s in simples]
        for s, t in zip(simples, classify_simples(name)):
            s.name = t.name
    return simples


def radical(rep: Representation) -> Subspace:
    """Intersection of the kernels of all maps to simple modules."""
    F = rep.field
    W = Subspace(F, rep.dim, [F.row_unit(i) for i in range(rep.dim)])
    for S in _simples_for(rep):
        for T in hom_space(rep, S):
            W = W.intersect(Subspace(F, rep.dim, nullspace(T)))
    return W


def socle(rep: Representation) -> Subspace:
    """Sum of the images of all maps from simple modules."""
    F = rep.field
    W = Subspace(F, rep.dim)
    for S in _simples_for(rep):
        for T in hom_space(S, rep):
            for c in T.columns():
                W.add(c)
    return W


@dataclass
class Series:
    radical: list  # dims of rad^i V, i = 0, 1, ...
    socle: list  # dims of soc^i V, i = 0, 1, ...
    factors: list  # simple names, bottom-up along the socle series
    radical_layers: list  # simple names in each radical layer, top first
    socle_layers: list  # simple names in each socle layer, bottom first


def _layer_names(rep: Representation, simples, seed) -> list[str]:
    if rep.dim == 0:
        return []
    names = [identify_simple(f, simples, seed) for f in composition_factors(rep, seed)]
    return sorted(names)


def radical_series(rep: Representation) -> list[Representation]:
    """rep, rad rep, rad^2 rep, ... (as representations), ending before 0."""
    out = [rep]
    cur = rep
    while True:
        R = radical(cur)
        if not len(R):
            return out
        cur = sub_representation(cur, R)
        out.append(cur)


def module_series(rep: Representation, seed: int = DEFAULT_SEED) -> Series:
    simples = _simples_for(rep)
    # radical series
    rad_dims = [rep.dim]
    rad_layers = []
    cur = rep
    while cur.dim:
        R = radical(cur)
        top = quotient_representation(cur, R) if len(R) < cur.dim else None
        rad_layers.append(_layer_names(top, simples, seed) if top else [])
        if not len(R):
            break
        if len(R) == cur.dim:
            raise RepresentationError("radical did not shrink")
        cur = sub_representation(cur, R)
        rad_dims.append(cur.dim)
    rad_dims.append(0)
    # socle series
    soc_dims = [0]
    soc_layers = []
    cur = rep
    total = 0
    while cur.dim:
        So = socle(cur)
        if not len(So):
            raise RepresentationError("socle is zero")
        soc_layers.append(_layer_names(sub_representation(cur, So), simples, seed))
        total += len(So)
        soc_dims.append(total)
        if len(So) == cur.dim:
            break
        cur = quotient_representation(cur, So)
    factors = [n for layer in soc_layers for n in layer]
    return Series(rad_dims, soc_dims, factors, rad_layers, soc_layers)


def socle_subspace_chain(rep: Representation) -> list[Subspace]:
    """soc^1 V subset soc^2 V subset ... as subspaces of V."""
    F = rep.field
    chain = []
    cur_basis: list[tuple] = []
    while True:
        W = Subspace(F, rep.dim, cur_basis)
        if len(W) == rep.dim:
            return chain
        if not len(W):
            So = socle(rep)
        else:
            Q = quotient_representation(rep, W)
            S = socle(Q)
            pivset = set(W.pivots)
            free = [j for j in range(rep.dim) if j not in pivset]
            lifted = []
            for v in S.basis():
                vals = F.row_to(v, len(free))
                full = [0] * rep.dim
                for j, c in zip(free, vals):
                    full[j] = c
                lifted.append(F.row_from(full))
            So = Subspace(F, rep.dim, W.basis() + lifted)
        chain.append(So)
        cur_basis = So.basis()


def is_uniserial(rep: Representation, seed: int = DEFAULT_SEED) -> bool:
    """Every radical layer is simple."""
    s = module_series(rep, seed)
    return all(len(layer) == 1 for layer in s.radical_layers)


def radical_of_algebra(A: FDAlgebra | str, seed: int = DEFAULT_SEED) -> list[int]:
    """Jac(A) as the common kernel of the simple representations (masks over the basis of A)."""
    from .hopf import kernel_combinations

    if isinstance(A, str):
        A = build(A)
    simples = classify_simples(A, seed)
    vecs = []
    for i in range(A.dim):
        v = 0
        shift = 0
        for S in simples:
            if isinstance(A.system, RewriteSystem):
                M = S.mono_matrix(A.monomials[i])
            else:
                M = S.action[A.labels[i]]
            for r in M.rows:
                v |= r[0] << shift
                shift += S.dim
        vecs.append(v)
    J = kernel_combinations(vecs)
    ech = BitEchelon()
    for x in J:
        ech.add(x)
    basis = ech.basis()
    return basis


def ideal_power(A: FDAlgebra, J: list[int], n: int) -> list[int]:
    cur = list(J)
    for _ in range(n - 1):
        ech = BitEchelon()
        for x in cur:
            for y in J:
                ech.add(A.mul(x, y))
        cur = ech.basis()
    return cur


def nilpotency_index(A: FDAlgebra, J: list[int]) -> int | None:
    for n in range(1, A.dim + 2):
        if not ideal_power(A, J, n):
            return n
    return None


# ---------------------------------------------------------------------------
# projectives, Ext


def projective_from_idempotent(A: FDAlgebra | str, e) -> Representation:
    """The left module A e, with generators acting by left multiplication."""
    if isinstance(A, str):
        A = build(A)
    if isinstance(e, str):
        e = A.elem(e)
    if isinstance(e, Element):
        e = A.from_element(e)
    if A.mul(e, e) != e:
        raise ValueError("not an idempotent")
    red = BitEchelon()
    for i in range(A.dim):
        red.add(A.mul(1 << i, e))
    basis = red.basis()
    red = BitEchelon()
    for v in basis:
        red.add(v)
    F = cached_field(1)
    mats = {}
    for g in A.system.gens:
        if g.definition is not None:
            continue
        x = A.from_element(A.system.gen(g.name))
        cols = [(red.coordinates(A.mul(x, v)),) for v in basis]
        mats[g.name] = Matrix.from_columns(F, len(basis), cols)
    return Representation(A.system, mats, F, "A e")


def basis_of_projective(A: FDAlgebra, e: int) -> list[int]:
    red = BitEchelon()
    for i in range(A.dim):
        red.add(A.mul(1 << i, e))
    return red.basis()


def projective_covers(seed: int = DEFAULT_SEED) -> dict:
    """Simple name -> P(S) cut out by the idempotents of the basic algebra data."""
    data = basic_algebra_data()
    simples = classify_simples("um", seed)
    out = {}
    for e in (data.e0, data.e1):
        P = projective_from_idempotent(data.um, e)
        R = radical(P)
        top = quotient_representation(P, R)
        out[identify_simple(top, simples, seed)] = P
    return out


def ext1(A: str, S: Representation, T: Representation, seed: int = DEFAULT_SEED) -> int:
    """dim Hom(rad P(S) / rad^2 P(S), T)."""
    if A != "um":
        raise ValueError("Ext is wired through the idempotents of u(m)")
    simples = classify_simples(A, seed)
    P = projective_covers(seed)[identify_simple(S, simples, seed)]
    R = sub_representation(P, radical(P))
    R2 = radical(R)
    layer = quotient_representation(R, R2) if len(R2) < R.dim else R
    return len(hom_space(layer, T))


# ---------------------------------------------------------------------------
# duals and twists


def _antipode_inverse(H, x: Element) -> Element:
    y = x
    seen = [x]
    for _ in range(16):
        y = H.antipode(y)
        if y == x:
            return seen[-1]
        seen.append(y)
    raise ValueError("antipode of infinite order on this element")


def dual_module(rep: Representation, use_inverse_antipode: bool = False) -> Representation:
    """V* with (x.f)(v) = f(S(x) v), or S^-1 in place of S."""
    from .hopf import hopf

    S = rep.algebra
    H = hopf(S.name)
    act = {}
    for i, g in enumerate(S.gens):
        if g.definition is not None:
            continue
        x = S.gen(g.name)
        y = _antipode_inverse(H, x) if use_inverse_antipode else H.antipode(x)
        act[g.name] = rep.element_matrix(y).transpose()
    return Representation(S, act, rep.field, f"{rep.name}*" if rep.name else "")


def chevalley_theta(field: Field | None = None) -> dict[str, str]:
    """The automorphism of u(m) swapping a and b, validated on the restricted Lie algebra."""
    L = lie_m(field)
    phi = phi_g(L, *CHEVALLEY)
    ok, w = check_lie_automorphism(phi, L)
    if not ok:
        raise ValueError(f"not an automorphism: {w}")
    return {"a": "b", "b": "a", "c": "c"}


def twist_by_automorphism(rep: Representation, theta: dict[str, str], inverse: dict[str, str] | None = None) -> Representation:
    """u * v = theta(u) v (or theta^-1 when inverse images are given)."""
    images = inverse if inverse is not None else theta
    act = {k: rep.element_matrix(v) for k, v in images.items()}
    return Representation(rep.algebra, act, rep.field, f"{rep.name}^theta" if rep.name else "")


def inverse_automorphism(S: RewriteSystem, theta: dict[str, str], order_bound: int = 8) -> dict[str, str]:
    """theta^-1 on generators, via theta^k = id."""
    cur = {k: S.elem(k) for k in theta}
    for _ in range(order_bound):
        nxt = {}
        for k, v in cur.items():
            out = S.zero()
            for m, c in v.terms.items():
                y = S.scalar(c)
                for l in S.mono_word(m):
                    y = y * S.elem(theta[S.gens[l[0]].name])
                out = out + y
            nxt[k] = out
        if all(nxt[k] == S.elem(k) for k in theta):
            return {k: S.format(cur[k]) for k in theta}
        cur = nxt
    raise ValueError("automorphism order not found")


# ---------------------------------------------------------------------------
# Jordan type


def jordan_type(N: Matrix) -> list[int]:
    """Partition of the Jordan blocks of a nilpotent matrix (decreasing)."""
    n = N.nrows
    ranks = [n]
    P = Matrix.identity(N.field, n)
    for _ in range(n + 1):
        P = P @ N
        r = P.rank()
        ranks.append(r)
        if r == 0:
            break
    if ranks[-1] != 0:
        raise ValueError("matrix is not nilpotent")
    # number of blocks of size >= k is ranks[k-1] - ranks[k]
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts = []
    for k in range(len(at_least), 0, -1):
        exact = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        parts.extend([k] * exact)
    return parts


# ---------------------------------------------------------------------------
# brute force over small representations


def small_um_representations(dim: int = 2) -> tuple[int, int]:
    """(valid representations, valid ones with nonzero action) among all triples over GF(2)."""
    F = cached_field(1)
    S = get_system("um")
    n = dim
    mats = [Matrix(F, n, n, [(r0,) for r0 in rows]) for rows in itertools.product(range(1 << n), repeat=n)]
    valid = nonzero = 0
    for a, b, c in itertools.product(mats, repeat=3):
        try:
            Representation(S, {"a": a, "b": b, "c": c}, F, check=True)
        except RepresentationError:
            continue
        valid += 1
        if not (a.is_zero() and b.is_zero() and c.is_zero()):
            nonzero += 1
    return valid, nonzero
