"""Concrete algebras: finite ones with structure constants, infinite ones by straightening.

Finite algebras here are all defined over GF(2), so an element is stored as
a Python int whose bit ``i`` is the coefficient of basis vector ``i``.
Representations over larger fields GF(2^k) lift these 0/1 coefficients.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .exactmath import Field, Matrix, cached_field
from .rewrite import (
    CornerSystem,
    Element,
    RewriteSystem,
    WordRewriteSystem,
    complete,
)

MATERIALIZE_LIMIT = 64


class AlgebraError(ValueError):
    pass


def bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class BitEchelon:
    """Reduced echelon basis of a GF(2) subspace of bitmasks, with coordinates."""

    def __init__(self):
        self.rows: dict[int, int] = {}  # pivot bit -> reduced vector
        self.combo: dict[int, int] = {}  # pivot bit -> which inserted vectors it combines
        self.count = 0

    def reduce(self, v: int) -> tuple[int, int]:
        c = 0
        for p in sorted(self.rows, reverse=True):
            if v >> p & 1:
                v ^= self.rows[p]
                c ^= self.combo[p]
        return v, c

    def add(self, v: int) -> bool:
        r, c = self.reduce(v)
        if not r:
            return False
        c ^= 1 << self.count
        self.count += 1
        p = r.bit_length() - 1
        self.rows[p] = r
        self.combo[p] = c
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v)[0] == 0

    def coordinates(self, v: int) -> int | None:
        """Bitmask of inserted vectors summing to v (None if v is outside the span)."""
        r, c = self.reduce(v)
        return None if r else c

    def __len__(self) -> int:
        return len(self.rows)

    def basis(self) -> list[int]:
        return [self.rows[p] for p in sorted(self.rows)]


class FDAlgebra:
    """Finite-dimensional algebra over GF(2) with a fixed basis."""

    def __init__(self, name: str, labels: list[str], mult, unit: int, gens: dict[str, int], system=None):
        self.name = name
        self.labels = list(labels)
        self.dim = len(labels)
        self.index = {l: i for i, l in enumerate(self.labels)}
        self._mult = mult  # (i, j) -> mask
        self.unit = unit
        self.gens = dict(gens)  # presentation generator name -> element
        self.system = system
        self.field = cached_field(1)
        self._memo: dict = {}
        self.table = None
        if self.dim <= MATERIALIZE_LIMIT:
            self.table = [[mult(i, j) for j in range(self.dim)] for i in range(self.dim)]

    # -- multiplication
    def mul_basis(self, i: int, j: int) -> int:
        if self.table is not None:
            return self.table[i][j]
        key = (i, j)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._mult(i, j)
            self._memo[key] = hit
        return hit

    def mul(self, x: int, y: int) -> int:
        out = 0
        ys = list(bits(y))
        for i in bits(x):
            for j in ys:
                out ^= self.mul_basis(i, j)
        return out

    def mul_many(self, *xs: int) -> int:
        out = self.unit
        for x in xs:
            out = self.mul(out, x)
        return out

    def power(self, x: int, e: int) -> int:
        out = self.unit
        for _ in range(e):
            out = self.mul(out, x)
        return out

    def basis_element(self, i: int) -> int:
        return 1 << i

    def elem(self, text: str) -> int:
        """Parse an expression in the presentation generators."""
        if isinstance(self.system, RewriteSystem):
            return self.from_element(self.system.elem(text))
        if isinstance(self.system, WordRewriteSystem):
            return self._from_words(self.system.normal_form(text))
        if isinstance(self.system, CornerSystem):
            if text.strip() in self.index:
                return 1 << self.index[text.strip()]
            return self.from_ambient(self.system.ambient.elem(text))
        raise AlgebraError("no presentation attached")

    def from_element(self, x: Element) -> int:
        out = 0
        for m, c in x.terms.items():
            if c & 1:
                out ^= 1 << self._mono_index[m]
        return out

    def to_element(self, mask: int) -> Element:
        return Element(self.system, {self.monomials[i]: 1 for i in bits(mask)})

    def _from_words(self, terms: dict) -> int:
        out = 0
        for w, c in terms.items():
            if c & 1:
                out ^= 1 << self._word_index[w]
        return out

    def from_ambient(self, x: Element) -> int:
        coords = self._corner_echelon.coordinates(self._corner_amb.from_element(x))
        if coords is None:
            raise AlgebraError(f"{x} is not in {self.name}")
        return coords

    def format(self, mask: int) -> str:
        if not mask:
            return "0"
        return " + ".join(self.labels[i] for i in bits(mask))

    # -- matrices of multiplication (acting on column coordinate vectors)
    def left_matrix(self, x: int) -> Matrix:
        F = self.field
        cols = [(self.mul(x, 1 << j),) for j in range(self.dim)]
        return Matrix.from_columns(F, self.dim, cols)

    def right_matrix(self, x: int) -> Matrix:
        F = self.field
        cols = [(self.mul(1 << j, x),) for j in range(self.dim)]
        return Matrix.from_columns(F, self.dim, cols)

    # -- checks
    def check_unit(self) -> tuple[bool, str | None]:
        for i in range(self.dim):
            b = 1 << i
            if self.mul(self.unit, b) != b or self.mul(b, self.unit) != b:
                return False, self.labels[i]
        return True, None

    def check_associativity(self, samples: int = 10_000, seed: int = 0, exhaustive: bool | None = None):
        """(ok, checked, witness).  Exhaustive over basis triples when dim <= 64."""
        if exhaustive is None:
            exhaustive = self.dim <= MATERIALIZE_LIMIT
        n = self.dim
        if exhaustive:
            triples = ((i, j, k) for i in range(n) for j in range(n) for k in range(n))
        else:
            rng = random.Random(seed)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples))
        count = 0
        for i, j, k in triples:
            count += 1
            lhs = self.mul(self.mul_basis(i, j), 1 << k)
            rhs = self.mul(1 << i, self.mul_basis(j, k))
            if lhs != rhs:
                return False, count, (self.labels[i], self.labels[j], self.labels[k])
        return True, count, None

    def is_nilpotent(self, x: int) -> bool:
        y = x
        for _ in range(self.dim + 1):
            if not y:
                return True
            y = self.mul(y, x)
        return not y

    def __repr__(self) -> str:
        return f"FDAlgebra({self.name}, dim={self.dim})"


class StraighteningAlgebra:
    """Infinite-dimensional algebra: elements are normal forms of a rewrite system."""

    def __init__(self, system: RewriteSystem):
        self.system = system
        self.name = system.name
        self.field = system.field
        self.gens = {g.name: system.gen(g.name) for g in system.gens}
        self.unit = system.one()

    def elem(self, text: str) -> Element:
        return self.system.elem(text)

    def mul(self, x: Element, y: Element) -> Element:
        return x * y

    def basis_up_to(self, degree: int):
        return self.system.enumerate_basis(degree)

    def __repr__(self) -> str:
        return f"StraighteningAlgebra({self.name})"


# ---------------------------------------------------------------------------
# construction


def _from_pbw(system: RewriteSystem) -> FDAlgebra:
    monos = system.enumerate_basis()
    index = {m: i for i, m in enumerate(monos)}

    def mult(i, j):
        out = 0
        for m, c in system.mul_monomials(monos[i], monos[j]).items():
            if c & 1:
                out ^= 1 << index[m]
        return out

    labels = [system.format_mono(m) for m in monos]
    A = FDAlgebra.__new__(FDAlgebra)
    A.monomials = monos
    A._mono_index = index
    FDAlgebra.__init__(A, system.name, labels, mult, 1 << index[system.unit_mono], {}, system)
    for g in system.gens:
        A.gens[g.name] = A.from_element(system.gen(g.name))
    return A


def _from_words(system: WordRewriteSystem) -> FDAlgebra:
    words = system.enumerate_basis(16)
    if len(words) >= 2 ** 12:
        raise AlgebraError(f"{system.name} does not look finite-dimensional")
    index = {w: i for i, w in enumerate(words)}

    def mult(i, j):
        out = 0
        for w, c in system.nf_word(words[i] + words[j]).items():
            if c & 1:
                out ^= 1 << index[w]
        return out

    A = FDAlgebra.__new__(FDAlgebra)
    A._word_index = index
    A.words = words
    unit = 0
    for w in system.unit_terms:
        unit ^= 1 << index[w]
    FDAlgebra.__init__(A, system.name, [system.format_word(w) for w in words], mult, unit, {}, system)
    for i, l in enumerate(system.letters):
        A.gens[l] = 1 << index[(i,)]
    return A


def _from_corner(system: CornerSystem) -> FDAlgebra:
    amb = build(system.ambient.name)
    ech = BitEchelon()
    for x in system.basis:
        if not ech.add(amb.from_element(x)):
            raise AlgebraError(f"{system.name}: listed elements are dependent")
    masks = [amb.from_element(x) for x in system.basis]

    def mult(i, j):
        c = ech.coordinates(amb.mul(masks[i], masks[j]))
        if c is None:
            raise AlgebraError(f"{system.name}: product leaves the corner algebra")
        return c

    A = FDAlgebra.__new__(FDAlgebra)
    A._corner_echelon = ech
    A._corner_amb = amb
    A.ambient_masks = masks
    unit = ech.coordinates(amb.from_element(system.unit))
    FDAlgebra.__init__(A, system.name, system.basis_names, mult, unit, {}, system)
    for i, nm in enumerate(system.basis_names):
        A.gens[nm] = 1 << i
    return A


_BUILD_CACHE: dict = {}


def build(name: str, exponent_bound: int = 6):
    """Completed, confluence-certified algebra for a preset name."""
    key = (name, exponent_bound)
    if key in _BUILD_CACHE:
        return _BUILD_CACHE[key]
    system, report = complete(name, exponent_bound)
    if not report.confluent:
        raise AlgebraError(f"{name}: completion failed: {report.unresolved or report.failed_relations}")
    if isinstance(system, WordRewriteSystem):
        A = _from_words(system)
    elif isinstance(system, CornerSystem):
        A = _from_corner(system)
    elif system.is_finite:
        A = _from_pbw(system)
    else:
        A = StraighteningAlgebra(system)
    A.report = report
    _BUILD_CACHE[key] = A
    return A


# ---------------------------------------------------------------------------
# subalgebras


def subalgebra_basis(A: FDAlgebra, generators: list[int]) -> list[int]:
    """Reduced basis of the unital subalgebra generated by ``generators``."""
    ech = BitEchelon()
    ech.add(A.unit)
    queue = [A.unit]
    while queue:
        v = queue.pop()
        for x in generators:
            w = A.mul(x, v)
            if ech.add(w):
                queue.append(w)
    return ech.basis()


def span_contains(basis: list[int], x: int) -> bool:
    ech = BitEchelon()
    for b in basis:
        ech.add(b)
    return ech.contains(x)


def check_commutative(A, elements) -> tuple[bool, tuple | None]:
    """True iff all given elements pairwise commute; else a violating pair."""
    if isinstance(A, FDAlgebra):
        els = list(elements)
        for i, x in enumerate(els):
            for y in els[i + 1 :]:
                if A.mul(x, y) != A.mul(y, x):
                    return False, (A.format(x), A.format(y))
        return True, None
    els = list(elements)
    for i, x in enumerate(els):
        for y in els[i + 1 :]:
            if x * y != y * x:
                return False, (str(x), str(y))
    return True, None


# ---------------------------------------------------------------------------
# restricted Lie algebra m


LIE_BASIS = ("b'", "b", "c", "a", "a'")


@dataclass
class RestrictedLieData:
    """Basis, bracket and 2-operation of a restricted Lie algebra over GF(2^k)."""

    basis: tuple
    bracket_table: dict  # (x, y) -> {symbol: coef}; missing pairs are 0
    two_op: dict  # x -> {symbol: coef}
    field: Field = field(default_factory=lambda: cached_field(2))

    def vec(self, d: dict) -> tuple:
        return tuple(d.get(s, 0) for s in self.basis)

    def unit(self, s: str) -> tuple:
        return self.vec({s: 1})

    def add(self, u: tuple, v: tuple) -> tuple:
        return tuple(a ^ b for a, b in zip(u, v))

    def scale(self, c: int, u: tuple) -> tuple:
        return tuple(self.field.mul(c, a) for a in u)

    def _bracket_basis(self, x: str, y: str) -> tuple:
        if (x, y) in self.bracket_table:
            return self.vec(self.bracket_table[(x, y)])
        if (y, x) in self.bracket_table:
            return self.vec(self.bracket_table[(y, x)])  # char 2: [y,x] = [x,y]
        return self.vec({})

    def bracket(self, u: tuple, v: tuple) -> tuple:
        out = self.vec({})
        F = self.field
        for i, x in enumerate(self.basis):
            if not u[i]:
                continue
            for j, y in enumerate(self.basis):
                if v[j]:
                    out = self.add(out, self.scale(F.mul(u[i], v[j]), self._bracket_basis(x, y)))
        return out

    def two(self, u: tuple) -> tuple:
        """x^[2] extended from the basis by (sum l_i e_i)^[2] = sum l_i^2 e_i^[2] + sum_{i<j} l_i l_j [e_i, e_j]."""
        F = self.field
        out = self.vec({})
        n = len(self.basis)
        for i in range(n):
            if u[i]:
                out = self.add(out, self.scale(F.mul(u[i], u[i]), self.vec(self.two_op.get(self.basis[i], {}))))
        for i in range(n):
            for j in range(i + 1, n):
                c = F.mul(u[i], u[j])
                if c:
                    out = self.add(out, self.scale(c, self._bracket_basis(self.basis[i], self.basis[j])))
        return out

    def ad(self, u: tuple):
        return lambda v: self.bracket(u, v)

    def check_axioms(self, samples: int = 100, seed: int = 0) -> list[str]:
        """Violations of: alternating, Jacobi, the three 2-operation axioms."""
        F = self.field
        rng = random.Random(seed)
        units = [self.unit(s) for s in self.basis]
        bad = []
        rand_vecs = [tuple(F.random(rng) for _ in self.basis) for _ in range(samples)]
        pairs = [(u, v) for u in units for v in units]
        pairs += [(rand_vecs[i], rand_vecs[(i + 1) % samples]) for i in range(samples)]
        for u, v in pairs:
            if any(self.bracket(u, u)):
                bad.append(f"[x,x] != 0 for x={u}")
            # ad_{x^[2]} = (ad_x)^2, tested on every basis vector y
            for y in units:
                if self.bracket(self.two(u), y) != self.bracket(u, self.bracket(u, y)):
                    bad.append(f"ad of x^[2] differs from (ad x)^2 at x={u}, y={y}")
                    break
            if self.two(self.add(u, v)) != self.add(self.add(self.two(u), self.two(v)), self.bracket(u, v)):
                bad.append(f"(x+y)^[2] mismatch at x={u}, y={v}")
            lam = F.random(rng)
            if self.two(self.scale(lam, u)) != self.scale(F.mul(lam, lam), self.two(u)):
                bad.append(f"(lx)^[2] mismatch at x={u}")
            for w in units:
                jac = self.add(
                    self.add(self.bracket(u, self.bracket(v, w)), self.bracket(v, self.bracket(w, u))),
                    self.bracket(w, self.bracket(u, v)),
                )
                if any(jac):
                    bad.append(f"Jacobi fails at {u},{v},{w}")
                    break
        return bad


def lie_m(field: Field | None = None) -> RestrictedLieData:
    br = {
        ("a", "b"): {"c": 1},
        ("a", "c"): {"a": 1},
        ("b", "c"): {"b": 1},
        ("a'", "b"): {"a": 1},
        ("a'", "b'"): {"c": 1},
        ("a", "b'"): {"b": 1},
    }
    two = {"a'": {}, "b'": {}, "c": {"c": 1}, "a": {"a'": 1}, "b": {"b'": 1}}
    return RestrictedLieData(LIE_BASIS, br, two, field or cached_field(2))


def phi_g(L: RestrictedLieData, kappa: int, lam: int, mu: int, zeta: int) -> dict:
    """The automorphism attached to g = [[kappa, lam], [mu, zeta]]."""
    F = L.field
    m = F.mul
    return {
        "a": L.vec({"a": kappa, "b": lam}),
        "b": L.vec({"a": mu, "b": zeta}),
        "c": L.vec({"c": 1}),
        "a'": L.vec({"a'": m(kappa, kappa), "b'": m(lam, lam), "c": m(kappa, lam)}),
        "b'": L.vec({"a'": m(mu, mu), "b'": m(zeta, zeta), "c": m(mu, zeta)}),
    }


def check_lie_automorphism(phi: dict, L: RestrictedLieData) -> tuple[bool, str | None]:
    """True iff the linear map given on basis symbols preserves bracket and 2-operation."""

    def apply(v: tuple) -> tuple:
        out = L.vec({})
        for i, s in enumerate(L.basis):
            if v[i]:
                out = L.add(out, L.scale(v[i], phi[s]))
        return out

    for x in L.basis:
        ux = L.unit(x)
        if apply(L.two(ux)) != L.two(apply(ux)):
            return False, f"2-operation on {x}"
        for y in L.basis:
            uy = L.unit(y)
            if apply(L.bracket(ux, uy)) != L.bracket(apply(ux), apply(uy)):
                return False, f"bracket [{x},{y}]"
    return True, None


CHEVALLEY = (0, 1, 1, 0)  # kappa, lambda, mu, zeta: a <-> b


# ---------------------------------------------------------------------------
# quiver and basic algebra


@dataclass
class QuiverData:
    vertices: tuple = (0, 1)
    trivial: dict = field(default_factory=lambda: {0: "e0", 1: "e1"})
    arrows: dict = field(
        default_factory=lambda: {"alpha1": (0, 1), "alpha2": (0, 1), "beta1": (1, 0), "beta2": (1, 0)}
    )
    relations: tuple = (
        "alpha1 beta1",
        "alpha2 beta2",
        "beta1 alpha1",
        "beta2 alpha2",
        "alpha1 beta2 + alpha2 beta1",
        "beta1 alpha2 + beta2 alpha1",
    )

    def check(self) -> bool:
        for r in self.relations:
            for term in r.split("+"):
                if len(term.split()) != 2:
                    return False
        return True


# arrows of the quiver and their images in the basic algebra
PHI_ARROWS = {"e0": "e0", "e1": "e1", "alpha1": "a3e1", "alpha2": "be1", "beta1": "ae0", "beta2": "b3e0"}
# anti-automorphism of the basic algebra
PSI_TABLE = {
    "e0": "e0",
    "e1": "e1",
    "abe1": "abe1",
    "a3b3e0": "a3b3e0",
    "ae0": "a3e1",
    "a3e1": "ae0",
    "b3e0": "be1",
    "be1": "b3e0",
}


@dataclass
class BasicAlgebraData:
    um: FDAlgebra
    basic: FDAlgebra
    e0: int  # in u(m)
    e1: int
    phi: dict = field(default_factory=lambda: dict(PHI_ARROWS))
    psi: dict = field(default_factory=lambda: dict(PSI_TABLE))

    def check_idempotents(self) -> dict:
        A = self.um
        return {
            "e0^2=e0": A.mul(self.e0, self.e0) == self.e0,
            "e1^2=e1": A.mul(self.e1, self.e1) == self.e1,
            "e0e1=0": A.mul(self.e0, self.e1) == 0,
            "e1e0=0": A.mul(self.e1, self.e0) == 0,
        }

    def psi_mask(self, x: int) -> int:
        B = self.basic
        out = 0
        for i in bits(x):
            out ^= 1 << B.index[self.psi[B.labels[i]]]
        return out

    def check_psi(self) -> tuple[int, list]:
        """Count of basis pairs checked and the pairs where psi(xy) != psi(y)psi(x)."""
        B = self.basic
        bad = []
        n = 0
        for i in range(B.dim):
            for j in range(B.dim):
                n += 1
                lhs = self.psi_mask(B.mul_basis(i, j))
                rhs = B.mul(self.psi_mask(1 << j), self.psi_mask(1 << i))
                if lhs != rhs:
                    bad.append((B.labels[i], B.labels[j]))
        return n, bad


def basic_algebra_data() -> BasicAlgebraData:
    um = build("um")
    B = build("basic")
    e0 = um.from_element(B.system.idempotents["e0"])
    e1 = um.from_element(B.system.idempotents["e1"])
    return BasicAlgebraData(um, B, e0, e1)


def quiver_map_check(Q: FDAlgebra, B: FDAlgebra, images: dict[str, str] | None = None) -> dict:
    """Check that arrows -> basic algebra extends to an algebra map kQ -> B.

    Every path of kQ (up to the length where both sides vanish) is sent to the
    product of its arrow images; the result is the surjectivity verdict, the
    kernel dimension on the path span and whether each relation of I maps to 0.
    """
    images = images or PHI_ARROWS
    q = QuiverData()
    img = {a: 1 << B.index[b] for a, b in images.items()}
    # path algebra kQ: all composable words of length <= 3 (length-3 paths vanish in B)
    letters = list(img)
    src = {"e0": 0, "e1": 1}
    tgt = {"e0": 0, "e1": 1}
    for a, (s, t) in q.arrows.items():
        src[a], tgt[a] = s, t
    paths = [(l,) for l in letters]
    frontier = [(a,) for a in q.arrows]
    for _ in range(3):
        nxt = []
        for p in frontier:
            for a in q.arrows:
                if tgt[p[-1]] == src[a]:
                    nxt.append(p + (a,))
        paths.extend(nxt)
        frontier = nxt
    image_ech = BitEchelon()
    for p in paths:
        v = B.unit
        for a in p:
            v = B.mul(v, img[a])
        image_ech.add(v)
    surjective = len(image_ech) == B.dim

    def image_of(expr: str) -> int:
        out = 0
        for term in expr.split("+"):
            v = B.unit
            for a in term.split():
                v = B.mul(v, img[a])
            out ^= v
        return out

    relations_to_zero = {r: image_of(r) == 0 for r in q.relations}
    # identities of the quiver: e_s a e_t = a and composability
    compat = all(B.mul(B.mul(img[q.trivial[s]], img[a]), img[q.trivial[t]]) == img[a] for a, (s, t) in q.arrows.items())
    return {
        "surjective": surjective,
        "image_dim": len(image_ech),
        "paths_checked": len(paths),
        "relations_to_zero": relations_to_zero,
        "arrows_compatible": compat,
        "quotient_dim": Q.dim,
    }


def radical_chain(B: FDAlgebra, jac: list[int]) -> list[list[int]]:
    """Jac, Jac^2, ... as reduced bases until zero."""
    layers = [jac]
    cur = jac
    while cur:
        ech = BitEchelon()
        for x in cur:
            for y in jac:
                ech.add(B.mul(x, y))
        cur = ech.basis()
        layers.append(cur)
        if len(layers) > B.dim + 1:
            raise AlgebraError("radical is not nilpotent")
    return layers
