"""PBW straightening: normal forms, bounded completion, confluence reports.

Two engines live here.

``RewriteSystem`` handles algebras with an ordered PBW basis.  Generators
carry exponent caps; every oriented rule has a 2-letter descent ``y x``
(``y`` after ``x`` in the PBW order) or a cap violation as its left-hand
side.  Normal forms are built by multiplying a normal monomial by one
letter at a time, which is memoized.

``WordRewriteSystem`` is plain string rewriting with deg-lex order and a
small Knuth-Bendix loop; it serves the bound quiver algebra, whose basis
consists of paths rather than ordered monomials.
"""

from __future__ import annotations

import itertools
import re
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Iterator

from .exactmath import Field, Echelon, cached_field

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

NILPOTENT = "nilpotent"
PERIODIC = "periodic"
NATURAL = "natural"
INTEGER = "integer"

PRESET_DIR = Path(__file__).with_name("presets")
PRESETS = ("um", "H", "Hstar", "DH", "basic", "quiverQI", "Htilde", "Ktilde", "Dtilde", "UG")


class RewriteError(ValueError):
    pass


class MissingRule(RewriteError):
    pass


class CompletionError(RewriteError):
    def __init__(self, msg: str, report: "ConfluenceReport | None" = None):
        super().__init__(msg)
        self.report = report


# ---------------------------------------------------------------------------
# tokenizing / parsing free-algebra expressions

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(\^-?\d+)|(.))")


def _tokens(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        pos = m.end()
        num, name, power, other = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        elif power is not None:
            out.append(("pow", power[1:]))
        elif other is not None and not other.isspace():
            out.append(("op", other))
    return out


class _FreeParser:
    """Parses sums of products into {word: coefficient} over GF(2^k).

    ``letter_of(name, exp)`` maps a generator power to a tuple of letters.
    """

    def __init__(self, text: str, letter_of, field: Field):
        self.toks = _tokens(text)
        self.i = 0
        self.letter_of = letter_of
        self.F = field

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> dict:
        e = self.expr()
        if self.i != len(self.toks):
            raise RewriteError(f"unexpected token {self.peek()[1]!r}")
        return e

    def expr(self) -> dict:
        acc = self.product()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            self.take()
            acc = _terms_add(acc, self.product())
        return acc

    def product(self) -> dict:
        acc = {(): 1}
        first = True
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                continue
            if kind in ("num", "name") or (kind == "op" and val == "("):
                acc = _terms_mul(acc, self.factor(), self.F)
                first = False
                continue
            break
        if first:
            raise RewriteError("empty product")
        return acc

    def factor(self) -> dict:
        kind, val = self.take()
        if kind == "num":
            c = int(val) & 1 if self.F.k == 1 else int(val) % 2
            base = {(): c} if c else {}
        elif kind == "name":
            exp = 1
            if self.peek()[0] == "pow":
                exp = int(self.take()[1])
                if exp >= 0:
                    base = {self.letter_of(val, 1) * exp: 1}
                else:
                    base = {self.letter_of(val, -1) * (-exp): 1}
                return base
            base = {self.letter_of(val, 1): 1}
        elif kind == "op" and val == "(":
            base = self.expr()
            if self.take() != ("op", ")"):
                raise RewriteError("missing ')'")
        else:
            raise RewriteError(f"unexpected token {val!r}")
        if self.peek()[0] == "pow":
            exp = int(self.take()[1])
            if exp < 0:
                raise RewriteError("negative power of a compound factor")
            out = {(): 1}
            for _ in range(exp):
                out = _terms_mul(out, base, self.F)
            return out
        return base


def _terms_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for w, c in b.items():
        v = out.get(w, 0) ^ c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def _terms_mul(a: dict, b: dict, F: Field) -> dict:
    out: dict = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            v = out.get(w, 0) ^ F.mul(c1, c2)
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return out


# ---------------------------------------------------------------------------
# PBW engine


@dataclass
class GeneratorSpec:
    name: str
    cap: str = NATURAL
    n: int | None = None
    replacement: dict = dc_field(default_factory=dict)  # word -> coef, for periodic caps
    weight: int = 1
    definition: dict | None = None  # word -> coef, for defined generators like x21
    derived_cap: bool = False

    def __post_init__(self):
        if self.cap in (NILPOTENT, PERIODIC) and (self.n is None or self.n < 2):
            raise RewriteError(f"cap of {self.name} must be at least 2")

    @property
    def bounded(self) -> bool:
        return self.cap in (NILPOTENT, PERIODIC)

    def describe(self) -> str:
        if self.cap == NILPOTENT:
            return f"nilpotent({self.n})"
        if self.cap == PERIODIC:
            return f"periodic({self.n})"
        return "unbounded-natural" if self.cap == NATURAL else "unbounded-integer"


Monomial = tuple  # exponent vector in PBW order
Letter = tuple  # (generator index, +1 | -1)


@dataclass
class Presentation:
    """Parsed presentation file."""

    name: str
    kind: str  # "pbw", "quiver" or "corner"
    gens: list[GeneratorSpec] = dc_field(default_factory=list)
    lines: list[tuple[str, str, int]] = dc_field(default_factory=list)  # (lhs, rhs, line number)
    extra: dict = dc_field(default_factory=dict)
    source: str = ""


@dataclass
class CheckedRelation:
    label: str
    lhs: dict
    rhs: dict


@dataclass
class ConfluenceReport:
    system: str
    confluent: bool
    pairs_checked: int = 0
    unresolved: list = dc_field(default_factory=list)
    derived_rules: list = dc_field(default_factory=list)
    derived_caps: list = dc_field(default_factory=list)
    relations_checked: int = 0
    failed_relations: list = dc_field(default_factory=list)
    schemas: list = dc_field(default_factory=list)
    exponent_bound: int = 0
    rule_count: int = 0

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "confluent": self.confluent,
            "pairs_checked": self.pairs_checked,
            "unresolved": list(self.unresolved),
            "derived_rules": list(self.derived_rules),
            "derived_caps": list(self.derived_caps),
            "relations_checked": self.relations_checked,
            "failed_relations": list(self.failed_relations),
            "schemas": list(self.schemas),
            "exponent_bound": self.exponent_bound,
            "rule_count": self.rule_count,
        }


class Element:
    """Finitely supported combination of PBW monomials."""

    __slots__ = ("sys", "terms")

    def __init__(self, system: "RewriteSystem", terms: dict | None = None):
        self.sys = system
        self.terms = terms if terms is not None else {}

    def _lift(self, other) -> "Element":
        if isinstance(other, Element):
            return other
        if isinstance(other, int):
            return self.sys.scalar(other)
        if hasattr(other, "value"):
            return self.sys.scalar(other.value)
        if isinstance(other, str):
            return self.sys.elem(other)
        raise TypeError(f"cannot combine Element with {type(other).__name__}")

    def __add__(self, other) -> "Element":
        other = self._lift(other)
        return Element(self.sys, _terms_add(self.terms, other.terms))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other) -> "Element":
        if isinstance(other, int) or hasattr(other, "value"):
            c = other if isinstance(other, int) else other.value
            return self.scale(c)
        return self.sys.mul(self, self._lift(other))

    def __rmul__(self, other) -> "Element":
        if isinstance(other, int) or hasattr(other, "value"):
            c = other if isinstance(other, int) else other.value
            return self.scale(c)
        return self.sys.mul(self._lift(other), self)

    def scale(self, c: int) -> "Element":
        F = self.sys.field
        if F.k == 1:
            c &= 1
        if c == 0:
            return Element(self.sys, {})
        if c == 1:
            return self
        return Element(self.sys, {m: F.mul(v, c) for m, v in self.terms.items()})

    def __pow__(self, e: int) -> "Element":
        if e < 0:
            raise ValueError("negative powers are only available on integer generators")
        out = self.sys.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __neg__(self) -> "Element":
        return self

    def __eq__(self, other) -> bool:
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(mono, 0)

    def support(self) -> list:
        return sorted(self.terms, key=self.sys.mono_key)

    def __repr__(self) -> str:
        return self.sys.format(self)

    __str__ = __repr__


class RewriteSystem:
    """Oriented PBW rewrite rules for one presentation."""

    def __init__(self, name: str, gens: list[GeneratorSpec], field: Field | None = None):
        self.name = name
        self.gens = gens
        self.ngens = len(gens)
        self.field = field or cached_field(1)
        self.index = {g.name: i for i, g in enumerate(gens)}
        self.rules: dict[tuple, dict] = {}
        self.rule_origin: dict[tuple, str] = {}
        self.relations: list[CheckedRelation] = []
        self.defining: list[CheckedRelation] = []  # every relation line of the presentation
        self.schemas: list = []
        self._memo: dict = {}
        self._pmemo: dict = {}
        self._deriving: set = set()
        self.memo_limit = 4_000_000
        self.report: ConfluenceReport | None = None
        self.unit_mono = (0,) * self.ngens

    # -- letters and words
    def letter(self, name: str, sign: int = 1) -> Letter:
        if name not in self.index:
            raise RewriteError(f"unknown generator {name!r} in {self.name}")
        i = self.index[name]
        if sign < 0 and self.gens[i].cap != INTEGER:
            raise RewriteError(f"generator {name} is not invertible")
        return (i, sign)

    def _letter_tuple(self, name: str, sign: int) -> tuple:
        return (self.letter(name, sign),)

    def parse_terms(self, text: str) -> dict:
        return _FreeParser(text, self._letter_tuple, self.field).parse()

    def letter_weight(self, letter: Letter) -> int:
        return self.gens[letter[0]].weight

    def word_key(self, word: tuple) -> tuple:
        return (
            sum(self.gens[i].weight for i, _ in word),
            len(word),
            tuple(2 * i + (s < 0) for i, s in word),
        )

    def mono_word(self, mono: Monomial) -> tuple:
        w = []
        for i, e in enumerate(mono):
            if e > 0:
                w.extend([(i, 1)] * e)
            elif e < 0:
                w.extend([(i, -1)] * (-e))
        return tuple(w)

    def mono_key(self, mono: Monomial) -> tuple:
        return self.word_key(self.mono_word(mono))

    def degree(self, mono: Monomial) -> int:
        return sum(self.gens[i].weight * abs(e) for i, e in enumerate(mono))

    def format_word(self, word: tuple) -> str:
        if not word:
            return "1"
        parts = []
        for (i, s), grp in itertools.groupby(word):
            n = len(list(grp)) * s
            nm = self.gens[i].name
            parts.append(nm if n == 1 else f"{nm}^{n}")
        return " ".join(parts)

    def format_mono(self, mono: Monomial) -> str:
        parts = []
        for i, e in enumerate(mono):
            if e:
                nm = self.gens[i].name
                parts.append(nm if e == 1 else f"{nm}^{e}")
        return " ".join(parts) if parts else "1"

    def format(self, x: Element) -> str:
        if not x.terms:
            return "0"
        out = []
        for m in sorted(x.terms, key=self.mono_key):
            c = x.terms[m]
            s = self.format_mono(m)
            if c != 1:
                s = f"[{c}]" + ("" if s == "1" else " " + s)
            out.append(s)
        return " + ".join(out)

    # -- rules
    def add_rule(self, lhs: tuple, rhs: dict, origin: str = "given") -> None:
        (a, sa), (b, sb) = lhs
        if not a > b:
            raise RewriteError(f"rule {self.format_word(lhs)} is not a descent")
        k = self.word_key(lhs)
        for w in rhs:
            if not self.word_key(w) < k:
                raise RewriteError(
                    f"rule {self.format_word(lhs)} -> {self.format_word(w)} does not decrease the order"
                )
        self.rules[lhs] = dict(rhs)
        self.rule_origin[lhs] = origin
        self.clear_memo()

    def clear_memo(self) -> None:
        self._memo.clear()
        self._pmemo.clear()

    def letters(self) -> list[Letter]:
        out = [(i, 1) for i in range(self.ngens)]
        out += [(i, -1) for i, g in enumerate(self.gens) if g.cap == INTEGER]
        return out

    def _rule(self, left: Letter, right: Letter) -> dict:
        key = (left, right)
        r = self.rules.get(key)
        if r is not None:
            return r
        return self._derive_rule(left, right)

    def _derive_rule(self, left: Letter, right: Letter) -> dict:
        key = (left, right)
        if key in self._deriving:
            raise MissingRule(f"{self.name}: no rule for {self.format_word(key)}")
        gl, gr = self.gens[left[0]], self.gens[right[0]]
        if gr.definition is not None and right[1] == 1:
            terms = {(left,) + w: c for w, c in gr.definition.items()}
        elif gl.definition is not None and left[1] == 1:
            terms = {w + (right,): c for w, c in gl.definition.items()}
        else:
            raise MissingRule(f"{self.name}: no rule for {self.format_word(key)}")
        self._deriving.add(key)
        try:
            try:
                res = self._mul_mw(self.unit_mono, terms)
            except MissingRule:
                res = self._nf_right(terms)
        finally:
            self._deriving.discard(key)
        rhs = {self.mono_word(m): c for m, c in res.items()}
        k = self.word_key(key)
        for w in rhs:
            if not self.word_key(w) < k:
                raise MissingRule(
                    f"{self.name}: derived rule {self.format_word(key)} -> {self.format_word(w)} is not decreasing"
                )
        self.rules[key] = rhs
        self.rule_origin[key] = "derived"
        return rhs

    # -- core multiplication
    def _mul_ml(self, M: Monomial, letter: Letter) -> dict:
        key = (M, letter)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        i, s = letter
        j = self.ngens - 1
        while j >= 0 and M[j] == 0:
            j -= 1
        if j < i:
            res = {M[:i] + (s,) + M[i + 1 :]: 1}
        elif j == i:
            e = M[i] + s
            g = self.gens[i]
            if g.bounded and e >= g.n:
                P = M[:i] + (0,) + M[i + 1 :]
                rep = g.replacement
                if e > g.n:
                    rep = {w + ((i, 1),) * (e - g.n): c for w, c in rep.items()}
                res = self._mul_mw(P, rep)
            else:
                res = {M[:i] + (e,) + M[i + 1 :]: 1}
        else:
            sj = 1 if M[j] > 0 else -1
            rhs = self._rule((j, sj), letter)
            P = M[:j] + (M[j] - sj,) + M[j + 1 :]
            res = self._mul_mw(P, rhs)
        if len(self._memo) > self.memo_limit:
            self._memo.clear()
        self._memo[key] = res
        return res

    def _mul_el(self, elem: dict, letter: Letter) -> dict:
        F = self.field
        out: dict = {}
        for M, c in elem.items():
            for N, d in self._mul_ml(M, letter).items():
                v = out.get(N, 0) ^ (c & d if F.k == 1 else F.mul(c, d))
                if v:
                    out[N] = v
                else:
                    del out[N]
        return out

    def _mul_mw(self, P: Monomial, terms: dict) -> dict:
        acc: dict = {}
        for w, c in terms.items():
            cur = {P: c}
            for l in w:
                cur = self._mul_el(cur, l)
                if not cur:
                    break
            for N, d in cur.items():
                v = acc.get(N, 0) ^ d
                if v:
                    acc[N] = v
                else:
                    del acc[N]
        return acc

    def _nf_right(self, terms: dict) -> dict:
        """Normal form grouping products from the right: a(b(c...))."""
        acc: dict = {}
        for w, c in terms.items():
            cur = {self.unit_mono: c}
            for l in reversed(w):
                lm = [0] * self.ngens
                lm[l[0]] = l[1]
                lm = tuple(lm)
                nxt: dict = {}
                for M, d in cur.items():
                    for N, e in self.mul_monomials(lm, M).items():
                        v = nxt.get(N, 0) ^ self.field.mul(d, e)
                        if v:
                            nxt[N] = v
                        else:
                            del nxt[N]
                cur = nxt
                if not cur:
                    break
            acc = _terms_add(acc, cur)
        return acc

    def mul_monomials(self, m1: Monomial, m2: Monomial) -> dict:
        key = (m1, m2)
        hit = self._pmemo.get(key)
        if hit is not None:
            return hit
        cur = {m1: 1}
        for l in self.mono_word(m2):
            cur = self._mul_el(cur, l)
            if not cur:
                break
        if len(self._pmemo) > self.memo_limit:
            self._pmemo.clear()
        self._pmemo[key] = cur
        return cur

    def mul_terms(self, a: dict, b: dict) -> dict:
        F = self.field
        out: dict = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                c = F.mul(c1, c2)
                for N, d in self.mul_monomials(m1, m2).items():
                    v = out.get(N, 0) ^ F.mul(c, d)
                    if v:
                        out[N] = v
                    else:
                        del out[N]
        return out

    # -- public element API
    def one(self) -> Element:
        return Element(self, {self.unit_mono: 1})

    def zero(self) -> Element:
        return Element(self, {})

    def scalar(self, c: int) -> Element:
        if self.field.k == 1:
            c &= 1
        return Element(self, {self.unit_mono: c} if c else {})

    def gen(self, name: str, exp: int = 1) -> Element:
        return self.normal_form(((self.letter(name, 1 if exp >= 0 else -1)),) * abs(exp))

    def monomial(self, mono: Monomial) -> Element:
        return Element(self, {tuple(mono): 1})

    def mono_from_exps(self, **exps) -> Monomial:
        m = [0] * self.ngens
        for k, v in exps.items():
            m[self.index[k]] = v
        return tuple(m)

    def mul(self, a: Element, b: Element) -> Element:
        return Element(self, self.mul_terms(a.terms, b.terms))

    def normal_form(self, x) -> Element:
        """Normal form of a word, expression string, term dict or Element."""
        if isinstance(x, Element):
            terms = {self.mono_word(m): c for m, c in x.terms.items()}
        elif isinstance(x, str):
            terms = self.parse_terms(x)
        elif isinstance(x, dict):
            terms = x
        else:
            word = tuple(x)
            for l in word:
                if not (isinstance(l, tuple) and 0 <= l[0] < self.ngens):
                    raise RewriteError(f"bad letter {l!r}")
            terms = {word: 1}
        return Element(self, self._mul_mw(self.unit_mono, terms))

    def elem(self, text: str) -> Element:
        return self.normal_form(text)

    def is_normal(self, mono: Monomial) -> bool:
        for g, e in zip(self.gens, mono):
            if e < 0 and g.cap != INTEGER:
                return False
            if g.bounded and e >= g.n:
                return False
        return True

    # -- bases
    @property
    def is_finite(self) -> bool:
        return all(g.bounded for g in self.gens)

    def enumerate_basis(self, degree_bound: int | None = None) -> list[Monomial]:
        if degree_bound is None and not self.is_finite:
            raise RewriteError(f"{self.name} has unbounded generators; pass a degree bound")
        ranges = []
        for g in self.gens:
            if g.bounded:
                hi = g.n - 1
                if degree_bound is not None and g.weight > 0:
                    hi = min(hi, degree_bound // g.weight)
                ranges.append(range(0, hi + 1))
            elif g.cap == NATURAL:
                hi = degree_bound // g.weight if g.weight > 0 else degree_bound
                ranges.append(range(0, hi + 1))
            else:
                ranges.append(range(-degree_bound, degree_bound + 1))
        out = []
        for m in itertools.product(*ranges):
            if degree_bound is not None:
                d = sum(max(g.weight, 1 if g.cap == INTEGER else 0) * abs(e) for g, e in zip(self.gens, m))
                if d > degree_bound:
                    continue
            out.append(tuple(m))
        out.sort(key=self.mono_key)
        return out

    def dimension(self) -> int:
        n = 1
        for g in self.gens:
            if not g.bounded:
                raise RewriteError(f"{self.name} is infinite-dimensional")
            n *= g.n
        return n

    # -- critical pairs
    def lhs_list(self) -> list[tuple[tuple, dict]]:
        out = []
        letters = self.letters()
        for a in letters:
            for b in letters:
                if a[0] > b[0]:
                    out.append(((a, b), self._rule(a, b)))
        for i, g in enumerate(self.gens):
            if g.bounded:
                out.append((((i, 1),) * g.n, g.replacement))
            if g.cap == INTEGER:
                out.append((((i, 1), (i, -1)), {(): 1}))
                out.append((((i, -1), (i, 1)), {(): 1}))
        return out

    def critical_pairs(self) -> Iterator[tuple[tuple, dict, dict]]:
        lhs = self.lhs_list()
        for u, ru in lhs:
            for v, rv in lhs:
                for t in range(1, min(len(u), len(v))):
                    if u[-t:] != v[:t]:
                        continue
                    word = u + v[t:]
                    red1 = {w + v[t:]: c for w, c in ru.items()}
                    red2 = {u[:-t] + w: c for w, c in rv.items()}
                    yield word, red1, red2

    def check_confluence(self) -> tuple[int, list]:
        """Check every overlap ambiguity; return (count, failures)."""
        count = 0
        failures = []
        seen = set()
        for word, r1, r2 in sorted(self.critical_pairs(), key=lambda t: self.word_key(t[0])):
            key = (word, tuple(sorted(r1.items())), tuple(sorted(r2.items())))
            if key in seen:
                continue
            seen.add(key)
            count += 1
            n1 = self._mul_mw(self.unit_mono, r1)
            n2 = self._mul_mw(self.unit_mono, r2)
            if n1 != n2:
                diff = _terms_add(n1, n2)
                failures.append((word, diff))
        return count, failures

    def leading(self, terms: dict) -> Monomial:
        return max(terms, key=self.mono_key)

    def __repr__(self) -> str:
        return f"RewriteSystem({self.name}, gens={[g.name for g in self.gens]})"


# ---------------------------------------------------------------------------
# word rewriting for path algebras


class WordRewriteSystem:
    """String rewriting over a finite alphabet with deg-lex order.

    Used for the bound quiver algebra: letters are trivial paths and arrows,
    the algebra unit is the sum of the trivial paths.
    """

    def __init__(self, name: str, letters: list[str], field: Field | None = None):
        self.name = name
        self.letters = list(letters)
        self.index = {n: i for i, n in enumerate(letters)}
        self.field = field or cached_field(1)
        self.rules: dict[tuple, dict] = {}
        self.rule_origin: dict[tuple, str] = {}
        self.unit_terms: dict = {}
        self.relations: list[CheckedRelation] = []
        self._memo: dict = {}
        self.report: ConfluenceReport | None = None
        self.vertices: dict = {}
        self.arrows: dict = {}

    def word_key(self, w: tuple) -> tuple:
        return (len(w), w)

    def _letter_tuple(self, name: str, sign: int) -> tuple:
        if sign < 0:
            raise RewriteError("no inverses in a path algebra")
        if name not in self.index:
            raise RewriteError(f"unknown letter {name!r}")
        return (self.index[name],)

    def parse_terms(self, text: str) -> dict:
        return _FreeParser(text, self._letter_tuple, self.field).parse()

    def format_word(self, w: tuple) -> str:
        return " ".join(self.letters[i] for i in w) if w else "1"

    def add_rule(self, lhs: tuple, rhs: dict, origin: str = "given") -> None:
        for w in rhs:
            if not self.word_key(w) < self.word_key(lhs):
                raise RewriteError(f"rule {self.format_word(lhs)} does not decrease")
        self.rules[lhs] = dict(rhs)
        self.rule_origin[lhs] = origin
        self._memo.clear()

    def orient(self, terms: dict, origin: str) -> tuple | None:
        """Turn a relation (sum = 0) into a rule; return its lhs."""
        terms = {w: c for w, c in terms.items() if c}
        if not terms:
            return None
        lead = max(terms, key=self.word_key)
        c = terms[lead]
        inv = self.field.inv(c)
        rhs = {w: self.field.mul(v, inv) for w, v in terms.items() if w != lead}
        self.add_rule(lead, rhs, origin)
        return lead

    def _find(self, w: tuple):
        for p in range(len(w)):
            for q in range(p + 1, len(w) + 1):
                r = self.rules.get(w[p:q])
                if r is not None:
                    return p, q, r
        return None

    def nf_word(self, w: tuple) -> dict:
        hit = self._memo.get(w)
        if hit is not None:
            return hit
        f = self._find(w)
        if f is None:
            res = {w: 1}
        else:
            p, q, r = f
            res = {}
            for v, c in r.items():
                for u, d in self.nf_word(w[:p] + v + w[q:]).items():
                    x = res.get(u, 0) ^ self.field.mul(c, d)
                    if x:
                        res[u] = x
                    else:
                        res.pop(u, None)
        self._memo[w] = res
        return res

    def nf(self, terms: dict) -> dict:
        out: dict = {}
        for w, c in terms.items():
            for u, d in self.nf_word(w).items():
                x = out.get(u, 0) ^ self.field.mul(c, d)
                if x:
                    out[u] = x
                else:
                    out.pop(u, None)
        return out

    def normal_form(self, x) -> dict:
        if isinstance(x, str):
            x = self.parse_terms(x)
        elif not isinstance(x, dict):
            x = {tuple(x): 1}
        return self.nf(x)

    def mul_terms(self, a: dict, b: dict) -> dict:
        return self.nf(_terms_mul(a, b, self.field))

    def critical_pairs(self):
        lhs = list(self.rules.items())
        for u, ru in lhs:
            for v, rv in lhs:
                for t in range(1, min(len(u), len(v))):
                    if u[-t:] == v[:t]:
                        yield u + v[t:], {w + v[t:]: c for w, c in ru.items()}, {u[:-t] + w: c for w, c in rv.items()}
                if u != v and len(v) < len(u):
                    for p in range(len(u) - len(v) + 1):
                        if u[p : p + len(v)] == v:
                            yield u, dict(ru), {u[:p] + w + u[p + len(v) :]: c for w, c in rv.items()}

    def enumerate_basis(self, max_len: int = 8) -> list[tuple]:
        out = []
        frontier = [()]
        for _ in range(max_len):
            nxt = []
            for w in frontier:
                for i in range(len(self.letters)):
                    u = w + (i,)
                    if self._find(u) is None:
                        nxt.append(u)
            out.extend(nxt)
            frontier = nxt
            if not frontier:
                break
        out.sort(key=self.word_key)
        return out

    def __repr__(self) -> str:
        return f"WordRewriteSystem({self.name}, {len(self.rules)} rules)"


def _word_complete(sys_: WordRewriteSystem, budget: int) -> ConfluenceReport:
    report = ConfluenceReport(sys_.name, confluent=False)
    added = 0
    while True:
        todo = None
        count = 0
        for word, r1, r2 in sorted(sys_.critical_pairs(), key=lambda t: sys_.word_key(t[0])):
            count += 1
            d = _terms_add(sys_.nf(r1), sys_.nf(r2))
            if d:
                todo = (word, d)
                break
        report.pairs_checked = max(report.pairs_checked, count)
        if todo is None:
            break
        if added >= budget:
            report.unresolved.append(sys_.format_word(todo[0]))
            report.rule_count = len(sys_.rules)
            raise CompletionError(f"{sys_.name}: rule budget exceeded at {sys_.format_word(todo[0])}", report)
        lead = sys_.orient(todo[1], "completion")
        added += 1
        report.derived_rules.append(f"{sys_.format_word(lead)} (from overlap {sys_.format_word(todo[0])})")
    for rel in sys_.relations:
        report.relations_checked += 1
        if _terms_add(sys_.nf(rel.lhs), sys_.nf(rel.rhs)):
            report.failed_relations.append(rel.label)
    report.confluent = not report.unresolved and not report.failed_relations
    report.rule_count = len(sys_.rules)
    sys_.report = report
    return report


# ---------------------------------------------------------------------------
# presentation files

_GEN_RE = re.compile(
    r"^gen\s+(?P<name>\S+)\s+(?P<cap>nilpotent|periodic|natural|integer)"
    r"(?:\s+(?P<n>\d+))?(?:\s*->\s*(?P<rep>[^:]+?))?(?:\s+weight\s+(?P<w>\d+))?(?:\s*:=\s*(?P<def>.+))?$"
)


def parse_presentation(text: str, name: str | None = None) -> Presentation:
    """Parse the textual presentation format.

    Lines (``#`` starts a comment)::

        name DH
        kind pbw                         # or quiver / corner
        gen x1 nilpotent 2               # generators in PBW order
        gen g periodic 2 -> 1 weight 0
        gen x21 natural := x1 x2 + x2 x1
        rel w1 x2 = x2 w1 + 1 + g        # one relation per line
    """
    pres = Presentation(name=name or "", kind="pbw", source=text)
    raw_gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "name":
            pres.name = rest
        elif head == "kind":
            pres.kind = rest
        elif head == "gen":
            m = _GEN_RE.match(line)
            if not m:
                raise RewriteError(f"line {lineno}: cannot parse generator {line!r}")
            raw_gens.append((m.groupdict(), lineno))
        elif head == "rel":
            if "=" not in rest:
                raise RewriteError(f"line {lineno}: relation needs '='")
            lhs, rhs = rest.split("=", 1)
            pres.lines.append((lhs.strip(), rhs.strip(), lineno))
        elif head in ("vertex", "arrow", "ambient", "idempotent", "basis", "unit"):
            pres.extra.setdefault(head, []).append(rest)
        else:
            raise RewriteError(f"line {lineno}: unknown directive {head!r}")
    for d, lineno in raw_gens:
        n = int(d["n"]) if d["n"] else None
        spec = GeneratorSpec(d["name"], d["cap"], n, weight=int(d["w"]) if d["w"] else 1)
        spec._rep_text = d["rep"]  # resolved once every generator is known
        spec._def_text = d["def"]
        pres.gens.append(spec)
    return pres


def load_presentation(name: str) -> Presentation:
    path = PRESET_DIR / f"{name}.pres"
    if not path.exists():
        raise RewriteError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    return parse_presentation(path.read_text(), name)


def _build_pbw(pres: Presentation, field: Field) -> RewriteSystem:
    gens = [GeneratorSpec(g.name, g.cap, g.n, weight=g.weight) for g in pres.gens]
    system = RewriteSystem(pres.name, gens, field)
    for g, src in zip(gens, pres.gens):
        if src._def_text:
            g.definition = system.parse_terms(src._def_text)
            g.weight = max(system.word_key(w)[0] for w in g.definition) if not src.weight or src.weight == 1 else src.weight
        if src._rep_text is not None:
            g.replacement = system.parse_terms(src._rep_text)
        elif g.cap == PERIODIC:
            raise RewriteError(f"periodic generator {g.name} needs a replacement")
    for lhs_text, rhs_text, lineno in pres.lines:
        lhs = system.parse_terms(lhs_text)
        rhs = system.parse_terms(rhs_text)
        label = f"{lhs_text} = {rhs_text}"
        system.defining.append(CheckedRelation(label, lhs, rhs))
        if len(lhs) == 1:
            (w, c), = lhs.items()
            if c == 1 and len(w) == 2 and w[0][0] > w[1][0]:
                k = system.word_key(w)
                if all(system.word_key(u) < k for u in rhs):
                    system.add_rule(w, rhs, f"line {lineno}")
                    continue
        system.relations.append(CheckedRelation(label, lhs, rhs))
    return system


def complete(pres: Presentation | str, exponent_bound: int = 6, rule_budget: int = 32, field: Field | None = None):
    """Bounded completion of a presentation.

    For PBW presentations: missing descent rules involving defined generators
    are derived by expanding the definition; relations whose normal form has a
    pure power as leading term become new caps; every overlap ambiguity is
    then resolved or reported.  Registered schemas are checked for all
    exponents up to ``exponent_bound``.

    Returns (system, ConfluenceReport).  Raises CompletionError when the
    rule budget is exhausted.
    """
    if isinstance(pres, str):
        pres = load_presentation(pres)
    field = field or cached_field(1)
    if pres.kind == "quiver":
        return _complete_quiver(pres, field, rule_budget)
    if pres.kind == "corner":
        return _complete_corner(pres, field, exponent_bound, rule_budget)
    system = _build_pbw(pres, field)
    report = ConfluenceReport(system.name, confluent=False, exponent_bound=exponent_bound)
    steps = 0
    while True:
        system.clear_memo()
        missing = []
        for a in system.letters():
            for b in system.letters():
                if a[0] > b[0]:
                    try:
                        system._rule(a, b)
                    except MissingRule as exc:
                        missing.append(str(exc))
        if missing:
            report.unresolved.extend(missing)
            break
        new_cap = None
        for rel in system.relations:
            d = _terms_add(system._mul_mw(system.unit_mono, rel.lhs), system._mul_mw(system.unit_mono, rel.rhs))
            if d:
                new_cap = (f"relation {rel.label}", d)
                break
        if new_cap is None:
            count, failures = system.check_confluence()
            report.pairs_checked = count
            if failures:
                word, d = failures[0]
                new_cap = (f"overlap {system.format_word(word)}", d)
        if new_cap is None:
            break
        origin, d = new_cap
        lead = system.leading(d)
        nz = [i for i, e in enumerate(lead) if e]
        g = system.gens[nz[0]] if len(nz) == 1 else None
        if g is None or g.cap != NATURAL or lead[nz[0]] < 2 or steps >= rule_budget:
            report.unresolved.append(f"{origin}: leftover {system.format(Element(system, d))}")
            if steps >= rule_budget:
                report.rule_count = len(system.rules)
                raise CompletionError(f"{system.name}: rule budget exceeded ({origin})", report)
            break
        i = nz[0]
        c = d[lead]
        inv = system.field.inv(c)
        rest = {system.mono_word(m): system.field.mul(v, inv) for m, v in d.items() if m != lead}
        g.cap = PERIODIC if rest else NILPOTENT
        g.n = lead[i]
        g.replacement = rest
        g.derived_cap = True
        steps += 1
        rest_el = Element(system, {m: v for m, v in d.items() if m != lead})
        report.derived_caps.append(f"{g.name}^{g.n} = {system.format(rest_el)} (from {origin})")
    report.derived_rules = sorted(
        f"{system.format_word(k)} -> {system.format(Element(system, system._mul_mw(system.unit_mono, v)))}"
        for k, v in system.rules.items()
        if system.rule_origin.get(k) == "derived"
    )
    for rel in system.relations:
        report.relations_checked += 1
        d = _terms_add(system._mul_mw(system.unit_mono, rel.lhs), system._mul_mw(system.unit_mono, rel.rhs))
        if d:
            report.failed_relations.append(rel.label)
    from .identities import schemas_for  # local import: identities builds on this module

    system.schemas = schemas_for(system.name)
    for sch in system.schemas:
        res = sch.verify(system, exponent_bound)
        report.schemas.append(res)
    report.confluent = not report.unresolved and not report.failed_relations
    report.rule_count = len(system.rules)
    system.report = report
    return system, report


def _complete_quiver(pres: Presentation, field: Field, budget: int):
    vertices = []
    for v in pres.extra.get("vertex", []):
        label, letter = v.split()
        vertices.append((label, letter))
    arrows = []
    for a in pres.extra.get("arrow", []):
        nm, s, t = a.split()
        arrows.append((nm, s, t))
    letters = [l for _, l in vertices] + [a for a, _, _ in arrows]
    system = WordRewriteSystem(pres.name, letters, field)
    vid = {lab: system.index[l] for lab, l in vertices}
    src = {system.index[l]: lab for lab, l in vertices}
    tgt = dict(src)
    for nm, s, t in arrows:
        src[system.index[nm]] = s
        tgt[system.index[nm]] = t
    system.vertices = dict(vertices)
    system.arrows = {nm: (s, t) for nm, s, t in arrows}
    system.unit_terms = {(vid[lab],): 1 for lab, _ in vertices}
    # path concatenation: x y is nonzero only if the target of x is the source of y
    for x in range(len(letters)):
        for y in range(len(letters)):
            x_triv = x in vid.values()
            y_triv = y in vid.values()
            if tgt[x] != src[y]:
                system.add_rule((x, y), {}, "quiver")
            elif x_triv:
                system.add_rule((x, y), {(y,): 1}, "quiver")
            elif y_triv:
                system.add_rule((x, y), {(x,): 1}, "quiver")
    for lhs_text, rhs_text, lineno in pres.lines:
        rel = _terms_add(system.parse_terms(lhs_text), system.parse_terms(rhs_text))
        system.relations.append(CheckedRelation(f"{lhs_text} = {rhs_text}", system.parse_terms(lhs_text), system.parse_terms(rhs_text)))
        rel = system.nf(rel)
        if rel:
            system.orient(rel, f"line {lineno}")
    report = _word_complete(system, budget)
    return system, report


@dataclass
class CornerSystem:
    """e A e for an idempotent e of a finite PBW algebra, with a named basis."""

    name: str
    ambient: RewriteSystem
    idempotents: dict
    basis_names: list
    basis: list
    unit: Element
    report: ConfluenceReport | None = None

    def enumerate_basis(self, degree_bound: int | None = None) -> list[str]:
        return list(self.basis_names)

    def element(self, name: str) -> Element:
        return self.basis[self.basis_names.index(name)]


def _complete_corner(pres: Presentation, field: Field, E: int, budget: int):
    amb_name = pres.extra["ambient"][0].strip()
    ambient, amb_report = complete(amb_name, E, budget, field)
    idems = {}
    for line in pres.extra.get("idempotent", []):
        nm, _, expr = line.partition("=")
        idems[nm.strip()] = ambient.elem(expr.strip())
    names, elems = [], []
    for line in pres.extra.get("basis", []):
        nm, _, expr = line.partition("=")
        names.append(nm.strip())
        elems.append(ambient.elem(expr.strip()))
    unit = ambient.zero()
    for u in pres.extra.get("unit", []):
        for nm in u.split("+"):
            unit = unit + idems[nm.strip()]
    report = ConfluenceReport(pres.name, confluent=amb_report.confluent, exponent_bound=E)
    report.pairs_checked = amb_report.pairs_checked
    # the listed elements must form a basis of e A e
    amb_basis = ambient.enumerate_basis()
    pos = {m: i for i, m in enumerate(amb_basis)}
    spanned = Echelon(field, len(amb_basis))
    for m in amb_basis:
        x = unit * ambient.monomial(m) * unit
        spanned.add(field.row_from(_vector(x, pos, len(amb_basis))))
    listed = Echelon(field, len(amb_basis))
    for x in elems:
        listed.add(field.row_from(_vector(x, pos, len(amb_basis))))
    ok = len(listed) == len(elems) == len(spanned) and all(spanned.contains(b) for b in listed.basis)
    if not ok:
        report.unresolved.append(
            f"listed basis spans {len(listed)} of {len(elems)}; e A e has dimension {len(spanned)}"
        )
        report.confluent = False
    for nm, e in idems.items():
        report.relations_checked += 1
        if e * e != e:
            report.failed_relations.append(f"{nm}^2 = {nm}")
            report.confluent = False
    system = CornerSystem(pres.name, ambient, idems, names, elems, unit, report)
    return system, report


def _vector(x: Element, pos: dict, n: int) -> list[int]:
    v = [0] * n
    for m, c in x.terms.items():
        v[pos[m]] = c
    return v


_SYSTEM_CACHE: dict = {}


def get_system(name: str, exponent_bound: int = 6, field: Field | None = None):
    """Completed system for a preset (cached)."""
    field = field or cached_field(1)
    key = (name, exponent_bound, field.k)
    if key not in _SYSTEM_CACHE:
        _SYSTEM_CACHE[key] = complete(name, exponent_bound, field=field)[0]
    return _SYSTEM_CACHE[key]


def normal_form(x, system) -> Element:
    if isinstance(system, str):
        system = get_system(system)
    return system.normal_form(x)


def enumerate_basis(system, degree_bound: int | None = None):
    if isinstance(system, str):
        system = get_system(system)
    if isinstance(system, WordRewriteSystem):
        return system.enumerate_basis(degree_bound or 8)
    return system.enumerate_basis(degree_bound)
