"""Finite two-arrow algebras: construction, verification and basic operations.

An :class:`Algebra` is a finite carrier with two binary operation tables
(``arrow`` for ``->`` and ``squig`` for ``~>``) and a designated unit element.
Elements are represented by index throughout; names are used only for
input/output.
"""

from __future__ import annotations

import itertools
from array import array
from dataclasses import dataclass

from pbci import kernels


class FormatError(ValueError):
    """Malformed algebra text input."""


class InconsistentOrderError(RuntimeError):
    """The two arrow operations disagree about the derived order.

    Signals that the caller skipped axiom verification: in a verified
    algebra x -> y == 1 iff x ~> y == 1.
    """


class InternalCheckError(RuntimeError):
    """Two supposedly equivalent computation routes disagreed (a bug)."""


class UnboundOperationError(ValueError):
    """A term uses an operation the evaluated structure does not provide."""


class CapExceededError(RuntimeError):
    """A configurable size cap would be exceeded."""


# ---------------------------------------------------------------------------
# Algebra


class Algebra:
    """Finite algebra (A, ->, ~>, 1) of type (2, 2, 0).

    Immutable after construction; all operations on it are pure, so instances
    are safe to share between threads.
    """

    __slots__ = ("n", "names", "unit", "arrow", "squig", "_index", "_flat")

    def __init__(self, names, unit, arrow, squig):
        names = tuple(str(s) for s in names)
        n = len(names)
        if n == 0:
            raise ValueError("carrier must be nonempty")
        if len(set(names)) != n:
            raise ValueError("element names must be pairwise distinct")
        if not 0 <= unit < n:
            raise ValueError("unit index out of range")
        arrow = tuple(tuple(row) for row in arrow)
        squig = tuple(tuple(row) for row in squig)
        for label, table in (("arrow", arrow), ("squig", squig)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"{label} table must be {n}x{n}")
            for row in table:
                for v in row:
                    if not isinstance(v, int) or not 0 <= v < n:
                        raise ValueError(f"{label} table entry {v!r} out of range")
        self.n = n
        self.names = names
        self.unit = unit
        self.arrow = arrow
        self.squig = squig
        self._index = {s: i for i, s in enumerate(names)}
        self._flat = None

    def element(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown element name {name!r}") from None

    def name(self, i: int) -> str:
        return self.names[i]

    def flat_tables(self):
        """Row-major int arrays of both tables, cached (kernel input)."""
        if self._flat is None:
            self._flat = (
                array("i", [v for row in self.arrow for v in row]),
                array("i", [v for row in self.squig for v in row]),
            )
        return self._flat

    def dagger(self) -> "Algebra":
        """The algebra with the two operation tables swapped."""
        return Algebra(self.names, self.unit, self.squig, self.arrow)

    def permuted(self, perm, names=None) -> "Algebra":
        """Relabel by ``perm`` (old index -> new index)."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise ValueError("perm must be a permutation of element indices")
        new_arrow = [[0] * n for _ in range(n)]
        new_squig = [[0] * n for _ in range(n)]
        new_names = [""] * n
        for x in range(n):
            new_names[perm[x]] = self.names[x]
            for y in range(n):
                new_arrow[perm[x]][perm[y]] = perm[self.arrow[x][y]]
                new_squig[perm[x]][perm[y]] = perm[self.squig[x][y]]
        if names is not None:
            new_names = names
        return Algebra(new_names, perm[self.unit], new_arrow, new_squig)

    def subset_names(self, subset) -> str:
        """Render a set of element indices as ``{a, b, 1}`` in index order."""
        return "{" + ", ".join(self.names[i] for i in sorted(subset)) + "}"

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.names == other.names
            and self.unit == other.unit
            and self.arrow == other.arrow
            and self.squig == other.squig
        )

    def __hash__(self):
        return hash((self.names, self.unit, self.arrow, self.squig))

    def __repr__(self):
        return f"Algebra(n={self.n}, unit={self.names[self.unit]!r})"


# ---------------------------------------------------------------------------
# Verification reports


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple[str, ...]

    def __str__(self):
        return f"{self.law} at ({', '.join(self.witness)})"


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    violations: tuple[Violation, ...]
    checked: tuple[str, ...] = ()

    def __bool__(self):
        return self.passed

    def summary(self) -> str:
        if self.passed:
            return "PASS"
        return "FAIL: " + "; ".join(str(v) for v in self.violations)


def _make_report(violations, checked, max_violations):
    violations = tuple(violations[:max_violations])
    return VerificationReport(not violations, violations, tuple(checked))


# Axioms.  Each checker yields witnesses (index tuples) in lexicographic
# order; the runner records the first witness per law.

def _axiom_checkers(a: Algebra):
    n, u, arr, sq = a.n, a.unit, a.arrow, a.squig

    def composition_arrow():
        for x, y, z in itertools.product(range(n), repeat=3):
            if sq[arr[x][y]][sq[arr[y][z]][arr[x][z]]] != u:
                yield (x, y, z)

    def composition_squig():
        for x, y, z in itertools.product(range(n), repeat=3):
            if arr[sq[x][y]][arr[sq[y][z]][sq[x][z]]] != u:
                yield (x, y, z)

    def unit_arrow():
        for x in range(n):
            if arr[u][x] != x:
                yield (x,)

    def unit_squig():
        for x in range(n):
            if sq[u][x] != x:
                yield (x,)

    def antisymmetry():
        for x, y in itertools.product(range(n), repeat=2):
            if x != y and arr[x][y] == u and arr[y][x] == u:
                yield (x, y)

    return [
        ("composition-arrow", composition_arrow),
        ("composition-squig", composition_squig),
        ("unit-arrow", unit_arrow),
        ("unit-squig", unit_squig),
        ("antisymmetry", antisymmetry),
    ]


def _run_checkers(a, checkers, max_violations):
    violations = []
    checked = []
    for law, gen in checkers:
        checked.append(law)
        if len(violations) >= max_violations:
            continue
        witness = next(gen(), None)
        if witness is not None:
            violations.append(Violation(law, tuple(a.names[i] for i in witness)))
    return _make_report(violations, checked, max_violations)


def check_pseudo_bci(a: Algebra, max_violations: int = 10) -> VerificationReport:
    """Verify the pseudo-BCI axioms over every element tuple."""
    checkers = _axiom_checkers(a)
    flat = a.flat_tables()
    if kernels.pbci_ok(flat[0], flat[1], a.n, a.unit):
        return VerificationReport(True, (), tuple(law for law, _ in checkers))
    return _run_checkers(a, checkers, max_violations)


def check_pseudo_bck(a: Algebra, max_violations: int = 10) -> VerificationReport:
    """Pseudo-BCI axioms plus integrality: x -> 1 == 1 (unit greatest)."""
    n, u, arr = a.n, a.unit, a.arrow

    def unit_greatest():
        for x in range(n):
            if arr[x][u] != u:
                yield (x,)

    checkers = _axiom_checkers(a) + [("unit-greatest", unit_greatest)]
    return _run_checkers(a, checkers, max_violations)


# ---------------------------------------------------------------------------
# Derived order


class DerivedOrder:
    """The partial order x <= y iff x -> y == 1, as a dense relation."""

    __slots__ = ("n", "leq", "_up", "_down")

    def __init__(self, n, leq):
        self.n = n
        self.leq = leq
        self._up = tuple(
            frozenset(y for y in range(n) if leq[x][y]) for x in range(n)
        )
        self._down = tuple(
            frozenset(y for y in range(n) if leq[y][x]) for x in range(n)
        )

    def is_leq(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def up(self, x: int) -> frozenset:
        return self._up[x]

    def down(self, x: int) -> frozenset:
        return self._down[x]

    def maximal_elements(self) -> frozenset:
        return frozenset(x for x in range(self.n) if self._up[x] == {x})

    def greatest(self):
        for x in range(self.n):
            if len(self._down[x]) == self.n:
                return x
        return None

    def pairs(self):
        """All strict related pairs (x, y), x < y in the order."""
        return [(x, y) for x in range(self.n) for y in self._up[x] if y != x]

    def cover_pairs(self):
        """Hasse diagram: strict pairs with no element strictly between."""
        covers = []
        for x, y in self.pairs():
            if not any(z != x and z != y and self.leq[x][z] and self.leq[z][y]
                       for z in range(self.n)):
                covers.append((x, y))
        return covers


def derive_order(a: Algebra) -> DerivedOrder:
    """Materialize the derived order of a verified algebra.

    Raises :class:`InconsistentOrderError` when the two arrows disagree or
    the relation fails the poset laws, which indicates that the caller
    skipped axiom verification.
    """
    n, u, arr, sq = a.n, a.unit, a.arrow, a.squig
    for x in range(n):
        for y in range(n):
            if (arr[x][y] == u) != (sq[x][y] == u):
                raise InconsistentOrderError(
                    f"arrow and squig orders disagree at "
                    f"({a.names[x]}, {a.names[y]})"
                )
    leq = tuple(tuple(arr[x][y] == u for y in range(n)) for x in range(n))
    for x in range(n):
        if not leq[x][x]:
            raise InconsistentOrderError(f"order not reflexive at {a.names[x]}")
        for y in range(n):
            if x != y and leq[x][y] and leq[y][x]:
                raise InconsistentOrderError(
                    f"order not antisymmetric at ({a.names[x]}, {a.names[y]})"
                )
            for z in range(n):
                if leq[x][y] and leq[y][z] and not leq[x][z]:
                    raise InconsistentOrderError(
                        f"order not transitive at ({a.names[x]}, "
                        f"{a.names[y]}, {a.names[z]})"
                    )
    return DerivedOrder(n, leq)


# ---------------------------------------------------------------------------
# Derived arithmetical laws

#: Laws marked supplementary are included in the suite but flagged apart,
#: since their status is less standard than the rest.
SUPPLEMENTARY_LAWS = frozenset({"triple-collapse-arrow", "triple-collapse-squig"})


def _derived_law_checkers(a: Algebra):
    n, u, arr, sq = a.n, a.unit, a.arrow, a.squig

    def leq(x, y):
        return arr[x][y] == u

    def pairs():
        return itertools.product(range(n), repeat=2)

    def triples():
        return itertools.product(range(n), repeat=3)

    checkers = []

    def law(name):
        def register(fn):
            checkers.append((name, fn))
            return fn
        return register

    @law("self-arrow")
    def _():
        for x in range(n):
            if arr[x][x] != u or sq[x][x] != u:
                yield (x,)

    @law("chain-bound-arrow")
    def _():
        for x, y, z in triples():
            if not leq(arr[x][y], sq[arr[y][z]][arr[x][z]]):
                yield (x, y, z)

    @law("chain-bound-squig")
    def _():
        for x, y, z in triples():
            if not leq(sq[x][y], arr[sq[y][z]][sq[x][z]]):
                yield (x, y, z)

    @law("inner-bound-arrow")
    def _():
        for x, y in pairs():
            if not leq(x, sq[arr[x][y]][y]):
                yield (x, y)

    @law("inner-bound-squig")
    def _():
        for x, y in pairs():
            if not leq(x, arr[sq[x][y]][y]):
                yield (x, y)

    @law("order-agreement")
    def _():
        for x, y in pairs():
            if (arr[x][y] == u) != (sq[x][y] == u):
                yield (x, y)

    @law("antitone-arrow")
    def _():
        for x, y, z in triples():
            if leq(x, y) and not leq(arr[y][z], arr[x][z]):
                yield (x, y, z)

    @law("antitone-squig")
    def _():
        for x, y, z in triples():
            if leq(x, y) and not leq(sq[y][z], sq[x][z]):
                yield (x, y, z)

    @law("exchange")
    def _():
        for x, y, z in triples():
            if arr[x][sq[y][z]] != sq[y][arr[x][z]]:
                yield (x, y, z)

    @law("galois")
    def _():
        for x, y, z in triples():
            if leq(x, arr[y][z]) != leq(y, sq[x][z]):
                yield (x, y, z)

    @law("prefix-monotone-arrow")
    def _():
        for x, y, z in triples():
            if not leq(arr[x][y], arr[arr[z][x]][arr[z][y]]):
                yield (x, y, z)

    @law("prefix-monotone-squig")
    def _():
        for x, y, z in triples():
            if not leq(sq[x][y], sq[sq[z][x]][sq[z][y]]):
                yield (x, y, z)

    @law("monotone-arrow")
    def _():
        for x, y, z in triples():
            if leq(x, y) and not leq(arr[z][x], arr[z][y]):
                yield (x, y, z)

    @law("monotone-squig")
    def _():
        for x, y, z in triples():
            if leq(x, y) and not leq(sq[z][x], sq[z][y]):
                yield (x, y, z)

    @law("unit-image-agreement")
    def _():
        for x in range(n):
            if arr[x][u] != sq[x][u]:
                yield (x,)

    @law("unit-image-swap-arrow")
    def _():
        for x, y in pairs():
            if arr[arr[x][y]][u] != sq[arr[x][u]][arr[y][u]]:
                yield (x, y)

    @law("unit-image-swap-squig")
    def _():
        for x, y in pairs():
            if sq[sq[x][y]][u] != arr[sq[x][u]][sq[y][u]]:
                yield (x, y)

    @law("triple-collapse-arrow")
    def _():
        for x, y in pairs():
            if arr[sq[arr[x][y]][y]][y] != arr[x][y]:
                yield (x, y)

    @law("triple-collapse-squig")
    def _():
        for x, y in pairs():
            if sq[arr[sq[x][y]][y]][y] != sq[x][y]:
                yield (x, y)

    return checkers


def check_derived_laws(a: Algebra, max_violations: int = 10) -> VerificationReport:
    """Exhaustively verify the arithmetical laws every verified algebra obeys.

    Used as a sanity suite: a violation means either the input was never
    verified or there is a bug.  Laws in :data:`SUPPLEMENTARY_LAWS` are part
    of the suite but flagged apart in ``checked``.
    """
    return _run_checkers(a, _derived_law_checkers(a), max_violations)


# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True)
class Term:
    """Expression tree over variables, the unit constant and binary ops.

    ``op`` is one of ``var``, ``unit``, ``arrow``, ``squig``, ``prod``.
    """

    op: str
    name: str = ""
    left: "Term | None" = None
    right: "Term | None" = None

    def __str__(self):
        if self.op == "var":
            return self.name
        if self.op == "unit":
            return "1"
        sym = {"arrow": "->", "squig": "~>", "prod": "*"}[self.op]
        return f"({self.left} {sym} {self.right})"


UNIT = Term("unit")


def var(name: str) -> Term:
    return Term("var", name)


def arrow_t(left: Term, right: Term) -> Term:
    return Term("arrow", left=left, right=right)


def squig_t(left: Term, right: Term) -> Term:
    return Term("squig", left=left, right=right)


def prod_t(left: Term, right: Term) -> Term:
    return Term("prod", left=left, right=right)


def term_variables(t: Term) -> tuple[str, ...]:
    """Variable names occurring in ``t``, sorted."""
    seen = set()

    def walk(s):
        if s.op == "var":
            seen.add(s.name)
        elif s.op != "unit":
            walk(s.left)
            walk(s.right)

    walk(t)
    return tuple(sorted(seen))


def substitute(t: Term, mapping: dict[str, Term]) -> Term:
    if t.op == "var":
        return mapping.get(t.name, t)
    if t.op == "unit":
        return t
    return Term(t.op, left=substitute(t.left, mapping),
                right=substitute(t.right, mapping))


def parse_term(text: str) -> Term:
    """Parse ``(y1 -> (y2 -> x)) -> x`` style terms.

    Operators ``->``, ``~>`` and ``*`` all bind alike and associate to the
    right; use parentheses for any other grouping.  ``1`` is the unit.
    """
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif text.startswith("->", i):
            tokens.append("->")
            i += 2
        elif text.startswith("~>", i):
            tokens.append("~>")
            i += 2
        elif c in "()*":
            tokens.append(c)
            i += 1
        elif c.isalnum() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise FormatError(f"unexpected character {c!r} in term")
    pos = 0

    def atom():
        nonlocal pos
        if pos >= len(tokens):
            raise FormatError("unexpected end of term")
        tok = tokens[pos]
        if tok == "(":
            pos += 1
            t = expr()
            if pos >= len(tokens) or tokens[pos] != ")":
                raise FormatError("missing closing parenthesis")
            pos += 1
            return t
        if tok in ("->", "~>", "*", ")"):
            raise FormatError(f"unexpected token {tok!r}")
        pos += 1
        return UNIT if tok == "1" else var(tok)

    def expr():
        nonlocal pos
        t = atom()
        if pos < len(tokens) and tokens[pos] in ("->", "~>", "*"):
            op = tokens[pos]
            pos += 1
            rhs = expr()
            ctor = {"->": arrow_t, "~>": squig_t, "*": prod_t}[op]
            return ctor(t, rhs)
        return t

    t = expr()
    if pos != len(tokens):
        raise FormatError(f"trailing tokens in term: {tokens[pos:]}")
    return t


def eval_term(t: Term, tables, env: dict[str, int]) -> int:
    """Evaluate a term over any structure exposing arrow/squig (and prod).

    ``tables`` needs attributes ``arrow``, ``squig``, ``unit`` and, when the
    term uses the product symbol, ``prod``; each table is indexable as
    ``table[x][y]``.
    """
    if t.op == "var":
        try:
            return env[t.name]
        except KeyError:
            raise UnboundOperationError(f"unbound variable {t.name!r}") from None
    if t.op == "unit":
        return tables.unit
    lv = eval_term(t.left, tables, env)
    rv = eval_term(t.right, tables, env)
    table = getattr(tables, t.op, None)
    if table is None:
        raise UnboundOperationError(
            f"structure has no {t.op!r} operation for term {t}"
        )
    return table[lv][rv]


def check_term_identity(a, lhs: Term, rhs: Term,
                        max_violations: int = 10) -> VerificationReport:
    """Does ``lhs == rhs`` hold under every assignment of carrier elements?

    Works for any table structure accepted by :func:`eval_term`.  The witness
    of a violation is the assignment in sorted variable order.
    """
    variables = sorted(set(term_variables(lhs)) | set(term_variables(rhs)))
    names = getattr(a, "names", None) or tuple(str(i) for i in range(a.n))
    law = f"{lhs} == {rhs}"
    violations = []
    for values in itertools.product(range(len(names)), repeat=len(variables)):
        env = dict(zip(variables, values))
        if eval_term(lhs, a, env) != eval_term(rhs, a, env):
            witness = tuple(f"{v}={names[i]}"
                            for v, i in zip(variables, values))
            violations.append(Violation(law, witness))
            if len(violations) >= max_violations:
                break
    return _make_report(violations, [law], max_violations)


# ---------------------------------------------------------------------------
# Words


def word_arrow(a: Algebra, word, x: int) -> int:
    """a1..ak -> x, folded as a1 -> (a2 -> (... (ak -> x)))."""
    if not word:
        raise ValueError("word must be nonempty")
    v = x
    for w in reversed(word):
        v = a.arrow[w][v]
    return v


def word_squig(a: Algebra, word, x: int) -> int:
    """a1..ak ~> x, folded as ak ~> (... (a2 ~> (a1 ~> x)))."""
    if not word:
        raise ValueError("word must be nonempty")
    v = x
    for w in word:
        v = a.squig[w][v]
    return v


# ---------------------------------------------------------------------------
# Isomorphism


def _order_profile(a: Algebra):
    order = derive_order(a)
    profile = []
    for x in range(a.n):
        profile.append((
            len(order.down(x)),
            len(order.up(x)),
            len(order.down(a.arrow[x][a.unit])),
        ))
    return profile


def find_isomorphism(a: Algebra, b: Algebra):
    """A unit-preserving bijection commuting with both arrows, or None.

    Exhaustive backtracking with the unit fixed; candidate images are pruned
    by order-theoretic profiles (down-set size, up-set size, down-set size of
    the unit image).
    """
    if a.n != b.n:
        return None
    n = a.n
    pa, pb = _order_profile(a), _order_profile(b)
    candidates = []
    for x in range(n):
        if x == a.unit:
            candidates.append([b.unit])
        else:
            candidates.append(
                [y for y in range(n) if y != b.unit and pb[y] == pa[x]]
            )
        if not candidates[x]:
            return None
    mapping = [-1] * n
    used = [False] * n

    def consistent(x):
        for y in range(n):
            if mapping[y] < 0:
                continue
            for s, t in ((x, y), (y, x)):
                for ta, tb in ((a.arrow, b.arrow), (a.squig, b.squig)):
                    v = ta[s][t]
                    if mapping[v] >= 0 and tb[mapping[s]][mapping[t]] != mapping[v]:
                        return False
        return True

    def assign(x):
        if x == n:
            return all(
                mapping[a.arrow[s][t]] == b.arrow[mapping[s]][mapping[t]]
                and mapping[a.squig[s][t]] == b.squig[mapping[s]][mapping[t]]
                for s in range(n) for t in range(n)
            )
        for y in candidates[x]:
            if used[y]:
                continue
            mapping[x] = y
            used[y] = True
            if consistent(x) and assign(x + 1):
                return True
            mapping[x] = -1
            used[y] = False
        return False

    if assign(0):
        return tuple(mapping)
    return None


def canonical_key(a: Algebra) -> bytes:
    """Canonical form: minimal table encoding over unit-fixing relabelings.

    Two algebras are isomorphic iff their keys are equal, so the key is used
    to reject isomorphic duplicates during enumeration.
    """
    n, unit = a.n, a.unit
    rest = [i for i in range(n) if i != unit]
    best = None
    perm = [0] * n
    for images in itertools.permutations(rest):
        for old, new in zip(rest, images):
            perm[old] = new
        perm[unit] = unit
        flat = bytearray()
        for table in (a.arrow, a.squig):
            rows = [[0] * n for _ in range(n)]
            for x in range(n):
                for y in range(n):
                    rows[perm[x]][perm[y]] = perm[table[x][y]]
            for row in rows:
                flat.extend(row)
        key = bytes(flat)
        if best is None or key < best:
            best = key
    return best


# ---------------------------------------------------------------------------
# Text format

FORMAT_DOC = """\
Algebra text format:
  elements: <name> <name> ...
  unit: <name>
  arrow:
  <n rows of n names, row = left operand>
  squig:
  <n rows of n names>
'#' starts a comment line; blank lines are ignored.
"""


def parse_algebra(text: str) -> Algebra:
    """Parse the algebra text format (see :data:`FORMAT_DOC`)."""
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if not lines:
        raise FormatError("empty input")
    pos = 0

    def take(prefix):
        nonlocal pos
        if pos >= len(lines) or not lines[pos].startswith(prefix):
            got = lines[pos] if pos < len(lines) else "<end of input>"
            raise FormatError(f"expected {prefix!r}, got {got!r}")
        value = lines[pos][len(prefix):].strip()
        pos += 1
        return value

    names = take("elements:").split()
    if not names:
        raise FormatError("no element names")
    if len(set(names)) != len(names):
        raise FormatError("duplicate element names")
    for s in names:
        if not s.isascii() or not s.isprintable() or "#" in s:
            raise FormatError(f"bad element name {s!r}")
    index = {s: i for i, s in enumerate(names)}
    unit_name = take("unit:")
    if unit_name not in index:
        raise FormatError(f"unit {unit_name!r} is not an element")

    def table(label):
        nonlocal pos
        take(label + ":")
        rows = []
        for _ in names:
            if pos >= len(lines):
                raise FormatError(f"{label} table truncated")
            entries = lines[pos].split()
            pos += 1
            if len(entries) != len(names):
                raise FormatError(
                    f"{label} row has {len(entries)} entries, expected {len(names)}"
                )
            try:
                rows.append([index[s] for s in entries])
            except KeyError as exc:
                raise FormatError(f"unknown element {exc.args[0]!r} in {label} table")
        return rows

    arrow = table("arrow")
    squig = table("squig")
    if pos != len(lines):
        raise FormatError(f"trailing input: {lines[pos]!r}")
    return Algebra(names, index[unit_name], arrow, squig)


def format_algebra(a: Algebra) -> str:
    """Serialize in the text format; round-trips bit-exactly."""
    out = ["elements: " + " ".join(a.names), "unit: " + a.names[a.unit]]
    for label, table in (("arrow", a.arrow), ("squig", a.squig)):
        out.append(label + ":")
        for row in table:
            out.append(" ".join(a.names[v] for v in row))
    return "\n".join(out) + "\n"


def load_algebra(path) -> Algebra:
    with open(path, encoding="ascii") as fh:
        return parse_algebra(fh.read())


def save_algebra(a: Algebra, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_algebra(a))
