"""Finite IL-algebras: exact operation tables and law checking with witnesses.

An IL-algebra is a lattice with least element `bot` that also carries a
commutative monoid `*` with unit `1` and a residual `->` adjoint to it:
x*y <= z holds exactly when x <= y->z. Nothing forces x*y <= x here, which
is what separates these structures from residuated lattices proper.

Algebras are immutable after construction and every operation below is a
pure read, so instances are safe to share across threads.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Iterable, Literal

from .errors import BuildError, LawViolationError, NotResiduatedError

if TYPE_CHECKING:
    from .specfile import AlgebraSpecDocument

MAX_CARRIER = 64  # subsets of the carrier must fit in a machine-word bitmask

BuildMode = Literal["strict", "lenient"]


@dataclass(frozen=True)
class Violation:
    """One broken law instance: which law, at which elements, and how."""

    law: str
    witness: tuple[str, ...]
    expected: str
    found: str


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def merged(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.violations + other.violations)

    def by_law(self) -> dict[str, list[tuple[str, ...]]]:
        out: dict[str, list[tuple[str, ...]]] = {}
        for v in self.violations:
            out.setdefault(v.law, []).append(v.witness)
        return out


@dataclass(frozen=True)
class FiniteILAlgebra:
    """A finite IL-algebra held as index-based lookup tables.

    Element identity is the index into `carrier`; all tables are n x n and
    row-major in that indexing. `valid` records whether the full law suite
    passed at build time (lenient builds may carry broken tables on purpose).
    """

    carrier: tuple[str, ...]
    leq_table: tuple[tuple[bool, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    meet_table: tuple[tuple[int, ...], ...]
    star_table: tuple[tuple[int, ...], ...]
    arrow_table: tuple[tuple[int, ...], ...]
    bottom: int
    unit: int
    top: int
    valid: bool

    @property
    def n(self) -> int:
        return len(self.carrier)

    def index(self, name: str) -> int:
        try:
            return self.carrier.index(name)
        except ValueError:
            raise KeyError(f"unknown element name {name!r}") from None

    def name(self, i: int) -> str:
        self._check(i)
        return self.carrier[i]

    def names(self, indices: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.name(i) for i in indices)

    def _check(self, *indices: int) -> None:
        for i in indices:
            if not 0 <= i < len(self.carrier):
                raise IndexError(f"element index {i} out of range 0..{self.n - 1}")

    def leq(self, x: int, y: int) -> bool:
        self._check(x, y)
        return self.leq_table[x][y]

    def join(self, x: int, y: int) -> int:
        self._check(x, y)
        return self.join_table[x][y]

    def meet(self, x: int, y: int) -> int:
        self._check(x, y)
        return self.meet_table[x][y]

    def star(self, x: int, y: int) -> int:
        self._check(x, y)
        return self.star_table[x][y]

    def arrow(self, x: int, y: int) -> int:
        self._check(x, y)
        return self.arrow_table[x][y]

    def elements(self) -> range:
        return range(self.n)


def require_valid(alg: FiniteILAlgebra, operation: str) -> None:
    """Guard for operations that only make sense on law-valid algebras."""
    if not alg.valid:
        raise BuildError(
            f"{operation} requires an algebra that passed the law suite; "
            "this one was built leniently with violations"
        )


def transitive_closure(n: int, pairs: Iterable[tuple[int, int]]) -> list[list[bool]]:
    """Reflexive-transitive closure of a relation given as index pairs."""
    le = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        le[a][b] = True
    for k in range(n):
        lk = le[k]
        for i in range(n):
            if le[i][k]:
                li = le[i]
                for j in range(n):
                    if lk[j]:
                        li[j] = True
    return le


def _greatest(le, members: list[int]) -> int | None:
    hits = [u for u in members if all(le[v][u] for v in members)]
    return hits[0] if len(hits) == 1 else None


def _least(le, members: list[int]) -> int | None:
    hits = [u for u in members if all(le[u][v] for v in members)]
    return hits[0] if len(hits) == 1 else None


def derive_arrow(star, le) -> list[list[int]]:
    """Residual table from the monoid table and the order.

    Entry (x, z) is the greatest w with x*w <= z; "greatest" means the unique
    element of the solution set above all of it, never an arbitrary maximal
    pick. Raises NotResiduatedError listing every (x, z) where the solution
    set is empty or has no greatest element.
    """
    n = len(le)
    table = [[0] * n for _ in range(n)]
    failures = []
    for x in range(n):
        for z in range(n):
            solutions = [w for w in range(n) if le[star[x][w]][z]]
            best = _greatest(le, solutions) if solutions else None
            if best is None:
                failures.append((x, z))
            else:
                table[x][z] = best
    if failures:
        raise NotResiduatedError(failures)
    return table


def assemble_algebra(
    carrier: Iterable[str],
    order_pairs: Iterable[tuple[int, int]],
    star,
    unit: int,
    arrow=None,
    declared_bottom: int | None = None,
    declared_top: int | None = None,
    mode: BuildMode = "strict",
) -> tuple[FiniteILAlgebra, VerificationReport]:
    """Build an algebra from raw index-based inputs and run the law suite.

    Structural problems (bad dimensions, order cycles, no least element,
    missing joins or meets, underivable residual) raise BuildError in both
    modes; law violations raise LawViolationError only in strict mode.
    """
    names = tuple(carrier)
    n = len(names)
    if n == 0:
        raise BuildError("carrier is empty")
    if n > MAX_CARRIER:
        raise BuildError(
            f"carrier has {n} elements; at most {MAX_CARRIER} are supported "
            "(subsets are machine-word bitmasks)"
        )
    if len(set(names)) != n:
        raise BuildError("carrier names are not unique")
    _check_table("star", star, n)
    if arrow is not None:
        _check_table("arrow", arrow, n)
    if not 0 <= unit < n:
        raise BuildError(f"unit index {unit} out of range")

    le = transitive_closure(n, order_pairs)
    for i in range(n):
        for j in range(i + 1, n):
            if le[i][j] and le[j][i]:
                raise BuildError(
                    f"order contains a cycle through {names[i]!r} and {names[j]!r}"
                )

    bottom = _least(le, list(range(n)))
    if bottom is None:
        raise BuildError("order has no least element")
    if declared_bottom is not None and declared_bottom != bottom:
        raise BuildError(
            f"declared bottom {names[declared_bottom]!r} is not the least "
            f"element (computed {names[bottom]!r})"
        )

    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            uppers = [u for u in range(n) if le[i][u] and le[j][u]]
            lub = _least(le, uppers) if uppers else None
            if lub is None:
                raise BuildError(
                    f"pair ({names[i]}, {names[j]}) has no least upper bound"
                )
            lowers = [u for u in range(n) if le[u][i] and le[u][j]]
            glb = _greatest(le, lowers) if lowers else None
            if glb is None:
                raise BuildError(
                    f"pair ({names[i]}, {names[j]}) has no greatest lower bound"
                )
            join[i][j] = lub
            meet[i][j] = glb

    if arrow is None:
        arrow = derive_arrow(star, le)

    top = arrow[bottom][bottom]

    alg = FiniteILAlgebra(
        carrier=names,
        leq_table=_freeze_bool(le),
        join_table=_freeze(join),
        meet_table=_freeze(meet),
        star_table=_freeze(star),
        arrow_table=_freeze(arrow),
        bottom=bottom,
        unit=unit,
        top=top,
        valid=False,
    )

    report = (
        check_lattice(alg)
        .merged(check_monoid(alg))
        .merged(check_residuation(alg))
        .merged(_check_top(alg, declared_top))
    )
    alg = replace(alg, valid=report.ok)
    if mode == "strict" and not report.ok:
        raise LawViolationError(report)
    return alg, report


def build_algebra(
    doc: "AlgebraSpecDocument", mode: BuildMode = "strict"
) -> tuple[FiniteILAlgebra, VerificationReport]:
    """Assemble an algebra from a parsed description document."""
    names = list(doc.elements)
    if not names:
        raise BuildError("document has no elements")
    index = {e: i for i, e in enumerate(names)}

    def resolve(name, what):
        if name not in index:
            raise BuildError(f"unknown element name {name!r} in {what}")
        return index[name]

    pairs = [
        (resolve(a, "order"), resolve(b, "order")) for a, b in doc.order_pairs
    ]
    star = _rows_to_table("star", doc.star_rows, names, index)
    arrow = (
        _rows_to_table("arrow", doc.arrow_rows, names, index)
        if doc.arrow_rows is not None
        else None
    )
    return assemble_algebra(
        names,
        pairs,
        star,
        unit=resolve(doc.unit, "unit"),
        arrow=arrow,
        declared_bottom=(
            resolve(doc.declared_bottom, "bottom")
            if doc.declared_bottom is not None
            else None
        ),
        declared_top=(
            resolve(doc.declared_top, "top")
            if doc.declared_top is not None
            else None
        ),
        mode=mode,
    )


def _rows_to_table(what, rows, names, index):
    n = len(names)
    missing = [e for e in names if e not in rows]
    if missing:
        raise BuildError(f"missing {what} row for {missing[0]!r}")
    extra = [e for e in rows if e not in index]
    if extra:
        raise BuildError(f"unknown element name {extra[0]!r} in {what} rows")
    table = []
    for e in names:
        row = rows[e]
        if len(row) != n:
            raise BuildError(
                f"{what} row for {e!r} has {len(row)} entries, expected {n}"
            )
        table.append([index[v] if v in index else _bad_name(what, v) for v in row])
    return table


def _bad_name(what, v):
    raise BuildError(f"unknown element name {v!r} in {what} row")


def _check_table(what, table, n):
    if len(table) != n:
        raise BuildError(f"{what} table has {len(table)} rows, expected {n}")
    for i, row in enumerate(table):
        if len(row) != n:
            raise BuildError(
                f"{what} table row {i} has {len(row)} entries, expected {n}"
            )
        for v in row:
            if not 0 <= v < n:
                raise BuildError(f"{what} table entry {v} out of range")


def _freeze(table):
    return tuple(tuple(row) for row in table)


def _freeze_bool(table):
    return tuple(tuple(bool(v) for v in row) for row in table)


def check_lattice(alg: FiniteILAlgebra) -> VerificationReport:
    """Order axioms, least element, and correctness of the bound tables."""
    le, nm, n = alg.leq_table, alg.carrier, alg.n
    out: list[Violation] = []
    for i in range(n):
        if not le[i][i]:
            out.append(Violation("order-reflexive", (nm[i],), "x <= x", "fails"))
    for i in range(n):
        for j in range(i + 1, n):
            if le[i][j] and le[j][i]:
                out.append(
                    Violation(
                        "order-antisymmetric", (nm[i], nm[j]),
                        "x <= y and y <= x only when x == y", "two-way pair",
                    )
                )
    for i in range(n):
        for j in range(n):
            if not le[i][j]:
                continue
            for k in range(n):
                if le[j][k] and not le[i][k]:
                    out.append(
                        Violation(
                            "order-transitive", (nm[i], nm[j], nm[k]),
                            "x <= z", "x <= y <= z but not x <= z",
                        )
                    )
    for j in range(n):
        if not le[alg.bottom][j]:
            out.append(
                Violation(
                    "least-element", (nm[alg.bottom], nm[j]),
                    f"{nm[alg.bottom]} <= {nm[j]}", "fails",
                )
            )
    for i in range(n):
        for j in range(n):
            u = alg.join_table[i][j]
            if not (le[i][u] and le[j][u]) or any(
                le[i][v] and le[j][v] and not le[u][v] for v in range(n)
            ):
                out.append(
                    Violation(
                        "join-table", (nm[i], nm[j]),
                        "least upper bound", nm[u],
                    )
                )
            w = alg.meet_table[i][j]
            if not (le[w][i] and le[w][j]) or any(
                le[v][i] and le[v][j] and not le[v][w] for v in range(n)
            ):
                out.append(
                    Violation(
                        "meet-table", (nm[i], nm[j]),
                        "greatest lower bound", nm[w],
                    )
                )
    return VerificationReport(tuple(out))


def check_monoid(alg: FiniteILAlgebra) -> VerificationReport:
    """Commutativity over all pairs, associativity over all triples, and the
    unit law in both argument positions."""
    st, nm, n = alg.star_table, alg.carrier, alg.n
    out: list[Violation] = []
    for i in range(n):
        for j in range(i + 1, n):
            if st[i][j] != st[j][i]:
                out.append(
                    Violation(
                        "star-commutative", (nm[i], nm[j]),
                        f"{nm[i]}*{nm[j]} == {nm[j]}*{nm[i]}",
                        f"{nm[st[i][j]]} vs {nm[st[j][i]]}",
                    )
                )
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = st[st[i][j]][k]
                right = st[i][st[j][k]]
                if left != right:
                    out.append(
                        Violation(
                            "star-associative", (nm[i], nm[j], nm[k]),
                            nm[right], nm[left],
                        )
                    )
    u = alg.unit
    for i in range(n):
        if st[u][i] != i:
            out.append(
                Violation("star-unit", (nm[u], nm[i]), nm[i], nm[st[u][i]])
            )
    for i in range(n):
        if st[i][u] != i:
            out.append(
                Violation("star-unit", (nm[i], nm[u]), nm[i], nm[st[i][u]])
            )
    return VerificationReport(tuple(out))


def check_residuation(alg: FiniteILAlgebra) -> VerificationReport:
    """Both directions of the adjunction over all triples."""
    le, st, ar, nm, n = (
        alg.leq_table, alg.star_table, alg.arrow_table, alg.carrier, alg.n,
    )
    out: list[Violation] = []
    for x in range(n):
        for y in range(n):
            for z in range(n):
                left = le[st[x][y]][z]
                right = le[x][ar[y][z]]
                if left != right:
                    direction = (
                        f"{nm[x]}*{nm[y]} <= {nm[z]} but not "
                        f"{nm[x]} <= {nm[y]}->{nm[z]}"
                        if left
                        else f"{nm[x]} <= {nm[y]}->{nm[z]} but not "
                        f"{nm[x]}*{nm[y]} <= {nm[z]}"
                    )
                    out.append(
                        Violation(
                            "residuation", (nm[x], nm[y], nm[z]),
                            "both directions agree", direction,
                        )
                    )
    return VerificationReport(tuple(out))


def _check_top(alg: FiniteILAlgebra, declared_top: int | None) -> VerificationReport:
    nm = alg.carrier
    out: list[Violation] = []
    if declared_top is not None and declared_top != alg.top:
        out.append(
            Violation(
                "top-declared", (nm[declared_top],),
                f"bot->bot == {nm[alg.top]}", nm[declared_top],
            )
        )
    for i in range(alg.n):
        if not alg.leq_table[i][alg.top]:
            out.append(
                Violation(
                    "top-greatest", (nm[i],),
                    f"{nm[i]} <= {nm[alg.top]}", "fails",
                )
            )
    return VerificationReport(tuple(out))


def check_identities(alg: FiniteILAlgebra) -> VerificationReport:
    """The derived-identity suite.

    Every one of these follows from the axioms, so a valid algebra passes
    all of them; on a leniently built algebra the failures localize what is
    wrong with the tables.
    """
    le, st, ar = alg.leq_table, alg.star_table, alg.arrow_table
    jn, mt, nm, n = alg.join_table, alg.meet_table, alg.carrier, alg.n
    u = alg.unit
    out: list[Violation] = []

    for x in range(n):
        for y in range(n):
            for z in range(n):
                want = jn[st[x][y]][st[x][z]]
                got = st[x][jn[y][z]]
                if got != want:
                    out.append(
                        Violation(
                            "star-distributes-join", (nm[x], nm[y], nm[z]),
                            nm[want], nm[got],
                        )
                    )
    for x in range(n):
        if not le[x][alg.top]:
            out.append(
                Violation(
                    "top-greatest", (nm[x],),
                    f"{nm[x]} <= {nm[alg.top]}", "fails",
                )
            )
    for x in range(n):
        for y in range(n):
            if le[x][u] and le[y][u] and not le[st[x][y]][mt[x][y]]:
                out.append(
                    Violation(
                        "subunit-star-below-meet", (nm[x], nm[y]),
                        f"{nm[x]}*{nm[y]} <= {nm[x]} meet {nm[y]}",
                        nm[st[x][y]],
                    )
                )
            if le[u][x] and le[u][y] and not le[jn[x][y]][st[x][y]]:
                out.append(
                    Violation(
                        "superunit-join-below-star", (nm[x], nm[y]),
                        f"{nm[x]} join {nm[y]} <= {nm[x]}*{nm[y]}",
                        nm[st[x][y]],
                    )
                )
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if not le[st[ar[x][y]][ar[y][z]]][ar[x][z]]:
                    out.append(
                        Violation(
                            "arrow-transitive", (nm[x], nm[y], nm[z]),
                            f"({nm[x]}->{nm[y]})*({nm[y]}->{nm[z]}) <= {nm[x]}->{nm[z]}",
                            "fails",
                        )
                    )
    for x in range(n):
        if ar[u][x] != x:
            out.append(
                Violation("unit-arrow-identity", (nm[x],), nm[x], nm[ar[u][x]])
            )
    for x in range(n):
        for y in range(n):
            for x1 in range(n):
                for y1 in range(n):
                    if not (le[x][x1] and le[y][y1]):
                        continue
                    if not le[st[x][y]][st[x1][y1]]:
                        out.append(
                            Violation(
                                "star-monotone", (nm[x], nm[y], nm[x1], nm[y1]),
                                f"{nm[x]}*{nm[y]} <= {nm[x1]}*{nm[y1]}",
                                "fails",
                            )
                        )
                    if not le[ar[x1][y]][ar[x][y1]]:
                        out.append(
                            Violation(
                                "arrow-antitone", (nm[x], nm[y], nm[x1], nm[y1]),
                                f"{nm[x1]}->{nm[y]} <= {nm[x]}->{nm[y1]}",
                                "fails",
                            )
                        )
    for x in range(n):
        for y in range(n):
            for z in range(n):
                want = ar[st[x][y]][z]
                got = ar[x][ar[y][z]]
                if got != want:
                    out.append(
                        Violation(
                            "arrow-curry", (nm[x], nm[y], nm[z]),
                            nm[want], nm[got],
                        )
                    )
    for x in range(n):
        for y in range(n):
            if not le[st[x][ar[x][y]]][y]:
                out.append(
                    Violation(
                        "modus-ponens", (nm[x], nm[y]),
                        f"{nm[x]}*({nm[x]}->{nm[y]}) <= {nm[y]}",
                        nm[st[x][ar[x][y]]],
                    )
                )
    for x in range(n):
        if not le[u][ar[x][x]]:
            out.append(
                Violation(
                    "self-arrow-above-unit", (nm[x],),
                    f"{nm[u]} <= {nm[x]}->{nm[x]}", nm[ar[x][x]],
                )
            )
    return VerificationReport(tuple(out))


def is_idempotent(alg: FiniteILAlgebra) -> tuple[bool, int | None]:
    """Whether x*x == x everywhere; on failure also the first bad element."""
    for x in range(alg.n):
        if alg.star_table[x][x] != x:
            return False, x
    return True, None


def check_integrality_equivalence(alg: FiniteILAlgebra) -> bool:
    """x*y <= x for all pairs, which must coincide with top == unit.

    Returns the quantified side. The two sides agreeing is itself a theorem,
    so disagreement means the tables are not a valid algebra.
    """
    integral = all(
        alg.leq_table[alg.star_table[x][y]][x]
        for x in range(alg.n)
        for y in range(alg.n)
    )
    if integral != (alg.top == alg.unit):
        raise BuildError(
            "integrality and top == unit disagree; the tables do not form "
            "a valid algebra"
        )
    return integral
