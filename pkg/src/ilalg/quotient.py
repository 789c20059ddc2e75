"""Quotients of finite IL-algebras by filters.

The filter induces the relation x ~ y iff both x->y and y->x belong to it;
its classes are the blocks of the quotient, operations descend blockwise,
and the block order is membership of x->y in the filter. Nothing is taken
on faith: equivalence, well-definedness over all representative pairs, the
order cross-check and the full law suite of the induced algebra are all
verified exhaustively, and any failure is raised as an engine/input error.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (
    FiniteILAlgebra,
    assemble_algebra,
    check_integrality_equivalence,
    require_valid,
)
from .errors import CongruenceError, NotAFilterError, WellDefinednessError
from .filters import (
    FilterSubset,
    is_affine_filter,
    is_distributive_filter,
    is_filter,
    is_prime_filter,
    subset_mask,
)

SubsetLike = FilterSubset | int | Iterable[int]


@dataclass(frozen=True)
class QuotientVerdicts:
    is_il_algebra: bool
    distributive_lattice: bool
    linear: bool
    unit_equals_top: bool
    singleton_blocks: bool


@dataclass(frozen=True)
class QuotientResult:
    source: FiniteILAlgebra
    filter_mask: int
    blocks: tuple[tuple[int, ...], ...]
    projection: tuple[int, ...]
    algebra: FiniteILAlgebra
    verdicts: QuotientVerdicts

    def block_names(self) -> tuple[str, ...]:
        return self.algebra.carrier


@dataclass(frozen=True)
class TheoremCheck:
    """A conditional verdict: if the filter has the premise property then
    the quotient must have the conclusion property. The conclusion is
    computed either way, so reports can show near misses."""

    premise: bool
    conclusion: bool

    @property
    def holds(self) -> bool:
        return not self.premise or self.conclusion


def _filter_mask_checked(alg: FiniteILAlgebra, subset: SubsetLike) -> int:
    mask = subset_mask(alg, subset)
    check = is_filter(alg, mask)
    if not check.ok:
        raise NotAFilterError(check.condition, check.witness)
    return mask


def congruence_classes(
    alg: FiniteILAlgebra, subset: SubsetLike
) -> tuple[tuple[int, ...], ...]:
    """Blocks of the induced relation, sorted by least member index.

    Reflexivity, symmetry and transitivity are re-verified; a failure would
    mean the subset is not a filter or the algebra is invalid, and raises.
    """
    require_valid(alg, "congruence_classes")
    mask = _filter_mask_checked(alg, subset)
    ar = alg.arrow_table
    n = alg.n

    def related(x: int, y: int) -> bool:
        return bool(mask >> ar[x][y] & 1 and mask >> ar[y][x] & 1)

    classes = [frozenset(y for y in range(n) if related(x, y)) for x in range(n)]
    for x in range(n):
        if x not in classes[x]:
            raise CongruenceError(f"relation not reflexive at {alg.carrier[x]}")
        for y in classes[x]:
            if classes[y] != classes[x]:
                raise CongruenceError(
                    f"relation not transitive around {alg.carrier[x]} and "
                    f"{alg.carrier[y]}"
                )
    blocks = sorted({cls for cls in classes}, key=min)
    return tuple(tuple(sorted(blk)) for blk in blocks)


def quotient_algebra(alg: FiniteILAlgebra, subset: SubsetLike) -> QuotientResult:
    """Construct the quotient and machine-check everything about it."""
    require_valid(alg, "quotient_algebra")
    mask = _filter_mask_checked(alg, subset)
    blocks = congruence_classes(alg, mask)
    nblocks = len(blocks)
    projection = [0] * alg.n
    for bi, blk in enumerate(blocks):
        for x in blk:
            projection[x] = bi

    tables = {
        "join": alg.join_table,
        "meet": alg.meet_table,
        "star": alg.star_table,
        "arrow": alg.arrow_table,
    }
    induced: dict[str, list[list[int]]] = {}
    for opname, table in tables.items():
        out = [[0] * nblocks for _ in range(nblocks)]
        for bi, bx in enumerate(blocks):
            for bj, by in enumerate(blocks):
                value = projection[table[bx[0]][by[0]]]
                for x in bx:
                    for y in by:
                        if projection[table[x][y]] != value:
                            raise WellDefinednessError(
                                opname,
                                alg.carrier[bx[0]], alg.carrier[x],
                                alg.carrier[by[0]], alg.carrier[y],
                            )
                out[bi][bj] = value
        induced[opname] = out

    qleq = [[False] * nblocks for _ in range(nblocks)]
    for bi, bx in enumerate(blocks):
        for bj, by in enumerate(blocks):
            value = bool(mask >> alg.arrow_table[bx[0]][by[0]] & 1)
            for x in bx:
                for y in by:
                    if bool(mask >> alg.arrow_table[x][y] & 1) != value:
                        raise WellDefinednessError(
                            "order",
                            alg.carrier[bx[0]], alg.carrier[x],
                            alg.carrier[by[0]], alg.carrier[y],
                        )
            qleq[bi][bj] = value

    names = tuple(f"[{alg.carrier[blk[0]]}]" for blk in blocks)
    order_pairs = [
        (i, j) for i in range(nblocks) for j in range(nblocks) if qleq[i][j]
    ]
    quotient, _report = assemble_algebra(
        names,
        order_pairs,
        induced["star"],
        unit=projection[alg.unit],
        arrow=induced["arrow"],
        mode="strict",
    )

    # The membership-induced order must reproduce the blockwise join/meet.
    if quotient.join_table != tuple(map(tuple, induced["join"])):
        raise CongruenceError(
            "order induced by filter membership disagrees with blockwise join"
        )
    if quotient.meet_table != tuple(map(tuple, induced["meet"])):
        raise CongruenceError(
            "order induced by filter membership disagrees with blockwise meet"
        )
    if quotient.top != projection[alg.top]:
        raise CongruenceError(
            "top block of the quotient is not the block of the source top"
        )
    if quotient.bottom != projection[alg.bottom]:
        raise CongruenceError(
            "bottom block of the quotient is not the block of the source bottom"
        )

    jn, mt = quotient.join_table, quotient.meet_table
    rng = range(nblocks)
    distributive = all(
        jn[x][mt[y][z]] == mt[jn[x][y]][jn[x][z]]
        for x in rng for y in rng for z in rng
    )
    linear = all(
        quotient.leq_table[x][y] or quotient.leq_table[y][x]
        for x in rng for y in rng
    )
    verdicts = QuotientVerdicts(
        is_il_algebra=quotient.valid,
        distributive_lattice=distributive,
        linear=linear,
        unit_equals_top=quotient.unit == quotient.top,
        singleton_blocks=all(len(blk) == 1 for blk in blocks),
    )
    return QuotientResult(
        source=alg,
        filter_mask=mask,
        blocks=blocks,
        projection=tuple(projection),
        algebra=quotient,
        verdicts=verdicts,
    )


def check_quotient_order(alg: FiniteILAlgebra, subset: SubsetLike) -> bool:
    """Biconditional between block order and arrow membership, all pairs."""
    result = quotient_algebra(alg, subset)
    mask = result.filter_mask
    proj = result.projection
    qle = result.algebra.leq_table
    return all(
        qle[proj[x]][proj[y]] == bool(mask >> alg.arrow_table[x][y] & 1)
        for x in range(alg.n)
        for y in range(alg.n)
    )


def check_distributive_quotient(
    alg: FiniteILAlgebra, subset: SubsetLike
) -> TheoremCheck:
    """Distributive filter implies distributive quotient lattice."""
    result = quotient_algebra(alg, subset)
    return TheoremCheck(
        premise=is_distributive_filter(alg, result.filter_mask)[0],
        conclusion=result.verdicts.distributive_lattice,
    )


def check_linear_quotient(alg: FiniteILAlgebra, subset: SubsetLike) -> TheoremCheck:
    """Prime filter implies totally ordered quotient."""
    result = quotient_algebra(alg, subset)
    return TheoremCheck(
        premise=is_prime_filter(alg, result.filter_mask)[0],
        conclusion=result.verdicts.linear,
    )


def check_affine_quotient(alg: FiniteILAlgebra, subset: SubsetLike) -> TheoremCheck:
    """Affine filter implies the quotient collapses top onto the unit and is
    integral, i.e. a residuated lattice."""
    result = quotient_algebra(alg, subset)
    integral = check_integrality_equivalence(result.algebra)
    return TheoremCheck(
        premise=is_affine_filter(alg, result.filter_mask),
        conclusion=result.verdicts.unit_equals_top and integral,
    )
