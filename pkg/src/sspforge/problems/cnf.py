"""SAT and 3SAT instances.

The universe of a formula with n variables is the 2n literals in the
canonical order x1..xn, ~x1..~xn; literal index i is the positive literal
of variable i, index n+i its negation.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import CapacityError, DomainError, FormatError


def pos(i: int) -> int:
    return i


def neg_index(n: int, i: int) -> int:
    return n + i


@dataclass(frozen=True)
class CnfInstance:
    n_vars: int
    clauses: tuple[tuple[int, ...], ...]  # literal indices into the universe

    def __post_init__(self):
        for c in self.clauses:
            if not c:
                raise FormatError("empty clause")
            for lit in c:
                if not 0 <= lit < 2 * self.n_vars:
                    raise FormatError(f"literal {lit} out of range")

    @property
    def n_literals(self) -> int:
        return 2 * self.n_vars

    def universe_labels(self) -> tuple[str, ...]:
        names = [f"x{i+1}" for i in range(self.n_vars)]
        return tuple(names + ["~" + s for s in names])

    def require_width(self, w: int) -> None:
        for c in self.clauses:
            if len(c) != w:
                raise FormatError(f"clause {c} has width {len(c)}, expected {w}")

    def negate(self, lit: int) -> int:
        n = self.n_vars
        return lit + n if lit < n else lit - n

    def var_of(self, lit: int) -> int:
        return lit % self.n_vars

    def clause_masks(self) -> tuple[int, ...]:
        out = []
        for c in self.clauses:
            m = 0
            for lit in c:
                m |= 1 << lit
            out.append(m)
        return tuple(out)

    def verify(self, mask: int) -> bool:
        n = self.n_vars
        if mask >> 2 * n:
            raise DomainError("candidate outside literal universe")
        for i in range(n):
            if ((mask >> i) & 1) + ((mask >> (n + i)) & 1) != 1:
                return False
        for cm in self.clause_masks():
            if not mask & cm:
                return False
        return True

    def assignment_mask(self, true_vars: int) -> int:
        """Literal mask of the assignment encoded by a variable bitset."""
        n = self.n_vars
        m = 0
        for i in range(n):
            if (true_vars >> i) & 1:
                m |= 1 << i
            else:
                m |= 1 << (n + i)
        return m


def enumerate_cnf_solutions(inst: CnfInstance, max_solutions: int) -> list[int]:
    n = inst.n_vars
    masks = inst.clause_masks()
    out = []
    for a in range(1 << n):
        m = inst.assignment_mask(a)
        if all(m & cm for cm in masks):
            out.append(m)
            if len(out) > max_solutions:
                raise CapacityError("solution cap exceeded")
    out.sort()
    return out
