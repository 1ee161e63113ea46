"""Greedy growth of nested 0/1 matrices.

Each step borders the current matrix with one row ``x`` and one column ``y``
(corner fixed to 1) chosen to maximize the new determinant, so every matrix
contains its predecessor as the upper-left block. Ties at a step give several
equally good children; following all of them yields a forest.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .border_form import BorderAssignment, build_border_form, eval_border_form
from .exact_linalg import BinaryMatrix, det_bareiss
from .search import TieBreakPolicy, enumerate_maximizers, maximize_fast


@dataclass(eq=False)
class GrowthNode:
    matrix: BinaryMatrix
    det: int
    parent: "GrowthNode | None" = None
    assignment: BorderAssignment | None = None
    #: number of maximizing borders at the step that produced this node
    tie_count: int | None = None
    children: list["GrowthNode"] = field(default_factory=list, repr=False)

    @property
    def depth(self) -> int:
        return self.matrix.n

    def lineage(self) -> list["GrowthNode"]:
        """Nodes from the root down to this one."""
        out = []
        node = self
        while node is not None:
            out.append(node)
            node = node.parent
        return out[::-1]


def root_node(matrix: BinaryMatrix) -> GrowthNode:
    return GrowthNode(matrix=matrix, det=det_bareiss(matrix))


def _child(node: GrowthNode, asg: BorderAssignment, value: int, ties: int) -> GrowthNode:
    return GrowthNode(
        matrix=node.matrix.bordered(asg.x, asg.y, 1),
        det=value,
        parent=node,
        assignment=asg,
        tie_count=ties,
    )


def grow_once(node: GrowthNode, policy=TieBreakPolicy.PAPER_LEX, threads: int = 1) -> GrowthNode:
    if node.det <= 0:
        raise ValueError(f"growth needs a positive determinant, got {node.det}")
    result = maximize_fast(build_border_form(node.matrix), policy=policy, threads=threads)
    return _child(node, result.chosen, result.value, result.tie_count)


def grow_sequence(start, steps: int, policy=TieBreakPolicy.PAPER_LEX, threads: int = 1) -> list[GrowthNode]:
    """The chain ``start, A_{n+1}, ..., A_{n+steps}``."""
    node = start if isinstance(start, GrowthNode) else root_node(start)
    if node.det <= 0:
        raise ValueError(f"start matrix has determinant {node.det}; growth needs det > 0")
    chain = [node]
    for _ in range(steps):
        chain.append(grow_once(chain[-1], policy, threads))
    return chain


@dataclass(frozen=True)
class BranchPolicy:
    """``first`` follows one maximizer, ``all`` every one, ``limit`` at most ``k`` per node."""

    kind: str = "first"
    k: int | None = None

    @classmethod
    def parse(cls, text: "str | BranchPolicy") -> "BranchPolicy":
        if isinstance(text, BranchPolicy):
            return text
        if text in ("first", "all"):
            return cls(text)
        m = re.fullmatch(r"limit[=(](\d+)\)?", text)
        if m and int(m.group(1)) >= 1:
            return cls("limit", int(m.group(1)))
        raise ValueError(f"unknown branch policy {text!r}")

    def __str__(self):
        return f"limit={self.k}" if self.kind == "limit" else self.kind


@dataclass
class SolutionForest:
    roots: list[GrowthNode]
    branch_policy: BranchPolicy
    dedupe: bool
    levels: list[list[GrowthNode]]
    truncated: bool = False

    def nodes(self) -> Iterator[GrowthNode]:
        for level in self.levels:
            yield from level

    def __len__(self):
        return sum(len(level) for level in self.levels)

    def leaves(self) -> list[GrowthNode]:
        return [node for node in self.nodes() if not node.children]

    def chains(self) -> list[list[GrowthNode]]:
        return [leaf.lineage() for leaf in self.leaves()]


def grow_forest(
    start,
    steps: int,
    branch_policy="all",
    cap: int = 10_000,
    dedupe: bool = True,
    threads: int = 1,
) -> SolutionForest:
    """Breadth-first expansion of tied maximizers.

    ``cap`` bounds the total number of nodes, roots included. Once a level
    cannot be expanded in full the forest is marked ``truncated`` and growth
    stops after that level, so a partial result is still deterministic.
    Children come in paper-lex order under their parent, parents in level order.
    """
    policy = BranchPolicy.parse(branch_policy)
    starts = [start] if isinstance(start, (BinaryMatrix, GrowthNode)) else list(start)
    roots = [s if isinstance(s, GrowthNode) else root_node(s) for s in starts]
    for r in roots:
        if r.det <= 0:
            raise ValueError(f"start matrix has determinant {r.det}; growth needs det > 0")
    if dedupe:
        roots = _dedupe(roots)
    if len(roots) > cap:
        roots = roots[:cap]
        return SolutionForest(roots, policy, dedupe, [roots], truncated=True)
    levels = [roots]
    budget = cap - len(roots)
    truncated = False
    for _ in range(steps):
        nxt: list[GrowthNode] = []
        for node in levels[-1]:
            if budget <= 0:
                truncated = True
                break
            kids, complete = _expand(node, policy, budget, threads)
            node.children.extend(kids)
            nxt.extend(kids)
            budget -= len(kids)
            if not complete:
                truncated = True
                break
        if dedupe:
            nxt = _dedupe(nxt)
        if nxt:
            levels.append(nxt)
        if truncated or not nxt:
            break
    return SolutionForest(roots, policy, dedupe, levels, truncated)


def _expand(node: GrowthNode, policy: BranchPolicy, budget: int, threads: int):
    """Children of ``node`` within ``budget``; the flag says whether none were dropped."""
    if policy.kind == "first":
        return [grow_once(node, threads=threads)], True
    want = policy.k if policy.kind == "limit" else None
    form = build_border_form(node.matrix)
    limit = budget if want is None else min(want, budget)
    found, total = enumerate_maximizers(form, limit, threads=threads)
    value = eval_border_form(form, found[0])
    kids = [_child(node, asg, value, total) for asg in found]
    complete = len(kids) == (total if want is None else min(want, total))
    return kids, complete


def _dedupe(nodes: Iterable[GrowthNode]) -> list[GrowthNode]:
    seen = set()
    out = []
    for node in nodes:
        if node.matrix not in seen:
            seen.add(node.matrix)
            out.append(node)
        elif node.parent is not None:
            node.parent.children.remove(node)
    return out


@dataclass(frozen=True)
class DivergenceReport:
    """First step where a grown chain departs from a reference matrix."""

    step: int
    tie_count: int | None
    computed: BinaryMatrix
    reference: BinaryMatrix
    reference_det: int
    reference_is_maximizer: bool

    def describe(self) -> str:
        lines = [
            f"divergence at n={self.step}: tie multiplicity {self.tie_count}, "
            f"reference block det {self.reference_det} "
            f"({'also a maximizer' if self.reference_is_maximizer else 'not a maximizer'})",
            "computed:",
            *self.computed.to_strings(),
            "reference:",
            *self.reference.to_strings(),
        ]
        return "\n".join(lines)


def compare_with_reference(chain: list[GrowthNode], reference: BinaryMatrix) -> DivergenceReport | None:
    """``None`` if every chain matrix is the matching upper-left block of ``reference``."""
    for node in chain:
        n = node.depth
        if n > reference.n:
            break
        block = reference.leading_block(n)
        if node.matrix != block:
            ref_det = det_bareiss(block)
            return DivergenceReport(
                step=n,
                tie_count=node.tie_count,
                computed=node.matrix,
                reference=block,
                reference_det=ref_det,
                reference_is_maximizer=ref_det == node.det,
            )
    return None
