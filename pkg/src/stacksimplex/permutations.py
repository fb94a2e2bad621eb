"""Stack-sorting passes, orbits, and suffix structure of permutations.

Permutations of {1, ..., n} are stored in one-line notation.  A single
pass of the classic stack-sorting procedure runs the entries through a
stack that is kept strictly decreasing; iterating the pass sorts every
permutation within n - 1 rounds.  The chain of iterates down to the
identity is the sorting orbit, and the number of rounds actually needed
is the sortability index.  The helpers below classify maximal monotone
suffixes, which bound the index, and recognise the extremal permutations
that end with n, 1 (the ones whose index is exactly n - 1).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import EmptyPermutation, MalformedToken, NotABijection, TooShort

__all__ = [
    "Permutation",
    "SortOrbit",
    "SuffixDecomposition",
    "SortabilityBound",
    "parse_permutation",
    "identity",
    "all_permutations",
    "ln1_permutations",
    "two_ln1_permutations",
    "stack_sort_pass",
    "sort_orbit",
    "sortability_index",
    "suffix_decompose",
    "predicted_sortability_bound",
    "fixed_suffix_length",
    "is_ln1",
    "is_2ln1",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    >>> Permutation((2, 3, 1)).n
    3
    >>> print(Permutation((2, 3, 1)))
    2 3 1
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise EmptyPermutation("a permutation needs at least one entry")
        if set(self.entries) != set(range(1, n + 1)):
            raise NotABijection(
                f"entries {self.entries} are not a bijection onto 1..{n}"
            )

    @property
    def n(self) -> int:
        return len(self.entries)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.entries, start=1))

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.entries)


def identity(n: int) -> Permutation:
    """The identity permutation of {1, ..., n}."""
    return Permutation(tuple(range(1, n + 1)))


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation from a string.

    Entries may be separated by whitespace or commas.  A single
    contiguous digit string is read one digit per entry, which is only
    unambiguous while every value is at most 9; larger permutations must
    use separators.

    >>> parse_permutation("2 3 1").entries
    (2, 3, 1)
    >>> parse_permutation("231").entries
    (2, 3, 1)
    >>> parse_permutation("10,2,9,8,7,6,5,4,3,1").n
    10
    """
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    if not tokens:
        raise EmptyPermutation("no entries found in permutation string")
    if len(tokens) == 1 and tokens[0].isdigit() and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    values = []
    for token in tokens:
        if not token.isdigit() or int(token) < 1:
            raise MalformedToken(f"not a positive integer: {token!r}")
        values.append(int(token))
    return Permutation(tuple(values))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All permutations of {1, ..., n} in lexicographic order."""
    for entries in itertools.permutations(range(1, n + 1)):
        yield Permutation(entries)


def ln1_permutations(n: int) -> Iterator[Permutation]:
    """Permutations ending with n, 1, in lexicographic order (n >= 2)."""
    if n < 2:
        raise TooShort("permutations ending with n, 1 need n >= 2")
    for middle in itertools.permutations(range(2, n)):
        yield Permutation(middle + (n, 1))


def two_ln1_permutations(n: int) -> Iterator[Permutation]:
    """Permutations beginning with 2 and ending with n, 1 (n >= 3)."""
    if n < 3:
        raise TooShort("permutations starting 2 and ending n, 1 need n >= 3")
    for middle in itertools.permutations(range(3, n)):
        yield Permutation((2,) + middle + (n, 1))


def stack_sort_pass(p: Permutation) -> Permutation:
    """One pass of the stack-sorting procedure.

    Entries are pushed onto a stack; before each push, every stacked
    value smaller than the incoming one is popped to the output, so the
    stack stays strictly decreasing.  The stack is drained at the end.

    >>> print(stack_sort_pass(Permutation((2, 3, 1))))
    2 1 3
    >>> print(stack_sort_pass(Permutation((2, 4, 5, 1, 3, 6, 7))))
    2 4 1 3 5 6 7
    """
    out: list[int] = []
    stack: list[int] = []
    for value in p.entries:
        while stack and value > stack[-1]:
            out.append(stack.pop())
        stack.append(value)
    while stack:
        out.append(stack.pop())
    return Permutation(tuple(out))


@dataclass(frozen=True)
class SortOrbit:
    """The chain p, s(p), s(s(p)), ..., identity under stack-sorting passes.

    ``index`` is the number of passes needed to reach the identity,
    which is also ``len(chain) - 1``.
    """

    chain: tuple[Permutation, ...]
    index: int


def sort_orbit(p: Permutation) -> SortOrbit:
    """Iterate stack-sorting passes until the identity appears.

    >>> [str(q) for q in sort_orbit(Permutation((3, 2, 4, 1))).chain]
    ['3 2 4 1', '2 3 1 4', '2 1 3 4', '1 2 3 4']
    """
    chain = [p]
    while not chain[-1].is_identity():
        chain.append(stack_sort_pass(chain[-1]))
    return SortOrbit(tuple(chain), len(chain) - 1)


def sortability_index(p: Permutation) -> int:
    """Least k with s^k(p) = identity.

    >>> sortability_index(Permutation((7, 5, 4, 1, 6, 3, 2)))
    3
    """
    return sort_orbit(p).index


@dataclass(frozen=True)
class SuffixDecomposition:
    """Split p = head + tail with tail the maximal monotone suffix.

    ``exact`` records whether the sortability bound this split yields
    (len(head) for an ascending tail, len(head) + 1 for a descending
    one) is attained exactly.
    """

    head: tuple[int, ...]
    tail: tuple[int, ...]
    direction: str
    exact: bool


def suffix_decompose(p: Permutation, direction: str) -> SuffixDecomposition:
    """Split off the maximal strictly ascending or descending suffix.

    The tail cannot be extended one entry to the left without breaking
    monotonicity.  An ascending tail means p is len(head)-stack-sortable,
    exactly so when the head ends with its largest value and the tail
    begins with 1.  A descending tail means p is
    (len(head) + 1)-stack-sortable, exactly so when the tail runs from n
    down to 1's position, i.e. begins with n and ends with 1 (and n >= 2,
    since the identity of length 1 needs no pass at all).

    >>> d = suffix_decompose(Permutation((2, 4, 5, 1, 3, 6, 7)), "ascending")
    >>> d.head, d.tail, d.exact
    ((2, 4, 5), (1, 3, 6, 7), True)
    """
    if direction not in ("ascending", "descending"):
        raise ValueError(f"direction must be ascending or descending: {direction!r}")
    entries = p.entries
    n = p.n
    i = n - 1
    if direction == "ascending":
        while i > 0 and entries[i - 1] < entries[i]:
            i -= 1
    else:
        while i > 0 and entries[i - 1] > entries[i]:
            i -= 1
    head, tail = entries[:i], entries[i:]
    if direction == "ascending":
        exact = (not head or head[-1] == max(head)) and tail[0] == 1
    else:
        exact = n >= 2 and tail[0] == n and tail[-1] == 1
    return SuffixDecomposition(head, tail, direction, exact)


class SortabilityBound(NamedTuple):
    bound: int
    exact: bool


def predicted_sortability_bound(p: Permutation) -> SortabilityBound:
    """Upper bound on the sortability index from both suffix splits.

    Takes the better of the ascending bound len(head) and the descending
    bound len(head) + 1; ``exact`` is true when some direction attaining
    the minimum satisfies its exactness condition, in which case the
    bound equals the index.

    >>> predicted_sortability_bound(Permutation((2, 4, 5, 1, 3, 6, 7)))
    SortabilityBound(bound=3, exact=True)
    >>> predicted_sortability_bound(Permutation((1, 2, 3)))
    SortabilityBound(bound=0, exact=True)
    """
    asc = suffix_decompose(p, "ascending")
    desc = suffix_decompose(p, "descending")
    asc_bound = len(asc.head)
    desc_bound = len(desc.head) + 1
    bound = min(asc_bound, desc_bound)
    exact = (asc_bound == bound and asc.exact) or (desc_bound == bound and desc.exact)
    return SortabilityBound(bound, exact)


def fixed_suffix_length(p: Permutation) -> int:
    """Length of the longest suffix fixed pointwise (p_k = k).

    Strictly increases under a stack-sorting pass until the whole
    permutation is fixed.

    >>> fixed_suffix_length(Permutation((2, 1, 3, 4)))
    2
    """
    entries = p.entries
    count = 0
    for k in range(p.n, 0, -1):
        if entries[k - 1] != k:
            break
        count += 1
    return count


def is_ln1(p: Permutation) -> bool:
    """Whether p ends with n, 1; such p have sortability index exactly n - 1.

    >>> is_ln1(Permutation((2, 3, 4, 1)))
    True
    >>> is_ln1(Permutation((2, 3, 1, 4)))
    False
    """
    if p.n < 2:
        raise TooShort("ending with n, 1 needs n >= 2")
    return p.entries[-2] == p.n and p.entries[-1] == 1


def is_2ln1(p: Permutation) -> bool:
    """Whether p begins with 2 and ends with n, 1.

    >>> is_2ln1(Permutation((2, 3, 4, 1)))
    True
    >>> is_2ln1(Permutation((3, 2, 4, 1)))
    False
    >>> is_2ln1(Permutation((2, 3, 5, 4, 1)))
    False
    """
    if p.n < 3:
        raise TooShort("starting with 2 and ending with n, 1 needs n >= 3")
    return p.entries[0] == 2 and is_ln1(p)
