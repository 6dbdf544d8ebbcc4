"""Exact character theory of the symmetric groups.

Character values come from the Murnaghan-Nakayama border-strip recursion,
dimensions from the hook-length formula, and products of irreducibles from
the Littlewood-Richardson rule. Everything is integer arithmetic; rationals
appear only transiently inside inner products.

Irreducible representations of S_n are labeled by diagrams of size n, with
the one-row diagram the trivial representation and the one-column diagram
the sign representation.
"""

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial, prod
from pathlib import Path
from typing import Iterable, Iterator

from .diagrams import Diagram, all_diagrams, check_diagram, diagram_text, transpose
from .errors import DegreeMismatchError

IrrepLabel = Diagram


@cache
def centralizer_order(cls: Diagram) -> int:
    """Order of the centralizer of a permutation with cycle type cls."""
    z = 1
    for part, count in Counter(cls).items():
        z *= part**count * factorial(count)
    return z


def _strip_removals(label: Diagram, length: int) -> Iterator[tuple[Diagram, int]]:
    """Yield (smaller label, height) for every removable border strip.

    Works on the beta-set (first-column hook lengths): removing a strip of
    the given length moves one beta number down by that length, and the
    height is the number of beta numbers it jumps over.
    """
    nrows = len(label)
    beta = [label[i] + nrows - 1 - i for i in range(nrows)]
    present = set(beta)
    for b in beta:
        nb = b - length
        if nb < 0 or nb in present:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((present - {b}) | {nb}, reverse=True)
        smaller = (x - (nrows - 1 - j) for j, x in enumerate(newbeta))
        yield tuple(p for p in smaller if p), height


@cache
def _mn(label: Diagram, cls: Diagram) -> int:
    if not cls:
        return 1
    length, rest = cls[0], cls[1:]
    return sum((-1) ** h * _mn(smaller, rest) for smaller, h in _strip_removals(label, length))


def character_value(label: IrrepLabel, cls: Diagram) -> int:
    """Value of the irreducible character labeled by label at cycle type cls."""
    label = check_diagram(label)
    cls = check_diagram(cls)
    if sum(label) != sum(cls):
        raise DegreeMismatchError(
            f"label degree {sum(label)} differs from class degree {sum(cls)}"
        )
    return _mn(label, cls)


@cache
def irrep_dimension(label: IrrepLabel) -> int:
    """Dimension of the irreducible, by the hook-length formula."""
    n = sum(label)
    cols = transpose(label)
    hooks = prod(
        label[i] - j + cols[j] - i - 1
        for i in range(len(label))
        for j in range(label[i])
    )
    return factorial(n) // hooks


@dataclass(frozen=True)
class ClassFunction:
    """Integer-valued function on the conjugacy classes (partitions) of S_n,
    defined on every class."""

    degree: int
    values: dict[Diagram, int]

    def __post_init__(self) -> None:
        clean = {check_diagram(k): int(v) for k, v in self.values.items()}
        if set(clean) != set(all_diagrams(self.degree)):
            raise DegreeMismatchError(
                f"class function must be defined on every partition of {self.degree}"
            )
        object.__setattr__(self, "values", clean)

    def __call__(self, cls: Diagram) -> int:
        return self.values[cls]


def irreducible_character(label: IrrepLabel) -> ClassFunction:
    label = check_diagram(label)
    return ClassFunction(sum(label), dict(character_table(sum(label))[label]))


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction(n, {mu: 1 for mu in all_diagrams(n)})


def sign_character(n: int) -> ClassFunction:
    return ClassFunction(n, {mu: (-1) ** (n - len(mu)) for mu in all_diagrams(n)})


def regular_character(n: int) -> ClassFunction:
    values = {mu: 0 for mu in all_diagrams(n)}
    values[(1,) * n] = factorial(n)
    return ClassFunction(n, values)


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """Class-function inner product: (1/n!) sum over classes of size * f * g."""
    if f.degree != g.degree:
        raise DegreeMismatchError(
            f"cannot pair class functions of degrees {f.degree} and {g.degree}"
        )
    return sum(
        (
            Fraction(f.values[mu] * g.values[mu], centralizer_order(mu))
            for mu in all_diagrams(f.degree)
        ),
        start=Fraction(0),
    )


def lr_coefficient(lam: Diagram, mu: Diagram, nu: Diagram) -> int:
    """Littlewood-Richardson coefficient of nu in the product of lam and mu.

    Counts column-strict skew tableaux of shape nu/lam and content mu whose
    reverse reading word is a lattice word. The target size must match.
    """
    lam, mu, nu = check_diagram(lam), check_diagram(mu), check_diagram(nu)
    if sum(nu) != sum(lam) + sum(mu):
        raise DegreeMismatchError(
            f"target size {sum(nu)} differs from {sum(lam)} + {sum(mu)}"
        )
    return _lr(lam, mu, nu)


@cache
def _lr(lam: Diagram, mu: Diagram, nu: Diagram) -> int:
    nrows = len(nu)
    if len(lam) > nrows or any(lam[i] > nu[i] for i in range(len(lam))):
        return 0
    inner = tuple(lam[i] if i < len(lam) else 0 for i in range(nrows))
    # Reverse reading order: rows top to bottom, cells right to left. Both
    # neighbors that constrain a cell are then already filled, and the
    # lattice condition can be checked prefix by prefix.
    cells = [(i, j) for i in range(nrows) for j in range(nu[i] - 1, inner[i] - 1, -1)]
    nvals = len(mu)
    counts = [0] * nvals
    filling: dict[tuple[int, int], int] = {}

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = 1
        if i > 0 and j >= inner[i - 1]:
            lo = filling[i - 1, j] + 1
        hi = filling[i, j + 1] if j + 1 < nu[i] else nvals
        total = 0
        for v in range(lo, hi + 1):
            if counts[v - 1] >= mu[v - 1]:
                continue
            if v > 1 and counts[v - 2] <= counts[v - 1]:
                continue
            counts[v - 1] += 1
            filling[i, j] = v
            total += fill(idx + 1)
            counts[v - 1] -= 1
        return total

    return fill(0)


@cache
def _lr_expand(lam: Diagram, mu: Diagram) -> tuple[tuple[Diagram, int], ...]:
    total = sum(lam) + sum(mu)
    out = []
    for nu in all_diagrams(total):
        c = _lr(lam, mu, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


def lr_expand(lam: IrrepLabel, mu: IrrepLabel) -> dict[Diagram, int]:
    """Decomposition of the outer product of two irreducibles."""
    return dict(_lr_expand(check_diagram(lam), check_diagram(mu)))


def induce_outer(factors: Iterable[IrrepLabel]) -> dict[Diagram, int]:
    """Decomposition of the outer product of the given irreducibles in the
    symmetric group of the total degree; the empty sequence gives the unit."""
    result: dict[Diagram, int] = {(): 1}
    for label in factors:
        label = check_diagram(label)
        step: Counter[Diagram] = Counter()
        for kappa, m in result.items():
            for nu, c in _lr_expand(kappa, label):
                step[nu] += m * c
        result = dict(step)
    return result


# Per-degree memo. Builds are pure and idempotent, so a race between two
# writers publishes equal tables; readers only ever see complete tables.
_TABLES: dict[int, dict[IrrepLabel, dict[Diagram, int]]] = {}


def character_table(n: int, cache_dir: str | Path | None = None) -> dict[IrrepLabel, dict[Diagram, int]]:
    """Full character table of S_n, keyed [label][class] and memoized per
    degree.

    With cache_dir set, rows are loaded from and stored to one JSON file per
    degree (chartable_<n>.json): a map from the label's comma-separated form
    to its row of class values, labels and classes both in decreasing
    lexicographic order.
    """
    if n in _TABLES:
        return _TABLES[n]
    table = _load_table(n, cache_dir) if cache_dir is not None else None
    if table is None:
        labels = all_diagrams(n)
        table = {lam: {mu: _mn(lam, mu) for mu in labels} for lam in labels}
        if cache_dir is not None and n > 0:
            _store_table(n, table, cache_dir)
    _TABLES[n] = table
    return table


def _table_path(n: int, cache_dir: str | Path) -> Path:
    return Path(cache_dir) / f"chartable_{n}.json"


def _load_table(n: int, cache_dir: str | Path) -> dict[IrrepLabel, dict[Diagram, int]] | None:
    path = _table_path(n, cache_dir)
    if not path.is_file():
        return None
    try:
        raw = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    classes = all_diagrams(n)
    expected = [diagram_text(lam) for lam in classes]
    if not isinstance(raw, dict) or list(raw) != expected:
        return None
    table = {}
    for lam, key in zip(classes, expected):
        row = raw[key]
        if (
            not isinstance(row, list)
            or len(row) != len(classes)
            or not all(isinstance(v, int) for v in row)
        ):
            return None
        table[lam] = dict(zip(classes, row))
    return table


def _store_table(n: int, table: dict[IrrepLabel, dict[Diagram, int]], cache_dir: str | Path) -> None:
    path = _table_path(n, cache_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    classes = all_diagrams(n)
    payload = {diagram_text(lam): [table[lam][mu] for mu in classes] for lam in classes}
    path.write_text(json.dumps(payload))
