"""Virtual modules over products of symmetric groups, stored as multiplicity
maps, and the coherent-continuation decompositions of the supported groups.

A shape (n_1, ..., n_d) fixes the factor degrees; zero-degree factors are
first class, carrying the empty diagram as their only label. The zero module
keeps its shape, so sums stay total on matching shapes.
"""

from collections import Counter
from functools import cache
from math import prod
from typing import Iterable, Mapping

from .diagrams import CosetSignature, Diagram, all_diagrams, check_diagram, format_diagram
from .errors import DegreeMismatchError, ShapeMismatchError
from .symreps import induce_outer, irrep_dimension

ModuleKey = tuple[Diagram, ...]


class ModuleDecomp:
    """Finitely supported multiplicity map from label tuples (one diagram per
    symmetric-group factor) to positive integers.

    Optional named summands can be attached as ``parts`` metadata; they are
    ignored by equality.
    """

    __slots__ = ("shape", "mults", "parts")

    def __init__(
        self,
        shape: Iterable[int],
        mults: Mapping[ModuleKey, int] | Iterable[tuple[ModuleKey, int]] = (),
        parts: Mapping[str, "ModuleDecomp"] | None = None,
    ) -> None:
        self.shape = tuple(int(s) for s in shape)
        if any(s < 0 for s in self.shape):
            raise ShapeMismatchError(f"factor degrees must be non-negative: {self.shape}")
        items = mults.items() if isinstance(mults, Mapping) else mults
        clean: dict[ModuleKey, int] = {}
        for key, m in items:
            key = self._check_key(key)
            m = int(m)
            if m < 0:
                raise ShapeMismatchError(f"multiplicities must be non-negative, got {m}")
            if m:
                clean[key] = clean.get(key, 0) + m
        self.mults = clean
        self.parts = dict(parts) if parts else {}

    def _check_key(self, key: Iterable[Iterable[int]]) -> ModuleKey:
        key = tuple(check_diagram(d) for d in key)
        if len(key) != len(self.shape) or any(
            sum(d) != s for d, s in zip(key, self.shape)
        ):
            raise ShapeMismatchError(f"key {key} does not match shape {self.shape}")
        return key

    def multiplicity(self, key: Iterable[Iterable[int]]) -> int:
        """Stored multiplicity of the label tuple, or 0."""
        return self.mults.get(self._check_key(key), 0)

    def dimension(self) -> int:
        """Total dimension: sum of mult times the product of factor dimensions."""
        return sum(
            m * prod(irrep_dimension(d) for d in key) for key, m in self.mults.items()
        )

    def entries(self) -> tuple[tuple[ModuleKey, int], ...]:
        """Entries with keys in decreasing lexicographic order."""
        return tuple((key, self.mults[key]) for key in sorted(self.mults, reverse=True))

    @property
    def is_zero(self) -> bool:
        return not self.mults

    def __add__(self, other: "ModuleDecomp") -> "ModuleDecomp":
        if not isinstance(other, ModuleDecomp):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeMismatchError(
                f"cannot add modules of shapes {self.shape} and {other.shape}"
            )
        out = Counter(self.mults)
        for key, m in other.mults.items():
            out[key] += m
        return ModuleDecomp(self.shape, out)

    def tensor(self, other: "ModuleDecomp") -> "ModuleDecomp":
        """External product: shapes concatenate, multiplicities multiply."""
        out = {}
        for k1, m1 in self.mults.items():
            for k2, m2 in other.mults.items():
                out[k1 + k2] = m1 * m2
        return ModuleDecomp(self.shape + other.shape, out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ModuleDecomp)
            and self.shape == other.shape
            and self.mults == other.mults
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = ", ".join(
            "(" + ",".join(format_diagram(d) for d in key) + f"): {m}"
            for key, m in self.entries()
        )
        return f"ModuleDecomp(shape={self.shape}, {{{body}}})"

    def to_json_obj(self) -> dict:
        """Canonical JSON form: shape, then entries sorted by key tuple."""
        return {
            "shape": list(self.shape),
            "mults": [
                {"key": [list(d) for d in key], "m": m} for key, m in self.entries()
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "ModuleDecomp":
        return cls(
            tuple(obj["shape"]),
            [
                (tuple(tuple(d) for d in entry["key"]), entry["m"])
                for entry in obj["mults"]
            ],
        )


def zero_module(shape: Iterable[int]) -> ModuleDecomp:
    return ModuleDecomp(shape)


def unit_module() -> ModuleDecomp:
    """The empty-shape module with a single entry, the tensor identity."""
    return ModuleDecomp((), {(): 1})


@cache
def matchings_module(r: int) -> ModuleDecomp:
    """Permutation module of S_{2r} on perfect matchings.

    This is the induction of the trivial character from the stabilizer of a
    fixed matching; its decomposition is every partition of 2r with all rows
    even, multiplicity one (cross-checked against the matchings oracle).
    """
    return ModuleDecomp(
        (2 * r,),
        {(nu,): 1 for nu in all_diagrams(2 * r) if all(p % 2 == 0 for p in nu)},
    )


@cache
def sign_induction_module(p: int, q: int) -> ModuleDecomp:
    """Sum over 0 <= k <= min(p, q) of the induction to S_{p+q} of the
    matchings module of rank k times sign on S_{p-k} times sign on S_{q-k}."""
    total: Counter[ModuleKey] = Counter()
    for k in range(min(p, q) + 1):
        columns = ((1,) * (p - k), (1,) * (q - k))
        for (tau,) in matchings_module(k).mults:
            for nu, c in induce_outer((tau, *columns)).items():
                total[(nu,)] += c
    return ModuleDecomp((p + q,), total)


@cache
def diagonal_module(r: int) -> ModuleDecomp:
    """Sum of label-pair diagonals over S_r x S_r: one copy of (a, a) for
    every label a of size r."""
    return ModuleDecomp((r, r), {(lam, lam): 1 for lam in all_diagrams(r)})


@cache
def block_matchings_first(p: int, q: int, r: int) -> ModuleDecomp:
    """Matchings module on a degree-r first factor tensored with the sign
    inductions on the remaining degree; the zero module of shape
    (r, p+q-r) when r is odd or min(p, q) < r/2."""
    shape = (r, p + q - r)
    if r % 2 or min(p, q) < r // 2:
        return zero_module(shape)
    half = r // 2
    return matchings_module(half).tensor(sign_induction_module(p - half, q - half))


@cache
def block_matchings_second(p: int, q: int, r: int) -> ModuleDecomp:
    """Mirror of block_matchings_first, with the matchings factor second and
    shape (p+q-r, r)."""
    shape = (p + q - r, r)
    if r % 2 or min(p, q) < r // 2:
        return zero_module(shape)
    half = r // 2
    return sign_induction_module(p - half, q - half).tensor(matchings_module(half))


def coh_u_cover(p: int, q: int, sig: CosetSignature) -> ModuleDecomp:
    """Coherent continuation module of the square-root-of-determinant double
    cover of U(p, q) at the coset with the given signature.

    The two block summands are attached as ``parts`` metadata under the tags
    ``genuine`` and ``non_genuine``; which block is which flips with the
    parity of p + q.
    """
    n_h, n_0 = sig
    if p + q != n_h + n_0:
        raise DegreeMismatchError(
            f"p + q = {p + q} does not match coset degree {n_h + n_0}"
        )
    first = block_matchings_first(p, q, n_h)
    second = block_matchings_second(p, q, n_0)
    if (p + q) % 2:
        parts = {"genuine": second, "non_genuine": first}
    else:
        parts = {"genuine": first, "non_genuine": second}
    total = first + second
    return ModuleDecomp(total.shape, total.mults, parts=parts)


def coh_su(p: int, q: int, sig: CosetSignature) -> ModuleDecomp:
    """Coherent continuation module of SU(p, q): the two block summands,
    plus two diagonal summands exactly when p = q = n_h = n_0."""
    n_h, n_0 = sig
    if p + q != n_h + n_0:
        raise DegreeMismatchError(
            f"p + q = {p + q} does not match coset degree {n_h + n_0}"
        )
    total = block_matchings_first(p, q, n_h) + block_matchings_second(p, q, n_0)
    if p == q == n_h == n_0:
        diag = diagonal_module(p)
        total = total + diag + diag
    return total


def coh_gl_complex(sig: CosetSignature) -> ModuleDecomp:
    """Coherent continuation module of the complex general linear group:
    the regular representation of S_{n_h} x S_{n_0}, i.e. one copy of
    (a, b, a, b) for every pair of labels."""
    n_h, n_0 = sig
    mults = {
        (a, b, a, b): 1 for a in all_diagrams(n_h) for b in all_diagrams(n_0)
    }
    return ModuleDecomp((n_h, n_0, n_h, n_0), mults)


def coh_sl_complex(sig: CosetSignature) -> ModuleDecomp:
    """Coherent continuation module of the complex special linear group:
    the general-linear module, plus one swapped copy (a, b, b, a) per label
    pair when n_h = n_0 (restriction is an isomorphism otherwise)."""
    n_h, n_0 = sig
    out = coh_gl_complex(sig)
    if n_h == n_0:
        swap = ModuleDecomp(
            (n_h, n_0, n_h, n_0),
            Counter(
                (a, b, b, a) for a in all_diagrams(n_h) for b in all_diagrams(n_0)
            ),
        )
        out = out + swap
    return out
