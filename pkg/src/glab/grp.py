"""Finite groups with dense multiplication tables.

Elements are integer indices; each group carries its table, the
inversion permutation, the identity index, and readable element
names. Built-in families: cyclic, dihedral, symmetric (degree at most
4), direct products, and explicit audited Cayley tables.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .config import GROUP_AUDIT_LIMIT
from .errors import ConstructionError, ScaleError


# ---------------------------------------------------------------------------
# specs

@dataclass(frozen=True)
class CyclicGroup:
    n: int


@dataclass(frozen=True)
class DihedralGroup:
    """Symmetries of a regular n-gon; order 2n."""
    n: int


@dataclass(frozen=True)
class SymmetricGroup:
    """All permutations of n points, n at most 4 (order at most 24)."""
    n: int


@dataclass(frozen=True)
class ProductGroup:
    factors: tuple["GroupSpec", ...]


@dataclass(frozen=True)
class CayleyGroup:
    """Explicit multiplication table, audited at build time."""
    table: tuple[tuple[int, ...], ...]
    label: str = "cayley"


GroupSpec = Union[CyclicGroup, DihedralGroup, SymmetricGroup, ProductGroup, CayleyGroup]


def group_label(spec: GroupSpec) -> str:
    if isinstance(spec, CyclicGroup):
        return f"C{spec.n}"
    if isinstance(spec, DihedralGroup):
        return f"D{spec.n}"
    if isinstance(spec, SymmetricGroup):
        return f"S{spec.n}"
    if isinstance(spec, ProductGroup):
        return "x".join(group_label(f) for f in spec.factors)
    if isinstance(spec, CayleyGroup):
        return spec.label
    raise TypeError(f"not a group spec: {spec!r}")


# ---------------------------------------------------------------------------
# the Group object

class Group:
    """A finite group as a dense multiplication table.

    `mul` is an (order, order) int32 table, `inv` the inversion
    permutation, `identity` the index of the neutral element, and
    `names` a readable label per element.
    """

    def __init__(self, spec: GroupSpec, label: str, mul: np.ndarray,
                 identity: int, names: list[str]):
        self.spec = spec
        self.label = label
        self.mul = mul
        self.order = mul.shape[0]
        self.identity = int(identity)
        self.names = list(names)
        eq = mul == self.identity
        inv = np.argmax(eq, axis=1).astype(np.int32)
        if not eq[np.arange(self.order), inv].all():
            raise ConstructionError(f"{label}: table has an element with no inverse")
        self.inv = inv

    def m(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def i(self, x: int) -> int:
        return int(self.inv[x])

    @property
    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def __repr__(self) -> str:
        return f"Group({self.label}, order={self.order})"


# ---------------------------------------------------------------------------
# builders

def build_group(spec: GroupSpec) -> Group:
    if isinstance(spec, CyclicGroup):
        return _build_cyclic(spec)
    if isinstance(spec, DihedralGroup):
        return _build_dihedral(spec)
    if isinstance(spec, SymmetricGroup):
        return _build_symmetric(spec)
    if isinstance(spec, ProductGroup):
        return _build_product(spec)
    if isinstance(spec, CayleyGroup):
        return _build_cayley(spec)
    raise TypeError(f"not a group spec: {spec!r}")


def _build_cyclic(spec: CyclicGroup) -> Group:
    n = spec.n
    if n < 1:
        raise ConstructionError(f"cyclic order must be positive, got {n}")
    idx = np.arange(n, dtype=np.int64)
    mul = ((idx[:, None] + idx[None, :]) % n).astype(np.int32)
    names = ["e"] + [f"g^{k}" if k > 1 else "g" for k in range(1, n)]
    return Group(spec, group_label(spec), mul, 0, names)


def _build_dihedral(spec: DihedralGroup) -> Group:
    n = spec.n
    if n < 1:
        raise ConstructionError(f"dihedral parameter must be positive, got {n}")
    order = 2 * n
    # index j*n + i encodes r^i s^j; s r = r^(-1) s
    mul = np.zeros((order, order), dtype=np.int32)
    for j1 in range(2):
        for i1 in range(n):
            for j2 in range(2):
                for i2 in range(n):
                    i = (i1 + (i2 if j1 == 0 else -i2)) % n
                    j = (j1 + j2) % 2
                    mul[j1 * n + i1, j2 * n + i2] = j * n + i
    names = []
    for j in range(2):
        for i in range(n):
            rot = "e" if i == 0 else ("r" if i == 1 else f"r^{i}")
            if j == 0:
                names.append(rot)
            else:
                names.append("s" if i == 0 else f"{rot} s")
    return Group(spec, group_label(spec), mul, 0, names)


def _perm_cycles(p: tuple[int, ...]) -> str:
    """Cycle notation on 1-based points; identity prints as e."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        out.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
    return "".join(out) if out else "e"


def _build_symmetric(spec: SymmetricGroup) -> Group:
    n = spec.n
    if not 1 <= n <= 4:
        raise ConstructionError(
            f"symmetric degree must be between 1 and 4, got {n}")
    perms = list(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    order = len(perms)
    mul = np.zeros((order, order), dtype=np.int32)
    for a, pa in enumerate(perms):
        for b, pb in enumerate(perms):
            # composition applies the right factor first
            mul[a, b] = index[tuple(pa[pb[i]] for i in range(n))]
    names = [_perm_cycles(p) for p in perms]
    return Group(spec, group_label(spec), mul, 0, names)


def _build_product(spec: ProductGroup) -> Group:
    if not spec.factors:
        raise ConstructionError("product group needs at least one factor")
    groups = [build_group(f) for f in spec.factors]
    order = math.prod(g.order for g in groups)
    if order > GROUP_AUDIT_LIMIT:
        raise ScaleError(
            f"product group of order {order} exceeds the limit {GROUP_AUDIT_LIMIT}")
    idx = np.arange(order, dtype=np.int64)
    mul = np.zeros((order, order), dtype=np.int64)
    w = 1
    identity = 0
    for g in groups:
        comp = ((idx // w) % g.order).astype(np.int32)
        mul += g.mul[comp[:, None], comp[None, :]].astype(np.int64) * w
        identity += g.identity * w
        w *= g.order
    names = []
    for x in range(order):
        parts = []
        rem = x
        for g in groups:
            parts.append(g.names[rem % g.order])
            rem //= g.order
        names.append("(" + ", ".join(parts) + ")")
    return Group(spec, group_label(spec), mul.astype(np.int32), identity, names)


def _build_cayley(spec: CayleyGroup) -> Group:
    mul = np.array(spec.table, dtype=np.int32)
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
        raise ConstructionError(f"cayley table must be square, got shape {mul.shape}")
    order = mul.shape[0]
    if order < 1:
        raise ConstructionError("cayley table must be nonempty")
    if order > GROUP_AUDIT_LIMIT:
        raise ScaleError(
            f"cayley table of order {order} exceeds the limit {GROUP_AUDIT_LIMIT}")
    if mul.min() < 0 or mul.max() >= order:
        raise ConstructionError("cayley table entries out of range")
    ar = np.arange(order, dtype=np.int32)
    ids = [e for e in range(order)
           if np.array_equal(mul[e], ar) and np.array_equal(mul[:, e], ar)]
    if not ids:
        raise ConstructionError(f"cayley table {spec.label!r} has no identity element")
    names = [f"x{k}" for k in range(order)]
    names[ids[0]] = "e"
    group = Group(spec, spec.label, mul, ids[0], names)
    audit_group(group)
    return group


# ---------------------------------------------------------------------------
# audit and structure helpers

def audit_group(group: Group) -> None:
    """Exhaustive associativity/identity/inverse audit with witnesses."""
    order = group.order
    if order > GROUP_AUDIT_LIMIT:
        raise ScaleError(
            f"{group.label}: exhaustive group audit limited to {GROUP_AUDIT_LIMIT}")
    mul = group.mul
    e = group.identity
    ar = np.arange(order, dtype=np.int32)
    if not (np.array_equal(mul[e], ar) and np.array_equal(mul[:, e], ar)):
        raise ConstructionError(f"{group.label}: identity {e} does not act trivially")
    for b in range(order):
        left = mul[mul[:, b], :]
        right = mul[:, mul[b, :]]
        if not np.array_equal(left, right):
            a, c = map(int, np.argwhere(left != right)[0])
            raise ConstructionError(
                f"{group.label}: not associative at ({a}, {b}, {c}): "
                f"({a}*{b})*{c} = {int(left[a, c])}, a*(b*c) = {int(right[a, c])}")
    if not (mul[ar, group.inv] == e).all() or not (mul[group.inv, ar] == e).all():
        raise ConstructionError(f"{group.label}: inversion permutation broken")


def element_orders(group: Group) -> np.ndarray:
    """Multiplicative order of every element."""
    out = np.zeros(group.order, dtype=np.int64)
    for x in group.elements:
        k = 1
        acc = x
        while acc != group.identity:
            acc = group.m(acc, x)
            k += 1
        out[x] = k
    return out


def _generating_set(group: Group) -> list[int]:
    """Greedy small generating set."""
    gens: list[int] = []
    span = {group.identity}
    for x in group.elements:
        if x in span:
            continue
        gens.append(x)
        work = [x]
        while work:
            y = work.pop()
            for z in list(span):
                for w in (group.m(y, z), group.m(z, y)):
                    if w not in span:
                        span.add(w)
                        work.append(w)
            if y not in span:
                span.add(y)
        if len(span) == group.order:
            break
    return gens


def _extend_homomorphism(g: Group, h: Group, gens: list[int],
                         images: tuple[int, ...]) -> np.ndarray | None:
    """Grow gens -> images to a full map by word closure; None on conflict."""
    mapping = np.full(g.order, -1, dtype=np.int64)
    mapping[g.identity] = h.identity
    for x, y in zip(gens, images):
        if mapping[x] >= 0 and mapping[x] != y:
            return None
        mapping[x] = y
    frontier = [g.identity] + list(gens)
    while frontier:
        a = frontier.pop()
        for x, y in zip(gens, images):
            b = g.m(a, x)
            img = h.m(int(mapping[a]), y)
            if mapping[b] < 0:
                mapping[b] = img
                frontier.append(b)
            elif mapping[b] != img:
                return None
    if (mapping < 0).any():
        return None
    return mapping


def are_isomorphic(g: Group, h: Group) -> bool:
    """Exhaustive isomorphism test for desk-scale orders."""
    if g.order != h.order:
        return False
    og = element_orders(g)
    oh = element_orders(h)
    if sorted(og.tolist()) != sorted(oh.tolist()):
        return False
    gens = _generating_set(g)
    candidates = [np.flatnonzero(oh == og[x]).tolist() for x in gens]
    ar = np.arange(g.order)
    for images in itertools.product(*candidates):
        mapping = _extend_homomorphism(g, h, gens, images)
        if mapping is None:
            continue
        if not np.array_equal(np.sort(mapping), ar):
            continue
        if np.array_equal(mapping[g.mul], h.mul[np.ix_(mapping, mapping)]):
            return True
    return False
