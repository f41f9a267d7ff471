"""Finite rings and modules as validated operation tables.

Elements are indices 0..order-1. A ring is (add, mul) tables plus zero/one;
a module is an add table plus an action table act[r][m], with act meaning
r.m for left modules and m.r for right modules. Every constructor output
is exhaustively validated; all values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .config import Caps, active_caps
from .errors import CapExceeded, InputError, PreconditionError, ValidationError
from .kernels import active as K

Table = tuple[tuple[int, ...], ...]

LEFT = "left"
RIGHT = "right"

_MAX_REPORTED = 16  # violations listed per validate() call before truncating


def _freeze(rows) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


def mixed_radix_encode(orders: Sequence[int], coords: Sequence[int]) -> int:
    """Big-endian mixed radix: the first coordinate is most significant."""
    if len(orders) != len(coords):
        raise InputError(f"expected {len(orders)} coordinates, got {len(coords)}")
    out = 0
    for o, c in zip(orders, coords):
        if not 0 <= c < o:
            raise InputError(f"coordinate {c} out of range for factor of order {o}")
        out = out * o + c
    return out


def mixed_radix_decode(orders: Sequence[int], index: int) -> tuple[int, ...]:
    coords = []
    rem = index
    for o in reversed(orders):
        rem, d = divmod(rem, o)
        coords.append(d)
    return tuple(reversed(coords))


def _all_coords(orders: Sequence[int]) -> list[tuple[int, ...]]:
    total = 1
    for o in orders:
        total *= o
    return [mixed_radix_decode(orders, i) for i in range(total)]


@dataclass(eq=False)
class FiniteRing:
    """Finite associative unital ring given by full operation tables."""

    order: int
    add: Table
    mul: Table
    zero: int
    one: int
    name: str = "ring"

    def __repr__(self):
        return f"FiniteRing({self.name}, order={self.order})"


@dataclass(eq=False)
class FiniteModule:
    """Finite one-sided module over a FiniteRing."""

    ring: FiniteRing
    side: str
    order: int
    add: Table
    zero: int
    act: Table
    name: str = "module"
    parts: tuple["FiniteModule", ...] | None = None  # set by direct_sum

    def __post_init__(self):
        self._handle = None
        self._lattice = None
        self._gens = None

    def handle(self):
        """Kernel-native tables, built once per module."""
        if self._handle is None:
            self._handle = K.prepare(self.add, self.act, self.zero)
        return self._handle

    def elements(self) -> range:
        return range(self.order)

    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def __repr__(self):
        return f"FiniteModule({self.name}, order={self.order}, {self.side} over {self.ring.name})"


@dataclass(eq=False)
class Submodule:
    """Subset of a module's carrier closed under addition and scalar action."""

    module: FiniteModule
    mask: int

    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.module.order) if (self.mask >> i) & 1)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, idx: int) -> bool:
        return bool((self.mask >> idx) & 1)

    def least_member(self) -> int:
        return (self.mask & -self.mask).bit_length() - 1

    def is_full(self) -> bool:
        return self.mask == self.module.full_mask()

    def is_zero(self) -> bool:
        return self.mask == (1 << self.module.zero)

    def __eq__(self, other):
        return (
            isinstance(other, Submodule)
            and other.module is self.module
            and other.mask == self.mask
        )

    def __hash__(self):
        return hash((id(self.module), self.mask))

    def __repr__(self):
        return f"Submodule({sorted(self.members())} of {self.module.name})"


@dataclass(eq=False)
class ModuleHom:
    """Map between modules over the same ring, given by the full image tuple."""

    source: FiniteModule
    target: FiniteModule
    images: tuple[int, ...]

    def apply(self, idx: int) -> int:
        return self.images[idx]

    def map_mask(self, mask: int) -> int:
        out = 0
        images = self.images
        while mask:
            low = mask & -mask
            out |= 1 << images[low.bit_length() - 1]
            mask ^= low
        return out

    def preimage_mask(self, mask: int) -> int:
        out = 0
        for i, v in enumerate(self.images):
            if (mask >> v) & 1:
                out |= 1 << i
        return out

    def image_mask(self) -> int:
        out = 0
        for v in self.images:
            out |= 1 << v
        return out

    def kernel_mask(self) -> int:
        z = self.target.zero
        out = 0
        for i, v in enumerate(self.images):
            if v == z:
                out |= 1 << i
        return out

    def is_surjective(self) -> bool:
        return self.image_mask() == self.target.full_mask()

    def is_injective(self) -> bool:
        return len(set(self.images)) == self.source.order

    def then(self, other: "ModuleHom") -> "ModuleHom":
        """Composite map: apply self first, then other."""
        if other.source is not self.target:
            raise PreconditionError("composition target/source mismatch")
        return ModuleHom(self.source, other.target, tuple(other.images[v] for v in self.images))

    def __eq__(self, other):
        return (
            isinstance(other, ModuleHom)
            and other.source is self.source
            and other.target is self.target
            and other.images == self.images
        )

    def __hash__(self):
        return hash((id(self.source), id(self.target), self.images))

    def __repr__(self):
        return f"ModuleHom({self.source.name} -> {self.target.name}, {self.images})"


def identity_hom(M: FiniteModule) -> ModuleHom:
    return ModuleHom(M, M, tuple(range(M.order)))


def zero_hom(M: FiniteModule, N: FiniteModule) -> ModuleHom:
    return ModuleHom(M, N, tuple(N.zero for _ in range(M.order)))


# ---------------------------------------------------------------------------
# validation


def _shape_violations(rows, nrows: int, ncols: int, what: str) -> list[str]:
    # rows may be rectangular (act tables are ring_order x module_order);
    # entries always index the column space.
    out = []
    if len(rows) != nrows:
        return [f"{what}: expected {nrows} rows, got {len(rows)}"]
    for i, row in enumerate(rows):
        if len(row) != ncols:
            return [f"{what}: row {i} has {len(row)} entries, expected {ncols}"]
        for j, v in enumerate(row):
            if not isinstance(v, int) or v < 0 or v >= ncols:
                out.append(f"{what}: entry ({i},{j}) = {v} out of range")
                if len(out) >= _MAX_REPORTED:
                    return out
    return out


def _abelian_group_violations(add, zero: int, what: str) -> list[str]:
    out = []
    v = K.assoc_violation(add)
    if v is not None:
        out.append(f"{what}: addition not associative at {v}")
    v = K.commut_violation(add)
    if v is not None:
        out.append(f"{what}: addition not commutative at {v}")
    v = K.identity_violation(add, zero)
    if v is not None:
        out.append(f"{what}: zero is not an additive identity at element {v}")
    v = K.missing_inverse(add, zero)
    if v is not None:
        out.append(f"{what}: element {v} has no additive inverse")
    return out


def ring_violations(R: FiniteRing) -> list[str]:
    out = _shape_violations(R.add, R.order, R.order, "add")
    out += _shape_violations(R.mul, R.order, R.order, "mul")
    if out:
        return out
    if not 0 <= R.zero < R.order:
        return [f"zero index {R.zero} out of range"]
    if not 0 <= R.one < R.order:
        return [f"one index {R.one} out of range"]
    out += _abelian_group_violations(R.add, R.zero, "ring")
    v = K.assoc_violation(R.mul)
    if v is not None:
        out.append(f"ring: multiplication not associative at {v}")
    v = K.identity_violation(R.mul, R.one)
    if v is not None:
        out.append(f"ring: one is not a two-sided identity at element {v}")
    v = K.distrib_violation(R.add, R.mul)
    if v is not None:
        side, a, b, c = v
        out.append(f"ring: {side} distributivity fails at ({a},{b},{c})")
    if R.order > 1 and R.zero == R.one:
        out.append("ring: zero equals one in a ring of order > 1")
    return out


def module_violations(M: FiniteModule) -> list[str]:
    if M.side not in (LEFT, RIGHT):
        return [f"side must be '{LEFT}' or '{RIGHT}', got {M.side!r}"]
    out = _shape_violations(M.add, M.order, M.order, "add")
    out += _shape_violations(M.act, M.ring.order, M.order, "act")
    if out:
        return out
    if not 0 <= M.zero < M.order:
        return [f"zero index {M.zero} out of range"]
    out += _abelian_group_violations(M.add, M.zero, "module")
    v = K.act_scalar_add_violation(M.act, M.ring.add, M.add)
    if v is not None:
        out.append(f"module: action not additive in the scalar at {v}")
    v = K.act_module_add_violation(M.act, M.add)
    if v is not None:
        out.append(f"module: action not additive in the element at {v}")
    v = K.act_assoc_violation(M.act, M.ring.mul, M.side == RIGHT)
    if v is not None:
        out.append(f"module: action incompatible with ring multiplication at {v}")
    v = K.act_unital_violation(M.act, M.ring.one)
    if v is not None:
        out.append(f"module: one does not act as identity at element {v}")
    return out


def submodule_violations(N: Submodule) -> list[str]:
    M = N.module
    if N.mask <= 0 or N.mask >> M.order:
        return ["submodule: mask out of carrier range"]
    out = []
    if not (N.mask >> M.zero) & 1:
        out.append("submodule: does not contain zero")
    members = N.members()
    add = M.add
    for x in members:
        row = add[x]
        for y in members:
            if not (N.mask >> row[y]) & 1:
                out.append(f"submodule: not closed under addition at ({x},{y})")
                if len(out) >= _MAX_REPORTED:
                    return out
    for r in range(M.ring.order):
        row = M.act[r]
        for x in members:
            if not (N.mask >> row[x]) & 1:
                out.append(f"submodule: not closed under scalar {r} at element {x}")
                if len(out) >= _MAX_REPORTED:
                    return out
    return out


def hom_violations(f: ModuleHom) -> list[str]:
    M, N = f.source, f.target
    if M.ring is not N.ring:
        return ["hom: source and target live over different rings"]
    if M.side != N.side:
        return ["hom: source and target have different sides"]
    if len(f.images) != M.order:
        return [f"hom: expected {M.order} images, got {len(f.images)}"]
    out = []
    for v in f.images:
        if not 0 <= v < N.order:
            return [f"hom: image {v} out of target range"]
    if f.images[M.zero] != N.zero:
        out.append("hom: does not send zero to zero")
    addm, addn = M.add, N.add
    img = f.images
    for x in range(M.order):
        rowm = addm[x]
        ix = img[x]
        for y in range(M.order):
            if img[rowm[y]] != addn[ix][img[y]]:
                out.append(f"hom: not additive at ({x},{y})")
                if len(out) >= _MAX_REPORTED:
                    return out
    for r in range(M.ring.order):
        actm, actn = M.act[r], N.act[r]
        for x in range(M.order):
            if img[actm[x]] != actn[img[x]]:
                out.append(f"hom: not linear at scalar {r}, element {x}")
                if len(out) >= _MAX_REPORTED:
                    return out
    return out


def validate(x) -> list[str]:
    """Exhaustive invariant check; returns the (possibly empty) violation list."""
    if isinstance(x, FiniteRing):
        return ring_violations(x)
    if isinstance(x, FiniteModule):
        return module_violations(x)
    if isinstance(x, Submodule):
        return submodule_violations(x)
    if isinstance(x, ModuleHom):
        return hom_violations(x)
    raise InputError(f"cannot validate object of type {type(x).__name__}")


def _checked(obj):
    violations = validate(obj)
    if violations:
        raise ValidationError(violations)
    return obj


def _check_cap(order: int, caps: Caps | None, what: str):
    caps = caps or active_caps()
    if order > caps.max_elements:
        raise CapExceeded(f"{what} elements", caps.max_elements, needed=order)


# ---------------------------------------------------------------------------
# ring constructors


def cyclic_ring(n: int, caps: Caps | None = None) -> FiniteRing:
    """Integers mod n with the canonical residue indexing."""
    if n < 1:
        raise InputError(f"cyclic ring order must be >= 1, got {n}")
    _check_cap(n, caps, "ring")
    add = _freeze([[(i + j) % n for j in range(n)] for i in range(n)])
    mul = _freeze([[(i * j) % n for j in range(n)] for i in range(n)])
    return _checked(FiniteRing(n, add, mul, 0, 1 % n, name=f"cyclic({n})"))


def _matrix_tables(base: FiniteRing, size: int, positions: list[tuple[int, int]], caps, name: str):
    orders = [base.order] * len(positions)
    order = base.order ** len(positions)
    _check_cap(order, caps, "ring")
    coords = _all_coords(orders)
    pos_index = {p: i for i, p in enumerate(positions)}
    badd, bmul, bzero = base.add, base.mul, base.zero

    def entry(c, r, col):
        i = pos_index.get((r, col))
        return bzero if i is None else c[i]

    add_rows = []
    mul_rows = []
    for ca in coords:
        arow = []
        mrow = []
        for cb in coords:
            arow.append(mixed_radix_encode(orders, [badd[a][b] for a, b in zip(ca, cb)]))
            prod = []
            for (r, col) in positions:
                acc = bzero
                for t in range(size):
                    acc = badd[acc][bmul[entry(ca, r, t)][entry(cb, t, col)]]
                prod.append(acc)
            mrow.append(mixed_radix_encode(orders, prod))
        add_rows.append(arow)
        mul_rows.append(mrow)
    zero = mixed_radix_encode(orders, [bzero] * len(positions))
    one_coords = [base.one if r == c else bzero for (r, c) in positions]
    one = mixed_radix_encode(orders, one_coords)
    return _checked(FiniteRing(order, _freeze(add_rows), _freeze(mul_rows), zero, one, name=name))


def matrix_ring(base: FiniteRing, size: int, caps: Caps | None = None) -> FiniteRing:
    """size x size matrices over base, indexed row-major mixed-radix over entries."""
    if size < 1:
        raise InputError("matrix size must be >= 1")
    positions = [(r, c) for r in range(size) for c in range(size)]
    return _matrix_tables(base, size, positions, caps, f"matrix({base.name},{size})")


def triangular_ring(base: FiniteRing, size: int, caps: Caps | None = None) -> FiniteRing:
    """Upper-triangular size x size matrices over base."""
    if size < 1:
        raise InputError("matrix size must be >= 1")
    positions = [(r, c) for r in range(size) for c in range(size) if c >= r]
    return _matrix_tables(base, size, positions, caps, f"triangular({base.name},{size})")


def product_ring(factors: Sequence[FiniteRing], caps: Caps | None = None) -> FiniteRing:
    """Direct product with componentwise operations, mixed-radix over factors."""
    if not factors:
        raise InputError("product ring needs at least one factor")
    orders = [F.order for F in factors]
    order = 1
    for o in orders:
        order *= o
    _check_cap(order, caps, "ring")
    coords = _all_coords(orders)
    add_rows = []
    mul_rows = []
    for ca in coords:
        arow = []
        mrow = []
        for cb in coords:
            arow.append(mixed_radix_encode(orders, [F.add[a][b] for F, a, b in zip(factors, ca, cb)]))
            mrow.append(mixed_radix_encode(orders, [F.mul[a][b] for F, a, b in zip(factors, ca, cb)]))
        add_rows.append(arow)
        mul_rows.append(mrow)
    zero = mixed_radix_encode(orders, [F.zero for F in factors])
    one = mixed_radix_encode(orders, [F.one for F in factors])
    name = f"product({','.join(F.name for F in factors)})"
    return _checked(FiniteRing(order, _freeze(add_rows), _freeze(mul_rows), zero, one, name=name))


def tables_ring(add, mul, one: int, name: str = "tables", caps: Caps | None = None) -> FiniteRing:
    """Ring from raw tables; the additive identity is located by scan."""
    order = len(add)
    _check_cap(order, caps, "ring")
    add = _freeze(add)
    mul = _freeze(mul)
    zero = None
    for e in range(order):
        if all(add[e][j] == j for j in range(order)):
            zero = e
            break
    if zero is None:
        raise ValidationError(["ring: add table has no additive identity"])
    return _checked(FiniteRing(order, add, mul, zero, one, name=name))


def ring_from_spec(spec: dict, caps: Caps | None = None) -> FiniteRing:
    """Build a ring from a description dict (the JSON schema used by the CLI)."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise InputError("ring spec must be an object with a 'kind' field")
    kind = spec["kind"]
    if kind == "cyclic":
        if "n" not in spec:
            raise InputError("cyclic ring spec needs 'n'")
        return cyclic_ring(int(spec["n"]), caps)
    if kind == "matrix":
        return matrix_ring(ring_from_spec(spec["base"], caps), int(spec["size"]), caps)
    if kind == "triangular":
        return triangular_ring(ring_from_spec(spec["base"], caps), int(spec["size"]), caps)
    if kind == "product":
        factors = [ring_from_spec(s, caps) for s in spec["factors"]]
        return product_ring(factors, caps)
    if kind == "tables":
        return tables_ring(spec["add"], spec["mul"], int(spec["one"]), spec.get("name", "tables"), caps)
    raise InputError(f"unknown ring kind {kind!r}")


def opposite_ring(R: FiniteRing) -> FiniteRing:
    """Same carrier with reversed multiplication."""
    mul = _freeze([[R.mul[b][a] for b in range(R.order)] for a in range(R.order)])
    return _checked(FiniteRing(R.order, R.add, mul, R.zero, R.one, name=f"{R.name}^op"))


# ---------------------------------------------------------------------------
# module constructors


def regular_module(R: FiniteRing, side: str = LEFT) -> FiniteModule:
    """The ring acting on itself; left action r.m = rm, right action m.r = mr."""
    if side == LEFT:
        act = R.mul
    elif side == RIGHT:
        act = _freeze([[R.mul[m][r] for m in range(R.order)] for r in range(R.order)])
    else:
        raise InputError(f"side must be '{LEFT}' or '{RIGHT}'")
    return _checked(
        FiniteModule(R, side, R.order, R.add, R.zero, act, name=f"{R.name}[{side}]")
    )


def direct_sum(
    parts: Sequence[FiniteModule],
    *,
    ring: FiniteRing | None = None,
    side: str = LEFT,
    name: str | None = None,
    caps: Caps | None = None,
) -> FiniteModule:
    """Componentwise sum on the mixed-radix product carrier."""
    if parts:
        ring = parts[0].ring
        side = parts[0].side
        for p in parts[1:]:
            if p.ring is not ring:
                raise PreconditionError("direct sum parts must share one ring instance")
            if p.side != side:
                raise PreconditionError("direct sum parts must share one side")
    elif ring is None:
        raise InputError("empty direct sum needs an explicit ring")
    orders = [p.order for p in parts]
    order = 1
    for o in orders:
        order *= o
    _check_cap(order, caps, "module")
    coords = _all_coords(orders)
    add_rows = []
    for ca in coords:
        row = [
            mixed_radix_encode(orders, [p.add[a][b] for p, a, b in zip(parts, ca, cb)])
            for cb in coords
        ]
        add_rows.append(row)
    act_rows = []
    for r in range(ring.order):
        act_rows.append(
            [mixed_radix_encode(orders, [p.act[r][a] for p, a in zip(parts, c)]) for c in coords]
        )
    zero = mixed_radix_encode(orders, [p.zero for p in parts])
    if name is None:
        name = "(" + " (+) ".join(p.name for p in parts) + ")" if parts else "zero"
    M = FiniteModule(ring, side, order, _freeze(add_rows), zero, _freeze(act_rows), name=name)
    M.parts = tuple(parts)
    return _checked(M)


def direct_sum_maps(M: FiniteModule) -> tuple[list[ModuleHom], list[ModuleHom]]:
    """Canonical embeddings and projections of a direct_sum module."""
    if M.parts is None:
        raise PreconditionError("module was not built by direct_sum")
    orders = [p.order for p in M.parts]
    embeds = []
    projs = []
    for i, p in enumerate(M.parts):
        emb = []
        for x in range(p.order):
            coords = [q.zero for q in M.parts]
            coords[i] = x
            emb.append(mixed_radix_encode(orders, coords))
        embeds.append(ModuleHom(p, M, tuple(emb)))
        projs.append(ModuleHom(M, p, tuple(mixed_radix_decode(orders, m)[i] for m in range(M.order))))
    return embeds, projs


def quotient_module(
    M: FiniteModule, N: Submodule | int, name: str | None = None
) -> tuple[FiniteModule, ModuleHom]:
    """Quotient by a submodule, cosets labeled by least member, plus the projection."""
    mask = N.mask if isinstance(N, Submodule) else N
    sub = N if isinstance(N, Submodule) else Submodule(M, mask)
    bad = submodule_violations(sub)
    if bad:
        raise PreconditionError("quotient by a non-submodule: " + "; ".join(bad))
    members = sub.members()
    label = [-1] * M.order
    reps = []
    for x in range(M.order):
        if label[x] >= 0:
            continue
        reps.append(x)
        row = M.add[x]
        for nmem in members:
            label[row[nmem]] = x
    idx = {rep: i for i, rep in enumerate(reps)}
    q = len(reps)
    add_rows = [[idx[label[M.add[a][b]]] for b in reps] for a in reps]
    act_rows = [[idx[label[M.act[r][a]]] for a in reps] for r in range(M.ring.order)]
    zero = idx[label[M.zero]]
    if name is None:
        name = f"{M.name}/[{q}]"
    Q = FiniteModule(M.ring, M.side, q, _freeze(add_rows), zero, _freeze(act_rows), name=name)
    _checked(Q)
    proj = ModuleHom(M, Q, tuple(idx[label[x]] for x in range(M.order)))
    return Q, proj


def submodule_as_module(M: FiniteModule, N: Submodule | int) -> tuple[FiniteModule, ModuleHom]:
    """A submodule relabeled as a standalone module, plus its embedding."""
    mask = N.mask if isinstance(N, Submodule) else N
    members = [i for i in range(M.order) if (mask >> i) & 1]
    idx = {m: i for i, m in enumerate(members)}
    add_rows = [[idx[M.add[a][b]] for b in members] for a in members]
    act_rows = [[idx[M.act[r][a]] for a in members] for r in range(M.ring.order)]
    S = FiniteModule(
        M.ring,
        M.side,
        len(members),
        _freeze(add_rows),
        idx[M.zero],
        _freeze(act_rows),
        name=f"{M.name}|{len(members)}",
    )
    _checked(S)
    return S, ModuleHom(S, M, tuple(members))


def generated_mask(M: FiniteModule, gens: Iterable[int]) -> int:
    """Mask of the least submodule containing the given element indices."""
    seed = 0
    for g in gens:
        if not 0 <= g < M.order:
            raise InputError(f"generator index {g} out of range")
        seed |= 1 << g
    return K.closure_mask(M.handle(), seed)


def module_from_spec(R: FiniteRing, spec: dict, caps: Caps | None = None) -> FiniteModule:
    """Build a module over R from a description dict (the CLI JSON schema)."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise InputError("module spec must be an object with a 'kind' field")
    kind = spec["kind"]
    if kind == "regular":
        return regular_module(R, spec.get("side", LEFT))
    if kind == "quotient":
        base = module_from_spec(R, spec["of"], caps)
        mask = generated_mask(base, spec.get("by", []))
        Q, _ = quotient_module(base, mask)
        return Q
    if kind == "direct_sum":
        parts = [module_from_spec(R, s, caps) for s in spec["parts"]]
        return direct_sum(parts, ring=R, caps=caps)
    raise InputError(f"unknown module kind {kind!r}")


def greedy_generators(M: FiniteModule) -> tuple[int, ...]:
    """Small generating set: repeatedly add the element with the largest
    closure gain, ties broken by least index. Cached on the module."""
    if M._gens is None:
        handle = M.handle()
        full = M.full_mask()
        cur = 1 << M.zero
        gens = []
        while cur != full:
            best_x = -1
            best_mask = 0
            best_gain = -1
            for x in range(M.order):
                if (cur >> x) & 1:
                    continue
                grown = K.sum_mask(handle, cur, K.cyclic_mask(handle, x))
                gain = grown.bit_count()
                if gain > best_gain:
                    best_x, best_mask, best_gain = x, grown, gain
            gens.append(best_x)
            cur = best_mask
        M._gens = tuple(gens)
    return M._gens


def module_element(M: FiniteModule, spec) -> int:
    """Element index from a raw index, or from a coordinate vector for direct sums."""
    if isinstance(spec, int):
        if not 0 <= spec < M.order:
            raise InputError(f"element index {spec} out of range")
        return spec
    if isinstance(spec, (list, tuple)):
        if M.parts is None:
            raise InputError("coordinate vectors only apply to direct_sum modules")
        return mixed_radix_encode([p.order for p in M.parts], list(spec))
    raise InputError(f"cannot interpret element spec {spec!r}")
