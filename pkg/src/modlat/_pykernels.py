"""Pure-Python twins of the compiled kernels.

Same functions, same outputs, same canonical orders as modlat._kernels;
only the speed differs. Element sets cross this boundary as int bitmasks
(bit i set = element index i is a member).
"""

from .errors import CapExceeded


class Tables:
    """Operation tables of one module in kernel-native form.

    add is order x order, act is ring_order x order; both row-major.
    For the regular left module of a ring, act is the ring's mul table.
    """

    __slots__ = ("n", "k", "add", "act", "zero")

    def __init__(self, add, act, zero):
        self.add = [list(row) for row in add]
        self.act = [list(row) for row in act]
        self.n = len(self.add)
        self.k = len(self.act)
        self.zero = zero


def prepare(add, act, zero):
    return Tables(add, act, zero)


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def cyclic_mask(t, x):
    """Members of the cyclic submodule generated by x: all scalar multiples."""
    m = 0
    for row in t.act:
        m |= 1 << row[x]
    return m


def sum_mask(t, a, b):
    """Pointwise sum set of two additively closed masks (their join)."""
    add = t.add
    out = 0
    for x in iter_bits(a):
        row = add[x]
        for y in iter_bits(b):
            out |= 1 << row[y]
    return out


def closure_mask(t, seed):
    """Least submodule containing the seed mask."""
    out = 1 << t.zero
    for x in iter_bits(seed):
        if not (out >> x) & 1:
            out = sum_mask(t, out, cyclic_mask(t, x))
    return out


def all_submodule_masks(t, cap):
    """Every submodule as a mask, sorted by (cardinality, mask value).

    Seeds with all cyclic submodules and closes under pairwise sum; every
    submodule is a sum of the cyclic submodules it contains, so the closure
    is complete without touching non-submodule subsets.
    """
    seeds = sorted({cyclic_mask(t, x) for x in range(t.n)})
    nodes = set(seeds)
    if len(nodes) > cap:
        raise CapExceeded("lattice nodes", cap, needed=len(nodes))
    frontier = list(seeds)
    while frontier:
        cur = frontier.pop()
        for s in seeds:
            j = sum_mask(t, cur, s)
            if j not in nodes:
                if len(nodes) >= cap:
                    raise CapExceeded("lattice nodes", cap)
                nodes.add(j)
                frontier.append(j)
    return sorted(nodes, key=lambda m: (m.bit_count(), m))


def enumerate_homs(src, dst, gens, cap):
    """All additive, scalar-linear maps src -> dst as full image tuples.

    gens must generate src. Candidate images are explored in ascending
    element order per generator, so the output order is deterministic.
    Raises CapExceeded when more than cap maps exist.
    """
    n = src.n
    img = [-1] * n
    img[src.zero] = dst.zero
    elems = [src.zero]
    out = []
    k = src.k
    sadd, sact = src.add, src.act
    dadd, dact = dst.add, dst.act
    m_gens = len(gens)

    def attempt(g, y, base_len):
        # Extend the map from the current submodule S to S + Rg, forcing
        # f(s + r*g) = f(s) + r*y and checking every representation.
        for r in range(k):
            rg = sact[r][g]
            ry = dact[r][y]
            for idx in range(base_len):
                s = elems[idx]
                z = sadd[s][rg]
                v = dadd[img[s]][ry]
                w = img[z]
                if w < 0:
                    img[z] = v
                    elems.append(z)
                elif w != v:
                    return False
        return True

    def rollback(base_len):
        for z in elems[base_len:]:
            img[z] = -1
        del elems[base_len:]

    def dfs(depth):
        if depth == m_gens:
            if len(elems) != n:
                raise ValueError("generators do not span the source module")
            out.append(tuple(img))
            if len(out) > cap:
                raise CapExceeded("hom enumeration", cap)
            return
        g = gens[depth]
        if img[g] >= 0:
            dfs(depth + 1)
            return
        base_len = len(elems)
        for y in range(dst.n):
            if attempt(g, y, base_len):
                dfs(depth + 1)
            rollback(base_len)

    dfs(0)
    return out


def sum_index(rows, add_rows):
    """table[i][j] = index (within rows) of the pointwise sum rows[i]+rows[j]."""
    index = {tuple(r): i for i, r in enumerate(rows)}
    table = []
    for ri in rows:
        line = []
        for rj in rows:
            line.append(index[tuple(add_rows[a][b] for a, b in zip(ri, rj))])
        table.append(line)
    return table


def compose_index(inner_rows, outer_rows, result_rows):
    """table[o][i] = index (within result_rows) of outer_rows[o] after inner_rows[i]."""
    index = {tuple(r): i for i, r in enumerate(result_rows)}
    table = []
    for orow in outer_rows:
        line = []
        for irow in inner_rows:
            line.append(index[tuple(orow[v] for v in irow)])
        table.append(line)
    return table


def assoc_violation(rows):
    n = len(rows)
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            rab = rows[ra[b]]
            rb = rows[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    return (a, b, c)
    return None


def commut_violation(rows):
    n = len(rows)
    for a in range(n):
        ra = rows[a]
        for b in range(a + 1, n):
            if ra[b] != rows[b][a]:
                return (a, b)
    return None


def identity_violation(rows, e):
    row = rows[e]
    for a in range(len(rows)):
        if row[a] != a or rows[a][e] != a:
            return a
    return None


def missing_inverse(rows, zero):
    n = len(rows)
    for a in range(n):
        row = rows[a]
        if all(row[b] != zero for b in range(n)):
            return a
    return None


def distrib_violation(add, mul):
    n = len(add)
    for a in range(n):
        mula = mul[a]
        for b in range(n):
            for c in range(n):
                if mula[add[b][c]] != add[mula[b]][mula[c]]:
                    return ("left", a, b, c)
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                    return ("right", a, b, c)
    return None


def act_scalar_add_violation(act, ring_add, mod_add):
    k = len(act)
    n = len(act[0]) if k else 0
    for r in range(k):
        actr = act[r]
        for s in range(k):
            rs = ring_add[r][s]
            actrs = act[rs]
            acts = act[s]
            for m in range(n):
                if actrs[m] != mod_add[actr[m]][acts[m]]:
                    return (r, s, m)
    return None


def act_module_add_violation(act, mod_add):
    k = len(act)
    n = len(mod_add)
    for r in range(k):
        actr = act[r]
        for m1 in range(n):
            row = mod_add[m1]
            a1 = actr[m1]
            for m2 in range(n):
                if actr[row[m2]] != mod_add[a1][actr[m2]]:
                    return (r, m1, m2)
    return None


def act_assoc_violation(act, ring_mul, right_side):
    # left module: (r*s).m == r.(s.m); right module: m.(r*s) == (m.r).s,
    # which in act[r][m] form reads act[ring_mul[r][s]][m] == act[s][act[r][m]].
    k = len(act)
    n = len(act[0]) if k else 0
    for r in range(k):
        actr = act[r]
        for s in range(k):
            combined = act[ring_mul[r][s]]
            acts = act[s]
            for m in range(n):
                if right_side:
                    if combined[m] != acts[actr[m]]:
                        return (r, s, m)
                else:
                    if combined[m] != actr[acts[m]]:
                        return (r, s, m)
    return None


def act_unital_violation(act, one):
    row = act[one]
    for m in range(len(row)):
        if row[m] != m:
            return m
    return None
