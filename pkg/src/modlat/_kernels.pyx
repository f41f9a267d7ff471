# Compiled kernels: the hot loops behind lattice enumeration, hom
# enumeration and table validation. modlat._pykernels is the behavioural
# twin; both must produce identical outputs in identical order.

import numpy as np

from .errors import CapExceeded


cdef class Tables:
    """Operation tables of one module in kernel-native form."""

    cdef public int n
    cdef public int k
    cdef public int zero
    cdef int[:, ::1] add
    cdef int[:, ::1] act

    def __init__(self, add, act, zero):
        self.add = np.ascontiguousarray(add, dtype=np.intc)
        self.act = np.ascontiguousarray(act, dtype=np.intc)
        self.n = self.add.shape[0]
        self.k = self.act.shape[0]
        self.zero = zero


def prepare(add, act, zero):
    return Tables(add, act, zero)


cdef object _flags_to_mask(unsigned char[::1] flags, int n):
    words_arr = np.zeros((n + 63) >> 6, dtype=np.uint64)
    cdef unsigned long long[::1] words = words_arr
    cdef int i
    for i in range(n):
        if flags[i]:
            words[i >> 6] |= (<unsigned long long>1) << (i & 63)
    return int.from_bytes(words_arr.tobytes(), "little")


cdef object _mask_members(object mask, int n):
    # int32 array of the set bit positions
    raw = int(mask).to_bytes((n + 7) >> 3, "little")
    cdef const unsigned char[::1] view = raw
    out_arr = np.empty(n, dtype=np.intc)
    cdef int[::1] out = out_arr
    cdef int i, cnt = 0
    for i in range(n):
        if (view[i >> 3] >> (i & 7)) & 1:
            out[cnt] = i
            cnt += 1
    return out_arr[:cnt]


def cyclic_mask(Tables t, x):
    cdef unsigned char[::1] flags = np.zeros(t.n, dtype=np.uint8)
    cdef int r, xx = x
    for r in range(t.k):
        flags[t.act[r, xx]] = 1
    return _flags_to_mask(flags, t.n)


cdef object _sum_members(Tables t, int[::1] a, int[::1] b):
    # (mask, members) of the pointwise sum set
    cdef unsigned char[::1] flags = np.zeros(t.n, dtype=np.uint8)
    cdef int i, j
    cdef int[:, ::1] add = t.add
    for i in range(a.shape[0]):
        for j in range(b.shape[0]):
            flags[add[a[i], b[j]]] = 1
    mask = _flags_to_mask(flags, t.n)
    return mask, _mask_members(mask, t.n)


def sum_mask(Tables t, a, b):
    mask, _ = _sum_members(t, _mask_members(a, t.n), _mask_members(b, t.n))
    return mask


def closure_mask(Tables t, seed):
    out = 1 << t.zero
    cdef int[::1] seeds = _mask_members(seed, t.n)
    cdef int i, x
    for i in range(seeds.shape[0]):
        x = seeds[i]
        if not (out >> x) & 1:
            out = sum_mask(t, out, cyclic_mask(t, x))
    return out


def all_submodule_masks(Tables t, cap):
    cdef int x, si
    seed_masks = set()
    for x in range(t.n):
        seed_masks.add(cyclic_mask(t, x))
    seeds = sorted(seed_masks)
    seed_members = [_mask_members(m, t.n) for m in seeds]
    nodes = set(seeds)
    if len(nodes) > cap:
        raise CapExceeded("lattice nodes", cap, needed=len(nodes))
    frontier = list(seed_members)
    cdef int nseeds = len(seeds)
    while frontier:
        cur = frontier.pop()
        for si in range(nseeds):
            mask, members = _sum_members(t, cur, seed_members[si])
            if mask not in nodes:
                if len(nodes) >= cap:
                    raise CapExceeded("lattice nodes", cap)
                nodes.add(mask)
                frontier.append(members)
    return sorted(nodes, key=lambda m: (m.bit_count(), m))


cdef int _attempt(Tables src, Tables dst, int[::1] img, int[::1] elems,
                  int base_len, int g, int y):
    # Extend the partial map from the submodule spanned by elems[:base_len]
    # to include g |-> y, forcing f(s + r*g) = f(s) + r*y over every
    # representation. Returns the new element count, or -1 after rolling
    # back on conflict.
    cdef int total = base_len
    cdef int r, idx, s, z, v, w, rg, ry
    cdef int[:, ::1] sadd = src.add
    cdef int[:, ::1] sact = src.act
    cdef int[:, ::1] dadd = dst.add
    cdef int[:, ::1] dact = dst.act
    for r in range(src.k):
        rg = sact[r, g]
        ry = dact[r, y]
        for idx in range(base_len):
            s = elems[idx]
            z = sadd[s, rg]
            v = dadd[img[s], ry]
            w = img[z]
            if w < 0:
                img[z] = v
                elems[total] = z
                total += 1
            elif w != v:
                _rollback(img, elems, base_len, total)
                return -1
    return total


cdef void _rollback(int[::1] img, int[::1] elems, int base_len, int upto):
    cdef int i
    for i in range(base_len, upto):
        img[elems[i]] = -1


def _hom_dfs(int depth, list gen_list, Tables src, Tables dst,
             int[::1] img, int[::1] elems, int count,
             img_arr, list out, cap):
    cdef int g, y, total
    if depth == len(gen_list):
        if count != src.n:
            raise ValueError("generators do not span the source module")
        out.append(tuple(img_arr.tolist()))
        if len(out) > cap:
            raise CapExceeded("hom enumeration", cap)
        return
    g = gen_list[depth]
    if img[g] >= 0:
        _hom_dfs(depth + 1, gen_list, src, dst, img, elems, count, img_arr, out, cap)
        return
    for y in range(dst.n):
        total = _attempt(src, dst, img, elems, count, g, y)
        if total >= 0:
            _hom_dfs(depth + 1, gen_list, src, dst, img, elems, total, img_arr, out, cap)
            _rollback(img, elems, count, total)


def enumerate_homs(Tables src, Tables dst, gens, cap):
    img_arr = np.full(src.n, -1, dtype=np.intc)
    elems_arr = np.empty(max(src.n, 1), dtype=np.intc)
    cdef int[::1] img = img_arr
    cdef int[::1] elems = elems_arr
    img[src.zero] = dst.zero
    elems[0] = src.zero
    out = []
    _hom_dfs(0, [int(g) for g in gens], src, dst, img, elems, 1, img_arr, out, cap)
    return out


def sum_index(rows, add_rows):
    arr = np.ascontiguousarray(rows, dtype=np.intc)
    cdef int[:, ::1] rv = arr
    cdef int[:, ::1] av = np.ascontiguousarray(add_rows, dtype=np.intc)
    cdef int h = rv.shape[0]
    cdef int n = rv.shape[1] if h else 0
    index = {arr[i].tobytes(): i for i in range(h)}
    scratch_arr = np.empty(n, dtype=np.intc)
    cdef int[::1] scratch = scratch_arr
    cdef int i, j, m
    table = []
    for i in range(h):
        line = []
        for j in range(h):
            for m in range(n):
                scratch[m] = av[rv[i, m], rv[j, m]]
            line.append(index[scratch_arr.tobytes()])
        table.append(line)
    return table


def compose_index(inner_rows, outer_rows, result_rows):
    inner = np.ascontiguousarray(inner_rows, dtype=np.intc)
    outer = np.ascontiguousarray(outer_rows, dtype=np.intc)
    result = np.ascontiguousarray(result_rows, dtype=np.intc)
    cdef int[:, ::1] iv = inner
    cdef int[:, ::1] ov = outer
    cdef int hi = iv.shape[0]
    cdef int ho = ov.shape[0]
    cdef int n = iv.shape[1] if hi else 0
    index = {result[i].tobytes(): i for i in range(result.shape[0])}
    scratch_arr = np.empty(n, dtype=np.intc)
    cdef int[::1] scratch = scratch_arr
    cdef int o, i, m
    table = []
    for o in range(ho):
        line = []
        for i in range(hi):
            for m in range(n):
                scratch[m] = ov[o, iv[i, m]]
            line.append(index[scratch_arr.tobytes()])
        table.append(line)
    return table


def assoc_violation(rows):
    cdef int[:, ::1] t = np.ascontiguousarray(rows, dtype=np.intc)
    cdef int n = t.shape[0]
    cdef int a, b, c, ab
    for a in range(n):
        for b in range(n):
            ab = t[a, b]
            for c in range(n):
                if t[ab, c] != t[a, t[b, c]]:
                    return (a, b, c)
    return None


def commut_violation(rows):
    cdef int[:, ::1] t = np.ascontiguousarray(rows, dtype=np.intc)
    cdef int n = t.shape[0]
    cdef int a, b
    for a in range(n):
        for b in range(a + 1, n):
            if t[a, b] != t[b, a]:
                return (a, b)
    return None


def identity_violation(rows, e):
    cdef int[:, ::1] t = np.ascontiguousarray(rows, dtype=np.intc)
    cdef int n = t.shape[0]
    cdef int ee = e
    cdef int a
    for a in range(n):
        if t[ee, a] != a or t[a, ee] != a:
            return a
    return None


def missing_inverse(rows, zero):
    cdef int[:, ::1] t = np.ascontiguousarray(rows, dtype=np.intc)
    cdef int n = t.shape[0]
    cdef int z = zero
    cdef int a, b, found
    for a in range(n):
        found = 0
        for b in range(n):
            if t[a, b] == z:
                found = 1
                break
        if not found:
            return a
    return None


def distrib_violation(add, mul):
    cdef int[:, ::1] ad = np.ascontiguousarray(add, dtype=np.intc)
    cdef int[:, ::1] mu = np.ascontiguousarray(mul, dtype=np.intc)
    cdef int n = ad.shape[0]
    cdef int a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mu[a, ad[b, c]] != ad[mu[a, b], mu[a, c]]:
                    return ("left", a, b, c)
                if mu[ad[a, b], c] != ad[mu[a, c], mu[b, c]]:
                    return ("right", a, b, c)
    return None


def act_scalar_add_violation(act, ring_add, mod_add):
    cdef int[:, ::1] ac = np.ascontiguousarray(act, dtype=np.intc)
    cdef int[:, ::1] ra = np.ascontiguousarray(ring_add, dtype=np.intc)
    cdef int[:, ::1] ma = np.ascontiguousarray(mod_add, dtype=np.intc)
    cdef int k = ac.shape[0]
    cdef int n = ac.shape[1]
    cdef int r, s, m
    for r in range(k):
        for s in range(k):
            for m in range(n):
                if ac[ra[r, s], m] != ma[ac[r, m], ac[s, m]]:
                    return (r, s, m)
    return None


def act_module_add_violation(act, mod_add):
    cdef int[:, ::1] ac = np.ascontiguousarray(act, dtype=np.intc)
    cdef int[:, ::1] ma = np.ascontiguousarray(mod_add, dtype=np.intc)
    cdef int k = ac.shape[0]
    cdef int n = ma.shape[0]
    cdef int r, m1, m2
    for r in range(k):
        for m1 in range(n):
            for m2 in range(n):
                if ac[r, ma[m1, m2]] != ma[ac[r, m1], ac[r, m2]]:
                    return (r, m1, m2)
    return None


def act_assoc_violation(act, ring_mul, right_side):
    # left module: act[(r*s)][m] == act[r][act[s][m]]
    # right module (act[r][m] = m.r): act[(r*s)][m] == act[s][act[r][m]]
    cdef int[:, ::1] ac = np.ascontiguousarray(act, dtype=np.intc)
    cdef int[:, ::1] rm = np.ascontiguousarray(ring_mul, dtype=np.intc)
    cdef int k = ac.shape[0]
    cdef int n = ac.shape[1]
    cdef int r, s, m
    cdef int mirrored = 1 if right_side else 0
    for r in range(k):
        for s in range(k):
            for m in range(n):
                if mirrored:
                    if ac[rm[r, s], m] != ac[s, ac[r, m]]:
                        return (r, s, m)
                else:
                    if ac[rm[r, s], m] != ac[r, ac[s, m]]:
                        return (r, s, m)
    return None


def act_unital_violation(act, one):
    cdef int[:, ::1] ac = np.ascontiguousarray(act, dtype=np.intc)
    cdef int n = ac.shape[1]
    cdef int o = one
    cdef int m
    for m in range(n):
        if ac[o, m] != m:
            return m
    return None
