"""Hot kernels: subset BFS, pair-chain analysis, and the exhaustive sweep
engines.  Everything here is written in nopython-compatible style (flat
numpy arrays, explicit loops, 0-indexed states) and compiled with numba
when the active backend is "numba"; under the "numpy" backend the same
functions run as plain Python.  See ``resetlab._kernels`` for selection.

Conventions: a subset of the n states is an int bit mask (bit s = state s);
an ordered off-diagonal pair (s, t) has index s*(n-1) + t - (t > s).
Generator order everywhere is declaration order, which fixes BFS
tie-breaking.
"""

import numpy as np

from . import USE_NUMBA

if USE_NUMBA:
    from numba import njit

    def _maybe_jit(f):
        return njit(cache=True)(f)
else:

    def _maybe_jit(f):
        return f


@_maybe_jit
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@_maybe_jit
def _build_img_table(img, n, out):
    """out[T] = image mask of subset T under the map ``img`` (length-n row)."""
    out[0] = 0
    for t in range(1, 1 << n):
        low = t & (-t)
        s = 0
        while (low >> s) & 1 == 0:
            s += 1
        out[t] = out[t ^ low] | (1 << img[s])


@_maybe_jit
def _build_pre_table(premask, n, out):
    """out[T] = preimage mask of subset T; ``premask[t]`` is the preimage
    mask of the single state t."""
    out[0] = 0
    for t in range(1, 1 << n):
        low = t & (-t)
        s = 0
        while (low >> s) & 1 == 0:
            s += 1
        out[t] = out[t ^ low] | premask[s]


@_maybe_jit
def _premasks(img, n, out):
    for t in range(n):
        out[t] = 0
    for s in range(n):
        out[img[s]] |= 1 << s


@_maybe_jit
def rt_bfs(imgs, n):
    """Shortest constant word by BFS over image subsets from the full set.

    Returns (length, letter indices); (-1, empty) when no constant word
    exists.  FIFO order with letters tried in declaration order makes the
    word the lexicographically least among the shortest.
    """
    x = imgs.shape[0]
    full = (1 << n) - 1
    size = 1 << n
    par_state = np.empty(size, np.int64)
    par_letter = np.full(size, -2, np.int8)
    queue = np.empty(size, np.int64)
    par_letter[full] = -1
    queue[0] = full
    head = 0
    tail = 1
    found = -1
    if full & (full - 1) == 0:
        found = full
    while head < tail and found < 0:
        cur = queue[head]
        head += 1
        for g in range(x):
            img = 0
            rest = cur
            while rest:
                low = rest & (-rest)
                s = 0
                while (low >> s) & 1 == 0:
                    s += 1
                img |= 1 << imgs[g, s]
                rest ^= low
            if par_letter[img] == -2:
                par_letter[img] = g
                par_state[img] = cur
                queue[tail] = img
                tail += 1
                if img & (img - 1) == 0:
                    found = img
                    break
    if found < 0:
        return -1, np.empty(0, np.int64)
    length = 0
    cur = found
    while par_letter[cur] >= 0:
        length += 1
        cur = par_state[cur]
    letters = np.empty(length, np.int64)
    cur = found
    for i in range(length):
        letters[length - 1 - i] = par_letter[cur]
        cur = par_state[cur]
    return length, letters


@_maybe_jit
def witness_bfs(imgs, n, target):
    """Shortest word w with (S)w == target, via the same image BFS.

    Returns (found, letters); found is 0 when the target is unreachable.
    """
    x = imgs.shape[0]
    full = (1 << n) - 1
    size = 1 << n
    par_state = np.empty(size, np.int64)
    par_letter = np.full(size, -2, np.int8)
    queue = np.empty(size, np.int64)
    par_letter[full] = -1
    queue[0] = full
    head = 0
    tail = 1
    while head < tail:
        if par_letter[target] != -2:
            break
        cur = queue[head]
        head += 1
        for g in range(x):
            img = 0
            rest = cur
            while rest:
                low = rest & (-rest)
                s = 0
                while (low >> s) & 1 == 0:
                    s += 1
                img |= 1 << imgs[g, s]
                rest ^= low
            if par_letter[img] == -2:
                par_letter[img] = g
                par_state[img] = cur
                queue[tail] = img
                tail += 1
    if par_letter[target] == -2:
        return 0, np.empty(0, np.int64)
    length = 0
    cur = target
    while par_letter[cur] >= 0:
        length += 1
        cur = par_state[cur]
    letters = np.empty(length, np.int64)
    cur = target
    for i in range(length):
        letters[length - 1 - i] = par_letter[cur]
        cur = par_state[cur]
    return 1, letters


@_maybe_jit
def reachable_masks(imgs, n):
    """All image subsets (S)w in BFS discovery order, starting from S."""
    x = imgs.shape[0]
    full = (1 << n) - 1
    size = 1 << n
    visited = np.zeros(size, np.uint8)
    queue = np.empty(size, np.int64)
    visited[full] = 1
    queue[0] = full
    head = 0
    tail = 1
    while head < tail:
        cur = queue[head]
        head += 1
        for g in range(x):
            img = 0
            rest = cur
            while rest:
                low = rest & (-rest)
                s = 0
                while (low >> s) & 1 == 0:
                    s += 1
                img |= 1 << imgs[g, s]
                rest ^= low
            if visited[img] == 0:
                visited[img] = 1
                queue[tail] = img
                tail += 1
    return queue[:tail].copy()


@_maybe_jit
def _aug_bfs(pretabs, n, tmask, stamp, stampval, queue, dist):
    """Shortest augmenting word length for the subset ``tmask`` and the
    preimage subset it reaches.  BFS over preimage subsets; the word reads
    right-to-left along BFS steps, so only length and endpoint are exposed.
    Returns (-1, 0) when no augmenting word exists.
    """
    x = pretabs.shape[0]
    base = _popcount(tmask)
    stamp[tmask] = stampval
    dist[tmask] = 0
    queue[0] = tmask
    head = 0
    tail = 1
    while head < tail:
        cur = queue[head]
        head += 1
        d = dist[cur]
        for g in range(x):
            pre = pretabs[g, cur]
            if _popcount(pre) > base:
                return d + 1, pre
            if stamp[pre] != stampval:
                stamp[pre] = stampval
                dist[pre] = d + 1
                queue[tail] = pre
                tail += 1
    return -1, 0


@_maybe_jit
def at_exact_tables(pretabs, n):
    """Augment threshold: max over proper nonempty T of the shortest
    augmenting word length; -1 when some T has no augmenting word."""
    full = (1 << n) - 1
    size = 1 << n
    stamp = np.full(size, -1, np.int64)
    dist = np.zeros(size, np.int64)
    queue = np.empty(size, np.int64)
    best = 0
    for tmask in range(1, full):
        length, _ = _aug_bfs(pretabs, n, tmask, stamp, tmask, queue, dist)
        if length < 0:
            return -1
        if length > best:
            best = length
    return best


@_maybe_jit
def at_exact(imgs, n):
    """Augment threshold from raw generator rows (builds preimage tables)."""
    x = imgs.shape[0]
    size = 1 << n
    pretabs = np.empty((x, size), np.int64)
    pm = np.empty(n, np.int64)
    for g in range(x):
        _premasks(imgs[g], n, pm)
        _build_pre_table(pm, n, pretabs[g])
    return at_exact_tables(pretabs, n)


@_maybe_jit
def augmenting_word_bfs(imgs, n, tmask):
    """Shortest word augmenting the subset ``tmask``, with parents kept so
    the actual letters can be reported (in forward reading order).

    Returns (found, letters, result_mask).
    """
    x = imgs.shape[0]
    size = 1 << n
    pretabs = np.empty((x, size), np.int64)
    pm = np.empty(n, np.int64)
    for g in range(x):
        _premasks(imgs[g], n, pm)
        _build_pre_table(pm, n, pretabs[g])
    base = _popcount(tmask)
    par_state = np.empty(size, np.int64)
    par_letter = np.full(size, -2, np.int8)
    queue = np.empty(size, np.int64)
    par_letter[tmask] = -1
    queue[0] = tmask
    head = 0
    tail = 1
    hit = -1
    hit_letter = -1
    hit_from = -1
    while head < tail and hit < 0:
        cur = queue[head]
        head += 1
        for g in range(x):
            pre = pretabs[g, cur]
            if _popcount(pre) > base:
                hit = pre
                hit_letter = g
                hit_from = cur
                break
            if par_letter[pre] == -2:
                par_letter[pre] = g
                par_state[pre] = cur
                queue[tail] = pre
                tail += 1
    if hit < 0:
        return 0, np.empty(0, np.int64), 0
    length = 1
    cur = hit_from
    while par_letter[cur] >= 0:
        length += 1
        cur = par_state[cur]
    letters = np.empty(length, np.int64)
    # BFS steps apply preimages, so step order is the reverse of the word.
    letters[0] = hit_letter
    cur = hit_from
    i = 1
    while par_letter[cur] >= 0:
        letters[i] = par_letter[cur]
        cur = par_state[cur]
        i += 1
    return 1, letters, hit


@_maybe_jit
def _greedy_len(pretabs, n, fpremask, rtabs_unused, stamp, dist, queue, stampbase):
    """Length of the constant word built by the augmenting procedure:
    start from the largest preimage class of the singular generator
    (pretabs row 0), then repeatedly prepend a shortest augmenting word.

    Returns (length, final stamp counter); length -2 flags a dead end
    (only possible on non-directable input).
    """
    full = (1 << n) - 1
    best_s = 0
    best_c = -1
    for s in range(n):
        c = _popcount(fpremask[s])
        if c > best_c:
            best_c = c
            best_s = s
    t = fpremask[best_s]
    total = 1
    stampval = stampbase
    while t != full:
        stampval += 1
        length, nxt = _aug_bfs(pretabs, n, t, stamp, stampval, queue, dist)
        if length < 0:
            return -2, stampval
        total += length
        t = nxt
    return total, stampval


@_maybe_jit
def _rt_len_tables(imgtabs, n, visited, queue, stampbase):
    """Reset threshold from per-generator image tables; -1 when absent.
    ``visited`` is an int64 stamp array reused across calls."""
    x = imgtabs.shape[0]
    full = (1 << n) - 1
    if full & (full - 1) == 0:
        return 0
    visited[full] = stampbase
    queue[0] = full
    head = 0
    tail = 1
    dist_cur = 0
    level_end = 1
    while head < tail:
        cur = queue[head]
        if head == level_end:
            dist_cur += 1
            level_end = tail
        head += 1
        for g in range(x):
            img = imgtabs[g, cur]
            if visited[img] != stampbase:
                visited[img] = stampbase
                if img & (img - 1) == 0:
                    return dist_cur + 1
                queue[tail] = img
                tail += 1
    return -1


@_maybe_jit
def _reach_count_tables(imgtabs, n, visited, queue, stampbase):
    """Number of distinct image subsets reachable from the full set."""
    x = imgtabs.shape[0]
    full = (1 << n) - 1
    visited[full] = stampbase
    queue[0] = full
    head = 0
    tail = 1
    while head < tail:
        cur = queue[head]
        head += 1
        for g in range(x):
            img = imgtabs[g, cur]
            if visited[img] != stampbase:
                visited[img] = stampbase
                queue[tail] = img
                tail += 1
    return tail


@_maybe_jit
def _orbit_mask(perm_rows, gcount, n, start_mask):
    """Forward closure of a state set under bijective generator rows; for a
    group action this is a union of orbits."""
    mask = start_mask
    changed = True
    while changed:
        changed = False
        for g in range(gcount):
            add = 0
            rest = mask
            while rest:
                low = rest & (-rest)
                s = 0
                while (low >> s) & 1 == 0:
                    s += 1
                add |= 1 << perm_rows[g, s]
                rest ^= low
            if add & ~mask:
                mask |= add
                changed = True
    return mask


@_maybe_jit
def _digraph_sc(out_masks, n):
    """Strong connectivity of a digraph given as out-neighbour masks;
    the single-vertex digraph counts as strongly connected."""
    if n == 1:
        return True
    in_masks = np.zeros(n, np.int64)
    for s in range(n):
        rest = out_masks[s]
        while rest:
            low = rest & (-rest)
            t = 0
            while (low >> t) & 1 == 0:
                t += 1
            in_masks[t] |= 1 << s
            rest ^= low
    full = (1 << n) - 1
    fwd = 1
    changed = True
    while changed:
        changed = False
        rest = fwd
        while rest:
            low = rest & (-rest)
            s = 0
            while (low >> s) & 1 == 0:
                s += 1
            add = out_masks[s] & ~fwd
            if add:
                fwd |= add
                changed = True
            rest ^= low
    if fwd != full:
        return False
    bwd = 1
    changed = True
    while changed:
        changed = False
        rest = bwd
        while rest:
            low = rest & (-rest)
            s = 0
            while (low >> s) & 1 == 0:
                s += 1
            add = in_masks[s] & ~bwd
            if add:
                bwd |= add
                changed = True
            rest ^= low
    return bwd == full


@_maybe_jit
def _reach_matrix(out_masks, n, reach):
    """reach[s] = mask of states reachable from s in >= 1 step."""
    for s in range(n):
        reach[s] = out_masks[s]
    changed = True
    while changed:
        changed = False
        for s in range(n):
            add = 0
            rest = reach[s]
            while rest:
                low = rest & (-rest)
                t = 0
                while (low >> t) & 1 == 0:
                    t += 1
                add |= out_masks[t]
                rest ^= low
            if add & ~reach[s]:
                reach[s] |= add
                changed = True


@_maybe_jit
def _pair_index(s, t, n):
    if t > s:
        return s * (n - 1) + t - 1
    return s * (n - 1) + t


@_maybe_jit
def _pair_decode(p, n, st):
    s = p // (n - 1)
    r = p % (n - 1)
    if r >= s:
        st[0] = s
        st[1] = r + 1
    else:
        st[0] = s
        st[1] = r


@_maybe_jit
def _pair_tables(perm_rows, gcount, n, pact):
    """pact[g, p] = index of the componentwise image of pair p."""
    for g in range(gcount):
        for s in range(n):
            for t in range(n):
                if s == t:
                    continue
                p = _pair_index(s, t, n)
                pact[g, p] = _pair_index(perm_rows[g, s], perm_rows[g, t], n)


@_maybe_jit
def _sync_pair_merge(imgs, gcount, n):
    """Synchronizability by the pair-merge criterion: every unordered pair
    can reach a directly merging pair along generator steps."""
    npu = n * (n - 1) // 2
    if npu == 0:
        return True
    good = np.zeros(npu, np.uint8)
    idx = np.full((n, n), -1, np.int64)
    k = 0
    for s in range(n):
        for t in range(s + 1, n):
            idx[s, t] = k
            k += 1
    changed = True
    while changed:
        changed = False
        k = 0
        for s in range(n):
            for t in range(s + 1, n):
                if good[k]:
                    k += 1
                    continue
                for g in range(gcount):
                    a = imgs[g, s]
                    b = imgs[g, t]
                    if a == b:
                        good[k] = 1
                        changed = True
                        break
                    if a > b:
                        a, b = b, a
                    if good[idx[a, b]]:
                        good[k] = 1
                        changed = True
                        break
                k += 1
    for k in range(npu):
        if good[k] == 0:
            return False
    return True


@_maybe_jit
def _transitive_digraph(imgs, gcount, n):
    """Monoid transitivity: the one-letter digraph s -> (s)x is strongly
    connected (single SCC covering all states)."""
    if n == 1:
        return True
    out = np.zeros(n, np.int64)
    for g in range(gcount):
        for s in range(n):
            out[s] |= 1 << imgs[g, s]
    return _digraph_sc(out, n)


@_maybe_jit
def thm17_morphism_violations(elems, n):
    """Pairs (f, g) where restricting away from the sink breaks the
    morphism law, plus elements whose restriction is not a partial
    bijection on {1..n-1}.  Two routes feed the comparison: composition of
    full image rows versus composition of the restricted partial maps.
    """
    m = elems.shape[0]
    u = n - 1
    pb = np.zeros((m, u), np.int64)
    bad = 0
    for i in range(m):
        if elems[i, 0] != 0:
            bad += 1
        seen = 0
        for s in range(1, n):
            v = elems[i, s]
            pb[i, s - 1] = v
            if v != 0:
                if (seen >> v) & 1:
                    bad += 1
                seen |= 1 << v
    if bad > 0:
        return bad
    viol = 0
    for i in range(m):
        for j in range(m):
            for s in range(1, n):
                lhs = elems[j, elems[i, s]]
                a = pb[i, s - 1]
                if a == 0:
                    rhs = 0
                else:
                    rhs = pb[j, a - 1]
                if lhs != rhs:
                    viol += 1
                    break
    return viol


@_maybe_jit
def canonical_min_keys(fs, perms, pinvs, n):
    """Per map f, the minimum over all conjugates of the base-n encoding of
    its image row; equal keys <=> conjugate maps."""
    count = fs.shape[0]
    p = perms.shape[0]
    keys = np.empty(count, np.int64)
    for i in range(count):
        best = np.int64(9223372036854775807)
        for q in range(p):
            key = np.int64(0)
            mult = np.int64(1)
            for s in range(n):
                key += perms[q, fs[i, pinvs[q, s]]] * mult
                mult *= n
            if key < best:
                best = key
        keys[i] = best
    return keys


@_maybe_jit
def _combo_chain(pact, gcount, n, d, emask, nei, dist_pairs, queue,
                 out_scratch, reach_scratch, seed_scratch, check_lemma8):
    """Chain analysis for the seed pairs {(e, d) : e in emask}.

    Returns (sc, msc, lemma8_ok): sc is 1 when the chain closure is
    strongly connected, msc the first strongly connected level (-1 when
    none).  lemma8_ok reports, per excluded state, a cyclic pair among its
    own images within level n-1 (only meaningful for transitive groups).
    """
    npairs = n * (n - 1)
    for p in range(npairs):
        dist_pairs[p] = -1
    head = 0
    tail = 0
    rest = emask
    while rest:
        low = rest & (-rest)
        e = 0
        while (low >> e) & 1 == 0:
            e += 1
        p = _pair_index(e, d, n)
        if dist_pairs[p] < 0:
            dist_pairs[p] = 0
            queue[tail] = p
            tail += 1
        rest ^= low
    maxd = 0
    while head < tail:
        cur = queue[head]
        head += 1
        for g in range(gcount):
            nxt = pact[g, cur]
            if dist_pairs[nxt] < 0:
                dist_pairs[nxt] = dist_pairs[cur] + 1
                if dist_pairs[nxt] > maxd:
                    maxd = dist_pairs[nxt]
                queue[tail] = nxt
                tail += 1
    # incremental strong-connectivity scan along the levels
    for s in range(n):
        out_scratch[s] = 0
    sc = 0
    mscv = -1
    st = np.empty(2, np.int64)
    for m in range(maxd + 1):
        for p in range(npairs):
            if dist_pairs[p] == m:
                _pair_decode(p, n, st)
                out_scratch[st[0]] |= 1 << st[1]
        if _digraph_sc(out_scratch, n):
            sc = 1
            mscv = m
            break
    lemma8_ok = 1
    if check_lemma8:
        limit = n - 1
        for s in range(n):
            out_scratch[s] = 0
        for p in range(npairs):
            if 0 <= dist_pairs[p] <= limit:
                _pair_decode(p, n, st)
                out_scratch[st[0]] |= 1 << st[1]
        _reach_matrix(out_scratch, n, reach_scratch)
        rest = emask
        while rest:
            low = rest & (-rest)
            e = 0
            while (low >> e) & 1 == 0:
                e += 1
            rest ^= low
            # per-seed BFS, depth capped at n-1
            for p in range(npairs):
                seed_scratch[p] = -1
            p0 = _pair_index(e, d, n)
            seed_scratch[p0] = 0
            queue[0] = p0
            h2 = 0
            t2 = 1
            okhere = 0
            while h2 < t2:
                cur = queue[h2]
                h2 += 1
                _pair_decode(cur, n, st)
                if (reach_scratch[st[1]] >> st[0]) & 1:
                    okhere = 1
                    break
                if seed_scratch[cur] >= limit:
                    continue
                for g in range(gcount):
                    nxt = pact[g, cur]
                    if seed_scratch[nxt] < 0:
                        seed_scratch[nxt] = seed_scratch[cur] + 1
                        queue[t2] = nxt
                        t2 += 1
            if okhere == 0:
                lemma8_ok = 0
                break
    return sc, mscv, lemma8_ok


# counter layout for sweep_one_point_* (python wrappers give these names)
OP_Y_TOTAL = 0
OP_Y_TRANSITIVE = 1
OP_INSTANCES = 2
OP_QUALIFYING = 3
OP_VIOL_MSC = 4
OP_VIOL_EQ9 = 5
OP_VIOL_COR10 = 6
OP_VIOL_LEMMA3 = 7
OP_VIOL_GREEDY_LOW = 8
OP_VIOL_GREEDY_HIGH = 9
OP_VIOL_LEMMA8 = 10
OP_INTERNAL = 11
OP_COMBOS = 12
OP_EX_Y = 13
OP_EX_F = 14
OP_NCOUNTERS = 15


@_maybe_jit
def _check_one_point_instance(n, ftab, fpre, fpm, ytabs, ypres, gcount,
                              mscv, counters, visited, queue64, stamp,
                              dist, queue_s, state, yi, fi):
    """Bound checks for one qualifying one-point instance; ``state[0]``
    carries the running stamp counter for the scratch arrays."""
    full = (1 << n) - 1
    xall = gcount + 1
    imgtabs = np.empty((xall, 1 << n), np.int64)
    pretabs = np.empty((xall, 1 << n), np.int64)
    for t in range(1 << n):
        imgtabs[0, t] = ftab[t]
        pretabs[0, t] = fpre[t]
    for g in range(gcount):
        for t in range(1 << n):
            imgtabs[g + 1, t] = ytabs[g, t]
            pretabs[g + 1, t] = ypres[g, t]
    state[0] += 1
    rt = _rt_len_tables(imgtabs, n, visited, queue64, state[0])
    at = at_exact_tables(pretabs, n)
    state[0] += 1
    greedy, newstamp = _greedy_len(pretabs, n, fpm, imgtabs, stamp, dist,
                                   queue_s, state[0])
    state[0] = newstamp
    ok = True
    if rt < 0 or at < 0 or greedy < 0:
        counters[OP_INTERNAL] += 1
        ok = False
    else:
        if mscv > 2 * n - 3:
            counters[OP_VIOL_MSC] += 1
            ok = False
        if at > mscv + 1:
            counters[OP_VIOL_EQ9] += 1
            ok = False
        if rt > 2 * (n - 1) * (n - 2) + 1:
            counters[OP_VIOL_COR10] += 1
            ok = False
        lemma3 = at * (n - 2) + 1
        if rt > lemma3:
            counters[OP_VIOL_LEMMA3] += 1
            ok = False
        if greedy < rt:
            counters[OP_VIOL_GREEDY_LOW] += 1
            ok = False
        if greedy > lemma3:
            counters[OP_VIOL_GREEDY_HIGH] += 1
            ok = False
    if not ok and counters[OP_EX_Y] < 0:
        counters[OP_EX_Y] = yi
        counters[OP_EX_F] = fi
    return ok


@_maybe_jit
def sweep_one_point_cross(n, f_imgs, f_dup, f_emask, perms, ysets):
    """Exhaustive bound sweep over every one-point singular crossed with
    every listed permutation set (rows of ``ysets`` index ``perms``; the
    second entry is -1 for singletons)."""
    counters = np.zeros(OP_NCOUNTERS, np.int64)
    counters[OP_EX_Y] = -1
    counters[OP_EX_F] = -1
    size = 1 << n
    full = size - 1
    npairs = n * (n - 1)
    nf = f_imgs.shape[0]
    ncombo = n * size
    memo_stamp = np.full(ncombo, -1, np.int64)
    memo_sc = np.zeros(ncombo, np.int8)
    memo_msc = np.zeros(ncombo, np.int64)
    memo_l8 = np.zeros(ncombo, np.int8)
    grows = np.empty((2, n), np.int64)
    pact = np.empty((2, npairs), np.int64)
    dist_pairs = np.empty(npairs, np.int64)
    pqueue = np.empty(npairs, np.int64)
    out_scratch = np.empty(n, np.int64)
    reach_scratch = np.empty(n, np.int64)
    seed_scratch = np.empty(npairs, np.int64)
    ytabs = np.empty((2, size), np.int64)
    ypres = np.empty((2, size), np.int64)
    ftab = np.empty(size, np.int64)
    fpre = np.empty(size, np.int64)
    fpm = np.empty(n, np.int64)
    pm = np.empty(n, np.int64)
    visited = np.full(size, -1, np.int64)
    queue64 = np.empty(size, np.int64)
    stamp = np.full(size, -1, np.int64)
    dist = np.zeros(size, np.int64)
    queue_s = np.empty(size, np.int64)
    state = np.zeros(1, np.int64)
    for yi in range(ysets.shape[0]):
        counters[OP_Y_TOTAL] += 1
        gcount = 1
        for s in range(n):
            grows[0, s] = perms[ysets[yi, 0], s]
        if ysets[yi, 1] >= 0:
            gcount = 2
            for s in range(n):
                grows[1, s] = perms[ysets[yi, 1], s]
        if _orbit_mask(grows, gcount, n, 1) != full:
            continue
        counters[OP_Y_TRANSITIVE] += 1
        _pair_tables(grows, gcount, n, pact)
        for g in range(gcount):
            _build_img_table(grows[g], n, ytabs[g])
            _premasks(grows[g], n, pm)
            _build_pre_table(pm, n, ypres[g])
        for fi in range(nf):
            counters[OP_INSTANCES] += 1
            d = f_dup[fi]
            emask = f_emask[fi]
            key = d * size + emask
            if memo_stamp[key] != yi:
                memo_stamp[key] = yi
                sc, mscv, l8 = _combo_chain(pact, gcount, n, d, emask, 0,
                                            dist_pairs, pqueue, out_scratch,
                                            reach_scratch, seed_scratch, 1)
                memo_sc[key] = sc
                memo_msc[key] = mscv
                memo_l8[key] = l8
                counters[OP_COMBOS] += 1
                if l8 == 0:
                    counters[OP_VIOL_LEMMA8] += 1
                    if counters[OP_EX_Y] < 0:
                        counters[OP_EX_Y] = yi
                        counters[OP_EX_F] = fi
            if memo_sc[key] == 0:
                continue
            counters[OP_QUALIFYING] += 1
            _build_img_table(f_imgs[fi], n, ftab)
            _premasks(f_imgs[fi], n, fpm)
            _build_pre_table(fpm, n, fpre)
            _check_one_point_instance(n, ftab, fpre, fpm, ytabs, ypres,
                                      gcount, memo_msc[key], counters,
                                      visited, queue64, stamp, dist,
                                      queue_s, state, yi, fi)
    return counters


@_maybe_jit
def sweep_one_point_paired(n, f_imgs, f_dup, f_emask, g1, g2, gcounts):
    """Same checks as the cross sweep, over explicit (f, Y) instances."""
    counters = np.zeros(OP_NCOUNTERS, np.int64)
    counters[OP_EX_Y] = -1
    counters[OP_EX_F] = -1
    size = 1 << n
    full = size - 1
    npairs = n * (n - 1)
    grows = np.empty((2, n), np.int64)
    pact = np.empty((2, npairs), np.int64)
    dist_pairs = np.empty(npairs, np.int64)
    pqueue = np.empty(npairs, np.int64)
    out_scratch = np.empty(n, np.int64)
    reach_scratch = np.empty(n, np.int64)
    seed_scratch = np.empty(npairs, np.int64)
    ytabs = np.empty((2, size), np.int64)
    ypres = np.empty((2, size), np.int64)
    ftab = np.empty(size, np.int64)
    fpre = np.empty(size, np.int64)
    fpm = np.empty(n, np.int64)
    pm = np.empty(n, np.int64)
    visited = np.full(size, -1, np.int64)
    queue64 = np.empty(size, np.int64)
    stamp = np.full(size, -1, np.int64)
    dist = np.zeros(size, np.int64)
    queue_s = np.empty(size, np.int64)
    state = np.zeros(1, np.int64)
    for i in range(f_imgs.shape[0]):
        counters[OP_Y_TOTAL] += 1
        gcount = gcounts[i]
        for s in range(n):
            grows[0, s] = g1[i, s]
            grows[1, s] = g2[i, s]
        if _orbit_mask(grows, gcount, n, 1) != full:
            continue
        counters[OP_Y_TRANSITIVE] += 1
        counters[OP_INSTANCES] += 1
        _pair_tables(grows, gcount, n, pact)
        d = f_dup[i]
        emask = f_emask[i]
        sc, mscv, l8 = _combo_chain(pact, gcount, n, d, emask, 0,
                                    dist_pairs, pqueue, out_scratch,
                                    reach_scratch, seed_scratch, 1)
        counters[OP_COMBOS] += 1
        if l8 == 0:
            counters[OP_VIOL_LEMMA8] += 1
            if counters[OP_EX_Y] < 0:
                counters[OP_EX_Y] = i
                counters[OP_EX_F] = i
        if sc == 0:
            continue
        counters[OP_QUALIFYING] += 1
        for g in range(gcount):
            _build_img_table(grows[g], n, ytabs[g])
            _premasks(grows[g], n, pm)
            _build_pre_table(pm, n, ypres[g])
        _build_img_table(f_imgs[i], n, ftab)
        _premasks(f_imgs[i], n, fpm)
        _build_pre_table(fpm, n, fpre)
        _check_one_point_instance(n, ftab, fpre, fpm, ytabs, ypres, gcount,
                                  mscv, counters, visited, queue64, stamp,
                                  dist, queue_s, state, i, i)
    return counters


# counter layout for sweep_primitive
PR_Y_TOTAL = 0
PR_Y_TRANSITIVE = 1
PR_Y_PRIMITIVE = 2
PR_VIOL_AGREE = 3
PR_PIA_COMBOS = 4
PR_VIOL_PIA = 5
PR_CR_CHECKS = 6
PR_VIOL_CR = 7
PR_EX_Y = 8
PR_NCOUNTERS = 9


@_maybe_jit
def _block_oracle_primitive(grows, gcount, n, parent, merge_queue):
    """Primitivity via congruence closures: for every seed pair, merging it
    and closing under the generators must collapse all states."""
    for s in range(n):
        for t in range(s + 1, n):
            for v in range(n):
                parent[v] = v
            merge_queue[0] = s
            merge_queue[1] = t
            head = 0
            tail = 2
            classes = n
            while head < tail:
                a = merge_queue[head]
                b = merge_queue[head + 1]
                head += 2
                ra = a
                while parent[ra] != ra:
                    ra = parent[ra]
                rb = b
                while parent[rb] != rb:
                    rb = parent[rb]
                if ra == rb:
                    continue
                parent[rb] = ra
                classes -= 1
                for g in range(gcount):
                    merge_queue[tail] = grows[g, a]
                    merge_queue[tail + 1] = grows[g, b]
                    tail += 2
            if classes != 1:
                return False
    return True


@_maybe_jit
def sweep_primitive_cross(n, perms, ysets, rep_imgs):
    """Primitivity sweep: method agreement on every Y, then (for primitive
    Y) strong connectivity of the chain closure for every seed combination
    and complete reachability for every simple singular in ``rep_imgs``."""
    counters = np.zeros(PR_NCOUNTERS, np.int64)
    counters[PR_EX_Y] = -1
    size = 1 << n
    full = size - 1
    npairs = n * (n - 1)
    grows = np.empty((2, n), np.int64)
    pact = np.empty((2, npairs), np.int64)
    orbid = np.empty(npairs, np.int64)
    orb_sc = np.empty(npairs, np.int8)
    orb_out = np.empty((npairs, n), np.int64)
    pqueue = np.empty(npairs, np.int64)
    out_scratch = np.empty(n, np.int64)
    st = np.empty(2, np.int64)
    parent = np.empty(n, np.int64)
    merge_queue = np.empty(4 * n * n * n, np.int64)
    memo_sig = np.empty(n * size, np.int64)
    memo_res = np.empty(n * size, np.int8)
    ytabs = np.empty((2, size), np.int64)
    ftab = np.empty(size, np.int64)
    visited = np.full(size, -1, np.int64)
    queue64 = np.empty(size, np.int64)
    imgtabs = np.empty((3, size), np.int64)
    stampc = 0
    for yi in range(ysets.shape[0]):
        counters[PR_Y_TOTAL] += 1
        gcount = 1
        for s in range(n):
            grows[0, s] = perms[ysets[yi, 0], s]
        if ysets[yi, 1] >= 0:
            gcount = 2
            for s in range(n):
                grows[1, s] = perms[ysets[yi, 1], s]
        transitive = _orbit_mask(grows, gcount, n, 1) == full
        if transitive:
            counters[PR_Y_TRANSITIVE] += 1
        _pair_tables(grows, gcount, n, pact)
        # orbital decomposition of the pair action
        for p in range(npairs):
            orbid[p] = -1
        norb = 0
        for p0 in range(npairs):
            if orbid[p0] >= 0:
                continue
            orbid[p0] = norb
            pqueue[0] = p0
            head = 0
            tail = 1
            while head < tail:
                cur = pqueue[head]
                head += 1
                for g in range(gcount):
                    nxt = pact[g, cur]
                    if orbid[nxt] < 0:
                        orbid[nxt] = norb
                        pqueue[tail] = nxt
                        tail += 1
            norb += 1
        for o in range(norb):
            for s in range(n):
                orb_out[o, s] = 0
        for p in range(npairs):
            _pair_decode(p, n, st)
            orb_out[orbid[p], st[0]] |= 1 << st[1]
        all_sc = True
        for o in range(norb):
            for s in range(n):
                out_scratch[s] = orb_out[o, s]
            if _digraph_sc(out_scratch, n):
                orb_sc[o] = 1
            else:
                orb_sc[o] = 0
                all_sc = False
        hs = transitive and all_sc
        block = _block_oracle_primitive(grows, gcount, n, parent, merge_queue)
        if hs != block:
            counters[PR_VIOL_AGREE] += 1
            if counters[PR_EX_Y] < 0:
                counters[PR_EX_Y] = yi
        if not hs:
            continue
        counters[PR_Y_PRIMITIVE] += 1
        # chain closure strong connectivity for every (duplicate, excluded)
        nmemo = 0
        for d in range(n):
            emask = 1
            while emask < size:
                if emask & (1 << d) or emask == 0:
                    emask += 1
                    continue
                sig = 0
                rest = emask
                while rest:
                    low = rest & (-rest)
                    e = 0
                    while (low >> e) & 1 == 0:
                        e += 1
                    sig |= 1 << orbid[_pair_index(e, d, n)]
                    rest ^= low
                found = -1
                for k in range(nmemo):
                    if memo_sig[k] == sig:
                        found = k
                        break
                if found < 0:
                    for s in range(n):
                        out_scratch[s] = 0
                    for o in range(norb):
                        if (sig >> o) & 1:
                            for s in range(n):
                                out_scratch[s] |= orb_out[o, s]
                    memo_sig[nmemo] = sig
                    if _digraph_sc(out_scratch, n):
                        memo_res[nmemo] = 1
                    else:
                        memo_res[nmemo] = 0
                    found = nmemo
                    nmemo += 1
                counters[PR_PIA_COMBOS] += 1
                if memo_res[found] == 0:
                    counters[PR_VIOL_PIA] += 1
                    if counters[PR_EX_Y] < 0:
                        counters[PR_EX_Y] = yi
                emask += 1
        # complete reachability for the given simple singulars
        for g in range(gcount):
            _build_img_table(grows[g], n, ytabs[g])
        for fi in range(rep_imgs.shape[0]):
            _build_img_table(rep_imgs[fi], n, ftab)
            for t in range(size):
                imgtabs[0, t] = ftab[t]
            for g in range(gcount):
                for t in range(size):
                    imgtabs[g + 1, t] = ytabs[g, t]
            stampc += 1
            cnt = _reach_count_tables(imgtabs[: gcount + 1], n, visited,
                                      queue64, stampc)
            counters[PR_CR_CHECKS] += 1
            if cnt != size - 1:
                counters[PR_VIOL_CR] += 1
                if counters[PR_EX_Y] < 0:
                    counters[PR_EX_Y] = yi
    return counters


# counter layout for sweep_equivalences
EQ_INSTANCES = 0
EQ_DIRECTABLE = 1
EQ_VIOL_LEMMA2 = 2
EQ_VIOL_PROP1 = 3
EQ_VIOL_LEMMA3 = 4
EQ_VIOL_GREEDY_LOW = 5
EQ_VIOL_GREEDY_HIGH = 6
EQ_INTERNAL = 7
EQ_EX = 8
EQ_NCOUNTERS = 9


@_maybe_jit
def sweep_equivalences(n, maps, insts):
    """Directable <=> synchronizing & transitive, and pair-merge <=>
    constant-word-exists, over explicit generator index pairs (second
    index -1 for single-generator automata); bound checks on the
    directable ones."""
    counters = np.zeros(EQ_NCOUNTERS, np.int64)
    counters[EQ_EX] = -1
    size = 1 << n
    grows = np.empty((2, n), np.int64)
    imgtabs = np.empty((2, size), np.int64)
    pretabs = np.empty((2, size), np.int64)
    pm = np.empty(n, np.int64)
    fpm = np.empty(n, np.int64)
    visited = np.full(size, -1, np.int64)
    queue64 = np.empty(size, np.int64)
    stamp = np.full(size, -1, np.int64)
    dist = np.zeros(size, np.int64)
    queue_s = np.empty(size, np.int64)
    state = np.zeros(1, np.int64)
    for i in range(insts.shape[0]):
        counters[EQ_INSTANCES] += 1
        gcount = 1
        for s in range(n):
            grows[0, s] = maps[insts[i, 0], s]
        if insts[i, 1] >= 0:
            gcount = 2
            for s in range(n):
                grows[1, s] = maps[insts[i, 1], s]
        for g in range(gcount):
            _build_img_table(grows[g], n, imgtabs[g])
            _premasks(grows[g], n, pm)
            _build_pre_table(pm, n, pretabs[g])
        transitive = _transitive_digraph(grows, gcount, n)
        sync = _sync_pair_merge(grows, gcount, n)
        state[0] += 1
        rt = _rt_len_tables(imgtabs[:gcount], n, visited, queue64, state[0])
        at = at_exact_tables(pretabs[:gcount], n)
        directable = at >= 0
        bad = False
        if directable != (sync and transitive):
            counters[EQ_VIOL_LEMMA2] += 1
            bad = True
        if sync != (rt >= 0):
            counters[EQ_VIOL_PROP1] += 1
            bad = True
        if directable:
            counters[EQ_DIRECTABLE] += 1
            # first singular generator, then the augmenting procedure
            fidx = -1
            for g in range(gcount):
                seen = 0
                for s in range(n):
                    seen |= 1 << grows[g, s]
                if _popcount(seen) < n:
                    fidx = g
                    break
            if fidx < 0 or rt < 0:
                counters[EQ_INTERNAL] += 1
                bad = True
            else:
                _premasks(grows[fidx], n, fpm)
                ordered_pre = np.empty((gcount, size), np.int64)
                for t in range(size):
                    ordered_pre[0, t] = pretabs[fidx, t]
                k = 1
                for g in range(gcount):
                    if g == fidx:
                        continue
                    for t in range(size):
                        ordered_pre[k, t] = pretabs[g, t]
                    k += 1
                state[0] += 1
                greedy, news = _greedy_len(ordered_pre, n, fpm, imgtabs,
                                           stamp, dist, queue_s, state[0])
                state[0] = news
                lemma3 = at * (n - 2) + 1
                if greedy < 0:
                    counters[EQ_INTERNAL] += 1
                    bad = True
                else:
                    if rt > lemma3:
                        counters[EQ_VIOL_LEMMA3] += 1
                        bad = True
                    if greedy < rt:
                        counters[EQ_VIOL_GREEDY_LOW] += 1
                        bad = True
                    if greedy > lemma3:
                        counters[EQ_VIOL_GREEDY_HIGH] += 1
                        bad = True
        if bad and counters[EQ_EX] < 0:
            counters[EQ_EX] = i
    return counters


@_maybe_jit
def rt_monotone_check(n, base_imgs, extra_imgs):
    """rt of the base generators versus rt with one generator appended.
    Returns (rt_base, rt_extended); -1 marks not synchronizing."""
    size = 1 << n
    xb = base_imgs.shape[0]
    imgtabs = np.empty((xb + 1, size), np.int64)
    for g in range(xb):
        _build_img_table(base_imgs[g], n, imgtabs[g])
    _build_img_table(extra_imgs, n, imgtabs[xb])
    visited = np.full(size, -1, np.int64)
    queue64 = np.empty(size, np.int64)
    rt_base = _rt_len_tables(imgtabs[:xb], n, visited, queue64, 1)
    rt_ext = _rt_len_tables(imgtabs, n, visited, queue64, 2)
    return rt_base, rt_ext
