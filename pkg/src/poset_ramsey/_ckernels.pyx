# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``; same signatures."""

from libc.stdlib cimport calloc, free, malloc
from libcpp.vector cimport vector

BACKEND = "cython"


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _popcount(unsigned long long x) nogil:
    return __builtin_popcountll(x)


def chain_lemma_labels(bytes blue, x_positions, y_prefix):
    cdef int n = len(x_positions)
    cdef int k = len(y_prefix) - 1
    cdef long size = 1 << n
    cdef const unsigned char* colors = blue
    cdef long long* code = <long long*> malloc(size * sizeof(long long))
    cdef long long* ypre = <long long*> malloc((k + 1) * sizeof(long long))
    cdef int* labels = <int*> malloc(size * sizeof(int))
    cdef long* parent = <long*> malloc(size * sizeof(long))
    cdef int* best_label = <int*> malloc(size * sizeof(int))
    cdef long* best_index = <long*> malloc(size * sizeof(long))
    cdef long* order = <long*> malloc(size * sizeof(long))
    cdef long s, t, low, u, w, pos, v
    cdef int i, j, floor, bl, label, ell, c
    cdef long fail = -1
    cdef int fail_floor = -1
    try:
        code[0] = 0
        for s in range(1, size):
            low = s & -s
            j = 0
            while (low >> j) != 1:
                j += 1
            code[s] = code[s ^ low] | (1LL << <int> x_positions[j])
        for i in range(k + 1):
            ypre[i] = y_prefix[i]
        pos = 0
        for c in range(n + 1):
            for s in range(size):
                if _popcount(s) == c:
                    order[pos] = s
                    pos += 1
        for s in range(size):
            labels[s] = -1
            parent[s] = -1
        for pos in range(size):
            s = order[pos]
            floor = 0
            w = -1
            t = s
            while t:
                low = t & -t
                t ^= low
                u = s ^ low
                bl = best_label[u]
                if w < 0 or bl > floor or (bl == floor and best_index[u] < w):
                    floor = bl
                    w = best_index[u]
            label = -1
            for ell in range(floor, k + 1):
                v = code[s] | ypre[ell]
                if not ((colors[v >> 3] >> (v & 7)) & 1):
                    label = ell
                    break
            parent[s] = w
            if label < 0:
                fail = s
                fail_floor = floor
                break
            labels[s] = label
            if w < 0 or label > floor:
                best_label[s] = label
                best_index[s] = s
            else:
                best_label[s] = floor
                best_index[s] = w
        return ([labels[s] for s in range(size)], [parent[s] for s in range(size)],
                fail, fail_floor)
    finally:
        free(code)
        free(ypre)
        free(labels)
        free(parent)
        free(best_label)
        free(best_index)
        free(order)


cdef inline int _widx(int lit) nogil:
    return 2 * lit if lit > 0 else -2 * lit + 1


def dpll(int num_vars, clauses):
    cdef vector[int] lits
    cdef vector[int] start
    cdef vector[int] units
    cdef vector[vector[int]] watches
    cdef vector[int] trail
    cdef vector[int] dmark, dvar, dflip
    cdef signed char* val = <signed char*> calloc(num_vars + 1, 1)
    cdef int ci, i, j, a, b, head, v, v2, false_lit, first, var, mark, lit, x, nclauses
    cdef bint ok, moved, taut
    watches.resize(2 * num_vars + 2)
    try:
        for clause in clauses:
            seen = list(dict.fromkeys(clause))
            taut = False
            for lit in seen:
                if -lit in seen:
                    taut = True
                    break
            if taut:
                continue
            if len(seen) == 0:
                return None
            if len(seen) == 1:
                units.push_back(seen[0])
                continue
            ci = start.size()
            start.push_back(lits.size())
            for lit in seen:
                lits.push_back(lit)
            watches[_widx(seen[0])].push_back(ci)
            watches[_widx(seen[1])].push_back(ci)
        nclauses = start.size()
        start.push_back(lits.size())

        for i in range(units.size()):
            lit = units[i]
            v = lit if lit > 0 else -lit
            x = val[v] if lit > 0 else -val[v]
            if x < 0:
                return None
            if x == 0:
                val[v] = 1 if lit > 0 else -1
                trail.push_back(v)
        head = 0
        ok = True
        while True:
            # unit propagation from ``head``
            if ok:
                while head < <int> trail.size():
                    v = trail[head]
                    head += 1
                    false_lit = -v if val[v] > 0 else v
                    i = 0
                    while i < <int> watches[_widx(false_lit)].size():
                        ci = watches[_widx(false_lit)][i]
                        a = start[ci]
                        b = start[ci + 1]
                        if lits[a] == false_lit:
                            lits[a] = lits[a + 1]
                            lits[a + 1] = false_lit
                        first = lits[a]
                        x = val[first] if first > 0 else -val[-first]
                        if x > 0:
                            i += 1
                            continue
                        moved = False
                        for j in range(a + 2, b):
                            lit = lits[j]
                            if (val[lit] if lit > 0 else -val[-lit]) >= 0:
                                lits[j] = lits[a + 1]
                                lits[a + 1] = lit
                                watches[_widx(lit)].push_back(ci)
                                watches[_widx(false_lit)][i] = watches[_widx(false_lit)].back()
                                watches[_widx(false_lit)].pop_back()
                                moved = True
                                break
                        if moved:
                            continue
                        if x < 0:
                            ok = False
                            break
                        v2 = first if first > 0 else -first
                        val[v2] = 1 if first > 0 else -1
                        trail.push_back(v2)
                        i += 1
                    if not ok:
                        break
            if not ok:
                while dmark.size() and dflip.back():
                    dmark.pop_back()
                    dvar.pop_back()
                    dflip.pop_back()
                if dmark.size() == 0:
                    return None
                mark = dmark.back()
                var = dvar.back()
                dflip[dflip.size() - 1] = 1
                while <int> trail.size() > mark:
                    val[trail.back()] = 0
                    trail.pop_back()
                val[var] = -1
                trail.push_back(var)
                head = mark
                ok = True
                continue
            var = 1
            while var <= num_vars and val[var] != 0:
                var += 1
            if var > num_vars:
                return [False] + [val[i] > 0 for i in range(1, num_vars + 1)]
            dmark.push_back(trail.size())
            dvar.push_back(var)
            dflip.push_back(0)
            val[var] = 1
            trail.push_back(var)
    finally:
        free(val)


def count_r_proper(int k, int r):
    cdef int prefix[32]
    cdef int used[33]
    cdef int choice[32]
    cdef int j, ell, count, value
    cdef long long total = 0
    if k == 0:
        return 1
    if k > 31:
        raise ValueError("k too large for the compiled counter")
    for j in range(33):
        used[j] = 0
    j = 0
    choice[0] = 0
    # iterative DFS; choice[j] is the last value tried at position j
    while j >= 0:
        if choice[j] > 0:
            used[choice[j]] = 0
        value = choice[j] + 1
        while value <= k and used[value]:
            value += 1
        if value > k:
            choice[j] = 0
            j -= 1
            continue
        choice[j] = value
        prefix[j] = value
        count = 0
        for ell in range(j + 1):
            if prefix[ell] >= j:
                count += 1
        if count > r:
            continue
        used[value] = 1
        if j + 1 == k:
            total += 1
            continue
        j += 1
        choice[j] = 0
    return total
