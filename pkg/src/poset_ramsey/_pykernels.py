"""Pure-Python implementations of the hot kernels.

Each function here has a twin with the same signature in ``_ckernels.pyx``;
``kernels.py`` picks one at import time.  Inputs are plain lists, ints and
bytes so both backends agree on the calling convention.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def chain_lemma_labels(
    blue: bytes, x_positions: Sequence[int], y_prefix: Sequence[int]
) -> tuple[list[int], list[int], int, int]:
    """Label every subset of the X ground set, stopping at the first failure.

    ``blue`` holds one color bit per subset code (LSB-first, 1 = blue);
    ``y_prefix[i]`` is the code of the first ``i`` elements of the ordering.
    Subsets of X are addressed by their compressed index ``s`` (bit ``j`` of
    ``s`` selects ``x_positions[j]``); numeric order of ``s`` agrees with the
    order of the actual subset codes.

    Returns ``(labels, parent, fail, floor)``: ``labels[s]`` is -1 for
    unprocessed subsets, ``parent[s]`` is the index of the chosen maximising
    proper subset (-1 for the empty set), ``fail`` is the index of the subset
    with no red vertex above its floor (-1 when every label exists) and
    ``floor`` is that subset's floor label.
    """
    n = len(x_positions)
    k = len(y_prefix) - 1
    size = 1 << n
    code = [0] * size
    for s in range(1, size):
        low = s & -s
        code[s] = code[s ^ low] | (1 << x_positions[low.bit_length() - 1])

    labels = [-1] * size
    parent = [-1] * size
    # Best (label, least index) over all subsets of s, s included.
    best_label = [0] * size
    best_index = [0] * size

    order = sorted(range(size), key=lambda s: (s.bit_count(), s))
    for s in order:
        floor = 0
        w = -1
        t = s
        while t:
            low = t & -t
            t ^= low
            u = s ^ low
            bl, bi = best_label[u], best_index[u]
            if w < 0 or bl > floor or (bl == floor and bi < w):
                floor, w = bl, bi
        base = code[s]
        label = -1
        for ell in range(floor, k + 1):
            v = base | y_prefix[ell]
            if not blue[v >> 3] >> (v & 7) & 1:
                label = ell
                break
        parent[s] = w
        if label < 0:
            return labels, parent, s, floor
        labels[s] = label
        if w < 0 or label > floor or (label == floor and s < w):
            best_label[s], best_index[s] = label, s
        else:
            best_label[s], best_index[s] = floor, w
    return labels, parent, -1, -1


def dpll(num_vars: int, clauses: Sequence[Sequence[int]]) -> list[bool] | None:
    """Satisfying assignment (index 0 unused) or None.

    Chronological DPLL with two watched literals; decisions take the lowest
    unassigned variable and try the positive literal first.
    """
    val = [0] * (num_vars + 1)
    watches: list[list[int]] = [[] for _ in range(2 * num_vars + 2)]

    def widx(lit: int) -> int:
        return 2 * lit if lit > 0 else -2 * lit + 1

    cls: list[list[int]] = []
    units: list[int] = []
    for clause in clauses:
        lits = list(dict.fromkeys(clause))
        if any(-lit in lits for lit in lits):
            continue
        if not lits:
            return None
        if len(lits) == 1:
            units.append(lits[0])
            continue
        ci = len(cls)
        cls.append(lits)
        watches[widx(lits[0])].append(ci)
        watches[widx(lits[1])].append(ci)

    trail: list[int] = []

    def value(lit: int) -> int:
        x = val[lit if lit > 0 else -lit]
        return x if lit > 0 else -x

    def assign(lit: int) -> None:
        v = lit if lit > 0 else -lit
        val[v] = 1 if lit > 0 else -1
        trail.append(v)

    def propagate(head: int) -> bool:
        while head < len(trail):
            v = trail[head]
            head += 1
            false_lit = -v if val[v] > 0 else v
            wl = watches[widx(false_lit)]
            i = 0
            while i < len(wl):
                ci = wl[i]
                c = cls[ci]
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                first = c[0]
                if value(first) > 0:
                    i += 1
                    continue
                moved = False
                for j in range(2, len(c)):
                    if value(c[j]) >= 0:
                        c[1], c[j] = c[j], c[1]
                        watches[widx(c[1])].append(ci)
                        wl[i] = wl[-1]
                        wl.pop()
                        moved = True
                        break
                if moved:
                    continue
                if value(first) < 0:
                    return False
                assign(first)
                i += 1
        return True

    for lit in units:
        x = value(lit)
        if x < 0:
            return None
        if x == 0:
            assign(lit)
    ok = propagate(0)
    decisions: list[tuple[int, int, bool]] = []
    while True:
        if not ok:
            while decisions and decisions[-1][2]:
                decisions.pop()
            if not decisions:
                return None
            mark, var, _ = decisions.pop()
            for v in trail[mark:]:
                val[v] = 0
            del trail[mark:]
            decisions.append((mark, var, True))
            assign(-var)
            ok = propagate(mark)
            continue
        var = 1
        while var <= num_vars and val[var]:
            var += 1
        if var > num_vars:
            return [False] + [x > 0 for x in val[1:]]
        mark = len(trail)
        decisions.append((mark, var, False))
        assign(var)
        ok = propagate(mark)


def count_r_proper(k: int, r: int) -> int:
    """Number of permutations of [k] with |{l <= j : p(l) >= j-1}| <= r for all j.

    The condition at ``j`` only involves the first ``j`` values, so a prefix
    that violates it is abandoned with its whole subtree.
    """
    prefix = [0] * k
    used = [False] * (k + 1)

    def rec(j: int) -> int:
        if j == k:
            return 1
        total = 0
        for value in range(1, k + 1):
            if used[value]:
                continue
            prefix[j] = value
            # Condition at position j+1 (1-based): count values >= j.
            count = 0
            for ell in range(j + 1):
                if prefix[ell] >= j:
                    count += 1
            if count > r:
                continue
            used[value] = True
            total += rec(j + 1)
            used[value] = False
        return total

    return rec(0)
