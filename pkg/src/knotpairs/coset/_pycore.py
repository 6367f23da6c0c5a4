"""Pure-Python Felsch coset enumeration kernel.

Columns are ``2*i`` for generator ``i`` and ``2*i + 1`` for its inverse, so the
inverse column of ``x`` is ``x ^ 1``. Relator cycles arrive flattened:
cycle ``k`` is ``cyc_data[cyc_off[k]:cyc_off[k+1]]`` and the cycles starting with
column ``x`` are ``col_cyc[col_off[x]:col_off[x+1]]``. Subgroup words use the same
``data``/``off`` layout.

Returns ``(completed, table, defined, coincidences, steps)`` where ``table`` is
the compacted table (list of rows) when completed, else ``None``. The compiled
kernel must return identical values for identical input.
"""

from __future__ import annotations


def enumerate_flat(ncols, cyc_data, cyc_off, col_off, col_cyc, sub_data, sub_off, budget):
    table: list[list[int]] = [[-1] * ncols]
    parent: list[int] = [0]
    deductions: list[tuple[int, int]] = []
    coincidences = 0
    steps = 0

    def rep(c: int) -> int:
        r = c
        while parent[r] != r:
            r = parent[r]
        while parent[c] != r:
            parent[c], c = r, parent[c]
        return r

    def coincidence(a: int, b: int) -> None:
        queue: list[int] = []

        def merge(k: int, l: int) -> None:
            nonlocal coincidences
            k, l = rep(k), rep(l)
            if k == l:
                return
            if l < k:
                k, l = l, k
            parent[l] = k
            queue.append(l)
            coincidences += 1

        merge(a, b)
        qi = 0
        while qi < len(queue):
            e = queue[qi]
            qi += 1
            row = table[e]
            for x in range(ncols):
                f = row[x]
                if f < 0:
                    continue
                ix = x ^ 1
                table[f][ix] = -1
                e1, f1 = rep(e), rep(f)
                t = table[e1][x]
                if t >= 0:
                    merge(f1, t)
                    continue
                t = table[f1][ix]
                if t >= 0:
                    merge(e1, t)
                    continue
                table[e1][x] = f1
                table[f1][ix] = e1
                deductions.append((e1, x))

    def scan(c: int, start: int, end: int) -> None:
        f, i = c, start
        while i < end:
            nxt = table[f][cyc_data[i]]
            if nxt < 0:
                break
            f = nxt
            i += 1
        if i == end:
            if f != c:
                coincidence(f, c)
            return
        b, j = c, end - 1
        while j >= i:
            nxt = table[b][cyc_data[j] ^ 1]
            if nxt < 0:
                break
            b = nxt
            j -= 1
        if j < i:
            coincidence(f, b)
        elif j == i:
            x = cyc_data[i]
            table[f][x] = b
            table[b][x ^ 1] = f
            deductions.append((f, x))

    def process() -> None:
        nonlocal steps
        while deductions:
            c, x = deductions.pop()
            if parent[c] != c:
                continue
            for k in col_cyc[col_off[x] : col_off[x + 1]]:
                steps += 1
                scan(c, cyc_off[k], cyc_off[k + 1])
                if parent[c] != c:
                    break

    def define(c: int, x: int) -> bool:
        if len(table) >= budget:
            return False
        d = len(table)
        table.append([-1] * ncols)
        parent.append(d)
        table[c][x] = d
        table[d][x ^ 1] = c
        deductions.append((c, x))
        return True

    def scan_and_fill(start: int, end: int) -> bool:
        f, i = 0, start
        b, j = 0, end - 1
        while True:
            while i <= j:
                nxt = table[f][sub_data[i]]
                if nxt < 0:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != 0:
                    coincidence(f, 0)
                return True
            while j >= i:
                nxt = table[b][sub_data[j] ^ 1]
                if nxt < 0:
                    break
                b = nxt
                j -= 1
            if j < i:
                coincidence(f, b)
                return True
            if j == i:
                x = sub_data[i]
                table[f][x] = b
                table[b][x ^ 1] = f
                deductions.append((f, x))
                return True
            if not define(f, sub_data[i]):
                return False

    for s in range(len(sub_off) - 1):
        if sub_off[s] == sub_off[s + 1]:
            continue
        if not scan_and_fill(sub_off[s], sub_off[s + 1]):
            return False, None, len(table), coincidences, steps
        process()

    c = 0
    while True:
        while c < len(table):
            if parent[c] == c:
                row = table[c]
                for x in range(ncols):
                    if parent[c] != c:
                        break
                    if row[x] < 0:
                        if not define(c, x):
                            return False, None, len(table), coincidences, steps
                        process()
            c += 1
        holes = [k for k in range(len(table)) if parent[k] == k and -1 in table[k]]
        if not holes:
            break
        c = holes[0]

    live = [k for k in range(len(table)) if parent[k] == k]
    new_id = {k: i for i, k in enumerate(live)}
    compact = [[new_id[table[k][x]] for x in range(ncols)] for k in live]
    return True, compact, len(table), coincidences, steps
