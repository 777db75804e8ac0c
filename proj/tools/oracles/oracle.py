#!/usr/bin/env python3
"""Independent brute-force oracle for the catcomb library.

Every constant the C++ test suite hard-codes (tables, spot values, frozen
bijection outputs) is recomputed here from first principles: direct
enumeration plus naive, definition-level implementations of each map.
Nothing here shares code with the C++ sources.

Run:  python3 tools/oracles/oracle.py
Prints one line per check; exits nonzero if any check fails.
"""

from __future__ import annotations

import random
import sys
from collections import Counter
from itertools import combinations
from math import comb

sys.setrecursionlimit(100000)

FAILURES = []


def check(name: str, ok: bool, detail: str = "") -> None:
    line = f"{'OK  ' if ok else 'FAIL'} {name}"
    if detail:
        line += f"  [{detail}]"
    print(line)
    if not ok:
        FAILURES.append(name)


# ----------------------------------------------------------------------------
# Paths and statistics
# ----------------------------------------------------------------------------

def heights(p: str) -> list[int]:
    h = [0]
    for c in p:
        h.append(h[-1] + (1 if c == "U" else -1))
    return h


def is_balanced(p: str) -> bool:
    return p.count("U") == p.count("D")


def is_dyck(p: str) -> bool:
    return is_balanced(p) and min(heights(p)) >= 0


def is_inverted(p: str) -> bool:
    return is_balanced(p) and max(heights(p)) <= 0


def runs(p: str) -> list[tuple[str, int, int]]:
    """Maximal runs as (letter, start_step, length)."""
    out = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        out.append((p[i], i, j - i))
        i = j
    return out


def ascent_lengths(p: str) -> list[int]:
    return [l for c, _, l in runs(p) if c == "U"]


def count_factor(p: str, a: str, b: str) -> int:
    return sum(1 for i in range(len(p) - 1) if p[i] == a and p[i + 1] == b)


def peaks(p):
    return count_factor(p, "U", "D")


def valleys(p):
    return count_factor(p, "D", "U")


def hills(p: str) -> int:
    h = heights(p)
    return sum(1 for i in range(len(p) - 1)
               if p[i] == "U" and p[i + 1] == "D" and h[i] == 0)


def dxd(p: str) -> int:
    """Occurrences of DUD or DDD, overlapping."""
    return sum(1 for i in range(len(p) - 2) if p[i] == "D" and p[i + 2] == "D")


def long_interior_inclines(p: str) -> int:
    rs = runs(p)
    cnt = 0
    for idx, (c, _, l) in enumerate(rs):
        if idx == 0 and c == "U":
            continue  # initial ascent
        if idx == len(rs) - 1 and c == "D":
            continue  # terminal descent
        if l >= 2:
            cnt += 1
    return cnt


def long_nonterminal_inclines(p: str) -> int:
    rs = runs(p)
    cnt = 0
    for idx, (c, _, l) in enumerate(rs):
        if idx == len(rs) - 1 and c == "D":
            continue
        if l >= 2:
            cnt += 1
    return cnt


def long_noninitial_ascents(p: str) -> int:
    return sum(1 for c, s, l in runs(p) if c == "U" and s != 0 and l >= 2)


def odd_ascents(p: str) -> int:
    return sum(1 for l in ascent_lengths(p) if l % 2 == 1)


def terminal_descent_len(p: str) -> int:
    rs = runs(p)
    if rs and rs[-1][0] == "D":
        return rs[-1][2]
    return 0


def first_ascent_len(p: str) -> int:
    rs = runs(p)
    if rs and rs[0][0] == "U":
        return rs[0][2]
    return 0


def returns(p: str) -> int:
    h = heights(p)
    return sum(1 for v in range(1, len(p) + 1) if h[v] == 0)


def x_stat(p: str) -> int:
    """Upsteps starting at height >= 0."""
    h = heights(p)
    return sum(1 for i in range(len(p)) if p[i] == "U" and h[i] >= 0)


def max_dimers(p: str) -> int:
    return sum(l // 2 for l in ascent_lengths(p))


def strict_indicator(p: str) -> int:
    return 1 if returns(p) == 1 else 0


def x1_plus_x2(p: str) -> int:
    return long_interior_inclines(p) + strict_indicator(p)


def matching_downstep(p: str, u: int) -> int:
    depth = 0
    for j in range(u, len(p)):
        depth += 1 if p[j] == "U" else -1
        if depth == 0:
            return j
    raise ValueError("no matching downstep")


def associated_downstep(p: str, u: int) -> int:
    depth = 0
    best = None
    for j in range(u, len(p)):
        depth += 1 if p[j] == "U" else -1
        if depth < 0:
            break
        if depth == 0:
            best = j
    if best is None:
        raise ValueError("no associated downstep")
    return best


def matching_vertex(p: str, v: int) -> int:
    h = heights(p)
    if h[v] > 0:
        for w in range(v + 1, len(p) + 1):
            if h[w] == h[v]:
                return w
    elif h[v] < 0:
        for w in range(v - 1, -1, -1):
            if h[w] == h[v]:
                return w
    raise ValueError("no matching vertex")


def components(p: str) -> list[str]:
    h = heights(p)
    out = []
    start = 0
    for v in range(1, len(p) + 1):
        if h[v] == 0:
            out.append(p[start:v])
            start = v
    return out


def first_component(p: str) -> tuple[str, str]:
    c = components(p)[0]
    return c, p[len(c):]


def interior(p: str) -> str:
    """I(P): interior of the first component."""
    if not p:
        raise ValueError("interior of empty path")
    c, _ = first_component(p)
    return c[1:-1]


def elevate(p: str) -> str:
    return "U" + p + "D"


def has_hill(p: str) -> bool:
    return hills(p) > 0


def hill_producing_upsteps(p: str) -> int:
    h = heights(p)
    cnt = 0
    for u in range(len(p)):
        if p[u] != "U":
            continue
        m = matching_downstep(p, u)
        if any(p[i] == "U" and p[i + 1] == "D" and h[i] == h[u] + 1
               for i in range(u + 1, m - 1)):
            cnt += 1
    return cnt


STATS = {
    "UU": lambda p: count_factor(p, "U", "U"),
    "UD": peaks,
    "DU": valleys,
    "DD": lambda p: count_factor(p, "D", "D"),
    "HILLS": hills,
    "DXD": dxd,
    "LONG_INTERIOR": long_interior_inclines,
    "ODD_ASCENTS": odd_ascents,
    "MAX_DIMERS": max_dimers,
}


# ----------------------------------------------------------------------------
# Trees
# ----------------------------------------------------------------------------

def tree_from_dyck(p: str) -> list:
    root: list = []
    stack = [root]
    for c in p:
        if c == "U":
            node: list = []
            stack[-1].append(node)
            stack.append(node)
        else:
            stack.pop()
    assert len(stack) == 1
    return root


def dyck_from_tree(t: list) -> str:
    out = []

    def rec(node):
        for ch in node:
            out.append("U")
            rec(ch)
            out.append("D")

    rec(t)
    return "".join(out)


def nodes_adj_leaf(t: list) -> int:
    cnt = 0

    def rec(node, is_root):
        nonlocal cnt
        if not is_root and node and any(not ch for ch in node):
            cnt += 1
        for ch in node:
            rec(ch, False)

    rec(t, True)
    return cnt


# ----------------------------------------------------------------------------
# Enumeration
# ----------------------------------------------------------------------------

def words(n_up: int, n_dn: int, dyck: bool = False, inverted: bool = False):
    """All words with the given step counts, lexicographic with U < D."""
    word = []

    def rec(u, d, h):
        if u == 0 and d == 0:
            yield "".join(word)
            return
        if u > 0 and (not inverted or h < 0):
            word.append("U")
            yield from rec(u - 1, d, h + 1)
            word.pop()
        if d > 0 and (not dyck or h > 0):
            word.append("D")
            yield from rec(u, d - 1, h - 1)
            word.pop()

    yield from rec(n_up, n_dn, 0)


def dyck_paths(n):
    return words(n, n, dyck=True)


def balanced_paths(n):
    return words(n, n)


def inverted_paths(n):
    return words(n, n, inverted=True)


def schroder_paths(n):
    """Schroder n-paths (x-span 2n), lexicographic with F < U < D."""
    word = []

    def rec(rem, h):
        if rem == 0:
            if h == 0:
                yield "".join(word)
            return
        if h < 0 or rem < h or (rem - h) % 2 != 0:
            return
        if rem >= 2:
            word.append("F")
            yield from rec(rem - 2, h)
            word.pop()
        word.append("U")
        yield from rec(rem - 1, h + 1)
        word.pop()
        if h > 0:
            word.append("D")
            yield from rec(rem - 1, h - 1)
            word.pop()

    yield from rec(2 * n, 0)


def ia_vertices(p: str) -> list[int]:
    return [v for v in range(1, len(p))
            if p[v - 1] == "U" and p[v] == "U"]


def df_vertices(p: str) -> list[int]:
    n2 = len(p)
    return [v for v in range(n2 + 1)
            if (v == 0 or p[v - 1] == "U") and (v == n2 or p[v] == "U")]


def marked_ia(n, k, base="balanced"):
    gen = balanced_paths(n) if base == "balanced" else dyck_paths(n)
    for p in gen:
        for ms in combinations(ia_vertices(p), k):
            yield p, ms


def marked_df(n, k, base="dyck"):
    gen = balanced_paths(n) if base == "balanced" else dyck_paths(n)
    for p in gen:
        for ms in combinations(df_vertices(p), k):
            yield p, ms


def df_parity_ok(p: str, marks) -> bool:
    """Each ascent: length minus number of its marks is even (endpoint marks
    count toward the ascent they touch)."""
    ms = set(marks)
    n2 = len(p)
    for c, s, l in runs(p):
        if c != "U":
            continue
        group = set(range(s + 1, s + l))  # interior vertices
        if s == 0:
            group.add(0)
        if s + l == n2:
            group.add(n2)
        if (l - len(group & ms)) % 2 != 0:
            return False
    return True


def marked_df_parity(n, k):
    """Balanced n-paths with n-2k DF marks obeying the per-ascent parity rule."""
    nm = n - 2 * k
    if nm < 0:
        return
    for p in balanced_paths(n):
        for ms in combinations(df_vertices(p), nm):
            if df_parity_ok(p, ms):
                yield p, ms


def finelike(n, j, k, base="balanced"):
    """Balanced (or Dyck) n-paths with k ascents, all long, and j marks on IA
    vertices excluding the first interior vertex of each ascent."""
    gen = balanced_paths(n) if base == "balanced" else dyck_paths(n)
    for p in gen:
        asc = [(s, l) for c, s, l in runs(p) if c == "U"]
        if len(asc) != k or any(l < 2 for _, l in asc):
            continue
        markable = [v for s, l in asc for v in range(s + 2, s + l)]
        for ms in combinations(markable, j):
            yield p, ms


def ne_words(n_e, n_n):
    """Words over E,N with given counts, lexicographic with E < N."""
    word = []

    def rec(e, nn):
        if e == 0 and nn == 0:
            yield "".join(word)
            return
        if e > 0:
            word.append("E")
            yield from rec(e - 1, nn)
            word.pop()
        if nn > 0:
            word.append("N")
            yield from rec(e, nn - 1)
            word.pop()

    yield from rec(n_e, n_n)


def path_points(word: str, start):
    x, y = start
    pts = [(x, y)]
    for c in word:
        if c == "E":
            x += 1
        else:
            y += 1
        pts.append((x, y))
    return pts


def levine_pairs(r, s):
    """Nonintersecting pairs: B (1,0)->(r,s-1), T (0,1)->(r-1,s)."""
    for b in ne_words(r - 1, s - 1):
        bp = set(path_points(b, (1, 0)))
        for t in ne_words(r - 1, s - 1):
            if bp.isdisjoint(path_points(t, (0, 1))):
                yield b, t


def gv_li_pairs(n, k):
    """Nonintersecting pairs: B (1,0)->(k+2,n-1-k), T (0,1)->(k,n-1-k)."""
    if n - 1 - k < 0 or n - 2 - k < 0:
        return
    for b in ne_words(k + 1, n - 1 - k):
        bp = set(path_points(b, (1, 0)))
        for t in ne_words(k, n - 2 - k):
            if bp.isdisjoint(path_points(t, (0, 1))):
                yield b, t


def gv_x1x2_pairs(n, k):
    """Nonintersecting pairs: B (2,0)->(k+2,n-1-k), T (0,0)->(k,n-1-k)."""
    if n - 1 - k < 0:
        return
    for b in ne_words(k, n - 1 - k):
        bp = set(path_points(b, (2, 0)))
        for t in ne_words(k, n - 1 - k):
            if bp.isdisjoint(path_points(t, (0, 0))):
                yield b, t


# ----------------------------------------------------------------------------
# Bijections
# ----------------------------------------------------------------------------

def cycle_rotate(p: str, i: int, marks=()):
    """Rotation bijection from the X=0 class onto the X=i class."""
    h = heights(p)
    ups = [j for j in range(len(p)) if p[j] == "U"]
    assert ups and 1 <= i <= len(ups)
    order = sorted(ups, key=lambda j: (-h[j + 1], -j))
    assert order[0] == ups[-1]  # the final upstep is always #1
    uj = order[i - 1]
    band_top = h[uj + 1]
    d = max(t for t in range(uj) if p[t] == "D" and h[t] == band_top)
    pre, post = p[:d], p[d + 1:]
    newp = post + "D" + pre
    newmarks = tuple(sorted(
        v - (d + 1) if v >= d + 2 else v + len(post) + 1 for v in marks))
    return newp, newmarks


def df_to_schroder(p: str, marks) -> str:
    if not p and marks:
        raise ValueError("empty path cannot carry a transferable mark")
    to_f = set()
    to_del = set()
    for v in marks:
        assert p[v] == "U"
        to_del.add(v)
        to_f.add(matching_downstep(p, v))
    out = []
    for j, c in enumerate(p):
        if j in to_del:
            continue
        out.append("F" if j in to_f else c)
    return "".join(out)


def schroder_to_df(s: str):
    lev = [0]
    for c in s:
        lev.append(lev[-1] + (1 if c == "U" else -1 if c == "D" else 0))
    inserts = Counter()
    for f, c in enumerate(s):
        if c != "F":
            continue
        a = lev[f]
        e = 0
        for w in range(f, 0, -1):
            if lev[w] == a and s[w - 1] == "U":
                e = w
                break
        inserts[e] += 1
    out = []
    marks = []
    for j in range(len(s) + 1):
        for _ in range(inserts[j]):
            marks.append(len(out))
            out.append("U")
        if j < len(s):
            out.append("D" if s[j] == "F" else s[j])
    return "".join(out), tuple(sorted(marks))


def du_to_dxd(p: str) -> str:
    """phi: sends #DU (valleys) to #DXD."""
    if not p:
        return ""
    if terminal_descent_len(p) % 2 == 0:
        # P = U P1 D U P2 D ... U P_{l-1} D U P_l (U Q D) D
        comps = components(p)
        last = comps[-1]
        x = last[1:-1]          # interior of last component; nonempty here
        xc = components(x)
        q = xc[-1][1:-1]
        p_l = "".join(xc[:-1])
        parts = [c[1:-1] for c in comps[:-1]] + [p_l]
        out = []
        for pi in parts:
            out.append("U" + du_to_dxd(pi))
        out.append("U" + "D" * (len(parts) + 1) + du_to_dxd(q))
        return "".join(out)
    # odd terminal descent: peel maximal run of trailing components whose
    # interiors have even terminal descent
    comps = components(p)
    cut = len(comps)
    while cut > 0 and terminal_descent_len(comps[cut - 1][1:-1]) % 2 == 0:
        cut -= 1
    p0 = "".join(comps[:cut])
    out = [du_to_dxd(p0)]
    for c in comps[cut:]:
        out.append("UD" + du_to_dxd(c[1:-1]))
    return "".join(out)


def dxd_to_du(p: str) -> str:
    """psi = phi^{-1} (recursive form)."""
    if not p:
        return ""
    if not has_hill(p):
        c, q = first_component(p)
        ell = terminal_descent_len(c) - 1
        body = c[:-(ell + 1)]  # U f1 U f2 ... U f_l U
        # split body at the last passage to each level
        segs = []
        pos = len(body) - 1  # body[pos] == 'U' (the final template upstep)
        for lvl in range(ell, 0, -1):
            # find the template upstep reaching lvl: last step from lvl-1
            h = heights(body)
            j = max(t for t in range(pos) if body[t] == "U" and h[t] == lvl - 1
                    and min(h[t + 1:pos + 1] or [lvl]) >= lvl)
            segs.append(body[j + 1:pos])
            pos = j
        segs.reverse()  # f1 ... f_l
        out = []
        for fi in segs[:-1]:
            out.append("U" + dxd_to_du(fi) + "D")
        out.append("U" + dxd_to_du(segs[-1]))
        out.append("U" + dxd_to_du(q) + "DD")
        return "".join(out)
    # has hills: split at hills
    comps = components(p)
    parts = [[]]
    for c in comps:
        if c == "UD":
            parts.append([])
        else:
            parts[-1].append(c)
    parts = ["".join(x) for x in parts]
    out = [dxd_to_du(parts[0])]
    for x in parts[1:]:
        out.append("U" + dxd_to_du(x) + "D")
    return "".join(out)


def dxd_to_du_explicit(p: str, order=None) -> str:
    """Cut-and-paste form of psi with red/blue colored steps."""
    n2 = len(p)
    reds = {i + 2 for i in range(n2 - 2)
            if p[i] == p[i + 1] == p[i + 2] == "D"}
    blues = []
    for i in range(n2 - 2):
        if p[i] == "D" and p[i + 1] == "U" and p[i + 2] == "U":
            m = matching_downstep(p, i + 1)
            if m + 1 < n2 and p[m + 1] == "D" and (m + 1) in reds:
                continue
            blues.append(i + 1)
    steps = [[c, "red" if j in reds else "blue" if j in blues else "", j]
             for j, c in enumerate(p)]
    if order is None:
        order = list(range(len(blues)))
    blue_ids = [steps[j] for j in blues]
    for bi in order:
        tag = blue_ids[bi]
        u = steps.index(tag)
        # matching downstep in the current path
        depth = 0
        m = u
        for j in range(u, len(steps)):
            depth += 1 if steps[j][0] == "U" else -1
            if depth == 0:
                m = j
                break
        seg = steps[u:m + 1]
        # rightmost peak strictly preceding u
        pk = max(i for i in range(u - 1)
                 if steps[i][0] == "U" and steps[i + 1][0] == "D")
        steps = steps[:pk + 1] + seg + steps[pk + 1:u] + steps[m + 1:]
    # reds: simultaneous
    moves = []
    for j, st in enumerate(steps):
        if st[1] != "red":
            continue
        assert steps[j - 1][0] == "D"
        # upstep whose matching downstep is j-1
        found = None
        for u in range(j - 1):
            if steps[u][0] != "U":
                continue
            depth = 0
            for t in range(u, len(steps)):
                depth += 1 if steps[t][0] == "U" else -1
                if depth == 0:
                    if t == j - 1:
                        found = u
                    break
            if found is not None:
                break
        assert found is not None
        moves.append((st, steps[found]))
    for red_tag, u_tag in moves:
        steps.remove(red_tag)
        steps.insert(steps.index(u_tag), red_tag)
    return "".join(st[0] for st in steps)


def deutsch(p: str) -> str:
    if not p:
        return ""
    m = matching_downstep(p, 0)
    p1, p2 = p[1:m], p[m + 1:]
    return "U" + deutsch(p2) + "D" + deutsch(p1)


def reverse_path(p: str) -> str:
    return "".join("U" if c == "D" else "D" for c in reversed(p))


def terminal_ud_run(p: str) -> int:
    """max m with p = X . D . (UD)^m   (for p=(UD)^j this is j-1)."""
    m = 0
    q = p
    while len(q) >= 3 and q.endswith("UD") and q[-3] == "D":
        m += 1
        q = q[:-2]
    return m


def levine_to_dyck(b: str, t: str) -> str:
    """B,T have r-1 E's each; ascents 1+a_i from T, descents 1+d_i from B."""

    def vec(w):
        out = []
        cnt = 0
        for c in w:
            if c == "N":
                cnt += 1
            else:
                out.append(cnt)
                cnt = 0
        out.append(cnt)
        return out

    a, d = vec(t), vec(b)
    assert len(a) == len(d)
    return "".join("U" * (1 + ai) + "D" * (1 + di) for ai, di in zip(a, d))


def dyck_to_levine(p: str):
    rs = runs(p)
    asc = [l for c, _, l in rs if c == "U"]
    dsc = [l for c, _, l in rs if c == "D"]
    assert len(asc) == len(dsc)
    t = "E".join("N" * (l - 1) for l in asc)
    b = "E".join("N" * (l - 1) for l in dsc)
    return b, t


def gv_adjust(b: str, t: str, variant: str):
    """Returns (cls, B', T') with cls = 'A' iff adjusted top ends E.

    variant "li": append flip(B's last step) to T.
    variant "x1x2": additionally prepend flip(T's first step) to B; when T starts
    with E the result is normalized by translating both paths by (-1,+1),
    which leaves the words unchanged.
    """
    flip = {"N": "E", "E": "N"}
    nb = b[:-1]
    nt = t + flip[b[-1]]
    if variant == "x1x2":
        nb = flip[t[0]] + nb
        nt = nt[1:]
    cls = "A" if nt.endswith("E") else "B"
    return cls, nb, nt


def chain(b: str, t: str, variant: str) -> tuple[str, str]:
    cls, nb, nt = gv_adjust(b, t, variant)
    q = levine_to_dyck(nb, nt)
    return cls, du_to_dxd(deutsch(reverse_path(q)))


# --- mark transfer to odd ascents (and back) --------------------------------

def marks_to_odd_ascents(p: str, marks) -> str:
    h = heights(p)
    removes = set()
    inserts = Counter()
    for v in marks:
        if h[v] == 0:
            continue
        removes.add(v)
        inserts[matching_vertex(p, v)] += 1
    out = []
    for j in range(len(p) + 1):
        out.append("U" * inserts[j])
        if j < len(p) and j not in removes:
            out.append(p[j])
    return "".join(out)


def odd_ascents_to_marks(q: str):
    n2 = len(q)
    h = heights(q)
    steps = [[c, j] for j, c in enumerate(q)]  # [letter, tag]; tag for marks

    above = []  # transferred initial steps, west to east
    below = []  # transferred terminal steps, east to west
    ground = []  # tag of arriving step for interior ground marks, or -1/-2
    for c, s, l in runs(q):
        if c != "U" or l % 2 == 0:
            continue
        if s == 0:
            ground.append(-1)  # mark at vertex 0
        elif s + l == n2:
            ground.append(-2)  # mark at final vertex
        elif h[s] >= 0:
            above.append(steps[s])
        elif h[s + l] <= 0:
            below.append(steps[s + l - 1])
        else:
            g = s + (0 - h[s])  # the ascent's height-0 interior vertex
            ground.append(steps[g][1])  # track its departing step

    def cur_heights():
        hh = [0]
        for st in steps:
            hh.append(hh[-1] + (1 if st[0] == "U" else -1))
        return hh

    marks = []  # (kind, payload): resolved to vertices at the end
    for tag in above:
        pos = steps.index(tag)
        hh = cur_heights()
        a = hh[pos]
        del steps[pos]
        w = None
        for x in range(pos, 0, -1):
            if hh[x] == a + 1 and steps[x - 1][0] == "U":
                w = x
                break
        if w is None:
            raise ValueError("transfer recovery failed")
        new = ["U", ("mark", len(marks))]
        steps.insert(w, new)
        marks.append(("before", new))
    for tag in reversed(below):
        pos = steps.index(tag)
        hh = cur_heights()
        b = hh[pos + 1]
        del steps[pos]
        hh = cur_heights()
        w = None
        for x in range(pos + 1, len(steps) + 1):
            if hh[x] == b - 1:
                w = x
                break
        if w is None:
            raise ValueError("transfer recovery failed")
        new = ["U", ("mark", len(marks))]
        steps.insert(w, new)
        marks.append(("before", new))

    out = "".join(st[0] for st in steps)
    verts = []
    for kind, payload in marks:
        verts.append(steps.index(payload))
    for g in ground:
        if g == -1:
            verts.append(0)
        elif g == -2:
            verts.append(len(steps))
        else:
            verts.append(next(i for i, st in enumerate(steps)
                              if st[1] == g))
    return out, tuple(sorted(verts))


# --- dimer <-> hill-producing ------------------------------------------------

def split_at_hills(p: str) -> list[str]:
    parts = [[]]
    for c in components(p):
        if c == "UD":
            parts.append([])
        else:
            parts[-1].append(c)
    return ["".join(x) for x in parts]


def dimer_to_hill(p: str) -> str:
    if not p:
        return ""
    comps = components(p)
    if len(comps) >= 2:
        return "".join(dimer_to_hill(c) for c in comps)
    if p == "UD":
        return "UD"
    x = p[1:-1]  # I(P)
    fal = first_ascent_len(p)
    if fal % 2 == 0:
        if not has_hill(x):
            c1, p2 = first_component(x)
            p1 = c1[1:-1]
            return "U" + dimer_to_hill(p1) + "UD" + dimer_to_hill(p2) + "D"
        c1, p2 = first_component(x)
        p1 = c1[1:-1]
        if p1 == "":
            return "UUD" + dimer_to_hill(p2) + "D"
        if not has_hill(p1):
            return "UU" + dimer_to_hill(p1) + "D" + dimer_to_hill(p2) + "D"
        return "U" + dimer_to_hill(x) + "D"
    if not has_hill(x):
        return "U" + dimer_to_hill(x) + "D"
    parts = split_at_hills(x)
    out = ["U" * len(parts), dimer_to_hill(parts[0]), "D"]
    for pi in parts[1:]:
        out.append(dimer_to_hill(pi) + "D")
    return "".join(out)


def strict_case(p: str) -> int:
    """Domain case number (1..6) of a strict path with FAL >= 2."""
    x = p[1:-1]
    fal = first_ascent_len(p)
    if fal % 2 == 0:
        if not has_hill(x):
            return 1
        x2 = interior(x)
        if x2 == "":
            return 2
        return 3 if not has_hill(x2) else 4
    return 5 if not has_hill(x) else 6


def image_case(q: str) -> int:
    """Image case number per the classification table."""
    y = q[1:-1]
    if has_hill(y):
        y2 = interior(y)
        if y2 == "":
            return 2
        if has_hill(y2):
            return 1
        y3 = interior(y2)
        return 3 if has_hill(y3) else 4
    assert y != ""
    y2 = interior(y)
    return 5 if has_hill(y2) else 6


def hill_to_dimer(q: str) -> str:
    if not q:
        return ""
    comps = components(q)
    if len(comps) >= 2:
        return "".join(hill_to_dimer(c) for c in comps)
    if q == "UD":
        return "UD"
    y = q[1:-1]
    if has_hill(y):
        c1, rest = first_component(y)
        y2 = c1[1:-1]
        if y2 == "":
            return "UUD" + hill_to_dimer(rest) + "D"
        if has_hill(y2):
            # split y at its LAST hill
            comps_y = components(y)
            last = max(i for i, c in enumerate(comps_y) if c == "UD")
            a = "".join(comps_y[:last])
            b = "".join(comps_y[last + 1:])
            return "UU" + hill_to_dimer(a) + "D" + hill_to_dimer(b) + "D"
        y3 = interior(y2)
        if has_hill(y3):
            return "UU" + hill_to_dimer(y2) + "D" + hill_to_dimer(rest) + "D"
        return "U" + hill_to_dimer(y) + "D"
    c1, _ = first_component(y)
    y2 = c1[1:-1]
    if has_hill(y2):
        return "U" + hill_to_dimer(y) + "D"
    parts = []
    z = y
    while True:
        c1z, restz = first_component(z)
        iz = c1z[1:-1]
        if has_hill(iz):
            break
        parts.append(restz)
        z = iz
    out = ["U", hill_to_dimer(z)]
    for xpart in reversed(parts):
        out.append("UD" + hill_to_dimer(xpart))
    out.append("D")
    return "".join(out)


# --- fine-like mark transfer --------------------------------------------------

def finelike_to_fine(p: str, marks) -> str:
    removes = set()
    inserts = Counter()
    for v in marks:
        assert p[v - 1] == "U" and p[v] == "U"
        removes.add(v - 1)
        inserts[matching_downstep(p, v - 1)] += 1
    out = []
    for j in range(len(p) + 1):
        out.append("U" * inserts[j])
        if j < len(p) and j not in removes:
            out.append(p[j])
    return "".join(out)


def fine_to_finelike(q: str):
    h = heights(q)
    moves = []  # (remove_pos, insert_gap)
    for c, s, l in runs(q):
        if c != "U" or l != 1:
            continue
        if s == 0:
            raise ValueError("short initial ascent in a hill-free path")
        g = h[s]
        x = s
        w = s
        while w >= 0 and h[w] >= g:
            if h[w] == g:
                x = w
            w -= 1
        moves.append((s, x))
    removes = {s for s, _ in moves}
    inserts = Counter(x for _, x in moves)
    steps = []
    marked = []
    for j in range(len(q) + 1):
        for _ in range(inserts[j]):
            steps.append("U")
            marked.append(len(steps))  # mark at the top vertex of inserted U
        if j < len(q) and j not in removes:
            steps.append(q[j])
    return "".join(steps), tuple(sorted(marked))


# ----------------------------------------------------------------------------
# Identity formulas
# ----------------------------------------------------------------------------

def binom(a: int, b: int) -> int:
    if b < 0 or b > a or a < 0:
        return 0
    return comb(a, b)


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    assert r == 0, f"inexact division {num}/{den}"
    return q


def catalan(n):
    return exact_div(binom(2 * n, n), n + 1)


def f_long_interior(n, k):
    return exact_div(2 * binom(n + 1, k + 2) * binom(n - 2, k), n + 1)


def f_tree_nodes(n, k):
    return exact_div(binom(n + 1, 2 * k + 1) * binom(n + k, k), n + 1)


def f_fine_touchard(n, k):
    c = binom(n - 2 - k, k)
    if c == 0:
        return 0
    return exact_div(c * 2 ** (n - 2 - 2 * k) * binom(n + 1, k + 1), n + 1)


def f_touchard(n, k):
    c = binom(n - 1, 2 * k)
    if c == 0:
        return 0
    return c * 2 ** (n - 1 - 2 * k) * catalan(k)


def f_narayana(n, k):
    return exact_div(binom(n, k) * binom(n, k + 1), n)


def f_x1x2(n, k):
    return binom(n - 1, k) ** 2 - binom(n + 1, k + 2) * binom(n - 3, k - 2)


def f_fine_refined(n, j, k):
    return exact_div(
        binom(n - 1 - k, k - 1) * binom(n - 2 * k, j) * binom(n + 1, k),
        n + 1)


def distribution(paths, stat) -> list[int]:
    cnt = Counter(stat(p) for p in paths)
    if not cnt:
        return []
    out = [cnt[k] for k in range(max(cnt) + 1)]
    while out and out[-1] == 0:
        out.pop()
    return out


FINE = [1, 0]
CAT = [catalan(n) for n in range(16)]
for _n in range(2, 16):
    FINE.append(exact_div(CAT[_n] - FINE[_n - 1], 2))

LONG_INTERIOR_TABLE = {1: [1], 2: [2], 3: [3, 2], 4: [4, 8, 2], 5: [5, 20, 15, 2],
          6: [6, 40, 60, 24, 2], 7: [7, 70, 175, 140, 35, 2]}
TREE_NODE_TABLE = {1: [1], 2: [1, 1], 3: [1, 4], 4: [1, 10, 3], 5: [1, 20, 21],
          6: [1, 35, 84, 12], 7: [1, 56, 252, 120], 8: [1, 84, 630, 660, 55]}


# ----------------------------------------------------------------------------
# Checks
# ----------------------------------------------------------------------------

def main():
    rng = random.Random(20240214)

    # --- statistics on the reference path -----------------------------------
    P0 = "UUDUDUUDDDUD"
    check("stats.peaks", peaks(P0) == 4)
    check("stats.valleys", valleys(P0) == 3)
    check("stats.uu", count_factor(P0, "U", "U") == 2)
    check("stats.dd", count_factor(P0, "D", "D") == 2)
    check("stats.dxd", dxd(P0) == 3)
    check("stats.hills", hills(P0) == 1)
    check("stats.long_interior", long_interior_inclines(P0) == 2)
    check("stats.odd_ascents", odd_ascents(P0) == 2)
    check("stats.max_dimers", max_dimers(P0) == 2)
    check("stats.hill_producing",
          hill_producing_upsteps("UUUUDDDUDUUDDDUDUUDD") == 4)
    check("stats.dddd-overlap", dxd("UUUUDDDD") == 2)

    check("match.basic", matching_downstep(P0, 0) == 9)
    check("match.assoc", associated_downstep(P0, 1) == 8)
    check("match.assoc-udud", associated_downstep("UDUD", 0) == 3)
    check("match.vertex-east", matching_vertex("DDDUUDUUUUUDDDDU", 9) == 13)
    check("match.vertex-uudd", matching_vertex("UUDD", 1) == 3)
    err = False
    try:
        matching_vertex("DDUU", 1)
    except ValueError:
        err = True
    check("match.vertex-west-error", err)
    check("match.vertex-west", matching_vertex("DDUU", 3) == 1)
    check("interior.i1", interior("UUDUDD") == "UDUD")
    check("interior.i2", interior(interior("UUDUDD")) == "")
    check("interior.components", components("UDUUDD") == ["UD", "UUDD"])
    check("lemma.spot",
          long_interior_inclines(P0) == 2 and dxd(elevate(P0)) == 3)

    for n in range(1, 9):
        ok = all(long_interior_inclines(p) + dxd(elevate(p)) == n - 1
                 for p in dyck_paths(n))
        check(f"lemma.elevation-dxd.n{n}", ok)
    for n in range(1, 9):
        ok = all(count_factor(p, "U", "U") + valleys(p) == n - 1
                 and peaks(p) == 1 + valleys(p) for p in dyck_paths(n))
        check(f"identity.uu-du-ud.n{n}", ok)

    # --- enumeration ----------------------------------------------------------
    bal2 = list(balanced_paths(2))
    check("enum.balanced2",
          bal2 == ["UUDD", "UDUD", "UDDU", "DUUD", "DUDU", "DDUU"],
          " ".join(bal2))
    check("enum.balanced2-x", [x_stat(p) for p in bal2] == [2, 2, 1, 1, 0, 0])
    check("enum.dyck-counts",
          all(sum(1 for _ in dyck_paths(n)) == CAT[n] for n in range(9)))
    check("enum.first-dyck", next(iter(dyck_paths(4))) == "UUUUDDDD")
    check("enum.trees8", sum(1 for _ in dyck_paths(8)) == 1430)
    check("enum.schroder1", list(schroder_paths(1)) == ["F", "UD"])
    rn = [sum(1 for _ in schroder_paths(n)) for n in range(7)]
    check("enum.schroder-counts", rn == [1, 2, 6, 22, 90, 394, 1806], str(rn))
    check("enum.marked-df-parity-8-2",
          sum(1 for _ in marked_df_parity(8, 2)) == 5670)
    check("enum.finelike-4-0-2", sum(1 for _ in finelike(4, 0, 2)) == 10)
    ok = True
    for n in range(1, 8):
        for k in range(n // 2 + 1):
            cnt = sum(1 for _ in marked_df_parity(n, k))
            want = binom(n + 1, 2 * k + 1) * binom(n + k, k)
            if cnt != want:
                ok = False
    check("enum.marked-df-parity-formula.n<=7", ok)
    ok = True
    for n in range(1, 9):
        for k in range(0, n // 2 + 1):
            for j in range(0, n - 2 * k + 1):
                cnt = sum(1 for _ in finelike(n, j, k))
                want = binom(n - 1 - k, k - 1) * binom(n - 2 * k, j) \
                    * binom(n + 1, k)
                if cnt != want:
                    ok = False
    check("enum.finelike-formula", ok)

    fine_enum = [sum(1 for p in dyck_paths(n) if not has_hill(p))
                 for n in range(11)]
    check("fine.enumerated-vs-recurrence", fine_enum == FINE[:11],
          str(fine_enum))

    # --- cycle rotation --------------------------------------------------------
    img1 = sorted(cycle_rotate(p, 1)[0] for p in ["DUDU", "DDUU"])
    img2 = sorted(cycle_rotate(p, 2)[0] for p in ["DUDU", "DDUU"])
    check("rotate.n2-i1", img1 == ["DUUD", "UDDU"], " ".join(img1))
    check("rotate.n2-i2", img2 == ["UDUD", "UUDD"], " ".join(img2))
    for n in range(1, 8):
        dom = list(inverted_paths(n))
        seen = set(dom)
        ok = True
        for i in range(1, n + 1):
            imgs = [cycle_rotate(p, i)[0] for p in dom]
            ok &= all(x_stat(q) == i for q in imgs)
            ok &= all(sorted(ascent_lengths(q)) == sorted(ascent_lengths(p))
                      for p, q in zip(dom, imgs))
            ok &= len(set(imgs)) == len(imgs)
            seen.update(imgs)
        ok &= len(seen) == binom(2 * n, n)
        ok &= all(is_dyck(cycle_rotate(p, n)[0]) for p in dom)
        check(f"rotate.classes.n{n}", ok)
    for n in range(1, 7):
        ok = True
        for k in range(0, n):
            dom = [(p, ms) for p, ms in marked_ia(n, k) if is_inverted(p)]
            seen = set()
            for i in range(1, n + 1):
                for p, ms in dom:
                    q, qms = cycle_rotate(p, i, ms)
                    ok &= set(qms) <= set(ia_vertices(q))
                    ok &= x_stat(q) == i
                    seen.add((q, qms))
            total = sum(1 for _ in marked_ia(n, k))
            ok &= len(seen) == total - len(dom) and total % (n + 1) == 0
        check(f"rotate.marked.n{n}", ok)
    for n in range(1, 9):
        da = distribution(dyck_paths(n), odd_ascents)
        ba = distribution(balanced_paths(n), odd_ascents)
        check(f"rotate.odd-ascent-consequence.n{n}",
              [x * (n + 1) for x in da] == ba)

    # --- DF marks <-> Schroder --------------------------------------------------
    check("schroder.ud-mark", df_to_schroder("UD", (0,)) == "F")
    check("schroder.ud-plain", df_to_schroder("UD", ()) == "UD")
    ok = True
    for n in range(0, 8):
        total = 0
        images = set()
        for p in dyck_paths(n):
            dfv = df_vertices(p)
            for k in range(len(dfv) + 1):
                for ms in combinations(dfv, k):
                    if n == 0 and ms:
                        continue
                    s = df_to_schroder(p, ms)
                    images.add(s)
                    total += 1
                    if schroder_to_df(s) != (p, tuple(ms)):
                        ok = False
        sch = set(schroder_paths(n))
        ok &= images == sch and total == len(sch)
    check("schroder.roundtrip-n<=7", ok)
    ok = True
    for n in range(1, 7):
        withf = sum(1 for s in schroder_paths(n)
                    if any(c == "F" and l == 0 for c, l in
                           zip(s, heights_schroder(s))))
        total = sum(1 for _ in schroder_paths(n))
        ok &= 2 * withf == total
        ia_total = sum(1 for p in dyck_paths(n)
                       for _ in all_subsets(ia_vertices(p)))
        ok &= ia_total * 2 == total
    check("schroder.half-ground-flat+little", ok)
    ok = True
    for n in range(0, 7):
        marked0 = sum(1 for p in dyck_paths(n)
                      for ms in all_subsets(df_vertices(p))
                      if 0 in ms and not (n == 0 and ms))
        withf = sum(1 for s in schroder_paths(n)
                    if any(c == "F" and l == 0
                           for c, l in zip(s, heights_schroder(s))))
        ok &= marked0 == withf
    check("schroder.mark0-iff-ground-flat", ok)

    # --- du_to_dxd ---------------------------------------------------------------
    check("dudxd.base", du_to_dxd("") == "" and du_to_dxd("UD") == "UD")
    check("dudxd.spot1", du_to_dxd("UDUUDD") == "UUUDDD")
    check("dudxd.spot2", du_to_dxd("UUDDUD") == "UUDDUD")
    ok = True
    for n in range(0, 10):
        for p in dyck_paths(n):
            q = du_to_dxd(p)
            if dxd_to_du(q) != p or valleys(p) != dxd(q):
                ok = False
            if (terminal_descent_len(p) % 2 == 0) != (not has_hill(q)):
                ok = False
            if p:
                allodd = all(terminal_descent_len(c) % 2 == 1
                             for c in components(p))
                if allodd != q.startswith("UD"):
                    ok = False
            if p.endswith("DD") != q.endswith("DD"):
                ok = False
    check("dudxd.roundtrip+transport.n<=9", ok)
    ok = True
    for n in range(0, 9):
        for p in dyck_paths(n):
            if dxd_to_du_explicit(p) != dxd_to_du(p):
                ok = False
    check("dudxd.explicit-agrees.n<=8", ok)
    ok = True
    for n in range(0, 8):
        for p in dyck_paths(n):
            base = dxd_to_du_explicit(p)
            nb = sum(1 for i in range(len(p) - 2)
                     if p[i] == "D" and p[i + 1] == "U" and p[i + 2] == "U")
            for _ in range(5):
                order = list(range(len_blues(p)))
                rng.shuffle(order)
                if dxd_to_du_explicit(p, order) != base:
                    ok = False
    check("dudxd.blue-order-independent.n<=7", ok)
    fig_in = "UUUUDDUUDDDDUUDDUDUUUDDDUUDD"
    fig_out = "UDUUUDDDUUUUDDDDUUDUUUUDDDDD"
    check("dudxd.worked-figure", dxd_to_du_explicit(fig_in) == fig_out,
          dxd_to_du_explicit(fig_in))
    for n in range(1, 11):
        d1 = distribution(dyck_paths(n), dxd)
        d2 = distribution(dyck_paths(n), valleys)
        d3 = distribution(dyck_paths(n), long_nonterminal_inclines)
        f = [f_narayana(n, k) for k in range(n)]
        while f and f[-1] == 0:
            f.pop()
        check(f"dudxd.narayana.n{n}", d1 == d2 == d3 == f,
              f"{d1} {d2} {d3} {f}")
    ok = True
    for n in range(0, 9):
        fm_even = {p for p in dyck_paths(n)
                   if terminal_descent_len(p) % 2 == 0}
        fm_fine = {p for p in dyck_paths(n) if not has_hill(p)}
        ok &= len(fm_even) == len(fm_fine) == FINE[n]
        ok &= {du_to_dxd(p) for p in fm_even} == fm_fine
    check("dudxd.fine-manifest.n<=8", ok)

    # --- Deutsch involution -----------------------------------------------------
    check("deutsch.spot", deutsch("UUDD") == "UDUD" and
          deutsch("UDUD") == "UUDD" and deutsch("UD") == "UD")
    ok = True
    for n in range(0, 10):
        for p in dyck_paths(n):
            q = deutsch(p)
            if deutsch(q) != p:
                ok = False
            if count_factor(p, "U", "U") != valleys(q):
                ok = False
            if valleys(p) != count_factor(q, "U", "U"):
                ok = False
            if p:
                fd = next(l for c, _, l in runs(p) if c == "D")
                if fd != 1 + terminal_ud_run(q):
                    ok = False
    check("deutsch.involution+transport.n<=9", ok)

    # --- reverse ----------------------------------------------------------------
    check("reverse.spot", reverse_path("UUDDUD") == "UDUUDD" and
          reverse_path("UUDUDD") == "UUDUDD" and
          reverse_path("UUDD") == "UUDD")

    # --- Levine pairs ------------------------------------------------------------
    pair = None
    for b, t in levine_pairs(4, 5):
        a = []
        cnt = 0
        for c in t:
            if c == "N":
                cnt += 1
            else:
                a.append(cnt)
                cnt = 0
        a.append(cnt)
        d = []
        cnt = 0
        for c in b:
            if c == "N":
                cnt += 1
            else:
                d.append(cnt)
                cnt = 0
        d.append(cnt)
        if a == [1, 0, 2, 1] and d == [0, 0, 2, 2]:
            pair = (b, t)
    check("levine.figure-pair-exists", pair is not None)
    if pair:
        check("levine.figure-image",
              levine_to_dyck(*pair) == "UUDUDUUUDDDUUDDD")
    ok = True
    for r in range(1, 5):
        for s in range(1, 5):
            pairs = list(levine_pairs(r, s))
            n = r + s - 1
            targets = [p for p in dyck_paths(n) if peaks(p) == r]
            imgs = sorted(levine_to_dyck(b, t) for b, t in pairs)
            ok &= imgs == sorted(targets)
            for b, t in pairs:
                ok &= dyck_to_levine(levine_to_dyck(b, t)) == (b, t)
                ok &= t.endswith("N") == \
                    (ascent_lengths(levine_to_dyck(b, t))[-1] >= 2)
    check("levine.bijection+roundtrip", ok)

    # --- chains (long-interior three-way) ----------------------------------------
    ok = True
    for n in range(2, 7):
        byk = Counter(long_interior_inclines(p) for p in dyck_paths(n))
        for k in range(0, n):
            pairs = list(gv_li_pairs(n, k))
            if len(pairs) != f_long_interior(n, k):
                ok = False
            imgs = []
            for b, t in pairs:
                cls, q = chain(b, t, "li")
                imgs.append(q)
                if long_interior_inclines(q) != k:
                    ok = False
                if cls == "A" and not q.endswith("DD"):
                    ok = False
                if cls == "B" and not q.endswith("UD"):
                    ok = False
            if len(set(imgs)) != len(imgs) or len(imgs) != byk[k]:
                ok = False
    check("chain.long-interior.n2-6", ok)
    check("chain.gv-li-20", sum(1 for _ in gv_li_pairs(5, 1)) == 20)
    check("chain.gv-li-175", sum(1 for _ in gv_li_pairs(7, 2)) == 175)
    check("chain.gv-x1x2-spot", sum(1 for _ in gv_x1x2_pairs(3, 1)) == 4)
    ok = True
    for n in range(2, 7):
        allimg = []
        for k in range(0, n):
            for b, t in gv_x1x2_pairs(n, k):
                _, q = chain(b, t, "x1x2")
                allimg.append(q)
        ok &= sorted(allimg) == sorted(dyck_paths(n))
    check("chain.gv-x1x2-bijective.n2-6", ok)

    # --- x1+x2 distribution ------------------------------------------------
    check("x1x2.spot-row", distribution(dyck_paths(3), x1_plus_x2) == [1, 4])
    for n in range(2, 9):
        d = distribution(dyck_paths(n), x1_plus_x2)
        f = [f_x1x2(n, k) for k in range(n)]
        while f and f[-1] == 0:
            f.pop()
        check(f"x1x2.formula.n{n}", d == f, f"{d} vs {f}")
    d1 = distribution(dyck_paths(1), x1_plus_x2)
    check("x1x2.n1-anomaly", d1 == [0, 1] and f_x1x2(1, 0) == 1)

    # --- long-interior and tree-node tables ---------------------------------
    for n in range(1, 8):
        d = distribution(dyck_paths(n), long_interior_inclines)
        check(f"li-table.n{n}", d == LONG_INTERIOR_TABLE[n], str(d))
        if n >= 2:
            f = [f_long_interior(n, k) for k in range(len(LONG_INTERIOR_TABLE[n]))]
            check(f"li-table.formula.n{n}", f == LONG_INTERIOR_TABLE[n], str(f))
    check("li-table.n1-formula-anomaly", f_long_interior(1, 0) == 0)
    for n in range(1, 9):
        d = distribution((tree_from_dyck(p) for p in dyck_paths(n)),
                         nodes_adj_leaf)
        check(f"tree-table.n{n}", d == TREE_NODE_TABLE[n], str(d))
        f = [f_tree_nodes(n, k) for k in range(len(TREE_NODE_TABLE[n]))]
        check(f"tree-table.formula.n{n}", f == TREE_NODE_TABLE[n], str(f))

    # --- trees -------------------------------------------------------------------
    ok = True
    for n in range(0, 9):
        for p in dyck_paths(n):
            t = tree_from_dyck(p)
            if dyck_from_tree(t) != p:
                ok = False
            if nodes_adj_leaf(t) != hill_producing_upsteps(p):
                ok = False
    check("tree.roundtrip+hill-producing.n<=8", ok)
    check("tree.figure", nodes_adj_leaf(
        tree_from_dyck("UUUUDDDUDUUDDDUDUUDD")) == 4)

    # --- mark transfer to odd ascents ------------------------------------------
    check("marks.figure",
          marks_to_odd_ascents("DDDUUDUUUUUDDDDU", (7, 8, 9, 16)) ==
          "DDDUUUDUUUDDUDDU")
    ok = True
    for n in range(1, 8):
        for k in range(0, n // 2 + 1):
            for p, ms in marked_df_parity(n, k):
                q = marks_to_odd_ascents(p, ms)
                if odd_ascents(q) != n - 2 * k:
                    ok = False
                if odd_ascents_to_marks(q) != (p, tuple(ms)):
                    ok = False
    check("marks.roundtrip.n<=7", ok)
    ok = True
    for n in range(1, 8):
        for t in range(0, n + 1):
            lhs = sum(1 for q in balanced_paths(n) if odd_ascents(q) == t)
            if (n - t) % 2 != 0:
                rhs = 0
            else:
                k = (n - t) // 2
                rhs = binom(n + 1, 2 * k + 1) * binom(n + k, k)
            if lhs != rhs:
                ok = False
    check("marks.count-consequence.n<=7", ok)

    # --- dimer <-> hill ----------------------------------------------------------
    check("dimer.base", dimer_to_hill("") == "" and dimer_to_hill("UD") == "UD")
    check("dimer.spot1", dimer_to_hill("UUDD") == "UUDD")
    check("dimer.spot2", dimer_to_hill("UUUDUDDD") == "UUUDUDDD")
    ok = True
    for n in range(0, 10):
        for p in dyck_paths(n):
            q = dimer_to_hill(p)
            if hill_to_dimer(q) != p:
                ok = False
            if max_dimers(p) != hill_producing_upsteps(q):
                ok = False
            if has_hill(p) != has_hill(q):
                ok = False
    check("dimer.roundtrip+transport+fine.n<=9", ok)
    ok = True
    for n in range(1, 10):
        stricts = ["U" + p + "D" for p in dyck_paths(n - 1)]
        dom_even = set()
        img_hill = set()
        for p in stricts:
            if p == "UD":
                continue
            q = dimer_to_hill(p)
            if strict_case(p) != image_case(q):
                ok = False
            if first_ascent_len(p) % 2 == 0:
                dom_even.add(p)
                img_hill.add(q)
        target = {p for p in stricts if p != "UD" and has_hill(p[1:-1])}
        ok &= img_hill == target and len(dom_even) == len(target)
    check("dimer.six-cases+top-boxes.n<=9", ok)
    ok = True
    for n in range(0, 10):
        d = distribution((tree_from_dyck(dimer_to_hill(p))
                          for p in dyck_paths(n)), nodes_adj_leaf)
        e = distribution(dyck_paths(n), max_dimers)
        ok &= d == e
    check("dimer.tree-transport.n<=9", ok)

    # --- fine-like transfer -----------------------------------------------------
    check("finelike.figure",
          finelike_to_fine("UUUUUDDDUUDDUUUDDDDDUUDD", (2, 3, 4)) ==
          "UUDUDUDUUDDUUUDDDUDDUUDD")
    ok = True
    for n in range(1, 9):
        fine_by_jk = Counter()
        for q in dyck_paths(n):
            if has_hill(q):
                continue
            asc = ascent_lengths(q)
            fine_by_jk[(sum(1 for l in asc if l == 1),
                        sum(1 for l in asc if l >= 2))] += 1
        got = Counter()
        for k in range(0, n // 2 + 1):
            for j in range(0, n - 2 * k + 1):
                for p, ms in finelike(n, j, k, base="dyck"):
                    q = finelike_to_fine(p, ms)
                    if has_hill(q):
                        ok = False
                    asc = ascent_lengths(q)
                    if sum(1 for l in asc if l == 1) != j or \
                       sum(1 for l in asc if l >= 2) != k:
                        ok = False
                    got[(j, k)] += 1
                    if fine_to_finelike(q) != (p, tuple(ms)):
                        ok = False
        ok &= got == fine_by_jk
    check("finelike.roundtrip+jk.n<=8", ok)
    fr = sorted(q for p, ms in finelike(4, 1, 1, base="dyck")
                for q in [finelike_to_fine(p, ms)])
    check("finelike.spot-4-1-1", fr == ["UUUDDUDD", "UUUDUDDD"], " ".join(fr))

    # --- Touchard / Fine-Touchard / refined ---------------------------------------
    for n in range(1, 11):
        d = distribution(dyck_paths(n), long_noninitial_ascents)
        f = [f_touchard(n, k) for k in range((n + 1) // 2 + 1)]
        while f and f[-1] == 0:
            f.pop()
        check(f"touchard.n{n}", d == f, f"{d} vs {f}")
    for n in range(1, 11):
        d = distribution((p for p in dyck_paths(n) if not has_hill(p)),
                         long_noninitial_ascents)
        f = [f_fine_touchard(n, k) for k in range(n + 1)]
        while f and f[-1] == 0:
            f.pop()
        check(f"fine-touchard.n{n}", d == f, f"{d} vs {f}")
    check("fine-touchard.n4-rowsum",
          sum(f_fine_touchard(4, k) for k in range(5)) == 6)
    ok = True
    for n in range(1, 10):
        for k in range(0, n // 2 + 1):
            for j in range(0, n + 1):
                cnt = sum(1 for q in dyck_paths(n)
                          if not has_hill(q)
                          and sum(1 for l in ascent_lengths(q) if l == 1) == j
                          and sum(1 for l in ascent_lengths(q) if l >= 2) == k)
                if cnt != f_fine_refined(n, j, k):
                    ok = False
        # marginal: sum_j refined(n,j,k) = fine_touchard(n, k-1)
        for k in range(1, n // 2 + 1):
            if sum(f_fine_refined(n, j, k) for j in range(n + 1)) != \
                    f_fine_touchard(n, k - 1):
                ok = False
    check("fine-refined.formula+marginal.n<=9", ok)
    check("fine-refined.spot", f_fine_refined(4, 1, 1) == 2)

    # --- Narayana erratum guard ---------------------------------------------------
    bad = (binom(2, 0) * binom(2, 1)) % 3  # 1/(n+1) prefactor fails at n=2,k=0
    check("narayana.erratum-witness", bad != 0)
    check("narayana.spot", f_narayana(7, 2) == 105 and f_narayana(2, 0) == 1
          and f_narayana(7, 3) == 175)

    # --- summary -------------------------------------------------------------------
    print()
    print(f"fine numbers 0..14: {FINE[:15]}")
    print(f"catalan 0..14:      {CAT[:15]}")
    print(f"schroder big 0..6:  {rn}")
    if FAILURES:
        print(f"\n{len(FAILURES)} FAILURES: {FAILURES}")
        return 1
    print("\nall checks passed")
    return 0


def heights_schroder(s: str) -> list[int]:
    lev = [0]
    for c in s:
        lev.append(lev[-1] + (1 if c == "U" else -1 if c == "D" else 0))
    return lev


def all_subsets(xs):
    for k in range(len(xs) + 1):
        yield from combinations(xs, k)


def len_blues(p: str) -> int:
    n2 = len(p)
    reds = {i + 2 for i in range(n2 - 2)
            if p[i] == p[i + 1] == p[i + 2] == "D"}
    cnt = 0
    for i in range(n2 - 2):
        if p[i] == "D" and p[i + 1] == "U" and p[i + 2] == "U":
            m = matching_downstep(p, i + 1)
            if m + 1 < n2 and p[m + 1] == "D" and (m + 1) in reds:
                continue
            cnt += 1
    return cnt


if __name__ == "__main__":
    sys.exit(main())
