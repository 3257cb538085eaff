"""Pure-Python implementations of the hot kernels.

Words are bytes of letter indices; ``leq`` is the flat k*k closure matrix
of the alphabet.  The compiled twin in ``_core.pyx`` must match these
functions result-for-result; ``tests/test_kernels.py`` enforces parity.
"""

from __future__ import annotations

BACKEND = "python"


def higman_leq(w: bytes, x: bytes, leq: bytes, k: int) -> bool:
    """Greedy embedding of w into x: consume the next needed letter of w at
    the first position of x carrying a letter above it."""
    m = len(w)
    if m > len(x):
        return False
    j = 0
    for c in x:
        if j < m and leq[w[j] * k + c]:
            j += 1
    return j == m


def minimal_elements(words, leq: bytes, k: int) -> list:
    """Words of the input set with no strictly smaller word in the set."""
    ws = sorted(set(words), key=lambda b: (len(b), b))
    out = []
    for w in ws:
        lw = len(w)
        keep = True
        for v in ws:
            if len(v) > lw:
                break
            if v != w and higman_leq(v, w, leq, k):
                keep = False
                break
        if keep:
            out.append(w)
    return out


def maximal_elements(words, leq: bytes, k: int) -> list:
    ws = sorted(set(words), key=lambda b: (len(b), b))
    out = []
    for w in ws:
        lw = len(w)
        keep = True
        for v in ws:
            if len(v) >= lw and v != w and higman_leq(w, v, leq, k):
                keep = False
                break
        if keep:
            out.append(w)
    return out


def common_lower_bounds(a: bytes, b: bytes, cand: bytes, maxlen: int, leq: bytes, k: int) -> list:
    """All words u (over the candidate letters, |u| <= maxlen) with u <= a and u <= b.

    Exhaustive by prefix DFS: if a prefix fails to embed into a or b, no
    extension can embed either, so the subtree is pruned.
    """
    out = [b""]

    def extend(u: bytes) -> None:
        if len(u) >= maxlen:
            return
        for c in cand:
            v = u + bytes((c,))
            if higman_leq(v, a, leq, k) and higman_leq(v, b, leq, k):
                out.append(v)
                extend(v)

    extend(b"")
    return out


def dfa_run(delta, k: int, state: int, word: bytes) -> int:
    for c in word:
        state = delta[state * k + c]
    return state


def dfa_accepts(delta, k: int, start: int, accept: bytes, word: bytes) -> bool:
    return bool(accept[dfa_run(delta, k, start, word)])


def rule_scan_depth(n: int, k: int, delta, accept: bytes, start: int, q1, q2, q3) -> int:
    """Least |y| + |z| over violating rule instances, or -1 if none.

    The scan walks the shared prefix y through the automaton (pre-states),
    forks at any point into the triple (premise-1 state, premise-2 state,
    forced-word state) given by the pivot arrays, then advances all three
    on the shared suffix z.  A violation is a triple with both premises
    accepting and the forced word rejected.
    """
    seen_pre = bytearray(n)
    seen_post = bytearray(n * n * n)
    pre = [start]
    post = []
    seen_pre[start] = 1
    depth = 0
    while pre or post:
        new_post = []
        for p in pre:
            a, b, c = q1[p], q2[p], q3[p]
            idx = (a * n + b) * n + c
            if not seen_post[idx]:
                seen_post[idx] = 1
                if accept[a] and accept[b] and not accept[c]:
                    return depth
                new_post.append(idx)
        post.extend(new_post)
        next_pre = []
        for p in pre:
            row = p * k
            for c in range(k):
                q = delta[row + c]
                if not seen_pre[q]:
                    seen_pre[q] = 1
                    next_pre.append(q)
        next_post = []
        for idx in post:
            c0 = idx % n
            b0 = (idx // n) % n
            a0 = idx // (n * n)
            for c in range(k):
                a1 = delta[a0 * k + c]
                b1 = delta[b0 * k + c]
                c1 = delta[c0 * k + c]
                jdx = (a1 * n + b1) * n + c1
                if not seen_post[jdx]:
                    seen_post[jdx] = 1
                    if accept[a1] and accept[b1] and not accept[c1]:
                        return depth + 1
                    next_post.append(jdx)
        pre = next_pre
        post = next_post
        depth += 1
    return -1


def forced_missing_words(
    n: int,
    k: int,
    delta,
    accept: bytes,
    start: int,
    t: bytes,
    ins1: bytes,
    ins2: bytes,
    length: int,
    limit: int,
) -> list:
    """All words w of the given length, in canonical order, such that some
    split w = y t z has y+ins1+z and y+ins2+z accepted while w itself is
    rejected.  Stops after ``limit`` results when limit > 0."""
    out = []
    lt = len(t)
    if length < lt:
        return out
    for w in _words_of_length(k, length):
        if dfa_accepts(delta, k, start, accept, w):
            continue
        for i in range(length - lt + 1):
            if w[i : i + lt] != t:
                continue
            y, z = w[:i], w[i + lt :]
            if dfa_accepts(delta, k, start, accept, y + ins1 + z) and dfa_accepts(
                delta, k, start, accept, y + ins2 + z
            ):
                out.append(w)
                break
        if limit and len(out) >= limit:
            break
    return out


def _words_of_length(k: int, length: int):
    if length == 0:
        yield b""
        return
    digits = [0] * length
    while True:
        yield bytes(digits)
        i = length - 1
        while i >= 0 and digits[i] == k - 1:
            digits[i] = 0
            i -= 1
        if i < 0:
            return
        digits[i] += 1
