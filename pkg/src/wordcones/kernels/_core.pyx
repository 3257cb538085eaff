# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Same contracts as ``_pycore``; words are bytes of letter indices, ``leq``
is the flat k*k order matrix, DFA transition tables arrive as int buffers.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

BACKEND = "c"


cdef inline bint _higman(const unsigned char *w, Py_ssize_t m,
                         const unsigned char *x, Py_ssize_t nx,
                         const unsigned char *leq, int k) noexcept nogil:
    cdef Py_ssize_t i, j = 0
    if m > nx:
        return 0
    for i in range(nx):
        if j < m and leq[w[j] * k + x[i]]:
            j += 1
    return j == m


def higman_leq(bytes w, bytes x, bytes leq, int k):
    return bool(_higman(<const unsigned char *> w, len(w),
                        <const unsigned char *> x, len(x),
                        <const unsigned char *> leq, k))


def minimal_elements(words, bytes leq, int k):
    ws = sorted(set(words), key=_len_lex)
    cdef const unsigned char *pleq = <const unsigned char *> leq
    cdef Py_ssize_t i, j, n = len(ws)
    cdef const unsigned char *pw
    cdef const unsigned char *pv
    cdef bytes w, v
    out = []
    for i in range(n):
        w = ws[i]
        pw = <const unsigned char *> w
        keep = True
        for j in range(n):
            v = ws[j]
            if len(v) > len(w):
                break
            if i != j:
                pv = <const unsigned char *> v
                if _higman(pv, len(v), pw, len(w), pleq, k):
                    keep = False
                    break
        if keep:
            out.append(w)
    return out


def maximal_elements(words, bytes leq, int k):
    ws = sorted(set(words), key=_len_lex)
    cdef const unsigned char *pleq = <const unsigned char *> leq
    cdef Py_ssize_t i, j, n = len(ws)
    cdef bytes w, v
    out = []
    for i in range(n):
        w = ws[i]
        keep = True
        for j in range(n):
            v = ws[j]
            if i != j and len(v) >= len(w):
                if _higman(<const unsigned char *> w, len(w),
                           <const unsigned char *> v, len(v), pleq, k):
                    keep = False
                    break
        if keep:
            out.append(w)
    return out


def _len_lex(b):
    return (len(b), b)


cdef enum:
    MAX_WORD = 64


def common_lower_bounds(bytes a, bytes b, bytes cand, int maxlen, bytes leq, int k):
    """Prefix DFS; a prefix failing to embed into a or b is pruned whole."""
    if maxlen > MAX_WORD:
        raise ValueError("word length cap exceeded")
    cdef const unsigned char *pa = <const unsigned char *> a
    cdef const unsigned char *pb = <const unsigned char *> b
    cdef const unsigned char *pc = <const unsigned char *> cand
    cdef const unsigned char *pleq = <const unsigned char *> leq
    cdef Py_ssize_t la = len(a), lb = len(b), nc = len(cand)
    cdef unsigned char buf[MAX_WORD]
    cdef int depth = 0
    # Explicit DFS stack of next-candidate indices per depth.
    cdef int pos[MAX_WORD + 1]
    out = [b""]
    pos[0] = 0
    while depth >= 0:
        if depth >= maxlen or pos[depth] >= nc:
            depth -= 1
            if depth >= 0:
                pos[depth] += 1
            continue
        buf[depth] = pc[pos[depth]]
        if _higman(buf, depth + 1, pa, la, pleq, k) and _higman(buf, depth + 1, pb, lb, pleq, k):
            out.append(PyBytes_FromStringAndSize(<char *> buf, depth + 1))
            depth += 1
            pos[depth] = 0
        else:
            pos[depth] += 1
    return out


cdef inline int _run(const int *delta, int k, int state,
                     const unsigned char *word, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(n):
        state = delta[state * k + word[i]]
    return state


def dfa_run(const int[::1] delta, int k, int state, bytes word):
    return _run(&delta[0], k, state, <const unsigned char *> word, len(word))


def dfa_accepts(const int[::1] delta, int k, int start, bytes accept, bytes word):
    cdef int q = _run(&delta[0], k, start, <const unsigned char *> word, len(word))
    return bool((<const unsigned char *> accept)[q])


def rule_scan_depth(int n, int k, const int[::1] delta, bytes accept, int start,
                    const int[::1] q1, const int[::1] q2, const int[::1] q3):
    """Least |y| + |z| over violating rule instances, or -1 if none."""
    cdef const unsigned char *acc = <const unsigned char *> accept
    cdef const int *d = &delta[0]
    cdef long nn = <long> n * n
    cdef long total = nn * n
    cdef unsigned char *seen_pre = <unsigned char *> malloc(n)
    cdef unsigned char *seen_post = <unsigned char *> malloc(total)
    cdef long *pre = <long *> malloc(n * sizeof(long))
    cdef long *nxt_pre = <long *> malloc(n * sizeof(long))
    cdef long *post = <long *> malloc(total * sizeof(long))
    cdef long *nxt_post = <long *> malloc(total * sizeof(long))
    if not (seen_pre and seen_post and pre and nxt_pre and post and nxt_post):
        _free6(seen_pre, seen_post, pre, nxt_pre, post, nxt_post)
        raise MemoryError()
    cdef long npre = 1, npost = 0, n_nxt_pre, n_nxt_post
    cdef long i, idx, jdx
    cdef int a, b, c, a1, b1, c1, p, q, letter
    cdef int depth = 0, found = -1
    memset(seen_pre, 0, n)
    memset(seen_post, 0, total)
    pre[0] = start
    seen_pre[start] = 1
    with nogil:
        while (npre or npost) and found < 0:
            # pivots of the current pre frontier join the post frontier
            for i in range(npre):
                p = <int> pre[i]
                a = q1[p]; b = q2[p]; c = q3[p]
                idx = (<long> a * n + b) * n + c
                if not seen_post[idx]:
                    seen_post[idx] = 1
                    if acc[a] and acc[b] and not acc[c]:
                        found = depth
                        break
                    post[npost] = idx
                    npost += 1
            if found >= 0:
                break
            n_nxt_pre = 0
            for i in range(npre):
                p = <int> pre[i]
                for letter in range(k):
                    q = d[p * k + letter]
                    if not seen_pre[q]:
                        seen_pre[q] = 1
                        nxt_pre[n_nxt_pre] = q
                        n_nxt_pre += 1
            n_nxt_post = 0
            for i in range(npost):
                idx = post[i]
                c = <int> (idx % n)
                b = <int> ((idx / n) % n)
                a = <int> (idx / nn)
                for letter in range(k):
                    a1 = d[a * k + letter]
                    b1 = d[b * k + letter]
                    c1 = d[c * k + letter]
                    jdx = (<long> a1 * n + b1) * n + c1
                    if not seen_post[jdx]:
                        seen_post[jdx] = 1
                        if acc[a1] and acc[b1] and not acc[c1]:
                            found = depth + 1
                            break
                        nxt_post[n_nxt_post] = jdx
                        n_nxt_post += 1
                if found >= 0:
                    break
            if found >= 0:
                break
            memcpy(pre, nxt_pre, n_nxt_pre * sizeof(long))
            npre = n_nxt_pre
            memcpy(post, nxt_post, n_nxt_post * sizeof(long))
            npost = n_nxt_post
            depth += 1
    _free6(seen_pre, seen_post, pre, nxt_pre, post, nxt_post)
    return found


cdef void _free6(void *a, void *b, void *c, void *d, void *e, void *f) noexcept:
    if a: free(a)
    if b: free(b)
    if c: free(c)
    if d: free(d)
    if e: free(e)
    if f: free(f)


def forced_missing_words(int n, int k, const int[::1] delta, bytes accept, int start,
                         bytes t, bytes ins1, bytes ins2, int length, int limit):
    """Canonically ordered witnesses of the given length for one rule descriptor."""
    cdef const unsigned char *acc = <const unsigned char *> accept
    cdef const int *d = &delta[0]
    cdef const unsigned char *pt = <const unsigned char *> t
    cdef const unsigned char *p1 = <const unsigned char *> ins1
    cdef const unsigned char *p2 = <const unsigned char *> ins2
    cdef Py_ssize_t lt = len(t), l1 = len(ins1), l2 = len(ins2)
    cdef unsigned char w[MAX_WORD]
    cdef unsigned char buf[3 * MAX_WORD]
    cdef int i, j, pos, state
    cdef bint ok, match
    out = []
    if length < lt or length > MAX_WORD:
        return out
    memset(w, 0, length)
    while True:
        state = _run(d, k, start, w, length)
        if not acc[state]:
            for pos in range(length - lt + 1):
                match = True
                for j in range(lt):
                    if w[pos + j] != pt[j]:
                        match = False
                        break
                if not match:
                    continue
                # premise 1: y + ins1 + z
                memcpy(buf, w, pos)
                memcpy(buf + pos, p1, l1)
                memcpy(buf + pos + l1, w + pos + lt, length - pos - lt)
                if not acc[_run(d, k, start, buf, length - lt + l1)]:
                    continue
                memcpy(buf + pos, p2, l2)
                memcpy(buf + pos + l2, w + pos + lt, length - pos - lt)
                if acc[_run(d, k, start, buf, length - lt + l2)]:
                    out.append(PyBytes_FromStringAndSize(<char *> w, length))
                    break
            if limit and len(out) >= limit:
                return out
        # canonical-order odometer
        i = length - 1
        while i >= 0 and w[i] == k - 1:
            w[i] = 0
            i -= 1
        if i < 0:
            return out
        w[i] += 1
    return out
