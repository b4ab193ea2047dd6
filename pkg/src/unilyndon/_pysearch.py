"""Pure-Python candidate search; mirrors ``_csearch.pyx`` line for line.

Depth-first construction of necklace representatives of length ``n!``
(Fredricksen-Kessler-Maiorana style prenecklace tracking) with three prunes
that every universal Lyndon word satisfies on its linear factors:

* the occurrence budget ``count(u) <= (n - |alp(u)|)!``;
* if one occurrence of ``z`` is followed by a letter of ``alp(z)``, every
  occurrence of ``z`` is followed by that letter;
* the mirror statement for preceding letters.

``lcs[t][e]`` is the length of the longest common suffix of ``w[:t+1]`` and
``w[:e+1]``; all three prunes read it in O(t) per node. Wrap-around factors
are not examined here; callers verify every returned candidate.
"""

from math import factorial


def search_candidates(n, prefix=()):
    N = factorial(n)
    if N == 1:
        return [(1,)] if tuple(prefix) in ((), (1,)) else []
    budget = [factorial(n - k) for k in range(n + 1)]
    prefix = tuple(prefix)
    npre = len(prefix)
    w = [0] * N
    lcs = [[0] * N for _ in range(N)]
    out = []

    def ok_at(t):
        a = w[t]
        row = lcs[t]
        prev = lcs[t - 1] if t else None
        hist = [0] * (t + 2)
        for e in range(t):
            if w[e] != a:
                m = 0
            elif e:
                m = prev[e - 1] + 1
            else:
                m = 1
            row[e] = m
            hist[m] += 1
        # occurrence budget for every suffix window w[t-L+1..t]
        # count(L) = 1 + #{e: lcs >= L}
        ge = [0] * (t + 3)
        for L in range(t + 1, 0, -1):
            ge[L] = ge[L + 1] + hist[L]
        mask = 0
        smask = [0] * (t + 2)
        for L in range(1, t + 2):
            mask |= 1 << w[t - L + 1]
            smask[L] = mask
            if 1 + ge[L] > budget[bin(mask).count("1")]:
                return False
        # preceding letters: occurrence ending at e shares a suffix of length m
        for e in range(t):
            m = row[e]
            if m and e - m >= 0:
                zm = smask[m]
                if (zm >> w[t - m]) & 1 or (zm >> w[e - m]) & 1:
                    return False
        # following letters: occurrences of suffixes of w[:t]
        if t:
            pmask = 0
            psm = [0] * (t + 1)
            for L in range(1, t + 1):
                pmask |= 1 << w[t - L]
                psm[L] = pmask
            for e in range(t - 1):
                m = prev[e]
                if m:
                    f = w[e + 1]
                    if f != a:
                        zm = psm[m]
                        if (zm >> a) & 1 or (zm >> f) & 1:
                            return False
        return True

    def rec(t, p):
        if t == N:
            if p == N:
                out.append(tuple(w))
            return
        lo = w[t - p] if t else 1
        hi = 1 if t == 0 else n
        for a in range(lo, hi + 1):
            if t < npre and a != prefix[t]:
                continue
            w[t] = a
            if ok_at(t):
                rec(t + 1, p if (t and a == w[t - p]) else t + 1)
        w[t] = 0

    rec(0, 1)
    return out
