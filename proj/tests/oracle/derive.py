#!/usr/bin/env python3
"""Reference values computed by direct brute force, independent of the C++ code.

Prints `key = value` lines; tests/data/derived_constants.txt is a frozen copy.
Run: python3 tests/oracle/derive.py [path/to/data]
"""
import itertools
import os
import sys
from fractions import Fraction


def load(path):
    k = None
    table = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if k is None:
                k = int(line.split('=')[1])
                continue
            blk, img = [t.strip() for t in line.split('->')]
            table[blk] = '' if img == '-' else img
    return k, table


class Sub:
    def __init__(self, path):
        self.k, self.table = load(path)
        self.weps = next(b for b, v in self.table.items() if v == '')
        self.simple = self._split()

    def _split(self):
        # brute force: try every assignment of letter images of bounded length
        k = self.k
        maxlen = max(len(v) for v in self.table.values())
        cands = [''.join(p) for n in range(maxlen + 1)
                 for p in itertools.product('01', repeat=n)]
        maps = []
        # solve position by position using the blocks 0^k-style constraints
        # simple but exhaustive over the 2^k blocks
        def consistent(partial):
            i = len(partial)
            for blk, img in self.table.items():
                pre = ''.join(partial[j][int(blk[j])] for j in range(i))
                if not img.startswith(pre):
                    return False
                if i == k and pre != img:
                    return False
            return True

        def rec(partial):
            if len(partial) == k:
                return partial
            for a in cands:
                for b in cands:
                    nxt = partial + [(a, b)]
                    if consistent(nxt):
                        r = rec(nxt)
                        if r:
                            return r
            return None
        return rec([])

    def block(self, w):
        out = []
        for i in range(0, len(w) - len(w) % self.k, self.k):
            out.append(self.table[w[i:i + self.k]])
        return ''.join(out)

    def alt(self, w, phase=0):
        return ''.join(self.simple[(phase + i) % self.k][int(c)]
                       for i, c in enumerate(w))

    def vanish(self, w, cap=10000):
        seen = set()
        n = 0
        while w:
            if w in seen:
                return None
            seen.add(w)
            w = self.alt(w)
            n += 1
            if n > cap:
                return None
        return n


def expansion_bits(x, n):
    """First n bits of the expansion of x not ending in 0^inf."""
    bits = []
    # dyadic: use 1-periodic tail
    if x == 0:
        return '0' * n
    num, den = x.numerator, x.denominator
    d = den
    while d % 2 == 0:
        d //= 2
    dyadic = d == 1
    if dyadic:
        # x = a/2^m ; expansion (a-1)/2^m then 1^inf
        m = den.bit_length() - 1
        a = num
        pre = format(a - 1, 'b').zfill(m) if m > 0 else ''
        s = pre + '1' * n
        return s[:n]
    r = num
    for _ in range(n):
        r *= 2
        if r >= den:
            bits.append('1')
            r -= den
        else:
            bits.append('0')
    return ''.join(bits)


def tilde(x):
    """(prefix, cycle) by long division with remainder tracking."""
    if x == 0:
        return None
    num, den = x.numerator, x.denominator
    d = den
    while d % 2 == 0:
        d //= 2
    if d == 1:
        m = den.bit_length() - 1
        pre = format(num - 1, 'b').zfill(m) if m > 0 else ''
        return canon(pre, '1')
    r = num
    seen = {}
    bits = []
    while r not in seen:
        seen[r] = len(bits)
        r *= 2
        if r >= den:
            bits.append('1')
            r -= den
        else:
            bits.append('0')
    s = seen[r]
    return canon(''.join(bits[:s]), ''.join(bits[s:]))


def canon(pre, cyc):
    for p in range(1, len(cyc) + 1):
        if len(cyc) % p == 0 and cyc[:p] * (len(cyc) // p) == cyc:
            cyc = cyc[:p]
            break
    while pre and pre[-1] == cyc[-1]:
        pre = pre[:-1]
        cyc = cyc[-1] + cyc[:-1]
    return pre, cyc


def value(pre, cyc):
    v = Fraction(int(pre, 2) if pre else 0, 2 ** len(pre))
    c = Fraction(int(cyc, 2), 2 ** len(cyc) - 1)
    return v + c / 2 ** len(pre)


def eval_f(s, x):
    """Reference f: stream the expansion block by block, detect the cycle of
    (remainder at block boundary) to obtain the periodic image."""
    t = tilde(x)
    if t is None:
        return Fraction(0)
    pre, cyc = t
    k = s.k
    if not pre and len(cyc) <= k and (cyc * k)[:k] == s.weps and \
            (cyc * (2 * k))[:2 * k] == s.weps * 2:
        return Fraction(0)
    # unroll: length L prefix + cycle aligned
    p = -(-len(pre) // k) * k
    period = len(cyc)
    while period % k:
        period += len(cyc)
    word = pre + cyc * ((p - len(pre) + period) // len(cyc) + 2)
    head = word[:p]
    body = word[p:p + period]
    ih = s.block(head)
    ib = s.block(body)
    if ib == '':
        if not ih:
            return Fraction(0)
        return Fraction(int(ih, 2), 2 ** len(ih))
    return value(ih, ib)


def brute_cover(images, L):
    imgs = [v for v in images if v]
    for n in range(L + 1):
        for t in itertools.product('01', repeat=n):
            w = ''.join(t)
            frontier = {0}
            ok = False
            seen = set()
            while frontier:
                nxt = set()
                for pos in frontier:
                    if pos >= len(w):
                        ok = True
                        break
                    for v in imgs:
                        rest = w[pos:]
                        if v.startswith(rest) or rest.startswith(v):
                            q = pos + len(v)
                            if q not in seen:
                                seen.add(q)
                                nxt.add(q)
                if ok:
                    break
                frontier = nxt
            if not ok:
                return w
    return None


def lift_prefix_brute(s, t):
    n = 0
    while True:
        for blocks in itertools.product(sorted(s.table), repeat=n):
            p = ''.join(blocks)
            if s.block(p).startswith(t):
                return p
        n += 1


def main():
    base = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), '..', '..', 'data')
    S = {i: Sub(os.path.join(base, 'sigma%d.sub' % i)) for i in range(1, 5)}
    s2, s3, s4 = S[2], S[3], S[4]
    out = []

    def put(key, val):
        out.append('%s = %s' % (key, val))

    pre, cyc = tilde(Fraction(1, 3))
    put('tilde.1/3', '%s(%s)' % (pre, cyc))
    pre, cyc = tilde(Fraction(1, 2))
    put('tilde.1/2', '%s(%s)' % (pre, cyc))
    put('align.1(011).k2.first12', ('1' + '011' * 5)[:12])
    put('s3.block.1101', s3.block('1101'))
    put('s3.alt.111', s3.alt('111'))
    # relative images via full iteration
    def rel(s, u, n, v):
        a, b = u + v, u
        for _ in range(n):
            a, b = s.alt(a), s.alt(b)
        assert a.startswith(b)
        return a[len(b):]
    put('s3.rel.u1.n1.v1', rel(s3, '1', 1, '1'))
    put('s3.rel.u11.n2.v11', rel(s3, '11', 2, '11'))
    for w in ['00', '01', '10', '11', '0', '1']:
        put('s3.vanish.' + w, s3.vanish(w))
    for kl in [1, 2, 4, 8, 16]:
        F = max(s3.vanish(''.join(t)) for t in itertools.product('01', repeat=kl))
        put('s3.F.%d' % kl, F)
    F3 = max(s4.vanish(''.join(t)) for t in itertools.product('01', repeat=3))
    put('s4.F.3', F3)
    m = 0
    for n in range(13):
        for t in itertools.product('01', repeat=n):
            m = max(m, s4.vanish(''.join(t)))
    put('s4.maxvanish.upto12', m)
    for x in ['1', '1/3', '2/3', '1/2']:
        put('s3.f.' + x, eval_f(s3, Fraction(x)))
    put('s2.f.1/3', eval_f(s2, Fraction(1, 3)))
    put('s3.stream.1.8', s3.block(expansion_bits(Fraction(1), 16))[:8])
    put('s3.stream.1/2.4', s3.block(expansion_bits(Fraction(1, 2), 16))[:4])
    put('s3.lift_prefix.10', lift_prefix_brute(s3, '10'))
    put('s3.lift_prefix.0', lift_prefix_brute(s3, '0'))
    put('s3.sens.1/3.bits10.n', s3.vanish(expansion_bits(Fraction(1, 3), 10)))
    for i in range(1, 5):
        w = brute_cover(list(S[i].table.values()), 12 if i != 4 else 1)
        put('s%d.cover' % i, 'yes' if w is None else 'no:' + w)
    put('s3.d1.1.1/3', max(abs(Fraction(1) - Fraction(1, 3)),
                           abs(eval_f(s3, Fraction(1)) - eval_f(s3, Fraction(1, 3)))))
    put('s2.strip.(0110)', s2.block('0110' * 4) + '|' + s2.block('10' * 8))
    put('s1.cycle.110', S[1].block('110') + ',' + S[1].block(S[1].block('110')))
    put('s3.simple', ';'.join('%s,%s' % (a or '-', b or '-') for a, b in s3.simple))
    put('s4.simple', ';'.join('%s,%s' % (a or '-', b or '-') for a, b in s4.simple))
    print('\n'.join(out))


if __name__ == '__main__':
    main()
