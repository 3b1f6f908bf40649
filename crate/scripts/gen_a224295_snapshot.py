#!/usr/bin/env python3
"""Prints a b-file of permutations avoiding {12345, 12354}.

Usage: gen_a224295_snapshot.py 11 > crates/shapewilf/data/A224295.txt

A permutation contains 12345 or 12354 iff some entry ends an increasing
subsequence of length 3 and has two larger entries after it. The script counts
avoiders by a prefix search using that criterion; it shares no code with the
Rust engines.
"""
import sys
from datetime import date


def count(n):
    used = [False] * (n + 1)
    vals, lis, larger = [], [], []
    total = 0

    def rec():
        nonlocal total
        if len(vals) == n:
            total += 1
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            ok = True
            best = 0
            touched = []
            for j, x in enumerate(vals):
                if x < v:
                    best = max(best, lis[j])
                    if lis[j] >= 3:
                        larger[j] += 1
                        touched.append(j)
                        if larger[j] >= 2:
                            ok = False
            if ok:
                used[v] = True
                vals.append(v)
                lis.append(best + 1)
                larger.append(0)
                rec()
                vals.pop()
                lis.pop()
                larger.pop()
                used[v] = False
            for j in touched:
                larger[j] -= 1

    rec()
    return total


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    print("# A224295 Number of permutations of length n avoiding 12345 and 12354.")
    print("# Local snapshot generated %s by scripts/gen_a224295_snapshot.py" % date.today().isoformat())
    print("# (oeis.org was unreachable from the build environment); indices follow n, a(0) = 1.")
    for n in range(n_max + 1):
        print(n, count(n), flush=True)


if __name__ == "__main__":
    main()
