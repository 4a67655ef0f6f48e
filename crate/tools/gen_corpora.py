#!/usr/bin/env python3
"""Generates the graph6 corpora under corpora/.

Produced files (records sorted, one per line, short-form graph6):

  connected_n{1..9}.g6     all connected graphs of each order, up to isomorphism
  all_n8.g6                all graphs on 8 vertices, up to isomorphism
  cubic_connected_le14.g6  all connected cubic graphs on 4..14 vertices

Connected graphs are built by vertex augmentation (every connected graph
has a non-cut vertex, so adding a new vertex joined to each nonempty
subset of a smaller connected graph reaches everything). Cubic graphs are
built by edge-pair expansion (subdivide two distinct edges, join the two
new vertices); disconnected cubic graphs, needed as expansion parents,
are assembled as unions of smaller connected ones.

Every output set is checked against the published enumeration counts
before being written; a mismatch aborts.
"""

import itertools
import sys
import time
from collections import defaultdict
from multiprocessing import Pool

import networkx as nx

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CUBIC_CONNECTED_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}


# ----------------------------------------------------------------- graphs as
# tuples of neighbour bitmasks

def to_nx(rows):
    g = nx.Graph()
    g.add_nodes_from(range(len(rows)))
    for u, row in enumerate(rows):
        m = row >> (u + 1)
        v = u + 1
        while m:
            if m & 1:
                g.add_edge(u, v)
            m >>= 1
            v += 1
    return g


def graph6(rows):
    n = len(rows)
    assert n <= 62
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append((rows[u] >> v) & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + n)]
    for i in range(0, len(bits), 6):
        grp = 0
        for b in bits[i : i + 6]:
            grp = (grp << 1) | b
        out.append(chr(63 + grp))
    return "".join(out)


def key_of(rows):
    """Cheap isomorphism-invariant bucket key."""
    n = len(rows)
    degs = [bin(r).count("1") for r in rows]
    # two rounds of neighbour-degree refinement
    colors = tuple(sorted(degs))
    ref1 = []
    for u, row in enumerate(rows):
        nbr = tuple(sorted(degs[v] for v in range(n) if (row >> v) & 1))
        ref1.append((degs[u], nbr))
    ref2 = []
    idx = {c: i for i, c in enumerate(sorted(set(ref1)))}
    for u, row in enumerate(rows):
        nbr = tuple(sorted(idx[ref1[v]] for v in range(n) if (row >> v) & 1))
        ref2.append((idx[ref1[u]], nbr))
    triangles = 0
    squares = 0
    for u in range(n):
        for v in range(u + 1, n):
            common = bin(rows[u] & rows[v]).count("1")
            if (rows[u] >> v) & 1:
                triangles += common
            squares += common * (common - 1) // 2
    return hash((n, colors, tuple(sorted(ref2)), triangles, squares))


def connected(rows):
    n = len(rows)
    if n <= 1:
        return True
    seen = 1
    stack = [0]
    while stack:
        u = stack.pop()
        m = rows[u] & ~seen
        v = 0
        while m:
            if m & 1:
                seen |= 1 << v
                stack.append(v)
            m >>= 1
            v += 1
    return seen == (1 << n) - 1


def dedup(candidates, workers=2):
    """Returns one representative per isomorphism class."""
    buckets = defaultdict(list)
    if len(candidates) > 50000 and workers > 1:
        with Pool(workers) as pool:
            keys = pool.map(key_of, candidates, chunksize=4096)
    else:
        keys = [key_of(rows) for rows in candidates]
    for k, rows in zip(keys, candidates):
        buckets[k].append(rows)
    reps = []
    for bucket in buckets.values():
        kept = []
        for rows in bucket:
            g = to_nx(rows)
            if not any(nx.vf2pp_is_isomorphic(g, h) for _, h in kept):
                kept.append((rows, g))
        reps.extend(rows for rows, _ in kept)
    return reps


# ------------------------------------------------------------ connected sets

def augment(parent, mask_range):
    """All graphs made from `parent` plus one vertex with neighbours `mask`."""
    n = len(parent)
    out = []
    for mask in mask_range:
        rows = [parent[u] | (((mask >> u) & 1) << n) for u in range(n)] + [mask]
        out.append(tuple(rows))
    return out


def gen_connected(max_n, workers):
    levels = {1: [((0,))]}
    levels[1] = [(0,)]
    for n in range(2, max_n + 1):
        t0 = time.time()
        candidates = []
        for parent in levels[n - 1]:
            candidates.extend(augment(parent, range(1, 1 << (n - 1))))
        reps = dedup(candidates, workers)
        assert all(connected(r) for r in reps)
        assert len(reps) == CONNECTED_COUNTS[n], (n, len(reps), CONNECTED_COUNTS[n])
        levels[n] = reps
        print(f"connected n={n}: {len(reps)} classes from {len(candidates)} candidates "
              f"({time.time()-t0:.1f}s)", flush=True)
    return levels


def gen_all_n8(levels7_all, workers):
    candidates = []
    for parent in levels7_all:
        candidates.extend(augment(parent, range(0, 1 << 7)))
    reps = dedup(candidates, workers)
    assert len(reps) == ALL_COUNTS[8], (len(reps), ALL_COUNTS[8])
    return reps


def gen_all_upto7():
    levels = {1: [(0,)]}
    for n in range(2, 8):
        candidates = []
        for parent in levels[n - 1]:
            candidates.extend(augment(parent, range(0, 1 << (n - 1))))
        reps = dedup(candidates, workers=1)
        assert len(reps) == ALL_COUNTS[n], (n, len(reps))
        levels[n] = reps
    return levels


# ---------------------------------------------------------------- cubic sets

def edges_of(rows):
    out = []
    for u, row in enumerate(rows):
        m = row >> (u + 1)
        v = u + 1
        while m:
            if m & 1:
                out.append((u, v))
            m >>= 1
            v += 1
    return out


def expand(rows):
    """Subdivide two distinct edges with x, y and add the edge xy."""
    n = len(rows)
    x, y = n, n + 1
    out = []
    for (a, b), (c, d) in itertools.combinations(edges_of(rows), 2):
        rr = [list(rows) + [0, 0]][0]
        rr = list(rows) + [0, 0]
        # remove a-b and c-d
        rr[a] &= ~(1 << b); rr[b] &= ~(1 << a)
        rr[c] &= ~(1 << d); rr[d] &= ~(1 << c)
        for (u, v) in ((a, x), (b, x), (c, y), (d, y), (x, y)):
            rr[u] |= 1 << v
            rr[v] |= 1 << u
        out.append(tuple(rr))
    return out


def disjoint_union(g1, g2):
    n1 = len(g1)
    return tuple(list(g1) + [r << n1 for r in g2])


def gen_cubic(max_n, workers):
    k4 = tuple(0b1111 & ~(1 << i) for i in range(4))
    conn = {4: [k4]}
    alllvl = {4: [k4]}
    for n in range(6, max_n + 1, 2):
        t0 = time.time()
        candidates = []
        for parent in alllvl[n - 2]:
            candidates.extend(expand(parent))
        reps = dedup([c for c in candidates if connected(c)], workers)
        for r in reps:
            assert all(bin(x).count("1") == 3 for x in r)
        assert len(reps) == CUBIC_CONNECTED_COUNTS[n], (n, len(reps))
        conn[n] = reps
        # disconnected cubic graphs: unions of smaller connected ones
        disc = []
        for n1 in range(4, n - 3, 2):
            n2 = n - n1
            if n2 < n1:
                break
            for g1 in conn[n1]:
                for g2 in conn[n2]:
                    disc.append(disjoint_union(g1, g2))
        # n1 = n2 pairs double-count unordered unions; dedup handles it
        disc = dedup(disc, workers) if disc else []
        alllvl[n] = reps + disc
        print(f"cubic n={n}: {len(reps)} connected (+{len(disc)} disconnected) "
              f"({time.time()-t0:.1f}s)", flush=True)
    return conn


def write_sorted(path, graphs):
    records = sorted(graph6(rows) for rows in graphs)
    with open(path, "w") as f:
        for rec in records:
            f.write(rec + "\n")
    print(f"wrote {path}: {len(records)} records", flush=True)


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "corpora"
    workers = 2
    t0 = time.time()

    conn = gen_connected(9, workers)
    for n in range(1, 10):
        write_sorted(f"{out_dir}/connected_n{n}.g6", conn[n])

    all7 = gen_all_upto7()
    all8 = gen_all_n8(all7[7], workers)
    write_sorted(f"{out_dir}/all_n8.g6", all8)

    cubic = gen_cubic(14, workers)
    records = []
    for n in sorted(cubic):
        records.extend(cubic[n])
    write_sorted(f"{out_dir}/cubic_connected_le14.g6", records)

    print(f"done in {time.time()-t0:.0f}s", flush=True)


if __name__ == "__main__":
    main()
