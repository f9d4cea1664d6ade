#!/usr/bin/env python3
"""Regenerates the label words used by corpus/classical.json and corpus/theta.json.

Both searches are seeded, so the output is reproducible. A word is accepted when
every reduced path of length `piece_cap + 1` in the graph reads a distinct label,
which bounds the longest piece by `piece_cap`.
"""
import json
import random
import sys

INV = {"a": "A", "A": "a", "b": "B", "B": "b"}


def fmt(letter):
    return letter if letter.islower() else letter.lower() + "^-1"


def cycle_paths(word, k):
    n = len(word)
    out = []
    for i in range(n):
        out.append("".join(word[(i + j) % n] for j in range(k)))
    inv = [INV[c] for c in reversed(word)]
    for i in range(n):
        out.append("".join(inv[(i + j) % n] for j in range(k)))
    return out


def reduced_cyclic(word):
    n = len(word)
    return all(word[(i + 1) % n] != INV[word[i]] for i in range(n))


def collisions(labels):
    seen = {}
    for x in labels:
        seen[x] = seen.get(x, 0) + 1
    return sum(c - 1 for c in seen.values())


def anneal(n_letters, cost, rng, iters=200000):
    word = [rng.choice("aAbB") for _ in range(n_letters)]
    best = cost(word)
    for _ in range(iters):
        if best == 0:
            return word
        i = rng.randrange(n_letters)
        old = word[i]
        word[i] = rng.choice("aAbB")
        c = cost(word)
        if c <= best or rng.random() < 0.02:
            best = c
        else:
            word[i] = old
    return word if best == 0 else None


def classical(n, cap, seed):
    rng = random.Random(seed)

    def cost(w):
        bad = 0 if reduced_cyclic(w) else 100
        bad += sum(1 for i in range(len(w)) if w[(i + 1) % len(w)] == INV[w[i]])
        return bad + collisions(cycle_paths(w, cap + 1))

    while True:
        w = anneal(n, cost, rng)
        if w:
            return w


def theta_graph(sides):
    """Vertices: 0 = u, 1 = v, then interior vertices; edges follow each side."""
    edges = []
    nxt = 2
    for length in sides:
        prev = 0
        for j in range(length):
            cur = 1 if j == length - 1 else nxt
            if cur != 1:
                nxt += 1
            edges.append([prev, cur])
            prev = cur
    return nxt, edges


def theta_paths(nverts, edges, labels, k):
    darts = []
    for (u, v), x in zip(edges, labels):
        darts.append((u, v, x, len(darts) + 1))
        darts.append((v, u, INV[x], len(darts) - 1))
    out_d = {}
    for i, d in enumerate(darts):
        out_d.setdefault(d[0], []).append(i)
    res = []

    def walk(vertex, prev, acc):
        if len(acc) == k:
            res.append("".join(acc))
            return
        for i in out_d.get(vertex, []):
            if prev is not None and darts[prev][3] == i:
                continue
            walk(darts[i][1], i, acc + [darts[i][2]])

    for v in range(nverts):
        walk(v, None, [])
    return res


def theta(sides, cap, seed):
    rng = random.Random(seed)
    nverts, edges = theta_graph(sides)

    def cost(w):
        bad = 0
        # folded at the branch vertices: first letters at u, last letters at v
        firsts, lasts, pos = [], [], 0
        for length in sides:
            firsts.append(w[pos])
            lasts.append(INV[w[pos + length - 1]])
            pos += length
        bad += 50 * (len(firsts) - len(set(firsts)) + len(lasts) - len(set(lasts)))
        pos = 0
        for length in sides:
            bad += 50 * sum(1 for j in range(pos, pos + length - 1) if w[j + 1] == INV[w[j]])
            pos += length
        return bad + collisions(theta_paths(nverts, edges, w, cap + 1))

    while True:
        w = anneal(len(edges), cost, rng, iters=400000)
        if w:
            return nverts, edges, w


def compact(doc):
    lines = ["{", f'  "alphabet": {json.dumps(doc["alphabet"])},', '  "components": [']
    for ci, comp in enumerate(doc["components"]):
        lines.append(f'    {{ "name": {json.dumps(comp["name"])}, "vertices": {comp["vertices"]},')
        lines.append('      "edges": [')
        edges = [f"        {json.dumps(e)}" for e in comp["edges"]]
        lines.append(",\n".join(edges))
        lines.append("      ] }" + ("," if ci + 1 < len(doc["components"]) else ""))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def main():
    cw = classical(31, 3, 7)
    classical_json = {
        "alphabet": ["a", "b"],
        "components": [{
            "name": "R1",
            "vertices": len(cw),
            "edges": [[i, (i + 1) % len(cw), fmt(c)] for i, c in enumerate(cw)],
        }],
    }
    nverts, edges, tw = theta([26, 26, 26], 5, 11)
    theta_json = {
        "alphabet": ["a", "b"],
        "components": [{
            "name": "Theta",
            "vertices": nverts,
            "edges": [[u, v, fmt(c)] for (u, v), c in zip(edges, tw)],
        }],
    }
    out = sys.argv[1] if len(sys.argv) > 1 else "corpus"
    for name, doc in (("classical", classical_json), ("theta", theta_json)):
        with open(f"{out}/{name}.json", "w") as f:
            f.write(compact(doc))
    print("classical:", " ".join(fmt(c) for c in cw))


if __name__ == "__main__":
    main()
