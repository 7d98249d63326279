#!/usr/bin/env python3
"""Generate fixtures/s3.nca: the word problem of the symmetric group S3
as a length-reducing system.  One letter per group element, one rule
g h -> gh for every pair, plus e -> _ for the identity letter.  A word
reduces to the empty word exactly when its product is the identity.
"""

from itertools import permutations
from pathlib import Path

PERMS = sorted(permutations(range(3)))
NAMES = {
    (0, 1, 2): "e",
    (1, 2, 0): "r",
    (2, 0, 1): "q",
    (1, 0, 2): "s",
    (0, 2, 1): "t",
    (2, 1, 0): "u",
}


def compose(p, q):
    # apply q first, then p
    return tuple(p[q[i]] for i in range(3))


def main():
    letters = " ".join(NAMES[p] for p in PERMS)
    lines = [
        "# symmetric group S3: g h -> gh for all pairs, e erased",
        "kind: nca",
        f"terminals: {letters}",
        f"alphabet: {letters}",
        "rules:",
        "e -> _",
    ]
    for p in PERMS:
        for q in PERMS:
            lines.append(f"{NAMES[p]} {NAMES[q]} -> {NAMES[compose(p, q)]}")
    out = Path(__file__).resolve().parent.parent / "fixtures" / "s3.nca"
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
