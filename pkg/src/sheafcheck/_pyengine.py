"""Pure-Python engine for maximal consistent vertex sets.

Vertex sets are int bitmasks.  The bad cells are taken one at a time.  Every
candidate containing the current cell is replaced by the candidates obtained
by deleting one of the cell's vertices, and any new candidate contained in
another candidate is dropped.  After each step the candidates are exactly the
maximal sets avoiding the cells seen so far, so the list never holds
duplicates or dominated sets.
"""


def _order(universe, bad):
    bad = sorted(set(bad), key=lambda b: (b.bit_count(), b))
    if any(b & ~universe for b in bad):
        raise ValueError("bad cell outside the universe")
    return bad


def maximal_consistent_masks(universe, bad):
    """Inclusion-maximal subsets of ``universe`` containing no mask of ``bad``."""
    bad = _order(universe, bad)
    if bad and bad[0] == 0:
        return []
    family = [universe]
    for b in bad:
        kept = []
        split = []
        for w in family:
            (split if w & b == b else kept).append(w)
        if not split:
            continue
        # Children of distinct parents can neither coincide nor nest (either
        # would force one parent inside the other), so only the kept sets can
        # dominate a child.
        fresh = []
        for w in split:
            rest = b
            while rest:
                low = rest & -rest
                c = w & ~low
                if not any(c & k == c for k in kept):
                    fresh.append(c)
                rest ^= low
        family = kept + fresh
    return family
