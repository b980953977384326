"""Ideals of positive root systems: enumeration, ideal arrangements, the shifted
Young diagram view (generating boxes, fullness, connectivity), signatures, the
block partition in accordance with an ideal, and component decomposition.

Classical roots are named throughout by the hyperplane tuple notation:
(i, j) is x_i = x_j, (i, -j) is x_i = -x_j, (i, 0) is x_i = 0, always with
i < |j|.  For families A, B, C every ideal complement is an open set of the
diagram topology (a box set closed toward the lower right); the D diagram
flattens one incomparable pair per row, so a few D ideals lack a box
presentation and only their diagram views raise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import crapo
from .errors import ConstraintError, UnsupportedTypeError
from .rootsystems import hyperplane_tuple


class Ideal:
    """An upward-closed subset of a root poset, stored as a bitmask over root indices."""

    __slots__ = ("poset", "mask")

    def __init__(self, poset, mask):
        self.poset = poset
        self.mask = int(mask)

    @property
    def rst(self):
        return self.poset.rst

    def __len__(self):
        return self.mask.bit_count()

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.poset.rst == other.poset.rst
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((self.poset.rst, self.mask))

    def root_indices(self):
        return [i for i in range(len(self.poset)) if self.mask >> i & 1]

    def roots(self):
        return [self.poset.roots[i] for i in self.root_indices()]

    def complement_mask(self):
        return ((1 << len(self.poset)) - 1) ^ self.mask

    def complement_indices(self):
        m = self.complement_mask()
        return [i for i in range(len(self.poset)) if m >> i & 1]

    def complement_roots(self):
        return [self.poset.roots[i] for i in self.complement_indices()]

    def __repr__(self):
        return f"Ideal({self.poset.rst}, {sorted(str(r) for r in self.roots())})"


def _check_upward_closed(poset, mask):
    for i in range(len(poset)):
        if mask >> i & 1:
            missing = poset.up_masks[i] & ~mask
            if missing:
                j = missing.bit_length() - 1
                raise ConstraintError(
                    f"not an ideal of {poset.rst}: contains u={poset.roots[i]} "
                    f"with u ⪯ v but lacks v={poset.roots[j]}"
                )


def ideal_from_mask(poset, mask):
    _check_upward_closed(poset, mask)
    return Ideal(poset, mask)


def ideal_from_root_coords(poset, coords_list):
    """Build and validate an ideal from explicit simple-coordinate vectors."""
    mask = 0
    for coords in coords_list:
        mask |= 1 << poset.index_of(coords)
    return ideal_from_mask(poset, mask)


def ideal_from_boxes(poset, boxes):
    """Build an ideal of a classical system from generating boxes of its complement.

    Any box list is accepted; the complement is the union of the generated box
    sets, normalized internally.
    """
    rst = poset.rst
    if not rst.is_classical:
        raise UnsupportedTypeError(f"{rst.family} ideals take explicit root lists")
    valid = set(diagram_boxes(rst))
    comp = set()
    for b in boxes:
        b = (int(b[0]), int(b[1]))
        if b not in valid:
            raise ConstraintError(f"{b} is not a box of the {rst} diagram")
        comp |= generated_box_set(rst, b)
    mask = 0
    tuple_index = {
        hyperplane_tuple(rst, r.ambient2): r.index for r in poset.roots
    }
    full = (1 << len(poset)) - 1
    for t in comp:
        mask |= 1 << tuple_index[t]
    return ideal_from_mask(poset, full ^ mask)


# ---- enumeration -----------------------------------------------------------


def iter_ideals(poset):
    """All ideals, streamed by ascending cardinality, lexicographic bitmask within.

    Uses canonical-parent breadth-first generation: an ideal of size k+1 is
    produced only from the parent obtained by deleting its lowest-index
    minimal element, so each ideal appears exactly once and only one level is
    held in memory.
    """
    m = len(poset)
    up = poset.up_masks

    def min_removable(mask):
        # lowest index i in the ideal that is minimal within it
        for i in range(m):
            if mask >> i & 1 and not (poset.down_masks[i] & mask & ~(1 << i)):
                return i
        return -1

    level = [0]
    while level:
        yield from (Ideal(poset, mask) for mask in level)
        nxt = set()
        for mask in level:
            for i in range(m):
                if mask >> i & 1:
                    continue
                if up[i] & ~mask & ~(1 << i):
                    continue  # not addable: something above i is missing
                child = mask | 1 << i
                if min_removable(child) == i:
                    nxt.add(child)
        level = sorted(nxt)


def enumerate_ideals(poset):
    """Materialized list of all ideals, ordered as iter_ideals streams them."""
    return list(iter_ideals(poset))


# ---- diagram geometry ------------------------------------------------------


def diagram_boxes(rst):
    """All boxes of the shifted Young diagram, as hyperplane tuples."""
    f, n = rst.family, rst.n_param
    out = []
    if f == "A":
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                out.append((i, j))
    elif f in ("B", "C"):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out.append((i, j))
                out.append((i, -j))
            out.append((i, 0))
    else:  # D
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                out.append((i, j))
                out.append((i, -j))
    return out


def _pos_b(n, v):
    """Position of v in the order 1 < 2 < ... < n < 0 < -n < ... < -1."""
    if v == 0:
        return n + 1
    return v if v > 0 else 2 * n + 2 + v

def _pos_c(n, v):
    """Position of v in the order 1 < ... < n < -n < ... < -1 (no 0)."""
    return v if v > 0 else 2 * n + 1 + v


def generated_box_set(rst, box):
    """The box set generated by one box: everything toward the lower right."""
    f, n = rst.family, rst.n_param
    i0, j0 = box
    out = set()
    if f == "A":
        for u in range(i0, j0):
            for v in range(u + 1, j0 + 1):
                out.add((u, v))
        return out
    if f == "B":
        top = _pos_b(n, j0)
        for (u, v) in diagram_boxes(rst):
            if u >= i0 and _pos_b(n, v) <= top:
                out.add((u, v))
        return out
    if f == "C":
        if j0 > 0:
            for (u, v) in diagram_boxes(rst):
                if v != 0 and u >= i0 and _pos_c(n, v) <= _pos_c(n, j0):
                    out.add((u, v))
        elif j0 < 0:
            for (u, v) in diagram_boxes(rst):
                if v != 0 and u >= i0 and _pos_c(n, v) <= _pos_c(n, j0):
                    out.add((u, v))
            for u in range(-j0, n + 1):
                out.add((u, 0))
        else:
            if i0 + 1 <= n:
                out |= generated_box_set(rst, (i0, -(i0 + 1)))
            for u in range(i0, n + 1):
                out.add((u, 0))
        return out
    # D
    top = _pos_c(n, j0)
    for (u, v) in diagram_boxes(rst):
        if u >= i0 and u <= n - 1 and _pos_c(n, v) <= top:
            out.add((u, v))
    return out


def grid_position(rst, box):
    """(row, column) of a box in the drawn diagram, for adjacency tests."""
    f, n = rst.family, rst.n_param
    i, v = box
    if f == "A":
        return (i, n - v + 1)
    if f == "B":
        if v < 0:
            return (i, -v - 1)
        if v == 0:
            return (i, n)
        return (i, 2 * n - v + 1)
    if f == "C":
        if v == 0:
            return (i, i)
        if v < 0:
            return (i, -v)
        return (i, 2 * n - v + 1)
    # D
    if v < 0:
        return (i, -v - 1)
    return (i, 2 * n - v)


def rightmost_boxes(rst):
    """The rightmost box of every diagram row; their presence defines fullness."""
    f, n = rst.family, rst.n_param
    if f == "A":
        return [(i, i + 1) for i in range(1, n)]
    if f in ("B", "C"):
        return [(i, i + 1) for i in range(1, n)] + [(n, 0)]
    return [(i, i + 1) for i in range(1, n)]


class IdealComplement:
    """The complement of an ideal: a downward-closed root set, with its
    hyperplane tuples and diagram structure for classical types."""

    def __init__(self, ideal):
        self.ideal = ideal
        self.poset = ideal.poset
        self.rst = ideal.rst
        self.root_indices = ideal.complement_indices()
        self.roots = [self.poset.roots[i] for i in self.root_indices]
        if self.rst.is_classical:
            self.hyperplanes = [
                hyperplane_tuple(self.rst, r.ambient2) for r in self.roots
            ]
        else:
            self.hyperplanes = None

    def __len__(self):
        return len(self.roots)

    def tuple_set(self):
        if self.hyperplanes is None:
            raise UnsupportedTypeError(
                f"{self.rst.family} has no shifted-diagram tuple form"
            )
        return set(self.hyperplanes)


def complement(ideal):
    return IdealComplement(ideal)


def generating_boxes(comp):
    """The unique minimal generating antichain: the maximal roots of the complement.

    Returned in ascending row order.  For families A, B, C the drawn diagram
    encodes the root order faithfully, so every ideal complement is an open
    set with such a presentation.  The D diagram flattens the incomparable
    pair e_i - e_n, e_i + e_n into one row, so a D ideal separating such a
    pair has no generating-box presentation and raises ConstraintError.
    """
    tset = comp.tuple_set()  # raises for non-classical
    rst = comp.rst
    gsets = {b: generated_box_set(rst, b) for b in tset}
    gens = sorted(
        (b for b in tset if not any(b != b2 and b in gsets[b2] for b2 in tset)),
        key=lambda b: b[0],
    )
    union = set()
    for g in gens:
        union |= gsets[g]
    if union != tset:
        raise ConstraintError(
            f"complement of {rst} ideal is not an open diagram set: "
            f"generated box sets of {gens} do not reproduce it"
        )
    rows = [b[0] for b in gens]
    if len(set(rows)) != len(rows):
        raise ConstraintError(f"generating boxes {gens} share a row")
    return gens


def is_full(comp):
    """Full means every diagram row's rightmost box lies in the complement."""
    return set(rightmost_boxes(comp.rst)) <= comp.tuple_set()


def _components_of_boxes(rst, boxes):
    boxes = list(boxes)
    pos = {b: grid_position(rst, b) for b in boxes}
    by_pos = {p: b for b, p in pos.items()}
    seen = set()
    comps = []
    for b in boxes:
        if b in seen:
            continue
        stack, comp = [b], []
        seen.add(b)
        while stack:
            cur = stack.pop()
            comp.append(cur)
            r, c = pos[cur]
            for p2 in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                nb = by_pos.get(p2)
                if nb is not None and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        comps.append(sorted(comp))
    comps.sort()
    return comps


def is_connected(comp):
    """Connectivity of the complement in the 4-neighborhood of the diagram grid."""
    boxes = comp.tuple_set()
    if not boxes:
        return True
    return len(_components_of_boxes(comp.rst, boxes)) == 1


def _components_by_coordinates(boxes):
    """Group hyperplane tuples by connected coordinate support (union-find)."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for (i, j) in boxes:
        for k in (i, abs(j)):
            if k and k not in parent:
                parent[k] = k
        if j:
            union(i, abs(j))
    groups = {}
    for (i, j) in boxes:
        groups.setdefault(find(i), []).append((i, j))
    return [sorted(g) for _, g in sorted(groups.items())]


# ---- signatures and the partition in accordance ----------------------------


def _signature_interval(rst, gen):
    """Generator (i, j) as a signature interval [lo, hi] in the type's linear order.

    Returns (row, hi_position, order_fn).  For C a zero generator (i, 0)
    behaves as the interval [i, -(i+1)]; for B the zero column sits inside
    the order itself.
    """
    f, n = rst.family, rst.n_param
    i, j = gen
    if f == "A":
        return i, j, lambda v: v
    if f == "B":
        return i, _pos_b(n, j), lambda v: _pos_b(n, v)
    # C and D share the order without zero
    if f == "C" and j == 0:
        # (i, 0) generates its row's tail plus the zero column below; as a
        # signature interval it reaches -(i+1), or stops at n in the corner
        hi = _pos_c(n, -(i + 1)) if i + 1 <= n else _pos_c(n, n)
        return i, hi, lambda v: _pos_c(n, v)
    return i, _pos_c(n, j), lambda v: _pos_c(n, v)


def signature(comp, x):
    """Signature s(x): indices of the generating boxes whose box set mentions x.

    Implemented by the per-type interval closed forms; x = 0 is only
    meaningful for B and C diagrams, negative x only where the diagram has
    negative columns.
    """
    rst = comp.rst
    f = rst.family
    gens = generating_boxes(comp)
    x = int(x)
    if x == 0:
        if f == "A" or f == "D":
            raise UnsupportedTypeError(f"signature of 0 undefined for type {f}")
        if f == "B":
            n = rst.n_param
            return {
                l + 1
                for l, g in enumerate(gens)
                if _pos_b(n, g[1]) >= _pos_b(n, 0)
            }
        return {l + 1 for l, g in enumerate(gens) if g[1] <= 0}
    if x < 0 and f == "A":
        raise UnsupportedTypeError("type A has no negative columns")
    out = set()
    for l, g in enumerate(gens):
        row, hi, order = _signature_interval(rst, g)
        if x > 0:
            if row <= x and order(x) <= hi:
                out.add(l + 1)
        else:
            if order(x) <= hi:
                out.add(l + 1)
    return out


def signature_table(comp):
    """Signatures of every integer appearing in some box of the complement.

    Keys follow the worked-example layout: positive indices, then 0 when a
    zero column is present, then negative columns.
    """
    appearing = set()
    for (i, j) in comp.tuple_set():
        appearing.add(i)
        if j > 0:
            appearing.add(j)
        else:
            appearing.add(j)  # 0 or the negative column value
    order = sorted(appearing, key=lambda v: (v <= 0, v == 0, abs(v) if v > 0 else -v))
    return {x: signature(comp, x) for x in order}


@dataclass
class BlockPartition:
    """The partition A^(1)|...|A^(r)|B^(1)|...|B^(s) of [n], with signatures,
    the adjacency index sets of the counting theorems, and the exact
    pair-incidence flags consumed by the finite-field counting engine."""

    rst: object
    a_blocks: list
    b_blocks: list
    signatures: dict
    hyperplanes: tuple = ()
    # spec'd adjacency sets (1-based block indices)
    r_sets: list = field(default_factory=list)      # R^(u) per A-block
    ra_sets: list = field(default_factory=list)     # R_A^(v) per B-block
    s_sets: list = field(default_factory=list)      # S^(v) per B-block
    r0: list = field(default_factory=list)
    s0: list = field(default_factory=list)
    # engine flags over the combined block list (A-blocks then B-blocks)
    pos_within: list = field(default_factory=list)
    neg_within: list = field(default_factory=list)
    zero_flags: list = field(default_factory=list)
    pos_cross: dict = field(default_factory=dict)
    neg_cross: dict = field(default_factory=dict)

    @property
    def blocks(self):
        return self.a_blocks + self.b_blocks

    def block_sizes(self):
        return [len(b) for b in self.blocks]


def partition_in_accordance(comp):
    """Algorithm P: partition [n] in accordance with the ideal.

    Negative-column membership splits [n] into A and B parts; A-members group
    by their signature, B-members by the pair (negative signature, positive
    signature).  The refinement by the positive signature is needed so every
    block is exchangeable in the hyperplane set; on partitions where positive
    signatures are constant per negative-signature class this reduces to the
    plain grouping.
    """
    rst = comp.rst
    n = rst.n_param
    tset = comp.tuple_set()
    negatives = {j for (_, j) in tset if j < 0}
    sig = {x: frozenset(signature(comp, x)) for x in range(1, n + 1)}
    nsig = {
        x: (frozenset(signature(comp, -x)) if rst.family != "A" else frozenset())
        for x in range(1, n + 1)
    }
    a_members = [x for x in range(1, n + 1) if -x not in negatives]
    b_members = [x for x in range(1, n + 1) if -x in negatives]
    a_blocks = _group_consecutive(a_members, key=lambda x: sig[x])
    b_blocks = _group_consecutive(b_members, key=lambda x: (nsig[x], sig[x]))
    bp = BlockPartition(
        rst=rst,
        a_blocks=a_blocks,
        b_blocks=b_blocks,
        signatures={x: set(sig[x]) for x in range(1, n + 1)}
        | {-x: set(nsig[x]) for x in b_members},
        hyperplanes=tuple(sorted(tset)),
    )
    if rst.family in ("B", "C"):
        bp.signatures[0] = signature(comp, 0)
    # theorem-style adjacency sets
    r = len(a_blocks)
    s = len(b_blocks)
    sA = [sig[blk[0]] for blk in a_blocks]
    sBneg = [nsig[blk[0]] for blk in b_blocks]
    s0 = frozenset(bp.signatures.get(0, set()))
    bp.r_sets = [
        [v + 1 for v in range(u + 1, r) if sA[u] & sA[v]] for u in range(r)
    ]
    bp.ra_sets = [[l + 1 for l in range(r) if sBneg[v] & sA[l]] for v in range(s)]
    bp.s_sets = [
        [h + 1 for h in range(v) if sBneg[v] & sBneg[h]] for v in range(s)
    ]
    bp.r0 = [l + 1 for l in range(r) if s0 & sA[l]]
    bp.s0 = [h + 1 for h in range(s) if s0 & sBneg[h]]
    _fill_engine_flags(bp, tset)
    return bp


def _group_consecutive(members, key):
    blocks = []
    for x in members:
        if blocks and key(blocks[-1][-1]) == key(x):
            blocks[-1].append(x)
        else:
            blocks.append([x])
    return blocks


def _fill_engine_flags(bp, tset):
    """Exact pair-incidence flags per block, verified uniform over the blocks."""
    blocks = bp.blocks
    nb = len(blocks)

    def pos(i, j):
        a, b = min(i, j), max(i, j)
        return (a, b) in tset

    def neg(i, j):
        a, b = min(i, j), max(i, j)
        return (a, -b) in tset

    def zero(i):
        return (i, 0) in tset

    bp.pos_within = []
    bp.neg_within = []
    bp.zero_flags = []
    for blk in blocks:
        z = zero(blk[0])
        pw = pos(blk[0], blk[1]) if len(blk) > 1 else False
        nw = neg(blk[0], blk[1]) if len(blk) > 1 else False
        for x in blk:
            if zero(x) != z:
                raise ConstraintError(f"block {blk} not uniform on the zero column")
        for a in range(len(blk)):
            for b in range(a + 1, len(blk)):
                if pos(blk[a], blk[b]) != pw or neg(blk[a], blk[b]) != nw:
                    raise ConstraintError(f"block {blk} not pair-uniform")
        bp.pos_within.append(pw)
        bp.neg_within.append(nw)
        bp.zero_flags.append(z)
    bp.pos_cross = {}
    bp.neg_cross = {}
    for i in range(nb):
        for j in range(i + 1, nb):
            pc = pos(blocks[i][0], blocks[j][0])
            ncx = neg(blocks[i][0], blocks[j][0])
            for a in blocks[i]:
                for b in blocks[j]:
                    if pos(a, b) != pc or neg(a, b) != ncx:
                        raise ConstraintError(
                            f"blocks {blocks[i]} x {blocks[j]} not pair-uniform"
                        )
            bp.pos_cross[(i, j)] = pc
            bp.neg_cross[(i, j)] = ncx


def reconstruct_tuples(bp):
    """Rebuild the hyperplane tuple set from the block partition and its flags.

    This is the disjoint-union decomposition of the arrangement: binomial
    pairs and cross products over A-blocks, signed pairs and signed products
    over B-blocks, and the zero column, each switched by its incidence flag.
    """
    blocks = bp.blocks
    out = set()
    for bi, blk in enumerate(blocks):
        if bp.pos_within[bi]:
            out.update(
                (blk[a], blk[b]) for a in range(len(blk)) for b in range(a + 1, len(blk))
            )
        if bp.neg_within[bi]:
            out.update(
                (blk[a], -blk[b]) for a in range(len(blk)) for b in range(a + 1, len(blk))
            )
        if bp.zero_flags[bi]:
            out.update((x, 0) for x in blk)
    for (i, j), flag in bp.pos_cross.items():
        if flag:
            for a in blocks[i]:
                for b in blocks[j]:
                    out.add((min(a, b), max(a, b)))
    for (i, j), flag in bp.neg_cross.items():
        if flag:
            for a in blocks[i]:
                for b in blocks[j]:
                    out.add((min(a, b), -max(a, b)))
    return out


# ---- arrangements and components -------------------------------------------


@dataclass(frozen=True)
class Arrangement:
    """A central arrangement given by integer normal vectors."""

    normals: tuple
    dim: int

    def __len__(self):
        return len(self.normals)

    def rank(self):
        return crapo.rank_of(self.normals)


def arrangement_of(ideal):
    """The ideal arrangement: normals are the doubled coordinates of the complement."""
    comp_roots = ideal.complement_roots()
    return Arrangement(
        normals=tuple(r.ambient2 for r in comp_roots),
        dim=ideal.rst.ambient_dim,
    )


def tuple_normal(t, n):
    """Integer normal vector of a hyperplane tuple inside R^n."""
    i, j = t
    v = [0] * n
    v[i - 1] = 1
    if j > 0:
        v[j - 1] = -1
    elif j < 0:
        v[-j - 1] = 1
    return tuple(v)


@dataclass(frozen=True)
class IdealComponent:
    """One connected component of an ideal complement, relabeled to compressed
    coordinates.  Components without negative or zero columns are A-like
    regardless of the parent type."""

    family: str
    index_map: tuple          # old index of each new coordinate, 1-based
    tuples: tuple             # relabeled hyperplane tuples
    size: int                 # number of compressed coordinates

    def rank(self):
        return crapo.rank_of([tuple_normal(t, self.size) for t in self.tuples])


def decompose_components(comp):
    """Split the complement into independent subarrangements with compressed labels.

    Components are the classes of the coordinate-interaction graph: hyperplanes
    on disjoint coordinate sets are matroid-independent, so Tutte and coboundary
    polynomials multiply across the returned components.  (This can be coarser
    than the drawn diagram's grid components, which for the D family may split
    dependent hyperplanes.)
    """
    rst = comp.rst
    boxes = comp.tuple_set()
    out = []
    for boxset in _components_by_coordinates(boxes):
        indices = sorted(
            {i for (i, j) in boxset} | {abs(j) for (i, j) in boxset if j != 0}
        )
        remap = {old: new + 1 for new, old in enumerate(indices)}
        tuples = tuple(
            sorted(
                (remap[i], (remap[j] if j > 0 else (-remap[-j] if j < 0 else 0)))
                for (i, j) in boxset
            )
        )
        fam = rst.family
        if fam != "A" and all(j > 0 for (_, j) in tuples):
            fam = "A"
        out.append(
            IdealComponent(
                family=fam,
                index_map=tuple(indices),
                tuples=tuples,
                size=len(indices),
            )
        )
    return out
