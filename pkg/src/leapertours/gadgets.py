"""Literal move and path tables for the 2D quartet construction.

Frame conventions: a band starting at u holds cells with u <= c + 2r <= u + 3.
Its blocks are (R, u - 2R). Bottom-edge gadgets are given for a band pair
{u, u+4}; the entry block lies on band u, the exit block on band u+4.
"""

# transition between a down-right band u and the up-left band u+4 along the
# bottom edge; entry block (3, u-6), exit block (3, u-2)
HEEL_ENTRY_R = 3
HEEL_EXIT_R = 3
HEEL = (
    (-1, 2), (-1, 0), (-1, 0), (0, 1), (0, 1), (1, 0),
    (-1, 2), (0, 1), (0, 1), (1, 0), (1, -2), (1, -2),
)

# bottom-right corner, keyed by d = w - u_c where u_c is the first down-right
# band whose pair no longer fits a heel. Each part is
# (band offset from u_c, entry R, moves, exit R on band offset + 4).
CORNERS = {
    0: [(0, 2, ((-2, 0), (0, 1), (0, 1), (1, 0), (2, 0)), 3)],
    2: [(0, 2, ((-2, 0), (0, 1), (0, 1), (1, 0), (-1, 2), (2, 0)), 2)],
    4: [(0, 2, ((-2, 0), (0, 1), (0, 1), (1, 0), (-1, 2), (0, 1), (0, 1), (1, 0)), 1)],
    # two pieces: the second replaces the first right-edge step
    6: [
        (0, 2, ((-1, 0), (-1, 0), (1, 2), (-1, 0), (0, 1), (0, 1), (1, 0), (1, 0)), 2),
        (8, 3, ((-1, 0), (-1, 0), (-1, 0), (0, 1), (0, 1), (1, 0), (1, 0), (2, 0)), 4),
    ],
}

# sequence id used in the literature numbering for a corner offset d
CORNER_ID = {0: 1, 2: 2, 4: 3, 6: 0}

# Junctions: two disjoint knight paths covering `region`; both start and end on
# the 2x2 interface block. Paths are listed in the frame where the junction
# sits in the bottom-left corner (top-right ones are rotated by 180 degrees).
JUNCTIONS = {
    "BL5H": dict(
        height=5, iface=(1, 8), matching="H",
        paths=(
            ((2, 8), (0, 9), (1, 7), (0, 5), (1, 3), (0, 1), (2, 0), (4, 1), (3, 3), (2, 5), (0, 4), (2, 3),
             (0, 2), (1, 0), (3, 1), (1, 2), (0, 0), (2, 1), (4, 0), (3, 2), (2, 4), (1, 6), (0, 8), (2, 9)),
            ((1, 8), (0, 6), (1, 4), (2, 2), (3, 0), (1, 1), (0, 3), (1, 5), (0, 7), (1, 9)),
        ),
    ),
    "TR5V": dict(
        height=5, iface=(1, 8), matching="V",
        paths=(
            ((2, 8), (0, 9), (1, 7), (0, 5), (1, 3), (0, 1), (2, 0), (4, 1), (3, 3), (2, 5), (0, 6), (1, 8)),
            ((2, 9), (0, 8), (1, 6), (0, 4), (1, 2), (0, 0), (2, 1), (4, 0), (3, 2), (2, 4), (0, 3), (1, 1),
             (3, 0), (2, 2), (1, 4), (0, 2), (1, 0), (3, 1), (2, 3), (1, 5), (0, 7), (1, 9)),
        ),
    ),
    "TR6V": dict(
        height=6, iface=(1, 10), matching="V",
        paths=(
            ((2, 10), (0, 11), (1, 9), (0, 7), (1, 5), (0, 3), (1, 1), (3, 0), (5, 1), (4, 3), (3, 5), (2, 7),
             (0, 6), (1, 4), (2, 2), (1, 0), (0, 2), (2, 3), (0, 4), (1, 6), (0, 8), (1, 10)),
            ((2, 11), (0, 10), (1, 8), (2, 6), (3, 4), (4, 2), (5, 0), (3, 1), (1, 2), (0, 0), (2, 1), (4, 0),
             (3, 2), (2, 4), (0, 5), (1, 3), (0, 1), (2, 0), (4, 1), (3, 3), (2, 5), (1, 7), (0, 9), (1, 11)),
        ),
    ),
    "TR7V": dict(
        height=7, iface=(1, 12), matching="V",
        paths=(
            ((2, 12), (0, 13), (1, 11), (0, 9), (1, 7), (0, 5), (1, 3), (0, 1), (2, 0), (3, 2), (2, 4), (1, 6),
             (0, 8), (2, 9), (3, 7), (4, 5), (5, 3), (6, 1), (4, 0), (2, 1), (0, 0), (1, 2), (0, 4), (2, 3),
             (1, 5), (0, 7), (2, 6), (3, 4), (4, 2), (5, 0), (3, 1), (1, 0), (0, 2), (1, 4), (3, 3), (2, 5),
             (0, 6), (1, 8), (0, 10), (1, 12)),
            ((2, 13), (0, 12), (1, 10), (2, 8), (3, 6), (4, 4), (5, 2), (6, 0), (4, 1), (2, 2), (0, 3), (1, 1),
             (3, 0), (5, 1), (4, 3), (3, 5), (2, 7), (1, 9), (0, 11), (1, 13)),
        ),
    ),
    "TR8V": dict(
        height=8, iface=(1, 14), matching="V",
        paths=(
            ((2, 14), (0, 15), (1, 13), (0, 11), (1, 9), (0, 7), (1, 5), (0, 3), (1, 1), (3, 0), (2, 2), (1, 0),
             (3, 1), (5, 0), (7, 1), (6, 3), (5, 5), (4, 7), (3, 9), (2, 11), (0, 12), (1, 14)),
            ((2, 15), (0, 14), (1, 12), (0, 10), (1, 8), (0, 6), (2, 7), (3, 5), (4, 3), (5, 1), (7, 0), (6, 2),
             (5, 4), (4, 6), (3, 8), (2, 10), (0, 9), (1, 7), (0, 5), (1, 3), (0, 1), (2, 0), (1, 2), (0, 0),
             (2, 1), (4, 2), (3, 4), (2, 6), (1, 4), (0, 2), (2, 3), (0, 4), (2, 5), (3, 3), (4, 1), (6, 0),
             (5, 2), (4, 4), (3, 6), (2, 8), (1, 10), (0, 8), (1, 6), (2, 4), (3, 2), (4, 0), (6, 1), (5, 3),
             (4, 5), (3, 7), (2, 9), (1, 11), (0, 13), (1, 15)),
        ),
    ),
    # narrow boards: the band-2H blocks and one right-edge block of band 2H+4
    # are absorbed, the interface moves up to R=2
    "TR7V_w16": dict(
        height=7, iface=(2, 10), matching="V", absorbs=1,
        paths=(
            ((3, 10), (1, 9), (0, 11), (2, 10)),
            ((3, 11), (1, 12), (0, 14), (2, 15), (1, 13), (0, 15), (2, 14), (0, 13), (1, 15), (3, 14), (2, 12),
             (1, 10), (0, 8), (1, 6), (2, 4), (3, 2), (4, 0), (6, 1), (5, 3), (4, 5), (3, 7), (2, 9), (0, 10),
             (1, 8), (2, 6), (3, 4), (4, 2), (5, 0), (3, 1), (1, 0), (0, 2), (1, 4), (0, 6), (2, 7), (3, 5),
             (4, 3), (5, 1), (3, 0), (1, 1), (0, 3), (2, 2), (4, 1), (6, 0), (5, 2), (4, 4), (3, 6), (2, 8),
             (0, 7), (1, 5), (2, 3), (0, 4), (2, 5), (3, 3), (2, 1), (0, 0), (1, 2), (2, 0), (0, 1), (1, 3),
             (0, 5), (1, 7), (0, 9), (1, 11), (2, 13), (3, 15), (1, 14), (0, 12), (2, 11)),
        ),
    ),
    "TR8V_w18": dict(
        height=8, iface=(2, 12), matching="V", absorbs=1,
        paths=(
            ((3, 12), (1, 13), (0, 11), (1, 9), (0, 7), (1, 5), (3, 6), (4, 4), (5, 2), (6, 0), (4, 1), (2, 2),
             (0, 3), (1, 1), (3, 0), (5, 1), (7, 0), (6, 2), (5, 4), (4, 6), (3, 8), (2, 10), (1, 12), (2, 14),
             (3, 16), (1, 17), (0, 15), (2, 16), (0, 17), (1, 15), (2, 17), (0, 16), (1, 14), (0, 12), (1, 10),
             (2, 8), (0, 9), (1, 7), (2, 5), (3, 3), (1, 2), (0, 0), (2, 1), (0, 2), (1, 0), (3, 1), (5, 0),
             (7, 1), (6, 3), (5, 5), (4, 7), (3, 9), (2, 11), (0, 10), (1, 8), (2, 6), (3, 4), (4, 2), (2, 3),
             (0, 4), (1, 6), (0, 8), (2, 7), (0, 6), (1, 4), (3, 5), (4, 3), (2, 4), (0, 5), (1, 3), (0, 1),
             (2, 0), (3, 2), (4, 0), (6, 1), (5, 3), (4, 5), (3, 7), (2, 9), (1, 11), (0, 13), (2, 12)),
            ((3, 13), (2, 15), (3, 17), (1, 16), (0, 14), (2, 13)),
        ),
    ),
}


def junction_region(name):
    cells = set()
    for p in JUNCTIONS[name]["paths"]:
        cells.update(p)
    return cells


# Layered boards. Every layer but the first opens by sweeping the bottom-left
# junction region with formation moves, from LAYER_START_BLOCK to the
# interface (1, 8). Every layer but the last closes by sweeping the region of
# the top-right junction it replaces (same frame as JUNCTIONS), from that
# junction's interface to LAYER_END_BLOCK. The two blocks differ by (0, 2), so
# one translation plus a unit step in a layer axis links the layers.
LAYER_START_BLOCK = (0, 0)
LAYER_START = ((1, 0), (2, 0), (-1, 2), (-2, 0), (1, 2), (-1, 0), (0, 2), (0, 2), (1, 0))
LAYER_END_BLOCK = (0, 2)
LAYER_END = {
    "TR5V": ((-1, 0), (0, -2), (0, -2), (1, 0), (1, -2), (1, -2), (-2, 0), (-1, 0), (0, 2)),
    "TR6V": ((-1, 0), (0, -2), (0, -2), (1, 0), (-1, -2), (2, 0), (1, -2), (1, -2), (-2, 0), (-2, 0),
             (1, 2), (-1, 0)),
    "TR7V": ((-1, 0), (0, -2), (0, -2), (1, 0), (1, -2), (-2, 0), (0, -2), (2, 0), (1, 0), (-1, -2),
             (2, 0), (1, -2), (-2, 0), (-2, 0), (-1, 0), (0, 2)),
    "TR8V": ((-1, 0), (0, -2), (1, -2), (-1, 0), (0, -2), (2, 0), (1, -2), (-2, 0), (-1, 0), (0, -2),
             (2, 0), (2, 0), (1, -2), (1, -2), (-2, 0), (-1, 2), (-1, 0), (0, -2), (-2, 0), (0, 2)),
}


# Odd boards. A tour of the (w-1) x h board is shifted one column right and the
# strip of columns 0..ODD_STRIP-1 is rewired window by window: a bottom window
# of ODD_BOTTOM_ROWS rows (cell (0, 0) stays empty), middle windows of four
# rows, and a top window of the remaining rows. Each entry lists the old
# edges inside the window and the new ones, which join the same boundary cells
# in the same pairs while also covering column 0. Top windows count rows down
# from the top edge.
ODD_STRIP = 5
ODD_BOTTOM_ROWS = 9
ODD_MIN_TOP = 6
ODD_BOTTOM = dict(
    old=(
        ((0, 1), (1, 3)), ((0, 1), (2, 2)), ((0, 2), (1, 4)), ((0, 2), (2, 1)), ((0, 3), (1, 1)),
        ((0, 3), (2, 4)), ((0, 4), (1, 2)), ((1, 1), (3, 2)), ((1, 2), (3, 1)), ((1, 3), (3, 2)),
        ((2, 1), (4, 2)), ((2, 2), (4, 1)), ((2, 3), (3, 1)), ((3, 3), (4, 1)), ((3, 4), (4, 2)),
        ((4, 3), (5, 1)), ((4, 4), (5, 2)), ((5, 1), (7, 2)), ((5, 2), (7, 1)), ((5, 3), (6, 1)),
        ((5, 4), (6, 2)), ((6, 1), (8, 2)), ((6, 2), (8, 1)), ((6, 3), (7, 1)), ((6, 4), (7, 2)),
        ((7, 3), (8, 1)), ((7, 4), (8, 2)),
    ),
    new=(
        ((0, 1), (2, 0)), ((0, 1), (2, 2)), ((0, 2), (1, 0)), ((0, 2), (1, 4)), ((0, 3), (1, 1)),
        ((0, 3), (2, 2)), ((0, 4), (2, 3)), ((1, 0), (3, 1)), ((1, 1), (3, 0)), ((1, 2), (2, 4)),
        ((1, 2), (3, 3)), ((1, 3), (2, 1)), ((1, 3), (3, 2)), ((2, 0), (3, 2)), ((2, 1), (4, 2)),
        ((3, 0), (5, 1)), ((3, 1), (5, 0)), ((3, 4), (4, 2)), ((4, 0), (5, 2)), ((4, 0), (6, 1)),
        ((4, 1), (5, 3)), ((4, 1), (6, 0)), ((4, 3), (6, 4)), ((4, 4), (6, 3)), ((5, 0), (7, 1)),
        ((5, 1), (7, 2)), ((5, 2), (7, 1)), ((5, 4), (7, 3)), ((6, 0), (8, 1)), ((6, 1), (8, 0)),
        ((6, 2), (7, 0)), ((6, 2), (8, 1)), ((7, 0), (8, 2)), ((7, 2), (8, 0)), ((7, 4), (8, 2)),
    ),
)
ODD_MIDDLE = dict(
    old=(
        ((0, 1), (2, 2)), ((0, 2), (2, 1)), ((0, 3), (1, 1)), ((0, 4), (1, 2)), ((1, 1), (3, 2)),
        ((1, 2), (3, 1)), ((1, 3), (2, 1)), ((1, 4), (2, 2)), ((2, 3), (3, 1)), ((2, 4), (3, 2)),
    ),
    new=(
        ((0, 0), (1, 2)), ((0, 0), (2, 1)), ((0, 1), (2, 0)), ((0, 2), (1, 0)), ((0, 3), (2, 4)),
        ((0, 4), (2, 3)), ((1, 0), (3, 1)), ((1, 1), (3, 0)), ((1, 1), (3, 2)), ((1, 2), (3, 1)),
        ((1, 3), (2, 1)), ((1, 4), (2, 2)), ((2, 0), (3, 2)), ((2, 2), (3, 0)),
    ),
)
ODD_TOPS = [
    dict(
        rows=4,
        old=(
            ((0, 1), (1, 3)), ((0, 1), (2, 2)), ((0, 2), (1, 4)), ((0, 2), (2, 1)),
            ((0, 3), (2, 4)), ((0, 4), (2, 3)), ((1, 1), (2, 3)), ((1, 1), (3, 2)),
            ((1, 2), (2, 4)), ((1, 2), (3, 1)), ((2, 1), (3, 3)), ((2, 2), (3, 4)),
        ),
        new=(
            ((0, 0), (1, 2)), ((0, 0), (2, 1)), ((0, 1), (2, 0)), ((0, 1), (2, 2)),
            ((0, 2), (1, 0)), ((0, 2), (2, 1)), ((0, 3), (2, 4)), ((0, 4), (2, 3)),
            ((1, 0), (3, 1)), ((1, 1), (2, 3)), ((1, 1), (3, 0)), ((1, 2), (2, 4)),
            ((1, 3), (3, 4)), ((1, 4), (3, 3)), ((2, 0), (3, 2)), ((2, 2), (3, 0)),
        ),
    ),
    dict(
        rows=6,
        old=(
            ((0, 1), (1, 3)), ((0, 1), (2, 2)), ((0, 2), (1, 4)), ((0, 2), (2, 1)),
            ((0, 3), (1, 1)), ((0, 3), (2, 2)), ((0, 4), (1, 2)), ((1, 1), (3, 2)),
            ((1, 2), (3, 1)), ((1, 3), (2, 1)), ((2, 3), (3, 1)), ((2, 4), (3, 2)),
            ((3, 3), (4, 1)), ((3, 4), (4, 2)), ((4, 1), (5, 3)), ((4, 2), (5, 4)),
            ((4, 3), (5, 1)), ((4, 4), (5, 2)),
        ),
        new=(
            ((0, 0), (1, 2)), ((0, 0), (2, 1)), ((0, 1), (1, 3)), ((0, 1), (2, 0)),
            ((0, 2), (1, 0)), ((0, 2), (2, 1)), ((0, 3), (1, 1)), ((0, 3), (2, 4)),
            ((0, 4), (2, 3)), ((1, 0), (3, 1)), ((1, 1), (3, 0)), ((1, 2), (2, 0)),
            ((1, 3), (3, 4)), ((1, 4), (2, 2)), ((2, 2), (3, 0)), ((3, 1), (5, 0)),
            ((3, 2), (4, 0)), ((3, 2), (4, 4)), ((3, 3), (4, 1)), ((4, 0), (5, 2)),
            ((4, 1), (5, 3)), ((4, 2), (5, 0)), ((4, 2), (5, 4)), ((4, 3), (5, 1)),
        ),
    ),
    dict(
        rows=8,
        old=(
            ((0, 1), (1, 3)), ((0, 1), (2, 2)), ((0, 2), (1, 4)), ((0, 2), (2, 1)),
            ((0, 3), (2, 4)), ((0, 4), (2, 3)), ((1, 1), (2, 3)), ((1, 1), (3, 2)),
            ((1, 2), (2, 4)), ((1, 2), (3, 1)), ((2, 1), (3, 3)), ((2, 2), (3, 4)),
            ((3, 1), (4, 3)), ((3, 2), (4, 4)), ((4, 1), (5, 3)), ((4, 1), (6, 2)),
            ((4, 2), (5, 4)), ((4, 2), (6, 1)), ((5, 1), (6, 3)), ((5, 1), (7, 2)),
            ((5, 2), (6, 4)), ((5, 2), (7, 1)), ((6, 1), (7, 3)), ((6, 2), (7, 4)),
        ),
        new=(
            ((0, 0), (1, 2)), ((0, 0), (2, 1)), ((0, 1), (2, 0)), ((0, 1), (2, 2)),
            ((0, 2), (1, 0)), ((0, 2), (2, 1)), ((0, 3), (2, 4)), ((0, 4), (2, 3)),
            ((1, 0), (3, 1)), ((1, 1), (3, 0)), ((1, 1), (3, 2)), ((1, 2), (2, 4)),
            ((1, 3), (3, 4)), ((1, 4), (3, 3)), ((2, 0), (4, 1)), ((2, 2), (3, 0)),
            ((2, 3), (4, 4)), ((3, 1), (5, 0)), ((3, 2), (4, 0)), ((4, 0), (6, 1)),
            ((4, 1), (6, 0)), ((4, 2), (6, 1)), ((4, 2), (6, 3)), ((4, 3), (5, 1)),
            ((5, 0), (6, 2)), ((5, 1), (7, 0)), ((5, 2), (6, 4)), ((5, 2), (7, 1)),
            ((5, 3), (7, 4)), ((5, 4), (7, 3)), ((6, 0), (7, 2)), ((6, 2), (7, 0)),
        ),
    ),
    dict(
        rows=6,
        old=(
            ((0, 1), (1, 3)), ((0, 1), (2, 2)), ((0, 2), (1, 4)), ((0, 2), (2, 1)),
            ((0, 3), (1, 1)), ((0, 3), (2, 2)), ((0, 4), (1, 2)), ((1, 1), (3, 2)),
            ((1, 2), (3, 1)), ((1, 3), (2, 1)), ((2, 3), (3, 1)), ((2, 4), (3, 2)),
            ((3, 3), (4, 1)), ((3, 4), (4, 2)), ((4, 1), (5, 3)), ((4, 2), (5, 4)),
            ((4, 3), (5, 1)), ((4, 4), (5, 2)),
        ),
        new=(
            ((0, 0), (1, 2)), ((0, 0), (2, 1)), ((0, 1), (1, 3)), ((0, 1), (2, 0)),
            ((0, 2), (1, 0)), ((0, 2), (2, 1)), ((0, 3), (1, 1)), ((0, 3), (2, 4)),
            ((0, 4), (2, 3)), ((1, 0), (3, 1)), ((1, 1), (3, 0)), ((1, 2), (2, 0)),
            ((1, 3), (3, 4)), ((1, 4), (2, 2)), ((2, 2), (3, 0)), ((3, 1), (5, 0)),
            ((3, 2), (4, 0)), ((3, 2), (4, 4)), ((3, 3), (4, 1)), ((4, 0), (5, 2)),
            ((4, 1), (5, 3)), ((4, 2), (5, 0)), ((4, 2), (5, 4)), ((4, 3), (5, 1)),
        ),
    ),
    dict(
        rows=6,
        old=(
            ((0, 1), (1, 3)), ((0, 1), (2, 2)), ((0, 2), (1, 4)), ((0, 2), (2, 1)),
            ((0, 3), (1, 1)), ((0, 3), (2, 4)), ((0, 4), (1, 2)), ((0, 4), (2, 3)),
            ((1, 1), (3, 2)), ((1, 2), (3, 1)), ((1, 3), (3, 4)), ((1, 4), (3, 3)),
            ((2, 1), (4, 2)), ((2, 2), (4, 1)), ((2, 3), (4, 4)), ((2, 4), (4, 3)),
            ((3, 1), (5, 2)), ((3, 2), (5, 1)), ((4, 1), (5, 3)), ((4, 2), (5, 4)),
        ),
        new=(
            ((0, 0), (1, 2)), ((0, 0), (2, 1)), ((0, 1), (1, 3)), ((0, 1), (2, 0)),
            ((0, 2), (1, 4)), ((0, 2), (2, 3)), ((0, 3), (1, 1)), ((0, 3), (2, 4)),
            ((0, 4), (1, 2)), ((0, 4), (2, 3)), ((1, 0), (2, 2)), ((1, 0), (3, 1)),
            ((1, 1), (3, 2)), ((1, 3), (3, 4)), ((1, 4), (2, 2)), ((2, 0), (4, 1)),
            ((2, 1), (4, 0)), ((2, 4), (4, 3)), ((3, 0), (4, 2)), ((3, 0), (5, 1)),
            ((3, 1), (5, 0)), ((3, 2), (4, 0)), ((3, 3), (5, 4)), ((4, 1), (5, 3)),
            ((4, 2), (5, 0)), ((4, 4), (5, 2)),
        ),
    ),
]

# ---- giraffe (1,4) pieces, 4x4 formation ----

GIRAFFE_STRIP = 8  # rows along the bottom and top edges left to heels

# heel: from the band block (8, ce) to (8, ce + 16), covering rows 0..7 of columns ce..ce+31
GIRAFFE_HEEL = (
    (-2, 0), (-1, 0), (-2, 0), (-1, 0), (-2, 0), (0, 2), (0, 2), (3, 0), (1, 0), (1, 0),
    (2, 0), (-1, 4), (-1, 0), (-1, 0), (-4, 0), (0, 2), (0, 2), (2, 0), (3, 0), (-1, 4),
    (-4, 0), (0, 4), (1, 0), (-1, 4), (0, 2), (0, 2), (4, 0), (1, 0), (1, -4), (-1, 0),
    (-1, 0), (1, -4), (1, 0), (1, 0), (1, -4),
)
# top-left corner, in the half-turned frame: from (8, w - 16) to (9, w - 4)
GIRAFFE_CORNER = (
    (-1, 0), (0, 1), (0, 3), (-3, 0), (-1, -4), (-3, 0), (0, 3), (0, 2), (0, 2), (0, 4),
    (0, 1), (1, 0), (2, 0), (1, -4), (1, 0), (1, 0), (1, 4), (2, 0),
)
GIRAFFE_BL_IFACE = (8, 4)
GIRAFFE_BL_PATHS = (
    (
        (8, 4), (9, 8), (10, 4),
    ),
    (
        (8, 5), (9, 9), (8, 13), (7, 17), (3, 16), (2, 12), (3, 8), (7, 9), (6, 13), (2, 14),
        (3, 18), (7, 19), (8, 15), (7, 11), (3, 10), (2, 6), (3, 2), (7, 3), (3, 4), (2, 0),
        (6, 1), (2, 2), (6, 3), (5, 7), (6, 11), (10, 10), (11, 6),
    ),
    (
        (8, 6), (9, 10), (5, 9), (1, 8), (0, 4), (4, 5), (0, 6), (1, 2), (5, 1), (1, 0),
        (2, 4), (3, 0), (7, 1), (6, 5), (10, 6),
    ),
    (
        (8, 7), (9, 11), (10, 7),
    ),
    (
        (9, 4), (5, 5), (9, 6),
    ),
    (
        (9, 5), (8, 1), (4, 0), (0, 1), (1, 5), (5, 6), (4, 2), (8, 3), (7, 7), (3, 6),
        (2, 10), (3, 14), (7, 13), (8, 17), (4, 16), (0, 17), (1, 13), (2, 9), (6, 10),
        (7, 14), (8, 10), (9, 14), (8, 18), (4, 19), (0, 18), (4, 17), (8, 16), (4, 15),
        (0, 16), (1, 12), (0, 8), (1, 4), (0, 0), (4, 1), (8, 0), (7, 4), (3, 5), (2, 1),
        (6, 0), (5, 4), (6, 8), (10, 9), (11, 5),
    ),
    (
        (9, 7), (8, 11), (7, 15), (8, 19), (4, 18), (0, 19), (1, 15), (0, 11), (4, 12), (5, 8),
        (6, 4), (7, 0), (3, 1), (7, 2), (3, 3), (4, 7), (5, 3), (6, 7), (5, 11), (1, 10),
        (0, 14), (1, 18), (5, 19), (6, 15), (2, 16), (6, 17), (2, 18), (6, 19), (5, 15),
        (1, 14), (5, 13), (4, 9), (0, 10), (1, 6), (0, 2), (4, 3), (8, 2), (7, 6), (6, 2),
        (2, 3), (1, 7), (0, 3), (4, 4), (5, 0), (1, 1), (5, 2), (1, 3), (2, 7), (3, 11),
        (2, 15), (3, 19), (7, 18), (8, 14), (7, 10), (6, 14), (5, 18), (1, 19), (0, 15),
        (1, 11), (0, 7), (4, 6), (0, 5), (1, 9), (2, 5), (3, 9), (2, 13), (3, 17), (4, 13),
        (5, 17), (1, 16), (0, 12), (4, 11), (8, 12), (7, 8), (3, 7), (2, 11), (6, 12), (7, 16),
        (3, 15), (2, 19), (6, 18), (5, 14), (4, 10), (0, 9), (4, 8), (3, 12), (2, 8), (6, 9),
        (10, 8), (9, 12), (8, 8), (7, 12), (3, 13), (2, 17), (6, 16), (5, 12), (9, 13), (8, 9),
        (7, 5), (11, 4),
    ),
    (
        (10, 5), (6, 6), (5, 10), (4, 14), (0, 13), (1, 17), (5, 16), (9, 15), (10, 11),
        (11, 7),
    ),
)
# top-right junction in corner coordinates (h - 1 - r, w - 1 - c); it absorbs the last
# GIRAFFE_TR_TAIL formation positions
GIRAFFE_TR_TAIL = 8
GIRAFFE_TR_PATHS = (
    (
        (3, 9), (2, 5), (1, 1), (5, 2), (1, 3), (5, 4), (4, 0), (0, 1), (4, 2), (0, 3), (1, 7),
    ),
    (
        (3, 8), (7, 7), (11, 6), (10, 2), (6, 3), (2, 2), (6, 1), (10, 0), (11, 4), (12, 0),
        (8, 1), (12, 2), (8, 3), (9, 7), (5, 6), (9, 5), (10, 1), (6, 0), (2, 1), (1, 5),
        (0, 9),
    ),
    (
        (3, 7), (2, 3), (6, 2), (10, 3), (6, 4), (5, 0), (9, 1), (8, 5), (4, 4), (3, 0),
        (2, 4), (6, 5), (10, 6), (11, 2), (7, 3), (8, 7), (9, 3), (10, 7), (11, 3), (7, 2),
        (6, 6), (10, 5), (11, 1), (7, 0), (3, 1), (4, 5), (0, 4), (1, 0), (5, 1), (9, 2),
        (8, 6), (4, 7), (0, 8),
    ),
    (
        (3, 6), (7, 5), (3, 4), (2, 0), (1, 4), (0, 0), (4, 1), (8, 0), (9, 4), (5, 5), (9, 6),
        (5, 7), (1, 8),
    ),
    (
        (2, 9), (3, 5), (7, 4), (3, 3), (2, 7),
    ),
    (
        (2, 8), (6, 7), (5, 3), (1, 2), (0, 6),
    ),
    (
        (2, 6), (3, 2), (7, 1), (11, 0), (10, 4), (9, 0), (8, 4), (12, 3), (11, 7), (7, 6),
        (11, 5), (12, 1), (8, 2), (4, 3), (0, 2), (1, 6),
    ),
    (
        (1, 9), (0, 5), (4, 6), (0, 7),
    ),
)
