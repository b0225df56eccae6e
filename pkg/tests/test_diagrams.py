from itertools import combinations, permutations as iter_permutations

import pytest

from rankcalc.diagrams import (
    _bruteforce_from_filling,
    complement_rotate,
    degeneration_check,
    diagram,
    diagram_of_permutation,
    diagram_text,
    james_peel_move,
    parse_diagram,
    product_diagram,
    specht_bruteforce,
    specht_dim,
    specht_schur,
    staircase_pattern,
)
from rankcalc.errors import (
    NegativeMultiplicity,
    ParseError,
    ShapeTooLarge,
    TooLarge,
    UnsupportedDiagram,
)
from rankcalc.partitions import RectangleContext, all_partitions, syt_count
from rankcalc.perms import stanley
from rankcalc.symfunc import SchurExpansion, schur_product


def s(*parts):
    return SchurExpansion.basis(tuple(parts))


def box_diagrams(rows, cols, max_size):
    cells = [(r, c) for r in range(1, rows + 1) for c in range(1, cols + 1)]
    for size in range(max_size + 1):
        for chosen in combinations(cells, size):
            yield diagram(chosen)


def test_diagram_validation():
    with pytest.raises(ValueError):
        diagram([(0, 1)])
    with pytest.raises(ValueError):
        diagram([(3, 1)], RectangleContext(2, 2))
    d = diagram([(1, 2), (2, 1)], RectangleContext(2, 2))
    assert d.size() == 2


def test_complement_rotate():
    full = complement_rotate(diagram([]), RectangleContext(2, 2))
    assert full.cells == frozenset({(1, 1), (1, 2), (2, 1), (2, 2)})
    box = RectangleContext(3, 3)
    for d in box_diagrams(3, 3, 4):
        assert complement_rotate(complement_rotate(d, box), box).cells == d.cells
    with pytest.raises(ShapeTooLarge):
        complement_rotate(diagram([(3, 3)]), RectangleContext(2, 2))


def test_diagram_of_permutation():
    assert diagram_of_permutation((2, 4, 1, 5, 3)).cells == frozenset(
        {(1, 1), (2, 1), (2, 3), (4, 3)}
    )
    assert diagram_of_permutation((1, 2, 3)).cells == frozenset()
    assert diagram_of_permutation((2, 1, 4, 3, 6, 5, 8, 7)).cells == frozenset(
        {(1, 1), (3, 3), (5, 5), (7, 7)}
    )


def test_staircase_pattern():
    d = staircase_pattern((2, 4, 1, 5, 3))
    assert d.row(1) == frozenset({2, 3, 4, 5, 6})
    assert staircase_pattern((1,)).cells == frozenset({(1, 1), (1, 2)})
    for n in (2, 3, 4):
        for w in iter_permutations(range(1, n + 1)):
            pattern = staircase_pattern(w)
            for i in range(1, n + 1):
                assert len(pattern.row(i)) == i + n - w[i - 1] + 1


def test_james_peel_move_matrix_example():
    before = diagram([(1, 1), (3, 1), (2, 2), (3, 2)])
    after = james_peel_move(before, 1, 2)
    assert after.cells == frozenset({(1, 2), (2, 2), (3, 1), (3, 2)})
    assert james_peel_move(diagram([]), 1, 2).cells == frozenset()
    with pytest.raises(ValueError):
        james_peel_move(before, 2, 2)


def test_james_peel_idempotent_on_3x3():
    for d in box_diagrams(3, 3, 9):
        for i in range(1, 4):
            for j in range(1, 4):
                if i == j:
                    continue
                once = james_peel_move(d, i, j)
                assert james_peel_move(once, i, j).cells == once.cells


def test_degeneration_check():
    assert degeneration_check((2, 4, 1, 5, 3))
    assert degeneration_check((1,))
    for n in (2, 3, 4):
        for w in iter_permutations(range(1, n + 1)):
            assert degeneration_check(w)


def test_product_diagram():
    d = diagram([(1, 1), (2, 2)])
    assert product_diagram(diagram([]), RectangleContext(0, 0), d).cells == d.cells
    assert product_diagram(
        diagram([(1, 1)]), RectangleContext(1, 1), diagram([(1, 1)])
    ).cells == frozenset({(1, 1), (2, 2)})
    with pytest.raises(ShapeTooLarge):
        product_diagram(diagram([(2, 1)]), RectangleContext(1, 1), diagram([]))


def test_specht_schur_diagonal_is_regular_representation():
    diag = diagram([(1, 1), (2, 2), (3, 3), (4, 4)])
    expected = SchurExpansion({lam: syt_count(lam) for lam in all_partitions(4)})
    assert specht_schur(diag) == expected
    # the same cells as a permutation diagram, in a bigger grid
    w = (2, 1, 4, 3, 6, 5, 8, 7)
    spread = diagram_of_permutation(w)
    assert specht_schur(spread) == expected
    assert specht_schur(spread, ("perm", w)) == expected
    assert stanley(w) == expected


def test_specht_schur_families():
    assert specht_schur(diagram([(1, 1), (1, 2), (1, 3)])) == s(3)
    assert specht_schur(diagram([(1, 2), (2, 1), (2, 2)])) == s(2, 1)
    assert specht_schur(diagram([]), None) == SchurExpansion.one()
    # explicit hints
    assert specht_schur(diagram([(1, 2), (2, 1), (2, 2)]), "skew") == s(2, 1)
    split = diagram([(1, 1), (2, 2), (2, 3)])
    assert specht_schur(split, "product") == schur_product(s(1), s(2))
    with pytest.raises(UnsupportedDiagram):
        specht_schur(diagram([(1, 1), (1, 3), (2, 2)]))
    with pytest.raises(UnsupportedDiagram):
        specht_schur(diagram([(1, 1)]), "dual")  # needs a box
    with pytest.raises(UnsupportedDiagram):
        specht_schur(diagram([(1, 1)]), ("perm", (1, 2)))
    with pytest.raises(UnsupportedDiagram):
        specht_schur(diagram([(1, 1)]), "nonsense")


def test_specht_schur_dual_family():
    box = RectangleContext(4, 4)
    diag = diagram([(1, 1), (2, 2), (3, 3), (4, 4)], box)
    dual = complement_rotate(diag, box)
    expansion = specht_schur(dual, "dual")
    assert expansion.terms() == {
        (3, 3, 3, 3): 1,
        (4, 3, 3, 2): 3,
        (4, 4, 2, 2): 2,
        (4, 4, 3, 1): 3,
        (4, 4, 4): 1,
    }
    assert specht_dim(expansion) == 24024


def test_specht_schur_rejects_near_misses():
    # a gap over an occupied column breaks the interval condition
    with pytest.raises(UnsupportedDiagram):
        specht_schur(diagram([(1, 1), (1, 3), (2, 2)]), "skew")
    # interval rows whose spans cannot be ordered with both endpoints
    # weakly decreasing: {2} over {1,2,3}
    with pytest.raises(UnsupportedDiagram):
        specht_schur(diagram([(1, 2), (2, 1), (2, 2), (2, 3)]), "skew")
    # a gap over an empty column is just a deleted column, so this one is
    # recognized, and the row sort plus compression must match the oracle
    gapped = diagram([(1, 2), (1, 4), (2, 1), (2, 2)])
    assert specht_schur(gapped) == specht_bruteforce(gapped)


def test_specht_schur_zigzag_after_row_sort():
    # rows {1}, {1,2}, {2} sort into the skew shape (2,2,1)/(1)
    zigzag = diagram([(1, 1), (2, 1), (2, 2), (3, 2)])
    assert specht_schur(zigzag) == specht_bruteforce(zigzag)


def test_product_multiplicativity_cross_check():
    d1 = diagram([(1, 1), (1, 2)])
    d2 = diagram([(1, 1), (2, 1)])
    combined = product_diagram(d1, RectangleContext(1, 2), d2)
    assert specht_schur(combined) == schur_product(
        specht_schur(d1), specht_schur(d2)
    )


def test_specht_dim():
    assert specht_dim(s(1)) == 1
    diag = diagram([(1, 1), (2, 2), (3, 3), (4, 4)])
    assert specht_dim(specht_schur(diag)) == 24
    with pytest.raises(NegativeMultiplicity):
        specht_dim(s(2) - s(1, 1))


def test_specht_bruteforce_small_shapes():
    assert specht_bruteforce(diagram([])) == SchurExpansion.one()
    assert specht_bruteforce(diagram([(1, 1), (1, 2), (1, 3)])) == s(3)
    assert specht_bruteforce(diagram([(1, 1), (2, 1), (3, 1)])) == s(1, 1, 1)
    assert specht_bruteforce(diagram([(1, 1), (2, 2), (3, 3)])) == (
        s(1, 1, 1) + 2 * s(2, 1) + s(3)
    )
    assert specht_bruteforce(diagram([(1, 2), (2, 1), (2, 2)])) == s(2, 1)
    with pytest.raises(TooLarge):
        specht_bruteforce(diagram([(1, c) for c in range(1, 8)]))


def test_specht_bruteforce_agrees_with_rules_in_3x3():
    for d in box_diagrams(3, 3, 4):
        try:
            ruled = specht_schur(d)
        except UnsupportedDiagram:
            continue
        assert specht_bruteforce(d) == ruled, sorted(d.cells)


def test_specht_bruteforce_agrees_with_rules_in_wide_boxes():
    # aspect ratios the 3x3 sweep cannot see
    for rows, cols in ((2, 4), (4, 2)):
        for d in box_diagrams(rows, cols, 5):
            try:
                ruled = specht_schur(d)
            except UnsupportedDiagram:
                continue
            assert specht_bruteforce(d) == ruled, sorted(d.cells)


def test_specht_bruteforce_permutation_diagrams():
    for n in (2, 3, 4):
        for w in iter_permutations(range(1, n + 1)):
            d = diagram_of_permutation(w)
            if d.size() > 5:
                continue
            assert specht_bruteforce(d) == stanley(w), w


def test_specht_bruteforce_six_cells():
    # the documented bound is six cells; exercise it on three shapes
    staircase = diagram(
        [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]
    )
    assert specht_bruteforce(staircase) == s(3, 2, 1)
    zigzag = diagram([(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3)])
    assert specht_bruteforce(zigzag) == specht_schur(zigzag)
    diag6 = diagram([(i, i) for i in range(1, 7)])
    expected = SchurExpansion({lam: syt_count(lam) for lam in all_partitions(6)})
    assert specht_bruteforce(diag6) == expected
    assert specht_schur(diag6) == expected


def test_specht_bruteforce_filling_independence():
    cells = [(1, 1), (1, 2), (2, 1), (3, 2)]
    d = diagram(cells)
    row_reading = {cell: i for i, cell in enumerate(sorted(d.cells))}
    column_reading = {
        cell: i
        for i, cell in enumerate(sorted(d.cells, key=lambda rc: (rc[1], rc[0])))
    }
    assert _bruteforce_from_filling(d, row_reading) == _bruteforce_from_filling(
        d, column_reading
    )


def test_specht_bruteforce_row_column_permutation_invariance():
    base = diagram([(1, 1), (1, 2), (2, 2), (3, 1)])
    reference = specht_bruteforce(base)
    for rows in iter_permutations((1, 2, 3)):
        for cols in iter_permutations((1, 2)):
            moved = diagram(
                (rows[r - 1], cols[c - 1]) for r, c in base.cells
            )
            assert specht_bruteforce(moved) == reference


def test_diagram_text():
    d = diagram([(1, 1), (2, 2)], RectangleContext(4, 4))
    assert diagram_text(d) == "(1,1),(2,2);box=4x4"
    assert parse_diagram("(1,1),(2,2);box=4x4") == d
    assert parse_diagram("(1,1),(2,2)") == diagram([(1, 1), (2, 2)])
    with pytest.raises(ParseError):
        parse_diagram("(1,1),(2,2);box=4")
    with pytest.raises(ParseError):
        parse_diagram("nonsense")
    with pytest.raises(ParseError):
        parse_diagram("(0,1)")
