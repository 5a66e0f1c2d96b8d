import pytest

from galcensus.groups import (
    PermGroup,
    catalog_group,
    coset_representatives,
    element_index,
    is_subgroup_of_conjugate,
    malle_a,
    _projective_line_group,
)
from galcensus.perms import Permutation, from_cycles, identity

from oracles import all_block_systems_bruteforce

# (order, even?, primitive?, ind) — the published record-group facts
CATALOG_FACTS = {
    "6T12": (60, True, True, 2),
    "6T14": (120, False, True, 2),
    "7T5": (168, True, True, 2),
    "8T48": (1344, True, True, 2),
}


@pytest.mark.parametrize("name", sorted(CATALOG_FACTS))
def test_catalog_facts(name):
    order, even, primitive, ind = CATALOG_FACTS[name]
    g = catalog_group(name)
    assert g.order == order
    assert g.parity_even == even
    assert g.is_transitive()
    assert g.is_primitive() == primitive
    assert g.group_index() == ind
    assert str(malle_a(g)) == "1/2"


def test_simple_closure():
    g = PermGroup((from_cycles(2, [(0, 1)]),))
    assert g.order == 2


def test_symmetric_and_alternating_orders():
    for n in range(2, 8):
        assert catalog_group("S", n).order == [1, 1, 2, 6, 24, 120, 720, 5040][n]
    assert catalog_group("A", 6).order == 360
    assert catalog_group("A", 5).order == 60


def test_ind_of_symmetric_groups():
    for n in range(2, 9):
        assert catalog_group("S", n).group_index() == 1


def test_element_index():
    assert element_index(identity(6)) == 0
    assert element_index(from_cycles(5, [(0, 1)])) == 1
    assert element_index(from_cycles(6, [tuple(range(6))])) == 5


def test_trivial_group_index_error():
    with pytest.raises(ValueError):
        PermGroup((), degree=3).group_index()


def test_transitivity():
    assert not PermGroup((from_cycles(3, [(0, 1)]),)).is_transitive()
    assert catalog_group("S", 6).is_transitive()
    assert catalog_group("8T48").is_transitive()


def test_c4_blocks():
    c4 = catalog_group("C", 4)
    systems = c4.block_systems()
    assert len(systems) == 1
    assert systems[0] == (frozenset({0, 2}), frozenset({1, 3}))
    assert not c4.is_primitive()


def test_s6_primitive():
    assert catalog_group("S", 6).is_primitive()


@pytest.mark.parametrize("name,degree", [("C", 4), ("C", 6), ("D", 6), ("C", 8), ("D", 4)])
def test_blocks_against_bruteforce(name, degree):
    g = catalog_group(name, degree)
    if degree <= 6:
        assert set(g.block_systems()) == all_block_systems_bruteforce(g)


def test_regular_elementary_abelian_blocks():
    # C2 x C2 x C2 acting on itself: every subgroup gives a block system, and
    # the size-4 ones are not minimal for any pair, exercising the join closure
    gens = (
        Permutation([1, 0, 3, 2, 5, 4, 7, 6]),
        Permutation([2, 3, 0, 1, 6, 7, 4, 5]),
        Permutation([4, 5, 6, 7, 0, 1, 2, 3]),
    )
    g = PermGroup(gens)
    assert g.order == 8
    systems = g.block_systems()
    sizes = sorted(len(s[0]) for s in systems)
    assert sizes == [2, 2, 2, 2, 2, 2, 2, 4, 4, 4, 4, 4, 4, 4]


def test_block_systems_need_transitive():
    with pytest.raises(ValueError):
        PermGroup((from_cycles(4, [(0, 1)]),)).block_systems()


def test_c6_d6_block_sizes():
    for name in ("C", "D"):
        sizes = sorted(len(s[0]) for s in catalog_group(name, 6).block_systems())
        assert sizes == [2, 3]


def test_coset_representatives():
    s6 = catalog_group("S", 6)
    assert coset_representatives(s6) == [identity(6)]
    a6 = catalog_group("A", 6)
    reps = coset_representatives(a6)
    assert len(reps) == 2
    g14 = catalog_group("6T14")
    reps = coset_representatives(g14)
    assert len(reps) == 6
    # pairwise non-equivalent: rep_i^-1 rep_j in G iff i == j
    for i in range(len(reps)):
        for j in range(len(reps)):
            inside = (reps[i].inverse() * reps[j]) in g14.elements
            assert inside == (i == j)
    # lexicographically least element of each coset
    for rep in reps:
        assert rep == min(rep * g for g in g14.elements)


def test_conjugacy_relations():
    g12, g14 = catalog_group("6T12"), catalog_group("6T14")
    assert is_subgroup_of_conjugate(g12, g14)
    assert not is_subgroup_of_conjugate(catalog_group("S", 6), g14)
    assert is_subgroup_of_conjugate(catalog_group("7T5"), catalog_group("7T5"))
    with pytest.raises(ValueError):
        is_subgroup_of_conjugate(catalog_group("S", 5), g14)


def test_natural_projective_actions_match_catalog():
    nat_pgl = PermGroup.from_elements(_projective_line_group(True), 6)
    nat_psl = PermGroup.from_elements(_projective_line_group(False), 6)
    assert nat_pgl.order == 120 and nat_psl.order == 60
    assert is_subgroup_of_conjugate(nat_pgl, catalog_group("6T14"))
    assert is_subgroup_of_conjugate(catalog_group("6T14"), nat_pgl)
    assert is_subgroup_of_conjugate(nat_psl, catalog_group("6T12"))


def test_group_index_conjugation_invariant():
    g = catalog_group("6T14")
    conj = from_cycles(6, [(0, 3, 1)])
    inv = conj.inverse()
    moved = PermGroup.from_elements(
        frozenset(conj * p * inv for p in g.elements), 6
    )
    assert moved.group_index() == g.group_index()


def test_cycle_type_sets():
    c3 = catalog_group("C", 3)
    assert c3.cycle_type_set() == {(1, 1, 1), (3,)}
    s3 = catalog_group("S", 3)
    assert s3.cycle_type_set() == {(1, 1, 1), (2, 1), (3,)}
    g14 = catalog_group("6T14")
    # the full enumeration of the 120 elements excludes the 3+fixed types
    assert (3, 1, 1, 1) not in g14.cycle_type_set()
    assert (2, 1, 1, 1, 1) not in g14.cycle_type_set()
    assert (6,) in g14.cycle_type_set()
    # block size divides the degree for every system of a transitive group
    for name, deg in (("C", 6), ("D", 6), ("C", 8)):
        g = catalog_group(name, deg)
        for system in g.block_systems():
            assert deg % len(system[0]) == 0


def test_catalog_errors():
    with pytest.raises(ValueError):
        catalog_group("6T14", 7)
    with pytest.raises(ValueError):
        catalog_group("nonsense", 5)
    with pytest.raises(ValueError):
        catalog_group("C")
