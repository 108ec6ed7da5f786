import pytest

import symchain


def test_scd_and_verify():
    chains = symchain.scd("d1", 6)
    assert len(chains) == 20
    assert all(ok for _, ok, _ in symchain.verify_scd(chains))
    assert symchain.scd("d0", 1) == [["0", "1"]]


def test_disjoint_family():
    family = [symchain.scd(k, 6) for k in ("d0", "d0c", "d1", "d1c")]
    for i in range(4):
        for j in range(i + 1, 4):
            assert symchain.edge_disjoint(family[i], family[j])
    assert not symchain.edge_disjoint(family[0], family[0])


def test_lexical():
    assert symchain.lex_up(22, 9, 11, "1110001001001001100001") == "1110001001001001100101"
    assert symchain.lex_down(22, 9, 4, "1110001001001001100101") is None


def test_factor():
    assert symchain.factor_census(2, 2) == (3, [4, 4, 22])
    assert symchain.factor_census(3, 4, "product")[0] == 12
    cycles = symchain.factor_cycles(1, 1)
    assert len(cycles) == 1 and len(cycles[0]) == 6


def test_middle4():
    assert [symchain.middle4_cycle_count(n) for n in range(1, 7)] == [1, 1, 1, 4, 6, 19]
    assert symchain.rho_orbit_count(5) == symchain.trivalent_tree_count(5) == 6
    cycle = symchain.hamilton_middle4(3)
    assert len(cycle) == 112
    assert symchain.verify_middle4_cycle(3, cycle)
    assert not symchain.verify_middle4_cycle(3, cycle[:-1])


def test_necklace():
    status, lifts = symchain.necklace_search(5, 3)
    assert status == "found" and len(lifts) == 3
    assert symchain.necklace_search(5, 4)[0] == "impossible"
    assert symchain.necklace_search(11, 3, 5)[0] == "budget exceeded"


def test_errors():
    with pytest.raises(ValueError):
        symchain.scd("nosuch", 5)
    with pytest.raises(ValueError):
        symchain.edge_disjoint([], [])
