import math

import pytest

from primegraphs.arithmetic import prime_set
from primegraphs.groups import (
    Family,
    FourPrimeCase,
    GroupSpec,
    UnsupportedFamilyError,
    all_specs,
    bundled_table_names,
    canonical_key,
    character_degrees,
    classify_four_prime_psl2,
    degree_table,
    group_order,
    prime_powers,
    prime_set_by_family_rule,
    prime_set_of_group,
    suzuki_parameters,
)


def test_spec_validation():
    GroupSpec.psl2(4)
    GroupSpec.suzuki(8)
    GroupSpec.psu3(3)
    GroupSpec.alternating(8)
    GroupSpec.sporadic("J1")
    with pytest.raises(ValueError):
        GroupSpec.psl2(3)
    with pytest.raises(ValueError):
        GroupSpec.psl2(6)
    with pytest.raises(ValueError):
        GroupSpec.suzuki(16)  # even exponent
    with pytest.raises(ValueError):
        GroupSpec.psu3(2)  # solvable, order 72
    with pytest.raises(ValueError):
        GroupSpec.alternating(9)
    with pytest.raises(ValueError):
        GroupSpec.sporadic("m12")


def test_spec_parse():
    assert GroupSpec.parse("psl2", "27") == GroupSpec.psl2(27)
    assert GroupSpec.parse("sporadic", "M11") == GroupSpec.sporadic("m11")
    assert GroupSpec.parse("alt", "7") == GroupSpec.alternating(7)


def test_orders():
    assert group_order(GroupSpec.psl2(5)) == 60
    assert group_order(GroupSpec.psl2(4)) == 60
    assert group_order(GroupSpec.suzuki(8)) == 29120
    assert group_order(GroupSpec.psl3(3)) == 5616
    assert group_order(GroupSpec.psu3(3)) == 6048
    assert group_order(GroupSpec.sporadic("j1")) == 175560
    assert group_order(GroupSpec.alternating(7)) == math.factorial(7) // 2
    with pytest.raises(OverflowError):
        group_order(GroupSpec.suzuki(2**13))


def test_character_degrees_psl2():
    assert tuple(character_degrees(GroupSpec.psl2(64))) == (1, 63, 64, 65)
    assert tuple(character_degrees(GroupSpec.psl2(125))) == (1, 63, 124, 125, 126)
    # q = 17 is 1 mod 4, so the extra degree is (q+1)/2
    assert tuple(character_degrees(GroupSpec.psl2(17))) == (1, 9, 16, 17, 18)
    # q = 7 is 3 mod 4, so it is (q-1)/2
    assert tuple(character_degrees(GroupSpec.psl2(7))) == (1, 3, 6, 7, 8)


def test_character_degrees_aliases():
    # the small PSL2 members coincide with alternating groups, whose degree
    # sets the generic formula does not produce
    a5 = tuple(character_degrees(GroupSpec.alternating(5)))
    assert a5 == (1, 3, 4, 5)
    assert tuple(character_degrees(GroupSpec.psl2(4))) == a5
    assert tuple(character_degrees(GroupSpec.psl2(5))) == a5
    a6 = tuple(character_degrees(GroupSpec.alternating(6)))
    assert tuple(character_degrees(GroupSpec.psl2(9))) == a6


def test_character_degrees_sporadic():
    assert tuple(character_degrees(GroupSpec.sporadic("j1"))) == (
        1, 56, 76, 77, 120, 133, 209,
    )


def test_character_degrees_unsupported():
    for spec in (GroupSpec.suzuki(8), GroupSpec.psl3(3), GroupSpec.psu3(3)):
        with pytest.raises(UnsupportedFamilyError):
            character_degrees(spec)


def test_prime_sets():
    assert tuple(prime_set_of_group(GroupSpec.psl2(256))) == (2, 3, 5, 17, 257)
    assert tuple(prime_set_of_group(GroupSpec.suzuki(8))) == (2, 5, 7, 13)
    assert tuple(prime_set_of_group(GroupSpec.sporadic("m11"))) == (2, 3, 5, 11)


def test_family_rule_agrees_with_order():
    specs = (
        [GroupSpec.psl2(q) for q in prime_powers(4, 200)]
        + [GroupSpec.suzuki(q2) for q2 in suzuki_parameters(2**11)]
        + [GroupSpec.psl3(q) for q in prime_powers(2, 50)]
        + [GroupSpec.psu3(q) for q in prime_powers(3, 50)]
    )
    for spec in specs:
        assert (
            prime_set_by_family_rule(spec).primes
            == prime_set(group_order(spec)).primes
        ), spec


def test_rho_equals_pi_for_psl2():
    # every prime of the order divides some character degree
    for q in prime_powers(4, 10**4):
        spec = GroupSpec.psl2(q)
        rho = prime_set(math.prod(character_degrees(spec)))
        assert rho.primes == prime_set_of_group(spec).primes, q


def test_degree_table_integrity():
    for name in bundled_table_names():
        table = degree_table(name)
        assert sum(m * d * d for d, m in table.degrees_with_multiplicity) == table.order
        assert 1 in table.degree_set()


def test_table_extras():
    j1 = degree_table("j1")
    assert j1.maximal_indices == (266, 1045, 1463, 1540, 1596, 2926, 4180)
    sz8 = degree_table("sz8")
    assert sz8.maximal_indices == (65, 560, 1456, 2080)
    assert sz8.projective_factors == (40, 56, 64, 104)


def test_canonical_keys_fold_aliases():
    assert canonical_key(GroupSpec.psl2(4)) == canonical_key(GroupSpec.psl2(5))
    assert canonical_key(GroupSpec.psl2(5)) == canonical_key(GroupSpec.alternating(5))
    assert canonical_key(GroupSpec.psl2(9)) == canonical_key(GroupSpec.alternating(6))
    assert canonical_key(GroupSpec.psl3(2)) == canonical_key(GroupSpec.psl2(7))
    assert canonical_key(GroupSpec.psl2(8)) != canonical_key(GroupSpec.psl2(7))


def test_three_prime_sweep():
    def order_below(spec, bound):
        try:
            return group_order(spec) < bound
        except OverflowError:
            return False

    found = {
        canonical_key(s)
        for s in all_specs()
        if order_below(s, 10**7) and len(prime_set_of_group(s)) == 3
    }
    assert found == {"a5", "a6", "psl2_7", "psl2_8", "psl2_17", "psl3_3", "psu3_3"}
    for s in all_specs():
        if order_below(s, 10**7) and len(prime_set_of_group(s)) == 3:
            pi = prime_set_of_group(s)
            assert 2 in pi and 3 in pi


def test_all_specs_deduplicates():
    keys = [canonical_key(s) for s in all_specs(100, 2**9, 20, 20)]
    assert len(keys) == len(set(keys))
    assert "a5" in keys and "psl2_7" in keys


def test_four_prime_classification():
    assert classify_four_prime_psl2(GroupSpec.psl2(11)) is FourPrimeCase.CASE_R
    assert classify_four_prime_psl2(GroupSpec.psl2(13)) is FourPrimeCase.CASE_R
    assert classify_four_prime_psl2(GroupSpec.psl2(32)) is FourPrimeCase.CASE_MERSENNE
    assert classify_four_prime_psl2(GroupSpec.psl2(128)) is FourPrimeCase.CASE_MERSENNE
    assert classify_four_prime_psl2(GroupSpec.psl2(3**5)) is FourPrimeCase.CASE_3T
    with pytest.raises(ValueError):
        classify_four_prime_psl2(GroupSpec.psl2(9))  # only three primes
    with pytest.raises(ValueError):
        classify_four_prime_psl2(GroupSpec.suzuki(8))


def test_four_prime_none_case_exists():
    residue = [
        q
        for q in prime_powers(4, 3000)
        if len(prime_set_of_group(GroupSpec.psl2(q))) == 4
        and classify_four_prime_psl2(GroupSpec.psl2(q)) is FourPrimeCase.NONE
    ]
    assert residue  # e.g. q = 25
    assert 25 in residue
