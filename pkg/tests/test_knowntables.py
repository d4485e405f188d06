import math

import pytest

from src.errors import InputError
from src.invariant_table import MOD, MOD_DUAL, T_SIGMA, T_TAU, consistency_report
from src.knowntables import CaseKind, KnownCase, citation, known_invariants, known_table
from src.subgroups import contains, intersect

GEN = "pi/log(q)*Z"
INNER_FULL = {"T_sigmaAInn": "R", "T_sigmaInn": "R", "T_tauAInn": "R", "T_tauInn": "R"}

GOLDEN = {
    "eq2": (
        {"Mod": "R", "Mod_dual": GEN, "T_sigma": GEN, "T_sigmaAInn": "R", "T_sigmaInn": "R",
         "T_tau": GEN, "T_tauAInn": GEN, "T_tauInn": GEN},
        {"Mod": GEN, "Mod_dual": "R", "T_sigma": GEN, "T_tau": GEN, **INNER_FULL},
    ),
    "azb1": (
        {"Mod": "{0}", "Mod_dual": "{0}", "T_sigma": "{0}", "T_tau": "{0}", **INNER_FULL},
        {"Mod": "{0}", "Mod_dual": "{0}", "T_sigma": "{0}", "T_tau": "{0}", **INNER_FULL},
    ),
    "azb2": (
        {"Mod": GEN, "Mod_dual": GEN, "T_sigma": GEN, "T_tau": GEN, **INNER_FULL},
        {"Mod": GEN, "Mod_dual": GEN, "T_sigma": GEN, "T_tau": GEN, **INNER_FULL},
    ),
    "azb3": (
        {"Mod": "{0}", "Mod_dual": "{0}", "T_sigma": "{0}", "T_tau": "{0}", **INNER_FULL},
        {"Mod": "{0}", "Mod_dual": "{0}", "T_sigma": "{0}", "T_tau": "{0}", **INNER_FULL},
    ),
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_known_cases_match_golden_tables(name: str) -> None:
    g_table, dual_table = known_invariants(KnownCase.parse(name, q=0.5))
    expected_g, expected_dual = GOLDEN[name]
    assert g_table.symbolic() == expected_g
    assert dual_table.symbolic() == expected_dual


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_known_cases_satisfy_modular_intersection(name: str) -> None:
    for table in known_invariants(KnownCase.parse(name, q=0.3)):
        rebuilt = intersect(table[T_TAU], table[MOD_DUAL])
        assert rebuilt.canonical() == table[T_SIGMA].canonical()
        assert all(v is True for v in consistency_report(table).values())


def test_eq2_dual_modular_element() -> None:
    g_table, dual_table = known_invariants(KnownCase.parse("eq2", q=0.5))
    assert g_table[MOD_DUAL].generator == pytest.approx(math.pi / math.log(2))
    assert dual_table[MOD].generator == pytest.approx(math.pi / math.log(2))
    assert g_table[MOD].is_full


def test_azb_real_half_scaling_by_sampling() -> None:
    g_table, _ = known_invariants(KnownCase.parse("azb2", q=0.5))
    both = intersect(g_table[MOD], g_table[MOD_DUAL])
    half_tau = g_table[T_TAU].generator / 2
    for k in range(1, 101):
        t = k * both.generator
        assert contains(g_table[MOD], t, 1e-9 * k)
        assert abs(t / half_tau - round(t / half_tau)) < 1e-9


def test_azb_root_of_unity_tau_is_zero() -> None:
    g_table, _ = known_invariants(KnownCase.parse("azb1", N=8))
    assert g_table[T_TAU].is_zero


def test_combined_table_has_both_sides() -> None:
    table = known_table(KnownCase.parse("eq2", q=0.5))
    assert "T_tau_dual" in table
    assert table.name == "E_q(2)"
    assert set(table.dual().dual().entries) == set(table.entries)


def test_parse_defaults_and_citations() -> None:
    case = KnownCase.parse(" AZB1 ")
    assert case.which is CaseKind.AZB_ROOT_OF_UNITY
    assert case.N == 6
    assert "Woronowicz" in citation(case)
    assert "Baaj" in citation(KnownCase.parse("eq2", q=0.5))


@pytest.mark.parametrize(
    "name, q, N",
    [
        ("eq2", None, None),
        ("eq2", 1.0, None),
        ("azb2", 0.0, None),
        ("azb1", None, 5),
        ("azb1", None, 4),
        ("azb3", None, 3),
        ("azb3", None, 0),
        ("sl2", 0.5, None),
    ],
)
def test_known_case_validation(name: str, q, N) -> None:
    with pytest.raises(InputError):
        KnownCase.parse(name, q=q, N=N)
