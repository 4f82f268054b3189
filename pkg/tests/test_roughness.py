import pytest

from roughset import (
    PARTITION_MEASURES,
    InvalidMeasureError,
    PartitionMeasureSpec,
    RoughnessMeasureSpec,
    Universe,
    check_propositions,
    discrete_partition,
    named_measures,
    strong_pawlak,
    trivial_partition,
    verify_partition_measure,
    verify_roughness_axioms,
    verify_weak_roughness_axioms,
)
from roughset.roughness import STRONG_PAWLAK_NAMES

MEASURES = named_measures()

# rounded to three decimals in the worked example
EXAMPLE4 = {
    "beta_L": (0.144, 0.208),
    "beta_E": (0.138, 0.233),
    "beta_Eprime": (0.055, 0.126),
    "beta_CG": (0.032, 0.088),
}


def test_catalog_names():
    assert list(MEASURES) == ["beta_P", "indicator", "beta_X", "beta_L", "beta_E", "beta_Eprime", "beta_CG"]


@pytest.mark.parametrize("name", list(EXAMPLE4))
def test_example4_values(example1, name):
    pi, sigma, a = example1
    b = MEASURES[name]
    assert b(pi, a) == pytest.approx(EXAMPLE4[name][0], abs=5e-4)
    assert b(sigma, a) == pytest.approx(EXAMPLE4[name][1], abs=5e-4)


def test_beta_x_values_and_ordering(example1):
    pi, sigma, a = example1
    b = MEASURES["beta_X"]
    # frozen from the incidence-matrix construction; differs from the 0.102 / 0.219 quoted alongside the others
    assert b(pi, a) == pytest.approx(0.4 * 19.419011889 / 46.438561898, abs=1e-9)
    assert b(sigma, a) == pytest.approx(0.4 * 30.928786893 / 46.438561898, abs=1e-9)
    assert b(pi, a) < b(sigma, a)


def test_granularity_sensitivity(example1):
    pi, sigma, a = example1
    assert MEASURES["beta_P"](pi, a) == MEASURES["beta_P"](sigma, a) == pytest.approx(0.4)
    for name in STRONG_PAWLAK_NAMES:
        assert MEASURES[name](pi, a) < MEASURES[name](sigma, a)


def test_discrete_partition_gives_zero(u5):
    d = discrete_partition(u5)
    for name in STRONG_PAWLAK_NAMES:
        assert all(MEASURES[name](d, s) == 0 for s in u5.subsets())


def test_indicator(example1, u5):
    pi, _, a = example1
    ind = MEASURES["indicator"]
    assert ind(pi, u5.subset(["a2", "a3"])) == 0
    assert ind(pi, a) == 1


def test_zero_normaliser_rejected():
    b = strong_pawlak(PartitionMeasureSpec("zero", lambda p: 0.0))
    u = Universe.of_size(3)
    with pytest.raises(InvalidMeasureError):
        b(trivial_partition(u), u.subset(["1"]))


@pytest.mark.parametrize("name", list(MEASURES))
@pytest.mark.parametrize("n", [3, 4])
def test_definition2_and_3(name, n):
    u = Universe.of_size(n)
    assert verify_roughness_axioms(MEASURES[name], u).passed
    assert verify_weak_roughness_axioms(MEASURES[name], u).passed


def test_beta_l_weak_n5():
    assert verify_weak_roughness_axioms(MEASURES["beta_L"], Universe.of_size(5)).passed


@pytest.mark.parametrize("name", STRONG_PAWLAK_NAMES)
def test_propositions_n4(name):
    report = check_propositions(MEASURES[name], Universe.of_size(4))
    assert report.passed, [a.to_dict() for a in report.axioms if not a.passed]


@pytest.mark.parametrize("name", list(PARTITION_MEASURES))
@pytest.mark.parametrize("n", [3, 4])
def test_theorem_meta_property(name, n):
    u = Universe.of_size(n)
    h = PARTITION_MEASURES[name]
    assert verify_partition_measure(h, u).passed
    assert verify_roughness_axioms(strong_pawlak(h), u).passed


def test_beta_x_endpoints():
    u = Universe.of_size(5)
    b = MEASURES["beta_X"]
    t, d = trivial_partition(u), discrete_partition(u)
    for s in u.subsets():
        assert b(d, s) == 0
        if s.mask == u.full_mask or s.mask == 0:
            assert b(t, s) == 0
        else:
            assert b(t, s) == 1


def test_proposition8_instance(example1, u5):
    pi, _, a = example1
    bset = u5.subset(["a1", "a2", "a3", "a5"])
    b = MEASURES["beta_L"]
    assert b(pi, a & bset) == 0
    assert b(pi, a & bset) <= min(b(pi, a), b(pi, bset))


def test_pawlak_and_indicator_are_not_strong_pawlak():
    u = Universe.of_size(4)
    for name in ("beta_P", "indicator"):
        report = check_propositions(MEASURES[name], u)
        assert not report["P7"].passed
        assert not report["C3.3"].passed


def constant_zero():
    return RoughnessMeasureSpec("zero", lambda p, a: 0.0)


def test_constant_zero_fails():
    u = Universe.of_size(3)
    strong = verify_roughness_axioms(constant_zero(), u)
    assert not strong["D2.1"].passed and strong["D2.1"].counterexamples
    weak = verify_weak_roughness_axioms(constant_zero(), u)
    assert not weak["D3.4"].passed and weak["D3.4"].counterexamples


def test_label_dependent_roughness_fails_invariance():
    def skew(p, a):
        base = MEASURES["beta_L"](p, a)
        return base * (0.9 if a.mask & 1 else 1.0)

    report = verify_roughness_axioms(RoughnessMeasureSpec("skew", skew), Universe.of_size(3))
    assert not report["D2.3"].passed


def test_decrease_under_coarsening_fails_both():
    def finer_is_rougher(p, a):
        return MEASURES["beta_P"](p, a) * len(p) / p.n

    u = Universe.of_size(4)
    b = RoughnessMeasureSpec("finer-is-rougher", finer_is_rougher)
    assert verify_roughness_axioms(b, u)["D2.1"].passed
    assert not verify_roughness_axioms(b, u)["D2.2"].passed
    assert not verify_weak_roughness_axioms(b, u)["D3.2"].passed


def test_counterexamples_truncated_but_counted():
    report = verify_roughness_axioms(constant_zero(), Universe.of_size(5))
    d21 = report["D2.1"]
    assert len(d21.counterexamples) == 32 < d21.violations


def test_epsilon_override(monkeypatch):
    monkeypatch.setenv("ROUGHSET_EPSILON", "0.5")
    report = verify_roughness_axioms(MEASURES["beta_CG"], Universe.of_size(4))
    # with a huge tolerance small values count as zero on inexact sets
    assert not report["D2.1"].passed


def test_report_schema():
    d = verify_roughness_axioms(MEASURES["beta_L"], Universe.of_size(3)).to_dict()
    assert set(d) >= {"measure", "n", "axioms", "elapsed_ms"}
    assert [a["id"] for a in d["axioms"]] == ["range", "D2.1", "D2.2", "D2.3"]
