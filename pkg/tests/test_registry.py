import sglib  # noqa: F401
from sglib.checks import ClosedFormOracle, TuenterAperyIdentity
from sglib.registry import CheckRegistry

REGISTERED = {
    "tuenter_apery_identity",
    "apery_set_equalities",
    "hilbert_series",
    "apery_invariants",
    "unique_representation",
    "rho_permutation",
    "closed_form_oracle",
    "wang_wang",
}


def test_checks_auto_registered():
    registry = CheckRegistry.list()
    assert REGISTERED <= set(registry)
    assert registry["closed_form_oracle"] is ClosedFormOracle
    assert CheckRegistry.get("tuenter_apery_identity") is TuenterAperyIdentity


def test_find_by_category():
    sylvester = CheckRegistry.find_by_category("sylvester")
    assert set(sylvester) == {"closed_form_oracle", "wang_wang"}
    assert CheckRegistry.find_by_category("no-such-category") == {}


def test_registered_names_match_meta():
    for name, klass in CheckRegistry.list().items():
        assert klass.meta.name == name
        assert klass().meta is klass.meta
