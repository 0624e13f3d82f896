import json
from fractions import Fraction

import pytest

from mgn_divisors.certificates import (
    CertificateError,
    InfeasibleCertificateError,
    NegativeCoefficientError,
    UnderdeterminedCertificateError,
    canonical_class,
    catalog_dump,
    catalog_get,
    catalog_load,
    catalog_names,
    perturbation_sound,
    psi_sum_class,
    solve_certificate,
)
from mgn_divisors.picard import Coefficient, DivisorClass, Space, UNKNOWN
from mgn_divisors.presets import certificate_components, certify


class TestCanonicalClass:
    def test_small_space(self):
        k = canonical_class(5, 2)
        assert k.lam == Coefficient.exact(13)
        assert all(p == Coefficient.exact(1) for p in k.psi)
        assert k.delta_irr == Coefficient.exact(-2)
        assert k.boundary_coefficient(1, {1}) == Coefficient.exact(-3)
        assert k.boundary_coefficient(2, set()) == Coefficient.exact(-2)
        assert k.boundary_coefficient(0, {1, 2}) == Coefficient.exact(-2)

    def test_pre_canonical_index_resolves(self):
        k = canonical_class(5, 2)
        # delta_{4:{1,2}} mirrors to delta_{1:{}}
        assert k.boundary_coefficient(4, {1, 2}) == Coefficient.exact(-3)

    def test_unmarked_rejected(self):
        with pytest.raises(ValueError):
            canonical_class(5, 0)


class TestCatalog:
    def test_builtin_names(self):
        assert catalog_names() == ["BN17", "BN5_3", "D12", "F12_10", "Z16"]

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            catalog_get("NOPE")

    def test_bn5_values(self):
        cls = catalog_get("BN5_3").cls
        assert cls.lam == Coefficient.exact(8)
        assert cls.delta == (Coefficient.exact(-1), Coefficient.exact(-4),
                             Coefficient.exact(-6))

    def test_unpublished_tails_are_unknown(self):
        z16 = catalog_get("Z16").cls
        assert z16.lam == Coefficient.exact(407)
        assert z16.delta[0] == Coefficient.exact(-61)
        assert all(c == UNKNOWN for c in z16.delta[1:])

    def test_dump_load_round_trip(self, tmp_path):
        path = tmp_path / "catalog.json"
        path.write_text(json.dumps(catalog_dump({"BN5_3": catalog_get("BN5_3")})))
        cat = catalog_load(path)
        assert cat["BN5_3"].cls == catalog_get("BN5_3").cls
        assert "Z16" in cat  # built-ins are kept

    def test_load_override(self, tmp_path):
        doc = {"entries": [{
            "name": "BN17",
            "kind": "marked",
            "class": {
                "space": {"g": 17, "n": 8},
                "lambda": {"exact": "21"},
                "delta_irr": {"exact": "-3"},
            },
        }]}
        path = tmp_path / "catalog.json"
        path.write_text(json.dumps(doc))
        cat = catalog_load(path)
        assert cat["BN17"].cls.lam == Coefficient.exact(21)

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "catalog.json"
        path.write_text(json.dumps({"entries": [{"name": "X"}]}))
        with pytest.raises(Exception):
            catalog_load(path)


EXPECTED = {
    (16, 8): (Fraction(13, 272), (Fraction(7, 272), Fraction(1, 34))),
    (17, 8): (Fraction(1, 20), (Fraction(1, 20), Fraction(3, 5))),
    (12, 10): (Fraction(59, 4415), (Fraction(13, 13245), Fraction(484, 4415))),
}


class TestSolveCertificate:
    @pytest.mark.parametrize("g,n", sorted(EXPECTED))
    def test_supported_spaces(self, g, n):
        a_want, cs_want = EXPECTED[(g, n)]
        cert = certify(g, n)
        assert cert.a == a_want
        assert tuple(c for _, c in cert.components) == cs_want

    @pytest.mark.parametrize("g,n", sorted(EXPECTED))
    def test_residual_interior_vanishes(self, g, n):
        res = certify(g, n).residual
        assert res.lam.is_zero
        assert res.delta_irr.is_zero
        assert all(p.is_zero for p in res.psi)

    @pytest.mark.parametrize("g,n", sorted(EXPECTED))
    def test_perturbation_soundness(self, g, n):
        assert perturbation_sound(Space(g, n), certificate_components(g, n))

    def test_residual_report_covers_all_orbits(self):
        cert = certify(17, 8)
        statuses = {st for _, _, st in cert.residual_report}
        assert statuses <= {"zero", "nonnegative", "negative", "unknown"}
        assert cert.residual_report  # non-empty

    def test_to_json_is_stable(self):
        a = json.dumps(certify(16, 8).to_json(), sort_keys=True)
        b = json.dumps(certify(16, 8).to_json(), sort_keys=True)
        assert a == b

    def test_asymmetric_component_rejected(self):
        space = Space(17, 8)
        bad = DivisorClass(space, psi={1: 1})
        with pytest.raises(CertificateError, match="symmetric"):
            solve_certificate(space, [("bad", bad)])

    def test_inexact_interior_rejected(self):
        space = Space(17, 8)
        bad = DivisorClass(space, lam=UNKNOWN)
        with pytest.raises(CertificateError, match="non-exact"):
            solve_certificate(space, [("bad", bad)])

    def test_infeasible(self):
        space = Space(17, 8)
        # only psi-free, delta-free lambda multiples cannot hit delta_irr = -2
        comp = DivisorClass(space, lam=1)
        with pytest.raises(InfeasibleCertificateError):
            solve_certificate(space, [("lam_only", comp)])

    def test_underdetermined(self):
        space = Space(17, 8)
        comps = certificate_components(17, 8)
        doubled = comps + [(f"{nm}_copy", cls) for nm, cls in comps]
        with pytest.raises(UnderdeterminedCertificateError):
            solve_certificate(space, doubled)

    def test_negative_coefficient(self):
        space = Space(17, 8)
        comps = certificate_components(17, 8)
        flipped = [(nm, cls.scale(-1)) for nm, cls in comps]
        with pytest.raises(NegativeCoefficientError):
            solve_certificate(space, flipped)

    def test_unsupported_space(self):
        with pytest.raises(ValueError, match="no certificate recipe"):
            certify(9, 2)

    def test_psi_sum_is_the_big_class(self):
        cls = psi_sum_class(Space(5, 3))
        assert all(p == Coefficient.exact(1) for p in cls.psi)
        assert cls.lam.is_zero and cls.delta_irr.is_zero and cls.boundary_is_zero
