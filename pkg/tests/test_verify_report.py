import random

import pytest

from multibraid.braid import BraidWord, MultiBraidWord, MultiCrossing
from multibraid.construct import convert_even_with_audit
from multibraid.errors import ResourceGuardError
from multibraid.oddn import convert_odd_with_audit
from multibraid.triple import convert_triple_with_audit
from multibraid.verify.bracket import jones
from multibraid.verify.burau import burau
from multibraid.verify.garside import normal_form
from multibraid.verify.report import destabilize_sweep, equivalence_report
from multibraid.braid import expand, phi


def as_width2_multiword(w: BraidWord) -> MultiBraidWord:
    return MultiBraidWord(
        w.strands,
        2,
        tuple(
            MultiCrossing(abs(x), 2, (1, 2) if x > 0 else (2, 1)) for x in w.letters
        ),
    )


def test_trivial_re_expansion_is_certified():
    w = BraidWord(3, (1, -2, 1))
    report = equivalence_report(w, as_width2_multiword(w))
    assert report.verdict == "CertifiedEqual"
    assert report.normal_form_match is True
    assert report.burau_match is True
    assert report.jones_match is True


def test_mismatch_on_wrong_link():
    trefoil = BraidWord(2, (1, 1, 1))
    hopf_as_multi = as_width2_multiword(BraidWord(2, (1, 1)))
    report = equivalence_report(trefoil, hopf_as_multi)
    assert report.verdict == "Mismatch"
    assert not report.components_match


def test_certified_triple_conversion():
    w = BraidWord(2, (1, 1))
    out, audit = convert_triple_with_audit(w)
    report = equivalence_report(w, out, audit)
    assert report.verdict == "CertifiedEqual"
    assert report.jones_match


def test_even_conversion_report():
    w = BraidWord(2, (1, 1, 1))
    out, audit = convert_even_with_audit(w, 4)
    report = equivalence_report(w, out, audit)
    assert report.verdict != "Mismatch"
    assert report.jones_match
    assert report.details["replay"] == "verified"


def test_odd_conversion_report():
    w = BraidWord(2, (1, 1))
    out, audit = convert_odd_with_audit(w, 5)
    report = equivalence_report(w, out, audit)
    assert report.verdict != "Mismatch"
    assert report.jones_match


def test_tampered_audit_fails_replay():
    w = BraidWord(2, (1, 1, 1))
    out, audit = convert_even_with_audit(w, 4)
    audit["blocks"][0]["schedule"] = audit["blocks"][0]["schedule"][:-1]
    report = equivalence_report(w, out, audit)
    assert report.details["replay"] == "failed"
    assert report.verdict != "CertifiedEqual"


def test_cross_size_without_audit_guard():
    w = BraidWord(2, (1, 1, 1))
    out, _ = convert_even_with_audit(w, 4)
    with pytest.raises(ResourceGuardError):
        equivalence_report(w, out, audit=None)


def test_destabilize_sweep():
    w = BraidWord(2, (1, 1, 1))
    s = BraidWord(4, (1, 1, 1, 2, 3))
    assert destabilize_sweep(s) == w


def test_invariant_implication_chain():
    # normal-form equality implies Burau equality implies projection
    # equality, sampled over random word pairs.
    rng = random.Random(211)
    for _ in range(60):
        m = rng.randint(2, 4)
        u = BraidWord(
            m, tuple(rng.choice([1, -1]) * rng.randint(1, m - 1) for _ in range(6))
        )
        v = BraidWord(
            m, tuple(rng.choice([1, -1]) * rng.randint(1, m - 1) for _ in range(6))
        )
        nf_eq = normal_form(u) == normal_form(v)
        burau_eq = burau(u) == burau(v)
        phi_eq = phi(u) == phi(v)
        if nf_eq:
            assert burau_eq
        if burau_eq:
            assert phi_eq
