import pytest

from gentorsion.errors import (
    InvalidInvariant,
    ParseError,
    TrivialElement,
    UnknownGenerator,
    UnsupportedBase,
)
from gentorsion.seifert import (
    GenNCertificate,
    PowersOfH,
    SeifertData,
    SeifertGroup,
    SeifertPair,
    SurfaceException,
    TwoHalfTwists,
    classify_reversible_families,
    gen_n_certificate,
    parse_seifert,
    presentation,
    quotient_scheme,
    reversible_seifert,
)
from gentorsion.words import Word, enumerate_reduced, parse_word

TREFOIL = "(O,o,0 | 1; (2,1),(3,1)); boundaries=1; phi: d1=+1"
TWO_BOUNDARY = "(O,o,0 | 0; (4,1),(4,1)); boundaries=2; phi: d1=-1,d2=-1"
GENUS_ONE = "(O,o,1 | 0; (4,1),(4,1)); boundaries=0; phi: a1=-1,b1=+1"
KLEIN = "(N,2 | 0); boundaries=0; phi: x1=-1,x2=-1"


def test_parse_trefoil_fields():
    d = parse_seifert(TREFOIL)
    assert d.base_orientable
    assert d.genus_or_crosscaps == 0
    assert d.boundary_count == 1
    assert d.b == 1
    assert d.exceptional == ((2, 1), (3, 1))
    assert d.phi_of("d1") == 1
    assert d.phi_of("c1") == 1
    assert not d.phi_nontrivial


def test_parse_klein_fields():
    d = parse_seifert(KLEIN)
    assert not d.base_orientable
    assert d.genus_or_crosscaps == 2
    assert d.boundary_count == 0
    assert d.exceptional == ()
    assert d.phi_of("x1") == -1 and d.phi_of("x2") == -1
    assert d.phi_nontrivial


def test_parse_defaults_and_whitespace():
    d = parse_seifert("( O,o,2 | -3 )")
    assert d.genus_or_crosscaps == 2 and d.b == -3
    assert d.boundary_count == 0 and d.phi == ()
    assert d.handle_generators() == ("a1", "b1", "a2", "b2")


def test_parse_comma_separated_fiber_list():
    compact = parse_seifert("(O,o,0|1,(2,1),(3,1));boundaries=1")
    spaced = parse_seifert("(O,o,0 | 1; (2,1),(3,1)); boundaries=1")
    assert compact == spaced


def test_parse_rejects_malformed_text():
    for bad in (
        "O,o,0 | 1",
        "(O,o,0  1)",
        "(Q,2 | 0)",
        "(O,0 | 1)",
        "(N,2,3 | 0)",
        "(O,o,0 | 1); frobnicate=2",
        "(O,o,0 | 1); boundaries=1; phi: d1=3",
        "(O,o,0 | 1; (2 1)); boundaries=1",
    ):
        with pytest.raises(ParseError):
            parse_seifert(bad)


def test_invariant_validation():
    with pytest.raises(InvalidInvariant):
        parse_seifert("(O,o,0 | 1; (1,1)); boundaries=1")
    # phi on the only boundary generator must stay +1
    with pytest.raises(InvalidInvariant):
        parse_seifert("(O,o,0 | 0); boundaries=1; phi: d1=-1")
    with pytest.raises(InvalidInvariant):
        parse_seifert("(O,o,0 | 0); boundaries=1; phi: z9=+1")
    with pytest.raises(InvalidInvariant):
        SeifertData(True, -1, 0, 0)
    with pytest.raises(InvalidInvariant):
        SeifertData(True, 0, 1, 0, phi=(("d1", -1), ("d1", -1)))
    # two flipped boundary generators multiply back to +1
    d = parse_seifert(TWO_BOUNDARY)
    assert d.phi_of("d1") == -1 and d.phi_of("d2") == -1


def test_presentation_trefoil_frozen():
    p = presentation(parse_seifert(TREFOIL))
    assert p.generators == ("c1", "c2", "d1", "h")
    assert p.relations == (
        ("d1 h d1^-1", "h"),
        ("c1 h c1^-1", "h"),
        ("c2 h c2^-1", "h"),
        ("c1^2", "h"),
        ("c2^3", "h"),
        ("c1 c2 d1 h", "1"),
    )


def test_presentation_klein_frozen():
    p = presentation(parse_seifert(KLEIN))
    assert p.generators == ("x1", "x2", "h")
    assert ("x1 h x1^-1", "h^-1") in p.relations
    assert ("x2 h x2^-1", "h^-1") in p.relations
    assert p.relations[-1] == ("x1^2 x2^2", "1")


def test_presentation_orientable_long_relation():
    p = presentation(parse_seifert(GENUS_ONE))
    assert p.relations[-1] == ("a1 b1 a1^-1 b1^-1 c1 c2", "1")
    assert ("a1 h a1^-1", "h^-1") in p.relations
    assert ("b1 h b1^-1", "h") in p.relations
    assert ("c1^4", "h") in p.relations


def test_quotient_scheme_trefoil():
    qm = quotient_scheme(parse_seifert(TREFOIL))
    assert qm.scheme.generators == (("c1", 2), ("c2", 3))
    assert qm.eliminated == "d1"
    assert str(qm.elimination_image) == "c2^2 c1"


def test_quotient_scheme_keeps_all_but_last_boundary():
    qm = quotient_scheme(parse_seifert(TWO_BOUNDARY))
    assert qm.scheme.generators == (("c1", 4), ("c2", 4), ("d1", None))
    assert qm.eliminated == "d2"


def test_quotient_scheme_absent_for_closed_base():
    assert quotient_scheme(parse_seifert(KLEIN)) is None
    assert quotient_scheme(parse_seifert(GENUS_ONE)) is None
    with pytest.raises(UnsupportedBase):
        SeifertGroup(parse_seifert(KLEIN))


def test_eliminated_generator_central_form():
    G = SeifertGroup(parse_seifert(TREFOIL))
    d1 = G.element("d1")
    assert d1.m == -3
    assert str(d1.q) == "c2^2 c1"
    assert G.spell(d1) == "h^-3 c2^2 c1"
    # the long relation holds in central form
    assert G.element("c1 c2 d1 h").is_identity


def test_fiber_orders_and_wraps():
    G = SeifertGroup(parse_seifert(TREFOIL))
    assert G.element("c1^2") == SeifertPair(1, G.one.q)
    assert G.element("c2^3") == SeifertPair(1, G.one.q)
    assert G.spell(G.element("c1^-1")) == "h^-1 c1"
    assert G.spell(G.element("c2^-1")) == "h^-1 c2^2"
    assert G.element("c2^5") == G.element("h c2^2")


def test_twisted_fiber_commutation():
    G = SeifertGroup(parse_seifert(TWO_BOUNDARY))
    assert G.element("d1 h d1^-1") == G.element("h^-1")
    assert G.element("c1 h c1^-1") == G.element("h")
    assert G.element("d1 h^4 d1^-1 h^4").is_identity


def test_group_axioms_over_enumeration():
    G = SeifertGroup(parse_seifert(TWO_BOUNDARY))
    words = list(enumerate_reduced(G.scheme, 2, max_exponent=2))[:25]
    pairs = [SeifertPair(m, q) for q in words for m in (-1, 2)]
    for p in pairs:
        assert G.mul(p, G.inv(p)) == G.one
        assert G.mul(G.inv(p), p) == G.one
        assert G.mul(p, G.one) == p and G.mul(G.one, p) == p
    for p1 in pairs[:8]:
        for p2 in pairs[:8]:
            for p3 in (pairs[3], pairs[11]):
                left = G.mul(G.mul(p1, p2), p3)
                right = G.mul(p1, G.mul(p2, p3))
                assert left == right


def test_element_parse_is_a_homomorphism():
    G = SeifertGroup(parse_seifert(TWO_BOUNDARY))
    texts = ("c1 d1^-2", "h^-1 c2^3 c1^2", "d2 c1", "d1 h d2^-1", "c2^-2 d1 c2")
    for t1 in texts:
        for t2 in texts:
            assert G.element(t1 + " " + t2) == G.mul(G.element(t1), G.element(t2))


def test_spell_round_trip():
    G = SeifertGroup(parse_seifert(TWO_BOUNDARY))
    for q in list(enumerate_reduced(G.scheme, 2, max_exponent=2))[:20]:
        for m in (-2, 0, 3):
            p = SeifertPair(m, q)
            assert G.element(G.spell(p)) == p


def test_element_rejects_bad_tokens():
    G = SeifertGroup(parse_seifert(TREFOIL))
    with pytest.raises(UnknownGenerator):
        G.element("c3")
    with pytest.raises(ParseError):
        G.element("c1^")


def test_trefoil_fiber_not_reversible():
    r = reversible_seifert("h", parse_seifert(TREFOIL))
    assert not r.reversible
    assert "phi is trivial" in r.reason


def test_flipped_boundary_makes_fiber_reversible():
    d = parse_seifert(TWO_BOUNDARY)
    G = SeifertGroup(d)
    r = reversible_seifert("h", d)
    assert r.reversible
    assert G.spell(r.reverser) == "d1"
    assert G.conjugated(G.element("h^5"), r.reverser) == G.element("h^-5")


def test_half_twist_lift_alone_is_not_reversible():
    d = parse_seifert(TREFOIL)
    r = reversible_seifert("c1", d)
    assert not r.reversible
    assert "never admit a lift" in r.reason
    d2 = parse_seifert(TWO_BOUNDARY)
    assert not reversible_seifert("c1^2", d2).reversible


def test_unbalanced_torsion_image_is_not_reversible():
    r = reversible_seifert("c2", parse_seifert(TREFOIL))
    assert not r.reversible
    assert "not conjugate to its inverse" in r.reason


def test_commutator_is_reversible_in_trefoil_group():
    d = parse_seifert(TREFOIL)
    G = SeifertGroup(d)
    r = reversible_seifert("c1 c2 c1^-1 c2^-1", d)
    assert r.reversible
    assert G.spell(r.reverser) == "c1"
    p = G.element("c1 c2 c1^-1 c2^-1")
    assert G.conjugated(p, r.reverser) == G.inv(p)


def test_half_twist_pair_families_reversible():
    d = parse_seifert(TWO_BOUNDARY)
    G = SeifertGroup(d)
    # preserving family with trivial conjugating letter
    r = reversible_seifert("c1^2 c2^-2", d)
    assert r.reversible
    assert r.reverser == SeifertPair(0, parse_word(G.scheme, "c1^2"))
    # flipping family through the phi = -1 boundary letter
    r = reversible_seifert("c1^2 d1 c2^2 d1^-1", d)
    assert r.reversible
    # same shape with a fiber-preserving letter fails
    assert not reversible_seifert("c1^2 c2 c1^2 c2^-1", d).reversible


def test_fiber_shift_obstructs_reversibility():
    d = parse_seifert(TWO_BOUNDARY)
    assert reversible_seifert("c1^2 c2^-2", d).reversible
    r = reversible_seifert("h c1^2 c2^-2", d)
    assert not r.reversible
    assert "defect progression" in r.reason


def test_flipping_reverser_consumes_fiber_shift():
    # phi(q) = -1 lets h^s absorb any even central defect
    d = parse_seifert(TWO_BOUNDARY)
    G = SeifertGroup(d)
    assert not reversible_seifert("d1^2", d).reversible
    g = G.element("c1^2 d1 h c1^2 d1^-1")
    rr = reversible_seifert(g, d)
    if rr.reversible:
        assert G.conjugated(g, rr.reverser) == G.inv(g)
        assert rr.reverser.m != 0 or G.phi_word(rr.reverser.q) == 1


def test_free_generator_not_reversible():
    r = reversible_seifert("d1", parse_seifert(TWO_BOUNDARY))
    assert not r.reversible


def test_trivial_element_rejected():
    d = parse_seifert(TREFOIL)
    with pytest.raises(TrivialElement):
        reversible_seifert("1", d)
    with pytest.raises(TrivialElement):
        reversible_seifert("c1^2 h^-1", d)


def test_closed_base_unsupported():
    with pytest.raises(UnsupportedBase):
        reversible_seifert("h", parse_seifert(KLEIN))


def test_reversibility_invariant_under_conjugation_and_inversion():
    d = parse_seifert(TWO_BOUNDARY)
    G = SeifertGroup(d)
    samples = ["h^2", "c1^2 c2^-2", "c1 c2", "d1 c1^2", "c1^2 d1 c2^2 d1^-1", "h c2^2"]
    conjugators = ["c1", "c2^3 d1", "d1^-1 c1^2"]
    for text in samples:
        p = G.element(text)
        if p.is_identity:
            continue
        base = reversible_seifert(p, d).reversible
        assert reversible_seifert(G.inv(p), d).reversible == base
        for ktext in conjugators:
            k = G.element(ktext)
            assert reversible_seifert(G.conjugated(p, k), d).reversible == base


def test_reverser_is_validated_whenever_reported():
    d = parse_seifert(TWO_BOUNDARY)
    G = SeifertGroup(d)
    found = 0
    for q in list(enumerate_reduced(G.scheme, 2, max_exponent=2))[:30]:
        for m in (-1, 0, 1):
            p = SeifertPair(m, q)
            if p.is_identity:
                continue
            r = reversible_seifert(p, d)
            if r.reversible:
                found += 1
                assert G.conjugated(p, r.reverser) == G.inv(p)
    assert found >= 3


def test_classify_trefoil_single_family():
    report = classify_reversible_families(parse_seifert(TREFOIL))
    assert report.families == (
        TwoHalfTwists(i=1, j=1, second_sign=-1, phi_k=1, beta=1),
    )
    assert any("trivial phi" in note for note in report.notes)


def test_classify_genus_one_seven_families():
    report = classify_reversible_families(parse_seifert(GENUS_ONE))
    assert report.families[0] == PowersOfH()
    twists = [f for f in report.families if isinstance(f, TwoHalfTwists)]
    assert len(twists) == 6
    assert {(f.i, f.j) for f in twists} == {(1, 1), (1, 2), (2, 2)}
    assert {(f.second_sign, f.phi_k) for f in twists} == {(1, -1), (-1, 1)}
    assert len(report.families) == 7


def test_classify_surface_exceptions():
    report = classify_reversible_families(parse_seifert(KLEIN))
    assert report.families == (PowersOfH(), SurfaceException(surface="klein-bottle"))
    report = classify_reversible_families(parse_seifert("(N,1 | 0)"))
    assert report.families == (SurfaceException(surface="rp2"),)
    # three crosscaps no longer qualify
    report = classify_reversible_families(parse_seifert("(N,3 | 0)"))
    assert report.families == ()


def test_classify_skips_odd_orders_and_mismatched_beta():
    d = parse_seifert("(O,o,0 | 0; (3,1),(5,1)); boundaries=1")
    assert classify_reversible_families(d).families == ()
    # a cross pair with unequal beta is dropped, the diagonal pairs stay
    d = parse_seifert("(O,o,0 | 0; (4,1),(4,2)); boundaries=1")
    report = classify_reversible_families(d)
    assert report.families == (
        TwoHalfTwists(i=1, j=1, second_sign=-1, phi_k=1, beta=1),
        TwoHalfTwists(i=2, j=2, second_sign=-1, phi_k=1, beta=2),
    )
    d = parse_seifert("(O,o,0 | 0; (4,2),(6,2)); boundaries=1")
    report = classify_reversible_families(d)
    assert report.families == (
        TwoHalfTwists(i=1, j=1, second_sign=-1, phi_k=1, beta=2),
        TwoHalfTwists(i=1, j=2, second_sign=-1, phi_k=1, beta=2),
        TwoHalfTwists(i=2, j=2, second_sign=-1, phi_k=1, beta=2),
    )


def test_gen_n_trefoil_frozen():
    d = parse_seifert(TREFOIL)
    c3 = gen_n_certificate(d, 3)
    assert (c3.i, c3.j, c3.p, c3.p_prime) == (2, 2, 1, 2)
    assert (c3.m1, c3.m2, c3.x) == (1, 2, -1)
    assert c3.separating == "c1"
    assert c3.element == "c2 c1 c2^2 c1^-1 h^-1"
    assert c3.conjugators == ("c1 c2^-2 c1^-1", "c1 c2^-4 c1^-1")
    c2 = gen_n_certificate(d, 2)
    assert (c2.i, c2.j, c2.p, c2.p_prime) == (1, 1, 1, 1)
    assert (c2.m1, c2.m2, c2.x) == (1, 1, -1)
    assert c2.separating == "c2"
    assert c2.element == "c1 c2 c1 c2^-1 h^-1"


def test_gen_n_relation_recomputed():
    d = parse_seifert(TREFOIL)
    G = SeifertGroup(d)
    for n in (2, 3, 4, 6, 9):
        cert = gen_n_certificate(d, n)
        assert cert is not None
        assert n * cert.x + cert.m1 + cert.m2 == 0
        g = G.element(cert.element)
        assert not g.is_identity
        total = g
        for text in cert.conjugators:
            total = G.mul(total, G.conjugated(g, G.element(text)))
        assert total.is_identity


def test_gen_n_needs_a_shared_factor_with_some_fiber_order():
    # 5 is coprime to 2 and 3, so every candidate power collapses to a
    # fiber power and no nontrivial element of the family exists
    assert gen_n_certificate(parse_seifert(TREFOIL), 5) is None


def test_gen_n_without_exceptional_fibers():
    assert gen_n_certificate(parse_seifert("(N,2 | 0)"), 2) is None
    assert gen_n_certificate(parse_seifert("(O,o,1 | 3); boundaries=1"), 3) is None


def test_gen_n_closed_base_arithmetic_only():
    cert = gen_n_certificate(parse_seifert("(N,2 | 0; (2,1),(2,1)); phi: x1=-1,x2=-1"), 2)
    assert cert is not None
    assert (cert.i, cert.j, cert.p, cert.p_prime, cert.x) == (1, 1, 1, 1, -1)
    assert cert.separating == "c2"


def test_gen_n_rejects_small_n():
    with pytest.raises(InvalidInvariant):
        gen_n_certificate(parse_seifert(TREFOIL), 1)
