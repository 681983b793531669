import itertools

import pytest

from gentorsion.braid3 import (
    B3Gen3Verdict,
    BraidWord,
    CentralElement,
    conjugate_b3,
    exponent_sum,
    gen3_relation,
    gen3_torsion_b3,
    normal_form,
    parse_braid,
    section,
)
from gentorsion.braid3 import reversible_b3
from gentorsion.errors import NonpositiveBound, ParseError, TrivialElement
from gentorsion.modular import Verdict
from gentorsion.words import PSL2Z, enumerate_reduced, identity, parse_word


def w(text):
    return parse_word(PSL2Z, text)


def nf(text):
    return normal_form(parse_braid(text))


def test_parse_braid():
    assert parse_braid("s1 s2 s1").letters == (("s1", 1), ("s2", 1), ("s1", 1))
    assert parse_braid("s1^-1").letters == (("s1", -1),)
    assert parse_braid("S1^2").letters == (("s1", -2),)
    assert parse_braid("x Y h^3").letters == (("x", 1), ("y", -1), ("h", 3))
    assert parse_braid("1").letters == ()


def test_parse_braid_rejects_garbage():
    with pytest.raises(ParseError):
        parse_braid("q r")
    with pytest.raises(ParseError):
        parse_braid("s3")
    with pytest.raises(ParseError):
        parse_braid("s1^0")


def test_braid_word_validation():
    with pytest.raises(ValueError):
        BraidWord((("s1", 0),))
    with pytest.raises(ValueError):
        BraidWord((("t", 1),))


def test_normal_form_frozen_examples():
    assert nf("s1 s2 s1 s2 s1 s2") == CentralElement(1, w("1"))
    assert nf("s1 s2 s1") == CentralElement(0, w("a"))
    assert nf("s1") == CentralElement(-1, w("b^2 a"))
    assert nf("s2") == CentralElement(-1, w("a b^2"))
    assert nf("S1") == CentralElement(-1, w("a b"))
    assert nf("S2") == CentralElement(-1, w("b a"))
    assert nf("s1 S2") == CentralElement(-2, w("b^2 a b a"))
    assert nf("h^2 H^2") == CentralElement(0, w("1"))


def test_central_relations():
    assert nf("x x") == nf("h") == CentralElement(1, w("1"))
    assert nf("y y y") == nf("h")
    assert nf("x^2 y^-3") == CentralElement(0, w("1"))


def test_braid_relation_holds():
    assert nf("s1 s2 s1") == nf("s2 s1 s2")
    # h is central
    for text in ["s1", "s2", "x y", "s1 S2 y"]:
        assert nf(f"h {text}") == nf(f"{text} h")


def test_x_and_y_spell_the_sigmas():
    assert nf("Y x") == nf("s1")
    assert nf("X y y") == nf("s2")


def test_normal_form_is_a_homomorphism():
    texts = ["s1", "S2", "x y", "h^-1 s1 s2", "y Y", "s2 s2 s1"]
    for t1, t2 in itertools.product(texts, repeat=2):
        u, v = parse_braid(t1), parse_braid(t2)
        assert normal_form(u * v) == normal_form(u) * normal_form(v)


def test_inverse_and_identity():
    for text in ["s1", "s2 S1", "x y^2 h", "s1 s2 s1 s2"]:
        n = normal_form(parse_braid(text))
        e = CentralElement(0, w("1"))
        assert n * n.inverse() == e
        assert n.inverse() * n == e
        assert normal_form(parse_braid(text).inverse()) == n.inverse()


def test_section_round_trip():
    for m in (-2, 0, 1, 3):
        for q in enumerate_reduced(PSL2Z, 4):
            assert normal_form(section(m, q)) == CentralElement(m, q)


def test_spell_round_trip():
    n = nf("s1 S2 s1 h")
    assert normal_form(n.spell()) == n


def test_exponent_sum_frozen():
    assert exponent_sum(parse_braid("s1 S2")) == 0
    assert exponent_sum(parse_braid("h")) == 6
    assert exponent_sum(parse_braid("s1 s2 s1")) == 3
    assert exponent_sum(parse_braid("x Y")) == 1


def test_exponent_sum_matches_normal_form():
    for text in ["s1 s2", "S1 x y", "h^-2 s2 s2", "y y x S1"]:
        braid = parse_braid(text)
        assert exponent_sum(braid) == normal_form(braid).exponent_sum


def test_exponent_sum_is_a_class_function():
    g = parse_braid("s1 s2 S1")
    for conj in ["s1", "x y", "h s2"]:
        k = parse_braid(conj)
        assert exponent_sum(k * g * k.inverse()) == exponent_sum(g)


def test_conjugate_sigma1_to_sigma2():
    k = conjugate_b3(parse_braid("s1"), parse_braid("s2"))
    assert k is not None
    assert k.letters == (("y", 1),)
    kn = normal_form(k)
    assert kn * nf("s1") * kn.inverse() == nf("s2")


def test_conjugate_b3_refusals():
    # equal exponent sums but non-conjugate images
    assert conjugate_b3(parse_braid("h"), parse_braid("s1^6")) is None
    # different exponent sums
    assert conjugate_b3(parse_braid("s1"), parse_braid("s1^3")) is None


def test_conjugate_b3_self_is_trivial():
    k = conjugate_b3(parse_braid("s1 s2"), parse_braid("s1 s2"))
    assert k is not None and k.letters == ()


def test_conjugate_b3_randomish_pairs_validate():
    texts = ["s1 S2", "x y X", "s2 s1 h^-1", "y s1"]
    conjs = ["s1", "y", "x S2"]
    for t, c in itertools.product(texts, conjs):
        g = parse_braid(t)
        kc = parse_braid(c)
        other = kc * g * kc.inverse()
        k = conjugate_b3(g, other)
        assert k is not None
        kn = normal_form(k)
        assert kn * normal_form(g) * kn.inverse() == normal_form(other)


def test_reversible_commutator_family():
    g = parse_braid("x s1 X S1")
    rev = reversible_b3(g)
    assert rev is not None
    rn = normal_form(rev.reverser)
    n = normal_form(g)
    assert rn * n * rn.inverse() == n.inverse()
    assert rev.commutator_witness is not None
    k0 = normal_form(rev.commutator_witness)
    x = nf("x")
    comm = x * k0 * x.inverse() * k0.inverse()
    c = normal_form(rev.witness_conjugator)
    assert c * comm * c.inverse() == n


def test_reversible_sigma_ratio():
    rev = reversible_b3(parse_braid("s1 S2"))
    assert rev is not None
    assert rev.reverser.letters == (("y", 2), ("x", 1), ("y", 1))
    rn = normal_form(rev.reverser)
    n = nf("s1 S2")
    assert rn * n * rn.inverse() == n.inverse()


def test_not_reversible_examples():
    assert reversible_b3(parse_braid("h")) is None
    assert reversible_b3(parse_braid("h^-2")) is None
    assert reversible_b3(parse_braid("s1")) is None
    assert reversible_b3(parse_braid("s1 s2")) is None
    with pytest.raises(TrivialElement):
        reversible_b3(parse_braid("y^3 H"))


def test_reversibility_is_closed_under_inverse_and_conjugation():
    for text in ["s1 S2", "x s1 X S1", "s1 s1 S2 S2"]:
        g = parse_braid(text)
        base = reversible_b3(g) is not None
        assert (reversible_b3(g.inverse()) is not None) == base
        for c in ["s1", "y h"]:
            k = parse_braid(c)
            conj = k * g * k.inverse()
            assert (reversible_b3(conj) is not None) == base


def test_gen3_spec_instance():
    g = parse_braid("y s1 y S1 s1 y S1 H")
    verdict = gen3_torsion_b3(g)
    assert verdict.tag == Verdict.YES
    n = normal_form(g)
    assert n == CentralElement(-2, w("a b^2 a b"))
    wit = verdict.form_witness
    assert wit.e1 == CentralElement(0, w("b"))
    assert wit.e2 == nf("s1 y S1")
    h_inv = CentralElement(-1, w("1"))
    assert wit.e1 * wit.e2 ** 2 * h_inv == n
    h1, k = verdict.certificate
    assert (h1, k) == (wit.e2 ** -2, wit.e2 ** 2)
    assert gen3_relation(n, h1, k).is_identity


def test_gen3_rejects_nonzero_exponent_sum():
    verdict = gen3_torsion_b3(parse_braid("h"))
    assert verdict.tag == Verdict.NO
    assert "exponent sum 6" in verdict.reason
    verdict = gen3_torsion_b3(parse_braid("s1 s2"))
    assert verdict.tag == Verdict.NO
    assert "exponent sum 2" in verdict.reason


def test_gen3_two_factor_family_diagnostic():
    # y * (x y x^-1) * h^-1 has exponent sum -2 and image b-sum 2 mod 3
    verdict = gen3_torsion_b3(parse_braid("y x y X H"))
    assert verdict.tag == Verdict.NO
    assert any("3x + 2 = 0" in d for d in verdict.diagnostics)


def test_gen3_unknown_is_inherited_from_the_image():
    q = w("a b a b^2") ** 2
    g = section(-4, q)
    assert normal_form(g).exponent_sum == 0
    verdict = gen3_torsion_b3(g)
    assert verdict.tag == Verdict.UNKNOWN_WITHIN_BOUND
    assert verdict.certificate is None


def test_gen3_trivial_and_bound_validation():
    with pytest.raises(TrivialElement):
        gen3_torsion_b3(parse_braid("x^2 H"))
    with pytest.raises(NonpositiveBound):
        gen3_torsion_b3(parse_braid("y s1 y S1 s1 y S1 H"), bound=0)


def test_gen3_verdict_invariant_under_conjugation_and_inversion():
    g = parse_braid("y s1 y S1 s1 y S1 H")
    base = gen3_torsion_b3(g, bound=4).tag
    assert base == Verdict.YES
    assert gen3_torsion_b3(g.inverse(), bound=4).tag == base
    for c in ["s1", "x y^2"]:
        k = parse_braid(c)
        conj = k * g * k.inverse()
        verdict = gen3_torsion_b3(conj, bound=4)
        assert verdict.tag == base
        h1, kk = verdict.certificate
        assert gen3_relation(normal_form(conj), h1, kk).is_identity


def test_gen3_certificates_validate_over_a_small_sweep():
    seen_yes = 0
    for m in (-2, -1, 0, 1):
        for q in enumerate_reduced(PSL2Z, 4):
            g = CentralElement(m, q)
            if g.is_identity:
                continue
            verdict = gen3_torsion_b3(g.spell(), bound=3)
            if verdict.tag == Verdict.YES:
                seen_yes += 1
                h1, k = verdict.certificate
                assert gen3_relation(normal_form(g.spell()), h1, k).is_identity
    assert seen_yes >= 1
