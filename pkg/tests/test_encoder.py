"""Tests for the normal encoding."""

import pytest
from hypothesis import given, settings

from afsa.encoder import TRUE, encode, neutral_term
from afsa.errors import InvalidFrameworkError
from afsa.frame_io import load_frame
from afsa.framework import Attack, Framework, FrameworkKind
from afsa.fuzzy import GODEL, LUKASIEWICZ, PRODUCT, eval_fuzzy
from afsa.logic3 import enumerate_models3, pretty
from tests.strategies import FRAMES, frameworks, scaled


def frame(name):
    return load_frame(str(FRAMES / name))


def test_encode_chain():
    """Test the encoding of a -> b."""
    encoded = encode(frame('chain.af'))
    assert pretty(encoded.formula) == '((a <-> !0) & (b <-> !(a & r1)) & (r1 <-> !0))'
    assert encoded.variables == ('a', 'b', 'r1')
    assert encoded.kind is FrameworkKind.HLAF


def test_encode_attacked_attack():
    """Test that an attacked attack gets its own conjunct."""
    text = pretty(encode(frame('attacked_attack.af')).formula)
    assert '(r1 <-> !(c & r2))' in text
    assert '(b <-> !(a & r1))' in text
    assert '(r2 <-> !0)' in text


def test_encode_setaf():
    """Test SETAF encodings: attack names never appear."""
    assert pretty(encode(frame('mutual.af')).formula) == '((a <-> !b) & (b <-> !a))'
    joint = encode(frame('joint.af'))
    assert pretty(joint.formula) == '((a <-> !0) & (b <-> !0) & (c <-> !(a & b)))'
    assert joint.variables == ('a', 'b', 'c')


def test_encode_hsaf_puts_attack_first():
    """Test that HSAF terms start with the attack variable."""
    text = pretty(encode(frame('hsaf_nested.af')).formula)
    assert text == '((a <-> !0) & (b <-> !(s1 & a)) & (s1 <-> !(s2 & b & s1)) & (s2 <-> !0))'


def test_encode_bhaf_attack_sources():
    """Test BHAF terms with attacks as sources."""
    text = pretty(encode(frame('bhaf_mixed.af')).formula)
    assert '(c <-> !(r1 & r2))' in text
    assert '(r2 <-> !(c & r3))' in text


def test_encode_degenerate_frameworks():
    """Test a framework without attacks and one without elements."""
    assert pretty(encode(frame('empty.af')).formula) == '(a <-> !0)'
    assert encode(Framework(FrameworkKind.HLAF, ())).formula == TRUE


def test_conjuncts_follow_attack_declaration_order():
    """Test that several attackers keep declaration order."""
    framework = Framework(
        FrameworkKind.HLAF, ('a', 'b', 'c'), (Attack('r2', {'c'}, 'b'), Attack('r1', {'a'}, 'b'))
    )
    assert '(b <-> (!(c & r2) & !(a & r1)))' in pretty(encode(framework).formula)


def test_daf_encodes_as_hlaf():
    """Test that a DAF and its HLAF retag share the encoding."""
    daf = frame('three_cycle.af')
    assert encode(daf).formula == encode(daf.retag(FrameworkKind.HLAF)).formula


def test_explicit_imaginary_terms():
    """Test that explicit imaginary arrows appear per kind."""
    bhaf = Framework(FrameworkKind.BHAF, ('a', 'b'), (Attack('r1', {'a'}, 'b'),))
    text = pretty(encode(bhaf, explicit_imaginary=True).formula)
    assert '(a <-> !(0 & 1))' in text
    assert '(b <-> (!(a & r1) & !(0 & 1)))' in text

    hlaf = bhaf.retag(FrameworkKind.HLAF)
    text = pretty(encode(hlaf, explicit_imaginary=True).formula)
    assert '(b <-> !(a & r1))' in text
    assert '(a <-> !(0 & 1))' in text

    assert pretty(neutral_term(FrameworkKind.HSAF)) == '!(1 & 0)'


def test_neutral_term_is_one_everywhere():
    """Test that the imaginary arrow term is 1 in every algebra."""
    for kind in FrameworkKind:
        for algebra in (GODEL, PRODUCT, LUKASIEWICZ):
            assert eval_fuzzy(neutral_term(kind), {}, algebra) == 1


@given(frameworks(max_arguments=3, max_attacks=3))
@settings(max_examples=scaled(100), deadline=None)
def test_explicit_imaginary_keeps_models(framework):
    """Test that explicit imaginary terms do not change the models."""
    plain = encode(framework)
    explicit = encode(framework, explicit_imaginary=True)
    assert explicit.variables == plain.variables
    assert enumerate_models3(explicit.formula, variables=explicit.variables) == \
        enumerate_models3(plain.formula, variables=plain.variables)


@given(frameworks())
@settings(max_examples=scaled(200), deadline=None)
def test_one_conjunct_per_labellable_element(framework):
    """Test that variables are exactly the labellable elements."""
    encoded = encode(framework)
    assert encoded.variables == framework.labellable
    assert encoded.formula.variables() == set(framework.labellable)


def test_encode_rejects_invalid():
    """Test that invalid frameworks are not encoded."""
    with pytest.raises(InvalidFrameworkError):
        encode(Framework(FrameworkKind.SETAF, ('a',), (Attack('s1', {'z'}, 'a'),)))
