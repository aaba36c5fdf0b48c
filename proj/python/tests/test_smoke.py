import pytest

import skewcat

EQ8 = "X * (I * Y) |- X * (I * Y)"
ID = '(id "X * (I * Y)")'
OTHER = '(comp (alpha "X" "I" "Y") (tensor (rho "X") (lam "Y")))'


def test_count():
    assert skewcat.count(EQ8) == 2
    assert skewcat.count(EQ8, ln=True) == 1
    assert skewcat.count("X |- Y", ln=True, rn=True, an=True) == 0
    assert skewcat.count(EQ8, threads=2) == 2


def test_search_matches_count():
    for flags in ({}, {"ln": True}, {"rn": True}, {"an": True}):
        ds = skewcat.search("(X * I) * (I * Y) |- X * (I * Y)", **flags)
        assert len(ds) == skewcat.count("(X * I) * (I * Y) |- X * (I * Y)", **flags)
        assert len(set(ds)) == len(ds)


def test_focus_and_emb():
    d = '(otr 0 (ax "X") (ir))'
    assert skewcat.check(d) == "X | |- X * I"
    f = skewcat.focus(d)
    assert f == '(swlc (swrl (otr 0 (ax "X") (swrl (ir)))))'
    assert skewcat.focus(skewcat.emb(f)) == f
    assert skewcat.seq_equal(skewcat.emb(f), d)
    assert skewcat.rewrite_nf(d) == d


def test_cat_equal_and_hom():
    assert not skewcat.cat_equal(ID, OTHER)
    assert skewcat.cat_equal(ID, OTHER, ln=True)
    reps = skewcat.hom("X * (I * Y)", "X * (I * Y)")
    assert len(reps) == 2
    assert not skewcat.cat_equal(reps[0], reps[1])
    assert len(skewcat.hom("X * (I * Y)", "X * (I * Y)", ln=True)) == 1


def test_translations():
    r = skewcat.sound('(otr 0 (ax "A") (ir))')
    assert skewcat.cat_equal(r, '(rho "A")')
    back = skewcat.cmplt(r)
    assert skewcat.seq_equal(back, '(otr 0 (ax "A") (ir))')


def test_errors():
    with pytest.raises(skewcat.ParseError):
        skewcat.count("X |-")
    with pytest.raises(skewcat.FlagError):
        skewcat.cmplt('(laminv "X")')
    with pytest.raises(skewcat.SkewTypeError):
        skewcat.focus('(otr 1 (ax "X") (ir))')
    assert issubclass(skewcat.ParseError, skewcat.Error)


def test_canonical_printing():
    assert skewcat.normalize_formula("(X*I)*Y") == "(X * I) * Y"
    assert skewcat.normalize_sequent("- | X,Y |- X*Y") == "- | X, Y |- X * Y"
