import pytest
from hypothesis import given, settings, strategies as st

from picard import catalog
from picard.errors import DanglingReference, ParseError, VersionUnsupported
from picard.ids import encode, is_token, ordered
from picard.report import CheckEntry, CheckReport
from picard.textio import as_token, decode, dumps, loads, parse, report_document, report_from_document, serialize

B2 = dumps(catalog.twogroup("B2"))


def edit(text, old, new):
    assert old in text
    return text.replace(old, new, 1)


# ---------------------------------------------------------------------------
# identifiers

atoms = st.text(alphabet="abcxyz0123456789_.-+*", min_size=1, max_size=4)
idents = st.recursive(atoms, lambda inner: st.lists(inner, min_size=1, max_size=3).map(tuple), max_leaves=8)


@given(idents)
def test_encode_decode_round_trip(x):
    tok = encode(x)
    assert is_token(tok)
    assert decode(tok) == x


@pytest.mark.parametrize("bad", ["", "a b", "(a", "a)", "(a,)", "(,a)", "()", "a=b", "a:b", "a#b", "a>b"])
def test_malformed_tokens(bad):
    assert not is_token(bad)


def test_digit_strings_sort_numerically():
    assert ordered(["10", "9", "a", ("1",), "2"]) == ["2", "9", "10", "a", ("1",)]


# ---------------------------------------------------------------------------
# documents


@pytest.mark.parametrize("name", catalog.names())
def test_round_trip_is_byte_stable(name):
    text = dumps(catalog.get(name))
    assert serialize(parse(text)) == text
    again = loads(text)
    assert dumps(again) == text


@pytest.mark.parametrize("name", catalog.module_names())
def test_loaded_module_equals_original(name):
    assert loads(dumps(catalog.module(name))) == catalog.module(name)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(catalog.names()), st.randoms(use_true_random=False))
def test_line_order_does_not_matter(name, rnd):
    text = dumps(catalog.get(name))
    head, *rest = text.split("\n[")
    shuffled = []
    for chunk in rest:
        title, *body = chunk.split("\n")
        body = [b for b in body if b]
        rnd.shuffle(body)
        # lines within a section are independent of one another
        shuffled.append("\n".join([title] + body))
    assert dumps(loads(head + "\n[" + "\n[".join(shuffled) + "\n")) == text


def test_comments_and_blank_lines_are_ignored():
    text = edit(B2, "[twogroup]\n", "# a comment\n\n[twogroup]   # trailing\n")
    assert dumps(loads(text)) == B2


def test_unknown_field_has_line_and_column():
    text = edit(B2, "unit = 0", "  colour = 0")
    with pytest.raises(ParseError) as info:
        parse(text)
    line = text.split("\n").index("  colour = 0") + 1
    assert (info.value.code, info.value.line, info.value.col) == ("PARSE_ERROR", line, 3)


def test_unsupported_version():
    with pytest.raises(VersionUnsupported) as info:
        parse(edit(B2, "picard 1", "picard 2"))
    assert (info.value.code, info.value.line, info.value.col) == ("VERSION_UNSUPPORTED", 1, 8)


@pytest.mark.parametrize("old,new,what", [
    ("0: 0 -> 0\n", "0: 0 -> 0\n0: 0 -> 0\n", "duplicate morphism"),
    ("objects 0", "objects 0 0", "duplicate object"),
    ("unit = 0", "unit = 0\nunit = 0", "duplicate entry"),
    ("kind twogroup", "kind widget", "unknown kind"),
    ("[twogroup]", "[module]", "unexpected section"),
    ("comp 0 1 = 1", "comp 0 1 1", "argument"),
    ("comp 0 1 = 1", "comp 0 (1 = 1", "malformed identifier"),
])
def test_parse_errors(old, new, what):
    with pytest.raises(ParseError) as info:
        parse(edit(B2, old, new))
    assert what in str(info.value)
    assert info.value.line is not None


def test_dangling_reference():
    with pytest.raises(DanglingReference) as info:
        loads(edit(B2, "inv 1 = 1", "inv 1 = 7"))
    assert info.value.code == "REFERENCE_ERROR"
    assert info.value.line == B2.split("\n").index("inv 1 = 1") + 1


def test_missing_entry_is_a_reference_error():
    with pytest.raises(DanglingReference) as info:
        loads(edit(B2, "sym 0 0 = 0\n", ""))
    assert "missing entry 'sym 0 0'" in str(info.value)


def test_non_composable_pair_is_a_reference_error():
    D2 = dumps(catalog.twogroup("D2"))
    with pytest.raises(DanglingReference) as info:
        loads(edit(D2, "comp i0 i0 = i0", "comp i0 i0 = i0\ncomp i0 i1 = i1"))
    assert "not composable" in str(info.value)


def test_document_kinds_and_levels():
    assert parse(dumps(catalog.hom("mod2-D4-D2@Z4"))).level == "module"
    assert parse(dumps(catalog.two_morphism("pip-B4-B2@Z4"))).kind == "twomorphism"
    assert list(parse(dumps(catalog.module("D2@Z2"))).sections) == ["ring", "module"]


# ---------------------------------------------------------------------------
# reports


def test_report_round_trip():
    rep = CheckReport([CheckEntry("a.b", True), CheckEntry("c", False, ("x", ("y", "z")))])
    text = serialize(report_document(rep, {"nodes": 3}))
    back = report_from_document(parse(text))
    assert [(e.axiom, e.passed, e.witness) for e in back.entries] == [("a.b", True, None),
                                                                      ("c", False, ("x", ("y", "z")))]
    assert "info result = FAIL" in text


def test_witness_tokens_are_sanitized():
    assert as_token(("not found", 3, ())) == ("not_found", "3", "-")
    assert as_token(frozenset({"b", "a"})) == ("a", "b")
