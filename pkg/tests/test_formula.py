"""Concrete syntax: parsing, desugaring, rendering, round trips."""

import random

import pytest

from helpers import random_formula
from bzfc import formula as fm
from bzfc.errors import ParseError
from bzfc.formula import (Amp, Bang, Bottom, CNeg, Circ, Conj, Const, Disj,
                          Equality, Exists, ExistsIn, Forall, ForallIn, Iff,
                          Imp, Membership, Neg, Prop, Query, StrongIff,
                          StrongImp, Var, desugar, parse, render)

x, y = Var("x"), Var("y")
A = Const("A")


class TestParsing:
    def test_membership(self):
        assert parse("x in A") == Membership(x, A)

    def test_negated_restricted_exists(self):
        got = parse("~ exists y in A . y = x")
        assert got == Neg(Exists("y", Amp(Membership(y, A), Equality(y, x))))

    def test_notin_is_negated_membership(self):
        assert parse("x notin A") == Neg(Membership(x, A))

    def test_neq_is_negated_equality(self):
        assert parse("x != y") == Neg(Equality(x, y))

    def test_bottom(self):
        assert parse("false") == Bottom()

    def test_proposition_letters(self):
        assert parse("p & q") == Amp(Prop("p"), Prop("q"))

    def test_case_decides_var_vs_const(self):
        assert parse("x in A") == Membership(Var("x"), Const("A"))
        assert parse("B in A") == Membership(Const("B"), Const("A"))

    def test_prefix_connectives(self):
        assert parse("~p") == Neg(Prop("p"))
        assert parse("-p") == CNeg(Prop("p"))
        assert parse("!p") == Bang(Prop("p"))
        assert parse("?p") == Query(Prop("p"))
        assert parse("o p") == Circ(Prop("p"))
        assert parse("~-!?o p") == Neg(CNeg(Bang(Query(Circ(Prop("p"))))))

    def test_binary_connectives(self):
        assert parse("p /\\ q") == Conj(Prop("p"), Prop("q"))
        assert parse("p & q") == Amp(Prop("p"), Prop("q"))
        assert parse("p \\/ q") == Disj(Prop("p"), Prop("q"))
        assert parse("p -> q") == Imp(Prop("p"), Prop("q"))
        assert parse("p => q") == StrongImp(Prop("p"), Prop("q"))
        assert parse("p <-> q") == Iff(Prop("p"), Prop("q"))
        assert parse("p <=> q") == StrongIff(Prop("p"), Prop("q"))

    def test_precedence_ladder(self):
        assert parse("~p & q") == Amp(Neg(Prop("p")), Prop("q"))
        assert parse("p & q \\/ r") == Disj(Amp(Prop("p"), Prop("q")), Prop("r"))
        assert parse("p \\/ q -> r") == Imp(Disj(Prop("p"), Prop("q")), Prop("r"))
        assert parse("p -> q <-> r") == Iff(Imp(Prop("p"), Prop("q")), Prop("r"))

    def test_and_or_left_associative(self):
        assert parse("p & q /\\ r") == Conj(Amp(Prop("p"), Prop("q")), Prop("r"))
        assert parse("p \\/ q \\/ r") == Disj(Disj(Prop("p"), Prop("q")), Prop("r"))

    def test_implication_right_associative(self):
        assert parse("p -> q -> r") == Imp(Prop("p"), Imp(Prop("q"), Prop("r")))
        assert parse("p -> q => r") == Imp(Prop("p"), StrongImp(Prop("q"), Prop("r")))

    def test_iff_does_not_chain(self):
        with pytest.raises(ParseError):
            parse("p <-> q <-> r")

    def test_quantifier_body_extends_right(self):
        got = parse("forall x . p -> q")
        assert got == Forall("x", Imp(Prop("p"), Prop("q")))
        got = parse("p & exists x . q \\/ r")
        assert got == Amp(Prop("p"), Exists("x", Disj(Prop("q"), Prop("r"))))

    def test_restricted_forall_desugars_to_implication(self):
        got = parse("forall x in A . x = y")
        assert got == Forall("x", Imp(Membership(x, A), Equality(x, y)))

    def test_restricted_exists_desugars_to_amp(self):
        got = parse("exists x in A . x = y")
        assert got == Exists("x", Amp(Membership(x, A), Equality(x, y)))

    def test_parentheses(self):
        assert parse("p & (q \\/ r)") == Amp(Prop("p"), Disj(Prop("q"), Prop("r")))

    def test_error_position_and_expectations(self):
        with pytest.raises(ParseError) as exc:
            parse("p & ")
        assert exc.value.position == 4
        assert "formula" in exc.value.expected
        with pytest.raises(ParseError) as exc:
            parse("p q")
        assert exc.value.position == 2
        with pytest.raises(ParseError) as exc:
            parse("p # q")
        assert exc.value.position == 2


class TestDesugaring:
    def test_desugar_restricted(self):
        sugar = ExistsIn("x", A, Equality(x, y))
        assert desugar(sugar) == Exists("x", Amp(Membership(x, A), Equality(x, y)))
        sugar2 = ForallIn("x", A, Bottom())
        assert desugar(sugar2) == Forall("x", Imp(Membership(x, A), Bottom()))

    def test_parsed_trees_are_sugar_free(self):
        rng = random.Random(20)
        texts = ["forall x in A . exists y in B . x = y",
                 "~ forall x in A . x notin B"]
        texts += [render(random_formula(rng)) for _ in range(200)]
        for text in texts:
            assert _sugar_free(parse(text))


def _sugar_free(f) -> bool:
    if isinstance(f, (ForallIn, ExistsIn)):
        return False
    if isinstance(f, (Neg, CNeg, Bang, Query, Circ)):
        return _sugar_free(f.body)
    if isinstance(f, (Conj, Amp, Disj, Imp, StrongImp, Iff, StrongIff)):
        return _sugar_free(f.left) and _sugar_free(f.right)
    if isinstance(f, (Forall, Exists)):
        return _sugar_free(f.body)
    return True


class TestRendering:
    def test_bottom(self):
        assert render(Bottom()) == "false"

    def test_amp_renders_with_ampersand(self):
        assert render(Amp(Prop("a"), Prop("b"))) == "a & b"

    def test_minimal_parentheses(self):
        assert render(parse("p & q \\/ r")) == "p & q \\/ r"
        assert render(parse("p & (q \\/ r)")) == "p & (q \\/ r)"
        assert render(parse("~(p & q)")) == "~(p & q)"
        assert render(parse("p -> q -> r")) == "p -> q -> r"
        assert render(parse("(p -> q) -> r")) == "(p -> q) -> r"

    def test_negated_atoms_render_as_their_abbreviations(self):
        assert render(parse("x notin A")) == "x notin A"
        assert render(parse("x != y")) == "x != y"

    def test_round_trip_on_random_formulas(self):
        rng = random.Random(7)
        for _ in range(1000):
            f = random_formula(rng)
            assert parse(render(f)) == desugar(f)

    def test_round_trip_is_identity_on_parsed_trees(self):
        rng = random.Random(8)
        for _ in range(300):
            f = parse(render(random_formula(rng)))
            assert parse(render(f)) == f
