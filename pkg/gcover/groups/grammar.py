"""
Parser for the textual group specification grammar:

    expr   := factor ( "x" factor )*
    factor := atom ( "^" int )?
    atom   := "C" int | "D" int | "Q" int | "S" int | "A" int
            | "E(" int "," int ")" | "SD(" int "," int "," int ")"
            | "(" expr ")"

Whitespace is insignificant, products are left-associative and the power
shorthand "C2^3" expands to C2 x C2 x C2 at parse time. Exponents large
enough to put any nontrivial base over the table cap raise TableCapExceeded
before expanding.
"""
import attr

from . import constructors
from .table import table_cap
from ..exceptions import ConstructorError, GroupSpecSyntaxError, TableCapExceeded


LETTER_ATOMS = {
    "C": constructors.build_cyclic,
    "D": constructors.build_dihedral,
    "Q": constructors.build_generalized_quaternion,
    "S": constructors.build_symmetric,
    "A": constructors.build_alternating,
}
CALL_ATOMS = {
    "E": (2, constructors.build_elementary_abelian),
    "SD": (3, constructors.build_semidirect_cyclic),
}
PRODUCT_SIGNS = ("x", "X")


@attr.s(frozen=True)
class Token:
    kind = attr.ib()
    value = attr.ib()
    position = attr.ib()


@attr.s(frozen=True)
class Atom:
    """
    A leaf constructor call, e.g. kind "D" with params (8,).
    """
    kind = attr.ib()
    params = attr.ib(converter=tuple)
    position = attr.ib(default=0, eq=False)

    def normalized(self):
        if self.kind in CALL_ATOMS:
            return "{}({})".format(self.kind, ",".join(str(p) for p in self.params))
        return "{}{}".format(self.kind, self.params[0])

    def evaluate(self):
        if self.kind in CALL_ATOMS:
            builder = CALL_ATOMS[self.kind][1]
        else:
            builder = LETTER_ATOMS[self.kind]
        try:
            return builder(*self.params)
        except ConstructorError as e:
            raise ConstructorError(e.message, atom="{} at position {}".format(self.normalized(), self.position))


@attr.s(frozen=True)
class Product:
    """
    Binary direct product node.
    """
    left = attr.ib()
    right = attr.ib()

    def normalized(self):
        return constructors.product_spec(self.left.normalized(), self.right.normalized())

    def evaluate(self):
        return constructors.build_direct_product(self.left.evaluate(), self.right.evaluate())


def tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        char = text[i]
        if char.isspace():
            i += 1
        elif char.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(Token("int", int(text[start:i]), start))
        elif text.startswith("SD", i):
            tokens.append(Token("name", "SD", i))
            i += 2
        elif char in LETTER_ATOMS or char in CALL_ATOMS:
            tokens.append(Token("name", char, i))
            i += 1
        elif char in PRODUCT_SIGNS:
            tokens.append(Token("times", char, i))
            i += 1
        elif char in "(),^":
            tokens.append(Token(char, char, i))
            i += 1
        else:
            raise GroupSpecSyntaxError("Unexpected character {!r}".format(char), text=text, position=i)
    tokens.append(Token("end", None, len(text)))
    return tokens


class Parser:
    """
    Recursive-descent parser producing an Atom/Product tree.
    """

    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.position = 0

    @property
    def current(self):
        return self.tokens[self.position]

    def fail(self, message, token=None):
        token = token or self.current
        raise GroupSpecSyntaxError(message, text=self.text, position=token.position)

    def expect(self, kind, what=None):
        token = self.current
        if token.kind != kind:
            found = "end of input" if token.kind == "end" else repr(token.value)
            self.fail("Expected {}, found {}".format(what or kind, found))
        self.position += 1
        return token

    def parse(self):
        if self.current.kind == "end":
            self.fail("Empty group specification")
        tree = self.expr()
        if self.current.kind != "end":
            self.fail("Unexpected {!r}".format(self.current.value))
        return tree

    def expr(self):
        tree = self.factor()
        while self.current.kind == "times":
            self.position += 1
            tree = Product(tree, self.factor())
        return tree

    def factor(self):
        base = self.atom()
        if self.current.kind != "^":
            return base
        self.position += 1
        exponent = self.expect("int", "an exponent after '^'")
        if exponent.value < 1:
            self.fail("Power exponent must be at least 1", exponent)
        cap = table_cap()
        # Even a base of order 2 would pass the cap; stop before expanding
        if exponent.value >= cap.bit_length():
            raise TableCapExceeded("at least 2^{}".format(exponent.value), cap)
        tree = base
        for _ in range(exponent.value - 1):
            tree = Product(tree, base)
        return tree

    def atom(self):
        token = self.current
        if token.kind == "(":
            self.position += 1
            tree = self.expr()
            self.expect(")", "')'")
            return tree
        if token.kind != "name":
            self.fail("Expected a group atom, found {}".format(
                "end of input" if token.kind == "end" else repr(token.value),
            ))
        self.position += 1
        if token.value in CALL_ATOMS:
            arity = CALL_ATOMS[token.value][0]
            self.expect("(", "'(' after {}".format(token.value))
            params = [self.expect("int", "an integer").value]
            for _ in range(arity - 1):
                self.expect(",", "','")
                params.append(self.expect("int", "an integer").value)
            self.expect(")", "')'")
            return Atom(token.value, params, token.position)
        number = self.expect("int", "an integer after {}".format(token.value))
        return Atom(token.value, [number.value], token.position)


def parse_ast(text):
    """
    Parses spec text into its expression tree without building any table.
    """
    return Parser(text).parse()


def normalize_spec(text):
    return parse_ast(text).normalized()


def parse_group_spec(text):
    """
    Parses and evaluates a group specification, returning a GroupTable whose
    spec is the normalized form of `text`.
    """
    tree = parse_ast(text)
    return tree.evaluate().with_spec(tree.normalized())
