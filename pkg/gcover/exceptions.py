class BadConfigError(Exception):
    """
    Raised when a config file is misformatted or mis-typed.
    """
    pass


class GroupSpecError(Exception):
    """
    Base class for anything wrong with a textual group specification.
    """

    def __init__(self, message, text=None):
        super(GroupSpecError, self).__init__(message)
        self.message = message
        self.text = text


class GroupSpecSyntaxError(GroupSpecError):
    """
    Raised by the spec parser when the text does not match the grammar.
    """

    def __init__(self, message, text=None, position=None):
        super(GroupSpecSyntaxError, self).__init__(message, text=text)
        self.position = position

    def __str__(self):
        if self.position is None:
            return self.message
        return "{} at position {}".format(self.message, self.position)


class ConstructorError(GroupSpecError):
    """
    Raised when a group constructor's preconditions are violated (odd dihedral
    order, non-prime elementary abelian base, bad semidirect action...).
    """

    def __init__(self, message, atom=None):
        super(ConstructorError, self).__init__(message)
        self.atom = atom

    def __str__(self):
        if self.atom is None:
            return self.message
        return "{} (in {})".format(self.message, self.atom)


class TableCapExceeded(Exception):
    """
    Raised when a table or search would grow past its configured size cap.
    """

    def __init__(self, order, cap, what="group table"):
        super(TableCapExceeded, self).__init__(
            "{} of order {} exceeds the cap of {}".format(what, order, cap),
        )
        self.order = order
        self.cap = cap
        self.what = what


class ParentMismatchError(ValueError):
    """
    Raised when subgroups of different parent groups are combined.
    """


class NotNormalError(ValueError):
    """
    Raised when a quotient is requested by a subgroup that is not normal.
    """


class NotAPGroupError(ValueError):
    """
    Raised when a p-group was required (generator counts, Sylow parts).
    """


class CoprimeError(ValueError):
    """
    Raised when direct-product parts do not have pairwise coprime orders.
    """


class VerificationFailure(Exception):
    """
    Raised by a verification suite check when a predicate does not hold.
    Carries the witness that falsifies it.
    """

    def __init__(self, message, witness=None):
        super(VerificationFailure, self).__init__(message)
        self.message = message
        self.witness = witness or {}


class InvalidTableError(ValueError):
    """
    Raised when a multiplication table breaks a group axiom (identity at 0,
    Latin square, associativity, inverses).
    """
