"""Exception types shared across the package.

Two families, mirroring the CLI exit-code contract: ParseError covers bad
input text and unknown names (exit 2), DomainError covers violated
preconditions and domain limits (exit 3).
"""


class LoopError(Exception):
    """Base class for everything raised by this package."""


class ParseError(LoopError):
    pass


class DomainError(LoopError):
    pass


class NotLatin(ParseError):
    def __init__(self, axis, index, value, positions):
        self.axis = axis
        self.index = index
        self.value = value
        self.positions = positions
        super().__init__(
            f"{axis} {index} repeats {value} "
            f"(positions {positions[0]} and {positions[1]})"
        )


class NoIdentity(ParseError):
    def __init__(self, found=None):
        self.found = found
        if found is None:
            msg = "the table has no two-sided identity element"
        else:
            msg = (
                f"element 1 is not an identity (element {found} is); "
                f"re-parse with relabel=True (CLI: --relabel)"
            )
        super().__init__(msg)


class BadDimensions(ParseError):
    pass


class BadElementId(ParseError):
    pass


class Malformed(ParseError):
    pass


class PointOutOfRange(ParseError):
    def __init__(self, point, degree):
        self.point = point
        self.degree = degree
        super().__init__(f"point {point} outside 1..{degree}")


class OverlappingCycles(ParseError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"point {point} appears in more than one cycle")


class UnknownName(ParseError):
    def __init__(self, name, known=()):
        self.name = name
        msg = f"unknown name {name!r}"
        if known:
            msg += f" (known: {', '.join(known)})"
        super().__init__(msg)


class DegreeMismatch(DomainError):
    pass


class NoTwoSidedInverse(DomainError):
    def __init__(self, element, left_inverse, right_inverse):
        self.element = element
        self.left_inverse = left_inverse
        self.right_inverse = right_inverse
        super().__init__(
            f"element {element} has no two-sided inverse "
            f"(left inverse {left_inverse}, right inverse {right_inverse})"
        )


class NotCoprime(DomainError):
    pass


class CapExceeded(DomainError):
    def __init__(self, partial_size, cap):
        self.partial_size = partial_size
        self.cap = cap
        super().__init__(f"closure exceeded the cap of {cap} (reached {partial_size})")


class OrderTooLarge(DomainError):
    def __init__(self, order, bound):
        self.order = order
        self.bound = bound
        super().__init__(
            f"order {order} exceeds the enumeration bound {bound} "
            f"(raise it with max_order / --max-order)"
        )


class SpecInvalid(DomainError):
    pass


class NotSemiautomorphism(DomainError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"map is not a semiautomorphism (witness {witness})")


class OrderNotCoprimeTo3(DomainError):
    def __init__(self, order):
        self.order = order
        super().__init__(f"the action has order {order}, which is divisible by 3")


class NotASubloop(DomainError):
    pass


class NotMoufang(DomainError):
    def __init__(self, witness=None):
        self.witness = witness
        super().__init__(f"the loop is not Moufang (witness {witness})")


class NotNormal(DomainError):
    pass


class NotCoprimeTo3(DomainError):
    def __init__(self, order):
        self.order = order
        super().__init__(f"|<u>| = {order} is divisible by 3")


class FactorizationFailed(DomainError):
    pass


class FormulaMismatch(DomainError):
    def __init__(self, msg, witness=None):
        self.witness = witness
        super().__init__(msg if witness is None else f"{msg} (witness {witness})")
