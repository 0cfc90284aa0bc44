"""Exception hierarchy. Every error raised by the package derives from :class:`DigraphError`."""


class DigraphError(ValueError):
    pass


class LoopArc(DigraphError):
    pass


class VertexOutOfRange(DigraphError):
    pass


class OrderTooLarge(DigraphError):
    pass


class EmptyJumpSet(DigraphError):
    pass


class JumpOutOfRange(DigraphError):
    pass


class ZeroPartSize(DigraphError):
    pass


class LengthOutOfRange(DigraphError):
    pass


class PreconditionViolated(DigraphError):
    pass


class NonHereditaryPruneRequested(DigraphError):
    pass


class UnknownPredicate(DigraphError):
    pass


class UnknownSuite(DigraphError):
    pass


class UnknownLemma(DigraphError):
    pass


class FormatError(DigraphError):
    """Base class for digraph6 / edge-list decoding failures."""


class MalformedHeader(FormatError):
    pass


class TrailingBitsNonzero(FormatError):
    pass


class TruncatedPayload(FormatError):
    pass
