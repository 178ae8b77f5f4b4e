"""Exception hierarchy shared by every engine module."""


class SympError(Exception):
    """Base class for engine errors."""


class AmbientMismatch(SympError, ValueError):
    pass


class ShapeMismatch(SympError, ValueError):
    pass


class NotSymplectic(SympError, ValueError):
    """A bilinear form is not antisymmetric and nondegenerate."""


class NotLagrangian(SympError, ValueError):
    pass


class NotSymplectomorphism(SympError, ValueError):
    pass


class EndpointMismatch(SympError, ValueError):
    pass


class NotComposable(SympError, ValueError):
    pass


class QuiltError(SympError, ValueError):
    """Malformed quilt or an unsupported quilt move."""


class SignatureMismatch(QuiltError):
    pass


class DirectionMismatch(QuiltError):
    pass


class NotAStrip(QuiltError):
    pass


class NotEmbedded(SympError, ValueError):
    """A geometric composition was required to be embedded but is not.

    The offending :class:`~sympsharp.correspondence.CompositionReport`
    is kept on ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
