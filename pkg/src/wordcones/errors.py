"""Exception types shared across the package."""


class WordConesError(Exception):
    """Base class for all domain errors raised by wordcones."""


class DuplicateLetterError(WordConesError):
    pass


class CycleError(WordConesError):
    """The cover pairs close to a relation violating antisymmetry."""


class UnknownLetter(WordConesError):
    pass


class AlphabetMismatch(WordConesError):
    """Operands live over different alphabets."""


class NotUpwardClosed(WordConesError):
    """A DFA annotated as upward-closed failed the closure spot check."""


class RuleInapplicable(WordConesError):
    """The requested rule cannot be scanned on this alphabet/automaton."""


class SideConditionViolated(WordConesError):
    """A rule instance was applied to letters failing its side conditions."""


class HypothesisViolated(WordConesError):
    """An operation required an alphabet class hypothesis that does not hold."""


class DoubleArcError(WordConesError):
    pass


class LoopError(WordConesError):
    pass


class UnknownVertex(WordConesError):
    pass
