"""Exception types raised across the toolkit.

Everything derives from :class:`NepstemError`, which the CLI maps to a data
error (exit status 2).
"""


class NepstemError(Exception):
    pass


class EmptyAfterNormalization(NepstemError, ValueError):
    """The word consisted only of characters that normalization deletes."""


class MissingFile(NepstemError, FileNotFoundError):
    pass


class MalformedEntry(NepstemError, ValueError):
    pass


class RuleSetError(NepstemError, ValueError):
    """A rule table violates a RuleSet invariant."""


class DuplicateWord(NepstemError, ValueError):
    pass


class DuplicateId(NepstemError, ValueError):
    pass


class MalformedRecord(NepstemError, ValueError):
    pass


class EmptyCorpus(NepstemError, ValueError):
    pass


class ModeMismatch(NepstemError, ValueError):
    """Stemmed and unstemmed artifacts were combined."""


class UnlabeledDocument(NepstemError, ValueError):
    pass


class ClassTooSmall(NepstemError, ValueError):
    pass


class EmptyVocabulary(NepstemError, ValueError):
    pass


class NonPositiveAlpha(NepstemError, ValueError):
    pass
