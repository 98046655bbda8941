"""Exceptions raised by shelflab."""


class ShelfLabError(Exception):
    """Base class for everything we raise on purpose."""


class PreconditionError(ShelfLabError):
    """An operation was called outside its documented domain."""


class SizeMismatchError(ShelfLabError):
    """Two structures were expected to have the same order."""
