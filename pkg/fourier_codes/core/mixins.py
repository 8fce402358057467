""" Mixins. """


class ComparableMixin:
    """ A mixin for deducing the remaining comparison operators from __lt__ and
    __eq__.

    Only ``self`` is ever put on the left-hand side, so the derived operators
    also work when ``other`` is a plain number.
    """
    def __ne__(self, other):
        return not self == other

    def __gt__(self, other):
        return not (self < other or self == other)

    def __ge__(self, other):
        return not self < other

    def __le__(self, other):
        return self < other or self == other
