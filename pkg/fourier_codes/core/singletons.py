""" A decorator for classes with a single, lazily created instance. """


class Singleton:
    """ Wrap a class so that it is instantiated at most once.

    The decorated class must be constructible without arguments. Obtain the
    instance with ``get_instance``; calling the decorated name directly raises
    a TypeError. The decorated class cannot be subclassed.
    """
    def __init__(self, decorated):
        self._decorated = decorated
        self._instance = None

    def get_instance(self):
        """ Return the instance, creating it on the first call. """
        if self._instance is None:
            self._instance = self._decorated()
        return self._instance

    def __call__(self):
        raise TypeError('Singletons must be accessed through '
                        '`get_instance()`.')

    def __instancecheck__(self, inst):
        return isinstance(inst, self._decorated)
