"""
Exceptions shared across the package.

"""


class InstanceTooLargeError(ValueError):
    """
    Raised when an exact computation would exceed its enumeration cap.

    Parameters
    ----------
    what : str
        Name of the quantity that is too large.

    size : scalar(int)
        Computed size of the instance.

    limit : scalar(int)
        The cap that was exceeded.

    """

    def __init__(self, what, size, limit):
        self.what = what
        self.size = size
        self.limit = limit
        msg = '{0} = {1} exceeds the limit {2}'.format(what, size, limit)
        super().__init__(msg)
