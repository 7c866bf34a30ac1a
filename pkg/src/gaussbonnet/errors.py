"""Exception hierarchy shared by the library and the command line."""


class GaussBonnetError(Exception):
    pass


class InvalidInputError(GaussBonnetError, ValueError):
    pass


class ResourceLimitError(GaussBonnetError):
    pass


class NotFoundError(GaussBonnetError, KeyError):
    def __str__(self):
        # KeyError would repr() the message
        return str(self.args[0]) if self.args else ""


class ParseError(GaussBonnetError):
    """Case-file or point-spec syntax error, with a 1-based position."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self):
        if self.line is None:
            return self.message
        col = self.column if self.column is not None else 1
        return f"line {self.line}, column {col}: {self.message}"
