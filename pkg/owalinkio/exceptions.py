# -*- coding: utf-8 -*-
class BaseException(Exception):
    """Base exception class."""


class ParseError(BaseException):
    """Input file cannot be parsed; the message names the file and line."""

    def __init__(self, path, line: int, message: str):
        self.path = str(path)
        self.line = line
        self.message = message
        super().__init__("{}:{}: {}".format(self.path, line, message))
