__all__ = [
    "consts",
    "exceptions",
    "readers",
    "writers",
]
