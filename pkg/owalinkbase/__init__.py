__all__ = [
    "exceptions",
    "geometry",
    "owa",
    "schemes",
    "sequences",
]
