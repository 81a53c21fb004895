"""hoplift: exact construction and representation theory of liftings of
quantum linear spaces and their Drinfel'd quantum doubles."""

__version__ = "0.1.0"
