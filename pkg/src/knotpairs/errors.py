"""Exception hierarchy shared across the package."""


class KnotPairsError(Exception):
    pass


class PresentationError(KnotPairsError, ValueError):
    """Malformed presentation, word, or map."""


class UndeclaredSymbolError(PresentationError):
    def __init__(self, symbol: str, where: str = ""):
        self.symbol = symbol
        msg = f"undeclared symbol {symbol!r}"
        super().__init__(f"{msg} in {where}" if where else msg)


class DuplicateGeneratorError(PresentationError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"duplicate generator {name!r}")


class ParseError(PresentationError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
