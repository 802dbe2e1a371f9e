from app.core.enums import ExitCode

class ArhygarchError(Exception):
    exit_code: ExitCode = ExitCode.USAGE

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

class DomainError(ArhygarchError, ValueError):
    """Argument outside the mathematical domain of an operation."""
    exit_code = ExitCode.USAGE

class ConfigError(ArhygarchError):
    exit_code = ExitCode.USAGE

    def __init__(self, message: str, key: str | None = None, line: int | None = None):
        context = []
        if line is not None:
            context.append(f"line {line}")
        if key is not None:
            context.append(f"key '{key}'")
        prefix = f"[{', '.join(context)}] " if context else ""
        super().__init__(prefix + message)
        self.key = key
        self.line = line

class DataError(ArhygarchError):
    exit_code = ExitCode.DATA

    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        context = []
        if row is not None:
            context.append(f"row {row}")
        if column is not None:
            context.append(f"column '{column}'")
        prefix = f"[{', '.join(context)}] " if context else ""
        super().__init__(prefix + message)
        self.row = row
        self.column = column

class NumericalError(ArhygarchError):
    exit_code = ExitCode.NUMERICAL
