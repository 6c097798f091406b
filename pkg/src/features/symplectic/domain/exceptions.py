from src.domain.shared.exceptions import ValidationError


class SimplecticoException(ValidationError):
    """Excepcion base para los errores del modulo simplectico."""

    def __init__(self, message: str = "Error simplectico"):
        self.message = message
        super().__init__(self.message)


class GeneroInvalidoException(SimplecticoException):
    """Excepcion lanzada cuando el genero o el grado no son admisibles."""

    def __init__(self, genus: int, degree: int | None = None):
        if degree is None:
            self.message = f"Genero invalido: g={genus}"
        else:
            self.message = f"Parametros invalidos: g={genus}, k={degree}"
        super().__init__(self.message)


class GeneroIncompatibleException(SimplecticoException):
    """Excepcion lanzada al operar objetos de generos distintos."""

    def __init__(self, left: int, right: int):
        self.message = f"Los generos no coinciden: {left} != {right}"
        super().__init__(self.message)


class ColorFueraDeRangoException(SimplecticoException):
    """Excepcion lanzada cuando un color no esta en -g..g o es cero."""

    def __init__(self, color: int, genus: int):
        self.message = f"El color {color} no es valido para g={genus}"
        super().__init__(self.message)


class AranaInvalidaException(SimplecticoException):
    """Excepcion lanzada para aranas con menos de dos patas."""

    def __init__(self, colors: tuple[int, ...], reason: str):
        self.message = f"Arana invalida {colors}: {reason}"
        super().__init__(self.message)


class NoEsInvarianteException(SimplecticoException):
    """Excepcion lanzada cuando un tensor no es invariante por la rotacion ciclica."""

    def __init__(self, word: tuple[int, ...]):
        self.message = f"El tensor no es ciclicamente invariante en la palabra {word}"
        super().__init__(self.message)


class PermutacionInvalidaException(SimplecticoException):
    """Excepcion lanzada cuando los datos no definen una permutacion con signo."""

    def __init__(self, reason: str):
        self.message = f"Permutacion con signo invalida: {reason}"
        super().__init__(self.message)
