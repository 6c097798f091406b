from src.domain.shared.exceptions import ValidationError


class AlgebraLibreException(ValidationError):
    """Excepcion base para los errores del algebra libre."""

    def __init__(self, message: str = "Error en el algebra libre"):
        self.message = message
        super().__init__(self.message)


class RangoInvalidoException(AlgebraLibreException):
    """Excepcion lanzada cuando el rango o el grado pedidos no son admisibles."""

    def __init__(self, rank: int, degree: int | None = None):
        if degree is None:
            self.message = f"Rango invalido: n={rank}"
        else:
            self.message = f"Parametros invalidos: n={rank}, k={degree}"
        super().__init__(self.message)


class RangoIncompatibleException(AlgebraLibreException):
    """Excepcion lanzada al operar elementos de rangos distintos."""

    def __init__(self, left: int, right: int):
        self.message = f"Los rangos no coinciden: {left} != {right}"
        super().__init__(self.message)


class LetraFueraDeRangoException(AlgebraLibreException):
    """Excepcion lanzada cuando una letra no pertenece al alfabeto 1..n."""

    def __init__(self, letter: int, rank: int):
        self.message = f"La letra {letter} no esta en el alfabeto 1..{rank}"
        super().__init__(self.message)


class PalabraInvalidaException(AlgebraLibreException):
    """Excepcion lanzada para palabras vacias o que no son de Lyndon."""

    def __init__(self, word: tuple[int, ...], reason: str = "palabra vacia"):
        self.message = f"Palabra invalida {word}: {reason}"
        super().__init__(self.message)


class NoEsElementoDeLieException(AlgebraLibreException):
    """Excepcion lanzada cuando un tensor no esta en la imagen del algebra de Lie libre."""

    def __init__(self, word: tuple[int, ...]):
        self.message = f"El tensor no es un polinomio de Lie: sobra la palabra {word}"
        super().__init__(self.message)
