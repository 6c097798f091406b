from src.domain.shared.exceptions import ValidationError


class DerivacionException(ValidationError):
    """Excepcion base para los errores de derivaciones."""

    def __init__(self, message: str = "Error en una derivacion"):
        self.message = message
        super().__init__(self.message)


class DerivacionMalFormadaException(DerivacionException):
    """Excepcion lanzada cuando los terminos no respetan el grado o el rango."""

    def __init__(self, reason: str):
        self.message = f"Derivacion mal formada: {reason}"
        super().__init__(self.message)


class GradoIncompatibleException(DerivacionException):
    """Excepcion lanzada al sumar derivaciones de grados distintos."""

    def __init__(self, left: int, right: int):
        self.message = f"Los grados no coinciden: {left} != {right}"
        super().__init__(self.message)


class GradoInvalidoException(DerivacionException):
    """Excepcion lanzada cuando una operacion exige un grado concreto."""

    def __init__(self, operation: str, expected: int, actual: int | None):
        self.message = f"{operation} exige grado {expected}, se recibio {actual}"
        super().__init__(self.message)


class IndiceNoAdmisibleException(DerivacionException):
    """Excepcion lanzada cuando no existe un indice que evite las letras del monomio."""

    def __init__(self, letters: tuple[int, ...], rank: int):
        self.message = f"No hay indice en 1..{rank} que evite {letters}"
        super().__init__(self.message)
