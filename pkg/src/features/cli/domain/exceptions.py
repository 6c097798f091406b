from src.domain.shared.exceptions import AuditFailureError, ValidationError


class LineaDeComandosException(ValidationError):
    """Excepcion base para los errores de uso de la linea de comandos."""

    def __init__(self, message: str = "Uso incorrecto de derilab"):
        self.message = message
        super().__init__(self.message)


class SuiteDesconocidaException(LineaDeComandosException):
    """Excepcion lanzada cuando se pide una bateria que no existe."""

    def __init__(self, suite: str, known: list[str]):
        self.message = f"Bateria '{suite}' desconocida; disponibles: {', '.join(known)}"
        super().__init__(self.message)


class SuiteFallidaException(AuditFailureError):
    """Excepcion lanzada cuando alguna comprobacion de una bateria no se cumple."""

    def __init__(self, suite: str, failures: list[str]):
        super().__init__(
            message=f"La bateria {suite} fallo en {len(failures)} casos",
            details={"suite": suite, "failures": failures[:20]},
        )
