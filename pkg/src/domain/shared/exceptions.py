import logging
from typing import Any

logger = logging.getLogger(__name__)

# Codigos de salida del contrato de la linea de comandos
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RANGE_GUARD = 2
EXIT_ORACLE_DISAGREEMENT = 3
EXIT_AUDIT_FAILURE = 4


# Excepciones base para toda la aplicacion
class DerilabError(Exception):
    """Excepción base para todos los errores de derilab"""

    exit_code: int = EXIT_USAGE

    def __init__(
        self,
        message: str,
        details: dict[str, Any] | None = None,
        exit_code: int | None = None,
    ):
        self.message = message
        self.details = details or {}
        if exit_code is not None:
            self.exit_code = exit_code
        super().__init__(message)


class NotFoundError(DerilabError):
    """Excepción para recursos no encontrados"""

    def __init__(self, resource: str, details: dict[str, Any] | None = None):
        super().__init__(message=f"{resource} no encontrado", details=details)


class ValidationError(DerilabError):
    """Excepción para errores de validación y de uso"""

    def __init__(
        self, message: str = "Error de validacion", details: dict[str, Any] | None = None
    ):
        super().__init__(message=message, details=details)


class RangeGuardError(DerilabError):
    """Excepción para ejecuciones fuera del rango implementado"""

    exit_code = EXIT_RANGE_GUARD

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message=message, details=details)


class OracleDisagreementError(DerilabError):
    """Excepción para desacuerdos entre primos u oraculos"""

    exit_code = EXIT_ORACLE_DISAGREEMENT

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message=message, details=details)


class AuditFailureError(DerilabError):
    """Excepción para certificados o identidades que no cuadran"""

    exit_code = EXIT_AUDIT_FAILURE

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message=message, details=details)


# Manejador global de excepciones
def global_exception_handler(exc: BaseException) -> tuple[int, dict[str, Any]]:
    """Traduce una excepcion al codigo de salida y al cuerpo de error."""
    if isinstance(exc, DerilabError):
        logger.warning(f"{type(exc).__name__}: {exc.message}")
        return exc.exit_code, {
            "error": {
                "type": type(exc).__name__,
                "message": exc.message,
                "details": exc.details,
            }
        }

    # Errores inesperados
    logger.exception("Error inesperado")
    return EXIT_USAGE, {
        "error": {
            "type": type(exc).__name__,
            "message": "Error interno",
            "details": {"reason": str(exc)},
        }
    }
