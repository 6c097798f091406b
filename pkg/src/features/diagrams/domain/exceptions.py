from src.domain.shared.exceptions import (
    EXIT_AUDIT_FAILURE,
    EXIT_RANGE_GUARD,
    AuditFailureError,
    ValidationError,
)


class DiagramaException(ValidationError):
    """Excepcion base para los errores de diagramas de cuerdas."""

    def __init__(self, message: str = "Error en el diagrama de cuerdas"):
        self.message = message
        super().__init__(self.message)


class SinColorLibreException(DiagramaException):
    """Excepcion lanzada cuando no queda un indice libre para la cuerda nueva."""

    exit_code = EXIT_RANGE_GUARD

    def __init__(self, colors: tuple[int, ...], genus: int):
        self.message = (
            f"No hay color libre para {colors} con g={genus}; hace falta g >= k+3"
        )
        super().__init__(self.message)


class GeneroInsuficienteException(DiagramaException):
    """Excepcion lanzada cuando el genero no cubre el rango de la reduccion."""

    exit_code = EXIT_RANGE_GUARD

    def __init__(self, genus: int, degree: int):
        self.message = (
            f"La reduccion necesita g >= k+3: g={genus}, k={degree} (minimo g={degree + 3})"
        )
        super().__init__(self.message)


class ArcoNoAdmisibleException(DiagramaException):
    """Excepcion lanzada cuando un arco corta cuerdas o deja una region pequeña."""

    def __init__(self, colors: tuple[int, ...], arc: tuple[int, int]):
        self.message = f"El arco {arc} no separa el diagrama {colors}"
        super().__init__(self.message)


class SitioNoAdmisibleException(DiagramaException):
    """Excepcion lanzada cuando el par de vertices no admite un deslizamiento."""

    def __init__(self, colors: tuple[int, ...], site: int, reason: str):
        self.message = f"Sitio {site} no admisible en {colors}: {reason}"
        super().__init__(self.message)


class NoEsFormaEstandarException(DiagramaException):
    """Excepcion lanzada cuando se espera un diagrama en forma estandar."""

    def __init__(self, colors: tuple[int, ...]):
        self.message = f"El diagrama {colors} no esta en forma estandar"
        super().__init__(self.message)


class ReduccionIncompletaException(DiagramaException):
    """Excepcion lanzada cuando la reduccion agota su presupuesto o cae fuera de los casos."""

    exit_code = EXIT_AUDIT_FAILURE

    def __init__(self, colors: tuple[int, ...], reason: str):
        self.message = f"La reduccion de {colors} no termino: {reason}"
        super().__init__(self.message)


class CertificadoInvalidoException(AuditFailureError):
    """Excepcion lanzada cuando un certificado no cuadra como identidad tensorial."""

    def __init__(self, spider: str, residual_terms: int):
        super().__init__(
            message=f"El certificado de {spider} no cuadra: {residual_terms} terminos residuales",
            details={"spider": spider, "residual_terms": residual_terms},
        )


class ConfiguracionInvalidaException(DiagramaException):
    """Excepcion lanzada cuando una cadena F_l no cumple sus invariantes."""

    def __init__(self, chain: tuple[int, ...], reason: str):
        self.message = f"Configuracion F_{len(chain)} invalida con cadena {chain}: {reason}"
        super().__init__(self.message)
