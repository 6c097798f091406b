from src.domain.shared.exceptions import (
    EXIT_RANGE_GUARD,
    OracleDisagreementError,
    ValidationError,
)


class HomologiaException(ValidationError):
    """Excepcion base para los errores del motor de homologia."""

    def __init__(self, message: str = "Error en el calculo de homologia"):
        self.message = message
        super().__init__(self.message)


class AlgebraNoSoportadaException(HomologiaException):
    """Excepcion lanzada cuando el algebra o el anillo no estan implementados."""

    def __init__(self, algebra: str, reason: str):
        self.message = f"El algebra {algebra} no se admite: {reason}"
        super().__init__(self.message)


class FueraDeRangoException(HomologiaException):
    """Excepcion lanzada cuando el tamaño o el grado quedan fuera del rango implementado."""

    exit_code = EXIT_RANGE_GUARD

    def __init__(self, algebra: str, size: int, degree: int, reason: str):
        self.message = f"{algebra} con tamaño {size} y k={degree} fuera de rango: {reason}"
        super().__init__(self.message)


class CorridaPesadaException(HomologiaException):
    """Excepcion lanzada cuando una corrida supera el umbral de columnas sin --heavy."""

    exit_code = EXIT_RANGE_GUARD

    def __init__(self, columns: int, threshold: int):
        self.message = (
            f"La corrida genera {columns} columnas (umbral {threshold}); use --heavy para lanzarla"
        )
        super().__init__(self.message)


class MatrizDemasiadoGrandeException(HomologiaException):
    """Excepcion lanzada cuando la fase densa de Smith supera la guarda de tamaño."""

    exit_code = EXIT_RANGE_GUARD

    def __init__(self, rows: int, columns: int, limit: int):
        self.message = f"Smith denso sobre {rows}x{columns} supera el limite de {limit} columnas"
        super().__init__(self.message)


class PrimoInvalidoException(HomologiaException):
    """Excepcion lanzada cuando el modulo de reduccion no es primo."""

    def __init__(self, value: int):
        self.message = f"{value} no es primo"
        super().__init__(self.message)


class PrimosDiscordantesException(OracleDisagreementError):
    """Excepcion lanzada cuando el rango no coincide entre primos."""

    def __init__(self, ranks: dict[int, int]):
        detail = ", ".join(f"p={p}: {r}" for p, r in ranks.items())
        super().__init__(
            message=f"Los rangos modulares no coinciden ({detail})",
            details={"ranks": {str(p): r for p, r in ranks.items()}},
        )


class ModuloInvalidoException(HomologiaException):
    """Excepcion lanzada cuando los generadores no actuan sobre el modulo."""

    def __init__(self, name: str, reason: str):
        self.message = f"Modulo {name} invalido: {reason}"
        super().__init__(self.message)


class EnsambladoDiscordanteException(OracleDisagreementError):
    """Excepcion lanzada cuando dos caminos independientes dan dimensiones distintas."""

    def __init__(self, what: str, expected: int, obtained: int):
        super().__init__(
            message=f"{what}: se obtuvo {obtained} y se esperaba {expected}",
            details={"what": what, "expected": expected, "obtained": obtained},
        )
