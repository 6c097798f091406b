import enum


# Algebras graduadas que sabe construir la herramienta
class AlgebraKind(str, enum.Enum):
    ASSOC = "assoc"
    LIE = "lie"
    SYMP = "symp"
    LIE_SYMP = "lie-symp"


class Mode(str, enum.Enum):
    PLUS = "plus"  # solo parte positiva g+
    FULL = "full"  # incluye corchetes con g(0)


class Ring(str, enum.Enum):
    Z = "z"
    Q = "q"
    MODP = "modp"


class OutputFormat(str, enum.Enum):
    JSON = "json"
    CSV = "csv"


class VerifySuite(str, enum.Enum):
    IDENTITIES = "identities"
    TRACES = "traces"
    SPIDERS = "spiders"
    SLIDES = "slides"
    MIRROR = "mirror"
    REDUCTION = "reduction"


# Anillos admitidos por cada algebra.
# Las algebras simplecticas estan definidas sobre Q, no tiene sentido el retículo entero.
class AlgebraCapabilities:
    _rings: dict[AlgebraKind, set[Ring]] = {
        AlgebraKind.ASSOC: {Ring.Z, Ring.Q, Ring.MODP},
        AlgebraKind.LIE: {Ring.Z, Ring.Q, Ring.MODP},
        AlgebraKind.SYMP: {Ring.Q, Ring.MODP},
        AlgebraKind.LIE_SYMP: {Ring.Q, Ring.MODP},
    }

    _size_flag: dict[AlgebraKind, str] = {
        AlgebraKind.ASSOC: "n",
        AlgebraKind.LIE: "n",
        AlgebraKind.SYMP: "g",
        AlgebraKind.LIE_SYMP: "g",
    }

    @staticmethod
    def get_rings(kind: AlgebraKind) -> set[Ring]:
        """Obtiene el conjunto de anillos admitidos para un algebra."""
        return AlgebraCapabilities._rings.get(kind, set())

    @staticmethod
    def supports_ring(kind: AlgebraKind, ring: Ring) -> bool:
        """Verifica si un algebra admite un anillo de coeficientes."""
        return ring in AlgebraCapabilities.get_rings(kind)

    @staticmethod
    def size_flag(kind: AlgebraKind) -> str:
        """Nombre del parametro de tamaño: rango n o genero g."""
        return AlgebraCapabilities._size_flag[kind]

    @staticmethod
    def is_symplectic(kind: AlgebraKind) -> bool:
        return kind in (AlgebraKind.SYMP, AlgebraKind.LIE_SYMP)
