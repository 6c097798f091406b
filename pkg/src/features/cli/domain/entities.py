from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SuiteOutcome:
    """Resultado de una bateria de comprobaciones con semilla fija."""

    suite: str
    seed: int
    cases: int
    failures: tuple[str, ...] = ()
    tallies: tuple[tuple[str, int], ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class DimensionRow:
    """Dimension de una pieza graduada, con su descomposicion cuando se conoce."""

    algebra: str
    size: int
    degree: int
    dimension: int
    parts: dict[str, int] = field(default_factory=dict)
