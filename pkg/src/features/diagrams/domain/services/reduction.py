"""Reduccion de una arana a forma estandar modulo corchetes.

Cada arana pendiente se procesa asi:

1. si esta en forma estandar va al resto;
2. si es separable se corta en un solo corchete;
3. si no tiene cuerdas simples se corta el par de los dos primeros vertices;
4. si no, se toma la configuracion F_l de mayor nivel y se aplica el caso II
   (|X| >= 2, se corta X) o III-c (X = v con v multiple, se corta Y).

Los casos I, III-a y III-b no reescriben: caen en 1, 2 o en un F_{l+1}.
El caso II no sube la multiplicidad y sube el nivel; III-c la baja.
"""

import logging
from collections import deque

from src.config.settings import settings
from src.features.diagrams.domain.entities import (
    CertificationReport,
    CertificationRoute,
    ConfigurationState,
    ReductionCertificate,
    VertexClass,
)
from src.features.diagrams.domain.exceptions import (
    ConfiguracionInvalidaException,
    GeneroInsuficienteException,
    ReduccionIncompletaException,
)
from src.features.diagrams.domain.services.chord_diagrams import (
    chord_diagram_of,
    classify_vertices,
    fresh_color,
    is_standard_form,
    match_standard_form,
    multiplicity,
    normalize_standard_form,
)
from src.features.diagrams.domain.services.rewriting import (
    CertificateBuilder,
    chord_cycle,
    splice,
)
from src.features.free_algebra.domain.entities import Coefficient
from src.features.symplectic.domain.entities import Spider

logger = logging.getLogger(__name__)


def read_configuration(
    colors: tuple[int, ...], offset: int, level: int
) -> ConfigurationState | None:
    """Lee F_level en la rotacion que empieza en `offset`, o None si no encaja."""
    size = len(colors)
    rotation = colors[offset:] + colors[:offset]
    if 2 * level > size:
        return None
    chain = (rotation[0],) + tuple(rotation[2 * i - 3] for i in range(2, level + 1))
    prefix = [chain[0]]
    for previous, current in zip(chain, chain[1:]):
        prefix += [current, -previous]
    if tuple(prefix) != rotation[: len(prefix)]:
        return None
    rest = rotation[len(prefix) :]
    if -chain[-1] not in rest:
        return None
    end = rest.index(-chain[-1])
    try:
        return ConfigurationState(
            chain=chain, inner=rest[:end], outer=rest[end + 1 :], offset=offset
        )
    except ConfiguracionInvalidaException:
        return None


def configurations(spider: Spider) -> list[ConfigurationState]:
    """Todas las configuraciones F_l, de mayor a menor nivel."""
    colors = spider.colors
    found = []
    for offset in range(len(colors)):
        level = 1
        while (state := read_configuration(colors, offset, level)) is not None:
            found.append(state)
            level += 1
    found.sort(key=lambda state: -state.level)
    return found


def _rewrite(spider: Spider) -> tuple[ReductionCertificate, bool]:
    """Un paso de la reduccion sobre una arana ni estandar ni separable.

    Devuelve el fragmento y si fue un paso III-c.
    """
    colors = spider.colors
    n = fresh_color(colors, spider.genus)
    states = configurations(spider)
    if not states:
        return splice(spider, 0, 2, n), False
    classes = classify_vertices(chord_diagram_of(spider))
    size = len(colors)
    for state in states:
        inner, outer = state.inner, state.outer
        if len(inner) >= 2:
            start = (state.offset + state.inner_start()) % size
            return splice(spider, start, len(inner), n), False
        if len(inner) == 1:
            position = (state.offset + state.inner_start()) % size
            if classes[position] == VertexClass.MULTIPLE_PAIRED and len(outer) >= 2:
                start = (state.offset + state.outer_start()) % size
                return splice(spider, start, len(outer), n), True
    raise ReduccionIncompletaException(colors, "ninguna configuracion admite un paso")


def check_reduction_range(spider: Spider) -> None:
    if spider.degree < 3 or spider.genus < spider.degree + 3:
        raise GeneroInsuficienteException(spider.genus, spider.degree)


def reduce_to_standard(spider: Spider) -> ReductionCertificate:
    """Escribe S como suma de corchetes mas aranas en forma estandar."""
    check_reduction_range(spider)
    builder = CertificateBuilder(spider)
    initial = builder.max_multiplicity
    budget = (len(spider.colors) + initial) * settings.REDUCTION_STEP_FACTOR
    # arana -> (coeficiente, pasos III-c en su rama)
    pending: dict[Spider, tuple[Coefficient, int]] = {spider: (1, 0)}
    order: deque[Spider] = deque([spider])
    while order:
        current = order.popleft()
        if current not in pending:
            continue
        coefficient, backtracks = pending.pop(current)
        if coefficient == 0:
            continue
        builder.steps += 1
        if builder.steps > budget:
            raise ReduccionIncompletaException(spider.colors, f"presupuesto de {budget} pasos")
        diagram = chord_diagram_of(current)
        builder.max_multiplicity = max(builder.max_multiplicity, multiplicity(diagram))
        builder.max_backtracks = max(builder.max_backtracks, backtracks)
        if is_standard_form(diagram) is not None:
            builder.add_remainder(current, coefficient)
            continue
        if builder.split(current, coefficient):
            continue
        fragment, backtrack = _rewrite(current)
        builder.absorb(fragment, coefficient)
        depth = backtracks + int(backtrack)
        logger.debug(
            f"{current}: m={multiplicity(diagram)}, {len(fragment.remainder)} correcciones"
            f"{' (III-c)' if backtrack else ''}"
        )
        for term, c in fragment.remainder:
            previous, previous_depth = pending.get(term, (0, 0))
            if term not in pending:
                order.append(term)
            pending[term] = (previous + coefficient * c, max(previous_depth, depth))
    certificate = builder.build()
    logger.info(
        f"Reduccion de {spider}: {len(certificate.brackets)} corchetes, "
        f"{len(certificate.remainder)} restos, {certificate.steps} pasos"
    )
    return certificate


def _route(remaining: list[Spider], degree: int) -> CertificationRoute:
    if not remaining:
        return CertificationRoute.CYCLING
    if degree % 4 == 2:
        return CertificationRoute.MIRROR
    return CertificationRoute.PARITY


def certify_in_bracket_image(spider: Spider) -> CertificationReport:
    """Reduccion seguida de un ciclado de cada resto en forma estandar.

    Lo que sobrevive al ciclado son cadenas pares (k = 2, 3 mod 4); su pertenencia
    a la imagen se comprueba por rango aparte.
    """
    reduction = reduce_to_standard(spider)
    builder = CertificateBuilder(spider)
    builder.absorb(reduction, 1)
    builder.steps = reduction.steps
    builder.max_backtracks = reduction.max_backtracks
    builder.max_multiplicity = reduction.max_multiplicity
    cycled = []
    for term, coefficient in reduction.remainder:
        match = match_standard_form(term.colors)
        if match is None or len(match[1]) < 2:
            builder.add_remainder(term, coefficient)
            continue
        fragment = chord_cycle(term)
        cycled.append(term)
        builder.absorb(fragment, coefficient)
        builder.steps += fragment.steps
        for rest, c in fragment.remainder:
            builder.add_remainder(rest, coefficient * c)
    certificate = builder.build()
    remaining = [term for term, _ in certificate.remainder]
    route = _route(remaining, spider.degree)
    normal_forms = {
        term: normalize_standard_form(term)
        for term in remaining
        if match_standard_form(term.colors) is not None
    }
    logger.info(f"{spider}: ruta {route.value}, {len(remaining)} restos tras el ciclado")
    return CertificationReport(
        certificate=certificate,
        route=route,
        residue=spider.degree % 4,
        cycled=cycled,
        in_bracket_image=True if not remaining else None,
        normal_forms=normal_forms,
    )
