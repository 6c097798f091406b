"""Analisis de diagramas de cuerdas: clases de vertices, multiplicidad, separabilidad,
forma estandar y frontera interior de la superficie engordada."""

import logging

from src.features.diagrams.domain.entities import ChordDiagram, VertexClass
from src.features.diagrams.domain.exceptions import (
    ArcoNoAdmisibleException,
    NoEsFormaEstandarException,
    SinColorLibreException,
)
from src.features.symplectic.domain.entities import Spider
from src.features.symplectic.domain.services.spiders import normalize_chain_colors

logger = logging.getLogger(__name__)

Arc = tuple[int, int]

# Cola de cada patron despues de la cadena c1, c2, -c1, ..., c_m, -c_{m-1}:
# "d" es un vertice blanco, "c" es -c_m
STANDARD_TAILS: dict[int, tuple[str, ...]] = {
    1: ("d", "c", "d"),
    2: ("d", "c"),
    3: ("c", "d"),
    4: ("c",),
}


def chord_diagram_of(spider: Spider) -> ChordDiagram:
    colors = spider.colors
    chords = tuple(
        (p, q)
        for p in range(len(colors))
        for q in range(p + 1, len(colors))
        if colors[p] == -colors[q]
    )
    return ChordDiagram(spider=spider, chords=chords)


def multiplicity(diagram: ChordDiagram) -> int:
    """m(C) = 2 (numero de cuerdas) - (vertices con cuerda)."""
    return 2 * len(diagram.chords) - len(diagram.chorded_vertices())


def classify_vertices(diagram: ChordDiagram) -> list[VertexClass]:
    partners = [diagram.partners(p) for p in range(len(diagram))]
    classes = []
    for own in partners:
        if not own:
            classes.append(VertexClass.UNPAIRED)
        elif len(own) == 1 and len(partners[own[0]]) == 1:
            classes.append(VertexClass.SINGLE_PAIRED)
        else:
            classes.append(VertexClass.MULTIPLE_PAIRED)
    return classes


def _arc_is_admissible(diagram: ChordDiagram, arc: Arc) -> bool:
    start, stop = arc
    size = len(diagram)
    if not 0 <= start < stop < size + 1 or stop - start < 2 or size - (stop - start) < 2:
        return False
    return all((start <= p < stop) == (start <= q < stop) for p, q in diagram.chords)


def is_separable(diagram: ChordDiagram) -> Arc | None:
    """Primer arco admisible (start, stop): la region son los vertices start..stop-1.

    Los extremos son huecos: el hueco i esta justo antes del vertice i.
    """
    size = len(diagram)
    for start in range(size):
        for stop in range(start + 2, size + 1):
            if _arc_is_admissible(diagram, (start, stop)):
                return start, stop
    return None


def fresh_color(colors: tuple[int, ...], genus: int) -> int:
    """Menor indice positivo que no usa la arana."""
    used = {abs(c) for c in colors}
    for index in range(1, genus + 1):
        if index not in used:
            return index
    raise SinColorLibreException(colors, genus)


def check_fresh(colors: tuple[int, ...], genus: int, color: int) -> None:
    if color == 0 or abs(color) > genus or abs(color) in {abs(c) for c in colors}:
        raise SinColorLibreException(colors, genus)


def split_separable(diagram: ChordDiagram, arc: Arc, fresh: int) -> tuple[Spider, Spider]:
    """Corta por el arco: devuelve (S(P, n), S(-n, Q)), cuyo corchete es sign(n) S."""
    if not _arc_is_admissible(diagram, arc):
        raise ArcoNoAdmisibleException(diagram.colors, arc)
    check_fresh(diagram.colors, diagram.genus, fresh)
    start, stop = arc
    colors = diagram.colors
    inside = colors[start:stop]
    outside = colors[stop:] + colors[:start]
    return (
        Spider(inside + (fresh,), diagram.genus),
        Spider((-fresh,) + outside, diagram.genus),
    )


def _chain_prefix(chain: tuple[int, ...]) -> list[int]:
    colors = [chain[0]]
    for previous, current in zip(chain, chain[1:]):
        colors += [current, -previous]
    return colors


def match_standard_form(colors: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    """Busca el patron (1..4) y la cadena c_1..c_m de alguna rotacion."""
    size = len(colors)
    for pattern, tail in STANDARD_TAILS.items():
        doubled = size - len(tail) + 1
        if doubled < 2 or doubled % 2:
            continue
        m = doubled // 2
        for r in range(size):
            rotation = colors[r:] + colors[:r]
            chain = (rotation[0],) + tuple(rotation[2 * i - 3] for i in range(2, m + 1))
            expected = _chain_prefix(chain)
            whites = []
            for slot, value in zip(tail, rotation[2 * m - 1 :]):
                if slot == "c":
                    expected.append(-chain[-1])
                else:
                    expected.append(value)
                    whites.append(value)
            if tuple(expected) != rotation:
                continue
            indices = [abs(c) for c in chain + tuple(whites)]
            if len(set(indices)) == len(indices):
                return pattern, chain
    return None


def is_standard_form(diagram: ChordDiagram) -> int | None:
    match = match_standard_form(diagram.colors)
    return match[0] if match else None


def mirror(spider: Spider) -> Spider:
    """Patas en orden inverso."""
    return Spider(tuple(reversed(spider.colors)), spider.genus)


def inner_boundary_components(diagram: ChordDiagram) -> int:
    """Componentes de la frontera interior de la superficie engordada, sin mirar cruces.

    Recorriendo el circulo por dentro, al llegar a un extremo se cruza por la cuerda
    y se sigue desde el otro extremo en el mismo sentido.
    """
    match = match_standard_form(diagram.colors)
    if match is None or len(match[1]) < 2:
        raise NoEsFormaEstandarException(diagram.colors)
    endpoints = sorted(diagram.chorded_vertices())
    partner = {p: q for p, q in diagram.chords} | {q: p for p, q in diagram.chords}
    following = {e: endpoints[(i + 1) % len(endpoints)] for i, e in enumerate(endpoints)}
    seen: set[int] = set()
    components = 0
    for start in endpoints:
        if start in seen:
            continue
        components += 1
        current = start
        while current not in seen:
            seen.add(current)
            current = partner[following[current]]
    logger.debug(f"{diagram.spider}: {components} componentes interiores")
    return components


def normalize_standard_form(spider: Spider) -> tuple[int, Spider]:
    """Recolorea una forma estandar a c_i = i leyendo desde c_1. Devuelve (signo, arana)."""
    match = match_standard_form(spider.colors)
    if match is None:
        raise NoEsFormaEstandarException(spider.colors)
    start = spider.colors.index(match[1][0])
    sign, image, _ = normalize_chain_colors(spider, start)
    return sign, image
