"""Movimientos de reescritura modulo corchetes.

Todos salen de un mismo corte. Si S = S(X, B) con B un bloque de vertices
consecutivos y n un color libre, entonces

    S = sign(n) [S(X, n), S(-n, B)] + (correcciones),

donde cada correccion cambia un par x_a = -B_b por la cuerda nueva n.
Los deslizamientos de cuerdas son el caso en que B son dos vertices adyacentes.
"""

import logging
from collections import defaultdict

from src.features.diagrams.domain.entities import (
    BracketTerm,
    ReductionCertificate,
    SlideCase,
    VertexClass,
)
from src.features.diagrams.domain.exceptions import (
    NoEsFormaEstandarException,
    ReduccionIncompletaException,
    SitioNoAdmisibleException,
)
from src.features.diagrams.domain.services.chord_diagrams import (
    check_fresh,
    chord_diagram_of,
    classify_vertices,
    fresh_color,
    is_separable,
    is_standard_form,
    match_standard_form,
    multiplicity,
    split_separable,
)
from src.features.free_algebra.domain.entities import Coefficient, LinearCombination
from src.features.symplectic.domain.entities import Spider
from src.features.symplectic.domain.services.spiders import bracket_spider

logger = logging.getLogger(__name__)


class CertificateBuilder:
    """Acumula terminos de corchete y de resto para una misma arana de entrada."""

    def __init__(self, spider: Spider):
        self.spider = spider
        self.brackets: list[BracketTerm] = []
        self.remainder: dict[Spider, Coefficient] = defaultdict(int)
        self.fresh_colors: list[int] = []
        self.steps = 0
        self.max_backtracks = 0
        self.max_multiplicity = multiplicity(chord_diagram_of(spider))

    def add_bracket(self, left: Spider, right: Spider, coefficient: Coefficient) -> None:
        if coefficient != 0:
            self.brackets.append(BracketTerm(left, right, coefficient))

    def add_remainder(self, spider: Spider, coefficient: Coefficient) -> None:
        self.remainder[spider] += coefficient

    def absorb(self, fragment: ReductionCertificate, coefficient: Coefficient) -> None:
        """Incorpora los corchetes de un fragmento; el resto lo decide quien llama."""
        for term in fragment.brackets:
            self.add_bracket(term.left, term.right, coefficient * term.coefficient)
        self.fresh_colors.extend(fragment.fresh_colors)

    def split(self, spider: Spider, coefficient: Coefficient) -> bool:
        """Si la arana es separable la manda entera a corchetes."""
        diagram = chord_diagram_of(spider)
        arc = is_separable(diagram)
        if arc is None:
            return False
        n = fresh_color(spider.colors, spider.genus)
        left, right = split_separable(diagram, arc, n)
        self.add_bracket(left, right, coefficient)
        self.fresh_colors.append(n)
        return True

    def build(self) -> ReductionCertificate:
        return ReductionCertificate(
            spider=self.spider,
            brackets=tuple(self.brackets),
            remainder=LinearCombination.from_mapping(self.remainder).terms,
            fresh_colors=tuple(self.fresh_colors),
            steps=self.steps,
            max_backtracks=self.max_backtracks,
            max_multiplicity=self.max_multiplicity,
        )


def splice(spider: Spider, start: int, length: int, fresh: int) -> ReductionCertificate:
    """Corta el bloque de `length` vertices que empieza en `start` (orden canonico)."""
    colors = spider.colors
    if not 1 <= length < len(colors):
        raise SitioNoAdmisibleException(colors, start, f"bloque de longitud {length}")
    check_fresh(colors, spider.genus, fresh)
    rotation = colors[start:] + colors[:start]
    block, rest = rotation[:length], rotation[length:]
    left = Spider(rest + (fresh,), spider.genus)
    right = Spider((-fresh,) + block, spider.genus)
    sign = 1 if fresh > 0 else -1
    bracket = bracket_spider(left, right).scale(sign)
    remainder = LinearCombination.from_mapping({spider: 1}) - bracket
    return ReductionCertificate(
        spider=spider,
        brackets=(BracketTerm(left, right, sign),),
        remainder=remainder.terms,
        fresh_colors=(abs(fresh),),
        steps=1,
    )


def slide_case(spider: Spider, site: int) -> SlideCase:
    """Clasifica el par (i, j) formado por el vertice `site` y el siguiente."""
    colors = spider.colors
    size = len(colors)
    classes = classify_vertices(chord_diagram_of(spider))
    nxt = (site + 1) % size
    i, j = colors[site], colors[nxt]
    if classes[site] != VertexClass.SINGLE_PAIRED:
        raise SitioNoAdmisibleException(colors, site, "i debe tener una sola pareja")
    if j == -i:
        raise SitioNoAdmisibleException(colors, site, "i y j forman una cuerda")
    if classes[nxt] == VertexClass.UNPAIRED:
        return SlideCase.UNPAIRED
    if classes[nxt] != VertexClass.SINGLE_PAIRED:
        raise SitioNoAdmisibleException(colors, site, "j tiene varias parejas")
    after = colors[nxt + 1 :] + colors[: nxt + 1]
    return SlideCase.NESTED if after.index(-j) < after.index(-i) else SlideCase.CROSSED


def chord_slide(spider: Spider, site: int, fresh: int) -> ReductionCertificate:
    """Desliza una cuerda por la otra en el sitio (i, j).

    El resto son los dos terminos (uno si j no tiene pareja) con signos
    sign(ni) y sign(nj).
    """
    case = slide_case(spider, site)
    logger.debug(f"Deslizamiento {case.value} en {spider}, sitio {site}, n={fresh}")
    return splice(spider, site, 2, fresh)


def chord_cycle(spider: Spider) -> ReductionCertificate:
    """Lleva la cuerda c1 de la forma estandar al otro extremo de la cadena.

    Cada deslizamiento se hace en el extremo interior -c1 y su vecino. Los terminos
    separables van a corchetes; el que conserva la cuerda marcada sigue deslizandose
    hasta ser separable o volver a la forma estandar.
    """
    match = match_standard_form(spider.colors)
    if match is None or len(match[1]) < 2:
        raise NoEsFormaEstandarException(spider.colors)
    marked = -match[1][0]
    builder = CertificateBuilder(spider)
    current: Spider | None = spider
    coefficient: Coefficient = 1
    budget = len(spider.colors)
    while current is not None:
        builder.steps += 1
        if builder.steps > budget:
            raise ReduccionIncompletaException(spider.colors, "el ciclado no termina")
        site = current.colors.index(marked)
        fragment = chord_slide(current, site, fresh_color(current.colors, current.genus))
        builder.absorb(fragment, coefficient)
        following = None
        for term, c in fragment.remainder:
            weight = coefficient * c
            if builder.split(term, weight):
                continue
            if marked in term.colors and is_standard_form(chord_diagram_of(term)) is None:
                following = (term, weight)
            else:
                builder.add_remainder(term, weight)
        current, coefficient = following if following else (None, 0)
    certificate = builder.build()
    logger.debug(
        f"Ciclado de {spider}: {certificate.steps} pasos, {len(certificate.remainder)} restos"
    )
    return certificate
