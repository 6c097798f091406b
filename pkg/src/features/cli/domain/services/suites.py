"""Baterias de comprobaciones exactas con semilla fija.

Cada bateria repite `cases` veces un sorteo y comprueba identidades contra un
oraculo independiente: composicion de endomorfismos, expansion tensorial de las
aranas o auditoria de certificados. Un fallo no corta la bateria; se anota el caso.
"""

import logging
import random
from collections import Counter
from collections.abc import Callable

from src.domain.shared.custom_types import VerifySuite
from src.domain.shared.exceptions import DerilabError
from src.features.cli.domain.entities import SuiteOutcome
from src.features.cli.domain.exceptions import SuiteDesconocidaException
from src.features.derivations.domain.entities import (
    AssocDerivation,
    LieDerivation,
    SymmetricMonomial,
)
from src.features.derivations.domain.services.associative import (
    apply_assoc,
    assoc_basis_keys,
    bracket_assoc,
    contraction_c13,
    endomorphism_bracket,
)
from src.features.derivations.domain.services.identities import (
    assoc_degree_two_rewritings,
    assoc_generation_step,
    c13_degree_zero_checks,
    c13_residual,
    evaluate_rewriting,
    identity_scaling,
    lie_degree_zero,
    lie_index_exchange,
)
from src.features.derivations.domain.services.lie import (
    apply_lie,
    bracket_lie_der,
    lie_der_basis_keys,
    lie_der_to_assoc,
    phi_k,
    trace_tr_k,
)
from src.features.diagrams.domain.entities import ReductionCertificate
from src.features.diagrams.domain.exceptions import SitioNoAdmisibleException
from src.features.diagrams.domain.services.audit import audit
from src.features.diagrams.domain.services.chord_diagrams import (
    chord_diagram_of,
    fresh_color,
    is_standard_form,
    mirror,
    multiplicity,
)
from src.features.diagrams.domain.services.reduction import reduce_to_standard
from src.features.diagrams.domain.services.rewriting import chord_slide, slide_case
from src.features.free_algebra.domain.entities import (
    LieElement,
    LinearCombination,
    TensorElement,
)
from src.features.free_algebra.domain.services.lie_algebra import (
    left_normed_bracket,
    lie_bracket,
)
from src.features.free_algebra.domain.services.tensor_algebra import tensor_product
from src.features.symplectic.domain.entities import SignedPermutation, Spider
from src.features.symplectic.domain.services.spiders import (
    bracket_spider,
    bracket_spider_combinations,
    bracket_symp,
    combination_to_tensor,
    recolor_combination,
    spider_to_tensor,
    spider_weight,
)

logger = logging.getLogger(__name__)

# Reduce un lote de aranas, un certificado por arana y en orden
BatchReducer = Callable[[list[Spider]], list[ReductionCertificate]]


def reduce_sequentially(spiders: list[Spider]) -> list[ReductionCertificate]:
    return [reduce_to_standard(spider) for spider in spiders]


class SuiteRecorder:
    """Lleva la cuenta de casos, fallos y etiquetas de una bateria."""

    def __init__(self, suite: str, seed: int, reducer: BatchReducer = reduce_sequentially):
        self.suite = suite
        self.reducer = reducer
        self.seed = seed
        self.rng = random.Random(seed)
        self.cases = 0
        self.failures: list[str] = []
        self.tallies: Counter[str] = Counter()

    def check(self, label: str, case: object, predicate: Callable[[], bool]) -> None:
        self.cases += 1
        self.tallies[label] += 1
        try:
            ok = predicate()
        except DerilabError as e:
            ok = False
            case = f"{case} ({e.message})"
        if not ok:
            self.failures.append(f"{label}: {case}")
            logger.warning(f"{self.suite}/{label} fallo en {case}")

    def outcome(self) -> SuiteOutcome:
        return SuiteOutcome(
            suite=self.suite,
            seed=self.seed,
            cases=self.cases,
            failures=tuple(self.failures),
            tallies=tuple(sorted(self.tallies.items())),
        )


def _assoc(rng: random.Random, n: int, k: int, size: int = 3) -> AssocDerivation:
    keys = list(assoc_basis_keys(n, k))
    return AssocDerivation.from_pairs(
        ((rng.choice(keys), rng.randint(-3, 3)) for _ in range(size)), rank=n, degree=k
    )


def _lie(rng: random.Random, n: int, k: int, size: int = 3) -> LieDerivation:
    keys = list(lie_der_basis_keys(n, k))
    return LieDerivation.from_pairs(
        ((rng.choice(keys), rng.randint(-2, 2)) for _ in range(size)), rank=n, degree=k
    )


def _tensor(rng: random.Random, n: int, k: int, size: int = 3) -> TensorElement:
    return TensorElement.from_pairs(
        (tuple(rng.randint(1, n) for _ in range(k)), rng.randint(-3, 3)) for _ in range(size)
    )


def _spider(rng: random.Random, genus: int, degree: int) -> Spider:
    colors = tuple(rng.choice((1, -1)) * rng.randint(1, genus) for _ in range(degree + 2))
    return Spider(colors, genus)


def identities_suite(recorder: SuiteRecorder, cases: int, genus: int) -> None:
    """Leibniz, Jacobi, antisimetria, oraculo de endomorfismos y reescrituras."""
    rng = recorder.rng
    for _ in range(cases):
        d = _assoc(rng, 3, rng.randint(0, 2))
        t1, t2 = _tensor(rng, 3, 2), _tensor(rng, 3, rng.randint(1, 3))
        recorder.check(
            "leibniz",
            (d.terms, t1.terms, t2.terms),
            lambda: apply_assoc(d, tensor_product(t1, t2))
            == tensor_product(apply_assoc(d, t1), t2) + tensor_product(t1, apply_assoc(d, t2)),
        )
        f, g, h = (_assoc(rng, 3, rng.randint(0, 2)) for _ in range(3))
        recorder.check(
            "jacobi",
            (f.terms, g.terms, h.terms),
            lambda: (
                bracket_assoc(bracket_assoc(f, g), h)
                + bracket_assoc(bracket_assoc(g, h), f)
                + bracket_assoc(bracket_assoc(h, f), g)
            ).is_zero(),
        )
        recorder.check(
            "antisimetria",
            (f.terms, g.terms),
            lambda: (bracket_assoc(f, g) + bracket_assoc(g, f)).is_zero(),
        )
        p = rng.randint(0, 2)
        x, y = _assoc(rng, 2, p), _assoc(rng, 2, rng.randint(0, 3 - p))
        recorder.check(
            "endomorfismos",
            (x.terms, y.terms),
            lambda: bracket_assoc(x, y) == endomorphism_bracket(x, y),
        )
        recorder.check(
            "identidad",
            d.terms,
            lambda: evaluate_rewriting(identity_scaling(d)).is_zero(),
        )
        dual, word = rng.choice(list(assoc_basis_keys(3, 3)))
        recorder.check(
            "generacion",
            (dual, word),
            lambda: evaluate_rewriting(assoc_generation_step(dual, word, 3)).is_zero(),
        )
        l1, l2 = _lie(rng, 3, 1), _lie(rng, 3, rng.randint(0, 2))
        a = LieElement.generator(rng.randint(1, 3), 3)
        b = left_normed_bracket([1, 2], 3)
        recorder.check(
            "leibniz-lie",
            (l1.terms, a.terms),
            lambda: apply_lie(l1, lie_bracket(a, b))
            == lie_bracket(apply_lie(l1, a), b) + lie_bracket(a, apply_lie(l1, b)),
        )
        recorder.check(
            "inclusion-lie",
            (l1.terms, l2.terms),
            lambda: lie_der_to_assoc(bracket_lie_der(l1, l2))
            == bracket_assoc(lie_der_to_assoc(l1), lie_der_to_assoc(l2)),
        )
    for n in (2, 3):
        for rewriting in assoc_degree_two_rewritings(n):
            recorder.check(
                "grado-dos",
                rewriting.name,
                lambda rw=rewriting: evaluate_rewriting(rw).is_zero(),
            )


def traces_suite(recorder: SuiteRecorder, cases: int, genus: int) -> None:
    """tr_k y C13 se anulan en corchetes; tr_k o Phi_k = id; identidades de Der(L_n)."""
    rng = recorder.rng
    for _ in range(cases):
        n = rng.choice((4, 5))
        f, g = _lie(rng, n, rng.randint(1, 2)), _lie(rng, n, rng.randint(1, 2))
        recorder.check(
            "traza",
            (f.terms, g.terms),
            lambda: trace_tr_k(bracket_lie_der(f, g)).is_zero(),
        )
        monomial = SymmetricMonomial.of(rng.randint(1, 3) for _ in range(rng.randint(1, 3)))
        recorder.check(
            "phi",
            str(monomial),
            lambda: trace_tr_k(phi_k(monomial, 5)).terms == ((monomial, 1),),
        )
        x, y = _assoc(rng, 3, 1), _assoc(rng, 3, 1)
        recorder.check(
            "c13",
            (x.terms, y.terms),
            lambda: contraction_c13(bracket_assoc(x, y)).is_zero(),
        )
        others = tuple(rng.randint(1, 3) for _ in range(3))
        if others[0] != 1:
            recorder.check(
                "intercambio",
                others,
                lambda: evaluate_rewriting(lie_index_exchange(1, others, 4, 4)).is_zero(),
            )
        pair = (rng.randint(2, 3), rng.randint(2, 3))
        recorder.check(
            "lie-grado-cero",
            pair,
            lambda: evaluate_rewriting(lie_degree_zero(1, pair, 4, 4)).is_zero(),
        )
    for left, right, expected in c13_degree_zero_checks(3):
        recorder.check(
            "c13-grado-cero",
            (left.terms, right.terms),
            lambda x=left, y=right, t=expected: c13_residual(x, y, t).is_zero(),
        )


def spiders_suite(recorder: SuiteRecorder, cases: int, genus: int) -> None:
    """Corchete de aranas contra el corchete en Der(T(H)), y antisimetria."""
    rng = recorder.rng
    genus = min(genus, 3)
    for _ in range(cases):
        s1 = _spider(rng, genus, rng.randint(0, 2))
        s2 = _spider(rng, genus, rng.randint(0, 2))
        degree = s1.degree + s2.degree
        recorder.check(
            "oraculo-tensorial",
            (s1.colors, s2.colors),
            lambda: combination_to_tensor(bracket_spider(s1, s2), genus, degree)
            == bracket_symp(spider_to_tensor(s1), spider_to_tensor(s2)),
        )
        recorder.check(
            "antisimetria",
            (s1.colors, s2.colors),
            lambda: (bracket_spider(s1, s2) + bracket_spider(s2, s1)).is_zero(),
        )
        recorder.check(
            "peso",
            (s1.colors, s2.colors),
            lambda: _weight_is_additive(s1, s2),
        )
        images = list(range(1, genus + 1))
        rng.shuffle(images)
        phi = SignedPermutation(genus, tuple(images), tuple(rng.random() < 0.5 for _ in images))
        recorder.check(
            "recoloreo",
            (s1.colors, s2.colors, phi.images, phi.flips),
            lambda: _recolor_is_equivariant(s1, s2, phi),
        )


def _weight_is_additive(s1: Spider, s2: Spider) -> bool:
    expected = tuple(a + b for a, b in zip(spider_weight(s1), spider_weight(s2)))
    return all(spider_weight(term) == expected for term, _ in bracket_spider(s1, s2).terms)


def _recolor_is_equivariant(s1: Spider, s2: Spider, phi: SignedPermutation) -> bool:
    left, right = (
        recolor_combination(LinearCombination.from_pairs([(s, 1)]), phi) for s in (s1, s2)
    )
    image = recolor_combination(bracket_spider(s1, s2), phi)
    return image == bracket_spider_combinations(left, right)


def slides_suite(recorder: SuiteRecorder, cases: int, genus: int) -> None:
    """Los deslizamientos de cuerdas cuadran como identidad tensorial."""
    rng = recorder.rng
    genus = max(genus, 4)
    for _ in range(cases):
        spider = _spider(rng, genus, rng.randint(1, genus - 3))
        for site in range(len(spider.colors)):
            try:
                case = slide_case(spider, site)
            except SitioNoAdmisibleException:
                continue
            fresh = fresh_color(spider.colors, genus)
            recorder.check(
                f"desliza-{case.value}",
                (spider.colors, site),
                lambda s=spider, i=site, n=fresh: audit(chord_slide(s, i, n)) is None,
            )


def mirror_suite(recorder: SuiteRecorder, cases: int, genus: int) -> None:
    """[S1^m, S2^m] es el espejo de [S1, S2]."""
    rng = recorder.rng
    for _ in range(cases):
        s1 = _spider(rng, genus, rng.randint(0, 3))
        s2 = _spider(rng, genus, rng.randint(0, 3))
        recorder.check(
            "espejo",
            (s1.colors, s2.colors),
            lambda: bracket_spider(mirror(s1), mirror(s2))
            == bracket_spider(s1, s2).map_keys(mirror),
        )


def _reduction_holds(spider: Spider, certificate: ReductionCertificate) -> bool:
    audit(certificate)
    standard = all(
        is_standard_form(chord_diagram_of(term)) is not None for term, _ in certificate.remainder
    )
    initial = multiplicity(chord_diagram_of(spider))
    return (
        certificate.spider == spider
        and standard
        and certificate.max_multiplicity == initial
        and certificate.max_backtracks <= initial
    )


def reduction_suite(recorder: SuiteRecorder, cases: int, genus: int) -> None:
    """Reducciones aleatorias de grado 3 con certificado auditado."""
    rng = recorder.rng
    genus = max(genus, 6)
    spiders = [_spider(rng, genus, 3) for _ in range(cases)]
    try:
        certificates = recorder.reducer(spiders)
    except DerilabError as e:
        recorder.check("reduccion-lote", f"{len(spiders)} aranas ({e.message})", lambda: False)
        return
    for spider, certificate in zip(spiders, certificates, strict=True):
        recorder.check(
            "reduccion",
            spider.colors,
            lambda s=spider, c=certificate: _reduction_holds(s, c),
        )


SUITES: dict[VerifySuite, Callable[[SuiteRecorder, int, int], None]] = {
    VerifySuite.IDENTITIES: identities_suite,
    VerifySuite.TRACES: traces_suite,
    VerifySuite.SPIDERS: spiders_suite,
    VerifySuite.SLIDES: slides_suite,
    VerifySuite.MIRROR: mirror_suite,
    VerifySuite.REDUCTION: reduction_suite,
}


def run_suite(
    suite: VerifySuite | str,
    seed: int,
    cases: int = 50,
    genus: int = 6,
    reducer: BatchReducer = reduce_sequentially,
) -> SuiteOutcome:
    try:
        name = VerifySuite(suite)
    except ValueError as e:
        raise SuiteDesconocidaException(str(suite), [s.value for s in VerifySuite]) from e
    recorder = SuiteRecorder(name.value, seed, reducer)
    SUITES[name](recorder, cases, genus)
    outcome = recorder.outcome()
    logger.info(
        f"Bateria {name.value} (semilla {seed}): {outcome.cases} casos, "
        f"{len(outcome.failures)} fallos"
    )
    return outcome
