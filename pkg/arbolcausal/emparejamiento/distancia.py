"""
Comparación de entidades por distancia de edición normalizada.

Ambas entidades se normalizan (NFKC opcional y tesauro); la razón es la
distancia de Levenshtein entre las formas canónicas dividida por la longitud
de la forma gold, contada en puntos de código. Hay coincidencia si la razón es
estrictamente menor que el umbral (0.5 por defecto). Los valores de polaridad
exigen igualdad exacta.
"""

import math
import unicodedata
from typing import NamedTuple, Optional, Union

import Levenshtein
from pydantic import BaseModel, ConfigDict, Field

from ..config import settings
from ..formato.modelo import Entity
from ..optimizacion import cachear_resultados
from ..tripletas.descomposicion import RootToken
from .tesauro import EMPTY_THESAURUS, Thesaurus


class MatchConfig(BaseModel):
    """
    Parámetros de la comparación de entidades.

    Parameters
    ----------
    threshold : float
        Umbral de la razón distancia/longitud, en (0, 1]. Por defecto 0.5.
    polarity_exact : bool
        Exigir igualdad exacta en los valores de polaridad. Solo se desactiva
        en experimentos.
    unicode_normalize : bool
        Normalización de compatibilidad (NFKC) antes de consultar el tesauro.
    strict_threshold : bool
        True compara con ``<``; False con ``<=``.
    """

    model_config = ConfigDict(frozen=True)

    threshold: float = Field(default=0.5, gt=0.0, le=1.0)
    polarity_exact: bool = True
    unicode_normalize: bool = True
    strict_threshold: bool = True

    @classmethod
    def from_settings(cls) -> "MatchConfig":
        """Configuración por defecto tomada de ``settings.evaluation``."""
        return cls(
            threshold=settings.evaluation.threshold,
            unicode_normalize=settings.evaluation.unicode_normalize,
        )

    def accepts(self, ratio: float) -> bool:
        """Aplica el umbral a una razón de distancia."""
        return ratio < self.threshold if self.strict_threshold else ratio <= self.threshold


DEFAULT_MATCH_CONFIG = MatchConfig()


class EntityMatch(NamedTuple):
    matched: bool
    ratio: float


@cachear_resultados()
def _nfkc(surface: str) -> str:
    return unicodedata.normalize("NFKC", surface)


def canonical_form(surface: str, thesaurus: Thesaurus, unicode_normalize: bool) -> str:
    """Forma canónica de una superficie: NFKC opcional y después el tesauro."""
    if unicode_normalize:
        surface = _nfkc(surface)
    return thesaurus.lookup(surface, unicode_normalize)


def normalize(
    e: Entity,
    t: Optional[Thesaurus] = None,
    cfg: Optional[MatchConfig] = None,
) -> str:
    """
    Forma representativa de una entidad.

    Examples
    --------
    >>> normalize(Entity("ＳｐＯ２"))
    'SpO2'
    """
    cfg = cfg or DEFAULT_MATCH_CONFIG
    return canonical_form(e.surface, t or EMPTY_THESAURUS, cfg.unicode_normalize)


def edit_ratio(pred: str, gold: str) -> float:
    """Distancia de Levenshtein (puntos de código) dividida por ``len(gold)``."""
    if not gold:
        return 0.0 if not pred else math.inf
    return Levenshtein.distance(pred, gold) / len(gold)


def entity_match(
    pred: Union[Entity, RootToken],
    gold: Union[Entity, RootToken],
    t: Optional[Thesaurus] = None,
    cfg: Optional[MatchConfig] = None,
    is_polarity_value: bool = False,
) -> EntityMatch:
    """
    Decide si una entidad predicha coincide con la gold.

    La relación no es simétrica: la razón se normaliza por la longitud gold.
    ``[root]`` solo coincide consigo mismo.

    Parameters
    ----------
    pred, gold : Entity or RootToken
        Entidades a comparar.
    t : Thesaurus, optional
        Tesauro; por defecto vacío.
    cfg : MatchConfig, optional
        Umbral y opciones de normalización.
    is_polarity_value : bool, optional
        Si True, se exige igualdad exacta de las formas canónicas.

    Returns
    -------
    EntityMatch
        ``(matched, ratio)``.

    Examples
    --------
    >>> entity_match(Entity("僧帽弁の逆流"), Entity("僧帽弁逆流"))
    EntityMatch(matched=True, ratio=0.2)
    >>> entity_match(Entity("低"), Entity("低値"), is_polarity_value=True)
    EntityMatch(matched=False, ratio=0.5)
    """
    cfg = cfg or DEFAULT_MATCH_CONFIG
    if isinstance(pred, RootToken) or isinstance(gold, RootToken):
        ambos = isinstance(pred, RootToken) and isinstance(gold, RootToken)
        return EntityMatch(ambos, 0.0 if ambos else math.inf)

    t = t or EMPTY_THESAURUS
    pred_c = canonical_form(pred.surface, t, cfg.unicode_normalize)
    gold_c = canonical_form(gold.surface, t, cfg.unicode_normalize)
    ratio = edit_ratio(pred_c, gold_c)
    if is_polarity_value and cfg.polarity_exact:
        return EntityMatch(pred_c == gold_c, ratio)
    return EntityMatch(cfg.accepts(ratio), ratio)
