"""
Tesauro de formas representativas.

Convierte variantes de escritura de una entidad en su forma representativa
antes de comparar. Las superficies desconocidas se devuelven sin cambios y las
formas representativas son puntos fijos.

Formato de archivo: TSV UTF-8 de dos columnas ``superficie<TAB>representativa``;
las líneas vacías y las que empiezan por ``#`` se ignoran. Si una superficie se
repite, gana la última y se registra un aviso.
"""

import unicodedata
from pathlib import Path
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from ..logger import get_logger

logger = get_logger(__name__)


def _resolve(pares: Mapping[str, str]) -> Dict[str, str]:
    """Sigue las cadenas a → b → c hasta la forma representativa; rechaza ciclos."""
    resuelto: Dict[str, str] = {}
    for superficie in pares:
        visitados = [superficie]
        actual = pares[superficie]
        while actual in pares and pares[actual] != actual:
            if actual in visitados:
                raise ValueError(f"Ciclo en el tesauro: {' → '.join(visitados + [actual])}")
            visitados.append(actual)
            actual = pares[actual]
        resuelto[superficie] = actual
    return resuelto


class Thesaurus:
    """
    Diccionario muchos-a-uno de superficies a formas representativas.

    Parameters
    ----------
    mapping : mapping or iterable of (str, str), optional
        Pares superficie → representativa. Las cadenas se resuelven.

    Examples
    --------
    >>> t = Thesaurus({"心筋梗塞": "急性心筋梗塞"})
    >>> t.lookup("心筋梗塞")
    '急性心筋梗塞'
    >>> t.lookup("胸痛")
    '胸痛'
    """

    def __init__(self, mapping: Union[Mapping[str, str], Iterable[Tuple[str, str]], None] = None) -> None:
        pares = dict(mapping.items() if isinstance(mapping, Mapping) else (mapping or ()))
        self._raw = _resolve(pares)
        normalizados = {
            unicodedata.normalize("NFKC", k): unicodedata.normalize("NFKC", v)
            for k, v in pares.items()
        }
        self._nfkc = _resolve(normalizados)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "Thesaurus":
        """
        Carga un tesauro TSV.

        Raises
        ------
        OSError
            Si el archivo no puede leerse.
        ValueError
            Si una línea no tiene exactamente dos columnas no vacías.
        """
        path = Path(path)
        pares: Dict[str, str] = {}
        with path.open(encoding="utf-8-sig") as fh:
            for numero, linea in enumerate(fh, start=1):
                linea = linea.rstrip("\r\n")
                if not linea.strip() or linea.lstrip().startswith("#"):
                    continue
                columnas = linea.split("\t")
                if len(columnas) != 2 or not all(c.strip() for c in columnas):
                    raise ValueError(f"{path}:{numero}: se esperaban dos columnas separadas por tabulador")
                superficie, representativa = (c.strip() for c in columnas)
                if superficie in pares and pares[superficie] != representativa:
                    logger.warning(
                        "%s:%d: superficie duplicada %r; se usa %r en lugar de %r",
                        path, numero, superficie, representativa, pares[superficie],
                    )
                pares[superficie] = representativa
        logger.info("Tesauro cargado desde %s: %d entradas", path, len(pares))
        return cls(pares)

    @classmethod
    def load(cls, path: Optional[Union[str, Path]]) -> "Thesaurus":
        """Tesauro desde archivo, o vacío si ``path`` es None."""
        return cls() if path is None else cls.from_file(path)

    def lookup(self, surface: str, unicode_normalize: bool = False) -> str:
        """Forma representativa de ``surface`` (ella misma si es desconocida)."""
        if unicode_normalize:
            return self._nfkc.get(surface, surface)
        return self._raw.get(surface, surface)

    @property
    def representatives(self) -> frozenset:
        return frozenset(self._raw.values())

    def __len__(self) -> int:
        return len(self._raw)

    def __contains__(self, surface: object) -> bool:
        return surface in self._raw

    def __repr__(self) -> str:
        return f"Thesaurus({len(self)} entradas)"


EMPTY_THESAURUS = Thesaurus()
