"""
Configuración centralizada de arbolcausal.

Los valores se toman, de mayor a menor prioridad, de las variables de entorno,
del archivo ``.env`` y de los valores por defecto. Las sub-configuraciones se
separan con ``__`` (``EVALUATION__C=4``, ``LOGGING__LEVEL=DEBUG``). Las opciones
de la línea de comandos se aplican después, en ``cli.informes.RunConfig``.

Uso:
    from arbolcausal.config import settings
    print(settings.evaluation.threshold)
"""

from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

BASE_DIR = Path(__file__).parent.parent

Environment = Literal["development", "testing", "production"]


class LoggingSettings(BaseModel):
    """Nivel, destino y formato de los mensajes de registro."""

    level: str = Field(default="INFO", description="Nombre del nivel de logging")
    file: Optional[Path] = Field(default=None, description="Archivo de log además de stderr")
    format: str = Field(default="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    date_format: str = Field(default="%Y-%m-%d %H:%M:%S")

    @field_validator("level")
    @classmethod
    def nivel_conocido(cls, v: str) -> str:
        nivel = v.upper()
        if nivel not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Nivel de log inválido: {v!r}")
        return nivel


class PerformanceSettings(BaseModel):
    """Paralelismo del alineamiento y caché de normalización de entidades."""

    max_workers: int = Field(default=1, ge=1, le=64, description="Procesos para alinear casos en paralelo")
    cache_enabled: bool = Field(default=True, description="Cachear la normalización de entidades")
    cache_size: int = Field(default=65536, ge=0, description="Entradas máximas de la caché")


class EvaluationSettings(BaseModel):
    """
    Valores por defecto de la evaluación por tripletas.

    Reproducen la configuración final de la métrica: umbral 0.5 sobre la razón
    distancia de edición / longitud del gold, ponderación recíproca y C=2.
    """

    threshold: float = Field(default=0.5, gt=0.0, le=1.0)
    method: Literal["none", "reciprocal", "exponential"] = "reciprocal"
    c: float = Field(default=2.0, gt=0.0, description="Constante C de la ponderación por profundidad")
    unicode_normalize: bool = Field(default=True, description="NFKC antes de consultar el tesauro")
    thesaurus: Optional[Path] = Field(default=None, description="Tesauro TSV por defecto")


class Settings(BaseSettings):
    """Configuración principal; ``env`` ajusta el resto al final de la validación."""

    env: Environment = "production"
    debug: bool = False
    testing: bool = False

    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    performance: PerformanceSettings = Field(default_factory=PerformanceSettings)
    evaluation: EvaluationSettings = Field(default_factory=EvaluationSettings)

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        case_sensitive=False,
        extra="ignore",
    )

    @model_validator(mode="after")
    def ajustar_por_entorno(self) -> "Settings":
        if self.env == "development":
            self.debug = True
            if self.logging.level == "INFO":
                self.logging.level = "DEBUG"
            if self.logging.file is None:
                (BASE_DIR / "logs").mkdir(exist_ok=True)
                self.logging.file = BASE_DIR / "logs" / "arbolcausal_development.log"
        elif self.env == "testing":
            # Sin caché: cada test ve la normalización recién calculada
            self.testing = True
            self.debug = True
            self.performance.cache_enabled = False
        return self


settings = Settings()
