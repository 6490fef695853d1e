"""
Ejemplo de uso del sistema de logging de arbolcausal.

Muestra cómo subir el nivel de detalle para seguir la lectura de un corpus y
el alineamiento, y cómo se registran los casos problemáticos.
"""

from arbolcausal import get_logger, setup_logger
from arbolcausal.errores import ParseError
from arbolcausal.formato import load_forest
from arbolcausal.metricas import score_corpus
from arbolcausal.tripletas import decompose

# Configurar el logger raíz con más detalle
logger = setup_logger("arbolcausal", level="DEBUG")

# También puedes obtener loggers específicos para tus módulos
module_logger = get_logger("arbolcausal.ejemplo")


class Evaluador:
    """Clase de ejemplo que registra cada paso de la evaluación."""

    def __init__(self):
        self.logger = get_logger(f"arbolcausal.ejemplo.{self.__class__.__name__}")
        self.logger.info("Inicializando Evaluador")

    def cargar(self, texto: str, case_id: str):
        self.logger.debug("Analizando caso %s", case_id)
        try:
            return decompose(load_forest(texto, case_id=case_id))
        except ParseError as e:
            for diagnostico in e.diagnostics:
                self.logger.error("%s: %s", case_id, diagnostico)
            raise


def main():
    logger.info("Iniciando ejemplo de logging")
    evaluador = Evaluador()

    gold = [evaluador.cargar("肺炎\n  発熱\n  咳嗽", "c1"), evaluador.cargar("気胸\n  呼吸困難", "c2")]
    pred = [evaluador.cargar("肺炎\n  発熱", "c1")]
    # c2 no tiene predicción: se registra y se evalúa como árbol vacío
    total = score_corpus([(pred[0], gold[0]), (None, gold[1])])
    module_logger.info("F1 micro: %.3f", total.micro.f1)

    try:
        evaluador.cargar("肺炎 = 発熱 = 咳嗽", "c3")
    except ParseError as e:
        logger.warning("Se esperaba este error: %s", e)

    logger.info("Ejemplo de logging completado")


if __name__ == "__main__":
    main()
