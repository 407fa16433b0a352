"""
Logging estruturado do simulador.

Os eventos saem em JSON no stderr; o stdout fica reservado às tabelas
CSV/JSON dos subcomandos. Cada evento leva o nome do simulador e o pid do
processo, que distingue os workers da varredura em grade.
"""
import logging
import os
import sys
from typing import Optional

import structlog

from app.utils.simulador_config import SimuladorConfig

NOME_SIMULADOR = "emaranhamento-sequencial"


def carimbar_processo(_logger, _metodo: str, evento: dict) -> dict:
    """Processor structlog: acrescenta ``simulador`` e ``pid`` ao evento."""
    evento.setdefault("simulador", NOME_SIMULADOR)
    evento.setdefault("pid", os.getpid())
    return evento


def configurar_logging(nivel: Optional[int] = None) -> None:
    """Configura structlog + logging padrão; ``nivel`` sobrepõe ES_LOG_LEVEL."""
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            carimbar_processo,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer(),
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )
    logging.basicConfig(
        level=SimuladorConfig.nivel_log() if nivel is None else nivel,
        stream=sys.stderr,
        format="%(message)s",
    )


configurar_logging()
logger = structlog.get_logger()
