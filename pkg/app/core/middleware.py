"""
Monitoramento de latência e logging estruturado dos subcomandos.
"""
import time
from typing import Callable

from app.core.config import logger
from app.core.metrics import metricas


def executar_com_latencia(comando: str, executar: Callable[[], int]) -> int:
    """
    Executa um subcomando medindo o tempo de processamento e registra logs
    estruturados com as métricas de performance.

    Args:
        comando: Nome do subcomando
        executar: Função sem argumentos que devolve o código de saída

    Returns:
        Código de saída do subcomando
    """
    start_time = time.time()
    metricas["total_comandos"] += 1

    try:
        codigo = executar()

        duration_ms = round((time.time() - start_time) * 1000, 2)
        metricas["total_latencia_ms"] += duration_ms

        logger.info(
            "Comando concluído",
            log_type="cli_performance",
            comando=comando,
            codigo_saida=codigo,
            duration_ms=duration_ms,
            avaliacoes_motor=metricas["avaliacoes_motor"],
            avaliacoes_fechadas=metricas["avaliacoes_fechadas"],
            cache_hits=metricas["cache_hits"],
            cache_misses=metricas["cache_misses"],
        )
        return codigo

    except Exception as e:
        duration_ms = round((time.time() - start_time) * 1000, 2)
        metricas["erros_comando"] += 1

        logger.error(
            "Erro durante execução do comando",
            log_type="cli_performance",
            comando=comando,
            duration_ms=duration_ms,
            error_type=type(e).__name__,
            error_message=str(e)[:100],
        )

        # Quem chama decide o código de saída
        raise
