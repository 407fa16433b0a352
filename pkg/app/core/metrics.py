"""
Métricas globais e caches do simulador.
"""

from cachetools import LRUCache

from app.utils.simulador_config import SimuladorConfig

# Conjuntos de Kraus por (tipo, base, ganho); arrays guardados como somente leitura
kraus_cache = LRUCache(maxsize=SimuladorConfig.CACHE_KRAUS_SIZE)

# Estado entregue a cada par de observadores, por (configuração, par)
estado_par_cache = LRUCache(maxsize=SimuladorConfig.CACHE_ESTADO_PAR_SIZE)

# Contador de métricas globais (por processo)
metricas = {
    "cache_hits": 0,
    "cache_misses": 0,
    "avaliacoes_motor": 0,
    "avaliacoes_fechadas": 0,
    "varreduras_jacobi": 0,
    "total_comandos": 0,
    "total_latencia_ms": 0.0,
    "erros_comando": 0,
}
