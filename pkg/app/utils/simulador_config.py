"""
Configuração do simulador de compartilhamento de emaranhamento.
"""

import logging
import os

from app.core.erros import ErroConfiguracao


class SimuladorConfig:
    """Parâmetros numéricos e de execução do simulador."""

    # ========================================================================
    # TOLERÂNCIAS
    # ========================================================================

    # max |A - A†| aceito pelo autossolver e pelos estados
    TOL_HERMITICIDADE = 1e-12

    # |Tr ρ - 1|
    TOL_TRACO = 1e-12

    # Autovalor mínimo admitido num estado (ruído numérico)
    TOL_POSITIVIDADE = -1e-10

    # Limite de negatividade da transposta parcial
    LIMIAR_NEGATIVIDADE = -1e-10

    # Normalização das distribuições de resultados
    TOL_NORMALIZACAO = 1e-10

    # Probabilidades abaixo disso viram 0 antes da entropia
    LIMIAR_PROBABILIDADE = 1e-15

    # Variância mínima do coeficiente de Pearson
    EPS_VARIANCIA = 1e-12

    # Completude Σ K†K = I
    TOL_COMPLETUDE = 1e-12

    # ========================================================================
    # AUTOSSOLVER (JACOBI CÍCLICO)
    # ========================================================================

    TOL_JACOBI = 1e-13
    MAX_VARREDURAS_JACOBI = 100

    # ========================================================================
    # CACHE
    # ========================================================================

    CACHE_KRAUS_SIZE = 512
    CACHE_ESTADO_PAR_SIZE = 4096

    # ========================================================================
    # EXPLORAÇÃO
    # ========================================================================

    # Grade grossa do maximin (pontos por eixo)
    PONTOS_GRADE_GROSSA = 41

    # Melhores células refinadas pelo simplex
    SEMENTES_SIMPLEX = 5

    # Convergência: diâmetro do simplex
    DIAMETRO_SIMPLEX = 1e-6

    # Limite de avaliações por refinamento
    MAX_AVALIACOES_SIMPLEX = 4000

    # Grade densa de verificação por eixo (formas fechadas, n ≤ 2)
    PONTOS_GRADE_DENSA = 201

    # Grade densa por eixo quando o objetivo usa o motor numérico ou n > 2
    PONTOS_GRADE_DENSA_REDUZIDA = 21

    # Menor ganho admitido pelo motor numérico num domínio de otimização
    GANHO_MINIMO_MOTOR = 1e-6

    # Bissecção das fronteiras
    TOL_BISSECAO = 1e-8
    MAX_ITERACOES_BISSECAO = 200

    # ========================================================================
    # VERIFICAÇÃO
    # ========================================================================

    TOL_VERIFICACAO = 1e-9
    TOL_PUREZA = 1e-10

    # θ mínimo das tuplas sorteadas; abaixo disso o numerador de Pearson
    # perde ~1e-16/sin²2θ por cancelamento
    THETA_MINIMO_VERIFICACAO = 1e-2

    SEMENTE_PADRAO = 7
    TUPLAS_PADRAO = 1000
    TUPLAS_APENDICE = 500
    TUPLAS_PUREZA = 200

    # ========================================================================
    # AMBIENTE
    # ========================================================================

    VAR_WORKERS = "ES_WORKERS"
    VAR_LOG_LEVEL = "ES_LOG_LEVEL"

    @classmethod
    def workers_padrao(cls) -> int:
        """Número de workers padrão lido de ES_WORKERS (1 se ausente)."""
        bruto = os.environ.get(cls.VAR_WORKERS, "").strip()
        if not bruto:
            return 1
        try:
            valor = int(bruto)
        except ValueError as exc:
            raise ErroConfiguracao(f"{cls.VAR_WORKERS} inválido: {bruto!r}") from exc
        if valor < 1:
            raise ErroConfiguracao(f"{cls.VAR_WORKERS} deve ser >= 1, recebido {valor}")
        return valor

    @classmethod
    def nivel_log(cls) -> int:
        """Nível de logging lido de ES_LOG_LEVEL (INFO se ausente ou inválido)."""
        nome = os.environ.get(cls.VAR_LOG_LEVEL, "INFO").strip().upper()
        nivel = logging.getLevelName(nome)
        return nivel if isinstance(nivel, int) else logging.INFO
