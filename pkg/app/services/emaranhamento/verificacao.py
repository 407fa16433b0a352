"""
Módulo responsável pelas suítes de verificação do simulador.

Quatro suítes, todas determinísticas dada a semente:
    formas fechadas  - motor numérico contra a transcrição, por família
    apêndice         - espectros fechados da transposta parcial contra Jacobi
    pureza           - Tr[ρ²] fechado contra o estado do segundo par
    sinais           - padrão e₃ < 0 < e₁, e₂, e₄ numa grade 21³ unilateral

As tuplas vêm de ``numpy.random.default_rng(semente)`` (PCG64): θ uniforme em
[0.01, π/4) e ganhos 1 - u com u uniforme em [0, 1), logo em (0, 1].
"""

import math
from dataclasses import dataclass, field
from typing import Callable, List, Tuple

import numpy as np

from app.core.config import logger
from app.core.erros import ErroConfiguracao, ErroSimulacao
from app.utils.simulador_config import SimuladorConfig
from .cenario import ConfigCenario, TipoCenario, pair_state
from .criterios import criterion
from .formas_fechadas import FAMILIAS_EXCLUIDAS, FORMAS_FECHADAS, FamiliaForma, closed_form
from .quantico import purity
from .testemunha import FamiliaApendice, appendix_eigs, mixedness_closed_form, ppt_report

RESULTADO_OK = "PASS"
RESULTADO_FALHA = "FAIL"
RESULTADO_PULADO = "SKIPPED(open-question)"


@dataclass(frozen=True)
class ResultadoFamilia:
    familia: str
    tuplas: int
    desvio_maximo: float
    resultado: str

    def como_lista(self) -> list:
        return [self.familia, self.tuplas, self.desvio_maximo, self.resultado]


@dataclass
class RelatorioVerificacao:
    semente: int
    linhas: List[ResultadoFamilia] = field(default_factory=list)

    @property
    def aprovado(self) -> bool:
        return all(linha.resultado != RESULTADO_FALHA for linha in self.linhas)

    def como_listas(self) -> List[list]:
        return [linha.como_lista() for linha in self.linhas]


def _veredito(desvio: float, tolerancia: float) -> str:
    return RESULTADO_OK if desvio <= tolerancia else RESULTADO_FALHA


def _sortear_theta(rng: np.random.Generator) -> float:
    return float(rng.uniform(SimuladorConfig.THETA_MINIMO_VERIFICACAO, math.pi / 4))


def _sortear_ganhos(rng: np.random.Generator, n: int) -> List[float]:
    return [float(1.0 - u) for u in rng.random(n)]


def _configurar(cenario: TipoCenario, medicao, theta: float, ganhos) -> ConfigCenario:
    if cenario is TipoCenario.UNILATERAL:
        return ConfigCenario.unilateral(theta, medicao, *ganhos)
    return ConfigCenario.bilateral(theta, medicao, *ganhos)


def _maior_desvio(n: int, amostra: Callable[[], float]) -> float:
    """Maior desvio de ``n`` amostras; erro de domínio conta como desvio infinito."""
    maior = 0.0
    for _ in range(n):
        try:
            desvio = amostra()
        except (ErroSimulacao, ArithmeticError):
            desvio = math.inf
        if not desvio <= maior:
            maior = desvio
    return maior


# ==========================================================================
# SUÍTES
# ==========================================================================


def suite_formas_fechadas(semente: int, tuplas: int) -> List[ResultadoFamilia]:
    """Motor numérico ≡ forma fechada em cada família critério × cenário × estratégia × par."""
    rng = np.random.default_rng(semente)
    linhas = []
    for familia in FORMAS_FECHADAS:
        if familia in FAMILIAS_EXCLUIDAS:
            linhas.append(ResultadoFamilia(familia.nome, 0, math.nan, RESULTADO_PULADO))
            continue
        n_ganhos = 2 if familia.cenario is TipoCenario.UNILATERAL else 4

        def amostra(familia: FamiliaForma = familia, n_ganhos: int = n_ganhos) -> float:
            theta = _sortear_theta(rng)
            ganhos = _sortear_ganhos(rng, n_ganhos)
            config = _configurar(familia.cenario, familia.medicao, theta, ganhos)
            motor = criterion(config, familia.criterio, familia.par).total
            return abs(motor - closed_form(familia, theta, ganhos))

        desvio = _maior_desvio(tuplas, amostra)
        linhas.append(
            ResultadoFamilia(familia.nome, tuplas, desvio, _veredito(desvio, SimuladorConfig.TOL_VERIFICACAO))
        )
    return linhas


def _parametros_apendice(familia: FamiliaApendice, rng: np.random.Generator) -> Tuple[float, List[float]]:
    if familia.assimetrica:
        g2, g4 = _sortear_ganhos(rng, 2)
        return math.pi / 4, [1.0, g2, 1.0, g4]
    theta = _sortear_theta(rng)
    if familia.simetrica:
        return theta, _sortear_ganhos(rng, 1) * 4
    return theta, _sortear_ganhos(rng, 2)


def suite_apendice(semente: int, tuplas: int) -> List[ResultadoFamilia]:
    """Espectros fechados ≡ autovalores de Jacobi da transposta parcial (par 2)."""
    rng = np.random.default_rng(semente)
    linhas = []
    for familia in FamiliaApendice:

        def amostra(familia: FamiliaApendice = familia) -> float:
            theta, ganhos = _parametros_apendice(familia, rng)
            fechados = sorted(appendix_eigs(familia, theta, ganhos))
            config = _configurar(familia.cenario, familia.medicao, theta, ganhos)
            numericos = ppt_report(pair_state(config, 2)).autovalores
            return max(abs(a - b) for a, b in zip(fechados, numericos))

        desvio = _maior_desvio(tuplas, amostra)
        linhas.append(
            ResultadoFamilia(
                f"appendix-{familia.value}", tuplas, desvio, _veredito(desvio, SimuladorConfig.TOL_VERIFICACAO)
            )
        )
    return linhas


def suite_pureza(semente: int, tuplas: int) -> List[ResultadoFamilia]:
    """Tr[ρ²] fechado ≡ pureza do estado do segundo par (unilateral)."""
    rng = np.random.default_rng(semente)
    linhas = []
    for familia in (FamiliaApendice.UNILATERAL_FRACA, FamiliaApendice.UNILATERAL_PPM):

        def amostra(familia: FamiliaApendice = familia) -> float:
            theta = math.pi / 4 if familia is FamiliaApendice.UNILATERAL_FRACA else _sortear_theta(rng)
            ganhos = _sortear_ganhos(rng, 2)
            config = _configurar(familia.cenario, familia.medicao, theta, ganhos)
            return abs(mixedness_closed_form(familia, theta, ganhos) - purity(pair_state(config, 2)))

        desvio = _maior_desvio(tuplas, amostra)
        linhas.append(
            ResultadoFamilia(
                f"mixedness-{familia.value}", tuplas, desvio, _veredito(desvio, SimuladorConfig.TOL_PUREZA)
            )
        )
    return linhas


def suite_sinais(pontos: int = 21) -> List[ResultadoFamilia]:
    """
    Padrão de sinais do espectro unilateral numa grade pontos³.

    θ percorre (0, π/4] e os ganhos (0, 1), excluindo as bordas onde e₁ ou
    e₃ se anulam (θ = 0 ou G₁ = G₂ = 1).
    """
    thetas = [(i / pontos) * math.pi / 4 for i in range(1, pontos + 1)]
    ganhos = [i / (pontos + 1) for i in range(1, pontos + 1)]
    linhas = []
    for familia in (FamiliaApendice.UNILATERAL_FRACA, FamiliaApendice.UNILATERAL_PPM):
        violacoes = 0
        for theta in thetas:
            for g1 in ganhos:
                for g2 in ganhos:
                    e1, e2, e3, e4 = appendix_eigs(familia, theta, [g1, g2])
                    if not (e3 < 0.0 < min(e1, e2, e4)):
                        violacoes += 1
        linhas.append(
            ResultadoFamilia(
                f"sign-pattern-{familia.value}",
                pontos**3,
                float(violacoes),
                RESULTADO_OK if violacoes == 0 else RESULTADO_FALHA,
            )
        )
    return linhas


def verify(semente: int = SimuladorConfig.SEMENTE_PADRAO, tuplas: int = SimuladorConfig.TUPLAS_PADRAO) -> RelatorioVerificacao:
    """
    Roda as quatro suítes.

    Args:
        semente: Semente das tuplas sorteadas
        tuplas: Tuplas por família de forma fechada; apêndice e pureza usam
            no máximo 500 e 200

    Returns:
        Relatório com uma linha por família; ``aprovado`` é falso se alguma falhou
    """
    if tuplas < 1:
        raise ErroConfiguracao(f"tuplas deve ser >= 1, recebido {tuplas}")
    relatorio = RelatorioVerificacao(semente)
    relatorio.linhas.extend(suite_formas_fechadas(semente, tuplas))
    relatorio.linhas.extend(suite_apendice(semente, min(tuplas, SimuladorConfig.TUPLAS_APENDICE)))
    relatorio.linhas.extend(suite_pureza(semente, min(tuplas, SimuladorConfig.TUPLAS_PUREZA)))
    relatorio.linhas.extend(suite_sinais())
    falhas = [linha.familia for linha in relatorio.linhas if linha.resultado == RESULTADO_FALHA]
    logger.info(
        "Verificação concluída",
        log_type="verificacao",
        semente=semente,
        tuplas=tuplas,
        familias=len(relatorio.linhas),
        falhas=falhas,
    )
    return relatorio
