"""
Módulo responsável pelos três critérios de complementaridade.

Informação mútua e soma de condicionais casadas usam as marginais de cada par
nas bases Z e X; Pearson usa momentos de operadores no estado entregue ao par.
Entropias em log natural, convertidas para bits no final.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from app.core.erros import ErroCondicionalIndefinida, ErroVarianciaSingular
from app.utils.simulador_config import SimuladorConfig
from .algebra import I2
from .cenario import ConfigCenario, DistribuicaoResultados, marginal_pair, pair_state, pauli_moments
from .constantes import (
    LIMIAR_INFORMACAO,
    LIMIAR_PEARSON,
    LIMIAR_SOMA_INFERIOR,
    LIMIAR_SOMA_SUPERIOR,
    STATUS_CONDICIONAL_INDEFINIDA,
    STATUS_PEARSON_SINGULAR,
)
from .quantico import Base, MatrizDensidade


class TipoCriterio(Enum):
    INFORMACAO_MUTUA = "I"
    SOMA_CONDICIONAL = "S"
    PEARSON = "C"


@dataclass(frozen=True)
class ValorCriterio:
    tipo: TipoCriterio
    par: int
    termo_z: float
    termo_x: float
    total: float


def _entropia_nats(p: np.ndarray) -> float:
    p = p[p > 0.0]
    return float(-np.sum(p * np.log(p)))


def mutual_information(dist: DistribuicaoResultados) -> float:
    """
    I(A:B) = H(A) - H(A|B) em bits.

    Args:
        dist: Distribuição normalizada do par

    Returns:
        Informação mútua em [0, 1]
    """
    tabela = dist.como_tabela()
    h_a = _entropia_nats(tabela.sum(axis=1))
    h_b = _entropia_nats(tabela.sum(axis=0))
    h_ab = _entropia_nats(tabela.ravel())
    return (h_a + h_b - h_ab) / math.log(2.0)


def matched_conditional_sum(dist: DistribuicaoResultados) -> float:
    """P(a=+1|b=+1) + P(a=-1|b=-1)."""
    p = dist.probabilidades
    soma = 0.0
    for resultado in (+1, -1):
        marginal_b = p[(+1, resultado)] + p[(-1, resultado)]
        if marginal_b <= 0.0:
            raise ErroCondicionalIndefinida(resultado)
        soma += p[(resultado, resultado)] / marginal_b
    return soma


def pearson(momentos: Tuple[float, float, float], base: Optional[str] = None) -> float:
    """
    Coeficiente de Pearson a partir de momentos de Pauli.

    Args:
        momentos: (corr, média A, média B)
        base: Rótulo usado na mensagem de erro

    Returns:
        (corr - mA·mB)/√((1-mA²)(1-mB²))
    """
    corr, media_a, media_b = momentos
    var_a, var_b = 1.0 - media_a * media_a, 1.0 - media_b * media_b
    if var_a < SimuladorConfig.EPS_VARIANCIA or var_b < SimuladorConfig.EPS_VARIANCIA:
        raise ErroVarianciaSingular(base, var_a, var_b)
    return (corr - media_a * media_b) / math.sqrt(var_a * var_b)


def momentos_operador(
    rho: MatrizDensidade, op_a: np.ndarray, op_b: np.ndarray
) -> Tuple[float, float, float, float, float]:
    """
    Momentos de operadores locais quaisquer.

    Returns:
        (⟨A⊗B⟩, ⟨A⟩, ⟨B⟩, Var A, Var B)
    """
    mat = rho.mat

    def esperanca(op: np.ndarray) -> float:
        return float(np.trace(op @ mat).real)

    corr = esperanca(np.kron(op_a, op_b))
    media_a = esperanca(np.kron(op_a, I2))
    media_b = esperanca(np.kron(I2, op_b))
    var_a = esperanca(np.kron(op_a @ op_a, I2)) - media_a**2
    var_b = esperanca(np.kron(I2, op_b @ op_b)) - media_b**2
    return corr, media_a, media_b, var_a, var_b


def pearson_operadores(rho: MatrizDensidade, op_a: np.ndarray, op_b: np.ndarray) -> float:
    """Pearson com operadores arbitrários; invariante a transformações afins."""
    corr, media_a, media_b, var_a, var_b = momentos_operador(rho, op_a, op_b)
    if var_a < SimuladorConfig.EPS_VARIANCIA or var_b < SimuladorConfig.EPS_VARIANCIA:
        raise ErroVarianciaSingular(None, var_a, var_b)
    return (corr - media_a * media_b) / math.sqrt(var_a * var_b)


def _valor(tipo: TipoCriterio, k: int, z: float, x: float) -> ValorCriterio:
    total = abs(z) + abs(x) if tipo is TipoCriterio.PEARSON else z + x
    return ValorCriterio(tipo, k, z, x, total)


def criterion(config: ConfigCenario, tipo: TipoCriterio, k: int) -> ValorCriterio:
    """
    Avalia um critério para o par k.

    Args:
        config: Cenário
        tipo: Critério
        k: Índice do par

    Returns:
        Termos Z e X e o total do critério
    """
    if tipo is TipoCriterio.PEARSON:
        rho = pair_state(config, k)
        z = pearson(pauli_moments(rho, Base.Z), "Z")
        x = pearson(pauli_moments(rho, Base.X), "X")
        return _valor(tipo, k, z, x)
    funcao = mutual_information if tipo is TipoCriterio.INFORMACAO_MUTUA else matched_conditional_sum
    return _valor(tipo, k, funcao(marginal_pair(config, k, 1)), funcao(marginal_pair(config, k, 2)))


def viola(tipo: TipoCriterio, total: float) -> bool:
    """Total acima (ou, para S, também abaixo) do limiar de emaranhamento."""
    if tipo is TipoCriterio.INFORMACAO_MUTUA:
        return total > LIMIAR_INFORMACAO
    if tipo is TipoCriterio.SOMA_CONDICIONAL:
        return total > LIMIAR_SOMA_SUPERIOR or total < LIMIAR_SOMA_INFERIOR
    return total > LIMIAR_PEARSON


def violacao_dupla(tipo: TipoCriterio, total_1: float, total_2: float, *demais: float) -> bool:
    """Todos os pares violam; para S todos do mesmo lado do intervalo [1, 3]."""
    totais = (total_1, total_2, *demais)
    if tipo is TipoCriterio.SOMA_CONDICIONAL:
        return all(t > LIMIAR_SOMA_SUPERIOR for t in totais) or all(t < LIMIAR_SOMA_INFERIOR for t in totais)
    return all(viola(tipo, t) for t in totais)


@dataclass
class ResultadoPonto:
    """Os seis critérios de um ponto; None marca valor indefinido."""

    valores: Dict[Tuple[TipoCriterio, int], Optional[ValorCriterio]] = field(default_factory=dict)
    status: Tuple[str, ...] = ()
    pares: int = 2

    def total(self, tipo: TipoCriterio, k: int) -> float:
        valor = self.valores.get((tipo, k))
        return math.nan if valor is None else valor.total

    def _totais(self, tipo: TipoCriterio) -> List[float]:
        return [self.total(tipo, k) for k in range(1, self.pares + 1)]

    def minimo(self, tipo: TipoCriterio) -> float:
        """min sobre os pares; NaN se algum for indefinido."""
        totais = self._totais(tipo)
        return math.nan if any(math.isnan(t) for t in totais) else min(totais)

    def dupla(self, tipo: TipoCriterio) -> bool:
        totais = self._totais(tipo)
        if len(totais) < 2 or any(math.isnan(t) for t in totais):
            return False
        return violacao_dupla(tipo, *totais)


def avaliar_ponto(config: ConfigCenario) -> ResultadoPonto:
    """
    Os critérios I, S e C de cada par compartilhando as marginais.

    Variância singular e condicional indefinida viram status em vez de erro.
    """
    resultado = ResultadoPonto(pares=config.numero_pares)
    status = []
    for k in range(1, config.numero_pares + 1):
        marginais = (marginal_pair(config, k, 1), marginal_pair(config, k, 2))
        resultado.valores[(TipoCriterio.INFORMACAO_MUTUA, k)] = _valor(
            TipoCriterio.INFORMACAO_MUTUA, k, *(mutual_information(d) for d in marginais)
        )
        try:
            resultado.valores[(TipoCriterio.SOMA_CONDICIONAL, k)] = _valor(
                TipoCriterio.SOMA_CONDICIONAL, k, *(matched_conditional_sum(d) for d in marginais)
            )
        except ErroCondicionalIndefinida:
            resultado.valores[(TipoCriterio.SOMA_CONDICIONAL, k)] = None
            if STATUS_CONDICIONAL_INDEFINIDA not in status:
                status.append(STATUS_CONDICIONAL_INDEFINIDA)
        try:
            resultado.valores[(TipoCriterio.PEARSON, k)] = criterion(config, TipoCriterio.PEARSON, k)
        except ErroVarianciaSingular:
            resultado.valores[(TipoCriterio.PEARSON, k)] = None
            if STATUS_PEARSON_SINGULAR not in status:
                status.append(STATUS_PEARSON_SINGULAR)
    resultado.status = tuple(status)
    return resultado
