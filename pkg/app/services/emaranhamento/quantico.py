"""
Módulo responsável pelos estados de dois qubits e pelas estratégias de medição.

Cada estratégia (projetiva, fraca com intensidade η, PPM com probabilidade α)
vira um conjunto de operadores de Kraus rotulados ±1; os efeitos POVM de dois
resultados e os canais não lidos derivam desse conjunto.
"""

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Tuple

import numpy as np

from app.core.erros import (
    ErroAnguloInvalido,
    ErroDimensao,
    ErroEstadoInvalido,
    ErroGanhoInvalido,
)
from app.core.metrics import kraus_cache, metricas
from app.utils.simulador_config import SimuladorConfig
from .algebra import I2, desvio_hermitiano, hermitian_eigenvalues, hermitizar


class Base(Enum):
    """Bases mutuamente não enviesadas de um qubit."""

    Z = "Z"
    X = "X"

    @property
    def projetores(self) -> Tuple[np.ndarray, np.ndarray]:
        """(P₊, P₋) desta base."""
        return _PROJETORES[self]


_PROJETORES = {
    Base.Z: (
        np.array([[1, 0], [0, 0]], dtype=np.complex128),
        np.array([[0, 0], [0, 1]], dtype=np.complex128),
    ),
    Base.X: (
        0.5 * np.array([[1, 1], [1, 1]], dtype=np.complex128),
        0.5 * np.array([[1, -1], [-1, 1]], dtype=np.complex128),
    ),
}
for _par in _PROJETORES.values():
    for _p in _par:
        _p.setflags(write=False)


class TipoMedicao(Enum):
    PROJETIVA = "projective"
    FRACA = "weak"
    PPM = "ppm"


class Lado(Enum):
    A = "A"
    B = "B"


def perturbacao(tipo: TipoMedicao, ganho: float) -> float:
    """
    Fator de perturbação F de uma estratégia.

    Args:
        tipo: Tipo de medição
        ganho: η (fraca) ou α (PPM); ignorado para projetiva

    Returns:
        √(1-η²) para fraca, 1-α para PPM, 0 para projetiva
    """
    if tipo is TipoMedicao.PROJETIVA:
        return 0.0
    if tipo is TipoMedicao.FRACA:
        return math.sqrt(max(0.0, 1.0 - ganho * ganho))
    return 1.0 - ganho


@dataclass(frozen=True)
class EstrategiaMedicao:
    """Medição parametrizada numa base."""

    tipo: TipoMedicao
    base: Base
    ganho: float = 1.0

    def __post_init__(self):
        if self.tipo is TipoMedicao.PROJETIVA:
            object.__setattr__(self, "ganho", 1.0)
            return
        ganho = float(self.ganho)
        if not math.isfinite(ganho) or not 0.0 < ganho <= 1.0:
            raise ErroGanhoInvalido(f"ganho {self.ganho!r} fora de (0, 1]")
        object.__setattr__(self, "ganho", ganho)

    @property
    def perturbacao(self) -> float:
        return perturbacao(self.tipo, self.ganho)


@dataclass(frozen=True, eq=False)
class ConjuntoKraus:
    """Operadores de Kraus 2×2 com rótulo de resultado ±1."""

    operadores: Tuple[Tuple[np.ndarray, int], ...]

    @property
    def completo(self) -> bool:
        soma = sum(k.conj().T @ k for k, _ in self.operadores)
        return bool(np.max(np.abs(soma - I2)) <= SimuladorConfig.TOL_COMPLETUDE)

    def com_rotulo(self, rotulo: int) -> Tuple[np.ndarray, ...]:
        return tuple(k for k, r in self.operadores if r == rotulo)


@dataclass(frozen=True, eq=False)
class ParEfeitos:
    mais: np.ndarray
    menos: np.ndarray


@dataclass(frozen=True, eq=False)
class MatrizDensidade:
    """
    Estado de dois qubits: matriz 4×4 hermitiana de traço unitário.

    A construção checa hermiticidade e traço; ``verificar`` também checa a
    positividade pelo autossolver.
    """

    mat: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.mat, dtype=np.complex128)
        if m.shape != (4, 4):
            raise ErroDimensao(f"matriz densidade exige 4x4, recebido {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ErroEstadoInvalido("matriz densidade com entradas não finitas")
        desvio = desvio_hermitiano(m)
        if desvio > SimuladorConfig.TOL_HERMITICIDADE:
            raise ErroEstadoInvalido(f"estado não hermitiano (desvio {desvio:.3e})")
        traco = complex(np.trace(m))
        if abs(traco - 1.0) > SimuladorConfig.TOL_TRACO:
            raise ErroEstadoInvalido(f"traço {traco.real:.15g} != 1")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    def verificar(self) -> "MatrizDensidade":
        """Checa a positividade; devolve o próprio estado."""
        menor = hermitian_eigenvalues(self.mat)[0]
        if menor < SimuladorConfig.TOL_POSITIVIDADE:
            raise ErroEstadoInvalido(f"autovalor negativo {menor:.3e}")
        return self


def state_from_theta(theta: float) -> MatrizDensidade:
    """
    Estado puro cosθ|00⟩ + sinθ|11⟩.

    Args:
        theta: Ângulo em radianos, em [0, π/2]

    Returns:
        Matriz densidade do estado
    """
    theta = float(theta)
    if not math.isfinite(theta) or theta < 0.0 or theta > math.pi / 2 + 1e-15:
        raise ErroAnguloInvalido(f"θ = {theta!r} fora de [0, π/2]")
    psi = np.array([math.cos(theta), 0.0, 0.0, math.sin(theta)], dtype=np.complex128)
    return MatrizDensidade(np.outer(psi, psi.conj()))


def kraus_for(estrategia: EstrategiaMedicao) -> ConjuntoKraus:
    """
    Conjunto de Kraus de uma estratégia (com cache LRU).

    Fraca: K± = √((1±η)/2)P₊ + √((1∓η)/2)P₋. PPM: √αP₊ (+1), √αP₋ (-1) e
    √(1-α)I, agrupado no resultado +1. Projetiva equivale a fraca com η=1.

    Args:
        estrategia: Estratégia de medição

    Returns:
        Conjunto de Kraus completo, com arrays somente leitura
    """
    chave = (estrategia.tipo, estrategia.base, estrategia.ganho)
    conjunto = kraus_cache.get(chave)
    if conjunto is not None:
        metricas["cache_hits"] += 1
        return conjunto
    metricas["cache_misses"] += 1

    p_mais, p_menos = estrategia.base.projetores
    if estrategia.tipo is TipoMedicao.PPM:
        alfa = estrategia.ganho
        operadores = (
            (math.sqrt(alfa) * p_mais, +1),
            (math.sqrt(alfa) * p_menos, -1),
            (math.sqrt(1.0 - alfa) * I2, +1),
        )
    else:
        eta = estrategia.ganho
        a, b = math.sqrt((1.0 + eta) / 2.0), math.sqrt((1.0 - eta) / 2.0)
        operadores = ((a * p_mais + b * p_menos, +1), (b * p_mais + a * p_menos, -1))
    for k, _ in operadores:
        k.setflags(write=False)
    conjunto = ConjuntoKraus(operadores)
    kraus_cache[chave] = conjunto
    return conjunto


def effects_of(k: ConjuntoKraus) -> ParEfeitos:
    """Efeitos POVM: soma de K†K por rótulo."""
    mais = sum((op.conj().T @ op for op in k.com_rotulo(+1)), np.zeros((2, 2), complex))
    menos = sum((op.conj().T @ op for op in k.com_rotulo(-1)), np.zeros((2, 2), complex))
    return ParEfeitos(mais, menos)


def embed(op: np.ndarray, lado: Lado) -> np.ndarray:
    """Operador de um qubit levado a dois qubits (K⊗I ou I⊗K)."""
    return np.kron(op, I2) if lado is Lado.A else np.kron(I2, op)


@lru_cache(maxsize=1024)
def _embutidos(k: ConjuntoKraus, lado: Lado) -> Tuple[Tuple[np.ndarray, np.ndarray, int], ...]:
    return tuple((embed(op, lado), embed(op, lado).conj().T, r) for op, r in k.operadores)


def aplicar_ramo(mat: np.ndarray, k: ConjuntoKraus, rotulo: int, lado: Lado) -> np.ndarray:
    """Σ dos ramos com o rótulo dado sobre uma matriz 4×4 qualquer (não normalizada)."""
    saida = np.zeros((4, 4), dtype=np.complex128)
    for grande, grande_dag, r in _embutidos(k, lado):
        if r == rotulo:
            saida += grande @ mat @ grande_dag
    return saida


def apply_outcome(
    rho: MatrizDensidade, k: ConjuntoKraus, rotulo: int, lado: Lado
) -> Tuple[np.ndarray, float]:
    """
    Atualização seletiva de um lado para o resultado ``rotulo``.

    Args:
        rho: Estado atual
        k: Conjunto de Kraus
        rotulo: +1 ou -1
        lado: Lado.A ou Lado.B

    Returns:
        (matriz 4×4 não normalizada, probabilidade do resultado)
    """
    if rotulo not in (+1, -1):
        raise ValueError(f"rótulo deve ser ±1, recebido {rotulo!r}")
    saida = aplicar_ramo(rho.mat, k, rotulo, lado)
    return saida, float(np.trace(saida).real)


def canal_nao_lido(mat: np.ndarray, k: ConjuntoKraus, lado: Lado) -> np.ndarray:
    """Σ_K K ρ K† sobre uma matriz 4×4 qualquer, re-hermitizado."""
    saida = np.zeros((4, 4), dtype=np.complex128)
    for grande, grande_dag, _ in _embutidos(k, lado):
        saida += grande @ mat @ grande_dag
    return hermitizar(saida)


def unread_channel(rho: MatrizDensidade, k: ConjuntoKraus, lado: Lado) -> MatrizDensidade:
    """Canal não seletivo (resultado não lido) de um lado."""
    return MatrizDensidade(canal_nao_lido(rho.mat, k, lado))


def purity(rho: MatrizDensidade) -> float:
    """Tr[ρ²]."""
    return float(np.real(np.trace(rho.mat @ rho.mat)))
