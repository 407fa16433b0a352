"""
Módulo responsável pela testemunha PPT e pelos espectros fechados.

A transposta parcial é tomada no segundo qubit; o veredito de emaranhamento é
o autovalor mínimo abaixo de -1e-10.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from app.core.erros import ErroDominio
from app.utils.simulador_config import SimuladorConfig
from .algebra import hermitian_eigenvalues, partial_transpose
from .cenario import TipoCenario
from .quantico import MatrizDensidade, TipoMedicao, perturbacao, purity


class FamiliaApendice(Enum):
    UNILATERAL_FRACA = "unilateral-weak"
    UNILATERAL_PPM = "unilateral-ppm"
    BILATERAL_FRACA_SIMETRICA = "bilateral-weak-symmetric"
    BILATERAL_FRACA_ASSIMETRICA = "bilateral-weak-asym"
    BILATERAL_PPM_SIMETRICA = "bilateral-ppm-symmetric"
    BILATERAL_PPM_ASSIMETRICA = "bilateral-ppm-asym"

    @property
    def cenario(self) -> TipoCenario:
        return TipoCenario.UNILATERAL if self.value.startswith("unilateral") else TipoCenario.BILATERAL

    @property
    def medicao(self) -> TipoMedicao:
        return TipoMedicao.PPM if "-ppm" in self.value else TipoMedicao.FRACA

    @property
    def simetrica(self) -> bool:
        return self.value.endswith("symmetric")

    @property
    def assimetrica(self) -> bool:
        return self.value.endswith("asym")


@dataclass(frozen=True)
class RelatorioPPT:
    autovalores: Tuple[float, float, float, float]
    autovalor_minimo: float
    emaranhado: bool
    mistura: float


def ppt_report(rho: MatrizDensidade) -> RelatorioPPT:
    """
    Espectro da transposta parcial e veredito PPT.

    Args:
        rho: Estado de dois qubits

    Returns:
        Autovalores crescentes, mínimo, veredito e Tr[ρ²]
    """
    autovalores = tuple(hermitian_eigenvalues(partial_transpose(rho.mat, "second")))
    minimo = autovalores[0]
    return RelatorioPPT(
        autovalores,
        minimo,
        minimo < SimuladorConfig.LIMIAR_NEGATIVIDADE,
        purity(rho),
    )


# ==========================================================================
# ESPECTROS FECHADOS
# ==========================================================================


def _validar_ganhos(familia: FamiliaApendice, theta: float, ganhos: Sequence[float]) -> None:
    esperados = 2 if familia.cenario is TipoCenario.UNILATERAL else 4
    if len(ganhos) != esperados:
        raise ErroDominio(f"{familia.value}: esperados {esperados} ganhos")
    if any(not 0.0 < g <= 1.0 for g in ganhos):
        raise ErroDominio(f"{familia.value}: ganhos {tuple(ganhos)} fora de (0, 1]")
    if not 0.0 <= theta <= math.pi / 2 + 1e-15:
        raise ErroDominio(f"{familia.value}: θ = {theta!r} fora do domínio")
    if familia.simetrica and max(ganhos) - min(ganhos) > 1e-12:
        raise ErroDominio(f"{familia.value}: família simétrica exige ganhos iguais")
    if familia.assimetrica:
        if abs(theta - math.pi / 4) > 1e-12 or abs(ganhos[0] - 1) > 1e-12 or abs(ganhos[2] - 1) > 1e-12:
            raise ErroDominio(f"{familia.value}: exige θ = π/4 e G₁ = G₃ = 1")


def _lista_unilateral(F1: float, F2: float, t1: float, t2: float, G1: float, s: float):
    if F2 >= 1.0:
        raise ErroDominio("espectro unilateral exige F₂ < 1")
    raiz_12 = math.sqrt(max(0.0, 1 - 8 * t2 * s**2 / (3 + F2) ** 2))
    raiz_34 = math.sqrt(1 + 4 * (-(G1**2) + t1 * t2) * s**2 / (1 - F2) ** 2)
    return (
        (3 + F2) * (1 - raiz_12) / 8,
        (3 + F2) * (1 + raiz_12) / 8,
        (1 - F2) * (1 - raiz_34) / 8,
        (1 - F2) * (1 + raiz_34) / 8,
    )


def _lista_unilateral_ppm(G1: float, G2: float, s: float):
    raiz_12 = math.sqrt(max(0.0, 1 - 8 * (2 - G2) * s**2 / (4 - G2) ** 2))
    raiz_34 = math.sqrt(1 + 4 * (2 - G1) * (2 - G1 - G2) * s**2 / G2**2)
    return (
        (4 - G2) * (1 - raiz_12) / 8,
        (4 - G2) * (1 + raiz_12) / 8,
        G2 * (1 - raiz_34) / 8,
        G2 * (1 + raiz_34) / 8,
    )


def _lista_bilateral_fraca_simetrica(G: float, F: float, theta: float):
    s, cos4 = math.sin(2 * theta), math.cos(4 * theta)
    raiz_12 = math.sqrt(
        max(
            0.0,
            20 + 12 * F + 2 * G**2 * (-8 + 3 * F) + (12 + 20 * F - 6 * G**2 * F) * cos4 + 9 * G**4 * s**2,
        )
    )
    raiz_34 = math.sqrt(max(0.0, (25 * G**4 + 8 * (5 + 3 * F) - 4 * G**2 * (16 + 5 * F)) * s**2))
    return (
        (6 - G**2 + 2 * F - raiz_12) / 16,
        (6 - G**2 + 2 * F + raiz_12) / 16,
        (2 + G**2 - 2 * F - raiz_34) / 16,
        (2 + G**2 - 2 * F + raiz_34) / 16,
    )


def _lista_bilateral_ppm_simetrica(G: float, theta: float):
    s, cos4 = math.sin(2 * theta), math.cos(4 * theta)
    raiz_12 = math.sqrt(2) * math.sqrt(
        max(
            0.0,
            64 + G * (-64 + G * (32 + 3 * G * (-8 + 3 * G))) + (64 - 64 * G + 24 * G**3 - 9 * G**4) * cos4,
        )
    )
    raiz_34 = math.sqrt((8 + G * (-12 + 5 * G)) ** 2 * s**2)
    return (
        (16 + 2 * (-4 + G) * G - raiz_12) / 32,
        (16 + 2 * (-4 + G) * G + raiz_12) / 32,
        ((4 - G) * G - raiz_34) / 16,
        ((4 - G) * G + raiz_34) / 16,
    )


def _lista_assimetrica(F2: float, F4: float):
    return (
        (4 + F4 + F2 * (1 + 2 * F4)) / 16,
        (6 + F2 + F4) / 16,
        (2 - F4 - F2 * (1 + 2 * F4)) / 16,
        (4 - F2 - F4) / 16,
    )


def appendix_eigs(
    familia: FamiliaApendice, theta: float, ganhos: Sequence[float]
) -> Tuple[float, float, float, float]:
    """
    Autovalores fechados da transposta parcial do estado do segundo par.

    Args:
        familia: Família do espectro
        theta: Ângulo do estado inicial
        ganhos: (G₁, G₂) ou (G₁..G₄) com a restrição da família

    Returns:
        Os quatro autovalores na ordem da lista (e₁..e₄, f₁..f₄ ou u₁..u₄)
    """
    _validar_ganhos(familia, theta, ganhos)
    F = [perturbacao(familia.medicao, g) for g in ganhos]
    s = math.sin(2 * theta)
    if familia is FamiliaApendice.UNILATERAL_FRACA:
        return _lista_unilateral(F[0], F[1], 1 + F[0], 1 + F[1], ganhos[0], s)
    if familia is FamiliaApendice.UNILATERAL_PPM:
        return _lista_unilateral_ppm(ganhos[0], ganhos[1], s)
    if familia is FamiliaApendice.BILATERAL_FRACA_SIMETRICA:
        return _lista_bilateral_fraca_simetrica(ganhos[0], F[0], theta)
    if familia is FamiliaApendice.BILATERAL_PPM_SIMETRICA:
        return _lista_bilateral_ppm_simetrica(ganhos[0], theta)
    return _lista_assimetrica(F[1], F[3])


def mixedness_closed_form(familia: FamiliaApendice, theta: float, ganhos: Sequence[float]) -> float:
    """
    Pureza fechada do estado do segundo par no cenário unilateral.

    A expressão fraca vale apenas em θ = π/4; a PPM vale para todo θ.
    """
    if familia not in (FamiliaApendice.UNILATERAL_FRACA, FamiliaApendice.UNILATERAL_PPM):
        raise ErroDominio(f"sem pureza fechada para {familia.value}")
    _validar_ganhos(familia, theta, ganhos)
    F1, F2 = (perturbacao(familia.medicao, g) for g in ganhos)
    t1, t2 = 1 + F1, 1 + F2
    if familia is FamiliaApendice.UNILATERAL_FRACA:
        if abs(theta - math.pi / 4) > 1e-12:
            raise ErroDominio("pureza fechada fraca definida só em θ = π/4")
        return (2 + F1**2 + F2**2 + t1 * t2) / 8
    return (8 + F1 * t1 + (t1 + 2 * t2) * F2 + (1 - F1) * (t1 + t2) * math.cos(4 * theta)) / 16


def limiar_theta(familia: FamiliaApendice, G: float) -> Optional[float]:
    """
    θ acima do qual o terceiro autovalor fica negativo (famílias simétricas).

    Returns:
        θ* em [0, π/4] ou None se o estado nunca fica emaranhado
    """
    if familia is FamiliaApendice.BILATERAL_FRACA_SIMETRICA:
        F = math.sqrt(max(0.0, 1 - G * G))
        argumento = (2 + G**2 - 2 * F) / (6 + 2 * F - 5 * G**2)
    elif familia is FamiliaApendice.BILATERAL_PPM_SIMETRICA:
        argumento = (4 * G - G**2) / (8 - 12 * G + 5 * G**2)
    else:
        raise ErroDominio(f"sem limiar angular para {familia.value}")
    if argumento > 1.0:
        return None
    return 0.5 * math.asin(argumento)
