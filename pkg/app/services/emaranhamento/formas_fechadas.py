"""
Expressões fechadas dos critérios I, S e C por cenário, estratégia e par.

Funções auxiliares:
    X1(a)   = a ln a + (2 - a) ln(2 - a)
    X2(a,b) = a ln a + (b - a) ln(b - a)
    t(F)    = 1 + F
    f(F)    = 4 - t(F)² cos²2θ
com 0·ln 0 = 0. F vem de G pela lei da estratégia: √(1 - G²) (fraca) ou
1 - G (PPM).
"""

import math
from dataclasses import dataclass
from typing import Callable, Dict, Sequence

from app.core.erros import ErroDominio
from app.core.metrics import metricas
from .cenario import TipoCenario
from .criterios import TipoCriterio
from .quantico import TipoMedicao, perturbacao

LN2 = math.log(2.0)


def _xlnx(a: float) -> float:
    if a < 0.0:
        if a > -1e-12:
            return 0.0
        raise ErroDominio(f"argumento negativo em a·ln a: {a!r}")
    return 0.0 if a == 0.0 else a * math.log(a)


def X1(a: float) -> float:
    return _xlnx(a) + _xlnx(2.0 - a)


def X2(a: float, b: float) -> float:
    return _xlnx(a) + _xlnx(b - a)


def t(F: float) -> float:
    return 1.0 + F


def f(F: float, theta: float) -> float:
    return 4.0 - t(F) ** 2 * math.cos(2.0 * theta) ** 2


@dataclass(frozen=True)
class FamiliaForma:
    """Critério × cenário × estratégia × par."""

    criterio: TipoCriterio
    cenario: TipoCenario
    medicao: TipoMedicao
    par: int

    @property
    def nome(self) -> str:
        return f"{self.cenario.value}-{self.medicao.value}-{self.criterio.value}{self.par}"


class _Parametros:
    """Valores derivados de (θ, G) usados pelas expressões."""

    def __init__(self, theta: float, ganhos: Sequence[float], medicao: TipoMedicao):
        self.theta = theta
        self.s = math.sin(2.0 * theta)
        self.c = math.cos(2.0 * theta)
        self.sen2 = math.sin(theta) ** 2
        self.G = (None,) + tuple(ganhos)
        self.F = (None,) + tuple(perturbacao(medicao, g) for g in ganhos)
        self.t = (None,) + tuple(t(F) for F in self.F[1:])

    def f(self, i: int) -> float:
        return f(self.F[i], self.theta)


# ==========================================================================
# UNILATERAL / FRACA (também usada pela PPM para I₂, S e C)
# ==========================================================================


def _i1_unilateral_fraca(p: _Parametros) -> float:
    G1, G2 = p.G[1], p.G[2]
    return (X1(1 - G1) + X1(1 - G2 * p.s) - X1(1 - G1 * p.c)) / (2 * LN2)


def _i2_unilateral(p: _Parametros) -> float:
    return (
        X1((1 - p.F[2]) / 2) + X1(1 - p.t[1] * p.s / 2) - X1(1 - p.t[2] * p.c / 2)
    ) / (2 * LN2)


def _s1_unilateral(p: _Parametros) -> float:
    return 2 + p.G[1] + p.G[2] * p.s


def _s2_unilateral(p: _Parametros) -> float:
    return 2 + 0.5 * (p.t[2] + p.t[1] * p.s)


def _c1(p: _Parametros) -> float:
    return 1 + p.s


def _c2_unilateral(p: _Parametros) -> float:
    return p.t[1] * p.s / 2 + p.t[2] * p.s / math.sqrt(p.f(2))


# ==========================================================================
# UNILATERAL / PPM
# ==========================================================================


def _i1_unilateral_ppm(p: _Parametros) -> float:
    G1, G2 = p.G[1], p.G[2]
    return (
        1
        - p.sen2
        + (X1(G2 * (1 - p.s)) + X1(G2 * (1 + p.s))) / (4 * LN2)
        - (X1(G1 * (1 - p.c)) + X1(G2) - X1(2 * G1) * p.sen2) / (2 * LN2)
    )


# ==========================================================================
# BILATERAL / FRACA (também usada pela PPM para I₂, S₂ e C)
# ==========================================================================


def _i1_bilateral_fraca(p: _Parametros) -> float:
    G1, G2, G3, G4 = p.G[1:]
    s, c = p.s, p.c
    return (
        2 * X1(1 - G2 * G4 * s)
        + X2(1 - G1 * G3 + (G3 - G1) * c, 2 * (1 - G1 * G3))
        - 2 * X1(1 + G3 * c)
        + X2(1 + G1 * G3 + (G1 + G3) * c, 2 * (1 + G1 * G3))
        - 2 * X1(1 - G1 * c)
    ) / (4 * LN2)


def _i2_bilateral(p: _Parametros) -> float:
    t1, t2, t3, t4 = p.t[1:]
    F2, F4 = p.F[2], p.F[4]
    s, c = p.s, p.c
    return -2 + (
        X1(1 + t1 * t3 * s / 4)
        - X1(1 - t2 * c / 2)
        - X1(1 + t4 * c / 2)
        + (
            X2(4 - t2 * t4 - 2 * (F2 - F4) * c, 8 - 4 * t2 * c)
            + X2(4 - t2 * t4 + 2 * (F2 - F4) * c, 8 + 4 * t2 * c)
        )
        / 8
    ) / (2 * LN2)


def _s1_bilateral_fraca(p: _Parametros) -> float:
    G1, G2, G3, G4 = p.G[1:]
    return 2 + G2 * G4 * p.s + G1 * G3 * p.s**2 / (1 - G3**2 * p.c**2)


def _s2_bilateral(p: _Parametros) -> float:
    return 2 + p.t[1] * p.t[3] * p.s / 4 + p.t[2] * p.t[4] * p.s**2 / p.f(4)


def _c2_bilateral(p: _Parametros) -> float:
    return p.t[1] * p.t[3] * p.s / 4 + p.t[2] * p.t[4] * p.s**2 / math.sqrt(p.f(2) * p.f(4))


# ==========================================================================
# BILATERAL / PPM
# ==========================================================================


def _s1_bilateral_ppm(p: _Parametros) -> float:
    G1, G2, G3, G4 = p.G[1:]
    return 2 + G2 * p.s / (2 - G4) + G1 * math.cos(p.theta) ** 2 / (1 - G3 * p.sen2)


def _i1_bilateral_ppm(p: _Parametros) -> float:
    # Transcrição literal; o símbolo sem definição do termo G₃ sin²θ X(a,1)
    # é lido como a = G₁. Fora da suíte de equivalência.
    G1, G2, G3, G4 = p.G[1:]
    s, c, sen2 = p.s, p.c, p.sen2
    q = 1 - G3 * sen2
    return (
        1
        + (
            G4 * X1(G2 * (math.cos(p.theta) + sen2))
            + X2(G2 * (2 - G4 - G4 * s), 4 - 2 * G4)
            - 2 * (2 - G4) * math.log(2 - G4)
            - 2 * X1(G2)
            - 2 * X1(G1 * (1 - c))
        )
        / (4 * LN2)
        + (G3 * sen2 * X2(G1, 1) + X2(G1 * (1 - G3) * sen2, q) - _xlnx(q)) / LN2
    )


_I, _S, _C = TipoCriterio.INFORMACAO_MUTUA, TipoCriterio.SOMA_CONDICIONAL, TipoCriterio.PEARSON
_UNI, _BI = TipoCenario.UNILATERAL, TipoCenario.BILATERAL
_FRACA, _PPM = TipoMedicao.FRACA, TipoMedicao.PPM

FORMAS_FECHADAS: Dict[FamiliaForma, Callable[[_Parametros], float]] = {
    FamiliaForma(_I, _UNI, _FRACA, 1): _i1_unilateral_fraca,
    FamiliaForma(_I, _UNI, _FRACA, 2): _i2_unilateral,
    FamiliaForma(_S, _UNI, _FRACA, 1): _s1_unilateral,
    FamiliaForma(_S, _UNI, _FRACA, 2): _s2_unilateral,
    FamiliaForma(_C, _UNI, _FRACA, 1): _c1,
    FamiliaForma(_C, _UNI, _FRACA, 2): _c2_unilateral,
    FamiliaForma(_I, _UNI, _PPM, 1): _i1_unilateral_ppm,
    FamiliaForma(_I, _UNI, _PPM, 2): _i2_unilateral,
    FamiliaForma(_S, _UNI, _PPM, 1): _s1_unilateral,
    FamiliaForma(_S, _UNI, _PPM, 2): _s2_unilateral,
    FamiliaForma(_C, _UNI, _PPM, 1): _c1,
    FamiliaForma(_C, _UNI, _PPM, 2): _c2_unilateral,
    FamiliaForma(_I, _BI, _FRACA, 1): _i1_bilateral_fraca,
    FamiliaForma(_I, _BI, _FRACA, 2): _i2_bilateral,
    FamiliaForma(_S, _BI, _FRACA, 1): _s1_bilateral_fraca,
    FamiliaForma(_S, _BI, _FRACA, 2): _s2_bilateral,
    FamiliaForma(_C, _BI, _FRACA, 1): _c1,
    FamiliaForma(_C, _BI, _FRACA, 2): _c2_bilateral,
    FamiliaForma(_I, _BI, _PPM, 1): _i1_bilateral_ppm,
    FamiliaForma(_I, _BI, _PPM, 2): _i2_bilateral,
    FamiliaForma(_S, _BI, _PPM, 1): _s1_bilateral_ppm,
    FamiliaForma(_S, _BI, _PPM, 2): _s2_bilateral,
    FamiliaForma(_C, _BI, _PPM, 1): _c1,
    FamiliaForma(_C, _BI, _PPM, 2): _c2_bilateral,
}

# Famílias cuja transcrição não entra na suíte de equivalência
FAMILIAS_EXCLUIDAS = frozenset({FamiliaForma(_I, _BI, _PPM, 1)})


def closed_form(familia: FamiliaForma, theta: float, ganhos: Sequence[float]) -> float:
    """
    Avalia a expressão fechada de uma família.

    Args:
        familia: Critério, cenário, estratégia e par
        theta: Ângulo em [0, π/2]
        ganhos: (G₁, G₂) no unilateral ou (G₁..G₄) no bilateral, em [0, 1]

    Returns:
        Valor real do critério
    """
    funcao = FORMAS_FECHADAS.get(familia)
    if funcao is None:
        raise ErroDominio(f"família sem forma fechada: {familia}")
    esperados = 2 if familia.cenario is TipoCenario.UNILATERAL else 4
    if len(ganhos) != esperados:
        raise ErroDominio(f"{familia.nome}: esperados {esperados} ganhos, recebidos {len(ganhos)}")
    if not 0.0 <= theta <= math.pi / 2 + 1e-15:
        raise ErroDominio(f"{familia.nome}: θ = {theta!r} fora do domínio")
    if any(not 0.0 <= g <= 1.0 for g in ganhos):
        raise ErroDominio(f"{familia.nome}: ganhos {tuple(ganhos)} fora de [0, 1]")
    metricas["avaliacoes_fechadas"] += 1
    try:
        valor = funcao(_Parametros(theta, ganhos, familia.medicao))
    except (ZeroDivisionError, ValueError) as exc:
        if isinstance(exc, ErroDominio):
            raise
        raise ErroDominio(f"{familia.nome}: expressão singular em θ={theta!r}, G={tuple(ganhos)}") from exc
    if math.isnan(valor):
        raise ErroDominio(f"{familia.nome}: NaN em θ={theta!r}, G={tuple(ganhos)}")
    return valor
