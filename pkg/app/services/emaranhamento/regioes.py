"""
Fronteiras analíticas das regiões de violação dupla.

Cada região fixa todos os parâmetros menos um ganho livre e devolve o
intervalo aberto (lo, hi) onde os dois pares violam o critério. As curvas
descrevem fronteiras no plano (G₄, G₂) das estratégias assimétricas com
G₁ = G₃ = 1 e θ = π/4. Servem de gabarito para ``boundary_trace``.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

from app.core.erros import ErroDominio
from .cenario import FamiliaCenario, TipoCenario
from .criterios import TipoCriterio
from .quantico import TipoMedicao

Intervalo = Optional[Tuple[float, float]]

_TOL_ANGULO = 1e-12


# ==========================================================================
# INTERVALOS EM FUNÇÃO DE θ
# ==========================================================================


def _ganho_fraco(F: float) -> Intervalo:
    """Converte o limiar F > F* da lei fraca em G < √(1 - F*²)."""
    if F >= 1.0:
        return None
    if F <= 0.0:
        return (0.0, 1.0)
    return (0.0, math.sqrt(1.0 - F * F))


def _intervalo(lo: float, hi: float) -> Intervalo:
    lo, hi = max(lo, 0.0), min(hi, 1.0)
    return (lo, hi) if lo < hi else None


def _uni_fraca_s_g1(s: float, c: float) -> Intervalo:
    return _intervalo(0.0, math.sqrt(max(0.0, 2 * s - s * s)))


def _uni_fraca_s_g2(s: float, c: float) -> Intervalo:
    F = 1.0 / s - 1.0
    if F >= 1.0:
        return None
    return _intervalo(1.0 - s, math.sqrt(1.0 - max(F, 0.0) ** 2))


def _uni_fraca_c_g1(s: float, c: float) -> Intervalo:
    u = math.sqrt(4.0 / ((2 * s / (2 - s)) ** 2 + c * c))
    return _ganho_fraco(u - 1.0)


def _uni_fraca_c_g2(s: float, c: float) -> Intervalo:
    return _ganho_fraco(2.0 / s - 2.0 / math.sqrt(3 + s * s) - 1.0)


def _uni_ppm_s_g1(s: float, c: float) -> Intervalo:
    return _intervalo(0.0, s)


def _uni_ppm_s_g2(s: float, c: float) -> Intervalo:
    return _intervalo(1.0 - s, 2.0 - 1.0 / s)


def _uni_ppm_s_simetrica(s: float, c: float) -> Intervalo:
    return _intervalo(1.0 / (1 + s), 2 * s / (1 + s))


def _uni_ppm_c_g1(s: float, c: float) -> Intervalo:
    u = math.sqrt(4.0 / ((2 * s / (s - 2)) ** 2 + c * c))
    return _intervalo(0.0, 2.0 - u)


def _uni_ppm_c_g2(s: float, c: float) -> Intervalo:
    return _intervalo(0.0, 2.0 * (1 + 1 / math.sqrt(3 + s * s) - 1 / s))


def _bi_fraca_s_simetrica(s: float, c: float) -> Intervalo:
    return (1 / math.sqrt(2), math.sqrt(2 * (math.sqrt(2) - 1)))


def _bi_fraca_c_simetrica(s: float, c: float) -> Intervalo:
    return (0.0, math.sqrt(2 * (math.sqrt(2) - 1)))


def _bi_ppm_c_simetrica(s: float, c: float) -> Intervalo:
    return (0.0, 2 - math.sqrt(2))


@dataclass(frozen=True)
class RegiaoAnalitica:
    """
    Intervalo de violação dupla de um ganho livre.

    ``vinculados`` lista os ganhos amarrados ao livre (casos simétricos);
    ``theta_fixo`` restringe a expressão a um único ângulo.
    """

    familia: FamiliaCenario
    criterio: TipoCriterio
    livre: str
    fixos: Dict[str, float] = field(default_factory=dict)
    vinculados: Tuple[str, ...] = ()
    theta_fixo: Optional[float] = None
    funcao: Callable[[float, float], Intervalo] = field(default=None, compare=False)


_UNI_FRACA = FamiliaCenario(TipoCenario.UNILATERAL, TipoMedicao.FRACA)
_UNI_PPM = FamiliaCenario(TipoCenario.UNILATERAL, TipoMedicao.PPM)
_BI_FRACA = FamiliaCenario(TipoCenario.BILATERAL, TipoMedicao.FRACA)
_BI_PPM = FamiliaCenario(TipoCenario.BILATERAL, TipoMedicao.PPM)
_S, _C = TipoCriterio.SOMA_CONDICIONAL, TipoCriterio.PEARSON
_PI_4 = math.pi / 4
_TODOS_BILATERAIS = ("G2", "G3", "G4")

REGIOES: Dict[str, RegiaoAnalitica] = {
    "unilateral-weak-S-G1=1": RegiaoAnalitica(_UNI_FRACA, _S, "G2", {"G1": 1.0}, funcao=_uni_fraca_s_g1),
    "unilateral-weak-S-G2=1": RegiaoAnalitica(_UNI_FRACA, _S, "G1", {"G2": 1.0}, funcao=_uni_fraca_s_g2),
    "unilateral-weak-C-G1=1": RegiaoAnalitica(_UNI_FRACA, _C, "G2", {"G1": 1.0}, funcao=_uni_fraca_c_g1),
    "unilateral-weak-C-G2=1": RegiaoAnalitica(_UNI_FRACA, _C, "G1", {"G2": 1.0}, funcao=_uni_fraca_c_g2),
    "unilateral-ppm-S-G1=1": RegiaoAnalitica(_UNI_PPM, _S, "G2", {"G1": 1.0}, funcao=_uni_ppm_s_g1),
    "unilateral-ppm-S-G2=1": RegiaoAnalitica(_UNI_PPM, _S, "G1", {"G2": 1.0}, funcao=_uni_ppm_s_g2),
    "unilateral-ppm-S-symmetric": RegiaoAnalitica(
        _UNI_PPM, _S, "G1", vinculados=("G2",), funcao=_uni_ppm_s_simetrica
    ),
    "unilateral-ppm-C-G1=1": RegiaoAnalitica(_UNI_PPM, _C, "G2", {"G1": 1.0}, funcao=_uni_ppm_c_g1),
    "unilateral-ppm-C-G2=1": RegiaoAnalitica(_UNI_PPM, _C, "G1", {"G2": 1.0}, funcao=_uni_ppm_c_g2),
    "bilateral-weak-S-symmetric": RegiaoAnalitica(
        _BI_FRACA, _S, "G1", vinculados=_TODOS_BILATERAIS, theta_fixo=_PI_4, funcao=_bi_fraca_s_simetrica
    ),
    "bilateral-weak-C-symmetric": RegiaoAnalitica(
        _BI_FRACA, _C, "G1", vinculados=_TODOS_BILATERAIS, theta_fixo=_PI_4, funcao=_bi_fraca_c_simetrica
    ),
    "bilateral-ppm-C-symmetric": RegiaoAnalitica(
        _BI_PPM, _C, "G1", vinculados=_TODOS_BILATERAIS, theta_fixo=_PI_4, funcao=_bi_ppm_c_simetrica
    ),
}


def fronteira_analitica(nome: str, theta: float) -> Intervalo:
    """
    Intervalo aberto do ganho livre onde os dois pares violam o critério.

    Args:
        nome: Chave de ``REGIOES``
        theta: Ângulo do estado inicial, em (0, π/4]

    Returns:
        (lo, hi) ou None se a região é vazia nesse ângulo
    """
    regiao = REGIOES.get(nome)
    if regiao is None:
        raise ErroDominio(f"região desconhecida: {nome!r}")
    if not 0.0 < theta <= _PI_4 + _TOL_ANGULO:
        raise ErroDominio(f"{nome}: θ = {theta!r} fora de (0, π/4]")
    if regiao.theta_fixo is not None and abs(theta - regiao.theta_fixo) > _TOL_ANGULO:
        raise ErroDominio(f"{nome}: expressão válida só em θ = π/4")
    return regiao.funcao(math.sin(2 * theta), math.cos(2 * theta))


# ==========================================================================
# CURVAS NO PLANO (G₄, G₂), θ = π/4, G₁ = G₃ = 1
# ==========================================================================


def _curva_ppm_soma(G4: float) -> Optional[float]:
    # (2 - G₂)(2 - G₄) = 3
    if G4 > 0.5:
        return None
    return (1 - 2 * G4) / (2 - G4)


def _curva_fraca_soma(G4: float) -> Optional[float]:
    # (1 + F₂)(1 + F₄) = 3
    F4 = math.sqrt(max(0.0, 1 - G4 * G4))
    F2 = 3 / (1 + F4) - 1
    if F2 > 1.0:
        return None
    return math.sqrt(max(0.0, 1 - F2 * F2))


def _separavel(F4: float) -> Optional[float]:
    if F4 < 1.0 / 3.0:
        return None
    return (2 - F4) / (1 + 2 * F4)


def _curva_fraca_separabilidade(G4: float) -> Optional[float]:
    F2 = _separavel(math.sqrt(max(0.0, 1 - G4 * G4)))
    return None if F2 is None else math.sqrt(max(0.0, 1 - F2 * F2))


def _curva_ppm_separabilidade(G4: float) -> Optional[float]:
    F2 = _separavel(1 - G4)
    return None if F2 is None else 1 - F2


@dataclass(frozen=True)
class CurvaAnalitica:
    """G₂ como função de G₄ sobre uma fronteira da família assimétrica."""

    familia: FamiliaCenario
    descricao: str
    funcao: Callable[[float], Optional[float]] = field(compare=False)


CURVAS: Dict[str, CurvaAnalitica] = {
    "bilateral-ppm-asym-S2": CurvaAnalitica(_BI_PPM, "S₂ = 3 e C₂ = 1", _curva_ppm_soma),
    "bilateral-weak-asym-S2": CurvaAnalitica(_BI_FRACA, "S₂ = 3 e C₂ = 1", _curva_fraca_soma),
    "bilateral-weak-asym-ppt": CurvaAnalitica(_BI_FRACA, "f₃ = 0", _curva_fraca_separabilidade),
    "bilateral-ppm-asym-ppt": CurvaAnalitica(_BI_PPM, "f₃ = 0", _curva_ppm_separabilidade),
}

# Parâmetros comuns das curvas
FIXOS_ASSIMETRICOS: Dict[str, float] = {"theta": _PI_4, "G1": 1.0, "G3": 1.0}


def curva_analitica(nome: str, G4: float) -> Optional[float]:
    """
    G₂ sobre a curva para um dado G₄.

    Args:
        nome: Chave de ``CURVAS``
        G4: Ganho do intermediário de B na configuração X, em [0, 1]

    Returns:
        G₂ em [0, 1] ou None se a curva não passa por esse G₄
    """
    curva = CURVAS.get(nome)
    if curva is None:
        raise ErroDominio(f"curva desconhecida: {nome!r}")
    if not 0.0 <= G4 <= 1.0:
        raise ErroDominio(f"{nome}: G₄ = {G4!r} fora de [0, 1]")
    return curva.funcao(G4)
