"""
Tabela de reprodução dos valores de referência.

Cada linha recomputa um número publicado (ótimo maximin, argmax, fronteira,
janela de violação) e o compara com a referência dentro de uma tolerância.
Linhas anotadas registram divergências já documentadas em DESIGN.md: trazem
o valor que o motor reproduz (`valor_motor`) além da referência publicada.
Saem como NOTED enquanto o cálculo fica dentro da tolerância desse valor e
como FAIL quando se afasta dele.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional

from app.core.config import logger
from app.utils.simulador_config import SimuladorConfig
from .cenario import ConfigCenario, FamiliaCenario, TipoCenario, pair_state
from .criterios import TipoCriterio
from .exploracao import (
    EixoVarredura,
    RelatorioOtimo,
    boundary_trace,
    funcao_implicita,
    funcao_ppt,
    maximin,
    perfil_otimo,
    raiz_unica,
    segmento_otimo,
    vinculos_simetricos,
)
from .quantico import TipoMedicao, purity
from .regioes import FIXOS_ASSIMETRICOS, REGIOES, curva_analitica, fronteira_analitica

RESULTADO_OK = "PASS"
RESULTADO_FALHA = "FAIL"
RESULTADO_ANOTADO = "NOTED"

PI_4 = math.pi / 4
PI_6 = math.pi / 6

_UNI_FRACA = FamiliaCenario(TipoCenario.UNILATERAL, TipoMedicao.FRACA)
_UNI_PPM = FamiliaCenario(TipoCenario.UNILATERAL, TipoMedicao.PPM)
_BI_FRACA = FamiliaCenario(TipoCenario.BILATERAL, TipoMedicao.FRACA)
_BI_PPM = FamiliaCenario(TipoCenario.BILATERAL, TipoMedicao.PPM)
_I, _S = TipoCriterio.INFORMACAO_MUTUA, TipoCriterio.SOMA_CONDICIONAL

_GANHO = (0.0, 1.0)
_GANHO_MOTOR = (SimuladorConfig.GANHO_MINIMO_MOTOR, 1.0)


@dataclass(frozen=True)
class CasoReproducao:
    rotulo: str
    referencia: float
    tolerancia: float
    calcular: Callable[[], float]
    valor_motor: Optional[float] = None

    @property
    def anotado(self) -> bool:
        return self.valor_motor is not None


@dataclass(frozen=True)
class LinhaReproducao:
    rotulo: str
    calculado: float
    referencia: float
    desvio: float
    tolerancia: float
    resultado: str

    def como_lista(self) -> list:
        return [self.rotulo, self.calculado, self.referencia, self.desvio, self.tolerancia, self.resultado]


@dataclass
class RelatorioReproducao:
    linhas: List[LinhaReproducao]

    @property
    def aprovado(self) -> bool:
        return all(linha.resultado != RESULTADO_FALHA for linha in self.linhas)

    def como_listas(self) -> List[list]:
        return [linha.como_lista() for linha in self.linhas]


# ==========================================================================
# OTIMIZAÇÕES COMPARTILHADAS ENTRE LINHAS
# ==========================================================================


@lru_cache(maxsize=None)
def _uni_fraca_i() -> RelatorioOtimo:
    return maximin(_UNI_FRACA, _I, {"G1": _GANHO, "G2": _GANHO}, {"theta": PI_4})


@lru_cache(maxsize=None)
def _uni_fraca_i_borda() -> RelatorioOtimo:
    return maximin(_UNI_FRACA, _I, {"G2": _GANHO}, {"theta": PI_4, "G1": 1.0})


@lru_cache(maxsize=None)
def _uni_fraca_i_simetrica() -> RelatorioOtimo:
    return maximin(_UNI_FRACA, _I, {"G1": _GANHO}, {"theta": PI_4}, vinculos_simetricos(_UNI_FRACA))


@lru_cache(maxsize=None)
def _uni_fraca_s() -> RelatorioOtimo:
    return maximin(_UNI_FRACA, _S, {"G1": _GANHO, "G2": _GANHO}, {"theta": PI_4})


@lru_cache(maxsize=None)
def _uni_ppm_i() -> RelatorioOtimo:
    return maximin(_UNI_PPM, _I, {"G1": _GANHO, "G2": _GANHO}, {"theta": PI_4})


@lru_cache(maxsize=None)
def _uni_ppm_i_borda() -> RelatorioOtimo:
    return maximin(_UNI_PPM, _I, {"G2": _GANHO}, {"theta": PI_4, "G1": 1.0})


@lru_cache(maxsize=None)
def _uni_ppm_s() -> RelatorioOtimo:
    return maximin(_UNI_PPM, _S, {"G1": _GANHO, "G2": _GANHO}, {"theta": PI_4})


@lru_cache(maxsize=None)
def _uni_ppm_s_segmento():
    perfil = perfil_otimo(
        _UNI_PPM, _S, EixoVarredura("G2", 0.0, 1.0, 61), ("G1", 0.0, 1.0), {"theta": PI_4}
    )
    return segmento_otimo(perfil, _uni_ppm_s().valor)


@lru_cache(maxsize=None)
def _bi_fraca_s_simetrica() -> RelatorioOtimo:
    return maximin(_BI_FRACA, _S, {"G1": _GANHO}, {"theta": PI_4}, vinculos_simetricos(_BI_FRACA))


@lru_cache(maxsize=None)
def _bi_fraca_i_simetrica() -> RelatorioOtimo:
    return maximin(_BI_FRACA, _I, {"G1": _GANHO}, {"theta": PI_4}, vinculos_simetricos(_BI_FRACA))


@lru_cache(maxsize=None)
def _bi_fraca_s_assimetrica() -> RelatorioOtimo:
    return maximin(_BI_FRACA, _S, {"G2": _GANHO, "G4": _GANHO}, FIXOS_ASSIMETRICOS)


@lru_cache(maxsize=None)
def _bi_ppm_s_simetrica() -> RelatorioOtimo:
    return maximin(
        _BI_PPM, _S, {"G1": _GANHO, "theta": (0.0, PI_4)}, {}, vinculos_simetricos(_BI_PPM)
    )


@lru_cache(maxsize=None)
def _bi_ppm_s_assimetrica() -> RelatorioOtimo:
    return maximin(_BI_PPM, _S, {"G2": _GANHO, "G4": _GANHO}, FIXOS_ASSIMETRICOS)


@lru_cache(maxsize=None)
def _bi_ppm_i_simetrica() -> RelatorioOtimo:
    return maximin(_BI_PPM, _I, {"G1": _GANHO_MOTOR}, {"theta": PI_4}, vinculos_simetricos(_BI_PPM))


# ==========================================================================
# FRONTEIRAS
# ==========================================================================


_FOLGA_BORDA = 0.05


def _borda_regiao(nome: str, theta: float, extremo: int) -> float:
    """
    Raiz numérica do mínimo dos pares junto à ponta ``extremo`` (0 = lo, 1 = hi)
    do intervalo analítico da região.

    O intervalo de busca vai do meio da janela até a ponta alargada por
    ``_FOLGA_BORDA``, de modo que só a ponta pedida troca de sinal nele.
    """
    intervalo = fronteira_analitica(nome, theta)
    if intervalo is None:
        return math.nan
    lo, hi = intervalo
    meio = 0.5 * (lo + hi)
    busca = (max(lo - _FOLGA_BORDA, 0.005), meio) if extremo == 0 else (meio, min(hi + _FOLGA_BORDA, 1.0))
    regiao = REGIOES[nome]
    raiz = raiz_unica(
        funcao_implicita(regiao.familia, regiao.criterio),
        regiao.livre,
        busca,
        {"theta": theta, **regiao.fixos},
        {vinculado: regiao.livre for vinculado in regiao.vinculados},
    )
    return math.nan if raiz is None else raiz


def _caso_regiao(rotulo: str, nome: str, theta: float, extremo: int) -> CasoReproducao:
    """Linha cuja referência é a ponta analítica e cujo cálculo é a bissecção."""
    intervalo = fronteira_analitica(nome, theta)
    referencia = math.nan if intervalo is None else intervalo[extremo]
    return CasoReproducao(rotulo, referencia, 1e-6, lambda: _borda_regiao(nome, theta, extremo))


def _desvio_curva(pontos, curva: str) -> float:
    """Maior |raiz - curva(G₄)|; ponto sem raiz conta como desvio infinito."""
    maior = 0.0
    for ponto in pontos:
        esperado = curva_analitica(curva, ponto.varredura)
        if ponto.raiz is None or esperado is None:
            return math.inf
        maior = max(maior, abs(ponto.raiz - esperado))
    return maior


def _uni_fraca_linha_s() -> float:
    """Maior |G₁ - (1 - G₂)| na fronteira S = 3 traçada ao longo de G₂."""
    pontos = boundary_trace(
        funcao_implicita(_UNI_FRACA, _S),
        EixoVarredura("G2", 0.05, 0.95, 19),
        "G1",
        (0.0, 1.0),
        {"theta": PI_4},
    )
    if any(p.raiz is None for p in pontos):
        return math.inf
    return max(abs(p.raiz - (1.0 - p.varredura)) for p in pontos)


def _uni_fraca_critico(fixo: str, livre: str) -> float:
    raiz = raiz_unica(
        funcao_implicita(_UNI_FRACA, _I, par=2), livre, (0.01, 1.0), {"theta": PI_4, fixo: 1.0}
    )
    return math.nan if raiz is None else raiz


def _bi_ppm_curva_s() -> float:
    pontos = boundary_trace(
        funcao_implicita(_BI_PPM, _S, par=2),
        EixoVarredura("G4", 0.0, 0.45, 10),
        "G2",
        (0.0, 1.0),
        FIXOS_ASSIMETRICOS,
    )
    return _desvio_curva(pontos, "bilateral-ppm-asym-S2")


def _bi_ppm_extremo_g4() -> float:
    raiz = raiz_unica(
        funcao_implicita(_BI_PPM, _S, par=2), "G4", (0.0, 1.0), {**FIXOS_ASSIMETRICOS, "G2": 0.0}
    )
    return math.nan if raiz is None else raiz


def _bi_ppm_extremo_g2() -> float:
    raiz = raiz_unica(
        funcao_implicita(_BI_PPM, _S, par=2), "G2", (0.0, 1.0), {**FIXOS_ASSIMETRICOS, "G4": 0.0}
    )
    return math.nan if raiz is None else raiz


def _bi_fraca_separabilidade() -> float:
    pontos = boundary_trace(
        funcao_ppt(_BI_FRACA),
        EixoVarredura("G4", 0.05, 0.9, 18),
        "G2",
        (1e-6, 1.0),
        FIXOS_ASSIMETRICOS,
    )
    return _desvio_curva(pontos, "bilateral-weak-asym-ppt")


def _mistura_ppm_projetiva() -> float:
    return purity(pair_state(ConfigCenario.unilateral(PI_4, TipoMedicao.PPM, 1.0, 1.0), 2))


# ==========================================================================
# TABELA
# ==========================================================================


def _segmento(extremo: int) -> Callable[[], float]:
    def calcular() -> float:
        segmento = _uni_ppm_s_segmento()
        return math.nan if segmento is None else segmento[extremo].x

    return calcular


CASOS: List[CasoReproducao] = [
    # Unilateral, medição fraca
    CasoReproducao("unilateral-weak maximin I", 1.089, 0.005, lambda: _uni_fraca_i().valor),
    CasoReproducao("unilateral-weak maximin I argmax G1", 0.994, 0.02, lambda: _uni_fraca_i().argmax["G1"]),
    CasoReproducao("unilateral-weak maximin I argmax G2", 0.397, 0.02, lambda: _uni_fraca_i().argmax["G2"]),
    CasoReproducao("unilateral-weak edge I (G1=1)", 1.081, 0.005, lambda: _uni_fraca_i_borda().valor),
    CasoReproducao("unilateral-weak edge I argmax G2", 0.332, 0.01, lambda: _uni_fraca_i_borda().argmax["G2"]),
    CasoReproducao("unilateral-weak symmetric I", 1.06, 0.005, lambda: _uni_fraca_i_simetrica().valor),
    CasoReproducao("unilateral-weak symmetric I argmax G", 0.8, 0.01, lambda: _uni_fraca_i_simetrica().argmax["G1"]),
    CasoReproducao("unilateral-weak maximin S", 18 / 5, 1e-3, lambda: _uni_fraca_s().valor),
    CasoReproducao("unilateral-weak maximin S argmax G1", 0.8, 1e-2, lambda: _uni_fraca_s().argmax["G1"]),
    CasoReproducao("unilateral-weak maximin S argmax G2", 0.8, 1e-2, lambda: _uni_fraca_s().argmax["G2"]),
    CasoReproducao("unilateral-weak S boundary |G1-(1-G2)|", 0.0, 1e-6, _uni_fraca_linha_s),
    _caso_regiao("unilateral-weak S window start (G2=1, theta=pi/6)", "unilateral-weak-S-G2=1", PI_6, 0),
    _caso_regiao("unilateral-weak S window end (G2=1, theta=pi/6)", "unilateral-weak-S-G2=1", PI_6, 1),
    CasoReproducao(
        "unilateral-weak I2=1 critical G2 (G1=1)",
        0.46,
        0.005,
        lambda: _uni_fraca_critico("G1", "G2"),
        valor_motor=0.4665,
    ),
    CasoReproducao(
        "unilateral-weak I2=1 critical G1 (G2=1)",
        0.46,
        0.005,
        lambda: _uni_fraca_critico("G2", "G1"),
        valor_motor=0.4665,
    ),
    # Unilateral, PPM
    CasoReproducao("unilateral-ppm maximin I", 1.05, 0.005, lambda: _uni_ppm_i().valor, valor_motor=1.0429),
    CasoReproducao(
        "unilateral-ppm maximin I argmax smaller gain",
        0.125,
        0.01,
        lambda: min(_uni_ppm_i().argmax["G1"], _uni_ppm_i().argmax["G2"]),
        valor_motor=0.083,
    ),
    CasoReproducao("unilateral-ppm edge I (G1=1)", 1.043, 0.005, lambda: _uni_ppm_i_borda().valor),
    CasoReproducao("unilateral-ppm edge I argmax G2", 0.083, 0.01, lambda: _uni_ppm_i_borda().argmax["G2"]),
    _caso_regiao("unilateral-ppm S window end (G1=1, theta=pi/6)", "unilateral-ppm-S-G1=1", PI_6, 1),
    CasoReproducao("unilateral-ppm maximin S", 10 / 3, 1e-3, lambda: _uni_ppm_s().valor),
    CasoReproducao(
        "unilateral-ppm maximin S argmax G1+G2",
        4 / 3,
        1e-3,
        lambda: _uni_ppm_s().argmax["G1"] + _uni_ppm_s().argmax["G2"],
    ),
    CasoReproducao("unilateral-ppm S optimal segment G2 start", 1 / 3, 0.02, _segmento(0)),
    CasoReproducao("unilateral-ppm S optimal segment G2 end", 1.0, 1e-9, _segmento(1)),
    CasoReproducao("unilateral-ppm mixedness G1=G2=1", 3 / 8, 1e-10, _mistura_ppm_projetiva),
    # Bilateral, medição fraca
    CasoReproducao("bilateral-weak symmetric S", 82 / 25, 1e-3, lambda: _bi_fraca_s_simetrica().valor),
    CasoReproducao("bilateral-weak symmetric S argmax G", 0.8, 1e-2, lambda: _bi_fraca_s_simetrica().argmax["G1"]),
    _caso_regiao("bilateral-weak S window start", "bilateral-weak-S-symmetric", PI_4, 0),
    _caso_regiao("bilateral-weak S window end", "bilateral-weak-S-symmetric", PI_4, 1),
    CasoReproducao(
        "bilateral-weak asymmetric S", 2 * (34 + math.sqrt(31)) / 25, 1e-3, lambda: _bi_fraca_s_assimetrica().valor
    ),
    CasoReproducao(
        "bilateral-weak asymmetric S argmax G2",
        math.sqrt((2 * math.sqrt(31) - 7) / 25),
        1e-3,
        lambda: _bi_fraca_s_assimetrica().argmax["G2"],
    ),
    CasoReproducao(
        "bilateral-weak asymmetric S argmax G4",
        math.sqrt((2 * math.sqrt(31) - 7) / 25),
        1e-3,
        lambda: _bi_fraca_s_assimetrica().argmax["G4"],
    ),
    CasoReproducao("bilateral-weak symmetric I ceiling", 0.64, 0.01, lambda: _bi_fraca_i_simetrica().valor),
    _caso_regiao("bilateral-weak C window end", "bilateral-weak-C-symmetric", PI_4, 1),
    CasoReproducao("bilateral-weak asymmetric separability |G2-curve|", 0.0, 1e-6, _bi_fraca_separabilidade),
    # Bilateral, PPM
    CasoReproducao("bilateral-ppm symmetric S", 2.937, 0.005, lambda: _bi_ppm_s_simetrica().valor),
    CasoReproducao("bilateral-ppm symmetric S argmax G", 0.627, 0.01, lambda: _bi_ppm_s_simetrica().argmax["G1"]),
    CasoReproducao("bilateral-ppm symmetric S argmax theta", 0.729, 0.01, lambda: _bi_ppm_s_simetrica().argmax["theta"]),
    CasoReproducao("bilateral-ppm asymmetric S", 3.125, 0.005, lambda: _bi_ppm_s_assimetrica().valor),
    CasoReproducao("bilateral-ppm S2=3 boundary |G2-curve|", 0.0, 1e-6, _bi_ppm_curva_s),
    CasoReproducao("bilateral-ppm S2=3 endpoint G2 (G4=0)", 0.5, 1e-6, _bi_ppm_extremo_g2),
    CasoReproducao("bilateral-ppm S2=3 endpoint G4 (G2=0)", 0.5, 1e-6, _bi_ppm_extremo_g4),
    CasoReproducao("bilateral-ppm symmetric I", 0.32, 0.01, lambda: _bi_ppm_i_simetrica().valor),
    _caso_regiao("bilateral-ppm C window end", "bilateral-ppm-C-symmetric", PI_4, 1),
]


def reproduce(casos: List[CasoReproducao] = CASOS) -> RelatorioReproducao:
    """
    Recalcula cada caso e compara com a referência.

    Returns:
        Relatório com uma linha por caso; ``aprovado`` é falso se algum
        caso excedeu a tolerância (anotados contra ``valor_motor``)
    """
    linhas = []
    for caso in casos:
        calculado = float(caso.calcular())
        desvio = abs(calculado - caso.referencia)
        if caso.valor_motor is not None:
            dentro = abs(calculado - caso.valor_motor) <= caso.tolerancia
            resultado = RESULTADO_ANOTADO if dentro else RESULTADO_FALHA
        elif desvio <= caso.tolerancia:
            resultado = RESULTADO_OK
        else:
            resultado = RESULTADO_FALHA
        linhas.append(
            LinhaReproducao(caso.rotulo, calculado, caso.referencia, desvio, caso.tolerancia, resultado)
        )
    relatorio = RelatorioReproducao(linhas)
    logger.info(
        "Reprodução concluída",
        log_type="reproducao",
        linhas=len(linhas),
        falhas=[linha.rotulo for linha in linhas if linha.resultado == RESULTADO_FALHA],
        anotadas=[linha.rotulo for linha in linhas if linha.resultado == RESULTADO_ANOTADO],
    )
    return relatorio
