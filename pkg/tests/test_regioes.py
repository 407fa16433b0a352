"""
Testes das fronteiras analíticas das regiões de violação dupla.
"""

import math

import pytest

from app.core.erros import ErroDominio
from app.services.emaranhamento.criterios import TipoCriterio
from app.services.emaranhamento.exploracao import (
    EixoVarredura,
    boundary_trace,
    familia_por_nome,
    funcao_implicita,
    raiz_unica,
)
from app.services.emaranhamento.regioes import (
    CURVAS,
    FIXOS_ASSIMETRICOS,
    REGIOES,
    curva_analitica,
    fronteira_analitica,
)
from app.services.emaranhamento.reproducao import CASOS, RESULTADO_FALHA, _caso_regiao, reproduce

PI_4 = math.pi / 4
PI_6 = math.pi / 6
S = TipoCriterio.SOMA_CONDICIONAL


# ===========================================================================
# INTERVALOS
# ===========================================================================


class TestFronteiraAnalitica:
    """Testes para fronteira_analitica()"""

    def test_janela_bilateral_fraca(self):
        lo, hi = fronteira_analitica("bilateral-weak-S-symmetric", PI_4)
        assert lo == pytest.approx(1 / math.sqrt(2))
        assert hi == pytest.approx(math.sqrt(2 * (math.sqrt(2) - 1)))

    def test_janela_pearson_ppm(self):
        assert fronteira_analitica("bilateral-ppm-C-symmetric", PI_4) == pytest.approx((0.0, 2 - math.sqrt(2)))

    def test_ppm_s_g1_igual_a_um(self):
        assert fronteira_analitica("unilateral-ppm-S-G1=1", PI_6) == pytest.approx((0.0, math.sin(2 * PI_6)))

    def test_regiao_vazia(self):
        # 1/s - 1 >= 1 para θ pequeno: nenhum G₁ viola os dois pares
        assert fronteira_analitica("unilateral-weak-S-G2=1", 0.1) is None

    def test_intervalos_dentro_de_zero_um(self):
        for nome, regiao in REGIOES.items():
            theta = regiao.theta_fixo or PI_6
            intervalo = fronteira_analitica(nome, theta)
            if intervalo is not None:
                lo, hi = intervalo
                assert 0.0 <= lo < hi <= 1.0, nome

    def test_regiao_desconhecida(self):
        with pytest.raises(ErroDominio):
            fronteira_analitica("unilateral-weak-X", PI_4)

    @pytest.mark.parametrize("theta", [0.0, 1.0])
    def test_theta_fora_do_dominio(self, theta):
        with pytest.raises(ErroDominio):
            fronteira_analitica("unilateral-ppm-S-G1=1", theta)

    def test_theta_fixo(self):
        with pytest.raises(ErroDominio):
            fronteira_analitica("bilateral-weak-C-symmetric", PI_6)


class TestConfereComBisseccao:
    """As pontas dos intervalos coincidem com as raízes numéricas"""

    def test_ppm_s_g1_igual_a_um(self):
        _, hi = fronteira_analitica("unilateral-ppm-S-G1=1", PI_6)
        raiz = raiz_unica(
            funcao_implicita(familia_por_nome("unilateral-ppm"), S),
            "G2",
            (0.01, 1.0),
            {"theta": PI_6, "G1": 1.0},
        )
        assert raiz == pytest.approx(hi, abs=1e-6)

    def test_fraca_s_g2_igual_a_um(self):
        lo, hi = fronteira_analitica("unilateral-weak-S-G2=1", PI_6)
        implicita = funcao_implicita(familia_por_nome("unilateral-weak"), S)
        fixos = {"theta": PI_6, "G2": 1.0}
        assert raiz_unica(implicita, "G1", (0.01, 0.5), fixos) == pytest.approx(lo, abs=1e-6)
        assert raiz_unica(implicita, "G1", (0.5, 1.0), fixos) == pytest.approx(hi, abs=1e-6)


# ===========================================================================
# CURVAS NO PLANO (G₄, G₂)
# ===========================================================================


class TestCurvas:
    """Testes para curva_analitica()"""

    def test_ppm_soma_extremo(self):
        assert curva_analitica("bilateral-ppm-asym-S2", 0.0) == pytest.approx(0.5)

    def test_ppm_soma_sem_ramo(self):
        assert curva_analitica("bilateral-ppm-asym-S2", 0.8) is None

    def test_separabilidade_fraca_sem_ramo(self):
        # F₄ < 1/3
        assert curva_analitica("bilateral-weak-asym-ppt", 0.99) is None

    def test_separabilidade_ppm_no_projetivo(self):
        # G₄ = 0 ⇒ F₄ = 1 ⇒ F₂ = 1/3
        assert curva_analitica("bilateral-ppm-asym-ppt", 0.0) == pytest.approx(2 / 3)

    def test_curva_ppm_confere_com_trace(self):
        pontos = boundary_trace(
            funcao_implicita(familia_por_nome("bilateral-ppm"), S, par=2),
            EixoVarredura("G4", 0.1, 0.4, 4),
            "G2",
            (0.0, 1.0),
            FIXOS_ASSIMETRICOS,
        )
        for ponto in pontos:
            assert ponto.raiz == pytest.approx(curva_analitica("bilateral-ppm-asym-S2", ponto.varredura), abs=1e-6)

    def test_todas_registradas(self):
        assert set(CURVAS) == {
            "bilateral-ppm-asym-S2",
            "bilateral-weak-asym-S2",
            "bilateral-weak-asym-ppt",
            "bilateral-ppm-asym-ppt",
        }

    def test_curva_desconhecida(self):
        with pytest.raises(ErroDominio):
            curva_analitica("bilateral-ppm-asym-C2", 0.3)

    def test_g4_fora_do_dominio(self):
        with pytest.raises(ErroDominio):
            curva_analitica("bilateral-ppm-asym-S2", 1.5)


# ===========================================================================
# USO NA TABELA DE REPRODUÇÃO
# ===========================================================================


class TestRegioesNaReproducao:
    """As janelas da tabela de reprodução usam as pontas analíticas como referência"""

    @pytest.mark.parametrize(
        "rotulo,nome,theta,extremo",
        [
            ("bilateral-weak S window start", "bilateral-weak-S-symmetric", PI_4, 0),
            ("bilateral-weak S window end", "bilateral-weak-S-symmetric", PI_4, 1),
            ("bilateral-weak C window end", "bilateral-weak-C-symmetric", PI_4, 1),
            ("bilateral-ppm C window end", "bilateral-ppm-C-symmetric", PI_4, 1),
            ("unilateral-ppm S window end (G1=1, theta=pi/6)", "unilateral-ppm-S-G1=1", PI_6, 1),
        ],
    )
    def test_referencia_e_a_ponta_analitica(self, rotulo, nome, theta, extremo):
        caso = next(caso for caso in CASOS if caso.rotulo == rotulo)
        assert caso.referencia == fronteira_analitica(nome, theta)[extremo]

    def test_janela_bilateral_fraca_na_tabela(self):
        caso = next(caso for caso in CASOS if caso.rotulo == "bilateral-weak S window start")
        assert caso.referencia == pytest.approx(1 / math.sqrt(2))

    def test_bisseccao_encontra_a_ponta(self):
        relatorio = reproduce([_caso_regiao("ppm S G1=1", "unilateral-ppm-S-G1=1", PI_6, 1)])
        assert relatorio.aprovado
        assert relatorio.linhas[0].calculado == pytest.approx(math.sin(2 * PI_6), abs=1e-6)

    def test_regiao_vazia_reprova(self):
        relatorio = reproduce([_caso_regiao("vazia", "unilateral-weak-S-G2=1", 0.1, 0)])
        assert relatorio.linhas[0].resultado == RESULTADO_FALHA
