"""
Testes da exploração do espaço de parâmetros: grade, maximin e fronteiras.
"""

import math

import pytest

from app.core.erros import ErroConfiguracao, ErroConfiguracaoIncompleta, ErroObjetivoSingular
from app.services.emaranhamento.constantes import (
    COLUNAS_VARREDURA,
    STATUS_CONDICIONAL_INDEFINIDA,
    STATUS_OK,
    STATUS_PEARSON_SINGULAR,
)
from app.services.emaranhamento.criterios import TipoCriterio
from app.services.emaranhamento.exploracao import (
    EixoVarredura,
    EspecVarredura,
    PontoPerfil,
    boundary_trace,
    familia_por_nome,
    funcao_implicita,
    funcao_objetivo,
    funcao_ppt,
    grid_scan,
    maximin,
    raiz_unica,
    segmento_otimo,
    vinculos_simetricos,
)

PI_4 = math.pi / 4
I, S, C = TipoCriterio.INFORMACAO_MUTUA, TipoCriterio.SOMA_CONDICIONAL, TipoCriterio.PEARSON


@pytest.fixture
def varredura_unilateral(familias):
    """Fixture com uma grade 3×3 de ganhos em θ = π/4"""
    return EspecVarredura(
        familias["unilateral-weak"],
        (EixoVarredura("G1", 0.4, 0.8, 3), EixoVarredura("G2", 0.4, 0.8, 3)),
        {"theta": PI_4},
    )


# ===========================================================================
# EIXOS E ESPECIFICAÇÃO
# ===========================================================================


class TestEixo:
    """Testes para EixoVarredura"""

    def test_valores(self):
        eixo = EixoVarredura("G1", 0.1, 0.3, 3)
        assert eixo.valores() == pytest.approx([0.1, 0.2, 0.3])
        assert eixo.valores()[-1] == 0.3

    def test_espacamento(self):
        assert EixoVarredura("theta", 0.0, 1.0, 5).espacamento == pytest.approx(0.25)

    def test_poucos_passos(self):
        with pytest.raises(ErroConfiguracao):
            EixoVarredura("G1", 0.1, 0.3, 1)

    def test_intervalo_invertido(self):
        with pytest.raises(ErroConfiguracao):
            EixoVarredura("G1", 0.5, 0.3, 3)


class TestEspecVarredura:
    """Testes para a cobertura dos parâmetros"""

    def test_colunas(self, varredura_unilateral):
        assert varredura_unilateral.colunas == ["G1", "G2"] + COLUNAS_VARREDURA

    def test_parametro_sem_valor(self, familias):
        with pytest.raises(ErroConfiguracaoIncompleta):
            EspecVarredura(familias["unilateral-weak"], (EixoVarredura("G1", 0.1, 0.9, 3),), {"theta": PI_4})

    def test_parametro_desconhecido(self, familias):
        with pytest.raises(ErroConfiguracao):
            EspecVarredura(
                familias["unilateral-weak"],
                (EixoVarredura("G3", 0.1, 0.9, 3),),
                {"theta": PI_4, "G1": 0.5, "G2": 0.5},
            )

    def test_parametro_repetido(self, familias):
        with pytest.raises(ErroConfiguracao):
            EspecVarredura(
                familias["unilateral-weak"],
                (EixoVarredura("G1", 0.1, 0.9, 3),),
                {"theta": PI_4, "G1": 0.5, "G2": 0.5},
            )

    def test_ganho_varrido_a_partir_de_zero(self, familias):
        with pytest.raises(ErroConfiguracao):
            EspecVarredura(
                familias["unilateral-weak"], (EixoVarredura("G1", 0.0, 0.9, 3),), {"theta": PI_4, "G2": 0.5}
            )

    def test_vinculos_preenchem_celulas(self, familias):
        familia = familias["bilateral-weak"]
        spec = EspecVarredura(
            familia, (EixoVarredura("G1", 0.2, 0.6, 2),), {"theta": PI_4}, vinculos_simetricos(familia)
        )
        assert spec.celulas()[1] == {"theta": PI_4, "G1": 0.6, "G2": 0.6, "G3": 0.6, "G4": 0.6}


# ===========================================================================
# VARREDURA EM GRADE
# ===========================================================================


class TestGridScan:
    """Testes para grid_scan()"""

    def test_ordem_lexicografica(self, varredura_unilateral):
        tabela = grid_scan(varredura_unilateral)
        assert len(tabela.linhas) == 9
        primeiras = [valor for linha in tabela.linhas[:2] for valor in linha.parametros]
        assert primeiras == pytest.approx([0.4, 0.4, 0.4, 0.6])
        assert len(tabela.como_listas()[0]) == len(tabela.colunas)

    def test_celula_no_otimo_de_s(self, varredura_unilateral):
        linha = dict(zip(varredura_unilateral.colunas, grid_scan(varredura_unilateral).como_listas()[-1]))
        assert linha["minS"] == pytest.approx(3.6)
        assert linha["dvS"] is True
        assert linha["ppt_min_eig"] == pytest.approx(-0.3)
        assert linha["status"] == STATUS_OK

    def test_workers_nao_alteram_resultado(self, varredura_unilateral):
        serial = grid_scan(varredura_unilateral, workers=1).como_listas()
        paralelo = grid_scan(varredura_unilateral, workers=2).como_listas()
        assert serial == paralelo

    def test_status_em_theta_zero(self, familias):
        spec = EspecVarredura(
            familias["unilateral-ppm"], (EixoVarredura("theta", 0.0, PI_4, 2),), {"G1": 0.5, "G2": 0.5}
        )
        primeira, ultima = grid_scan(spec).linhas
        assert STATUS_PEARSON_SINGULAR in primeira.status
        assert STATUS_CONDICIONAL_INDEFINIDA in primeira.status
        assert math.isnan(primeira.minimos[2])
        assert ultima.status == STATUS_OK

    def test_workers_invalidos(self, varredura_unilateral):
        with pytest.raises(ErroConfiguracao):
            grid_scan(varredura_unilateral, workers=0)


# ===========================================================================
# OBJETIVOS E MAXIMIN
# ===========================================================================


class TestObjetivos:
    """Testes para as funções objetivo"""

    def test_objetivo_e_minimo_dos_pares(self, familias):
        objetivo = funcao_objetivo(familias["unilateral-weak"], S)
        assert objetivo({"theta": PI_4, "G1": 0.8, "G2": 0.8}) == pytest.approx(3.6)

    def test_motores_concordam(self, familias):
        parametros = {"theta": 0.6, "G1": 0.3, "G2": 0.7, "G3": 0.5, "G4": 0.9}
        fechado = funcao_objetivo(familias["bilateral-ppm"], C, "closed")(parametros)
        numerico = funcao_objetivo(familias["bilateral-ppm"], C, "numeric")(parametros)
        assert fechado == pytest.approx(numerico, abs=1e-9)

    def test_motor_invalido(self, familias):
        with pytest.raises(ErroConfiguracao):
            funcao_objetivo(familias["unilateral-weak"], S, "symbolic")

    def test_implicita_subtrai_limiar(self, familias):
        implicita = funcao_implicita(familias["unilateral-weak"], S, par=1)
        assert implicita({"theta": PI_4, "G1": 0.8, "G2": 0.8}) == pytest.approx(0.6)

    def test_implicita_com_limiar_proprio(self, familias):
        implicita = funcao_implicita(familias["unilateral-weak"], S, par=1, limiar=3.5)
        assert implicita({"theta": PI_4, "G1": 0.8, "G2": 0.8}) == pytest.approx(0.1)

    def test_par_invalido(self, familias):
        with pytest.raises(ErroConfiguracao):
            funcao_implicita(familias["unilateral-weak"], S, par=3)

    def test_ppt(self, familias):
        autovalor = funcao_ppt(familias["unilateral-weak"])
        assert autovalor({"theta": PI_4, "G1": 0.8, "G2": 0.8}) == pytest.approx(-0.3)


class TestMaximin:
    """Testes para maximin()"""

    def test_unilateral_fraca_s(self, familias):
        relatorio = maximin(familias["unilateral-weak"], S, {"G1": (0.0, 1.0), "G2": (0.0, 1.0)}, {"theta": PI_4})
        assert relatorio.valor == pytest.approx(3.6, abs=1e-3)
        assert relatorio.argmax["G1"] == pytest.approx(0.8, abs=1e-2)
        assert relatorio.argmax["G2"] == pytest.approx(0.8, abs=1e-2)
        assert relatorio.argmax["theta"] == PI_4
        assert relatorio.avaliacoes > 41 * 41

    def test_bilateral_fraca_simetrica(self, familias):
        familia = familias["bilateral-weak"]
        relatorio = maximin(familia, S, {"G1": (0.0, 1.0)}, {"theta": PI_4}, vinculos_simetricos(familia))
        assert relatorio.valor == pytest.approx(82 / 25, abs=1e-3)
        assert relatorio.argmax["G4"] == relatorio.argmax["G1"]

    def test_deterministico(self, familias):
        args = (familias["unilateral-ppm"], I, {"G2": (0.0, 1.0)}, {"theta": PI_4, "G1": 1.0})
        assert maximin(*args) == maximin(*args)

    def test_sem_livres(self, familias):
        with pytest.raises(ErroConfiguracao):
            maximin(familias["unilateral-weak"], S, {}, {"theta": PI_4, "G1": 0.5, "G2": 0.5})

    def test_objetivo_singular(self, familias):
        # Pearson numérico em θ = 0: variância nula em todos os pontos
        with pytest.raises(ErroObjetivoSingular):
            maximin(familias["unilateral-weak"], C, {"G1": (0.1, 1.0)}, {"theta": 0.0, "G2": 0.5}, motor="numeric")

    def test_ganho_abaixo_do_minimo_do_motor(self, familias):
        with pytest.raises(ErroConfiguracao):
            maximin(familias["unilateral-weak"], S, {"G1": (0.0, 1.0)}, {"theta": PI_4, "G2": 0.5}, motor="numeric")


class TestSegmento:
    """Testes para segmento_otimo()"""

    def test_primeiro_e_ultimo_no_otimo(self):
        perfil = [PontoPerfil(x / 4, 0.5, v) for x, v in enumerate([3.0, 3.3, 3.3, 3.3, 3.1])]
        inicio, fim = segmento_otimo(perfil, 3.3)
        assert (inicio.x, fim.x) == (0.25, 0.75)

    def test_sem_ponto_no_otimo(self):
        assert segmento_otimo([PontoPerfil(0.0, 0.0, 1.0)], 3.0) is None


# ===========================================================================
# FRONTEIRAS
# ===========================================================================


class TestFronteiras:
    """Testes para raiz_unica() e boundary_trace()"""

    def test_extremo_ppm_assimetrico(self, familias):
        raiz = raiz_unica(
            funcao_implicita(familias["bilateral-ppm"], S, par=2),
            "G2",
            (0.0, 1.0),
            {"theta": PI_4, "G1": 1.0, "G3": 1.0, "G4": 0.0},
        )
        assert raiz == pytest.approx(0.5, abs=1e-6)

    def test_sem_troca_de_sinal(self, familias):
        raiz = raiz_unica(
            funcao_implicita(familias["unilateral-weak"], C, par=1),
            "G1",
            (0.1, 1.0),
            {"theta": PI_4, "G2": 0.5},
        )
        assert raiz is None

    def test_linha_s_unilateral_fraca(self, familias):
        pontos = boundary_trace(
            funcao_implicita(familias["unilateral-weak"], S),
            EixoVarredura("G2", 0.2, 0.8, 4),
            "G1",
            (0.0, 1.0),
            {"theta": PI_4},
        )
        assert [p.varredura for p in pontos] == pytest.approx([0.2, 0.4, 0.6, 0.8])
        for ponto in pontos:
            assert ponto.raiz == pytest.approx(1.0 - ponto.varredura, abs=1e-6)

    def test_ponto_unico(self, familias):
        pontos = boundary_trace(
            funcao_implicita(familias["bilateral-ppm"], S, par=2),
            None,
            "G4",
            (0.0, 1.0),
            {"theta": PI_4, "G1": 1.0, "G2": 0.0, "G3": 1.0},
        )
        assert len(pontos) == 1
        assert pontos[0].varredura is None
        assert pontos[0].raiz == pytest.approx(0.5, abs=1e-6)

    def test_intervalo_invalido(self, familias):
        with pytest.raises(ErroConfiguracao):
            boundary_trace(funcao_ppt(familias["unilateral-weak"]), None, "G1", (1.0, 0.5), {"theta": PI_4})


class TestFamiliaPorNome:
    """Testes para familia_por_nome()"""

    def test_nome_valido(self):
        assert familia_por_nome("bilateral-ppm").nome == "bilateral-ppm"

    @pytest.mark.parametrize("nome", ["chain-weak", "unilateral", "bilateral-strong"])
    def test_nome_invalido(self, nome):
        with pytest.raises(ErroConfiguracao):
            familia_por_nome(nome)
