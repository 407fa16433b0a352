"""
Testes da linha de comando: subcomandos, formatos e códigos de saída.
"""

import csv
import io
import json

import pytest

from app.api import cli
from app.core.erros import ErroConfiguracao, ErroDimensao, ErroEstadoInvalido
from app.core.metrics import metricas
from app.main import main
from app.models.schemas import ConfigExecucao
from app.services.emaranhamento.reproducao import LinhaReproducao, RelatorioReproducao
from app.services.emaranhamento.testemunha import FamiliaApendice, limiar_theta

UNILATERAL_FRACA = ["eval", "--scenario", "unilateral", "--strategy", "weak", "--theta", "pi/4", "--g", "0.8"]


def _linhas_csv(texto: str) -> list:
    return list(csv.reader(io.StringIO(texto)))


def _tabela(texto: str) -> dict:
    """quantity → (value, verdict) a partir do CSV do eval."""
    cabecalho, *linhas = _linhas_csv(texto)
    assert cabecalho == ["quantity", "value", "verdict"]
    return {nome: (valor, veredito) for nome, valor, veredito in linhas}


# ===========================================================================
# EVAL
# ===========================================================================


class TestEval:
    """Testes para o subcomando eval"""

    def test_unilateral_fraco(self, capsys):
        assert main(UNILATERAL_FRACA) == 0
        tabela = _tabela(capsys.readouterr().out)
        assert float(tabela["S1"][0]) == pytest.approx(3.6)
        assert tabela["S2"][1] == "violated"
        assert tabela["minS"][1] == "shared"
        assert tabela["ppt_min_eig2"][1] == "entangled"
        assert float(tabela["ppt_min_eig2"][0]) == pytest.approx(-0.3)
        assert float(tabela["purity1"][0]) == pytest.approx(1.0)
        assert tabela["purity1"][1] == ""

    def test_ordem_das_linhas(self, capsys):
        main(UNILATERAL_FRACA)
        nomes = [linha[0] for linha in _linhas_csv(capsys.readouterr().out)[1:]]
        assert nomes == [
            "I1", "I2", "S1", "S2", "C1", "C2", "minI", "minS", "minC",
            "ppt_min_eig1", "purity1", "ppt_min_eig2", "purity2",
        ]

    def test_crlf(self, capsys):
        main(UNILATERAL_FRACA)
        assert capsys.readouterr().out.startswith("quantity,value,verdict\r\n")

    def test_theta_zero_singular(self, capsys):
        argumentos = ["eval", "--scenario", "bilateral", "--strategy", "ppm", "--theta", "0", "--g", "0.5"]
        assert main(argumentos) == 0
        tabela = _tabela(capsys.readouterr().out)
        assert tabela["C1"] == ("nan", "SINGULAR")
        assert tabela["minC"] == ("nan", "SINGULAR")
        assert tabela["S1"] == ("nan", "UNDEFINED")
        assert tabela["ppt_min_eig2"][1] == "separable"

    def test_json(self, capsys):
        assert main(UNILATERAL_FRACA + ["--format", "json"]) == 0
        documento = json.loads(capsys.readouterr().out)
        assert documento["columns"] == ["quantity", "value", "verdict"]
        assert documento["rows"][2][0] == "S1"
        assert documento["rows"][2][1] == pytest.approx(3.6)

    def test_ganhos_individuais(self, capsys):
        argumentos = [
            "eval", "--scenario", "bilateral", "--strategy", "weak", "--theta", "pi/4",
            "--g1", "0.8", "--g2", "0.8", "--g3", "0.8", "--g4", "0.8",
        ]
        assert main(argumentos) == 0
        assert float(_tabela(capsys.readouterr().out)["minS"][0]) == pytest.approx(3.28)

    def test_arquivo_de_cenario(self, tmp_path, capsys):
        caminho = tmp_path / "cadeia.ini"
        caminho.write_text(
            "[scenario]\ntag = chain\ntheta = pi/4\nstrategy = weak\n"
            "[A1]\ngain_z = 0.5\ngain_x = 0.5\n[A2]\ngain_z = 0.5\ngain_x = 0.5\n",
            encoding="utf-8",
        )
        assert main(["eval", "--config", str(caminho)]) == 0
        tabela = _tabela(capsys.readouterr().out)
        assert "S3" in tabela
        assert "ppt_min_eig3" in tabela

    def test_saida_em_arquivo(self, tmp_path, capsys):
        caminho = tmp_path / "eval.csv"
        assert main(UNILATERAL_FRACA + ["--out", str(caminho)]) == 0
        assert capsys.readouterr().out == ""
        assert caminho.read_bytes().startswith(b"quantity,value,verdict\r\n")

    @pytest.mark.parametrize(
        "argumentos",
        [
            ["eval", "--scenario", "unilateral", "--strategy", "weak", "--g", "0.5"],
            UNILATERAL_FRACA + ["--g1", "0.5"],
            ["eval", "--scenario", "unilateral", "--strategy", "weak", "--theta", "0.5", "--g1", "0.5", "--g2", "0.5", "--g3", "0.5"],
            ["eval", "--scenario", "unilateral", "--strategy", "weak", "--theta", "0.5", "--g1", "0.5"],
            ["eval", "--scenario", "unilateral", "--strategy", "weak", "--theta", "0.5", "--g", "1.5"],
            ["eval", "--scenario", "unilateral", "--strategy", "weak", "--theta", "pi/3", "--g", "0.5"],
            ["eval", "--config", "x.ini", "--theta", "0.5"],
            ["eval", "--config", "nao-existe.ini"],
            UNILATERAL_FRACA + ["--workers", "0"],
        ],
        ids=[
            "sem-theta",
            "g-com-g1",
            "ganho-extra",
            "ganho-faltando",
            "ganho-fora-do-dominio",
            "angulo-desconhecido",
            "config-com-flags",
            "config-inexistente",
            "workers-zero",
        ],
    )
    def test_erros_de_uso(self, argumentos, capsys):
        assert main(argumentos) == 2
        assert "erro: " in capsys.readouterr().err

    @pytest.mark.parametrize(
        "excecao",
        [ErroEstadoInvalido("traço 0.5"), ErroDimensao("esperado 4x4"), PermissionError("sem permissão")],
        ids=["estado-invalido", "dimensao", "permissao"],
    )
    def test_erros_internos_viram_codigo_2(self, excecao, monkeypatch, capsys):
        def falha(_config):
            raise excecao

        monkeypatch.setattr(cli, "tabela_eval", falha)
        assert main(UNILATERAL_FRACA) == 2
        assert "erro: " in capsys.readouterr().err

    def test_config_sem_permissao(self, monkeypatch, capsys):
        def falha(_caminho):
            raise PermissionError("cenario.ini")

        monkeypatch.setattr(cli, "carregar_cenario", falha)
        assert main(["eval", "--config", "cenario.ini"]) == 2
        assert "erro: " in capsys.readouterr().err

    def test_saida_em_diretorio(self, tmp_path, capsys):
        assert main(UNILATERAL_FRACA + ["--out", str(tmp_path)]) == 2
        assert "erro: " in capsys.readouterr().err


# ===========================================================================
# EXPLORAÇÃO
# ===========================================================================


class TestExploracao:
    """Testes para scan, optimize e boundary"""

    def test_scan(self, capsys):
        argumentos = [
            "scan", "--family", "unilateral-ppm", "--axis", "G1:0.2:0.6:3", "--axis", "G2:0.5:0.7:2",
            "--fix", "theta=pi/6",
        ]
        assert main(argumentos) == 0
        cabecalho, *linhas = _linhas_csv(capsys.readouterr().out)
        assert cabecalho[:4] == ["G1", "G2", "I1", "I2"]
        assert cabecalho[-1] == "status"
        assert len(linhas) == 6
        assert {linha[-1] for linha in linhas} == {"OK"}

    def test_scan_simetrico(self, capsys):
        argumentos = [
            "scan", "--family", "bilateral-weak", "--axis", "g1:0.5:0.9:5", "--fix", "theta=pi/4", "--symmetric",
        ]
        assert main(argumentos) == 0
        cabecalho, *linhas = _linhas_csv(capsys.readouterr().out)
        celula = dict(zip(cabecalho, linhas[3]))
        assert float(celula["G1"]) == pytest.approx(0.8)
        assert float(celula["minS"]) == pytest.approx(3.28)
        assert celula["dvS"] == "true"

    def test_scan_familia_desconhecida(self):
        assert main(["scan", "--family", "chain-weak", "--axis", "G1:0.1:0.9:3"]) == 2

    def test_optimize(self, capsys):
        argumentos = [
            "optimize", "--family", "unilateral-weak", "--criterion", "S",
            "--free", "G1:0:1", "--free", "G2:0:1", "--fix", "theta=pi/4",
        ]
        assert main(argumentos) == 0
        linhas = dict((q, v) for q, v in _linhas_csv(capsys.readouterr().out)[1:])
        assert float(linhas["value"]) == pytest.approx(3.6, abs=1e-3)
        assert float(linhas["G1"]) == pytest.approx(0.8, abs=1e-2)
        assert linhas["converged"] in ("true", "false")
        assert int(linhas["evaluations"]) > 0

    def test_optimize_ridge_exige_um_livre(self):
        argumentos = [
            "optimize", "--family", "unilateral-ppm", "--criterion", "S",
            "--free", "G1:0:1", "--free", "G2:0:1", "--ridge", "theta:0.1:0.7:3",
        ]
        assert main(argumentos) == 2

    def test_optimize_ridge(self, capsys):
        argumentos = [
            "optimize", "--family", "unilateral-ppm", "--criterion", "S",
            "--free", "G1:0:1", "--ridge", "G2:0.5:1:3", "--fix", "theta=pi/4",
        ]
        assert main(argumentos) == 0
        cabecalho, *linhas = _linhas_csv(capsys.readouterr().out)
        assert cabecalho == ["G2", "argmax_G1", "value", "on_optimum"]
        assert len(linhas) == 3
        for linha in linhas:
            assert float(linha[2]) == pytest.approx(10 / 3, abs=1e-5)
            assert linha[3] == "true"

    def test_boundary_ponto_unico(self, capsys):
        argumentos = [
            "boundary", "--family", "bilateral-ppm", "--criterion", "S", "--pair", "2", "--solve", "G2:0:1",
            "--fix", "theta=pi/4", "--fix", "G1=1", "--fix", "G3=1", "--fix", "G4=0",
        ]
        assert main(argumentos) == 0
        cabecalho, linha = _linhas_csv(capsys.readouterr().out)
        assert cabecalho == ["G2"]
        assert float(linha[0]) == pytest.approx(0.5, abs=1e-6)

    def test_boundary_sem_raiz(self, capsys):
        argumentos = [
            "boundary", "--family", "unilateral-weak", "--criterion", "C", "--pair", "1", "--solve", "G1:0.1:1",
            "--fix", "theta=pi/4", "--fix", "G2=0.5", "--format", "json",
        ]
        assert main(argumentos) == 0
        assert json.loads(capsys.readouterr().out)["rows"] == [[None]]

    def test_boundary_ppt_com_eixo(self, capsys):
        argumentos = [
            "boundary", "--family", "bilateral-ppm", "--ppt", "--solve", "theta:0.05:pi/4",
            "--axis", "G1:0.4:0.6:2", "--symmetric",
        ]
        assert main(argumentos) == 0
        cabecalho, *linhas = _linhas_csv(capsys.readouterr().out)
        assert cabecalho == ["G1", "theta"]
        assert len(linhas) == 2
        for g, theta in linhas:
            esperado = limiar_theta(FamiliaApendice.BILATERAL_PPM_SIMETRICA, float(g))
            assert float(theta) == pytest.approx(esperado, abs=1e-6)

    def test_boundary_sem_criterio(self):
        argumentos = ["boundary", "--family", "unilateral-weak", "--solve", "G1:0:1", "--fix", "theta=pi/4", "--fix", "G2=0.5"]
        assert main(argumentos) == 2


# ===========================================================================
# VERIFICAÇÃO E REPRODUÇÃO
# ===========================================================================


class TestVerificacao:
    """Testes para verify e reproduce"""

    def test_verify(self, capsys):
        assert main(["verify", "--seed", "3", "--count", "2"]) == 0
        cabecalho, *linhas = _linhas_csv(capsys.readouterr().out)
        assert cabecalho == ["family", "tuples", "max_deviation", "result"]
        assert "FAIL" not in {linha[3] for linha in linhas}

    def test_verify_count_invalido(self):
        assert main(["verify", "--count", "0"]) == 2

    def test_reproduce_com_falha(self, monkeypatch, capsys):
        falha = LinhaReproducao("caso", 1.1, 1.0, 0.1, 1e-6, "FAIL")
        monkeypatch.setattr(cli, "reproduce", lambda: RelatorioReproducao([falha]))
        assert main(["reproduce"]) == 1
        assert "caso,1.1000000000000001,1,0.10000000000000001" in capsys.readouterr().out


# ===========================================================================
# PARSER E EXECUÇÃO
# ===========================================================================


class TestExecucao:
    """Testes para o parser, a configuração de execução e as métricas"""

    def test_ajuda(self, capsys):
        assert main(["--help"]) == 0
        assert "reproduce" in capsys.readouterr().out

    def test_subcomando_desconhecido(self):
        assert main(["simulate"]) == 2

    def test_sem_subcomando(self):
        assert main([]) == 2

    def test_metricas(self, capsys):
        antes = metricas["total_comandos"]
        main(UNILATERAL_FRACA)
        assert metricas["total_comandos"] == antes + 1
        assert metricas["total_latencia_ms"] >= 0.0

    def test_workers_do_ambiente(self, monkeypatch):
        monkeypatch.setenv("ES_WORKERS", "3")
        args = cli.construir_parser().parse_args(["scan", "--family", "unilateral-weak", "--axis", "G1:0.1:0.9:3"])
        assert cli.config_execucao(args).workers == 3

    def test_config_execucao_rejeita_chave(self):
        with pytest.raises(ErroConfiguracao):
            ConfigExecucao.de_dicionario({"comando": "eval", "cor": "azul"})

    @pytest.mark.parametrize(
        "texto,esperado",
        [("theta=pi/4", {"theta": 0.7853981633974483}), ("g2=0.5", {"G2": 0.5})],
    )
    def test_interpretar_fixos(self, texto, esperado):
        assert cli.interpretar_fixos([texto]) == pytest.approx(esperado)

    def test_fixo_repetido(self):
        with pytest.raises(ErroConfiguracao):
            cli.interpretar_fixos(["G1=0.5", "g1=0.6"])
