"""
Testes dos utilitários: ângulos, emissores e configuração de ambiente.
"""

import json
import math

import pytest

from app.core.config import NOME_SIMULADOR, carimbar_processo
from app.core.erros import ErroAnguloInvalido, ErroConfiguracao
from app.utils.angulos import ANGULOS_NOMEADOS, interpretar_angulo
from app.utils.emissores import emitir, formatar_real, para_csv, para_json
from app.utils.simulador_config import SimuladorConfig


# ===========================================================================
# ÂNGULOS
# ===========================================================================


class TestAngulos:
    """Testes para interpretar_angulo()"""

    @pytest.mark.parametrize("token,esperado", [("pi/4", math.pi / 4), ("PI/6", math.pi / 6), (" pi/12 ", math.pi / 12)])
    def test_nomeados(self, token, esperado):
        assert interpretar_angulo(token) == esperado

    def test_radianos(self):
        assert interpretar_angulo("0.5") == 0.5
        assert interpretar_angulo("0") == 0.0

    def test_tres_nomes(self):
        assert set(ANGULOS_NOMEADOS) == {"pi/4", "pi/6", "pi/12"}

    @pytest.mark.parametrize("token", ["pi/3", "abc", "-0.1", "1.6", "nan", "inf", ""])
    def test_invalidos(self, token):
        with pytest.raises(ErroAnguloInvalido):
            interpretar_angulo(token)


# ===========================================================================
# EMISSORES
# ===========================================================================


class TestEmissores:
    """Testes para CSV e JSON"""

    def test_formatar_real(self):
        assert formatar_real(0.1) == "0.10000000000000001"
        assert formatar_real(3.0) == "3"
        assert formatar_real(math.nan) == "nan"
        assert formatar_real(-math.inf) == "-inf"

    def test_csv_crlf_e_booleanos(self):
        texto = para_csv(["a", "b", "c"], [[1.5, True, "OK"], [2, False, "x,y"]])
        assert texto == 'a,b,c\r\n1.5,true,OK\r\n2,false,"x,y"\r\n'

    def test_json_estrutura(self):
        documento = json.loads(para_json(["a", "b"], [[1.0, math.nan], [True, "s"]]))
        assert documento == {"columns": ["a", "b"], "rows": [[1.0, None], [True, "s"]]}

    def test_json_termina_com_nova_linha(self):
        assert para_json(["a"], []).endswith("\n")

    def test_emitir_despacha(self):
        assert emitir(["a"], [[1]], "csv") == "a\r\n1\r\n"
        assert json.loads(emitir(["a"], [[1]], "json"))["rows"] == [[1]]

    def test_formato_desconhecido(self):
        with pytest.raises(ErroConfiguracao):
            emitir(["a"], [], "xml")


# ===========================================================================
# AMBIENTE
# ===========================================================================


class TestSimuladorConfig:
    """Testes para as variáveis de ambiente"""

    def test_workers_padrao(self, monkeypatch):
        monkeypatch.delenv(SimuladorConfig.VAR_WORKERS, raising=False)
        assert SimuladorConfig.workers_padrao() == 1

    def test_workers_do_ambiente(self, monkeypatch):
        monkeypatch.setenv(SimuladorConfig.VAR_WORKERS, "4")
        assert SimuladorConfig.workers_padrao() == 4

    @pytest.mark.parametrize("valor", ["0", "muitos"])
    def test_workers_invalidos(self, monkeypatch, valor):
        monkeypatch.setenv(SimuladorConfig.VAR_WORKERS, valor)
        with pytest.raises(ErroConfiguracao):
            SimuladorConfig.workers_padrao()

    def test_nivel_log(self, monkeypatch):
        monkeypatch.setenv(SimuladorConfig.VAR_LOG_LEVEL, "debug")
        assert SimuladorConfig.nivel_log() == 10
        monkeypatch.setenv(SimuladorConfig.VAR_LOG_LEVEL, "verboso")
        assert SimuladorConfig.nivel_log() == 20


# ===========================================================================
# LOGGING
# ===========================================================================


class TestLogging:
    """Testes para o processor carimbar_processo()"""

    def test_carimba_simulador_e_pid(self):
        evento = carimbar_processo(None, "info", {"event": "Varredura concluída", "log_type": "exploracao"})
        assert evento["simulador"] == NOME_SIMULADOR
        assert isinstance(evento["pid"], int)
        assert evento["log_type"] == "exploracao"

    def test_nao_sobrescreve_campos(self):
        evento = carimbar_processo(None, "info", {"event": "x", "simulador": "outro", "pid": 1})
        assert evento["simulador"] == "outro"
        assert evento["pid"] == 1
