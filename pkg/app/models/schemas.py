"""
Modelos e tipos de dados da linha de comando.
"""

from dataclasses import dataclass, fields
from typing import Any, Mapping, Optional

from app.core.erros import ErroConfiguracao
from app.utils.emissores import FORMATOS
from app.utils.simulador_config import SimuladorConfig

COMANDOS = ("eval", "scan", "optimize", "boundary", "verify", "reproduce")


@dataclass(frozen=True)
class ConfigExecucao:
    """
    Opções de uma execução, comuns a todos os subcomandos.

    Args:
        comando: eval, scan, optimize, boundary, verify ou reproduce
        formato: csv ou json
        saida: Caminho de saída; None escreve em stdout
        config: Arquivo de cenário (somente eval)
        semente: Semente das tuplas de verificação
        tuplas: Tuplas por família na verificação
        workers: Processos da varredura
    """

    comando: str
    formato: str = "csv"
    saida: Optional[str] = None
    config: Optional[str] = None
    semente: int = SimuladorConfig.SEMENTE_PADRAO
    tuplas: int = SimuladorConfig.TUPLAS_PADRAO
    workers: int = 1

    def __post_init__(self):
        if self.comando not in COMANDOS:
            raise ErroConfiguracao(f"comando desconhecido: {self.comando!r}")
        if self.formato not in FORMATOS:
            raise ErroConfiguracao(f"formato desconhecido: {self.formato!r}")
        if self.tuplas < 1:
            raise ErroConfiguracao(f"count deve ser >= 1, recebido {self.tuplas}")
        if self.workers < 1:
            raise ErroConfiguracao(f"workers deve ser >= 1, recebido {self.workers}")

    @classmethod
    def de_dicionario(cls, dados: Mapping[str, Any]) -> "ConfigExecucao":
        """Constrói a configuração; chaves desconhecidas são erro."""
        conhecidas = {f.name for f in fields(cls)}
        desconhecidas = sorted(set(dados) - conhecidas)
        if desconhecidas:
            raise ErroConfiguracao(f"chaves desconhecidas na configuração de execução: {desconhecidas}")
        return cls(**{chave: valor for chave, valor in dados.items() if valor is not None})
