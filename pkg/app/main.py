"""
Ponto de entrada da aplicação de linha de comando.
"""
import sys
from typing import Optional, Sequence

# Importa a configuração para registrar o logging estruturado antes dos comandos
from app.core.config import logger  # noqa: F401
from app.api.cli import executar


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Roda a linha de comando e devolve o código de saída."""
    return executar(sys.argv[1:] if argv is None else list(argv))
