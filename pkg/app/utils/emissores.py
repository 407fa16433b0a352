"""
Emissão de tabelas em CSV e JSON.

CSV: cabeçalho, aspas RFC 4180 quando necessário, fim de linha CRLF e reais
com 17 dígitos significativos. JSON: documento {"columns": [...], "rows":
[[...], ...]} com chaves em ordem estável; NaN e infinitos viram null.
"""

import csv
import io
import json
import math
from typing import Any, Sequence

from app.core.erros import ErroConfiguracao

FORMATOS = ("csv", "json")


def formatar_real(valor: float) -> str:
    if math.isnan(valor):
        return "nan"
    if math.isinf(valor):
        return "inf" if valor > 0 else "-inf"
    return format(valor, ".17g")


def _celula_csv(valor: Any) -> str:
    if isinstance(valor, bool):
        return "true" if valor else "false"
    if isinstance(valor, float):
        return formatar_real(valor)
    return str(valor)


def _celula_json(valor: Any) -> Any:
    if isinstance(valor, float) and not math.isfinite(valor):
        return None
    return valor


def para_csv(colunas: Sequence[str], linhas: Sequence[Sequence[Any]]) -> str:
    saida = io.StringIO()
    escritor = csv.writer(saida, lineterminator="\r\n", quoting=csv.QUOTE_MINIMAL)
    escritor.writerow(list(colunas))
    for linha in linhas:
        escritor.writerow([_celula_csv(v) for v in linha])
    return saida.getvalue()


def para_json(colunas: Sequence[str], linhas: Sequence[Sequence[Any]]) -> str:
    documento = {
        "columns": list(colunas),
        "rows": [[_celula_json(v) for v in linha] for linha in linhas],
    }
    return json.dumps(documento, ensure_ascii=False, allow_nan=False, indent=2) + "\n"


def emitir(colunas: Sequence[str], linhas: Sequence[Sequence[Any]], formato: str) -> str:
    """
    Serializa a tabela no formato pedido.

    Args:
        colunas: Nomes das colunas
        linhas: Linhas na ordem final de saída
        formato: "csv" ou "json"

    Returns:
        Texto completo do documento
    """
    if formato == "csv":
        return para_csv(colunas, linhas)
    if formato == "json":
        return para_json(colunas, linhas)
    raise ErroConfiguracao(f"formato desconhecido: {formato!r}")
