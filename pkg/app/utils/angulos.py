"""
Leitura de ângulos da linha de comando e dos arquivos de cenário.
"""

import math
from typing import Dict

from app.core.erros import ErroAnguloInvalido

# Ângulos nomeados aceitos na linha de comando e nos arquivos de cenário
ANGULOS_NOMEADOS: Dict[str, float] = {
    "pi/4": math.pi / 4,
    "pi/6": math.pi / 6,
    "pi/12": math.pi / 12,
}


def interpretar_angulo(texto: str) -> float:
    """
    Converte um token de ângulo em radianos.

    Args:
        texto: "pi/4", "pi/6", "pi/12" ou um número em radianos

    Returns:
        Ângulo em [0, π/2]
    """
    token = str(texto).strip().lower()
    if token in ANGULOS_NOMEADOS:
        return ANGULOS_NOMEADOS[token]
    try:
        valor = float(token)
    except ValueError as exc:
        raise ErroAnguloInvalido(f"ângulo inválido: {texto!r}") from exc
    if not math.isfinite(valor) or not 0.0 <= valor <= math.pi / 2 + 1e-15:
        raise ErroAnguloInvalido(f"θ = {texto!r} fora de [0, π/2]")
    return valor
