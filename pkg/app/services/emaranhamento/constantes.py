"""
Constantes usadas pelo simulador de compartilhamento de emaranhamento.
"""

from typing import List, Tuple

# Limiares de emaranhamento (d = 2)
LIMIAR_INFORMACAO = 1.0  # log₂ d
LIMIAR_SOMA_SUPERIOR = 3.0
LIMIAR_SOMA_INFERIOR = 1.0
LIMIAR_PEARSON = 1.0

# Parâmetros livres de cada cenário, na ordem canônica
PARAMETROS_UNILATERAL: Tuple[str, ...] = ("theta", "G1", "G2")
PARAMETROS_BILATERAL: Tuple[str, ...] = ("theta", "G1", "G2", "G3", "G4")

# Status das linhas de varredura
STATUS_OK = "OK"
STATUS_PEARSON_SINGULAR = "SINGULAR_C"
STATUS_CONDICIONAL_INDEFINIDA = "UNDEFINED_S"

# Colunas de critério das tabelas de varredura (após os eixos)
COLUNAS_VARREDURA: List[str] = [
    "I1",
    "I2",
    "S1",
    "S2",
    "C1",
    "C2",
    "minI",
    "minS",
    "minC",
    "dvI",
    "dvS",
    "dvC",
    "ppt_min_eig",
    "purity",
    "status",
]

# Colunas dos relatórios de verificação e reprodução
COLUNAS_VERIFICACAO: List[str] = ["family", "tuples", "max_deviation", "result"]
COLUNAS_REPRODUCAO: List[str] = ["row", "computed", "reference", "deviation", "tolerance", "result"]
