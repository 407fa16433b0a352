"""
Simulador de compartilhamento de emaranhamento entre observadores sequenciais.

Este pacote contém a álgebra de 4×4, os modelos de medição (projetiva, fraca
e PPM), os cenários unilateral e bilateral, os três critérios de emaranhamento
(I, S, C), a testemunha PPT e as ferramentas de exploração, verificação e
reprodução dos valores de referência.
"""

from .algebra import hermitian_eigenvalues, kron, partial_transpose
from .arquivo_cenario import carregar_cenario, interpretar_cenario
from .cenario import (
    ConfigCenario,
    FamiliaCenario,
    TipoCenario,
    joint_distribution,
    marginal_pair,
    pair_state,
    pauli_moments,
)
from .criterios import TipoCriterio, avaliar_ponto, criterion, mutual_information, pearson
from .exploracao import (
    EixoVarredura,
    EspecVarredura,
    boundary_trace,
    familia_por_nome,
    funcao_implicita,
    funcao_objetivo,
    funcao_ppt,
    grid_scan,
    maximin,
    perfil_otimo,
    segmento_otimo,
)
from .formas_fechadas import FORMAS_FECHADAS, FamiliaForma, closed_form
from .quantico import TipoMedicao, effects_of, kraus_for, state_from_theta
from .regioes import curva_analitica, fronteira_analitica
from .reproducao import reproduce
from .testemunha import FamiliaApendice, appendix_eigs, limiar_theta, mixedness_closed_form, ppt_report
from .verificacao import verify

__all__ = [
    "hermitian_eigenvalues",
    "kron",
    "partial_transpose",
    "carregar_cenario",
    "interpretar_cenario",
    "ConfigCenario",
    "FamiliaCenario",
    "TipoCenario",
    "joint_distribution",
    "marginal_pair",
    "pair_state",
    "pauli_moments",
    "TipoCriterio",
    "avaliar_ponto",
    "criterion",
    "mutual_information",
    "pearson",
    "EixoVarredura",
    "EspecVarredura",
    "boundary_trace",
    "familia_por_nome",
    "funcao_implicita",
    "funcao_objetivo",
    "funcao_ppt",
    "grid_scan",
    "maximin",
    "perfil_otimo",
    "segmento_otimo",
    "FORMAS_FECHADAS",
    "FamiliaForma",
    "closed_form",
    "TipoMedicao",
    "effects_of",
    "kraus_for",
    "state_from_theta",
    "curva_analitica",
    "fronteira_analitica",
    "reproduce",
    "FamiliaApendice",
    "appendix_eigs",
    "limiar_theta",
    "mixedness_closed_form",
    "ppt_report",
    "verify",
]
