"""
Módulo responsável pelos arquivos de cenário (texto chave=valor por seções).

Formato:

    [scenario]
    tag = unilateral        ; unilateral | bilateral | chain
    theta = pi/4            ; radianos ou pi/4, pi/6, pi/12
    strategy = weak         ; tipo padrão dos intermediários (weak | ppm)

    [A1]                    ; um intermediário por seção, A1..An e B1..Bm
    kind = weak             ; opcional, herda strategy
    gain_z = 0.8
    gain_x = 0.8

O observador final projetivo de cada lado é implícito. Seções ou chaves
desconhecidas são erro.
"""

import configparser
import re
from pathlib import Path
from typing import Dict, List, Tuple, Union

from app.core.erros import ErroConfiguracao
from app.utils.angulos import interpretar_angulo
from .cenario import ConfigCenario, TipoCenario
from .quantico import TipoMedicao

CHAVES_CENARIO = {"tag", "theta", "strategy"}
CHAVES_OBSERVADOR = {"kind", "gain_z", "gain_x"}
_SECAO_OBSERVADOR = re.compile(r"^([AB])([1-9][0-9]*)$")


def _medicao(texto: str, origem: str) -> TipoMedicao:
    try:
        tipo = TipoMedicao(texto.strip().lower())
    except ValueError as exc:
        raise ErroConfiguracao(f"{origem}: estratégia desconhecida {texto!r}") from exc
    if tipo is TipoMedicao.PROJETIVA:
        raise ErroConfiguracao(f"{origem}: intermediários usam weak ou ppm")
    return tipo


def _ganho(secao: configparser.SectionProxy, chave: str) -> float:
    if chave not in secao:
        raise ErroConfiguracao(f"[{secao.name}]: chave obrigatória {chave!r} ausente")
    try:
        return float(secao[chave])
    except ValueError as exc:
        raise ErroConfiguracao(f"[{secao.name}] {chave} = {secao[chave]!r} não é número") from exc


def _checar_chaves(secao: configparser.SectionProxy, permitidas: set) -> None:
    desconhecidas = sorted(set(secao) - permitidas)
    if desconhecidas:
        raise ErroConfiguracao(f"[{secao.name}]: chaves desconhecidas {desconhecidas}")


def interpretar_cenario(texto: str, origem: str = "<texto>") -> ConfigCenario:
    """
    Lê um cenário a partir do texto do arquivo.

    Args:
        texto: Conteúdo no formato de seções
        origem: Nome usado nas mensagens de erro

    Returns:
        Configuração validada
    """
    leitor = configparser.ConfigParser(
        interpolation=None, default_section="__nenhuma__", inline_comment_prefixes=(";", "#")
    )
    try:
        leitor.read_string(texto, source=origem)
    except configparser.Error as exc:
        raise ErroConfiguracao(f"{origem}: arquivo malformado ({exc})") from exc

    if "scenario" not in leitor:
        raise ErroConfiguracao(f"{origem}: seção [scenario] ausente")
    cenario = leitor["scenario"]
    _checar_chaves(cenario, CHAVES_CENARIO)
    if "theta" not in cenario:
        raise ErroConfiguracao(f"{origem}: [scenario] sem theta")
    theta = interpretar_angulo(cenario["theta"])
    padrao = cenario.get("strategy")
    try:
        tag = TipoCenario(cenario.get("tag", TipoCenario.CADEIA.value).strip().lower())
    except ValueError as exc:
        raise ErroConfiguracao(f"{origem}: tag desconhecida {cenario.get('tag')!r}") from exc

    intermediarios: Dict[str, List[Tuple[int, Tuple[TipoMedicao, float, float]]]] = {"A": [], "B": []}
    for nome in leitor.sections():
        if nome == "scenario":
            continue
        casamento = _SECAO_OBSERVADOR.match(nome)
        if casamento is None:
            raise ErroConfiguracao(f"{origem}: seção desconhecida [{nome}]")
        secao = leitor[nome]
        _checar_chaves(secao, CHAVES_OBSERVADOR)
        tipo_texto = secao.get("kind", padrao)
        if tipo_texto is None:
            raise ErroConfiguracao(f"[{nome}]: sem kind e sem strategy padrão")
        tipo = _medicao(tipo_texto, f"[{nome}]")
        intermediarios[casamento.group(1)].append(
            (int(casamento.group(2)), (tipo, _ganho(secao, "gain_z"), _ganho(secao, "gain_x")))
        )

    cadeias = []
    for lado in ("A", "B"):
        itens = sorted(intermediarios[lado])
        indices = [i for i, _ in itens]
        if indices != list(range(1, len(itens) + 1)):
            raise ErroConfiguracao(f"{origem}: intermediários de {lado} devem ser {lado}1..{lado}n, recebido {indices}")
        cadeias.append(tuple(item for _, item in itens))

    config = ConfigCenario.de_cadeias(theta, cadeias[0], cadeias[1])
    if tag is not TipoCenario.CADEIA and config.tipo is not tag:
        raise ErroConfiguracao(f"{origem}: tag {tag.value} incompatível com as cadeias declaradas")
    return config


def carregar_cenario(caminho: Union[str, Path]) -> ConfigCenario:
    """Lê e valida um arquivo de cenário."""
    caminho = Path(caminho)
    try:
        texto = caminho.read_text(encoding="utf-8")
    except OSError as exc:
        raise ErroConfiguracao(f"não foi possível ler {caminho}: {exc}") from exc
    return interpretar_cenario(texto, str(caminho))
