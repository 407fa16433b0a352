"""
Módulo responsável pela exploração do espaço de parâmetros.

Três ferramentas:
    grid_scan       - grade determinística com os seis critérios por célula
    maximin         - max de min(par 1, par 2): grade grossa, simplex de
                      Nelder-Mead restrito a uma caixa e grade densa final
    boundary_trace  - raízes de critério - limiar por bissecção, uma por
                      valor do eixo de varredura

Parâmetros são mapas nome → valor sobre ("theta", "G1", "G2"[, "G3", "G4"]).
Vínculos amarram um parâmetro a outro (G2 = G1, por exemplo).
"""

import itertools
import math
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from app.core.config import logger
from app.core.erros import (
    ErroCondicionalIndefinida,
    ErroConfiguracao,
    ErroConfiguracaoIncompleta,
    ErroDominio,
    ErroObjetivoSingular,
    ErroVarianciaSingular,
)
from app.utils.simulador_config import SimuladorConfig
from .cenario import FamiliaCenario, TipoCenario, pair_state
from .constantes import (
    COLUNAS_VARREDURA,
    LIMIAR_INFORMACAO,
    LIMIAR_PEARSON,
    LIMIAR_SOMA_SUPERIOR,
    STATUS_OK,
)
from .criterios import TipoCriterio, avaliar_ponto, criterion
from .formas_fechadas import FAMILIAS_EXCLUIDAS, FamiliaForma, closed_form
from .testemunha import ppt_report

Objetivo = Callable[[Mapping[str, float]], Optional[float]]

MOTORES = ("auto", "closed", "numeric")

LIMIARES = {
    TipoCriterio.INFORMACAO_MUTUA: LIMIAR_INFORMACAO,
    TipoCriterio.SOMA_CONDICIONAL: LIMIAR_SOMA_SUPERIOR,
    TipoCriterio.PEARSON: LIMIAR_PEARSON,
}


# ==========================================================================
# PARÂMETROS
# ==========================================================================


def vinculos_simetricos(familia: FamiliaCenario) -> Dict[str, str]:
    """Todos os ganhos amarrados a G1."""
    return {nome: "G1" for nome in familia.parametros[2:]}


def validar_cobertura(
    familia: FamiliaCenario,
    livres: Sequence[str],
    fixos: Mapping[str, float],
    vinculos: Mapping[str, str],
) -> None:
    """
    Livres, fixos e vinculados cobrem cada parâmetro da família uma única vez.

    Raises:
        ErroConfiguracao: parâmetro desconhecido, repetido ou vínculo sem origem
        ErroConfiguracaoIncompleta: parâmetro sem valor
    """
    conhecidos = set(familia.parametros)
    todos = list(livres) + list(fixos) + list(vinculos)
    desconhecidos = sorted(set(todos) - conhecidos)
    if desconhecidos:
        raise ErroConfiguracao(f"{familia.nome}: parâmetros desconhecidos {desconhecidos}")
    repetidos = sorted({nome for nome in todos if todos.count(nome) > 1})
    if repetidos:
        raise ErroConfiguracao(f"{familia.nome}: parâmetros repetidos {repetidos}")
    for destino, origem in vinculos.items():
        if origem not in livres and origem not in fixos:
            raise ErroConfiguracao(f"vínculo {destino}={origem}: origem sem valor")
    faltando = [nome for nome in familia.parametros if nome not in todos]
    if faltando:
        raise ErroConfiguracaoIncompleta(f"{familia.nome}: parâmetros sem valor {faltando}")


def validar_intervalo(nome: str, lo: float, hi: float, ganho_minimo: float = 0.0) -> None:
    """θ dentro de [0, π/2]; ganhos dentro de [ganho_minimo, 1]."""
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ErroConfiguracao(f"{nome}: limites não finitos")
    if nome == "theta":
        if lo < 0.0 or hi > math.pi / 2 + 1e-15:
            raise ErroConfiguracao(f"theta: [{lo}, {hi}] fora de [0, π/2]")
    elif lo < ganho_minimo or hi > 1.0:
        raise ErroConfiguracao(f"{nome}: [{lo}, {hi}] fora de [{ganho_minimo:g}, 1]")


def completar_parametros(valores: Mapping[str, float], vinculos: Mapping[str, str]) -> Dict[str, float]:
    parametros = dict(valores)
    for destino, origem in vinculos.items():
        parametros[destino] = parametros[origem]
    return parametros


# ==========================================================================
# VARREDURA EM GRADE
# ==========================================================================


@dataclass(frozen=True)
class EixoVarredura:
    """Eixo uniforme de ``passos`` pontos; o último é exatamente ``hi``."""

    nome: str
    lo: float
    hi: float
    passos: int

    def __post_init__(self):
        if self.passos < 2:
            raise ErroConfiguracao(f"eixo {self.nome}: passos deve ser >= 2, recebido {self.passos}")
        if not self.lo < self.hi:
            raise ErroConfiguracao(f"eixo {self.nome}: lo < hi exigido, recebido [{self.lo}, {self.hi}]")

    def valores(self) -> List[float]:
        ultimo = self.passos - 1
        return [self.lo + (self.hi - self.lo) * i / ultimo for i in range(ultimo)] + [self.hi]

    @property
    def espacamento(self) -> float:
        return (self.hi - self.lo) / (self.passos - 1)


@dataclass(frozen=True)
class EspecVarredura:
    """Família, eixos, parâmetros fixos e vínculos de simetria de uma varredura."""

    familia: FamiliaCenario
    eixos: Tuple[EixoVarredura, ...]
    fixos: Mapping[str, float] = field(default_factory=dict)
    vinculos: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "eixos", tuple(self.eixos))
        if not self.eixos:
            raise ErroConfiguracao("varredura sem eixos")
        validar_cobertura(self.familia, [e.nome for e in self.eixos], self.fixos, self.vinculos)
        for eixo in self.eixos:
            validar_intervalo(eixo.nome, eixo.lo, eixo.hi)
            if eixo.nome != "theta" and eixo.lo <= 0.0:
                raise ErroConfiguracao(f"{eixo.nome}: ganhos varridos exigem lo > 0")
        for nome, valor in self.fixos.items():
            validar_intervalo(nome, valor, valor)
            if nome != "theta" and valor <= 0.0:
                raise ErroConfiguracao(f"{nome}: ganho fixo deve estar em (0, 1]")

    @property
    def colunas(self) -> List[str]:
        return [e.nome for e in self.eixos] + list(COLUNAS_VARREDURA)

    def celulas(self) -> List[Dict[str, float]]:
        """Parâmetros completos de cada célula, em ordem lexicográfica dos eixos."""
        nomes = [e.nome for e in self.eixos]
        return [
            completar_parametros({**self.fixos, **dict(zip(nomes, ponto))}, self.vinculos)
            for ponto in itertools.product(*(e.valores() for e in self.eixos))
        ]


@dataclass(frozen=True)
class LinhaVarredura:
    """Uma célula: valores dos eixos, seis critérios, mínimos, violações duplas e PPT."""

    parametros: Tuple[float, ...]
    totais: Tuple[float, ...]
    minimos: Tuple[float, float, float]
    duplas: Tuple[bool, bool, bool]
    ppt_min_eig: float
    mistura: float
    status: str

    def como_lista(self) -> list:
        return [
            *self.parametros,
            *self.totais,
            *self.minimos,
            *self.duplas,
            self.ppt_min_eig,
            self.mistura,
            self.status,
        ]


@dataclass
class TabelaVarredura:
    colunas: List[str]
    linhas: List[LinhaVarredura]

    def como_listas(self) -> List[list]:
        return [linha.como_lista() for linha in self.linhas]


_CRITERIOS = (TipoCriterio.INFORMACAO_MUTUA, TipoCriterio.SOMA_CONDICIONAL, TipoCriterio.PEARSON)


def _avaliar_celula(tarefa: Tuple[int, FamiliaCenario, Dict[str, float], Tuple[str, ...]]):
    """Unidade de trabalho dos workers (nível de módulo para ser serializável)."""
    indice, familia, parametros, eixos = tarefa
    config = familia.configurar(parametros)
    resultado = avaliar_ponto(config)
    relatorio = ppt_report(pair_state(config, 2))
    linha = LinhaVarredura(
        parametros=tuple(parametros[nome] for nome in eixos),
        totais=tuple(resultado.total(tipo, k) for tipo in _CRITERIOS for k in (1, 2)),
        minimos=tuple(resultado.minimo(tipo) for tipo in _CRITERIOS),
        duplas=tuple(resultado.dupla(tipo) for tipo in _CRITERIOS),
        ppt_min_eig=relatorio.autovalor_minimo,
        mistura=relatorio.mistura,
        status=";".join(resultado.status) or STATUS_OK,
    )
    return indice, linha


def grid_scan(spec: EspecVarredura, workers: int = 1) -> TabelaVarredura:
    """
    Avalia todas as células da grade.

    Args:
        spec: Especificação da varredura
        workers: Processos paralelos; não altera o resultado

    Returns:
        Tabela com uma linha por célula, na ordem lexicográfica dos eixos
    """
    if workers < 1:
        raise ErroConfiguracao(f"workers deve ser >= 1, recebido {workers}")
    nomes = tuple(e.nome for e in spec.eixos)
    tarefas = [(i, spec.familia, celula, nomes) for i, celula in enumerate(spec.celulas())]
    linhas: List[Optional[LinhaVarredura]] = [None] * len(tarefas)

    if workers == 1:
        for tarefa in tarefas:
            indice, linha = _avaliar_celula(tarefa)
            linhas[indice] = linha
    else:
        lote = max(1, len(tarefas) // (workers * 4))
        with Pool(workers) as pool:
            for indice, linha in pool.imap_unordered(_avaliar_celula, tarefas, chunksize=lote):
                linhas[indice] = linha

    singulares = sum(1 for linha in linhas if linha.status != STATUS_OK)
    logger.info(
        "Varredura concluída",
        log_type="varredura",
        familia=spec.familia.nome,
        eixos=list(nomes),
        celulas=len(linhas),
        workers=workers,
        singulares=singulares,
    )
    return TabelaVarredura(spec.colunas, linhas)


# ==========================================================================
# OBJETIVOS
# ==========================================================================


def _usa_motor(familia: FamiliaCenario, criterio: TipoCriterio, k: int, motor: str) -> bool:
    if motor == "numeric":
        return True
    if motor == "closed":
        return False
    return FamiliaForma(criterio, familia.cenario, familia.medicao, k) in FAMILIAS_EXCLUIDAS


def _validar_motor(motor: str) -> None:
    if motor not in MOTORES:
        raise ErroConfiguracao(f"motor {motor!r} inválido; use {'/'.join(MOTORES)}")


def _total_par(
    familia: FamiliaCenario, criterio: TipoCriterio, k: int, parametros: Mapping[str, float], motor: str
) -> Optional[float]:
    faltando = [p for p in familia.parametros if p not in parametros]
    if faltando:
        raise ErroConfiguracaoIncompleta(f"{familia.nome}: parâmetros ausentes {faltando}")
    if _usa_motor(familia, criterio, k, motor):
        try:
            return criterion(familia.configurar(parametros), criterio, k).total
        except (ErroVarianciaSingular, ErroCondicionalIndefinida):
            return None
    forma = FamiliaForma(criterio, familia.cenario, familia.medicao, k)
    try:
        return closed_form(forma, parametros["theta"], [parametros[p] for p in familia.parametros[1:]])
    except ErroDominio:
        return None


def funcao_objetivo(familia: FamiliaCenario, criterio: TipoCriterio, motor: str = "auto") -> Objetivo:
    """
    min(critério do par 1, critério do par 2) como função dos parâmetros.

    ``auto`` usa as formas fechadas e recorre ao motor numérico para famílias
    sem transcrição confiável. Pontos singulares devolvem None.
    """
    _validar_motor(motor)

    def objetivo(parametros: Mapping[str, float]) -> Optional[float]:
        totais = [_total_par(familia, criterio, k, parametros, motor) for k in (1, 2)]
        if any(t is None for t in totais):
            return None
        return min(totais)

    return objetivo


def funcao_implicita(
    familia: FamiliaCenario,
    criterio: TipoCriterio,
    par: Optional[int] = None,
    limiar: Optional[float] = None,
    motor: str = "auto",
) -> Objetivo:
    """
    Critério - limiar; sem ``par``, o mínimo dos dois pares.

    Args:
        familia: Família de cenário
        criterio: I, S ou C
        par: 1, 2 ou None
        limiar: Padrão 1 para I e C, 3 para S
        motor: auto, closed ou numeric
    """
    _validar_motor(motor)
    if par not in (None, 1, 2):
        raise ErroConfiguracao(f"par {par!r} inválido")
    corte = LIMIARES[criterio] if limiar is None else limiar
    minimo = funcao_objetivo(familia, criterio, motor)

    def implicita(parametros: Mapping[str, float]) -> Optional[float]:
        valor = minimo(parametros) if par is None else _total_par(familia, criterio, par, parametros, motor)
        return None if valor is None else valor - corte

    return implicita


def funcao_ppt(familia: FamiliaCenario, par: int = 2) -> Objetivo:
    """Autovalor mínimo da transposta parcial do estado entregue ao par."""

    def autovalor(parametros: Mapping[str, float]) -> Optional[float]:
        return ppt_report(pair_state(familia.configurar(parametros), par)).autovalor_minimo

    return autovalor


# ==========================================================================
# MAXIMIN
# ==========================================================================


@dataclass
class RelatorioOtimo:
    valor: float
    argmax: Dict[str, float]
    avaliacoes: int
    convergiu: bool


class SimplexCaixa:
    """
    Simplex de Nelder-Mead que maximiza f dentro de uma caixa.

    Vértices são recortados à caixa; pontos singulares valem -inf.
    Coeficientes: reflexão 1, expansão 2, contração 0.5.
    """

    def __init__(self, f, x0: Sequence[float], passos: Sequence[float], lo, hi):
        self.N = len(x0)
        self.f = f
        self.lo = list(lo)
        self.hi = list(hi)
        self.avaliacoes = 0
        self.vertices: List[List[float]] = []
        self.valores: List[float] = []
        for i in range(self.N + 1):
            p = list(x0)
            if i >= 1:
                j = i - 1
                passo = passos[j] if p[j] + passos[j] <= self.hi[j] else -passos[j]
                p[j] += passo
            p = self._recortar(p)
            self.vertices.append(p)
            self.valores.append(self._avaliar(p))

    def _recortar(self, x: Sequence[float]) -> List[float]:
        return [min(max(v, l), h) for v, l, h in zip(x, self.lo, self.hi)]

    def _avaliar(self, x: Sequence[float]) -> float:
        self.avaliacoes += 1
        return self.f(x)

    def _ordem(self) -> List[int]:
        return sorted(range(self.N + 1), key=lambda i: (-self.valores[i], i))

    def melhor(self) -> Tuple[List[float], float]:
        i = self._ordem()[0]
        return list(self.vertices[i]), self.valores[i]

    def diametro(self) -> float:
        return max(
            math.dist(a, b) for a, b in itertools.combinations(self.vertices, 2)
        )

    def _substituir(self, i: int, x: List[float], valor: float) -> None:
        self.vertices[i] = x
        self.valores[i] = valor

    def passo(self, k_reflexao=1.0, k_expansao=2.0, k_contracao=0.5) -> None:
        ordem = self._ordem()
        i_melhor, i_segundo, i_pior = ordem[0], ordem[-2], ordem[-1]
        pior = self.vertices[i_pior]
        centro = [
            sum(self.vertices[i][j] for i in ordem[:-1]) / self.N for j in range(self.N)
        ]

        refletido = self._recortar([c + k_reflexao * (c - w) for c, w in zip(centro, pior)])
        f_refletido = self._avaliar(refletido)

        if f_refletido > self.valores[i_melhor]:
            expandido = self._recortar([c + k_expansao * (r - c) for c, r in zip(centro, refletido)])
            f_expandido = self._avaliar(expandido)
            if f_expandido > f_refletido:
                self._substituir(i_pior, expandido, f_expandido)
            else:
                self._substituir(i_pior, refletido, f_refletido)
            return

        if f_refletido > self.valores[i_segundo]:
            self._substituir(i_pior, refletido, f_refletido)
            return

        if f_refletido > self.valores[i_pior]:
            contraido = [c + k_contracao * (r - c) for c, r in zip(centro, refletido)]
        else:
            contraido = [c + k_contracao * (w - c) for c, w in zip(centro, pior)]
        f_contraido = self._avaliar(contraido)
        if f_contraido > max(f_refletido, self.valores[i_pior]):
            self._substituir(i_pior, contraido, f_contraido)
            return

        # Encolhe em torno do melhor vértice
        base = self.vertices[i_melhor]
        for i in ordem[1:]:
            ponto = [b + 0.5 * (v - b) for b, v in zip(base, self.vertices[i])]
            self._substituir(i, ponto, self._avaliar(ponto))


def _refinar(f, x0, passos, lo, hi) -> Tuple[List[float], float, bool, int]:
    simplex = SimplexCaixa(f, x0, passos, lo, hi)
    while (
        simplex.diametro() >= SimuladorConfig.DIAMETRO_SIMPLEX
        and simplex.avaliacoes < SimuladorConfig.MAX_AVALIACOES_SIMPLEX
    ):
        simplex.passo()
    x, valor = simplex.melhor()
    return x, valor, simplex.diametro() < SimuladorConfig.DIAMETRO_SIMPLEX, simplex.avaliacoes


def _grade_densa(f, centro, espacamentos, lo, hi, pontos) -> Tuple[List[float], float, int]:
    """Melhor ponto de uma grade ±1 espaçamento grosso em torno do centro."""
    eixos = []
    for c, d, l, h in zip(centro, espacamentos, lo, hi):
        a, b = max(l, c - d), min(h, c + d)
        eixos.append([a + (b - a) * i / (pontos - 1) for i in range(pontos)] if b > a else [c])
    melhor_x, melhor_valor, avaliacoes = list(centro), -math.inf, 0
    for ponto in itertools.product(*eixos):
        valor = f(ponto)
        avaliacoes += 1
        if valor > melhor_valor:
            melhor_x, melhor_valor = list(ponto), valor
    return melhor_x, melhor_valor, avaliacoes


def maximin(
    familia: FamiliaCenario,
    criterio: TipoCriterio,
    livres: Mapping[str, Tuple[float, float]],
    fixos: Optional[Mapping[str, float]] = None,
    vinculos: Optional[Mapping[str, str]] = None,
    sementes: int = SimuladorConfig.SEMENTES_SIMPLEX,
    motor: str = "auto",
) -> RelatorioOtimo:
    """
    Maximiza min(critério₁, critério₂) sobre os parâmetros livres.

    Grade grossa de 41 pontos por eixo; as ``sementes`` melhores células
    (empates pela ordem da grade) iniciam simplexes recortados à caixa;
    uma grade densa em torno do ótimo confirma ou melhora o resultado.

    Args:
        familia: Família de cenário
        criterio: I, S ou C
        livres: nome → (lo, hi), na ordem dos eixos
        fixos: Parâmetros fixados
        vinculos: destino → origem
        sementes: Células refinadas
        motor: auto, closed ou numeric

    Returns:
        Relatório com valor, argmax completo, avaliações e convergência

    Raises:
        ErroObjetivoSingular: nenhuma célula da grade grossa é regular
    """
    fixos = dict(fixos or {})
    vinculos = dict(vinculos or {})
    nomes = list(livres)
    if not nomes:
        raise ErroConfiguracao("maximin sem parâmetros livres")
    if sementes < 1:
        raise ErroConfiguracao(f"sementes deve ser >= 1, recebido {sementes}")
    _validar_motor(motor)
    validar_cobertura(familia, nomes, fixos, vinculos)
    usa_motor = any(_usa_motor(familia, criterio, k, motor) for k in (1, 2))
    ganho_minimo = SimuladorConfig.GANHO_MINIMO_MOTOR if usa_motor else 0.0
    for nome in nomes:
        validar_intervalo(nome, *livres[nome], ganho_minimo=ganho_minimo)
    for nome, valor in fixos.items():
        validar_intervalo(nome, valor, valor, ganho_minimo=ganho_minimo)

    lo = [float(livres[n][0]) for n in nomes]
    hi = [float(livres[n][1]) for n in nomes]
    objetivo = funcao_objetivo(familia, criterio, motor)

    def parametros(x: Sequence[float]) -> Dict[str, float]:
        return completar_parametros({**fixos, **dict(zip(nomes, x))}, vinculos)

    def f(x: Sequence[float]) -> float:
        valor = objetivo(parametros(x))
        return -math.inf if valor is None else valor

    eixos = [
        EixoVarredura(n, l, h, SimuladorConfig.PONTOS_GRADE_GROSSA) if h > l else None
        for n, l, h in zip(nomes, lo, hi)
    ]
    valores_eixos = [e.valores() if e else [l] for e, l in zip(eixos, lo)]
    espacamentos = [e.espacamento if e else 0.0 for e in eixos]

    celulas = []
    avaliacoes = 0
    for indice, ponto in enumerate(itertools.product(*valores_eixos)):
        valor = f(ponto)
        avaliacoes += 1
        if valor > -math.inf:
            celulas.append((-valor, indice, list(ponto)))
    if not celulas:
        raise ErroObjetivoSingular(f"{familia.nome} {criterio.value}: objetivo singular em toda a grade")
    celulas.sort(key=lambda c: (c[0], c[1]))

    melhor_x, melhor_valor, convergiu = celulas[0][2], -celulas[0][0], False
    for ordem, (_, _, ponto) in enumerate(celulas[:sementes]):
        x, valor, ok, n = _refinar(f, ponto, espacamentos, lo, hi)
        avaliacoes += n
        if ordem == 0 or valor > melhor_valor:
            melhor_x, melhor_valor, convergiu = x, valor, ok

    pontos = (
        SimuladorConfig.PONTOS_GRADE_DENSA
        if len(nomes) <= 2 and not usa_motor
        else SimuladorConfig.PONTOS_GRADE_DENSA_REDUZIDA
    )
    x_denso, valor_denso, n = _grade_densa(f, melhor_x, espacamentos, lo, hi, pontos)
    avaliacoes += n
    if valor_denso > melhor_valor:
        melhor_x, melhor_valor, convergiu, n = _refinar(
            f, x_denso, [d / (pontos - 1) for d in espacamentos], lo, hi
        )
        avaliacoes += n

    valor_final = f(melhor_x)
    avaliacoes += 1
    argmax = parametros(melhor_x)
    logger.info(
        "Maximin concluído",
        log_type="otimizacao",
        familia=familia.nome,
        criterio=criterio.value,
        valor=valor_final,
        argmax=argmax,
        avaliacoes=avaliacoes,
        convergiu=convergiu,
    )
    return RelatorioOtimo(valor_final, argmax, avaliacoes, convergiu)


@dataclass(frozen=True)
class PontoPerfil:
    x: float
    argmax: float
    valor: float


def perfil_otimo(
    familia: FamiliaCenario,
    criterio: TipoCriterio,
    eixo: EixoVarredura,
    livre: Tuple[str, float, float],
    fixos: Optional[Mapping[str, float]] = None,
    vinculos: Optional[Mapping[str, str]] = None,
    motor: str = "auto",
) -> List[PontoPerfil]:
    """
    Perfil da crista: para cada valor do eixo, o maximin sobre o parâmetro livre.

    Args:
        eixo: Eixo percorrido
        livre: (nome, lo, hi) do parâmetro otimizado em cada ponto
    """
    nome, lo, hi = livre
    perfil = []
    for x in eixo.valores():
        relatorio = maximin(
            familia,
            criterio,
            {nome: (lo, hi)},
            {**(fixos or {}), eixo.nome: x},
            vinculos,
            motor=motor,
        )
        perfil.append(PontoPerfil(x, relatorio.argmax[nome], relatorio.valor))
    return perfil


def segmento_otimo(
    perfil: Sequence[PontoPerfil], valor_otimo: float, tolerancia: float = 1e-5
) -> Optional[Tuple[PontoPerfil, PontoPerfil]]:
    """Primeiro e último ponto do perfil com valor dentro da tolerância do ótimo."""
    no_otimo = [p for p in perfil if p.valor >= valor_otimo - tolerancia]
    if not no_otimo:
        return None
    return no_otimo[0], no_otimo[-1]


# ==========================================================================
# FRONTEIRAS
# ==========================================================================


@dataclass(frozen=True)
class PontoFronteira:
    varredura: Optional[float]
    raiz: Optional[float]


def _bissecao(g, a: float, b: float, ga: float) -> Optional[float]:
    for _ in range(SimuladorConfig.MAX_ITERACOES_BISSECAO):
        if b - a <= SimuladorConfig.TOL_BISSECAO:
            break
        meio = 0.5 * (a + b)
        g_meio = g(meio)
        if g_meio is None:
            return None
        if g_meio == 0.0:
            return meio
        if (g_meio > 0.0) == (ga > 0.0):
            a, ga = meio, g_meio
        else:
            b = meio
    return 0.5 * (a + b)


def raiz_unica(
    funcao: Objetivo,
    eixo_solucao: str,
    intervalo: Tuple[float, float],
    fixos: Mapping[str, float],
    vinculos: Optional[Mapping[str, str]] = None,
) -> Optional[float]:
    """
    Raiz de ``funcao`` no eixo de solução, por bissecção.

    Returns:
        Raiz com tolerância 1e-8, ou None sem troca de sinal nas pontas
    """
    vinculos = vinculos or {}

    def g(x: float) -> Optional[float]:
        return funcao(completar_parametros({**fixos, eixo_solucao: x}, vinculos))

    a, b = intervalo
    ga, gb = g(a), g(b)
    if ga is None or gb is None:
        return None
    if ga == 0.0:
        return a
    if gb == 0.0:
        return b
    if (ga > 0.0) == (gb > 0.0):
        return None
    return _bissecao(g, a, b, ga)


def boundary_trace(
    funcao: Objetivo,
    eixo_varredura: Optional[EixoVarredura],
    eixo_solucao: str,
    intervalo: Tuple[float, float],
    fixos: Optional[Mapping[str, float]] = None,
    vinculos: Optional[Mapping[str, str]] = None,
) -> List[PontoFronteira]:
    """
    Traça a curva funcao = 0.

    Args:
        funcao: Critério - limiar (ver ``funcao_implicita``)
        eixo_varredura: Eixo percorrido; None resolve um único ponto
        eixo_solucao: Parâmetro em que a raiz é procurada
        intervalo: (lo, hi) do eixo de solução
        fixos: Demais parâmetros
        vinculos: destino → origem

    Returns:
        Um ponto por valor varrido; raiz None quando não há troca de sinal
    """
    fixos = dict(fixos or {})
    if not intervalo[0] < intervalo[1]:
        raise ErroConfiguracao(f"intervalo de solução inválido: {intervalo}")
    if eixo_varredura is None:
        pontos = [PontoFronteira(None, raiz_unica(funcao, eixo_solucao, intervalo, fixos, vinculos))]
    else:
        pontos = [
            PontoFronteira(
                x,
                raiz_unica(funcao, eixo_solucao, intervalo, {**fixos, eixo_varredura.nome: x}, vinculos),
            )
            for x in eixo_varredura.valores()
        ]
    logger.info(
        "Fronteira traçada",
        log_type="fronteira",
        eixo_varredura=eixo_varredura.nome if eixo_varredura else None,
        eixo_solucao=eixo_solucao,
        pontos=len(pontos),
        raizes=sum(1 for p in pontos if p.raiz is not None),
    )
    return pontos


def familia_por_nome(nome: str) -> FamiliaCenario:
    """'unilateral-weak' → FamiliaCenario."""
    cenario, _, medicao = nome.partition("-")
    if cenario not in (TipoCenario.UNILATERAL.value, TipoCenario.BILATERAL.value):
        raise ErroConfiguracao(f"família desconhecida: {nome!r}")
    return FamiliaCenario.de_nomes(cenario, medicao)
