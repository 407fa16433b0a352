"""
Linha de comando do simulador.

Subcomandos:

    eval       critérios de um ponto (flags ou --config ARQUIVO)
    scan       varredura em grade: --family unilateral-weak --axis G1:0.05:1:20 --fix theta=pi/4
    optimize   maximin: --family ... --criterion S --free G1:0:1 --free G2:0:1
    boundary   fronteira critério = limiar: --solve G2:0:1 [--axis theta:0.1:pi/4:16]
    verify     formas fechadas ≡ motor numérico: --seed 7 --count 1000
    reproduce  tabela dos valores de referência

Opções comuns: --format csv|json, --out CAMINHO, --workers N (padrão ES_WORKERS).

Códigos de saída: 0 sucesso, 1 tolerância excedida, 2 uso ou configuração inválida.

Arquivo de cenário (--config), texto chave=valor por seções:

    [scenario]
    tag = bilateral         ; unilateral | bilateral | chain
    theta = pi/4            ; radianos ou pi/4, pi/6, pi/12
    strategy = weak         ; weak | ppm, herdado pelos intermediários

    [A1]                    ; intermediários A1..An e B1..Bm
    gain_z = 0.8
    gain_x = 0.8

    [B1]
    kind = ppm              ; opcional
    gain_z = 0.6
    gain_x = 0.6

O observador final projetivo de cada lado é implícito; seções ou chaves
desconhecidas são erro.
"""

import argparse
import math
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from app.core.config import logger
from app.core.erros import (
    ErroAnguloInvalido,
    ErroConfiguracao,
    ErroDimensao,
    ErroDominio,
    ErroEstadoInvalido,
    ErroGanhoInvalido,
    ErroObjetivoSingular,
    ErroValorNaoFinito,
)
from app.core.middleware import executar_com_latencia
from app.models.schemas import ConfigExecucao
from app.services.emaranhamento import (
    ConfigCenario,
    EixoVarredura,
    EspecVarredura,
    TipoCriterio,
    TipoMedicao,
    avaliar_ponto,
    boundary_trace,
    carregar_cenario,
    familia_por_nome,
    funcao_implicita,
    funcao_ppt,
    grid_scan,
    maximin,
    pair_state,
    perfil_otimo,
    ppt_report,
    reproduce,
    segmento_otimo,
    verify,
)
from app.services.emaranhamento.constantes import COLUNAS_REPRODUCAO, COLUNAS_VERIFICACAO
from app.services.emaranhamento.criterios import viola
from app.services.emaranhamento.exploracao import MOTORES, vinculos_simetricos
from app.utils.angulos import interpretar_angulo
from app.utils.emissores import FORMATOS, emitir
from app.utils.simulador_config import SimuladorConfig

CODIGO_OK = 0
CODIGO_FALHA_TOLERANCIA = 1
CODIGO_ERRO_USO = 2

VEREDITO_VIOLA = "violated"
VEREDITO_NAO_VIOLA = "not violated"
VEREDITO_COMPARTILHADO = "shared"
VEREDITO_NAO_COMPARTILHADO = "not shared"
VEREDITO_EMARANHADO = "entangled"
VEREDITO_SEPARAVEL = "separable"
VEREDITO_SINGULAR = "SINGULAR"
VEREDITO_INDEFINIDO = "UNDEFINED"

ERROS_DE_USO = (
    ErroConfiguracao,
    ErroDominio,
    ErroAnguloInvalido,
    ErroGanhoInvalido,
    ErroObjetivoSingular,
    ErroEstadoInvalido,
    ErroDimensao,
    ErroValorNaoFinito,
    OSError,
)

_CRITERIOS = (TipoCriterio.INFORMACAO_MUTUA, TipoCriterio.SOMA_CONDICIONAL, TipoCriterio.PEARSON)


# ===========================================================================
# LEITURA DE ARGUMENTOS
# ===========================================================================


def nome_parametro(texto: str) -> str:
    """'theta', 'g1', 'G1' → nome canônico."""
    nome = texto.strip()
    return "theta" if nome.lower() == "theta" else nome.upper()


def valor_parametro(nome: str, texto: str) -> float:
    if nome == "theta":
        return interpretar_angulo(texto)
    try:
        return float(texto)
    except ValueError as exc:
        raise ErroConfiguracao(f"{nome}: valor {texto!r} não é número") from exc


def interpretar_eixo(texto: str) -> EixoVarredura:
    """'NOME:LO:HI:PASSOS' → eixo de varredura."""
    partes = texto.split(":")
    if len(partes) != 4:
        raise ErroConfiguracao(f"eixo {texto!r}: formato NOME:LO:HI:PASSOS")
    nome = nome_parametro(partes[0])
    try:
        passos = int(partes[3])
    except ValueError as exc:
        raise ErroConfiguracao(f"eixo {texto!r}: passos {partes[3]!r} não é inteiro") from exc
    return EixoVarredura(nome, valor_parametro(nome, partes[1]), valor_parametro(nome, partes[2]), passos)


def interpretar_livre(texto: str) -> Tuple[str, float, float]:
    """'NOME:LO:HI' → (nome, lo, hi)."""
    partes = texto.split(":")
    if len(partes) != 3:
        raise ErroConfiguracao(f"intervalo {texto!r}: formato NOME:LO:HI")
    nome = nome_parametro(partes[0])
    lo, hi = valor_parametro(nome, partes[1]), valor_parametro(nome, partes[2])
    if not lo <= hi:
        raise ErroConfiguracao(f"intervalo {texto!r}: lo <= hi exigido")
    return nome, lo, hi


def interpretar_fixos(textos: Optional[Sequence[str]]) -> Dict[str, float]:
    """['NOME=VALOR', ...] → mapa de parâmetros fixos."""
    fixos: Dict[str, float] = {}
    for texto in textos or []:
        nome, sinal, valor = texto.partition("=")
        if not sinal:
            raise ErroConfiguracao(f"fixo {texto!r}: formato NOME=VALOR")
        nome = nome_parametro(nome)
        if nome in fixos:
            raise ErroConfiguracao(f"parâmetro {nome} fixado duas vezes")
        fixos[nome] = valor_parametro(nome, valor)
    return fixos


def _vinculos(familia, simetrico: bool) -> Dict[str, str]:
    return vinculos_simetricos(familia) if simetrico else {}


# ===========================================================================
# SUBCOMANDOS
# ===========================================================================


def cenario_de_flags(args: argparse.Namespace) -> ConfigCenario:
    """Configuração do eval a partir de --config ou das flags inline."""
    inline = [args.scenario, args.strategy, args.theta, args.g, args.g1, args.g2, args.g3, args.g4]
    if args.config:
        if any(v is not None for v in inline):
            raise ErroConfiguracao("--config não combina com flags de cenário")
        return carregar_cenario(args.config)

    if args.scenario is None or args.strategy is None or args.theta is None:
        raise ErroConfiguracao("eval exige --scenario, --strategy e --theta (ou --config)")
    theta = interpretar_angulo(args.theta)
    medicao = TipoMedicao(args.strategy)
    n_ganhos = 2 if args.scenario == "unilateral" else 4
    individuais = [args.g1, args.g2, args.g3, args.g4][:n_ganhos]
    extras = [args.g1, args.g2, args.g3, args.g4][n_ganhos:]
    if any(v is not None for v in extras):
        raise ErroConfiguracao(f"cenário {args.scenario} usa apenas {n_ganhos} ganhos")
    if args.g is not None:
        if any(v is not None for v in individuais):
            raise ErroConfiguracao("--g não combina com --g1..--g4")
        ganhos = [args.g] * n_ganhos
    else:
        faltando = [f"--g{i}" for i, v in enumerate(individuais, start=1) if v is None]
        if faltando:
            raise ErroConfiguracao(f"ganhos ausentes: {faltando}")
        ganhos = individuais
    if args.scenario == "unilateral":
        return ConfigCenario.unilateral(theta, medicao, *ganhos)
    return ConfigCenario.bilateral(theta, medicao, *ganhos)


def _veredito_par(tipo: TipoCriterio, total: float) -> str:
    if math.isnan(total):
        return VEREDITO_SINGULAR if tipo is TipoCriterio.PEARSON else VEREDITO_INDEFINIDO
    return VEREDITO_VIOLA if viola(tipo, total) else VEREDITO_NAO_VIOLA


def tabela_eval(config: ConfigCenario) -> Tuple[List[str], List[list]]:
    """Critérios por par, mínimos com veredito de compartilhamento e PPT por par."""
    resultado = avaliar_ponto(config)
    pares = range(1, config.numero_pares + 1)
    linhas: List[list] = []
    for tipo in _CRITERIOS:
        for k in pares:
            total = resultado.total(tipo, k)
            linhas.append([f"{tipo.value}{k}", total, _veredito_par(tipo, total)])
    for tipo in _CRITERIOS:
        minimo = resultado.minimo(tipo)
        if math.isnan(minimo):
            veredito = _veredito_par(tipo, minimo)
        else:
            veredito = VEREDITO_COMPARTILHADO if resultado.dupla(tipo) else VEREDITO_NAO_COMPARTILHADO
        linhas.append([f"min{tipo.value}", minimo, veredito])
    for k in pares:
        relatorio = ppt_report(pair_state(config, k))
        linhas.append(
            [
                f"ppt_min_eig{k}",
                relatorio.autovalor_minimo,
                VEREDITO_EMARANHADO if relatorio.emaranhado else VEREDITO_SEPARAVEL,
            ]
        )
        linhas.append([f"purity{k}", relatorio.mistura, ""])
    return ["quantity", "value", "verdict"], linhas


def cmd_eval(args: argparse.Namespace, execucao: ConfigExecucao) -> int:
    colunas, linhas = tabela_eval(cenario_de_flags(args))
    escrever(emitir(colunas, linhas, execucao.formato), execucao.saida)
    return CODIGO_OK


def cmd_scan(args: argparse.Namespace, execucao: ConfigExecucao) -> int:
    familia = familia_por_nome(args.family)
    spec = EspecVarredura(
        familia,
        tuple(interpretar_eixo(texto) for texto in args.axis),
        interpretar_fixos(args.fix),
        _vinculos(familia, args.symmetric),
    )
    tabela = grid_scan(spec, workers=execucao.workers)
    escrever(emitir(tabela.colunas, tabela.como_listas(), execucao.formato), execucao.saida)
    return CODIGO_OK


def cmd_optimize(args: argparse.Namespace, execucao: ConfigExecucao) -> int:
    familia = familia_por_nome(args.family)
    criterio = TipoCriterio(args.criterion)
    livres = [interpretar_livre(texto) for texto in args.free]
    fixos = interpretar_fixos(args.fix)
    vinculos = _vinculos(familia, args.symmetric)

    if args.ridge:
        if len(livres) != 1:
            raise ErroConfiguracao("--ridge exige exatamente um --free")
        eixo = interpretar_eixo(args.ridge)
        perfil = perfil_otimo(familia, criterio, eixo, livres[0], fixos, vinculos, motor=args.engine)
        otimo = max(p.valor for p in perfil)
        segmento = segmento_otimo(perfil, otimo)
        colunas = [eixo.nome, f"argmax_{livres[0][0]}", "value", "on_optimum"]
        linhas = [
            [p.x, p.argmax, p.valor, segmento is not None and segmento[0].x <= p.x <= segmento[1].x]
            for p in perfil
        ]
        escrever(emitir(colunas, linhas, execucao.formato), execucao.saida)
        return CODIGO_OK

    relatorio = maximin(
        familia,
        criterio,
        {nome: (lo, hi) for nome, lo, hi in livres},
        fixos,
        vinculos,
        sementes=args.seeds,
        motor=args.engine,
    )
    linhas = [["value", relatorio.valor]]
    linhas += [[nome, relatorio.argmax[nome]] for nome in familia.parametros]
    linhas += [["evaluations", relatorio.avaliacoes], ["converged", relatorio.convergiu]]
    escrever(emitir(["quantity", "value"], linhas, execucao.formato), execucao.saida)
    return CODIGO_OK


def cmd_boundary(args: argparse.Namespace, execucao: ConfigExecucao) -> int:
    familia = familia_por_nome(args.family)
    if args.ppt:
        funcao = funcao_ppt(familia, args.pair or 2)
    elif args.criterion:
        funcao = funcao_implicita(familia, TipoCriterio(args.criterion), args.pair, args.threshold, args.engine)
    else:
        raise ErroConfiguracao("boundary exige --criterion ou --ppt")
    nome, lo, hi = interpretar_livre(args.solve)
    eixo = interpretar_eixo(args.axis) if args.axis else None
    pontos = boundary_trace(
        funcao,
        eixo,
        nome,
        (lo, hi),
        interpretar_fixos(args.fix),
        _vinculos(familia, args.symmetric),
    )
    # Sem troca de sinal: nan no CSV, null no JSON
    raizes = [math.nan if p.raiz is None else p.raiz for p in pontos]
    if eixo is None:
        colunas, linhas = [nome], [[r] for r in raizes]
    else:
        colunas, linhas = [eixo.nome, nome], [[p.varredura, r] for p, r in zip(pontos, raizes)]
    escrever(emitir(colunas, linhas, execucao.formato), execucao.saida)
    return CODIGO_OK


def cmd_verify(args: argparse.Namespace, execucao: ConfigExecucao) -> int:
    relatorio = verify(execucao.semente, execucao.tuplas)
    escrever(emitir(COLUNAS_VERIFICACAO, relatorio.como_listas(), execucao.formato), execucao.saida)
    return CODIGO_OK if relatorio.aprovado else CODIGO_FALHA_TOLERANCIA


def cmd_reproduce(args: argparse.Namespace, execucao: ConfigExecucao) -> int:
    relatorio = reproduce()
    escrever(emitir(COLUNAS_REPRODUCAO, relatorio.como_listas(), execucao.formato), execucao.saida)
    return CODIGO_OK if relatorio.aprovado else CODIGO_FALHA_TOLERANCIA


COMANDOS = {
    "eval": cmd_eval,
    "scan": cmd_scan,
    "optimize": cmd_optimize,
    "boundary": cmd_boundary,
    "verify": cmd_verify,
    "reproduce": cmd_reproduce,
}


# ===========================================================================
# PARSER E EXECUÇÃO
# ===========================================================================


def escrever(texto: str, saida: Optional[str]) -> None:
    """Único ponto de escrita: arquivo (sem tradução de fim de linha) ou stdout."""
    if saida:
        try:
            with open(saida, "w", encoding="utf-8", newline="") as arquivo:
                arquivo.write(texto)
        except OSError as exc:
            raise ErroConfiguracao(f"não foi possível escrever {saida}: {exc}") from exc
    else:
        sys.stdout.write(texto)
        sys.stdout.flush()


def _adicionar_exploracao(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--family", required=True, help="unilateral-weak, unilateral-ppm, bilateral-weak, bilateral-ppm")
    sub.add_argument("--fix", action="append", metavar="NOME=VALOR", help="parâmetro fixo (repetível)")
    sub.add_argument("--symmetric", action="store_true", help="amarra todos os ganhos a G1")


def construir_parser() -> argparse.ArgumentParser:
    comuns = argparse.ArgumentParser(add_help=False)
    comuns.add_argument("--format", choices=FORMATOS, default="csv")
    comuns.add_argument("--out", default=None, metavar="CAMINHO")
    comuns.add_argument("--workers", type=int, default=None, help="padrão: ES_WORKERS ou 1")

    parser = argparse.ArgumentParser(
        prog="emaranhamento",
        description="Compartilhamento de emaranhamento sob medições sequenciais fracas e PPM.",
    )
    subparsers = parser.add_subparsers(dest="comando", required=True)

    ev = subparsers.add_parser("eval", parents=[comuns], help="critérios de um ponto")
    ev.add_argument("--scenario", choices=("unilateral", "bilateral"))
    ev.add_argument("--strategy", choices=(TipoMedicao.FRACA.value, TipoMedicao.PPM.value))
    ev.add_argument("--theta", help="radianos ou pi/4, pi/6, pi/12")
    ev.add_argument("--g", type=float, help="ganho único de todos os intermediários")
    for i in range(1, 5):
        ev.add_argument(f"--g{i}", type=float)
    ev.add_argument("--config", metavar="ARQUIVO", help="arquivo de cenário")

    sc = subparsers.add_parser("scan", parents=[comuns], help="varredura em grade")
    _adicionar_exploracao(sc)
    sc.add_argument("--axis", action="append", required=True, metavar="NOME:LO:HI:PASSOS")

    op = subparsers.add_parser("optimize", parents=[comuns], help="maximin de um critério")
    _adicionar_exploracao(op)
    op.add_argument("--criterion", choices=("I", "S", "C"), required=True)
    op.add_argument("--free", action="append", required=True, metavar="NOME:LO:HI")
    op.add_argument("--seeds", type=int, default=SimuladorConfig.SEMENTES_SIMPLEX)
    op.add_argument("--engine", choices=MOTORES, default="auto")
    op.add_argument("--ridge", metavar="NOME:LO:HI:PASSOS", help="perfil da crista ao longo de um eixo")

    fr = subparsers.add_parser("boundary", parents=[comuns], help="fronteira critério = limiar")
    _adicionar_exploracao(fr)
    fr.add_argument("--criterion", choices=("I", "S", "C"))
    fr.add_argument("--ppt", action="store_true", help="autovalor mínimo da transposta parcial = 0")
    fr.add_argument("--pair", type=int, choices=(1, 2))
    fr.add_argument("--threshold", type=float)
    fr.add_argument("--solve", required=True, metavar="NOME:LO:HI")
    fr.add_argument("--axis", metavar="NOME:LO:HI:PASSOS")
    fr.add_argument("--engine", choices=MOTORES, default="auto")

    ve = subparsers.add_parser("verify", parents=[comuns], help="formas fechadas ≡ motor numérico")
    ve.add_argument("--seed", type=int, default=SimuladorConfig.SEMENTE_PADRAO)
    ve.add_argument("--count", type=int, default=SimuladorConfig.TUPLAS_PADRAO)

    subparsers.add_parser("reproduce", parents=[comuns], help="valores de referência")
    return parser


def config_execucao(args: argparse.Namespace) -> ConfigExecucao:
    workers = args.workers if args.workers is not None else SimuladorConfig.workers_padrao()
    return ConfigExecucao.de_dicionario(
        {
            "comando": args.comando,
            "formato": args.format,
            "saida": args.out,
            "config": getattr(args, "config", None),
            "semente": getattr(args, "seed", None),
            "tuplas": getattr(args, "count", None),
            "workers": workers,
        }
    )


def executar(argv: Optional[Sequence[str]] = None) -> int:
    """
    Interpreta os argumentos e roda o subcomando.

    Returns:
        0 sucesso, 1 tolerância excedida, 2 uso ou configuração inválida
    """
    parser = construir_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else CODIGO_ERRO_USO

    logger.info("Comando recebido", log_type="cli", comando=args.comando)
    try:
        execucao = config_execucao(args)
        return executar_com_latencia(args.comando, lambda: COMANDOS[args.comando](args, execucao))
    except ERROS_DE_USO as exc:
        logger.error(
            "Comando rejeitado",
            log_type="cli",
            comando=args.comando,
            error_type=type(exc).__name__,
            error_message=str(exc),
        )
        print(f"erro: {exc}", file=sys.stderr)
        return CODIGO_ERRO_USO
