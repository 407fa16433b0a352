"""
Módulo responsável pelos cenários de medição sequencial.

Monta as cadeias unilateral e bilateral de observadores, calcula a
distribuição conjunta por ramos de Kraus e as marginais de cada par, e
entrega o estado que chega a cada par (observadores intermediários a montante
com escolha de base equiprovável e resultado não lido).
"""

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Mapping, Tuple

import numpy as np

from app.core.erros import ErroAnguloInvalido, ErroConfiguracao, ErroConfiguracaoIncompleta
from app.core.metrics import estado_par_cache, metricas
from app.utils.simulador_config import SimuladorConfig
from .algebra import I2, SIGMA_X, SIGMA_Z
from .constantes import PARAMETROS_BILATERAL, PARAMETROS_UNILATERAL
from .quantico import (
    Base,
    EstrategiaMedicao,
    Lado,
    MatrizDensidade,
    TipoMedicao,
    aplicar_ramo,
    canal_nao_lido,
    kraus_for,
    state_from_theta,
)


class Papel(Enum):
    INTERMEDIARIO = "intermediate"
    FINAL = "final"


class TipoCenario(Enum):
    UNILATERAL = "unilateral"
    BILATERAL = "bilateral"
    CADEIA = "chain"


@dataclass(frozen=True)
class EspecObservador:
    """Observador de uma cadeia; configuracoes[0] mede Z (m=1), [1] mede X (m=2)."""

    lado: Lado
    indice: int
    papel: Papel
    configuracoes: Tuple[EstrategiaMedicao, EstrategiaMedicao]

    def __post_init__(self):
        if self.indice < 1:
            raise ErroConfiguracao(f"índice de observador deve ser >= 1: {self.indice}")
        if len(self.configuracoes) != 2:
            raise ErroConfiguracao(f"{self.rotulo}: são exigidas duas configurações")
        z, x = self.configuracoes
        if z.base is not Base.Z or x.base is not Base.X:
            raise ErroConfiguracao(f"{self.rotulo}: configuração 1 mede Z e 2 mede X")
        if self.papel is Papel.FINAL:
            if z.tipo is not TipoMedicao.PROJETIVA or x.tipo is not TipoMedicao.PROJETIVA:
                raise ErroConfiguracao(f"{self.rotulo}: observador final mede projetivamente")
        elif z.tipo is not x.tipo or z.tipo is TipoMedicao.PROJETIVA:
            raise ErroConfiguracao(
                f"{self.rotulo}: intermediário usa fraca ou PPM, igual nas duas bases"
            )

    @property
    def rotulo(self) -> str:
        return f"{self.lado.value}{self.indice}"

    @classmethod
    def intermediario(
        cls, lado: Lado, indice: int, tipo: TipoMedicao, ganho_z: float, ganho_x: float
    ) -> "EspecObservador":
        return cls(
            lado,
            indice,
            Papel.INTERMEDIARIO,
            (EstrategiaMedicao(tipo, Base.Z, ganho_z), EstrategiaMedicao(tipo, Base.X, ganho_x)),
        )

    @classmethod
    def final(cls, lado: Lado, indice: int) -> "EspecObservador":
        return cls(
            lado,
            indice,
            Papel.FINAL,
            (
                EstrategiaMedicao(TipoMedicao.PROJETIVA, Base.Z),
                EstrategiaMedicao(TipoMedicao.PROJETIVA, Base.X),
            ),
        )


@dataclass(frozen=True)
class ConfigCenario:
    """Ângulo inicial e as duas cadeias de observadores (imutável)."""

    theta: float
    cadeia_a: Tuple[EspecObservador, ...]
    cadeia_b: Tuple[EspecObservador, ...]
    tipo: TipoCenario = TipoCenario.CADEIA

    def __post_init__(self):
        theta = float(self.theta)
        if not math.isfinite(theta) or not 0.0 <= theta <= math.pi / 2 + 1e-15:
            raise ErroAnguloInvalido(f"θ = {self.theta!r} fora de [0, π/2]")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "cadeia_a", tuple(self.cadeia_a))
        object.__setattr__(self, "cadeia_b", tuple(self.cadeia_b))
        for lado, cadeia in ((Lado.A, self.cadeia_a), (Lado.B, self.cadeia_b)):
            if not cadeia:
                raise ErroConfiguracao(f"cadeia {lado.value} vazia")
            for posicao, obs in enumerate(cadeia, start=1):
                if obs.lado is not lado or obs.indice != posicao:
                    raise ErroConfiguracao(
                        f"cadeia {lado.value}: esperado {lado.value}{posicao}, recebido {obs.rotulo}"
                    )
                esperado = Papel.FINAL if posicao == len(cadeia) else Papel.INTERMEDIARIO
                if obs.papel is not esperado:
                    raise ErroConfiguracao(f"{obs.rotulo} deveria ser {esperado.value}")
        formato = (len(self.cadeia_a), len(self.cadeia_b))
        if self.tipo is TipoCenario.UNILATERAL and formato != (2, 1):
            raise ErroConfiguracao(f"cenário unilateral exige cadeias (2, 1), recebido {formato}")
        if self.tipo is TipoCenario.BILATERAL and formato != (2, 2):
            raise ErroConfiguracao(f"cenário bilateral exige cadeias (2, 2), recebido {formato}")

    # ------------------------------------------------------------------
    # Construtores
    # ------------------------------------------------------------------

    @classmethod
    def unilateral(cls, theta: float, tipo: TipoMedicao, g1: float, g2: float) -> "ConfigCenario":
        return cls(
            theta,
            (EspecObservador.intermediario(Lado.A, 1, tipo, g1, g2), EspecObservador.final(Lado.A, 2)),
            (EspecObservador.final(Lado.B, 1),),
            TipoCenario.UNILATERAL,
        )

    @classmethod
    def bilateral(
        cls, theta: float, tipo: TipoMedicao, g1: float, g2: float, g3: float, g4: float
    ) -> "ConfigCenario":
        return cls(
            theta,
            (EspecObservador.intermediario(Lado.A, 1, tipo, g1, g2), EspecObservador.final(Lado.A, 2)),
            (EspecObservador.intermediario(Lado.B, 1, tipo, g3, g4), EspecObservador.final(Lado.B, 2)),
            TipoCenario.BILATERAL,
        )

    @classmethod
    def de_cadeias(
        cls,
        theta: float,
        intermediarios_a: Tuple[Tuple[TipoMedicao, float, float], ...],
        intermediarios_b: Tuple[Tuple[TipoMedicao, float, float], ...],
    ) -> "ConfigCenario":
        """
        Cadeias de comprimento arbitrário; um observador final projetivo
        fecha cada lado.

        Args:
            theta: Ângulo do estado inicial
            intermediarios_a: (tipo, ganho_z, ganho_x) por intermediário de A
            intermediarios_b: idem para B

        Returns:
            Configuração com tipo inferido pelo formato das cadeias
        """
        cadeias = []
        for lado, itens in ((Lado.A, intermediarios_a), (Lado.B, intermediarios_b)):
            obs = [
                EspecObservador.intermediario(lado, i, tipo, gz, gx)
                for i, (tipo, gz, gx) in enumerate(itens, start=1)
            ]
            obs.append(EspecObservador.final(lado, len(obs) + 1))
            cadeias.append(tuple(obs))
        formato = (len(cadeias[0]), len(cadeias[1]))
        tipo = {(2, 1): TipoCenario.UNILATERAL, (2, 2): TipoCenario.BILATERAL}.get(
            formato, TipoCenario.CADEIA
        )
        return cls(theta, cadeias[0], cadeias[1], tipo)

    # ------------------------------------------------------------------
    # Consultas
    # ------------------------------------------------------------------

    @property
    def numero_pares(self) -> int:
        return max(len(self.cadeia_a), len(self.cadeia_b))

    def cadeia(self, lado: Lado) -> Tuple[EspecObservador, ...]:
        return self.cadeia_a if lado is Lado.A else self.cadeia_b

    def observador(self, lado: Lado, k: int) -> EspecObservador:
        """Observador do lado que pertence ao par k."""
        cadeia = self.cadeia(lado)
        return cadeia[min(k, len(cadeia)) - 1]

    def observadores_em_ordem(self) -> Tuple[EspecObservador, ...]:
        """Ordem da cadeia: par a par, A antes de B, sem repetir observadores."""
        ordem = []
        for k in range(1, self.numero_pares + 1):
            for lado in (Lado.A, Lado.B):
                obs = self.observador(lado, k)
                if obs not in ordem:
                    ordem.append(obs)
        return tuple(ordem)

    @property
    def ganhos(self) -> Tuple[float, ...]:
        """(G₁, G₂[, G₃, G₄]) dos intermediários na ordem de parâmetros."""
        valores = []
        for obs in self.cadeia_a + self.cadeia_b:
            if obs.papel is Papel.INTERMEDIARIO:
                valores.extend(e.ganho for e in obs.configuracoes)
        return tuple(valores)


def _validar_par(config: ConfigCenario, k: int) -> None:
    if not isinstance(k, int) or not 1 <= k <= config.numero_pares:
        raise ErroConfiguracao(f"par k={k!r} inválido (1..{config.numero_pares})")


def _validar_configuracao(m: int) -> None:
    if m not in (1, 2):
        raise ErroConfiguracao(f"configuração m={m!r} inválida (1 = Z, 2 = X)")


@dataclass(frozen=True)
class DistribuicaoResultados:
    """Distribuição normalizada de (a, b) ∈ {±1}² para um par e configurações."""

    probabilidades: Dict[Tuple[int, int], float]
    par: int
    configuracoes: Tuple[int, int]

    def como_tabela(self) -> np.ndarray:
        """Tabela 2×2, linha = a (+1, -1), coluna = b (+1, -1)."""
        return np.array(
            [[self.probabilidades[(a, b)] for b in (+1, -1)] for a in (+1, -1)], dtype=float
        )


@dataclass(frozen=True)
class DistribuicaoConjunta:
    """Probabilidades de todas as sequências de resultados, na ordem da cadeia."""

    observadores: Tuple[str, ...]
    probabilidades: Dict[Tuple[int, ...], float]

    def como_texto(self) -> Dict[str, float]:
        return {
            " ".join(f"{o}={r:+d}" for o, r in zip(self.observadores, chave)): p
            for chave, p in self.probabilidades.items()
        }


def joint_distribution(config: ConfigCenario, configuracoes: Mapping[str, int]) -> DistribuicaoConjunta:
    """
    Distribuição conjunta sobre todos os ramos sequenciais de Kraus.

    Args:
        config: Cenário
        configuracoes: Mapa rótulo do observador ("A1", "B2", ...) → m ∈ {1, 2}

    Returns:
        Probabilidade Tr[ρₙ] de cada sequência de resultados
    """
    ordem = config.observadores_em_ordem()
    rotulos = tuple(obs.rotulo for obs in ordem)
    desconhecidos = sorted(set(configuracoes) - set(rotulos))
    if desconhecidos:
        raise ErroConfiguracao(f"observadores desconhecidos: {desconhecidos}")
    faltando = [r for r in rotulos if r not in configuracoes]
    if faltando:
        raise ErroConfiguracaoIncompleta(f"sem configuração para: {faltando}")
    for rotulo in rotulos:
        _validar_configuracao(configuracoes[rotulo])

    etapas = [
        (kraus_for(obs.configuracoes[configuracoes[obs.rotulo] - 1]), obs.lado) for obs in ordem
    ]
    ramos = {(): state_from_theta(config.theta).mat}
    for kraus, lado in etapas:
        proximos = {}
        for chave, mat in ramos.items():
            for rotulo in (+1, -1):
                proximos[chave + (rotulo,)] = aplicar_ramo(mat, kraus, rotulo, lado)
        ramos = proximos
    probabilidades = {chave: float(np.trace(mat).real) for chave, mat in ramos.items()}
    return DistribuicaoConjunta(rotulos, probabilidades)


def pair_state(config: ConfigCenario, k: int) -> MatrizDensidade:
    """
    Estado entregue ao par k.

    Cada intermediário a montante aplica ½(Λ_Z + Λ_X), a mistura equiprovável
    dos canais não lidos das suas duas configurações.

    Args:
        config: Cenário
        k: Índice do par

    Returns:
        Estado de traço unitário (k=1 devolve o estado inicial)
    """
    _validar_par(config, k)
    chave = (config, k)
    estado = estado_par_cache.get(chave)
    if estado is not None:
        return estado

    mat = state_from_theta(config.theta).mat
    for lado in (Lado.A, Lado.B):
        posicao = config.observador(lado, k).indice
        for obs in config.cadeia(lado)[: posicao - 1]:
            z, x = (kraus_for(e) for e in obs.configuracoes)
            mat = 0.5 * (canal_nao_lido(mat, z, lado) + canal_nao_lido(mat, x, lado))
    estado = MatrizDensidade(mat)
    estado_par_cache[chave] = estado
    return estado


def marginal_pair(config: ConfigCenario, k: int, m: int) -> DistribuicaoResultados:
    """
    Marginal do par k com ambos os lados medindo a configuração m.

    Args:
        config: Cenário
        k: Índice do par
        m: 1 (Z) ou 2 (X)

    Returns:
        Distribuição normalizada, probabilidades abaixo de 1e-15 zeradas
    """
    _validar_par(config, k)
    _validar_configuracao(m)
    metricas["avaliacoes_motor"] += 1
    estado = pair_state(config, k)
    kraus_a = kraus_for(config.observador(Lado.A, k).configuracoes[m - 1])
    kraus_b = kraus_for(config.observador(Lado.B, k).configuracoes[m - 1])

    brutas = {}
    for a in (+1, -1):
        apos_a = aplicar_ramo(estado.mat, kraus_a, a, Lado.A)
        for b in (+1, -1):
            p = float(np.trace(aplicar_ramo(apos_a, kraus_b, b, Lado.B)).real)
            brutas[(a, b)] = 0.0 if p < SimuladorConfig.LIMIAR_PROBABILIDADE else p
    total = sum(brutas.values())
    return DistribuicaoResultados(
        {chave: p / total for chave, p in brutas.items()}, k, (m, m)
    )


_PAULI = {Base.Z: SIGMA_Z, Base.X: SIGMA_X}


def pauli_moments(rho: MatrizDensidade, base: Base) -> Tuple[float, float, float]:
    """(Tr[(σ⊗σ)ρ], Tr[(σ⊗I)ρ], Tr[(I⊗σ)ρ]) na base dada."""
    sigma = _PAULI[base]
    corr = float(np.trace(np.kron(sigma, sigma) @ rho.mat).real)
    media_a = float(np.trace(np.kron(sigma, I2) @ rho.mat).real)
    media_b = float(np.trace(np.kron(I2, sigma) @ rho.mat).real)
    return corr, media_a, media_b


def configuracoes_possiveis(config: ConfigCenario):
    """Todas as atribuições observador → m, na ordem da cadeia."""
    rotulos = [obs.rotulo for obs in config.observadores_em_ordem()]
    for escolha in itertools.product((1, 2), repeat=len(rotulos)):
        yield dict(zip(rotulos, escolha))


@dataclass(frozen=True)
class FamiliaCenario:
    """Cenário × estratégia dos intermediários; parametriza configurações por nome."""

    cenario: TipoCenario
    medicao: TipoMedicao

    def __post_init__(self):
        if self.cenario is TipoCenario.CADEIA:
            raise ErroConfiguracao("famílias parametrizadas são unilateral ou bilateral")
        if self.medicao is TipoMedicao.PROJETIVA:
            raise ErroConfiguracao("intermediários usam medição fraca ou PPM")

    @classmethod
    def de_nomes(cls, cenario: str, medicao: str) -> "FamiliaCenario":
        try:
            return cls(TipoCenario(cenario), TipoMedicao(medicao))
        except ValueError as exc:
            raise ErroConfiguracao(f"família desconhecida: {cenario}-{medicao}") from exc

    @property
    def nome(self) -> str:
        return f"{self.cenario.value}-{self.medicao.value}"

    @property
    def parametros(self) -> Tuple[str, ...]:
        if self.cenario is TipoCenario.UNILATERAL:
            return PARAMETROS_UNILATERAL
        return PARAMETROS_BILATERAL

    def configurar(self, valores: Mapping[str, float]) -> ConfigCenario:
        """Configuração a partir de um mapa completo de parâmetros."""
        faltando = [p for p in self.parametros if p not in valores]
        if faltando:
            raise ErroConfiguracaoIncompleta(f"{self.nome}: parâmetros ausentes {faltando}")
        ganhos = [valores[p] for p in self.parametros[1:]]
        if self.cenario is TipoCenario.UNILATERAL:
            return ConfigCenario.unilateral(valores["theta"], self.medicao, *ganhos)
        return ConfigCenario.bilateral(valores["theta"], self.medicao, *ganhos)
