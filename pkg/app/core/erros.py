"""
Hierarquia de exceções do simulador.

Toda exceção de domínio herda de ``ErroSimulacao``; as subclasses também
herdam da exceção nativa mais próxima (``ValueError``/``ArithmeticError``)
para que chamadores genéricos continuem funcionando.
"""

from typing import Optional


class ErroSimulacao(Exception):
    """Base de todos os erros do simulador."""


class ErroDimensao(ErroSimulacao, ValueError):
    """Dimensões incompatíveis ou tamanho de matriz inesperado."""


class ErroValorNaoFinito(ErroSimulacao, ValueError):
    """Entrada NaN ou infinita numa matriz."""


class ErroMatrizNaoHermitiana(ErroSimulacao, ValueError):
    """Matriz rejeitada pelo autossolver hermitiano."""

    def __init__(self, desvio_maximo: float, tolerancia: float):
        self.desvio_maximo = desvio_maximo
        self.tolerancia = tolerancia
        super().__init__(
            f"matriz não hermitiana: max|A - A†| = {desvio_maximo:.3e} "
            f"(tolerância {tolerancia:.0e})"
        )


class ErroEstadoInvalido(ErroSimulacao, ValueError):
    """Matriz densidade fora dos invariantes (hermiticidade, traço, positividade)."""


class ErroGanhoInvalido(ErroSimulacao, ValueError):
    """Ganho de informação fora de (0, 1]."""


class ErroAnguloInvalido(ErroSimulacao, ValueError):
    """Ângulo fora do domínio ou token de ângulo desconhecido."""


class ErroConfiguracao(ErroSimulacao, ValueError):
    """Configuração de cenário, varredura ou execução inválida."""


class ErroConfiguracaoIncompleta(ErroConfiguracao):
    """Mapa de configurações sem escolha para algum observador."""


class ErroVarianciaSingular(ErroSimulacao, ArithmeticError):
    """Variância abaixo de ε no coeficiente de Pearson."""

    def __init__(self, base: Optional[str], variancia_a: float, variancia_b: float):
        self.base = base
        self.variancia_a = variancia_a
        self.variancia_b = variancia_b
        rotulo = f" na base {base}" if base else ""
        super().__init__(
            f"variância singular{rotulo}: varA={variancia_a:.3e}, varB={variancia_b:.3e}"
        )


class ErroCondicionalIndefinida(ErroSimulacao, ArithmeticError):
    """Probabilidade condicional com marginal de B nula."""

    def __init__(self, resultado_b: int):
        self.resultado_b = resultado_b
        super().__init__(f"P(b={resultado_b:+d}) = 0: condicional indefinida")


class ErroDominio(ErroSimulacao, ValueError):
    """Parâmetros fora do domínio de uma forma fechada ou família não suportada."""


class ErroObjetivoSingular(ErroSimulacao, ArithmeticError):
    """Objetivo maximin singular em todo o domínio."""
