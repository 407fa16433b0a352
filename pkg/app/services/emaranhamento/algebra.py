"""
Módulo responsável pela álgebra de matrizes complexas pequenas.

Matrizes são ``numpy.ndarray`` complex128. O autossolver hermitiano é um
Jacobi cíclico com rotações complexas, determinístico e suficiente em n=4.
"""

from typing import List

import numpy as np

from app.core.erros import ErroDimensao, ErroMatrizNaoHermitiana, ErroValorNaoFinito
from app.core.metrics import metricas
from app.core.config import logger
from app.utils.simulador_config import SimuladorConfig

CMatrix = np.ndarray

I2 = np.eye(2, dtype=np.complex128)
I4 = np.eye(4, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

for _constante in (I2, I4, SIGMA_X, SIGMA_Y, SIGMA_Z):
    _constante.setflags(write=False)


def como_matriz(a) -> CMatrix:
    """
    Converte a entrada numa matriz complexa 2D com entradas finitas.

    Args:
        a: Sequência aninhada ou ndarray

    Returns:
        ndarray complex128 bidimensional
    """
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ErroDimensao(f"esperada matriz 2D não vazia, recebido shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ErroValorNaoFinito("matriz com entradas NaN/Inf")
    return m


def kron(a, b) -> CMatrix:
    """Produto de Kronecker; as dimensões se multiplicam."""
    return np.kron(como_matriz(a), como_matriz(b))


def dagger(a) -> CMatrix:
    """Conjugado transposto."""
    return como_matriz(a).conj().T


def matmul(a, b) -> CMatrix:
    ma, mb = como_matriz(a), como_matriz(b)
    if ma.shape[1] != mb.shape[0]:
        raise ErroDimensao(f"matmul: {ma.shape} x {mb.shape}")
    return ma @ mb


def trace(a) -> complex:
    m = como_matriz(a)
    if m.shape[0] != m.shape[1]:
        raise ErroDimensao(f"traço de matriz não quadrada {m.shape}")
    return complex(np.trace(m))


def desvio_hermitiano(a) -> float:
    """max |a - a†| entrada a entrada."""
    m = como_matriz(a)
    if m.shape[0] != m.shape[1]:
        raise ErroDimensao(f"matriz não quadrada {m.shape}")
    return float(np.max(np.abs(m - m.conj().T)))


def hermitizar(a) -> CMatrix:
    """(M + M†)/2."""
    m = como_matriz(a)
    return 0.5 * (m + m.conj().T)


def _norma_fora_diagonal(m: CMatrix) -> float:
    # Frobenius das entradas fora da diagonal, calculada direto
    return float(np.linalg.norm(m - np.diag(np.diag(m))))


def hermitian_eigenvalues(a) -> List[float]:
    """
    Autovalores de uma matriz hermitiana por Jacobi cíclico complexo.

    Cada rotação primeiro remove a fase de a_pq com uma matriz diagonal
    unitária e depois aplica a rotação real clássica que anula o elemento.
    Para quando a norma de Frobenius fora da diagonal cai abaixo de
    ``SimuladorConfig.TOL_JACOBI`` ou após ``MAX_VARREDURAS_JACOBI``.

    Args:
        a: Matriz quadrada hermitiana (tolerância 1e-12)

    Returns:
        Autovalores reais em ordem crescente
    """
    m = np.array(como_matriz(a), dtype=np.complex128)
    n = m.shape[0]
    if m.shape[1] != n:
        raise ErroDimensao(f"autovalores de matriz não quadrada {m.shape}")
    desvio = desvio_hermitiano(m)
    if desvio > SimuladorConfig.TOL_HERMITICIDADE:
        raise ErroMatrizNaoHermitiana(desvio, SimuladorConfig.TOL_HERMITICIDADE)
    m = hermitizar(m)

    varreduras = 0
    while _norma_fora_diagonal(m) >= SimuladorConfig.TOL_JACOBI:
        if varreduras >= SimuladorConfig.MAX_VARREDURAS_JACOBI:
            logger.warning(
                "Jacobi sem convergência",
                log_type="jacobi",
                varreduras=varreduras,
                norma_fora_diagonal=_norma_fora_diagonal(m),
            )
            break
        varreduras += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                r = abs(apq)
                if r < 1e-300:
                    continue
                fase = apq / r
                app, aqq = m[p, p].real, m[q, q].real
                theta = (aqq - app) / (2.0 * r)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta == 0.0:
                        t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                g = np.eye(n, dtype=np.complex128)
                g[p, p] = c
                g[p, q] = s
                g[q, p] = -s * np.conj(fase)
                g[q, q] = c * np.conj(fase)
                m = g.conj().T @ m @ g
                m[p, q] = 0.0
                m[q, p] = 0.0
    metricas["varreduras_jacobi"] += varreduras
    return sorted(float(x) for x in np.real(np.diag(m)))


def partial_transpose(rho, subsystem: str = "second") -> CMatrix:
    """
    Transposta parcial 4×4 no qubit escolhido.

    Args:
        rho: Matriz 4×4
        subsystem: "first" ou "second"

    Returns:
        Nova matriz 4×4
    """
    m = como_matriz(rho)
    if m.shape != (4, 4):
        raise ErroDimensao(f"transposta parcial exige 4x4, recebido {m.shape}")
    tensor = m.reshape(2, 2, 2, 2)
    if subsystem == "second":
        return tensor.transpose(0, 3, 2, 1).reshape(4, 4).copy()
    if subsystem == "first":
        return tensor.transpose(2, 1, 0, 3).reshape(4, 4).copy()
    raise ErroDimensao(f"subsistema desconhecido: {subsystem!r}")
