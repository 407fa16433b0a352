import math
import sys
from pathlib import Path

import numpy as np
import pytest

# Adiciona o diretório raiz do projeto ao path (onde está o diretório 'app')
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from app.services.emaranhamento.cenario import ConfigCenario, FamiliaCenario  # noqa: E402
from app.services.emaranhamento.quantico import MatrizDensidade, TipoMedicao, state_from_theta  # noqa: E402

PI_4 = math.pi / 4


@pytest.fixture
def estado_bell():
    """Fixture com o estado maximamente emaranhado (θ = π/4)"""
    return state_from_theta(PI_4)


@pytest.fixture
def estado_produto():
    """Fixture com o estado produto |00⟩ (θ = 0)"""
    return state_from_theta(0.0)


@pytest.fixture
def unilateral_fraca():
    """Fixture com o cenário unilateral fraco do ótimo de S (G₁ = G₂ = 0.8, θ = π/4)"""
    return ConfigCenario.unilateral(PI_4, TipoMedicao.FRACA, 0.8, 0.8)


@pytest.fixture
def unilateral_ppm():
    """Fixture com um cenário unilateral PPM genérico"""
    return ConfigCenario.unilateral(0.5, TipoMedicao.PPM, 0.6, 0.3)


@pytest.fixture
def bilateral_fraca_simetrica():
    """Fixture com o cenário bilateral fraco simétrico do ótimo de S (G = 0.8)"""
    return ConfigCenario.bilateral(PI_4, TipoMedicao.FRACA, 0.8, 0.8, 0.8, 0.8)


@pytest.fixture
def bilateral_ppm():
    """Fixture com um cenário bilateral PPM genérico"""
    return ConfigCenario.bilateral(0.6, TipoMedicao.PPM, 0.7, 0.4, 0.5, 0.9)


@pytest.fixture
def familias():
    """Fixture com as quatro famílias parametrizadas"""
    return {
        nome: FamiliaCenario.de_nomes(*nome.split("-"))
        for nome in ("unilateral-weak", "unilateral-ppm", "bilateral-weak", "bilateral-ppm")
    }


@pytest.fixture
def rng():
    """Fixture com um gerador determinístico"""
    return np.random.default_rng(2024)


@pytest.fixture
def densidade_aleatoria(rng):
    """Fixture que sorteia estados mistos de dois qubits (ρ = AA†/Tr)"""

    def sortear() -> MatrizDensidade:
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        rho = a @ a.conj().T
        rho = 0.5 * (rho + rho.conj().T)
        return MatrizDensidade(rho / np.trace(rho).real)

    return sortear


@pytest.fixture
def hermitiana_aleatoria(rng):
    """Fixture que sorteia matrizes hermitianas n×n"""

    def sortear(n: int = 4) -> np.ndarray:
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        return 0.5 * (a + a.conj().T)

    return sortear


@pytest.fixture(autouse=True)
def limpa_caches():
    """Fixture que esvazia os caches entre testes"""
    from app.core.metrics import estado_par_cache, kraus_cache

    kraus_cache.clear()
    estado_par_cache.clear()
    yield


