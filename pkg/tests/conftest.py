"""
conftest.py — Fixtures compartilhadas para toda a suíte de testes.

Nenhum teste usa banco de dados: grupos, splittings, tubos e modelos são
objetos imutáveis construídos em memória.
"""
import numpy as np
import pytest

from lie.services import GroupRegistry


# ──────────────────────────────────────────────────────────────────
# GRUPOS
# ──────────────────────────────────────────────────────────────────

@pytest.fixture
def so3():
    """Descritor de SO(3) na base hat."""
    return GroupRegistry.so3()


@pytest.fixture
def sl2r():
    """Descritor de SL(2,R) na base (H, X, Y)."""
    return GroupRegistry.sl2r()


# ──────────────────────────────────────────────────────────────────
# TUBOS
# ──────────────────────────────────────────────────────────────────

@pytest.fixture
def so3_tube(so3):
    """Tubo simples fechado de SO(3) em μ = (0, 0, 1)."""
    from gtubes.services import SimpleTubeService
    return SimpleTubeService.so3_simple_tube(so3, np.array([0.0, 0.0, 1.0]))


@pytest.fixture
def so3_restricted(so3):
    """Tubo restrito fechado de SO(3) com μ = (0, 0, 1), ξ_h = (1, 0, 0)."""
    from gtubes.services import RestrictedTubeService
    return RestrictedTubeService.so3_restricted_tube(
        so3, np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0]),
    )


# ──────────────────────────────────────────────────────────────────
# MODELOS COTANGENTES
# ──────────────────────────────────────────────────────────────────

def _fixture_model(name):
    from core.domain import ModelConfig
    from hamtube.services import ModelBuilder
    return ModelBuilder.from_config(ModelConfig.from_source(name))


@pytest.fixture
def so3r3_model():
    """SO(3) em T*R³ com q = (1, 0, 0), p = (0.2, 1, 0)."""
    return _fixture_model('so3r3')


@pytest.fixture
def circle_model():
    """SO(3) com H = exp(R e₁) agindo por rotação em S = R²."""
    return _fixture_model('so3_circle')


@pytest.fixture
def isotropic_model():
    """G = H = SO(3) em S = R³, μ = 0 e α = (0, 0, 1): s não trivial."""
    return _fixture_model('so3_isotropic')


# ──────────────────────────────────────────────────────────────────
# ALEATORIEDADE
# ──────────────────────────────────────────────────────────────────

@pytest.fixture
def rng():
    """Gerador com semente fixa."""
    return np.random.default_rng(0)
