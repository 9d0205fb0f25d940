"""
Django settings for hamtube.

Biblioteca numérica + CLI de tubos hamiltonianos para ações levantadas ao
fibrado cotangente:
- Núcleo de grupos de Lie matriciais (SO(3), SL(2,R), descritores JSON)
- Splittings adaptados e fatias simpléticas
- Tubos simples/restritos e tubos hamiltonianos compostos
- Motor de verificação por diferenças finitas

Não há banco de dados nem superfície web: o Django fornece configuração,
logging, registro de apps e os management commands.
"""

from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# ==============================================================================
# CORE SETTINGS
# ==============================================================================

SECRET_KEY = config('SECRET_KEY', default='django-insecure-hamtube-local-only')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# ==============================================================================
# APPLICATION DEFINITION
# ==============================================================================

INSTALLED_APPS = [
    # Local apps
    'core.apps.CoreConfig',
    'lie.apps.LieConfig',
    'specialfn.apps.SpecialfnConfig',
    'splitting.apps.SplittingConfig',
    'gtubes.apps.GtubesConfig',
    'hamtube.apps.HamtubeConfig',
    'verification.apps.VerificationConfig',
]

# Sem persistência: todos os objetos do domínio são imutáveis e em memória.
DATABASES = {}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# ==============================================================================
# INTERNATIONALIZATION
# ==============================================================================

LANGUAGE_CODE = 'pt-br'
TIME_ZONE = 'America/Sao_Paulo'
USE_I18N = True
USE_TZ = True


# ==============================================================================
# LOGGING
# ==============================================================================

# Console escreve em stderr: stdout é reservado aos dados (JSON/CSV).
LOGS_DIR = BASE_DIR / 'logs'
LOGS_DIR.mkdir(exist_ok=True)

LOG_LEVEL = config('HAMTUBE_LOG_LEVEL', default='INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
            'datefmt': '%Y-%m-%d %H:%M:%S',
        },
        'simple': {
            'format': '{levelname} {asctime} {message}',
            'style': '{',
            'datefmt': '%Y-%m-%d %H:%M:%S',
        },
        'colored': {
            'format': '{levelname} {asctime} [{module}] {message}',
            'style': '{',
            'datefmt': '%Y-%m-%d %H:%M:%S',
        },
    },
    'handlers': {
        'console': {
            'level': LOG_LEVEL,
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'colored',
        },
        'file': {
            'level': 'INFO',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOGS_DIR / 'hamtube.log',
            'maxBytes': 1024 * 1024 * 15,  # 15MB
            'backupCount': 10,
            'formatter': 'verbose',
        },
        'file_errors': {
            'level': 'ERROR',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOGS_DIR / 'errors.log',
            'maxBytes': 1024 * 1024 * 10,  # 10MB
            'backupCount': 10,
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'django': {
            'handlers': ['console', 'file'],
            'level': 'WARNING',
            'propagate': False,
        },
        'core': {
            'handlers': ['console', 'file', 'file_errors'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'lie': {
            'handlers': ['console', 'file'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'specialfn': {
            'handlers': ['console', 'file'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'splitting': {
            'handlers': ['console', 'file'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'gtubes': {
            'handlers': ['console', 'file'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'hamtube': {
            'handlers': ['console', 'file', 'file_errors'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'verification': {
            'handlers': ['console', 'file', 'file_errors'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
}


# ==============================================================================
# NUMERICAL POLICY CONFIGURATION
# ==============================================================================

# Tolerâncias, raios e limites de iteração. Todos sobrescrevíveis por
# variáveis de ambiente (ou .env) através do python-decouple.

HAMTUBE = {
    # Álgebra linear numérica
    'RANK_RTOL': config('HAMTUBE_RANK_RTOL', default=1e-8, cast=float),
    'RANK_GAP_FACTOR': config('HAMTUBE_RANK_GAP_FACTOR', default=1e3, cast=float),
    'CERTIFICATION_TOL': config('HAMTUBE_CERTIFICATION_TOL', default=1e-9, cast=float),
    'MEMBERSHIP_TOL': config('HAMTUBE_MEMBERSHIP_TOL', default=1e-10, cast=float),
    'JACOBI_TOL': 1e-12,

    # Série de dexp
    'DEXP_RTOL': 1e-16,
    'DEXP_MAX_TERMS': 40,

    # Resolução escalar (ℰ, ℱ, m₁)
    'SCALAR_ABS_TOL': 1e-14,
    'SCALAR_MAX_ITER': 100,
    'SCALAR_BRACKETING': True,

    # Newton do tubo restrito
    'NEWTON_TOL': 1e-12,
    'NEWTON_ACCEPT_TOL': 1e-10,
    'NEWTON_MAX_ITER': 50,
    'NEWTON_TRUST_FACTOR': 0.5,

    # Inversão de tubos
    'INVERSION_TOL': 1e-10,
    'INVERSION_MAX_ITER': 60,

    # Raios dos modelos: fração da escala ‖μ‖ (ou ‖q‖ para a fatia)
    'RADIUS_FACTOR': config('HAMTUBE_RADIUS_FACTOR', default=0.3, cast=float),

    # Média da métrica invariante sobre H
    'METRIC_SAMPLES': 64,

    # Diferenças finitas
    'FD_STEP': config('HAMTUBE_FD_STEP', default=1e-5, cast=float),
    'FD_THRESHOLDS': {
        'pullback': 1e-6,
        'equivariance': 1e-10,
        'momentum': 1e-9,
        'linearization': 1e-7,
        'restricted_momentum': 1e-10,
        'membership': 1e-10,
        'gamma': 1e-11,
        'agreement': 1e-9,
        'center': 1e-12,
        'roundtrip': 1e-8,
        'bates_lerman': 1e-9,
        'negative_control': 1e-3,
    },

    # Reprodutibilidade e paralelismo
    'DEFAULT_SEED': config('HAMTUBE_SEED', default=0, cast=int),
    'THREADS': config('HAMTUBE_THREADS', default=1, cast=int),
}

# Diretório com as configurações de modelo distribuídas com o projeto
MODEL_FIXTURES_DIR = BASE_DIR / 'fixtures' / 'models'
