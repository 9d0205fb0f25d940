"""
Group Registry - Construção e carga de descritores de grupo.

Built-ins:
    so3  — base hat(e_k); colchete = produto vetorial; pareamento DUAL
    sl2r — base H, X, Y; forma ⟨A,B⟩ = −2·tr(AB)

Descritores adicionais são carregados de JSON (ver docs/CONFIG_SCHEMA.md).
As constantes de estrutura são sempre derivadas das matrizes da base.
"""
import json
import logging
from pathlib import Path
from typing import Union

import numpy as np

from core.domain.exceptions import ConfigSchemaError
from core.utils.policy import policy
from lie.domain import (
    DefiningEquations,
    GroupDescriptor,
    PairingKind,
    validate_structure_constants,
)

logger = logging.getLogger(__name__)


def hat(v: np.ndarray) -> np.ndarray:
    """Matriz antissimétrica de v ∈ R³ (hat(v) w = v × w)."""
    x, y, z = v
    return np.array([
        [0.0, -z, y],
        [z, 0.0, -x],
        [-y, x, 0.0],
    ])


def vee(m: np.ndarray) -> np.ndarray:
    """Inversa de hat."""
    return np.array([m[2, 1], m[0, 2], m[1, 0]])


SL2_H = np.array([[1.0, 0.0], [0.0, -1.0]])
SL2_X = np.array([[0.0, 1.0], [0.0, 0.0]])
SL2_Y = np.array([[0.0, 0.0], [1.0, 0.0]])


class GroupRegistry:
    """
    Registro de descritores de grupo.

    Os built-ins são construídos a cada chamada (objetos imutáveis e
    baratos); nada é armazenado em cache.
    """

    BUILTIN_NAMES = ('so3', 'sl2r')

    @staticmethod
    def get(name: str) -> GroupDescriptor:
        """
        Retorna um descritor built-in ou carregado de arquivo JSON.

        Args:
            name: 'so3', 'sl2r' ou caminho para um arquivo .json

        Raises:
            ConfigSchemaError: nome desconhecido ou arquivo inválido
        """
        if name == 'so3':
            return GroupRegistry.so3()
        if name == 'sl2r':
            return GroupRegistry.sl2r()
        if str(name).endswith('.json'):
            return GroupRegistry.load_json(name)
        raise ConfigSchemaError('group', f"grupo desconhecido '{name}'")

    @staticmethod
    def so3() -> GroupDescriptor:
        basis = np.array([hat(e) for e in np.eye(3)])
        return GroupRegistry.from_basis(
            name='so3',
            basis=basis,
            pairing=PairingKind.DUAL,
            defining_equations=DefiningEquations.ORTHOGONAL,
        )

    @staticmethod
    def sl2r() -> GroupDescriptor:
        basis = np.array([SL2_H, SL2_X, SL2_Y])
        return GroupRegistry.from_basis(
            name='sl2r',
            basis=basis,
            pairing=PairingKind.TRACE_FORM,
            defining_equations=DefiningEquations.UNIMODULAR,
        )

    @staticmethod
    def from_basis(
        name: str,
        basis: np.ndarray,
        pairing: PairingKind,
        defining_equations: DefiningEquations,
        membership_tol: float = None,
    ) -> GroupDescriptor:
        """
        Constrói um descritor derivando as constantes de estrutura.

        Raises:
            ConfigSchemaError: base degenerada ou forma bilinear singular
            StructureConstantsError: colchete não fecha / Jacobi violada
        """
        basis = np.asarray(basis, dtype=float)
        if basis.ndim != 3 or basis.shape[1] != basis.shape[2]:
            raise ConfigSchemaError('basis', "esperado array (n, d, d)")

        n = basis.shape[0]
        flat = basis.reshape(n, -1).T
        if np.linalg.matrix_rank(flat) < n:
            raise ConfigSchemaError('basis', "matrizes da base linearmente dependentes")

        # 1. Colchetes dos elementos da base, expressos na própria base
        constants = np.zeros((n, n, n))
        closure = 0.0
        for i in range(n):
            for j in range(n):
                commutator = basis[i] @ basis[j] - basis[j] @ basis[i]
                coords, *_ = np.linalg.lstsq(flat, commutator.ravel(), rcond=None)
                closure = max(closure, float(np.max(np.abs(flat @ coords - commutator.ravel()))))
                constants[i, j] = coords
        if closure > 1e-10:
            raise ConfigSchemaError('basis', f"colchete não fecha na base (resíduo {closure:.2e})")

        # 2. Antissimetria e Jacobi
        validate_structure_constants(name, constants, policy('JACOBI_TOL'))

        descriptor = GroupDescriptor(
            name=name,
            basis=basis,
            structure_constants=constants,
            pairing=pairing,
            defining_equations=defining_equations,
            membership_tol=membership_tol or policy('MEMBERSHIP_TOL'),
        )

        # 3. Forma bilinear não degenerada
        if pairing == PairingKind.TRACE_FORM and abs(np.linalg.det(descriptor.gram)) < 1e-12:
            raise ConfigSchemaError('pairing', "forma traço degenerada na base declarada")

        logger.debug("Descritor '%s' construído (dim=%d)", name, n)
        return descriptor

    @staticmethod
    def load_json(source: Union[str, Path, dict]) -> GroupDescriptor:
        """
        Carrega um descritor de um documento JSON.

        Campos: name, basis, pairing ('DUAL'|'TRACE_FORM'),
        defining_equations ('ORTHOGONAL'|'UNIMODULAR'|'NONE'), membership_tol.
        """
        if isinstance(source, dict):
            document = source
        else:
            try:
                document = json.loads(Path(source).read_text(encoding='utf-8'))
            except (OSError, json.JSONDecodeError) as exc:
                raise ConfigSchemaError('group', f"não foi possível ler '{source}': {exc}")

        for key in ('name', 'basis'):
            if key not in document:
                raise ConfigSchemaError(key, "campo obrigatório ausente")

        try:
            pairing = PairingKind(document.get('pairing', 'DUAL').upper())
            equations = DefiningEquations(document.get('defining_equations', 'NONE').upper())
        except ValueError as exc:
            raise ConfigSchemaError('pairing/defining_equations', str(exc))

        return GroupRegistry.from_basis(
            name=document['name'],
            basis=np.array(document['basis'], dtype=float),
            pairing=pairing,
            defining_equations=equations,
            membership_tol=document.get('membership_tol'),
        )
