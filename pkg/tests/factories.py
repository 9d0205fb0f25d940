"""
factories.py — Factories de configurações de modelo para os testes.

As configurações passam sempre por ModelConfig.from_dict, de modo que a
validação do esquema JSON também é exercitada.
"""
import factory

from core.domain import ModelConfig


class ModelConfigFactory(factory.Factory):
    """Documento so3r3 por padrão; trait `circle` gera o modelo genérico de SO(3)."""

    class Meta:
        model = ModelConfig

    name = factory.Sequence(lambda n: f"modelo_{n}")
    kind = 'so3r3'
    group = 'so3'
    q = factory.LazyFunction(lambda: [1.0, 0.0, 0.0])
    p = factory.LazyFunction(lambda: [0.2, 1.0, 0.0])
    radii = factory.LazyFunction(lambda: {'factor': 0.3})
    seed = 0

    class Params:
        circle = factory.Trait(
            kind='generic',
            q=None,
            p=None,
            mu=[0.0, 0.0, 1.0],
            h=[[1.0, 0.0, 0.0]],
            representation=[[[0.0, -1.0], [1.0, 0.0]]],
            alpha=[0.0, 0.0],
        )

    @classmethod
    def _create(cls, model_class, **kwargs):
        document = {key: value for key, value in kwargs.items() if value is not None}
        return model_class.from_dict(document)

    _build = _create
