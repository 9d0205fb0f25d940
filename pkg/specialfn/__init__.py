"""
Specialfn App - Funções escalares das fórmulas fechadas de tubos.

Responsável por:
- ℰ, definida por e^{−xℰ(x)} = 1 − xℰ(x) + x²/2
- ℱ(x) = arcsin(√x)/√x (x > 0), arcsinh(√|x|)/√|x| (x < 0)
- Fator de escala m₁ da redução de Moser em dimensão 2
"""

default_app_config = 'specialfn.apps.SpecialfnConfig'
