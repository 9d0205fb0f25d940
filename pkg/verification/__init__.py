"""
Verification App - Verificação numérica dos contratos dos tubos.

Responsável por:
- Pullback de formas simpléticas por diferenças finitas centrais
- Equivariância, mapas momento e linearização no centro
- Relatórios com registros por ponto e resumo por verificação
- Suítes nomeadas (simple, restricted, tube0, general, so3r3) com
  controles negativos
"""

default_app_config = 'verification.apps.VerificationConfig'
