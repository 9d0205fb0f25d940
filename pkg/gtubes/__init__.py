"""
Gtubes App - G-tubos simples e restritos em T*G.

Responsável por:
- Momentos J_L(g,ν) = Ad*_{g⁻¹}ν e J_R(g,ν) = −ν em T*G trivializado à esquerda
- Tubos simples Θ(g,ν,λ) = (g E, Ad*_E(ν+μ)), E = exp(m₁λ):
  fórmulas fechadas de SO(3) e SL(2,R), caminho genérico via m₁ numérico
- Tubos restritos Φ(g,ν,λ;ε) = Θ(g,ν,λ+ζ) com ζ ∈ n por Newton
"""

default_app_config = 'gtubes.apps.GtubesConfig'
