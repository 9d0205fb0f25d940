"""
Hamtube App - Tubos hamiltonianos para ações levantadas ao cotangente.

Responsável por:
- Modelos cotangentes Q = G ×_H S com ponto base φ([e, μ, 0, α]_H)
- Mapa Γ que desloca coordenadas da fatia entre regimes de isotropia
- Tubo T₀ (α = 0) e tubo geral (composição com o deslocamento Γ)
- Tubo explícito de SO(3) em T*R³ e seu mapa para (Q, P)
- Inversão numérica dos tubos e predicado de Bates-Lerman
"""

default_app_config = 'hamtube.apps.HamtubeConfig'
