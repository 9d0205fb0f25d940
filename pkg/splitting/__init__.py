"""
Splitting App - Splittings adaptados e fatias simpléticas.

Responsável por:
- Álgebra de isotropia g_μ e forma Ω^μ(ξ,η) = −⟨μ,[ξ,η]⟩
- Splitting H_μ-invariante g = g_μ ⊕ o ⊕ l ⊕ n, com certificação numérica
- Splittings auxiliares g_μ = h_μ ⊕ p e h_μ = g_z ⊕ s
- Dados da fatia simplética (B, C, α) e o isomorfismo σ: n → l*
- Serialização JSON para reuso entre invocações da CLI
"""

default_app_config = 'splitting.apps.SplittingConfig'
