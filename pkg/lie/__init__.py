"""
Lie App - Núcleo de grupos e álgebras de Lie matriciais.

Responsável por:
- Descritores de grupo (SO(3), SL(2,R) e grupos carregados de JSON)
- Colchetes, ad, ad*, Ad, Ad*, exponencial e dexp trivializado à direita
- Pareamentos e conversões pela forma traço
- Representações lineares e produto diamante

Todos os serviços são funções puras sobre arrays numpy imutáveis.
"""

default_app_config = 'lie.apps.LieConfig'
