"""
Configuração do projeto hamtube.
"""
