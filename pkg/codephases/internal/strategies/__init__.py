"""Стратегии вычислений, выбираемые по виду или режиму."""
