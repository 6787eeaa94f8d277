"""Тесты для codephases."""
