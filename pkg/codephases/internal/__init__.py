"""Внутренние модули библиотеки - не для публичного использования."""
