"""Setup script для обратной совместимости со старыми инструментами сборки codephases."""

from setuptools import setup

setup()
