"""Robust home energy management models

Date:
    10.19.2026

"""

from setuptools import setup, find_packages

__version__ = "0.1.0"


with open("README.md") as f:
    readme = f.read()

with open("LICENSE") as f:
    _license = f.read()

with open("requirements.txt") as f:
    requirements = [line.strip() for line in f if line.strip()]

setup(
    name="hems_robust",
    version=__version__,
    description="Robust multi-objective home energy management with demand response",
    long_description=readme,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests_exec", "tests_exec.*"]),
    py_modules=["exterior_variables"],
    python_requires=">=3.9",
    license=_license,
    install_requires=requirements,
    entry_points={"console_scripts": ["hems=hems_utils.cli:main"]},
)
