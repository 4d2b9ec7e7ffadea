from setuptools import find_packages, setup

setup(
    name="gamma_lab",
    version="0.0.1",
    packages=find_packages(include=["gamma_lab*"]),
    install_requires=["numpy"],
    entry_points={"console_scripts": ["gamma-lab=gamma_lab.main:main"]},
    python_requires=">=3.10",
)
