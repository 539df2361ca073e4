#!/usr/bin/env python

from setuptools import setup, find_namespace_packages

setup(
    name="proton-stubborn-cert",
    version="0.1.0",
    description="Decide and certify stubbornness of nonnegative forms on the plane and on plane curves",
    author="Proton AG",
    author_email="opensource@proton.me",
    packages=find_namespace_packages(include=["proton.stubborn*"]),
    include_package_data=True,
    python_requires=">=3.9",
    install_requires=[
        "packaging", "mpmath", "sympy", "numpy", "scipy", "cvxpy", "clarabel", "matplotlib"
    ],
    extras_require={
        "development": ["wheel", "pytest", "pytest-cov", "flake8", "pylint==2.15.5"]
    },
    entry_points={
        "console_scripts": ["stubborn-cert=proton.stubborn.cli.main:main"],
    },
    license="GPLv3",
    platforms="OS Independent",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Developers",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python",
        "Topic :: Scientific/Engineering :: Mathematics",
    ]
)
