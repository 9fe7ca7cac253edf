#!/usr/bin/env python3
"""
Setup script for pairsuite package.
"""

from setuptools import setup, find_packages


# Read README for long description
def read_readme():
    with open("README.md", "r", encoding="utf-8") as f:
        return f.read()


setup(
    name="pairsuite",
    version="1.0.0",
    author="Pairsuite Team",
    author_email="contact@example.com",
    description="Symbol-pair coding theory toolkit: pair metric, ball sizes, GV/Johnson bounds and list decoding of Reed-Solomon codes",
    long_description=read_readme(),
    long_description_content_type="text/markdown",
    url="https://github.com/example/pairsuite",
    packages=find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
    ],
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.21.0",
        "galois>=0.3.3",
        "scipy>=1.7.0",
        "pandas>=1.5.0",
        "jsonschema>=4.0.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "pytest-cov>=4.0.0",
            "black>=22.0.0",
            "flake8>=5.0.0",
            "mypy>=1.0.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "pairsuite=pairsuite.cli:main",
        ],
    },
    include_package_data=True,
    package_data={
        "pairsuite": [
            "schemas/*.json",
        ],
    },
    keywords=[
        "coding-theory", "symbol-pair", "list-decoding", "reed-solomon",
        "finite-fields", "gilbert-varshamov", "johnson-bound",
    ],
    project_urls={
        "Bug Reports": "https://github.com/example/pairsuite/issues",
        "Source": "https://github.com/example/pairsuite",
    },
)
