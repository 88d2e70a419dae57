import os

from setuptools import setup, find_packages

here = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(here, "README.md")) as f:
    README = f.read()
with open(os.path.join(here, "CHANGES.md")) as f:
    CHANGES = f.read()

test_deps = ["coverage", "pytest", "pytest-cov", "tox", "mock", "hypothesis"]

setup(
    name="crumby",
    version="0.1.0",
    description="""Crumby colorings of subcubic graphs: verifier, exact oracle and
    constructive solvers for trees, subdivisions, outerplanar graphs and K4
    subdivisions.
    """,
    long_description_content_type="text/markdown",
    long_description=README + "\n\n" + CHANGES,
    license="BSD",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=find_packages(),
    zip_safe=False,
    include_package_data=True,
    package_data={"crumby": ["fixtures/*.txt"]},
    test_suite="crumby.tests",
    tests_require=test_deps,
    python_requires=">=3.8",
    install_requires=["networkx>=2.5"],
    setup_requires=["pytest-runner"],
    extras_require={
        "test": test_deps,
        "lint": ["black", "pylint", "rstcheck", "flake8"],
    },
    entry_points={"console_scripts": ["crumby = crumby.ext.cli:main"]},
)
