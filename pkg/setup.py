from setuptools import setup
from gcover.version import __version__

with open("README.md", "r") as fh:
    long_description = fh.read()

setup(
    name="gcover",
    version=__version__,
    description="Covering finite groups by proper subgroups: sigma, c3 and theorem verification",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=[
        "gcover",
        "gcover.analysis",
        "gcover.catalog",
        "gcover.cli",
        "gcover.covers",
        "gcover.groups",
        "gcover.lattice",
        "gcover.plugins",
        "gcover.quotients",
        "gcover.suites",
        "gcover.utils",
    ],
    package_data={
        "gcover.catalog": ["catalog.yaml"],
    },
    install_requires=[
        'attrs',
        'click<8.2',
        'numpy',
        'PyYAML',
        'sympy',
    ],
    extras_require={
        'spelling': ['pylev'],
    },
    test_suite='tests',
    setup_requires=[
        'pytest-runner',
    ],
    tests_require=[
        'hypothesis',
        'pytest',
        'pytest-cov',
    ],
    entry_points='''
        [console_scripts]
        gcover = gcover.cli.main:cli
    ''',
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Development Status :: 3 - Alpha",
    ],
    python_requires='>=3.10',
)
