from setuptools import setup, find_packages

setup(
    name="joinframes",
    version="1.0.0",
    description="joinframes: join-specifications, ideal lattices and frame generation on finite posets",
    long_description="""joinframes computes with join-specifications on finite posets.

Key Features:
- Finite posets with down-closure, joins, meets and Hasse diagrams
- Join-specifications, their ideals and the closure operator onto them
- Five cross-checked characterisations of frame-generating specifications
- The lattices of frame-generating and maximal frame-generating specifications
- Lifts of monotone maps to ideal lattices and the free-frame adjunction
- A seeded, reproducible law verifier with counterexample shrinking
- Command-line interface with table, JSON and DOT output

Use Cases:
- Check worked examples about join-completions by machine
- Search small posets exhaustively for counterexamples
- Export posets and ideal lattices to graphviz""",
    long_description_content_type="text/markdown",
    author="joinframes developers",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    install_requires=[
        "numpy>=1.21.0",
        "pyyaml>=6.0"
    ],
    extras_require={
        "test": [
            "pytest>=6.0.0",
            "pytest-cov>=2.10.0",
            "hypothesis>=6.0.0"
        ],
        "dev": [
            "pytest>=6.0.0",
            "pytest-cov>=2.10.0",
            "hypothesis>=6.0.0",
            "black>=22.0.0",
            "flake8>=4.0.0",
            "isort>=5.0.0"
        ]
    },
    entry_points={
        "console_scripts": [
            "joinframes=joinframes.cli:main"
        ]
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires='>=3.8'
)
