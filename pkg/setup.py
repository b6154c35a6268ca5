from setuptools import setup, find_packages

setup(
    name="quasi-schur",
    version="0.1.0",
    description="Exact quasisymmetric to Schur conversion, plethysm leading terms and symmetric chain decompositions",
    author="quasi-schur developers",
    author_email="example@example.com",
    url="",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    py_modules=["quasi_schur_app"],
    package_data={"quasi_schur": ["templates/*.j2"]},
    python_requires=">=3.8",
    install_requires=[
        'click',
        'jinja2',
        'numpy',
        'sympy',
        'pytest',
        'hypothesis',
        'coverage',
        'pytest-cov'
    ],
    entry_points={
        "console_scripts": [
            "quasi-schur=quasi_schur_app:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="symmetric functions, quasisymmetric functions, plethysm, tableaux, symmetric chain decomposition",
)
