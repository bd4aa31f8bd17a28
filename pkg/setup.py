from setuptools import setup

setup(
    name='qhermite',
    version='0.1.0',
    description='Bivariate continuous q-Hermite polynomials and quantum symmetric pair Serre relations',
    python_requires='>=3.10',
    packages=['algebra', 'hermite', 'qsp', 'numeric', 'verification', 'routers'],
    py_modules=['cli', 'main', 'services', 'dependencies', 'decorators'],
    install_requires=[
        'sympy>=1.12',
        'mpmath>=1.3',
        'numpy>=1.26',
        'pydantic>=1.10,<2',
        'fastapi>=0.99,<0.100',
        'uvicorn>=0.23',
        'click>=8.1,<8.2',
        'PyYAML>=6.0',
        'python-dotenv>=1.0',
    ],
    extras_require={
        'dev': ['pytest>=7.4', 'httpx>=0.24,<0.28', 'mypy>=1.5'],
    },
    entry_points={
        'console_scripts': ['qhermite=cli:main'],
    },
)
