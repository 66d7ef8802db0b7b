import os
from setuptools import setup, find_packages


basedir = os.path.dirname(__file__)
with open(os.path.join(basedir, 'penneyante', 'VERSION'), 'r') as _f:
    __version__ = _f.read().strip()


setup(
    name='penneyante',
    version=__version__,
    description="Exact analysis of the Penney-Ante coin game",
    author='penneyante developers',
    license='GNU License',
    packages=find_packages(exclude=['examples', 'examples.*']),
    install_requires=[
        'numpy',
    ],
    package_data={'penneyante': ['VERSION']},
    include_package_data=True,
    entry_points={
        'console_scripts': ['penneyante = penneyante.cli:main'],
    },
    test_suite='penneyante.tests',
    zip_safe=False,
)
