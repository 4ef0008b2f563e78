import sys
sys.path.append('.')
from setuptools import setup

setup(name='polarization-identities',
      version='1.0',
      description='Exact permanents, determinants, symmetrized permanents and space-matrix determinants through '
                  'polarization-based polynomial identities, with oracle checks and operation-count benchmarks.',
      license='MIT',
      packages=['polarperm', 'polarperm.helpers', 'polarperm.rings'],
      zip_safe=False,
      python_requires='>=3.8',
      install_requires=[
          'wheel',
          'click',
          'colorama'
      ],
      tests_require=[
          'pytest',
          'cli_test_helpers',
          'hypothesis',
          'sympy'
      ],
      entry_points={
          'console_scripts': [
              'polarperm = polarperm.cli:main'
          ]
      }
      )
