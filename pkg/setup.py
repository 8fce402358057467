from setuptools import setup


setup(
    name='fourier-codes',
    version='0.1.0',
    packages=['fourier_codes',
              'fourier_codes.analysis',
              'fourier_codes.coding',
              'fourier_codes.core',
              'fourier_codes.test',
              'fourier_codes.test.analysis',
              'fourier_codes.test.coding',
              'fourier_codes.test.core'],

    license='MIT',
    description='Error-correcting codes over GF(p) from the eigenstructure '
                'of the unitary Fourier number theoretic transform.',
    keywords = ['coding theory', 'error-correcting codes', 'finite fields',
                'number theoretic transform', 'eigensequences'],
    classifiers = [
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Mathematics',
        ],
    install_requires=['numpy'],
    package_data={
        'fourier_codes': ['resources/*'],
    },
    scripts=['bin/fourier-codes']
)
