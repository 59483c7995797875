from setuptools import setup, find_packages

setup(
    name='alphalomax',
    version='0.1.0',
    description='Alpha-Lomax fading channel statistics, performance metrics and fitting',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['examples', 'examples.*']),
    package_data={
        'alphalomax.src.app.config': ['*.yml'],
    },
    include_package_data=True,
    zip_safe=False,
    license='MIT',
    python_requires='>=3.7',
    entry_points={
        'console_scripts':
            [
                'alphalomax = alphalomax.alphalomax_cli:cli'
            ]
    },
    install_requires=[
        'click>=7.0,<9.0',
        'numpy>=1.17,<3.0',
        'pandas>=1.0,<3.0',
        'scipy>=1.6,<2.0',
        'PyYAML>=5.1,<7.0',
    ],
)
