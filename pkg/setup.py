import setuptools
import realforms

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name="realforms",
    version=realforms.__version__,
    author=realforms.__author__,
    description="Exact verification of relative real forms of toric "
                "surfaces.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=['tests', 'examples*']),
    license='MIT',
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords='real forms, galois cohomology, toric surfaces',
    python_requires='>=3.8',
    install_requires=[
        'numpy',
        'pandas',
        'sympy',
    ],
    entry_points={
        'console_scripts': ['realforms=realforms.cli:main'],
    },
)
