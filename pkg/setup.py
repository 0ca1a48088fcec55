from setuptools import setup, find_packages


with open("README.rst") as f:
    long_description = f.read()

setup(
    name="django-plucker",
    version="0.1.0",
    description="Subtractive Euclidean algorithms on integer Plücker vectors",
    long_description=long_description,
    long_description_content_type="text/x-rst",
    license="Apache license 2.0",
    classifiers=[
        "Environment :: Console",
        "Framework :: Django",
        "Framework :: Django :: 3.2",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.8",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords=[
        "plucker",
        "grassmannian",
        "continued fraction",
        "euclidean algorithm",
        "lattice",
    ],
    include_package_data=True,
    package_dir={"": "plucker"},
    packages=find_packages("plucker"),
    install_requires=[
        "attrs==21.4.0",
        "django==3.2.16",
        "django-environ==0.9.0",
        "django-model-utils==4.2.0",
        "djangorestframework==3.12.4",
        "numpy==1.24.4",
        "sympy==1.12",
    ],
    extras_require={"test": ["pytest==7.2.0", "pytest-django==4.5.2"]},
    python_requires=">=3.8",
)
