from setuptools import setup, find_packages

setup(
    name="hesselink",
    version="0.1.0",
    description="HESSELINK: instability strata and multiplicity bounds of projective hypersurfaces",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests"]),
    package_data={"hesselink": ["schema/*.json"]},
    install_requires=[
        "PyYAML>=5.4.1",
        "sympy>=1.9",
        "jsonschema>=4.0",
    ],
    extras_require={"test": ["pytest>=7.0"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.8",
    entry_points={
        "console_scripts": [
            "hesselink=hesselink.hesselink_main:main",
        ],
    },
)
