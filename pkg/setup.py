from setuptools import find_packages, setup


VERSION = "0.0.1.dev"

setup(
    name="intensity-engine",
    version=VERSION,
    packages=find_packages("./", exclude=["tests", "tests.*"]),
    include_package_data=True,
    install_requires=["pydantic>=2", "pyyaml", "numpy", "tqdm", "networkx", "pandas"],
    extras_require={"color": ["colorlog"]},
    entry_points={"console_scripts": ["intensity-engine=intensity_engine.cli:main"]},
)
