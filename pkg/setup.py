from setuptools import setup
from pathlib import Path
import re

project_name = 'HibiLevelAJM'


def get_long_description():
    this_dir = Path(__file__).parent
    readme_path = this_dir / "README.md"
    if readme_path.is_file():
        long_description = (this_dir / "README.md").read_text()
    else:
        long_description = ('levelness of Hibi rings of finite posets and of the '
                            'coordinate rings of Schubert cycles in Grassmannians')
    return long_description


def get_property(prop, project):
    result = re.search(r'{}\s*=\s*[\'"]([^\'"]*)[\'"]'.format(prop),
                       open(project + '/_version.py').read())
    return result.group(1)


setup(
    name=project_name,
    version=get_property('__version__', project_name),
    packages=['HibiLevelAJM', 'HibiLevelAJM.backend', 'HibiLevelAJM.helpers'],
    url='https://github.com/amcsparron2793-Water/HibiLevelAJM',
    download_url=f'https://github.com/amcsparron2793-Water/HibiLevelAJM/archive/refs/tags/{get_property("__version__", project_name)}.tar.gz',
    keywords=['poset', 'distributive lattice', 'Hibi ring', 'Schubert cycle', 'commutative algebra'],
    license='MIT License',
    author='Amcsparron',
    author_email='amcsparron@albanyny.gov',
    description='levelness checks for Hibi rings and Schubert cycles',
    long_description=get_long_description(),
    long_description_content_type='text/markdown',
    python_requires='>=3.11',
    install_requires=['colorama>=0.4.6', 'networkx>=3.2'],
    extras_require={'test': ['sympy>=1.12']},
    entry_points={'console_scripts': ['hibilevel=HibiLevelAJM.cli:main']},
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
    ]
)
