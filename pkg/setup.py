# -*- coding: utf-8 -*-
__revision__ = "$Id$"
from setuptools import setup, find_packages


_MAJOR               = 0
_MINOR               = 1
_MICRO               = 0
version              = '%d.%d.%d' % (_MAJOR, _MINOR, _MICRO)
release              = '%d.%d' % (_MAJOR, _MINOR)

metainfo = {
    'authors': {
        'main':('LabelRank developers','labelrank@users.noreply.github.com'),
        },
    'version': version,
    'license' : 'BSD',
    'download_url' : ['http://pypi.python.org/pypi/labelrank'],
    'url' : ['http://pypi.python.org/pypi/labelrank'],
    'description':'Deterministic community detection with LabelRank label propagation' ,
    'platforms' : ['Linux', 'Unix', 'MacOsX', 'Windows'],
    'keywords' : ['community detection', 'label propagation', 'modularity', 'graph'],
    'classifiers' : [
          'Development Status :: 3 - Alpha',
          'Intended Audience :: Developers',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: BSD License',
          'Operating System :: OS Independent',
          'Programming Language :: Python :: 3',
          'Topic :: Software Development :: Libraries :: Python Modules',
          'Topic :: Scientific/Engineering :: Information Analysis',
          'Topic :: Scientific/Engineering :: Mathematics']
    }

with open('README.rst') as f:
    readme = f.read()


setup(
    name             = 'labelrank',
    version          = version,
    maintainer       = metainfo['authors']['main'][0],
    maintainer_email = metainfo['authors']['main'][1],
    author           = metainfo['authors']['main'][0],
    author_email     = metainfo['authors']['main'][1],
    long_description = readme,
    keywords         = metainfo['keywords'],
    description = metainfo['description'],
    license          = metainfo['license'],
    platforms        = metainfo['platforms'],
    url              = metainfo['url'],
    download_url     = metainfo['download_url'],
    classifiers      = metainfo['classifiers'],

    zip_safe=False,
    packages = find_packages(exclude=["test", "test.*"]),

    python_requires = ">=3.6",
    install_requires = ['easydev>=0.9.21', 'numpy', 'scipy', 'pandas',
        "colorlog", "pyyaml"],
    tests_require = ["pytest"],

    # This is recursive include of data files
    exclude_package_data = {"": ["__pycache__"]},

    package_data = {
        'labelrank.data' : ['*.txt'],
        },

    entry_points = {
        'console_scripts':[
           'labelrank=labelrank.scripts.labelrank:main'
        ]
    }

    )
