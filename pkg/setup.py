# 
# Author(s):
# SimonLib contributors
# 
# Copyright (c) 2026 SimonLib contributors.
# 
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# 
# http://www.apache.org/licenses/LICENSE-2.0
# 
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# 

import setuptools
import os

setuptools.setup(
    name='simonlib',
    version='0.1',
    description="A package to simulate Simon's algorithm and benchmark it against classical collision search.",
    author='SimonLib contributors',
    package_dir={'simonlib': os.path.curdir},
    packages=['simonlib'] + ['.'.join(['simonlib', p]) for p in setuptools.find_packages(os.path.curdir, exclude=['examples', 'examples.*'])],
    install_requires=[
        'torch',
        'jsonschema',
        'tqdm',
        'tabulate',
        'pandas',
    ],
    entry_points={
        'console_scripts': [
            'simonlib=simonlib.experiments.cli:main',
        ],
    },
)
