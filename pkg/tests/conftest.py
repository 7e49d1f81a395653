# -*- coding: utf-8 -*-
"""
    conftest.py for cubic_tsp.

    Read more about conftest.py under:
    https://pytest.org/latest/plugins.html
"""

import matplotlib

matplotlib.use('Agg')  # plots are only written to files during the tests
