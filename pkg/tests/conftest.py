import pytest


def pytest_addoption(parser):
    parser.addoption(
        '--random-scenes',
        action='store',
        type=int,
        default=100,
        help=('Number of random scenes the pairing is checked on against the '
              'exhaustive all-pairs search. Each scene is generated from its '
              'index as seed.'))


@pytest.fixture(scope='class')
def random_scenes(request):
    request.cls.random_scenes = request.config.getoption('--random-scenes')
