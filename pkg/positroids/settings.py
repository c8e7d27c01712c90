from django.conf import settings

# Default settings for the positroids app
DEFAULTS = {
    'ENUMERATION_LIMIT': 14,  # largest n for t_family / mat / mpos
    'CENSUS_LIMIT': 9,        # largest n for census without --slow
    'JOBS': 1,                # worker processes for the worklist expansions
    'CHECK_INVARIANTS': True,  # run the internal cross-checks
}


def get_setting(name):
    """
    Get a setting or return the default

    Settings will be read from the Django settings with the 'POSITROID_' prefix.
    For example, POSITROID_ENUMERATION_LIMIT. The library is usable without any
    Django configuration, in which case the defaults apply.
    """
    if not settings.configured:
        return DEFAULTS.get(name)
    setting_name = f'POSITROID_{name}'
    return getattr(settings, setting_name, DEFAULTS.get(name))
