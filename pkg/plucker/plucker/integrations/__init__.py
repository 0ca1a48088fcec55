import sys
from typing import Callable
from plucker.integrations.engines import (
    reduce_coefficients,
    registered_reduction_engine,
)


def register_integrations(reduction_engine: Callable = None):
    """
    Registers user-defined replacements of the subroutines Plucker runs.

    Call this function in the relevant Django AppConfig.ready() function:
    ::

        from django.apps import AppConfig

        class MyEnginesApp(AppConfig):
            name = 'My Engines'
            verbose_name = name

            def ready(self):
                from plucker.integrations import register_integrations
                from myapp.engines import selmer_reduction

                register_integrations(reduction_engine=selmer_reduction)

    Modules using an integration look it up through this module at call
    time, ``integrations.registered_reduction_engine(...)``, so a
    registration made after import still takes effect.

    :param reduction_engine: a function with the contract of
        :func:`.reduce_coefficients`
    :raises ValueError: missing argument
    :raises TypeError: argument is not callable
    """
    this = sys.modules[__name__]

    if not reduction_engine:
        raise ValueError("Must pass at least one integration")
    elif not callable(reduction_engine):
        raise TypeError("reduction_engine is not callable")

    for obj, attr in [(reduction_engine, "registered_reduction_engine")]:
        if obj:
            setattr(this, attr, obj)
