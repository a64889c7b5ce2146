"""
Thermotopo - Model Factory

Builds lattice and band models from validated configuration documents.
"""

from fractions import Fraction

import structlog

from thermotopo.core.schemas import BandsConfig, LatticeConfig
from thermotopo.models.bloch import BlochModel, haldane_model, hofstadter_model
from thermotopo.models.lattice import LatticeModelSpec

logger = structlog.get_logger()


def get_lattice_spec(config: LatticeConfig) -> LatticeModelSpec:
    """
    Get a validated Hofstadter-Hubbard model.

    Args:
        config: Model parameter block of a configuration document

    Returns:
        LatticeModelSpec instance
    """
    spec = LatticeModelSpec.from_config(config)
    logger.debug("Creating lattice model", **spec.to_dict())
    return spec


def get_bloch_model(config: BandsConfig) -> BlochModel:
    """
    Get a band model.

    Args:
        config: `bands chern` configuration

    Returns:
        BlochModel instance on an n_k x n_k grid
    """
    logger.debug("Creating band model", kind=config.kind, n_k=config.n_k)

    if config.kind == "hofstadter":
        return hofstadter_model(Fraction(config.alpha_num, config.alpha_den), t=config.t, nk=config.n_k)
    return haldane_model(t1=config.t1, t2=config.t2, phi=config.phi, m=config.m, nk=config.n_k)
