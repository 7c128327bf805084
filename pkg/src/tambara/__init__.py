"""Universal (co)measuring monoids in finite-dimensional braided categories."""

__version__ = "0.1.0"
