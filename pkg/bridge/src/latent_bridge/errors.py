class BridgeError(Exception):
    """Base class for bridge failures."""


class ModelError(BridgeError):
    """The requested model (autoencoder or pipeline) is not available."""


class LatentFormatError(BridgeError):
    """A latent file does not match the exchange format contract."""
