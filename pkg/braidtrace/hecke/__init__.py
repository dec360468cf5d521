from braidtrace.hecke.algebra import HeckeElement, braid_image, tau, sigma

__all__ = ["HeckeElement", "braid_image", "tau", "sigma"]
