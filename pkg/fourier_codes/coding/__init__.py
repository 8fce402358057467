""" Fourier code construction, decoding and channel simulation. """
