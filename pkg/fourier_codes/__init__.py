""" fourier_codes - construction, encoding and decoding of Fourier codes. """
