""" Field arithmetic, matrices, the unitary Fourier number theoretic transform and
its eigenstructure. """
