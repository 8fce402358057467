""" Monte-Carlo simulation of a Fourier code over a symbol-error channel.

Each trial encodes a random message, adds an error of exactly the requested
weight at random positions with random nonzero values, and decodes. Trial i
draws from its own PCG64 generator seeded with [seed, i], so a report depends
only on the seed and not on how the trials are split among workers.
"""

import logging
import multiprocessing
import time

import numpy
from numpy.random import Generator, PCG64, SeedSequence

from fourier_codes.coding import codes
from fourier_codes.coding import decoders
from fourier_codes.core import fntt


logger = logging.getLogger(__name__)

GENERATOR_NAME = "numpy.random.PCG64"


class SimReport:
    """ Counts from a simulation run.

    Attributes:
        trials (int): Number of trials.
        injected_weight (int): Weight of every injected error.
        corrected (int): Trials decoded to the transmitted codeword, including
            those where nothing had to be done.
        miscorrected (int): Trials decoded to a different codeword.
        failures (int): Trials where decoding failed.
        already_codeword (int): Trials whose received word was a codeword
            and equal to the transmitted one.
        generator (str): The bit generator used.
        seed (int): The seed.
        elapsed (float): Wall-clock seconds; ignored by equality.
    """
    def __init__(self, trials, injected_weight, corrected, miscorrected,
                 failures, already_codeword, seed, elapsed=0.0,
                 generator=GENERATOR_NAME):
        self.trials = trials
        self.injected_weight = injected_weight
        self.corrected = corrected
        self.miscorrected = miscorrected
        self.failures = failures
        self.already_codeword = already_codeword
        self.generator = generator
        self.seed = seed
        self.elapsed = elapsed

    def _key(self):
        return (self.trials, self.injected_weight, self.corrected,
                self.miscorrected, self.failures, self.already_codeword,
                self.generator, self.seed)

    def __eq__(self, other):
        if isinstance(other, SimReport):
            return self._key() == other._key()
        return NotImplemented

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "SimReport" + repr(self._key())

    def to_document(self):
        return {
            "trials": self.trials,
            "injected_weight": self.injected_weight,
            "corrected": self.corrected,
            "miscorrected": self.miscorrected,
            "failures": self.failures,
            "already_codeword": self.already_codeword,
            "generator": self.generator,
            "seed": self.seed,
            "elapsed": self.elapsed,
        }

    def get_string_representation(self):
        lines = [
            "trials            " + str(self.trials),
            "injected weight   " + str(self.injected_weight),
            "corrected         " + str(self.corrected),
            "miscorrected      " + str(self.miscorrected),
            "failures          " + str(self.failures),
            "already codeword  " + str(self.already_codeword),
            "generator         " + self.generator + " (seed " +
            str(self.seed) + ")",
            "elapsed           " + "%.3fs" % self.elapsed,
        ]
        return "\n".join(lines)


def trial_generator(seed, index):
    """ The generator of trial ``index``. """
    return Generator(PCG64(SeedSequence([seed, index])))


def run_trial(code, t_inject, seed, index, t_max=2):
    """ Run one trial.

    Returns:
        A tuple consisting of
            - **transmitted** (*Sequence*): The codeword sent,
            - **received** (*Sequence*): The word after the channel,
            - **outcome** (*DecodeOutcome*): The decoding result.
    """
    rng = trial_generator(seed, index)
    p, n = code.ctx.p, code.n

    message = rng.integers(0, p, size=code.k)
    transmitted = codes.encode(code, message.tolist())

    positions = rng.choice(n, size=t_inject, replace=False)
    values = rng.integers(1, p, size=t_inject)
    error = numpy.zeros(n, dtype=numpy.int64)
    error[positions] = values

    received = transmitted + fntt.Sequence(error, code.modulus)
    return transmitted, received, decoders.decode(code, received, t_max)


def _run_trials(arguments):
    code, t_inject, seed, start, stop, t_max = arguments
    corrected, miscorrected, failures, already = 0, 0, 0, 0

    for index in range(start, stop):
        transmitted, received, outcome = run_trial(code, t_inject, seed,
                                                   index, t_max)
        if not outcome.succeeded:
            failures += 1
        elif outcome.codeword == transmitted:
            corrected += 1
            if outcome.status == decoders.ALREADY_CODEWORD:
                already += 1
        else:
            miscorrected += 1

    return corrected, miscorrected, failures, already


def simulate(code, t_inject, trials, seed, workers=1, t_max=2):
    """ Estimate the decoder's behaviour for errors of a fixed weight.

    Args:
        code (FourierCode): The code.
        t_inject (int): The error weight, 0 <= t_inject <= n.
        trials (int): The number of trials, at least 1.
        seed (int): The seed.
        workers (int): Number of processes; 1 runs in this process.
        t_max (int): Passed to the decoder.

    Returns:
        SimReport: The counts. Identical seeds give identical reports for
        any number of workers.
    """
    if not 0 <= t_inject <= code.n:
        raise ValueError("Error weight must lie in [0, " + str(code.n) +
                         "], got " + str(t_inject) + ".")
    if trials <= 0:
        raise ValueError("Number of trials must be positive, got " +
                         str(trials) + ".")
    if workers < 1:
        raise ValueError("Number of workers must be positive.")

    logger.info("Simulating %d trials of weight %d on %r.", trials, t_inject,
                code)
    start_time = time.time()

    workers = min(workers, trials)
    bounds = numpy.linspace(0, trials, workers + 1).astype(int).tolist()
    chunks = [(code, t_inject, seed, bounds[w], bounds[w + 1], t_max)
              for w in range(workers)]

    if workers == 1:
        results = [_run_trials(chunk) for chunk in chunks]
    else:
        logger.info("\tUsing %d worker processes.", workers)
        pool = multiprocessing.Pool(workers)
        try:
            results = pool.map(_run_trials, chunks)
        finally:
            pool.close()
            pool.join()

    corrected, miscorrected, failures, already = \
        [sum(column) for column in zip(*results)]

    report = SimReport(trials, t_inject, corrected, miscorrected, failures,
                       already, seed, time.time() - start_time)

    logger.info("\tCorrected %d, miscorrected %d, failed %d.", corrected,
                miscorrected, failures)

    return report
