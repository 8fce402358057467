""" Parameter tables and executable worked examples. """
