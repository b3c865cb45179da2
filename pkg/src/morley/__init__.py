"""
Derivation engine: parameters, displayed formulas, A(alpha, beta) builders,
the step registry and the pipeline that runs it.
"""
