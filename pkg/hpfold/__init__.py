"""
hpfold - exact solver and certificate verifier for HP lattice protein folding
"""
__version__ = "1.0.0"
