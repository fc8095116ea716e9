"""skewcheck: coherence-axiom checking and unit enumeration for skew monoidal
structures on finite categories."""

__version__ = "0.1.0"
