"""Wave-graph bases of Sp(2n)-invariants in tensor powers of the defining representation."""

__version__ = "0.1.0"
