"""
Subtractive Euclidean algorithms on oriented integer Grassmannians.

The app reduces an integer Plücker vector of G(k,n) to a single coordinate
through GL(n,Z) transformations, recording them as a continued-fraction
trace, and rebuilds integer vectors realizing the vector from that trace.
"""
