// hops.cpp (implementation follows)
