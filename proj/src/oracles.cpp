// oracles.cpp (implementation follows)
